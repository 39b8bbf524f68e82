//! Generating functions for Hilbert schemes of points on `x^n = y^(dn)`.

pub mod knots;
pub mod msv;
pub mod quotient;

pub use knots::{knot_compare, knot_compare_with, KnotReport, Link};
pub use msv::{msv_assemble, pinned_global, punctual_series, series_ring, CurveSpec};
pub use quotient::{
    conjecture_vs_msv, grdim_subspace_family, quotient_hilbert_slice, ClosedForms,
    ConjectureReport, QuotientModuleSpec, SubspaceFamily,
};
