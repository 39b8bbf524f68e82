//! GKM graphs of the fibers `Sp_{z t^d}`, residue conditions and explicit
//! classes.

pub mod classes;
pub mod forms;
pub mod graph;
pub mod residue;

pub use classes::{
    f_poly, flag_rank1_class, flag_rank1_classes, point_class, residue_antisymmetry_check,
    sl2_classes, specialize_t0, FlagClass,
};
pub use forms::{form_ring, LinearForm, RationalForm, RationalFormTuple};
pub use graph::{build_flag_graph, build_gkm_graph, Edge, FixedPoint, GkmGraph, Weight};
pub use residue::{verify_residue_conditions, ResidueReport, Violation};
