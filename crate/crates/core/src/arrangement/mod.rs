//! Slicewise computation of the ideals and modules that describe
//! equivariant (K-)homology of the homogeneous affine Springer fibers.

pub mod alternant;
pub mod checks;
pub mod domain;
pub mod flag;
pub mod freeness;
pub mod ideals;
pub mod oracle;
pub mod ordinary;

pub use alternant::{alternant_slice, catalan_quotient, AlternantIdeal, CatalanTable};
pub use checks::{
    anti_invariant_inclusion_check, graded_product_check, InclusionReport, ProductRange,
};
pub use domain::{Multipliers, SliceDomain, Status, WindowPolicy, WindowedSlice};
pub use flag::{flag_class_image, flag_rank1_module_slice};
pub use freeness::{freeness_check, freeness_check_module, FreenessReport};
pub use ideals::{ideal_power_slice, jd_slice, Ambient, Family, IdealSpec};
pub use oracle::{oracle_slice_dim, symbolic_power_oracle};
pub use ordinary::{ordinary_homology_quotient_slice, OrdinaryQuotient};
