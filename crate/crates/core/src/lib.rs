//! Exact slicewise algebra for GKM homology of unramified affine Springer
//! fibers, symbolic powers of doubled Coxeter arrangements and Hilbert
//! series of the curves `x^n = y^(dn)`.

pub mod arrangement;
pub mod cli;
pub mod curves;
pub mod error;
pub mod exactalg;
pub mod gkm;
pub mod rootdata;

pub use error::{Error, Result};
