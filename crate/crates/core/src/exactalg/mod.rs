//! Exact arithmetic substrate: rationals, (Laurent) polynomials, slice
//! linear algebra and rational functions.

pub mod gcd;
pub mod poly;
pub mod ring;
pub mod scalar;
pub mod series;
pub mod slice;

pub use poly::MultiPoly;
pub use ring::{slice_monomials, Bidegree, Convention, Monomial, Ring, Role, Var, Window};
pub use scalar::ExactScalar;
pub use series::RationalSeries;
pub use slice::{GradedSlice, MonomialBasis, SparseVec};
