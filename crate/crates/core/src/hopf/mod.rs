//! Bicrossed-product Hopf algebras over cyclotomic scalars.

pub mod algebra;
pub mod matched;
pub mod semisimple;

pub use algebra::{HopfAlgebra, Sparse};
pub use matched::{a18, MatchedPair};
pub use semisimple::{algebra_type, coalgebra_type};

/// Product of a Nichols-algebra dimension with a Hopf-algebra dimension:
/// the dimension of the corresponding bosonization.
pub fn bosonization_dimension(nichols_dim: u64, hopf_dim: u64) -> u64 {
    nichols_dim * hopf_dim
}
