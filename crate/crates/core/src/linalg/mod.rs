//! Exact integer and rational linear algebra.
//!
//! Everything here works on arbitrary-precision integers. The small
//! [`Lattice`] type keeps an `i64` Hermite basis for fast repeated
//! reductions in three dimensions; it is built through the exact routines.

mod hermite;
mod lattice;
mod matrix;
mod smith;
mod solve;

pub use hermite::hermite_normal_form;
pub use lattice::{lattice_index, unimodular_inverse, IVec3, Lattice, LatticeIndex};
pub use matrix::IntMatrix;
pub use smith::{integer_kernel, smith_normal_form, SmithDecomposition};
pub use solve::{gcd_of_maximal_minors, invariant_factor_product, solve_rational, RationalSolution};

pub(crate) use lattice::to_i64;
pub(crate) use solve::combinations;

pub type Rational = num_rational::BigRational;
