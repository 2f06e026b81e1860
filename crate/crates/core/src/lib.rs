//! Exact-arithmetic engine for characters of rank-two affine Lie algebras.
//!
//! The crate computes specialized and unspecialized characters of standard
//! modules over the affine algebras `A1(1)`, `A2(1)` and `A2(2)` from the
//! Weyl group orbit form of the character formula, expands the matching
//! congruence product formulas, and verifies the graded-dimension and
//! q-trace identities that tie the two families together. Everything is
//! exact: integer coefficients, rational exponents, no floating point.
//!
//! Module map:
//! - [`rat`]: exact rational scalars.
//! - [`qseries`]: truncated one-variable series on fractional exponent
//!   lattices, and congruence product expansion.
//! - [`mseries`]: weighted-degree truncated multivariate series.
//! - [`algebra`]: Cartan data, dominant weight enumeration, Weyl orbit
//!   generation, conformal scalars.
//! - [`characters`]: specialized/unspecialized characters, product
//!   formulas, the specialized-character duality check.
//! - [`qtraces`]: graded trace comparisons and the coordinate-change
//!   constants for the square-bracket Virasoro generators.
//! - [`level3`]: the level-3 `A2(1)` vacuum module worked out in full:
//!   string functions, theta-series assembly, graded dimensions.

pub mod algebra;
pub mod characters;
pub mod error;
pub mod level3;
pub mod rat;

pub mod mseries;
pub mod qseries;
pub mod qtraces;

pub use error::{Error, Result};
pub use rat::Rat;
