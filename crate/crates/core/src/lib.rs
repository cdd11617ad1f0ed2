//! Exact-arithmetic toolkit for index densities of chiral geometric operators.
//!
//! The crate is organised around three layers:
//!
//! * an exact algebra layer: arbitrary-precision rationals, integer
//!   partitions, a truncated graded characteristic-class ring, multiplicative
//!   sequences and Chern-root expansions ([`rational`], [`partition`],
//!   [`series`], [`graded`], [`roots`]);
//! * the geometric layer: dominant weights and ellipticity classification of
//!   generalized gradients ([`spin`]), the catalogue of chiral operators and
//!   their index integrands ([`catalog`]), cobordism generator manifolds and
//!   exact pairings ([`manifold`]), and the coefficient-matching engine
//!   ([`engine`]);
//! * a desk-scale heat-kernel lab: normal-coordinate Taylor recursions, the
//!   parametrix symbol recursion with exact heat coefficients, and flat-torus
//!   spectral oracles ([`heat`]).
//!
//! Everything outside `heat`'s spectral fits is exact: no floating point is
//! used in any algebraic path.

pub mod catalog;
pub mod engine;
pub mod error;
pub mod graded;
pub mod heat;
pub mod linalg;
pub mod manifold;
pub mod multipoly;
pub mod partition;
pub mod rational;
pub mod roots;
pub mod series;
pub mod spin;

pub use error::Error;
pub use graded::{GradedClass, Monomial};
pub use manifold::{ManifoldDescriptor, TwistData};
pub use partition::{partitions, Partition};
pub use rational::Rational;
pub use spin::DominantWeight;
