//! K-orbit combinatorics and the Hecke module structure for the type AIII
//! double flag variety `K/B_K x G/P`, `K = GL_p x GL_q`, `P` the `(r, n-r)`
//! parabolic.
//!
//! - [`orbit`]: graphs labelling orbits, enumeration, invariants, rank matrices.
//! - [`poset`]: closure order and Hasse diagram.
//! - [`hecke`]: action of the Hecke algebra generators on the orbit basis,
//!   relation checks, and the `q = 1` Weyl group decomposition.
//! - [`oracle`]: brute force over finite fields that recounts everything
//!   from the Grassmannian.
//!
//! The numeric layer ([`scalar`], [`linalg`], [`poly`]) is generic over the
//! coefficient type; the aliases below fix the types used by the rest of
//! the crate.

pub mod error;
pub mod hecke;
pub mod linalg;
pub mod oracle;
pub mod orbit;
pub mod poly;
pub mod poset;
pub mod scalar;

pub use error::{Error, Result};
pub use orbit::{Graph, Shape, Side};

/// Integer polynomials in the Hecke parameter.
pub type IntPoly = poly::Poly<i64>;
/// Exact rational scalars.
pub type Rational = num_rational::Ratio<i64>;
/// Matrices over the rationals.
pub type RationalMatrix = linalg::Matrix<Rational>;

pub type F3 = scalar::Fp<3>;
pub type F5 = scalar::Fp<5>;
pub type F7 = scalar::Fp<7>;
