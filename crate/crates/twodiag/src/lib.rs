//! Two-diagonal operators on polynomials and the orthogonal families they
//! generate.
//!
//! An operator `L` acting on polynomials is *two-diagonal* in the monomial
//! basis when `L x^n = lambda_n x^n + mu_n x^{n-1}`. Given the spectrum pair
//! `(lambda_n, mu_n)` this crate
//!
//! - builds the unique monic eigenpolynomials `P_n` with `L P_n = lambda_n P_n`,
//! - decides whether the `P_n` are orthogonal with respect to a nondegenerate
//!   moment functional (admissibility), two independent ways,
//! - classifies admissible spectra into the complete list of families
//!   (little q-Jacobi and its special/degenerate relatives, Jacobi, Laguerre,
//!   Bessel, trigonometric circle families, little -1 Jacobi),
//! - cross-checks every closed-form recurrence, moment, weight and operator
//!   identity against brute-force oracles in exact rational arithmetic.
//!
//! All core math is generic over the [`scalar::Scalar`] type; use [`Rat`] for
//! exact work and [`Mpf256`] when the data are inherently irrational.

pub mod awalgebra;
pub mod eigenpoly;
pub mod error;
pub mod families;
pub mod linalg;
pub mod orthogonality;
pub mod poly;
pub mod realizations;
pub mod scalar;
pub mod spectrum;
pub mod umbral;

pub use error::{Error, Result, Rule, Violation};
pub use num_traits::{One, Signed, Zero};
pub use poly::{Normalization, PolynomialCoeffs};
pub use scalar::{q_number, q_pochhammer, QContext, Scalar};
pub use spectrum::{AdmissibilityReport, SpectrumPair, StructureConstants};

/// Exact rational scalar (arbitrary precision, no rounding).
pub type Rat = num_rational::BigRational;
/// 256-bit floating scalar, relative tolerance 2^-100.
pub type Mpf256 = scalar::Mpf256;
/// 128-bit floating scalar for cheaper scans.
pub type Mpf128 = scalar::Mpf128;

/// Spectrum pair over exact rationals.
pub type SpectrumRat = SpectrumPair<Rat>;
/// Polynomial over exact rationals.
pub type PolyRat = PolynomialCoeffs<Rat>;
