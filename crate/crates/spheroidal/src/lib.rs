//! Exact construction of harmonic, monogenic, ambigenic, and contragenic
//! polynomial bases on coaxial spheroids of arbitrary eccentricity.
//!
//! Everything is computed over arbitrary-precision rationals: solid
//! spheroidal harmonics `U_{n,m}[t]`, Garabedian harmonics `V_{n,m}[t]`,
//! basic monogenic polynomials `X_{n,m}[t]` with values in the reduced
//! quaternions, the particular ambigenics `A = X - conj(X)`, and the basic
//! contragenic polynomials `Z_{n,m}[t]`. The conversion coefficients
//! between the bases attached to different spheroids, the L2 inner products
//! over the solid spheroid, and all the orthogonality and decomposition
//! identities relating these families are evaluated exactly, so each claimed
//! identity is checked as a bit-exact fact rather than numerically.
//!
//! The polynomial and quaternion algebra is generic over the coefficient
//! scalar (see [`scalar::Scalar`]); the exact code paths use [`Rational`]
//! coefficients via the [`Poly`] and [`QPoly`] aliases, while plot data and
//! floating cross-checks reuse the same algebra over `f64`.

pub mod convert;
pub mod error;
pub mod exact;
pub mod harmonics;
pub mod integrals;
pub mod legendre;
pub mod monogenic;
pub mod poly;
pub mod rquat;
pub mod scalar;

pub use error::{Error, Result};
pub use exact::{HalfInteger, Rational};
pub use harmonics::{HarmonicIndex, MonogenicIndex, Parity, SpheroidParam};
pub use scalar::Scalar;

/// Trivariate polynomial over exact rationals.
pub type Poly = poly::TriPoly<Rational>;

/// Reduced-quaternion-valued polynomial over exact rationals.
pub type QPoly = rquat::QuatPoly<Rational>;

/// Trivariate polynomial with `f64` coefficients (plot data, cross-checks).
pub type PolyF64 = poly::TriPoly<f64>;
