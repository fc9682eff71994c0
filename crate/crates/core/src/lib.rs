//! Bicomplex (`BC`) and hyperbolic (`D`) scalar algebra, finite-dimensional
//! `D`- and `BC`-modules, hyperbolic-valued convex geometry and constructive
//! separation, open-mapping and boundedness results with checkable
//! certificates.
//!
//! Everything is generic over a [`Real`] backend. Two are provided: exact
//! rationals ([`Rational`]) and `f64`. Type aliases for both are exported
//! below.

pub mod analysis;
pub mod convex;
pub mod error;
pub mod linear;
pub mod lp;
pub mod metric;
pub mod order;
pub mod sample;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{Bicomplex, Conjugation, Hyperbolic, Idem, ModulusKind, Real};

/// Arbitrary-precision rational, the exact backend.
pub type Rational = num_rational::BigRational;

pub type HyperbolicQ = Hyperbolic<Rational>;
pub type HyperbolicF = Hyperbolic<f64>;
pub type BicomplexQ = Bicomplex<Rational>;
pub type BicomplexF = Bicomplex<f64>;
