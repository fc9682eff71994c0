//! `D`-valued Euclidean metric and norm on `D^n`, open `D`-balls and the
//! nested-ball procedure of the Baire category theorem on `D`.

mod baire;

pub use baire::{baire_witness, check_cover, BaireStep, BaireWitness, RectSet};

use crate::error::Result;
use crate::linear::{check_dim, BCVector, DVector};
use crate::order::lt_strict;
use crate::scalar::{root_le_root_sum, Hyperbolic, Real};

/// Squared metric `e1‖x1-y1‖² + e2‖x2-y2‖²`, exact in the rational backend.
pub fn dmetric_sq<T: Real>(x: &DVector<T>, y: &DVector<T>) -> Result<Hyperbolic<T>> {
    check_dim(x.dim(), y.dim())?;
    Ok(x.0
        .iter()
        .zip(&y.0)
        .map(|(a, b)| {
            let d = a - b;
            &d * &d
        })
        .sum())
}

/// `d_D(x, y) = e1‖x1-y1‖ + e2‖x2-y2‖`.
///
/// Roots are exact only for perfect squares in the rational backend; use
/// [`dmetric_sq`] or [`metric_triangle_holds`] for exact order decisions.
pub fn dmetric<T: Real>(x: &DVector<T>, y: &DVector<T>) -> Result<Hyperbolic<T>> {
    Ok(dmetric_sq(x, y)?.map(Real::sqrt))
}

/// `‖x‖²_D`.
pub fn dnorm_sq<T: Real>(x: &DVector<T>) -> Hyperbolic<T> {
    x.0.iter().map(|a| a * a).sum()
}

/// `‖x‖_D = d_D(x, 0)`.
pub fn dnorm<T: Real>(x: &DVector<T>) -> Hyperbolic<T> {
    dnorm_sq(x).map(Real::sqrt)
}

/// `‖x‖_D` on `BC^n`: `e1‖x1‖ + e2‖x2‖` with complex Euclidean norms.
pub fn dnorm_bc<T: Real>(x: &BCVector<T>) -> Hyperbolic<T> {
    x.dnorm_sq().map(Real::sqrt)
}

/// Decides `d(x,z) ≤' d(x,y) + d(y,z)` from squared distances, without roots.
pub fn metric_triangle_holds<T: Real>(
    x: &DVector<T>,
    y: &DVector<T>,
    z: &DVector<T>,
) -> Result<bool> {
    let xz = dmetric_sq(x, z)?;
    let xy = dmetric_sq(x, y)?;
    let yz = dmetric_sq(y, z)?;
    Ok(root_le_root_sum(&xz.e1, &xy.e1, &yz.e1) && root_le_root_sum(&xz.e2, &xy.e2, &yz.e2))
}

/// Open ball `{y : d_D(center, y) <' radius}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DBall<T> {
    pub center: DVector<T>,
    pub radius: Hyperbolic<T>,
}

impl<T: Real> DBall<T> {
    pub fn new(center: DVector<T>, radius: Hyperbolic<T>) -> Result<Self> {
        if !radius.is_positive() {
            return Err(crate::Error::NonPositiveBound);
        }
        Ok(Self { center, radius })
    }

    /// Strict comparison in both components, decided on squares.
    pub fn contains(&self, y: &DVector<T>) -> bool {
        match dmetric_sq(&self.center, y) {
            Ok(d2) => lt_strict(&d2, &(&self.radius * &self.radius)),
            Err(_) => false,
        }
    }
}
