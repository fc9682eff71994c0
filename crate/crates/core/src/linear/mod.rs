//! Coordinate modules `D^n` and `BC^n`, their functionals and linear maps.

mod forms;
mod functional;
mod image;
mod map;
mod matrix;
mod spectral;
mod vector;

pub use forms::{hyperbolic_part_via, FunctionalForm};
pub use functional::{
    hyperbolic_part, reconstruct, reconstruct_eval, Axis, BCLinearFunctional, DLinearFunctional,
};
pub use image::{image_convex, image_convex_bc, Interval, IntervalPair};
pub use map::{operator_dnorm, BCLinearMap};
pub use matrix::{rank_of, Field, Matrix};
pub use spectral::{least_norm_preimage, singular_values, spectral_norm};
pub use vector::{BCVector, DVector};

pub(crate) use vector::{check_dim, real_dot};
