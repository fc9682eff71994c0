//! Real, complex, hyperbolic and bicomplex scalars.

mod bicomplex;
mod hyperbolic;
mod real;

pub(crate) use bicomplex::c_is_zero_tol;
pub use bicomplex::{Bicomplex, ComplexScalar, Conjugation, ModulusKind};
pub use hyperbolic::{Hyperbolic, Idem};
pub use real::{format_rational, inv_pow2, root_le_root_sum, Real, FLOAT_EPS};
