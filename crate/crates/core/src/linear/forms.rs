use num_complex::Complex;

use super::functional::{BCLinearFunctional, DLinearFunctional};
use super::vector::{BCVector, DVector};
use crate::scalar::{Bicomplex, Hyperbolic, Real};

/// The six ways of writing a `BC`-linear functional `h` as a combination of
/// simpler functionals, each giving its own route to the hyperbolic part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FunctionalForm {
    /// `h = g1 + i g2 + j g3 + k g4` with real-valued `g`'s.
    RealQuad,
    /// `h = f1 + j f2` with `C(i)`-valued `f`'s.
    CjPair,
    /// `h = e1 f1 + e2 f2` with `C(i)`-valued `f`'s.
    IdempotentPair,
    /// `h = f1 + k f2` with `C(i)`-valued `f`'s.
    CkPair,
    /// `h = f1 + i f2` with `D`-valued `f`'s.
    DPairI,
    /// `h = f1 + j f2` with `D`-valued `f`'s.
    DPairJ,
}

impl FunctionalForm {
    pub const ALL: [FunctionalForm; 6] = [
        FunctionalForm::RealQuad,
        FunctionalForm::CjPair,
        FunctionalForm::IdempotentPair,
        FunctionalForm::CkPair,
        FunctionalForm::DPairI,
        FunctionalForm::DPairJ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FunctionalForm::RealQuad => "real-quad",
            FunctionalForm::CjPair => "Cj-pair",
            FunctionalForm::IdempotentPair => "idempotent-pair",
            FunctionalForm::CkPair => "Ck-pair",
            FunctionalForm::DPairI => "D-pair-i",
            FunctionalForm::DPairJ => "D-pair-j",
        }
    }
}

fn re<T: Real>(z: &Complex<T>) -> T {
    z.re.clone()
}

fn im<T: Real>(z: &Complex<T>) -> T {
    z.im.clone()
}

/// Value of `h_D` at a single point, derived from the value `h(x)` through
/// the chosen decomposition of `h`.
fn hd_value<T: Real>(hx: &Bicomplex<T>, form: FunctionalForm) -> Hyperbolic<T> {
    match form {
        FunctionalForm::RealQuad => {
            let [g1, _, _, g4] = hx.real_basis();
            Hyperbolic::from_standard(g1, g4)
        }
        FunctionalForm::CjPair => {
            let (f1, f2) = hx.w();
            Hyperbolic::from_standard(re(&f1), im(&f2))
        }
        FunctionalForm::IdempotentPair => Hyperbolic::new(re(&hx.z1), re(&hx.z2)),
        FunctionalForm::CkPair => {
            let two = T::from_i64(2);
            let f1 = (hx.z1.clone() + hx.z2.clone()) / two.clone();
            let f2 = (hx.z1.clone() - hx.z2.clone()) / two;
            Hyperbolic::from_standard(re(&f1), re(&f2))
        }
        FunctionalForm::DPairI => {
            // h = f1 + i f2, f1 = e1 Re z1 + e2 Re z2
            Hyperbolic::new(re(&hx.z1), re(&hx.z2))
        }
        FunctionalForm::DPairJ => {
            // j = -i e1 + i e2, so h = f1 + j f2 needs f2 = -e1 Im z1 + e2 Im z2
            let f1 = Hyperbolic::new(re(&hx.z1), re(&hx.z2));
            let f2 = Hyperbolic::new(-im(&hx.z1), im(&hx.z2));
            debug_assert!((Bicomplex::from_hyperbolic(&f1)
                + Bicomplex::unit_j() * Bicomplex::from_hyperbolic(&f2))
            .approx_eq(hx));
            f1
        }
    }
}

/// Hyperbolic part of `h` derived through one of the six decompositions.
///
/// Every route evaluates `h` on the basis of the realification `D^{2n}`
/// (the vectors `e_m` and `i·e_m`) and extracts the `D`-valued part its own
/// way. All six must agree with [`super::hyperbolic_part`].
pub fn hyperbolic_part_via<T: Real>(
    h: &BCLinearFunctional<T>,
    form: FunctionalForm,
) -> DLinearFunctional<T> {
    let n = h.dim();
    let i = Bicomplex::unit_i();
    let mut coeffs = Vec::with_capacity(2 * n);
    for scale in [None, Some(&i)] {
        for m in 0..n {
            let mut e = BCVector::unit(n, m);
            if let Some(s) = scale {
                e = e.scale(s);
            }
            let hx = h.eval(&e).expect("basis vector has matching dimension");
            coeffs.push(hd_value(&hx, form));
        }
    }
    DLinearFunctional::new(DVector(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::hyperbolic_part;
    use crate::Rational;

    #[test]
    fn all_forms_agree_on_fixed_functional() {
        let q = |a: i64| Rational::from_i64(a);
        let h = BCLinearFunctional::new(BCVector(vec![
            Bicomplex::from_real_basis([q(1), q(-2), q(3), q(5)]),
            Bicomplex::from_real_basis([q(0), q(7), q(-1), q(2)]),
        ]));
        let reference = hyperbolic_part(&h);
        for form in FunctionalForm::ALL {
            assert_eq!(hyperbolic_part_via(&h, form), reference, "{}", form.name());
        }
    }
}
