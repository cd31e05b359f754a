use nalgebra::Matrix2;
use num_traits::{One, Zero};

use super::{StokesCase, StokesProblem};
use crate::error::{Error, Result};
use crate::exactmath::{
    membership_in_pi_negative_integers, Membership, PiElement, Rational,
};

/// Row-major 2x2 matrix over the π-Laurent ring.
pub type PiMatrix = [[PiElement; 2]; 2];

fn mul(x: &PiMatrix, y: &PiMatrix) -> PiMatrix {
    let entry = |i: usize, j: usize| &(&x[i][0] * &y[0][j]) + &(&x[i][1] * &y[1][j]);
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

fn lift(m: &[[Rational; 2]; 2]) -> PiMatrix {
    let e = |r: &Rational| PiElement::rational(r.clone());
    [[e(&m[0][0]), e(&m[0][1])], [e(&m[1][0]), e(&m[1][1])]]
}

fn inverse(m: &[[Rational; 2]; 2]) -> Option<[[Rational; 2]; 2]> {
    let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
    if det.is_zero() {
        return None;
    }
    Some([
        [&m[1][1] / &det, -&m[0][1] / &det],
        [-&m[1][0] / &det, &m[0][0] / &det],
    ])
}

fn is_real_positive(x: &PiElement) -> bool {
    x.terms().all(|(_, c)| c.is_real()) && x.to_complex().re > 0.0
}

/// A system `v' = (Ax + B)v` with entries in the π-Laurent ring and a
/// rational eigenbasis for `A`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactStokesProblem {
    a: PiMatrix,
    b: PiMatrix,
    t: [[Rational; 2]; 2],
    t_inv: [[Rational; 2]; 2],
    lambda1: PiElement,
    lambda2: PiElement,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExactVerdict {
    pub solvable: bool,
    /// `b₂b₃/(λ₁ - λ₂)`.
    pub ratio: PiElement,
    pub b2: PiElement,
    pub b3: PiElement,
    /// Outcome of `π·ratio ∈ π·(ℤ⁻ ∪ {0})`.
    pub membership: Membership,
    pub case: StokesCase,
}

impl ExactStokesProblem {
    /// `eigenvectors` holds the eigenvectors of `λ₁` and `λ₂` as columns.
    /// Fails unless those columns diagonalize `A` exactly, `λ₁ - λ₂` is a
    /// single π-power term, and `λ₁ > 0 > λ₂`.
    pub fn new(
        a: PiMatrix,
        b: PiMatrix,
        eigenvectors: [[Rational; 2]; 2],
        lambda1: PiElement,
        lambda2: PiElement,
    ) -> Result<Self> {
        let t = inverse(&eigenvectors)
            .ok_or_else(|| Error::DegenerateSpectrum("eigenvectors are parallel".into()))?;
        let diag = mul(&mul(&lift(&t), &a), &lift(&eigenvectors));
        let expected = [[lambda1.clone(), PiElement::zero()], [PiElement::zero(), lambda2.clone()]];
        if diag != expected {
            return Err(Error::DegenerateSpectrum("eigenbasis does not diagonalize A".into()));
        }
        if !is_real_positive(&lambda1) || !is_real_positive(&-&lambda2) {
            return Err(Error::DegenerateSpectrum(format!(
                "eigenvalues {lambda1} and {lambda2} do not straddle 0"
            )));
        }
        if (&lambda1 - &lambda2).len() != 1 {
            return Err(Error::DegenerateSpectrum("eigenvalue gap is not a monomial".into()));
        }
        Ok(Self { a, b, t, t_inv: eigenvectors, lambda1, lambda2 })
    }

    pub fn a(&self) -> &PiMatrix {
        &self.a
    }

    pub fn b(&self) -> &PiMatrix {
        &self.b
    }

    pub fn lambdas(&self) -> (&PiElement, &PiElement) {
        (&self.lambda1, &self.lambda2)
    }

    pub fn conjugated_b(&self) -> PiMatrix {
        mul(&mul(&lift(&self.t), &self.b), &lift(&self.t_inv))
    }

    pub fn gap(&self) -> PiElement {
        &self.lambda1 - &self.lambda2
    }

    /// The criterion decided by π-degree bookkeeping; no floating point.
    pub fn criterion(&self) -> ExactVerdict {
        let conj = self.conjugated_b();
        let b2 = conj[0][1].clone();
        let b3 = conj[1][0].clone();
        let ratio = (&b2 * &b3)
            .div_monomial(&self.gap())
            .expect("gap is a nonzero monomial by construction");
        let membership = membership_in_pi_negative_integers(&(&ratio * &PiElement::pi()), &Rational::one());
        let case = if b2.is_zero() {
            StokesCase::UpperTriangular
        } else if b3.is_zero() {
            StokesCase::LowerTriangular
        } else {
            match &membership {
                Membership::Yes(z) => StokesCase::Resonant(
                    i64::try_from(z.clone()).unwrap_or(i64::MIN),
                ),
                Membership::No => StokesCase::Generic,
            }
        };
        ExactVerdict { solvable: case.solvable(), ratio, b2, b3, membership, case }
    }

    /// Floating-point rendering; `A` must be real.
    pub fn to_float(&self) -> Result<StokesProblem> {
        let a = Matrix2::from_fn(|i, j| self.a[i][j].to_complex());
        if a.iter().any(|z| z.im != 0.0) {
            return Err(Error::InvalidArgument("A has non-real entries".into()));
        }
        let b = Matrix2::from_fn(|i, j| self.b[i][j].to_complex());
        StokesProblem::new(a.map(|z| z.re), b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{integer, rational};
    use crate::exactmath::GaussianRational;
    use crate::stokes::stokes_criterion;

    fn r(n: i64) -> PiElement {
        PiElement::rational(integer(n))
    }

    fn identity() -> [[Rational; 2]; 2] {
        [[integer(1), integer(0)], [integer(0), integer(1)]]
    }

    fn diag_a() -> PiMatrix {
        [[r(1), r(0)], [r(0), r(-1)]]
    }

    #[test]
    fn resonant_example() {
        let p = ExactStokesProblem::new(diag_a(), [[r(0), r(1)], [r(-2), r(0)]], identity(), r(1), r(-1))
            .unwrap();
        let v = p.criterion();
        assert!(v.solvable);
        assert_eq!(v.ratio, r(-1));
        assert_eq!(v.case, StokesCase::Resonant(-1));
    }

    #[test]
    fn half_is_not_resonant() {
        let p = ExactStokesProblem::new(diag_a(), [[r(0), r(1)], [r(1), r(0)]], identity(), r(1), r(-1))
            .unwrap();
        let v = p.criterion();
        assert!(!v.solvable);
        assert_eq!(v.ratio, PiElement::rational(rational(1, 2)));
    }

    #[test]
    fn zero_b2_is_solvable() {
        let p = ExactStokesProblem::new(diag_a(), [[r(3), r(0)], [r(7), r(1)]], identity(), r(1), r(-1))
            .unwrap();
        let v = p.criterion();
        assert!(v.solvable);
        assert_eq!(v.membership, Membership::Yes(0.into()));
        assert_eq!(v.case, StokesCase::UpperTriangular);
    }

    #[test]
    fn wrong_eigenbasis_rejected() {
        let swap = [[integer(0), integer(1)], [integer(1), integer(0)]];
        assert!(ExactStokesProblem::new(diag_a(), diag_a(), swap, r(1), r(-1)).is_err());
        assert!(ExactStokesProblem::new(diag_a(), diag_a(), identity(), r(-1), r(1)).is_err());
    }

    #[test]
    fn exact_and_float_criteria_agree() {
        // A = 2π[[0,1],[1,0]], eigenvectors (1,1), (1,-1)
        let two_pi = PiElement::monomial(GaussianRational::real(integer(2)), 1);
        let a = [[PiElement::zero(), two_pi.clone()], [two_pi.clone(), PiElement::zero()]];
        let i = PiElement::constant(GaussianRational::i());
        let b = [[r(1), &i + &two_pi], [r(-1), &i * &r(3)]];
        let evec = [[integer(1), integer(1)], [integer(1), integer(-1)]];
        let p = ExactStokesProblem::new(a, b, evec, two_pi.clone(), -&two_pi).unwrap();
        let exact = p.criterion();
        let float = stokes_criterion(&p.to_float().unwrap());
        assert!((exact.ratio.to_complex() - float.ratio).norm() < 1e-12);
        assert_eq!(exact.solvable, float.solvable);
    }
}
