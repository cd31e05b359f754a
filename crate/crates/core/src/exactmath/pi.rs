use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use super::{GaussianRational, Rational};

/// A Laurent polynomial `Σ c_j π^j` with Gaussian-rational coefficients.
///
/// π is treated as a formal transcendental: two elements are equal exactly
/// when their coefficient maps are equal. Zero coefficients are never
/// stored, so derived `PartialEq` is ring equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PiElement {
    terms: BTreeMap<i32, GaussianRational>,
}

impl PiElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    /// `c · π^exp`.
    pub fn monomial(coeff: GaussianRational, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    pub fn constant(coeff: GaussianRational) -> Self {
        Self::monomial(coeff, 0)
    }

    pub fn rational(r: Rational) -> Self {
        Self::constant(GaussianRational::real(r))
    }

    pub fn pi() -> Self {
        Self::monomial(GaussianRational::one(), 1)
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, GaussianRational)>,
    {
        let mut out = Self::zero();
        for (exp, c) in terms {
            out.add_term(exp, &c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &GaussianRational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i32) -> GaussianRational {
        self.terms.get(&exp).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, exp: i32, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(GaussianRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn scale(&self, k: &GaussianRational) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, c)| (e, c * k)))
    }

    /// Multiplies by `π^shift`.
    pub fn shift(&self, shift: i32) -> Self {
        Self { terms: self.terms.iter().map(|(&e, c)| (e + shift, c.clone())).collect() }
    }

    /// Exact division by a single nonzero term; `None` when `divisor` is not
    /// a monomial.
    pub fn div_monomial(&self, divisor: &PiElement) -> Option<Self> {
        let mut it = divisor.terms.iter();
        let (&exp, coeff) = it.next()?;
        if it.next().is_some() {
            return None;
        }
        let inv = coeff.inv()?;
        Some(self.scale(&inv).shift(-exp))
    }

    pub fn conj(&self) -> Self {
        Self { terms: self.terms.iter().map(|(&e, c)| (e, c.conj())).collect() }
    }

    /// Floating-point rendering, only for display and numerics.
    pub fn to_complex(&self) -> Complex64 {
        self.terms
            .iter()
            .map(|(&e, c)| c.to_complex() * std::f64::consts::PI.powi(e))
            .sum()
    }
}

impl From<GaussianRational> for PiElement {
    fn from(c: GaussianRational) -> Self {
        Self::constant(c)
    }
}

impl From<Rational> for PiElement {
    fn from(r: Rational) -> Self {
        Self::rational(r)
    }
}

impl Add for &PiElement {
    type Output = PiElement;
    fn add(self, rhs: Self) -> PiElement {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl Add for PiElement {
    type Output = PiElement;
    fn add(self, rhs: Self) -> PiElement {
        &self + &rhs
    }
}

impl Sub for &PiElement {
    type Output = PiElement;
    fn sub(self, rhs: Self) -> PiElement {
        self + &(-rhs)
    }
}

impl Sub for PiElement {
    type Output = PiElement;
    fn sub(self, rhs: Self) -> PiElement {
        &self - &rhs
    }
}

impl Mul for &PiElement {
    type Output = PiElement;
    fn mul(self, rhs: Self) -> PiElement {
        let mut out = PiElement::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.add_term(ea + eb, &(ca * cb));
            }
        }
        out
    }
}

impl Mul for PiElement {
    type Output = PiElement;
    fn mul(self, rhs: Self) -> PiElement {
        &self * &rhs
    }
}

impl Neg for &PiElement {
    type Output = PiElement;
    fn neg(self) -> PiElement {
        PiElement { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Neg for PiElement {
    type Output = PiElement;
    fn neg(self) -> PiElement {
        -&self
    }
}

impl fmt::Display for PiElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest power of π first
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}·π")?,
                _ => write!(f, "{c}·π^{e}")?,
            }
        }
        Ok(())
    }
}

/// Result of testing `x ∈ scale·π·(ℤ⁻ ∪ {0})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// `x = scale·π·z` with `z ≤ 0`. `z = 0` is reported as such so callers
    /// can apply the strict `ℤ⁻` reading.
    Yes(BigInt),
    No,
}

impl Membership {
    pub fn is_yes(&self) -> bool {
        matches!(self, Membership::Yes(_))
    }

    pub fn is_strictly_negative(&self) -> bool {
        matches!(self, Membership::Yes(z) if z.is_negative())
    }
}

/// Decides `x ∈ scale·π·(ℤ⁻ ∪ {0})` by π-degree bookkeeping alone.
pub fn membership_in_pi_negative_integers(x: &PiElement, scale: &Rational) -> Membership {
    assert!(scale.is_positive(), "scale must be positive");
    if x.is_zero() {
        return Membership::Yes(BigInt::zero());
    }
    if x.len() != 1 {
        return Membership::No;
    }
    let c = x.coeff(1);
    if c.is_zero() || !c.is_real() {
        return Membership::No;
    }
    let z = &c.re / scale;
    if z.is_integer() && !z.is_positive() {
        Membership::Yes(z.to_integer())
    } else {
        Membership::No
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{integer, rational};
    use proptest::prelude::*;

    fn re(n: i64) -> GaussianRational {
        GaussianRational::real(integer(n))
    }

    #[test]
    fn pi_times_pi() {
        assert_eq!(&PiElement::pi() * &PiElement::pi(), PiElement::monomial(re(1), 2));
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let x = PiElement::from_terms([(0, re(2)), (-1, re(1))]);
        let y = PiElement::constant(re(-2));
        let sum = &x + &y;
        assert_eq!(sum, PiElement::monomial(re(1), -1));
        assert_eq!(sum.len(), 1);
    }

    #[test]
    fn conjugate_pair_product() {
        // (k - d i)(k + d i) with k = d = 1
        let i = GaussianRational::i();
        let a = PiElement::constant(&re(1) - &i);
        let b = PiElement::constant(&re(1) + &i);
        assert_eq!(&a * &b, PiElement::constant(re(2)));
    }

    #[test]
    fn division_by_monomial() {
        let x = PiElement::from_terms([(2, re(4)), (0, re(2))]);
        let q = x.div_monomial(&PiElement::monomial(re(2), 1)).unwrap();
        assert_eq!(q, PiElement::from_terms([(1, re(2)), (-1, re(1))]));
        assert!(x.div_monomial(&x).is_none());
        assert!(x.div_monomial(&PiElement::zero()).is_none());
    }

    #[test]
    fn membership_examples() {
        let four = integer(4);
        let x = PiElement::monomial(re(-8), 1);
        assert_eq!(membership_in_pi_negative_integers(&x, &four), Membership::Yes(BigInt::from(-2)));
        let y = &PiElement::monomial(re(4), 1) + &PiElement::one();
        assert_eq!(membership_in_pi_negative_integers(&y, &four), Membership::No);
        assert_eq!(
            membership_in_pi_negative_integers(&PiElement::zero(), &four),
            Membership::Yes(BigInt::zero())
        );
        // positive multiples are outside
        let z = PiElement::monomial(re(8), 1);
        assert_eq!(membership_in_pi_negative_integers(&z, &four), Membership::No);
        // imaginary coefficient
        let w = PiElement::monomial(GaussianRational::imag(integer(-4)), 1);
        assert_eq!(membership_in_pi_negative_integers(&w, &four), Membership::No);
    }

    #[test]
    fn membership_rejects_surviving_inverse_pi_term() {
        // π·(k² - d²)/n + n/(64 d² π) at d = 1, k = 0, n = 1
        let ratio = PiElement::from_terms([(1, re(-1)), (-1, GaussianRational::real(rational(1, 64)))]);
        let x = &ratio * &PiElement::pi();
        assert_eq!(membership_in_pi_negative_integers(&x, &integer(1)), Membership::No);
    }

    #[test]
    fn display_orders_by_degree() {
        let x = PiElement::from_terms([(-1, re(3)), (1, re(2))]);
        assert_eq!(x.to_string(), "2·π + 3·π^-1");
        assert_eq!(PiElement::zero().to_string(), "0");
    }

    fn arb_coeff() -> impl Strategy<Value = GaussianRational> {
        (-9i64..9, 1i64..5, -9i64..9, 1i64..5)
            .prop_map(|(a, b, c, d)| GaussianRational::new(rational(a, b), rational(c, d)))
    }

    fn arb_pi() -> impl Strategy<Value = PiElement> {
        prop::collection::vec((-3i32..4, arb_coeff()), 0..4).prop_map(PiElement::from_terms)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ring_axioms(a in arb_pi(), b in arb_pi(), c in arb_pi()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
            prop_assert!(a.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn membership_of_scaled_rationals(num in -200i64..200, den in 1i64..12) {
            let x = rational(num, den);
            let elem = PiElement::monomial(GaussianRational::real(x.clone()), 1);
            let got = membership_in_pi_negative_integers(&elem, &integer(4));
            let quarter = &x / integer(4);
            let expect = !x.is_positive() && quarter.is_integer();
            prop_assert_eq!(got.is_yes(), expect);
            if let Membership::Yes(z) = got {
                prop_assert_eq!(Rational::from_integer(z), quarter);
            }
        }
    }
}
