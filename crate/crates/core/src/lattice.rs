//! Lattice points on the circle `(l - d)² + m²/ρ = d²`.
//!
//! The finite-orbit sectors contribute one harmonic (0,1)-form for each
//! integer point `(l, m)` on this circle, so `h^{0,1}` is a lattice-point
//! count. With `ρ = 1` and `d = p/q`, `q ≤ 5`, the count has a closed form
//! in the exponents of the primes `≡ 1 (mod 4)` dividing `p`.

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{factorize, factorize_big, is_prime, rational_sqrt, to_i64_pair, Rational};

/// Integer points `(l, m)` on a circle, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeCount {
    pub count: usize,
    pub points: Vec<(i64, i64)>,
}

impl LatticeCount {
    fn from_points(mut points: Vec<(i64, i64)>) -> Self {
        points.sort_unstable();
        Self { count: points.len(), points }
    }

    /// Number of witnesses with `m = 0`.
    pub fn on_axis(&self) -> usize {
        self.points.iter().filter(|&&(_, m)| m == 0).count()
    }
}

/// Integer `l` between 0 and `2d` inclusive (either sign of `d`).
fn l_range(p: i64, q: i64) -> std::ops::RangeInclusive<i64> {
    let two_d = 2 * p;
    if p > 0 {
        0..=two_d.div_euclid(q)
    } else {
        -((-two_d).div_euclid(q))..=0
    }
}

fn push_pair(points: &mut Vec<(i64, i64)>, l: i64, m: i64) {
    if m == 0 {
        points.push((l, 0));
    } else {
        points.push((l, -m));
        points.push((l, m));
    }
}

/// All integer `(l, m)` with `(l - d)² + m² = d²`, found by scanning `l` on
/// the cleared form `(ql - p)² + (qm)² = p²`.
pub fn circle_count_brute(d: &Rational) -> Result<LatticeCount> {
    if d.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let (p, q) = to_i64_pair(d)?;
    let (p128, q128) = (i128::from(p), i128::from(q));
    let radius_sq = p128 * p128;
    let mut points = Vec::new();
    for l in l_range(p, q) {
        let offset = q128 * i128::from(l) - p128;
        let rest = radius_sq - offset * offset;
        if rest < 0 {
            continue;
        }
        let t = rest.sqrt();
        if t * t != rest || t % q128 != 0 {
            continue;
        }
        let m = i64::try_from(t / q128).map_err(|_| Error::Overflow(d.to_string()))?;
        push_pair(&mut points, l, m);
    }
    Ok(LatticeCount::from_points(points))
}

/// Closed-form count for `d = p/q` with `q ≤ 5`: `c_q · ∏(β_j + 1)` where
/// `β_j` are the exponents in `p²` of the primes `≡ 1 (mod 4)` and
/// `c_1 = 4`, `c_2 = 2`, `c_3 = c_4 = c_5 = 1`.
pub fn circle_count_closed(d: &Rational) -> Result<u64> {
    if d.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let q = d.denom();
    let leading = match q.to_u8() {
        Some(1) => 4,
        Some(2) => 2,
        Some(3..=5) => 1,
        _ => return Err(Error::UnsupportedDenominator(q.to_string())),
    };
    let p = d.numer().abs().to_biguint().expect("absolute value is non-negative");
    let p_squared = factorize_big(&p)?.pow(2);
    Ok(leading * p_squared.one_mod_four_divisor_product())
}

/// Integer `(l, m)` with `(m/√ρ)² + (l - d)² = d²`, i.e. `m² = ρ·l·(2d - l)`.
pub fn scaled_circle_count(d: &Rational, rho: &Rational) -> Result<LatticeCount> {
    if d.is_zero() {
        return Err(Error::ZeroParameter);
    }
    if !rho.is_positive() {
        return Err(Error::NonPositiveRho(rho.to_string()));
    }
    let (p, q) = to_i64_pair(d)?;
    let two_d = d * Rational::from_integer(BigInt::from(2));
    let mut points = Vec::new();
    for l in l_range(p, q) {
        let l_r = Rational::from_integer(BigInt::from(l));
        let m_sq = rho * &l_r * (&two_d - &l_r);
        let Some(root) = rational_sqrt(&m_sq) else { continue };
        if !root.is_integer() {
            continue;
        }
        let m = root.to_integer().to_i64().ok_or_else(|| Error::Overflow(root.to_string()))?;
        push_pair(&mut points, l, m);
    }
    Ok(LatticeCount::from_points(points))
}

/// Primes `≡ 1 (mod 4)` in increasing order: 5, 13, 17, 29, ...
fn primes_one_mod_four() -> impl Iterator<Item = u64> {
    (5u64..).step_by(4).filter(|&n| is_prime(n))
}

/// A `d = p/q` with `q ≤ 5` whose closed-form count is `n`.
///
/// `n = 4u`, `2u` or `u` with `u` odd selects `q = 1`, `2` or `3`. Each
/// prime factor `f` of `u` becomes an exponent `γ = (f - 1)/2`, and the
/// exponents are placed on 5, 13, 17, ... largest first, so
/// `∏(2γ + 1) = u`.
pub fn find_d_for_count(n: u64) -> Result<Rational> {
    if n == 0 {
        return Err(Error::ZeroTarget);
    }
    if n % 8 == 0 {
        return Err(Error::UnreachableTarget(n));
    }
    let (u, q) = if n % 2 == 1 {
        (n, 3u32)
    } else if n % 4 == 2 {
        (n / 2, 2)
    } else {
        (n / 4, 1)
    };
    let mut odd_factors: Vec<u64> = factorize(u)
        .factors()
        .iter()
        .flat_map(|&(f, e)| std::iter::repeat_n(f, e as usize))
        .collect();
    odd_factors.sort_unstable_by(|a, b| b.cmp(a));
    let p = odd_factors
        .iter()
        .zip(primes_one_mod_four())
        .fold(BigUint::one(), |acc, (&f, prime)| {
            let gamma = u32::try_from((f - 1) / 2).expect("exponent fits in u32");
            acc * BigUint::from(prime).pow(gamma)
        });
    Ok(Rational::new(BigInt::from(p), BigInt::from(q)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{integer, rational};

    #[test]
    fn brute_examples() {
        let half = circle_count_brute(&rational(1, 2)).unwrap();
        assert_eq!(half.count, 2);
        assert_eq!(half.points, vec![(0, 0), (1, 0)]);

        let one = circle_count_brute(&integer(1)).unwrap();
        assert_eq!(one.points, vec![(0, 0), (1, -1), (1, 1), (2, 0)]);

        let five_quarters = circle_count_brute(&rational(5, 4)).unwrap();
        assert_eq!(five_quarters.points, vec![(0, 0), (2, -1), (2, 1)]);
    }

    #[test]
    fn negative_d_mirrors() {
        for (p, q) in [(1, 1), (5, 4), (5, 1), (7, 2), (13, 3)] {
            let pos = circle_count_brute(&rational(p, q)).unwrap();
            let neg = circle_count_brute(&rational(-p, q)).unwrap();
            let mut mirrored: Vec<_> = pos.points.iter().map(|&(l, m)| (-l, m)).collect();
            mirrored.sort_unstable();
            assert_eq!(neg.points, mirrored);
        }
    }

    #[test]
    fn zero_d_rejected() {
        assert_eq!(circle_count_brute(&integer(0)), Err(Error::ZeroParameter));
        assert_eq!(circle_count_closed(&integer(0)), Err(Error::ZeroParameter));
        assert_eq!(scaled_circle_count(&integer(0), &integer(1)), Err(Error::ZeroParameter));
    }

    #[test]
    fn closed_examples() {
        assert_eq!(circle_count_closed(&integer(5)).unwrap(), 12);
        assert_eq!(circle_count_closed(&rational(1, 2)).unwrap(), 2);
        assert_eq!(circle_count_closed(&rational(5, 3)).unwrap(), 3);
        assert_eq!(circle_count_closed(&rational(5, 4)).unwrap(), 3);
        assert_eq!(
            circle_count_closed(&rational(1, 6)),
            Err(Error::UnsupportedDenominator("6".into()))
        );
    }

    #[test]
    fn scaled_examples() {
        assert_eq!(scaled_circle_count(&integer(1), &integer(4)).unwrap().count, 4);
        assert_eq!(scaled_circle_count(&integer(1), &rational(9, 4)).unwrap().count, 2);
        assert_eq!(scaled_circle_count(&integer(1), &integer(1)).unwrap().count, 4);
        assert_eq!(
            scaled_circle_count(&integer(1), &integer(0)),
            Err(Error::NonPositiveRho("0".into()))
        );
        assert_eq!(
            scaled_circle_count(&integer(1), &integer(4)).unwrap().points,
            vec![(0, 0), (1, -2), (1, 2), (2, 0)]
        );
    }

    #[test]
    fn find_examples() {
        assert_eq!(find_d_for_count(4).unwrap(), integer(1));
        assert_eq!(find_d_for_count(2).unwrap(), rational(1, 2));
        assert_eq!(find_d_for_count(12).unwrap(), integer(5));
        assert_eq!(find_d_for_count(1).unwrap(), rational(1, 3));
        // u = 9 = 3·3 splits over two primes: 5·13
        assert_eq!(find_d_for_count(9).unwrap(), rational(65, 3));
        // u = 15 = 5·3: larger exponent on the smaller prime
        assert_eq!(find_d_for_count(15).unwrap(), rational(25 * 13, 3));
        assert_eq!(find_d_for_count(8), Err(Error::UnreachableTarget(8)));
        assert_eq!(find_d_for_count(0), Err(Error::ZeroTarget));
    }

    #[test]
    fn witnesses_satisfy_the_circle_equation() {
        for (p, q) in [(25, 1), (65, 2), (13, 3), (85, 4), (29, 5)] {
            let d = rational(p, q);
            let lc = circle_count_brute(&d).unwrap();
            assert!(lc.points.contains(&(0, 0)));
            for &(l, m) in &lc.points {
                let l = integer(l);
                let m = integer(m);
                assert_eq!((&l - &d) * (&l - &d) + &m * &m, &d * &d);
            }
        }
    }
}
