//! Construction of test systems with a prescribed ratio `b₂b₃/(λ₁ - λ₂)`.

use nalgebra::Matrix2;
use num_complex::Complex64;
use rand::Rng;

use super::StokesProblem;
use crate::error::Result;

/// Builds `A = S⁻¹ diag(λ₁, λ₂) S`, `B = S⁻¹ [[b₁, b₂], [b₃, b₄]] S` with
/// `b₃` chosen so that `b₂b₃ = ratio·(λ₁ - λ₂)`. When `b₂ = 0` the supplied
/// `b3_if_upper` is used instead and the ratio is 0.
#[allow(clippy::too_many_arguments)]
pub fn synthesize(
    lambda1: f64,
    lambda2: f64,
    b1: Complex64,
    b2: Complex64,
    b4: Complex64,
    ratio: Complex64,
    b3_if_upper: Complex64,
    basis: Matrix2<f64>,
) -> Result<StokesProblem> {
    let b3 = if b2 == Complex64::new(0.0, 0.0) {
        b3_if_upper
    } else {
        ratio * (lambda1 - lambda2) / b2
    };
    let s = basis;
    let s_inv = basis.try_inverse().ok_or_else(|| {
        crate::error::Error::InvalidArgument("basis change must be invertible".into())
    })?;
    let a = s_inv * Matrix2::new(lambda1, 0.0, 0.0, lambda2) * s;
    let sc = s.map(|x| Complex64::new(x, 0.0));
    let sc_inv = s_inv.map(|x| Complex64::new(x, 0.0));
    let b = sc_inv * Matrix2::new(b1, b2, b3, b4) * sc;
    StokesProblem::new(a, b)
}

fn complex_in<R: Rng + ?Sized>(rng: &mut R, radius: f64) -> Complex64 {
    Complex64::new(rng.gen_range(-radius..=radius), rng.gen_range(-radius..=radius))
}

/// A random well-conditioned system with the given ratio. A ratio of exactly
/// 0 is realized with `b₂ = 0`.
pub fn random_problem<R: Rng + ?Sized>(rng: &mut R, ratio: f64) -> Result<StokesProblem> {
    let lambda1 = rng.gen_range(0.5..=2.0);
    let lambda2 = -rng.gen_range(0.5..=2.0);
    let b1 = complex_in(rng, 0.5);
    let b4 = complex_in(rng, 0.5);
    let magnitude = ((ratio.abs() * (lambda1 - lambda2)).sqrt()).max(0.5) * rng.gen_range(0.5..=1.5);
    let phase = rng.gen_range(0.0..std::f64::consts::TAU);
    let b2 = if ratio == 0.0 { Complex64::new(0.0, 0.0) } else { Complex64::from_polar(magnitude, phase) };
    let b3_if_upper = complex_in(rng, 1.0);
    let basis = Matrix2::new(1.0, rng.gen_range(-0.5..=0.5), rng.gen_range(-0.5..=0.5), 1.0);
    synthesize(lambda1, lambda2, b1, b2, b4, Complex64::new(ratio, 0.0), b3_if_upper, basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stokes::stokes_criterion;
    use rand::SeedableRng;

    #[test]
    fn synthesized_ratio_is_recovered() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for &ratio in &[-3.0, -1.0, 0.0, 0.5, 2.5] {
            for _ in 0..10 {
                let p = random_problem(&mut rng, ratio).unwrap();
                let v = stokes_criterion(&p);
                assert!((v.ratio - Complex64::new(ratio, 0.0)).norm() < 1e-9, "{ratio} vs {}", v.ratio);
            }
        }
    }
}
