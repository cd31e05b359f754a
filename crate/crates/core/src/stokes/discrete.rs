use nalgebra::{Matrix2, Vector2};
use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchwartzClass {
    Schwartz,
    NotSchwartz(Direction),
}

/// Highest moment `|k|^p` checked for boundedness.
const MAX_MOMENT: i32 = 4;
const MIN_RANGE: i64 = 8;
const BLOW_UP: f64 = 1e300;

/// Decides whether the tail `k ↦ |k|⁴ ‖v_k‖` looks rapidly decaying: finite,
/// non-increasing over the last quarter of the window and strictly smaller
/// at the end than at the start of that quarter (or identically zero).
fn decays(norms: &[f64]) -> bool {
    if norms.iter().any(|n| !n.is_finite() || *n > BLOW_UP) {
        return false;
    }
    let moments: Vec<f64> = norms
        .iter()
        .enumerate()
        .map(|(j, n)| ((j + 1) as f64).powi(MAX_MOMENT) * n)
        .collect();
    let len = moments.len();
    let tail = &moments[len - (len / 4).max(4)..];
    let last = *tail.last().expect("window is non-empty");
    if last == 0.0 {
        return true;
    }
    tail.windows(2).all(|w| w[1] <= w[0] * (1.0 + 1e-12)) && last < tail[0]
}

/// Classifies the sequences generated by
/// `(a_k, b_k) = (Ak² + Bk + C)(a_{k-1}, b_{k-1}) / (dk + e)`
/// from `seed = (a₀, b₀)`, scanning `1 ≤ k ≤ k_range` forward and
/// `-k_range ≤ k ≤ -1` backward. The forward direction is judged first.
#[allow(clippy::too_many_arguments)]
pub fn discrete_schwartz_classify(
    a: &Matrix2<Complex64>,
    b: &Matrix2<Complex64>,
    c: &Matrix2<Complex64>,
    d: Complex64,
    e: Complex64,
    seed: Vector2<Complex64>,
    k_range: i64,
) -> Result<SchwartzClass> {
    if k_range < MIN_RANGE {
        return Err(Error::InvalidArgument(format!("k_range must be at least {MIN_RANGE}")));
    }
    let denom = |k: i64| d * k as f64 + e;
    if let Some(k) = (-k_range + 1..=k_range).find(|&k| denom(k).norm() == 0.0) {
        return Err(Error::SingularStep(k));
    }
    let step = |k: i64| {
        let kf = Complex64::new(k as f64, 0.0);
        a * (kf * kf) + b * kf + c
    };

    let mut v = seed;
    let mut forward = Vec::with_capacity(k_range as usize);
    for k in 1..=k_range {
        v = step(k) * v / denom(k);
        forward.push(v.norm());
    }
    if !decays(&forward) {
        return Ok(SchwartzClass::NotSchwartz(Direction::Forward));
    }

    let mut v = seed;
    let mut backward = Vec::with_capacity(k_range as usize);
    for k in (-k_range + 1..=0).rev() {
        let inv = step(k).try_inverse().ok_or(Error::SingularStep(k))?;
        v = inv * v * denom(k);
        backward.push(v.norm());
    }
    if !decays(&backward) {
        return Ok(SchwartzClass::NotSchwartz(Direction::Backward));
    }
    Ok(SchwartzClass::Schwartz)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn scalar(x: f64) -> Matrix2<Complex64> {
        Matrix2::identity() * c(x)
    }

    fn seed() -> Vector2<Complex64> {
        Vector2::new(c(1.0), c(0.5))
    }

    #[test]
    fn geometric_decay_forward_growth_backward() {
        let got = discrete_schwartz_classify(&scalar(0.0), &scalar(0.0), &scalar(0.5), c(0.0), c(1.0), seed(), 64);
        assert_eq!(got, Ok(SchwartzClass::NotSchwartz(Direction::Backward)));
    }

    #[test]
    fn singular_denominator() {
        let got = discrete_schwartz_classify(&scalar(0.0), &scalar(0.0), &scalar(1.0), c(1.0), c(0.0), seed(), 16);
        assert_eq!(got, Err(Error::SingularStep(0)));
    }

    #[test]
    fn quadratic_growth_forward() {
        let got = discrete_schwartz_classify(&scalar(1.0), &scalar(0.0), &scalar(0.0), c(1.0), c(0.5), seed(), 32);
        assert_eq!(got, Ok(SchwartzClass::NotSchwartz(Direction::Forward)));
    }

    #[test]
    fn factorial_decay_forward_growth_backward() {
        // a_k = a_{k-1} / (4(k + 1/2)) forward; backward multiplies by 4(k + 1/2)
        let got = discrete_schwartz_classify(&scalar(0.0), &scalar(0.0), &scalar(0.25), c(1.0), c(0.5), seed(), 64);
        assert_eq!(got, Ok(SchwartzClass::NotSchwartz(Direction::Backward)));
    }

    #[test]
    fn zero_seed_is_schwartz() {
        let zero = Vector2::new(c(0.0), c(0.0));
        let got = discrete_schwartz_classify(&scalar(0.0), &scalar(0.0), &scalar(0.5), c(0.0), c(1.0), zero, 16);
        assert_eq!(got, Ok(SchwartzClass::Schwartz));
    }

    #[test]
    fn singular_matrix_during_backward_scan() {
        // nilpotent C: forward vanishes identically, backward cannot invert
        let nil = Matrix2::new(c(0.0), c(1.0), c(0.0), c(0.0));
        let got = discrete_schwartz_classify(&scalar(0.0), &scalar(0.0), &nil, c(0.0), c(1.0), seed(), 16);
        assert_eq!(got, Err(Error::SingularStep(0)));
    }

    #[test]
    fn short_window_rejected() {
        let got = discrete_schwartz_classify(&scalar(0.0), &scalar(0.0), &scalar(0.5), c(0.0), c(1.0), seed(), 4);
        assert!(matches!(got, Err(Error::InvalidArgument(_))));
    }
}
