//! L²-solvability of `v' = (Ax + B)v` on the real line.
//!
//! Let `T A T⁻¹ = diag(λ₁, λ₂)` with `λ₁ > 0 > λ₂` and write
//! `T B T⁻¹ = [[b₁, b₂], [b₃, b₄]]`. The system has a nonzero L² solution
//! iff `b₂b₃/(λ₁ - λ₂)` is a negative integer, or `b₂ = 0`. When `b₃ = 0`
//! but `b₂ ≠ 0` the ratio is also 0, yet the only candidate decays on one
//! side and grows on the other, so that case is unsolvable. [`StokesCase`]
//! keeps the three readings of "ratio 0" apart.
//!
//! [`stokes_criterion`] applies the algebraic rule in floating point,
//! [`ExactStokesProblem`] applies it in the π-Laurent ring, and
//! [`numeric_l2_test`] checks it independently by shooting from both ends.

mod discrete;
mod exact;
pub mod sample;

pub use discrete::{discrete_schwartz_classify, Direction, SchwartzClass};
pub use exact::{ExactStokesProblem, ExactVerdict, PiMatrix};

use nalgebra::{Matrix2, Vector2};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Distance from a non-positive integer accepted as resonance in float mode.
pub const RESONANCE_TOL: f64 = 1e-9;
/// Distances below this (but above [`RESONANCE_TOL`]) are flagged borderline.
pub const BORDERLINE_TOL: f64 = 1e-6;
/// Shooting window is chosen so the contaminating mode is damped by `e^-60`.
pub const SUPPRESSION_EXPONENT: f64 = 60.0;
pub const DEFAULT_STEPS: usize = 200_000;
pub const DEFAULT_ANGLE_TOL: f64 = 1e-6;

/// Diagonalization data `T A T⁻¹ = diag(λ₁, λ₂)`.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenSplit {
    pub t: Matrix2<f64>,
    /// Columns are the eigenvectors for `λ₁`, `λ₂`, each scaled so its
    /// largest-magnitude entry is 1.
    pub t_inv: Matrix2<f64>,
    pub lambda1: f64,
    pub lambda2: f64,
}

impl EigenSplit {
    pub fn gap(&self) -> f64 {
        self.lambda1 - self.lambda2
    }
}

fn eigenvector(a: &Matrix2<f64>, lambda: f64) -> Vector2<f64> {
    let c1 = Vector2::new(a[(0, 1)], lambda - a[(0, 0)]);
    let c2 = Vector2::new(lambda - a[(1, 1)], a[(1, 0)]);
    let v = if c1.norm() >= c2.norm() { c1 } else { c2 };
    let pivot = if v[0].abs() >= v[1].abs() { v[0] } else { v[1] };
    v / pivot
}

/// Diagonalizes a real 2x2 matrix with eigenvalues `λ₁ > 0 > λ₂`.
pub fn eigensplit(a: &Matrix2<f64>) -> Result<EigenSplit> {
    if !a.iter().all(|x| x.is_finite()) {
        return Err(Error::DegenerateSpectrum("non-finite entries".into()));
    }
    let tr = a.trace();
    let det = a.determinant();
    let disc = tr * tr - 4.0 * det;
    let scale = a.abs().max().max(f64::MIN_POSITIVE);
    if disc <= (1e-12 * scale).powi(2) {
        return Err(Error::DegenerateSpectrum(format!(
            "eigenvalues not real and distinct (discriminant {disc:e})"
        )));
    }
    let root = disc.sqrt();
    let lambda1 = 0.5 * (tr + root);
    let lambda2 = 0.5 * (tr - root);
    if !(lambda1 > 0.0 && lambda2 < 0.0) {
        return Err(Error::DegenerateSpectrum(format!(
            "eigenvalues {lambda1} and {lambda2} do not straddle 0"
        )));
    }
    let v1 = eigenvector(a, lambda1);
    let v2 = eigenvector(a, lambda2);
    let t_inv = Matrix2::from_columns(&[v1, v2]);
    let t = t_inv
        .try_inverse()
        .ok_or_else(|| Error::DegenerateSpectrum("eigenvectors are parallel".into()))?;
    Ok(EigenSplit { t, t_inv, lambda1, lambda2 })
}

/// A system `v' = (Ax + B)v` with real `A` and complex `B`.
#[derive(Clone, Debug, PartialEq)]
pub struct StokesProblem {
    a: Matrix2<f64>,
    b: Matrix2<Complex64>,
    split: EigenSplit,
}

impl StokesProblem {
    pub fn new(a: Matrix2<f64>, b: Matrix2<Complex64>) -> Result<Self> {
        let split = eigensplit(&a)?;
        Ok(Self { a, b, split })
    }

    pub fn a(&self) -> &Matrix2<f64> {
        &self.a
    }

    pub fn b(&self) -> &Matrix2<Complex64> {
        &self.b
    }

    pub fn split(&self) -> &EigenSplit {
        &self.split
    }

    /// `T B T⁻¹`.
    pub fn conjugated_b(&self) -> Matrix2<Complex64> {
        let t = self.split.t.map(|x| Complex64::new(x, 0.0));
        let t_inv = self.split.t_inv.map(|x| Complex64::new(x, 0.0));
        t * self.b * t_inv
    }

    /// `(s²A, sB)`, the system seen under `x ↦ x/s`.
    pub fn rescaled(&self, s: f64) -> Result<Self> {
        Self::new(self.a * (s * s), self.b * Complex64::new(s, 0.0))
    }

    fn rhs(&self, x: f64, v: &Vector2<Complex64>) -> Vector2<Complex64> {
        let m = self.a.map(|e| Complex64::new(e * x, 0.0)) + self.b;
        m * v
    }
}

/// How the ratio `b₂b₃/(λ₁ - λ₂)` was classified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StokesCase {
    /// Ratio equals the negative integer `z`.
    Resonant(i64),
    /// `b₂ = 0`: the `λ₂` line decouples and decays at both ends.
    UpperTriangular,
    /// `b₃ = 0`, `b₂ ≠ 0`: ratio is 0 but no L² solution exists.
    LowerTriangular,
    /// Anything else, including positive integers.
    Generic,
}

impl StokesCase {
    pub fn solvable(self) -> bool {
        matches!(self, StokesCase::Resonant(_) | StokesCase::UpperTriangular)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StokesVerdict {
    pub solvable: bool,
    pub ratio: Complex64,
    pub case: StokesCase,
    /// Ratio lies within [`BORDERLINE_TOL`] of a non-positive integer without
    /// being within [`RESONANCE_TOL`] of it.
    pub borderline: bool,
    /// Normalized determinant of the two shot lines at `x = 0`; only set by
    /// [`numeric_l2_test`].
    pub angle: Option<f64>,
    /// `max_x log(‖v(x)‖/‖v(0)‖) - λ₂x²/4` along the shot solutions; only set
    /// by [`numeric_l2_test`].
    pub decay_margin: Option<f64>,
}

fn classify(problem: &StokesProblem) -> (Complex64, StokesCase, bool) {
    let conj = problem.conjugated_b();
    let (b2, b3) = (conj[(0, 1)], conj[(1, 0)]);
    let ratio = b2 * b3 / problem.split.gap();
    let scale = conj.iter().map(|c| c.norm()).fold(1.0, f64::max);
    if b2.norm() <= RESONANCE_TOL * scale {
        return (ratio, StokesCase::UpperTriangular, false);
    }
    if b3.norm() <= RESONANCE_TOL * scale {
        return (ratio, StokesCase::LowerTriangular, false);
    }
    let nearest = ratio.re.round().min(0.0);
    let dist = (ratio - nearest).norm();
    let borderline = dist > RESONANCE_TOL && dist < BORDERLINE_TOL;
    if dist <= RESONANCE_TOL && nearest < 0.0 {
        (ratio, StokesCase::Resonant(nearest as i64), borderline)
    } else {
        (ratio, StokesCase::Generic, borderline)
    }
}

/// Algebraic L² criterion in floating point.
pub fn stokes_criterion(problem: &StokesProblem) -> StokesVerdict {
    let (ratio, case, borderline) = classify(problem);
    StokesVerdict {
        solvable: case.solvable(),
        ratio,
        case,
        borderline,
        angle: None,
        decay_margin: None,
    }
}

/// Half-width of the shooting window: the smallest `X` with
/// `(λ₁ - λ₂)X²/2 - |b₁ - b₄|X ≥ 60`.
pub fn default_window(problem: &StokesProblem) -> f64 {
    let gap = problem.split.gap();
    let conj = problem.conjugated_b();
    let drift = (conj[(0, 0)] - conj[(1, 1)]).norm();
    (drift + (drift * drift + 2.0 * gap * SUPPRESSION_EXPONENT).sqrt()) / gap
}

/// One renormalized RK4 run from `from` to `to`.
#[derive(Clone, Debug)]
pub struct Shot {
    /// Unit vector at `to`.
    pub end: Vector2<Complex64>,
    /// `(x, log ‖v(x)‖ - log ‖v(to)‖)` sampled along the run.
    pub profile: Vec<(f64, f64)>,
}

/// Integrates from `from` to `to` starting on the `λ₂` eigenvector, dividing
/// by the norm after every step. `samples` profile points are kept.
pub fn shoot(problem: &StokesProblem, from: f64, to: f64, steps: usize, samples: usize) -> Result<Shot> {
    let steps = steps.max(1);
    let h = (to - from) / steps as f64;
    let start = problem.split.t_inv.column(1).map(|x| Complex64::new(x, 0.0));
    let mut v = start.unscale(start.norm());
    let mut x = from;
    let mut log_norm = 0.0;
    let stride = (steps / samples.max(1)).max(1);
    let mut raw = Vec::with_capacity(samples + 2);
    raw.push((x, log_norm));
    for i in 0..steps {
        let k1 = problem.rhs(x, &v);
        let k2 = problem.rhs(x + 0.5 * h, &(v + k1.scale(0.5 * h)));
        let k3 = problem.rhs(x + 0.5 * h, &(v + k2.scale(0.5 * h)));
        let k4 = problem.rhs(x + h, &(v + k3.scale(h)));
        v += (k1 + k2.scale(2.0) + k3.scale(2.0) + k4).scale(h / 6.0);
        x = from + (i + 1) as f64 * h;
        let n = v.norm();
        if !n.is_finite() || n == 0.0 {
            return Err(Error::NonFinite(x));
        }
        v = v.unscale(n);
        log_norm += n.ln();
        if (i + 1) % stride == 0 || i + 1 == steps {
            raw.push((x, log_norm));
        }
    }
    let profile = raw.into_iter().map(|(x, l)| (x, l - log_norm)).collect();
    Ok(Shot { end: v, profile })
}

/// Independent numerical check of L²-solvability.
///
/// Integrating inward from `±x_max` picks out the line of solutions that
/// decays at that end; the system is solvable iff the two lines agree at
/// `x = 0`, measured by `|det[v₊ v₋]|` of the unit vectors.
pub fn numeric_l2_test(problem: &StokesProblem, x_max: f64, steps: usize, tol: f64) -> Result<StokesVerdict> {
    if !(x_max > 0.0 && tol > 0.0) {
        return Err(Error::InvalidArgument("x_max and tol must be positive".into()));
    }
    let right = shoot(problem, x_max, 0.0, steps, 200)?;
    let left = shoot(problem, -x_max, 0.0, steps, 200)?;
    let angle = (right.end[0] * left.end[1] - right.end[1] * left.end[0]).norm();
    let quarter = problem.split.lambda2 / 4.0;
    let decay_margin = right
        .profile
        .iter()
        .chain(&left.profile)
        .map(|&(x, l)| l - quarter * x * x)
        .fold(f64::NEG_INFINITY, f64::max);
    let (ratio, case, borderline) = classify(problem);
    Ok(StokesVerdict {
        solvable: angle < tol,
        ratio,
        case,
        borderline,
        angle: Some(angle),
        decay_margin: Some(decay_margin),
    })
}

/// [`numeric_l2_test`] with the default window, step count and tolerance.
pub fn numeric_l2_test_default(problem: &StokesProblem) -> Result<StokesVerdict> {
    numeric_l2_test(problem, default_window(problem), DEFAULT_STEPS, DEFAULT_ANGLE_TOL)
}
