//! Sector-by-sector harmonic (0,1)-form conditions.
//!
//! `L²(KT⁴)` splits into finite-orbit sectors `H^{k,l,m,0}` (one Fourier
//! mode each) and infinite-orbit sectors `H^{k,m,n}`, `n ≠ 0`,
//! `0 ≤ m < |n|` (one copy of `L²(ℝ)` each). On a finite sector the
//! harmonic equations are a 2x2 linear system in the two Fourier
//! coefficients; on an infinite sector they become `v' = (Ax + B)v`.
//!
//! The structure parameter enters only through `b = 8πd`. It is never
//! stored as a float: every entry of `B` is built in the π-Laurent ring.

use std::fmt;

use nalgebra::Matrix2;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{rational_sqrt, GaussianRational, PiElement, Rational};
use crate::lattice::{scaled_circle_count, LatticeCount};
use crate::stokes::{ExactStokesProblem, PiMatrix, StokesProblem};

/// Parameters `(a, d)` of `J_{a,b}` with `b = 8πd`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcsParams {
    a: Rational,
    d: Rational,
}

impl AcsParams {
    pub fn new(a: Rational, d: Rational) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::ZeroParameter);
        }
        Ok(Self { a, d })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn d(&self) -> &Rational {
        &self.d
    }

    /// `b = 8πd`.
    pub fn b(&self) -> PiElement {
        PiElement::monomial(GaussianRational::real(&self.d * int(8)), 1)
    }

    /// `1/b = π⁻¹/(8d)`.
    fn b_inv(&self) -> PiElement {
        PiElement::monomial(GaussianRational::real((&self.d * int(8)).recip()), -1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MetricSpec {
    StandardOrthonormal,
    /// `2(φ¹⊗φ̄¹ + ρ φ²⊗φ̄²)`, almost Kähler for every `ρ > 0`.
    AlmostKahlerRho(Rational),
}

impl MetricSpec {
    pub fn almost_kahler(rho: Rational) -> Result<Self> {
        if !rho.is_positive() {
            return Err(Error::NonPositiveRho(rho.to_string()));
        }
        Ok(MetricSpec::AlmostKahlerRho(rho))
    }

    pub fn rho(&self) -> Rational {
        match self {
            MetricSpec::StandardOrthonormal => Rational::one(),
            MetricSpec::AlmostKahlerRho(rho) => rho.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SectorId {
    FiniteOrbit { k: i64, l: i64, m: i64 },
    InfiniteOrbit { k: i64, m: i64, n: i64 },
}

impl fmt::Display for SectorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SectorId::FiniteOrbit { k, l, m } => write!(f, "H[k={k},l={l},m={m},0]"),
            SectorId::InfiniteOrbit { k, m, n } => write!(f, "H[k={k},m={m},n={n}]"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Certificate {
    /// Integer point `(l, m)` on the (scaled) circle with `m ≠ 0` or `l ≠ 0`.
    LatticeWitness { l: i64, m: i64 },
    /// `f` constant, `g = 0`.
    ConstantSolution,
    /// Stokes ratio `b₂b₃/(λ₁ - λ₂)` outside the solvable set.
    StokesRatio(PiElement),
    /// Stokes ratio in the solvable set; unreachable for rational `d`.
    StokesSolution(PiElement),
    Empty(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SectorReport {
    pub sector: SectorId,
    pub dimension: u32,
    pub certificate: Certificate,
}

impl SectorReport {
    pub fn is_empty(&self) -> bool {
        self.dimension == 0
    }
}

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn pi_int(n: i64) -> PiElement {
    PiElement::rational(int(n))
}

fn pi_monomial(r: Rational, exp: i32) -> PiElement {
    PiElement::monomial(GaussianRational::real(r), exp)
}

/// All sectors with `|k| ≤ k_max`, `|l| ≤ l_max`, `|m| ≤ m_max` (finite
/// orbits), then `|k| ≤ k_max`, `0 < |n| ≤ n_max`, `0 ≤ m < |n|` (infinite
/// orbits).
pub fn enumerate_sectors(k_max: u32, l_max: u32, m_max: u32, n_max: u32) -> Vec<SectorId> {
    let span = |b: u32| -i64::from(b)..=i64::from(b);
    let mut out = Vec::new();
    for k in span(k_max) {
        for l in span(l_max) {
            for m in span(m_max) {
                out.push(SectorId::FiniteOrbit { k, l, m });
            }
        }
    }
    for n in span(n_max).filter(|&n| n != 0) {
        for k in span(k_max) {
            for m in 0..n.abs() {
                out.push(SectorId::InfiniteOrbit { k, m, n });
            }
        }
    }
    out
}

/// `A` and `B` of the sector ODE for the metric with parameter `rho`,
/// before any diagonalization:
/// `A = 2πn [[0, 1/ρ], [1, 0]]`,
/// `B = 2π [[k, (m - n(a-i)/b)/ρ], [m - n(a+i)/b, ib/(4π) - k]]`.
fn sector_matrices(params: &AcsParams, rho: &Rational, k: i64, m: i64, n: i64) -> (PiMatrix, PiMatrix) {
    let two_pi = pi_monomial(int(2), 1);
    let i = GaussianRational::i();
    let a_coeff = GaussianRational::real(params.a.clone());
    let n_over_b = &pi_int(n) * &params.b_inv();
    let rho_inv = PiElement::rational(rho.recip());

    let upper = &pi_int(m) - &n_over_b.scale(&(&a_coeff - &i));
    let lower = &pi_int(m) - &n_over_b.scale(&(&a_coeff + &i));
    // ib/(4π) = 2d·i
    let twist = PiElement::constant(GaussianRational::imag(&params.d * int(2)));

    let a = [
        [PiElement::zero(), &(&two_pi * &pi_int(n)) * &rho_inv],
        [&two_pi * &pi_int(n), PiElement::zero()],
    ];
    let b = [
        [&two_pi * &pi_int(k), &(&two_pi * &upper) * &rho_inv],
        [&two_pi * &lower, &two_pi * &(&twist - &pi_int(k))],
    ];
    (a, b)
}

fn require_nonzero_n(n: i64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("infinite-orbit sectors need n != 0".into()));
    }
    Ok(())
}

/// The exact sector ODE for the metric with parameter `rho`; needs `√ρ ∈ ℚ`.
pub fn build_sector_ode_rho(
    params: &AcsParams,
    rho: &Rational,
    k: i64,
    m: i64,
    n: i64,
) -> Result<ExactStokesProblem> {
    require_nonzero_n(n)?;
    if !rho.is_positive() {
        return Err(Error::NonPositiveRho(rho.to_string()));
    }
    let s = rational_sqrt(rho).ok_or_else(|| Error::IrrationalScale(rho.to_string()))?;
    let (a, b) = sector_matrices(params, rho, k, m, n);
    // eigenvalues ±2πn/√ρ with eigenvectors (1, ±√ρ)
    let plus = pi_monomial(int(2 * n) / &s, 1);
    let (lambda1, lambda2, s1) = if n > 0 { (plus.clone(), -&plus, s.clone()) } else { (-&plus, plus, -s.clone()) };
    let eigenvectors = [[Rational::one(), Rational::one()], [s1.clone(), -s1]];
    ExactStokesProblem::new(a, b, eigenvectors, lambda1, lambda2)
}

/// The exact sector ODE for the standard orthonormal metric:
/// `A = 2π [[0, n], [n, 0]]`.
pub fn build_sector_ode_standard(params: &AcsParams, k: i64, m: i64, n: i64) -> Result<ExactStokesProblem> {
    build_sector_ode_rho(params, &Rational::one(), k, m, n)
}

/// Floating-point sector ODE; works for any `ρ > 0`.
pub fn build_sector_ode_rho_float(
    params: &AcsParams,
    rho: &Rational,
    k: i64,
    m: i64,
    n: i64,
) -> Result<StokesProblem> {
    require_nonzero_n(n)?;
    if !rho.is_positive() {
        return Err(Error::NonPositiveRho(rho.to_string()));
    }
    let (a, b) = sector_matrices(params, rho, k, m, n);
    let af = Matrix2::from_fn(|i, j| a[i][j].to_complex().re);
    let bf = Matrix2::from_fn(|i, j| b[i][j].to_complex());
    StokesProblem::new(af, bf)
}

fn infinite_report(sector: SectorId, problem: &ExactStokesProblem) -> SectorReport {
    let verdict = problem.criterion();
    if verdict.solvable {
        SectorReport { sector, dimension: 1, certificate: Certificate::StokesSolution(verdict.ratio) }
    } else {
        SectorReport { sector, dimension: 0, certificate: Certificate::StokesRatio(verdict.ratio) }
    }
}

/// Decides the infinite-orbit sector `(k, m, n)` for the standard metric.
///
/// The ratio is `(π/|n|)(k - ni/b - bi/(8π))(k + ni/b - bi/(8π))`, which for
/// `b = 8πd` with `d` rational keeps a nonzero `π⁻¹` term `|n|/(64d²)`, so
/// it is never an integer and the sector is always empty.
pub fn sector_criterion_standard(params: &AcsParams, k: i64, m: i64, n: i64) -> Result<SectorReport> {
    let problem = build_sector_ode_standard(params, k, m, n)?;
    Ok(infinite_report(SectorId::InfiniteOrbit { k, m, n }, &problem))
}

/// [`sector_criterion_standard`] for the `ρ`-deformed metric.
pub fn sector_criterion_rho(params: &AcsParams, rho: &Rational, k: i64, m: i64, n: i64) -> Result<SectorReport> {
    let problem = build_sector_ode_rho(params, rho, k, m, n)?;
    Ok(infinite_report(SectorId::InfiniteOrbit { k, m, n }, &problem))
}

/// Dimension of harmonic (0,1)-forms in the finite sector `(k, l, m)`.
///
/// The coefficient system `-m f + (k + il - 2di) g = 0`, `ρ(k - il) f + m g = 0`
/// is never identically zero (the `g` coefficient carries `-2di`), so it
/// has a one-dimensional kernel exactly when its determinant vanishes,
/// which happens iff `k = 0` and `m² = ρ·l·(2d - l)`.
pub fn finite_sector_dimension(params: &AcsParams, metric: &MetricSpec, k: i64, l: i64, m: i64) -> SectorReport {
    let sector = SectorId::FiniteOrbit { k, l, m };
    let rho = metric.rho();
    let lr = int(l);
    let on_circle = k == 0 && int(m * m) == &rho * &lr * (&params.d * int(2) - &lr);
    let certificate = match (on_circle, l, m) {
        (true, 0, 0) => Certificate::ConstantSolution,
        (true, l, m) => Certificate::LatticeWitness { l, m },
        (false, _, _) if k != 0 => Certificate::Empty("k != 0".into()),
        (false, _, _) => Certificate::Empty("off the circle".into()),
    };
    SectorReport { sector, dimension: u32::from(on_circle), certificate }
}

/// Bounds for the infinite-orbit sweep that accompanies `h^{0,1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepWindow {
    pub k_max: u32,
    pub n_max: u32,
}

impl Default for SweepWindow {
    fn default() -> Self {
        Self { k_max: 3, n_max: 3 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepSummary {
    pub sectors_checked: usize,
    /// Sectors whose criterion came out solvable.
    pub nonempty: Vec<SectorId>,
}

/// Exact sweep of the infinite-orbit sectors in `window`. Fails with
/// [`Error::IrrationalScale`] when `√ρ ∉ ℚ`.
pub fn infinite_sector_sweep(params: &AcsParams, metric: &MetricSpec, window: SweepWindow) -> Result<SweepSummary> {
    let rho = metric.rho();
    let mut summary = SweepSummary { sectors_checked: 0, nonempty: Vec::new() };
    for sector in enumerate_sectors(window.k_max, 0, 0, window.n_max) {
        let SectorId::InfiniteOrbit { k, m, n } = sector else { continue };
        let report = sector_criterion_rho(params, &rho, k, m, n)?;
        summary.sectors_checked += 1;
        if !report.is_empty() {
            summary.nonempty.push(sector);
        }
    }
    Ok(summary)
}

#[derive(Clone, Debug, PartialEq)]
pub struct H01Report {
    pub count: u64,
    pub witnesses: LatticeCount,
    /// `None` when `√ρ` is irrational and the exact sweep is unavailable.
    pub sweep: Option<SweepSummary>,
}

pub fn h01_report(params: &AcsParams, metric: &MetricSpec, window: SweepWindow) -> Result<H01Report> {
    let witnesses = scaled_circle_count(&params.d, &metric.rho())?;
    let sweep = match infinite_sector_sweep(params, metric, window) {
        Ok(s) => Some(s),
        Err(Error::IrrationalScale(_)) => None,
        Err(e) => return Err(e),
    };
    let extra = sweep.as_ref().map_or(0, |s| s.nonempty.len() as u64);
    Ok(H01Report { count: witnesses.count as u64 + extra, witnesses, sweep })
}

/// `h^{0,1}`: the lattice-point count, plus whatever the default
/// infinite-sector sweep contributes (nothing, for rational parameters).
pub fn h01(params: &AcsParams, metric: &MetricSpec) -> Result<u64> {
    Ok(h01_report(params, metric, SweepWindow::default())?.count)
}

/// `h^{2,0}` is 1 iff `b ∈ 4πℤ`, i.e. iff `2d ∈ ℤ`.
pub fn h20(params: &AcsParams) -> u8 {
    u8::from((&params.d * int(2)).is_integer())
}

/// Fourier modes `(k, l)`, `|k|, |l| ≤ window`, on which `b/4 + π(ik - l)`
/// vanishes; each contributes one harmonic (2,0)-form.
pub fn fourier_h20_scan(params: &AcsParams, window: u32) -> Vec<(i64, i64)> {
    let quarter_b = params.b().scale(&GaussianRational::real(Rational::new(1.into(), 4.into())));
    let w = i64::from(window);
    let mut modes = Vec::new();
    for k in -w..=w {
        for l in -w..=w {
            let mode = PiElement::monomial(GaussianRational::new(int(-l), int(k)), 1);
            if (&quarter_b + &mode).is_zero() {
                modes.push((k, l));
            }
        }
    }
    modes
}

/// `h^{1,0} = 1` for every `J_{a,b}`, taken as a known value.
pub fn h10(_params: &AcsParams) -> u64 {
    1
}
