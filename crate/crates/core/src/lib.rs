//! Hodge numbers of the almost complex structures `J_{a,b}` on the
//! Kodaira-Thurston manifold.
//!
//! The computation reduces the harmonic-form equations sector by sector:
//! finite-orbit sectors become a lattice-point count on a circle, and
//! infinite-orbit sectors become 2x2 linear ODEs `v' = (Ax + B)v` whose
//! L²-solvability is decided by an algebraic criterion on `B`. With
//! `b = 8πd` and `d` rational, every such criterion is decided exactly in
//! the ring of Laurent polynomials in π over the Gaussian rationals.
//!
//! Module map:
//!
//! * [`exactmath`]: rationals, Gaussian rationals, the π-Laurent ring,
//!   factorization and `r₂`.
//! * [`lattice`]: lattice points on `(l-d)² + m²/ρ = d²`, brute force and
//!   closed form, plus the inverse search for a target count.
//! * [`stokes`]: the L² criterion for `v' = (Ax + B)v`, a shooting oracle,
//!   and the discrete recurrence classifier.
//! * [`sectors`]: the decomposition into sectors and the per-sector
//!   harmonic conditions.
//! * [`hodge`]: assembly of the Hodge diamond.

pub mod error;
pub mod exactmath;
pub mod hodge;
pub mod lattice;
pub mod sectors;
pub mod stokes;

pub use error::{Error, Result};
pub use exactmath::{GaussianRational, Membership, PiElement, Rational};
pub use hodge::{hodge_diamond, HodgeDiamond, Provenance};
pub use lattice::LatticeCount;
pub use sectors::{AcsParams, MetricSpec, SectorId, SectorReport};
pub use stokes::{StokesProblem, StokesVerdict};
