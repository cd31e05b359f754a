//! The Hodge diamond of `(KT⁴, J_{a,b})` under a chosen metric.
//!
//! Only `h^{1,0}`, `h^{2,0}`, `h^{0,1}` and `h^{1,1}` are independent; Serre
//! duality `h^{p,q} = h^{2-p,2-q}` fills in the rest.

use std::fmt;

use crate::error::Result;
use crate::sectors::{h01, h10, h20, AcsParams, MetricSpec};

/// Where a diamond entry came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Computed,
    SerreDual,
    CitedConstant,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Computed => "computed",
            Provenance::SerreDual => "serre-dual",
            Provenance::CitedConstant => "cited-constant",
        }
    }
}

/// `h[p][q]` for `0 ≤ p, q ≤ 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeDiamond {
    pub h: [[u64; 3]; 3],
    pub provenance: [[Provenance; 3]; 3],
}

impl HodgeDiamond {
    /// A diamond with every entry labelled [`Provenance::Computed`]; mostly
    /// useful for checking arbitrary grids with [`serre_check`].
    pub fn from_grid(h: [[u64; 3]; 3]) -> Self {
        Self { h, provenance: [[Provenance::Computed; 3]; 3] }
    }

    pub fn get(&self, p: usize, q: usize) -> u64 {
        self.h[p][q]
    }
}

impl fmt::Display for HodgeDiamond {
    /// The usual diamond layout, `h^{0,0}` at the bottom.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h = &self.h;
        writeln!(f, "        {}", h[2][2])?;
        writeln!(f, "    {}       {}", h[2][1], h[1][2])?;
        writeln!(f, "{}       {}       {}", h[2][0], h[1][1], h[0][2])?;
        writeln!(f, "    {}       {}", h[1][0], h[0][1])?;
        write!(f, "        {}", h[0][0])
    }
}

/// `h^{1,1} = b⁻ + 1` for an almost Kähler metric on a compact 4-manifold.
pub fn h11_almost_kahler(b_minus: u64) -> u64 {
    b_minus + 1
}

/// `b⁻` of the Kodaira-Thurston manifold.
pub const KT4_B_MINUS: u64 = 2;

/// True iff `h^{p,q} = h^{2-p,2-q}` everywhere.
pub fn serre_check(diamond: &HodgeDiamond) -> bool {
    (0..3).all(|p| (0..3).all(|q| diamond.h[p][q] == diamond.h[2 - p][2 - q]))
}

pub fn hodge_diamond(params: &AcsParams, metric: &MetricSpec) -> Result<HodgeDiamond> {
    use Provenance::*;
    let mut h = [[0u64; 3]; 3];
    let mut provenance = [[SerreDual; 3]; 3];
    let mut set = |p: usize, q: usize, value: u64, label: Provenance| {
        h[p][q] = value;
        provenance[p][q] = label;
        h[2 - p][2 - q] = value;
        if (p, q) != (1, 1) {
            provenance[2 - p][2 - q] = SerreDual;
        }
    };
    // compact and connected
    set(0, 0, 1, CitedConstant);
    set(1, 0, h10(params), CitedConstant);
    set(2, 0, u64::from(h20(params)), Computed);
    set(0, 1, h01(params, metric)?, Computed);
    // every metric in the family is almost Kähler
    set(1, 1, h11_almost_kahler(KT4_B_MINUS), CitedConstant);
    Ok(HodgeDiamond { h, provenance })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{integer, rational};

    fn params(d: crate::Rational) -> AcsParams {
        AcsParams::new(integer(0), d).unwrap()
    }

    #[test]
    fn d_one_standard() {
        let dia = hodge_diamond(&params(integer(1)), &MetricSpec::StandardOrthonormal).unwrap();
        assert_eq!(dia.h, [[1, 4, 1], [1, 3, 1], [1, 4, 1]]);
        assert_eq!(dia.provenance[0][1], Provenance::Computed);
        assert_eq!(dia.provenance[2][1], Provenance::SerreDual);
        assert_eq!(dia.provenance[1][1], Provenance::CitedConstant);
        assert!(serre_check(&dia));
    }

    #[test]
    fn d_one_third() {
        let dia = hodge_diamond(&params(rational(1, 3)), &MetricSpec::StandardOrthonormal).unwrap();
        assert_eq!((dia.get(0, 1), dia.get(2, 0), dia.get(1, 1)), (1, 0, 3));
    }

    #[test]
    fn rho_nine_quarters_changes_only_h01() {
        let std = hodge_diamond(&params(integer(1)), &MetricSpec::StandardOrthonormal).unwrap();
        let rho = hodge_diamond(&params(integer(1)), &MetricSpec::almost_kahler(rational(9, 4)).unwrap()).unwrap();
        assert_eq!(rho.h, [[1, 2, 1], [1, 3, 1], [1, 2, 1]]);
        for p in 0..3 {
            for q in 0..3 {
                if (p, q) != (0, 1) && (p, q) != (2, 1) {
                    assert_eq!(std.h[p][q], rho.h[p][q]);
                }
            }
        }
    }

    #[test]
    fn h11_formula() {
        assert_eq!(h11_almost_kahler(2), 3);
        assert_eq!(h11_almost_kahler(0), 1);
        assert_eq!(h11_almost_kahler(5), 6);
    }

    #[test]
    fn serre_check_grids() {
        assert!(!serre_check(&HodgeDiamond::from_grid([[1, 2, 0], [1, 3, 1], [0, 3, 1]])));
        assert!(serre_check(&HodgeDiamond::from_grid([[1; 3]; 3])));
    }

    #[test]
    fn display_layout() {
        let dia = hodge_diamond(&params(integer(1)), &MetricSpec::StandardOrthonormal).unwrap();
        let text = dia.to_string();
        assert_eq!(text.lines().count(), 5);
        assert!(text.lines().nth(2).unwrap().contains('3'));
    }
}
