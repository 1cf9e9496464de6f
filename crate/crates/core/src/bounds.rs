//! Exact evaluation of the face, edge and criticality bounds.
//!
//! For a plane graph whose non-triangular faces all have length at least `m`
//! and whose triangular faces satisfy `3 f3 < 2 f`, double counting face
//! boundaries gives
//!
//! ```text
//! f <= f3 + (2e - 3 f3) / m          (raw face bound)
//! f <  6e / (m + 6)                  (after substituting f3 < 2f/3)
//! e <  (m + 6)(n - 2) / m            (after Euler, e = n + f - 2)
//! ```
//!
//! A 4-critical graph has `e >= (5n - 2) / 3`. Whenever that lower bound
//! meets or exceeds the edge bound, a minimal non-3-colorable plane graph
//! with the face-length condition cannot exist. Everything here is exact.

use serde::{Deserialize, Serialize};

use crate::embedding::{GraphCounts, PlaneGraph};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::structure::adjacent_triangles_exist;

/// Smallest admissible minimum non-triangular face length.
pub const MIN_FACE_LENGTH: i64 = 7;

fn check_m(m: i64) -> Result<()> {
    if m < MIN_FACE_LENGTH {
        return Err(Error::InvalidM(m));
    }
    Ok(())
}

fn frac(p: i64, q: i64) -> Rational {
    Rational::new(p, q).expect("nonzero denominator")
}

/// The closed-form bound chain for a minimum non-triangular face length `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundChain {
    pub m: i64,
    /// `6 / (m + 6)`: `f < face_coefficient * e`.
    pub face_coefficient: Rational,
    /// `(m + 6) / m`.
    pub edge_slope: Rational,
    /// `2 (m + 6) / m`: `e < edge_slope * n - edge_offset`.
    pub edge_offset: Rational,
}

impl BoundChain {
    pub fn new(m: i64) -> Result<Self> {
        check_m(m)?;
        Ok(BoundChain {
            m,
            face_coefficient: frac(6, m + 6),
            edge_slope: frac(m + 6, m),
            edge_offset: frac(2 * (m + 6), m),
        })
    }

    pub fn face_upper(&self, e: i64) -> Rational {
        &self.face_coefficient * &Rational::integer(e)
    }

    pub fn edge_upper(&self, n: i64) -> Rational {
        &(&self.edge_slope * &Rational::integer(n)) - &self.edge_offset
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceCountBound {
    /// `f3 + (2e - 3 f3) / m`; `f` is at most this.
    pub f_upper: Rational,
    /// `6e / (m + 6)`; `f` is strictly below this once `3 f3 < 2 f`.
    pub strict_upper_from_thm4: Rational,
}

pub fn face_count_bound(m: i64, e: i64, f3: i64) -> Result<FaceCountBound> {
    check_m(m)?;
    let f_upper = &Rational::integer(f3) + &frac(2 * e - 3 * f3, m);
    Ok(FaceCountBound { f_upper, strict_upper_from_thm4: BoundChain::new(m)?.face_upper(e) })
}

/// `(m + 6)(n - 2) / m`, the strict upper bound on `e`.
pub fn edge_upper_bound(m: i64, n: i64) -> Result<Rational> {
    check_m(m)?;
    Ok(frac((m + 6) * (n - 2), m))
}

/// `(5n - 2) / 3`, the minimum edge count of a 4-critical graph on `n` vertices.
pub fn ky_lower_bound(n: i64) -> Result<Rational> {
    if n < 4 {
        return Err(Error::InvalidN(n));
    }
    Ok(frac(5 * n - 2, 3))
}

/// Where the lower bound `(5n-2)/3` meets or beats the edge bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "n", rename_all = "snake_case")]
pub enum ContradictionRegime {
    /// For every `n >= 4`.
    Always,
    /// For `4 <= n <= last` only.
    UpTo(u64),
    /// For every `n >= first` only.
    From(u64),
    Never,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContradictionReport {
    pub m: i64,
    /// `gap(n) = (5n-2)/3 - (m+6)(n-2)/m = gap_slope * n + gap_offset`;
    /// the bounds contradict at `n` iff `gap(n) >= 0`.
    pub gap_slope: Rational,
    pub gap_offset: Rational,
    pub always_contradicts: bool,
    /// Boundary of the regime: last contradicting `n` for `UpTo`, first for `From`.
    pub threshold_n: Option<u64>,
    pub regime: ContradictionRegime,
}

impl ContradictionReport {
    pub fn gap_at(&self, n: i64) -> Rational {
        &(&self.gap_slope * &Rational::integer(n)) + &self.gap_offset
    }

    pub fn contradicts_at(&self, n: i64) -> bool {
        !self.gap_at(n).is_negative()
    }
}

pub fn contradiction_report(m: i64) -> Result<ContradictionReport> {
    let chain = BoundChain::new(m)?;
    let gap_slope = &frac(5, 3) - &chain.edge_slope;
    let gap_offset = &chain.edge_offset - &frac(2, 3);
    let at4 = &(&gap_slope * &Rational::integer(4)) + &gap_offset;
    let to_u64 = |x: num_bigint::BigInt| u64::try_from(x).expect("threshold fits in u64");

    // zero of the gap line, -offset / slope
    let root = || (-gap_offset.clone()).checked_div(&gap_slope).expect("nonzero slope");
    let regime = if !gap_slope.is_negative() {
        if !at4.is_negative() {
            ContradictionRegime::Always
        } else if gap_slope.is_zero() {
            ContradictionRegime::Never
        } else {
            ContradictionRegime::From(to_u64(root().ceil()))
        }
    } else if at4.is_negative() {
        ContradictionRegime::Never
    } else {
        ContradictionRegime::UpTo(to_u64(root().floor()))
    };
    let threshold_n = match regime {
        ContradictionRegime::UpTo(n) | ContradictionRegime::From(n) => Some(n),
        _ => None,
    };
    Ok(ContradictionReport {
        m,
        gap_slope,
        gap_offset,
        always_contradicts: regime == ContradictionRegime::Always,
        threshold_n,
        regime,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem4Hypotheses {
    pub connected: bool,
    pub min_degree_at_least_3: bool,
    pub no_adjacent_triangles: bool,
}

impl Theorem4Hypotheses {
    pub fn all(&self) -> bool {
        self.connected && self.min_degree_at_least_3 && self.no_adjacent_triangles
    }
}

/// Triangle-density verdict for one plane graph. Hypothesis failures are
/// reported, not raised.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem4Verdict {
    pub hypotheses: Theorem4Hypotheses,
    pub hypotheses_hold: bool,
    pub counts: GraphCounts,
    /// `3 f3 < 2 f`.
    pub conclusion_holds: bool,
    /// `2f/3 - f3`.
    pub slack: Rational,
}

pub fn theorem4_verdict(g: &PlaneGraph) -> Theorem4Verdict {
    let counts = g.counts();
    let hypotheses = Theorem4Hypotheses {
        connected: g.graph().is_connected(),
        min_degree_at_least_3: g.min_degree() >= 3,
        no_adjacent_triangles: adjacent_triangles_exist(g.graph()).is_none(),
    };
    let slack = &frac(2 * counts.f as i64, 3) - &Rational::from(counts.f3);
    Theorem4Verdict {
        hypotheses,
        hypotheses_hold: hypotheses.all(),
        counts,
        conclusion_holds: 3 * counts.f3 < 2 * counts.f,
        slack,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::fixtures::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn chain_constants() {
        let c12 = BoundChain::new(12).unwrap();
        assert_eq!(c12.face_coefficient, r("1/3"));
        assert_eq!((c12.edge_slope.clone(), c12.edge_offset.clone()), (r("3/2"), r("3")));
        let c11 = BoundChain::new(11).unwrap();
        assert_eq!(c11.face_coefficient, r("6/17"));
        assert_eq!((c11.edge_slope, c11.edge_offset), (r("17/11"), r("34/11")));
        let c9 = BoundChain::new(9).unwrap();
        assert_eq!(c9.face_coefficient, r("2/5"));
        assert_eq!((c9.edge_slope, c9.edge_offset), (r("5/3"), r("10/3")));
        assert_eq!(BoundChain::new(6), Err(Error::InvalidM(6)));
    }

    #[test]
    fn face_bounds() {
        let b = face_count_bound(12, 30, 0).unwrap();
        assert_eq!(b.strict_upper_from_thm4, r("10"));
        assert_eq!(b.f_upper, r("5"));
        let b = face_count_bound(9, 9, 2).unwrap();
        // 2 + (18 - 6)/9
        assert_eq!(b.f_upper, r("10/3"));
        assert_eq!(b.strict_upper_from_thm4, r("18/5"));
        assert!(face_count_bound(4, 1, 1).is_err());
    }

    #[test]
    fn edge_bounds() {
        assert_eq!(edge_upper_bound(12, 30).unwrap(), r("42"));
        assert_eq!(edge_upper_bound(11, 13).unwrap(), r("17"));
        assert_eq!(edge_upper_bound(9, 10).unwrap(), r("40/3"));
        assert!(edge_upper_bound(3, 10).is_err());
    }

    #[test]
    fn ky_values() {
        assert_eq!(ky_lower_bound(4).unwrap(), r("6"));
        assert_eq!(ky_lower_bound(6).unwrap(), r("28/3"));
        assert_eq!(ky_lower_bound(10).unwrap(), r("16"));
        assert_eq!(ky_lower_bound(11).unwrap(), r("53/3"));
        assert_eq!(ky_lower_bound(3), Err(Error::InvalidN(3)));
    }

    #[test]
    fn contradiction_regimes() {
        let c9 = contradiction_report(9).unwrap();
        assert!(c9.always_contradicts);
        assert_eq!(c9.gap_slope, Rational::zero());
        assert_eq!(c9.gap_offset, r("8/3"));
        assert!(contradiction_report(12).unwrap().always_contradicts);
        let c8 = contradiction_report(8).unwrap();
        assert!(!c8.always_contradicts);
        assert_eq!(c8.regime, ContradictionRegime::UpTo(34));
        assert!(c8.contradicts_at(34));
        assert!(!c8.contradicts_at(35));
        assert_eq!(contradiction_report(7).unwrap().regime, ContradictionRegime::UpTo(16));
    }

    #[test]
    fn verdicts() {
        let cube = PlaneGraph::new(cube_rotation()).unwrap();
        let v = theorem4_verdict(&cube);
        assert!(v.hypotheses_hold && v.conclusion_holds);
        assert_eq!((v.counts.f3, v.counts.f), (0, 6));
        assert_eq!(v.slack, r("4"));

        let k4 = theorem4_verdict(&PlaneGraph::new(k4_rotation()).unwrap());
        assert!(!k4.hypotheses_hold);
        assert!(!k4.hypotheses.no_adjacent_triangles);
        assert_eq!((k4.counts.f3, k4.counts.f), (4, 4));
        assert!(!k4.conclusion_holds);

        let prism = theorem4_verdict(&PlaneGraph::new(prism_rotation()).unwrap());
        assert!(prism.hypotheses_hold && prism.conclusion_holds);
        assert_eq!(prism.slack, r("4/3"));
    }
}
