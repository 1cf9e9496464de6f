//! Per-graph verdict records, serialized one JSON object per line.

use serde::{Deserialize, Serialize};

use crate::bounds::{edge_upper_bound, face_count_bound, ky_lower_bound, theorem4_verdict, Theorem4Hypotheses};
use crate::coloring::{
    exact_k_color, greedy_color_from_peel, is_4_critical, peel_order, verify_coloring, Coloring, ExactOutcome,
};
use crate::embedding::{GraphCounts, PlaneGraph};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::write_graph6;
use crate::rational::Rational;
use crate::structure::forbidden_cycle_scan;

/// Cycle lengths reported in every structure summary.
pub const SCAN_WINDOW: (usize, usize) = (4, 11);

/// Largest order for which `analyze` certifies 4-criticality of infeasible graphs.
pub const CRITICALITY_CHECK_MAX_N: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ColoringOutcome {
    Peeled,
    Exact,
    Infeasible,
    Budget,
    /// Only from the peel strategy: the graph has a 3-core.
    PeelStuck,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    Peel,
    Exact,
    #[default]
    Auto,
}

/// Colors `g` with the chosen strategy. Every returned coloring has been
/// checked with [`verify_coloring`].
pub fn color_with_strategy(
    g: &Graph,
    k: usize,
    strategy: Strategy,
    budget: u64,
) -> (ColoringOutcome, Option<Coloring>) {
    let peel = || {
        let trace = peel_order(g);
        greedy_color_from_peel(g, &trace).ok().filter(|c| c.colors_used() <= k).map(|c| Coloring { k, ..c })
    };
    let exact = || match exact_k_color(g, k, budget) {
        Ok(ExactOutcome::Colored(c)) => (ColoringOutcome::Exact, Some(c)),
        Ok(ExactOutcome::Infeasible) => (ColoringOutcome::Infeasible, None),
        Err(_) => (ColoringOutcome::Budget, None),
    };
    let (outcome, coloring) = match strategy {
        Strategy::Peel => match peel() {
            Some(c) => (ColoringOutcome::Peeled, Some(c)),
            None => (ColoringOutcome::PeelStuck, None),
        },
        Strategy::Exact => exact(),
        Strategy::Auto => match peel() {
            Some(c) => (ColoringOutcome::Peeled, Some(c)),
            None => exact(),
        },
    };
    if let Some(c) = &coloring {
        assert!(verify_coloring(g, c).unwrap_or(false), "emitted coloring must be proper");
    }
    (outcome, coloring)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureSummary {
    pub min_degree: usize,
    pub connected: bool,
    pub has_adjacent_triangles: bool,
    pub triangle_count: usize,
    /// Lengths in `SCAN_WINDOW` that occur as simple cycles.
    pub cycle_lengths: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem4Summary {
    pub hypotheses: Theorem4Hypotheses,
    pub hypotheses_hold: bool,
    pub conclusion_holds: bool,
    pub slack: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub name: String,
    pub holds: bool,
    pub slack: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub graph_id: String,
    pub graph6: String,
    pub rotation: Vec<Vec<usize>>,
    pub counts: GraphCounts,
    pub structure: StructureSummary,
    pub theorem4: Theorem4Summary,
    pub coloring_outcome: ColoringOutcome,
    pub coloring: Option<Vec<usize>>,
    pub bounds_checked: Vec<BoundCheck>,
}

fn r(x: usize) -> Rational {
    Rational::from(x)
}

/// The inequalities that apply to `g`, each with its slack.
pub fn bound_checks(g: &PlaneGraph, outcome: ColoringOutcome, budget: u64) -> Vec<BoundCheck> {
    let c = g.counts();
    let mut checks = vec![
        BoundCheck {
            name: "euler".into(),
            holds: c.n + c.f == c.e + 2,
            slack: &(&r(c.n) + &r(c.f)) - &(&r(c.e) + &r(2)),
        },
        BoundCheck {
            name: "triangle_density".into(),
            holds: 3 * c.f3 < 2 * c.f,
            slack: &(&r(2 * c.f) * &Rational::new(1, 3).unwrap()) - &r(c.f3),
        },
    ];
    if let Some(m) = g.min_non_triangular_face_length().filter(|&m| m >= 7) {
        let m = m as i64;
        let faces = face_count_bound(m, c.e as i64, c.f3 as i64).expect("m >= 7");
        checks.push(BoundCheck {
            name: format!("face_count_raw_m{m}"),
            holds: r(c.f) <= faces.f_upper,
            slack: &faces.f_upper - &r(c.f),
        });
        checks.push(BoundCheck {
            name: format!("face_count_m{m}"),
            holds: r(c.f) < faces.strict_upper_from_thm4,
            slack: &faces.strict_upper_from_thm4 - &r(c.f),
        });
        let edges = edge_upper_bound(m, c.n as i64).expect("m >= 7");
        checks.push(BoundCheck { name: format!("edge_count_m{m}"), holds: r(c.e) < edges, slack: &edges - &r(c.e) });
    }
    if outcome == ColoringOutcome::Infeasible && (4..=CRITICALITY_CHECK_MAX_N).contains(&c.n) {
        if let Ok(cert) = is_4_critical(g.graph(), budget) {
            if cert.critical {
                let lower = ky_lower_bound(c.n as i64).expect("n >= 4");
                checks.push(BoundCheck { name: "ky_lower".into(), holds: r(c.e) >= lower, slack: &r(c.e) - &lower });
            }
        }
    }
    checks
}

pub fn analyze(graph_id: impl Into<String>, g: &PlaneGraph, budget: u64) -> VerdictRecord {
    let scan = forbidden_cycle_scan(g.graph(), SCAN_WINDOW.0, SCAN_WINDOW.1);
    let verdict = theorem4_verdict(g);
    let (outcome, coloring) = color_with_strategy(g.graph(), 3, Strategy::Auto, budget);
    VerdictRecord {
        graph_id: graph_id.into(),
        graph6: write_graph6(g.graph()),
        rotation: g.rotation().rotations().to_vec(),
        counts: verdict.counts,
        structure: StructureSummary {
            min_degree: scan.min_degree,
            connected: scan.connected,
            has_adjacent_triangles: scan.has_adjacent_triangles,
            triangle_count: scan.triangle_count,
            cycle_lengths: scan.forbidden_lengths(),
        },
        theorem4: Theorem4Summary {
            hypotheses: verdict.hypotheses,
            hypotheses_hold: verdict.hypotheses_hold,
            conclusion_holds: verdict.conclusion_holds,
            slack: verdict.slack,
        },
        coloring_outcome: outcome,
        coloring: coloring.map(|c| c.assignment),
        bounds_checked: bound_checks(g, outcome, budget),
    }
}

/// A record that could not be analyzed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub graph_id: String,
    pub error: String,
}

impl ErrorRecord {
    pub fn new(graph_id: impl Into<String>, err: &Error) -> Self {
        ErrorRecord { graph_id: graph_id.into(), error: err.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorRecord {
    pub graph_id: String,
    pub graph6: String,
    pub k: usize,
    pub outcome: ColoringOutcome,
    pub colors_used: Option<usize>,
    pub coloring: Option<Vec<usize>>,
}

pub fn color_record(graph_id: impl Into<String>, g: &Graph, k: usize, strategy: Strategy, budget: u64) -> ColorRecord {
    let (outcome, coloring) = color_with_strategy(g, k, strategy, budget);
    ColorRecord {
        graph_id: graph_id.into(),
        graph6: write_graph6(g),
        k,
        outcome,
        colors_used: coloring.as_ref().map(Coloring::colors_used),
        coloring: coloring.map(|c| c.assignment),
    }
}

pub fn to_json_line<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string(value).map_err(|e| Error::InvalidGraph(format!("serialization failed: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::fixtures::*;
    use crate::embedding::RotationSystem;
    use crate::graph::named;

    #[test]
    fn cube_record() {
        let rec = analyze("cube", &PlaneGraph::new(cube_rotation()).unwrap(), 1000);
        assert_eq!(rec.counts.f3, 0);
        assert!(rec.theorem4.hypotheses_hold && rec.theorem4.conclusion_holds);
        assert_eq!(rec.coloring_outcome, ColoringOutcome::Exact);
        assert_eq!(rec.structure.cycle_lengths, vec![4, 6, 8]);
        assert!(rec.bounds_checked.iter().all(|b| b.holds));
        let line = to_json_line(&rec).unwrap();
        assert!(line.contains("\"slack\":\"4\""));
        let back: VerdictRecord = serde_json::from_str(&line).unwrap();
        assert_eq!(back, rec);
    }

    #[test]
    fn k4_record_certifies_criticality() {
        let rec = analyze("k4", &PlaneGraph::new(k4_rotation()).unwrap(), 1000);
        assert_eq!(rec.coloring_outcome, ColoringOutcome::Infeasible);
        let ky = rec.bounds_checked.iter().find(|b| b.name == "ky_lower").unwrap();
        assert!(ky.holds);
        assert!(ky.slack.is_zero());
    }

    #[test]
    fn long_faces_get_chain_checks() {
        // C9: two faces of length 9
        let g = PlaneGraph::new(RotationSystem::lexicographic(&named::cycle(9))).unwrap();
        let rec = analyze("c9", &g, 1000);
        let names: Vec<&str> = rec.bounds_checked.iter().map(|b| b.name.as_str()).collect();
        assert!(names.contains(&"face_count_m9"));
        assert!(names.contains(&"edge_count_m9"));
        assert_eq!(rec.coloring_outcome, ColoringOutcome::Peeled);
    }

    #[test]
    fn strategies() {
        let k4 = named::complete(4);
        assert_eq!(color_with_strategy(&k4, 3, Strategy::Peel, 100).0, ColoringOutcome::PeelStuck);
        assert_eq!(color_with_strategy(&k4, 3, Strategy::Auto, 100).0, ColoringOutcome::Infeasible);
        assert_eq!(color_with_strategy(&named::grotzsch(), 3, Strategy::Exact, 3).0, ColoringOutcome::Budget);
        let (o, c) = color_with_strategy(&named::cycle(4), 2, Strategy::Peel, 100);
        assert_eq!(o, ColoringOutcome::Peeled);
        assert_eq!(c.unwrap().k, 2);
    }
}
