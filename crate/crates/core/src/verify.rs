//! Exhaustive verification drivers over enumerated graphs and embeddings.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{face_count_bound, theorem4_verdict};
use crate::coloring::{exact_k_color, greedy_color_from_peel, peel_order, verify_coloring, ExactOutcome};
use crate::embedding::PlaneGraph;
use crate::enumerate::{enumerate_embeddings, enumerate_small_graphs, CorpusFilter};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::write_graph6;
use crate::rational::Rational;
use crate::structure::{adjacent_triangles_exist, avoids_cycle_lengths};

/// Everything needed to reproduce a failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub graph6: String,
    pub rotation: Option<Vec<Vec<usize>>>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub theorem: u8,
    pub max_n: usize,
    /// Abstract graphs enumerated.
    pub graphs_checked: usize,
    /// Individual instances examined (plane embeddings for the triangle-density check, graphs otherwise).
    pub instances_checked: usize,
    /// Instances satisfying the theorem's hypotheses.
    pub hypothesis_instances: usize,
    pub violations: Vec<Violation>,
}

impl VerificationSummary {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Default)]
struct Tally {
    instances: usize,
    hypothesis: usize,
    violations: Vec<Violation>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.instances += other.instances;
        self.hypothesis += other.hypothesis;
        self.violations.extend(other.violations);
        self
    }
}

fn violation(g: &Graph, rotation: Option<&PlaneGraph>, detail: impl Into<String>) -> Violation {
    Violation {
        graph6: write_graph6(g),
        rotation: rotation.map(|p| p.rotation().rotations().to_vec()),
        detail: detail.into(),
    }
}

/// Checks one plane embedding: Euler and face-length bookkeeping, the
/// triangle-count identity, the triangle-density bound, and the face-count
/// chain when every non-triangular face is long enough.
pub fn check_plane_instance(p: &PlaneGraph) -> (bool, Vec<String>) {
    let mut problems = Vec::new();
    let c = p.counts();
    let lengths: usize = p.faces().lengths().iter().sum();
    if lengths != 2 * c.e {
        problems.push(format!("face lengths sum to {lengths}, expected {}", 2 * c.e));
    }
    if c.n + c.f != c.e + 2 {
        problems.push("Euler's formula fails".into());
    }
    // K3 is the one diamond-free graph whose two triangular faces share edges
    let diamond_free = adjacent_triangles_exist(p.graph()).is_none() && c.n > 3;
    if diamond_free && 3 * c.f3 != c.e3 {
        problems.push(format!("f3={} but e3={} with no two triangles sharing an edge", c.f3, c.e3));
    }
    let verdict = theorem4_verdict(p);
    if verdict.hypotheses_hold {
        if !verdict.conclusion_holds || !verdict.slack.is_positive() {
            problems.push(format!("3*f3 >= 2*f with f3={} f={}", c.f3, c.f));
        }
        if let Some(m) = p.min_non_triangular_face_length().filter(|&m| m >= 7) {
            let b = face_count_bound(m as i64, c.e as i64, c.f3 as i64).expect("m >= 7");
            let f = Rational::from(c.f);
            if f > b.f_upper || f >= b.strict_upper_from_thm4 {
                problems.push(format!("face-count chain fails for m={m}"));
            }
        }
    }
    (verdict.hypotheses_hold, problems)
}

/// Every genus-0 embedding of every connected planar graph on at most
/// `max_n` vertices.
pub fn verify_theorem4(max_n: usize, budget: u64) -> Result<VerificationSummary> {
    let filter = CorpusFilter { max_n, require_planar: true, ..Default::default() };
    let graphs = enumerate_small_graphs(&filter)?;
    let tallies: Vec<Result<Tally>> = graphs
        .par_iter()
        .map(|g| {
            let mut t = Tally::default();
            for rot in enumerate_embeddings(g, true, budget)? {
                let p = match PlaneGraph::new(rot) {
                    Ok(p) => p,
                    Err(e) => {
                        t.violations.push(violation(g, None, format!("emitted embedding rejected: {e}")));
                        continue;
                    }
                };
                t.instances += 1;
                let (hyp, problems) = check_plane_instance(&p);
                t.hypothesis += hyp as usize;
                t.violations.extend(problems.into_iter().map(|d| violation(g, Some(&p), d)));
            }
            if t.instances == 0 {
                t.violations.push(violation(g, None, "planar graph without a genus-0 embedding"));
            }
            Ok(t)
        })
        .collect();
    let tally = tallies.into_iter().try_fold(Tally::default(), |acc, t| t.map(|t| acc.merge(t)))?;
    Ok(VerificationSummary {
        theorem: 4,
        max_n,
        graphs_checked: graphs.len(),
        instances_checked: tally.instances,
        hypothesis_instances: tally.hypothesis,
        violations: tally.violations,
    })
}

/// Connected planar graphs with no cycle of length 4 through 11 peel to
/// nothing and the greedy extension 3-colors them.
pub fn verify_theorem2(max_n: usize) -> Result<VerificationSummary> {
    let filter = CorpusFilter { max_n, require_planar: true, forbid_cycles: Some((4, 11)), ..Default::default() };
    let graphs = enumerate_small_graphs(&filter)?;
    let violations: Vec<Violation> = graphs
        .par_iter()
        .filter_map(|g| {
            let trace = peel_order(g);
            match greedy_color_from_peel(g, &trace) {
                Err(_) => Some(violation(g, None, "peeling got stuck on a 3-core")),
                Ok(c) if !verify_coloring(g, &c).unwrap_or(false) => {
                    Some(violation(g, None, "greedy coloring is not proper"))
                }
                Ok(_) => None,
            }
        })
        .collect();
    Ok(VerificationSummary {
        theorem: 2,
        max_n,
        graphs_checked: graphs.len(),
        instances_checked: graphs.len(),
        hypothesis_instances: graphs.len(),
        violations,
    })
}

/// Exact 3-colorability of one graph without cycles of length 4 through 8.
pub fn check_theorem6_instance(g: &Graph, budget: u64) -> Option<Violation> {
    match exact_k_color(g, 3, budget) {
        Ok(ExactOutcome::Colored(c)) if verify_coloring(g, &c).unwrap_or(false) => None,
        Ok(ExactOutcome::Colored(_)) => Some(violation(g, None, "exact coloring is not proper")),
        Ok(ExactOutcome::Infeasible) => Some(violation(g, None, "not 3-colorable")),
        Err(Error::SearchBudgetExceeded(b)) => Some(violation(g, None, format!("search budget {b} exhausted"))),
        Err(e) => Some(violation(g, None, e.to_string())),
    }
}

/// Connected planar graphs with no cycle of length 4 through 8 are exactly
/// 3-colorable. Extra graphs (e.g. ingested ones) are checked when they
/// satisfy the hypotheses.
pub fn verify_theorem6(max_n: usize, budget: u64, extra: &[Graph]) -> Result<VerificationSummary> {
    let filter = CorpusFilter { max_n, require_planar: true, forbid_cycles: Some((4, 8)), ..Default::default() };
    let mut graphs = enumerate_small_graphs(&filter)?;
    let generated = graphs.len();
    graphs.extend(extra.iter().filter(|g| g.is_planar() && avoids_cycle_lengths(g, 4, 8)).cloned());
    let violations: Vec<Violation> = graphs.par_iter().filter_map(|g| check_theorem6_instance(g, budget)).collect();
    Ok(VerificationSummary {
        theorem: 6,
        max_n,
        graphs_checked: generated + extra.len(),
        instances_checked: graphs.len(),
        hypothesis_instances: graphs.len(),
        violations,
    })
}
