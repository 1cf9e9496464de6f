//! Proper colorings: degree-2 peeling with greedy extension, an exact
//! backtracking k-coloring oracle, and 4-criticality certificates.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default node budget for the exact search.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`] in the CLI.
pub const BUDGET_ENV: &str = "PLANECOUNT_BUDGET";

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    pub k: usize,
    /// `assignment[v]` is the color of vertex `v`, in `0..k`.
    pub assignment: Vec<usize>,
}

impl Coloring {
    pub fn colors_used(&self) -> usize {
        self.assignment.iter().collect::<BTreeSet<_>>().len()
    }
}

/// True iff `c` is a proper coloring of `g` with colors in `0..c.k`.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> Result<bool> {
    if c.assignment.len() != g.n() {
        return Err(Error::PartialAssignment { assigned: c.assignment.len(), expected: g.n() });
    }
    if c.assignment.iter().any(|&x| x >= c.k) {
        return Ok(false);
    }
    Ok(g.edges().all(|(u, v)| c.assignment[u] != c.assignment[v]))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelTrace {
    pub removal_order: Vec<usize>,
    /// Vertices left when every remaining vertex has degree at least 3.
    pub stuck_at: Option<Vec<usize>>,
}

impl PeelTrace {
    pub fn is_complete(&self) -> bool {
        self.stuck_at.is_none()
    }

    /// The subgraph induced by the stuck remainder (its 3-core).
    pub fn remainder(&self, g: &Graph) -> Option<Graph> {
        self.stuck_at.as_ref().map(|rest| g.induced_subgraph(rest))
    }
}

/// Repeatedly deletes the least-id vertex of degree at most 2.
pub fn peel_order(g: &Graph) -> PeelTrace {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut ready: BTreeSet<usize> = (0..n).filter(|&v| degree[v] <= 2).collect();
    let mut removal_order = Vec::with_capacity(n);
    while let Some(v) = ready.pop_first() {
        removed[v] = true;
        removal_order.push(v);
        for &u in g.neighbors(v) {
            if !removed[u] {
                degree[u] -= 1;
                if degree[u] == 2 {
                    ready.insert(u);
                }
            }
        }
    }
    let stuck_at = (removal_order.len() < n).then(|| (0..n).filter(|&v| !removed[v]).collect());
    PeelTrace { removal_order, stuck_at }
}

/// Colors vertices in reverse removal order with the least free color of
/// `{0, 1, 2}`. Each vertex sees at most two already-colored neighbours.
pub fn greedy_color_from_peel(g: &Graph, trace: &PeelTrace) -> Result<Coloring> {
    if !trace.is_complete() {
        return Err(Error::TraceIncomplete);
    }
    let mut color = vec![usize::MAX; g.n()];
    for &v in trace.removal_order.iter().rev() {
        let mut taken = [false; 3];
        for &u in g.neighbors(v) {
            if color[u] < 3 {
                taken[color[u]] = true;
            }
        }
        color[v] = taken.iter().position(|&t| !t).expect("at most two colored neighbours");
    }
    Ok(Coloring { k: 3, assignment: color })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExactOutcome {
    Colored(Coloring),
    Infeasible,
}

impl ExactOutcome {
    pub fn coloring(&self) -> Option<&Coloring> {
        match self {
            ExactOutcome::Colored(c) => Some(c),
            ExactOutcome::Infeasible => None,
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<usize>,
    // forbidden[v * k + c] = colored neighbours of v holding c
    forbidden: Vec<u32>,
    available: Vec<usize>,
    nodes: u64,
    budget: u64,
}

const UNCOLORED: usize = usize::MAX;

impl Search<'_> {
    fn pick(&self) -> Option<usize> {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in 0..self.g.n() {
            if self.color[v] != UNCOLORED {
                continue;
            }
            let free_nbrs = self.g.neighbors(v).iter().filter(|&&u| self.color[u] == UNCOLORED).count();
            let key = (self.available[v], usize::MAX - free_nbrs, v);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        best.map(|(_, _, v)| v)
    }

    fn assign(&mut self, v: usize, c: usize) -> bool {
        self.color[v] = c;
        let mut wiped = false;
        for &u in self.g.neighbors(v) {
            let slot = &mut self.forbidden[u * self.k + c];
            *slot += 1;
            if *slot == 1 {
                self.available[u] -= 1;
                if self.available[u] == 0 && self.color[u] == UNCOLORED {
                    wiped = true;
                }
            }
        }
        !wiped
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = UNCOLORED;
        for &u in self.g.neighbors(v) {
            let slot = &mut self.forbidden[u * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.available[u] += 1;
            }
        }
    }

    /// `max_used` is one past the largest color in use; higher colors are
    /// interchangeable, so only the first unused one is tried.
    fn solve(&mut self, max_used: usize) -> Result<bool> {
        let Some(v) = self.pick() else {
            return Ok(true);
        };
        let limit = self.k.min(max_used + 1);
        for c in 0..limit {
            if self.forbidden[v * self.k + c] > 0 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::SearchBudgetExceeded(self.budget));
            }
            let consistent = self.assign(v, c);
            if consistent && self.solve(max_used.max(c + 1))? {
                return Ok(true);
            }
            self.unassign(v, c);
        }
        Ok(false)
    }
}

/// Complete backtracking search for a proper `k`-coloring, branching on the
/// uncolored vertex with the fewest free colors and pruning as soon as a
/// neighbour runs out of colors. At most `budget` assignments are tried.
pub fn exact_k_color(g: &Graph, k: usize, budget: u64) -> Result<ExactOutcome> {
    let n = g.n();
    if n == 0 {
        return Ok(ExactOutcome::Colored(Coloring { k, assignment: Vec::new() }));
    }
    if k == 0 {
        return Ok(ExactOutcome::Infeasible);
    }
    let mut search =
        Search { g, k, color: vec![UNCOLORED; n], forbidden: vec![0; n * k], available: vec![k; n], nodes: 0, budget };
    if search.solve(0)? {
        Ok(ExactOutcome::Colored(Coloring { k, assignment: search.color }))
    } else {
        Ok(ExactOutcome::Infeasible)
    }
}

/// Evidence for or against 4-criticality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityCertificate {
    pub critical: bool,
    /// A 3-coloring of the whole graph, when one exists.
    pub three_coloring: Option<Coloring>,
    /// `(v, coloring of g - v)` for every vertex checked; ids above `v` are shifted down.
    pub deletion_colorings: Vec<(usize, Coloring)>,
    /// A vertex whose deletion still leaves a non-3-colorable graph.
    pub uncolorable_deletion: Option<usize>,
}

/// Whether `g` has chromatic number 4 while every proper induced subgraph is
/// 3-colorable. Induced subgraphs are nested under vertex deletion, so it
/// suffices to 3-color each `g - v`; that also shows `g` is 4-colorable.
pub fn is_4_critical(g: &Graph, budget: u64) -> Result<CriticalityCertificate> {
    let mut cert = CriticalityCertificate {
        critical: false,
        three_coloring: None,
        deletion_colorings: Vec::new(),
        uncolorable_deletion: None,
    };
    if g.n() < 4 {
        return Ok(cert);
    }
    if let ExactOutcome::Colored(c) = exact_k_color(g, 3, budget)? {
        cert.three_coloring = Some(c);
        return Ok(cert);
    }
    for v in 0..g.n() {
        match exact_k_color(&g.remove_vertex(v), 3, budget)? {
            ExactOutcome::Colored(c) => cert.deletion_colorings.push((v, c)),
            ExactOutcome::Infeasible => {
                cert.uncolorable_deletion = Some(v);
                return Ok(cert);
            }
        }
    }
    cert.critical = true;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    /// Brute force over all k^n assignments.
    fn brute_colorable(g: &Graph, k: usize) -> bool {
        let n = g.n();
        let total = k.pow(n as u32);
        (0..total).any(|mut code| {
            let mut a = vec![0; n];
            for x in a.iter_mut() {
                *x = code % k;
                code /= k;
            }
            g.edges().all(|(u, v)| a[u] != a[v])
        })
    }

    #[test]
    fn verify_basics() {
        let k2 = complete(2);
        assert!(verify_coloring(&k2, &Coloring { k: 2, assignment: vec![0, 1] }).unwrap());
        assert!(!verify_coloring(&k2, &Coloring { k: 2, assignment: vec![0, 0] }).unwrap());
        assert!(!verify_coloring(&k2, &Coloring { k: 2, assignment: vec![0, 2] }).unwrap());
        assert_eq!(
            verify_coloring(&k2, &Coloring { k: 2, assignment: vec![0] }),
            Err(Error::PartialAssignment { assigned: 1, expected: 2 })
        );
    }

    #[test]
    fn peel_tree_and_k4() {
        let t = star(5);
        let trace = peel_order(&t);
        assert!(trace.is_complete());
        assert_eq!(trace.removal_order.len(), 6);
        let c = greedy_color_from_peel(&t, &trace).unwrap();
        assert!(verify_coloring(&t, &c).unwrap());
        assert!(c.colors_used() <= 2);

        let k4 = complete(4);
        let trace = peel_order(&k4);
        assert!(trace.removal_order.is_empty());
        assert_eq!(trace.stuck_at, Some(vec![0, 1, 2, 3]));
        assert_eq!(trace.remainder(&k4).unwrap(), k4);
        assert_eq!(greedy_color_from_peel(&k4, &trace), Err(Error::TraceIncomplete));
    }

    #[test]
    fn peel_removes_low_degree_vertices_in_order() {
        let mut g = cycle(5);
        g.add_vertex(&[0]).unwrap();
        let trace = peel_order(&g);
        assert!(trace.is_complete());
        // vertex 0 has degree 3 until a cycle neighbour or the pendant goes
        assert_eq!(trace.removal_order[0], 1);
        let mut degree: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        let mut gone = vec![false; g.n()];
        for &v in &trace.removal_order {
            assert!(degree[v] <= 2);
            gone[v] = true;
            for &u in g.neighbors(v) {
                if !gone[u] {
                    degree[u] -= 1;
                }
            }
        }
        let c = greedy_color_from_peel(&g, &trace).unwrap();
        assert!(verify_coloring(&g, &c).unwrap());
    }

    #[test]
    fn greedy_on_path_and_odd_cycle() {
        let p = path(3);
        let c = greedy_color_from_peel(&p, &peel_order(&p)).unwrap();
        assert!(verify_coloring(&p, &c).unwrap());
        assert!(c.colors_used() <= 2);
        let c5 = cycle(5);
        let c = greedy_color_from_peel(&c5, &peel_order(&c5)).unwrap();
        assert!(verify_coloring(&c5, &c).unwrap());
        assert_eq!(c.colors_used(), 3);
    }

    #[test]
    fn exact_small_cases() {
        assert_eq!(exact_k_color(&complete(4), 3, DEFAULT_BUDGET).unwrap(), ExactOutcome::Infeasible);
        let c5 = cycle(5);
        let out = exact_k_color(&c5, 3, DEFAULT_BUDGET).unwrap();
        assert!(verify_coloring(&c5, out.coloring().unwrap()).unwrap());
        assert_eq!(exact_k_color(&c5, 2, DEFAULT_BUDGET).unwrap(), ExactOutcome::Infeasible);
        assert_eq!(exact_k_color(&complete(1), 0, DEFAULT_BUDGET).unwrap(), ExactOutcome::Infeasible);
        assert!(exact_k_color(&Graph::empty(0), 0, DEFAULT_BUDGET).unwrap().coloring().is_some());
        let out = exact_k_color(&complete(4), 4, DEFAULT_BUDGET).unwrap();
        assert_eq!(out.coloring().unwrap().colors_used(), 4);
    }

    #[test]
    fn grotzsch_needs_four_colors() {
        let g = grotzsch();
        assert!(!brute_colorable(&g, 3));
        assert_eq!(exact_k_color(&g, 3, DEFAULT_BUDGET).unwrap(), ExactOutcome::Infeasible);
        assert!(exact_k_color(&g, 4, DEFAULT_BUDGET).unwrap().coloring().is_some());
    }

    #[test]
    fn budget_is_reported_separately() {
        assert_eq!(exact_k_color(&grotzsch(), 3, 5), Err(Error::SearchBudgetExceeded(5)));
    }

    #[test]
    fn criticality() {
        let k4 = is_4_critical(&complete(4), DEFAULT_BUDGET).unwrap();
        assert!(k4.critical);
        assert_eq!(k4.deletion_colorings.len(), 4);

        let w5 = wheel(5);
        assert!(!brute_colorable(&w5, 3));
        for v in 0..6 {
            assert!(brute_colorable(&w5.remove_vertex(v), 3));
        }
        let cert = is_4_critical(&w5, DEFAULT_BUDGET).unwrap();
        assert!(cert.critical);
        for (v, c) in &cert.deletion_colorings {
            assert!(verify_coloring(&w5.remove_vertex(*v), c).unwrap());
        }

        let c5 = is_4_critical(&cycle(5), DEFAULT_BUDGET).unwrap();
        assert!(!c5.critical);
        assert!(c5.three_coloring.is_some());

        // K4 plus a pendant vertex is 4-chromatic but not critical
        let mut g = complete(4);
        g.add_vertex(&[0]).unwrap();
        let cert = is_4_critical(&g, DEFAULT_BUDGET).unwrap();
        assert!(!cert.critical);
        assert_eq!(cert.uncolorable_deletion, Some(4));
        assert!(is_4_critical(&grotzsch(), DEFAULT_BUDGET).unwrap().critical);
    }
}
