//! Abstract-graph hypothesis checks: triangles sharing edges and cycles of
//! forbidden lengths.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Hypothesis scan of one graph over a window of cycle lengths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub min_degree: usize,
    pub connected: bool,
    pub has_adjacent_triangles: bool,
    /// Number of 3-cycles (not triangular faces).
    pub triangle_count: usize,
    /// `(length, witness)` for every length of the window that occurs.
    pub forbidden_cycles_found: Vec<(usize, Vec<usize>)>,
}

impl StructureReport {
    pub fn forbidden_lengths(&self) -> Vec<usize> {
        self.forbidden_cycles_found.iter().map(|(k, _)| *k).collect()
    }
}

fn common_neighbors(g: &Graph, u: usize, v: usize) -> usize {
    let (a, b) = (g.neighbors(u), g.neighbors(v));
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// An edge lying in two 3-cycles, if one exists.
pub fn adjacent_triangles_exist(g: &Graph) -> Option<(usize, usize)> {
    g.edges().find(|&(u, v)| common_neighbors(g, u, v) >= 2)
}

pub fn count_triangles(g: &Graph) -> usize {
    // each triangle is seen once from each of its three edges
    g.edges().map(|(u, v)| common_neighbors(g, u, v)).sum::<usize>() / 3
}

/// Depth-first search over simple paths starting at `root` and using only
/// vertices with larger ids. Calls `found(len, path)` whenever the path closes
/// into a cycle of length `len <= hi`; a `true` return stops the search.
fn cycles_from_root(
    g: &Graph,
    root: usize,
    hi: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    found: &mut dyn FnMut(usize, &[usize]) -> bool,
) -> bool {
    let last = *path.last().expect("path holds the root");
    for &w in g.neighbors(last) {
        if w == root && path.len() >= 3 {
            if found(path.len(), path) {
                return true;
            }
            continue;
        }
        if w <= root || on_path[w] || path.len() >= hi {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        let stop = cycles_from_root(g, root, hi, path, on_path, found);
        on_path[w] = false;
        path.pop();
        if stop {
            return true;
        }
    }
    false
}

/// Runs the bounded cycle search from every root, stopping early on request.
fn scan_cycles(g: &Graph, hi: usize, found: &mut dyn FnMut(usize, &[usize]) -> bool) {
    let n = g.n();
    let mut on_path = vec![false; n];
    let mut path = Vec::with_capacity(hi);
    for root in 0..n {
        path.clear();
        path.push(root);
        on_path[root] = true;
        let stop = cycles_from_root(g, root, hi, &mut path, &mut on_path, found);
        on_path[root] = false;
        if stop {
            return;
        }
    }
}

/// A simple cycle of length exactly `k`, as a vertex sequence.
pub fn has_cycle_of_length(g: &Graph, k: usize) -> Option<Vec<usize>> {
    if k < 3 || k > g.n() {
        return None;
    }
    let mut witness = None;
    scan_cycles(g, k, &mut |len, path| {
        if len == k {
            witness = Some(path.to_vec());
            true
        } else {
            false
        }
    });
    witness
}

/// One witness cycle for each length in `lo..=hi` that occurs in `g`.
pub fn cycles_in_window(g: &Graph, lo: usize, hi: usize) -> Vec<(usize, Vec<usize>)> {
    let lo = lo.max(3);
    let hi = hi.min(g.n());
    if lo > hi {
        return Vec::new();
    }
    let mut witnesses: Vec<Option<Vec<usize>>> = vec![None; hi + 1];
    let mut missing = hi - lo + 1;
    scan_cycles(g, hi, &mut |len, path| {
        if len >= lo && witnesses[len].is_none() {
            witnesses[len] = Some(path.to_vec());
            missing -= 1;
        }
        missing == 0
    });
    witnesses.into_iter().enumerate().filter_map(|(k, w)| w.map(|w| (k, w))).collect()
}

/// True when `g` has no simple cycle with length in `lo..=hi`.
pub fn avoids_cycle_lengths(g: &Graph, lo: usize, hi: usize) -> bool {
    let mut hit = false;
    scan_cycles(g, hi.min(g.n()), &mut |len, _| {
        hit = len >= lo;
        hit
    });
    !hit
}

/// Like [`avoids_cycle_lengths`] but only looks at cycles through `v`.
pub(crate) fn avoids_cycle_lengths_through(g: &Graph, v: usize, lo: usize, hi: usize) -> bool {
    let hi = hi.min(g.n());
    let n = g.n();
    let mut on_path = vec![false; n];
    let mut path = vec![v];
    on_path[v] = true;
    !paths_close(g, v, lo, hi, &mut path, &mut on_path)
}

fn paths_close(g: &Graph, root: usize, lo: usize, hi: usize, path: &mut Vec<usize>, on_path: &mut [bool]) -> bool {
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w == root {
            if path.len() >= lo.max(3) {
                return true;
            }
            continue;
        }
        if on_path[w] || path.len() >= hi {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        let hit = paths_close(g, root, lo, hi, path, on_path);
        on_path[w] = false;
        path.pop();
        if hit {
            return true;
        }
    }
    false
}

pub fn forbidden_cycle_scan(g: &Graph, lo: usize, hi: usize) -> StructureReport {
    StructureReport {
        min_degree: g.min_degree().unwrap_or(0),
        connected: g.is_connected(),
        has_adjacent_triangles: adjacent_triangles_exist(g).is_some(),
        triangle_count: count_triangles(g),
        forbidden_cycles_found: cycles_in_window(g, lo, hi),
    }
}

/// Checks that `cycle` is a simple cycle of `g`.
pub fn is_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 3 {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) || sorted.last().is_some_and(|&v| v >= g.n()) {
        return false;
    }
    (0..k).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % k]))
}
