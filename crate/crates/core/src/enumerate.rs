//! Exhaustive generation of small graphs up to isomorphism, and of the
//! rotation systems of a fixed graph.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::embedding::RotationSystem;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::avoids_cycle_lengths_through;

/// Largest order accepted by [`enumerate_small_graphs`].
pub const GENERATION_CAP: usize = 10;

/// Largest order a canonical code fits in (`11 * 10 / 2 = 55` bits).
pub const CANONICAL_CAP: usize = 11;

/// Canonical labeling of a graph.
///
/// `code` is the upper triangle of the relabeled adjacency matrix in graph6
/// order, first pair as the most significant bit. It is the least such code
/// over all labelings compatible with the equitable partition found by
/// iterated degree refinement and individualization, so two graphs are
/// isomorphic iff their codes (and orders) agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub n: usize,
    pub code: u64,
    /// `labeling[v]` is the canonical label of vertex `v`.
    pub labeling: Vec<usize>,
}

impl CanonicalForm {
    pub fn graph(&self, g: &Graph) -> Graph {
        g.permute(&self.labeling)
    }
}

struct Canon {
    masks: Vec<u32>,
    best: Option<(u64, Vec<usize>)>,
}

impl Canon {
    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.masks[u] >> v & 1 == 1
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        let clear = !((1u32 << u) | (1u32 << v));
        self.masks[u] & clear == self.masks[v] & clear
    }

    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        loop {
            let cell_masks: Vec<u32> = cells.iter().map(|c| c.iter().fold(0, |m, &v| m | 1 << v)).collect();
            let mut next = Vec::with_capacity(cells.len());
            let mut changed = false;
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, usize)> = cell
                    .iter()
                    .map(|&v| (cell_masks.iter().map(|m| (self.masks[v] & m).count_ones()).collect(), v))
                    .collect();
                keyed.sort();
                let start = next.len();
                for (i, (key, v)) in keyed.iter().enumerate() {
                    if i == 0 || *key != keyed[i - 1].0 {
                        next.push(Vec::new());
                    }
                    next.last_mut().unwrap().push(*v);
                }
                changed |= next.len() - start > 1;
            }
            cells = next;
            if !changed {
                return cells;
            }
        }
    }

    fn code_of(&self, order: &[usize]) -> u64 {
        let mut code = 0u64;
        for j in 1..order.len() {
            for i in 0..j {
                code = code << 1 | self.adjacent(order[i], order[j]) as u64;
            }
        }
        code
    }

    fn search(&mut self, cells: Vec<Vec<usize>>) {
        let cells = self.refine(cells);
        let Some(idx) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let code = self.code_of(&order);
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, order));
            }
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[idx] {
            // swapping twins is an automorphism fixing the partition
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let mut split = cells[..idx].to_vec();
            split.push(vec![v]);
            split.push(cells[idx].iter().copied().filter(|&u| u != v).collect());
            split.extend_from_slice(&cells[idx + 1..]);
            self.search(split);
        }
    }
}

/// Canonical form of a graph with at most [`CANONICAL_CAP`] vertices.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.n();
    if n > CANONICAL_CAP {
        return Err(Error::CapExceeded { requested: n, cap: CANONICAL_CAP });
    }
    let masks = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u)).collect();
    let mut canon = Canon { masks, best: None };
    if n > 0 {
        canon.search(vec![(0..n).collect()]);
    }
    let (code, order) = canon.best.take().unwrap_or_default();
    let mut labeling = vec![0; n];
    for (label, &v) in order.iter().enumerate() {
        labeling[v] = label;
    }
    Ok(CanonicalForm { n, code, labeling })
}

/// Selects which graphs [`enumerate_small_graphs`] emits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusFilter {
    pub min_n: usize,
    pub max_n: usize,
    pub min_degree: Option<usize>,
    /// Reject graphs with a simple cycle whose length lies in `lo..=hi`.
    pub forbid_cycles: Option<(usize, usize)>,
    pub require_connected: bool,
    pub require_planar: bool,
}

impl Default for CorpusFilter {
    fn default() -> Self {
        CorpusFilter {
            min_n: 1,
            max_n: 7,
            min_degree: None,
            forbid_cycles: None,
            require_connected: true,
            require_planar: false,
        }
    }
}

impl CorpusFilter {
    pub fn connected_up_to(max_n: usize) -> Self {
        CorpusFilter { max_n, ..Default::default() }
    }

    fn hereditary_ok(&self, g: &Graph, new_vertex: usize) -> bool {
        if let Some((lo, hi)) = self.forbid_cycles {
            if !avoids_cycle_lengths_through(g, new_vertex, lo, hi) {
                return false;
            }
        }
        !self.require_planar || g.is_planar()
    }

    fn emits(&self, g: &Graph) -> bool {
        g.n() >= self.min_n && self.min_degree.is_none_or(|d| g.min_degree().unwrap_or(0) >= d)
    }
}

/// One canonical representative per isomorphism class of graphs passing
/// `filter`, ordered by order then canonical code.
///
/// Graphs are grown one vertex at a time. Planarity and forbidden cycle
/// lengths are closed under vertex deletion, and every connected graph has a
/// vertex whose deletion leaves it connected, so extending every kept
/// representative by a new vertex with every possible neighbourhood reaches
/// every class; duplicates are merged by canonical code.
pub fn enumerate_small_graphs(filter: &CorpusFilter) -> Result<Vec<Graph>> {
    if filter.max_n > GENERATION_CAP {
        return Err(Error::CapExceeded { requested: filter.max_n, cap: GENERATION_CAP });
    }
    let mut out = Vec::new();
    if filter.max_n == 0 {
        return Ok(out);
    }
    let mut level: Vec<Graph> = vec![Graph::empty(1)];
    for k in 1..=filter.max_n {
        out.extend(level.iter().filter(|g| filter.emits(g)).cloned());
        if k == filter.max_n {
            break;
        }
        let first_mask = usize::from(filter.require_connected);
        let found: Vec<(u64, Graph)> = level
            .par_iter()
            .flat_map_iter(|g| {
                (first_mask..1usize << k).filter_map(move |mask| {
                    let nbrs: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
                    let mut h = g.clone();
                    h.add_vertex(&nbrs).expect("new vertex");
                    if !filter.hereditary_ok(&h, k) {
                        return None;
                    }
                    let canon = canonical_form(&h).expect("within cap");
                    Some((canon.code, canon.graph(&h)))
                })
            })
            .collect();
        let unique: BTreeMap<u64, Graph> = found.into_iter().collect();
        level = unique.into_values().collect();
    }
    Ok(out)
}

/// Number of rotation systems, the product of `(deg(v) - 1)!`, saturating.
pub fn rotation_system_count(g: &Graph) -> u128 {
    (0..g.n()).fold(1u128, |acc, v| {
        let d = g.degree(v).max(1) as u128;
        (1..d).fold(acc, |a, x| a.saturating_mul(x))
    })
}

/// Cyclic orders of `nbrs` starting with the least neighbour.
fn cyclic_orders(nbrs: &[usize]) -> Vec<Vec<usize>> {
    fn permute(rest: &mut Vec<usize>, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            permute(rest, prefix, out);
            prefix.pop();
            rest.insert(i, x);
        }
    }
    let mut sorted = nbrs.to_vec();
    sorted.sort_unstable();
    if sorted.len() <= 2 {
        return vec![sorted];
    }
    let mut out = Vec::new();
    let first = sorted.remove(0);
    permute(&mut sorted, &mut vec![first], &mut out);
    out
}

struct RotationProduct<'a> {
    choices: Vec<Vec<Vec<usize>>>,
    chosen: Vec<usize>,
    g: &'a Graph,
    nodes: u64,
    budget: u64,
    found: Vec<RotationSystem>,
}

impl RotationProduct<'_> {
    fn run(&mut self, v: usize) -> Result<()> {
        if v == self.g.n() {
            let rotation = (0..v).map(|u| self.choices[u][self.chosen[u]].clone()).collect();
            self.found.push(RotationSystem::new(rotation).expect("choices are valid rotations"));
            return Ok(());
        }
        for c in 0..self.choices[v].len() {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            self.chosen[v] = c;
            self.run(v + 1)?;
        }
        Ok(())
    }
}

/// A corner of a partial embedding: the gap after neighbour `from` in the
/// rotation at `at`. Faces are lists of corners.
#[derive(Clone, Copy)]
struct Corner {
    from: usize,
    at: usize,
}

fn successor(rot: &[Vec<usize>], at: usize, from: usize) -> usize {
    let r = &rot[at];
    let i = r.iter().position(|&x| x == from).expect("neighbour in rotation");
    r[(i + 1) % r.len()]
}

/// Face walks of a rotation system on a graph without isolated vertices.
fn corner_faces(rot: &[Vec<usize>]) -> Vec<Vec<Corner>> {
    let mut seen = BTreeSet::new();
    let mut faces = Vec::new();
    for (a, r) in rot.iter().enumerate() {
        for &b in r {
            if seen.contains(&(a, b)) {
                continue;
            }
            let mut face = Vec::new();
            let (mut x, mut y) = (a, b);
            while seen.insert((x, y)) {
                face.push(Corner { from: x, at: y });
                let z = successor(rot, y, x);
                (x, y) = (y, z);
            }
            faces.push(face);
        }
    }
    faces
}

/// Genus-0 embeddings of one connected component, by inserting each
/// non-tree edge into a face of an embedding of the smaller graph. Every plane
/// embedding restricts to a unique plane embedding of the graph minus an edge,
/// so each one is produced exactly once.
struct Insertion<'a> {
    extra: &'a [(usize, usize)],
    stop_at_first: bool,
    nodes: &'a mut u64,
    budget: u64,
    found: Vec<Vec<Vec<usize>>>,
}

impl Insertion<'_> {
    fn tick(&mut self) -> Result<()> {
        *self.nodes += 1;
        if *self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        Ok(())
    }

    fn run(&mut self, rot: &mut Vec<Vec<usize>>, idx: usize) -> Result<()> {
        if self.stop_at_first && !self.found.is_empty() {
            return Ok(());
        }
        let Some(&(u, v)) = self.extra.get(idx) else {
            self.found.push(rot.clone());
            return Ok(());
        };
        for face in corner_faces(rot) {
            for cu in face.iter().filter(|c| c.at == u) {
                for cv in face.iter().filter(|c| c.at == v) {
                    self.tick()?;
                    let iu = rot[u].iter().position(|&x| x == cu.from).expect("corner") + 1;
                    let iv = rot[v].iter().position(|&x| x == cv.from).expect("corner") + 1;
                    rot[u].insert(iu, v);
                    rot[v].insert(iv, u);
                    self.run(rot, idx + 1)?;
                    rot[u].remove(iu);
                    rot[v].remove(iv);
                }
            }
        }
        Ok(())
    }
}

/// Depth-first spanning tree of the component containing `root`, and the
/// remaining edges ordered by when both ends are reached.
type EdgeList = Vec<(usize, usize)>;

fn dfs_split(g: &Graph, root: usize) -> (EdgeList, EdgeList) {
    let mut index = vec![usize::MAX; g.n()];
    let mut tree = Vec::new();
    let mut stack = vec![(root, root)];
    let mut t = 0;
    while let Some((v, parent)) = stack.pop() {
        if index[v] != usize::MAX {
            continue;
        }
        index[v] = t;
        t += 1;
        if v != parent {
            tree.push((parent, v));
        }
        for &w in g.neighbors(v).iter().rev() {
            if index[w] == usize::MAX {
                stack.push((w, v));
            }
        }
    }
    let mut extra: EdgeList = g
        .edges()
        .filter(|&(a, b)| index[a] != usize::MAX && !tree.contains(&(a, b)) && !tree.contains(&(b, a)))
        .collect();
    extra.sort_by_key(|&(a, b)| (index[a].max(index[b]), index[a].min(index[b])));
    (tree, extra)
}

fn plane_embeddings_of_component(
    g: &Graph,
    comp: &[usize],
    stop_at_first: bool,
    nodes: &mut u64,
    budget: u64,
) -> Result<Vec<Vec<Vec<usize>>>> {
    let (tree, extra) = dfs_split(g, comp[0]);
    let mut tree_graph = Graph::empty(g.n());
    for &(a, b) in &tree {
        tree_graph.add_edge(a, b)?;
    }
    // every rotation system of a tree is plane; only the component's vertices vary
    let choices: Vec<Vec<Vec<usize>>> = comp.iter().map(|&v| cyclic_orders(tree_graph.neighbors(v))).collect();
    let mut found = Vec::new();
    let mut chosen = vec![0; comp.len()];
    'outer: loop {
        let mut rot = vec![Vec::new(); g.n()];
        for (i, &v) in comp.iter().enumerate() {
            rot[v] = choices[i][chosen[i]].clone();
        }
        let mut ins = Insertion { extra: &extra, stop_at_first, nodes, budget, found: Vec::new() };
        ins.tick()?;
        ins.run(&mut rot, 0)?;
        found.extend(ins.found);
        if stop_at_first && !found.is_empty() {
            break;
        }
        for i in 0..comp.len() {
            chosen[i] += 1;
            if chosen[i] < choices[i].len() {
                continue 'outer;
            }
            chosen[i] = 0;
        }
        break;
    }
    Ok(found)
}

/// Writes each cyclic order from its least neighbour.
fn normalize(mut rot: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for r in &mut rot {
        if let Some(i) = r.iter().enumerate().min_by_key(|&(_, &x)| x).map(|(i, _)| i) {
            r.rotate_left(i);
        }
    }
    rot
}

fn plane_embeddings(g: &Graph, stop_at_first: bool, budget: u64) -> Result<Vec<RotationSystem>> {
    if !g.is_planar() {
        return Ok(Vec::new());
    }
    let mut nodes = 0;
    let mut combined: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); g.n()]];
    for comp in g.components() {
        if comp.len() == 1 {
            continue;
        }
        let parts = plane_embeddings_of_component(g, &comp, stop_at_first, &mut nodes, budget)?;
        let mut next = Vec::with_capacity(combined.len() * parts.len());
        for base in &combined {
            for part in &parts {
                nodes += 1;
                if nodes > budget {
                    return Err(Error::BudgetExceeded(budget));
                }
                let mut rot = base.clone();
                for &v in &comp {
                    rot[v] = part[v].clone();
                }
                next.push(rot);
            }
        }
        combined = next;
    }
    let mut out: Vec<Vec<Vec<usize>>> = combined.into_iter().map(normalize).collect();
    out.sort();
    Ok(out.into_iter().map(|r| RotationSystem::new(r).expect("inserted edges keep rotations valid")).collect())
}

/// All rotation systems of `g` (each vertex's order written from its least
/// neighbour, so each cyclic order appears once), or only those of genus 0.
///
/// Genus-0 embeddings are built directly: start from the rotation systems of
/// a depth-first spanning tree and insert the remaining edges one at a time
/// into faces containing both ends. Fails once `budget` search nodes are spent.
pub fn enumerate_embeddings(g: &Graph, genus_zero_only: bool, budget: u64) -> Result<Vec<RotationSystem>> {
    if genus_zero_only {
        return plane_embeddings(g, false, budget);
    }
    let mut search = RotationProduct {
        choices: (0..g.n()).map(|v| cyclic_orders(g.neighbors(v))).collect(),
        chosen: vec![0; g.n()],
        g,
        nodes: 0,
        budget,
        found: Vec::new(),
    };
    search.run(0)?;
    Ok(search.found)
}

/// Some genus-0 rotation system of `g`, if `g` is planar.
pub fn find_plane_embedding(g: &Graph, budget: u64) -> Result<Option<RotationSystem>> {
    Ok(plane_embeddings(g, true, budget)?.into_iter().next())
}
