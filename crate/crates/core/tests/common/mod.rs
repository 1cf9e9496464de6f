//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's own face tracing, triangle or coloring code.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use planecount::Graph;
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

/// Proper-coloring check written from scratch.
pub fn is_proper(g: &Graph, colors: &[usize], k: usize) -> bool {
    colors.len() == g.n() && colors.iter().all(|&c| c < k) && g.edges().all(|(u, v)| colors[u] != colors[v])
}

/// Tries all `k^n` assignments.
pub fn brute_force_colorable(g: &Graph, k: usize) -> bool {
    let n = g.n();
    let mut colors = vec![0; n];
    loop {
        if is_proper(g, &colors, k) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            colors[i] += 1;
            if colors[i] < k {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

/// Face lengths of a rotation system given as plain neighbour lists.
/// The walk leaving `a -> b` continues with `b -> c`, `c` following `a` in
/// the cyclic order at `b`. An isolated vertex sits in one face of length 0.
pub fn face_lengths(rot: &[Vec<usize>]) -> Vec<usize> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (a, r) in rot.iter().enumerate() {
        if r.is_empty() {
            out.push(0);
        }
        for &b in r {
            let (mut x, mut y) = (a, b);
            let mut len = 0;
            while seen.insert((x, y)) {
                len += 1;
                let ry = &rot[y];
                let i = ry.iter().position(|&w| w == x).unwrap();
                (x, y) = (y, ry[(i + 1) % ry.len()]);
            }
            if len > 0 {
                out.push(len);
            }
        }
    }
    out
}

/// Triangles of `g` as sorted triples.
pub fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        for w in v + 1..g.n() {
            if g.has_edge(u, w) && g.has_edge(v, w) {
                out.push([u, v, w]);
            }
        }
    }
    out
}

pub fn some_edge_in_two_triangles(g: &Graph) -> bool {
    let mut per_edge: HashMap<(usize, usize), usize> = HashMap::new();
    for [a, b, c] in triangles(g) {
        for e in [(a, b), (a, c), (b, c)] {
            *per_edge.entry(e).or_default() += 1;
        }
    }
    per_edge.values().any(|&k| k >= 2)
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Random plane triangulation on `n >= 4` vertices: repeated stacking into a
/// random face starting from K4, then random edge flips. Faces are kept as
/// consistently oriented triples and converted to rotations at the end.
pub fn random_triangulation(rng: &mut StdRng, n: usize, flips: usize) -> Vec<Vec<usize>> {
    assert!(n >= 4);
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 3], [0, 3, 1], [1, 3, 2]];
    for v in 4..n {
        let i = rng.random_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        faces.extend([[a, b, v], [b, c, v], [c, a, v]]);
    }
    let degree = |faces: &[[usize; 3]], v: usize| faces.iter().filter(|f| f.contains(&v)).count();
    let has_edge = |faces: &[[usize; 3]], x: usize, y: usize| {
        faces.iter().any(|f| (0..3).any(|i| f[i] == x && f[(i + 1) % 3] == y))
    };
    for _ in 0..flips {
        let i = rng.random_range(0..faces.len());
        let k = rng.random_range(0..3);
        let f = faces[i];
        let (u, v, w) = (f[k], f[(k + 1) % 3], f[(k + 2) % 3]);
        // the other face on edge u-v runs v -> u -> x
        let j = (0..faces.len()).find(|&j| (0..3).any(|t| faces[j][t] == v && faces[j][(t + 1) % 3] == u)).unwrap();
        let t = (0..3).find(|&t| faces[j][t] == v).unwrap();
        let x = faces[j][(t + 2) % 3];
        if x == w || has_edge(&faces, w, x) || degree(&faces, u) <= 3 || degree(&faces, v) <= 3 {
            continue;
        }
        faces[i] = [x, v, w];
        faces[j] = [w, u, x];
    }
    // face a -> b -> c means c follows a in the cyclic order at b
    let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
    for [a, b, c] in faces {
        succ[b].insert(a, c);
        succ[c].insert(b, a);
        succ[a].insert(c, b);
    }
    succ.iter()
        .map(|s| {
            let start = *s.keys().min().unwrap();
            let mut r = vec![start];
            let mut cur = s[&start];
            while cur != start {
                r.push(cur);
                cur = s[&cur];
            }
            assert_eq!(r.len(), s.len());
            r
        })
        .collect()
}
