//! Invariants over the enumerated corpus, checked against known counts and
//! independent oracles.

mod common;

use planecount::coloring::DEFAULT_BUDGET;
use planecount::enumerate::rotation_system_count;
use planecount::graph::named;
use planecount::io::write_graph6;
use planecount::structure::avoids_cycle_lengths;
use planecount::verify::check_plane_instance;
use planecount::{
    adjacent_triangles_exist, count_triangles, enumerate_embeddings, enumerate_small_graphs, find_plane_embedding,
    has_cycle_of_length, CorpusFilter, Graph, PlaneGraph,
};

fn counts_by_n(gs: &[Graph], max_n: usize) -> Vec<usize> {
    (1..=max_n).map(|k| gs.iter().filter(|g| g.n() == k).count()).collect()
}

#[test]
fn connected_graph_counts() {
    let gs = enumerate_small_graphs(&CorpusFilter::connected_up_to(7)).unwrap();
    assert_eq!(counts_by_n(&gs, 7), vec![1, 1, 2, 6, 21, 112, 853]);
}

#[test]
fn all_graph_counts() {
    let gs =
        enumerate_small_graphs(&CorpusFilter { max_n: 7, require_connected: false, ..Default::default() }).unwrap();
    assert_eq!(counts_by_n(&gs, 7), vec![1, 2, 4, 11, 34, 156, 1044]);
}

#[test]
fn connected_planar_counts() {
    let f = CorpusFilter { max_n: 8, require_planar: true, ..Default::default() };
    let gs = enumerate_small_graphs(&f).unwrap();
    assert_eq!(counts_by_n(&gs, 8), vec![1, 1, 2, 6, 20, 99, 646, 5974]);
}

#[test]
fn no_duplicates_up_to_isomorphism() {
    // brute-force isomorphism on a slice of the n = 6 corpus
    let f = CorpusFilter { min_n: 6, max_n: 6, ..Default::default() };
    let gs = enumerate_small_graphs(&f).unwrap();
    let perms = permutations(6);
    let key = |g: &Graph| {
        perms
            .iter()
            .map(|p| {
                let h = g.permute(p);
                h.edges().collect::<Vec<_>>()
            })
            .min()
            .unwrap()
    };
    let mut keys: Vec<_> = gs.iter().map(key).collect();
    keys.sort();
    keys.dedup();
    assert_eq!(keys.len(), gs.len());
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

#[test]
fn filters_agree_with_direct_checks() {
    let all = enumerate_small_graphs(&CorpusFilter::connected_up_to(7)).unwrap();
    let f = CorpusFilter { max_n: 7, require_planar: true, forbid_cycles: Some((4, 6)), ..Default::default() };
    let filtered = enumerate_small_graphs(&f).unwrap();
    let mut direct: Vec<String> = all
        .iter()
        .filter(|g| g.is_planar() && (4..=6).all(|k| has_cycle_of_length(g, k).is_none()))
        .map(write_graph6)
        .collect();
    let mut got: Vec<String> = filtered.iter().map(write_graph6).collect();
    direct.sort();
    got.sort();
    assert_eq!(got, direct);
}

#[test]
fn structural_oracles_agree() {
    let gs =
        enumerate_small_graphs(&CorpusFilter { max_n: 7, require_connected: false, ..Default::default() }).unwrap();
    for g in &gs {
        assert_eq!(count_triangles(g), common::triangles(g).len());
        assert_eq!(adjacent_triangles_exist(g).is_some(), common::some_edge_in_two_triangles(g));
        // two triangles on a shared edge span a 4-cycle
        if avoids_cycle_lengths(g, 4, 4) {
            assert!(adjacent_triangles_exist(g).is_none());
        }
        if let Some(c) = has_cycle_of_length(g, 5) {
            assert!(planecount::structure::is_cycle(g, &c) && c.len() == 5);
        }
    }
}

#[test]
fn planarity_matches_embedding_existence() {
    let gs =
        enumerate_small_graphs(&CorpusFilter { max_n: 6, require_connected: false, ..Default::default() }).unwrap();
    for g in gs.iter().filter(|g| rotation_system_count(g) <= 200_000) {
        let brute_plane = enumerate_embeddings(g, false, u64::MAX).unwrap().iter().any(|r| {
            let comps = g.components().len() as i64;
            let f = common::face_lengths(r.rotations()).len() as i64;
            g.n() as i64 - g.edge_count() as i64 + f == 2 * comps
        });
        assert_eq!(g.is_planar(), brute_plane, "{}", write_graph6(g));
    }
    assert!(!named::complete(5).is_planar());
    assert!(!named::petersen().is_planar());
    assert!(!named::grotzsch().is_planar());
    assert!(named::cube().is_planar());
}

#[test]
fn every_plane_embedding_of_small_graphs_passes_instance_checks() {
    let f = CorpusFilter { max_n: 6, require_planar: true, ..Default::default() };
    for g in enumerate_small_graphs(&f).unwrap() {
        for r in enumerate_embeddings(&g, true, DEFAULT_BUDGET).unwrap() {
            let p = PlaneGraph::new(r).unwrap();
            let (_, problems) = check_plane_instance(&p);
            assert!(problems.is_empty(), "{}: {problems:?}", write_graph6(&g));
        }
        assert!(find_plane_embedding(&g, DEFAULT_BUDGET).unwrap().is_some());
    }
}

#[test]
fn triangulations_have_unique_embeddings_up_to_mirror() {
    let mut rng = common::rng(7);
    for n in 4..12 {
        let rot = common::random_triangulation(&mut rng, n, 2 * n);
        let g = planecount::RotationSystem::new(rot).unwrap().graph();
        // 3-connected: exactly the embedding and its mirror
        assert_eq!(enumerate_embeddings(&g, true, DEFAULT_BUDGET).unwrap().len(), 2);
    }
}
