//! Strategies and brute-force helpers shared by the unit tests.

use alloc::vec;
use alloc::vec::Vec;

use proptest::prelude::*;

use crate::family::kth_power;
use crate::hypergraph::{Graph, UniformHypergraph};

/// Uniform hypergraph with `k ∈ 3..=5`, `n ≤ 9` and up to 8 random distinct edges.
pub fn hypergraph() -> impl Strategy<Value = UniformHypergraph> {
    (3usize..=5, 0usize..=4).prop_flat_map(|(k, extra)| {
        let n = k + extra;
        proptest::collection::vec(
            proptest::sample::subsequence((0..n).collect::<Vec<_>>(), k),
            1..=8,
        )
        .prop_map(move |mut edges| {
            edges.sort();
            edges.dedup();
            UniformHypergraph::new(k, n, edges).expect("valid by construction")
        })
    })
}

/// A random tree on `2..=7` vertices, each vertex attached to an earlier one.
pub fn tree() -> impl Strategy<Value = Graph> {
    (2usize..=7)
        .prop_flat_map(|n| proptest::collection::vec(any::<proptest::sample::Index>(), n - 1))
        .prop_map(|parents| {
            let edges = parents
                .iter()
                .enumerate()
                .map(|(i, p)| (p.index(i + 1), i + 1))
                .collect();
            Graph::new(parents.len() + 1, edges).expect("tree")
        })
}

/// Connected power hypergraph of a random tree.
pub fn power_of_tree() -> impl Strategy<Value = UniformHypergraph> {
    (tree(), 3usize..=5).prop_map(|(g, k)| kth_power(&g, k).expect("k >= 3"))
}

/// Random simple graph with at least one edge.
pub fn graph() -> impl Strategy<Value = Graph> {
    (2usize..=7).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        let len = pairs.len();
        proptest::sample::subsequence(pairs, 1..=len)
            .prop_map(move |edges| Graph::new(n, edges).expect("simple"))
    })
}

/// Brute-force isomorphism test by backtracking over vertex maps (small inputs only).
pub fn isomorphic(a: &UniformHypergraph, b: &UniformHypergraph) -> bool {
    if a.k() != b.k() || a.n() != b.n() || a.num_edges() != b.num_edges() {
        return false;
    }
    let mut da = a.degrees().degrees;
    let mut db = b.degrees().degrees;
    let (degs_a, degs_b) = (da.clone(), db.clone());
    da.sort();
    db.sort();
    if da != db {
        return false;
    }
    let mut target: Vec<Vec<usize>> = b.edges().map(<[usize]>::to_vec).collect();
    target.sort();
    let mut map = vec![usize::MAX; a.n()];
    let mut used = vec![false; a.n()];
    extend(a, &target, &degs_a, &degs_b, 0, &mut map, &mut used)
}

fn extend(
    a: &UniformHypergraph,
    target: &[Vec<usize>],
    da: &[usize],
    db: &[usize],
    v: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if v == a.n() {
        let mut image: Vec<Vec<usize>> = a
            .edges()
            .map(|e| {
                let mut m: Vec<usize> = e.iter().map(|&u| map[u]).collect();
                m.sort();
                m
            })
            .collect();
        image.sort();
        return image == target;
    }
    for w in 0..a.n() {
        if used[w] || da[v] != db[w] {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(a, target, da, db, v + 1, map, used) {
            return true;
        }
        used[w] = false;
    }
    map[v] = usize::MAX;
    false
}
