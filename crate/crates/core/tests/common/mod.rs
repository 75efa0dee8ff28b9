//! Independent oracles shared by the integration suites. None of these go
//! through the matching code they are used to check.

#![allow(dead_code)]

use std::collections::HashSet;

use berge_turan::Hypergraph;
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;

/// Berge-K_n containment by direct search over injective pair -> edge
/// assignments, for every n-subset core. Failing `(pair, used-edge mask)`
/// states are memoized; requires at most 64 edges.
pub fn brute_force_contains_clique(h: &Hypergraph, order: usize) -> bool {
    assert!(h.edge_count() <= 64);
    (0..h.vertex_count()).combinations(order).any(|core| {
        let mut pairs: Vec<Vec<usize>> = core
            .iter()
            .tuple_combinations()
            .map(|(a, b)| {
                (0..h.edge_count())
                    .filter(|&i| h.edges()[i].contains(a) && h.edges()[i].contains(b))
                    .collect()
            })
            .collect();
        pairs.sort_by_key(Vec::len);
        let mut dead = HashSet::new();
        assign(&pairs, 0, 0, &mut dead)
    })
}

fn assign(pairs: &[Vec<usize>], next: usize, used: u64, dead: &mut HashSet<(usize, u64)>) -> bool {
    if next == pairs.len() {
        return true;
    }
    if dead.contains(&(next, used)) {
        return false;
    }
    for &e in &pairs[next] {
        if used >> e & 1 == 0 && assign(pairs, next + 1, used | 1 << e, dead) {
            return true;
        }
    }
    dead.insert((next, used));
    false
}

/// Maximum matching size by trying every choice for every left vertex.
pub fn brute_force_matching_size(adjacency: &[Vec<usize>]) -> usize {
    fn go(adj: &[Vec<usize>], left: usize, used: &mut Vec<bool>) -> usize {
        if left == adj.len() {
            return 0;
        }
        let mut best = go(adj, left + 1, used);
        for &r in &adj[left] {
            if !used[r] {
                used[r] = true;
                best = best.max(1 + go(adj, left + 1, used));
                used[r] = false;
            }
        }
        best
    }
    let right = adjacency.iter().flatten().max().map_or(0, |m| m + 1);
    go(adjacency, 0, &mut vec![false; right])
}

/// Whether every sub-family satisfies Hall's condition, by enumerating all
/// index subsets.
pub fn hall_condition_holds<T: Ord>(sets: &[Vec<T>]) -> bool {
    (1u32..1 << sets.len()).all(|mask| {
        let chosen: Vec<usize> = (0..sets.len()).filter(|i| mask >> i & 1 == 1).collect();
        let mut union: Vec<&T> = chosen.iter().flat_map(|&i| &sets[i]).collect();
        union.sort();
        union.dedup();
        union.len() >= chosen.len()
    })
}

/// Number of r-subsets of `0..N` meeting each part at most once, where the
/// parts are the balanced layout `N mod k` parts of size `ceil(N/k)`
/// followed by parts of size `floor(N/k)`. Counted by enumeration.
pub fn enumerate_partite_edges(vertex_count: usize, parts: usize, r: usize) -> usize {
    let small = vertex_count / parts;
    let big = vertex_count % parts;
    let mut part_of = Vec::with_capacity(vertex_count);
    for p in 0..parts {
        let size = small + usize::from(p < big);
        part_of.extend(std::iter::repeat_n(p, size));
    }
    (0..vertex_count)
        .combinations(r)
        .filter(|s| s.iter().map(|&v| part_of[v]).all_unique())
        .count()
}

pub fn random_hypergraph(rng: &mut impl Rng, vertex_count: usize, r: usize, density: f64) -> Hypergraph {
    let edges: Vec<Vec<usize>> = (0..vertex_count).combinations(r).filter(|_| rng.gen_bool(density)).collect();
    Hypergraph::new(vertex_count, r, edges).unwrap()
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}
