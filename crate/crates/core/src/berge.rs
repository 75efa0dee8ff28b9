//! Berge-clique detection.
//!
//! A Berge-`K_n` in an r-graph `H` is a core of `n` vertices together with
//! an injective assignment of a distinct edge `e_ij ⊇ {v_i, v_j}` to every
//! core pair. For a fixed core this is exactly a matching that saturates the
//! pair side of the incidence graph `B(H)` (pairs versus edges, adjacent when
//! the pair lies in the edge), so detection reduces to maximum bipartite
//! matching. Containment for a given order `n` scans cores in lexicographic
//! order behind a pair-cover prefilter: a core with an uncovered pair cannot
//! carry a clique.

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};
use crate::matching::{max_matching, BipartiteGraph};

/// The incidence graph `B(H)` restricted to the pairs of a core.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceGraph {
    /// Core pairs `(v_i, v_k)`, `i < k` in core order.
    pub pairs: Vec<(Vertex, Vertex)>,
    /// Indices into `H.edges()` of edges containing at least one core pair.
    pub edges: Vec<usize>,
    /// Pair index to positions in `edges`.
    pub graph: BipartiteGraph,
}

impl IncidenceGraph {
    /// `d_B(v_i v_k)`, the number of edges containing the pair.
    pub fn pair_degree(&self, pair: usize) -> usize {
        self.graph.degree(pair)
    }

    /// Number of core pairs inside edge `edges[pos]`.
    pub fn edge_degree(&self, pos: usize) -> usize {
        (0..self.pairs.len()).filter(|&p| self.graph.neighbors(p).contains(&pos)).count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairAssignment {
    pub pair: [Vertex; 2],
    pub edge: Vec<Vertex>,
}

/// Certificate of a Berge-`K_n`: the core sequence and the edge assigned to
/// every core pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BergeWitness {
    pub core: Vec<Vertex>,
    pub assignment: Vec<PairAssignment>,
}

/// Edges containing each vertex pair, precomputed once per hypergraph.
pub(crate) struct PairCover {
    vertex_count: usize,
    by_pair: Vec<Vec<usize>>,
}

impl PairCover {
    pub(crate) fn new(h: &Hypergraph) -> Self {
        let n = h.vertex_count();
        let mut by_pair = vec![Vec::new(); n * n];
        for (idx, e) in h.edges().iter().enumerate() {
            for (&a, &b) in e.iter().tuple_combinations() {
                by_pair[a * n + b].push(idx);
            }
        }
        PairCover { vertex_count: n, by_pair }
    }

    /// Edge indices containing `{a, b}`, in edge order.
    pub(crate) fn edges_of(&self, a: Vertex, b: Vertex) -> &[usize] {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        &self.by_pair[a * self.vertex_count + b]
    }

    fn covers_all_pairs(&self, core: &[Vertex]) -> bool {
        core.iter().tuple_combinations().all(|(&a, &b)| !self.edges_of(a, b).is_empty())
    }
}

fn check_core(h: &Hypergraph, core: &[Vertex]) -> Result<()> {
    if core.len() < 2 {
        return Err(Error::invalid("a core needs at least two vertices"));
    }
    for (i, &v) in core.iter().enumerate() {
        h.check_vertex(v)?;
        if core[..i].contains(&v) {
            return Err(Error::invalid(format!("core lists vertex {v} twice")));
        }
    }
    Ok(())
}

/// Builds `B(H)` on the pairs of `core`.
pub fn incidence_graph(h: &Hypergraph, core: &[Vertex]) -> Result<IncidenceGraph> {
    check_core(h, core)?;
    let cover = PairCover::new(h);
    let pairs: Vec<(Vertex, Vertex)> = core.iter().copied().tuple_combinations().collect();
    let mut edges: Vec<usize> = pairs.iter().flat_map(|&(a, b)| cover.edges_of(a, b).iter().copied()).collect();
    edges.sort_unstable();
    edges.dedup();
    let adjacency = pairs
        .iter()
        .map(|&(a, b)| {
            cover
                .edges_of(a, b)
                .iter()
                .map(|e| edges.binary_search(e).expect("edge collected above"))
                .collect()
        })
        .collect();
    let graph = BipartiteGraph::new(edges.len(), adjacency);
    Ok(IncidenceGraph { pairs, edges, graph })
}

/// Matching step shared by every detection entry point. Right vertices are
/// raw edge indices of `h`.
fn clique_on_core_with(h: &Hypergraph, cover: &PairCover, core: &[Vertex]) -> Option<BergeWitness> {
    let pairs: Vec<(Vertex, Vertex)> = core.iter().copied().tuple_combinations().collect();
    if pairs.len() > h.edge_count() {
        return None;
    }
    let adjacency = pairs.iter().map(|&(a, b)| cover.edges_of(a, b).to_vec()).collect();
    let graph = BipartiteGraph::new(h.edge_count(), adjacency);
    let matching = max_matching(&graph);
    if !matching.saturates_left() {
        return None;
    }
    let assignment = pairs
        .iter()
        .zip(&matching.left_to_right)
        .map(|(&(a, b), e)| PairAssignment {
            pair: [a, b],
            edge: h.edges()[e.expect("saturated")].clone(),
        })
        .collect();
    Some(BergeWitness { core: core.to_vec(), assignment })
}

/// Looks for a Berge clique whose core sequence is exactly `core`. `None` is
/// definitive since the matching is maximum.
pub fn berge_clique_on_core(h: &Hypergraph, core: &[Vertex]) -> Result<Option<BergeWitness>> {
    check_core(h, core)?;
    Ok(clique_on_core_with(h, &PairCover::new(h), core))
}

/// Cores scanned per parallel batch; results within a batch are reduced to
/// the lexicographically first witness.
const BATCH: usize = 512;

/// Core scan behind both containment entry points. `accept_core` is a cheap
/// structural filter applied before the pair-cover prefilter.
pub(crate) fn scan_cores(
    h: &Hypergraph,
    order: usize,
    parallel: bool,
    accept_core: impl Fn(&[Vertex]) -> bool + Sync,
) -> Option<BergeWitness> {
    let pairs_needed = order * (order - 1) / 2;
    if order > h.vertex_count() || h.edge_count() < pairs_needed {
        return None;
    }
    let cover = PairCover::new(h);
    let attempt = |core: &Vec<Vertex>| {
        if accept_core(core) && cover.covers_all_pairs(core) {
            clique_on_core_with(h, &cover, core)
        } else {
            None
        }
    };
    let mut cores = (0..h.vertex_count()).combinations(order);
    if !parallel || rayon::current_num_threads() <= 1 {
        return cores.find_map(|c| attempt(&c));
    }
    loop {
        let batch: Vec<Vec<Vertex>> = cores.by_ref().take(BATCH).collect();
        if batch.is_empty() {
            return None;
        }
        if let Some(w) = batch.par_iter().find_map_first(attempt) {
            return Some(w);
        }
    }
}

/// First Berge-`K_n` (lexicographic core order) in `h`, if any.
///
/// The usual setting is `n >= 5` and `r >= 3`, but any `n >= 2` is accepted.
pub fn contains_berge_clique(h: &Hypergraph, order: usize) -> Result<Option<BergeWitness>> {
    if order < 2 {
        return Err(Error::invalid(format!("clique order must be at least 2, got {order}")));
    }
    Ok(scan_cores(h, order, true, |_| true))
}

/// Like [`contains_berge_clique`], restricted to cores holding at least two
/// vertices of `edge`. When `h - edge` is Berge-`K_n`-free every clique of
/// `h` uses `edge`, and such a clique's core contains a pair of it.
pub fn contains_berge_clique_through(h: &Hypergraph, order: usize, edge: &[Vertex]) -> Result<Option<BergeWitness>> {
    if order < 2 {
        return Err(Error::invalid(format!("clique order must be at least 2, got {order}")));
    }
    Ok(scan_cores(h, order, true, |core| edge.iter().filter(|v| core.binary_search(v).is_ok()).count() >= 2))
}

pub fn is_berge_free(h: &Hypergraph, order: usize) -> Result<bool> {
    Ok(contains_berge_clique(h, order)?.is_none())
}

/// Checks every certificate invariant against `h`: distinct in-range core,
/// one assignment per core pair, assigned edges present in `h`, pairwise
/// distinct, and each containing its pair.
pub fn verify_witness(h: &Hypergraph, w: &BergeWitness) -> bool {
    if check_core(h, &w.core).is_err() {
        return false;
    }
    let expected: Vec<[Vertex; 2]> = w.core.iter().tuple_combinations().map(|(&a, &b)| [a, b]).collect();
    if w.assignment.len() != expected.len() {
        return false;
    }
    let mut seen_pairs: Vec<[Vertex; 2]> = w
        .assignment
        .iter()
        .map(|a| {
            let mut p = a.pair;
            p.sort_unstable();
            p
        })
        .collect();
    let mut expected_sorted: Vec<[Vertex; 2]> = expected
        .into_iter()
        .map(|mut p| {
            p.sort_unstable();
            p
        })
        .collect();
    seen_pairs.sort_unstable();
    expected_sorted.sort_unstable();
    if seen_pairs != expected_sorted {
        return false;
    }
    let mut used: Vec<&Vec<Vertex>> = Vec::with_capacity(w.assignment.len());
    for a in &w.assignment {
        if !h.contains_edge(&a.edge) || !a.pair.iter().all(|v| a.edge.contains(v)) {
            return false;
        }
        used.push(&a.edge);
    }
    used.sort_unstable();
    used.windows(2).all(|p| p[0] != p[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_complete, build_expansion, build_turan_partite};

    #[test]
    fn incidence_of_k5() {
        let k5 = build_complete(5, 3).unwrap();
        let b = incidence_graph(&k5, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(b.pairs.len(), 10);
        assert_eq!(b.edges.len(), 10);
        for p in 0..10 {
            assert_eq!(b.pair_degree(p), 3);
        }
        for e in 0..10 {
            assert_eq!(b.edge_degree(e), 3);
        }
    }

    #[test]
    fn incidence_pair_degree_matches_direct_count() {
        let h = Hypergraph::new(6, 3, [[0, 1, 2], [0, 1, 5], [1, 2, 3], [3, 4, 5]]).unwrap();
        let b = incidence_graph(&h, &[0, 1, 2, 3]).unwrap();
        for (i, &(a, c)) in b.pairs.iter().enumerate() {
            let direct = h.edges().iter().filter(|e| e.contains(&a) && e.contains(&c)).count();
            assert_eq!(b.pair_degree(i), direct);
        }
        // {0, 3} is in no edge.
        let idx = b.pairs.iter().position(|&p| p == (0, 3)).unwrap();
        assert_eq!(b.pair_degree(idx), 0);
        // [3,4,5] holds no core pair.
        assert_eq!(b.edges, vec![0, 1, 2]);
    }

    #[test]
    fn incidence_rejects_bad_core() {
        let k5 = build_complete(5, 3).unwrap();
        assert!(incidence_graph(&k5, &[0]).is_err());
        assert!(incidence_graph(&k5, &[0, 0]).is_err());
        assert!(incidence_graph(&k5, &[0, 5]).is_err());
    }

    #[test]
    fn complete_graph_cores() {
        let k5 = build_complete(5, 3).unwrap();
        let w = berge_clique_on_core(&k5, &[0, 1, 2, 3, 4]).unwrap().unwrap();
        assert!(verify_witness(&k5, &w));
        let k4 = build_complete(4, 3).unwrap();
        assert!(berge_clique_on_core(&k4, &[0, 1, 2, 3]).unwrap().is_none());
    }

    #[test]
    fn turan_13_12_has_no_clique_on_full_core() {
        let (t, _) = build_turan_partite(13, 12, 3).unwrap();
        let core: Vec<_> = (0..13).collect();
        assert!(berge_clique_on_core(&t, &core).unwrap().is_none());
    }

    #[test]
    fn expansion_contains_identity_clique() {
        let h = build_expansion(6, 3).unwrap();
        let w = contains_berge_clique(&h, 6).unwrap().expect("clique on the core");
        assert_eq!(w.core, vec![0, 1, 2, 3, 4, 5]);
        assert!(verify_witness(&h, &w));
        for a in &w.assignment {
            assert_eq!(&a.edge[..2], &a.pair);
        }
    }

    #[test]
    fn k5_minus_edge_is_free() {
        let h = build_complete(5, 3).unwrap().filter_edges(|e| e != [0, 1, 2]);
        assert!(contains_berge_clique(&h, 5).unwrap().is_none());
        assert!(is_berge_free(&h, 5).unwrap());
    }

    #[test]
    fn rejects_order_below_two() {
        let k5 = build_complete(5, 3).unwrap();
        assert!(contains_berge_clique(&k5, 1).is_err());
        assert!(is_berge_free(&k5, 6).unwrap());
    }

    #[test]
    fn tampered_witnesses_fail() {
        let k5 = build_complete(5, 3).unwrap();
        let w = contains_berge_clique(&k5, 5).unwrap().unwrap();
        assert!(verify_witness(&k5, &w));

        let mut shared = w.clone();
        shared.assignment[1].edge = shared.assignment[0].edge.clone();
        assert!(!verify_witness(&k5, &shared));

        let mut missing = w.clone();
        let pair = missing.assignment[0].pair;
        missing.assignment[0].edge = k5.edges().iter().find(|e| !e.contains(&pair[0])).unwrap().clone();
        assert!(!verify_witness(&k5, &missing));

        let mut short = w.clone();
        short.assignment.pop();
        assert!(!verify_witness(&k5, &short));

        let mut foreign = w;
        foreign.assignment[0].edge = vec![0, 1, 9];
        assert!(!verify_witness(&k5, &foreign));
    }
}
