//! Finite uniform hypergraphs in canonical form.
//!
//! Vertices are dense 0-based indices. Every edge is stored as a strictly
//! increasing vertex tuple and the edge list itself is kept in lexicographic
//! order, so two hypergraphs are equal exactly when they have the same vertex
//! count, uniformity and edge set.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A sorted set of distinct vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    /// Builds a set from arbitrary-order members. Repeated members are an error.
    pub fn new(members: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let mut members: Vec<Vertex> = members.into_iter().collect();
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("vertex {} listed twice", w[0])));
        }
        Ok(VertexSet(members))
    }

    pub fn range(start: Vertex, end: Vertex) -> Self {
        VertexSet((start..end).collect())
    }

    pub fn members(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| !other.contains(v))
    }

    pub(crate) fn check_within(&self, vertex_count: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= vertex_count => Err(Error::VertexOutOfRange { vertex: v, vertex_count }),
            _ => Ok(()),
        }
    }
}

impl From<VertexSet> for Vec<Vertex> {
    fn from(set: VertexSet) -> Self {
        set.0
    }
}

/// An r-uniform hypergraph `H = (V, E)` with `V = {0, .., N-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    vertex_count: usize,
    uniformity: usize,
    edges: Vec<Vec<Vertex>>,
}

impl Hypergraph {
    /// Builds a hypergraph from edges given in any order, with vertices in any
    /// order inside each edge. Duplicate edges are rejected.
    pub fn new<E>(vertex_count: usize, uniformity: usize, edges: impl IntoIterator<Item = E>) -> Result<Self>
    where
        E: AsRef<[Vertex]>,
    {
        check_uniformity(uniformity)?;
        let mut canon = Vec::new();
        for edge in edges {
            let mut e = edge.as_ref().to_vec();
            e.sort_unstable();
            let distinct = e.windows(2).all(|w| w[0] < w[1]);
            if e.len() != uniformity || !distinct {
                return Err(Error::MalformedEdge { edge: edge.as_ref().to_vec(), uniformity });
            }
            if let Some(&v) = e.last() {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange { vertex: v, vertex_count });
                }
            }
            canon.push(e);
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].clone()));
        }
        Ok(Hypergraph { vertex_count, uniformity, edges: canon })
    }

    pub fn empty(vertex_count: usize, uniformity: usize) -> Result<Self> {
        check_uniformity(uniformity)?;
        Ok(Hypergraph { vertex_count, uniformity, edges: Vec::new() })
    }

    /// Caller guarantees every edge is sorted, in range, and the list is
    /// strictly increasing.
    pub(crate) fn from_canonical(vertex_count: usize, uniformity: usize, edges: Vec<Vec<Vertex>>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges
            .iter()
            .all(|e| e.len() == uniformity && e.windows(2).all(|w| w[0] < w[1]) && e.iter().all(|&v| v < vertex_count)));
        Hypergraph { vertex_count, uniformity, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn uniformity(&self) -> usize {
        self.uniformity
    }

    pub fn edges(&self) -> &[Vec<Vertex>] {
        &self.edges
    }

    /// `e(H)`.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Membership test for a strictly increasing vertex tuple.
    pub fn contains_edge(&self, edge: &[Vertex]) -> bool {
        self.edges.binary_search_by(|e| e.as_slice().cmp(edge)).is_ok()
    }

    /// Returns `H + e`. Adding an edge already present is a `DuplicateEdge` error.
    pub fn with_edge(&self, edge: &[Vertex]) -> Result<Self> {
        let single = Hypergraph::new(self.vertex_count, self.uniformity, [edge])?;
        let e = single.edges.into_iter().next().expect("one edge");
        match self.edges.binary_search(&e) {
            Ok(_) => Err(Error::DuplicateEdge(e)),
            Err(pos) => {
                let mut edges = self.edges.clone();
                edges.insert(pos, e);
                Ok(self.with_edge_list(edges))
            }
        }
    }

    /// The sub-hypergraph keeping only edges accepted by `keep`, on the same vertex set.
    pub fn filter_edges(&self, mut keep: impl FnMut(&[Vertex]) -> bool) -> Self {
        let edges = self.edges.iter().filter(|e| keep(e)).cloned().collect();
        self.with_edge_list(edges)
    }

    fn with_edge_list(&self, edges: Vec<Vec<Vertex>>) -> Self {
        Hypergraph::from_canonical(self.vertex_count, self.uniformity, edges)
    }

    /// Every r-subset of `V` that is not an edge, in lexicographic order.
    pub fn non_edges(&self) -> Vec<Vec<Vertex>> {
        let mut present = self.edges.iter().peekable();
        let mut out = Vec::new();
        for cand in (0..self.vertex_count).combinations(self.uniformity) {
            if present.peek().is_some_and(|e| **e == cand) {
                present.next();
            } else {
                out.push(cand);
            }
        }
        out
    }

    /// `H^c`: same vertices, edge set `(V choose r) \ E`.
    pub fn complement(&self) -> Self {
        self.with_edge_list(self.non_edges())
    }

    /// `H[U]`: the edges lying entirely inside `U`, relabeled onto `0..|U|`
    /// preserving the order of `U`.
    pub fn induced(&self, subset: &VertexSet) -> Result<Self> {
        subset.check_within(self.vertex_count)?;
        let mut relabel = vec![None; self.vertex_count];
        for (i, &v) in subset.members().iter().enumerate() {
            relabel[v] = Some(i);
        }
        let edges: Vec<Vec<Vertex>> = self
            .edges
            .iter()
            .filter_map(|e| e.iter().map(|&v| relabel[v]).collect::<Option<Vec<_>>>())
            .collect();
        // Relabeling is monotone, so lexicographic order survives.
        Ok(Hypergraph::from_canonical(subset.len(), self.uniformity, edges))
    }

    /// `H[U, W]`: edges meeting both `U` and `W`, on the full vertex set.
    pub fn cross(&self, left: &VertexSet, right: &VertexSet) -> Result<Self> {
        left.check_within(self.vertex_count)?;
        right.check_within(self.vertex_count)?;
        if !left.is_disjoint(right) {
            return Err(Error::invalid("cross sets must be disjoint"));
        }
        Ok(self.filter_edges(|e| e.iter().any(|&v| left.contains(v)) && e.iter().any(|&v| right.contains(v))))
    }

    /// `d_H(v)`.
    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter(|e| e.binary_search(&v).is_ok()).count())
    }

    /// `H - v`: drops `v` with its edges and shifts higher indices down by one.
    pub fn delete_vertex(&self, v: Vertex) -> Result<Self> {
        self.check_vertex(v)?;
        let edges = self
            .edges
            .iter()
            .filter(|e| e.binary_search(&v).is_err())
            .map(|e| e.iter().map(|&u| if u > v { u - 1 } else { u }).collect())
            .collect();
        Ok(Hypergraph::from_canonical(self.vertex_count - 1, self.uniformity, edges))
    }

    /// True iff no edge contains two members of `set`.
    pub fn is_independent_set(&self, set: &VertexSet) -> Result<bool> {
        set.check_within(self.vertex_count)?;
        Ok(self.edges.iter().all(|e| e.iter().filter(|&&v| set.contains(v)).count() < 2))
    }

    /// Applies the vertex permutation `v -> perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Self> {
        if perm.len() != self.vertex_count {
            return Err(Error::invalid(format!(
                "permutation has length {} but the hypergraph has {} vertices",
                perm.len(),
                self.vertex_count
            )));
        }
        VertexSet::new(perm.iter().copied())?.check_within(self.vertex_count)?;
        let edges: Vec<Vec<Vertex>> =
            self.edges.iter().map(|e| e.iter().map(|&v| perm[v]).collect()).collect();
        Hypergraph::new(self.vertex_count, self.uniformity, edges)
    }

    /// True iff some edge contains both `a` and `b`.
    pub fn covers_pair(&self, a: Vertex, b: Vertex) -> bool {
        self.edges.iter().any(|e| e.binary_search(&a).is_ok() && e.binary_search(&b).is_ok())
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, vertex_count: self.vertex_count })
        }
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph(N={}, r={}, {:?})", self.vertex_count, self.uniformity, self.edges)
    }
}

fn check_uniformity(r: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::invalid(format!("uniformity must be at least 2, got {r}")));
    }
    Ok(())
}
