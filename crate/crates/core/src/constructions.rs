//! The named extremal hypergraphs: complete r-graphs, the balanced complete
//! k-partite r-graph `T_r(N, k)` with its edge count `t_r(N, k)`, and the
//! expansion `H_n^(r)` of the complete graph `K_n`.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};

/// An ordered partition of `0..N` into parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartiteStructure {
    pub parts: Vec<Vec<Vertex>>,
}

impl PartiteStructure {
    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }

    /// Part sizes differ by at most one.
    pub fn is_balanced(&self) -> bool {
        match self.parts.iter().map(Vec::len).minmax().into_option() {
            Some((lo, hi)) => hi - lo <= 1,
            None => true,
        }
    }

    /// Returns `part_of[v]` for every covered vertex.
    pub fn membership(&self, vertex_count: usize) -> Vec<Option<usize>> {
        let mut part_of = vec![None; vertex_count];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                if v < vertex_count {
                    part_of[v] = Some(i);
                }
            }
        }
        part_of
    }

    /// Same partition up to reordering of parts and of vertices inside them.
    pub fn same_partition(&self, other: &PartiteStructure) -> bool {
        let norm = |p: &PartiteStructure| {
            let mut parts: Vec<Vec<Vertex>> = p
                .parts
                .iter()
                .map(|part| {
                    let mut part = part.clone();
                    part.sort_unstable();
                    part
                })
                .collect();
            parts.sort();
            parts
        };
        norm(self) == norm(other)
    }
}

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) after each step.
        acc = acc
            .checked_mul(u128::from(n - i))
            .ok_or(Error::Overflow("binomial coefficient"))?
            / u128::from(i + 1);
    }
    Ok(acc)
}

/// `C(a, b)` over signed arguments: zero when `b < 0` or `a < b`.
fn binomial_signed(a: i64, b: i64) -> Result<u128> {
    if b < 0 || a < b {
        return Ok(0);
    }
    binomial(a as u64, b as u64)
}

/// Splits `N = l*k + j` with `1 <= j <= k`, the convention the closed form
/// for `t_r(N, k)` is written in. Parts: `j` of size `l + 1`, `k - j` of size `l`.
pub fn part_layout(vertex_count: usize, parts: usize) -> (usize, usize) {
    let base = (vertex_count - 1) / parts;
    (base, vertex_count - base * parts)
}

/// `t_r(N, k) = sum_{i=0}^{r} l^{r-i} C(j, i) C(k-i, r-i)` with `N = l*k + j`,
/// `1 <= j <= k`, evaluated in exact integer arithmetic.
pub fn turan_count(vertex_count: usize, parts: usize, uniformity: usize) -> Result<u128> {
    if vertex_count == 0 || parts == 0 {
        return Err(Error::invalid("turan_count needs N >= 1 and k >= 1"));
    }
    let (base, larger) = part_layout(vertex_count, parts);
    let (l, j, k) = (base as u128, larger as i64, parts as i64);
    let mut total: u128 = 0;
    for i in 0..=uniformity as i64 {
        let power = u32::try_from(uniformity as i64 - i).map_err(|_| Error::Overflow("turan_count"))?;
        let term = l
            .checked_pow(power)
            .and_then(|p| p.checked_mul(binomial_signed(j, i).ok()?))
            .and_then(|p| p.checked_mul(binomial_signed(k - i, uniformity as i64 - i).ok()?))
            .ok_or(Error::Overflow("turan_count"))?;
        total = total.checked_add(term).ok_or(Error::Overflow("turan_count"))?;
    }
    Ok(total)
}

/// `T_r(N, k)`: the complete r-uniform k-partite hypergraph on `N` vertices
/// with balanced parts. The larger parts come first and take the lowest
/// vertex indices.
pub fn build_turan_partite(
    vertex_count: usize,
    parts: usize,
    uniformity: usize,
) -> Result<(Hypergraph, PartiteStructure)> {
    if vertex_count == 0 || parts == 0 {
        return Err(Error::invalid("build_turan_partite needs N >= 1 and k >= 1"));
    }
    let (base, larger) = part_layout(vertex_count, parts);
    let mut layout = Vec::with_capacity(parts);
    let mut next = 0;
    for i in 0..parts {
        let size = if i < larger { base + 1 } else { base };
        layout.push((next..next + size).collect::<Vec<_>>());
        next += size;
    }
    debug_assert_eq!(next, vertex_count);
    let structure = PartiteStructure { parts: layout };
    let part_of = structure.membership(vertex_count);

    // Parts are contiguous index ranges, so a sorted tuple hits each part at
    // most once iff consecutive members lie in different parts.
    let edges = (0..vertex_count)
        .combinations(uniformity)
        .filter(|e| e.windows(2).all(|w| part_of[w[0]] != part_of[w[1]]))
        .collect();
    Ok((Hypergraph::from_canonical(vertex_count, uniformity, edges), structure))
}

/// `K_N^(r)`, all r-subsets of `0..N`.
pub fn build_complete(vertex_count: usize, uniformity: usize) -> Result<Hypergraph> {
    let empty = Hypergraph::empty(vertex_count, uniformity)?;
    let edges = (0..vertex_count).combinations(uniformity).collect();
    Ok(Hypergraph::from_canonical(empty.vertex_count(), uniformity, edges))
}

/// `H_n^(r)`: every edge of the complete graph `K_n` on core vertices
/// `0..n` is enlarged by `r - 2` fresh vertices. The fresh vertices for the
/// pairs are allocated in lexicographic pair order starting at index `n`.
pub fn build_expansion(core_size: usize, uniformity: usize) -> Result<Hypergraph> {
    if core_size < 2 || uniformity < 3 {
        return Err(Error::invalid("build_expansion needs n >= 2 and r >= 3"));
    }
    let extra = uniformity - 2;
    let pairs = core_size * (core_size - 1) / 2;
    let vertex_count = pairs
        .checked_mul(extra)
        .and_then(|x| x.checked_add(core_size))
        .ok_or(Error::Overflow("expansion vertex count"))?;
    let mut fresh = core_size;
    let mut edges: Vec<Vec<Vertex>> = (0..core_size)
        .tuple_combinations()
        .map(|(a, b)| {
            let mut e = vec![a, b];
            e.extend(fresh..fresh + extra);
            fresh += extra;
            e
        })
        .collect();
    // Fresh vertices exceed every core index, so each tuple is already sorted.
    edges.sort_unstable();
    Ok(Hypergraph::from_canonical(vertex_count, uniformity, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(13, 3).unwrap(), 286);
        assert_eq!(binomial(2, 3).unwrap(), 0);
        assert_eq!(binomial(0, 0).unwrap(), 1);
        assert_eq!(binomial(100, 50).unwrap(), 100891344545564193334812497256);
        assert!(matches!(binomial(300, 150), Err(Error::Overflow(_))));
    }

    #[test]
    fn layout_follows_one_based_remainder() {
        assert_eq!(part_layout(13, 12), (1, 1));
        assert_eq!(part_layout(12, 12), (0, 12));
        assert_eq!(part_layout(24, 12), (1, 12));
        assert_eq!(part_layout(6, 3), (1, 3));
        assert_eq!(part_layout(7, 3), (2, 1));
    }

    #[test]
    fn turan_count_examples() {
        assert_eq!(turan_count(6, 3, 3).unwrap(), 8);
        assert_eq!(turan_count(13, 12, 3).unwrap(), 275);
        assert_eq!(turan_count(6, 3, 2).unwrap(), 12);
        for n in 1..30 {
            assert_eq!(turan_count(n, 2, 3).unwrap(), 0);
        }
        assert!(turan_count(0, 3, 3).is_err());
        assert!(turan_count(3, 0, 3).is_err());
    }

    #[test]
    fn turan_partite_examples() {
        let (h, p) = build_turan_partite(13, 12, 3).unwrap();
        assert_eq!(h.edge_count(), 275);
        assert_eq!(p.parts[0], vec![0, 1]);
        assert_eq!(p.part_sizes()[1..], [1; 11]);

        let (h, p) = build_turan_partite(6, 3, 3).unwrap();
        assert_eq!(h.edge_count(), 8);
        assert_eq!(p.parts, vec![vec![0, 1], vec![2, 3], vec![4, 5]]);

        for n in 1..9 {
            let (h, _) = build_turan_partite(n, n, 3).unwrap();
            assert_eq!(h, build_complete(n, 3).unwrap());
        }
    }

    #[test]
    fn complete_examples() {
        assert_eq!(build_complete(5, 3).unwrap().edge_count(), 10);
        assert_eq!(build_complete(2, 3).unwrap().edge_count(), 0);
        assert_eq!(build_complete(13, 3).unwrap().edge_count(), 286);
    }

    #[test]
    fn expansion_shape() {
        let h = build_expansion(4, 3).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count()), (10, 6));
        let h = build_expansion(2, 3).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count()), (3, 1));
        let h = build_expansion(5, 4).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count()), (25, 10));
        for v in 0..h.vertex_count() {
            let expected = if v < 5 { 4 } else { 1 };
            assert_eq!(h.degree(v).unwrap(), expected, "vertex {v}");
        }
        assert!(build_expansion(1, 3).is_err());
        assert!(build_expansion(4, 2).is_err());
    }
}
