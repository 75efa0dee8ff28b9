//! Maximum bipartite matching (Hopcroft–Karp) and Hall-violator extraction.

use std::collections::VecDeque;

/// Bipartite graph given by left-side adjacency lists into `0..right_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    right_count: usize,
    adjacency: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    /// Panics if an adjacency entry is `>= right_count`.
    pub fn new(right_count: usize, adjacency: Vec<Vec<usize>>) -> Self {
        assert!(
            adjacency.iter().flatten().all(|&r| r < right_count),
            "right vertex out of range"
        );
        BipartiteGraph { right_count, adjacency }
    }

    pub fn left_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn right_count(&self) -> usize {
        self.right_count
    }

    pub fn neighbors(&self, left: usize) -> &[usize] {
        &self.adjacency[left]
    }

    pub fn degree(&self, left: usize) -> usize {
        self.adjacency[left].len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub left_to_right: Vec<Option<usize>>,
    pub right_to_left: Vec<Option<usize>>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.left_to_right.iter().flatten().count()
    }

    pub fn saturates_left(&self) -> bool {
        self.left_to_right.iter().all(Option::is_some)
    }

    /// Matched `(left, right)` pairs in left order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.left_to_right
            .iter()
            .enumerate()
            .filter_map(|(l, r)| r.map(|r| (l, r)))
            .collect()
    }
}

const UNREACHED: usize = usize::MAX;

/// Maximum-cardinality matching. Scans left vertices and their neighbor
/// lists in stored order, so the result is deterministic.
pub fn max_matching(graph: &BipartiteGraph) -> Matching {
    let n_left = graph.left_count();
    let mut left_to_right = vec![None; n_left];
    let mut right_to_left = vec![None; graph.right_count];

    // Greedy seed, then phases of shortest augmenting paths.
    for (l, neighbors) in graph.adjacency.iter().enumerate() {
        if let Some(&r) = neighbors.iter().find(|&&r| right_to_left[r].is_none()) {
            left_to_right[l] = Some(r);
            right_to_left[r] = Some(l);
        }
    }

    let mut dist = vec![UNREACHED; n_left];
    loop {
        if !bfs_layers(graph, &left_to_right, &right_to_left, &mut dist) {
            break;
        }
        let mut next_edge = vec![0usize; n_left];
        let mut augmented = false;
        for l in 0..n_left {
            if left_to_right[l].is_none()
                && augment(graph, l, &mut left_to_right, &mut right_to_left, &dist, &mut next_edge)
            {
                augmented = true;
            }
        }
        if !augmented {
            break;
        }
    }
    Matching { left_to_right, right_to_left }
}

/// Layers free left vertices at distance 0; returns whether some free right
/// vertex is reachable along alternating paths.
fn bfs_layers(
    graph: &BipartiteGraph,
    left_to_right: &[Option<usize>],
    right_to_left: &[Option<usize>],
    dist: &mut [usize],
) -> bool {
    let mut queue = VecDeque::new();
    for (l, m) in left_to_right.iter().enumerate() {
        if m.is_none() {
            dist[l] = 0;
            queue.push_back(l);
        } else {
            dist[l] = UNREACHED;
        }
    }
    let mut found = false;
    while let Some(l) = queue.pop_front() {
        for &r in &graph.adjacency[l] {
            match right_to_left[r] {
                None => found = true,
                Some(next) if dist[next] == UNREACHED => {
                    dist[next] = dist[l] + 1;
                    queue.push_back(next);
                }
                Some(_) => {}
            }
        }
    }
    found
}

fn augment(
    graph: &BipartiteGraph,
    l: usize,
    left_to_right: &mut [Option<usize>],
    right_to_left: &mut [Option<usize>],
    dist: &[usize],
    next_edge: &mut [usize],
) -> bool {
    while next_edge[l] < graph.adjacency[l].len() {
        let r = graph.adjacency[l][next_edge[l]];
        next_edge[l] += 1;
        let ok = match right_to_left[r] {
            None => true,
            Some(next) => {
                dist[next] == dist[l] + 1 && augment(graph, next, left_to_right, right_to_left, dist, next_edge)
            }
        };
        if ok {
            left_to_right[l] = Some(r);
            right_to_left[r] = Some(l);
            return true;
        }
    }
    false
}

/// Given a maximum matching that leaves some left vertex free, returns the
/// left vertices reachable from the first free one by alternating paths.
/// That set `Q` has `|N(Q)| = |Q| - 1`, a Hall violation.
pub fn hall_violator(graph: &BipartiteGraph, matching: &Matching) -> Option<Vec<usize>> {
    let start = matching.left_to_right.iter().position(Option::is_none)?;
    let mut seen_left = vec![false; graph.left_count()];
    let mut seen_right = vec![false; graph.right_count];
    let mut queue = VecDeque::from([start]);
    seen_left[start] = true;
    while let Some(l) = queue.pop_front() {
        for &r in &graph.adjacency[l] {
            if seen_right[r] {
                continue;
            }
            seen_right[r] = true;
            let next = matching.right_to_left[r].expect("matching is maximum, so no augmenting path");
            if !seen_left[next] {
                seen_left[next] = true;
                queue.push_back(next);
            }
        }
    }
    Some((0..graph.left_count()).filter(|&l| seen_left[l]).collect())
}

/// Number of distinct right vertices adjacent to `lefts`.
pub fn neighborhood_size(graph: &BipartiteGraph, lefts: &[usize]) -> usize {
    let mut seen = vec![false; graph.right_count];
    lefts
        .iter()
        .flat_map(|&l| &graph.adjacency[l])
        .filter(|&&r| !std::mem::replace(&mut seen[r], true))
        .count()
}
