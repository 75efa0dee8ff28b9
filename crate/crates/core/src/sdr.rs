//! Systems of distinct representatives and the union bound for SDR-free
//! families of triples through a common apex.

use std::collections::BTreeMap;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructions::binomial;
use crate::error::{Error, Result};
use crate::matching::{hall_violator, max_matching, neighborhood_size, BipartiteGraph};

/// Opaque set-family element as it appears in set-family JSON.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Element {
    Int(i64),
    Str(String),
}

/// An ordered family `A_1, .., A_m`. Repeated elements inside one set are
/// collapsed since each `A_i` is a set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetFamily<T> {
    pub sets: Vec<Vec<T>>,
}

impl<T: Ord + Clone> SetFamily<T> {
    pub fn new(sets: Vec<Vec<T>>) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::invalid("a set family needs at least one set"));
        }
        let sets = sets
            .into_iter()
            .map(|mut s| {
                s.sort();
                s.dedup();
                s
            })
            .collect();
        Ok(SetFamily { sets })
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// `|A_{i_1} ∪ .. ∪ A_{i_q}|`.
    pub fn union_size(&self, indices: &[usize]) -> usize {
        let mut all: Vec<&T> = indices.iter().flat_map(|&i| &self.sets[i]).collect();
        all.sort();
        all.dedup();
        all.len()
    }

    /// Indices-versus-elements incidence graph, with the element universe in
    /// sorted order.
    pub fn incidence(&self) -> (BipartiteGraph, Vec<T>) {
        let mut ids: BTreeMap<&T, usize> = BTreeMap::new();
        for x in self.sets.iter().flatten() {
            let next = ids.len();
            ids.entry(x).or_insert(next);
        }
        // Renumber in sorted order for determinism independent of set order.
        let universe: Vec<T> = ids.keys().map(|&x| x.clone()).collect();
        for (i, id) in ids.values_mut().enumerate() {
            *id = i;
        }
        let adjacency = self.sets.iter().map(|s| s.iter().map(|x| ids[x]).collect()).collect();
        (BipartiteGraph::new(universe.len(), adjacency), universe)
    }
}

/// Index set `Q` with `|⋃_{i∈Q} A_i| < |Q|`. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HallViolator {
    pub indices: Vec<usize>,
    pub union_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SdrOutcome<T> {
    /// `representatives[i] ∈ A_i`, pairwise distinct, in original index order.
    Representatives(Vec<T>),
    Violator(HallViolator),
}

impl<T> SdrOutcome<T> {
    pub fn is_sdr(&self) -> bool {
        matches!(self, SdrOutcome::Representatives(_))
    }
}

/// Finds an SDR through a maximum matching of indices into elements, or
/// extracts a Hall violator from the alternating-path closure of an
/// unmatched index.
pub fn find_sdr<T: Ord + Clone>(family: &SetFamily<T>) -> SdrOutcome<T> {
    let (graph, universe) = family.incidence();
    let matching = max_matching(&graph);
    match hall_violator(&graph, &matching) {
        None => SdrOutcome::Representatives(
            matching
                .left_to_right
                .iter()
                .map(|r| universe[r.expect("saturated")].clone())
                .collect(),
        ),
        Some(indices) => {
            let union_size = neighborhood_size(&graph, &indices);
            debug_assert!(union_size < indices.len());
            SdrOutcome::Violator(HallViolator { indices, union_size })
        }
    }
}

/// The two family shapes enumerated by [`verify_sdr_lemma`].
///
/// With apex `x` and `U = {u_1, .., u_m}`, each `A_i` is a subset of the
/// `m - 1` triples `{x, u_i, u_k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyShape {
    /// Every `A_i` chosen independently: `2^((m-1) m)` families.
    Literal,
    /// `{x, u_i, u_k} ∈ A_i` iff `{x, u_i, u_k} ∈ A_k`, i.e. the sets are the
    /// links of `x` in a 3-graph: one family per graph on `U`, `2^C(m,2)` in all.
    EdgeConsistent,
}

/// A family in the lemma's shape: `sets[i]` lists pairs `(a, b)`, each
/// standing for the triple `{x, u_a, u_b}`. Indices are 0-based.
pub type PairFamily = Vec<Vec<(usize, usize)>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeSummary {
    pub shape: FamilyShape,
    pub families_checked: u64,
    pub no_sdr_families: u64,
    pub max_union_without_sdr: usize,
    pub bound_violations: u64,
    /// No-SDR families whose union equals the bound.
    pub equality_families: u64,
    /// Equality families matching the characterization after sorting by size.
    pub equality_matching_characterization: u64,
    /// Families of the characterized form, and how many of them are no-SDR at the bound.
    pub characterized_families: u64,
    pub characterized_at_bound: u64,
    pub first_bound_violation: Option<PairFamily>,
    pub first_characterization_mismatch: Option<PairFamily>,
}

impl ShapeSummary {
    pub fn bound_holds(&self) -> bool {
        self.bound_violations == 0
    }

    /// Equality occurs exactly for the characterized families.
    pub fn characterization_holds(&self) -> bool {
        self.equality_families == self.equality_matching_characterization
            && self.characterized_families > 0
            && self.characterized_at_bound == self.characterized_families
    }

    pub fn holds(&self) -> bool {
        self.bound_holds() && self.characterization_holds()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub m: usize,
    /// `C(m-1, 2)`.
    pub bound: usize,
    /// Only enumerated for `m = 5`.
    pub literal: Option<ShapeSummary>,
    pub edge_consistent: ShapeSummary,
}

/// Exhaustively checks the union bound `|⋃ A_i| <= C(m-1, 2)` for SDR-free
/// families of triples through a common apex, and the characterization of
/// equality (`A_1 = ∅` and every other `A_i` holds all triples avoiding
/// `u_1`, after ordering by set size).
///
/// Both shapes are enumerated: the literal one, where the `A_i` are chosen
/// independently, and the edge-consistent one in which the sets arise as
/// links of a fixed 3-graph. The literal shape is only tractable for `m = 5`.
pub fn verify_sdr_lemma(m: usize) -> Result<LemmaReport> {
    if !(5..=7).contains(&m) {
        return Err(Error::invalid(format!("lemma verification supports 5 <= m <= 7, got {m}")));
    }
    let pairs = PairIndex::new(m);
    let bound = binomial(m as u64 - 1, 2)? as usize;

    let literal = (m == 5).then(|| {
        let per_set = 1u64 << (m - 1);
        let total = per_set.pow(m as u32);
        summarize(FamilyShape::Literal, total, bound, &pairs, |idx| {
            let mut rest = idx;
            (0..m)
                .map(|i| {
                    let choice = rest % per_set;
                    rest /= per_set;
                    pairs.link_subset(i, choice)
                })
                .collect()
        })
    });

    let edge_consistent = summarize(FamilyShape::EdgeConsistent, 1 << pairs.len(), bound, &pairs, |graph| {
        (0..m).map(|i| pairs.link_mask(i) & graph).collect()
    });

    Ok(LemmaReport { m, bound, literal, edge_consistent })
}

/// Dense numbering of the pairs `{i, k}` of `0..m`; a pair stands for the triple `{x, u_i, u_k}`.
struct PairIndex {
    m: usize,
    ids: Vec<Vec<usize>>,
    pairs: Vec<(usize, usize)>,
}

impl PairIndex {
    fn new(m: usize) -> Self {
        let mut ids = vec![vec![usize::MAX; m]; m];
        let pairs: Vec<(usize, usize)> = (0..m).tuple_combinations().collect();
        for (id, &(i, k)) in pairs.iter().enumerate() {
            ids[i][k] = id;
            ids[k][i] = id;
        }
        PairIndex { m, ids, pairs }
    }

    fn len(&self) -> usize {
        self.pairs.len()
    }

    /// The admissible triples for `A_i`, as a mask over pair ids.
    fn link_mask(&self, i: usize) -> u64 {
        (0..self.m).filter(|&k| k != i).fold(0, |acc, k| acc | 1 << self.ids[i][k])
    }

    /// Subset of `A_i`'s admissible triples selected by the bits of `choice`,
    /// the t-th bit choosing the t-th other index in increasing order.
    fn link_subset(&self, i: usize, choice: u64) -> u64 {
        (0..self.m)
            .filter(|&k| k != i)
            .enumerate()
            .filter(|(t, _)| choice >> t & 1 == 1)
            .fold(0, |acc, (_, k)| acc | 1 << self.ids[i][k])
    }

    fn decode(&self, family: &[u64]) -> PairFamily {
        family
            .iter()
            .map(|&mask| (0..self.len()).filter(|&b| mask >> b & 1 == 1).map(|b| self.pairs[b]).collect())
            .collect()
    }

    /// After a stable sort by size the first set is empty and every other
    /// `A_i` is exactly the triples through `u_i` avoiding that first index.
    fn is_characterized(&self, family: &[u64]) -> bool {
        let first = (0..family.len())
            .min_by_key(|&i| family[i].count_ones())
            .expect("non-empty family");
        family[first] == 0
            && (0..family.len())
                .filter(|&i| i != first)
                .all(|i| family[i] == self.link_mask(i) & !(1 << self.ids[i][first]))
    }
}

#[derive(Default)]
struct Tally {
    families: u64,
    no_sdr: u64,
    max_union: usize,
    violations: u64,
    equality: u64,
    equality_characterized: u64,
    characterized: u64,
    characterized_at_bound: u64,
    first_violation: Option<u64>,
    first_mismatch: Option<u64>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.families += other.families;
        self.no_sdr += other.no_sdr;
        self.max_union = self.max_union.max(other.max_union);
        self.violations += other.violations;
        self.equality += other.equality;
        self.equality_characterized += other.equality_characterized;
        self.characterized += other.characterized;
        self.characterized_at_bound += other.characterized_at_bound;
        self.first_violation = min_some(self.first_violation, other.first_violation);
        self.first_mismatch = min_some(self.first_mismatch, other.first_mismatch);
        self
    }
}

fn min_some(a: Option<u64>, b: Option<u64>) -> Option<u64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn summarize(
    shape: FamilyShape,
    total: u64,
    bound: usize,
    pairs: &PairIndex,
    family_at: impl Fn(u64) -> Vec<u64> + Sync,
) -> ShapeSummary {
    let tally = (0..total)
        .into_par_iter()
        .fold(Tally::default, |mut t, idx| {
            let family = family_at(idx);
            t.families += 1;
            let characterized = pairs.is_characterized(&family);
            t.characterized += u64::from(characterized);

            let sets: Vec<Vec<u32>> = family
                .iter()
                .map(|&mask| (0..64).filter(|b| mask >> b & 1 == 1).collect())
                .collect();
            let has_sdr = find_sdr(&SetFamily { sets }).is_sdr();
            if has_sdr {
                return t;
            }
            let union = family.iter().fold(0u64, |acc, s| acc | s).count_ones() as usize;
            t.no_sdr += 1;
            t.max_union = t.max_union.max(union);
            if union > bound {
                t.violations += 1;
                t.first_violation = min_some(t.first_violation, Some(idx));
            }
            if union == bound {
                t.equality += 1;
                if characterized {
                    t.equality_characterized += 1;
                    t.characterized_at_bound += 1;
                } else {
                    t.first_mismatch = min_some(t.first_mismatch, Some(idx));
                }
            }
            t
        })
        .reduce(Tally::default, Tally::merge);

    ShapeSummary {
        shape,
        families_checked: tally.families,
        no_sdr_families: tally.no_sdr,
        max_union_without_sdr: tally.max_union,
        bound_violations: tally.violations,
        equality_families: tally.equality,
        equality_matching_characterization: tally.equality_characterized,
        characterized_families: tally.characterized,
        characterized_at_bound: tally.characterized_at_bound,
        first_bound_violation: tally.first_violation.map(|i| pairs.decode(&family_at(i))),
        first_characterization_mismatch: tally.first_mismatch.map(|i| pairs.decode(&family_at(i))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(sets: Vec<Vec<i32>>) -> SetFamily<i32> {
        SetFamily::new(sets).unwrap()
    }

    #[test]
    fn singletons_have_sdr() {
        let out = find_sdr(&family(vec![vec![1], vec![2], vec![3]]));
        assert_eq!(out, SdrOutcome::Representatives(vec![1, 2, 3]));
    }

    #[test]
    fn empty_set_violates_hall() {
        let out = find_sdr(&family(vec![vec![], vec![1, 2]]));
        assert_eq!(out, SdrOutcome::Violator(HallViolator { indices: vec![0], union_size: 0 }));
    }

    #[test]
    fn crowded_sets_violate_hall() {
        let f = family(vec![vec![1, 2], vec![5], vec![1, 2], vec![2, 1], vec![3, 4]]);
        match find_sdr(&f) {
            SdrOutcome::Violator(v) => {
                assert!(v.union_size < v.indices.len());
                assert_eq!(v.union_size, f.union_size(&v.indices));
            }
            other => panic!("expected violator, got {other:?}"),
        }
    }

    #[test]
    fn sdr_reported_in_original_order() {
        let f = family(vec![vec![3, 9], vec![3], vec![9, 4]]);
        let SdrOutcome::Representatives(reps) = find_sdr(&f) else { panic!("has an SDR") };
        assert_eq!(reps[1], 3);
        for (i, x) in reps.iter().enumerate() {
            assert!(f.sets[i].contains(x));
        }
        let mut sorted = reps.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 3);
    }

    #[test]
    fn string_and_integer_elements() {
        let f: SetFamily<Element> = serde_json::from_str(r#"{"sets":[["a",1],["a"],[1,"b"]]}"#).unwrap();
        assert!(find_sdr(&SetFamily::new(f.sets).unwrap()).is_sdr());
    }

    #[test]
    fn lemma_equality_family_at_m5() {
        // A_1 empty, A_i = triples {x, u_i, u_k} with k ∉ {1, i}.
        let pairs = PairIndex::new(5);
        let fam: Vec<u64> = (0..5)
            .map(|i| if i == 0 { 0 } else { pairs.link_mask(i) & !(1 << pairs.ids[i][0]) })
            .collect();
        assert!(pairs.is_characterized(&fam));
        let union = fam.iter().fold(0u64, |a, s| a | s).count_ones();
        assert_eq!(union, 6);
        let sets = fam.iter().map(|&m| (0..10).filter(|b| m >> b & 1 == 1).collect()).collect();
        match find_sdr(&SetFamily::<u32>::new(sets).unwrap()) {
            SdrOutcome::Violator(v) => assert_eq!(v, HallViolator { indices: vec![0], union_size: 0 }),
            other => panic!("expected violator, got {other:?}"),
        }
    }

    #[test]
    fn link_subsets_cover_link() {
        let pairs = PairIndex::new(5);
        for i in 0..5 {
            assert_eq!(pairs.link_subset(i, 0b1111), pairs.link_mask(i));
            assert_eq!(pairs.link_subset(i, 0), 0);
            assert_eq!(pairs.link_mask(i).count_ones(), 4);
        }
    }

    #[test]
    fn rejects_out_of_range_m() {
        assert!(verify_sdr_lemma(4).is_err());
        assert!(verify_sdr_lemma(8).is_err());
    }
}
