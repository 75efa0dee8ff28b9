//! Turán numbers of complete r-uniform Berge hypergraphs.
//!
//! The crate provides uniform hypergraphs in canonical form, the balanced
//! complete partite construction `T_r(N, k)` and its closed-form edge count,
//! Berge-clique detection through bipartite matching on the pair/edge
//! incidence graph, systems of distinct representatives with Hall-violator
//! certificates, and exhaustive checks of the extremal structure at desk
//! scale.

pub mod berge;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod extremal;
pub mod format;
pub mod hypergraph;
pub mod matching;
pub mod sdr;

pub use berge::{
    berge_clique_on_core, contains_berge_clique, incidence_graph, is_berge_free, verify_witness, BergeWitness,
    IncidenceGraph, PairAssignment,
};
pub use constructions::{
    binomial, build_complete, build_expansion, build_turan_partite, turan_count, PartiteStructure,
};
pub use error::{Error, Result};
pub use extremal::{
    brute_force_ex, recognize_complete_partite, saturation_check, verify_theorem_desk, ExtremalSearch,
    SaturationReport, SearchBudget, SearchOptions, TheoremReport,
};
pub use hypergraph::{Hypergraph, Vertex, VertexSet};
pub use matching::{max_matching, BipartiteGraph, Matching};
pub use sdr::{find_sdr, verify_sdr_lemma, HallViolator, LemmaReport, SdrOutcome, SetFamily};
