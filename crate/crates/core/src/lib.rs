//! Stepping-up constructions for three-colour hypergraph Ramsey lower bounds.
//!
//! A base graph `G` on `n` vertices colours the triples of all `2^n` binary
//! strings. If `G` has no `l`-clique and its complement avoids a finite set
//! of small patterns, the colouring has no monochromatic `(l+1)`-clique.
//! This crate builds that colouring, the patterns, a random search for `G`,
//! verifiers for both the structural and the exhaustive argument, and the
//! tower arithmetic that lifts the result to higher uniformity.

pub mod bounds;
pub mod certificate;
mod error;
pub mod graph;
pub mod hyperverify;
pub mod jgraph;
pub mod limits;
pub mod probsearch;
pub mod stepup;

pub use bounds::{base_bound, step_up, tower_bound, RamseyStatement, TowerBase, TowerExpr};
pub use certificate::{verify_certificate, CertChecks, CertReport, Certificate};
pub use error::{Error, Result};
pub use graph::BaseGraph;
pub use hyperverify::{
    find_mono_clique, find_mono_clique_in_color, structural_check, structural_verify,
    verify_no_mono_clique, CliqueWitness, StructuralOutcome, VerifyReport,
};
pub use jgraph::{
    build_j, build_jpp, canonical_form, enumerate_jpp, extract_delta_sequence, DeltaSequence,
    JppFamily, JppResult,
};
pub use limits::Limits;
pub use probsearch::{
    complement, contains_subgraph, has_clique, sample_graph, sampling_params,
    search_good_base_graph, SearchOutcome, SearchParams,
};
pub use stepup::{color_triple, compare, delta, enumerate_t, rank, TVertex, TripleColor};
