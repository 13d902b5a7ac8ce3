//! Exact path counting for small graphs and exhaustive verification of the
//! extremal path counts of nonhamiltonian graphs.
//!
//! The extremal graph throughout is K_{n-1}·K_2, a complete graph on `n-1`
//! vertices with one pendant vertex attached.

pub mod bounds;
pub mod canon;
pub mod cli;
pub mod closure;
pub mod cycles;
pub mod error;
pub mod exact;
pub mod graph;
pub mod graph6;
pub mod paths;
pub mod verify;

pub use bounds::{
    corollary3_value, extremal_attainment_check, ore_bondy_max_size, theorem2_bound,
    theorem2_bound_product_form, BoundQuery,
};
pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use closure::{
    bondy_chvatal_closure, check_lemma5, closure_with_order, is_hamiltonian,
    is_maximally_nonhamiltonian, maximal_nonhamiltonian_completion, ClosureTrace, Lemma5Outcome,
    ScanOrder,
};
pub use cycles::{
    arc_profile, common_paths, enumerate_hamilton_cycles, enumerate_hamilton_cycles_with_first,
    lemma4_count, lemma6_bound, moment_summary, s_k_of_cycle, segment_identity,
    segment_identity_check, xj_distribution, CycleArcProfile, CycleTable, EdgeConfig,
    HamiltonCycle, HamiltonCycleDistribution, MomentSummary, SegmentIdentity,
};
pub use error::{Error, Result};
pub use exact::{factorial, permutation_number, ExactCount};
pub use graph::{complement, complete_graph, edge_count, extremal_graph, Graph};
pub use graph6::{parse_graph6, parse_graph6_lines, write_graph6};
pub use paths::{count_hamilton_cycles, count_hamilton_paths, count_paths, PathLength};
pub use verify::{
    merge_reports, sweep_max_pk, verify_lemma6, verify_theorem1, Claim, Shard, SourceKind,
    SweepSource, VerificationReport, Verdict, Verifier,
};
