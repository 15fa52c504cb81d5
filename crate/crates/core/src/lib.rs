//! Generalized splines over `Z/mZ` on edge-labeled graphs.
//!
//! A spline assigns a residue to every vertex so that the difference across
//! each edge lies in the ideal generated by the edge label. The splines form
//! a `Z`-module; this crate computes flow-up bases, ranks (minimal generator
//! counts) and explicit minimum generating sets for complete graphs, and
//! checks all of it against brute-force oracles on small instances.
//!
//! ```
//! use flowup_core::{factorize, EdgeLabeledGraph, build_spline_lattice, module_invariants};
//!
//! let ctx = factorize(6).unwrap();
//! let g = EdgeLabeledGraph::new(ctx, 3, &[(1, 2, 2), (1, 3, 3)]).unwrap();
//! let inv = module_invariants(&build_spline_lattice(&g).unwrap()).unwrap();
//! assert_eq!(inv.rank, 2);
//! ```

pub mod arith;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod lattice;
pub mod matrix;
pub mod splines;
pub mod verify;

pub use arith::{factorize, factorize_with_bound, ModulusContext};
pub use constructions::{
    minimum_generating_set, pq_rank, prime_power_unordered, rank_one_pq, son_decreasing,
    son_increasing, star_extension, Certificate, ChainDirection, ChainLabels, GeneratingSet,
    Route, StarMode,
};
pub use error::{Error, Result};
pub use graph::{complete_from_labels, CompleteGraphLabels, Edge, EdgeLabeledGraph};
pub use lattice::{
    build_spline_lattice, flow_up_basis, module_invariants, spans, FlowUpBasisReport,
    ModuleInvariants, SplineLattice,
};
pub use matrix::{hermite_normal_form, smith_normal_form, IntMatrix, SmithDecomposition};
pub use splines::{
    construct_flow_up, is_spline, smallest_leading_entry, FlowUpClass, LeadingEntry, Spline,
    WalkMode,
};
pub use verify::{
    check_flow_up_generators, check_minimum_criterion, enumerate_splines, oracle_rank,
    CheckOutcome, DEFAULT_BUDGET,
};
