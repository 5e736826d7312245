//! Freeness of signed-graphic hyperplane arrangements.
//!
//! A signed graph is a pair of simple graphs (positive and negative edges,
//! possibly overlapping in "double" edges) on vertices `1..=l`. It encodes the
//! arrangement in rank `l` consisting of every coordinate hyperplane `x_i = 0`
//! together with `x_i - x_j = 0` for positive edges and `x_i + x_j = 0` for
//! negative edges. This crate decides whether that arrangement is free, and
//! backs every verdict with checkable evidence:
//!
//! * non-free verdicts carry a witness: a chordless balanced cycle, an induced
//!   unbalanced cycle, or an induced subgraph switching-isomorphic to the
//!   four-vertex obstruction graph;
//! * free verdicts carry a constructive certificate: a link-simplicial
//!   elimination chain, possibly nested inside a tree of modular joins, or
//!   alternatively a divisional chain of restrictions with exact
//!   characteristic-polynomial division at every step.
//!
//! Characteristic polynomials are computed two independent ways (Mobius
//! function over the intersection lattice, and point counts over several
//! finite fields followed by integer interpolation) so each route checks the
//! other.

#![forbid(unsafe_code)]

pub mod arrangement;
pub mod cycle;
pub mod format;
pub mod freeness;
pub mod graph;
pub mod poly;
pub mod recognition;

pub use arrangement::{
    char_poly_finite_field, char_poly_lattice, char_poly_lattice_with_bound, hyperplanes_of,
    intersection_lattice, intersection_lattice_with_bound, point_count_mod_p,
    restrict_to_hyperplane, ArrangementError, Flat, Hyperplane, IntersectionLattice,
    DEFAULT_LATTICE_BOUND,
};
pub use cycle::{
    balanced_chordal_witness, enumerate_cycles, has_balanced_chord, obstruction_witness,
    unbalanced_induced_cycle_witness, ConditionWitness, CycleError, SignedCycle,
};
pub use format::{parse_graph, write_graph, ParseError};
pub use freeness::{
    check_conditions, complete_case_analysis, decide_freeness, divisional_search,
    m_class_certificate, verify_certificate, verify_certificate_detailed, Certificate,
    CompleteCaseReport, DivisionalSearch, FreenessError, FreenessVerdict, JoinNode, VerdictBasis,
};
pub use graph::{
    switching_equivalence_witness, EdgeTag, GraphError, Sign, SignedGraph, SimpleGraph,
    SwitchingFunction,
};
pub use poly::{poly_divides, CharPoly};
pub use recognition::{
    is_link_elimination_ordering, is_link_simplicial, is_perfect_elimination_ordering,
    is_threshold, link_elimination_ordering, perfect_elimination_ordering, EliminationOrdering,
    OrderingKind,
};
