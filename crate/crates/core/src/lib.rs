//! Reconstruction-algebra quivers of rational surface singularities.
//!
//! Starting from a labelled dual graph of a resolution, the library computes
//! the fundamental and canonical cycles, the Ext table of the simple modules
//! and from it the arrow and relation counts of the reconstruction algebra.
//! A second, purely combinatorial rule set reproduces the arrows for star
//! shaped graphs, and the knitting recursion on Auslander-Reiten quivers
//! re-derives them for the icosahedral groups. The catalog generates the
//! dual graphs of every finite small subgroup of GL(2, C).
//!
//! Exact arithmetic is generic over [`ExactInt`]; the aliases [`Int`],
//! [`Rational`] and [`RationalCycle`] fix the scalar to arbitrary-precision
//! integers.

pub mod catalog;
pub mod error;
pub mod exact;
pub mod graph;
pub mod knitting;
pub mod quiver;
pub mod rules;

use num_bigint::BigInt;
use num_rational::Ratio;

pub use catalog::{dual_graph, expected_quiver, jh_evaluate, jh_expand, validate_params, Family, GroupId};
pub use error::{Error, Result};
pub use exact::ExactInt;
pub use graph::{
    canonical_cycle, canonical_cycle_in, embedding_dimension, fundamental_cycle, is_minimal, pairing,
    rationality_identity_check, validate_graph, Cycle, DualGraph, Issue, ValidationReport, STAR,
};
pub use knitting::{build_i_ar_quiver, cross_check, grid_trace, knit_counts, GridTrace, KnitState, TranslationQuiver};
pub use quiver::{
    build_quiver, emit_dot, ext_table, global_dimension, projective_dimensions, ExtTable, ProjectiveDimensions,
    ReconQuiver,
};
pub use rules::{apply_rules, classify_zf, verify_against_geometric, ZfClass, ZfKind};

/// Arbitrary-precision integer scalar.
pub type Int = BigInt;
/// Exact rational over [`Int`].
pub type Rational = Ratio<Int>;
/// Rational cycle with arbitrary-precision coefficients.
pub type RationalCycle = graph::RationalCycle<Int>;
