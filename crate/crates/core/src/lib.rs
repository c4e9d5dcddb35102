//! Cohomology of homogeneous bundles `∧^{j_k}Q* ⊗ ... ⊗ ∧^{j_1}Q*(t)` on the
//! Lagrangian Grassmannian LG(k) = Sp(2k+2)/P_{k+1}, computed exactly with
//! the Pieri rule and Bott's algorithm, plus exhaustive scans of the
//! splitting-criterion vanishing conditions built on top of it.
//!
//! ```
//! use lgbott::{parse_bundle_expression, bundle_cohomology};
//!
//! let expr = parse_bundle_expression("w6*w5*w4*w3*w3*w2*w1(-9) @ LG(7)").unwrap();
//! let report = bundle_cohomology(&expr).unwrap();
//! assert_eq!(report.aggregate.keys().copied().collect::<Vec<_>>(), vec![24]);
//! ```

pub mod bott;
pub mod bundle;
pub mod cli;
pub mod error;
pub mod lie;
pub mod pieri;
pub mod report;
pub mod scan;

pub use bott::{bott, degree_by_pairing, module_dimension, CohomologyResult};
pub use bundle::{
    bundle_cohomology, critical_twist_window, parse_bundle_expression, twist_scan, weight_of, BundleExpression,
    CohomologyReport, SummandRecord, Twist,
};
pub use error::{Error, Result};
pub use lie::{from_epsilon, pair, positive_roots, rho, to_epsilon, EpsilonVector, Root, RootSystem, Weight};
pub use pieri::{
    conjugate, decompose_wedges, normalize_columns, pieri_wedge, sl_dim, Decomposition, DecompositionCache, Partition,
};
pub use scan::{
    enumerate_conditions, scan_tuple, verify_chain_criterion, verify_criterion, ChainSummary, ConditionTuple, Mode,
    Scanner, Summary, Violation,
};
