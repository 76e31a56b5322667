//! Finite ordered semigroups: validation, ideals and Green's relations,
//! regularity, right inverse and Clifford classification, semilattice
//! congruences, power semigroups, exhaustive enumeration, and theorem checks.
//!
//! ```
//! use ordsemi::{format, classify};
//!
//! let s = format::parse("osg v1\nelements: a e f\ntable:\na e f\na e f\na e f\norder:\na <= e\na <= f\n").unwrap();
//! let report = classify(&s);
//! assert!(report.holds("right_inverse"));
//! assert!(!report.holds("left_clifford"));
//! ```

pub mod classify;
pub mod cli;
pub mod config;
pub mod congruence;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod ideals;
pub mod predicate;
pub mod regularity;
pub mod relation;
pub mod semigroup;
pub mod set;
pub mod verdict;
pub mod verify;

pub use classify::{classify, is_right_inverse, ClassificationReport, Classifier};
pub use config::{Limits, Readings};
pub use error::{Error, Result};
pub use ideals::{green_relation, principal_ideal, GreenKind, Side};
pub use relation::EquivalenceRelation;
pub use semigroup::{validate, Diagnostic, DiagnosticKind, Diagnostics, OrderedSemigroup};
pub use set::ElementSet;
pub use verdict::{Verdict, Witness};
pub use verify::{theorem_suite, TheoremId, TheoremReport, TheoremVerdict};
