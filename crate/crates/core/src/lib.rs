//! Reasoning with attribute implications annotated by relative time points.
//!
//! A formula `{x@-1, y@0} => {z@1}` reads "if `x` held one step ago and `y`
//! holds now, then `z` holds at the next step". The crate provides:
//!
//! - [`timed`]: timed attributes, attribute sets, implications, theories and
//!   the time-shift algebra.
//! - [`textio`]: the `.tai` theory syntax and CSV ingestion of timed data.
//! - [`semantics`]: validity of formulas in finite timed datasets.
//! - [`grounding`]: finite shift-instantiations of theories and classical
//!   (shift-free) closure.
//! - [`closure`]: temporal closure and entailment decision, including the
//!   pseudo-linear closure for predictive theories.
//! - [`proofs`]: proof objects, checking under several rule systems, proof
//!   generation and the deduction-theorem witness.
//! - [`mining`]: rule extraction from timed data and redundancy removal.
//! - [`complexity`]: subset-sum hardness instances and LTL export.

pub mod closure;
pub mod complexity;
mod error;
pub mod grounding;
pub mod mining;
pub mod proofs;
pub mod semantics;
pub mod textio;
pub mod timed;

pub use error::{Error, Result};
pub use timed::{Attr, AttributeSet, Implication, Theory, TimedAttribute};
