//! Pigeonhole principle proofs in DRAT.
//!
//! - [`encoding`]: the standard pairwise PHP(n) formula, the recursive
//!   at-most-one encoding, and the variable/group layouts.
//! - [`proof_ours`]: the O(n³) proof built on the group-chain encoding.
//! - [`proof_cook`]: Cook's O(n⁴) baseline.
//! - [`checker`]: a forward DRAT checker (RUP, then RAT on the first literal).
//! - [`counts`]: exact clause counts for both proofs.
//! - [`dimacs`], [`drat`]: text formats.

pub mod checker;
pub mod counts;
pub mod dimacs;
pub mod drat;
pub mod encoding;
mod error;
pub mod proof_cook;
pub mod proof_ours;
pub mod propagate;
mod types;

pub use checker::{verify, CheckOptions, Checker, RejectReason, Verdict};
pub use dimacs::{emit_dimacs, parse_dimacs};
pub use drat::{emit_drat, parse_drat, DratWriter};
pub use encoding::{php_amo, php_standard, GroupLayout, LayerLayout};
pub use error::Error;
pub use proof_cook::generate_cook;
pub use proof_ours::{generate_ours, GenOptions};
pub use types::{Clause, CnfFormula, LineCounter, LineKind, Literal, Proof, ProofLine, ProofSink, Var};
