//! Exact truth-table minimization for a family of boolean computation
//! models, plus instance generators for two NP-hardness reductions.

pub mod bp;
pub mod error;
pub mod formulas;
pub mod gf2;
pub mod hardness;
pub mod mlpoly;
pub mod par;
pub mod trees;
pub mod truth_table;

pub use error::{Error, Reject, Result};
pub use truth_table::{CubeRestriction, PartialTruthTable, TruthTable};
