//! Symbolic layer for words in the generators `P_ij`, `F_ijk`.
//!
//! Symbols are index-normalized (`P_ij = P_ji`, `F_ijk = -F_jik = F_jki`) but
//! words are kept verbatim otherwise: verification happens in the tensor
//! image, so no symbolic normal form beyond per-symbol normalization is
//! imposed.

mod elements;
mod eval;
mod expr;
mod matrix;
mod relations;
mod symbol;

pub use elements::{build_q, build_w, build_w_expanded, build_x, build_x_expanded, build_y, build_z};
pub use eval::eval_in_tensor;
pub use expr::RacahExpr;
pub use matrix::{sym_det, SymbolMatrix};
pub use relations::{
    relation_catalogue, relation_lhs, relation_suite, suite_summary, verify_relation, RelationId,
    RelationReport, RelationTag, SuiteSummary,
};
pub use symbol::{RacahSymbol, SymbolKind};
