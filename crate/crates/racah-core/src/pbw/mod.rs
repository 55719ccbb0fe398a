//! Explicit PBW bases of the centralizer `Z_n(sl2)` for `n = 2, 3, 4`.
//!
//! Basis monomials are an optional single `F` prefix times ordered `P`
//! powers, one family per admissible `F` (plus the `F`-free family). Counts
//! per degree must reproduce the Hilbert-Poincaré series coefficients, and
//! exact rank computation of the images in `gr U(sl2)^⊗n` certifies linear
//! independence degree by degree.

mod basis;
mod rank;

pub use basis::{count_by_degree, enumerate_basis, families, verify_counts, BasisFamily, BasisMonomial};
pub use rank::{ambient_dimension, decompose_in_span, independence_rank, RankCertificate, SpanChecker, DEFAULT_CELL_BUDGET};
