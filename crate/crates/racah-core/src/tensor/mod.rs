//! Exact arithmetic in `U(sl2)^⊗n`.
//!
//! Each tensor factor is spanned by PBW monomials `e12^a e11^b e21^c`
//! (`e22` is eliminated as `-e11` at construction time). Multiplication
//! normal-orders eagerly, so equality of elements is equality of canonical
//! forms. Coefficients are exact rationals throughout.

mod element;
mod monomial;
mod product;
mod structure;

pub use element::TensorElement;
pub use monomial::{FactorMonomial, TensorMonomial};
pub use product::Sl2Gen;
pub use structure::{
    adjoint_action, casimir, diagonal, intermediate_casimir, is_central, polarized_trace,
};
