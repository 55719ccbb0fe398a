//! The Hilbert-Poincaré series of the centralizer `Z_n(sl2)` and the
//! combinatorics of its numerator.
//!
//! The series is computed by three independent routes — the closed form
//! `P_r(t)/(1-t^2)^{3(r+1)}`, the constant-term extraction from the graded
//! `SL(2)` character, and the direct binomial expansion — which must agree
//! coefficientwise. All coefficients are exact integers (they count graded
//! dimensions); a non-integer intermediate anywhere is a bug and raises an
//! error.

mod combinatorics;
mod hp;
mod laurent;
mod multi;
mod poly;
mod truncated;

pub use combinatorics::{binomial, catalan, check_gould_identity, riordan, riordan_binomial_transform};
pub use hp::{
    check_palindrome, check_riordan_expansion, closed_form_series, constant_term_series, p_poly,
    q_poly, q_poly_constant_term, tilde_formula_series,
};
pub use laurent::LaurentSeriesInY;
pub use multi::{multigraded_series, MultiSeries};
pub use poly::IntPolynomial;
pub use truncated::TruncatedSeries;
