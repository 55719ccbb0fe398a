//! Exact symbolic computation in `U(sl2)^⊗n` and the Racah algebra.
//!
//! The crate has four layers:
//!
//! - [`tensor`]: arbitrary-precision rational arithmetic in the universal
//!   enveloping algebra `U(sl2)^⊗n`, with PBW normal ordering, the diagonal
//!   embedding, the adjoint action, Casimir elements and polarized traces.
//! - [`racah`]: the symbolic algebra on generators `P_ij`, `F_ijk`, the
//!   central/null elements `Q_n, w, x, y, z`, the full relation catalogue,
//!   and evaluation into `U(sl2)^⊗n` through `P_ab ↦ T^(a,b)`,
//!   `F_ijk ↦ -T^(i,j,k)`.
//! - [`series`]: the Hilbert-Poincaré series of the centralizer `Z_n(sl2)`
//!   computed by three independent routes, plus the Catalan/Riordan
//!   combinatorics attached to its numerator.
//! - [`pbw`]: explicit PBW bases of `Z_n(sl2)` for `n = 2, 3, 4`, counted
//!   against the series and certified linearly independent by exact rank
//!   computation.
//!
//! All coefficients are exact rationals; there is no floating point anywhere.

pub mod error;
pub mod pbw;
pub mod racah;
pub mod rational;
pub mod series;
pub mod tensor;

pub use error::{Error, Result};
pub use rational::Rational;
