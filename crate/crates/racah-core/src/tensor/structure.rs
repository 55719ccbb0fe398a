//! Diagonal embedding, adjoint action, Casimir elements, polarized traces
//! and centralizer membership.

use num_traits::One;

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

use super::element::TensorElement;
use super::monomial::{FactorMonomial, TensorMonomial};
use super::product::Sl2Gen;

/// Diagonal embedding `δ(g) = Σ_a g^(a)`.
pub fn diagonal(gen: Sl2Gen, n: usize) -> TensorElement {
    let mut sum = TensorElement::zero(n);
    for a in 1..=n {
        sum = &sum + &TensorElement::generator(gen.monomial(), a, n).expect("a in range");
    }
    sum
}

/// Adjoint action `g · x = [δ(g), x]`.
pub fn adjoint_action(gen: Sl2Gen, x: &TensorElement) -> TensorElement {
    diagonal(gen, x.n())
        .commutator(x)
        .expect("same factor count by construction")
}

/// `x` commutes with the diagonal embedding iff all three generator actions vanish.
pub fn is_central(x: &TensorElement) -> bool {
    Sl2Gen::ALL
        .iter()
        .all(|&gen| adjoint_action(gen, x).is_zero())
}

/// Casimir element in factor `i`: `C_i = e11^(i)^2 - e11^(i) + e12^(i) e21^(i)`.
pub fn casimir(i: usize, n: usize) -> Result<TensorElement> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    Ok(TensorElement::from_terms(
        n,
        [
            (
                TensorMonomial::generator(FactorMonomial::new(0, 2, 0), i, n),
                Rational::one(),
            ),
            (
                TensorMonomial::generator(FactorMonomial::new(0, 1, 0), i, n),
                int(-1),
            ),
            (
                TensorMonomial::generator(FactorMonomial::new(1, 0, 1), i, n),
                Rational::one(),
            ),
        ],
    ))
}

/// Intermediate Casimir `C_ij`: the Casimir formula with every generator
/// replaced by `e_ab^(i) + e_ab^(j)`.
pub fn intermediate_casimir(i: usize, j: usize, n: usize) -> Result<TensorElement> {
    if i == j {
        return Err(Error::RepeatedIndices(vec![i, j]));
    }
    for index in [i, j] {
        if index == 0 || index > n {
            return Err(Error::IndexOutOfRange { index, n });
        }
    }
    let pair = |gen: Sl2Gen| -> TensorElement {
        let a = TensorElement::generator(gen.monomial(), i, n).expect("index checked");
        let b = TensorElement::generator(gen.monomial(), j, n).expect("index checked");
        &a + &b
    };
    let h = pair(Sl2Gen::E11);
    let e = pair(Sl2Gen::E12);
    let f = pair(Sl2Gen::E21);
    Ok(&(&h.multiply(&h)? - &h) + &e.multiply(&f)?)
}

/// Matrix unit `e_{rc}` as a signed generator, with `e22` rewritten to `-e11`.
fn matrix_unit(row: u8, col: u8) -> (i64, Sl2Gen) {
    match (row, col) {
        (1, 2) => (1, Sl2Gen::E12),
        (2, 1) => (1, Sl2Gen::E21),
        (1, 1) => (1, Sl2Gen::E11),
        (2, 2) => (-1, Sl2Gen::E11),
        _ => unreachable!("matrix indices are 1 or 2"),
    }
}

/// Polarized trace `T^(a_1,...,a_d) = Σ e_{i2 i1}^(a1) e_{i3 i2}^(a2) ... e_{i1 id}^(ad)`,
/// summed over all `i_1..i_d ∈ {1,2}`.
pub fn polarized_trace(indices: &[usize], n: usize) -> Result<TensorElement> {
    let d = indices.len();
    if d < 2 {
        return Err(Error::TraceTooShort(d));
    }
    for &a in indices {
        if a == 0 || a > n {
            return Err(Error::IndexOutOfRange { index: a, n });
        }
    }
    let mut sum = TensorElement::zero(n);
    // Iterate i_1..i_d over {1,2}^d encoded in the bits of `mask`.
    for mask in 0u32..(1 << d) {
        let slot = |t: usize| -> u8 {
            if mask & (1 << t) != 0 {
                2
            } else {
                1
            }
        };
        let mut term = TensorElement::one(n);
        let mut sign = 1i64;
        for (t, &factor) in indices.iter().enumerate() {
            let (s, gen) = matrix_unit(slot((t + 1) % d), slot(t));
            sign *= s;
            term = term.multiply(&TensorElement::generator(gen.monomial(), factor, n)?)?;
        }
        sum = &sum + &term.scale(&int(sign));
    }
    Ok(sum)
}
