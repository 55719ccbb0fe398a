//! The distinguished elements `Q_n`, `w_ijk`, `x_ijkl`, `y_ijklm`, `z_ijklmp`.
//!
//! `Q_n`, `w` and `x` are central; `y` and `z` are identically null. The
//! quotient by `w = x = 0` is what maps isomorphically onto the centralizer.

use crate::error::{Error, Result};
use crate::rational::rat;

use super::expr::RacahExpr;
use super::matrix::{sym_det, SymbolMatrix};

fn check_distinct(indices: &[usize], n: usize) -> Result<()> {
    for (pos, &a) in indices.iter().enumerate() {
        if a == 0 || a > n {
            return Err(Error::IndexOutOfRange { index: a, n });
        }
        if indices[pos + 1..].contains(&a) {
            return Err(Error::RepeatedIndices(indices.to_vec()));
        }
    }
    Ok(())
}

/// `Q_n = Σ_{i<j} P_ij`.
pub fn build_q(n: usize) -> Result<RacahExpr> {
    if n < 2 {
        return Err(Error::InsufficientIndices {
            tag: "Q_n",
            needed: 2,
            n,
        });
    }
    let mut q = RacahExpr::zero(n);
    for i in 1..=n {
        for j in i + 1..=n {
            q = &q + &RacahExpr::p(n, i, j)?;
        }
    }
    Ok(q)
}

/// `w_ijk = F_ijk^2 + 1/2 det(P_ijk^ijk)
///          - 1/3 ({P_ij,P_ik} + {P_ij,P_jk} + {P_ik,P_jk}
///                 + P_ij P_kk + P_ik P_jj + P_jk P_ii)`.
///
/// The third anticommutator is printed without a comma in the source formula;
/// the anticommutator reading is the one under which `w` evaluates to zero.
pub fn build_w(n: usize, i: usize, j: usize, k: usize) -> Result<RacahExpr> {
    check_distinct(&[i, j, k], n)?;
    let p = |a: usize, b: usize| RacahExpr::p(n, a, b);
    let f = RacahExpr::f(n, i, j, k)?;
    let det = sym_det(&SymbolMatrix::p_matrix(n, &[i, j, k], &[i, j, k])?);
    let brackets = &(&p(i, j)?.anticommutator(&p(i, k)?) + &p(i, j)?.anticommutator(&p(j, k)?))
        + &p(i, k)?.anticommutator(&p(j, k)?);
    let diagonal_terms = &(&(&p(i, j)? * &p(k, k)?) + &(&p(i, k)? * &p(j, j)?))
        + &(&p(j, k)? * &p(i, i)?);
    Ok(&(&(&f * &f) + &det.scale(&rat(1, 2)))
        - &(&brackets + &diagonal_terms).scale(&rat(1, 3)))
}

/// `x_ijkl = F_ijk F_jkl + 1/2 det(P_ijk^jkl) + 1/2 (F_ijl + F_ikl) P_jk
///           - 1/3 (P_ij P_kl + P_ik P_jl + P_il P_jk)`.
pub fn build_x(n: usize, i: usize, j: usize, k: usize, l: usize) -> Result<RacahExpr> {
    check_distinct(&[i, j, k, l], n)?;
    let p = |a: usize, b: usize| RacahExpr::p(n, a, b);
    let det = sym_det(&SymbolMatrix::p_matrix(n, &[i, j, k], &[j, k, l])?);
    let ff = &RacahExpr::f(n, i, j, k)? * &RacahExpr::f(n, j, k, l)?;
    let fp = &(&RacahExpr::f(n, i, j, l)? + &RacahExpr::f(n, i, k, l)?) * &p(j, k)?;
    let ppp = &(&(&p(i, j)? * &p(k, l)?) + &(&p(i, k)? * &p(j, l)?)) + &(&p(i, l)? * &p(j, k)?);
    Ok(&(&(&ff + &det.scale(&rat(1, 2))) + &fp.scale(&rat(1, 2))) - &ppp.scale(&rat(1, 3)))
}

/// `y_ijklm = F_ijk F_klm + 1/2 det(P_ijk^klm) + 1/2 (F_ijl P_km - F_ijm P_kl)`.
pub fn build_y(n: usize, i: usize, j: usize, k: usize, l: usize, m: usize) -> Result<RacahExpr> {
    check_distinct(&[i, j, k, l, m], n)?;
    let det = sym_det(&SymbolMatrix::p_matrix(n, &[i, j, k], &[k, l, m])?);
    let ff = &RacahExpr::f(n, i, j, k)? * &RacahExpr::f(n, k, l, m)?;
    let fp = &(&RacahExpr::f(n, i, j, l)? * &RacahExpr::p(n, k, m)?)
        - &(&RacahExpr::f(n, i, j, m)? * &RacahExpr::p(n, k, l)?);
    Ok(&(&ff + &det.scale(&rat(1, 2))) + &fp.scale(&rat(1, 2)))
}

/// `z_ijklmp = F_ijk F_lmp + 1/2 det(P_ijk^lmp)`.
pub fn build_z(
    n: usize,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
    m: usize,
    p: usize,
) -> Result<RacahExpr> {
    check_distinct(&[i, j, k, l, m, p], n)?;
    let det = sym_det(&SymbolMatrix::p_matrix(n, &[i, j, k], &[l, m, p])?);
    let ff = &RacahExpr::f(n, i, j, k)? * &RacahExpr::f(n, l, m, p)?;
    Ok(&ff + &det.scale(&rat(1, 2)))
}

/// Row-permutation sum `1/2 Σ_σ sgn(σ) P_{rows[σ(1)], cols[1]} ... P_{rows[σ(3)], cols[3]}`
/// shared by the two expanded forms below.
fn half_row_det(n: usize, rows: [usize; 3], cols: [usize; 3]) -> Result<RacahExpr> {
    let mut sum = RacahExpr::zero(n);
    let perms: [([usize; 3], i64); 6] = [
        ([0, 1, 2], 1),
        ([0, 2, 1], -1),
        ([1, 0, 2], -1),
        ([1, 2, 0], 1),
        ([2, 0, 1], 1),
        ([2, 1, 0], -1),
    ];
    for (perm, sign) in perms {
        let mut product = RacahExpr::constant(n, rat(sign, 1));
        for col in 0..3 {
            product = &product * &RacahExpr::p(n, rows[perm[col]], cols[col])?;
        }
        sum = &sum + &product;
    }
    Ok(sum.scale(&rat(1, 2)))
}

/// Expanded form of `w`:
/// `F_ijk^2 - F_ijk P_ik - P_ij (P_ik + P_jk + P_kk)
///  + 1/2 Σ_σ sgn(σ) P_{σ(i) i} P_{σ(j) j} P_{σ(k) k}`.
///
/// Equal to [`build_w`] as an element of the algebra (and hence under
/// evaluation), though the words differ.
pub fn build_w_expanded(n: usize, i: usize, j: usize, k: usize) -> Result<RacahExpr> {
    check_distinct(&[i, j, k], n)?;
    let f = RacahExpr::f(n, i, j, k)?;
    let p = |a: usize, b: usize| RacahExpr::p(n, a, b);
    let linear = &(&p(i, k)? + &p(j, k)?) + &p(k, k)?;
    let head = &(&(&f * &f) - &(&f * &p(i, k)?)) - &(&p(i, j)? * &linear);
    Ok(&head + &half_row_det(n, [i, j, k], [i, j, k])?)
}

/// Expanded form of `x`:
/// `F_ijk F_jkl - F_ijk P_jl + F_ijl P_jk + F_ikl P_jk - P_il P_jk
///  + 1/2 Σ_σ sgn(σ) P_{σ(1) j} P_{σ(2) k} P_{σ(3) l}` with rows `(i,j,k)`.
pub fn build_x_expanded(n: usize, i: usize, j: usize, k: usize, l: usize) -> Result<RacahExpr> {
    check_distinct(&[i, j, k, l], n)?;
    let f = |a: usize, b: usize, c: usize| RacahExpr::f(n, a, b, c);
    let p = |a: usize, b: usize| RacahExpr::p(n, a, b);
    let sum = &(&(&(&f(i, j, k)? * &f(j, k, l)?) - &(&f(i, j, k)? * &p(j, l)?))
        + &(&(&f(i, j, l)? + &f(i, k, l)?) * &p(j, k)?))
        - &(&p(i, l)? * &p(j, k)?);
    Ok(&sum + &half_row_det(n, [i, j, k], [j, k, l])?)
}
