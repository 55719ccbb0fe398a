//! Symmetrized determinants of matrices with noncommuting entries.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rational::Rational;

use super::expr::RacahExpr;

/// A square array of expressions, e.g. the `P` matrices entering the
/// determinant parts of `w, x, y, z` and the degree-8 relation.
#[derive(Debug, Clone)]
pub struct SymbolMatrix {
    size: usize,
    entries: Vec<RacahExpr>,
}

impl SymbolMatrix {
    pub fn new(rows: Vec<Vec<RacahExpr>>) -> Result<Self> {
        let size = rows.len();
        for row in &rows {
            if row.len() != size {
                return Err(Error::NonSquareMatrix {
                    rows: size,
                    cols: row.len(),
                });
            }
        }
        Ok(SymbolMatrix {
            size,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix with entries `P_{r_i, c_j}` for row indices `r` and column
    /// indices `c`.
    pub fn p_matrix(n: usize, rows: &[usize], cols: &[usize]) -> Result<Self> {
        if rows.len() != cols.len() {
            return Err(Error::NonSquareMatrix {
                rows: rows.len(),
                cols: cols.len(),
            });
        }
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                entries.push(RacahExpr::p(n, r, c)?);
            }
        }
        Ok(SymbolMatrix {
            size: rows.len(),
            entries,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, row: usize, col: usize) -> &RacahExpr {
        &self.entries[row * self.size + col]
    }

    fn ambient(&self) -> usize {
        self.entries
            .first()
            .map(RacahExpr::n)
            .expect("matrices have size >= 1")
    }
}

fn permutations_with_sign(k: usize) -> Vec<(Vec<usize>, i64)> {
    // Lexicographic enumeration; the sign is recomputed per permutation,
    // which is cheap for the k <= 4 sizes used here.
    fn recurse(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i64)>) {
        let k = used.len();
        if prefix.len() == k {
            let mut sign = 1i64;
            for a in 0..k {
                for b in a + 1..k {
                    if prefix[a] > prefix[b] {
                        sign = -sign;
                    }
                }
            }
            out.push((prefix.clone(), sign));
            return;
        }
        for value in 0..k {
            if !used[value] {
                used[value] = true;
                prefix.push(value);
                recurse(prefix, used, out);
                prefix.pop();
                used[value] = false;
            }
        }
    }
    let mut out = Vec::new();
    recurse(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// Symmetrized determinant
/// `(1/k!) Σ_{ρ,σ} sgn(ρ) sgn(σ) A_{ρ(1)σ(1)} ... A_{ρ(k)σ(k)}`.
///
/// For commuting entries this is the usual determinant.
pub fn sym_det(matrix: &SymbolMatrix) -> RacahExpr {
    let k = matrix.size();
    let n = matrix.ambient();
    let perms = permutations_with_sign(k);
    let mut factorial = BigInt::from(1);
    for i in 2..=k {
        factorial *= BigInt::from(i);
    }
    let scale = Rational::new(BigInt::from(1), factorial);
    let mut sum = RacahExpr::zero(n);
    for (rho, sign_rho) in &perms {
        for (sigma, sign_sigma) in &perms {
            let mut product = RacahExpr::constant(
                n,
                Rational::from_integer(BigInt::from(sign_rho * sign_sigma)),
            );
            for i in 0..k {
                product = &product * matrix.entry(rho[i], sigma[i]);
            }
            sum = &sum + &product;
        }
    }
    sum.scale(&scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn one_by_one_is_identity() {
        let x = RacahExpr::p(2, 1, 2).unwrap();
        let m = SymbolMatrix::new(vec![vec![x.clone()]]).unwrap();
        assert_eq!(sym_det(&m), x);
    }

    #[test]
    fn scalar_two_by_two_matches_usual_determinant() {
        let c = |v: i64| RacahExpr::constant(1, int(v));
        let m = SymbolMatrix::new(vec![vec![c(1), c(2)], vec![c(3), c(4)]]).unwrap();
        assert_eq!(sym_det(&m), c(-2));
    }

    #[test]
    fn non_square_is_rejected() {
        let c = |v: i64| RacahExpr::constant(1, int(v));
        assert!(SymbolMatrix::new(vec![vec![c(1), c(2)], vec![c(3)]]).is_err());
        assert!(SymbolMatrix::p_matrix(4, &[1, 2], &[1, 2, 3]).is_err());
    }

    #[test]
    fn permutation_signs_are_signatures() {
        let perms = permutations_with_sign(3);
        assert_eq!(perms.len(), 6);
        let total: i64 = perms.iter().map(|(_, s)| s).sum();
        assert_eq!(total, 0);
        assert_eq!(
            perms.iter().find(|(p, _)| p == &vec![0, 1, 2]).unwrap().1,
            1
        );
        assert_eq!(
            perms.iter().find(|(p, _)| p == &vec![1, 0, 2]).unwrap().1,
            -1
        );
    }
}
