//! Enumeration of the explicit basis monomials for `n = 2, 3, 4`.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::racah::RacahExpr;
use crate::series::closed_form_series;

/// One family of basis monomials: an optional `F` prefix and a fixed ordered
/// list of `P` symbols carrying the exponents.
#[derive(Debug, Clone)]
pub struct BasisFamily {
    pub f_prefix: Option<[usize; 3]>,
    pub p_symbols: Vec<(usize, usize)>,
    /// Positions into `p_symbols` of which at least one exponent must vanish
    /// (the `aehj = 0` constraint of the `F`-free family at n = 4).
    pub zero_constraint: Option<Vec<usize>>,
}

impl BasisFamily {
    fn f_degree(&self) -> u32 {
        if self.f_prefix.is_some() {
            3
        } else {
            0
        }
    }

    fn admits(&self, exps: &[u32]) -> bool {
        match &self.zero_constraint {
            None => true,
            Some(positions) => positions.iter().any(|&p| exps[p] == 0),
        }
    }
}

/// The families for a supported `n`, in canonical order.
pub fn families(n: usize) -> Result<Vec<BasisFamily>> {
    let p = |list: &[(usize, usize)]| list.to_vec();
    match n {
        2 => Ok(vec![BasisFamily {
            f_prefix: None,
            p_symbols: p(&[(1, 1), (1, 2), (2, 2)]),
            zero_constraint: None,
        }]),
        3 => {
            let all = p(&[(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)]);
            Ok(vec![
                BasisFamily {
                    f_prefix: None,
                    p_symbols: all.clone(),
                    zero_constraint: None,
                },
                BasisFamily {
                    f_prefix: Some([1, 2, 3]),
                    p_symbols: all,
                    zero_constraint: None,
                },
            ])
        }
        4 => Ok(vec![
            BasisFamily {
                f_prefix: Some([1, 2, 3]),
                p_symbols: p(&[
                    (1, 1),
                    (1, 2),
                    (1, 3),
                    (1, 4),
                    (2, 2),
                    (2, 3),
                    (2, 4),
                    (3, 3),
                    (3, 4),
                ]),
                zero_constraint: None,
            },
            BasisFamily {
                f_prefix: Some([1, 2, 4]),
                p_symbols: p(&[
                    (1, 1),
                    (1, 2),
                    (1, 3),
                    (1, 4),
                    (2, 2),
                    (2, 3),
                    (2, 4),
                    (3, 4),
                    (4, 4),
                ]),
                zero_constraint: None,
            },
            BasisFamily {
                f_prefix: Some([1, 3, 4]),
                p_symbols: p(&[
                    (1, 1),
                    (1, 2),
                    (1, 3),
                    (1, 4),
                    (2, 3),
                    (2, 4),
                    (3, 3),
                    (3, 4),
                    (4, 4),
                ]),
                zero_constraint: None,
            },
            BasisFamily {
                f_prefix: Some([2, 3, 4]),
                p_symbols: p(&[
                    (1, 2),
                    (1, 3),
                    (1, 4),
                    (2, 2),
                    (2, 3),
                    (2, 4),
                    (3, 3),
                    (3, 4),
                    (4, 4),
                ]),
                zero_constraint: None,
            },
            BasisFamily {
                f_prefix: None,
                p_symbols: p(&[
                    (1, 1),
                    (1, 2),
                    (1, 3),
                    (1, 4),
                    (2, 2),
                    (2, 3),
                    (2, 4),
                    (3, 3),
                    (3, 4),
                    (4, 4),
                ]),
                // at least one diagonal exponent (P_11, P_22, P_33, P_44) is zero
                zero_constraint: Some(vec![0, 4, 7, 9]),
            },
        ]),
        other => Err(Error::UnsupportedN {
            n: other,
            supported: "2, 3, 4",
        }),
    }
}

/// A basis monomial: family index plus exponent vector on the family's `P`s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisMonomial {
    pub n: usize,
    pub family: usize,
    pub exps: Vec<u32>,
}

impl BasisMonomial {
    pub fn degree(&self, fams: &[BasisFamily]) -> u32 {
        fams[self.family].f_degree() + 2 * self.exps.iter().sum::<u32>()
    }

    /// The word `F? P^e1 ... P^ek` as a symbolic expression.
    pub fn to_expr(&self, fams: &[BasisFamily]) -> Result<RacahExpr> {
        let family = &fams[self.family];
        let mut expr = RacahExpr::one(self.n);
        if let Some([i, j, k]) = family.f_prefix {
            expr = &expr * &RacahExpr::f(self.n, i, j, k)?;
        }
        for (&(a, b), &e) in family.p_symbols.iter().zip(&self.exps) {
            let p = RacahExpr::p(self.n, a, b)?;
            for _ in 0..e {
                expr = &expr * &p;
            }
        }
        Ok(expr)
    }

    /// Printable form, e.g. `F_123 P_12^2 P_34`.
    pub fn display(&self, fams: &[BasisFamily]) -> String {
        let family = &fams[self.family];
        let mut parts = Vec::new();
        if let Some([i, j, k]) = family.f_prefix {
            parts.push(format!("F_{i}{j}{k}"));
        }
        for (&(a, b), &e) in family.p_symbols.iter().zip(&self.exps) {
            match e {
                0 => {}
                1 => parts.push(format!("P_{a}{b}")),
                _ => parts.push(format!("P_{a}{b}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" ")
        }
    }
}

impl fmt::Display for BasisMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match families(self.n) {
            Ok(fams) => f.write_str(&self.display(&fams)),
            Err(_) => write!(f, "<invalid n={}>", self.n),
        }
    }
}

fn enumerate_exponents(count: usize, max_sum: u32) -> Vec<Vec<u32>> {
    fn recurse(count: usize, budget: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == count {
            out.push(prefix.clone());
            return;
        }
        for v in 0..=budget {
            prefix.push(v);
            recurse(count, budget - v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    recurse(count, max_sum, &mut Vec::with_capacity(count), &mut out);
    out
}

/// All basis monomials of total degree `<= max_degree`, ordered by
/// `(degree, family, exponent lex)`.
pub fn enumerate_basis(n: usize, max_degree: u32) -> Result<Vec<BasisMonomial>> {
    let fams = families(n)?;
    let mut out = Vec::new();
    for (family_index, family) in fams.iter().enumerate() {
        if family.f_degree() > max_degree {
            continue;
        }
        let p_budget = (max_degree - family.f_degree()) / 2;
        for exps in enumerate_exponents(family.p_symbols.len(), p_budget) {
            if family.admits(&exps) {
                out.push(BasisMonomial {
                    n,
                    family: family_index,
                    exps,
                });
            }
        }
    }
    out.sort_by(|a, b| {
        a.degree(&fams)
            .cmp(&b.degree(&fams))
            .then(a.family.cmp(&b.family))
            .then(a.exps.cmp(&b.exps))
    });
    Ok(out)
}

/// Per-degree counts of [`enumerate_basis`].
pub fn count_by_degree(n: usize, max_degree: u32) -> Result<Vec<usize>> {
    let fams = families(n)?;
    let mut counts = vec![0usize; max_degree as usize + 1];
    for monomial in enumerate_basis(n, max_degree)? {
        counts[monomial.degree(&fams) as usize] += 1;
    }
    Ok(counts)
}

/// True iff the per-degree counts equal the Hilbert-Poincaré series
/// coefficients computed independently from the closed form.
pub fn verify_counts(n: usize, max_degree: u32) -> Result<bool> {
    let counts = count_by_degree(n, max_degree)?;
    let series = closed_form_series(n, max_degree as usize)?;
    Ok(counts
        .iter()
        .enumerate()
        .all(|(deg, &count)| BigInt::from(count) == series.coeff(deg)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n3_degree_three_is_the_single_f() {
        let fams = families(3).unwrap();
        let basis = enumerate_basis(3, 3).unwrap();
        let at3: Vec<_> = basis.iter().filter(|m| m.degree(&fams) == 3).collect();
        assert_eq!(at3.len(), 1);
        assert_eq!(at3[0].display(&fams), "F_123");
    }

    #[test]
    fn n4_low_degrees_match_series() {
        let counts = count_by_degree(4, 5).unwrap();
        assert_eq!(counts, vec![1, 0, 10, 4, 55, 36]);
    }

    #[test]
    fn n2_degree_four_has_six_monomials() {
        let counts = count_by_degree(2, 4).unwrap();
        assert_eq!(counts[4], 6);
        assert_eq!(counts[0], 1);
    }

    #[test]
    fn diagonal_constraint_first_bites_at_degree_eight() {
        let fams = families(4).unwrap();
        let basis = enumerate_basis(4, 8).unwrap();
        // P_11 P_22 P_33 P_44 would be degree 8; it must be excluded
        let excluded = basis.iter().any(|m| {
            fams[m.family].f_prefix.is_none()
                && m.exps == vec![1, 0, 0, 0, 1, 0, 0, 1, 0, 1]
        });
        assert!(!excluded);
        assert!(verify_counts(4, 8).unwrap());
    }

    #[test]
    fn counts_match_series_for_all_supported_n() {
        assert!(verify_counts(2, 12).unwrap());
        assert!(verify_counts(3, 12).unwrap());
    }

    #[test]
    fn unsupported_n_is_rejected() {
        assert!(matches!(
            enumerate_basis(5, 4),
            Err(Error::UnsupportedN { n: 5, .. })
        ));
    }

    #[test]
    fn display_uses_trace_notation() {
        let fams = families(4).unwrap();
        let m = BasisMonomial {
            n: 4,
            family: 0,
            exps: vec![0, 2, 0, 0, 0, 0, 0, 0, 1],
        };
        assert_eq!(m.display(&fams), "F_123 P_12^2 P_34");
    }
}
