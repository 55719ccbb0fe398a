//! Exact rank certificates for the basis images.
//!
//! Images of basis monomials are taken in `U(sl2)^⊗n`, cut to their
//! top-degree homogeneous component (the graded image), and assembled into a
//! sparse integer matrix indexed by tensor monomials. Rank is computed by
//! fraction-free row elimination: rows are combined integrally and divided by
//! their content, pivots are chosen among smallest-magnitude entries. No
//! rounding at any point; a too-large matrix is an explicit resource error,
//! never a wrong answer.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::racah::eval_in_tensor;
use crate::rational::Rational;
use crate::series::binomial;
use crate::tensor::{TensorElement, TensorMonomial};

use super::basis::{enumerate_basis, families};

/// Default cap on `rows x ambient_dim` before refusing to assemble a matrix.
pub const DEFAULT_CELL_BUDGET: u64 = 50_000_000;

/// Witness that a set of elements is linearly independent in one degree.
#[derive(Debug, Clone, Serialize)]
pub struct RankCertificate {
    pub n: usize,
    pub degree: u32,
    pub count: usize,
    pub ambient_dim: u64,
    pub rank: usize,
    pub pass: bool,
}

type SparseRow = BTreeMap<usize, BigInt>;

fn row_content(row: &SparseRow) -> BigInt {
    let mut g = BigInt::zero();
    for value in row.values() {
        g = g.gcd(value);
        if g == BigInt::from(1) {
            break;
        }
    }
    g
}

fn normalize_row(mut row: SparseRow) -> SparseRow {
    row.retain(|_, v| !v.is_zero());
    if row.is_empty() {
        return row;
    }
    let content = row_content(&row);
    if content > BigInt::from(1) {
        for value in row.values_mut() {
            *value /= &content;
        }
    }
    row
}

/// Incremental fraction-free row-space eliminator.
pub struct SpanChecker {
    pivots: Vec<(usize, SparseRow)>,
}

impl SpanChecker {
    pub fn new() -> Self {
        SpanChecker { pivots: Vec::new() }
    }

    /// Reduce `row` against all current pivots. Each pivot row already has
    /// zeros at the columns of the pivots inserted before it, so one pass in
    /// insertion order clears every pivot column.
    fn reduce(&self, mut row: SparseRow) -> SparseRow {
        for (pivot_col, pivot_row) in &self.pivots {
            let Some(coeff) = row.get(pivot_col).cloned() else {
                continue;
            };
            let lead = pivot_row[pivot_col].clone();
            // row <- lead * row - coeff * pivot_row, then divide out content
            for value in row.values_mut() {
                *value *= &lead;
            }
            for (col, pvalue) in pivot_row {
                let entry = row.entry(*col).or_insert_with(BigInt::zero);
                *entry -= &coeff * pvalue;
            }
            row = normalize_row(row);
            if row.is_empty() {
                return row;
            }
        }
        row
    }

    /// Add a row to the span. Returns `true` if it enlarged the row space.
    pub fn add_row(&mut self, row: SparseRow) -> bool {
        let reduced = self.reduce(normalize_row(row));
        if reduced.is_empty() {
            return false;
        }
        // pivot: smallest magnitude, then smallest column
        let pivot_col = reduced
            .iter()
            .min_by(|(ca, va), (cb, vb)| va.abs().cmp(&vb.abs()).then(ca.cmp(cb)))
            .map(|(c, _)| *c)
            .expect("non-empty row");
        self.pivots.push((pivot_col, reduced));
        true
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Exact span-membership test.
    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(normalize_row(row)).is_empty()
    }
}

impl Default for SpanChecker {
    fn default() -> Self {
        Self::new()
    }
}

/// Column index assignment in the deterministic tensor-monomial order.
fn column_map(elements: &[TensorElement]) -> BTreeMap<TensorMonomial, usize> {
    let mut monomials: BTreeMap<TensorMonomial, usize> = BTreeMap::new();
    for element in elements {
        for (monomial, _) in element.terms() {
            monomials.entry(monomial.clone()).or_insert(0);
        }
    }
    // BTreeMap iterates in canonical order; assign ids in that order.
    let keys: Vec<TensorMonomial> = monomials.keys().cloned().collect();
    for (id, key) in keys.into_iter().enumerate() {
        monomials.insert(key, id);
    }
    monomials
}

/// Clear denominators and map to a sparse integer row. Columns missing from
/// the map are an error (caller controls the column universe).
fn to_row(
    element: &TensorElement,
    columns: &BTreeMap<TensorMonomial, usize>,
) -> Result<SparseRow> {
    let mut denominator_lcm = BigInt::from(1);
    for (_, coeff) in element.terms() {
        denominator_lcm = denominator_lcm.lcm(coeff.denom());
    }
    let mut row = SparseRow::new();
    for (monomial, coeff) in element.terms() {
        let col = *columns.get(monomial).ok_or_else(|| {
            Error::InvalidArgument("element outside the assembled column universe".into())
        })?;
        let scaled = coeff * Rational::from_integer(denominator_lcm.clone());
        debug_assert!(scaled.is_integer());
        row.insert(col, scaled.to_integer());
    }
    Ok(normalize_row(row))
}

/// Dimension of the degree-`d` homogeneous component of `U(sl2)^⊗n`:
/// the coefficient of `t^d` in `1/(1-t)^{3n}`.
pub fn ambient_dimension(n: usize, degree: u32) -> u64 {
    let dim = binomial(degree as i64 + 3 * n as i64 - 1, degree as i64);
    u64::try_from(&dim).unwrap_or(u64::MAX)
}

/// Certify linear independence of the basis monomials of exactly `degree`:
/// graded images are assembled over the tensor-monomial columns and the rank
/// must equal the monomial count.
///
/// The budget counts actually stored cells (the rows are sparse), refusing
/// the elimination rather than risking a thrash; it never changes an answer.
pub fn independence_rank(n: usize, degree: u32, budget: Option<u64>) -> Result<RankCertificate> {
    let fams = families(n)?;
    let monomials: Vec<_> = enumerate_basis(n, degree)?
        .into_iter()
        .filter(|m| m.degree(&fams) == degree)
        .collect();
    let ambient_dim = ambient_dimension(n, degree);
    let budget = budget.unwrap_or(DEFAULT_CELL_BUDGET);
    let images: Vec<TensorElement> = monomials
        .par_iter()
        .map(|monomial| {
            let expr = monomial.to_expr(&fams)?;
            Ok(eval_in_tensor(&expr, n)?.homogeneous_part(degree))
        })
        .collect::<Result<_>>()?;
    let needed: u64 = images.iter().map(|img| img.num_terms() as u64).sum();
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let columns = column_map(&images);
    let mut checker = SpanChecker::new();
    let mut rank = 0usize;
    for image in &images {
        if checker.add_row(to_row(image, &columns)?) {
            rank += 1;
        }
    }
    Ok(RankCertificate {
        n,
        degree,
        count: monomials.len(),
        ambient_dim,
        rank,
        pass: rank == monomials.len(),
    })
}

/// Exact span-membership of `target` in the linear span of `spanning`.
pub fn decompose_in_span(spanning: &[TensorElement], target: &TensorElement) -> Result<bool> {
    let mut universe = spanning.to_vec();
    universe.push(target.clone());
    let columns = column_map(&universe);
    let mut checker = SpanChecker::new();
    for element in spanning {
        checker.add_row(to_row(element, &columns)?);
    }
    Ok(checker.contains(to_row(target, &columns)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::racah::RacahExpr;
    use crate::rational::int;

    #[test]
    fn rank_of_trivial_cases() {
        // n=3, degree 3: a single image (the F), rank 1
        let cert = independence_rank(3, 3, None).unwrap();
        assert_eq!((cert.count, cert.rank), (1, 1));
        assert!(cert.pass);
        // degree 0: the empty monomial maps to 1
        let cert0 = independence_rank(2, 0, None).unwrap();
        assert_eq!((cert0.count, cert0.rank), (1, 1));
    }

    #[test]
    fn ten_quadratic_generators_are_independent_at_n4() {
        let cert = independence_rank(4, 2, None).unwrap();
        assert_eq!(cert.count, 10);
        assert_eq!(cert.rank, 10);
        assert_eq!(cert.ambient_dim, 78);
        assert!(cert.pass);
    }

    #[test]
    fn budget_guard_refuses_rather_than_thrashes() {
        let err = independence_rank(4, 2, Some(10)).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn span_checker_detects_dependence() {
        let mut checker = SpanChecker::new();
        let row = |entries: &[(usize, i64)]| -> SparseRow {
            entries
                .iter()
                .map(|&(c, v)| (c, BigInt::from(v)))
                .collect()
        };
        assert!(checker.add_row(row(&[(0, 2), (1, 4)])));
        assert!(checker.add_row(row(&[(1, 3), (2, 1)])));
        // 3*(1,2,0) - 2*(0,3,1) = (3,0,-2)
        assert!(!checker.add_row(row(&[(0, 3), (2, -2)])));
        assert_eq!(checker.rank(), 2);
    }

    #[test]
    fn product_of_quadratics_lies_in_low_degree_span() {
        // T^(1,2) * T^(1,2) decomposes over basis images of degree <= 4 at n=3
        let n = 3;
        let fams = families(n).unwrap();
        let basis = enumerate_basis(n, 4).unwrap();
        let images: Vec<TensorElement> = basis
            .iter()
            .map(|m| eval_in_tensor(&m.to_expr(&fams).unwrap(), n).unwrap())
            .collect();
        let p12 = eval_in_tensor(&RacahExpr::p(n, 1, 2).unwrap(), n).unwrap();
        let square = p12.multiply(&p12).unwrap();
        assert!(decompose_in_span(&images, &square).unwrap());
        // something outside the centralizer is not in the span
        let outside = TensorElement::generator(
            crate::tensor::Sl2Gen::E11.monomial(),
            1,
            n,
        )
        .unwrap()
        .scale(&int(1));
        assert!(!decompose_in_span(&images, &outside).unwrap());
    }
}
