//! The relation catalogue and its verification in `U(sl2)^⊗n`.
//!
//! Every defining relation, centrality statement and derived identity is an
//! instance `(tag, index tuple)` whose left-hand side minus right-hand side
//! must evaluate to exactly zero under `P_ab ↦ T^(a,b)`, `F_ijk ↦ -T^(i,j,k)`.
//! Instances are independent pure computations; the suite runner executes
//! them in parallel and merges reports in canonical `(tag, indices)` order.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{int, rat};

use super::elements::{build_q, build_w, build_x, build_y, build_z};
use super::eval::eval_in_tensor;
use super::expr::RacahExpr;
use super::matrix::{sym_det, SymbolMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationTag {
    /// `[P_ii, P_ab] = 0`
    Rn0Central,
    /// `[P_ij, P_kl] = 0` for disjoint index pairs
    Rn1,
    /// `[P_ij, P_jk] = 2 F_ijk`
    Rn2,
    /// `[P_jk, F_ijk] = P_ik (P_jk + P_jj) - (P_jk + P_kk) P_ij`
    Rn3,
    /// `[P_kl, F_ijk] = P_ik P_jl - P_il P_jk`
    Rn4,
    /// `[F_ijk, F_jkl] = -(F_ijl + F_ikl) P_jk`
    Rn5,
    /// `[F_ijk, F_klm] = F_ilm P_jk - F_jlm P_ik`
    Rn6,
    /// `[F_ijk, F_jkl] = F_jkl P_ij - F_ijk P_jl - F_ikl (P_jk + P_jj)`,
    /// the alternative right-hand side used by the quotient presentation
    Srn5,
    /// `w_ijk = 0`
    Srn7W,
    /// `x_ijkl = 0`
    Srn8X,
    /// `y_ijklm = 0`
    ConsY,
    /// `z_ijklmp = 0`
    ConsZ,
    /// `P_ai F_jkl - P_aj F_ikl + P_ak F_ijl - P_al F_ijk = 0`
    Rnd5,
    /// `[Q_n, P_ab] = 0`
    QCentral,
    /// `[w_ijk, P_ab] = 0`
    WCentral,
    /// `[x_ijkl, P_ab] = 0`
    XCentral,
    /// the degree-8 determinant identity among the ten `P` generators at n = 4
    Det8N4,
}

impl RelationTag {
    pub const ALL: [RelationTag; 17] = [
        RelationTag::Rn0Central,
        RelationTag::Rn1,
        RelationTag::Rn2,
        RelationTag::Rn3,
        RelationTag::Rn4,
        RelationTag::Rn5,
        RelationTag::Rn6,
        RelationTag::Srn5,
        RelationTag::Srn7W,
        RelationTag::Srn8X,
        RelationTag::ConsY,
        RelationTag::ConsZ,
        RelationTag::Rnd5,
        RelationTag::QCentral,
        RelationTag::WCentral,
        RelationTag::XCentral,
        RelationTag::Det8N4,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RelationTag::Rn0Central => "rn0_central",
            RelationTag::Rn1 => "rn1",
            RelationTag::Rn2 => "rn2",
            RelationTag::Rn3 => "rn3",
            RelationTag::Rn4 => "rn4",
            RelationTag::Rn5 => "rn5",
            RelationTag::Rn6 => "rn6",
            RelationTag::Srn5 => "srn5",
            RelationTag::Srn7W => "srn7_w",
            RelationTag::Srn8X => "srn8_x",
            RelationTag::ConsY => "cons_y",
            RelationTag::ConsZ => "cons_z",
            RelationTag::Rnd5 => "rnd5",
            RelationTag::QCentral => "Q_central",
            RelationTag::WCentral => "w_central",
            RelationTag::XCentral => "x_central",
            RelationTag::Det8N4 => "det8_n4",
        }
    }

    /// Smallest ambient `n` admitting at least one instance.
    pub fn min_n(self) -> usize {
        match self {
            RelationTag::QCentral | RelationTag::Rn0Central => 2,
            RelationTag::Rn2 | RelationTag::Rn3 => 3,
            RelationTag::Srn7W | RelationTag::WCentral => 3,
            RelationTag::Rn1 | RelationTag::Rn4 | RelationTag::Rn5 | RelationTag::Srn5 => 4,
            RelationTag::Srn8X | RelationTag::XCentral | RelationTag::Rnd5 => 4,
            RelationTag::Det8N4 => 4,
            RelationTag::Rn6 | RelationTag::ConsY => 5,
            RelationTag::ConsZ => 6,
        }
    }
}

impl fmt::Display for RelationTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RelationTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RelationTag::ALL
            .iter()
            .copied()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown relation tag {s:?}")))
    }
}

/// One verifiable instance: a tag plus its index tuple.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RelationId {
    pub tag: RelationTag,
    pub indices: Vec<usize>,
}

impl RelationId {
    pub fn new(tag: RelationTag, indices: Vec<usize>) -> Self {
        RelationId { tag, indices }
    }
}

impl fmt::Display for RelationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.tag)?;
        for (i, idx) in self.indices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{idx}")?;
        }
        write!(f, ")")
    }
}

/// Verification record for one relation instance.
#[derive(Debug, Clone, Serialize)]
pub struct RelationReport {
    pub tag: String,
    pub indices: Vec<usize>,
    pub n: usize,
    pub residual_zero: bool,
    pub residual_terms: usize,
    pub millis: u128,
}

impl RelationReport {
    /// JSON-lines form, fields in declaration order.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteSummary {
    pub n: usize,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub failed_instances: Vec<String>,
}

fn expect_len(id: &RelationId, len: usize) -> Result<()> {
    if id.indices.len() != len {
        return Err(Error::InvalidArgument(format!(
            "{} expects {len} indices, got {}",
            id.tag,
            id.indices.len()
        )));
    }
    Ok(())
}

fn check_distinct(tag: RelationTag, indices: &[usize], n: usize) -> Result<()> {
    for (pos, &a) in indices.iter().enumerate() {
        if a == 0 || a > n {
            return Err(Error::IndexOutOfRange { index: a, n });
        }
        if indices[pos + 1..].contains(&a) {
            return Err(Error::InvalidArgument(format!(
                "{tag} requires pairwise distinct indices, got {indices:?}"
            )));
        }
    }
    Ok(())
}

fn p(n: usize, a: usize, b: usize) -> Result<RacahExpr> {
    RacahExpr::p(n, a, b)
}

fn f(n: usize, a: usize, b: usize, c: usize) -> Result<RacahExpr> {
    RacahExpr::f(n, a, b, c)
}

/// 3x3 determinant part `det(P_{rows}^{cols})`.
fn det3(n: usize, rows: [usize; 3], cols: [usize; 3]) -> Result<RacahExpr> {
    Ok(sym_det(&SymbolMatrix::p_matrix(n, &rows, &cols)?))
}

/// 2x2 determinant part `det(P_{rows}^{cols})`.
fn det2(n: usize, rows: [usize; 2], cols: [usize; 2]) -> Result<RacahExpr> {
    Ok(sym_det(&SymbolMatrix::p_matrix(n, &rows, &cols)?))
}

/// The degree-8 identity at n = 4: `det(P_1234^1234)` minus its cubic
/// right-hand side in the 3x3 and 2x2 determinants.
fn det8_lhs(n: usize) -> Result<RacahExpr> {
    if n < 4 {
        return Err(Error::InsufficientIndices {
            tag: "det8_n4",
            needed: 4,
            n,
        });
    }
    let lhs = sym_det(&SymbolMatrix::p_matrix(n, &[1, 2, 3, 4], &[1, 2, 3, 4])?);
    let cubic = &(&(&(&(&det3(n, [1, 2, 3], [1, 2, 4])? - &det3(n, [1, 2, 3], [1, 3, 4])?)
        + &det3(n, [1, 2, 3], [2, 3, 4])?)
        + &det3(n, [1, 2, 4], [1, 3, 4])?)
        - &det3(n, [1, 2, 4], [2, 3, 4])?)
        + &det3(n, [1, 3, 4], [2, 3, 4])?;
    let paired = &(&(&(&(&(&p(n, 1, 2)? * &det2(n, [3, 4], [3, 4])?)
        + &(&p(n, 1, 3)? * &det2(n, [2, 4], [2, 4])?))
        + &(&p(n, 1, 4)? * &det2(n, [2, 3], [2, 3])?))
        + &(&p(n, 2, 3)? * &det2(n, [1, 4], [1, 4])?))
        + &(&p(n, 2, 4)? * &det2(n, [1, 3], [1, 3])?))
        + &(&p(n, 3, 4)? * &det2(n, [1, 2], [1, 2])?);
    let rhs = &cubic.scale(&rat(-1, 3)) + &paired.scale(&rat(2, 3));
    Ok(&lhs - &rhs)
}

/// The expression `LHS - RHS` of the relation instance; zero in the algebra.
pub fn relation_lhs(id: &RelationId, n: usize) -> Result<RacahExpr> {
    let ix = &id.indices;
    match id.tag {
        RelationTag::Rn0Central => {
            expect_len(id, 3)?;
            let (i, a, b) = (ix[0], ix[1], ix[2]);
            for index in [i, a, b] {
                if index == 0 || index > n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
            }
            // P_ii is central against every generator, shared indices included
            Ok(p(n, i, i)?.commutator(&p(n, a, b)?))
        }
        RelationTag::Rn1 => {
            expect_len(id, 4)?;
            check_distinct(id.tag, ix, n)?;
            let (i, j, k, l) = (ix[0], ix[1], ix[2], ix[3]);
            Ok(p(n, i, j)?.commutator(&p(n, k, l)?))
        }
        RelationTag::Rn2 => {
            expect_len(id, 3)?;
            check_distinct(id.tag, ix, n)?;
            let (i, j, k) = (ix[0], ix[1], ix[2]);
            Ok(&p(n, i, j)?.commutator(&p(n, j, k)?) - &f(n, i, j, k)?.scale(&int(2)))
        }
        RelationTag::Rn3 => {
            expect_len(id, 3)?;
            check_distinct(id.tag, ix, n)?;
            let (i, j, k) = (ix[0], ix[1], ix[2]);
            let lhs = p(n, j, k)?.commutator(&f(n, i, j, k)?);
            let rhs = &(&p(n, i, k)? * &(&p(n, j, k)? + &p(n, j, j)?))
                - &(&(&p(n, j, k)? + &p(n, k, k)?) * &p(n, i, j)?);
            Ok(&lhs - &rhs)
        }
        RelationTag::Rn4 => {
            expect_len(id, 4)?;
            check_distinct(id.tag, ix, n)?;
            let (i, j, k, l) = (ix[0], ix[1], ix[2], ix[3]);
            let lhs = p(n, k, l)?.commutator(&f(n, i, j, k)?);
            let rhs = &(&p(n, i, k)? * &p(n, j, l)?) - &(&p(n, i, l)? * &p(n, j, k)?);
            Ok(&lhs - &rhs)
        }
        RelationTag::Rn5 => {
            expect_len(id, 4)?;
            check_distinct(id.tag, ix, n)?;
            let (i, j, k, l) = (ix[0], ix[1], ix[2], ix[3]);
            let lhs = f(n, i, j, k)?.commutator(&f(n, j, k, l)?);
            let rhs = &(&f(n, i, j, l)? + &f(n, i, k, l)?) * &p(n, j, k)?;
            Ok(&lhs + &rhs)
        }
        RelationTag::Rn6 => {
            expect_len(id, 5)?;
            check_distinct(id.tag, ix, n)?;
            let (i, j, k, l, m) = (ix[0], ix[1], ix[2], ix[3], ix[4]);
            let lhs = f(n, i, j, k)?.commutator(&f(n, k, l, m)?);
            let rhs =
                &(&f(n, i, l, m)? * &p(n, j, k)?) - &(&f(n, j, l, m)? * &p(n, i, k)?);
            Ok(&lhs - &rhs)
        }
        RelationTag::Srn5 => {
            expect_len(id, 4)?;
            check_distinct(id.tag, ix, n)?;
            let (i, j, k, l) = (ix[0], ix[1], ix[2], ix[3]);
            let lhs = f(n, i, j, k)?.commutator(&f(n, j, k, l)?);
            let rhs = &(&(&f(n, j, k, l)? * &p(n, i, j)?) - &(&f(n, i, j, k)? * &p(n, j, l)?))
                - &(&f(n, i, k, l)? * &(&p(n, j, k)? + &p(n, j, j)?));
            Ok(&lhs - &rhs)
        }
        RelationTag::Srn7W => {
            expect_len(id, 3)?;
            build_w(n, ix[0], ix[1], ix[2])
        }
        RelationTag::Srn8X => {
            expect_len(id, 4)?;
            build_x(n, ix[0], ix[1], ix[2], ix[3])
        }
        RelationTag::ConsY => {
            expect_len(id, 5)?;
            build_y(n, ix[0], ix[1], ix[2], ix[3], ix[4])
        }
        RelationTag::ConsZ => {
            expect_len(id, 6)?;
            build_z(n, ix[0], ix[1], ix[2], ix[3], ix[4], ix[5])
        }
        RelationTag::Rnd5 => {
            expect_len(id, 5)?;
            let (a, i, j, k, l) = (ix[0], ix[1], ix[2], ix[3], ix[4]);
            check_distinct(id.tag, &[i, j, k, l], n)?;
            if a == 0 || a > n {
                return Err(Error::IndexOutOfRange { index: a, n });
            }
            let sum = &(&(&p(n, a, i)? * &f(n, j, k, l)?) - &(&p(n, a, j)? * &f(n, i, k, l)?))
                + &(&(&p(n, a, k)? * &f(n, i, j, l)?) - &(&p(n, a, l)? * &f(n, i, j, k)?));
            Ok(sum)
        }
        RelationTag::QCentral => {
            expect_len(id, 2)?;
            let (a, b) = (ix[0], ix[1]);
            Ok(build_q(n)?.commutator(&p(n, a, b)?))
        }
        RelationTag::WCentral => {
            expect_len(id, 5)?;
            let (i, j, k, a, b) = (ix[0], ix[1], ix[2], ix[3], ix[4]);
            Ok(build_w(n, i, j, k)?.commutator(&p(n, a, b)?))
        }
        RelationTag::XCentral => {
            expect_len(id, 6)?;
            let (i, j, k, l, a, b) = (ix[0], ix[1], ix[2], ix[3], ix[4], ix[5]);
            Ok(build_x(n, i, j, k, l)?.commutator(&p(n, a, b)?))
        }
        RelationTag::Det8N4 => {
            expect_len(id, 0)?;
            det8_lhs(n)
        }
    }
}

/// Evaluate the instance in `U(sl2)^⊗n` and report whether the residual is
/// exactly zero.
pub fn verify_relation(id: &RelationId, n: usize) -> Result<RelationReport> {
    let start = Instant::now();
    let residual = eval_in_tensor(&relation_lhs(id, n)?, n)?;
    Ok(RelationReport {
        tag: id.tag.as_str().to_string(),
        indices: id.indices.clone(),
        n,
        residual_zero: residual.is_zero(),
        residual_terms: residual.num_terms(),
        millis: start.elapsed().as_millis(),
    })
}

fn ordered_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn recurse(n: usize, k: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for v in 1..=n {
            if !prefix.contains(&v) {
                prefix.push(v);
                recurse(n, k, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    recurse(n, k, &mut Vec::new(), &mut out);
    out
}

fn generator_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for a in 1..=n {
        for b in a..=n {
            pairs.push((a, b));
        }
    }
    pairs
}

fn increasing_quadruples(n: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                for l in k + 1..=n {
                    out.push([i, j, k, l]);
                }
            }
        }
    }
    out
}

/// All instances of one tag at ambient `n`, in canonical index order.
///
/// Index tuples run over all orderings of distinct indices: symmetry-related
/// instances are deliberately kept so that normalization bugs cannot hide.
pub fn tag_instances(tag: RelationTag, n: usize) -> Vec<RelationId> {
    let mut out = Vec::new();
    match tag {
        RelationTag::Rn0Central => {
            for i in 1..=n {
                for (a, b) in generator_pairs(n) {
                    if (a, b) != (i, i) {
                        out.push(RelationId::new(tag, vec![i, a, b]));
                    }
                }
            }
        }
        RelationTag::Rn1 | RelationTag::Rn4 | RelationTag::Rn5 | RelationTag::Srn5
        | RelationTag::Srn8X => {
            for t in ordered_tuples(n, 4) {
                out.push(RelationId::new(tag, t));
            }
        }
        RelationTag::Rn2 | RelationTag::Rn3 | RelationTag::Srn7W => {
            for t in ordered_tuples(n, 3) {
                out.push(RelationId::new(tag, t));
            }
        }
        RelationTag::Rn6 | RelationTag::ConsY => {
            for t in ordered_tuples(n, 5) {
                out.push(RelationId::new(tag, t));
            }
        }
        RelationTag::ConsZ => {
            for t in ordered_tuples(n, 6) {
                out.push(RelationId::new(tag, t));
            }
        }
        RelationTag::Rnd5 => {
            for a in 1..=n {
                for q in increasing_quadruples(n) {
                    out.push(RelationId::new(tag, vec![a, q[0], q[1], q[2], q[3]]));
                }
            }
        }
        RelationTag::QCentral => {
            for (a, b) in generator_pairs(n) {
                out.push(RelationId::new(tag, vec![a, b]));
            }
        }
        RelationTag::WCentral => {
            for t in ordered_tuples(n, 3) {
                for (a, b) in generator_pairs(n) {
                    let mut ix = t.clone();
                    ix.extend([a, b]);
                    out.push(RelationId::new(tag, ix));
                }
            }
        }
        RelationTag::XCentral => {
            for t in ordered_tuples(n, 4) {
                for (a, b) in generator_pairs(n) {
                    let mut ix = t.clone();
                    ix.extend([a, b]);
                    out.push(RelationId::new(tag, ix));
                }
            }
        }
        RelationTag::Det8N4 => {
            if n == 4 {
                out.push(RelationId::new(tag, Vec::new()));
            }
        }
    }
    out
}

/// The full catalogue at ambient `n`: every applicable tag, every instance,
/// sorted by `(tag, indices)`.
pub fn relation_catalogue(n: usize) -> Vec<RelationId> {
    let mut out = Vec::new();
    for tag in RelationTag::ALL {
        if n >= tag.min_n() {
            out.extend(tag_instances(tag, n));
        }
    }
    out
}

/// Run every instance of the catalogue (or of the given tags) at `n`.
///
/// `max_cases` is a resource guard: exceeding it is an error, not a silent
/// truncation. Reports come back in canonical order regardless of the
/// parallel schedule.
pub fn relation_suite(
    n: usize,
    tags: Option<&[RelationTag]>,
    max_cases: Option<usize>,
) -> Result<Vec<RelationReport>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "relation suite needs n >= 2, got {n}"
        )));
    }
    let catalogue: Vec<RelationId> = match tags {
        None => relation_catalogue(n),
        Some(tags) => {
            let mut out = Vec::new();
            for &tag in tags {
                if n >= tag.min_n() {
                    out.extend(tag_instances(tag, n));
                }
            }
            out.sort();
            out
        }
    };
    if let Some(cap) = max_cases {
        if catalogue.len() > cap {
            return Err(Error::BudgetExceeded {
                needed: catalogue.len() as u64,
                budget: cap as u64,
            });
        }
    }
    catalogue
        .par_iter()
        .map(|id| verify_relation(id, n))
        .collect()
}

pub fn suite_summary(n: usize, reports: &[RelationReport]) -> SuiteSummary {
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.residual_zero)
        .map(|r| format!("{}{:?}", r.tag, r.indices))
        .collect();
    SuiteSummary {
        n,
        total: reports.len(),
        passed: reports.len() - failed.len(),
        failed: failed.len(),
        failed_instances: failed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rn2_lhs_has_the_three_expected_words() {
        let id = RelationId::new(RelationTag::Rn2, vec![1, 2, 3]);
        let lhs = relation_lhs(&id, 3).unwrap();
        // P_12 P_23 - P_23 P_12 - 2 F_123
        assert_eq!(lhs.num_terms(), 3);
        assert_eq!(lhs.degree(), Some(4));
    }

    #[test]
    fn rnd5_allows_repeated_outer_index() {
        let id = RelationId::new(RelationTag::Rnd5, vec![1, 1, 2, 3, 4]);
        let lhs = relation_lhs(&id, 4).unwrap();
        // P_11 F_234 - P_12 F_134 + P_13 F_124 - P_14 F_123
        assert_eq!(lhs.num_terms(), 4);
        assert_eq!(lhs.degree(), Some(5));
    }

    #[test]
    fn det8_lhs_has_leading_degree_eight() {
        let id = RelationId::new(RelationTag::Det8N4, vec![]);
        let lhs = relation_lhs(&id, 4).unwrap();
        assert_eq!(lhs.degree(), Some(8));
        assert!(relation_lhs(&id, 3).is_err());
    }

    #[test]
    fn w_vanishes_at_rank_one() {
        let id = RelationId::new(RelationTag::Srn7W, vec![1, 2, 3]);
        let report = verify_relation(&id, 3).unwrap();
        assert!(report.residual_zero, "w_123 must evaluate to zero");
        assert_eq!(report.residual_terms, 0);
    }

    #[test]
    fn rn1_commuting_pairs_verify() {
        let id = RelationId::new(RelationTag::Rn1, vec![1, 2, 3, 4]);
        assert!(verify_relation(&id, 4).unwrap().residual_zero);
    }

    #[test]
    fn distinctness_is_enforced_per_tag() {
        let id = RelationId::new(RelationTag::Rn2, vec![1, 2, 2]);
        assert!(relation_lhs(&id, 3).is_err());
        let id = RelationId::new(RelationTag::Rn1, vec![1, 2, 1, 3]);
        assert!(relation_lhs(&id, 4).is_err());
    }

    #[test]
    fn rank_one_suite_passes() {
        let reports = relation_suite(3, None, None).unwrap();
        let summary = suite_summary(3, &reports);
        assert_eq!(summary.failed, 0, "failures: {:?}", summary.failed_instances);
        // rn0 centralities, rn2, rn3 instances, w instances, Q and w centralities
        let tags: std::collections::BTreeSet<&str> =
            reports.iter().map(|r| r.tag.as_str()).collect();
        for expected in ["rn0_central", "rn2", "rn3", "srn7_w", "Q_central", "w_central"] {
            assert!(tags.contains(expected), "missing tag {expected}");
        }
    }

    #[test]
    fn suite_respects_case_budget() {
        let err = relation_suite(3, None, Some(5)).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn reports_serialize_as_json_lines() {
        let id = RelationId::new(RelationTag::Rn2, vec![1, 2, 3]);
        let report = verify_relation(&id, 3).unwrap();
        let line = report.to_json_line();
        assert!(line.starts_with("{\"tag\":\"rn2\",\"indices\":[1,2,3],\"n\":3,"));
        assert!(line.contains("\"residual_zero\":true"));
        assert!(line.contains("\"millis\":"));
    }

    #[test]
    fn tag_round_trips_through_strings() {
        for tag in RelationTag::ALL {
            assert_eq!(tag.as_str().parse::<RelationTag>().unwrap(), tag);
        }
        assert!("nope".parse::<RelationTag>().is_err());
    }
}
