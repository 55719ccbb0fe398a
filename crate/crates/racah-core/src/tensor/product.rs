//! Normal ordering inside a single `U(sl2)` factor.
//!
//! The defining brackets in the basis `(e12, e11, e21)` with `e22 = -e11` are
//! `[e11, e12] = e12`, `[e11, e21] = -e21`, `[e12, e21] = 2 e11`.
//! Products are reduced to the PBW order `e12^a e11^b e21^c` by appending the
//! generators of the right operand one at a time; the full per-factor product
//! table is memoized because it is the hot path of every multiplication.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Error;

use super::monomial::FactorMonomial;

/// The three basis generators of `sl2` kept after eliminating `e22`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sl2Gen {
    E12,
    E11,
    E21,
}

impl Sl2Gen {
    pub const ALL: [Sl2Gen; 3] = [Sl2Gen::E12, Sl2Gen::E11, Sl2Gen::E21];

    pub fn monomial(self) -> FactorMonomial {
        match self {
            Sl2Gen::E12 => FactorMonomial::new(1, 0, 0),
            Sl2Gen::E11 => FactorMonomial::new(0, 1, 0),
            Sl2Gen::E21 => FactorMonomial::new(0, 0, 1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Sl2Gen::E12 => "e12",
            Sl2Gen::E11 => "e11",
            Sl2Gen::E21 => "e21",
        }
    }
}

impl FromStr for Sl2Gen {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "e12" => Ok(Sl2Gen::E12),
            "e11" => Ok(Sl2Gen::E11),
            "e21" => Ok(Sl2Gen::E21),
            other => Err(Error::Parse(format!(
                "unknown sl2 generator {other:?}; expected e12, e11 or e21"
            ))),
        }
    }
}

pub type FactorTerms = Vec<(FactorMonomial, BigInt)>;

fn binomial_u64(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::from(1);
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Append one generator on the right of a normal-ordered monomial.
///
/// Rewriting rules, with `m = e12^a e11^b e21^c`:
/// - `m * e21 = (a, b, c+1)`
/// - `m * e11 = (a, b+1, c) + c (a, b, c)`              (from `e21^c e11 = (e11+c) e21^c`)
/// - `m * e12 = sum_j C(b,j) (a+1, j, c)`
///            `- 2c (a, b+1, c-1) - c(c-1) (a, b, c-1)` (from `e21^c e12 = e12 e21^c - 2c e11 e21^{c-1} - c(c-1) e21^{c-1}`
///                                                       and `e11^b e12 = e12 (e11+1)^b`)
fn append_generator(m: FactorMonomial, gen: Sl2Gen) -> FactorTerms {
    let (a, b, c) = (m.e12, m.e11, m.e21);
    match gen {
        Sl2Gen::E21 => vec![(FactorMonomial::new(a, b, c + 1), BigInt::from(1))],
        Sl2Gen::E11 => {
            let mut terms = vec![(FactorMonomial::new(a, b + 1, c), BigInt::from(1))];
            if c > 0 {
                terms.push((FactorMonomial::new(a, b, c), BigInt::from(c)));
            }
            terms
        }
        Sl2Gen::E12 => {
            let mut terms = Vec::with_capacity(b as usize + 3);
            for j in 0..=b {
                terms.push((
                    FactorMonomial::new(a + 1, j, c),
                    binomial_u64(b as u64, j as u64),
                ));
            }
            if c > 0 {
                terms.push((
                    FactorMonomial::new(a, b + 1, c - 1),
                    BigInt::from(-2) * BigInt::from(c),
                ));
                if c > 1 {
                    terms.push((
                        FactorMonomial::new(a, b, c - 1),
                        -BigInt::from(c) * BigInt::from(c - 1),
                    ));
                }
            }
            terms
        }
    }
}

/// Leftmost generator of the PBW word of `m`, with the remaining tail.
fn split_left(m: FactorMonomial) -> Option<(Sl2Gen, FactorMonomial)> {
    if m.e12 > 0 {
        Some((Sl2Gen::E12, FactorMonomial::new(m.e12 - 1, m.e11, m.e21)))
    } else if m.e11 > 0 {
        Some((Sl2Gen::E11, FactorMonomial::new(0, m.e11 - 1, m.e21)))
    } else if m.e21 > 0 {
        Some((Sl2Gen::E21, FactorMonomial::new(0, 0, m.e21 - 1)))
    } else {
        None
    }
}

type ProductTable = DashMap<(FactorMonomial, FactorMonomial), Arc<FactorTerms>>;

fn table() -> &'static ProductTable {
    static TABLE: OnceLock<ProductTable> = OnceLock::new();
    TABLE.get_or_init(DashMap::new)
}

/// Normal-ordered product of two factor monomials, as integer combination of
/// factor monomials. Memoized; safe for concurrent use.
pub fn factor_product(x: FactorMonomial, y: FactorMonomial) -> Arc<FactorTerms> {
    if y.is_one() {
        return Arc::new(vec![(x, BigInt::from(1))]);
    }
    if x.is_one() {
        return Arc::new(vec![(y, BigInt::from(1))]);
    }
    // x ends in e21's and y starts with e12's only when both nontrivial parts
    // meet; everything else merges directly.
    if y.e12 == 0 && (x.e21 == 0 || y.e11 == 0) {
        // No reordering needed: x * y = e12^a e11^b e21^c e11^b' e21^c' with
        // c = 0, or y = e21^c' alone.
        if x.e21 == 0 {
            return Arc::new(vec![(
                FactorMonomial::new(x.e12, x.e11 + y.e11, y.e21),
                BigInt::from(1),
            )]);
        }
        return Arc::new(vec![(
            FactorMonomial::new(x.e12, x.e11, x.e21 + y.e21),
            BigInt::from(1),
        )]);
    }
    if let Some(hit) = table().get(&(x, y)) {
        return hit.clone();
    }
    let (gen, rest) = split_left(y).expect("y is not the unit monomial");
    let mut acc: BTreeMap<FactorMonomial, BigInt> = BTreeMap::new();
    for (m, coeff) in append_generator(x, gen) {
        for (m2, coeff2) in factor_product(m, rest).iter() {
            let entry = acc.entry(*m2).or_insert_with(BigInt::zero);
            *entry += &coeff * coeff2;
        }
    }
    let result: Arc<FactorTerms> = Arc::new(
        acc.into_iter()
            .filter(|(_, coeff)| !coeff.is_zero())
            .collect(),
    );
    table().insert((x, y), result.clone());
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn terms(v: &[(FactorMonomial, i64)]) -> FactorTerms {
        v.iter().map(|(m, c)| (*m, BigInt::from(*c))).collect()
    }

    #[test]
    fn e21_times_e12_applies_single_bracket() {
        // e21 * e12 = e12 e21 - 2 e11
        let got = factor_product(FactorMonomial::new(0, 0, 1), FactorMonomial::new(1, 0, 0));
        assert_eq!(
            *got,
            terms(&[
                (FactorMonomial::new(0, 1, 0), -2),
                (FactorMonomial::new(1, 0, 1), 1),
            ])
        );
    }

    #[test]
    fn e11_moves_past_e12_with_shift() {
        // e11 * e12 = e12 e11 + e12
        let got = factor_product(FactorMonomial::new(0, 1, 0), FactorMonomial::new(1, 0, 0));
        assert_eq!(
            *got,
            terms(&[
                (FactorMonomial::new(1, 0, 0), 1),
                (FactorMonomial::new(1, 1, 0), 1),
            ])
        );
    }

    #[test]
    fn unit_is_neutral() {
        let m = FactorMonomial::new(2, 1, 3);
        assert_eq!(*factor_product(m, FactorMonomial::ONE), terms(&[(m, 1)]));
        assert_eq!(*factor_product(FactorMonomial::ONE, m), terms(&[(m, 1)]));
    }

    #[test]
    fn degree_filtration_holds() {
        let x = FactorMonomial::new(1, 2, 2);
        let y = FactorMonomial::new(2, 1, 1);
        for (m, _) in factor_product(x, y).iter() {
            assert!(m.degree() <= x.degree() + y.degree());
        }
    }
}
