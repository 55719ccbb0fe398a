//! Sparse elements of `U(sl2)^⊗n` in canonical PBW form.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, Rational};

use super::monomial::{FactorMonomial, TensorMonomial};
use super::product::factor_product;

/// A finite linear combination of PBW-ordered tensor monomials.
///
/// Invariants: no stored zero coefficients, every monomial has exactly `n`
/// factors, and equality is term-by-term equality of the canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElement {
    n: usize,
    terms: BTreeMap<TensorMonomial, Rational>,
}

impl TensorElement {
    pub fn zero(n: usize) -> Self {
        TensorElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::from_monomial(TensorMonomial::one(n), Rational::one())
    }

    pub fn from_monomial(monomial: TensorMonomial, coeff: Rational) -> Self {
        let n = monomial.n();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(monomial, coeff);
        }
        TensorElement { n, terms }
    }

    /// Single generator `g^(factor)` (1-based factor index).
    pub fn generator(factor_monomial: FactorMonomial, factor: usize, n: usize) -> Result<Self> {
        if factor == 0 || factor > n {
            return Err(Error::IndexOutOfRange { index: factor, n });
        }
        Ok(Self::from_monomial(
            TensorMonomial::generator(factor_monomial, factor, n),
            Rational::one(),
        ))
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (TensorMonomial, Rational)>,
    {
        let mut element = Self::zero(n);
        for (monomial, coeff) in terms {
            element.add_term(monomial, coeff);
        }
        element
    }

    fn add_term(&mut self, monomial: TensorMonomial, coeff: Rational) {
        debug_assert_eq!(monomial.n(), self.n);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in the deterministic monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&TensorMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, monomial: &TensorMonomial) -> Rational {
        self.terms.get(monomial).cloned().unwrap_or_else(Rational::zero)
    }

    /// Maximal total degree over stored monomials; `None` for the zero element.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(TensorMonomial::degree).max()
    }

    /// The homogeneous component of the given total degree.
    pub fn homogeneous_part(&self, degree: u32) -> TensorElement {
        TensorElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> TensorElement {
        if factor.is_zero() {
            return Self::zero(self.n);
        }
        TensorElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    /// Product in canonical PBW form. Distinct factors commute; inside each
    /// factor the memoized normal-ordering table applies.
    pub fn multiply(&self, other: &TensorElement) -> Result<TensorElement> {
        if self.n != other.n {
            return Err(Error::FactorCountMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut result = TensorElement::zero(self.n);
        for (mx, cx) in &self.terms {
            for (my, cy) in &other.terms {
                let base = cx * cy;
                let per_factor: Vec<_> = (0..self.n)
                    .map(|i| factor_product(mx.factor(i), my.factor(i)))
                    .collect();
                // Cartesian product over the factor expansions.
                let mut stack: Vec<(Vec<FactorMonomial>, BigInt)> =
                    vec![(Vec::with_capacity(self.n), BigInt::one())];
                for expansion in &per_factor {
                    let mut next = Vec::with_capacity(stack.len() * expansion.len());
                    for (prefix, coeff) in &stack {
                        for (fm, fc) in expansion.iter() {
                            let mut prefix = prefix.clone();
                            prefix.push(*fm);
                            next.push((prefix, coeff * fc));
                        }
                    }
                    stack = next;
                }
                for (factors, int_coeff) in stack {
                    result.add_term(
                        TensorMonomial::new(factors),
                        &base * Rational::from_integer(int_coeff),
                    );
                }
            }
        }
        Ok(result)
    }

    pub fn commutator(&self, other: &TensorElement) -> Result<TensorElement> {
        Ok(&self.multiply(other)? - &other.multiply(self)?)
    }

    pub fn anticommutator(&self, other: &TensorElement) -> Result<TensorElement> {
        Ok(&self.multiply(other)? + &other.multiply(self)?)
    }

    /// Canonical text form: terms in the deterministic order, exact fractions.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(m, c)| format!("{} * {}", format_rational(c), m))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// JSON form: list of `{monomial: [[a,b,c],...], coeff: "p/q"}`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    json!({
                        "monomial": m
                            .factors()
                            .iter()
                            .map(|f| vec![f.e12, f.e11, f.e21])
                            .collect::<Vec<_>>(),
                        "coeff": format_rational(c),
                    })
                })
                .collect(),
        )
    }

    pub fn from_json(n: usize, value: &Value) -> Result<Self> {
        let items = value
            .as_array()
            .ok_or_else(|| Error::Parse("expected a JSON array of terms".into()))?;
        let mut element = Self::zero(n);
        for item in items {
            let coeff = parse_rational(
                item.get("coeff")
                    .and_then(Value::as_str)
                    .ok_or_else(|| Error::Parse("term missing string field 'coeff'".into()))?,
            )?;
            let factors = item
                .get("monomial")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse("term missing array field 'monomial'".into()))?;
            if factors.len() != n {
                return Err(Error::Parse(format!(
                    "monomial has {} factors, expected {n}",
                    factors.len()
                )));
            }
            let mut fs = Vec::with_capacity(n);
            for f in factors {
                let exps = f
                    .as_array()
                    .filter(|v| v.len() == 3)
                    .ok_or_else(|| Error::Parse("factor must be a triple [a,b,c]".into()))?;
                let mut triple = [0u32; 3];
                for (slot, v) in triple.iter_mut().zip(exps) {
                    *slot = v
                        .as_u64()
                        .ok_or_else(|| Error::Parse("exponent must be a non-negative int".into()))?
                        as u32;
                }
                fs.push(FactorMonomial::new(triple[0], triple[1], triple[2]));
            }
            element.add_term(TensorMonomial::new(fs), coeff);
        }
        Ok(element)
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        assert_eq!(self.n, rhs.n, "factor count mismatch in addition");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        assert_eq!(self.n, rhs.n, "factor count mismatch in subtraction");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        TensorElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &TensorElement {
    type Output = TensorElement;
    fn mul(self, rhs: &TensorElement) -> TensorElement {
        self.multiply(rhs).expect("factor count mismatch in product")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use crate::tensor::Sl2Gen;

    fn gen(g: Sl2Gen, factor: usize, n: usize) -> TensorElement {
        TensorElement::generator(g.monomial(), factor, n).unwrap()
    }

    #[test]
    fn single_bracket_example() {
        // (e21 in factor 1) * (e12 in factor 1), n = 1: e12 e21 - 2 e11
        let product = gen(Sl2Gen::E21, 1, 1).multiply(&gen(Sl2Gen::E12, 1, 1)).unwrap();
        let expected = TensorElement::from_terms(
            1,
            [
                (
                    TensorMonomial::new(vec![FactorMonomial::new(1, 0, 1)]),
                    int(1),
                ),
                (
                    TensorMonomial::new(vec![FactorMonomial::new(0, 1, 0)]),
                    int(-2),
                ),
            ],
        );
        assert_eq!(product, expected);
    }

    #[test]
    fn distinct_factors_commute() {
        // (e12 in factor 1) * (e21 in factor 2), n = 2: single ordered monomial
        let left = gen(Sl2Gen::E12, 1, 2);
        let right = gen(Sl2Gen::E21, 2, 2);
        let product = left.multiply(&right).unwrap();
        assert_eq!(product.num_terms(), 1);
        assert_eq!(product, right.multiply(&left).unwrap());
    }

    #[test]
    fn identity_is_neutral() {
        let x = gen(Sl2Gen::E12, 1, 2).multiply(&gen(Sl2Gen::E21, 1, 2)).unwrap();
        assert_eq!(x.multiply(&TensorElement::one(2)).unwrap(), x);
        assert_eq!(TensorElement::one(2).multiply(&x).unwrap(), x);
    }

    #[test]
    fn mismatched_factor_counts_error() {
        let err = gen(Sl2Gen::E12, 1, 2)
            .multiply(&gen(Sl2Gen::E12, 1, 3))
            .unwrap_err();
        assert_eq!(err, Error::FactorCountMismatch { left: 2, right: 3 });
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let x = gen(Sl2Gen::E11, 1, 1);
        let zero = &x - &x;
        assert!(zero.is_zero());
        assert_eq!(zero.degree(), None);
    }

    #[test]
    fn json_round_trip() {
        let x = TensorElement::from_terms(
            2,
            [
                (
                    TensorMonomial::new(vec![
                        FactorMonomial::new(1, 0, 1),
                        FactorMonomial::new(0, 2, 0),
                    ]),
                    rat(-3, 2),
                ),
                (TensorMonomial::one(2), int(7)),
            ],
        );
        let back = TensorElement::from_json(2, &x.to_json()).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn text_form_is_sorted_and_exact() {
        let x = TensorElement::from_terms(
            1,
            [
                (
                    TensorMonomial::new(vec![FactorMonomial::new(0, 1, 0)]),
                    rat(1, 2),
                ),
                (TensorMonomial::one(1), int(-1)),
            ],
        );
        assert_eq!(x.to_text(), "-1 * 1 + 1/2 * e11_1");
    }
}
