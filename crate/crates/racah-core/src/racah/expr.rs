//! Noncommutative polynomials in the normalized symbols.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::Result;
use crate::rational::{format_rational, Rational};

use super::symbol::RacahSymbol;

pub type Word = Vec<RacahSymbol>;

/// A finite linear combination of ordered symbol words.
///
/// `n` is the ambient index bound; words are stored verbatim (no reordering),
/// zero coefficients are dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RacahExpr {
    n: usize,
    terms: BTreeMap<Word, Rational>,
}

impl RacahExpr {
    pub fn zero(n: usize) -> Self {
        RacahExpr {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), Rational::one());
        RacahExpr { n, terms }
    }

    pub fn constant(n: usize, value: Rational) -> Self {
        let mut expr = Self::zero(n);
        expr.add_term(Vec::new(), value);
        expr
    }

    /// Single canonical `P_ij` (indices in either order).
    pub fn p(n: usize, i: usize, j: usize) -> Result<Self> {
        let sym = RacahSymbol::p(i, j);
        sym.check_bound(n)?;
        let mut expr = Self::zero(n);
        expr.add_term(vec![sym], Rational::one());
        Ok(expr)
    }

    /// `F_ijk` normalized; two equal indices give the zero expression.
    pub fn f(n: usize, i: usize, j: usize, k: usize) -> Result<Self> {
        match RacahSymbol::f(i, j, k) {
            None => Ok(Self::zero(n)),
            Some((sym, sign)) => {
                sym.check_bound(n)?;
                let mut expr = Self::zero(n);
                expr.add_term(vec![sym], Rational::from_integer(sign.into()));
                Ok(expr)
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    /// Filtration degree (2 per `P`, 3 per `F`); `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|w| w.iter().map(RacahSymbol::degree).sum())
            .max()
    }

    pub fn add_term(&mut self, word: Word, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
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

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.n);
        }
        RacahExpr {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c * factor))
                .collect(),
        }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        &(self * other) + &(other * self)
    }
}

impl Add for &RacahExpr {
    type Output = RacahExpr;
    fn add(self, rhs: &RacahExpr) -> RacahExpr {
        assert_eq!(self.n, rhs.n, "ambient index bound mismatch");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &RacahExpr {
    type Output = RacahExpr;
    fn sub(self, rhs: &RacahExpr) -> RacahExpr {
        assert_eq!(self.n, rhs.n, "ambient index bound mismatch");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &RacahExpr {
    type Output = RacahExpr;
    fn neg(self) -> RacahExpr {
        RacahExpr {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &RacahExpr {
    type Output = RacahExpr;
    /// Word concatenation extended bilinearly.
    fn mul(self, rhs: &RacahExpr) -> RacahExpr {
        assert_eq!(self.n, rhs.n, "ambient index bound mismatch");
        let mut out = RacahExpr::zero(self.n);
        for (wx, cx) in &self.terms {
            for (wy, cy) in &rhs.terms {
                let mut word = wx.clone();
                word.extend(wy.iter().cloned());
                out.add_term(word, cx * cy);
            }
        }
        out
    }
}

impl fmt::Display for RacahExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(word, coeff)| {
                let word_text = if word.is_empty() {
                    "1".to_string()
                } else {
                    word.iter()
                        .map(|s| s.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                format!("{} * {}", format_rational(coeff), word_text)
            })
            .collect();
        f.write_str(&rendered.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn normalization_examples() {
        // F_213 -> -F_123
        let f213 = RacahExpr::f(3, 2, 1, 3).unwrap();
        let f123 = RacahExpr::f(3, 1, 2, 3).unwrap();
        assert_eq!(f213, -&f123);
        // P_31 -> P_13
        assert_eq!(
            RacahExpr::p(3, 3, 1).unwrap(),
            RacahExpr::p(3, 1, 3).unwrap()
        );
        // F_112 -> 0
        assert!(RacahExpr::f(3, 1, 1, 2).unwrap().is_zero());
    }

    #[test]
    fn words_are_kept_noncommutative() {
        let p12 = RacahExpr::p(3, 1, 2).unwrap();
        let p23 = RacahExpr::p(3, 2, 3).unwrap();
        let ab = &p12 * &p23;
        let ba = &p23 * &p12;
        assert_ne!(ab, ba);
        assert_eq!(ab.degree(), Some(4));
        let comm = p12.commutator(&p23);
        assert_eq!(comm.num_terms(), 2);
    }

    #[test]
    fn index_bound_is_enforced() {
        assert!(RacahExpr::p(3, 1, 4).is_err());
        assert!(RacahExpr::f(3, 2, 3, 4).is_err());
    }

    #[test]
    fn scalar_terms_merge() {
        let mut e = RacahExpr::constant(2, int(2));
        e.add_term(Vec::new(), int(-2));
        assert!(e.is_zero());
    }
}
