//! PBW monomials of `U(sl2)` and of the n-fold tensor product.

use std::cmp::Ordering;
use std::fmt;

/// A normal-ordered monomial `e12^a e11^b e21^c` in one `U(sl2)` factor.
///
/// The PBW order inside a factor is fixed as `(e12, e11, e21)`; the Casimir
/// `e11^2 - e11 + e12 e21` is then already normal-ordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactorMonomial {
    /// Exponent of `e12`.
    pub e12: u32,
    /// Exponent of `e11`.
    pub e11: u32,
    /// Exponent of `e21`.
    pub e21: u32,
}

impl FactorMonomial {
    pub const ONE: FactorMonomial = FactorMonomial {
        e12: 0,
        e11: 0,
        e21: 0,
    };

    pub fn new(e12: u32, e11: u32, e21: u32) -> Self {
        FactorMonomial { e12, e11, e21 }
    }

    pub fn degree(&self) -> u32 {
        self.e12 + self.e11 + self.e21
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }
}

/// An ordered product of one `FactorMonomial` per tensor factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TensorMonomial {
    factors: Vec<FactorMonomial>,
}

impl TensorMonomial {
    pub fn one(n: usize) -> Self {
        TensorMonomial {
            factors: vec![FactorMonomial::ONE; n],
        }
    }

    pub fn new(factors: Vec<FactorMonomial>) -> Self {
        TensorMonomial { factors }
    }

    /// Single generator monomial in the given 1-based factor.
    pub fn generator(factor_monomial: FactorMonomial, factor: usize, n: usize) -> Self {
        let mut factors = vec![FactorMonomial::ONE; n];
        factors[factor - 1] = factor_monomial;
        TensorMonomial { factors }
    }

    pub fn n(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[FactorMonomial] {
        &self.factors
    }

    pub fn factor(&self, index: usize) -> FactorMonomial {
        self.factors[index]
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(FactorMonomial::degree).sum()
    }

    pub fn is_one(&self) -> bool {
        self.factors.iter().all(FactorMonomial::is_one)
    }
}

/// Deterministic term order: total degree, then lexicographic on the
/// flattened exponent sequence. Serialization relies on this order.
impl Ord for TensorMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

impl PartialOrd for TensorMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TensorMonomial {
    /// Text form `e12_1^a e11_1^b e21_1^c | ... | 1`, one segment per factor.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            let slot = i + 1;
            let mut wrote = false;
            for (name, exp) in [
                ("e12", factor.e12),
                ("e11", factor.e11),
                ("e21", factor.e21),
            ] {
                if exp == 0 {
                    continue;
                }
                if wrote {
                    write!(f, " ")?;
                }
                write!(f, "{name}_{slot}")?;
                if exp > 1 {
                    write!(f, "^{exp}")?;
                }
                wrote = true;
            }
            if !wrote {
                write!(f, "1")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_degree_then_flattened_lex() {
        let a = TensorMonomial::new(vec![FactorMonomial::new(0, 0, 1), FactorMonomial::ONE]);
        let b = TensorMonomial::new(vec![FactorMonomial::ONE, FactorMonomial::new(1, 0, 0)]);
        // same degree; first factor (0,0,1) < (0,0,0)? flattened lex: [0,0,1,0,0,0] vs [0,0,0,1,0,0]
        assert!(b < a);
        let c = TensorMonomial::one(2);
        assert!(c < a && c < b);
    }

    #[test]
    fn display_marks_identity_factors() {
        let m = TensorMonomial::new(vec![FactorMonomial::new(2, 1, 0), FactorMonomial::ONE]);
        assert_eq!(m.to_string(), "e12_1^2 e11_1 | 1");
    }
}
