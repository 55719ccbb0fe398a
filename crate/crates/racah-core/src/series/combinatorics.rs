//! Catalan numbers, Riordan numbers and the binomial identity used in the
//! series proof.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Binomial coefficient with the usual zero conventions outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n || n < 0 {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `c_r = C(2r, r) - C(2r, r+1)`.
pub fn catalan(r: usize) -> BigInt {
    let r = r as i64;
    binomial(2 * r, r) - binomial(2 * r, r + 1)
}

/// Riordan number `R_k`: the constant term of `(1 - y)(1 + y + 1/y)^k`
/// in `y = x^2`, computed by genuine Laurent-polynomial expansion.
pub fn riordan(k: usize) -> BigInt {
    // exponent -> coefficient of the expanding Laurent polynomial
    let mut poly: BTreeMap<i64, BigInt> = BTreeMap::new();
    poly.insert(0, BigInt::one());
    for _ in 0..k {
        let mut next: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in &poly {
            for step in [-1i64, 0, 1] {
                let entry = next.entry(e + step).or_insert_with(BigInt::zero);
                *entry += c;
            }
        }
        poly = next;
    }
    let at = |e: i64| poly.get(&e).cloned().unwrap_or_else(BigInt::zero);
    // constant term of (1 - y) * poly
    at(0) - at(-1)
}

/// Binomial-transform form of the Riordan number,
/// `R_k = Σ_i (-1)^{k-i} C(k,i) c_i`: the second route, kept alongside the
/// constant-term definition so the two can be compared.
pub fn riordan_binomial_transform(k: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for i in 0..=k {
        let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
        acc += BigInt::from(sign) * binomial(k as i64, i as i64) * catalan(i);
    }
    acc
}

/// `Σ_i C(i+a+b, i) C(b, k-i) C(a, k'-i) == C(k'+b, k) C(k+a, k')`.
pub fn check_gould_identity(a: u32, b: u32, k: u32, kp: u32) -> bool {
    let (a, b, k, kp) = (a as i64, b as i64, k as i64, kp as i64);
    let mut lhs = BigInt::zero();
    for i in 0..=k.max(kp) {
        lhs += binomial(i + a + b, i) * binomial(b, k - i) * binomial(a, kp - i);
    }
    lhs == binomial(kp + b, k) * binomial(k + a, kp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_small_values() {
        let expected = [1i64, 1, 2, 5, 14, 42, 132, 429];
        for (r, &c) in expected.iter().enumerate() {
            assert_eq!(catalan(r), BigInt::from(c));
        }
    }

    #[test]
    fn riordan_small_values_and_transform_agree() {
        // A005043: 1, 0, 1, 1, 3, 6, 15, 36, 91
        let expected = [1i64, 0, 1, 1, 3, 6, 15, 36, 91];
        for (k, &v) in expected.iter().enumerate() {
            assert_eq!(riordan(k), BigInt::from(v), "R_{k}");
        }
        for k in 0..=15 {
            assert_eq!(riordan(k), riordan_binomial_transform(k), "k={k}");
        }
    }

    #[test]
    fn gould_identity_instances() {
        assert!(check_gould_identity(0, 0, 0, 0));
        assert!(check_gould_identity(2, 1, 1, 2));
        for r in 0..=6u32 {
            for k in 0..=6u32 {
                assert!(check_gould_identity(r + 1, r, k, k));
                assert!(check_gould_identity(r + 1, r, k, k + 1));
            }
        }
    }

    #[test]
    fn binomial_edge_cases() {
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(6, 3), BigInt::from(20));
    }
}
