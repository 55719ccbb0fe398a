//! The Hilbert-Poincaré series `F_n(t)` of `Z_n(sl2)` by three independent
//! routes, and the identities satisfied by its numerator.

use crate::error::{Error, Result};

use super::combinatorics::{binomial, riordan};
use super::laurent::LaurentSeriesInY;
use super::poly::IntPolynomial;
use super::truncated::TruncatedSeries;

/// `Q_r(t) = Σ_{k=0}^{2r} (-1)^k a_k t^k` with `a_{2k} = C(r,k)^2`,
/// `a_{2k+1} = C(r,k) C(r,k+1)`.
pub fn q_poly(r: usize) -> IntPolynomial {
    let r_i = r as i64;
    let mut coeffs = Vec::with_capacity(2 * r + 1);
    for k in 0..=2 * r {
        let half = (k / 2) as i64;
        let a = if k % 2 == 0 {
            let b = binomial(r_i, half);
            &b * &b
        } else {
            binomial(r_i, half) * binomial(r_i, half + 1)
        };
        coeffs.push(if k % 2 == 0 { a } else { -a });
    }
    IntPolynomial::from_coeffs(coeffs)
}

/// `Q_r(t)` by its constant-term characterization
/// `[(1-y)(1+ty)^r (1+t/y)^r]_0`: an independent route used to cross-check
/// [`q_poly`].
pub fn q_poly_constant_term(r: usize) -> IntPolynomial {
    let trunc = 2 * r;
    let r_i = r as i64;
    // (1 + t y^{±1})^r = Σ_k C(r,k) t^k y^{±k}
    let mut plus = LaurentSeriesInY::zero(trunc);
    let mut minus = LaurentSeriesInY::zero(trunc);
    for k in 0..=r.min(trunc) {
        let mut part = TruncatedSeries::zero(trunc);
        part.set_coeff(k, binomial(r_i, k as i64));
        plus.set_part(k as i64, part.clone());
        minus.set_part(-(k as i64), part);
    }
    let product = LaurentSeriesInY::one_minus_y(trunc)
        .multiply(&plus)
        .multiply(&minus);
    IntPolynomial::from_coeffs(product.constant_term().coeffs().to_vec())
}

/// Series numerator `P_r(t) = (1+t)^r Q_r(t)`; all coefficients non-negative.
pub fn p_poly(r: usize) -> IntPolynomial {
    &IntPolynomial::from_i64(&[1, 1]).pow(r) * &q_poly(r)
}

/// Closed form `F_n(t) = P_{n-2}(t) / (1-t^2)^{3(n-1)}` expanded to degree `K`.
pub fn closed_form_series(n: usize, trunc: usize) -> Result<TruncatedSeries> {
    let r = rank(n)?;
    let numerator = TruncatedSeries::from_poly(&p_poly(r), trunc);
    let denominator =
        TruncatedSeries::from_poly(&IntPolynomial::from_i64(&[1, 0, -1]).pow(3 * (r + 1)), trunc);
    Ok(&numerator * &denominator.reciprocal()?)
}

/// Constant-term route:
/// `F_n(t) = [(1-y) / ((1-t)^n (1-ty)^n (1-t/y)^n)]_0` with `y = x^2`,
/// expanded as a genuine Laurent series and extracting the `y^0` part.
pub fn constant_term_series(n: usize, trunc: usize) -> Result<TruncatedSeries> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "Hilbert-Poincaré series needs n >= 2, got {n}"
        )));
    }
    let plus = LaurentSeriesInY::geometric_power(trunc, 1, n);
    let minus = LaurentSeriesInY::geometric_power(trunc, -1, n);
    let constant = LaurentSeriesInY::one_minus_y(trunc)
        .multiply(&plus)
        .multiply(&minus)
        .constant_term();
    let plain = TruncatedSeries::from_poly(&IntPolynomial::from_i64(&[1, -1]).pow(n), trunc)
        .reciprocal()?;
    Ok(&constant * &plain)
}

/// Direct binomial expansion:
/// `F_n(t) = (1/(1-t)^n) Σ_k (-1)^k ã_k t^k` with
/// `ã_{2k} = C(n+k-1,k)^2`, `ã_{2k+1} = C(n+k-1,k) C(n+k,k+1)`.
pub fn tilde_formula_series(n: usize, trunc: usize) -> Result<TruncatedSeries> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "Hilbert-Poincaré series needs n >= 2, got {n}"
        )));
    }
    let n_i = n as i64;
    let mut alternating = TruncatedSeries::zero(trunc);
    for m in 0..=trunc {
        let k = (m / 2) as i64;
        let a = if m % 2 == 0 {
            let b = binomial(n_i + k - 1, k);
            &b * &b
        } else {
            binomial(n_i + k - 1, k) * binomial(n_i + k, k + 1)
        };
        alternating.set_coeff(m, if m % 2 == 0 { a } else { -a });
    }
    let plain = TruncatedSeries::from_poly(&IntPolynomial::from_i64(&[1, -1]).pow(n), trunc)
        .reciprocal()?;
    Ok(&alternating * &plain)
}

/// Palindromy `t^{3r} P_r(1/t) = P_r(t)`.
pub fn check_palindrome(r: usize) -> bool {
    let p = p_poly(r);
    // deg P_r = 3r, so reversal within degree 3r is plain coefficient reversal
    p.degree() == Some(3 * r) && p.reversed() == p
}

/// Riordan expansion
/// `P_r(t) = Σ_{k=0}^r R_k C(r,k) (1+t^3)^{r-k} (t+t^2)^k`,
/// the form that exhibits the positivity of the numerator.
pub fn check_riordan_expansion(r: usize) -> bool {
    let one_t3 = IntPolynomial::from_i64(&[1, 0, 0, 1]);
    let t_t2 = IntPolynomial::from_i64(&[0, 1, 1]);
    let mut rhs = IntPolynomial::zero();
    for k in 0..=r {
        let coeff = riordan(k) * binomial(r as i64, k as i64);
        let term = &one_t3.pow(r - k) * &t_t2.pow(k);
        rhs = &rhs + &term.scale(&coeff);
    }
    p_poly(r) == rhs
}

fn rank(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "Hilbert-Poincaré series needs n >= 2, got {n}"
        )));
    }
    Ok(n - 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::catalan;
    use num_bigint::BigInt;
    use num_traits::One;

    fn coeffs_i64(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c).expect("fits i64"))
            .collect()
    }

    #[test]
    fn q1_is_one_minus_t_plus_t2() {
        assert_eq!(q_poly(1), IntPolynomial::from_i64(&[1, -1, 1]));
        assert_eq!(q_poly(1).eval_at_one(), catalan(1));
    }

    #[test]
    fn q_matches_constant_term_route() {
        for r in 0..=10 {
            assert_eq!(q_poly(r), q_poly_constant_term(r), "r={r}");
        }
    }

    #[test]
    fn numerators_match_printed_forms() {
        // n=3: 1 + t^3 and n=4: 1 + t^2 + 4t^3 + t^4 + t^6
        assert_eq!(p_poly(0), IntPolynomial::from_i64(&[1]));
        assert_eq!(p_poly(1), IntPolynomial::from_i64(&[1, 0, 0, 1]));
        assert_eq!(p_poly(2), IntPolynomial::from_i64(&[1, 0, 1, 4, 1, 0, 1]));
    }

    #[test]
    fn p2_at_one_counts_doubled_catalan() {
        assert_eq!(p_poly(2).eval_at_one(), BigInt::from(4) * catalan(2));
        assert_eq!(p_poly(2).eval_at_one(), BigInt::from(8));
    }

    #[test]
    fn closed_form_small_cases() {
        // n=2: expansion of 1/(1-t^2)^3
        assert_eq!(
            coeffs_i64(&closed_form_series(2, 4).unwrap()),
            vec![1, 0, 3, 0, 6]
        );
        // n=3: expansion of (1+t^3)/(1-t^2)^6
        assert_eq!(
            coeffs_i64(&closed_form_series(3, 5).unwrap()),
            vec![1, 0, 6, 1, 21, 6]
        );
        // n=4 coefficient at t^5
        assert_eq!(closed_form_series(4, 5).unwrap().coeff(5), BigInt::from(36));
    }

    #[test]
    fn tilde_coefficients_at_n2() {
        // ã_0 = 1, ã_1 = 2, ã_2 = 4 at n = 2
        let n = 2i64;
        assert_eq!(binomial(n - 1, 0) * binomial(n - 1, 0), BigInt::one());
        assert_eq!(binomial(n - 1, 0) * binomial(n, 1), BigInt::from(2));
        assert_eq!(binomial(n, 1) * binomial(n, 1), BigInt::from(4));
        assert_eq!(tilde_formula_series(2, 0).unwrap().coeff(0), BigInt::one());
    }

    #[test]
    fn three_routes_agree_for_small_n() {
        for n in 2..=5 {
            let k = 12;
            let closed = closed_form_series(n, k).unwrap();
            let constant = constant_term_series(n, k).unwrap();
            let tilde = tilde_formula_series(n, k).unwrap();
            assert_eq!(closed, constant, "closed vs constant-term at n={n}");
            assert_eq!(closed, tilde, "closed vs tilde at n={n}");
        }
    }

    #[test]
    fn evaluations_and_palindromy() {
        for r in 0..=12 {
            assert_eq!(q_poly(r).eval_at_one(), catalan(r), "Q_r(1) at r={r}");
            let two_r = BigInt::from(2).pow(r as u32);
            assert_eq!(p_poly(r).eval_at_one(), two_r * catalan(r), "P_r(1) at r={r}");
            assert!(check_palindrome(r), "palindromy at r={r}");
            assert!(check_riordan_expansion(r), "Riordan expansion at r={r}");
            assert!(
                p_poly(r).coeffs().iter().all(|c| c >= &BigInt::from(0)),
                "positivity at r={r}"
            );
        }
    }

    #[test]
    fn invalid_n_is_rejected() {
        assert!(closed_form_series(1, 5).is_err());
        assert!(constant_term_series(0, 5).is_err());
        assert!(tilde_formula_series(1, 5).is_err());
    }
}
