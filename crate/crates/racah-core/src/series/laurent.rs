//! Laurent series in `y = x^2` with truncated power series in `t` as
//! coefficients.
//!
//! Used for the constant-term extraction `[...]_0`: the integrand expands to
//! `t`-degree `K` with `y`-support contained in `-K..=K`, because each power
//! of `t` carries at most one `y^{±1}`. The support bound is enforced during
//! multiplication to keep everything finite.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::truncated::TruncatedSeries;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentSeriesInY {
    trunc: usize,
    parts: BTreeMap<i64, TruncatedSeries>,
}

impl LaurentSeriesInY {
    pub fn zero(trunc: usize) -> Self {
        LaurentSeriesInY {
            trunc,
            parts: BTreeMap::new(),
        }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.set_part(0, TruncatedSeries::one(trunc));
        s
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn set_part(&mut self, y_exp: i64, series: TruncatedSeries) {
        if series.is_zero() || y_exp.unsigned_abs() as usize > self.trunc {
            return;
        }
        self.parts.insert(y_exp, series);
    }

    /// The `y^exp` coefficient as a series in `t`.
    pub fn part(&self, y_exp: i64) -> TruncatedSeries {
        self.parts
            .get(&y_exp)
            .cloned()
            .unwrap_or_else(|| TruncatedSeries::zero(self.trunc))
    }

    /// Constant-term extraction `[.]_0`: the `y^0` component.
    pub fn constant_term(&self) -> TruncatedSeries {
        self.part(0)
    }

    pub fn support(&self) -> impl Iterator<Item = i64> + '_ {
        self.parts.keys().copied()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let trunc = self.trunc.min(rhs.trunc);
        let mut out = Self::zero(trunc);
        let keys: std::collections::BTreeSet<i64> =
            self.parts.keys().chain(rhs.parts.keys()).copied().collect();
        for key in keys {
            out.set_part(key, &self.part(key) + &rhs.part(key));
        }
        out
    }

    pub fn multiply(&self, rhs: &Self) -> Self {
        let trunc = self.trunc.min(rhs.trunc);
        let mut acc: BTreeMap<i64, TruncatedSeries> = BTreeMap::new();
        for (ex, sx) in &self.parts {
            for (ey, sy) in &rhs.parts {
                let e = ex + ey;
                if e.unsigned_abs() as usize > trunc {
                    continue;
                }
                let product = sx * sy;
                match acc.entry(e) {
                    std::collections::btree_map::Entry::Vacant(slot) => {
                        slot.insert(product);
                    }
                    std::collections::btree_map::Entry::Occupied(mut slot) => {
                        let sum = &*slot.get() + &product;
                        *slot.get_mut() = sum;
                    }
                }
            }
        }
        let mut out = Self::zero(trunc);
        for (e, s) in acc {
            out.set_part(e, s);
        }
        out
    }

    /// `(1 - t y^d)^{-n}` expanded with binomial coefficients, `d ∈ {1, -1, 0}`.
    pub fn geometric_power(trunc: usize, y_step: i64, n: usize) -> Self {
        let mut out = Self::zero(trunc);
        for k in 0..=trunc {
            let y_exp = y_step * k as i64;
            if y_exp.unsigned_abs() as usize > trunc {
                break;
            }
            let mut part = TruncatedSeries::zero(trunc);
            part.set_coeff(k, super::combinatorics::binomial((n + k - 1) as i64, k as i64));
            // merge with any part already sharing the exponent (y_step = 0)
            let merged = &out.part(y_exp) + &part;
            out.set_part(y_exp, merged);
        }
        out
    }

    /// The Laurent polynomial `1 - y`.
    pub fn one_minus_y(trunc: usize) -> Self {
        let mut out = Self::one(trunc);
        out.set_part(1, TruncatedSeries::one(trunc).scale(&BigInt::from(-1)));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn support_bound_is_enforced() {
        let a = LaurentSeriesInY::geometric_power(3, 1, 2);
        assert!(a.support().all(|e| e.unsigned_abs() <= 3));
        let b = LaurentSeriesInY::geometric_power(3, -1, 2);
        let p = a.multiply(&b);
        assert!(p.support().all(|e| e.unsigned_abs() <= 3));
    }

    #[test]
    fn pairing_of_opposite_powers() {
        // [y^0] of 1/(1-ty)^n * 1/(1-t/y)^n at t^2k is binom(n+k-1,k)^2
        let k = 4;
        let a = LaurentSeriesInY::geometric_power(k * 2, 1, 2);
        let b = LaurentSeriesInY::geometric_power(k * 2, -1, 2);
        let ct = a.multiply(&b).constant_term();
        for j in 0..=k {
            let expected = super::super::combinatorics::binomial((2 + j - 1) as i64, j as i64);
            assert_eq!(ct.coeff(2 * j), &expected * &expected);
            if 2 * j + 1 <= 2 * k {
                assert_eq!(ct.coeff(2 * j + 1), BigInt::from(0));
            }
        }
    }

    #[test]
    fn one_minus_y_flips_sign() {
        let m = LaurentSeriesInY::one_minus_y(2);
        assert_eq!(m.part(0), TruncatedSeries::one(2));
        assert_eq!(m.part(1), TruncatedSeries::one(2).scale(&BigInt::from(-1)));
    }
}
