//! Degree-truncated power series with exact integer coefficients.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::poly::IntPolynomial;

/// Coefficients `0..=trunc`; arithmetic is exact and closed at the truncation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    trunc: usize,
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(trunc: usize) -> Self {
        TruncatedSeries {
            trunc,
            coeffs: vec![BigInt::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.coeffs[0] = BigInt::one();
        s
    }

    pub fn from_poly(poly: &IntPolynomial, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        for (deg, coeff) in poly.coeffs().iter().enumerate().take(trunc + 1) {
            s.coeffs[deg] = coeff.clone();
        }
        s
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn coeff(&self, degree: usize) -> BigInt {
        self.coeffs.get(degree).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, degree: usize, value: BigInt) {
        if degree <= self.trunc {
            self.coeffs[degree] = value;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Multiplicative inverse. The constant term must divide every step of
    /// the recursion exactly; in practice the inverted series here are monic
    /// products of `(1 - t^a)` powers.
    pub fn reciprocal(&self) -> Result<TruncatedSeries> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::InvalidArgument(
                "cannot invert a series with zero constant term".into(),
            ));
        }
        let mut inv = Self::zero(self.trunc);
        let (q, r) = BigInt::one().div_rem(a0);
        if !r.is_zero() {
            return Err(Error::NonIntegerCoefficient(format!(
                "1/{a0} is not an integer"
            )));
        }
        inv.coeffs[0] = q;
        for m in 1..=self.trunc {
            let mut acc = BigInt::zero();
            for j in 0..m {
                acc += &inv.coeffs[j] * self.coeff(m - j);
            }
            let (q, r) = (-acc).div_rem(a0);
            if !r.is_zero() {
                return Err(Error::NonIntegerCoefficient(format!(
                    "inverse coefficient at degree {m} is not an integer"
                )));
            }
            inv.coeffs[m] = q;
        }
        Ok(inv)
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        TruncatedSeries {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    fn common_trunc(&self, rhs: &Self) -> usize {
        self.trunc.min(rhs.trunc)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let trunc = self.common_trunc(rhs);
        let mut out = TruncatedSeries::zero(trunc);
        for m in 0..=trunc {
            out.coeffs[m] = self.coeff(m) + rhs.coeff(m);
        }
        out
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let trunc = self.common_trunc(rhs);
        let mut out = TruncatedSeries::zero(trunc);
        for m in 0..=trunc {
            out.coeffs[m] = self.coeff(m) - rhs.coeff(m);
        }
        out
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let trunc = self.common_trunc(rhs);
        let mut out = TruncatedSeries::zero(trunc);
        for i in 0..=trunc {
            if self.coeff(i).is_zero() {
                continue;
            }
            for j in 0..=trunc - i {
                let b = rhs.coeff(j);
                if !b.is_zero() {
                    out.coeffs[i + j] += self.coeff(i) * b;
                }
            }
        }
        out
    }
}
