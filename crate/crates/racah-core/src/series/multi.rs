//! The multigraded Hilbert-Poincaré series
//! `F_n(t_1,...,t_n) = (Π_a 1/(1-t_a)) (Σ_{μ⊨k, ν⊨k} t^{μ+ν} - Σ_{μ⊨k, ν⊨k-1} t^{μ+ν})`.
//!
//! Compositions are enumerated lexicographically and streamed straight into
//! the coefficient table; the pair count `C(k+n-1,k)^2` grows too fast to
//! materialize.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

use super::truncated::TruncatedSeries;

/// Multivariate series truncated per variable, dense storage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiSeries {
    bounds: Vec<u32>,
    strides: Vec<usize>,
    data: Vec<BigInt>,
}

impl MultiSeries {
    pub fn zero(bounds: Vec<u32>) -> Self {
        let mut strides = vec![0usize; bounds.len()];
        let mut size = 1usize;
        for (i, &b) in bounds.iter().enumerate().rev() {
            strides[i] = size;
            size *= b as usize + 1;
        }
        MultiSeries {
            bounds,
            strides,
            data: vec![BigInt::zero(); size],
        }
    }

    pub fn n(&self) -> usize {
        self.bounds.len()
    }

    pub fn bounds(&self) -> &[u32] {
        &self.bounds
    }

    fn offset(&self, exps: &[u32]) -> Option<usize> {
        if exps.len() != self.bounds.len() {
            return None;
        }
        let mut off = 0usize;
        for ((&e, &b), &s) in exps.iter().zip(&self.bounds).zip(&self.strides) {
            if e > b {
                return None;
            }
            off += e as usize * s;
        }
        Some(off)
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.offset(exps)
            .map(|off| self.data[off].clone())
            .unwrap_or_else(BigInt::zero)
    }

    pub fn add_at(&mut self, exps: &[u32], delta: i64) {
        if let Some(off) = self.offset(exps) {
            self.data[off] += delta;
        }
    }

    /// Multiply by `1/(1 - t_axis)`: a running prefix sum along one axis.
    fn geometric_axis(&mut self, axis: usize) {
        let stride = self.strides[axis];
        let bound = self.bounds[axis] as usize;
        let block = stride * (bound + 1);
        for base in 0..self.data.len() / block {
            for inner in 0..stride {
                let start = base * block + inner;
                for e in 1..=bound {
                    let prev = self.data[start + (e - 1) * stride].clone();
                    self.data[start + e * stride] += prev;
                }
            }
        }
    }

    /// Non-zero entries in lexicographic exponent order.
    pub fn iter_nonzero(&self) -> impl Iterator<Item = (Vec<u32>, &BigInt)> + '_ {
        self.data.iter().enumerate().filter_map(move |(off, c)| {
            if c.is_zero() {
                return None;
            }
            let mut exps = vec![0u32; self.bounds.len()];
            let mut rest = off;
            for (i, &s) in self.strides.iter().enumerate() {
                exps[i] = (rest / s) as u32;
                rest %= s;
            }
            Some((exps, c))
        })
    }

    /// Specialize `t_1 = ... = t_n = t`. Valid up to the smallest bound:
    /// beyond it, exponent tuples outside the box would contribute.
    pub fn specialize(&self) -> TruncatedSeries {
        let trunc = self.bounds.iter().copied().min().unwrap_or(0) as usize;
        let mut out = TruncatedSeries::zero(trunc);
        for (exps, coeff) in self.iter_nonzero() {
            let total: u32 = exps.iter().sum();
            if (total as usize) <= trunc {
                let updated = out.coeff(total as usize) + coeff;
                out.set_coeff(total as usize, updated);
            }
        }
        out
    }
}

/// Streaming enumeration of compositions `μ ⊨ k` into `n` parts with
/// `μ_a <= cap_a`, in lexicographic order.
fn for_each_composition<F: FnMut(&[u32])>(k: u32, caps: &[u32], visit: &mut F) {
    fn recurse<F: FnMut(&[u32])>(k: u32, caps: &[u32], prefix: &mut Vec<u32>, visit: &mut F) {
        let pos = prefix.len();
        if pos + 1 == caps.len() {
            if k <= caps[pos] {
                prefix.push(k);
                visit(prefix);
                prefix.pop();
            }
            return;
        }
        let remaining_cap: u32 = caps[pos + 1..].iter().sum();
        let low = k.saturating_sub(remaining_cap);
        for v in low..=k.min(caps[pos]) {
            prefix.push(v);
            recurse(k - v, caps, prefix, visit);
            prefix.pop();
        }
    }
    if caps.is_empty() {
        return;
    }
    recurse(k, caps, &mut Vec::with_capacity(caps.len()), visit);
}

/// The multigraded series truncated to the per-variable bounds.
pub fn multigraded_series(n: usize, bounds: &[u32]) -> Result<MultiSeries> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "multigraded series needs n >= 2, got {n}"
        )));
    }
    if bounds.len() != n {
        return Err(Error::InvalidArgument(format!(
            "expected {n} bounds, got {}",
            bounds.len()
        )));
    }
    let mut series = MultiSeries::zero(bounds.to_vec());
    let total: u32 = bounds.iter().sum();
    // numerator: Σ_{μ⊨k,ν⊨k} t^{μ+ν} - Σ_{μ⊨k,ν⊨k-1} t^{μ+ν}
    for k in 0..=total.div_ceil(2) {
        let mut mu_caps = bounds.to_vec();
        mu_caps.iter_mut().for_each(|c| *c = (*c).min(k));
        for_each_composition(k, &mu_caps, &mut |mu| {
            let nu_caps: Vec<u32> = bounds.iter().zip(mu).map(|(&b, &m)| b - m).collect();
            for_each_composition(k, &nu_caps, &mut |nu| {
                let exps: Vec<u32> = mu.iter().zip(nu).map(|(&a, &b)| a + b).collect();
                series.add_at(&exps, 1);
            });
            if k > 0 {
                for_each_composition(k - 1, &nu_caps, &mut |nu| {
                    let exps: Vec<u32> = mu.iter().zip(nu).map(|(&a, &b)| a + b).collect();
                    series.add_at(&exps, -1);
                });
            }
        });
    }
    // multiply by Π_a 1/(1 - t_a)
    for axis in 0..n {
        series.geometric_axis(axis);
    }
    Ok(series)
}
