//! Covering array parameters and interaction-space sizing.

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Target shape of a covering array CA_λ(N; t, k, v): strength `t`, `k`
/// columns over `v` symbols, every t-way interaction required in at least
/// `lambda` rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CAParams {
    pub t: usize,
    pub k: usize,
    pub v: u32,
    pub lambda: u32,
}

impl CAParams {
    pub fn new(t: usize, k: usize, v: u32, lambda: u32) -> Result<Self, Error> {
        if t < 1 || t > k {
            return Err(Error::InvalidParams(format!(
                "strength t={t} must satisfy 1 <= t <= k (k={k})"
            )));
        }
        if v < 2 {
            return Err(Error::InvalidParams(format!("need at least 2 symbols, got v={v}")));
        }
        if lambda < 1 {
            return Err(Error::InvalidParams(format!("index lambda={lambda} must be >= 1")));
        }
        Ok(Self { t, k, v, lambda })
    }

    /// Number of t-column subsets, C(k, t).
    pub fn column_set_count(&self) -> Result<u64, Error> {
        binomial(self.k as u64, self.t as u64).ok_or(Error::CountOverflow {
            t: self.t,
            k: self.k,
            v: self.v,
        })
    }

    /// Number of value assignments per column set, v^t.
    pub fn value_tuple_count(&self) -> Result<u64, Error> {
        checked_pow(self.v as u64, self.t).ok_or(Error::CountOverflow {
            t: self.t,
            k: self.k,
            v: self.v,
        })
    }

    /// Total number of distinct t-way interactions, C(k, t) * v^t.
    pub fn interaction_count(&self) -> Result<u64, Error> {
        let overflow = Error::CountOverflow { t: self.t, k: self.k, v: self.v };
        self.column_set_count()?
            .checked_mul(self.value_tuple_count()?)
            .ok_or(overflow)
    }

    /// Probability that one uniformly random row covers a fixed interaction.
    pub fn coverage_probability(&self) -> f64 {
        (self.v as f64).powi(-(self.t as i32))
    }
}

/// C(n, r) via the multiplicative formula, None on u64 overflow.
pub fn binomial(n: u64, r: u64) -> Option<u64> {
    if r > n {
        return Some(0);
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 1..=r {
        acc = acc.checked_mul((n - r + i) as u128)? / i as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

fn checked_pow(base: u64, exp: usize) -> Option<u64> {
    let exp: u32 = exp.try_into().ok()?;
    base.checked_pow(exp)
}
