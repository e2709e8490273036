//! Integer sequences attached to graded objects: Hilbert series of graded
//! algebras and graded dimensions of Lie algebras.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Truncated Hilbert series `[h0, ..., hD]` with `h0 = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HilbertSeries(Vec<u64>);

impl HilbertSeries {
    pub fn new(coeffs: Vec<u64>) -> Result<Self> {
        if coeffs.first() != Some(&1) {
            return Err(Error::input("a Hilbert series starts with h0 = 1"));
        }
        Ok(HilbertSeries(coeffs))
    }

    /// Highest degree present.
    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn get(&self, n: usize) -> Option<u64> {
        self.0.get(n).copied()
    }

    /// The series cut down to degree `d`.
    pub fn truncate(&self, d: usize) -> HilbertSeries {
        HilbertSeries(self.0[..=d.min(self.degree())].to_vec())
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Graded dimensions `[d1, ..., dD]` of a positively graded Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GradedDims(pub Vec<u64>);

impl GradedDims {
    /// `d_n`, with `n` starting at 1.
    pub fn get(&self, n: usize) -> Option<u64> {
        n.checked_sub(1).and_then(|i| self.0.get(i).copied())
    }

    pub fn max_degree(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

fn overflow(degree: usize) -> Error {
    Error::Resource { degree: Some(degree), message: "coefficient exceeds 64 bits".into() }
}

/// Dimension of the degree-`n` part of the free Lie algebra on `m` generators.
pub fn witt_number(m: u64, n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::input("Witt numbers start at degree 1"));
    }
    let mut total: i128 = 0;
    for d in 1..=n {
        if !n.is_multiple_of(d) {
            continue;
        }
        let mu = mobius(d);
        if mu == 0 {
            continue;
        }
        let power = (m as i128).checked_pow((n / d) as u32).ok_or_else(|| overflow(n))?;
        total += mu as i128 * power;
    }
    u64::try_from(total / n as i128).map_err(|_| overflow(n))
}

fn mobius(mut n: usize) -> i32 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Coefficients of `∏_{n=1}^{D} (1 - t^n)^{-d_n}` through degree `D`.
pub fn pbw_hilbert(dims: &GradedDims, max_degree: usize) -> Result<HilbertSeries> {
    if dims.max_degree() < max_degree {
        return Err(Error::input(format!(
            "need graded dimensions through degree {max_degree}, got {}",
            dims.max_degree()
        )));
    }
    let mut h = vec![0u64; max_degree + 1];
    h[0] = 1;
    for n in 1..=max_degree {
        let d = dims.0[n - 1];
        // multiply by 1/(1 - t^n), d times
        for _ in 0..d {
            for i in n..=max_degree {
                h[i] = h[i].checked_add(h[i - n]).ok_or_else(|| overflow(i))?;
            }
        }
    }
    Ok(HilbertSeries(h))
}

/// Coefficients of `1 / Σ_k (-1)^k c_k t^k` through degree `D`, for `c_0 = 1`.
pub fn inverse_alternating(poly: &[u64], max_degree: usize) -> Result<HilbertSeries> {
    if poly.first() != Some(&1) {
        return Err(Error::input("polynomial must have constant term 1"));
    }
    let q: Vec<i128> =
        poly.iter().enumerate().map(|(k, &c)| if k % 2 == 0 { c as i128 } else { -(c as i128) }).collect();
    let mut r: Vec<i128> = vec![0; max_degree + 1];
    r[0] = 1;
    for n in 1..=max_degree {
        let mut acc: i128 = 0;
        for k in 1..q.len().min(n + 1) {
            acc = acc.checked_sub(q[k].checked_mul(r[n - k]).ok_or_else(|| overflow(n))?).ok_or_else(|| overflow(n))?;
        }
        r[n] = acc;
    }
    let coeffs = r
        .into_iter()
        .enumerate()
        .map(|(n, x)| {
            u64::try_from(x).map_err(|_| Error::domain(format!("coefficient {x} at degree {n} is not a dimension")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HilbertSeries(coeffs))
}
