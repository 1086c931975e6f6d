//! Exact polynomial arithmetic: bivariate counting polynomials in `x, y` and
//! truncated integer power series.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A polynomial in `x` and `y` with nonnegative integer coefficients.
/// Overflow is reported, never wrapped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), u64>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(i: u32, j: u32, c: u64) -> Self {
        let mut p = Self::zero();
        if c != 0 {
            p.terms.insert((i, j), c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, i: u32, j: u32) -> u64 {
        self.terms.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero terms as `((x-degree, y-degree), coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), u64)> + '_ {
        self.terms.iter().map(|(&k, &v)| (k, v))
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: u64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let slot = self.terms.entry((i, j)).or_insert(0);
        *slot = slot.checked_add(c).ok_or(Error::Overflow("polynomial sum"))?;
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for ((i, j), c) in other.terms() {
            out.add_term(i, j, c)?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for ((i1, j1), c1) in self.terms() {
            for ((i2, j2), c2) in other.terms() {
                let c = c1.checked_mul(c2).ok_or(Error::Overflow("polynomial product"))?;
                out.add_term(i1 + i2, j1 + j2, c)?;
            }
        }
        Ok(out)
    }

    pub fn eval(&self, x: u64, y: u64) -> Result<u64> {
        let mut total: u64 = 0;
        for ((i, j), c) in self.terms() {
            let term = x
                .checked_pow(i)
                .and_then(|xi| y.checked_pow(j).and_then(|yj| xi.checked_mul(yj)))
                .and_then(|m| m.checked_mul(c))
                .ok_or(Error::Overflow("polynomial evaluation"))?;
            total = total.checked_add(term).ok_or(Error::Overflow("polynomial evaluation"))?;
        }
        Ok(total)
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        for ((i, j), c) in self.terms() {
            let mut s = String::new();
            if c != 1 || (i == 0 && j == 0) {
                s.push_str(&c.to_string());
            }
            for (var, deg) in [("x", i), ("y", j)] {
                match deg {
                    0 => {}
                    1 => s.push_str(var),
                    d => s.push_str(&format!("{var}^{d}")),
                }
            }
            parts.push(s);
        }
        f.write_str(&parts.join(" + "))
    }
}

/// A power series truncated after `x^(len-1)`, with exact integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries(Vec<i128>);

impl PowerSeries {
    pub fn new(mut coeffs: Vec<i128>, len: usize) -> Self {
        coeffs.resize(len, 0);
        PowerSeries(coeffs)
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Square root of a series with constant term 1, from `s² = f`
    /// solved coefficient by coefficient: `2·s_n = f_n − Σ_{0<k<n} s_k s_{n−k}`.
    /// Fails if some coefficient is not an integer.
    pub fn sqrt(&self) -> Result<PowerSeries> {
        if self.0.first() != Some(&1) {
            return Err(Error::Precondition(
                "series square root needs constant term 1".into(),
            ));
        }
        let mut s = vec![0i128; self.len()];
        s[0] = 1;
        for n in 1..self.len() {
            let mut acc = self.0[n];
            for k in 1..n {
                let prod = s[k]
                    .checked_mul(s[n - k])
                    .ok_or(Error::Overflow("series square root"))?;
                acc = acc.checked_sub(prod).ok_or(Error::Overflow("series square root"))?;
            }
            if acc % 2 != 0 {
                return Err(Error::Precondition(format!(
                    "square root has a non-integral coefficient at degree {n}"
                )));
            }
            s[n] = acc / 2;
        }
        Ok(PowerSeries(s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_eval() {
        let xy = BivariatePoly::monomial(1, 1, 1);
        let p = xy.add(&BivariatePoly::monomial(2, 1, 3)).unwrap();
        let sq = p.mul(&p).unwrap();
        assert_eq!(sq.coefficient(2, 2), 1);
        assert_eq!(sq.coefficient(3, 2), 6);
        assert_eq!(sq.coefficient(4, 2), 9);
        assert_eq!(sq.eval(1, 1).unwrap(), 16);
        assert_eq!(p.to_string(), "xy + 3x^2y");
    }

    #[test]
    fn overflow_is_reported() {
        let big = BivariatePoly::monomial(0, 0, u64::MAX);
        assert_eq!(big.mul(&big), Err(Error::Overflow("polynomial product")));
        assert!(big.add(&BivariatePoly::one()).is_err());
    }

    #[test]
    fn sqrt_of_square() {
        // (1 - x)^2 = 1 - 2x + x^2
        let f = PowerSeries::new(vec![1, -2, 1], 6);
        assert_eq!(f.sqrt().unwrap().coeffs(), &[1, -1, 0, 0, 0, 0]);
        // sqrt(1 - 4x) = 1 - 2 Σ C_{k-1} x^k
        let g = PowerSeries::new(vec![1, -4], 7).sqrt().unwrap();
        assert_eq!(g.coeffs(), &[1, -2, -2, -4, -10, -28, -84]);
        assert!(PowerSeries::new(vec![1, 1], 3).sqrt().is_err());
    }
}
