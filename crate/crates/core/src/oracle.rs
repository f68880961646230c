//! Brute-force exact evaluation of every sum family.
//!
//! These are the reference values every closed form is checked against, so
//! they are deliberately literal: build the binomial row once, then add up
//! every term.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::MathError;
use crate::exactmath::{binomial_nonneg, ipow};

/// Which sum a [`SumSpec`] denotes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `sum_{-n<=i,j<=n} |i^s j^t (i^k - j^k)^beta| C(2n,n+i) C(2n,n+j)`
    FullSquare,
    /// `sum_{0<=i<=j<=n} i^s j^t C(2n,n+i) C(2n,n+j)`
    Triangle,
    /// `sum_{j=1}^n j^s C(2n,n+j)`
    SinglePlain,
    /// `sum_{j=1}^n j^s C(2n,n+j)^2`
    SingleSquared,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::FullSquare => "full-square",
            Family::Triangle => "triangle",
            Family::SinglePlain => "single-plain",
            Family::SingleSquared => "single-squared",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = MathError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "full-square" => Ok(Family::FullSquare),
            "triangle" => Ok(Family::Triangle),
            "single-plain" => Ok(Family::SinglePlain),
            "single-squared" => Ok(Family::SingleSquared),
            other => Err(MathError::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// One sum instance. `k` is the raw exponent in `i^k - j^k`; it is ignored
/// (conventionally 0) outside the full-square family, as is `beta`. The
/// single families use `s` as the power of `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SumSpec {
    pub s: u32,
    pub t: u32,
    pub k: u32,
    pub beta: u32,
    pub family: Family,
}

impl SumSpec {
    pub fn full_square(s: u32, t: u32, k: u32, beta: u32) -> Self {
        SumSpec { s, t, k, beta, family: Family::FullSquare }
    }

    pub fn triangle(s: u32, t: u32) -> Self {
        SumSpec { s, t, k: 0, beta: 1, family: Family::Triangle }
    }

    pub fn validate(&self) -> Result<(), MathError> {
        if self.family == Family::FullSquare {
            if self.k == 0 {
                return Err(MathError::InvalidSpec("full-square sums need k >= 1".into()));
            }
            if self.beta == 0 {
                return Err(MathError::InvalidSpec("full-square sums need beta >= 1".into()));
            }
        }
        Ok(())
    }

    /// Reference value at `n`.
    pub fn evaluate(&self, n: u32) -> Result<BigInt, MathError> {
        self.validate()?;
        Ok(match self.family {
            Family::FullSquare => full_square_sum(self, n),
            Family::Triangle => triangle_sum(self.s, self.t, n, n),
            Family::SinglePlain => single_sum(self.s, false, n),
            Family::SingleSquared => single_sum(self.s, true, n),
        })
    }
}

impl fmt::Display for SumSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::FullSquare => write!(
                f,
                "|i^{} j^{} (i^{} - j^{})^{}|",
                self.s, self.t, self.k, self.k, self.beta
            ),
            Family::Triangle => write!(f, "triangle i^{} j^{}", self.s, self.t),
            Family::SinglePlain => write!(f, "single j^{}", self.s),
            Family::SingleSquared => write!(f, "single-squared j^{}", self.s),
        }
    }
}

/// `C(2n, n+i)` for `i = -n..=n`, indexed by `i + n`.
pub(crate) fn central_row(n: u32) -> Vec<BigInt> {
    let n = n as i64;
    (0..=2 * n).map(|r| binomial_nonneg(2 * n, r)).collect()
}

/// Full-square sum for `spec` (which must be a full-square spec) at `n`.
///
/// Rows are evaluated in parallel and added; integer addition makes the
/// result independent of the partitioning.
pub fn full_square_sum(spec: &SumSpec, n: u32) -> BigInt {
    let row = central_row(n);
    let n = n as i64;
    let (s, t, k, beta) = (spec.s, spec.t, spec.k, spec.beta);
    (-n..=n)
        .into_par_iter()
        .map(|j| {
            let cj = &row[(j + n) as usize];
            let jt = ipow(j, t);
            let jk = ipow(j, k);
            let mut acc = BigInt::zero();
            for i in -n..=n {
                let inner = num_traits::pow(ipow(i, k) - &jk, beta as usize);
                if inner.is_zero() {
                    continue;
                }
                let weight = (ipow(i, s) * &jt * inner).abs();
                acc += weight * &row[(i + n) as usize];
            }
            acc * cj
        })
        .reduce(BigInt::zero, |a, b| a + b)
}

/// `sum_{0<=i<=j} i^s j^t C(2n,n+i) C(2m,m+j)`; terms outside the binomial
/// support vanish, so `i` runs over `0..=n` and `j` over `i..=m`.
pub fn triangle_sum(s: u32, t: u32, n: u32, m: u32) -> BigInt {
    let row_n = central_row(n);
    let row_m = central_row(m);
    let (n, m) = (n as i64, m as i64);
    let mut total = BigInt::zero();
    for j in 0..=m {
        let outer = ipow(j, t) * &row_m[(j + m) as usize];
        let mut inner = BigInt::zero();
        for i in 0..=j.min(n) {
            inner += ipow(i, s) * &row_n[(i + n) as usize];
        }
        total += outer * inner;
    }
    total
}

/// `sum_{j=1}^n j^power C(2n,n+j)`, or with the binomial squared.
pub fn single_sum(power: u32, squared: bool, n: u32) -> BigInt {
    let row = central_row(n);
    let n = n as i64;
    (1..=n)
        .map(|j| {
            let c = &row[(j + n) as usize];
            let c = if squared { c * c } else { c.clone() };
            ipow(j, power) * c
        })
        .sum()
}
