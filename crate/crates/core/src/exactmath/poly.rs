use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{rat, BigRat};
use crate::error::MathError;

/// Univariate polynomial in `n` with rational coefficients.
///
/// `coeffs[d]` is the coefficient of `n^d`; the highest stored coefficient is
/// never zero, so the zero polynomial has no coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Poly::new(vec![c])
    }

    /// `c * n^d`.
    pub fn monomial(c: BigRat, d: usize) -> Self {
        let mut coeffs = vec![BigRat::zero(); d + 1];
        coeffs[d] = c;
        Poly::new(coeffs)
    }

    /// `a*n + b`.
    pub fn linear(a: i64, b: i64) -> Self {
        Poly::new(vec![rat(b), rat(a)])
    }

    pub fn new(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    /// Coefficient of `n^d` (zero beyond the degree).
    pub fn coeff(&self, d: usize) -> BigRat {
        self.coeffs.get(d).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRat> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, n: &BigRat) -> BigRat {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRat::zero(), |acc, c| acc * n + c)
    }

    pub fn eval_int(&self, n: i64) -> BigRat {
        self.eval(&rat(n))
    }

    pub fn scale(&self, c: &BigRat) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Product of `(a_i n - b_i)` over the given linear factors.
    pub fn product_of_linear(factors: &[(i64, i64)]) -> Poly {
        factors
            .iter()
            .fold(Poly::one(), |acc, &(a, b)| &acc * &Poly::linear(a, -b))
    }

    /// Euclidean division by a nonzero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let d_deg = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let q_len = self.coeffs.len().saturating_sub(d_deg);
        let mut quot = vec![BigRat::zero(); q_len];
        for i in (0..q_len).rev() {
            let c = &rem[i + d_deg] / &lead;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(d_deg);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Splits `self` as `content * n^shift * primitive`, where `primitive`
    /// has coprime integer coefficients, a nonzero constant term and a
    /// positive leading coefficient. Returns `None` for the zero polynomial.
    pub fn factor_content(&self) -> Option<(BigRat, usize, Vec<BigInt>)> {
        let shift = self.coeffs.iter().position(|c| !c.is_zero())?;
        let tail = &self.coeffs[shift..];
        let den = super::common_denominator(tail);
        let ints: Vec<BigInt> = tail
            .iter()
            .map(|c| (c * BigRat::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let primitive = ints.iter().map(|c| c / &g).collect();
        Some((BigRat::new(g, den), shift, primitive))
    }

    /// Unique polynomial of degree `< points.len()` through the given
    /// points (Newton divided differences).
    pub fn interpolate(points: &[(BigRat, BigRat)]) -> Result<Poly, MathError> {
        for (i, (x, _)) in points.iter().enumerate() {
            if points[..i].iter().any(|(y, _)| y == x) {
                return Err(MathError::DuplicateNode(x.to_string()));
            }
        }
        let xs: Vec<&BigRat> = points.iter().map(|(x, _)| x).collect();
        let mut table: Vec<BigRat> = points.iter().map(|(_, y)| y.clone()).collect();
        let count = points.len();
        for level in 1..count {
            for i in (level..count).rev() {
                table[i] = (&table[i] - &table[i - 1]) / (xs[i] - xs[i - level]);
            }
        }
        // Horner-style expansion of the Newton form.
        let mut acc = Poly::zero();
        for i in (0..count).rev() {
            let shift = Poly::new(vec![-xs[i].clone(), BigRat::one()]);
            acc = &(&acc * &shift) + &Poly::constant(table[i].clone());
        }
        Ok(acc)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|d| self.coeff(d) - rhs.coeff(d)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    /// Plain-text rendering, highest power first, e.g. `2*n^2 - 1/2*n + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match (d, unit) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match d {
                0 => {}
                1 => write!(f, "n")?,
                _ => write!(f, "n^{d}")?,
            }
        }
        Ok(())
    }
}
