//! Exact integer and rational arithmetic: binomials, Pochhammer symbols and
//! univariate polynomials over the rationals.
//!
//! Nothing in this crate uses floating point. Rationals are
//! [`num_rational::BigRational`], which keeps every value reduced with a
//! positive denominator.

mod poly;

pub use poly::Poly;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::MathError;

/// Exact rational number.
pub type BigRat = num_rational::BigRational;

/// `value` as a rational.
pub fn rat<T: Into<BigInt>>(value: T) -> BigRat {
    BigRat::from_integer(value.into())
}

/// `num / den` as a reduced rational. Panics if `den` is zero.
pub fn frac<A: Into<BigInt>, B: Into<BigInt>>(num: A, den: B) -> BigRat {
    BigRat::new(num.into(), den.into())
}

/// `2^e` for any integer exponent, exactly.
pub fn pow2(e: i64) -> BigRat {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        BigRat::from_integer(p)
    } else {
        BigRat::new(BigInt::one(), p)
    }
}

/// `base^e` with `0^0 = 1`.
pub fn ipow(base: i64, e: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), e as usize)
}

/// Binomial coefficient `C(n, k)`.
///
/// Returns 0 when `k < 0` or `k > n`. A negative upper index is rejected:
/// no formula here needs one, and the conventions for it disagree.
pub fn binomial(n: i64, k: i64) -> Result<BigInt, MathError> {
    if n < 0 {
        return Err(MathError::UnsupportedNegativeUpper { n, k });
    }
    Ok(binomial_nonneg(n, k))
}

/// `C(n, k)` for an upper index already known to be non-negative.
pub(crate) fn binomial_nonneg(n: i64, k: i64) -> BigInt {
    debug_assert!(n >= 0);
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    // C(n, j+1) = C(n, j) * (n - j) / (j + 1); every prefix is an integer.
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= BigInt::from(n - j);
        acc /= BigInt::from(j + 1);
    }
    acc
}

/// Binomial that also maps a negative upper index to zero.
///
/// Used only where a formula is evaluated on the edge of its domain and the
/// zero convention is the stated contract.
pub fn binomial_or_zero(n: i64, k: i64) -> BigInt {
    if n < 0 {
        BigInt::zero()
    } else {
        binomial_nonneg(n, k)
    }
}

/// Central binomial coefficient `C(2n, n)`.
pub fn central(n: i64) -> BigInt {
    binomial_nonneg(2 * n, n)
}

/// Pochhammer symbol extended to negative orders:
/// `(a)_m = a(a+1)...(a+m-1)` for `m > 0`, `1` for `m = 0`, and
/// `1/((a-1)(a-2)...(a+m))` for `m < 0`.
pub fn pochhammer(alpha: &BigRat, m: i64) -> Result<BigRat, MathError> {
    match m.cmp(&0) {
        std::cmp::Ordering::Equal => Ok(BigRat::one()),
        std::cmp::Ordering::Greater => {
            let mut acc = BigRat::one();
            let mut factor = alpha.clone();
            for _ in 0..m {
                acc *= &factor;
                factor += BigRat::one();
            }
            Ok(acc)
        }
        std::cmp::Ordering::Less => {
            let mut den = BigRat::one();
            let mut factor = alpha - BigRat::one();
            for _ in 0..(-m) {
                if factor.is_zero() {
                    return Err(MathError::PochhammerPole {
                        alpha: alpha.to_string(),
                        m,
                    });
                }
                den *= &factor;
                factor -= BigRat::one();
            }
            Ok(den.recip())
        }
    }
}

/// Integer Pochhammer `(a)_m` for `m >= 0`.
pub fn pochhammer_int(alpha: i64, m: u32) -> BigInt {
    (0..m as i64).fold(BigInt::one(), |acc, r| acc * BigInt::from(alpha + r))
}

/// Converts a rational known to be integral.
pub fn to_integer(value: &BigRat) -> Option<BigInt> {
    value.is_integer().then(|| value.to_integer())
}

/// Least common multiple of the denominators of `values` (1 for an empty list).
pub fn common_denominator<'a, I>(values: I) -> BigInt
where
    I: IntoIterator<Item = &'a BigRat>,
{
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Formats a rational as `p/q`, always with an explicit denominator.
pub fn rat_to_string(value: &BigRat) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rat(text: &str) -> Result<BigRat, MathError> {
    let bad = || MathError::Parse(format!("not a rational: {text:?}"));
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRat::new(num, den))
}

/// `|x|` for a big integer.
pub fn abs_int(x: &BigInt) -> BigInt {
    x.abs()
}
