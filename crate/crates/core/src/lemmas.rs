//! Closed-form evaluators for the fundamental triangle sums
//! `sum_{0<=i<=j} i^a j^b C(2n,n+i) C(2m,m+j)` with `a, b in {0, 1}`, the
//! single sums `sum_{j=1}^n j^p C(2n,n+j)` and `sum_{j=1}^n j^p C(2n,n+j)^2`,
//! and direct checks of the classical identities behind them.
//!
//! Every `l`-sum in the fundamental formulas is routed through
//! [`signed_sum`], which is what lets one formula serve both `n >= m` and
//! `n < m`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::MathError;
use crate::exactmath::{binomial, central, frac, pochhammer_int, pow2, rat, BigRat};
use crate::expansion::{expansion_coeffs, ExpansionTable};
use crate::oracle::{single_sum, triangle_sum};

/// Summation range `sum_{k=lower}^{upper_exclusive - 1}` with the signed
/// convention: forward when `upper_exclusive > lower`, empty when equal, and
/// minus the sum over `upper_exclusive..lower` otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedRange {
    pub lower: i64,
    pub upper_exclusive: i64,
}

impl SignedRange {
    pub fn new(lower: i64, upper_exclusive: i64) -> Self {
        SignedRange { lower, upper_exclusive }
    }

    /// The range written `sum_{k=lower}^{last}` with an inclusive upper limit.
    pub fn inclusive(lower: i64, last: i64) -> Self {
        SignedRange::new(lower, last + 1)
    }
}

pub fn signed_sum<F>(range: SignedRange, mut term: F) -> BigRat
where
    F: FnMut(i64) -> BigRat,
{
    let SignedRange { lower: m, upper_exclusive: n } = range;
    if n >= m {
        (m..n).fold(BigRat::zero(), |acc, k| acc + term(k))
    } else {
        -(n..m).fold(BigRat::zero(), |acc, k| acc + term(k))
    }
}

/// Binomial as a rational. Callers guarantee a non-negative upper index.
fn c(n: i64, k: i64) -> BigRat {
    BigRat::from_integer(binomial(n, k).expect("upper index is non-negative here"))
}

/// `factor * body()`, skipping `body` entirely when `factor` is zero. The
/// formulas carry prefactors such as `m` or `mn` that annihilate terms whose
/// binomials would otherwise leave the supported domain.
fn scaled<F: FnOnce() -> BigRat>(factor: BigRat, body: F) -> BigRat {
    if factor.is_zero() {
        BigRat::zero()
    } else {
        factor * body()
    }
}

/// `sum_{l=0}^{n-m} C(2n-2l, n-l) C(2m+2l, m+l)`, shared by all four lemmas.
fn diagonal_sum(n: i64, m: i64) -> BigRat {
    signed_sum(SignedRange::inclusive(0, n - m), |l| {
        c(2 * n - 2 * l, n - l) * c(2 * m + 2 * l, m + l)
    })
}

/// `sum_{l=0}^{n-m-1} C(2n-2l-2, n-l-1) C(2m+2l, m+l)`.
fn shifted_n_sum(n: i64, m: i64) -> BigRat {
    signed_sum(SignedRange::inclusive(0, n - m - 1), |l| {
        c(2 * n - 2 * l - 2, n - l - 1) * c(2 * m + 2 * l, m + l)
    })
}

/// `sum_{0<=i<=j} C(2n,n+i) C(2m,m+j)`.
pub fn fundamental_s00(n: u32, m: u32) -> BigRat {
    let (n, m) = (n as i64, m as i64);
    pow2(2 * n + 2 * m - 3) + frac(1, 4) * c(2 * n + 2 * m, n + m)
        + frac(1, 2) * c(2 * n, n) * c(2 * m, m)
        + pow2(2 * m - 2) * c(2 * n, n)
        - frac(1, 8) * diagonal_sum(n, m)
}

/// `sum_{0<=i<=j} i C(2n,n+i) C(2m,m+j)`.
pub fn fundamental_s10(n: u32, m: u32) -> BigRat {
    let (n, m) = (n as i64, m as i64);
    let nr = rat(n);
    scaled(-&nr / rat(4), || c(2 * n + 2 * m, n + m))
        + scaled(nr.clone(), || pow2(2 * m - 2) * c(2 * n, n))
        + scaled(&nr / rat(8), || diagonal_sum(n, m))
        - scaled(&nr / rat(2), || shifted_n_sum(n, m))
}

/// `sum_{0<=i<=j} j C(2n,n+i) C(2m,m+j)`.
pub fn fundamental_s01(n: u32, m: u32) -> BigRat {
    let (n, m) = (n as i64, m as i64);
    let mr = rat(m);
    scaled(&mr / rat(4), || c(2 * n + 2 * m, n + m))
        + scaled(mr.clone(), || c(2 * n, n) * c(2 * m - 2, m - 2))
        - scaled(&mr / rat(8), || diagonal_sum(n, m))
        + scaled(&mr / rat(2), || {
            signed_sum(SignedRange::inclusive(0, n - m + 1), |l| {
                c(2 * n - 2 * l, n - l) * c(2 * m + 2 * l - 2, m + l - 1)
            })
        })
}

/// `sum_{0<=i<=j} i j C(2n,n+i) C(2m,m+j)`.
pub fn fundamental_s11(n: u32, m: u32) -> BigRat {
    let (n, m) = (n as i64, m as i64);
    let mn = rat(m * n);
    scaled(&mn / rat(2), || c(2 * n + 2 * m - 2, n + m - 1))
        - scaled(&mn / rat(2), || c(2 * n + 2 * m - 2, n + m - 2))
        + scaled(&mn / rat(8), || diagonal_sum(n, m))
        - scaled(&mn / rat(2), || shifted_n_sum(n, m))
}

/// Which fundamental sum: the exponents of `i` and `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fundamental {
    S00,
    S10,
    S01,
    S11,
}

impl Fundamental {
    pub const ALL: [Fundamental; 4] =
        [Fundamental::S00, Fundamental::S10, Fundamental::S01, Fundamental::S11];

    pub fn exponents(self) -> (u32, u32) {
        match self {
            Fundamental::S00 => (0, 0),
            Fundamental::S10 => (1, 0),
            Fundamental::S01 => (0, 1),
            Fundamental::S11 => (1, 1),
        }
    }

    pub fn eval(self, n: u32, m: u32) -> BigRat {
        match self {
            Fundamental::S00 => fundamental_s00(n, m),
            Fundamental::S10 => fundamental_s10(n, m),
            Fundamental::S01 => fundamental_s01(n, m),
            Fundamental::S11 => fundamental_s11(n, m),
        }
    }
}

/// `0^(2k)` with `0^0 = 1`.
fn zero_pow(k: u32) -> BigRat {
    if k == 0 {
        BigRat::one()
    } else {
        BigRat::zero()
    }
}

/// `c_{b,k}(n) (2n-2b+1)_{2b}`, the weight of the shifted binomial
/// `C(2n-2b, n+j-b)` after expanding `j^(2k)`.
fn even_weight(table: &ExpansionTable, b: usize, n: i64) -> BigRat {
    let b_i = b as i64;
    let p = pochhammer_int(2 * n - 2 * b_i + 1, 2 * b as u32);
    if p.is_zero() {
        return BigRat::zero();
    }
    table.coeff(b).eval_int(n) * BigRat::from_integer(p)
}

/// `c_{b,k}(n) (n-b)_{b+1} (n-b+1)_b`.
fn odd_weight(table: &ExpansionTable, b: usize, n: i64) -> BigRat {
    let b_i = b as i64;
    let p = pochhammer_int(n - b_i, b as u32 + 1) * pochhammer_int(n - b_i + 1, b as u32);
    if p.is_zero() {
        return BigRat::zero();
    }
    table.coeff(b).eval_int(n) * BigRat::from_integer(p)
}

/// `sum_{j=1}^n j^(2k) C(2n,n+j)` in closed form.
pub fn single_even_plain(k: u32, n: u32) -> BigRat {
    single_even_plain_with(&expansion_coeffs(k), n)
}

pub fn single_even_plain_with(table: &ExpansionTable, n: u32) -> BigRat {
    let k = table.order();
    let n = n as i64;
    let series = (0..=k as usize).fold(BigRat::zero(), |acc, b| {
        let w = even_weight(table, b, n);
        if w.is_zero() {
            acc
        } else {
            acc + w * pow2(-2 * b as i64 - 1)
        }
    });
    -zero_pow(k) / rat(2) * c(2 * n, n) + pow2(2 * n) * series
}

/// `sum_{j=1}^n j^(2k+1) C(2n,n+j)` in closed form.
pub fn single_odd_plain(k: u32, n: u32) -> BigRat {
    single_odd_plain_with(&expansion_coeffs(k), n)
}

pub fn single_odd_plain_with(table: &ExpansionTable, n: u32) -> BigRat {
    let k = table.order();
    let n = n as i64;
    let series = (0..=k as usize).fold(BigRat::zero(), |acc, b| acc + odd_weight(table, b, n));
    frac(1, 2) * c(2 * n, n) * series
}

/// `sum_{j=1}^n j^(2k) C(2n,n+j)^2` in closed form.
pub fn single_even_squared(k: u32, n: u32) -> BigRat {
    single_even_squared_with(&expansion_coeffs(k), n)
}

pub fn single_even_squared_with(table: &ExpansionTable, n: u32) -> BigRat {
    let k = table.order();
    let n = n as i64;
    let series = (0..=k as usize).fold(BigRat::zero(), |acc, b| {
        let w = even_weight(table, b, n);
        if w.is_zero() {
            acc
        } else {
            let b = b as i64;
            acc + w * c(4 * n - 2 * b, 2 * n - b)
        }
    });
    let cn = c(2 * n, n);
    -zero_pow(k) / rat(2) * &cn * &cn + frac(1, 2) * series
}

/// `sum_{j=1}^n j^(2k+1) C(2n,n+j)^2` in closed form.
pub fn single_odd_squared(k: u32, n: u32) -> BigRat {
    single_odd_squared_with(&expansion_coeffs(k), n)
}

pub fn single_odd_squared_with(table: &ExpansionTable, n: u32) -> BigRat {
    if n == 0 {
        return BigRat::zero();
    }
    let k = table.order();
    let n = n as i64;
    let series = (0..=k as usize).fold(BigRat::zero(), |acc, b| {
        let w = odd_weight(table, b, n);
        if w.is_zero() {
            // Also guards 2n - b = 0, which only happens once the
            // Pochhammer factor has already vanished.
            acc
        } else {
            acc + w * frac(n, 2 * (2 * n - b as i64))
        }
    });
    let cn = c(2 * n, n);
    series * &cn * &cn
}

/// The four single-sum closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SingleLemma {
    /// `sum j^(2k) C(2n,n+j)`
    EvenPlain,
    /// `sum j^(2k+1) C(2n,n+j)`
    OddPlain,
    /// `sum j^(2k) C(2n,n+j)^2`
    EvenSquared,
    /// `sum j^(2k+1) C(2n,n+j)^2`
    OddSquared,
}

impl SingleLemma {
    pub const ALL: [SingleLemma; 4] = [
        SingleLemma::EvenPlain,
        SingleLemma::OddPlain,
        SingleLemma::EvenSquared,
        SingleLemma::OddSquared,
    ];

    /// `(power of j, squared)` for the sum this lemma evaluates.
    pub fn shape(self, k: u32) -> (u32, bool) {
        match self {
            SingleLemma::EvenPlain => (2 * k, false),
            SingleLemma::OddPlain => (2 * k + 1, false),
            SingleLemma::EvenSquared => (2 * k, true),
            SingleLemma::OddSquared => (2 * k + 1, true),
        }
    }

    pub fn eval_with(self, table: &ExpansionTable, n: u32) -> BigRat {
        match self {
            SingleLemma::EvenPlain => single_even_plain_with(table, n),
            SingleLemma::OddPlain => single_odd_plain_with(table, n),
            SingleLemma::EvenSquared => single_even_squared_with(table, n),
            SingleLemma::OddSquared => single_odd_squared_with(table, n),
        }
    }
}

/// `sum_{i=0}^m C(2m,m+i) C(2n,n+i) = C(2m,m)C(2n,n)/2 + C(2m+2n,m+n)/2`, by
/// direct summation of the left side.
pub fn chu_vandermonde_check(n: u32, m: u32) -> bool {
    let (n, m) = (n as i64, m as i64);
    let lhs: BigInt = (0..=m)
        .map(|i| central_binom(2 * m, m + i) * central_binom(2 * n, n + i))
        .sum();
    let rhs = frac(1, 2) * BigRat::from_integer(central(m) * central(n))
        + frac(1, 2) * c(2 * m + 2 * n, m + n);
    BigRat::from_integer(lhs) == rhs
}

fn central_binom(n: i64, k: i64) -> BigInt {
    crate::exactmath::binomial_nonneg(n, k)
}

/// `sum_{j=1}^n j C(2n-2b, n+j-b) C(2n, n+j) = 2n(n-b)/(2n-b) C(2n-2b-1, n-b) C(2n-1, n)`
/// for `n >= 1`, `b <= n-1`.
pub fn dixon_identity_check(n: u32, b: u32) -> Result<bool, MathError> {
    if n == 0 || b + 1 > n {
        return Err(MathError::InvalidSpec(format!(
            "dixon check needs n >= 1 and b <= n-1 (got n={n}, b={b})"
        )));
    }
    let (n, b) = (n as i64, b as i64);
    let lhs: BigInt = (1..=n)
        .map(|j| BigInt::from(j) * central_binom(2 * n - 2 * b, n + j - b) * central_binom(2 * n, n + j))
        .sum();
    let rhs = frac(2 * n * (n - b), 2 * n - b) * c(2 * n - 2 * b - 1, n - b) * c(2 * n - 1, n);
    Ok(BigRat::from_integer(lhs) == rhs)
}

/// One disagreement found by a sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaMismatch {
    pub lemma: String,
    pub n: u32,
    pub m: u32,
    pub closed_form: String,
    pub oracle: String,
}

/// Compares the four fundamental evaluators with the triangle oracle on
/// `0 <= n, m <= max`.
pub fn check_fundamentals(max: u32) -> Vec<LemmaMismatch> {
    let mut out = Vec::new();
    for n in 0..=max {
        for m in 0..=max {
            for lemma in Fundamental::ALL {
                let (s, t) = lemma.exponents();
                let closed = lemma.eval(n, m);
                let oracle = BigRat::from_integer(triangle_sum(s, t, n, m));
                if closed != oracle {
                    out.push(LemmaMismatch {
                        lemma: format!("{lemma:?}"),
                        n,
                        m,
                        closed_form: closed.to_string(),
                        oracle: oracle.to_string(),
                    });
                }
            }
        }
    }
    out
}

/// Compares the single-sum closed forms with the oracle for `k <= max_k`,
/// `n <= max_n`. The `m` field of a mismatch carries `k`.
pub fn check_singles(max_k: u32, max_n: u32) -> Vec<LemmaMismatch> {
    let mut out = Vec::new();
    for k in 0..=max_k {
        let table = expansion_coeffs(k);
        for lemma in SingleLemma::ALL {
            let (power, squared) = lemma.shape(k);
            for n in 0..=max_n {
                let closed = lemma.eval_with(&table, n);
                let oracle = BigRat::from_integer(single_sum(power, squared, n));
                if closed != oracle {
                    out.push(LemmaMismatch {
                        lemma: format!("{lemma:?}"),
                        n,
                        m: k,
                        closed_form: closed.to_string(),
                        oracle: oracle.to_string(),
                    });
                }
            }
        }
    }
    out
}
