//! Exact checks of the two-parameter inequality
//! `sum_{i,j} |j^2 - i^2| C(2n,n+i) C(2m,m+j) >= 2nm C(2n,n) C(2m,m)`
//! and the identities used to prove it.
//!
//! Sums over `0 <= i < j` are truncated at `j = max(n, m) + 1`; every
//! binomial vanishes beyond that.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::exactmath::{binomial_or_zero, central, frac, BigRat};

/// `C(2n-a, n+i-b)` with the zero convention for negative upper indices.
fn cb(n: u32, a: i64, i: i64) -> BigInt {
    let n = n as i64;
    binomial_or_zero(2 * n - 2 * a, n + i - a)
}

/// `1/2` on the boundary `i = 0`, else 1.
fn alpha(boundary: bool) -> BigRat {
    if boundary {
        frac(1, 2)
    } else {
        frac(1, 1)
    }
}

/// Outcome of an identity at one cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellStatus {
    Holds,
    Fails,
    /// Degenerate cell (a parameter is 0) where the identity is not meant
    /// to apply.
    Skipped,
}

/// Result of a sweep over `0 <= m, n <= max`. Cell lists are sorted by
/// `(m, n)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InequalityReport {
    pub max: u32,
    pub checked: usize,
    pub violations: Vec<(u32, u32)>,
    pub equality_set: Vec<(u32, u32)>,
    pub skipped: Vec<(u32, u32)>,
}

impl InequalityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn cells(max: u32) -> Vec<(u32, u32)> {
    (0..=max).flat_map(|m| (0..=max).map(move |n| (m, n))).collect()
}

/// `sum_{i,j} |j^2 - i^2| C(2n,n+i) C(2m,m+j)`.
pub fn full_sum(n: u32, m: u32) -> BigInt {
    let (ni, mi) = (n as i64, m as i64);
    let row_n: Vec<BigInt> = (-ni..=ni).map(|i| cb(n, 0, i)).collect();
    let mut total = BigInt::zero();
    for j in -mi..=mi {
        let mut inner = BigInt::zero();
        for i in -ni..=ni {
            let w = (j * j - i * i).abs();
            if w != 0 {
                inner += &row_n[(i + ni) as usize] * w;
            }
        }
        total += inner * cb(m, 0, j);
    }
    total
}

/// `sum_{0<=i,j} a(i=0) a(j=0) |j^2 - i^2| C(2n,n+i) C(2m,m+j)`.
pub fn quarter_sum(n: u32, m: u32) -> BigRat {
    let mut total = BigRat::zero();
    for j in 0..=m as i64 {
        for i in 0..=n as i64 {
            let w = (j * j - i * i).abs();
            if w == 0 {
                continue;
            }
            let term = BigRat::from_integer(cb(n, 0, i) * cb(m, 0, j) * w);
            total += term * alpha(i == 0) * alpha(j == 0);
        }
    }
    total
}

/// `2nm C(2n,n) C(2m,m)`.
pub fn theorem_rhs(n: u32, m: u32) -> BigInt {
    BigInt::from(2u64 * n as u64 * m as u64) * central(n as i64) * central(m as i64)
}

/// Checks the inequality on every cell; equality is recorded separately.
pub fn theorem_inequality_check(max: u32) -> InequalityReport {
    let outcomes: Vec<((u32, u32), std::cmp::Ordering)> = cells(max)
        .into_par_iter()
        .map(|(m, n)| ((m, n), full_sum(n, m).cmp(&theorem_rhs(n, m))))
        .collect();
    let mut report = InequalityReport { max, checked: outcomes.len(), ..Default::default() };
    for (cell, ord) in outcomes {
        match ord {
            std::cmp::Ordering::Less => report.violations.push(cell),
            std::cmp::Ordering::Equal => report.equality_set.push(cell),
            std::cmp::Ordering::Greater => {}
        }
    }
    report
}

/// `sum_{0<=i<j} a(i=0) (C(2n,n+i) C(2m-2,m+j-1) - C(2n-2,n+j-1) C(2m,m+i))`.
pub fn decomposition_difference(n: u32, m: u32) -> BigRat {
    let top = n.max(m) as i64 + 1;
    let mut total = BigRat::zero();
    for j in 1..=top {
        for i in 0..j {
            let d = cb(n, 0, i) * cb(m, 1, j) - cb(n, 1, j) * cb(m, 0, i);
            if !d.is_zero() {
                total += BigRat::from_integer(d) * alpha(i == 0);
            }
        }
    }
    total
}

/// Whether `quarter_sum(n, m) = nm/2 C(2n,n) C(2m,m) + 2(m-n) D(n, m)`.
/// Cells with `n = 0` or `m = 0` involve `C(-2, .)` and are skipped.
pub fn decomposition_identity_check(n: u32, m: u32) -> CellStatus {
    if n == 0 || m == 0 {
        return CellStatus::Skipped;
    }
    let rhs = BigRat::from_integer(central(n as i64) * central(m as i64)) * frac(n as i64 * m as i64, 2)
        + decomposition_difference(n, m) * BigRat::from_integer(BigInt::from(2 * (m as i64 - n as i64)));
    if quarter_sum(n, m) == rhs {
        CellStatus::Holds
    } else {
        CellStatus::Fails
    }
}

/// Left side of the telescoped identity.
pub fn gosper_lhs(n: u32, m: u32) -> BigRat {
    let top = n.max(m) as i64 + 1;
    let mut first = BigRat::zero();
    let mut second = BigRat::zero();
    for j in 1..=top {
        for i in 0..j {
            let a = alpha(i == 0);
            let d1 = cb(n, 1, j) * cb(m, 0, i) - cb(n, 0, i) * cb(m, 1, j);
            let d2 = cb(n, 0, i) * cb(m, 0, j) - cb(n, 0, j) * cb(m, 0, i);
            first += BigRat::from_integer(d1) * &a;
            second += BigRat::from_integer(d2) * a;
        }
    }
    first * frac(4, 1) + second
}

/// `-(m-n)/(4(m+n)) C(2n,n) C(2m,m)`; `None` at `m + n = 0`.
pub fn gosper_rhs(n: u32, m: u32) -> Option<BigRat> {
    if n + m == 0 {
        return None;
    }
    let ratio = frac(-(m as i64 - n as i64), 4 * (m as i64 + n as i64));
    Some(ratio * BigRat::from_integer(central(n as i64) * central(m as i64)))
}

/// Checks the telescoped identity; cells with `n = 0` or `m = 0` are skipped.
pub fn gosper_identity_check(n: u32, m: u32) -> CellStatus {
    if n == 0 || m == 0 {
        return CellStatus::Skipped;
    }
    match gosper_rhs(n, m) {
        Some(rhs) if gosper_lhs(n, m) == rhs => CellStatus::Holds,
        _ => CellStatus::Fails,
    }
}

fn identity_sweep(max: u32, check: fn(u32, u32) -> CellStatus) -> InequalityReport {
    let outcomes: Vec<((u32, u32), CellStatus)> = cells(max)
        .into_par_iter()
        .map(|(m, n)| ((m, n), check(n, m)))
        .collect();
    let mut report = InequalityReport { max, checked: outcomes.len(), ..Default::default() };
    for (cell, status) in outcomes {
        match status {
            CellStatus::Holds => report.equality_set.push(cell),
            CellStatus::Fails => report.violations.push(cell),
            CellStatus::Skipped => report.skipped.push(cell),
        }
    }
    report
}

pub fn decomposition_sweep(max: u32) -> InequalityReport {
    identity_sweep(max, decomposition_identity_check)
}

pub fn gosper_sweep(max: u32) -> InequalityReport {
    identity_sweep(max, gosper_identity_check)
}

/// Sides `(left, right)` of the term-wise comparison
/// `C(2n,n+i) C(2m-2,m+j-1)` vs `C(2n-2,n+j-1) C(2m,m+i)`.
pub fn termwise_sides(n: u32, m: u32, i: i64, j: i64) -> (BigInt, BigInt) {
    (cb(n, 0, i) * cb(m, 1, j), cb(n, 1, j) * cb(m, 0, i))
}

/// Whether the term-wise comparison behaves as claimed at `(n, m)` for all
/// `0 <= i < j <= max`: equal throughout when `m = n`, otherwise left >=
/// right with equality only where both sides vanish.
pub fn termwise_cell(n: u32, m: u32, max: u32) -> bool {
    debug_assert!(m >= n);
    (1..=max as i64).all(|j| {
        (0..j).all(|i| {
            let (left, right) = termwise_sides(n, m, i, j);
            if m == n {
                left == right
            } else {
                left > right || (left.is_zero() && right.is_zero())
            }
        })
    })
}

/// Term-wise comparison for all `0 <= n <= m <= max`; violations list
/// the failing `(m, n)` cells.
pub fn termwise_report(max: u32) -> InequalityReport {
    let pairs: Vec<(u32, u32)> = cells(max).into_iter().filter(|&(m, n)| m >= n).collect();
    let outcomes: Vec<((u32, u32), bool)> = pairs
        .into_par_iter()
        .map(|(m, n)| ((m, n), termwise_cell(n, m, max)))
        .collect();
    let mut report = InequalityReport { max, checked: outcomes.len(), ..Default::default() };
    for (cell, ok) in outcomes {
        if !ok {
            report.violations.push(cell);
        } else if cell.0 == cell.1 {
            report.equality_set.push(cell);
        }
    }
    report
}

pub fn termwise_ratio_check(max: u32) -> bool {
    termwise_report(max).passed()
}

/// `4 * quarter_sum(n, n) == full_sum(n, n)` for `n <= max`; returns the
/// failing `n`.
pub fn quarter_consistency(max: u32) -> Vec<u32> {
    (0..=max)
        .filter(|&n| quarter_sum(n, n) * frac(4, 1) != BigRat::from_integer(full_sum(n, n)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_examples() {
        let r = theorem_inequality_check(1);
        assert!(r.passed());
        assert!(r.equality_set.contains(&(0, 0)));
        assert!(r.equality_set.contains(&(1, 1)));
        assert!(full_sum(1, 2) > theorem_rhs(1, 2));
        assert_eq!(full_sum(3, 3), BigInt::from(7200));
        assert_eq!(theorem_rhs(3, 3), BigInt::from(7200));
        assert_eq!(full_sum(1, 1), BigInt::from(8));
    }

    #[test]
    fn equality_only_on_diagonal() {
        let r = theorem_inequality_check(8);
        assert!(r.passed());
        assert_eq!(r.equality_set, (0..=8).map(|m| (m, m)).collect::<Vec<_>>());
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(decomposition_identity_check(1, 1), CellStatus::Holds);
        assert_eq!(decomposition_identity_check(1, 2), CellStatus::Holds);
        assert_eq!(decomposition_identity_check(0, 3), CellStatus::Skipped);
        for n in 1..7 {
            for m in 1..7 {
                assert_eq!(decomposition_identity_check(n, m), CellStatus::Holds, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn degenerate_decomposition_cell_is_off_by_boundary_term() {
        // At n = 0 the zero convention leaves D short by C(2m-2, m-1)/4.
        let m = 3u32;
        let rhs = decomposition_difference(0, m) * frac(2 * m as i64, 1);
        let residue = quarter_sum(0, m) - rhs;
        assert_eq!(residue, BigRat::from_integer(central(m as i64 - 1)) * frac(2 * m as i64, 4));
    }

    #[test]
    fn gosper_examples() {
        assert_eq!(gosper_lhs(1, 1), BigRat::zero());
        assert_eq!(gosper_identity_check(1, 1), CellStatus::Holds);
        assert_eq!(gosper_identity_check(1, 2), CellStatus::Holds);
        assert_eq!(gosper_identity_check(2, 5), CellStatus::Holds);
        assert_eq!(gosper_identity_check(0, 0), CellStatus::Skipped);
        assert_eq!(gosper_rhs(0, 0), None);
    }

    #[test]
    fn termwise_examples() {
        let (l, r) = termwise_sides(2, 2, 0, 1);
        assert_eq!(l, r);
        let (l, r) = termwise_sides(1, 2, 0, 1);
        assert!(l > r);
        let (l, r) = termwise_sides(0, 3, 0, 2);
        assert!(l >= r);
        assert!(termwise_ratio_check(8));
    }

    #[test]
    fn quarter_sum_consistency() {
        assert!(quarter_consistency(8).is_empty());
    }
}
