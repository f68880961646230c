//! Exact solution of rectangular rational systems.
//!
//! Rows are scaled to primitive integer vectors, reduced by fraction-free
//! (Bareiss) elimination, and the echelon form is back-substituted over the
//! rationals. Columns without a pivot are free and set to zero.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::MathError;
use crate::exactmath::{common_denominator, BigRat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSolution {
    pub values: Vec<BigRat>,
    /// Columns that had no pivot (their value is 0).
    pub free: Vec<usize>,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Solved(LinearSolution),
    /// No solution; `row` is the index (in the caller's numbering) of an
    /// equation left as `0 = nonzero` after elimination.
    Inconsistent { row: usize },
}

fn integer_row(coeffs: &[BigRat], rhs: &BigRat) -> Vec<BigInt> {
    let den = common_denominator(coeffs.iter().chain(std::iter::once(rhs)));
    let mut ints: Vec<BigInt> = coeffs
        .iter()
        .chain(std::iter::once(rhs))
        .map(|c| (c * BigRat::from_integer(den.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in &mut ints {
            *c /= &g;
        }
    }
    ints
}

/// Solves `a x = b` exactly.
pub fn solve_exact(a: &[Vec<BigRat>], b: &[BigRat]) -> Result<SolveOutcome, MathError> {
    if a.len() != b.len() {
        return Err(MathError::DimensionMismatch(format!(
            "{} rows but {} right-hand sides",
            a.len(),
            b.len()
        )));
    }
    let cols = a.first().map_or(0, Vec::len);
    if let Some(bad) = a.iter().position(|r| r.len() != cols) {
        return Err(MathError::DimensionMismatch(format!(
            "row {bad} has {} entries, expected {cols}",
            a[bad].len()
        )));
    }

    let mut m: Vec<Vec<BigInt>> = a.iter().zip(b).map(|(r, rhs)| integer_row(r, rhs)).collect();
    let mut origin: Vec<usize> = (0..m.len()).collect();
    let rows = m.len();
    let mut prev = BigInt::one();
    let mut pivots: Vec<usize> = Vec::new();
    let mut free = Vec::new();

    for col in 0..cols {
        let p = pivots.len();
        // Smallest nonzero pivot keeps intermediate growth down a little.
        let Some(best) = (p..rows)
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].bits())
        else {
            free.push(col);
            continue;
        };
        m.swap(p, best);
        origin.swap(p, best);
        let (top, rest) = m.split_at_mut(p + 1);
        let pivot_row = &top[p];
        let pv = &pivot_row[col];
        for row in rest.iter_mut() {
            let factor = std::mem::take(&mut row[col]);
            for j in col + 1..=cols {
                let v = pv * &row[j] - &factor * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = pv.clone();
        pivots.push(col);
    }

    if let Some(r) = (pivots.len()..rows).find(|&r| !m[r][cols].is_zero()) {
        return Ok(SolveOutcome::Inconsistent { row: origin[r] });
    }

    let mut values = vec![BigRat::zero(); cols];
    for (p, &col) in pivots.iter().enumerate().rev() {
        let row = &m[p];
        let mut acc = BigRat::from_integer(row[cols].clone());
        for &later in &pivots[p + 1..] {
            if !row[later].is_zero() {
                acc -= &values[later] * BigRat::from_integer(row[later].clone());
            }
        }
        values[col] = acc / BigRat::from_integer(row[col].clone());
    }
    debug_assert!(values.iter().all(|v| v.denom().is_positive()));
    Ok(SolveOutcome::Solved(LinearSolution { values, free, rank: pivots.len() }))
}
