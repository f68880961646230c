//! Expansion of `i^(2S)` in the falling-product basis
//! `(n^2 - i^2)((n-1)^2 - i^2)...((n-a+1)^2 - i^2)`.
//!
//! The coefficients `c_{a,S}(n)` are polynomials in `n` of degree `2S - 2a`.
//! They are recovered numerically: for a fixed integer `n`, substituting
//! `i = n, n-1, ..., n-S` gives a triangular system, and each coefficient is
//! then interpolated from enough integer nodes.

use num_traits::{One, Zero};

use crate::exactmath::{rat, BigRat, Poly};

/// `c_{a,S}(n)` for `a = 0..=S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionTable {
    s: u32,
    coeffs: Vec<Poly>,
}

impl ExpansionTable {
    pub fn order(&self) -> u32 {
        self.s
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// `c_{a,S}`.
    pub fn coeff(&self, a: usize) -> &Poly {
        &self.coeffs[a]
    }
}

/// `prod_{r<a} ((n-r)^2 - i^2)` over rationals.
fn falling_product(a: usize, i: &BigRat, n: &BigRat) -> BigRat {
    let i2 = i * i;
    (0..a).fold(BigRat::one(), |acc, r| {
        let nr = n - rat(r as i64);
        acc * (&nr * &nr - &i2)
    })
}

/// Solves the triangular system at one integer `n`.
fn coefficients_at(s: u32, n: i64) -> Vec<BigRat> {
    let n = rat(n);
    let mut c: Vec<BigRat> = Vec::with_capacity(s as usize + 1);
    for a in 0..=s as usize {
        let i = &n - rat(a as i64);
        let lhs = num_traits::pow(i.clone(), 2 * s as usize);
        let known = c
            .iter()
            .enumerate()
            .fold(BigRat::zero(), |acc, (b, cb)| acc + cb * falling_product(b, &i, &n));
        let pivot = falling_product(a, &i, &n);
        debug_assert!(!pivot.is_zero());
        c.push((lhs - known) / pivot);
    }
    c
}

/// Builds the table for `S`.
pub fn expansion_coeffs(s: u32) -> ExpansionTable {
    let su = s as usize;
    // Nodes n = S+1 ..= 3S+1 keep every pivot nonzero.
    let nodes: Vec<i64> = (s as i64 + 1..=3 * s as i64 + 1).collect();
    let samples: Vec<Vec<BigRat>> = nodes.iter().map(|&n| coefficients_at(s, n)).collect();
    let coeffs = (0..=su)
        .map(|a| {
            let count = 2 * (su - a) + 1;
            let points: Vec<(BigRat, BigRat)> = nodes[..count]
                .iter()
                .zip(&samples)
                .map(|(&n, row)| (rat(n), row[a].clone()))
                .collect();
            Poly::interpolate(&points).expect("interpolation nodes are distinct")
        })
        .collect();
    ExpansionTable { s, coeffs }
}

/// Whether `i^(2S) = sum_a c_{a,S}(n) prod_{r<a}((n-r)^2 - i^2)` holds at `(i, n)`.
pub fn expansion_check(table: &ExpansionTable, i: i64, n: i64) -> bool {
    let (i, n) = (rat(i), rat(n));
    let lhs = num_traits::pow(i.clone(), 2 * table.s as usize);
    let rhs = table
        .coeffs
        .iter()
        .enumerate()
        .fold(BigRat::zero(), |acc, (a, c)| acc + c.eval(&n) * falling_product(a, &i, &n));
    lhs == rhs
}

/// LaTeX listing, one `c_{a,S}(n) = ...` per line.
pub fn table_to_latex(table: &ExpansionTable) -> String {
    table
        .coeffs
        .iter()
        .enumerate()
        .map(|(a, c)| format!("c_{{{a},{}}}(n) = {}", table.s, crate::fitter::latex::poly_latex(c)))
        .collect::<Vec<_>>()
        .join("\n")
}

/// JSON value `{"S": .., "coeffs": [["p/q", ...], ...]}`.
pub fn table_to_json(table: &ExpansionTable) -> serde_json::Value {
    let coeffs: Vec<Vec<String>> = table
        .coeffs
        .iter()
        .map(|c| c.coeffs().iter().map(crate::exactmath::rat_to_string).collect())
        .collect();
    serde_json::json!({ "S": table.s, "coeffs": coeffs })
}
