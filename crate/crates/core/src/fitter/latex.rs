//! LaTeX rendering of polynomials and closed forms.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::form::ClosedForm;
use super::normalize::PrintedTerm;
use crate::exactmath::{BigRat, Poly};

fn coeff_latex(mag: &BigRat) -> String {
    if mag.is_integer() {
        mag.numer().to_string()
    } else {
        format!(r"\frac{{{}}}{{{}}}", mag.numer(), mag.denom())
    }
}

fn power_latex(d: usize) -> String {
    match d {
        0 => String::new(),
        1 => "n".to_string(),
        2..=9 => format!("n^{d}"),
        _ => format!("n^{{{d}}}"),
    }
}

/// Compact rendering, highest power first: `531n^5-1960n^4+2800n^3-90`.
pub fn poly_latex(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (d, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let mag = c.abs();
        if d == 0 || !mag.is_one() {
            out.push_str(&coeff_latex(&mag));
        }
        out.push_str(&power_latex(d));
    }
    out
}

fn linear_latex(a: i64, b: i64) -> String {
    let lead = match a {
        1 => "n".to_string(),
        _ => format!("{a}n"),
    };
    match b.signum() {
        0 => lead,
        1 => format!("{lead}-{b}"),
        _ => format!("{lead}+{}", -b),
    }
}

/// Renders one printed term; returns `(is_negative, magnitude)`.
fn term_latex(term: &PrintedTerm) -> (bool, String) {
    let basis = term.basis.latex();
    let Some((content, shift, primitive)) = term.numerator.factor_content() else {
        return (false, "0".to_string());
    };
    let negative = content.is_negative();
    let u = content.numer().abs();
    let v = content.denom().clone();
    let prim = Poly::new(primitive.iter().map(|c: &BigInt| BigRat::from_integer(c.clone())).collect());
    let prim_is_one = prim.degree() == Some(0);

    let mut num = String::new();
    if !u.is_one() || (shift == 0 && prim_is_one) {
        num.push_str(&u.to_string());
    }
    num.push_str(&power_latex(shift));
    if !prim_is_one {
        if num.is_empty() {
            num.push_str(&poly_latex(&prim));
        } else {
            num.push_str(&format!("({})", poly_latex(&prim)));
        }
    }

    let factor_count = term.den_factors.len() + usize::from(!v.is_one());
    if factor_count == 0 {
        let body = if num == "1" { basis } else { format!("{num}{basis}") };
        return (negative, body);
    }
    let mut den = String::new();
    if !v.is_one() {
        den.push_str(&v.to_string());
    }
    for &(a, b) in &term.den_factors {
        if factor_count > 1 {
            den.push_str(&format!("({})", linear_latex(a, b)));
        } else {
            den.push_str(&linear_latex(a, b));
        }
    }
    (negative, format!(r"\frac{{{num}}}{{{den}}}{basis}"))
}

fn join(terms: Vec<(bool, String)>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (negative, body)) in terms.into_iter().enumerate() {
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

/// Four-basis rendering: every `C(4n,2n)` term stays unshifted.
pub fn emit_latex_canonical(form: &ClosedForm) -> String {
    join(
        form.terms
            .iter()
            .filter(|t| !t.numerator.is_zero())
            .map(|t| term_latex(&PrintedTerm::from_canonical(t).simplified()))
            .collect(),
    )
}

/// Human-facing rendering: a `C(4n,2n)` term with `d` denominator factors is
/// written over `C(4n-d, 2n-d)`, and common factors are cancelled.
pub fn emit_latex(form: &ClosedForm) -> String {
    join(
        form.terms
            .iter()
            .filter(|t| !t.numerator.is_zero())
            .map(|t| term_latex(&PrintedTerm::shifted_from_canonical(t)))
            .collect(),
    )
}
