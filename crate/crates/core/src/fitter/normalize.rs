//! Conversion between canonical terms and "printed" terms, which may use a
//! shifted binomial `C(4n-r, 2n-r)` and arbitrary linear denominator
//! factors.

use num_integer::Integer;
use num_traits::Zero;

use super::form::{BasisKind, BasisTerm, ClosedForm};
use crate::error::MathError;
use crate::exactmath::{frac, BigRat, Poly};
use crate::oracle::SumSpec;

/// Basis of a printed term.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrintedBasis {
    /// `C(4n - r, 2n - r)`
    Central4nShift(u32),
    CentralSq,
    Pow4Central,
    Pow16,
}

impl PrintedBasis {
    pub fn latex(self) -> String {
        match self {
            PrintedBasis::Central4nShift(0) => r"\binom{4n}{2n}".to_string(),
            PrintedBasis::Central4nShift(r) => format!(r"\binom{{4n-{r}}}{{2n-{r}}}"),
            PrintedBasis::CentralSq => r"\binom{2n}{n}^2".to_string(),
            PrintedBasis::Pow4Central => r"4^n\binom{2n}{n}".to_string(),
            PrintedBasis::Pow16 => "16^n".to_string(),
        }
    }

    fn kind(self) -> BasisKind {
        match self {
            PrintedBasis::Central4nShift(_) => BasisKind::Central4n,
            PrintedBasis::CentralSq => BasisKind::CentralSq,
            PrintedBasis::Pow4Central => BasisKind::Pow4Central,
            PrintedBasis::Pow16 => BasisKind::Pow16,
        }
    }
}

/// `numerator(n) / prod (a*n - b) * basis(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrintedTerm {
    pub numerator: Poly,
    /// Pairs `(a, b)` for factors `a*n - b`, `a > 0`.
    pub den_factors: Vec<(i64, i64)>,
    pub basis: PrintedBasis,
}

impl PrintedTerm {
    pub fn new(numerator: Poly, den_factors: Vec<(i64, i64)>, basis: PrintedBasis) -> Self {
        PrintedTerm { numerator, den_factors, basis }
    }

    /// Makes every factor primitive, cancels factors that divide the
    /// numerator and sorts the rest.
    pub fn simplified(mut self) -> Self {
        let mut kept = Vec::new();
        for (a, b) in std::mem::take(&mut self.den_factors) {
            assert!(a > 0, "denominator factors need a positive n coefficient");
            let g = a.gcd(&b);
            let (a, b) = (a / g, b / g);
            self.numerator = self.numerator.scale(&frac(1, g));
            let root = frac(b, a);
            if !self.numerator.is_zero() && self.numerator.eval(&root).is_zero() {
                self.numerator = self.numerator.div_rem(&Poly::linear(a, -b)).0;
            } else {
                kept.push((a, b));
            }
        }
        kept.sort();
        self.den_factors = kept;
        self
    }

    pub fn from_canonical(term: &BasisTerm) -> Self {
        let c = term.kind.denominator_scale();
        let basis = match term.kind {
            BasisKind::Central4n => PrintedBasis::Central4nShift(0),
            BasisKind::CentralSq => PrintedBasis::CentralSq,
            BasisKind::Pow4Central => PrintedBasis::Pow4Central,
            BasisKind::Pow16 => PrintedBasis::Pow16,
        };
        let dens = term.denom_offsets.iter().map(|&d| (c, d as i64)).collect();
        PrintedTerm::new(term.numerator.clone(), dens, basis)
    }

    /// Rewrites a `C(4n,2n)` term with `d` denominator factors over
    /// `C(4n-d, 2n-d)`; other terms are returned unchanged.
    pub fn shifted_from_canonical(term: &BasisTerm) -> Self {
        let depth = term.denom_offsets.len() as i64;
        if term.kind != BasisKind::Central4n || depth == 0 {
            return PrintedTerm::from_canonical(term).simplified();
        }
        // C(4n,2n) = C(4n-d,2n-d) * prod_{q<d} (4n-q)/(2n-q)
        let lifts: Vec<(i64, i64)> = (0..depth).map(|q| (4, q)).collect();
        let numerator = &term.numerator * &Poly::product_of_linear(&lifts);
        let mut dens: Vec<(i64, i64)> = (0..depth).map(|q| (2, q)).collect();
        dens.extend(term.denom_offsets.iter().map(|&d| (4, d as i64)));
        PrintedTerm::new(numerator, dens, PrintedBasis::Central4nShift(depth as u32)).simplified()
    }

    /// Canonical equivalent: numerator over `(c n - 1)(c n - 3)...` times
    /// the unshifted basis, with the smallest possible depth.
    pub fn to_canonical(&self) -> Result<BasisTerm, MathError> {
        let kind = self.basis.kind();
        let mut numerator = self.numerator.clone();
        let mut dens = self.den_factors.clone();
        if let PrintedBasis::Central4nShift(r) = self.basis {
            // C(4n-r,2n-r) = C(4n,2n) * prod_{q<r} (2n-q)/(4n-q)
            let r = r as i64;
            numerator = &numerator * &Poly::product_of_linear(&(0..r).map(|q| (2, q)).collect::<Vec<_>>());
            dens.extend((0..r).map(|q| (4, q)));
        }
        let reduced = PrintedTerm::new(numerator, dens, self.basis).simplified();
        if reduced.numerator.is_zero() {
            return Ok(BasisTerm { kind, denom_offsets: vec![], numerator: Poly::zero() });
        }
        let c = kind.denominator_scale();
        let mut depth = 0i64;
        for &(a, b) in &reduced.den_factors {
            let fits = kind.has_denominator() && c % a == 0 && (b * (c / a)) % 2 == 1 && b * (c / a) > 0;
            if !fits {
                return Err(MathError::InvalidSpec(format!(
                    "denominator factor ({a}n - {b}) is not expressible over {kind}"
                )));
            }
            depth = depth.max((b * (c / a) + 1) / 2);
        }
        let canonical_den: Vec<(i64, i64)> = (0..depth).map(|r| (c, 2 * r + 1)).collect();
        let mut q = &reduced.numerator * &Poly::product_of_linear(&canonical_den);
        for &(a, b) in &reduced.den_factors {
            let (quot, rem) = q.div_rem(&Poly::linear(a, -b));
            if !rem.is_zero() {
                return Err(MathError::InvalidSpec("repeated denominator factor".into()));
            }
            q = quot;
        }
        let term = BasisTerm {
            kind,
            denom_offsets: (0..depth).map(|r| 2 * r as u32 + 1).collect(),
            numerator: q,
        };
        Ok(reduce_depth(term))
    }
}

/// Removes trailing denominator factors that divide the numerator.
pub fn reduce_depth(mut term: BasisTerm) -> BasisTerm {
    let c = term.kind.denominator_scale();
    while let Some(&last) = term.denom_offsets.last() {
        let root = frac(last as i64, c);
        if term.numerator.is_zero() || !term.numerator.eval(&root).is_zero() {
            break;
        }
        term.numerator = term.numerator.div_rem(&Poly::linear(c, -(last as i64))).0;
        term.denom_offsets.pop();
    }
    if term.numerator.is_zero() {
        term.denom_offsets.clear();
    }
    term
}

/// Canonical form of a printed expression; printed terms sharing a kind
/// are merged.
pub fn normalize_printed(spec: SumSpec, terms: &[PrintedTerm]) -> Result<ClosedForm, MathError> {
    let mut merged: Vec<BasisTerm> = Vec::new();
    for t in terms {
        let canon = t.to_canonical()?;
        match merged.iter_mut().find(|m| m.kind == canon.kind) {
            None => merged.push(canon),
            Some(existing) => *existing = add_terms(existing, &canon),
        }
    }
    merged.sort_by_key(|t| t.kind);
    ClosedForm::new(spec, merged).map(reduce_form)
}

fn add_terms(a: &BasisTerm, b: &BasisTerm) -> BasisTerm {
    let c = a.kind.denominator_scale();
    let depth = a.denom_offsets.len().max(b.denom_offsets.len());
    let lift = |t: &BasisTerm| {
        let missing: Vec<(i64, i64)> =
            (t.denom_offsets.len()..depth).map(|r| (c, 2 * r as i64 + 1)).collect();
        &t.numerator * &Poly::product_of_linear(&missing)
    };
    reduce_depth(BasisTerm {
        kind: a.kind,
        denom_offsets: (0..depth).map(|r| 2 * r as u32 + 1).collect(),
        numerator: &lift(a) + &lift(b),
    })
}

/// Minimal-depth form without zero terms; two forms denote the same
/// function exactly when their reduced forms are equal.
pub fn reduce_form(form: ClosedForm) -> ClosedForm {
    let spec = form.spec;
    let mut terms: Vec<BasisTerm> = form
        .terms
        .into_iter()
        .map(reduce_depth)
        .filter(|t| !t.numerator.is_zero())
        .collect();
    terms.sort_by_key(|t| t.kind);
    ClosedForm { spec, terms }
}

/// Convenience for tests and tables: `coeff * n^shift * poly(ints)`.
pub fn scaled_poly(coeff: BigRat, shift: usize, ints: &[i64]) -> Poly {
    &Poly::monomial(coeff, shift) * &Poly::from_ints(ints)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn shifted_cubic_round_trips() {
        // 4n^2(5n-2)/(4n-1) C(4n-1,2n-1) == 2n^2(5n-2)/(4n-1) C(4n,2n)
        let printed = PrintedTerm::new(
            scaled_poly(rat(4), 2, &[-2, 5]),
            vec![(4, 1)],
            PrintedBasis::Central4nShift(1),
        );
        let canon = printed.to_canonical().unwrap();
        assert_eq!(canon.denom_offsets, vec![1]);
        assert_eq!(canon.numerator, scaled_poly(rat(2), 2, &[-2, 5]));
        assert_eq!(PrintedTerm::shifted_from_canonical(&canon), printed);
    }

    #[test]
    fn depth_two_shift_agrees_numerically() {
        let canon = BasisTerm {
            kind: BasisKind::Central4n,
            denom_offsets: vec![1, 3],
            numerator: scaled_poly(rat(2), 2, &[-6, 36, -70, 43]),
        };
        let printed = PrintedTerm::shifted_from_canonical(&canon);
        assert_eq!(printed.basis, PrintedBasis::Central4nShift(2));
        assert_eq!(printed.to_canonical().unwrap(), canon);
        for n in 2..8u32 {
            let shifted = crate::exactmath::binomial(4 * n as i64 - 2, 2 * n as i64 - 2).unwrap();
            let num = printed.numerator.eval_int(n as i64);
            let den = printed
                .den_factors
                .iter()
                .fold(rat(1), |acc, &(a, b)| acc * rat(a * n as i64 - b));
            assert_eq!(num / den * BigRat::from_integer(shifted), canon.eval(n));
        }
    }

    #[test]
    fn reduce_depth_drops_removable_factors() {
        // n(4n-3)/((4n-1)(4n-3)) reduces to n/(4n-1).
        let t = BasisTerm {
            kind: BasisKind::Central4n,
            denom_offsets: vec![1, 3],
            numerator: &Poly::from_ints(&[0, 1]) * &Poly::linear(4, -3),
        };
        let r = reduce_depth(t);
        assert_eq!(r.denom_offsets, vec![1]);
        assert_eq!(r.numerator, Poly::from_ints(&[0, 1]));
    }

    #[test]
    fn merge_and_reject() {
        let spec = SumSpec::full_square(0, 0, 2, 1);
        let half = PrintedTerm::new(Poly::monomial(rat(1), 2), vec![], PrintedBasis::CentralSq);
        let form = normalize_printed(spec, &[half.clone(), half]).unwrap();
        assert_eq!(form.terms.len(), 1);
        assert_eq!(form.terms[0].numerator, Poly::monomial(rat(2), 2));
        let bad = PrintedTerm::new(Poly::one(), vec![(2, 1)], PrintedBasis::Pow16);
        assert!(bad.to_canonical().is_err());
        let even = PrintedTerm::new(Poly::one(), vec![(4, 2)], PrintedBasis::Central4nShift(0));
        assert!(even.to_canonical().is_err());
    }
}
