//! Closed-form discovery: pick an ansatz, solve for its coefficients on
//! exact oracle values, then check the result on fresh guard points.

pub mod form;
pub mod latex;
pub mod linsolve;
pub mod normalize;
pub mod plan;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::MathError;
use crate::exactmath::{BigRat, Poly};
use crate::oracle::SumSpec;

pub use form::{eval_closed_form, BasisKind, BasisTerm, ClosedForm};
pub use latex::{emit_latex, emit_latex_canonical, poly_latex};
pub use linsolve::{solve_exact, LinearSolution, SolveOutcome};
pub use normalize::{normalize_printed, reduce_form, PrintedBasis, PrintedTerm};
pub use plan::{degree_plan, generic_plan, DegreePlan, ParityCase, PlanEntry, PlanSource};

/// Number of guard points checked after every solve.
pub const GUARD_POINTS: u32 = 10;
/// Fit points beyond the number of unknowns.
pub const SURPLUS_POINTS: u32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FitStatus {
    Verified,
    /// The system had free columns; they were set to zero and the guards
    /// still passed.
    UnderdeterminedResolved,
    /// No solution, or a guard point disagreed.
    Inconsistent,
}

impl FitStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            FitStatus::Verified => "verified",
            FitStatus::UnderdeterminedResolved => "underdetermined-resolved",
            FitStatus::Inconsistent => "inconsistent",
        }
    }

    pub fn is_success(self) -> bool {
        self != FitStatus::Inconsistent
    }
}

#[derive(Clone, Debug)]
pub struct FitReport {
    pub plan: DegreePlan,
    /// Reduced closed form (empty when inconsistent).
    pub form: ClosedForm,
    /// Form exactly as solved, one term per plan entry.
    pub raw_form: ClosedForm,
    pub fit_points: Vec<u32>,
    pub guard_points: Vec<u32>,
    pub status: FitStatus,
    /// First `n` at which the equations or guards failed.
    pub offending_n: Option<u32>,
    /// Free unknowns as `(kind, power of n)`.
    pub free_variables: Vec<(BasisKind, usize)>,
}

/// Fits `spec` with its proved degree plan.
pub fn fit(spec: &SumSpec) -> Result<FitReport, MathError> {
    let plan = degree_plan(spec)?;
    fit_with_plan(spec, &plan)
}

fn oracle_values(spec: &SumSpec, points: &[u32]) -> Result<Vec<BigInt>, MathError> {
    points.par_iter().map(|&n| spec.evaluate(n)).collect()
}

/// Fits `spec` with an explicit plan.
pub fn fit_with_plan(spec: &SumSpec, plan: &DegreePlan) -> Result<FitReport, MathError> {
    spec.validate()?;
    let columns: Vec<(usize, usize)> = plan
        .entries
        .iter()
        .enumerate()
        .flat_map(|(e, entry)| (0..=entry.max_degree).map(move |d| (e, d)))
        .collect();
    let unknowns = columns.len() as u32;
    let fit_count = unknowns + SURPLUS_POINTS;
    let fit_points: Vec<u32> = (1..=fit_count).collect();
    let guard_points: Vec<u32> = (fit_count + 1..=fit_count + GUARD_POINTS).collect();
    let all_points: Vec<u32> = fit_points.iter().chain(&guard_points).copied().collect();
    let values = oracle_values(spec, &all_points)?;

    let shells: Vec<BasisTerm> = plan
        .entries
        .iter()
        .map(|e| BasisTerm { kind: e.kind, denom_offsets: e.denom_offsets.clone(), numerator: Poly::zero() })
        .collect();

    let rows: Vec<Vec<BigRat>> = fit_points
        .par_iter()
        .map(|&n| {
            let scales: Vec<BigRat> = shells
                .iter()
                .map(|t| BigRat::from_integer(t.kind.value(n)) / t.denominator_at(n))
                .collect();
            let nn = BigRat::from_integer(BigInt::from(n));
            columns
                .iter()
                .map(|&(e, d)| &scales[e] * num_traits::pow(nn.clone(), d))
                .collect()
        })
        .collect();
    let rhs: Vec<BigRat> = values[..fit_points.len()]
        .iter()
        .map(|v| BigRat::from_integer(v.clone()))
        .collect();

    let empty = ClosedForm { spec: *spec, terms: Vec::new() };
    let failed = |n: u32| FitReport {
        plan: plan.clone(),
        form: empty.clone(),
        raw_form: empty.clone(),
        fit_points: fit_points.clone(),
        guard_points: guard_points.clone(),
        status: FitStatus::Inconsistent,
        offending_n: Some(n),
        free_variables: Vec::new(),
    };

    let solution = match solve_exact(&rows, &rhs)? {
        SolveOutcome::Inconsistent { row } => return Ok(failed(fit_points[row])),
        SolveOutcome::Solved(sol) => sol,
    };

    let mut terms = shells;
    let mut per_term: Vec<Vec<BigRat>> =
        plan.entries.iter().map(|e| vec![BigRat::zero(); e.max_degree + 1]).collect();
    for (&(e, d), value) in columns.iter().zip(solution.values) {
        per_term[e][d] = value;
    }
    for (term, coeffs) in terms.iter_mut().zip(per_term) {
        term.numerator = Poly::new(coeffs);
    }
    let raw_form = ClosedForm::new(*spec, terms)?;

    for (&n, value) in guard_points.iter().zip(&values[fit_points.len()..]) {
        if raw_form.eval(n) != BigRat::from_integer(value.clone()) {
            return Ok(failed(n));
        }
    }

    let free_variables: Vec<(BasisKind, usize)> = solution
        .free
        .iter()
        .map(|&c| (plan.entries[columns[c].0].kind, columns[c].1))
        .collect();
    let status = if free_variables.is_empty() {
        FitStatus::Verified
    } else {
        FitStatus::UnderdeterminedResolved
    };
    Ok(FitReport {
        plan: plan.clone(),
        form: reduce_form(raw_form.clone()),
        raw_form,
        fit_points,
        guard_points,
        status,
        offending_n: None,
        free_variables,
    })
}

/// Fits `spec` over caller-chosen kinds, raising a common numerator degree
/// from 0 to `max_degree` until the guards pass. `depth_of` gives the number
/// of denominator factors per kind. Returns the last (inconsistent) attempt
/// if no degree works.
pub fn fit_generic(
    spec: &SumSpec,
    kinds: &[BasisKind],
    max_degree: usize,
    depth_of: impl Fn(BasisKind) -> u32,
) -> Result<FitReport, MathError> {
    spec.validate()?;
    let mut last = None;
    for degree in 0..=max_degree {
        let plan = generic_plan(kinds, degree, &depth_of)?;
        let report = fit_with_plan(spec, &plan)?;
        if report.status.is_success() {
            return Ok(report);
        }
        last = Some(report);
    }
    Ok(last.expect("at least one degree is tried"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::fitter::normalize::scaled_poly;

    #[test]
    fn square_difference() {
        let r = fit(&SumSpec::full_square(0, 0, 2, 1)).unwrap();
        assert_eq!(r.status, FitStatus::Verified);
        assert_eq!(r.form.terms.len(), 1);
        assert_eq!(r.form.numerator(BasisKind::CentralSq), Poly::monomial(rat(2), 2));
        assert_eq!(r.fit_points, (1..=6).collect::<Vec<_>>());
        assert_eq!(r.guard_points, (7..=16).collect::<Vec<_>>());
    }

    #[test]
    fn cubic_difference() {
        let r = fit(&SumSpec::full_square(0, 0, 3, 1)).unwrap();
        assert_eq!(r.status, FitStatus::Verified);
        let t = r.form.term(BasisKind::Central4n).unwrap();
        assert_eq!(t.denom_offsets, vec![1]);
        assert_eq!(t.numerator, scaled_poly(rat(2), 2, &[-2, 5]));
        assert_eq!(emit_latex(&r.form), r"\frac{4n^2(5n-2)}{4n-1}\binom{4n-1}{2n-1}");
    }

    #[test]
    fn odd_odd_square() {
        let r = fit(&SumSpec::full_square(1, 1, 2, 1)).unwrap();
        assert_eq!(r.status, FitStatus::Verified);
        let t = r.form.term(BasisKind::CentralSq).unwrap();
        assert_eq!(t.denom_offsets, vec![1]);
        assert_eq!(t.numerator, scaled_poly(rat(2), 3, &[-1, 1]));
    }

    #[test]
    fn oversized_plan_puts_zero_in_surplus() {
        let spec = SumSpec::full_square(0, 0, 2, 1);
        let plan = generic_plan(&[BasisKind::CentralSq], 6, |_| 0).unwrap();
        let r = fit_with_plan(&spec, &plan).unwrap();
        assert_eq!(r.status, FitStatus::Verified);
        let raw = r.raw_form.numerator(BasisKind::CentralSq);
        assert_eq!(raw, Poly::monomial(rat(2), 2));
        for d in 3..=6 {
            assert!(raw.coeff(d).is_zero());
        }
    }

    #[test]
    fn too_small_plan_is_inconsistent() {
        let spec = SumSpec::full_square(0, 0, 3, 1);
        let plan = generic_plan(&[BasisKind::CentralSq], 1, |_| 0).unwrap();
        let r = fit_with_plan(&spec, &plan).unwrap();
        assert_eq!(r.status, FitStatus::Inconsistent);
        assert!(r.offending_n.is_some());
        assert!(r.form.terms.is_empty());
    }

    #[test]
    fn unneeded_kind_gets_zero_numerator() {
        let spec = SumSpec::full_square(0, 0, 2, 1);
        let plan = DegreePlan {
            source: PlanSource::Generic,
            parity: ParityCase::EvenEven,
            index: 0,
            entries: vec![
                PlanEntry { kind: BasisKind::CentralSq, max_degree: 3, denom_offsets: vec![] },
                PlanEntry { kind: BasisKind::Pow16, max_degree: 0, denom_offsets: vec![] },
            ],
        };
        let r = fit_with_plan(&spec, &plan).unwrap();
        assert_eq!(r.status, FitStatus::Verified);
        assert_eq!(r.form.numerator(BasisKind::CentralSq), Poly::monomial(rat(2), 2));
        assert!(r.form.term(BasisKind::Pow16).is_none());
    }

    #[test]
    fn generic_escalation_finds_the_square_form() {
        let spec = SumSpec::full_square(0, 0, 2, 1);
        let r = fit_generic(&spec, &[BasisKind::CentralSq], 4, |_| 0).unwrap();
        assert_eq!(r.status, FitStatus::Verified);
        assert_eq!(r.plan.entries[0].max_degree, 2);
    }
}
