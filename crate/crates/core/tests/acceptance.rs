//! Acceptance suite. Prints one PASS/FAIL line per criterion, including the
//! wall-clock time against its budget, and exits nonzero if any fails.
//!
//! Run with `cargo test --release -p absbinom-core --test acceptance`.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use absbinom_core::exactmath::{central, BigRat, Poly};
use absbinom_core::expansion::{expansion_check, expansion_coeffs};
use absbinom_core::fitter::{
    self, degree_plan, fit_generic, fit_with_plan, normalize_printed, BasisKind, ClosedForm,
    DegreePlan, FitStatus, ParityCase, PlanEntry, PlanSource,
};
use absbinom_core::inequality;
use absbinom_core::lemmas;
use absbinom_core::oracle::full_square_sum;
use absbinom_core::SumSpec;
use num_bigint::BigInt;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn central_square_law() -> Outcome {
    let spec = SumSpec::full_square(0, 0, 2, 1);
    for n in 0..=30u32 {
        let c = central(n as i64);
        let expected = BigInt::from(2 * n * n) * &c * &c;
        ensure(full_square_sum(&spec, n) == expected, || format!("mismatch at n={n}"))?;
    }
    Ok("n = 0..30".into())
}

fn fundamentals() -> Outcome {
    let bad = lemmas::check_fundamentals(12);
    ensure(bad.is_empty(), || format!("{} mismatches, first {:?}", bad.len(), bad.first()))?;
    Ok("S00 S10 S01 S11 on 0 <= n, m <= 12".into())
}

fn singles() -> Outcome {
    let bad = lemmas::check_singles(4, 15);
    ensure(bad.is_empty(), || format!("{} mismatches, first {:?}", bad.len(), bad.first()))?;
    Ok("four shapes, k <= 4, n <= 15".into())
}

fn compare(reference: &common::Reference, fitted: &ClosedForm) -> Result<(), String> {
    let printed = normalize_printed(reference.spec, &reference.printed).map_err(|e| e.to_string())?;
    ensure(printed == reference.canonical, || {
        format!("{}: printed form does not normalize to the stored canonical form", reference.name)
    })?;
    ensure(*fitted == reference.canonical, || {
        format!("{}: fitted form differs: {}", reference.name, fitter::emit_latex_canonical(fitted))
    })
}

fn rediscovery() -> Outcome {
    for reference in common::rediscoveries() {
        let report = fitter::fit(&reference.spec).map_err(|e| e.to_string())?;
        ensure(report.status == FitStatus::Verified, || {
            format!("{}: status {}", reference.name, report.status.as_str())
        })?;
        ensure(report.guard_points.len() == 10, || "guard count".into())?;
        compare(&reference, &report.form)?;
    }
    Ok("5 identities, 10 guard points each".into())
}

fn stretch() -> Outcome {
    let refs = common::stretch();
    let a = &refs[0];
    let report = fit_generic(&a.spec, &[BasisKind::CentralSq, BasisKind::Pow16], 12, |k| {
        if k == BasisKind::CentralSq { 3 } else { 0 }
    })
    .map_err(|e| e.to_string())?;
    ensure(report.status.is_success(), || format!("{}: {}", a.name, report.status.as_str()))?;
    compare(a, &report.form)?;

    let b = &refs[1];
    let report = fit_generic(&b.spec, &[BasisKind::Central4n, BasisKind::Pow4Central], 12, |k| {
        if k == BasisKind::Central4n { 4 } else { 0 }
    })
    .map_err(|e| e.to_string())?;
    ensure(report.status.is_success(), || format!("{}: {}", b.name, report.status.as_str()))?;
    compare(b, &report.form)?;
    Ok("2 identities via escalating generic Ansatz".into())
}

/// All four kinds with bounds covering every parity case at this `L`.
fn union_plan(l: u32) -> DegreePlan {
    let odd = |d: u32| (0..d).map(|r| 2 * r + 1).collect::<Vec<_>>();
    DegreePlan {
        source: PlanSource::Generic,
        parity: ParityCase::EvenEven,
        index: 0,
        entries: vec![
            PlanEntry { kind: BasisKind::Central4n, max_degree: (3 * l + 3) as usize, denom_offsets: odd(l + 1) },
            PlanEntry { kind: BasisKind::CentralSq, max_degree: (2 * l + 2 + l / 2) as usize, denom_offsets: odd((l + 1) / 2) },
            PlanEntry { kind: BasisKind::Pow4Central, max_degree: (2 * l + 2) as usize, denom_offsets: vec![] },
            PlanEntry { kind: BasisKind::Pow16, max_degree: (2 * l + 2) as usize, denom_offsets: vec![] },
        ],
    }
}

fn parity_specs() -> Vec<(SumSpec, u32)> {
    let mut specs = Vec::new();
    for l in 0..=3u32 {
        for big_s in 0..=l {
            for big_t in 0..=l - big_s {
                let k = l - big_s - big_t;
                for (ps, pt) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
                    let (s, t) = (2 * big_s + ps, 2 * big_t + pt);
                    if k >= 1 {
                        specs.push((SumSpec::full_square(s, t, 2 * k, 1), l));
                    }
                    specs.push((SumSpec::full_square(s, t, 2 * k + 1, 1), l));
                    if k == 0 {
                        specs.push((SumSpec::triangle(s, t), l));
                    }
                }
            }
        }
    }
    specs
}

fn parity_vanishing() -> Outcome {
    let specs = parity_specs();
    for (spec, l) in &specs {
        let plan = degree_plan(spec).map_err(|e| e.to_string())?;
        let free = fit_with_plan(spec, &union_plan(*l)).map_err(|e| e.to_string())?;
        ensure(free.status == FitStatus::Verified, || format!("{spec}: generic fit {}", free.status.as_str()))?;
        for kind in plan.excluded() {
            ensure(free.form.term(kind).is_none(), || {
                format!("{spec}: {kind} should vanish but is {}", free.form.numerator(kind))
            })?;
        }
        for term in &free.form.terms {
            let entry = plan.entry(term.kind).expect("checked above");
            ensure(term.numerator.degree() <= Some(entry.max_degree), || format!("{spec}: {} degree", term.kind))?;
            ensure(term.denom_offsets.len() <= entry.denom_offsets.len(), || {
                format!("{spec}: {} needs {:?}", term.kind, term.denom_offsets)
            })?;
        }
        let proved = fitter::fit(spec).map_err(|e| e.to_string())?;
        ensure(proved.status == FitStatus::Verified && proved.form == free.form, || {
            format!("{spec}: proved plan disagrees with generic fit")
        })?;
    }
    Ok(format!("{} specs with L <= 3, both exponent parities and triangle sums", specs.len()))
}

fn section_seven() -> Outcome {
    let theorem = inequality::theorem_inequality_check(25);
    ensure(theorem.passed(), || format!("violations {:?}", theorem.violations))?;
    let diagonal: Vec<(u32, u32)> = (0..=25).map(|m| (m, m)).collect();
    ensure(theorem.equality_set == diagonal, || format!("equality set {:?}", theorem.equality_set))?;
    for n in 0..=25u32 {
        let c = central(n as i64);
        ensure(inequality::full_sum(n, n) == BigInt::from(2 * n * n) * &c * &c, || format!("diagonal n={n}"))?;
    }
    let decomposition = inequality::decomposition_sweep(12);
    ensure(decomposition.passed(), || format!("decomposition fails at {:?}", decomposition.violations))?;
    let gosper = inequality::gosper_sweep(12);
    ensure(gosper.passed(), || format!("telescoped identity fails at {:?}", gosper.violations))?;
    ensure(inequality::termwise_ratio_check(12), || "termwise comparison".into())?;
    let quarter = inequality::quarter_consistency(10);
    ensure(quarter.is_empty(), || format!("quarter sum at {quarter:?}"))?;
    Ok(format!(
        "theorem to 25; identities to 12 ({} degenerate cells skipped each); termwise to 12",
        decomposition.skipped.len()
    ))
}

fn expansion() -> Outcome {
    for s in 0..=6u32 {
        let table = expansion_coeffs(s);
        ensure(*table.coeff(0) == Poly::monomial(BigRat::from_integer(1.into()), 2 * s as usize), || {
            format!("c_0 for S={s}")
        })?;
        for n in 0..=20i64 {
            for i in 0..=n {
                ensure(expansion_check(&table, i, n), || format!("S={s} i={i} n={n}"))?;
            }
        }
    }
    Ok("S <= 6, 0 <= i <= n <= 20".into())
}

fn classical() -> Outcome {
    for n in 0..=15 {
        for m in 0..=15 {
            ensure(lemmas::chu_vandermonde_check(n, m), || format!("Chu-Vandermonde n={n} m={m}"))?;
        }
    }
    for n in 1..=10 {
        for b in 0..n {
            let ok = lemmas::dixon_identity_check(n, b).map_err(|e| e.to_string())?;
            ensure(ok, || format!("Dixon n={n} b={b}"))?;
        }
    }
    Ok("Chu-Vandermonde n, m <= 15; Dixon n <= 10".into())
}

fn json_round_trip() -> Outcome {
    let mut count = 0;
    for reference in common::rediscoveries().into_iter().chain(common::stretch()) {
        let form = &reference.canonical;
        let back = ClosedForm::from_json(&form.to_json()).map_err(|e| e.to_string())?;
        ensure(back == *form, || format!("{}: structure changed", reference.name))?;
        for n in 1..=20u32 {
            let oracle = BigRat::from_integer(reference.spec.evaluate(n).map_err(|e| e.to_string())?);
            ensure(back.eval(n) == oracle, || format!("{}: value at n={n}", reference.name))?;
        }
        count += 1;
    }
    Ok(format!("{count} forms, n = 1..20"))
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 10] = [
        ("sum |j^2-i^2| equals 2n^2 C(2n,n)^2", 5, central_square_law),
        ("fundamental double sums", 30, fundamentals),
        ("single sums", 10, singles),
        ("closed-form rediscovery", 120, rediscovery),
        ("generic-Ansatz rediscovery", 300, stretch),
        ("parity-forced vanishing", 120, parity_vanishing),
        ("two-parameter inequality suite", 60, section_seven),
        ("power expansion table", 5, expansion),
        ("Chu-Vandermonde and Dixon", 5, classical),
        ("JSON round trip", 10, json_round_trip),
    ];
    let mut failures = 0;
    for (idx, (name, budget, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let budget = Duration::from_secs(budget);
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget")),
            Err(e) => (false, e),
        };
        if !ok {
            failures += 1;
        }
        println!(
            "[{}] {:>2}. {name}: {detail} ({:.2}s, budget {}s)",
            if ok { "PASS" } else { "FAIL" },
            idx + 1,
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
    }
    println!("{} of 10 criteria passed", 10 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
