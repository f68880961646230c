//! Command-line front end. [`run`] is the whole program; `main` only wires
//! it to the process streams.
//!
//! Exit codes: 0 success, 1 a mathematical check failed, 2 usage error.

use std::io::Write;
use std::path::PathBuf;

use absbinom_core::exactmath::rat_to_string;
use absbinom_core::expansion::{expansion_coeffs, table_to_json, table_to_latex};
use absbinom_core::fitter::{
    self, emit_latex, emit_latex_canonical, fit_generic, BasisKind, ClosedForm, FitReport,
    FitStatus,
};
use absbinom_core::inequality::{self, InequalityReport};
use absbinom_core::lemmas::{self, Fundamental, SingleLemma};
use absbinom_core::oracle::triangle_sum;
use absbinom_core::{BigRat, Family, MathError, SumSpec};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "absbinom", version, about = "Exact binomial double sums with absolute values")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    FullSquare,
    Triangle,
    SinglePlain,
    SingleSquared,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::FullSquare => Family::FullSquare,
            FamilyArg::Triangle => Family::Triangle,
            FamilyArg::SinglePlain => Family::SinglePlain,
            FamilyArg::SingleSquared => Family::SingleSquared,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Emit {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Central4n,
    #[value(name = "centralSq")]
    CentralSq,
    Pow4central,
    Pow16,
}

impl From<KindArg> for BasisKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Central4n => BasisKind::Central4n,
            KindArg::CentralSq => BasisKind::CentralSq,
            KindArg::Pow4central => BasisKind::Pow4Central,
            KindArg::Pow16 => BasisKind::Pow16,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum LemmaArg {
    #[value(alias = "S00")]
    S00,
    #[value(alias = "S10")]
    S10,
    #[value(alias = "S01")]
    S01,
    #[value(alias = "S11")]
    S11,
    #[value(alias = "aux8")]
    EvenPlain,
    #[value(alias = "aux9")]
    OddPlain,
    #[value(alias = "aux7a")]
    EvenSquared,
    #[value(alias = "aux7b")]
    OddSquared,
    Chu,
    Dixon,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    Theorem,
    Decomposition,
    Gosper,
    Termwise,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a sum exactly by brute force.
    Evaluate {
        #[arg(long = "s", default_value_t = 0)]
        s: u32,
        #[arg(long = "t", default_value_t = 0)]
        t: u32,
        /// Exponent in |i^k - j^k| (full-square family only).
        #[arg(long = "k")]
        k: Option<u32>,
        #[arg(long = "beta", default_value_t = 1)]
        beta: u32,
        #[arg(long = "n")]
        n: u32,
        /// Second parameter for triangle sums (defaults to n).
        #[arg(long = "m")]
        m: Option<u32>,
        #[arg(long, value_enum, default_value = "full-square")]
        family: FamilyArg,
    },
    /// Discover and verify a closed form.
    Fit {
        #[arg(long = "s", default_value_t = 0)]
        s: u32,
        #[arg(long = "t", default_value_t = 0)]
        t: u32,
        #[arg(long = "k")]
        k: Option<u32>,
        #[arg(long = "beta", default_value_t = 1)]
        beta: u32,
        #[arg(long, value_enum, default_value = "full-square")]
        family: FamilyArg,
        /// Use caller-chosen kinds with an escalating degree instead of the
        /// proved plan.
        #[arg(long)]
        generic: bool,
        #[arg(long, value_enum, value_delimiter = ',', requires = "generic")]
        kinds: Vec<KindArg>,
        #[arg(long = "max-degree", default_value_t = 12, requires = "generic")]
        max_degree: usize,
        /// Denominator depth per kind, e.g. `centralSq=3` (repeatable).
        #[arg(long = "denom-depth", value_parser = parse_depth, requires = "generic")]
        denom_depth: Vec<(BasisKind, u32)>,
        #[arg(long, value_enum, default_value = "text")]
        emit: Emit,
        /// Keep C(4n,2n) unshifted in LaTeX output.
        #[arg(long)]
        canonical: bool,
    },
    /// Check a closed form stored as JSON against the oracle.
    Verify {
        #[arg(long)]
        form: PathBuf,
        #[arg(long = "n-max", default_value_t = 20)]
        n_max: u32,
    },
    /// Evaluate or sweep the lemma closed forms.
    Lemma {
        #[arg(long, value_enum, required_unless_present = "check")]
        which: Option<LemmaArg>,
        #[arg(long = "n")]
        n: Option<u32>,
        #[arg(long = "m")]
        m: Option<u32>,
        /// Power index for the single sums, or `b` for the Dixon identity.
        #[arg(long = "k", default_value_t = 0)]
        k: u32,
        /// Sweep every lemma up to `--max`.
        #[arg(long, conflicts_with = "which")]
        check: bool,
        #[arg(long, default_value_t = 12)]
        max: u32,
    },
    /// Check the two-parameter inequality and its identities.
    Inequality {
        #[arg(long)]
        max: u32,
        #[arg(long, value_enum, default_value = "all")]
        which: Which,
    },
    /// Print the coefficient table for expanding i^(2S).
    Expansion {
        #[arg(long = "S")]
        order: u32,
    },
}

fn parse_depth(text: &str) -> Result<(BasisKind, u32), String> {
    let (kind, depth) = text
        .split_once('=')
        .ok_or_else(|| format!("expected kind=depth, got {text:?}"))?;
    let kind: BasisKind = kind.parse().map_err(|e: MathError| e.to_string())?;
    let depth: u32 = depth.parse().map_err(|_| format!("bad depth {depth:?}"))?;
    Ok((kind, depth))
}

enum Failure {
    Usage(String),
    Math(String),
}

impl From<MathError> for Failure {
    fn from(e: MathError) -> Self {
        match e {
            MathError::InvalidSpec(_) | MathError::Parse(_) | MathError::NoProvedDegreePlan(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Math(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Math(format!("write failed: {e}"))
    }
}

type Exit = Result<i32, Failure>;

/// Runs the program on `argv` (including the program name).
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let rendered = e.to_string();
            let line = rendered.lines().next().unwrap_or("usage error");
            let _ = writeln!(err, "{line}");
            return 2;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Math(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Exit {
    match command {
        Command::Evaluate { s, t, k, beta, n, m, family } => evaluate(s, t, k, beta, n, m, family.into(), out),
        Command::Fit { s, t, k, beta, family, generic, kinds, max_degree, denom_depth, emit, canonical } => {
            let spec = build_spec(s, t, k, beta, family.into())?;
            let report = if generic {
                if kinds.is_empty() {
                    return Err(Failure::Usage("--generic needs --kinds".into()));
                }
                let kinds: Vec<BasisKind> = kinds.into_iter().map(Into::into).collect();
                let depth = |kind: BasisKind| {
                    denom_depth.iter().rev().find(|(k, _)| *k == kind).map_or(0, |(_, d)| *d)
                };
                fit_generic(&spec, &kinds, max_degree, depth)?
            } else {
                fitter::fit(&spec)?
            };
            print_fit(&report, emit, canonical, out)
        }
        Command::Verify { form, n_max } => verify(&form, n_max, out),
        Command::Lemma { which, n, m, k, check, max } => {
            if check {
                lemma_sweep(max, out)
            } else {
                let which = which.expect("clap requires --which without --check");
                let n = n.ok_or_else(|| Failure::Usage("--n is required with --which".into()))?;
                lemma_single(which, n, m.unwrap_or(n), k, out)
            }
        }
        Command::Inequality { max, which } => run_inequality(max, which, out),
        Command::Expansion { order } => {
            let table = expansion_coeffs(order);
            writeln!(out, "{}", table_to_latex(&table))?;
            writeln!(out, "{}", table_to_json(&table))?;
            Ok(0)
        }
    }
}

fn build_spec(s: u32, t: u32, k: Option<u32>, beta: u32, family: Family) -> Result<SumSpec, Failure> {
    let spec = match family {
        Family::FullSquare => {
            let k = k.ok_or_else(|| Failure::Usage("--k is required for full-square sums".into()))?;
            SumSpec::full_square(s, t, k, beta)
        }
        other => {
            if k.is_some() {
                return Err(Failure::Usage(format!("--k does not apply to {other} sums")));
            }
            SumSpec { family: other, ..SumSpec::triangle(s, t) }
        }
    };
    spec.validate()?;
    Ok(spec)
}

#[allow(clippy::too_many_arguments)]
fn evaluate(
    s: u32,
    t: u32,
    k: Option<u32>,
    beta: u32,
    n: u32,
    m: Option<u32>,
    family: Family,
    out: &mut dyn Write,
) -> Exit {
    let spec = build_spec(s, t, k, beta, family)?;
    let value = match (family, m) {
        (Family::Triangle, Some(m)) => triangle_sum(s, t, n, m),
        (_, Some(_)) => return Err(Failure::Usage("--m applies only to triangle sums".into())),
        _ => spec.evaluate(n)?,
    };
    writeln!(out, "{value}")?;
    Ok(0)
}

fn ranges(points: &[u32]) -> String {
    match (points.first(), points.last()) {
        (Some(a), Some(b)) => format!("{a}..{b}"),
        _ => "none".into(),
    }
}

fn print_fit(report: &FitReport, emit: Emit, canonical: bool, out: &mut dyn Write) -> Exit {
    let latex = |form: &ClosedForm| if canonical { emit_latex_canonical(form) } else { emit_latex(form) };
    match emit {
        Emit::Json if report.status.is_success() => writeln!(out, "{}", report.form.to_json_pretty())?,
        Emit::Latex if report.status.is_success() => writeln!(out, "{}", latex(&report.form))?,
        _ => {
            writeln!(out, "spec: {}", report.form.spec)?;
            writeln!(out, "plan: {}", report.plan)?;
            writeln!(out, "status: {}", report.status.as_str())?;
            writeln!(out, "fit points: {}", ranges(&report.fit_points))?;
            writeln!(out, "guard points: {}", ranges(&report.guard_points))?;
            if let Some(n) = report.offending_n {
                writeln!(out, "offending n: {n}")?;
            }
            for (kind, power) in &report.free_variables {
                writeln!(out, "free variable: {kind} n^{power} (set to 0)")?;
            }
            if report.status.is_success() {
                writeln!(out, "form: {}", latex(&report.form))?;
            }
        }
    }
    Ok(if report.status == FitStatus::Inconsistent { 1 } else { 0 })
}

fn verify(path: &std::path::Path, n_max: u32, out: &mut dyn Write) -> Exit {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let form = ClosedForm::from_json(&text)?;
    for n in 1..=n_max {
        let oracle = BigRat::from_integer(form.spec.evaluate(n)?);
        let value = form.eval(n);
        if value != oracle {
            writeln!(out, "mismatch at n={n}: form {} oracle {}", rat_to_string(&value), rat_to_string(&oracle))?;
            return Ok(1);
        }
    }
    writeln!(out, "verified {} for n=1..{n_max}", form.spec)?;
    Ok(0)
}

fn lemma_single(which: LemmaArg, n: u32, m: u32, k: u32, out: &mut dyn Write) -> Exit {
    let fundamental = match which {
        LemmaArg::S00 => Some(Fundamental::S00),
        LemmaArg::S10 => Some(Fundamental::S10),
        LemmaArg::S01 => Some(Fundamental::S01),
        LemmaArg::S11 => Some(Fundamental::S11),
        _ => None,
    };
    let single = match which {
        LemmaArg::EvenPlain => Some(SingleLemma::EvenPlain),
        LemmaArg::OddPlain => Some(SingleLemma::OddPlain),
        LemmaArg::EvenSquared => Some(SingleLemma::EvenSquared),
        LemmaArg::OddSquared => Some(SingleLemma::OddSquared),
        _ => None,
    };
    let (closed, oracle) = if let Some(f) = fundamental {
        let (s, t) = f.exponents();
        (f.eval(n, m), BigRat::from_integer(triangle_sum(s, t, n, m)))
    } else if let Some(lemma) = single {
        let (power, squared) = lemma.shape(k);
        let table = expansion_coeffs(k);
        let oracle = absbinom_core::oracle::single_sum(power, squared, n);
        (lemma.eval_with(&table, n), BigRat::from_integer(oracle))
    } else {
        let holds = match which {
            LemmaArg::Chu => lemmas::chu_vandermonde_check(n, m),
            _ => lemmas::dixon_identity_check(n, k)?,
        };
        writeln!(out, "{}", if holds { "holds" } else { "fails" })?;
        return Ok(if holds { 0 } else { 1 });
    };
    writeln!(out, "closed form: {}", rat_to_string(&closed))?;
    writeln!(out, "direct sum:  {}", rat_to_string(&oracle))?;
    Ok(if closed == oracle { 0 } else { 1 })
}

fn lemma_sweep(max: u32, out: &mut dyn Write) -> Exit {
    let fundamentals = lemmas::check_fundamentals(max);
    let singles = lemmas::check_singles(4, max);
    let chu_bad = (0..=max)
        .flat_map(|n| (0..=max).map(move |m| (n, m)))
        .filter(|&(n, m)| !lemmas::chu_vandermonde_check(n, m))
        .count();
    let mut dixon_bad = 0;
    for n in 1..=max {
        for b in 0..n {
            if !lemmas::dixon_identity_check(n, b)? {
                dixon_bad += 1;
            }
        }
    }
    writeln!(out, "fundamental sums: {} mismatches", fundamentals.len())?;
    writeln!(out, "single sums (k <= 4): {} mismatches", singles.len())?;
    writeln!(out, "chu-vandermonde: {chu_bad} mismatches")?;
    writeln!(out, "dixon: {dixon_bad} mismatches")?;
    for bad in fundamentals.iter().chain(&singles) {
        writeln!(out, "  {} n={} m={}: {} vs {}", bad.lemma, bad.n, bad.m, bad.closed_form, bad.oracle)?;
    }
    let clean = fundamentals.is_empty() && singles.is_empty() && chu_bad == 0 && dixon_bad == 0;
    Ok(if clean { 0 } else { 1 })
}

fn cell_list(cells: &[(u32, u32)]) -> String {
    let inner: Vec<String> = cells.iter().map(|(m, n)| format!("({m},{n})")).collect();
    format!("[{}]", inner.join(", "))
}

fn print_report(name: &str, report: &InequalityReport, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "{name}: {} cells (m,n) up to {}", report.checked, report.max)?;
    writeln!(out, "  violations: {}", cell_list(&report.violations))?;
    if name == "theorem" {
        writeln!(out, "  equality: {}", cell_list(&report.equality_set))?;
    }
    if !report.skipped.is_empty() {
        writeln!(out, "  skipped (degenerate): {}", report.skipped.len())?;
    }
    Ok(())
}

fn run_inequality(max: u32, which: Which, out: &mut dyn Write) -> Exit {
    let wants = |w: Which| which == Which::All || which == w;
    let mut reports = Vec::new();
    if wants(Which::Theorem) {
        reports.push(("theorem", inequality::theorem_inequality_check(max)));
    }
    if wants(Which::Decomposition) {
        reports.push(("decomposition", inequality::decomposition_sweep(max)));
    }
    if wants(Which::Gosper) {
        reports.push(("telescoped", inequality::gosper_sweep(max)));
    }
    if wants(Which::Termwise) {
        reports.push(("termwise", inequality::termwise_report(max)));
    }
    let mut ok = true;
    for (name, report) in &reports {
        print_report(name, report, out)?;
        ok &= report.passed();
    }
    Ok(if ok { 0 } else { 1 })
}
