//! Basis membership, numerator degree bounds and denominators for each
//! parity case of the structure theorems.
//!
//! With `S = floor(s/2)`, `T = floor(t/2)` and `L = S + T + k` (where `k` is
//! the theorem index, i.e. the exponent is `2k` or `2k+1`; `k = 0` for the
//! triangle sums):
//!
//! | family        | (s, t) parity | kinds: degree bound / denominator factors                          |
//! |---------------|---------------|--------------------------------------------------------------------|
//! | exponent `2k` | even, even    | sq: `2L+fl(L/2)` / `fl(L/2)`                                       |
//! |               | mixed         | c4: `2L+1+fl(L/2)` / `L`; p4: `2L+1`                               |
//! |               | odd, odd      | sq: `2L+2+fl(L/2)` / `fl((L+1)/2)`                                 |
//! | exponent `2k+1` | even, even  | c4: `max(3L, 1)` / `L`                                             |
//! |               | mixed         | sq: `2L+2+fl(L/2)` / `fl((L+1)/2)`; p16: `2L+1`                    |
//! |               | odd, odd      | c4: `3L+3` / `L+1`; p4: `2L+2`                                     |
//! | triangle      | even, even    | c4: `3L`/`L`; sq: `2L+fl(L/2)`/`fl(L/2)`; p4 (s=0 only): `2T`; p16: `2L` |
//! |               | odd, even     | c4: `3L+1`/`L`; sq: `2L+1+fl(L/2)`/`fl((L+1)/2)`; p4: `2L+1`       |
//! |               | even, odd     | c4: `3L+1`/`L`; sq: `2L+1+fl(L/2)`/`fl((L+1)/2)`                   |
//! |               | odd, odd      | c4: `3L+2`/`L+1`; sq: `2L+2+fl(L/2)`/`fl((L+1)/2)`                 |
//!
//! Kinds absent from a row are identically zero. c4 = `C(4n,2n)` over
//! `(4n-1)(4n-3)...`, sq = `C(2n,n)^2` over `(2n-1)(2n-3)...`,
//! p4 = `4^n C(2n,n)`, p16 = `16^n`.
//!
//! Several entries differ from a literal reading of the printed theorem
//! items (the mixed-parity even-exponent case lives on `C(4n,2n)`, and some
//! odd cases need one more denominator factor); every row was confirmed by
//! fitting with all four kinds and generous bounds.

use std::fmt;

use super::form::BasisKind;
use crate::error::MathError;
use crate::oracle::{Family, SumSpec};

/// Which structure result a plan is derived from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlanSource {
    /// Triangle sums.
    Triangle,
    /// Full-square sums with an even exponent `2k`.
    EvenExponent,
    /// Full-square sums with an odd exponent `2k+1`.
    OddExponent,
    /// Caller-supplied kinds and bounds.
    Generic,
}

/// Parity of `(s, t)`; numbered 1 to 4 in the order the theorems list them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParityCase {
    EvenEven,
    OddEven,
    EvenOdd,
    OddOdd,
}

impl ParityCase {
    pub fn of(s: u32, t: u32) -> Self {
        match (s % 2, t % 2) {
            (0, 0) => ParityCase::EvenEven,
            (1, 0) => ParityCase::OddEven,
            (0, 1) => ParityCase::EvenOdd,
            _ => ParityCase::OddOdd,
        }
    }

    pub fn item(self) -> u8 {
        match self {
            ParityCase::EvenEven => 1,
            ParityCase::OddEven => 2,
            ParityCase::EvenOdd => 3,
            ParityCase::OddOdd => 4,
        }
    }
}

/// One included basis kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanEntry {
    pub kind: BasisKind,
    pub max_degree: usize,
    pub denom_offsets: Vec<u32>,
}

/// Ansatz shape for one spec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreePlan {
    pub source: PlanSource,
    pub parity: ParityCase,
    /// Theorem index `k` (0 for triangle and generic plans).
    pub index: u32,
    pub entries: Vec<PlanEntry>,
}

impl DegreePlan {
    pub fn entry(&self, kind: BasisKind) -> Option<&PlanEntry> {
        self.entries.iter().find(|e| e.kind == kind)
    }

    /// Kinds whose coefficient the plan asserts is identically zero.
    pub fn excluded(&self) -> Vec<BasisKind> {
        BasisKind::ALL
            .into_iter()
            .filter(|k| self.entry(*k).is_none())
            .collect()
    }

    pub fn unknowns(&self) -> usize {
        self.entries.iter().map(|e| e.max_degree + 1).sum()
    }
}

impl fmt::Display for DegreePlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} item ({})", self.source, self.parity.item())?;
        for e in &self.entries {
            write!(f, "; {} deg<={} den={:?}", e.kind.name(), e.max_degree, e.denom_offsets)?;
        }
        Ok(())
    }
}

/// `[1, 3, ..., 2*depth - 1]`.
pub fn odd_offsets(depth: u32) -> Vec<u32> {
    (0..depth).map(|r| 2 * r + 1).collect()
}

fn entry(kind: BasisKind, max_degree: u32, depth: u32) -> PlanEntry {
    PlanEntry { kind, max_degree: max_degree as usize, denom_offsets: odd_offsets(depth) }
}

/// Proved (and empirically corrected) ansatz shape for `spec`.
pub fn degree_plan(spec: &SumSpec) -> Result<DegreePlan, MathError> {
    use BasisKind::*;
    use ParityCase::*;

    spec.validate()?;
    let parity = ParityCase::of(spec.s, spec.t);
    let (big_s, big_t) = (spec.s / 2, spec.t / 2);

    match spec.family {
        Family::Triangle => {
            let l = big_s + big_t;
            let entries = match parity {
                EvenEven => {
                    let mut v = vec![
                        entry(Central4n, 3 * l, l),
                        entry(CentralSq, 2 * l + l / 2, l / 2),
                    ];
                    if spec.s == 0 {
                        v.push(entry(Pow4Central, 2 * big_t, 0));
                    }
                    v.push(entry(Pow16, 2 * l, 0));
                    v
                }
                OddEven => vec![
                    entry(Central4n, 3 * l + 1, l),
                    entry(CentralSq, 2 * l + 1 + l / 2, (l + 1) / 2),
                    entry(Pow4Central, 2 * l + 1, 0),
                ],
                EvenOdd => vec![
                    entry(Central4n, 3 * l + 1, l),
                    entry(CentralSq, 2 * l + 1 + l / 2, (l + 1) / 2),
                ],
                OddOdd => vec![
                    entry(Central4n, 3 * l + 2, l + 1),
                    entry(CentralSq, 2 * l + 2 + l / 2, (l + 1) / 2),
                ],
            };
            Ok(DegreePlan { source: PlanSource::Triangle, parity, index: 0, entries })
        }
        Family::FullSquare => {
            if spec.beta != 1 {
                return Err(MathError::NoProvedDegreePlan(format!(
                    "beta = {} has no proved degree bounds; use a generic fit",
                    spec.beta
                )));
            }
            if spec.k % 2 == 0 {
                let k = spec.k / 2;
                let l = big_s + big_t + k;
                let entries = match parity {
                    EvenEven => vec![entry(CentralSq, 2 * l + l / 2, l / 2)],
                    OddEven | EvenOdd => vec![
                        entry(Central4n, 2 * l + 1 + l / 2, l),
                        entry(Pow4Central, 2 * l + 1, 0),
                    ],
                    OddOdd => vec![entry(CentralSq, 2 * l + 2 + l / 2, (l + 1) / 2)],
                };
                Ok(DegreePlan { source: PlanSource::EvenExponent, parity, index: k, entries })
            } else {
                let k = (spec.k - 1) / 2;
                let l = big_s + big_t + k;
                let entries = match parity {
                    // |i - j| = 2n C(4n,2n) needs degree 1 at L = 0.
                    EvenEven => vec![entry(Central4n, (3 * l).max(1), l)],
                    OddEven | EvenOdd => vec![
                        entry(CentralSq, 2 * l + 2 + l / 2, (l + 1) / 2),
                        entry(Pow16, 2 * l + 1, 0),
                    ],
                    OddOdd => vec![
                        entry(Central4n, 3 * l + 3, l + 1),
                        entry(Pow4Central, 2 * l + 2, 0),
                    ],
                };
                Ok(DegreePlan { source: PlanSource::OddExponent, parity, index: k, entries })
            }
        }
        Family::SinglePlain | Family::SingleSquared => Err(MathError::NoProvedDegreePlan(
            format!("family {} is evaluated by the single-sum lemmas, not fitted", spec.family),
        )),
    }
}

/// Plan with caller-chosen kinds, a common numerator degree and per-kind
/// denominator depths (depths for the power kinds must be 0).
pub fn generic_plan(
    kinds: &[BasisKind],
    degree: usize,
    depth_of: impl Fn(BasisKind) -> u32,
) -> Result<DegreePlan, MathError> {
    if kinds.is_empty() {
        return Err(MathError::InvalidSpec("generic fit needs at least one basis kind".into()));
    }
    let mut entries = Vec::new();
    for kind in BasisKind::ALL {
        if !kinds.contains(&kind) {
            continue;
        }
        let depth = depth_of(kind);
        if depth > 0 && !kind.has_denominator() {
            return Err(MathError::InvalidSpec(format!(
                "{} takes no denominator (depth {depth} given)",
                kind.name()
            )));
        }
        entries.push(PlanEntry { kind, max_degree: degree, denom_offsets: odd_offsets(depth) });
    }
    Ok(DegreePlan { source: PlanSource::Generic, parity: ParityCase::EvenEven, index: 0, entries })
}
