//! Closed forms over the four basis kinds, their evaluation and JSON
//! serialization.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::MathError;
use crate::exactmath::{binomial_nonneg, parse_rat, rat, rat_to_string, BigRat, Poly};
use crate::oracle::{Family, SumSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisKind {
    /// `C(4n, 2n)`
    Central4n,
    /// `C(2n, n)^2`
    CentralSq,
    /// `4^n C(2n, n)`
    Pow4Central,
    /// `16^n`
    Pow16,
}

impl BasisKind {
    pub const ALL: [BasisKind; 4] =
        [BasisKind::Central4n, BasisKind::CentralSq, BasisKind::Pow4Central, BasisKind::Pow16];

    pub fn name(self) -> &'static str {
        match self {
            BasisKind::Central4n => "central4n",
            BasisKind::CentralSq => "centralSq",
            BasisKind::Pow4Central => "pow4central",
            BasisKind::Pow16 => "pow16",
        }
    }

    /// Whether terms of this kind may carry denominator factors.
    pub fn has_denominator(self) -> bool {
        matches!(self, BasisKind::Central4n | BasisKind::CentralSq)
    }

    /// Scale of `n` in the denominator factors `(c*n - d)`.
    pub fn denominator_scale(self) -> i64 {
        match self {
            BasisKind::Central4n => 4,
            _ => 2,
        }
    }

    pub fn value(self, n: u32) -> BigInt {
        let n = n as i64;
        match self {
            BasisKind::Central4n => binomial_nonneg(4 * n, 2 * n),
            BasisKind::CentralSq => {
                let c = binomial_nonneg(2 * n, n);
                &c * &c
            }
            BasisKind::Pow4Central => binomial_nonneg(2 * n, n) << (2 * n as usize),
            BasisKind::Pow16 => BigInt::one() << (4 * n as usize),
        }
    }
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BasisKind {
    type Err = MathError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BasisKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| MathError::Parse(format!("unknown basis kind {s:?}")))
    }
}

/// `numerator(n) / prod_d (c*n - d) * basis(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisTerm {
    pub kind: BasisKind,
    pub denom_offsets: Vec<u32>,
    pub numerator: Poly,
}

impl BasisTerm {
    pub fn denominator_at(&self, n: u32) -> BigRat {
        let c = self.kind.denominator_scale();
        self.denom_offsets
            .iter()
            .fold(BigRat::one(), |acc, &d| acc * rat(c * n as i64 - d as i64))
    }

    pub fn eval(&self, n: u32) -> BigRat {
        if self.numerator.is_zero() {
            return BigRat::zero();
        }
        let value = BigRat::from_integer(self.kind.value(n));
        self.numerator.eval_int(n as i64) * value / self.denominator_at(n)
    }

    fn validate(&self) -> Result<(), MathError> {
        if !self.kind.has_denominator() && !self.denom_offsets.is_empty() {
            return Err(MathError::Parse(format!("{} takes no denominator", self.kind)));
        }
        for (idx, &d) in self.denom_offsets.iter().enumerate() {
            if d as usize != 2 * idx + 1 {
                return Err(MathError::Parse(format!(
                    "denominator offsets must be 1, 3, 5, ...; got {:?}",
                    self.denom_offsets
                )));
            }
        }
        Ok(())
    }
}

/// A closed form for one spec: a sum of terms with pairwise distinct kinds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub spec: SumSpec,
    pub terms: Vec<BasisTerm>,
}

impl ClosedForm {
    pub fn new(spec: SumSpec, terms: Vec<BasisTerm>) -> Result<Self, MathError> {
        for (i, t) in terms.iter().enumerate() {
            t.validate()?;
            if terms[..i].iter().any(|u| u.kind == t.kind) {
                return Err(MathError::Parse(format!("basis kind {} appears twice", t.kind)));
            }
        }
        Ok(ClosedForm { spec, terms })
    }

    pub fn term(&self, kind: BasisKind) -> Option<&BasisTerm> {
        self.terms.iter().find(|t| t.kind == kind)
    }

    /// Numerator of `kind` (zero when the kind is absent).
    pub fn numerator(&self, kind: BasisKind) -> Poly {
        self.term(kind).map_or_else(Poly::zero, |t| t.numerator.clone())
    }

    pub fn eval(&self, n: u32) -> BigRat {
        self.terms.iter().fold(BigRat::zero(), |acc, t| acc + t.eval(n))
    }

    /// Drops terms whose numerator is identically zero.
    pub fn without_zero_terms(mut self) -> Self {
        self.terms.retain(|t| !t.numerator.is_zero());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&FormJson::from(self)).expect("closed forms always serialize")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&FormJson::from(self)).expect("closed forms always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, MathError> {
        let raw: FormJson =
            serde_json::from_str(text).map_err(|e| MathError::Parse(e.to_string()))?;
        raw.try_into()
    }
}

/// Evaluates `form` at `n`.
pub fn eval_closed_form(form: &ClosedForm, n: u32) -> BigRat {
    form.eval(n)
}

#[derive(Serialize, Deserialize)]
struct SpecJson {
    s: u32,
    t: u32,
    k: u32,
    beta: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    family: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    kind: String,
    numerator: Vec<String>,
    denom_offsets: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct FormJson {
    spec: SpecJson,
    terms: Vec<TermJson>,
}

impl From<&ClosedForm> for FormJson {
    fn from(form: &ClosedForm) -> Self {
        let spec = &form.spec;
        FormJson {
            spec: SpecJson {
                s: spec.s,
                t: spec.t,
                k: spec.k,
                beta: spec.beta,
                family: (spec.family != Family::FullSquare).then(|| spec.family.to_string()),
            },
            terms: form
                .terms
                .iter()
                .map(|t| TermJson {
                    kind: t.kind.name().to_string(),
                    numerator: t.numerator.coeffs().iter().map(rat_to_string).collect(),
                    denom_offsets: t.denom_offsets.clone(),
                })
                .collect(),
        }
    }
}

impl TryFrom<FormJson> for ClosedForm {
    type Error = MathError;
    fn try_from(raw: FormJson) -> Result<Self, MathError> {
        let family = match raw.spec.family.as_deref() {
            None => Family::FullSquare,
            Some(f) => f.parse()?,
        };
        let spec = SumSpec { s: raw.spec.s, t: raw.spec.t, k: raw.spec.k, beta: raw.spec.beta, family };
        spec.validate()?;
        let terms = raw
            .terms
            .into_iter()
            .map(|t| {
                let coeffs = t.numerator.iter().map(|c| parse_rat(c)).collect::<Result<_, _>>()?;
                Ok(BasisTerm {
                    kind: t.kind.parse()?,
                    denom_offsets: t.denom_offsets,
                    numerator: Poly::new(coeffs),
                })
            })
            .collect::<Result<Vec<_>, MathError>>()?;
        ClosedForm::new(spec, terms)
    }
}
