//! Exact evaluation, closed-form discovery and verification for binomial
//! double sums of the form
//! `sum_{i,j} |i^s j^t (i^k - j^k)^beta| C(2n,n+i) C(2n,n+j)`.
//!
//! * [`oracle`] evaluates every sum family by brute force.
//! * [`fitter`] finds closed forms over `C(4n,2n)`, `C(2n,n)^2`,
//!   `4^n C(2n,n)` and `16^n` with rational-function coefficients.
//! * [`lemmas`] and [`expansion`] implement the single and double sum
//!   evaluations the closed forms are built from.
//! * [`inequality`] checks the two-parameter inequality and its identities.

pub mod error;
pub mod exactmath;
pub mod expansion;
pub mod fitter;
pub mod inequality;
pub mod lemmas;
pub mod oracle;

pub use error::MathError;
pub use exactmath::{BigRat, Poly};
pub use fitter::{fit, fit_generic, BasisKind, ClosedForm, FitReport, FitStatus};
pub use oracle::{Family, SumSpec};
