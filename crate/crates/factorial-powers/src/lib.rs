//! Exact and interval-certified analysis of the least exponent `n_a` with
//! `a^n <= n!` for a rational base `a > 1`.
//!
//! The crate computes `n_a` by three independent routes and cross-checks them:
//!
//! * [`exact`] — a big-integer oracle. `a^n` is compared against `n!` with
//!   nothing but exact rational arithmetic; this is the trust anchor.
//! * [`sigma`] — the staircase sequence `sigma_n` attached to the sequences
//!   `T_n = n * n^(1/n)` and `T_n = e * (n!)^(1/n)`, evaluated with certified
//!   interval enclosures so every `sigma_n` is proven, not sampled.
//! * [`predict`] — the two-candidate predictor: locate `n` from
//!   `n/e < a <= (n+1)/e`, read the segment `sigma_(n-m), ..., sigma_n`, and
//!   emit one or two candidates for `n_a` without ever forming `n!`.
//!
//! Everything analytic runs on [`interval`], an outward-rounded
//! arbitrary-precision interval layer with a precision-escalation driver, and
//! on [`stirling`], which evaluates the named functions of the underlying
//! factorial bounds (`L`, `R`, `P`, `T`, their derivatives and `a_F` forms,
//! digamma, and the difference sequences `s_n`, `S_n`).
//!
//! [`certify`] packages the inequality checks behind named suites so that each
//! numbered bound can be re-proven from the command line (`certify`) or from
//! the test suite. See the `examples/` directory for runnable tours of each
//! capability.

pub mod certify;
pub mod commands;
pub mod error;
pub mod exact;
pub mod interval;
pub mod output;
pub mod predict;
pub mod sigma;
pub mod stirling;

pub use error::{Error, Result};
pub use exact::Rational;
pub use interval::{Decision, Interval, PrecisionConfig};
pub use predict::PredictionOutcome;
pub use sigma::{SeqKind, SegmentReport, SigmaRecord};
