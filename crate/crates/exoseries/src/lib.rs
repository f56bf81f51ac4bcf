//! Evaluation and numeric verification of series built from the exponential
//! Taylor remainders `E_n(y) = e^y − 1 − y/1! − ⋯ − yⁿ/n!`.
//!
//! For a coefficient sequence `a_n` with exponential generating function
//! `F(z) = Σ a_n zⁿ/n!`, the crate evaluates
//!
//! ```text
//! u(x, y) = Σ a_n (e^y − 1 − y/1! − ⋯ − yⁿ/n!) xⁿ
//! ```
//!
//! along three independent routes:
//!
//! 1. direct truncated summation with a per-term tail bound ([`series::sum_series`]),
//! 2. adaptive quadrature of the equivalent representation
//!    `u(x, y) = e^y ∫₀^y e^{−t} F(xt) dt` ([`series::integral_repr`]),
//! 3. a registry of closed forms for special coefficient families —
//!    Bernoulli, harmonic, Stirling, central-binomial/Catalan, factorial,
//!    derangement, exponential-polynomial and Laguerre ([`catalog`]).
//!
//! [`verify`] sweeps every catalogued identity over a standard grid, compares
//! the three routes pointwise, and emits JSON/CSV/text reports. Two published
//! closed forms disagree with both numeric oracles; the registry stores the
//! printed and corrected variants side by side and the harness adjudicates
//! between them.
//!
//! The `exoseries` binary exposes the `eval`, `verify` and `numbers`
//! subcommands; see the crate examples for library usage.

pub mod catalog;
pub mod cli;
pub mod exact;
pub mod poly;
pub mod series;
pub mod special;
pub mod verify;

pub use exact::Rational;
pub use series::{CoeffFamily, EvalError, EvalResult, GenFn, Method, SumOpts};
