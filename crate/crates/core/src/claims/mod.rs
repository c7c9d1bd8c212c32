//! Quantified arithmetic claims: ledger syntax, evaluation and reports.
//!
//! A ledger is a sequence of entries
//!
//! ```text
//! claim p5.c2c.01 "O^eps_2n(r): bn(n-1) = 12a"
//!   forall n in [1..100]: n*(n-1) != 36
//! ```
//!
//! Each `forall` ranges over a finite domain (`[a..b]`, `primepowers[a..b]`,
//! `primes[a..b]` or `powersof(p)[a..b]`) and the predicate is checked at
//! every point. `axiom` entries record cited facts and are never evaluated.

mod ast;
mod eval;
mod parse;
mod report;

pub use ast::*;
pub use eval::{domain_values, eval_at, evaluate_claim, ClaimResult, EvalError, Status};
pub use parse::{parse_ledger, ParseError};
pub use report::{run_ledger, Report, RunOptions};
