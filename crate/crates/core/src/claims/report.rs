//! Ledger runs and their serialized reports.

use std::fmt::Write as _;
use std::time::Duration;

use rayon::prelude::*;
use serde::Serialize;

use super::ast::Claim;
use super::eval::{evaluate_claim, ClaimResult, Status};
use crate::arith::{Budget, DEFAULT_MAX_BITS};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    /// Worker threads; 0 means one per available core.
    pub jobs: usize,
    /// Wall-clock budget per claim.
    pub budget: Duration,
    /// Magnitude cap passed to factorization.
    pub max_bits: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            jobs: 0,
            budget: Duration::from_millis(5000),
            max_bits: DEFAULT_MAX_BITS,
        }
    }
}

/// Results of one ledger run, ordered by claim id.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub results: Vec<ClaimResult>,
}

#[derive(Serialize)]
struct Record<'a> {
    id: &'a str,
    status: &'a str,
    anchor: &'a str,
    witness: Option<&'a str>,
    reason: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

impl Report {
    pub fn count(&self, status: Status) -> usize {
        self.results.iter().filter(|r| r.status == status).count()
    }

    /// 0 when every claim verified (axioms aside), 1 when any was refuted,
    /// 3 when some were skipped and none refuted.
    pub fn exit_code(&self) -> i32 {
        if self.count(Status::Refuted) > 0 {
            1
        } else if self.count(Status::Skipped) > 0 {
            3
        } else {
            0
        }
    }

    /// One block per claim plus a summary line. Elapsed times are included
    /// only when `timings` is set, so the default output is reproducible.
    pub fn to_text(&self, timings: bool) -> String {
        let mut out = String::new();
        for r in &self.results {
            let _ = writeln!(out, "id: {}", r.id);
            let _ = writeln!(out, "status: {}", r.status.label());
            let _ = writeln!(out, "anchor: {}", r.anchor);
            if let Some(w) = &r.witness {
                let _ = writeln!(out, "witness: {w}");
            }
            if let Some(reason) = &r.reason {
                let _ = writeln!(out, "reason: {reason}");
            }
            if timings {
                let _ = writeln!(out, "elapsed-ms: {}", r.elapsed.as_millis());
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "summary: {} verified, {} refuted, {} skipped, {} assumed",
            self.count(Status::Verified),
            self.count(Status::Refuted),
            self.count(Status::Skipped),
            self.count(Status::Assumed)
        );
        out
    }

    /// One JSON object per line with fields in a fixed order.
    pub fn to_machine(&self, timings: bool) -> String {
        let mut out = String::new();
        for r in &self.results {
            let record = Record {
                id: &r.id,
                status: r.status.label(),
                anchor: &r.anchor,
                witness: r.witness.as_deref(),
                reason: r.reason.as_deref(),
                elapsed_ms: timings.then(|| r.elapsed.as_millis()),
            };
            out.push_str(&serde_json::to_string(&record).expect("plain record serializes"));
            out.push('\n');
        }
        out
    }
}

/// Evaluates every claim on a pool of `options.jobs` workers.
pub fn run_ledger(claims: &[Claim], options: &RunOptions) -> Report {
    let evaluate = |c: &Claim| {
        let budget = Budget::with_timeout(options.budget).with_max_bits(options.max_bits);
        evaluate_claim(c, &budget)
    };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(options.jobs).build();
    let mut results: Vec<ClaimResult> = match pool {
        Ok(pool) => pool.install(|| claims.par_iter().map(evaluate).collect()),
        Err(_) => claims.iter().map(evaluate).collect(),
    };
    results.sort_by(|a, b| a.id.cmp(&b.id));
    Report { results }
}
