//! Partitions, hook-length degrees and the largest character degree of `A_n`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

/// Largest `n` for which partitions are enumerated.
pub const PARTITION_CAP: u64 = 40;

/// Largest `n` accepted by [`verify_an_lemma`] and [`partition_count`].
pub const LEMMA_CAP: u64 = 100;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AltError {
    #[error("n = {n} exceeds the cap of {cap}")]
    CapExceeded { n: u64, cap: u64 },
    #[error("invalid range: {0}")]
    InvalidRange(String),
}

/// A partition of `n`, parts in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts in any order; zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn check_cap(n: u64, cap: u64) -> Result<(), AltError> {
    if n > cap {
        Err(AltError::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}

/// All partitions of `n`, lexicographically descending: `(n)` first, `(1^n)` last.
pub fn partitions(n: u64) -> Result<Vec<Partition>, AltError> {
    check_cap(n, PARTITION_CAP)?;
    fn extend(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            extend(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(n as u32, n as u32, &mut Vec::new(), &mut out);
    Ok(out)
}

fn factorial(n: u64) -> BigUint {
    (2..=n).map(BigUint::from).product()
}

/// Degree of the irreducible character of `S_n` labelled by `λ`.
pub fn hook_degree(lambda: &Partition) -> BigUint {
    let conj = lambda.conjugate();
    let mut hooks = BigUint::one();
    for (i, &row) in lambda.parts.iter().enumerate() {
        for j in 0..row as usize {
            let arm = row as usize - j - 1;
            let leg = conj.parts[j] as usize - i - 1;
            hooks *= BigUint::from(arm + leg + 1);
        }
    }
    factorial(lambda.n()) / hooks
}

/// Degree contributed to `A_n` by `λ`: halved when `λ` is self-conjugate.
fn alternating_degree(lambda: &Partition) -> BigUint {
    let d = hook_degree(lambda);
    if lambda.is_self_conjugate() {
        d / 2u32
    } else {
        d
    }
}

/// Distinct irreducible character degrees of `A_n`, `5 <= n <= 40`.
pub fn alternating_degrees(n: u64) -> Result<BTreeSet<BigUint>, AltError> {
    if n < 5 {
        return Err(AltError::InvalidRange(format!("A_n needs n >= 5, got {n}")));
    }
    Ok(partitions(n)?.iter().map(alternating_degree).collect())
}

/// Largest irreducible character degree `b(A_n)`.
pub fn max_degree_alternating(n: u64) -> Result<BigUint, AltError> {
    Ok(alternating_degrees(n)?
        .pop_last()
        .expect("at least the trivial degree"))
}

/// Number of partitions of `n` by Euler's pentagonal recurrence.
pub fn partition_count(n: u64) -> Result<BigUint, AltError> {
    check_cap(n, LEMMA_CAP)?;
    let n = n as usize;
    let mut p = vec![BigUint::one()];
    for m in 1..=n {
        let mut plus = BigUint::default();
        let mut minus = BigUint::default();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let target = if k % 2 == 1 { &mut plus } else { &mut minus };
            *target += &p[m - g1];
            if g2 <= m {
                *target += &p[m - g2];
            }
        }
        p.push(plus - minus);
    }
    Ok(p.swap_remove(n))
}

/// Outcome of one numeric check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    Holds,
    Fails,
    NotApplicable,
}

impl Check {
    fn from_bool(ok: bool) -> Check {
        if ok {
            Check::Holds
        } else {
            Check::Fails
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Check::Holds => "holds",
            Check::Fails => "FAILS",
            Check::NotApplicable => "not-applicable",
        }
    }
}

/// Per-`n` outcome of the three checks behind `b(A_n) >= 2^{n-1}`, `n >= 10`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnLemmaRow {
    pub n: u64,
    /// `b(A_n) >= 2^{n-1}` by enumeration (`10 <= n <= 40`).
    pub direct: Check,
    /// `p(n)^2 <= 3^{n-1}`.
    pub class_bound: Check,
    /// `n!^2 >= 3^{n-1} 2^{4n}` (`n >= 18`).
    pub factorial: Check,
}

impl AnLemmaRow {
    pub fn status(&self) -> Check {
        let checks = [self.direct, self.class_bound, self.factorial];
        if checks.contains(&Check::Fails) {
            Check::Fails
        } else if checks.iter().all(|&c| c == Check::NotApplicable) {
            Check::NotApplicable
        } else {
            Check::Holds
        }
    }
}

/// Runs the checks for every `n` in `[n_lo, n_hi]`, `5 <= n_lo <= n_hi <= 100`.
///
/// Values below 10 carry no claim and are reported as not applicable.
pub fn verify_an_lemma(n_lo: u64, n_hi: u64) -> Result<Vec<AnLemmaRow>, AltError> {
    if n_lo < 5 || n_lo > n_hi {
        return Err(AltError::InvalidRange(format!(
            "need 5 <= n_lo <= n_hi, got [{n_lo}, {n_hi}]"
        )));
    }
    check_cap(n_hi, LEMMA_CAP)?;
    (n_lo..=n_hi)
        .map(|n| {
            if n < 10 {
                return Ok(AnLemmaRow {
                    n,
                    direct: Check::NotApplicable,
                    class_bound: Check::NotApplicable,
                    factorial: Check::NotApplicable,
                });
            }
            let three_pow = num_traits::pow(BigUint::from(3u32), (n - 1) as usize);
            let direct = if n <= PARTITION_CAP {
                Check::from_bool(max_degree_alternating(n)? >= BigUint::one() << (n - 1))
            } else {
                Check::NotApplicable
            };
            let p = partition_count(n)?;
            let class_bound = Check::from_bool(&p * &p <= three_pow);
            let factorial = if n >= 18 {
                let f = factorial(n);
                Check::from_bool(&f * &f >= three_pow << (4 * n))
            } else {
                Check::NotApplicable
            };
            Ok(AnLemmaRow {
                n,
                direct,
                class_bound,
                factorial,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn enumeration_order_and_counts() {
        let five: Vec<String> = partitions(5).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(
            five,
            ["(5)", "(4,1)", "(3,2)", "(3,1,1)", "(2,2,1)", "(2,1,1,1)", "(1,1,1,1,1)"]
        );
        assert_eq!(partitions(1).unwrap().len(), 1);
        assert_eq!(partitions(10).unwrap().len(), 42);
        assert_eq!(partitions(41), Err(AltError::CapExceeded { n: 41, cap: 40 }));
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(hook_degree(&part(&[4])), BigUint::one());
        assert_eq!(hook_degree(&part(&[2, 1])), BigUint::from(2u32));
        assert_eq!(hook_degree(&part(&[3, 2])), BigUint::from(5u32));
    }

    #[test]
    fn largest_alternating_degrees() {
        assert_eq!(max_degree_alternating(5).unwrap(), BigUint::from(5u32));
        assert_eq!(max_degree_alternating(7).unwrap(), BigUint::from(35u32));
        assert!(max_degree_alternating(10).unwrap() >= BigUint::from(512u32));
    }

    #[test]
    fn lemma_rows() {
        let rows = verify_an_lemma(9, 18).unwrap();
        assert_eq!(rows[0].status(), Check::NotApplicable);
        assert!(rows[1..].iter().all(|r| r.status() == Check::Holds));
        assert_eq!(rows[9].factorial, Check::Holds);
        assert_eq!(rows[8].factorial, Check::NotApplicable);
    }
}
