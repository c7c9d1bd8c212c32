//! Exact integer arithmetic: factorization, the Möbius function, cyclotomic
//! values and p-parts.

mod primality;
mod rho;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

pub use primality::{is_prime, is_prime_u64, prove_prime};

/// Default ceiling on the bit length of any number handed to [`factorize`].
pub const DEFAULT_MAX_BITS: u64 = 512;

/// Trial division covers every prime below this bound.
const TRIAL_BOUND: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("factorization budget exhausted")]
    FactorizationTimeout,
    #[error("{bits}-bit value exceeds the {cap}-bit magnitude cap")]
    MagnitudeExceeded { bits: u64, cap: u64 },
    #[error("{0} is not prime")]
    NotPrime(BigUint),
    #[error("could not certify primality of {0}")]
    PrimalityUnresolved(BigUint),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Time and magnitude limits for factorization work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    deadline: Option<Instant>,
    max_bits: u64,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            deadline: None,
            max_bits: DEFAULT_MAX_BITS,
        }
    }

    pub fn with_timeout(timeout: Duration) -> Self {
        Budget {
            deadline: Some(Instant::now() + timeout),
            max_bits: DEFAULT_MAX_BITS,
        }
    }

    pub fn with_max_bits(mut self, max_bits: u64) -> Self {
        self.max_bits = max_bits;
        self
    }

    pub fn max_bits(&self) -> u64 {
        self.max_bits
    }

    pub fn deadline(&self) -> Option<Instant> {
        self.deadline
    }

    pub fn is_exhausted(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    pub fn check(&self) -> Result<(), ArithError> {
        if self.is_exhausted() {
            Err(ArithError::FactorizationTimeout)
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}

/// A positive integer together with its prime factorization.
///
/// Entries are sorted by prime and every exponent is positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    entries: Vec<(BigUint, u32)>,
    value: BigUint,
}

impl Factorization {
    pub fn one() -> Self {
        Factorization {
            entries: Vec::new(),
            value: BigUint::one(),
        }
    }

    /// `p^e` for a prime `p`. Primality is the caller's responsibility.
    pub fn prime_power(p: BigUint, e: u32) -> Self {
        if e == 0 {
            return Factorization::one();
        }
        let value = num_traits::pow(p.clone(), e as usize);
        Factorization {
            entries: vec![(p, e)],
            value,
        }
    }

    fn from_map(map: BTreeMap<BigUint, u32>) -> Self {
        let mut value = BigUint::one();
        for (p, &e) in &map {
            value *= num_traits::pow(p.clone(), e as usize);
        }
        Factorization {
            entries: map.into_iter().filter(|(_, e)| *e > 0).collect(),
            value,
        }
    }

    fn to_map(&self) -> BTreeMap<BigUint, u32> {
        self.entries.iter().cloned().collect()
    }

    pub fn entries(&self) -> &[(BigUint, u32)] {
        &self.entries
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn is_one(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.entries.iter().map(|(p, _)| p)
    }

    pub fn prime_set(&self) -> BTreeSet<BigUint> {
        self.primes().cloned().collect()
    }

    pub fn exponent_of(&self, p: &BigUint) -> u32 {
        self.entries
            .binary_search_by(|(q, _)| q.cmp(p))
            .map(|i| self.entries[i].1)
            .unwrap_or(0)
    }

    /// Product of the distinct primes.
    pub fn radical(&self) -> BigUint {
        self.primes().product()
    }

    pub fn mul(&self, other: &Factorization) -> Factorization {
        self.pow_mul(other, 1)
    }

    /// `self * other^k`.
    pub fn pow_mul(&self, other: &Factorization, k: u32) -> Factorization {
        let mut map = self.to_map();
        for (p, e) in &other.entries {
            *map.entry(p.clone()).or_insert(0) += e * k;
        }
        Factorization::from_map(map)
    }

    /// Exact quotient, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Factorization) -> Option<Factorization> {
        let mut map = self.to_map();
        for (p, e) in &other.entries {
            let slot = map.get_mut(p)?;
            *slot = slot.checked_sub(*e)?;
        }
        Some(Factorization::from_map(map))
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| (2..TRIAL_BOUND).filter(|&n| is_prime_u64(n)).collect())
}

/// Prime factorization of `n > 0`.
///
/// Fails with [`ArithError::MagnitudeExceeded`] when `n` is longer than the
/// budget's bit cap and with [`ArithError::FactorizationTimeout`] once the
/// deadline passes.
pub fn factorize(n: &BigUint, budget: &Budget) -> Result<Factorization, ArithError> {
    if n.is_zero() {
        return Err(ArithError::InvalidArgument("cannot factor 0".into()));
    }
    let bits = n.bits();
    if bits > budget.max_bits {
        return Err(ArithError::MagnitudeExceeded {
            bits,
            cap: budget.max_bits,
        });
    }
    factor_unchecked(n, budget)
}

pub fn factorize_u64(n: u64, budget: &Budget) -> Result<Factorization, ArithError> {
    factorize(&BigUint::from(n), budget)
}

/// Finds `(r, k)` with `r^k = n` and `k >= 2` prime, for `n` free of prime
/// factors below [`TRIAL_BOUND`].
fn perfect_power(n: &BigUint) -> Option<(BigUint, u32)> {
    let max_k = (n.bits() / 12) as u32;
    (2..=max_k).filter(|&k| is_prime_u64(k as u64)).find_map(|k| {
        let r = n.nth_root(k);
        (num_traits::pow(r.clone(), k as usize) == *n).then_some((r, k))
    })
}

pub(crate) fn factor_unchecked(n: &BigUint, budget: &Budget) -> Result<Factorization, ArithError> {
    let mut found: BTreeMap<BigUint, u32> = BTreeMap::new();
    let mut rest = n.clone();
    for &p in small_primes() {
        if rest.is_one() {
            break;
        }
        let pb = BigUint::from(p);
        let mut e = 0;
        while (&rest % p).is_zero() {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            found.insert(pb, e);
        }
    }
    let square_bound = BigUint::from(TRIAL_BOUND * TRIAL_BOUND);
    let mut pending = vec![(rest, 1u32)];
    while let Some((c, mult)) = pending.pop() {
        if c.is_one() {
            continue;
        }
        budget.check()?;
        if c < square_bound || prove_prime(&c, budget)? {
            *found.entry(c).or_insert(0) += mult;
            continue;
        }
        if let Some((root, k)) = perfect_power(&c) {
            pending.push((root, mult * k));
            continue;
        }
        let d = rho::rho_big(&c, budget)?;
        let e = &c / &d;
        pending.push((d, mult));
        pending.push((e, mult));
    }
    Ok(Factorization::from_map(found))
}

/// Set of prime divisors of `n > 0`.
pub fn prime_set(n: &BigUint, budget: &Budget) -> Result<BTreeSet<BigUint>, ArithError> {
    factorize(n, budget).map(|f| f.prime_set())
}

/// Möbius function. `moebius(0)` is defined as 0.
pub fn moebius(n: u64) -> i8 {
    if n == 0 {
        return 0;
    }
    let f = small_factor(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Factorization of a machine-sized integer as `(prime, exponent)` pairs.
pub(crate) fn small_factor(n: u64) -> Vec<(u64, u32)> {
    let f = factorize_u64(n.max(1), &Budget::unlimited())
        .expect("64-bit factorization without a deadline cannot fail");
    f.entries()
        .iter()
        .map(|(p, e)| (p.to_u64().expect("factor of a u64"), *e))
        .collect()
}

/// All positive divisors of `n >= 1`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in small_factor(n) {
        let len = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// `Φ_n(q)` for `n >= 1` and `q >= 2`, computed as
/// `∏_{d | n} (q^d - 1)^{μ(n/d)}`.
///
/// # Panics
/// When `n == 0` or `q < 2`.
pub fn cyclotomic_value(n: u64, q: &BigUint) -> BigUint {
    assert!(n >= 1, "cyclotomic index must be positive");
    assert!(*q >= BigUint::from(2u32), "cyclotomic base must be at least 2");
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for d in divisors(n) {
        let term = || num_traits::pow(q.clone(), d as usize) - 1u32;
        match moebius(n / d) {
            1 => num *= term(),
            -1 => den *= term(),
            _ => {}
        }
    }
    num / den
}

/// Largest power of the prime `p` dividing `n > 0`.
pub fn p_part(n: &BigUint, p: &BigUint) -> Result<BigUint, ArithError> {
    if n.is_zero() {
        return Err(ArithError::InvalidArgument("p-part of 0".into()));
    }
    if !is_prime(p) {
        return Err(ArithError::NotPrime(p.clone()));
    }
    let mut part = BigUint::one();
    let mut rest = n.clone();
    while (&rest % p).is_zero() {
        rest /= p;
        part *= p;
    }
    Ok(part)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn small_factorizations() {
        let b = Budget::unlimited();
        assert_eq!(factorize(&big(728), &b).unwrap().to_string(), "2^3·7·13");
        assert_eq!(factorize(&big(29120), &b).unwrap().to_string(), "2^6·5·7·13");
        assert_eq!(factorize(&big(1), &b).unwrap().to_string(), "1");
        assert!(factorize(&big(0), &b).is_err());
    }

    #[test]
    fn perfect_powers_of_large_primes() {
        let b = Budget::unlimited();
        let p = big(1_000_000_007);
        let n = num_traits::pow(p.clone(), 5) * big(12);
        let f = factorize(&n, &b).unwrap();
        assert_eq!(f.exponent_of(&p), 5);
        assert_eq!(f.value(), &n);
    }

    #[test]
    fn magnitude_cap() {
        let b = Budget::unlimited().with_max_bits(64);
        let n = BigUint::one() << 64u32;
        assert_eq!(
            factorize(&n, &b),
            Err(ArithError::MagnitudeExceeded { bits: 65, cap: 64 })
        );
    }

    #[test]
    fn expired_budget_times_out() {
        let b = Budget::with_timeout(Duration::ZERO);
        // Product of two 40-bit primes needs rho.
        let n = big(1_099_511_627_791) * big(1_099_511_628_401);
        assert_eq!(factorize(&n, &b), Err(ArithError::FactorizationTimeout));
    }

    #[test]
    fn cyclotomic_small_values() {
        assert_eq!(cyclotomic_value(6, &big(2)), big(3));
        assert_eq!(cyclotomic_value(12, &big(2)), big(13));
        assert_eq!(cyclotomic_value(1, &big(7)), big(6));
        assert_eq!(cyclotomic_value(4, &big(3)), big(10));
    }

    #[test]
    fn moebius_values() {
        let expect = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (i, &m) in expect.iter().enumerate() {
            assert_eq!(moebius(i as u64 + 1), m, "n = {}", i + 1);
        }
    }

    #[test]
    fn p_part_values() {
        assert_eq!(p_part(&big(48), &big(2)).unwrap(), big(16));
        assert_eq!(p_part(&big(48), &big(5)).unwrap(), big(1));
        assert_eq!(p_part(&big(48), &big(4)), Err(ArithError::NotPrime(big(4))));
    }
}
