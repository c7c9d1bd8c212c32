//! Primitive prime divisors of `q^n - 1`.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use thiserror::Error;

use crate::arith::{cyclotomic_value, factorize, small_factor, ArithError, Budget};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZsigmondyError {
    #[error("l_{{-{n}}}({q}) is undefined: n must be odd and (q, n) != (2, 3)")]
    UndefinedCase { q: BigUint, n: u64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// `(q, n)` pairs with `n >= 3` where no primitive prime divisor exists.
pub fn is_zsigmondy_exception(q: &BigUint, n: u64) -> bool {
    n == 6 && *q == BigUint::from(2u32)
}

/// Whether the multiplicative order of `q` modulo the prime `l` equals `n`,
/// given that `l` divides `q^n - 1`.
fn has_order(q: &BigUint, n: u64, l: &BigUint) -> bool {
    let one = BigUint::one();
    let qm = q % l;
    if qm.modpow(&BigUint::from(n), l) != one {
        return false;
    }
    small_factor(n)
        .iter()
        .all(|&(r, _)| qm.modpow(&BigUint::from(n / r), l) != one)
}

/// Primes `l` dividing `q^n - 1` but no `q^m - 1` with `m < n`.
///
/// These are exactly the prime factors of `Φ_n(q)` whose order modulo `l` is
/// `n`; the only other prime that can divide `Φ_n(q)` is the largest prime
/// factor of `n`.
pub fn primitive_prime_divisors(
    q: &BigUint,
    n: u64,
    budget: &Budget,
) -> Result<BTreeSet<BigUint>, ZsigmondyError> {
    if *q < BigUint::from(2u32) || n == 0 {
        return Err(ZsigmondyError::InvalidArgument(format!(
            "need q >= 2 and n >= 1, got q = {q}, n = {n}"
        )));
    }
    let phi = cyclotomic_value(n, q);
    let f = factorize(&phi, budget)?;
    Ok(f.primes().filter(|l| has_order(q, n, l)).cloned().collect())
}

/// The largest primitive prime divisor `l_n(q)`, or `None` when there is none.
///
/// For `n >= 3` the only absent case is `(q, n) = (2, 6)`.
pub fn l(q: &BigUint, n: u64, budget: &Budget) -> Result<Option<BigUint>, ZsigmondyError> {
    let ppd = primitive_prime_divisors(q, n, budget)?;
    let largest = ppd.last().cloned();
    debug_assert!(
        n < 3 || largest.is_some() || is_zsigmondy_exception(q, n),
        "missing primitive prime divisor for q = {q}, n = {n}"
    );
    Ok(largest)
}

/// `l_{-n}(q) = l_{2n}(q)` for odd `n` with `(q, n) != (2, 3)`.
///
/// `n = 1` gives `l_2(q)`, which is absent when `q + 1` is a power of 2.
pub fn l_neg(q: &BigUint, n: u64, budget: &Budget) -> Result<Option<BigUint>, ZsigmondyError> {
    if n % 2 == 0 || (n == 3 && q.to_u64() == Some(2)) {
        return Err(ZsigmondyError::UndefinedCase { q: q.clone(), n });
    }
    l(q, 2 * n, budget)
}
