//! Primality testing.
//!
//! Below 2^64 a strong-pseudoprime test over the first twelve prime bases is
//! deterministic. Above 2^64 the same test is only a filter: [`prove_prime`]
//! backs it with a Lucas-Pocklington certificate built from the full
//! factorization of n - 1.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::{factor_unchecked, ArithError, Budget};

/// Bases making Miller-Rabin deterministic for every n < 3.3 * 10^24.
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Extra bases used as a compositeness filter above 2^64.
const MR_BASES_BIG: [u64; 20] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
];

/// Upper limit on the Pocklington witness search for a single prime factor of n - 1.
const WITNESS_LIMIT: u64 = 400;

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'witness: for &a in &MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn strong_probable_prime(n: &BigUint, bases: &[u64]) -> bool {
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &a in bases {
        let a = BigUint::from(a);
        if (&a % n) == BigUint::default() {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primality test. Exact below 2^64; a strong probable-prime test over twenty
/// bases above. Use [`prove_prime`] when a proof is required.
pub fn is_prime(n: &BigUint) -> bool {
    match n.to_u64() {
        Some(small) => is_prime_u64(small),
        None => n.is_odd() && strong_probable_prime(n, &MR_BASES_BIG),
    }
}

/// Proven primality.
///
/// Above 2^64 a probable prime is certified with the Lucas-Pocklington
/// criterion: n is prime iff for every prime f dividing n - 1 some base a has
/// a^(n-1) = 1 and gcd(a^((n-1)/f) - 1, n) = 1. Factoring n - 1 consumes the
/// same budget as the surrounding factorization.
pub fn prove_prime(n: &BigUint, budget: &Budget) -> Result<bool, ArithError> {
    if let Some(small) = n.to_u64() {
        return Ok(is_prime_u64(small));
    }
    if n.is_even() || !strong_probable_prime(n, &MR_BASES_BIG) {
        return Ok(false);
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let cofactor = factor_unchecked(&n_minus_1, budget)?;
    for (f, _) in cofactor.entries() {
        let exp = &n_minus_1 / f;
        let mut certified = false;
        for a in 2..WITNESS_LIMIT {
            let a = BigUint::from(a);
            if a.modpow(&n_minus_1, n) != one {
                return Ok(false);
            }
            let t = a.modpow(&exp, n);
            if t == one {
                continue;
            }
            if (t - &one).gcd(n) == one {
                certified = true;
                break;
            }
        }
        if !certified {
            return Err(ArithError::PrimalityUnresolved(n.clone()));
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sieve(limit: usize) -> Vec<bool> {
        let mut is = vec![true; limit + 1];
        is[0] = false;
        is[1] = false;
        let mut i = 2;
        while i * i <= limit {
            if is[i] {
                let mut j = i * i;
                while j <= limit {
                    is[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        is
    }

    #[test]
    fn u64_test_matches_sieve() {
        let table = sieve(200_000);
        for (n, &expect) in table.iter().enumerate() {
            assert_eq!(is_prime_u64(n as u64), expect, "n = {n}");
        }
    }

    #[test]
    fn strong_pseudoprimes_rejected() {
        // 3215031751 is a strong pseudoprime to bases 2, 3, 5 and 7.
        assert!(!is_prime_u64(3_215_031_751));
        // 3825123056546413051 fools bases up to 23.
        assert!(!is_prime_u64(3_825_123_056_546_413_051));
        assert!(is_prime_u64(18_446_744_073_709_551_557));
    }

    #[test]
    fn pocklington_certifies_large_primes() {
        let budget = Budget::unlimited();
        // 2^89 - 1 and 2^127 - 1 are Mersenne primes.
        let m89 = (BigUint::one() << 89u32) - 1u32;
        let m127 = (BigUint::one() << 127u32) - 1u32;
        assert!(prove_prime(&m89, &budget).unwrap());
        assert!(prove_prime(&m127, &budget).unwrap());
        // 2^67 - 1 = 193707721 * 761838257287.
        let m67 = (BigUint::one() << 67u32) - 1u32;
        assert!(!prove_prime(&m67, &budget).unwrap());
        assert!(!is_prime(&m67));
    }
}
