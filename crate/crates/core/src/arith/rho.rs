//! Pollard-Brent rho factor search.
//!
//! Both variants iterate x -> x^2 + c from x0 = 2 with c = 1, 2, 3, ... so a
//! given input always produces the same split.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::primality::mul_mod;
use super::{ArithError, Budget};

/// Products of differences accumulated between gcd evaluations.
const BLOCK: u64 = 128;

/// Finds a non-trivial factor of an odd composite `n` that is not a perfect power.
pub(crate) fn rho_u64(n: u64, budget: &Budget) -> Result<u64, ArithError> {
    let mut c = 1u64;
    loop {
        let step = |v: u64| ((mul_mod(v, v, n) as u128 + c as u128) % n as u128) as u64;
        let mut y = 2u64;
        let mut x = y;
        let mut ys = y;
        let mut g = 1u64;
        let mut q = 1u64;
        let mut r = 1u64;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = step(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BLOCK.min(r - k) {
                    y = step(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += BLOCK;
                budget.check()?;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = step(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return Ok(g);
        }
        c += 1;
    }
}

/// Arbitrary-precision counterpart of [`rho_u64`].
pub(crate) fn rho_big(n: &BigUint, budget: &Budget) -> Result<BigUint, ArithError> {
    if let Some(small) = n.to_u64() {
        return rho_u64(small, budget).map(BigUint::from);
    }
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let step = |v: &BigUint| (v * v + &c) % n;
        let diff = |a: &BigUint, b: &BigUint| if a >= b { a - b } else { b - a };
        let mut y = BigUint::from(2u32);
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut g = one.clone();
        let mut q = one.clone();
        let mut r = 1u64;
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..BLOCK.min(r - k) {
                    y = step(&y);
                    q = (&q * diff(&x, &y)) % n;
                }
                g = q.gcd(n);
                k += BLOCK;
                budget.check()?;
            }
            r *= 2;
        }
        if &g == n || g.is_zero() {
            loop {
                ys = step(&ys);
                g = diff(&x, &ys).gcd(n);
                if g > one {
                    break;
                }
            }
        }
        if &g != n {
            return Ok(g);
        }
        c += 1u32;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_semiprimes() {
        let budget = Budget::unlimited();
        let n = 1_000_003u64 * 998_244_353;
        let f = rho_u64(n, &budget).unwrap();
        assert!(f == 1_000_003 || f == 998_244_353);

        let big = BigUint::from(193_707_721u64) * BigUint::from(761_838_257_287u64);
        let f = rho_big(&big, &budget).unwrap();
        assert!(f > BigUint::one() && f < big && (&big % &f).is_zero());
    }
}
