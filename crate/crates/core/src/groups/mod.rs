//! Finite simple groups: identifiers, exact orders, prime sets and
//! defining-characteristic p-parts.

mod parse;
mod sporadic;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::arith::{self, cyclotomic_value, factorize, factorize_u64, ArithError, Budget, Factorization};

pub use parse::{parse_group, scan_head, Family, FamilyHead, Head};
pub use sporadic::Sporadic;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("malformed group name at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("{0} is not simple")]
    NotSimple(String),
    #[error("{0} is not of Lie type")]
    NotLieType(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i64(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

/// A finite simple group.
///
/// Values built through [`parse_group`] or [`build`] are validated and
/// canonical: same-characteristic isomorphisms such as `O5(q) = S4(q)` or
/// `O6+(q) = L4(q)` resolve to one representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupId {
    Alternating { n: u64 },
    /// `L_n(q)` for [`Sign::Plus`], `U_n(q)` for [`Sign::Minus`].
    Linear { n: u64, q: u64, sign: Sign },
    /// `S_{2n}(q)`.
    Symplectic { n: u64, q: u64 },
    /// `O_{2n+1}(q)`, `q` odd.
    OrthOdd { n: u64, q: u64 },
    /// `O^±_{2n}(q)`.
    OrthEven { n: u64, q: u64, sign: Sign },
    /// `²B₂(2^{2m+1})`.
    Suzuki { m: u64 },
    /// `²G₂(3^{2m+1})`.
    Ree { m: u64 },
    /// `²F₄(2^{2m+1})`.
    TwistedF4 { m: u64 },
    TriD4 { q: u64 },
    G2 { q: u64 },
    F4 { q: u64 },
    /// `E₆(q)` for [`Sign::Plus`], `²E₆(q)` for [`Sign::Minus`].
    E6 { q: u64, sign: Sign },
    E7 { q: u64 },
    E8 { q: u64 },
    Sporadic(Sporadic),
}

/// `(p, a)` with `q = p^a`.
pub fn prime_power(q: u64) -> Result<(u64, u32), GroupError> {
    if q < 2 {
        return Err(GroupError::InvalidParameters(format!("{q} is not a prime power")));
    }
    let f = factorize_u64(q, &Budget::unlimited())?;
    match f.entries() {
        [(p, a)] => Ok((p.to_u64().expect("divisor of a u64"), *a)),
        _ => Err(GroupError::InvalidParameters(format!("{q} is not a prime power"))),
    }
}

fn checked_pow(base: u64, exp: u64) -> Result<u64, GroupError> {
    u32::try_from(exp)
        .ok()
        .and_then(|e| base.checked_pow(e))
        .ok_or_else(|| GroupError::InvalidParameters(format!("{base}^{exp} exceeds 64 bits")))
}

/// Exponent `k` of a twisted field size `Q = p^k`, required to be odd.
fn twisted_exponent(family: &str, p: u64, field: u64) -> Result<u64, GroupError> {
    let (r, k) = prime_power(field)?;
    if r != p || k % 2 == 0 {
        return Err(GroupError::InvalidParameters(format!(
            "{family} needs a field size {p}^(2m+1), got {field}"
        )));
    }
    Ok(k as u64)
}

fn not_simple(name: impl Into<String>) -> GroupError {
    GroupError::NotSimple(name.into())
}

/// Validates and canonicalizes a group from a family head and its integer
/// arguments, e.g. `L` with `[3, 4]` or `L3` with `[4]`.
pub fn build(head: FamilyHead, args: &[u64]) -> Result<GroupId, GroupError> {
    let mut vals: Vec<u64> = head.dim.into_iter().chain(args.iter().copied()).collect();
    let expected = match head.family {
        Family::A => 1,
        Family::L | Family::U | Family::S | Family::O | Family::OPlus | Family::OMinus => 2,
        _ => 1,
    };
    if vals.len() != expected {
        return Err(GroupError::InvalidParameters(format!(
            "{} takes {expected} parameter(s), got {}",
            head.family.label(),
            vals.len()
        )));
    }
    let first = vals.remove(0);
    if head.family == Family::A {
        if first < 5 {
            return Err(not_simple(format!("A{first}")));
        }
        return Ok(GroupId::Alternating { n: first });
    }
    if !head.family.is_classical() {
        return build_exceptional(head.family, first);
    }
    let (dim, q) = (first, vals[0]);
    prime_power(q)?;
    let group = match head.family {
        Family::L | Family::U if dim < 2 => {
            return Err(GroupError::InvalidParameters(format!("dimension {dim} < 2")))
        }
        Family::L => GroupId::Linear { n: dim, q, sign: Sign::Plus },
        Family::U if dim == 2 => GroupId::Linear { n: 2, q, sign: Sign::Plus },
        Family::U => GroupId::Linear { n: dim, q, sign: Sign::Minus },
        Family::S => {
            if dim < 2 || dim % 2 == 1 {
                return Err(GroupError::InvalidParameters(format!(
                    "symplectic dimension must be even and positive, got {dim}"
                )));
            }
            match dim / 2 {
                1 => GroupId::Linear { n: 2, q, sign: Sign::Plus },
                n => GroupId::Symplectic { n, q },
            }
        }
        Family::O => {
            if dim < 3 || dim % 2 == 0 {
                return Err(GroupError::InvalidParameters(format!(
                    "O(d, q) needs odd d >= 3, got {dim}; use O+ or O- for even d"
                )));
            }
            match dim / 2 {
                1 => GroupId::Linear { n: 2, q, sign: Sign::Plus },
                n if n == 2 || q % 2 == 0 => GroupId::Symplectic { n, q },
                n => GroupId::OrthOdd { n, q },
            }
        }
        Family::OPlus | Family::OMinus => {
            let sign = if head.family == Family::OPlus { Sign::Plus } else { Sign::Minus };
            if dim % 2 == 1 || dim < 6 {
                return Err(GroupError::InvalidParameters(format!(
                    "O{}(d, q) needs even d >= 6, got {dim}",
                    if sign == Sign::Plus { "+" } else { "-" }
                )));
            }
            match dim / 2 {
                3 => GroupId::Linear { n: 4, q, sign },
                n => GroupId::OrthEven { n, q, sign },
            }
        }
        _ => unreachable!("classical families handled above"),
    };
    match group {
        GroupId::Linear { n: 2, q: 2 | 3, sign: Sign::Plus }
        | GroupId::Linear { n: 3, q: 2, sign: Sign::Minus }
        | GroupId::Symplectic { n: 2, q: 2 } => Err(not_simple(group.to_string())),
        g => Ok(g),
    }
}

fn build_exceptional(family: Family, q: u64) -> Result<GroupId, GroupError> {
    let group = match family {
        Family::B2Twisted => GroupId::Suzuki { m: twisted_exponent("2B2", 2, q)? / 2 },
        Family::G2Twisted => GroupId::Ree { m: twisted_exponent("2G2", 3, q)? / 2 },
        Family::F4Twisted => GroupId::TwistedF4 { m: twisted_exponent("2F4", 2, q)? / 2 },
        _ => {
            prime_power(q)?;
            match family {
                Family::D4Triality => GroupId::TriD4 { q },
                Family::G2 => GroupId::G2 { q },
                Family::F4 => GroupId::F4 { q },
                Family::E6 => GroupId::E6 { q, sign: Sign::Plus },
                Family::E6Twisted => GroupId::E6 { q, sign: Sign::Minus },
                Family::E7 => GroupId::E7 { q },
                Family::E8 => GroupId::E8 { q },
                _ => unreachable!("exceptional families only"),
            }
        }
    };
    match group {
        GroupId::Suzuki { m: 0 } => Err(not_simple("2B2(2)")),
        GroupId::Ree { m: 0 } => Err(not_simple("2G2(3)")),
        GroupId::TwistedF4 { m: 0 } => Err(not_simple("2F4(2), whose derived subgroup is 2F4(2)'")),
        GroupId::G2 { q: 2 } => Err(not_simple("G2(2)")),
        g => {
            g.shape()?;
            Ok(g)
        }
    }
}

/// Cyclotomic description of a Lie-type order:
/// `p^p_exp * ∏ Φ_d(base)^mult / center`.
struct Shape {
    p: u64,
    p_exp: u64,
    base: u64,
    cyclo: BTreeMap<u64, i64>,
    center: u64,
}

impl Shape {
    fn new(p: u64, p_exp: u64, base: u64) -> Self {
        Shape {
            p,
            p_exp,
            base,
            cyclo: BTreeMap::new(),
            center: 1,
        }
    }

    /// Multiplies by `(base^i - 1)^k`.
    fn minus(mut self, i: u64, k: i64) -> Self {
        for d in arith::divisors(i) {
            *self.cyclo.entry(d).or_insert(0) += k;
        }
        self
    }

    /// Multiplies by `base^i + 1 = (base^{2i} - 1) / (base^i - 1)`.
    fn plus(self, i: u64) -> Self {
        self.minus(2 * i, 1).minus(i, -1)
    }

    fn minus_all(self, is: &[u64]) -> Self {
        is.iter().fold(self, |s, &i| s.minus(i, 1))
    }

    fn center(mut self, d: u64) -> Self {
        self.center = d;
        self
    }
}

/// `q^e mod m` without overflow.
fn pow_mod(q: u64, e: u64, m: u64) -> u64 {
    BigUint::from(q)
        .modpow(&BigUint::from(e), &BigUint::from(m))
        .to_u64()
        .expect("residue fits")
}

impl GroupId {
    /// Defining characteristic and `a` with base field size `p^a`. Twisted
    /// groups report the full field: `²B₂(2^{2m+1})` gives `(2, 2m+1)`.
    pub fn field(&self) -> Option<(u64, u32)> {
        use GroupId::*;
        match *self {
            Alternating { .. } | Sporadic(_) => None,
            Suzuki { m } | TwistedF4 { m } => Some((2, (2 * m + 1) as u32)),
            Ree { m } => Some((3, (2 * m + 1) as u32)),
            Linear { q, .. }
            | Symplectic { q, .. }
            | OrthOdd { q, .. }
            | OrthEven { q, .. }
            | TriD4 { q }
            | G2 { q }
            | F4 { q }
            | E6 { q, .. }
            | E7 { q }
            | E8 { q } => prime_power(q).ok(),
        }
    }

    pub fn characteristic(&self) -> Option<u64> {
        self.field().map(|(p, _)| p)
    }

    pub fn is_lie_type(&self) -> bool {
        !matches!(self, GroupId::Alternating { .. } | GroupId::Sporadic(_))
    }

    pub fn is_exceptional(&self) -> bool {
        use GroupId::*;
        matches!(
            self,
            Suzuki { .. } | Ree { .. } | TwistedF4 { .. } | TriD4 { .. } | G2 { .. } | F4 { .. } | E6 { .. } | E7 { .. } | E8 { .. }
        )
    }

    fn shape(&self) -> Result<Shape, GroupError> {
        use GroupId::*;
        let (p, a) = self
            .field()
            .ok_or_else(|| GroupError::NotLieType(self.to_string()))?;
        let a = a as u64;
        let q = checked_pow(p, a)?;
        let s = match *self {
            Linear { n, sign: Sign::Plus, .. } => {
                let s = (2..=n).fold(Shape::new(p, a * n * (n - 1) / 2, q), |s, i| s.minus(i, 1));
                s.center(n.gcd(&(q - 1)))
            }
            Linear { n, sign: Sign::Minus, .. } => {
                let s = (2..=n).fold(Shape::new(p, a * n * (n - 1) / 2, q), |s, i| {
                    if i % 2 == 0 {
                        s.minus(i, 1)
                    } else {
                        s.plus(i)
                    }
                });
                s.center(n.gcd(&(q + 1)))
            }
            Symplectic { n, .. } | OrthOdd { n, .. } => {
                let s = (1..=n).fold(Shape::new(p, a * n * n, q), |s, i| s.minus(2 * i, 1));
                s.center(if q % 2 == 0 { 1 } else { 2 })
            }
            OrthEven { n, sign, .. } => {
                let s = (1..n).fold(Shape::new(p, a * n * (n - 1), q), |s, i| s.minus(2 * i, 1));
                let (s, residue) = match sign {
                    Sign::Plus => (s.minus(n, 1), (pow_mod(q, n, 4) + 3) % 4),
                    Sign::Minus => (s.plus(n), (pow_mod(q, n, 4) + 1) % 4),
                };
                s.center(residue.gcd(&4))
            }
            Suzuki { .. } => Shape::new(2, 2 * a, q).plus(2).minus(1, 1),
            Ree { .. } => Shape::new(3, 3 * a, q).plus(3).minus(1, 1),
            TwistedF4 { .. } => Shape::new(2, 12 * a, q).plus(6).minus(4, 1).plus(3).minus(1, 1),
            TriD4 { .. } => Shape::new(p, 12 * a, q)
                .minus(12, 1)
                .minus(4, -1)
                .minus_all(&[6, 2]),
            G2 { .. } => Shape::new(p, 6 * a, q).minus_all(&[6, 2]),
            F4 { .. } => Shape::new(p, 24 * a, q).minus_all(&[12, 8, 6, 2]),
            E6 { sign: Sign::Plus, .. } => Shape::new(p, 36 * a, q)
                .minus_all(&[12, 9, 8, 6, 5, 2])
                .center(3u64.gcd(&(q - 1))),
            E6 { sign: Sign::Minus, .. } => Shape::new(p, 36 * a, q)
                .minus_all(&[12, 8, 6, 2])
                .plus(9)
                .plus(5)
                .center(3u64.gcd(&(q + 1))),
            E7 { .. } => Shape::new(p, 63 * a, q)
                .minus_all(&[2, 6, 8, 10, 12, 14, 18])
                .center(2u64.gcd(&(q - 1))),
            E8 { .. } => Shape::new(p, 120 * a, q).minus_all(&[2, 8, 12, 14, 18, 20, 24, 30]),
            Alternating { .. } | Sporadic(_) => unreachable!("field() is None"),
        };
        debug_assert!(s.cyclo.values().all(|&k| k >= 0));
        Ok(s)
    }

    /// Exact order, without factoring it.
    pub fn order_value(&self) -> BigUint {
        match self {
            GroupId::Alternating { n } => {
                let fact: BigUint = (1..=*n).map(BigUint::from).product();
                fact / 2u32
            }
            GroupId::Sporadic(s) => s.order().value().clone(),
            _ => {
                let s = self.shape().expect("validated group");
                let base = BigUint::from(s.base);
                let mut v = num_traits::pow(BigUint::from(s.p), s.p_exp as usize);
                for (&d, &k) in &s.cyclo {
                    v *= num_traits::pow(cyclotomic_value(d, &base), k as usize);
                }
                v / s.center
            }
        }
    }

    /// Exact order with its full factorization.
    ///
    /// Lie-type orders are factored one cyclotomic piece at a time, so the
    /// magnitude cap applies to each `Φ_d(q)` rather than to the whole order.
    pub fn order(&self, budget: &Budget) -> Result<Factorization, GroupError> {
        match self {
            GroupId::Alternating { n } => Ok(factorial_factorization(*n)
                .checked_div(&Factorization::prime_power(2u32.into(), 1))
                .expect("n! is even")),
            GroupId::Sporadic(s) => Ok(s.order().clone()),
            _ => {
                let s = self.shape()?;
                let base = BigUint::from(s.base);
                let mut f = Factorization::prime_power(BigUint::from(s.p), s.p_exp as u32);
                for (&d, &k) in &s.cyclo {
                    if k > 0 {
                        let piece = factorize(&cyclotomic_value(d, &base), budget)?;
                        f = f.pow_mul(&piece, k as u32);
                    }
                }
                let center = factorize_u64(s.center, budget)?;
                Ok(f.checked_div(&center).expect("center divides the order"))
            }
        }
    }

    pub fn pi(&self, budget: &Budget) -> Result<BTreeSet<BigUint>, GroupError> {
        Ok(self.order(budget)?.prime_set())
    }

    /// Defining characteristic `p` and `k` with `|G|_p = p^k`.
    pub fn p_part_order(&self) -> Result<(u64, u64), GroupError> {
        let s = self.shape()?;
        Ok((s.p, s.p_exp))
    }
}

/// `n!` factored by Legendre's formula.
pub fn factorial_factorization(n: u64) -> Factorization {
    (2..=n)
        .filter(|&p| arith::is_prime_u64(p))
        .fold(Factorization::one(), |acc, p| {
            let mut e = 0u64;
            let mut pk = n;
            while pk >= p {
                pk /= p;
                e += pk;
            }
            acc.mul(&Factorization::prime_power(BigUint::from(p), e as u32))
        })
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupId::*;
        let sign = |s: &Sign| if *s == Sign::Plus { "+" } else { "-" };
        match self {
            Alternating { n } => write!(f, "A{n}"),
            Linear { n, q, sign: Sign::Plus } => write!(f, "L{n}({q})"),
            Linear { n, q, sign: Sign::Minus } => write!(f, "U{n}({q})"),
            Symplectic { n, q } => write!(f, "S{}({q})", 2 * n),
            OrthOdd { n, q } => write!(f, "O{}({q})", 2 * n + 1),
            OrthEven { n, q, sign: s } => write!(f, "O{}{}({q})", 2 * n, sign(s)),
            Suzuki { m } => write!(f, "2B2({})", 1u128 << (2 * m + 1)),
            Ree { m } => write!(f, "2G2({})", 3u128.pow(2 * *m as u32 + 1)),
            TwistedF4 { m } => write!(f, "2F4({})", 1u128 << (2 * m + 1)),
            TriD4 { q } => write!(f, "3D4({q})"),
            G2 { q } => write!(f, "G2({q})"),
            F4 { q } => write!(f, "F4({q})"),
            E6 { q, sign: Sign::Plus } => write!(f, "E6({q})"),
            E6 { q, sign: Sign::Minus } => write!(f, "2E6({q})"),
            E7 { q } => write!(f, "E7({q})"),
            E8 { q } => write!(f, "E8({q})"),
            Sporadic(s) => write!(f, "{s}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order_of(name: &str) -> BigUint {
        parse_group(name).unwrap().order(&Budget::unlimited()).unwrap().value().clone()
    }

    #[test]
    fn small_orders() {
        assert_eq!(order_of("2B2(8)"), BigUint::from(29120u32));
        assert_eq!(order_of("G2(3)"), BigUint::from(4_245_696u32));
        assert_eq!(order_of("3D4(2)"), BigUint::from(211_341_312u32));
        assert_eq!(order_of("A(5)"), BigUint::from(60u32));
        assert_eq!(order_of("L2(4)"), BigUint::from(60u32));
        assert_eq!(order_of("L3(4)"), BigUint::from(20160u32));
        assert_eq!(order_of("U4(3)"), BigUint::from(3_265_920u32));
        assert_eq!(order_of("O8+(2)"), BigUint::from(174_182_400u32));
        assert_eq!(order_of("O8-(2)"), BigUint::from(197_406_720u32));
        assert_eq!(order_of("O7(3)"), BigUint::from(4_585_351_680u64));
        assert_eq!(order_of("O+(8,3)"), BigUint::from(4_952_179_814_400u64));
    }

    #[test]
    fn order_value_agrees_with_factored_order() {
        for name in ["E8(2)", "2E6(2)", "E7(3)", "F4(2)", "U5(4)", "O10-(3)", "S8(5)"] {
            let g = parse_group(name).unwrap();
            assert_eq!(&g.order_value(), g.order(&Budget::unlimited()).unwrap().value(), "{name}");
        }
    }
}
