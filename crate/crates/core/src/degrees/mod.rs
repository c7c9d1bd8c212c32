//! Character-degree bounds and explicit degrees for groups of Lie type.

mod tables;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::arith::cyclotomic_value;
use crate::groups::{prime_power, GroupId, Sign, Sporadic};

pub use tables::{BoundConstant, SporadicRecord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DegreeError {
    #[error("{0} is on the exception list of the lower bound")]
    ExceptionListed(String),
    #[error("{0} is not an exceptional group of Lie type")]
    NotExceptional(String),
    #[error("no unipotent p-part row for {0}")]
    RowMissing(String),
    #[error("unknown witness {0}")]
    UnknownWitness(String),
    #[error("invalid witness parameters: {0}")]
    InvalidParams(String),
    #[error("unknown sporadic group {0}")]
    UnknownSporadic(String),
    #[error("unknown bound constant {0}")]
    UnknownConstant(String),
}

fn pow(base: u64, exp: u64) -> BigUint {
    num_traits::pow(BigUint::from(base), exp as usize)
}

/// Lower bound on the smallest nontrivial degree of an exceptional group.
pub fn lsz_bound(g: &GroupId) -> Result<BigUint, DegreeError> {
    use GroupId::*;
    match *g {
        Suzuki { m: 1 } | G2 { q: 3 } | G2 { q: 4 } | F4 { q: 2 } => {
            return Err(DegreeError::ExceptionListed(g.to_string()))
        }
        _ => {}
    }
    let q = || BigUint::from(field_size(g));
    let value = match *g {
        // 2^m (2^{2m+1} - 1)
        Suzuki { m } => pow(2, m) * (pow(2, 2 * m + 1) - 1u32),
        Ree { .. } => q() * (q() - 1u32),
        // 2^{9m+4} (2^{2m+1} - 1)
        TwistedF4 { m } => pow(2, 9 * m + 4) * (pow(2, 2 * m + 1) - 1u32),
        TriD4 { q: f } => pow(f, 3) * (pow(f, 2) - 1u32),
        E6 { q: f, .. } => pow(f, 9) * (pow(f, 2) - 1u32),
        G2 { q: f } => BigUint::from(f) * (pow(f, 2) - 1u32),
        F4 { q: f } if f % 2 == 1 => pow(f, 6) * (pow(f, 2) - 1u32),
        F4 { q: f } => pow(f, 7) * (pow(f, 3) - 1u32) * (f - 1) / 2u32,
        E7 { q: f } => pow(f, 15) * (pow(f, 2) - 1u32),
        E8 { q: f } => pow(f, 27) * (pow(f, 2) - 1u32),
        _ => return Err(DegreeError::NotExceptional(g.to_string())),
    };
    Ok(value)
}

/// Full field size `q` of a Lie-type group (`2^{2m+1}` for the Suzuki groups).
fn field_size(g: &GroupId) -> u64 {
    let (p, a) = g.field().expect("Lie type");
    p.pow(a)
}

/// Upper bound on the largest degree of an exceptional group.
pub fn seitz_bound(g: &GroupId) -> Result<BigUint, DegreeError> {
    use GroupId::*;
    let exp = match g {
        Suzuki { .. } => 3,
        Ree { .. } => 4,
        TwistedF4 { .. } => 14,
        TriD4 { .. } => 17,
        G2 { .. } => 8,
        F4 { .. } => 28,
        E6 { .. } => 42,
        E7 { .. } => 70,
        E8 { .. } => 128,
        _ => return Err(DegreeError::NotExceptional(g.to_string())),
    };
    Ok(pow(field_size(g), exp))
}

/// p-part of a designated non-Steinberg unipotent character degree.
pub fn unipotent_p_part(g: &GroupId) -> Result<BigUint, DegreeError> {
    use GroupId::*;
    let missing = || DegreeError::RowMissing(g.to_string());
    let (p, b) = g.field().ok_or_else(missing)?;
    let b = b as u64;
    let exp = match *g {
        Linear { n, .. } => b * (n - 1) * (n - 2) / 2,
        Symplectic { n, .. } if p == 2 => b * (n - 1) * (n - 1) - 1,
        Symplectic { n, .. } | OrthOdd { n, .. } => b * (n - 1) * (n - 1),
        OrthEven { n, sign: Sign::Plus, .. } => b * (n * n - 3 * n + 3),
        OrthEven { n, sign: Sign::Minus, .. } => b * (n * n - 3 * n + 2),
        TriD4 { .. } => 7 * b,
        F4 { .. } => 10 * b,
        TwistedF4 { m } => 13 * m + 6,
        E6 { .. } => 25 * b,
        E7 { .. } => 46 * b,
        E8 { .. } => 91 * b,
        _ => return Err(missing()),
    };
    Ok(pow(p, exp))
}

pub fn sporadic_record(name: &str) -> Result<&'static SporadicRecord, DegreeError> {
    let s = Sporadic::from_name(name).ok_or_else(|| DegreeError::UnknownSporadic(name.into()))?;
    Ok(record(s))
}

pub fn record(s: Sporadic) -> &'static SporadicRecord {
    &tables::sporadic_records()[&s]
}

pub fn bound_constant(key: &str) -> Result<&'static BoundConstant, DegreeError> {
    tables::bound_constants()
        .get(key)
        .ok_or_else(|| DegreeError::UnknownConstant(key.into()))
}

pub fn bound_constants() -> impl Iterator<Item = &'static BoundConstant> {
    tables::bound_constants().values()
}

/// Named character-degree formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Witness {
    UnipA1n1,
    UnipA2n2,
    UnipB01n,
    UnipD,
    SzDeg,
    L3Deg,
    U3Deg,
    L3q2Deg,
    S4Eno,
    S4Sym12,
    Phi7_1,
    Phi27_2,
    Phi9_10,
    Phi9_2,
    Phi1_3p,
    Phi2_4p,
    Phi6_1,
    Phi8_1,
    /// 2-part of the `²B₂[a]` unipotent degree of `²F₄(2^{2n+1})`.
    B2a2Part,
}

impl Witness {
    pub const ALL: [Witness; 19] = [
        Witness::UnipA1n1,
        Witness::UnipA2n2,
        Witness::UnipB01n,
        Witness::UnipD,
        Witness::SzDeg,
        Witness::L3Deg,
        Witness::U3Deg,
        Witness::L3q2Deg,
        Witness::S4Eno,
        Witness::S4Sym12,
        Witness::Phi7_1,
        Witness::Phi27_2,
        Witness::Phi9_10,
        Witness::Phi9_2,
        Witness::Phi1_3p,
        Witness::Phi2_4p,
        Witness::Phi6_1,
        Witness::Phi8_1,
        Witness::B2a2Part,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Witness::UnipA1n1 => "unip_A_1n1",
            Witness::UnipA2n2 => "unip_A_2n2",
            Witness::UnipB01n => "unip_B_01n",
            Witness::UnipD => "unip_D",
            Witness::SzDeg => "sz_deg",
            Witness::L3Deg => "l3_deg",
            Witness::U3Deg => "u3_deg",
            Witness::L3q2Deg => "l3q2_deg",
            Witness::S4Eno => "s4_eno",
            Witness::S4Sym12 => "s4_sym12",
            Witness::Phi7_1 => "phi_7_1",
            Witness::Phi27_2 => "phi_27_2",
            Witness::Phi9_10 => "phi_9_10",
            Witness::Phi9_2 => "phi_9_2",
            Witness::Phi1_3p => "phi_1_3p",
            Witness::Phi2_4p => "phi_2_4p",
            Witness::Phi6_1 => "phi_6_1",
            Witness::Phi8_1 => "phi_8_1",
            Witness::B2a2Part => "b2a_2part",
        }
    }

    pub fn from_name(name: &str) -> Result<Witness, DegreeError> {
        Witness::ALL
            .into_iter()
            .find(|w| w.name() == name)
            .ok_or_else(|| DegreeError::UnknownWitness(name.into()))
    }

    /// Parameter names in call order.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            Witness::UnipA1n1 | Witness::UnipA2n2 | Witness::UnipD => &["r", "n", "eps"],
            Witness::UnipB01n => &["r", "n"],
            Witness::SzDeg => &["q2"],
            Witness::L3Deg => &["r", "eps"],
            Witness::L3q2Deg => &["q", "eps"],
            Witness::B2a2Part => &["n"],
            _ => &["r"],
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn invalid(msg: impl Into<String>) -> DegreeError {
    DegreeError::InvalidParams(msg.into())
}

fn exact_div(num: BigInt, den: BigInt, w: Witness) -> Result<BigInt, DegreeError> {
    let (quot, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        return Err(invalid(format!("{w}: {num} is not divisible by {den}")));
    }
    Ok(quot)
}

/// Exact degree given by the witness formula `w` at `args`.
///
/// `r` and `q` must be prime powers, `eps` must be `1` or `-1`, and `n` must
/// be large enough for the formula to name a character.
pub fn witness_degree(w: Witness, args: &[BigInt]) -> Result<BigUint, DegreeError> {
    if args.len() != w.params().len() {
        return Err(invalid(format!(
            "{w} takes ({}), got {} argument(s)",
            w.params().join(", "),
            args.len()
        )));
    }
    let small = |i: usize| -> Result<u64, DegreeError> {
        args[i]
            .to_u64()
            .ok_or_else(|| invalid(format!("{w}: {} = {} out of range", w.params()[i], args[i])))
    };
    let field = |i: usize| -> Result<u64, DegreeError> {
        let v = small(i)?;
        prime_power(v).map_err(|_| invalid(format!("{w}: {v} is not a prime power")))?;
        Ok(v)
    };
    let sign = |i: usize| -> Result<i64, DegreeError> {
        args[i]
            .to_i64()
            .and_then(Sign::from_i64)
            .map(Sign::as_i64)
            .ok_or_else(|| invalid(format!("{w}: eps must be 1 or -1, got {}", args[i])))
    };
    let rank = |i: usize, min: u64| -> Result<u64, DegreeError> {
        let n = small(i)?;
        if n < min || n > 4096 {
            return Err(invalid(format!("{w}: n = {n} outside [{min}, 4096]")));
        }
        Ok(n)
    };
    let int = |v: u64| BigInt::from(v);
    let ipow = |b: &BigInt, e: u64| num_traits::pow(b.clone(), e as usize);
    let phi = |d: u64, r: u64| BigInt::from(cyclotomic_value(d, &BigUint::from(r)));

    let value: BigInt = match w {
        Witness::UnipA1n1 => {
            let (r, n, e) = (int(field(0)?), rank(1, 2)?, sign(2)?);
            let eps = BigInt::from(e);
            let eps_pow = ipow(&eps, n - 1);
            exact_div(ipow(&r, n) - eps_pow * &r, &r - &eps, w)?
        }
        Witness::UnipA2n2 => {
            let (r, n, e) = (int(field(0)?), rank(1, 4)?, sign(2)?);
            let eps = BigInt::from(e);
            let num = ipow(&r, 2) * (ipow(&r, n) - ipow(&eps, n)) * (ipow(&r, n - 3) - ipow(&eps, n - 3));
            exact_div(num, (&r - &eps) * (ipow(&r, 2) - 1), w)?
        }
        Witness::UnipB01n => {
            let (r, n) = (int(field(0)?), rank(1, 2)?);
            let num = &r * (ipow(&r, n) - 1) * (ipow(&r, n - 1) - 1);
            exact_div(num, int(2) * (&r + 1), w)?
        }
        Witness::UnipD => {
            let (r, n, e) = (int(field(0)?), rank(1, 4)?, sign(2)?);
            let eps = BigInt::from(e);
            let num = &r * (ipow(&r, n) - &eps) * (ipow(&r, n - 2) + &eps);
            exact_div(num, ipow(&r, 2) - 1, w)?
        }
        Witness::SzDeg => {
            let q2 = field(0)?;
            let (p, k) = prime_power(q2).expect("checked above");
            if p != 2 || k % 2 == 0 {
                return Err(invalid(format!("{w}: {q2} is not an odd power of 2")));
            }
            ipow(&int(q2), 2) + 1
        }
        Witness::L3Deg => ipow(&int(field(0)?), 3) - sign(1)?,
        Witness::U3Deg => {
            let r = int(field(0)?);
            &r * (&r - 1)
        }
        Witness::L3q2Deg => {
            let q = int(field(0)?);
            ipow(&q, 2) * (ipow(&q, 2) + sign(1)?)
        }
        Witness::S4Eno => {
            let r = int(field(0)?);
            (&r - 1) * (ipow(&r, 2) + 1)
        }
        Witness::S4Sym12 => {
            let r = int(field(0)?);
            exact_div(&r * (ipow(&r, 2) + 1), int(2), w)?
        }
        Witness::Phi7_1 => {
            let r = field(0)?;
            int(r) * phi(7, r) * phi(12, r) * phi(14, r)
        }
        Witness::Phi27_2 => {
            let r = field(0)?;
            ipow(&int(r), 2) * ipow(&phi(3, r), 2) * ipow(&phi(6, r), 2) * phi(9, r) * phi(12, r) * phi(18, r)
        }
        Witness::Phi9_10 => {
            let r = field(0)?;
            ipow(&int(r), 10) * ipow(&phi(3, r), 2) * ipow(&phi(6, r), 2) * phi(12, r)
        }
        Witness::Phi9_2 => {
            let r = field(0)?;
            ipow(&int(r), 2) * ipow(&phi(3, r), 2) * ipow(&phi(6, r), 2) * phi(12, r)
        }
        Witness::Phi1_3p => {
            let r = field(0)?;
            int(r) * phi(12, r)
        }
        Witness::Phi2_4p => {
            let r = field(0)?;
            int(r) * phi(8, r) * phi(12, r)
        }
        Witness::Phi6_1 => {
            let r = field(0)?;
            int(r) * phi(8, r) * phi(9, r)
        }
        Witness::Phi8_1 => {
            let r = field(0)?;
            int(r) * ipow(&phi(4, r), 2) * phi(8, r) * phi(12, r) * phi(20, r) * phi(24, r)
        }
        Witness::B2a2Part => ipow(&int(2), rank(0, 1)?),
    };
    if !value.is_positive() {
        return Err(invalid(format!("{w}: non-positive value {value}")));
    }
    Ok(value.magnitude().clone())
}

/// Convenience wrapper for integer arguments.
pub fn witness_degree_i64(w: Witness, args: &[i64]) -> Result<BigUint, DegreeError> {
    let args: Vec<BigInt> = args.iter().map(|&a| BigInt::from(a)).collect();
    witness_degree(w, &args)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::parse_group;
    use num_traits::One;

    fn g(name: &str) -> GroupId {
        parse_group(name).unwrap()
    }

    #[test]
    fn lsz_values() {
        assert_eq!(lsz_bound(&g("2G2(27)")).unwrap(), BigUint::from(702u32));
        assert_eq!(lsz_bound(&g("2F4(8)")).unwrap(), BigUint::from(57344u32));
        assert_eq!(lsz_bound(&g("3D4(4)")).unwrap(), BigUint::from(960u32));
        for name in ["2B2(8)", "G2(3)", "G2(4)", "F4(2)"] {
            assert!(matches!(lsz_bound(&g(name)), Err(DegreeError::ExceptionListed(_))));
        }
        assert!(matches!(lsz_bound(&g("L3(4)")), Err(DegreeError::NotExceptional(_))));
    }

    #[test]
    fn seitz_values() {
        assert_eq!(seitz_bound(&g("G2(5)")).unwrap(), BigUint::from(390625u32));
        assert_eq!(seitz_bound(&g("3D4(2)")).unwrap(), BigUint::from(131072u32));
        assert_eq!(seitz_bound(&g("E8(2)")).unwrap(), BigUint::one() << 128u32);
    }

    #[test]
    fn unipotent_rows() {
        assert_eq!(unipotent_p_part(&g("S6(2)")).unwrap(), BigUint::from(8u32));
        assert_eq!(unipotent_p_part(&g("2F4(8)")).unwrap(), BigUint::one() << 19u32);
        assert_eq!(unipotent_p_part(&g("3D4(3)")).unwrap(), pow(3, 7));
        assert!(matches!(unipotent_p_part(&g("G2(3)")), Err(DegreeError::RowMissing(_))));
        assert!(matches!(unipotent_p_part(&g("M11")), Err(DegreeError::RowMissing(_))));
    }

    #[test]
    fn witness_values() {
        assert_eq!(witness_degree_i64(Witness::Phi7_1, &[2]).unwrap(), BigUint::from(141986u32));
        assert_eq!(witness_degree_i64(Witness::SzDeg, &[8]).unwrap(), BigUint::from(65u32));
        assert_eq!(witness_degree_i64(Witness::UnipB01n, &[3, 3]).unwrap(), BigUint::from(78u32));
        assert!(matches!(
            witness_degree_i64(Witness::UnipD, &[3, 4, 2]),
            Err(DegreeError::InvalidParams(_))
        ));
        assert!(matches!(
            witness_degree_i64(Witness::U3Deg, &[6]),
            Err(DegreeError::InvalidParams(_))
        ));
        assert!(matches!(Witness::from_name("phi_1_1"), Err(DegreeError::UnknownWitness(_))));
    }

    #[test]
    fn table_rows() {
        let m11 = sporadic_record("M11").unwrap();
        assert_eq!((m11.t, m11.d1.clone(), m11.b.clone()), (7, 10u32.into(), 55u32.into()));
        assert_eq!(sporadic_record("Fi24'").unwrap().b, BigUint::from(336_033_532_800u64));
        assert_eq!(sporadic_record("M").unwrap().d1, BigUint::from(196_883u32));
        assert!(sporadic_record("M13").is_err());
        assert_eq!(bound_constant("d2_3D4_3").unwrap().value, BigUint::from(3942u32));
    }
}
