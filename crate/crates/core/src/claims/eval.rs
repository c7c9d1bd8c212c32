//! Evaluation of claims by exhaustive enumeration of their domains.

use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint, Sign as BigSign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use super::ast::*;
use crate::alternating::{self, AltError};
use crate::arith::{self, cyclotomic_value, factorize, ArithError, Budget};
use crate::degrees::{self, DegreeError};
use crate::groups::{build, GroupError, GroupId};
use crate::zsigmondy::{self, ZsigmondyError};

/// Largest number of values a single quantifier may range over.
pub const MAX_DOMAIN: usize = 1_000_000;

/// Largest bit length of any intermediate value.
pub const MAX_VALUE_BITS: u64 = 1 << 16;

const MAX_FACTORIAL: u64 = 5000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} / {1} is not exact")]
    InexactDivision(BigInt, BigInt),
    #[error("negative exponent {0}")]
    NegativeExponent(BigInt),
    #[error("value exceeds {MAX_VALUE_BITS} bits")]
    TooLarge,
    #[error("{0}")]
    Domain(String),
    #[error("no primitive prime divisor for q = {q}, n = {n}")]
    NoPrimitiveDivisor { q: BigUint, n: i64 },
    #[error("external statements cannot be evaluated")]
    External,
    #[error("budget exhausted")]
    BudgetExhausted,
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Degree(#[from] DegreeError),
    #[error(transparent)]
    Zsigmondy(#[from] ZsigmondyError),
    #[error(transparent)]
    Alternating(#[from] AltError),
}

impl EvalError {
    fn is_budget(&self) -> bool {
        matches!(
            self,
            EvalError::BudgetExhausted
                | EvalError::Arith(ArithError::FactorizationTimeout)
                | EvalError::Group(GroupError::Arith(ArithError::FactorizationTimeout))
                | EvalError::Zsigmondy(ZsigmondyError::Arith(ArithError::FactorizationTimeout))
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Verified,
    Refuted,
    Skipped,
    /// Axiom entries.
    Assumed,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Refuted => "refuted",
            Status::Skipped => "skipped",
            Status::Assumed => "assumed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimResult {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    /// Counterexample binding when refuted, exhaustion summary when verified.
    pub witness: Option<String>,
    /// Why a claim was skipped.
    pub reason: Option<String>,
    /// Domain points checked.
    pub points: u64,
    pub elapsed: Duration,
}

/// Values of a domain, ascending.
pub fn domain_values(d: &Domain) -> Result<Vec<BigInt>, EvalError> {
    let too_big = || EvalError::Domain(format!("domain has more than {MAX_DOMAIN} values"));
    let values: Vec<BigInt> = match *d {
        Domain::Range { lo, hi } => {
            if (hi as i128 - lo as i128) >= MAX_DOMAIN as i128 {
                return Err(too_big());
            }
            (lo..=hi).map(BigInt::from).collect()
        }
        Domain::PrimePowers { lo, hi } | Domain::Primes { lo, hi } => {
            if hi - lo >= MAX_DOMAIN as u64 {
                return Err(too_big());
            }
            let primes_only = matches!(d, Domain::Primes { .. });
            (lo.max(2)..=hi)
                .filter(|&v| {
                    if primes_only {
                        arith::is_prime_u64(v)
                    } else {
                        is_prime_power(v)
                    }
                })
                .map(BigInt::from)
                .collect()
        }
        Domain::PowersOf { base, lo, hi } => {
            if (hi - lo) as usize >= MAX_DOMAIN || (hi as u64) * (64 - base.leading_zeros() as u64) > MAX_VALUE_BITS {
                return Err(too_big());
            }
            (lo..=hi)
                .map(|k| num_traits::pow(BigInt::from(base), k as usize))
                .collect()
        }
    };
    Ok(values)
}

fn is_prime_power(v: u64) -> bool {
    arith::small_factor(v).len() == 1
}

struct Ctx<'a> {
    bindings: &'a [(char, BigInt)],
    budget: &'a Budget,
}

fn to_u64(v: &BigInt, what: &str) -> Result<u64, EvalError> {
    v.to_u64()
        .ok_or_else(|| EvalError::Domain(format!("{what} must be a non-negative 64-bit integer, got {v}")))
}

fn to_biguint(v: &BigInt, what: &str, min: u32) -> Result<BigUint, EvalError> {
    match v.to_biguint() {
        Some(u) if u >= BigUint::from(min) => Ok(u),
        _ => Err(EvalError::Domain(format!("{what} must be at least {min}, got {v}"))),
    }
}

fn check_size(v: BigInt) -> Result<BigInt, EvalError> {
    if v.bits() > MAX_VALUE_BITS {
        Err(EvalError::TooLarge)
    } else {
        Ok(v)
    }
}

impl Ctx<'_> {
    fn lookup(&self, c: char) -> BigInt {
        self.bindings
            .iter()
            .find(|(p, _)| *p == c)
            .map(|(_, v)| v.clone())
            .expect("parser guarantees every parameter is bound")
    }

    fn group(&self, t: &GroupTemplate) -> Result<GroupId, EvalError> {
        match t {
            GroupTemplate::Fixed(g) => Ok(g.clone()),
            GroupTemplate::Family { head, args } => {
                let values = args
                    .iter()
                    .map(|a| to_u64(&self.expr(a)?, "group parameter"))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(build(*head, &values)?)
            }
        }
    }

    fn expr(&self, e: &Expr) -> Result<BigInt, EvalError> {
        match e {
            Expr::Int(v) => Ok(v.clone()),
            Expr::Param(c) => Ok(self.lookup(*c)),
            Expr::Neg(a) => Ok(-self.expr(a)?),
            Expr::Bin(op, a, b) => {
                let (x, y) = (self.expr(a)?, self.expr(b)?);
                binary(*op, x, y)
            }
            Expr::Call(f, args) => self.call(*f, args),
            Expr::Group(f, t) => {
                let g = self.group(t)?;
                group_value(*f, &g)
            }
            Expr::Witness(w, args) => {
                let values = args.iter().map(|a| self.expr(a)).collect::<Result<Vec<_>, _>>()?;
                Ok(degrees::witness_degree(*w, &values)?.into())
            }
            Expr::Bound(key) => Ok(degrees::bound_constant(key)?.value.clone().into()),
        }
    }

    fn call(&self, f: Func, args: &[Expr]) -> Result<BigInt, EvalError> {
        if f == Func::Rad {
            if let Expr::Group(GroupFunc::Order, t) = &args[0] {
                let g = self.group(t)?;
                return Ok(g.order(self.budget)?.radical().into());
            }
        }
        let v: Vec<BigInt> = args.iter().map(|a| self.expr(a)).collect::<Result<_, _>>()?;
        let out: BigInt = match f {
            Func::Phi => {
                let k = to_u64(&v[0], "cyclotomic index")?;
                if k == 0 || k > 4096 {
                    return Err(EvalError::Domain(format!("cyclotomic index {k} outside [1, 4096]")));
                }
                let q = to_biguint(&v[1], "cyclotomic base", 2)?;
                if q.bits() * k > MAX_VALUE_BITS {
                    return Err(EvalError::TooLarge);
                }
                cyclotomic_value(k, &q).into()
            }
            Func::PPart => {
                let p = to_biguint(&v[1], "ppart prime", 2)?;
                if v[0].is_zero() {
                    return Err(EvalError::Domain("ppart of 0".into()));
                }
                arith::p_part(v[0].magnitude(), &p)?.into()
            }
            Func::L => {
                let q = to_biguint(&v[0], "Zsigmondy base", 2)?;
                let n = v[1]
                    .to_i64()
                    .filter(|n| *n != 0)
                    .ok_or_else(|| EvalError::Domain(format!("Zsigmondy index {} invalid", v[1])))?;
                if q.bits() * n.unsigned_abs() * 2 > MAX_VALUE_BITS {
                    return Err(EvalError::TooLarge);
                }
                let found = if n > 0 {
                    zsigmondy::l(&q, n as u64, self.budget)?
                } else {
                    zsigmondy::l_neg(&q, n.unsigned_abs(), self.budget)?
                };
                found.ok_or(EvalError::NoPrimitiveDivisor { q, n })?.into()
            }
            Func::Factorial => {
                let n = to_u64(&v[0], "factorial argument")?;
                if n > MAX_FACTORIAL {
                    return Err(EvalError::TooLarge);
                }
                (2..=n).map(BigInt::from).product()
            }
            Func::Bits => {
                if v[0].is_negative() {
                    return Err(EvalError::Domain(format!("bits of negative {}", v[0])));
                }
                BigInt::from(v[0].bits())
            }
            Func::Rad => {
                let n = to_biguint(&v[0], "rad argument", 1)?;
                factorize(&n, self.budget)?.radical().into()
            }
            Func::BAlt => alternating::max_degree_alternating(to_u64(&v[0], "balt argument")?)?.into(),
            Func::Parts => alternating::partition_count(to_u64(&v[0], "parts argument")?)?.into(),
        };
        Ok(out)
    }

    fn pred(&self, p: &Pred) -> Result<bool, EvalError> {
        if self.budget.is_exhausted() {
            return Err(EvalError::BudgetExhausted);
        }
        match p {
            Pred::Compare(op, a, b) => {
                let (x, y) = (self.expr(a)?, self.expr(b)?);
                Ok(match op {
                    RelOp::Eq => x == y,
                    RelOp::Ne => x != y,
                    RelOp::Lt => x < y,
                    RelOp::Le => x <= y,
                    RelOp::Gt => x > y,
                    RelOp::Ge => x >= y,
                })
            }
            Pred::Divides(a, b) => {
                let (x, y) = (self.expr(a)?, self.expr(b)?);
                Ok(if x.is_zero() { y.is_zero() } else { (y % x).is_zero() })
            }
            Pred::Subset(a, b) => {
                let (g, h) = (self.group(a)?, self.group(b)?);
                let order_h = h.order_value();
                let primes = g.pi(self.budget)?;
                Ok(primes.iter().all(|p| (&order_h % p).is_zero()))
            }
            Pred::Member(x, t) => {
                let x = self.expr(x)?;
                let g = self.group(t)?;
                let Some(x) = x.to_biguint() else {
                    return Ok(false);
                };
                if x < BigUint::from(2u32) || !(g.order_value() % &x).is_zero() {
                    return Ok(false);
                }
                Ok(arith::prove_prime(&x, self.budget)?)
            }
            Pred::External(_) => Err(EvalError::External),
            Pred::Not(a) => Ok(!self.pred(a)?),
            Pred::And(a, b) => Ok(self.pred(a)? && self.pred(b)?),
            Pred::Or(a, b) => Ok(self.pred(a)? || self.pred(b)?),
            Pred::Implies(a, b) => Ok(!self.pred(a)? || self.pred(b)?),
        }
    }
}

fn binary(op: BinOp, x: BigInt, y: BigInt) -> Result<BigInt, EvalError> {
    let v = match op {
        BinOp::Add => x + y,
        BinOp::Sub => x - y,
        BinOp::Mul => x * y,
        BinOp::Div => {
            if y.is_zero() {
                return Err(EvalError::DivisionByZero);
            }
            let (q, r) = x.div_rem(&y);
            if !r.is_zero() {
                return Err(EvalError::InexactDivision(x, y));
            }
            q
        }
        BinOp::Pow => {
            if y.sign() == BigSign::Minus {
                return Err(EvalError::NegativeExponent(y));
            }
            if x.magnitude() <= &BigUint::one() {
                let odd = y.is_odd();
                return Ok(match (x.sign(), x.is_zero()) {
                    (_, true) if y.is_zero() => BigInt::one(),
                    (_, true) => BigInt::zero(),
                    (BigSign::Minus, _) if odd => -BigInt::one(),
                    _ => BigInt::one(),
                });
            }
            let e = y.to_u64().filter(|e| e.saturating_mul(x.bits()) <= MAX_VALUE_BITS);
            let Some(e) = e else {
                return Err(EvalError::TooLarge);
            };
            num_traits::pow(x, e as usize)
        }
    };
    check_size(v)
}

fn group_value(f: GroupFunc, g: &GroupId) -> Result<BigInt, EvalError> {
    let sporadic = || match g {
        GroupId::Sporadic(s) => Ok(degrees::record(*s)),
        _ => Err(EvalError::Domain(format!("{g} is not sporadic"))),
    };
    let v: BigUint = match f {
        GroupFunc::Order => g.order_value(),
        GroupFunc::Lsz => degrees::lsz_bound(g)?,
        GroupFunc::Seitz => degrees::seitz_bound(g)?,
        GroupFunc::Unip => degrees::unipotent_p_part(g)?,
        GroupFunc::D1 => sporadic()?.d1.clone(),
        GroupFunc::D2 => sporadic()?.d2.clone(),
        GroupFunc::D3 => sporadic()?.d3.clone(),
        GroupFunc::BMax => sporadic()?.b.clone(),
        GroupFunc::TCount => BigUint::from(sporadic()?.t),
    };
    Ok(v.into())
}

/// Evaluates the predicate at one binding of the claim's parameters.
pub fn eval_at(pred: &Pred, bindings: &[(char, BigInt)], budget: &Budget) -> Result<bool, EvalError> {
    Ctx { bindings, budget }.pred(pred)
}

fn format_binding(bindings: &[(char, BigInt)]) -> String {
    if bindings.is_empty() {
        return "(no parameters)".into();
    }
    bindings
        .iter()
        .map(|(p, v)| format!("{p}={v}"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Checks the claim at every point of its domain product, first quantifier
/// outermost, stopping at the first counterexample.
pub fn evaluate_claim(c: &Claim, budget: &Budget) -> ClaimResult {
    let start = Instant::now();
    let mut result = ClaimResult {
        id: c.id.clone(),
        anchor: c.anchor.clone(),
        status: Status::Verified,
        witness: None,
        reason: None,
        points: 0,
        elapsed: Duration::ZERO,
    };
    if c.kind == ClaimKind::Axiom {
        result.status = Status::Assumed;
        result.elapsed = start.elapsed();
        return result;
    }
    let domains: Result<Vec<Vec<BigInt>>, EvalError> =
        c.quantifiers.iter().map(|q| domain_values(&q.domain)).collect();
    let domains = match domains {
        Ok(d) => d,
        Err(e) => {
            result.status = Status::Skipped;
            result.reason = Some(e.to_string());
            result.elapsed = start.elapsed();
            return result;
        }
    };
    let params: Vec<char> = c.quantifiers.iter().map(|q| q.param).collect();
    let mut index = vec![0usize; domains.len()];
    let empty = domains.iter().any(Vec::is_empty);
    let mut done = empty;
    while !done {
        let bindings: Vec<(char, BigInt)> = params
            .iter()
            .zip(&index)
            .zip(&domains)
            .map(|((&p, &i), d)| (p, d[i].clone()))
            .collect();
        match eval_at(&c.predicate, &bindings, budget) {
            Ok(true) => result.points += 1,
            Ok(false) => {
                result.status = Status::Refuted;
                result.witness = Some(format_binding(&bindings));
                break;
            }
            Err(e) => {
                result.status = Status::Skipped;
                let what = if e.is_budget() { "budget exhausted".to_string() } else { e.to_string() };
                result.reason = Some(format!("{what} at {}", format_binding(&bindings)));
                break;
            }
        }
        done = true;
        for slot in (0..index.len()).rev() {
            index[slot] += 1;
            if index[slot] < domains[slot].len() {
                done = false;
                break;
            }
            index[slot] = 0;
        }
    }
    if result.status == Status::Verified {
        let plural = if result.points == 1 { "" } else { "s" };
        result.witness = Some(format!("exhausted {} point{plural} (bounded)", result.points));
    }
    result.elapsed = start.elapsed();
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::claims::parse_ledger;

    fn run(text: &str) -> ClaimResult {
        let claims = parse_ledger(text).unwrap();
        evaluate_claim(&claims[0], &Budget::with_timeout(Duration::from_secs(20)))
    }

    #[test]
    fn diophantine_no_solution() {
        let r = run("claim c \"a\" forall n in [1..100]: n*(n-1) != 36");
        assert_eq!(r.status, Status::Verified);
        assert_eq!(r.witness.as_deref(), Some("exhausted 100 points (bounded)"));
    }

    #[test]
    fn first_counterexample_reported() {
        let r = run("claim c \"a\" forall a in [1..5] forall b in [1..5]: a*b != 6");
        assert_eq!(r.status, Status::Refuted);
        assert_eq!(r.witness.as_deref(), Some("a=2, b=3"));
    }

    #[test]
    fn on_not_in_g2() {
        let r = run("claim c \"a\" forall q in primepowers[7..23]: !subset(pi(ON), pi(G2(q)))");
        assert_eq!(r.status, Status::Verified, "{r:?}");
        assert_eq!(r.points, 9);
    }

    #[test]
    fn a5_a6_same_primes() {
        let r = run("claim c \"a\" forall n in [5..5]: !subset(pi(A(n)), pi(A(n+1)))");
        assert_eq!(r.status, Status::Refuted);
        assert_eq!(r.witness.as_deref(), Some("n=5"));
    }

    #[test]
    fn errors_skip() {
        let r = run("claim c \"a\" forall n in [1..3]: n / 2 >= 0");
        assert_eq!(r.status, Status::Skipped);
        assert!(r.reason.unwrap().contains("n=1"));
        let r = run("claim c \"a\": member(l(2, 6), pi(A(7)))");
        assert_eq!(r.status, Status::Skipped);
    }

    #[test]
    fn guards_short_circuit() {
        let r = run("claim c \"a\" forall q in [2..4]: q != 2 => member(l(q, 6), pi(G2(q)))");
        assert_eq!(r.status, Status::Verified, "{r:?}");
    }

    #[test]
    fn prime_power_domain() {
        let vals = domain_values(&Domain::PrimePowers { lo: 1, hi: 32 }).unwrap();
        let expect = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32];
        assert_eq!(vals, expect.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>());
        let pows = domain_values(&Domain::PowersOf { base: 3, lo: 1, hi: 3 }).unwrap();
        assert_eq!(pows, vec![BigInt::from(3), BigInt::from(9), BigInt::from(27)]);
    }
}
