//! Syntax tree of ledger entries.

use num_bigint::BigInt;

use crate::degrees::Witness;
use crate::groups::{FamilyHead, GroupId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimKind {
    /// Checked by enumeration.
    Claim,
    /// Cited fact; parsed and reported, never evaluated.
    Axiom,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Claim {
    pub id: String,
    pub kind: ClaimKind,
    pub anchor: String,
    /// Comment lines directly above the entry.
    pub description: String,
    pub quantifiers: Vec<Quantifier>,
    pub predicate: Pred,
    /// 1-based source line of the entry keyword.
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Quantifier {
    pub param: char,
    pub domain: Domain,
}

/// A finite set of integers a parameter ranges over, in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Domain {
    /// `[lo..hi]`
    Range { lo: i64, hi: i64 },
    /// `primepowers[lo..hi]`: prime powers `p^k`, `k >= 1`, in the interval.
    PrimePowers { lo: u64, hi: u64 },
    /// `primes[lo..hi]`
    Primes { lo: u64, hi: u64 },
    /// `powersof(p)[lo..hi]`: `p^k` for exponents `lo <= k <= hi`.
    PowersOf { base: u64, lo: u32, hi: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    /// Exact division; an inexact quotient is an evaluation error.
    Div,
    Pow,
}

/// Integer-valued functions of integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    /// `phi(k, e)`: `Φ_k(e)`.
    Phi,
    /// `ppart(e, p)`
    PPart,
    /// `l(e, k)`: largest primitive prime divisor; negative `k` means `l_{-|k|}`.
    L,
    Factorial,
    /// `bits(e)`: bit length, so `2^x > e` iff `x >= bits(e)`.
    Bits,
    /// `rad(e)`: product of the distinct prime divisors.
    Rad,
    /// `balt(n)`: largest character degree of `A_n`.
    BAlt,
    /// `parts(n)`: number of partitions of `n`.
    Parts,
}

impl Func {
    pub fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "phi" => Func::Phi,
            "ppart" => Func::PPart,
            "l" => Func::L,
            "factorial" => Func::Factorial,
            "bits" => Func::Bits,
            "rad" => Func::Rad,
            "balt" => Func::BAlt,
            "parts" => Func::Parts,
            _ => return None,
        })
    }

    pub fn arity(self) -> usize {
        match self {
            Func::Phi | Func::PPart | Func::L => 2,
            _ => 1,
        }
    }
}

/// Integer-valued functions of a group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupFunc {
    Order,
    /// Lower bound on the smallest nontrivial degree.
    Lsz,
    /// Upper bound on the largest degree.
    Seitz,
    /// Unipotent p-part.
    Unip,
    D1,
    D2,
    D3,
    /// Largest degree of a sporadic group.
    BMax,
    /// Number of distinct degrees of a sporadic group.
    TCount,
}

impl GroupFunc {
    pub fn from_name(name: &str) -> Option<GroupFunc> {
        Some(match name {
            "order" => GroupFunc::Order,
            "lsz" => GroupFunc::Lsz,
            "seitz" => GroupFunc::Seitz,
            "unip" => GroupFunc::Unip,
            "d1" => GroupFunc::D1,
            "d2" => GroupFunc::D2,
            "d3" => GroupFunc::D3,
            "bmax" => GroupFunc::BMax,
            "tcount" => GroupFunc::TCount,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum GroupTemplate {
    Fixed(GroupId),
    Family { head: FamilyHead, args: Vec<Expr> },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Param(char),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Vec<Expr>),
    Group(GroupFunc, GroupTemplate),
    Witness(Witness, Vec<Expr>),
    /// Named constant from the bundled bound table.
    Bound(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelOp {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Pred {
    Compare(RelOp, Expr, Expr),
    /// `divides(a, b)`: `a | b`.
    Divides(Expr, Expr),
    /// `subset(pi(g), pi(h))`
    Subset(GroupTemplate, GroupTemplate),
    /// `member(x, pi(g))`
    Member(Expr, GroupTemplate),
    /// `external("...")`: a cited statement, legal only in axioms.
    External(String),
    Not(Box<Pred>),
    And(Box<Pred>, Box<Pred>),
    Or(Box<Pred>, Box<Pred>),
    Implies(Box<Pred>, Box<Pred>),
}
