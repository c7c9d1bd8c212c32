//! The 26 sporadic groups plus the Tits group, with orders from bundled data.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;

use crate::arith::Factorization;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sporadic {
    M11,
    M12,
    J1,
    M22,
    J2,
    M23,
    HS,
    J3,
    M24,
    McL,
    He,
    Ru,
    Suz,
    ON,
    Co3,
    Co2,
    Fi22,
    HN,
    Ly,
    Th,
    Fi23,
    Co1,
    J4,
    Fi24,
    B,
    M,
    /// `²F₄(2)'`, catalogued with the sporadic groups.
    Tits,
}

impl Sporadic {
    /// All entries, in increasing order of group order.
    pub const ALL: [Sporadic; 27] = [
        Sporadic::M11,
        Sporadic::M12,
        Sporadic::J1,
        Sporadic::M22,
        Sporadic::J2,
        Sporadic::M23,
        Sporadic::HS,
        Sporadic::J3,
        Sporadic::M24,
        Sporadic::McL,
        Sporadic::He,
        Sporadic::Ru,
        Sporadic::Suz,
        Sporadic::ON,
        Sporadic::Co3,
        Sporadic::Co2,
        Sporadic::Fi22,
        Sporadic::HN,
        Sporadic::Ly,
        Sporadic::Th,
        Sporadic::Fi23,
        Sporadic::Co1,
        Sporadic::J4,
        Sporadic::Fi24,
        Sporadic::B,
        Sporadic::M,
        Sporadic::Tits,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Sporadic::M11 => "M11",
            Sporadic::M12 => "M12",
            Sporadic::J1 => "J1",
            Sporadic::M22 => "M22",
            Sporadic::J2 => "J2",
            Sporadic::M23 => "M23",
            Sporadic::HS => "HS",
            Sporadic::J3 => "J3",
            Sporadic::M24 => "M24",
            Sporadic::McL => "McL",
            Sporadic::He => "He",
            Sporadic::Ru => "Ru",
            Sporadic::Suz => "Suz",
            Sporadic::ON => "ON",
            Sporadic::Co3 => "Co3",
            Sporadic::Co2 => "Co2",
            Sporadic::Fi22 => "Fi22",
            Sporadic::HN => "HN",
            Sporadic::Ly => "Ly",
            Sporadic::Th => "Th",
            Sporadic::Fi23 => "Fi23",
            Sporadic::Co1 => "Co1",
            Sporadic::J4 => "J4",
            Sporadic::Fi24 => "Fi24'",
            Sporadic::B => "B",
            Sporadic::M => "M",
            Sporadic::Tits => "2F4(2)'",
        }
    }

    /// Canonical names and accepted aliases.
    pub(crate) fn spellings() -> impl Iterator<Item = (&'static str, Sporadic)> {
        Sporadic::ALL
            .iter()
            .map(|&s| (s.name(), s))
            .chain([("O'N", Sporadic::ON), ("Fi24", Sporadic::Fi24)])
    }

    pub fn from_name(name: &str) -> Option<Sporadic> {
        Sporadic::spellings().find(|(n, _)| *n == name).map(|(_, s)| s)
    }

    pub fn order(self) -> &'static Factorization {
        &orders()[&self]
    }
}

impl fmt::Display for Sporadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn parse_factored(text: &str) -> Factorization {
    text.split('*').fold(Factorization::one(), |acc, piece| {
        let (p, e) = piece.split_once('^').unwrap_or((piece, "1"));
        let p: BigUint = p.parse().expect("prime in sporadic order table");
        let e: u32 = e.parse().expect("exponent in sporadic order table");
        acc.mul(&Factorization::prime_power(p, e))
    })
}

fn orders() -> &'static BTreeMap<Sporadic, Factorization> {
    static ORDERS: OnceLock<BTreeMap<Sporadic, Factorization>> = OnceLock::new();
    ORDERS.get_or_init(|| {
        let table: BTreeMap<_, _> = include_str!("../../data/sporadic_orders.txt")
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|line| {
                let mut cols = line.split_whitespace();
                let name = cols.next().expect("name column");
                let order = cols.next().expect("order column");
                let s = Sporadic::from_name(name).expect("known sporadic name");
                (s, parse_factored(order))
            })
            .collect();
        assert_eq!(table.len(), Sporadic::ALL.len(), "sporadic order table incomplete");
        table
    })
}
