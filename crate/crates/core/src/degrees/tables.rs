//! Bundled degree data: sporadic rows and quoted numeric constants.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigUint;

use crate::groups::Sporadic;

/// Degree data for one sporadic group (or the Tits group).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SporadicRecord {
    pub group: Sporadic,
    /// Number of distinct irreducible character degrees.
    pub t: u32,
    pub d1: BigUint,
    pub d2: BigUint,
    pub d3: BigUint,
    /// Largest irreducible character degree.
    pub b: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundConstant {
    pub key: String,
    pub value: BigUint,
    pub anchor: String,
}

fn data_lines(text: &'static str) -> impl Iterator<Item = &'static str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn sporadic_records() -> &'static BTreeMap<Sporadic, SporadicRecord> {
    static RECORDS: OnceLock<BTreeMap<Sporadic, SporadicRecord>> = OnceLock::new();
    RECORDS.get_or_init(|| {
        let table: BTreeMap<_, _> = data_lines(include_str!("../../data/sporadic_degrees.txt"))
            .map(|line| {
                let cols: Vec<&str> = line.split_whitespace().collect();
                assert_eq!(cols.len(), 6, "malformed sporadic degree row: {line}");
                let group = Sporadic::from_name(cols[0]).expect("known sporadic name");
                let num = |s: &str| s.parse::<BigUint>().expect("integer column");
                let record = SporadicRecord {
                    group,
                    t: cols[1].parse().expect("t column"),
                    d1: num(cols[2]),
                    d2: num(cols[3]),
                    d3: num(cols[4]),
                    b: num(cols[5]),
                };
                (group, record)
            })
            .collect();
        assert_eq!(table.len(), Sporadic::ALL.len(), "sporadic degree table incomplete");
        table
    })
}

pub(crate) fn bound_constants() -> &'static BTreeMap<String, BoundConstant> {
    static CONSTANTS: OnceLock<BTreeMap<String, BoundConstant>> = OnceLock::new();
    CONSTANTS.get_or_init(|| {
        data_lines(include_str!("../../data/bound_constants.txt"))
            .map(|line| {
                let (key, rest) = line.split_once(char::is_whitespace).expect("value column");
                let (value, anchor) = rest.trim_start().split_once(char::is_whitespace).expect("anchor column");
                let key = key.to_string();
                let constant = BoundConstant {
                    key: key.clone(),
                    value: value.parse().expect("integer constant"),
                    anchor: anchor.trim().to_string(),
                };
                (key, constant)
            })
            .collect()
    })
}
