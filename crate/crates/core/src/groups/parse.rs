//! Group-name syntax.
//!
//! Classical families take the dimension either inside the argument list or
//! fused to the family letter: `L(3,4)` and `L3(4)` name the same group, as do
//! `O+(8,2)`, `O8+(2)` and `O+8(2)`. Twisted families take the full field
//! size, so `2B2(8)` is the smallest Suzuki group.

use super::{build, GroupError, GroupId, Sporadic};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    L,
    U,
    S,
    O,
    OPlus,
    OMinus,
    B2Twisted,
    G2Twisted,
    F4Twisted,
    D4Triality,
    G2,
    F4,
    E6,
    E6Twisted,
    E7,
    E8,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::L => "L",
            Family::U => "U",
            Family::S => "S",
            Family::O => "O",
            Family::OPlus => "O+",
            Family::OMinus => "O-",
            Family::B2Twisted => "2B2",
            Family::G2Twisted => "2G2",
            Family::F4Twisted => "2F4",
            Family::D4Triality => "3D4",
            Family::G2 => "G2",
            Family::F4 => "F4",
            Family::E6 => "E6",
            Family::E6Twisted => "2E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(
            self,
            Family::A | Family::L | Family::U | Family::S | Family::O | Family::OPlus | Family::OMinus
        )
    }
}

/// A family together with a dimension fused into its name, if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyHead {
    pub family: Family,
    pub dim: Option<u64>,
}

impl FamilyHead {
    /// Whether the head is already a complete name, as in `A7`.
    pub fn is_complete(&self) -> bool {
        self.family == Family::A && self.dim.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Head {
    Fixed(GroupId),
    Family(FamilyHead),
}

const EXCEPTIONAL_HEADS: [(&str, Family); 11] = [
    ("2B2", Family::B2Twisted),
    ("Sz", Family::B2Twisted),
    ("2G2", Family::G2Twisted),
    ("2F4", Family::F4Twisted),
    ("3D4", Family::D4Triality),
    ("2E6", Family::E6Twisted),
    ("G2", Family::G2),
    ("F4", Family::F4),
    ("E6", Family::E6),
    ("E7", Family::E7),
    ("E8", Family::E8),
];

fn is_name_char(c: u8) -> bool {
    c.is_ascii_alphanumeric() || c == b'\'' || c == b'('
}

fn digits(bytes: &[u8], mut i: usize) -> (Option<u64>, usize) {
    let start = i;
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    if i == start {
        return (None, i);
    }
    let text = std::str::from_utf8(&bytes[start..i]).expect("ascii digits");
    (text.parse().ok(), i)
}

/// Recognizes the head of a group name at the start of `s`.
///
/// Returns the head and the number of bytes consumed. A family head stops
/// just before its `(`; a fixed head (sporadic group or `A7`) is complete.
pub fn scan_head(s: &str) -> Option<(Head, usize)> {
    let b = s.as_bytes();
    let tits = Sporadic::Tits.name();
    if s.starts_with(tits) {
        return Some((Head::Fixed(GroupId::Sporadic(Sporadic::Tits)), tits.len()));
    }
    for (label, family) in EXCEPTIONAL_HEADS {
        if s.starts_with(label) && b.get(label.len()) == Some(&b'(') {
            return Some((Head::Family(FamilyHead { family, dim: None }), label.len()));
        }
    }
    if let Some(found) = scan_classical(b) {
        return Some(found);
    }
    Sporadic::spellings()
        .filter(|(name, _)| s.starts_with(name) && !b.get(name.len()).is_some_and(|&c| is_name_char(c)))
        .max_by_key(|(name, _)| name.len())
        .map(|(name, sp)| (Head::Fixed(GroupId::Sporadic(sp)), name.len()))
}

fn scan_classical(b: &[u8]) -> Option<(Head, usize)> {
    let mut family = match b.first()? {
        b'A' => Family::A,
        b'L' => Family::L,
        b'U' => Family::U,
        b'S' => Family::S,
        b'O' => Family::O,
        _ => return None,
    };
    let mut i = 1;
    let sign_at = |i: usize| match b.get(i) {
        Some(b'+') => Some(Family::OPlus),
        Some(b'-') => Some(Family::OMinus),
        _ => None,
    };
    if family == Family::O {
        if let Some(f) = sign_at(i) {
            family = f;
            i += 1;
        }
    }
    let (dim, after) = digits(b, i);
    if after > i && dim.is_none() {
        return None;
    }
    i = after;
    if family == Family::O && dim.is_some() {
        if let Some(f) = sign_at(i) {
            family = f;
            i += 1;
        }
    }
    let head = FamilyHead { family, dim };
    match b.get(i) {
        Some(b'(') => Some((Head::Family(head), i)),
        next if head.is_complete() && !next.is_some_and(|&c| is_name_char(c)) => {
            Some((Head::Family(head), i))
        }
        _ => None,
    }
}

fn parse_error(pos: usize, msg: impl Into<String>) -> GroupError {
    GroupError::Parse { pos, msg: msg.into() }
}

/// Parses and validates a group name such as `L3(4)`, `O+(12,4)`, `2B2(8)`,
/// `A(7)` or `Co1`.
pub fn parse_group(name: &str) -> Result<GroupId, GroupError> {
    let text = name.trim();
    let (head, mut i) = scan_head(text).ok_or_else(|| parse_error(0, "unknown group family"))?;
    let head = match head {
        Head::Fixed(g) => {
            return if i == text.len() {
                Ok(g)
            } else {
                Err(parse_error(i, "trailing characters"))
            };
        }
        Head::Family(h) => h,
    };
    let b = text.as_bytes();
    let mut args = Vec::new();
    if b.get(i) == Some(&b'(') {
        i += 1;
        loop {
            while b.get(i) == Some(&b' ') {
                i += 1;
            }
            let (value, after) = digits(b, i);
            match value {
                Some(v) => args.push(v),
                None if after > i => return Err(parse_error(i, "integer too large")),
                None => return Err(parse_error(i, "expected an integer")),
            }
            i = after;
            while b.get(i) == Some(&b' ') {
                i += 1;
            }
            match b.get(i) {
                Some(b',') => i += 1,
                Some(b')') => {
                    i += 1;
                    break;
                }
                _ => return Err(parse_error(i, "expected ',' or ')'")),
            }
        }
    }
    if i != text.len() {
        return Err(parse_error(i, "trailing characters"));
    }
    build(head, &args)
}
