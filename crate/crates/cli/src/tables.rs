//! Plain-text renderings of the bundled reference tables.

use std::fmt::Write as _;

use cdverify::arith::Budget;
use cdverify::degrees::{lsz_bound, record, seitz_bound, unipotent_p_part};
use cdverify::groups::{parse_group, Sporadic};

use crate::Failure;

/// Orders of the exceptional groups: (family, d, formula, sample).
const ORDERS: [(&str, &str, &str, &str); 10] = [
    ("2B2(q^2), q^2=2^(2m+1)", "1", "q^4 (q^4+1)(q^2-1)", "2B2(8)"),
    ("2G2(q^2), q^2=3^(2m+1)", "1", "q^6 (q^6+1)(q^2-1)", "2G2(27)"),
    ("2F4(q^2), q^2=2^(2m+1)", "1", "q^24 (q^12+1)(q^8-1)(q^6+1)(q^2-1)", "2F4(8)"),
    ("3D4(q)", "1", "q^12 (q^8+q^4+1)(q^6-1)(q^2-1)", "3D4(2)"),
    ("2E6(q)", "(3,q+1)", "q^36 prod_{i in 2,5,6,8,9,12} (q^i-(-1)^i) / d", "2E6(2)"),
    ("G2(q)", "1", "q^6 (q^6-1)(q^2-1)", "G2(3)"),
    ("F4(q)", "1", "q^24 prod_{i in 2,6,8,12} (q^i-1)", "F4(2)"),
    ("E6(q)", "(3,q-1)", "q^36 prod_{i in 2,5,6,8,9,12} (q^i-1) / d", "E6(2)"),
    ("E7(q)", "(2,q-1)", "q^63 prod_{i in 2,6,8,10,12,14,18} (q^i-1) / d", "E7(2)"),
    ("E8(q)", "1", "q^120 prod_{i in 2,8,12,14,18,20,24,30} (q^i-1)", "E8(2)"),
];

/// Lower bounds for the smallest nontrivial degree: (family, bound, exceptions, sample).
const LSZ: [(&str, &str, &str, &str); 11] = [
    ("2B2(q^2)", "q(q^2-1)/sqrt2", "2B2(8)", "2B2(32)"),
    ("2G2(q^2)", "q^2(q^2-1)", "", "2G2(27)"),
    ("2F4(q^2)", "q^9(q^2-1)/sqrt2", "", "2F4(8)"),
    ("3D4(q)", "q^3(q^2-1)", "", "3D4(2)"),
    ("2E6(q)", "q^9(q^2-1)", "", "2E6(2)"),
    ("G2(q)", "q(q^2-1)", "G2(3), G2(4)", "G2(5)"),
    ("F4(q), q odd", "q^6(q^2-1)", "", "F4(3)"),
    ("F4(q), q even", "q^7(q^3-1)(q-1)/2", "F4(2)", "F4(4)"),
    ("E6(q)", "q^9(q^2-1)", "", "E6(2)"),
    ("E7(q)", "q^15(q^2-1)", "", "E7(2)"),
    ("E8(q)", "q^27(q^2-1)", "", "E8(2)"),
];

/// p-parts of non-Steinberg unipotent degrees: (family, p-part, sample).
const UNIPOTENT: [(&str, &str, &str); 13] = [
    ("L_n^e(p^b)", "p^(b(n-1)(n-2)/2)", "L5(4)"),
    ("S_2n(p^b), p=2", "2^(b(n-1)^2-1)", "S8(4)"),
    ("S_2n(p^b), p>2", "p^(b(n-1)^2)", "S8(3)"),
    ("O_2n+1(p^b), p>2", "p^(b(n-1)^2)", "O9(3)"),
    ("O+_2n(p^b)", "p^(b(n^2-3n+3))", "O10+(2)"),
    ("O-_2n(p^b)", "p^(b(n^2-3n+2))", "O10-(2)"),
    ("3D4(p^b)", "p^(7b)", "3D4(2)"),
    ("F4(p^b)", "p^(10b)", "F4(2)"),
    ("2F4(q^2)", "q^13/sqrt2", "2F4(8)"),
    ("E6(p^b)", "p^(25b)", "E6(2)"),
    ("2E6(p^b)", "p^(25b)", "2E6(2)"),
    ("E7(p^b)", "p^(46b)", "E7(2)"),
    ("E8(p^b)", "p^(91b)", "E8(2)"),
];

/// Upper bounds for the largest degree: (family, bound, sample).
const SEITZ: [(&str, &str, &str); 10] = [
    ("F4(q)", "q^28", "F4(2)"),
    ("G2(q)", "q^8", "G2(3)"),
    ("2B2(q^2)", "q^6", "2B2(8)"),
    ("2F4(q^2)", "q^28", "2F4(8)"),
    ("2G2(q^2)", "q^8", "2G2(27)"),
    ("E6(q)", "q^42", "E6(2)"),
    ("E7(q)", "q^70", "E7(2)"),
    ("E8(q)", "q^128", "E8(2)"),
    ("2E6(q)", "q^42", "2E6(2)"),
    ("3D4(q)", "q^17", "3D4(2)"),
];

pub fn dump(k: u8) -> Result<String, Failure> {
    let mut out = String::new();
    match k {
        1 => {
            writeln!(out, "S\td\t|S|\tsample")?;
            for (family, d, formula, sample) in ORDERS {
                let order = parse_group(sample)?.order(&Budget::unlimited())?;
                writeln!(out, "{family}\t{d}\t{formula}\t|{sample}| = {} = {order}", order.value())?;
            }
        }
        2 => {
            writeln!(out, "S\te(S)\texceptions\tsample")?;
            for (family, bound, exceptions, sample) in LSZ {
                let value = lsz_bound(&parse_group(sample)?)?;
                writeln!(out, "{family}\t{bound}\t{exceptions}\te({sample}) = {value}")?;
            }
        }
        3 => {
            writeln!(out, "S\tp-part\tsample")?;
            for (family, part, sample) in UNIPOTENT {
                match unipotent_p_part(&parse_group(sample)?) {
                    Ok(value) => writeln!(out, "{family}\t{part}\t{sample}: {value}")?,
                    Err(_) => writeln!(out, "{family}\t{part}\t{sample}: see 2-part of 2B2[a]")?,
                }
            }
        }
        4 => {
            writeln!(out, "S\tt\td1\td2\td3\tb")?;
            for s in Sporadic::ALL {
                let r = record(s);
                writeln!(out, "{s}\t{}\t{}\t{}\t{}\t{}", r.t, r.d1, r.d2, r.d3, r.b)?;
            }
        }
        5 => {
            writeln!(out, "S\tbound\tsample")?;
            for (family, bound, sample) in SEITZ {
                let value = seitz_bound(&parse_group(sample)?)?;
                writeln!(out, "{family}\t{bound}\t{sample}: {value}")?;
            }
        }
        _ => return Err(Failure(format!("no table {k}; choose 1 to 5"))),
    }
    Ok(out)
}
