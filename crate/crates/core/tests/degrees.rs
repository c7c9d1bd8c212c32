use num_bigint::BigUint;
use num_traits::Zero;

use cdverify::arith::{p_part, Budget};
use cdverify::degrees::{
    bound_constant, lsz_bound, record, seitz_bound, unipotent_p_part, witness_degree_i64, Witness,
};
use cdverify::groups::{parse_group, Sporadic};

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn divides_order(d: &BigUint, group: &str) {
    let order = parse_group(group).unwrap().order_value();
    assert!((&order % d).is_zero(), "{d} does not divide |{group}|");
}

#[test]
fn sporadic_records() {
    let budget = Budget::unlimited();
    for s in Sporadic::ALL {
        let r = record(s);
        let order = s.order().value().clone();
        assert!(big(1) < r.d1 && r.d1 < r.d2 && r.d2 < r.d3 && r.d3 <= r.b, "{s}");
        for d in [&r.d1, &r.d2, &r.d3, &r.b] {
            assert!((&order % d).is_zero(), "{s}: {d}");
        }
        assert!(&r.b * &r.b < order, "{s}");
        assert!(r.t >= 4, "{s}");
        let pi = parse_group(s.name()).unwrap().pi(&budget).unwrap();
        assert!(pi.len() >= 3, "{s}");
    }
    let m = record(Sporadic::M);
    assert_eq!(m.d1, big(196883));
    assert_eq!(m.d2, big(21296876));
    assert_eq!(record(Sporadic::M11).d1, big(10));
    assert_eq!(record(Sporadic::J1).d1, big(56));
}

#[test]
fn bound_table() {
    for key in ["d2_3D4_3", "d2_E6_3", "d1_F4_3", "d2_F4_3", "t_2B2", "tmax_2G2", "tmax_G2", "tmax_3D4"] {
        assert!(bound_constant(key).is_ok(), "{key}");
    }
    assert!(bound_constant("nope").is_err());
}

#[test]
fn lsz_values() {
    let cases = [
        ("2B2(32)", 124u64),
        ("2G2(27)", 702),
        ("2F4(8)", 57344),
        ("3D4(4)", 960),
        ("G2(7)", 336),
        ("F4(5)", 375000),
        ("F4(4)", 1548288),
        ("E6(4)", 3932160),
        ("2E6(4)", 3932160),
        ("E7(3)", 114791256),
    ];
    for (name, want) in cases {
        assert_eq!(lsz_bound(&parse_group(name).unwrap()).unwrap(), big(want), "{name}");
    }
}

#[test]
fn bounds_are_ordered() {
    for name in ["2B2(32)", "2G2(27)", "2F4(8)", "3D4(3)", "G2(5)", "F4(3)", "E6(2)", "2E6(3)", "E7(2)", "E8(2)"] {
        let g = parse_group(name).unwrap();
        let e = lsz_bound(&g).unwrap();
        let b = seitz_bound(&g).unwrap();
        let order = g.order_value();
        assert!(e < b, "{name}");
        assert!(&b * &b > order.sqrt(), "{name}");
    }
}

#[test]
fn unipotent_parts_below_steinberg() {
    for name in ["L5(4)", "S8(4)", "S8(3)", "O9(3)", "O10+(2)", "O10-(2)", "3D4(2)", "F4(2)", "2F4(8)", "E6(2)", "2E6(2)", "E7(2)", "E8(2)"] {
        let g = parse_group(name).unwrap();
        let (p, k) = g.p_part_order().unwrap();
        let u = unipotent_p_part(&g).unwrap();
        assert!(u < num_traits::pow(big(p), k as usize), "{name}");
        assert_eq!(p_part(&u, &big(p)).unwrap(), u, "{name}");
    }
    assert_eq!(unipotent_p_part(&parse_group("3D4(2)").unwrap()).unwrap(), big(1 << 7));
    assert_eq!(unipotent_p_part(&parse_group("2F4(8)").unwrap()).unwrap(), big(1 << 19));
}

/// Every witness formula names a character degree, so it divides the order.
#[test]
fn witnesses_divide_orders() {
    use Witness::*;
    let deg = |w: Witness, args: &[i64]| witness_degree_i64(w, args).unwrap();
    for r in [2i64, 3, 4, 5, 7, 8, 9] {
        for e in [1i64, -1] {
            let sign = if e == 1 { "L" } else { "U" };
            for n in 4..=6 {
                divides_order(&deg(UnipA1n1, &[r, n, e]), &format!("{sign}{n}({r})"));
                divides_order(&deg(UnipA2n2, &[r, n, e]), &format!("{sign}{n}({r})"));
            }
            if (sign, r) != ("U", 2) {
                divides_order(&deg(L3Deg, &[r, e]), &format!("{sign}3({r})"));
            }
            let o = if e == 1 { "O8+" } else { "O8-" };
            divides_order(&deg(UnipD, &[r, 4, e]), &format!("{o}({r})"));
            if r <= 5 {
                divides_order(&deg(L3q2Deg, &[r, e]), &format!("{sign}3({})", r * r));
            }
        }
        for n in 3..=5 {
            divides_order(&deg(UnipB01n, &[r, n]), &format!("S{}({r})", 2 * n));
        }
        if r > 2 {
            divides_order(&deg(U3Deg, &[r]), &format!("U3({r})"));
            divides_order(&deg(S4Sym12, &[r]), &format!("S4({r})"));
        }
        if r % 2 == 0 && r > 2 {
            divides_order(&deg(S4Eno, &[r]), &format!("S4({r})"));
        }
        divides_order(&deg(Phi1_3p, &[r]), &format!("3D4({r})"));
        divides_order(&deg(Phi9_2, &[r]), &format!("F4({r})"));
        divides_order(&deg(Phi9_10, &[r]), &format!("F4({r})"));
        divides_order(&deg(Phi2_4p, &[r]), &format!("2E6({r})"));
        divides_order(&deg(Phi6_1, &[r]), &format!("E6({r})"));
        divides_order(&deg(Phi7_1, &[r]), &format!("E7({r})"));
        divides_order(&deg(Phi27_2, &[r]), &format!("E7({r})"));
        divides_order(&deg(Phi8_1, &[r]), &format!("E8({r})"));
    }
    for q2 in [8i64, 32, 128] {
        divides_order(&deg(SzDeg, &[q2]), &format!("2B2({q2})"));
    }
    for n in 1..=3 {
        divides_order(&deg(B2a2Part, &[n]), &format!("2F4({})", 1i64 << (2 * n + 1)));
    }
}

#[test]
fn witness_argument_checks() {
    assert!(witness_degree_i64(Witness::UnipA1n1, &[6, 4, 1]).is_err());
    assert!(witness_degree_i64(Witness::UnipD, &[2, 4, 0]).is_err());
    assert!(witness_degree_i64(Witness::SzDeg, &[16]).is_err());
    assert!(witness_degree_i64(Witness::Phi7_1, &[2, 3]).is_err());
    assert_eq!(Witness::from_name("phi_7_1").unwrap(), Witness::Phi7_1);
    assert!(Witness::from_name("phi_7_2").is_err());
    for w in Witness::ALL {
        assert_eq!(Witness::from_name(w.name()).unwrap(), w);
    }
}
