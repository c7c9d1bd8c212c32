use std::io::Write as _;
use std::path::PathBuf;
use std::process::{Command, Output};

fn cdverify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cdverify")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Writes `text` to a fresh ledger file under the target tmp dir.
fn ledger(name: &str, text: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(format!("{name}.claims"));
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(text.as_bytes()).unwrap();
    path
}

#[test]
fn order_prints_value_and_factorization() {
    let o = cdverify(&["order", "2B2(8)"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "29120 = 2^6·5·7·13\n");
    assert_eq!(stdout(&cdverify(&["order", "G2(3)"])), "4245696 = 2^6·3^6·7·13\n");
    assert_eq!(stdout(&cdverify(&["order", "M11"])), "7920 = 2^4·3^2·5·11\n");
}

#[test]
fn order_rejects_non_simple() {
    let o = cdverify(&["order", "S4(2)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: "));
    assert_eq!(cdverify(&["order", "Q7(2)"]).status.code(), Some(2));
}

#[test]
fn pi_lists_primes() {
    assert_eq!(stdout(&cdverify(&["pi", "ON"])), "{2, 3, 5, 7, 11, 19, 31}\n");
    assert_eq!(stdout(&cdverify(&["pi", "G2(3)"])), "{2, 3, 7, 13}\n");
}

#[test]
fn cyclotomic_and_zsigmondy() {
    assert_eq!(stdout(&cdverify(&["cyclotomic", "12", "2"])), "13\n");
    assert_eq!(stdout(&cdverify(&["zsigmondy", "2", "6"])), "none (Zsigmondy exception)\n");
    assert_eq!(stdout(&cdverify(&["zsigmondy", "2", "12"])), "13\n");
    assert_eq!(stdout(&cdverify(&["zsigmondy", "2", "5", "--negative"])), "11\n");
    assert_eq!(cdverify(&["cyclotomic", "0", "2"]).status.code(), Some(2));
    assert_eq!(cdverify(&["zsigmondy", "1", "3"]).status.code(), Some(2));
}

#[test]
fn altdeg() {
    assert_eq!(stdout(&cdverify(&["altdeg", "5"])), "1, 3, 4, 5\n");
    assert_eq!(stdout(&cdverify(&["altdeg", "10", "--max"])), "567\n");
    assert_eq!(cdverify(&["altdeg", "4"]).status.code(), Some(2));
}

#[test]
fn tables_dump() {
    for k in 1..=5 {
        let o = cdverify(&["tables", "dump", &k.to_string()]);
        assert!(o.status.success(), "table {k}");
        assert!(stdout(&o).lines().count() > 5, "table {k}");
    }
    let t1 = stdout(&cdverify(&["tables", "dump", "1"]));
    assert!(t1.contains("|2B2(8)| = 29120"));
    assert!(t1.contains("|3D4(2)| = 211341312"));
    let t4 = stdout(&cdverify(&["tables", "dump", "4"]));
    assert!(t4.contains("M\t"));
    assert_eq!(cdverify(&["tables", "dump", "6"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let ok = ledger("ok", "claim a.01 \"x\"\n  forall n in [1..20]: n*(n-1) != 36\n");
    let o = cdverify(&["verify", ok.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("status: verified"));

    let bad = ledger("bad", "claim a.01 \"x\"\n  forall n in [1..20]: n*(n-1) != 30\n");
    let o = cdverify(&["verify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness: n=6"));

    let slow = ledger("slow", "claim a.01 \"x\"\n  : l(2, 1009) > 0\n");
    let o = cdverify(&["verify", slow.to_str().unwrap(), "--budget-ms", "50"]);
    assert_eq!(o.status.code(), Some(3), "{}", stdout(&o));
    assert!(stdout(&o).contains("status: skipped"));
}

#[test]
fn verify_errors() {
    let o = cdverify(&["verify", "/nonexistent/ledger.claims"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("/nonexistent/ledger.claims"));

    let broken = ledger("broken", "claim a.01 \"x\"\n  forall n in [1..5]: n <\n");
    let o = cdverify(&["verify", broken.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: "));

    let ok = ledger("zero", "claim a.01 \"x\"\n  : 1 = 1\n");
    assert_eq!(cdverify(&["verify", ok.to_str().unwrap(), "--budget-ms", "0"]).status.code(), Some(2));
    assert_eq!(cdverify(&["verify"]).status.code(), Some(2));
}

#[test]
fn empty_ledger_is_success() {
    let empty = ledger("empty", "# nothing here\n");
    let o = cdverify(&["verify", empty.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "summary: 0 verified, 0 refuted, 0 skipped, 0 assumed\n");
}

#[test]
fn machine_format() {
    let path = ledger(
        "machine",
        "claim b.01 \"y\"\n  forall n in [1..9]: n != 4\naxiom a.01 \"cited\"\n  : external(\"source\")\n",
    );
    let o = cdverify(&["verify", path.to_str().unwrap(), "--format", "machine"]);
    assert_eq!(o.status.code(), Some(1));
    let lines: Vec<serde_like::Line> = stdout(&o).lines().map(serde_like::parse).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0].id, "a.01");
    assert_eq!(lines[0].status, "assumed");
    assert_eq!(lines[1].id, "b.01");
    assert_eq!(lines[1].status, "refuted");
    assert!(stdout(&o).contains("\"witness\":\"n=4\""));
    assert!(!stdout(&o).contains("elapsed_ms"));

    let timed = cdverify(&["verify", path.to_str().unwrap(), "--format", "machine", "--timings"]);
    assert!(stdout(&timed).contains("\"elapsed_ms\":"));
    assert!(stderr(&timed).contains("total elapsed"));
}

/// Field extraction for the flat one-line records.
mod serde_like {
    pub struct Line {
        pub id: String,
        pub status: String,
    }

    fn field(line: &str, key: &str) -> String {
        let tag = format!("\"{key}\":\"");
        let start = line.find(&tag).expect("field present") + tag.len();
        let end = start + line[start..].find('"').unwrap();
        line[start..end].to_string()
    }

    pub fn parse(line: &str) -> Line {
        assert!(line.starts_with('{') && line.ends_with('}'));
        Line { id: field(line, "id"), status: field(line, "status") }
    }
}

#[test]
fn max_bits_env() {
    let path = ledger("bits", "claim a.01 \"x\"\n  : subset(pi(E8(2)), pi(E8(2)))\n");
    let o = Command::new(env!("CARGO_BIN_EXE_cdverify"))
        .args(["verify", path.to_str().unwrap()])
        .env("CDVERIFY_MAX_BITS", "8")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3), "{}", stdout(&o));
    assert!(stdout(&o).contains("magnitude cap"));

    let o = Command::new(env!("CARGO_BIN_EXE_cdverify"))
        .args(["order", "E8(2)"])
        .env("CDVERIFY_MAX_BITS", "8")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));

    let o = Command::new(env!("CARGO_BIN_EXE_cdverify"))
        .args(["order", "E8(2)"])
        .env("CDVERIFY_MAX_BITS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("CDVERIFY_MAX_BITS"));

    let o = Command::new(env!("CARGO_BIN_EXE_cdverify"))
        .args(["order", "E8(2)"])
        .env("CDVERIFY_MAX_BITS", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bundled_ledgers_verify() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../ledgers");
    for name in ["prop1", "prop2", "prop3", "prop4"] {
        let o = cdverify(&["verify", dir.join(format!("{name}.claims")).to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{name}:\n{}", stdout(&o));
    }
}
