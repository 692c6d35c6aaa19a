use std::process::{Command, Output};

use num_bigint::BigInt;
use trigpoly_core::chebyshev::{ChebKind, ChebMatrix};
use trigpoly_core::fourier::SuperCatalanMatrix;

fn trigpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trigpoly"))
        .args(args)
        .env("TRIGPOLY_OEIS_CACHE", std::env::temp_dir().join("trigpoly-cli-test-empty-cache"))
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn gen_t_plain() {
    let o = trigpoly(&["gen", "--object", "T", "--size", "5"]);
    assert!(o.status.success());
    let want = "\
1   -1     1
  1    -3
     2    -8
        4
           8
";
    assert_eq!(stdout(&o), want);
}

#[test]
fn gen_m_csv_and_pyramidal() {
    let o = trigpoly(&["gen", "--object", "M", "--size", "4", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().next(), Some("1,2,6,20"));
    let o = trigpoly(&["gen", "--object", "pyramidal", "--size", "1", "--format", "plain"]);
    assert!(stdout(&o).starts_with("1 3 5 7"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["gen", "--object", "Z", "--size", "9"][..],
        &["--jobs", "3", "verify", "--suite", "all", "--order", "8"][..],
        &["factor", "--max-n", "40", "--report-pyramidal"][..],
    ] {
        let (a, b) = (trigpoly(args), trigpoly(args));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(a.status.success());
    }
}

fn parse_json_matrix(text: &str) -> Vec<Vec<BigInt>> {
    let v: serde_json::Value = serde_json::from_str(text).unwrap();
    v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| row.as_array().unwrap().iter().map(|c| c.as_str().unwrap().parse().unwrap()).collect())
        .collect()
}

#[test]
fn json_round_trip() {
    let o = trigpoly(&["gen", "--object", "T", "--size", "70", "--format", "json"]);
    let parsed = parse_json_matrix(&stdout(&o));
    let t = ChebMatrix::new(ChebKind::T, 70);
    for (m, row) in parsed.iter().enumerate() {
        assert_eq!(row.as_slice(), t.matrix().row(m));
    }
    // entries beyond 64 bits survive as strings
    assert!(parsed[69][69] > BigInt::from(u64::MAX));

    let o = trigpoly(&["gen", "--object", "M", "--size", "12", "--format", "json"]);
    let parsed = parse_json_matrix(&stdout(&o));
    let m = SuperCatalanMatrix::new(12).entries;
    assert!(parsed.iter().enumerate().all(|(i, r)| r.as_slice() == m.row(i)));

    let o = trigpoly(&["gen", "--object", "phi-table", "--size", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["entries"][4]["psi"], serde_json::json!(["5", "-5", "1"]));
    assert!(v["entries"][0]["psi"].is_null());
}

#[test]
fn verify_passes() {
    let o = trigpoly(&["verify", "--suite", "riordan", "--order", "40"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let o = trigpoly(&["verify", "--suite", "all", "--order", "12"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("all checks passed\n"));
}

#[test]
fn injected_faults_exit_one() {
    let o = trigpoly(&["verify", "--suite", "chebyshev", "--order", "5", "--inject-fault"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("T generating function failed at t^5"), "{}", stderr(&o));
    for suite in ["riordan", "basechange", "fourier", "spread"] {
        let o = trigpoly(&["verify", "--suite", suite, "--order", "10", "--inject-fault"]);
        assert_eq!(o.status.code(), Some(1), "{suite}");
        assert!(stderr(&o).contains("failed at"), "{suite}: {}", stderr(&o));
    }
    let o = trigpoly(&["verify", "--suite", "spread", "--order", "10", "--inject-fault", "4,2"]);
    assert!(stderr(&o).contains("t^4"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["gen", "--object", "Q", "--size", "3"][..],
        &["gen", "--object", "T", "--size", "0"][..],
        &["verify", "--suite", "nope"][..],
        &["verify", "--suite", "spread", "--order", "5", "--inject-fault", "99,0"][..],
        &["verify", "--suite", "spread", "--inject-fault", "x"][..],
        &["oeis", "--id", "12345"][..],
        &["factor"][..],
        &["gen", "--object", "T", "--size", "3", "--bogus"][..],
    ] {
        assert_eq!(trigpoly(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn factor_and_fixed_points() {
    let o = trigpoly(&["factor", "--max-n", "1"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("Φ₁ = x\n"));
    let o = trigpoly(&["factor", "--max-n", "17"]);
    let out = stdout(&o);
    assert!(out.contains("Φ₁₆ = (2 - 16x + 20x^2 - 8x^3 + x^4)^2"));
    assert!(out.contains("note: ψ₁₆"));
    assert!(!out.contains("FAIL"));
    let o = trigpoly(&["fixed-points", "--max-n", "100"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("Z_n(2 + φ) = 3 - φ"));
}

#[test]
fn oeis_offline() {
    let o = trigpoly(&["oeis", "--id", "A000330", "--terms", "6", "--offline"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("1, 5, 14, 30, 55, 91"));
    let o = trigpoly(&["oeis", "--id", "A005585", "--terms", "6", "--offline"]);
    assert!(stdout(&o).contains("1, 7, 27, 77, 182, 378"));
    let o = trigpoly(&["oeis", "--id", "A999999", "--offline"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("network access is disabled"));
}
