//! End-to-end tests of the `bruhatkit` binary. JSON output is compared to
//! files under `tests/golden/`; run with `UPDATE_GOLDEN=1` to rewrite them.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_bruhatkit"));
    cmd.env_remove("BRUHATKIT_BUDGET");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn json_ok(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", stderr(&out));
    serde_json::from_str(&stdout(&out)).expect("valid JSON")
}

fn golden(name: &str, args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", stderr(&out));
    let text = stdout(&out);
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", &format!("{name}.json")].iter().collect();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, &text).unwrap();
    }
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|_| panic!("missing {}; run with UPDATE_GOLDEN=1", path.display()));
    assert_eq!(text, expected, "output of {args:?} differs from {}", path.display());
    serde_json::from_str(&text).expect("valid JSON")
}

const GF2_S1: &str = r#"{"field":{"p":2},"rows":2,"cols":2,"entries":[[1,0],[1,1]]}"#;
const Q_ID3: &str = r#"{"field":"Q","rows":3,"cols":3,"entries":[[1,0,0],[0,1,0],[0,0,1]]}"#;
const Q_ANTI3: &str = r#"{"field":"Q","rows":3,"cols":3,"entries":[[0,0,1],[0,1,0],[1,0,0]]}"#;

#[test]
fn hecke_quadratic_relation() {
    let v = golden("hecke_1_1_A2", &["hecke", "1", "1", "A", "2"]);
    assert_eq!(v["display"], "(q - 1)·T_{s1} + q·T_e");
    let out = run(&["hecke", "1", "1", "A", "2", "--format", "table"]);
    assert_eq!(stdout(&out), "(q - 1)·T_{s1} + q·T_e\n");
}

#[test]
fn hecke_words_multiply() {
    // T_{s1} T_{s2} = T_{s1 s2}: lengths add
    let v = json_ok(&["hecke", "1", "2", "A", "2"]);
    assert_eq!(v["terms"].as_array().unwrap().len(), 1);
    assert_eq!(v["terms"][0]["word"], serde_json::json!([1, 2]));
    // empty word is T_e
    let v = json_ok(&["hecke", "", "2 1", "A", "2"]);
    assert_eq!(v["terms"][0]["word"], serde_json::json!([2, 1]));
}

#[test]
fn hecke_malformed_word() {
    let out = run(&["hecke", "1x", "1", "A", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("malformed word"));
    let out = run(&["hecke", "3", "1", "A", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn poincare_a2() {
    let v = golden("poincare_A2", &["poincare", "A", "2"]);
    assert_eq!(v["coefficients"], serde_json::json!([1, 2, 2, 1]));
    assert_eq!(v["product_matches"], true);
}

#[test]
fn order_gl3_f2() {
    let v = golden("order_A2_gl_q2", &["order", "A", "2", "--gl", "--q", "2"]);
    // (8-1)(8-2)(8-4)
    assert_eq!(v["order"], (7 * 6 * 4).to_string());
    let out = run(&["order", "BC", "2", "--q", "3", "--format", "table"]);
    assert_eq!(stdout(&out), "51840\n");
}

#[test]
fn phi_type_a_is_identity() {
    let v = golden("phi_A2", &["phi", "A", "2"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    for r in rows {
        assert_eq!(r["class_label"], r["phi"]);
    }
}

#[test]
fn phi_bc2_table() {
    let v = golden("phi_BC2", &["phi", "BC", "2"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 5);
    let sizes: u64 = rows.iter().map(|r| r["size"].as_u64().unwrap()).sum();
    assert_eq!(sizes, 8);
    for r in rows {
        let total: u64 = r["phi"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).sum();
        assert_eq!(total, 4);
    }
}

#[test]
fn classes_d3_without_phi() {
    let v = golden("classes_D3", &["classes", "D", "3"]);
    let rows = v["classes"].as_array().unwrap();
    // W(D3) = S4: 5 classes, 24 elements
    assert_eq!(rows.len(), 5);
    assert_eq!(rows.iter().map(|r| r["size"].as_u64().unwrap()).sum::<u64>(), 24);
    assert!(rows.iter().all(|r| r.get("phi").is_none() && r["label"].is_null()));
}

#[test]
fn phi_d_is_out_of_scope() {
    let out = run(&["phi", "D", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("out of scope"));
}

#[test]
fn rank_cap_is_enforced() {
    let out = run(&["classes", "A", "3", "--rank-cap", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("cap"));
}

#[test]
fn decompose_examples() {
    let v = golden("decompose_gf2_s1", &["decompose", GF2_S1]);
    assert_eq!(v["w"], serde_json::json!([2, 1]));
    assert_eq!(v["word"], serde_json::json!([1]));
    assert_eq!(v["verified"], true);

    let v = golden("decompose_identity", &["decompose", Q_ID3]);
    assert_eq!(v["length"], 0);
    assert_eq!(v["word"], serde_json::json!([]));

    let v = golden("decompose_antidiagonal", &["decompose", Q_ANTI3]);
    assert_eq!(v["w"], serde_json::json!([3, 2, 1]));
    assert_eq!(v["length"], 3);
}

#[test]
fn decompose_from_file_and_stdin() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    std::fs::write(&path, GF2_S1).unwrap();
    let from_file = json_ok(&["decompose", path.to_str().unwrap()]);
    assert_eq!(from_file, json_ok(&["decompose", GF2_S1]));

    use std::io::Write;
    let mut child = bin()
        .args(["decompose", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(Q_ANTI3.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["length"], 3);
}

#[test]
fn decompose_errors() {
    let singular = r#"{"field":"Q","rows":2,"cols":2,"entries":[[1,2],[2,4]]}"#;
    let out = run(&["decompose", singular]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("singular"));
    assert!(stderr(&out).contains("column 1"));

    let malformed = "{\"field\":\"Q\",\"rows\":2,\n\"cols\":2 \"entries\":[]}";
    let out = run(&["decompose", malformed]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2 column 10"), "{}", stderr(&out));
}

#[test]
fn relpos_standard_and_opposite() {
    let v = golden("relpos_opposite", &["relpos", Q_ID3, Q_ANTI3]);
    assert_eq!(v["length"], 3);
    let v = json_ok(&["relpos", Q_ANTI3, Q_ANTI3]);
    assert_eq!(v["length"], 0);
}

#[test]
fn cell_count_sums_to_order() {
    let v = golden("cell_count_sl3_q2", &["cell-count", "sl", "3", "--q", "2"]);
    assert_eq!(v["order"], "168");
    assert_eq!(v["total"], "168");
    // |B(F_2)| = 8 for SL3; |G_w| = |B| q^l(w)
    for c in v["cells"].as_array().unwrap() {
        let l = c["length"].as_u64().unwrap() as u32;
        assert_eq!(c["size"], (8u64 * 2u64.pow(l)).to_string());
    }
    let v = json_ok(&["cell-count", "sp", "4", "--q", "3"]);
    assert_eq!(v["total"], "51840");
}

#[test]
fn verify_sl3_q2() {
    let v = golden("verify_sl3_q2", &["verify", "sl", "3", "--q", "2", "--samples", "50", "--seed", "7"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["theorem_a"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_sl2_two_primes() {
    let v = golden("verify_sl2_q2_3", &["verify", "sl", "2", "--q", "2,3", "--samples", "20"]);
    assert_eq!(v["passed"], true);
    assert!(!v["property_d"].as_array().unwrap().is_empty());
}

#[test]
fn verify_sp4_q3() {
    let out = run(&["verify", "sp", "4", "--q", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["theorem_a"].as_array().unwrap().len(), 5);
}

#[test]
fn verify_bad_prime_guard() {
    let out = run(&["verify", "sp", "4", "--q", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--allow-bad-prime"));

    let out = run(&["verify", "sp", "4", "--q", "2", "--allow-bad-prime", "--samples", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["asserted"], false);
}

#[test]
fn verify_exit_code_tracks_report() {
    for args in [["verify", "gl", "2", "--q", "3"], ["verify", "sl", "2", "--q", "5"]] {
        let out = run(&args);
        let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(out.status.success(), v["passed"] == true);
    }
}

#[test]
fn same_seed_same_randomized_section() {
    let args = ["verify", "gl", "3", "--q", "2", "--samples", "100", "--seed", "42"];
    let a = json_ok(&args);
    let b = json_ok(&args);
    assert_eq!(a["randomized"], b["randomized"]);
    assert_eq!(a["seed"], 42);
    let c = json_ok(&["verify", "gl", "3", "--q", "2", "--samples", "100", "--seed", "43"]);
    assert_eq!(c["seed"], 43);
}

#[test]
fn worker_count_does_not_change_output() {
    let one = stdout(&run(&["verify", "sl", "3", "--q", "3", "--workers", "1"]));
    let four = stdout(&run(&["verify", "sl", "3", "--q", "3", "--workers", "4"]));
    assert_eq!(one, four);
}

#[test]
fn budget_env_and_flag() {
    let out = bin().args(["verify", "sl", "3", "--q", "2"]).env("BRUHATKIT_BUDGET", "100").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("168") && err.contains("BRUHATKIT_BUDGET"), "{err}");

    // the flag wins over the environment
    let out = bin().args(["verify", "sl", "3", "--q", "2", "--budget", "1000"]).env("BRUHATKIT_BUDGET", "100").output().unwrap();
    assert!(out.status.success());
}

#[test]
fn verify_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&["verify", "sl", "2", "--q", "3", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&out));
}

#[test]
fn table_format_for_verify() {
    let out = run(&["verify", "sl", "2", "--q", "3", "--format", "table"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("overall: PASS"));
}
