use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn ltc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ltc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn payload(out: &Output) -> Value {
    let v: Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    v["payload"].clone()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_c2_reports_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c2.txt");
    let o = ltc(&["gen", "c2", "--n", "24", "--out", path_str(&out)]);
    assert_eq!(o.status.code(), Some(0));
    let p = payload(&o);
    assert_eq!(p["b"], 7);
    assert_eq!(p["a1"], 5);
    assert_eq!(p["a2"], 4);
    let text = std::fs::read_to_string(&out).unwrap();
    let g = ltc_core::format::parse_three_graph(&text).unwrap();
    assert_eq!(g, ltc_core::constructions::construction2(24).unwrap().0);
}

#[test]
fn gen_c1_and_turan() {
    let dir = tempfile::tempdir().unwrap();
    let c1 = dir.path().join("c1.txt");
    assert_eq!(
        ltc(&["gen", "c1", "--n", "6", "--out", path_str(&c1)])
            .status
            .code(),
        Some(0)
    );
    assert!(std::fs::read_to_string(&c1).unwrap().starts_with("6 10\n"));

    let t = dir.path().join("t.txt");
    let o = ltc(&[
        "gen",
        "turan",
        "--n",
        "7",
        "--r",
        "3",
        "--out",
        path_str(&t),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(payload(&o)["m"], 16);
    assert!(std::fs::read_to_string(&t).unwrap().starts_with("7 16\n"));
}

#[test]
fn gen_rejects_bad_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.txt");
    let o = ltc(&["gen", "c2", "--n", "5", "--out", path_str(&out)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&o.stderr).is_empty());
    let o = ltc(&["gen", "c1", "--n", "6", "--out", "/nonexistent/dir/x.txt"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_cover_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let k6 = dir.path().join("k6.txt");
    std::fs::write(
        &k6,
        ltc_core::format::serialize_three_graph(&ltc_core::ThreeGraph::complete(6)),
    )
    .unwrap();
    let o = ltc(&["check-cover", path_str(&k6)]);
    assert_eq!(o.status.code(), Some(0));
    let p = payload(&o);
    assert_eq!(p["covered"], true);
    let w = &p["vertices"][0]["witness"];
    assert!(w["graph"].as_str().unwrap().starts_with("6 3\n"));

    let o = ltc(&["check-cover", path_str(&k6), "--fast"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(payload(&o)["vertices"][2]["source"], "fast");

    let c1 = dir.path().join("c1.txt");
    ltc(&["gen", "c1", "--n", "6", "--out", path_str(&c1)]);
    let o = ltc(&["check-cover", path_str(&c1)]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(payload(&o)["uncovered"].as_array().unwrap().len(), 6);
    let o = ltc(&["check-cover", path_str(&c1), "--vertex", "3"]);
    assert_eq!(o.status.code(), Some(1));

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "6 1\n1 1 2\n").unwrap();
    let o = ltc(&["check-cover", path_str(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("2:3"));
}

#[test]
fn input_digest_follows_file_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    std::fs::write(&a, "6 0\n").unwrap();
    let o = ltc(&["check-cover", path_str(&a)]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    // sha256 of "6 0\n"
    let expected = {
        use sha2::{Digest, Sha256};
        let d = Sha256::digest(b"6 0\n");
        d.iter().map(|b| format!("{b:02x}")).collect::<String>()
    };
    assert_eq!(v["input_digest"], format!("sha256:{expected}"));
}

#[test]
fn thresholds_small_and_guarded() {
    let o = ltc(&["thresholds", "codegree", "--n", "5", "--shards", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let p = payload(&o);
    assert_eq!(p["value"], 3);
    assert_eq!(p["exact"], true);
    assert_eq!(p["graphs_scanned"], 1024);

    let o = ltc(&["thresholds", "degree", "--n", "12"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--randomized"));

    let o = ltc(&[
        "thresholds",
        "degree",
        "--n",
        "8",
        "--randomized",
        "--trials",
        "5",
        "--seed",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let p = payload(&o);
    assert_eq!(p["exact"], false);
    assert!(p["display"].as_str().unwrap().starts_with('≥'));
}

#[test]
fn randomized_reruns_are_identical() {
    let args = [
        "thresholds",
        "codegree",
        "--n",
        "8",
        "--randomized",
        "--trials",
        "4",
        "--seed",
        "9",
    ];
    assert_eq!(payload(&ltc(&args)), payload(&ltc(&args)));
}

#[test]
fn verify_suites() {
    let o = ltc(&["verify", "structure", "--m", "5..6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(payload(&o)["passed"], true);

    let o = ltc(&["verify", "structure", "--m", "4..4"]);
    assert_eq!(o.status.code(), Some(1));
    let cx = &payload(&o)["reports"][0]["counterexamples"];
    assert!(cx[0]["graph"].as_str().unwrap().starts_with("4 "));

    assert_eq!(
        ltc(&["verify", "turan", "--n", "3..7"]).status.code(),
        Some(0)
    );
    assert_eq!(
        ltc(&["verify", "turan", "--n", "3..12"]).status.code(),
        Some(2)
    );
    assert_eq!(
        ltc(&["verify", "claim41", "--trials", "50", "--seed", "7", "--n", "9"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        ltc(&["verify", "claim42", "--trials", "20", "--n", "8..9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        ltc(&["verify", "lemma31", "--trials", "100", "--n", "7..8"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        ltc(&["verify", "constructions", "--n", "7..30"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(ltc(&["verify", "nosuch"]).status.code(), Some(2));
    assert_eq!(ltc(&["thresholds", "codegree"]).status.code(), Some(2));
    assert_eq!(
        ltc(&["verify", "structure", "--m", "7..5"]).status.code(),
        Some(2)
    );
}
