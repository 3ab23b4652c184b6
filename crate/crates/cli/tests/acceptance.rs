//! One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use ltc_core::constructions::{construction1, construction2, construction2_degree_formulas};
use ltc_core::covering::{cover_report, find_c6_through};
use ltc_core::exact::threshold_exceeded;
use ltc_core::format::parse_three_graph;
use ltc_core::patterns::{components, is_triangle_free};
use ltc_core::search::{compute_threshold, verify_min_deg2_implies_pattern};
use ltc_core::suites::{self, Claims, DeskScan, SuiteReport};
use ltc_core::{SearchMode, ThresholdKind};
use serde_json::Value;

const SEED: u64 = 20_240_601;

fn ltc(args: &[&str]) -> Result<Value, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_ltc"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("ltc {args:?} exited {:?}", out.status.code()));
    }
    serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())
}

fn summary(r: &SuiteReport) -> String {
    let first = r
        .counterexamples
        .first()
        .map(|c| format!("; first: {}\n{}", c.context, c.graph))
        .unwrap_or_default();
    format!(
        "{}: {} checks, {} violations{first}",
        r.suite, r.checks, r.violations
    )
}

fn all_pass(reports: &[&SuiteReport]) -> Result<String, String> {
    let text = reports
        .iter()
        .map(|r| summary(r))
        .collect::<Vec<_>>()
        .join("; ");
    if reports.iter().all(|r| r.passed()) {
        Ok(text)
    } else {
        Err(text)
    }
}

fn criterion1() -> Result<String, String> {
    let v = ltc(&["thresholds", "codegree", "--n", "6", "--shards", "1"])?;
    let p = &v["payload"];
    let scanned = p["graphs_scanned"].as_u64().unwrap_or(0);
    let value = p["value"].as_u64();
    let text = p["witness"]["graph"].as_str().ok_or("no witness")?;
    let witness = parse_three_graph(text).map_err(|e| e.to_string())?;
    let uncovered = cover_report(&witness).uncovered;
    let detail = format!(
        "value {value:?}, scanned {scanned}, witness δ₂ = {}, uncovered {uncovered:?}",
        witness.min_codegree()
    );
    if value == Some(1)
        && scanned == 1 << 20
        && witness.min_codegree() == 1
        && !uncovered.is_empty()
    {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion2(scan: &DeskScan) -> Result<String, String> {
    let detail = format!(
        "{} graphs with δ₂ ≥ 2, {} not fully covered; max δ₂ without covering = {}",
        scan.codegree2.checks, scan.codegree2.violations, scan.max_codegree
    );
    if scan.graphs == 1 << 20 && scan.codegree2.passed() && scan.max_codegree == 1 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion3() -> Result<String, String> {
    let mut rows = Vec::new();
    let mut ok = true;
    for n in [6, 10, 30, 60] {
        let g = construction1(n).map_err(|e| e.to_string())?;
        let report = cover_report(&g);
        ok &= g.min_codegree() == 1 && report.uncovered.len() == n;
        rows.push(format!(
            "n = {n}: δ₂ = {}, uncovered {}",
            g.min_codegree(),
            report.uncovered.len()
        ));
    }
    let detail = rows.join(", ");
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion4() -> Result<String, String> {
    let mut bad = Vec::new();
    for n in 7..=200 {
        let (g, p) = construction2(n).map_err(|e| e.to_string())?;
        let apex_free = find_c6_through(&g, p.apex)
            .map_err(|e| e.to_string())?
            .is_none();
        if !apex_free || !threshold_exceeded(g.min_degree() as u64, n as u64) {
            bad.push(n);
        }
    }
    if bad.is_empty() {
        Ok("194 instances, apex uncovered and δ₁ above the threshold in each".into())
    } else {
        Err(format!("failing n: {bad:?}"))
    }
}

fn criterion5() -> Result<String, String> {
    let mut rows = Vec::new();
    let mut ok = true;
    for m in 5..=7 {
        let (holds, bad) = verify_min_deg2_implies_pattern(m).map_err(|e| e.to_string())?;
        ok &= holds && bad.is_empty();
        rows.push(format!("m = {m}: {holds}"));
    }
    let (holds, bad) = verify_min_deg2_implies_pattern(4).map_err(|e| e.to_string())?;
    let has_c4 = bad
        .iter()
        .any(|h| h.edge_count() == 4 && is_triangle_free(h) && components(h).components.len() == 1);
    ok &= !holds && has_c4;
    rows.push(format!(
        "m = 4: {holds} with {} counterexamples, C4 among them: {has_c4}",
        bad.len()
    ));
    let detail = rows.join(", ");
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion6(scan: &DeskScan) -> Result<String, String> {
    let random = suites::lemma31_random(10_000, SEED, &[7, 8, 9]).map_err(|e| e.to_string())?;
    let instances = random.counts.get("instances").copied().unwrap_or(0);
    if instances != 10_000 {
        return Err(format!("only {instances} random instances"));
    }
    all_pass(&[&scan.lemma31, &random])
}

fn criterion7() -> Result<String, String> {
    all_pass(&[&suites::turan(3..=8).map_err(|e| e.to_string())?])
}

fn criterion8(scan: &DeskScan) -> Result<String, String> {
    let e = |e: ltc_core::Error| e.to_string();
    let fixed = suites::claims_construction2(7..=40, Claims::BOTH).map_err(e)?;
    let first = suites::claims_random(1000, SEED, 9, Claims::FIRST).map_err(e)?;
    let second = suites::claims_random(1000, SEED, 9, Claims::SECOND).map_err(e)?;
    for r in [&first, &second] {
        let got = r.counts.get("instances").copied().unwrap_or(0);
        if got != 1000 {
            return Err(format!(
                "{}: only {got} instances met the preconditions",
                r.suite
            ));
        }
    }
    all_pass(&[&fixed, &first, &second, &scan.claims])
}

fn criterion9() -> Result<String, String> {
    let mut bad = Vec::new();
    for n in 7..=200 {
        let (g, p) = construction2(n).map_err(|e| e.to_string())?;
        let f = construction2_degree_formulas(&p).map_err(|e| e.to_string())?;
        let profile = g.degree_profile().map_err(|e| e.to_string())?;
        let matches =
            (0..n).all(|v| p.part_of(v).map(|part| f.of_part(part)) == Some(profile.degrees[v]));
        if !matches || f.min() != profile.min1 {
            bad.push(n);
        }
    }
    if bad.is_empty() {
        Ok("194 instances, every vertex degree equals its part formula".into())
    } else {
        Err(format!("mismatch at n: {bad:?}"))
    }
}

fn criterion10(scan: &DeskScan) -> Result<String, String> {
    let e = |e: ltc_core::Error| e.to_string();
    let runs = [1, 1, 2, 8]
        .iter()
        .map(|&s| compute_threshold(ThresholdKind::Degree, 6, SearchMode::Exhaustive, s).map_err(e))
        .collect::<Result<Vec<_>, _>>()?;
    let same = runs.iter().all(|r| {
        r.value == runs[0].value
            && r.witness == runs[0].witness
            && r.graphs_scanned == runs[0].graphs_scanned
    });
    let cli: Vec<String> = ["1", "8", "1"]
        .iter()
        .map(|s| {
            ltc(&["thresholds", "degree", "--n", "6", "--shards", s])
                .map(|v| v["payload"].to_string())
        })
        .collect::<Result<_, _>>()?;
    let cli_same = cli.iter().all(|p| *p == cli[0]);
    let c1 = runs[0].value;
    let detail = format!(
        "c1(6) = {c1} over {} graphs, max δ₁ without covering in the codegree scan = {}, library runs identical: {same}, CLI payloads identical: {cli_same}",
        runs[0].graphs_scanned, scan.max_degree
    );
    if same
        && cli_same
        && runs[0].exact
        && runs[0].graphs_scanned == 1 << 20
        && c1 >= scan.max_degree
    {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let scan = match suites::desk_scan(1) {
        Ok(s) => s,
        Err(e) => {
            println!("FAIL shared six-vertex scan: {e}");
            return ExitCode::FAILURE;
        }
    };
    println!(
        "shared six-vertex scan: {} graphs in {:.1?}",
        scan.graphs,
        start.elapsed()
    );

    type Check<'a> = Box<dyn Fn() -> Result<String, String> + 'a>;
    let criteria: Vec<(&str, Check)> = vec![
        (
            "1 codegree threshold on six vertices is 1",
            Box::new(criterion1),
        ),
        (
            "2 δ₂ ≥ 2 forces a covering on six vertices",
            Box::new(|| criterion2(&scan)),
        ),
        (
            "3 first construction has no covered vertex",
            Box::new(criterion3),
        ),
        (
            "4 second construction: apex uncovered, δ₁ above threshold",
            Box::new(criterion4),
        ),
        (
            "5 minimum degree 2 forces P5 or 2P3 from five vertices",
            Box::new(criterion5),
        ),
        (
            "6 link lemma and fast-path witnesses",
            Box::new(|| criterion6(&scan)),
        ),
        (
            "7 clique-free maxima equal Turán counts",
            Box::new(criterion7),
        ),
        (
            "8 partition claims on constructed and random instances",
            Box::new(|| criterion8(&scan)),
        ),
        (
            "9 degree formulas match measured degrees",
            Box::new(criterion9),
        ),
        (
            "10 c1(6) deterministic and dominates the scan",
            Box::new(|| criterion10(&scan)),
        ),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let t = Instant::now();
        let result = check();
        let elapsed = t.elapsed();
        match result {
            Ok(detail) => println!("PASS criterion {name} [{elapsed:.1?}]: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name} [{elapsed:.1?}]: {detail}");
            }
        }
    }
    println!(
        "{} of 10 criteria passed in {:.1?}",
        10 - failed,
        start.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
