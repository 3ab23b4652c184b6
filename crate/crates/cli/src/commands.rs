use std::path::Path;

use anyhow::{bail, Context, Result};
use ltc_core::constructions::{construction1, construction2, turan_graph};
use ltc_core::covering::{cover_report, fast_witness_via_link, find_c6_through};
use ltc_core::format::{parse_three_graph, serialize_simple_graph, serialize_three_graph};
use ltc_core::search::compute_threshold;
use ltc_core::suites::{self, Claims};
use ltc_core::{SearchMode, ThreeGraph, ThresholdKind};
use serde_json::json;

use crate::range::NRange;
use crate::report::{SuiteJson, WitnessJson};
use crate::{GenKind, KindArg, Outcome, SuiteArg};

pub fn gen(kind: GenKind, n: usize, r: Option<usize>, out: &Path) -> Result<Outcome> {
    let (text, payload) = match kind {
        GenKind::C1 => {
            let g = construction1(n)?;
            let payload = json!({"kind": "c1", "n": n, "m": g.edge_count()});
            (serialize_three_graph(&g), payload)
        }
        GenKind::C2 => {
            let (g, p) = construction2(n)?;
            let payload = json!({
                "kind": "c2",
                "n": n,
                "m": g.edge_count(),
                "b": p.b,
                "a1": p.a_ceil,
                "a2": p.a_floor,
                "apex": p.apex,
            });
            (serialize_three_graph(&g), payload)
        }
        GenKind::Turan => {
            let Some(r) = r else {
                bail!("turan needs --r");
            };
            let h = turan_graph(n, r)?;
            let payload = json!({"kind": "turan", "n": n, "r": r, "m": h.edge_count()});
            (serialize_simple_graph(&h), payload)
        }
    };
    std::fs::write(out, &text).with_context(|| format!("writing {}", out.display()))?;
    Ok(Outcome {
        payload,
        input: text.into_bytes(),
        seed: None,
        code: 0,
    })
}

fn read_graph(path: &Path) -> Result<(ThreeGraph, Vec<u8>)> {
    let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let text =
        std::str::from_utf8(&bytes).with_context(|| format!("{} is not UTF-8", path.display()))?;
    let g = parse_three_graph(text).with_context(|| format!("parsing {}", path.display()))?;
    Ok((g, bytes))
}

pub fn check_cover(path: &Path, vertex: Option<usize>, fast: bool) -> Result<Outcome> {
    let (g, input) = read_graph(path)?;
    let n = g.order();
    let use_fast = fast && n >= 2 && g.min_codegree() >= 2;
    let vertices: Vec<usize> = match vertex {
        Some(v) if v >= n => bail!("vertex {v} is not below n = {n}"),
        Some(v) => vec![v],
        None => (0..n).collect(),
    };
    let mut rows = Vec::new();
    let mut uncovered = Vec::new();
    let whole_graph = vertex.is_none() && !use_fast;
    let report = whole_graph.then(|| cover_report(&g));
    for &v in &vertices {
        let (witness, source) = match &report {
            Some(r) => (r.covered.get(&v).cloned().flatten(), "oracle"),
            None => match use_fast
                .then(|| fast_witness_via_link(&g, v))
                .transpose()?
                .flatten()
            {
                Some(w) => (Some(w), "fast"),
                None => (find_c6_through(&g, v)?, "oracle"),
            },
        };
        if witness.is_none() {
            uncovered.push(v);
        }
        rows.push(json!({
            "vertex": v,
            "covered": witness.is_some(),
            "source": witness.as_ref().map(|_| source),
            "witness": witness.map(|w| WitnessJson::new(&w, n)),
        }));
    }
    let covered = uncovered.is_empty();
    let payload = json!({
        "n": n,
        "m": g.edge_count(),
        "fast": use_fast,
        "query": vertex,
        "covered": covered,
        "uncovered": uncovered,
        "vertices": rows,
    });
    Ok(Outcome {
        payload,
        input,
        seed: None,
        code: if covered { 0 } else { 1 },
    })
}

pub fn mode_from_flags(
    n: usize,
    canonical: bool,
    pruned: bool,
    randomized: bool,
    trials: Option<u64>,
    seed: Option<u64>,
) -> Result<SearchMode> {
    Ok(if randomized {
        SearchMode::Randomized {
            trials: trials.unwrap_or(1000),
            seed: seed.unwrap_or(0),
        }
    } else if canonical {
        SearchMode::Canonical
    } else if pruned {
        SearchMode::Pruned
    } else {
        SearchMode::default_for(n).context(
            "pass --randomized for a lower bound; exact modes cover n ≤ 6 (exhaustive, canonical) and n = 7 (pruned)",
        )?
    })
}

pub fn default_shards() -> usize {
    std::thread::available_parallelism().map_or(1, |p| p.get())
}

pub fn thresholds(
    kind: KindArg,
    n: usize,
    mode: SearchMode,
    shards: Option<usize>,
) -> Result<Outcome> {
    let kind = match kind {
        KindArg::Codegree => ThresholdKind::Codegree,
        KindArg::Degree => ThresholdKind::Degree,
    };
    let r = compute_threshold(kind, n, mode, shards.unwrap_or_else(default_shards))?;
    let witness = r.witness.as_ref().map(|g| {
        let cover = cover_report(g);
        json!({
            "graph": serialize_three_graph(g),
            "min_codegree": g.min_codegree(),
            "min_degree": g.min_degree(),
            "uncovered": cover.uncovered,
        })
    });
    let (trials, seed) = match mode {
        SearchMode::Randomized { trials, seed } => (Some(trials), Some(seed)),
        _ => (None, None),
    };
    let display = if r.exact {
        r.value.to_string()
    } else {
        format!("≥ {}", r.value)
    };
    let params = json!({"kind": kind.name(), "n": n, "mode": mode.name(), "trials": trials});
    let payload = json!({
        "kind": kind.name(),
        "n": n,
        "mode": mode.name(),
        "trials": trials,
        "value": r.value,
        "exact": r.exact,
        "display": display,
        "graphs_scanned": r.graphs_scanned,
        "witness": witness,
    });
    Ok(Outcome {
        payload,
        input: params.to_string().into_bytes(),
        seed,
        code: 0,
    })
}

fn orders(
    arg: &Option<NRange>,
    default: std::ops::RangeInclusive<usize>,
) -> std::ops::RangeInclusive<usize> {
    arg.as_ref().map_or(default, |r| r.0.clone())
}

pub fn verify(
    suite: SuiteArg,
    trials: Option<u64>,
    seed: Option<u64>,
    n: Option<NRange>,
    m: Option<NRange>,
) -> Result<Outcome> {
    let mut used_seed = None;
    let (name, reports, params) = match suite {
        SuiteArg::Lemma31 => {
            let ns = orders(&n, 7..=9);
            let (trials, seed) = (trials.unwrap_or(10_000), seed.unwrap_or(0));
            used_seed = Some(seed);
            let mut reports = Vec::new();
            if ns.contains(&6) {
                reports.push(suites::desk_scan(default_shards())?.lemma31);
            }
            let random: Vec<usize> = ns.clone().filter(|&k| k >= 7).collect();
            if !random.is_empty() {
                reports.push(suites::lemma31_random(trials, seed, &random)?);
            }
            if reports.is_empty() {
                bail!("lemma31 needs n in 6..12");
            }
            let params = json!({"n": NRange(ns).to_string(), "trials": trials});
            ("lemma31", reports, params)
        }
        SuiteArg::Claim41 | SuiteArg::Claim42 => {
            let which = if suite == SuiteArg::Claim41 {
                Claims::FIRST
            } else {
                Claims::SECOND
            };
            let order = match &n {
                None => 9,
                Some(r) => match r.single() {
                    Some(k) => k,
                    None => bail!("claim suites take a single --n for the random instances"),
                },
            };
            let (trials, seed) = (trials.unwrap_or(1000), seed.unwrap_or(0));
            used_seed = Some(seed);
            let reports = vec![
                suites::claims_construction2(7..=40, which)?,
                suites::claims_random(trials, seed, order, which)?,
            ];
            let name = if which.first { "claim41" } else { "claim42" };
            (name, reports, json!({"n": order, "trials": trials}))
        }
        SuiteArg::Structure => {
            let ms = orders(&m, 5..=7);
            let params = json!({"m": NRange(ms.clone()).to_string()});
            ("structure", vec![suites::structure(ms)?], params)
        }
        SuiteArg::Turan => {
            let ns = orders(&n, 3..=8);
            let params = json!({"n": NRange(ns.clone()).to_string()});
            ("turan", vec![suites::turan(ns)?], params)
        }
        SuiteArg::Constructions => {
            let ns = orders(&n, 7..=200);
            let params = json!({"n": NRange(ns.clone()).to_string()});
            let reports = vec![
                suites::construction1_suite(&[6, 10, 30, 60])?,
                suites::construction2_suite(ns)?,
            ];
            ("constructions", reports, params)
        }
    };
    let passed = reports.iter().all(|r| r.passed());
    let reports: Vec<SuiteJson> = reports.into_iter().map(SuiteJson::from).collect();
    let input = json!({"suite": name, "parameters": &params, "seed": used_seed}).to_string();
    let payload = json!({
        "suite": name,
        "parameters": params,
        "passed": passed,
        "reports": reports,
    });
    Ok(Outcome {
        payload,
        input: input.into_bytes(),
        seed: used_seed,
        code: if passed { 0 } else { 1 },
    })
}
