//! Verification suites shared by the command-line tool and the acceptance
//! tests. Each suite counts checks and violations and keeps a few violating
//! instances, serialized in the plain-text file format so they can be replayed.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::claims::{check_claim_4_1, check_claim_4_2, check_lemma_3_1, classify_edges};
use crate::constructions::{construction1, construction2, construction2_degree_formulas};
use crate::covering::{cover_report, fast_witness_via_link, find_c6_through};
use crate::encoding::{colex_triples, MaskSpace};
use crate::error::{Error, Result};
use crate::exact::{ceil_sqrt, threshold_exceeded};
use crate::format::{serialize_simple_graph, serialize_three_graph};
use crate::graph::{ThreeGraph, Vertex};
use crate::patterns::{max_edges_clique_free_bruteforce, turan_edge_count};
use crate::search::{
    fold_3graphs, greedy_uncovered, random_3graph_with, verify_min_deg2_implies_pattern,
    EnumerationPlan,
};

/// Violating instances kept per suite; the rest are only counted.
pub const MAX_COUNTEREXAMPLES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub context: String,
    /// The instance in file-format text.
    pub graph: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: u64,
    pub violations: u64,
    pub counterexamples: Vec<Counterexample>,
    /// Named tallies such as instances drawn or checks per predicate.
    pub counts: BTreeMap<String, u64>,
}

impl SuiteReport {
    pub fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            ..Default::default()
        }
    }

    /// No violations, and at least one check actually ran.
    pub fn passed(&self) -> bool {
        self.violations == 0 && self.checks > 0
    }

    fn check(&mut self, ok: bool, counterexample: impl FnOnce() -> Counterexample) {
        self.checks += 1;
        if !ok {
            self.violations += 1;
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples.push(counterexample());
            }
        }
    }

    fn bump(&mut self, key: &str, by: u64) {
        *self.counts.entry(key.to_string()).or_default() += by;
    }

    /// Appends `other`; counterexamples keep `self`'s first.
    pub fn absorb(&mut self, other: SuiteReport) {
        self.checks += other.checks;
        self.violations += other.violations;
        let room = MAX_COUNTEREXAMPLES.saturating_sub(self.counterexamples.len());
        self.counterexamples
            .extend(other.counterexamples.into_iter().take(room));
        for (k, v) in other.counts {
            *self.counts.entry(k).or_default() += v;
        }
    }
}

fn cx(context: String, g: &ThreeGraph) -> Counterexample {
    Counterexample {
        context,
        graph: serialize_three_graph(g),
    }
}

/// Runs `instance(i, rng)` for `i < trials` in parallel and merges in index
/// order. Instance `i` draws from ChaCha8 seeded with `seed` on stream `i`.
fn seeded_trials<F>(suite: &str, trials: u64, seed: u64, instance: F) -> Result<SuiteReport>
where
    F: Fn(u64, &mut ChaCha8Rng) -> Result<SuiteReport> + Sync,
{
    let parts: Vec<Result<SuiteReport>> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i);
            instance(i, &mut rng)
        })
        .collect();
    let mut report = SuiteReport::new(suite);
    for part in parts {
        report.absorb(part?);
    }
    Ok(report)
}

fn lemma31_vertex(report: &mut SuiteReport, g: &ThreeGraph, v: Vertex, tag: &str) -> Result<()> {
    let holds = check_lemma_3_1(g, v)?;
    report.bump("lemma31", 1);
    report.check(holds, || cx(format!("{tag}: lemma fails at vertex {v}"), g));
    if let Some(w) = fast_witness_via_link(g, v)? {
        report.bump("fast_path_witnesses", 1);
        let ok = w.validates(g) && w.contains(v) && find_c6_through(g, v)?.is_some();
        report.check(ok, || {
            cx(
                format!(
                    "{tag}: fast-path witness {:?} for vertex {v} is unsound",
                    w.roles
                ),
                g,
            )
        });
    }
    Ok(())
}

/// Claim checks for every (u, v) and E3 edge around the uncovered vertices
/// listed in `uncovered`, plus the I(v) disjointness and bad-vertex bound.
fn claims_around(
    report: &mut SuiteReport,
    g: &ThreeGraph,
    uncovered: &[Vertex],
    which: Claims,
    tag: &str,
) -> Result<()> {
    let n = g.order();
    for &u in uncovered {
        let classes = classify_edges(g, u)?;
        if which.first {
            for v in (0..n).filter(|&v| v != u && g.codegree(u, v) >= 4) {
                let verdict = check_claim_4_1(g, u, v)?;
                report.bump("claim41", 1);
                report.check(verdict.holds, || {
                    cx(
                        format!(
                            "{tag}: link edges escape the partition at u = {u}, v = {v}, edges {:?}",
                            verdict.offending
                        ),
                        g,
                    )
                });
            }
        }
        if which.second {
            for &(v1, v2) in &classes.e3 {
                let verdict = check_claim_4_2(g, u, v1, v2)?;
                report.bump("claim42", 1);
                report.check(verdict.holds, || {
                    cx(
                        format!(
                            "{tag}: private sets meet at u = {u}, edge {v1} {v2}, shared {:?}",
                            verdict.offending
                        ),
                        g,
                    )
                });
            }
        }
        let sets: Vec<&BTreeSet<Vertex>> = classes.i_sets.values().collect();
        let disjoint = sets
            .iter()
            .enumerate()
            .all(|(i, a)| sets[i + 1..].iter().all(|b| a.is_disjoint(b)));
        report.check(disjoint, || {
            cx(format!("{tag}: I(v) sets around {u} overlap"), g)
        });
        let bad = classes.bad_vertices().count() as u64;
        let bound = (n as u64).div_ceil(ceil_sqrt(n as u128) as u64);
        report.check(bad <= bound, || {
            cx(
                format!("{tag}: {bad} bad vertices around {u} exceeds {bound}"),
                g,
            )
        });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Claims {
    pub first: bool,
    pub second: bool,
}

impl Claims {
    pub const BOTH: Claims = Claims {
        first: true,
        second: true,
    };
    pub const FIRST: Claims = Claims {
        first: true,
        second: false,
    };
    pub const SECOND: Claims = Claims {
        first: false,
        second: true,
    };
}

/// Everything gathered from one pass over the 2^20 labelled 3-graphs on six
/// vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeskScan {
    pub graphs: u64,
    pub non_covering: u64,
    /// max δ₂ and max δ₁ over graphs without a covering.
    pub max_codegree: usize,
    pub max_degree: usize,
    /// Graphs with δ₂ ≥ 2; each one must be fully covered.
    pub codegree2: SuiteReport,
    pub lemma31: SuiteReport,
    pub claims: SuiteReport,
}

#[derive(Default)]
struct DeskAcc {
    non_covering: u64,
    max_codegree: usize,
    max_degree: usize,
    codegree2: SuiteReport,
    lemma31: SuiteReport,
    claims: SuiteReport,
}

impl DeskAcc {
    fn merge(mut self, o: DeskAcc) -> DeskAcc {
        self.non_covering += o.non_covering;
        self.max_codegree = self.max_codegree.max(o.max_codegree);
        self.max_degree = self.max_degree.max(o.max_degree);
        self.codegree2.absorb(o.codegree2);
        self.lemma31.absorb(o.lemma31);
        self.claims.absorb(o.claims);
        self
    }

    fn step(&mut self, space: &MaskSpace, mask: u64) -> Result<()> {
        let n = space.order();
        let uncovered: Vec<Vertex> = (0..n).filter(|&v| !space.covers(mask, v)).collect();
        let codegree = space.min_codegree(mask);
        if !uncovered.is_empty() {
            self.non_covering += 1;
            self.max_codegree = self.max_codegree.max(codegree);
            self.max_degree = self.max_degree.max(space.min_degree(mask));
        }
        let needs_claims = uncovered.iter().any(|&u| {
            (0..n).any(|v| {
                v != u && (space.pair_masks()[pair_slot(n, u, v)] & mask).count_ones() >= 4
            })
        });
        if codegree < 2 && !needs_claims {
            return Ok(());
        }
        let g = space.to_graph(mask);
        if codegree >= 2 {
            self.codegree2.check(uncovered.is_empty(), || {
                cx(format!("uncovered vertices {uncovered:?}"), &g)
            });
            for v in 0..n {
                lemma31_vertex(&mut self.lemma31, &g, v, "n = 6 sweep")?;
            }
        }
        if needs_claims {
            claims_around(
                &mut self.claims,
                &g,
                &uncovered,
                Claims::BOTH,
                "n = 6 sweep",
            )?;
        }
        Ok(())
    }
}

/// Index of pair {a, b} among the lexicographically ordered pairs of `0..n`,
/// matching `MaskSpace::pair_masks`.
fn pair_slot(n: usize, a: Vertex, b: Vertex) -> usize {
    let (a, b) = (a.min(b), a.max(b));
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}

pub fn desk_scan(shards: usize) -> Result<DeskScan> {
    let plan = EnumerationPlan::all_labeled(6).with_shards(shards);
    let (acc, stats) = fold_3graphs(
        &plan,
        || Ok(DeskAcc::default()),
        |acc: &mut Result<DeskAcc>, space, mask| {
            if let Ok(a) = acc {
                if let Err(e) = a.step(space, mask) {
                    *acc = Err(e);
                }
            }
        },
        |a, b| Ok(a?.merge(b?)),
    )?;
    let acc = acc?;
    let mut codegree2 = acc.codegree2;
    codegree2.suite = "codegree2-covered".into();
    let mut lemma31 = acc.lemma31;
    lemma31.suite = "lemma31".into();
    let mut claims = acc.claims;
    claims.suite = "claims".into();
    Ok(DeskScan {
        graphs: stats.scanned,
        non_covering: acc.non_covering,
        max_codegree: acc.max_codegree,
        max_degree: acc.max_degree,
        codegree2,
        lemma31,
        claims,
    })
}

fn check_orders(ns: &[usize], lo: usize, hi: usize) -> Result<()> {
    if ns.is_empty() {
        return Err(Error::BadArguments("empty range of n".into()));
    }
    match ns.iter().find(|&&n| n < lo || n > hi) {
        Some(n) => Err(Error::BadArguments(format!(
            "n = {n} outside the supported {lo}..={hi}"
        ))),
        None => Ok(()),
    }
}

/// Random 3-graphs with δ₂ ≥ 2, n cycling through `ns`, density drawn from
/// [0.55, 0.9] and redrawn until the codegree condition holds. Every vertex
/// gets the lemma check and the fast-path soundness check.
pub fn lemma31_random(trials: u64, seed: u64, ns: &[usize]) -> Result<SuiteReport> {
    check_orders(ns, 6, 12)?;
    seeded_trials("lemma31", trials, seed, |i, rng| {
        let n = ns[(i % ns.len() as u64) as usize];
        let mut report = SuiteReport::new("lemma31");
        let g = loop {
            let p = rng.random_range(0.55..0.9);
            let g = random_3graph_with(n, p, rng);
            report.bump("draws", 1);
            if g.min_codegree() >= 2 {
                break g;
            }
        };
        report.bump("instances", 1);
        for v in 0..n {
            lemma31_vertex(&mut report, &g, v, &format!("trial {i}"))?;
        }
        Ok(report)
    })
}

/// Both claims on the second construction for each n in `ns`, at every
/// uncovered vertex.
pub fn claims_construction2(ns: RangeInclusive<usize>, which: Claims) -> Result<SuiteReport> {
    let ns: Vec<usize> = ns.collect();
    check_orders(&ns, 7, 200)?;
    let parts: Vec<Result<SuiteReport>> = ns
        .par_iter()
        .map(|&n| {
            let (g, _) = construction2(n)?;
            let uncovered: Vec<Vertex> = cover_report(&g).uncovered.into_iter().collect();
            let mut report = SuiteReport::new("claims");
            report.bump("uncovered_vertices", uncovered.len() as u64);
            claims_around(
                &mut report,
                &g,
                &uncovered,
                which,
                &format!("construction 2, n = {n}"),
            )?;
            Ok(report)
        })
        .collect();
    let mut report = SuiteReport::new("claims-construction2");
    for part in parts {
        report.absorb(part?);
    }
    Ok(report)
}

/// A sparse random 3-graph, or a random greedy graph with vertex 0
/// uncovered thinned by random deletions.
fn claim_candidate(n: usize, rng: &mut ChaCha8Rng) -> ThreeGraph {
    if rng.random_bool(0.5) {
        let p = rng.random_range(0.1..0.35);
        random_3graph_with(n, p, rng)
    } else {
        let mut order = colex_triples(n);
        order.shuffle(rng);
        let g = greedy_uncovered(n, &order);
        let q = rng.random_range(0.0..0.3);
        let kept: Vec<_> = g.edges().filter(|_| !rng.random_bool(q)).collect();
        ThreeGraph::new(n, kept).expect("subset of a valid graph")
    }
}

/// Draws until an instance meets the selected claims' preconditions at some
/// uncovered vertex, then checks every qualifying configuration.
pub fn claims_random(trials: u64, seed: u64, n: usize, which: Claims) -> Result<SuiteReport> {
    check_orders(&[n], 6, 12)?;
    const MAX_DRAWS: u64 = 100_000;
    let name = match (which.first, which.second) {
        (true, false) => "claim41",
        (false, true) => "claim42",
        _ => "claims",
    };
    seeded_trials(name, trials, seed, |i, rng| {
        let mut report = SuiteReport::new(name);
        for _ in 0..MAX_DRAWS {
            let g = claim_candidate(n, rng);
            report.bump("draws", 1);
            let mut qualifying = Vec::new();
            for u in 0..n {
                let first = which.first && (0..n).any(|v| v != u && g.codegree(u, v) >= 4);
                if !first && !which.second {
                    continue;
                }
                if find_c6_through(&g, u)?.is_some() {
                    continue;
                }
                if first || (which.second && !classify_edges(&g, u)?.e3.is_empty()) {
                    qualifying.push(u);
                }
            }
            if !qualifying.is_empty() {
                report.bump("instances", 1);
                claims_around(&mut report, &g, &qualifying, which, &format!("trial {i}"))?;
                return Ok(report);
            }
        }
        report.bump("unsatisfied_trials", 1);
        Ok(report)
    })
}

/// δ ≥ 2 forces a P₅ or 2P₃, for each order in `ms`.
pub fn structure(ms: RangeInclusive<usize>) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("structure");
    for m in ms {
        let (ok, bad) = verify_min_deg2_implies_pattern(m)?;
        report.bump(&format!("counterexamples_m{m}"), bad.len() as u64);
        report.checks += 1;
        if !ok {
            report.violations += 1;
            for h in bad
                .iter()
                .take(MAX_COUNTEREXAMPLES - report.counterexamples.len().min(MAX_COUNTEREXAMPLES))
            {
                report.counterexamples.push(Counterexample {
                    context: format!("m = {m}: minimum degree ≥ 2 with neither P5 nor 2P3"),
                    graph: serialize_simple_graph(h),
                });
            }
        }
    }
    Ok(report)
}

/// Brute-force K_{r+1}-free maximum against the Turán count, 2 ≤ r < n.
pub fn turan(ns: RangeInclusive<usize>) -> Result<SuiteReport> {
    let ns: Vec<usize> = ns.collect();
    check_orders(&ns, 3, 8)?;
    let mut report = SuiteReport::new("turan");
    for n in ns {
        for r in 2..n {
            let brute = max_edges_clique_free_bruteforce(n, r)?;
            let formula = turan_edge_count(n, r)?;
            report.checks += 1;
            if brute != formula {
                report.violations += 1;
                report.counterexamples.push(Counterexample {
                    context: format!("n = {n}, r = {r}: brute force {brute}, formula {formula}"),
                    graph: String::new(),
                });
            }
        }
    }
    Ok(report)
}

/// The first construction has δ₂ = 1 and no covered vertex.
pub fn construction1_suite(ns: &[usize]) -> Result<SuiteReport> {
    check_orders(ns, 4, 200)?;
    let mut report = SuiteReport::new("construction1");
    for &n in ns {
        let g = construction1(n)?;
        report.check(g.min_codegree() == 1, || {
            cx(format!("n = {n}: δ₂ = {}", g.min_codegree()), &g)
        });
        let cover = cover_report(&g);
        report.check(cover.uncovered.len() == n, || {
            cx(
                format!("n = {n}: only {} uncovered", cover.uncovered.len()),
                &g,
            )
        });
    }
    Ok(report)
}

/// The second construction: apex uncovered, δ₁ above the threshold, and
/// per-part degree formulas equal to the measured degrees.
pub fn construction2_suite(ns: RangeInclusive<usize>) -> Result<SuiteReport> {
    let ns: Vec<usize> = ns.collect();
    check_orders(&ns, 7, 400)?;
    let parts: Vec<Result<SuiteReport>> = ns
        .par_iter()
        .map(|&n| {
            let mut report = SuiteReport::new("construction2");
            let (g, p) = construction2(n)?;
            let tag = format!("n = {n}");
            let apex_free = find_c6_through(&g, p.apex)?.is_none();
            report.bump("apex_uncovered", 1);
            report.check(apex_free, || cx(format!("{tag}: apex is covered"), &g));
            let delta1 = g.min_degree();
            report.bump("threshold", 1);
            report.check(threshold_exceeded(delta1 as u64, n as u64), || {
                cx(
                    format!("{tag}: δ₁ = {delta1} does not exceed the threshold"),
                    &g,
                )
            });
            let formulas = construction2_degree_formulas(&p)?;
            let profile = g.degree_profile()?;
            report.bump("formulas", 1);
            let mismatched: Vec<Vertex> = (0..n)
                .filter(|&v| {
                    p.part_of(v).map(|part| formulas.of_part(part)) != Some(profile.degrees[v])
                })
                .collect();
            report.check(
                mismatched.is_empty() && formulas.min() == profile.min1,
                || {
                    cx(
                        format!("{tag}: degree formulas disagree at {mismatched:?}"),
                        &g,
                    )
                },
            );
            Ok(report)
        })
        .collect();
    let mut report = SuiteReport::new("construction2");
    for part in parts {
        report.absorb(part?);
    }
    Ok(report)
}
