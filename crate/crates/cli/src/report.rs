use std::time::Duration;

use ltc_core::format::serialize_three_graph;
use ltc_core::suites::SuiteReport;
use ltc_core::{C6Witness, ThreeGraph};
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Everything but `wall_time_ms` is a pure function of the command line and
/// the input bytes.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub input_digest: String,
    pub toolkit_version: &'static str,
    pub seed: Option<u64>,
    pub payload: Value,
    pub wall_time_ms: f64,
}

impl RunReport {
    pub fn new(
        command: Vec<String>,
        input: &[u8],
        seed: Option<u64>,
        payload: Value,
        wall: Duration,
    ) -> Self {
        RunReport {
            command,
            input_digest: format!("sha256:{}", hex(&Sha256::digest(input))),
            toolkit_version: env!("CARGO_PKG_VERSION"),
            seed,
            payload,
            wall_time_ms: wall.as_secs_f64() * 1e3,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Serialize)]
pub struct WitnessJson {
    /// v1..v6 in order; edges are v1v2v3, v3v4v5, v5v6v1.
    pub roles: [usize; 6],
    pub graph: String,
}

impl WitnessJson {
    pub fn new(w: &C6Witness, n: usize) -> Self {
        let g = ThreeGraph::new(n, w.edges()).expect("witness edges are valid triples");
        WitnessJson {
            roles: w.roles,
            graph: serialize_three_graph(&g),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CounterexampleJson {
    pub context: String,
    pub graph: String,
}

#[derive(Debug, Serialize)]
pub struct SuiteJson {
    pub suite: String,
    pub passed: bool,
    pub checks: u64,
    pub violations: u64,
    pub counts: std::collections::BTreeMap<String, u64>,
    pub counterexamples: Vec<CounterexampleJson>,
}

impl From<SuiteReport> for SuiteJson {
    fn from(r: SuiteReport) -> Self {
        SuiteJson {
            passed: r.passed(),
            suite: r.suite,
            checks: r.checks,
            violations: r.violations,
            counts: r.counts,
            counterexamples: r
                .counterexamples
                .into_iter()
                .map(|c| CounterexampleJson {
                    context: c.context,
                    graph: c.graph,
                })
                .collect(),
        }
    }
}
