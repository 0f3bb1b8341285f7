//! The versioned JSON report every CLI command emits.
//!
//! Schema version "1"; the machine-readable schema ships in
//! `schemas/report.v1.json`. Reading is strict: unknown fields are rejected
//! so drift between producers and consumers surfaces immediately. Every
//! numeric result carries the rule that produced it (construction, BFS,
//! solver, counting, greedy, scan, or paper-trusted). Timing fields are
//! informational and excluded from determinism comparisons.

use serde::{Deserialize, Serialize};

use crate::certify::{Certificate, LemmaReport, TheoremReport, TrustLevel};
use crate::packing::{BranchOrdering, CountingVerdict, SolveStatus, SolverConfig, Violation};

pub const REPORT_SCHEMA_VERSION: &str = "1";

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub schema_version: String,
    pub command: String,
    pub inputs: Inputs,
    pub results: Results,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    pub timing: Timing,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            schema_version: REPORT_SCHEMA_VERSION.into(),
            command: command.into(),
            inputs: Inputs::default(),
            results: Results::default(),
            certificate: None,
            timing: Timing { total_ms: 0.0 },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize cleanly")
    }

    /// Strict parse: any unknown field is an error.
    pub fn from_json(text: &str) -> Result<Report, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, Default)]
#[serde(deny_unknown_fields)]
pub struct Inputs {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input_path: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lemma: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theorem: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub enumerate: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decide: Option<u16>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k_max_diam: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trust_diameter: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solver: Option<SolverSettings>,
}

/// Solver configuration as recorded in reports.
#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct SolverSettings {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub time_limit_secs: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub node_limit: Option<u64>,
    pub ordering: BranchOrdering,
    pub use_conflict_check: bool,
    pub use_singleton_rule: bool,
    pub use_packing_size_bounds: bool,
}

impl From<&SolverConfig> for SolverSettings {
    fn from(cfg: &SolverConfig) -> Self {
        SolverSettings {
            time_limit_secs: cfg.time_limit.map(|d| d.as_secs_f64()),
            node_limit: cfg.node_limit,
            ordering: cfg.ordering,
            use_conflict_check: cfg.use_conflict_check,
            use_singleton_rule: cfg.use_singleton_rule,
            use_packing_size_bounds: cfg.use_packing_size_bounds,
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq, Eq, Default)]
#[serde(rename_all = "lowercase")]
pub enum ReportStatus {
    #[default]
    Ok,
    Verified,
    Refuted,
    Sat,
    Unsat,
    Timeout,
}

impl ReportStatus {
    /// The CLI exit-code contract: 0 success/verified/SAT, 1 refuted/UNSAT,
    /// 3 timeout/inconclusive. Usage and I/O problems exit 2 before a
    /// report exists.
    pub fn exit_code(self) -> i32 {
        match self {
            ReportStatus::Ok | ReportStatus::Verified | ReportStatus::Sat => 0,
            ReportStatus::Refuted | ReportStatus::Unsat => 1,
            ReportStatus::Timeout => 3,
        }
    }
}

/// Where a numeric result came from.
#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Construction,
    Bfs,
    Solver,
    Counting,
    Greedy,
    Scan,
    PaperTrusted,
}

/// A number tagged with the rule that produced it.
#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Tagged {
    pub value: u64,
    pub provenance: Provenance,
}

impl Tagged {
    pub fn new(value: u64, provenance: Provenance) -> Self {
        Tagged { value, provenance }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct DecideOutcome {
    pub palette: u16,
    pub status: SolveStatus,
    pub nodes: u64,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct PackingOutcome {
    pub radius: u32,
    pub size: u64,
    pub witness: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub all_maximum: Option<Vec<Vec<u32>>>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct GraphDump {
    pub vertex_count: u64,
    pub edge_count: u64,
    pub edges: Vec<(u32, u32)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, Default)]
#[serde(deny_unknown_fields)]
pub struct Results {
    pub status: ReportStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_count: Option<Tagged>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_count: Option<Tagged>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<Tagged>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_profile: Option<Vec<(u32, u64)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub connected: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diameter: Option<Tagged>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diameter_bound: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi_rho_lower: Option<Tagged>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi_rho_upper: Option<Tagged>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi_rho: Option<Tagged>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counting: Option<CountingVerdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decide: Option<DecideOutcome>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_coloring: Option<Vec<u16>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violations: Option<Vec<Violation>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub packing: Option<PackingOutcome>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lemma: Option<LemmaReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theorem: Option<TheoremReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphDump>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels_sidecar: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trust_level: Option<TrustLevel>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct Timing {
    pub total_ms: f64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_strictness() {
        let mut report = Report::new("analyze");
        report.inputs.family = Some("h".into());
        report.results.status = ReportStatus::Verified;
        report.results.diameter = Some(Tagged::new(4, Provenance::Bfs));
        let text = report.to_json();
        let back = Report::from_json(&text).unwrap();
        assert_eq!(back.command, "analyze");
        assert_eq!(back.results.diameter.unwrap().value, 4);

        // unknown fields are rejected
        let doctored = text.replace("\"command\"", "\"intruder\": 1, \"command\"");
        assert!(Report::from_json(&doctored).is_err());
    }

    #[test]
    fn exit_codes_are_exhaustive() {
        assert_eq!(ReportStatus::Ok.exit_code(), 0);
        assert_eq!(ReportStatus::Verified.exit_code(), 0);
        assert_eq!(ReportStatus::Sat.exit_code(), 0);
        assert_eq!(ReportStatus::Refuted.exit_code(), 1);
        assert_eq!(ReportStatus::Unsat.exit_code(), 1);
        assert_eq!(ReportStatus::Timeout.exit_code(), 3);
    }
}
