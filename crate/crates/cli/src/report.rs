//! JSON run reports and the DOT exporter.
//!
//! Every JSON document carries `"schema": "tredkit/1"` plus the command
//! name, so consumers can dispatch without sniffing fields. Timing lives
//! in a single `wall_ms` field; everything else is deterministic for a
//! fixed input and flag set.

use serde::Serialize;
use sha2::{Digest, Sha256};
use tredkit_core::{ReductionResult, Sign, SignedDigraph, Weight};

pub const SCHEMA: &str = "tredkit/1";

/// Provenance block shared by all reports.
#[derive(Serialize)]
pub struct InputInfo {
    pub path: String,
    pub sha256: String,
    pub nodes: usize,
    pub arcs: usize,
}

impl InputInfo {
    pub fn new(path: &str, text: &str, g: &SignedDigraph) -> InputInfo {
        InputInfo {
            path: path.to_string(),
            sha256: sha256_hex(text.as_bytes()),
            nodes: g.node_count(),
            arcs: g.arc_count(),
        }
    }
}

#[derive(Serialize)]
pub struct ArcInfo {
    pub src: String,
    pub dst: String,
    pub sign: char,
    pub critical: bool,
    pub weight: String,
}

#[derive(Serialize)]
pub struct NetworkInfo {
    pub nodes: Vec<String>,
    pub arcs: Vec<ArcInfo>,
}

impl NetworkInfo {
    pub fn new(g: &SignedDigraph) -> NetworkInfo {
        NetworkInfo {
            nodes: g.nodes().map(|v| g.name(v).to_string()).collect(),
            arcs: g.arcs().iter().map(|a| arc_info(g, a)).collect(),
        }
    }
}

fn arc_info(g: &SignedDigraph, a: &tredkit_core::Arc) -> ArcInfo {
    ArcInfo {
        src: g.name(a.src).to_string(),
        dst: g.name(a.dst).to_string(),
        sign: if a.label == Sign::Neg { '-' } else { '+' },
        critical: a.critical,
        weight: a.weight.to_string(),
    }
}

#[derive(Serialize)]
pub struct Bounds {
    /// Bipartite edge-cover lower bound on any strongly connected
    /// spanning subset; 0 when the input is not strongly connected.
    pub matching: usize,
    /// Bound reported by the solver itself, when it computed one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solver: Option<usize>,
}

/// Report for `reduce` and the reduction-shaped `oracle` objectives.
#[derive(Serialize)]
pub struct ReduceReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub input: InputInfo,
    pub algorithm: String,
    pub label_aware: bool,
    pub kept: usize,
    pub deleted: usize,
    pub total: usize,
    pub kept_weight: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub redundancy: Option<f64>,
    pub augmented: Vec<ArcInfo>,
    pub lower_bounds: Bounds,
    pub verified: bool,
    pub wall_ms: f64,
    pub network: NetworkInfo,
}

impl ReduceReport {
    pub fn new(
        command: &'static str,
        input: InputInfo,
        g: &SignedDigraph,
        r: &ReductionResult,
        label_aware: bool,
        matching: usize,
        wall_ms: f64,
        reduced: &SignedDigraph,
    ) -> ReduceReport {
        let kept_weight: Weight = r.kept.iter().map(|id| g.arc(id).weight).sum();
        ReduceReport {
            schema: SCHEMA,
            command,
            input,
            algorithm: r.algorithm.to_string(),
            label_aware,
            kept: r.stats.kept_count,
            deleted: r.stats.total_count - r.stats.kept_count,
            total: r.stats.total_count,
            kept_weight: kept_weight.to_string(),
            redundancy: r.stats.redundancy,
            augmented: r.augmentations.iter().map(|&id| arc_info(g, g.arc(id))).collect(),
            lower_bounds: Bounds {
                matching,
                solver: r.stats.lower_bound,
            },
            verified: r.verified,
            wall_ms,
            network: NetworkInfo::new(reduced),
        }
    }
}

#[derive(Serialize)]
pub struct TripleInfo {
    pub src: String,
    pub dst: String,
    pub sign: char,
}

#[derive(Serialize)]
pub struct ClosureReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub input: InputInfo,
    pub count: usize,
    pub triples: Vec<TripleInfo>,
}

#[derive(Serialize)]
pub struct ParityReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub input: InputInfo,
    pub class: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Serialize)]
pub struct ArborescenceReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub input: InputInfo,
    pub root: String,
    pub orientation: &'static str,
    pub weight: String,
    pub arc_count: usize,
    pub network: NetworkInfo,
}

#[derive(Serialize)]
pub struct LpValue {
    pub src: String,
    pub dst: String,
    pub sign: char,
    pub value: String,
}

#[derive(Serialize)]
pub struct LpReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub input: InputInfo,
    pub variant: String,
    pub objective: String,
    pub objective_f64: f64,
    pub integral: bool,
    pub constraints: usize,
    pub x: Vec<LpValue>,
}

#[derive(Serialize)]
pub struct DeletionsReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub input: InputInfo,
    pub label_aware: bool,
    pub max_deletions: usize,
    pub wall_ms: f64,
}

#[derive(Serialize)]
pub struct SynthReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub input: InputInfo,
    pub statements: usize,
    pub nodes: usize,
    pub arcs: usize,
    pub pseudonodes: Vec<String>,
    pub kept: usize,
    pub deleted: usize,
    pub redundancy: f64,
    pub redundancy_method: &'static str,
    pub stranded: Vec<String>,
    pub warnings: Vec<String>,
    pub verified: bool,
    pub wall_ms: f64,
    pub network: NetworkInfo,
}

#[derive(Serialize)]
pub struct RedundancyReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub input: InputInfo,
    pub redundancy: f64,
    pub kept: usize,
    pub total: usize,
    pub algorithm: String,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn to_json<T: Serialize>(report: &T) -> String {
    serde_json::to_string_pretty(report).expect("reports contain no non-serializable values")
}

fn dot_quote(name: &str) -> String {
    let mut out = String::with_capacity(name.len() + 2);
    out.push('"');
    for c in name.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Render a network as DOT. Inhibitory arcs get `arrowhead=tee`, critical
/// arcs are bold, and non-unit weights become edge labels.
pub fn dot_string(g: &SignedDigraph) -> String {
    let mut s = String::from("digraph {\n");
    for v in g.nodes() {
        s.push_str("  ");
        s.push_str(&dot_quote(g.name(v)));
        s.push_str(";\n");
    }
    for a in g.arcs() {
        let mut attrs: Vec<String> = Vec::new();
        if a.label == Sign::Neg {
            attrs.push("arrowhead=tee".to_string());
        }
        if a.critical {
            attrs.push("style=bold".to_string());
        }
        if a.weight != Weight::one() {
            attrs.push(format!("label=\"{}\"", a.weight));
        }
        s.push_str("  ");
        s.push_str(&dot_quote(g.name(a.src)));
        s.push_str(" -> ");
        s.push_str(&dot_quote(g.name(a.dst)));
        if !attrs.is_empty() {
            s.push_str(" [");
            s.push_str(&attrs.join(", "));
            s.push(']');
        }
        s.push_str(";\n");
    }
    s.push_str("}\n");
    s
}

/// DOT rendering of closure triples (arcs that need not exist in the
/// input graph).
pub fn dot_triples(g: &SignedDigraph, triples: &[(tredkit_core::NodeId, tredkit_core::NodeId, Sign)]) -> String {
    let mut s = String::from("digraph {\n");
    for v in g.nodes() {
        s.push_str("  ");
        s.push_str(&dot_quote(g.name(v)));
        s.push_str(";\n");
    }
    for &(u, v, p) in triples {
        s.push_str("  ");
        s.push_str(&dot_quote(g.name(u)));
        s.push_str(" -> ");
        s.push_str(&dot_quote(g.name(v)));
        if p == Sign::Neg {
            s.push_str(" [arrowhead=tee]");
        }
        s.push_str(";\n");
    }
    s.push_str("}\n");
    s
}
