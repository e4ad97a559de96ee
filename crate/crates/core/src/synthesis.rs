//! Network synthesis from interaction evidence, and the redundancy measure.
//!
//! Evidence files are UTF-8 text, one statement per line, `#` starting a
//! comment. Two-node statements relate a source directly to a target:
//!
//! ```text
//! A -> B          # A promotes B
//! A -| B          # A inhibits B
//! ```
//!
//! Three-node statements say that an actor C influences the interaction
//! between A and B, written `C <op> (A -> B)` or `C <op> (A -| B)`:
//!
//! * `=>` / `=|` — C promotes/inhibits the process through which A acts
//!   on B; neither the A-to-B path nor C's point of action is pinned
//!   down, so a synthetic intermediate node is introduced.
//! * `=cat=>` / `=cat|` — catalytic: A is a substrate converted into B,
//!   so both A and C act on B directly.
//! * `=up=>` / `=up|` — upstream: C is known to act on A directly.
//!
//! Arcs from direct, catalytic, and upstream statements are critical
//! (every reduction retains them). Double-causal statements expand into a
//! synthetic "pseudonode" P with non-critical arcs A->P (positive), P->B
//! (the inner sign), and C->P (the outer sign); the reducer is free to
//! reroute or drop these as long as the parity closure is preserved.

use std::collections::HashSet;

use crate::graph::{DigraphBuilder, NodeId, Sign, SignedDigraph, Weight};
use crate::oracle::exact_min;
use crate::reduce::ReductionResult;
use crate::solvers::{best_reduction, pseudonode_transform};
use crate::{Error, Result};

/// The four statement shapes of the evidence grammar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EvidenceKind {
    /// `A -> B` / `A -| B`: A acts on B directly.
    Direct,
    /// `C => (A -> B)`: C influences the A-to-B process at an unknown
    /// point; realized through a pseudonode.
    DoubleCausal,
    /// `C =cat=> (A -> B)`: C catalyzes the conversion of A into B, so
    /// both A and C act on B.
    Catalytic,
    /// `C =up=> (A -> B)`: C acts on A, which acts on B.
    UpstreamDirect,
}

/// One parsed evidence statement.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Evidence {
    pub kind: EvidenceKind,
    /// The outer node C; `None` for [`EvidenceKind::Direct`].
    pub actor: Option<String>,
    /// The inner source A.
    pub source: String,
    /// The inner target B.
    pub target: String,
    /// Sign of C's influence; `None` for [`EvidenceKind::Direct`].
    pub sign_outer: Option<Sign>,
    /// Sign of the A-to-B interaction.
    pub sign_inner: Sign,
}

/// A synthetic node introduced for a double-causal statement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudoNode {
    pub id: NodeId,
    /// The statement that created this node.
    pub origin: Evidence,
}

/// A signed digraph assembled from evidence, with its synthetic nodes and
/// any curation warnings.
#[derive(Debug, Clone)]
pub struct EvidenceGraph {
    pub graph: SignedDigraph,
    pub pseudonodes: Vec<PseudoNode>,
    /// Human-readable notes about conflicting reports. Conflicts are kept
    /// in the graph, never auto-resolved.
    pub warnings: Vec<String>,
}

/// Result of the full synthesis pipeline.
#[derive(Debug, Clone)]
pub struct SynthesisOutput {
    pub evidence: Vec<Evidence>,
    /// The assembled evidence graph, before reduction.
    pub graph: SignedDigraph,
    /// The reduction computed on [`SynthesisOutput::graph`].
    pub result: ReductionResult,
    /// The reduced network: kept arcs only, stranded pseudonodes dropped.
    pub reduced: SignedDigraph,
    pub pseudonodes: Vec<PseudoNode>,
    /// Pseudonodes left without an in-arc or out-arc by the reduction,
    /// removed from `reduced` together with their arcs.
    pub stranded: Vec<NodeId>,
    pub warnings: Vec<String>,
    /// `1 - kept/total` over the evidence graph; 0 for arc-less input.
    pub redundancy: f64,
}

fn inner_sign(token: &str) -> Option<Sign> {
    match token {
        "->" => Some(Sign::Pos),
        "-|" => Some(Sign::Neg),
        _ => None,
    }
}

fn outer_op(token: &str) -> Option<(EvidenceKind, Sign)> {
    match token {
        "=>" => Some((EvidenceKind::DoubleCausal, Sign::Pos)),
        "=|" => Some((EvidenceKind::DoubleCausal, Sign::Neg)),
        "=cat=>" => Some((EvidenceKind::Catalytic, Sign::Pos)),
        "=cat|" => Some((EvidenceKind::Catalytic, Sign::Neg)),
        "=up=>" => Some((EvidenceKind::UpstreamDirect, Sign::Pos)),
        "=up|" => Some((EvidenceKind::UpstreamDirect, Sign::Neg)),
        _ => None,
    }
}

fn is_op(token: &str) -> bool {
    inner_sign(token).is_some() || outer_op(token).is_some()
}

fn parse_err(line: usize, msg: &str) -> Error {
    Error::Parse {
        line,
        msg: msg.to_string(),
    }
}

/// Parse an evidence file into statements. Duplicate statements are
/// collapsed, keeping first-occurrence order. Errors carry 1-based line
/// numbers.
pub fn parse_evidence(text: &str) -> Result<Vec<Evidence>> {
    let mut out: Vec<Evidence> = Vec::new();
    let mut seen: HashSet<Evidence> = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        // Parentheses only group; whitespace does the tokenizing.
        let body = body.replace(['(', ')'], " ");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        let ev = match tokens.as_slice() {
            [] => continue,
            [_, op] if is_op(op) => return Err(parse_err(line, "missing target")),
            [a, op, b] => {
                if is_op(a) || is_op(b) {
                    return Err(parse_err(line, "malformed evidence line"));
                }
                let Some(sign) = inner_sign(op) else {
                    if outer_op(op).is_some() {
                        return Err(parse_err(line, "missing inner relation"));
                    }
                    return Err(parse_err(line, "unknown relation"));
                };
                Evidence {
                    kind: EvidenceKind::Direct,
                    actor: None,
                    source: a.to_string(),
                    target: b.to_string(),
                    sign_outer: None,
                    sign_inner: sign,
                }
            }
            [c, outer, a, inner, b] => {
                if is_op(c) || is_op(a) || is_op(b) {
                    return Err(parse_err(line, "malformed evidence line"));
                }
                let Some((kind, sign_outer)) = outer_op(outer) else {
                    return Err(parse_err(line, "unknown outer relation"));
                };
                let Some(sign_inner) = inner_sign(inner) else {
                    return Err(parse_err(line, "unknown inner relation"));
                };
                if a == b {
                    return Err(parse_err(line, "inner source and target must differ"));
                }
                Evidence {
                    kind,
                    actor: Some(c.to_string()),
                    source: a.to_string(),
                    target: b.to_string(),
                    sign_outer: Some(sign_outer),
                    sign_inner,
                }
            }
            _ => return Err(parse_err(line, "malformed evidence line")),
        };
        if seen.insert(ev.clone()) {
            out.push(ev);
        }
    }
    Ok(out)
}

/// Assemble the signed digraph a list of evidence statements describes.
///
/// Direct statements add a critical arc source->target. Catalytic ones
/// additionally add a critical actor->target arc; upstream ones a
/// critical actor->source arc. Double-causal ones add a fresh pseudonode
/// P with non-critical arcs source->P (positive), P->target (inner sign),
/// and actor->P (outer sign).
///
/// Oppositely signed reports between the same pair of named nodes are
/// both kept, with a warning per pair.
pub fn build_graph(evidence: &[Evidence]) -> EvidenceGraph {
    let mut b = DigraphBuilder::new();
    let real_names: HashSet<&str> = evidence
        .iter()
        .flat_map(|ev| {
            ev.actor
                .as_deref()
                .into_iter()
                .chain([ev.source.as_str(), ev.target.as_str()])
        })
        .collect();
    let mut pseudonodes: Vec<(NodeId, Evidence)> = Vec::new();
    let mut counter = 0usize;
    for ev in evidence {
        let actor = ev.actor.as_deref().map(|c| b.node(c));
        let src = b.node(&ev.source);
        let dst = b.node(&ev.target);
        match ev.kind {
            EvidenceKind::Direct => {
                b.add_arc_full(src, dst, ev.sign_inner, Weight::one(), true);
            }
            EvidenceKind::Catalytic => {
                b.add_arc_full(src, dst, ev.sign_inner, Weight::one(), true);
                b.add_arc_full(actor.unwrap(), dst, ev.sign_outer.unwrap(), Weight::one(), true);
            }
            EvidenceKind::UpstreamDirect => {
                b.add_arc_full(src, dst, ev.sign_inner, Weight::one(), true);
                b.add_arc_full(actor.unwrap(), src, ev.sign_outer.unwrap(), Weight::one(), true);
            }
            EvidenceKind::DoubleCausal => {
                let name = loop {
                    counter += 1;
                    let candidate = format!("~p{counter}");
                    if !real_names.contains(candidate.as_str()) {
                        break candidate;
                    }
                };
                let p = b.node(&name);
                b.add_arc(src, p, Sign::Pos);
                b.add_arc(p, dst, ev.sign_inner);
                b.add_arc(actor.unwrap(), p, ev.sign_outer.unwrap());
                pseudonodes.push((p, ev.clone()));
            }
        }
    }
    let graph = b.build();
    let pseudo_set: HashSet<NodeId> = pseudonodes.iter().map(|&(id, _)| id).collect();
    let mut warnings = Vec::new();
    for w in graph.arcs().windows(2) {
        let (x, y) = (&w[0], &w[1]);
        if x.src == y.src
            && x.dst == y.dst
            && x.label != y.label
            && !pseudo_set.contains(&x.src)
            && !pseudo_set.contains(&x.dst)
        {
            warnings.push(format!(
                "conflicting reports: {} both promotes and inhibits {}",
                graph.name(x.src),
                graph.name(x.dst)
            ));
        }
    }
    EvidenceGraph {
        graph,
        pseudonodes: pseudonodes
            .into_iter()
            .map(|(id, origin)| PseudoNode { id, origin })
            .collect(),
        warnings,
    }
}

/// Full pipeline: parse evidence, assemble the graph, reduce it with
/// [`best_reduction`], and drop pseudonodes the reduction stranded. The
/// reduced network realizes every signed relation of the evidence graph
/// and keeps every critical arc.
pub fn synthesize(text: &str) -> Result<SynthesisOutput> {
    let evidence = parse_evidence(text)?;
    let eg = build_graph(&evidence);
    let result = best_reduction(&eg.graph)?;
    let ids: Vec<NodeId> = eg.pseudonodes.iter().map(|p| p.id).collect();
    let (final_kept, stranded) = pseudonode_transform(&eg.graph, &result.kept, &ids);
    // Node ids survive `restrict_arcs`, so stranded ids stay valid; their
    // incident arcs are already outside `final_kept`.
    let (mut reduced, _) = eg.graph.restrict_arcs(&final_kept)?;
    if !stranded.is_empty() {
        let mut keep = vec![true; reduced.node_count()];
        for v in &stranded {
            keep[v.index()] = false;
        }
        reduced = reduced.retain_nodes(&keep).0;
    }
    let redundancy = result.stats.redundancy.unwrap_or(0.0);
    Ok(SynthesisOutput {
        evidence,
        graph: eg.graph,
        result,
        reduced,
        pseudonodes: eg.pseudonodes,
        stranded,
        warnings: eg.warnings,
        redundancy,
    })
}

/// The redundancy measure `R = 1 - kept/total`, with the kept count taken
/// from [`best_reduction`]. Since the heuristics may keep more arcs than
/// the optimum, this is a lower bound on the exact measure; see
/// [`redundancy_exact`].
pub fn redundancy(g: &SignedDigraph) -> Result<f64> {
    if g.arc_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let result = best_reduction(g)?;
    Ok(result.stats.redundancy.expect("graph has arcs"))
}

/// The exact redundancy measure, with the kept count taken from the
/// brute-force oracle. Fails with [`Error::TooLarge`] beyond the oracle
/// budget.
pub fn redundancy_exact(g: &SignedDigraph) -> Result<f64> {
    if g.arc_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let result = exact_min(g, true)?;
    Ok(result.stats.redundancy.expect("graph has arcs"))
}
