//! Strongly connected components and the parity-annotated condensation.
//!
//! Components are computed with Tarjan's algorithm (iterative, one pass)
//! and re-indexed so that component ids are a topological order of the
//! condensation: every inter-component arc goes from a lower id to a
//! higher id. Each inter-component `(C, C', label)` family is summarized
//! by one representative original arc (minimum weight, ties broken by arc
//! id, i.e. by `(src, dst)`) plus a flag recording whether the family
//! contains a critical arc. Self-loops and intra-component arcs never
//! appear among the condensation arcs.

use std::collections::HashMap;

use crate::graph::{ArcId, NodeId, Sign, SignedDigraph, Weight};

/// Per-label summary of the arcs between one ordered component pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CondParity {
    /// Minimum-weight original arc with this label (ties: smallest arc id).
    pub representative: ArcId,
    pub weight: Weight,
    /// Whether any original arc of this family is critical.
    pub critical: bool,
}

/// An arc of the condensation DAG, annotated with the available parities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CondArc {
    pub from: u32,
    pub to: u32,
    /// Indexed by [`Sign::bit`]: `[positive, negative]`.
    pub parities: [Option<CondParity>; 2],
}

impl CondArc {
    pub fn parity(&self, s: Sign) -> Option<&CondParity> {
        self.parities[s.bit()].as_ref()
    }
}

/// The condensation of a signed digraph.
#[derive(Debug, Clone)]
pub struct Condensation {
    component_of: Vec<u32>,
    components: Vec<Vec<NodeId>>,
    dag_arcs: Vec<CondArc>,
}

impl Condensation {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn component_of(&self, v: NodeId) -> u32 {
        self.component_of[v.index()]
    }

    /// Component node lists; each is sorted ascending, and the component
    /// order is topological.
    pub fn components(&self) -> &[Vec<NodeId>] {
        &self.components
    }

    /// Condensation arcs sorted by `(from, to)`.
    pub fn dag_arcs(&self) -> &[CondArc] {
        &self.dag_arcs
    }

    /// True when every component is a single node (ignores self-loops).
    pub fn is_trivial(&self) -> bool {
        self.components.iter().all(|c| c.len() == 1)
    }
}

/// Tarjan condensation; components come out topologically ordered.
pub fn scc_condense(g: &SignedDigraph) -> Condensation {
    let n = g.node_count();
    let mut disc = vec![u32::MAX; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<u32> = Vec::new();
    let mut component_of = vec![u32::MAX; n];
    let mut components: Vec<Vec<NodeId>> = Vec::new();
    let mut counter = 0u32;
    // Explicit DFS frames: (node, index into its out-arc list).
    let mut frames: Vec<(u32, usize)> = Vec::new();

    for root in 0..n as u32 {
        if disc[root as usize] != u32::MAX {
            continue;
        }
        frames.push((root, 0));
        disc[root as usize] = counter;
        low[root as usize] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root as usize] = true;

        while let Some(&(v, ai)) = frames.last() {
            let outs = g.out_arcs(NodeId(v));
            if ai < outs.len() {
                frames.last_mut().unwrap().1 += 1;
                let w = g.arc(outs[ai]).dst.0;
                if disc[w as usize] == u32::MAX {
                    disc[w as usize] = counter;
                    low[w as usize] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w as usize] = true;
                    frames.push((w, 0));
                } else if on_stack[w as usize] {
                    low[v as usize] = low[v as usize].min(disc[w as usize]);
                }
            } else {
                frames.pop();
                if let Some(&(parent, _)) = frames.last() {
                    low[parent as usize] = low[parent as usize].min(low[v as usize]);
                }
                if low[v as usize] == disc[v as usize] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w as usize] = false;
                        component_of[w as usize] = components.len() as u32;
                        comp.push(NodeId(w));
                        if w == v {
                            break;
                        }
                    }
                    comp.sort();
                    components.push(comp);
                }
            }
        }
    }

    // Tarjan pops components in reverse topological order; flip ids so arcs
    // go from lower to higher component index.
    let k = components.len() as u32;
    components.reverse();
    for c in component_of.iter_mut() {
        *c = k - 1 - *c;
    }

    let mut families: HashMap<(u32, u32), [Option<CondParity>; 2]> = HashMap::new();
    for id in g.arc_ids() {
        let a = g.arc(id);
        let (cf, ct) = (component_of[a.src.index()], component_of[a.dst.index()]);
        if cf == ct {
            continue;
        }
        let entry = families.entry((cf, ct)).or_default();
        let slot = &mut entry[a.label.bit()];
        match slot {
            Some(p) => {
                p.critical |= a.critical;
                if a.weight < p.weight {
                    p.weight = a.weight;
                    p.representative = id;
                }
            }
            None => {
                *slot = Some(CondParity {
                    representative: id,
                    weight: a.weight,
                    critical: a.critical,
                })
            }
        }
    }
    let mut dag_arcs: Vec<CondArc> = families
        .into_iter()
        .map(|((from, to), parities)| CondArc { from, to, parities })
        .collect();
    dag_arcs.sort_by_key(|a| (a.from, a.to));

    Condensation {
        component_of,
        components,
        dag_arcs,
    }
}

/// Strong connectivity via one forward and one backward traversal.
pub fn is_strongly_connected(g: &SignedDigraph) -> bool {
    let n = g.node_count();
    if n <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut queue = vec![0u32];
    seen[0] = true;
    while let Some(v) = queue.pop() {
        for &aid in g.out_arcs(NodeId(v)) {
            let d = g.arc(aid).dst;
            if !seen[d.index()] {
                seen[d.index()] = true;
                queue.push(d.0);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return false;
    }
    seen.fill(false);
    seen[0] = true;
    queue.push(0);
    while let Some(v) = queue.pop() {
        for &aid in g.in_arcs(NodeId(v)) {
            let s = g.arc(aid).src;
            if !seen[s.index()] {
                seen[s.index()] = true;
                queue.push(s.0);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(text: &str) -> SignedDigraph {
        SignedDigraph::parse_edge_list(text).unwrap()
    }

    #[test]
    fn two_cycle_plus_tail() {
        let g = graph("a b +\nb a +\nb c +\n");
        let c = scc_condense(&g);
        assert_eq!(c.component_count(), 2);
        assert_eq!(c.components()[0], vec![NodeId(0), NodeId(1)]);
        assert_eq!(c.components()[1], vec![NodeId(2)]);
        assert_eq!(c.dag_arcs().len(), 1);
        let arc = &c.dag_arcs()[0];
        assert_eq!((arc.from, arc.to), (0, 1));
        assert!(arc.parity(Sign::Pos).is_some());
        assert!(arc.parity(Sign::Neg).is_none());
    }

    #[test]
    fn chain_components_are_topologically_ordered() {
        let g = graph("c b +\nb a +\n");
        let cond = scc_condense(&g);
        assert_eq!(cond.component_count(), 3);
        for arc in cond.dag_arcs() {
            assert!(arc.from < arc.to);
        }
        // Node `c` (id 0) is the source of the chain.
        assert_eq!(cond.component_of(NodeId(0)), 0);
        assert_eq!(cond.component_of(NodeId(2)), 2);
    }

    #[test]
    fn self_loop_stays_out_of_dag_arcs() {
        let g = graph("a a -\na b +\n");
        let c = scc_condense(&g);
        assert_eq!(c.component_count(), 2);
        assert!(c.is_trivial());
        assert_eq!(c.dag_arcs().len(), 1);
    }

    #[test]
    fn representative_prefers_low_weight_then_low_id() {
        let g = graph("a c + w=2\nb c + w=1\na b +\nb a +\n");
        let c = scc_condense(&g);
        let arc = &c.dag_arcs()[0];
        let rep = arc.parity(Sign::Pos).unwrap().representative;
        let a = g.arc(rep);
        assert_eq!(g.name(a.src), "b");
        assert_eq!(a.weight, Weight::one());
    }

    #[test]
    fn critical_flag_ors_across_family() {
        let g = graph("a b +\nb a +\na c + crit w=5\nb c + w=1\n");
        let c = scc_condense(&g);
        let p = c.dag_arcs()[0].parity(Sign::Pos).unwrap();
        assert!(p.critical);
        assert_eq!(g.name(g.arc(p.representative).src), "b");
    }

    #[test]
    fn strong_connectivity_checks() {
        assert!(is_strongly_connected(&graph("a b +\nb a -\n")));
        assert!(!is_strongly_connected(&graph("a b +\nb c +\n")));
        assert!(is_strongly_connected(&graph("x\n"))); // single isolated node
        assert!(!is_strongly_connected(&graph("a b +\nx\n")));
    }
}
