//! Bounded breadth-first exploration of the mutation graph of a Fano
//! polygon, with singularity content and degree verified at every step.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::lattice::{DualVector, LatticePoint, Rational};
use crate::mutation::{candidate_mutations, same_content};
use crate::normal_form::{normal_form, NormalForm};
use crate::polygon::{FanoPolygon, PolygonSingularityContent, WpsWeights};

/// One lattice-isomorphism class discovered in the orbit.
#[derive(Debug, Clone)]
pub struct OrbitNode {
    pub id: usize,
    /// Polygon as discovered (a genuine mutation image of the root).
    pub polygon: FanoPolygon,
    pub normal_form: NormalForm,
    pub content: PolygonSingularityContent,
    pub degree: Rational,
    pub weights: Option<WpsWeights>,
    pub depth: usize,
}

/// Undirected edge, labeled by the factor that produced it.
#[derive(Debug, Clone)]
pub struct OrbitEdge {
    pub a: usize,
    pub b: usize,
    pub h: DualVector,
    pub f: LatticePoint,
}

/// Mutation graph up to the requested depth and node budget.
#[derive(Debug, Clone)]
pub struct MutationGraph {
    pub nodes: Vec<OrbitNode>,
    pub edges: Vec<OrbitEdge>,
    /// True when the node budget cut the exploration short.
    pub truncated: bool,
    pub max_depth: usize,
}

/// Explores mutations breadth-first, deduplicating by normal form. Panics if
/// any mutation fails to preserve singularity content or degree: that is an
/// implementation bug, not a result.
pub fn explore_orbit(p: &FanoPolygon, max_depth: usize, max_nodes: usize) -> MutationGraph {
    let max_nodes = max_nodes.max(1);
    let mut nodes: Vec<OrbitNode> = Vec::new();
    let mut index: BTreeMap<NormalForm, usize> = BTreeMap::new();
    let mut edges: Vec<OrbitEdge> = Vec::new();
    let mut edge_seen: std::collections::BTreeSet<(usize, usize)> = Default::default();
    let mut truncated = false;

    let root_nf = normal_form(p);
    nodes.push(OrbitNode {
        id: 0,
        polygon: p.clone(),
        normal_form: root_nf.clone(),
        content: p.singularity_content(),
        degree: p.degree(),
        weights: p.wps_weights(),
        depth: 0,
    });
    index.insert(root_nf, 0);

    let mut layer: Vec<usize> = vec![0];
    for depth in 0..max_depth {
        // Deterministic order: expand by normal-form key.
        layer.sort_by(|a, b| nodes[*a].normal_form.cmp(&nodes[*b].normal_form));
        let mut next_layer: Vec<usize> = Vec::new();
        for &src in &layer {
            let source = nodes[src].polygon.clone();
            for (factor, target) in candidate_mutations(&source) {
                assert!(
                    same_content(&source, &target),
                    "mutation violated singularity content: {} -> {} via h={}",
                    source,
                    target,
                    factor.h()
                );
                assert_eq!(
                    source.degree(),
                    target.degree(),
                    "mutation violated the degree: {} -> {} via h={}",
                    source,
                    target,
                    factor.h()
                );
                let nf = normal_form(&target);
                let dst = match index.get(&nf) {
                    Some(&id) => id,
                    None => {
                        if nodes.len() >= max_nodes {
                            truncated = true;
                            continue;
                        }
                        let id = nodes.len();
                        nodes.push(OrbitNode {
                            id,
                            polygon: target.clone(),
                            normal_form: nf.clone(),
                            content: target.singularity_content(),
                            degree: target.degree(),
                            weights: target.wps_weights(),
                            depth: depth + 1,
                        });
                        index.insert(nf, id);
                        next_layer.push(id);
                        id
                    }
                };
                let key = (src.min(dst), src.max(dst));
                if edge_seen.insert(key) {
                    edges.push(OrbitEdge {
                        a: key.0,
                        b: key.1,
                        h: factor.h().clone(),
                        f: factor.f().clone(),
                    });
                }
            }
        }
        if next_layer.is_empty() {
            break;
        }
        layer = next_layer;
    }

    MutationGraph {
        nodes,
        edges,
        truncated,
        max_depth,
    }
}

fn vertices_json(p: &FanoPolygon) -> Value {
    crate::format::polygon_to_json(p)["vertices"].clone()
}

fn content_json(c: &PolygonSingularityContent) -> Value {
    json!({
        "n": c.n.to_string(),
        "basket": c.basket.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
    })
}

impl MutationGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn to_json(&self) -> Value {
        let root = &self.nodes[0];
        json!({
            "schema": "1",
            "max_depth": self.max_depth,
            "truncated": self.truncated,
            "shared_content": content_json(&root.content),
            "shared_degree": crate::format::format_rational(&root.degree),
            "nodes": self.nodes.iter().map(|n| {
                json!({
                    "id": n.id,
                    "depth": n.depth,
                    "vertices": vertices_json(&n.polygon),
                    "content": content_json(&n.content),
                    "degree": crate::format::format_rational(&n.degree),
                    "weights": n.weights.as_ref().map(|w| json!({
                        "weights": w.weights.iter().map(BigInt::to_string).collect::<Vec<_>>(),
                        "index": w.index.to_string(),
                    })),
                })
            }).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|e| {
                json!({
                    "a": e.a,
                    "b": e.b,
                    "h": [e.h.x.to_string(), e.h.y.to_string()],
                    "f": [e.f.x.to_string(), e.f.y.to_string()],
                })
            }).collect::<Vec<_>>(),
        })
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph mutation_orbit {\n");
        for n in &self.nodes {
            let label = match &n.weights {
                Some(w) => format!(
                    "P({},{},{})",
                    w.weights[0], w.weights[1], w.weights[2]
                ),
                None => format!("{}-gon", n.polygon.len()),
            };
            out.push_str(&format!(
                "  n{} [label=\"{}\\ndepth {}\"];\n",
                n.id, label, n.depth
            ));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "  n{} -- n{} [label=\"h=({},{})\"];\n",
                e.a, e.b, e.h.x, e.h.y
            ));
        }
        out.push_str("}\n");
        out
    }
}
