//! JSON and DOT renderings of a Hasse poset.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::homology::{is_uniserial, loewy_diagram};
use crate::literal::{module_from_json, module_to_json};
use crate::tilting::{HassePoset, PairKey, TauTilt};

pub fn poset_to_json(t: &TauTilt, poset: &HassePoset) -> Value {
    let alg = t.alg;
    let nodes: Vec<Value> = poset
        .nodes
        .iter()
        .enumerate()
        .map(|(i, n)| {
            let modules: Vec<Value> = n
                .pair
                .summands
                .iter()
                .map(|m| {
                    let dims: Vec<usize> = m.dims().to_vec();
                    let mut entry = json!({
                        "label": t.label_of(m),
                        "dims": dims,
                        "rep": module_to_json(alg, m),
                    });
                    if is_uniserial(alg, m) {
                        entry["diagram"] = json!(loewy_diagram(alg, m));
                    }
                    entry
                })
                .collect();
            json!({
                "id": i,
                "key": n.key.to_string(),
                "label": n.key.pretty(),
                "modules": modules,
                "support": n.key.support,
            })
        })
        .collect();
    let arrows: Vec<Value> =
        poset.arrows.iter().map(|a| json!({"from": a.from, "to": a.to, "summand": a.summand})).collect();
    json!({
        "algebra": alg.name(),
        "vertex_count": poset.vertex_count,
        "complete": poset.complete,
        "nodes": nodes,
        "arrows": arrows,
    })
}

/// Canonical node list for golden files: `{key, label}` records sorted by key.
pub fn golden_nodes(poset: &HassePoset) -> Value {
    let mut keys: Vec<&PairKey> = poset.nodes.iter().map(|n| &n.key).collect();
    keys.sort();
    Value::Array(keys.into_iter().map(|k| json!({"key": k.to_string(), "label": k.pretty()})).collect())
}

/// Rebuilds each node's pair from its stored matrices and recomputes keys.
pub fn keys_from_json(alg: &BoundQuiverAlgebra, value: &Value) -> Result<Vec<(String, PairKey)>> {
    let t = TauTilt::new(alg);
    let nodes = value["nodes"].as_array().ok_or_else(|| Error::Json("missing `nodes`".into()))?;
    nodes
        .iter()
        .map(|n| {
            let stored = n["key"].as_str().ok_or_else(|| Error::Json("node without `key`".into()))?.to_string();
            let modules = n["modules"].as_array().ok_or_else(|| Error::Json("node without `modules`".into()))?;
            let summands = modules.iter().map(|m| module_from_json(alg, &m["rep"])).collect::<Result<Vec<_>>>()?;
            let support = n["support"]
                .as_array()
                .ok_or_else(|| Error::Json("node without `support`".into()))?
                .iter()
                .map(|v| alg.vertex(v.as_str().unwrap_or_default()))
                .collect::<Result<Vec<_>>>()?;
            Ok((stored, t.key(&t.from_summands(&summands, &support))))
        })
        .collect()
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT digraph; nodes in `highlight` are drawn dashed and filled.
pub fn poset_to_dot(name: &str, poset: &HassePoset, highlight: Option<&BTreeSet<usize>>) -> Result<String> {
    if let Some(h) = highlight {
        if h.iter().any(|&i| i >= poset.nodes.len()) {
            return Err(Error::HighlightNotSubset);
        }
    }
    let mut out = format!("digraph \"{}\" {{\n", escape(name));
    if !poset.nodes.is_empty() {
        out.push_str("  node [shape=box, fontname=\"Helvetica\"];\n");
    }
    for (i, n) in poset.nodes.iter().enumerate() {
        let marked = highlight.is_some_and(|h| h.contains(&i));
        let style = if marked { ", style=\"dashed,filled\", fillcolor=\"#e8eef8\"" } else { "" };
        out.push_str(&format!("  n{i} [label=\"{}\"{style}];\n", escape(&n.key.pretty())));
    }
    for a in &poset.arrows {
        out.push_str(&format!("  n{} -> n{} [label=\"{}\"];\n", a.from, a.to, escape(&a.summand)));
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::tilting::DEFAULT_NODE_CAP;

    #[test]
    fn json_keys_survive_reimport() {
        let b = fixtures::b1b();
        let t = TauTilt::new(&b);
        let poset = t.hasse(DEFAULT_NODE_CAP).unwrap();
        let text = serde_json::to_string(&poset_to_json(&t, &poset)).unwrap();
        let back: Value = serde_json::from_str(&text).unwrap();
        for (stored, key) in keys_from_json(&b, &back).unwrap() {
            assert_eq!(stored, key.to_string());
        }
    }

    #[test]
    fn dot_with_highlight() {
        let b = fixtures::b1b();
        let poset = TauTilt::new(&b).hasse(DEFAULT_NODE_CAP).unwrap();
        let h: BTreeSet<usize> = [0, 1].into();
        let dot = poset_to_dot("b1b", &poset, Some(&h)).unwrap();
        assert_eq!(dot.matches("dashed").count(), 2);
        assert_eq!(dot.matches("->").count(), poset.arrows.len());
        let bad: BTreeSet<usize> = [99].into();
        assert!(matches!(poset_to_dot("b1b", &poset, Some(&bad)), Err(Error::HighlightNotSubset)));
    }

    #[test]
    fn empty_poset_is_valid_dot() {
        let empty = HassePoset { vertex_count: 0, nodes: vec![], arrows: vec![], complete: true };
        assert_eq!(poset_to_dot("x", &empty, None).unwrap(), "digraph \"x\" {\n}\n");
    }
}
