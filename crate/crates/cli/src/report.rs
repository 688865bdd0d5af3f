//! Report rendering: the decomposition JSON schema, DOT export of the
//! decomposition tree, and plain text.

use serde_json::{json, Value};
use tetradecomp::classic::{FourDecomposition, PipelineNode, TriDecomposition};
use tetradecomp::decomp::MixedTreeDecomposition;
use tetradecomp::recognize::{AngryShape, AngryVerdict, TorsoClass};
use tetradecomp::{Graph, MixedSeparation};

use crate::io::graph_json;

fn class_json(class: &TorsoClass) -> Value {
    match class {
        TorsoClass::Quasi5Connected => json!({ "verdict": "quasi-5-connected" }),
        TorsoClass::CycleOfSmallTorsos(ring) => json!({
            "verdict": "cycle-of-small-torsos",
            "ringParts": ring.parts.iter().map(|p| p.iter().collect::<Vec<_>>()).collect::<Vec<_>>(),
        }),
        TorsoClass::GeneralisedDoubleWheel { centre, ring } => json!({
            "verdict": "generalised-double-wheel",
            "centre": [centre.0, centre.1],
            "rimParts": ring.parts.iter().map(|p| p.iter().collect::<Vec<_>>()).collect::<Vec<_>>(),
        }),
        TorsoClass::ThickenedK4m { left, m } => json!({
            "verdict": "thickened-K4m",
            "left": left.iter().collect::<Vec<_>>(),
            "m": m,
        }),
        TorsoClass::SprinkledK4m { left, m } => json!({
            "verdict": "sprinkled-K4m",
            "left": left.iter().collect::<Vec<_>>(),
            "m": m,
        }),
    }
}

fn tree_edges_json(g: &Graph, tree: &MixedTreeDecomposition) -> Vec<Value> {
    let mut out = Vec::new();
    for &(i, j) in &tree.edges {
        // Separator edges are listed with their A-side endpoint first,
        // where (A,B) is the separation oriented from i to j.
        let sep: &MixedSeparation = &tree.edge_map[&(i, j)];
        let separator = sep.separator(g);
        let strict_a = sep.strict_a();
        let sep_edges: Vec<Vec<u32>> = separator
            .edges
            .iter()
            .map(|&(u, v)| {
                if strict_a.contains(&u) {
                    vec![u, v]
                } else {
                    vec![v, u]
                }
            })
            .collect();
        out.push(json!({
            "from": i,
            "to": j,
            "separatorVertices": separator.vertices.iter().collect::<Vec<_>>(),
            "separatorEdges": sep_edges,
        }));
    }
    out
}

pub fn four_decomposition_json(g: &Graph, d: &FourDecomposition) -> Value {
    let nodes: Vec<Value> = d
        .tree
        .nodes
        .iter()
        .enumerate()
        .map(|(i, _)| {
            let (result, class) = &d.torsos[i];
            json!({
                "id": i,
                "bag": d.tree.bags[i].iter().collect::<Vec<_>>(),
                "torso": graph_json(&result.torso),
                "class": class_json(class),
            })
        })
        .collect();
    json!({ "nodes": nodes, "edges": tree_edges_json(g, &d.tree) })
}

pub fn tri_decomposition_json(g: &Graph, d: &TriDecomposition) -> Value {
    let nodes: Vec<Value> = d
        .tree
        .nodes
        .iter()
        .enumerate()
        .map(|(i, _)| {
            let (result, class) = &d.torsos[i];
            json!({
                "id": i,
                "bag": d.tree.bags[i].iter().collect::<Vec<_>>(),
                "torso": graph_json(&result.torso),
                "class": { "verdict": class.name() },
            })
        })
        .collect();
    json!({
        "apex": d.apex,
        "nodes": nodes,
        "edges": tree_edges_json(g, &d.tree),
    })
}

fn escape(s: &str) -> String {
    s.replace('"', "\\\"")
}

pub fn four_decomposition_dot(d: &FourDecomposition) -> String {
    let mut out = String::from("graph decomposition {\n");
    for (i, bag) in d.tree.bags.iter().enumerate() {
        let class = &d.torsos[i].1;
        out.push_str(&format!(
            "  n{i} [label=\"{}\"];\n",
            escape(&format!("bag size {} | {}", bag.len(), class.name()))
        ));
    }
    for &(i, j) in &d.tree.edges {
        out.push_str(&format!("  n{i} -- n{j};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn four_decomposition_text(d: &FourDecomposition) -> String {
    let mut out = format!(
        "{} node(s), {} totally-nested tetra-separation(s)\n",
        d.tree.node_count(),
        d.tree.edge_map.len() / 2
    );
    for (i, (result, class)) in d.torsos.iter().enumerate() {
        out.push_str(&format!(
            "node {i}: bag {:?}, torso |V|={} |E|={}, class {}\n",
            d.tree.bags[i],
            result.torso.vertex_count(),
            result.torso.edge_count(),
            class.name()
        ));
    }
    for &(i, j) in &d.tree.edges {
        out.push_str(&format!("edge {i} -- {j}\n"));
    }
    out
}

pub fn tri_decomposition_text(d: &TriDecomposition) -> String {
    let mut out = format!(
        "{} node(s), apex label {}\n",
        d.tree.node_count(),
        d.apex
    );
    for (i, (result, class)) in d.torsos.iter().enumerate() {
        out.push_str(&format!(
            "node {i}: bag {:?}, torso |V|={}, class {}\n",
            d.tree.bags[i],
            result.torso.vertex_count(),
            class.name()
        ));
    }
    out
}

pub fn angry_text(verdict: &AngryVerdict) -> String {
    match verdict {
        AngryVerdict::Angry(shape) => {
            let detail = match shape {
                AngryShape::Quasi5Connected => "quasi-5-connected".to_string(),
                AngryShape::BadTutteBagel { ring, alpha } => {
                    format!("bad Tutte-bagel with {} parts, alpha={alpha}", ring.len())
                }
                AngryShape::DoubleWheel { rim_length, centre } => {
                    format!("double-wheel, rim length {rim_length}, centre {centre:?}")
                }
                AngryShape::DoubleWheelOfTriangles { rim_length, centre } => format!(
                    "double-wheel of triangles, rim length {rim_length}, centre {centre:?}"
                ),
                AngryShape::SprinkledK4m { left, m } => {
                    format!("sprinkled K4,{m} with left side {left:?}")
                }
            };
            format!("4-angry: shape {} ({detail})\n", shape.index())
        }
        AngryVerdict::NotAngry { nested_witness } => format!(
            "not 4-angry: totally-nested witness A={:?} B={:?}\n",
            nested_witness.sep().side_a,
            nested_witness.sep().side_b
        ),
    }
}

pub fn angry_json(verdict: &AngryVerdict) -> Value {
    match verdict {
        AngryVerdict::Angry(shape) => {
            let mut v = json!({ "angry": true, "shape": shape.index() });
            if let AngryShape::SprinkledK4m { left, m } = shape {
                v["left"] = json!(left.iter().collect::<Vec<_>>());
                v["m"] = json!(m);
            }
            v
        }
        AngryVerdict::NotAngry { nested_witness } => json!({
            "angry": false,
            "witness": {
                "sideA": nested_witness.sep().side_a.iter().collect::<Vec<_>>(),
                "sideB": nested_witness.sep().side_b.iter().collect::<Vec<_>>(),
            }
        }),
    }
}

pub fn pipeline_text(node: &PipelineNode, depth: usize) -> String {
    let indent = "  ".repeat(depth);
    let mut out = format!(
        "{indent}{} (|V|={}, |E|={}){}{}\n",
        node.stage,
        node.graph.vertex_count(),
        node.graph.edge_count(),
        node.verdict
            .as_deref()
            .map(|v| format!(": {v}"))
            .unwrap_or_default(),
        node.note
            .as_deref()
            .map(|n| format!(" [{n}]"))
            .unwrap_or_default(),
    );
    for child in &node.children {
        out.push_str(&pipeline_text(child, depth + 1));
    }
    out
}

pub fn pipeline_json(node: &PipelineNode) -> Value {
    json!({
        "stage": node.stage,
        "verdict": node.verdict,
        "note": node.note,
        "graph": graph_json(&node.graph),
        "children": node.children.iter().map(pipeline_json).collect::<Vec<_>>(),
    })
}
