//! Graph I/O: the edge-list format (optional `p <n>` header, `u v` body
//! lines, `#` comments) and the JSON format
//! (`{"vertices":[...],"edges":[[u,v],...]}`).

use serde_json::{json, Value};
use tetradecomp::{Error, Graph, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Json,
}

impl GraphFormat {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "edgelist" => Ok(GraphFormat::EdgeList),
            "json" => Ok(GraphFormat::Json),
            other => Err(Error::input(format!("unknown graph format '{other}'"))),
        }
    }
}

pub fn parse_graph(input: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(input),
        GraphFormat::Json => parse_json(input),
    }
}

fn parse_edge_list(input: &str) -> Result<Graph> {
    let mut declared: Option<u32> = None;
    let mut edges = Vec::new();
    for (lineno, raw) in input.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let first = tokens.next().unwrap();
        if first == "p" {
            let n: u32 = tokens
                .next()
                .ok_or_else(|| Error::input(format!("line {}: p needs a count", lineno + 1)))?
                .parse()
                .map_err(|_| Error::input(format!("line {}: bad vertex count", lineno + 1)))?;
            declared = Some(n);
            continue;
        }
        let u: u32 = first
            .parse()
            .map_err(|_| Error::input(format!("line {}: bad vertex label", lineno + 1)))?;
        let v: u32 = tokens
            .next()
            .ok_or_else(|| Error::input(format!("line {}: edge needs two endpoints", lineno + 1)))?
            .parse()
            .map_err(|_| Error::input(format!("line {}: bad vertex label", lineno + 1)))?;
        edges.push((u, v));
    }
    match declared {
        Some(n) => {
            for &(u, v) in &edges {
                if u >= n || v >= n {
                    return Err(Error::input(format!(
                        "edge ({u},{v}) exceeds the declared vertex count {n}"
                    )));
                }
            }
            Graph::new(0..n, edges)
        }
        None => Graph::from_edges(edges),
    }
}

fn parse_json(input: &str) -> Result<Graph> {
    let value: Value =
        serde_json::from_str(input).map_err(|e| Error::input(format!("bad JSON: {e}")))?;
    let vertices = value
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::input("JSON graph needs a \"vertices\" array"))?;
    let edges = value
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::input("JSON graph needs an \"edges\" array"))?;
    let vs: Vec<u32> = vertices
        .iter()
        .map(|v| {
            v.as_u64()
                .and_then(|x| u32::try_from(x).ok())
                .ok_or_else(|| Error::input("vertex labels must be non-negative integers"))
        })
        .collect::<Result<_>>()?;
    let es: Vec<(u32, u32)> = edges
        .iter()
        .map(|e| {
            let pair = e
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| Error::input("edges must be [u,v] pairs"))?;
            let u = pair[0]
                .as_u64()
                .and_then(|x| u32::try_from(x).ok())
                .ok_or_else(|| Error::input("edge endpoints must be non-negative integers"))?;
            let v = pair[1]
                .as_u64()
                .and_then(|x| u32::try_from(x).ok())
                .ok_or_else(|| Error::input("edge endpoints must be non-negative integers"))?;
            Ok((u, v))
        })
        .collect::<Result<_>>()?;
    Graph::new(vs, es)
}

pub fn serialize_graph(g: &Graph, format: GraphFormat) -> Result<String> {
    match format {
        GraphFormat::EdgeList => {
            let n = g.vertex_count() as u32;
            let contiguous = g.vertices().eq(0..n);
            if !contiguous {
                return Err(Error::input(
                    "edge-list output needs contiguous labels 0..n; use --format json",
                ));
            }
            let mut out = format!("p {n}\n");
            for (u, v) in g.edges() {
                out.push_str(&format!("{u} {v}\n"));
            }
            Ok(out)
        }
        GraphFormat::Json => {
            let value = graph_json(g);
            Ok(format!("{value}\n"))
        }
    }
}

pub fn graph_json(g: &Graph) -> Value {
    json!({
        "vertices": g.vertices().collect::<Vec<_>>(),
        "edges": g.edges().map(|(u, v)| vec![u, v]).collect::<Vec<_>>(),
    })
}
