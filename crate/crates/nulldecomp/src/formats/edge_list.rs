//! Whitespace-separated edge lists.
//!
//! ```text
//! # comment
//! n=6
//! label 0 v1
//! 0 1
//! v1 2
//! ```
//!
//! Each edge line holds two vertex tokens. A token is either a vertex id or
//! a name introduced earlier by a `label <id> <name>` directive. Names must
//! not parse as integers. Without an `n=` header the order is one more than
//! the largest id mentioned. When some vertices carry names, the others are
//! named by their id.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use nulldecomp_core::Graph;

use super::ParseError;

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut declared_n: Option<(usize, usize)> = None;
    let mut names: HashMap<String, usize> = HashMap::new();
    let mut labels: Vec<(usize, String)> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = BTreeSet::new();
    let mut max_id: Option<usize> = None;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let malformed = |reason: String| ParseError::MalformedLine { line, reason };

        if let Some(rest) = content.strip_prefix("n=") {
            if declared_n.is_some() {
                return Err(malformed("repeated n= header".into()));
            }
            let n = rest
                .trim()
                .parse::<usize>()
                .map_err(|_| malformed(format!("bad vertex count {:?}", rest.trim())))?;
            declared_n = Some((n, line));
            continue;
        }

        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens[0] == "label" {
            let [_, id, name] = tokens[..] else {
                return Err(malformed("expected `label <id> <name>`".into()));
            };
            let id = id
                .parse::<usize>()
                .map_err(|_| malformed(format!("bad vertex id {id:?}")))?;
            if name.parse::<i128>().is_ok() {
                return Err(malformed(format!("name {name:?} looks like an id")));
            }
            if names.contains_key(name) {
                return Err(malformed(format!("name {name:?} used twice")));
            }
            if labels.iter().any(|(v, _)| *v == id) {
                return Err(malformed(format!("vertex {id} labelled twice")));
            }
            names.insert(name.to_string(), id);
            labels.push((id, name.to_string()));
            max_id = max_id.max(Some(id));
            continue;
        }

        let [a, b] = tokens[..] else {
            return Err(malformed(format!(
                "expected two vertices, found {} tokens",
                tokens.len()
            )));
        };
        let resolve = |tok: &str| -> Result<usize, ParseError> {
            if let Ok(v) = tok.parse::<usize>() {
                return Ok(v);
            }
            names
                .get(tok)
                .copied()
                .ok_or_else(|| malformed(format!("unknown vertex {tok:?}")))
        };
        let (u, v) = (resolve(a)?, resolve(b)?);
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(ParseError::DuplicateEdge {
                line,
                u: key.0,
                v: key.1,
            });
        }
        max_id = max_id.max(Some(u.max(v)));
        edges.push((u, v));
    }

    let implied = max_id.map_or(0, |m| m + 1);
    let n = match declared_n {
        Some((n, line)) if n < implied => {
            return Err(ParseError::MalformedLine {
                line,
                reason: format!("n={n} but vertex {} is used", implied - 1),
            })
        }
        Some((n, _)) => n,
        None => implied,
    };
    let graph = Graph::new(n, edges).expect("edges were validated while parsing");
    if labels.is_empty() {
        return Ok(graph);
    }
    let mut names: Vec<String> = (0..n).map(|v| v.to_string()).collect();
    for (id, name) in labels {
        names[id] = name;
    }
    Ok(graph.with_labels(names).expect("one name per vertex"))
}

/// Writes `g` in the format read by [`parse_edge_list`], with an `n=`
/// header and `label` lines when names are present.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n={}", g.order());
    if let Some(labels) = g.labels() {
        for (v, name) in labels.iter().enumerate() {
            let _ = writeln!(out, "label {v} {name}");
        }
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
