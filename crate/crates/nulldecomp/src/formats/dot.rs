//! Graphviz output with vertex roles drawn as shapes: support vertices as
//! boxes, core vertices as double circles, N-forest vertices as stars.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use nulldecomp_core::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    Support,
    Core,
    NVertex,
    Plain,
}

impl Role {
    fn shape(self) -> &'static str {
        match self {
            Role::Support => "box",
            Role::Core => "doublecircle",
            Role::NVertex => "star",
            Role::Plain => "circle",
        }
    }
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Renders `g` as an undirected DOT graph. Vertices missing from `roles`
/// are drawn plain, and entries for vertices not in `g` are ignored.
pub fn export_dot(g: &Graph, roles: Option<&BTreeMap<VertexId, Role>>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in g.vertices() {
        let role = roles
            .and_then(|r| r.get(&v))
            .copied()
            .unwrap_or(Role::Plain);
        let name = g.label(v).map_or_else(|| v.to_string(), str::to_string);
        let _ = write!(out, "  {} [label={}", v, quote(&name));
        if role != Role::Plain {
            let _ = write!(out, ", shape={}", role.shape());
        }
        out.push_str("];\n");
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
