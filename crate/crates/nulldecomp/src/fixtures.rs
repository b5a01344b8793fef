//! Replays the worked examples stored under `fixtures/` and diffs them
//! against `expected.json`.
//!
//! Expectations name vertices by their display names, so the table reads
//! like the drawings the fixtures were transcribed from. Every field of a
//! case is optional; only what is recorded gets compared.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::Deserialize;

use nulldecomp_core::oracles::{eg_set, max_independent_set, max_matching};
use nulldecomp_core::{
    analyze, classify_shape, decompose, nullity, support, Graph, Matching, NullDecomposition,
    Shape, VertexId, VertexSet,
};

use crate::formats::parse_edge_list;

#[derive(Debug, Clone, Deserialize)]
pub struct Expectations {
    pub cases: Vec<Case>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Case {
    pub name: String,
    pub file: String,
    #[serde(default)]
    pub shape: Option<String>,
    #[serde(default)]
    pub nullity: Option<usize>,
    #[serde(default)]
    pub supp: Option<Vec<String>>,
    #[serde(default)]
    pub core: Option<Vec<String>>,
    #[serde(default)]
    pub n_forest: Option<Vec<String>>,
    #[serde(default)]
    pub n_forest_order: Option<usize>,
    #[serde(default)]
    pub eg: Option<Vec<String>>,
    #[serde(default)]
    pub alpha: Option<usize>,
    #[serde(default)]
    pub nu: Option<usize>,
    #[serde(default)]
    pub singular: Option<bool>,
    #[serde(default, rename = "type")]
    pub kind: Option<String>,
    #[serde(default)]
    pub witness: Option<String>,
    #[serde(default)]
    pub cycle: Option<Vec<String>>,
    #[serde(default)]
    pub root_matched: Option<BTreeMap<String, bool>>,
    #[serde(default)]
    pub pendant_trees: Option<BTreeMap<String, Vec<String>>>,
    #[serde(default)]
    pub pendant_supports: Option<BTreeMap<String, Vec<String>>>,
    #[serde(default)]
    pub parts: Option<Vec<PartExpectation>>,
    #[serde(default)]
    pub independent_set: Option<Vec<String>>,
    #[serde(default)]
    pub matching: Option<Vec<[String; 2]>>,
}

/// A part of the split (pendant tree, remainder or forest component),
/// identified by its exact vertex set.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartExpectation {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub supp: Option<Vec<String>>,
    #[serde(default)]
    pub core: Option<Vec<String>>,
    #[serde(default)]
    pub n_forest: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub case: String,
    pub field: String,
    pub expected: String,
    pub got: String,
}

impl Row {
    pub fn ok(&self) -> bool {
        self.expected == self.got
    }
}

/// Everything one case produced, plus the comparison rows.
#[derive(Debug, Clone)]
pub struct CaseResult {
    pub name: String,
    pub graph: Graph,
    pub rows: Vec<Row>,
}

impl CaseResult {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(Row::ok)
    }

    pub fn row(&self, field: &str) -> Option<&Row> {
        self.rows.iter().find(|r| r.field == field)
    }
}

/// `./fixtures` when it exists, else the directory shipped with the sources.
pub fn default_dir() -> PathBuf {
    let local = PathBuf::from("fixtures");
    if local.join("expected.json").is_file() {
        return local;
    }
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn load(dir: &Path) -> Result<Expectations> {
    let path = dir.join("expected.json");
    let text =
        std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn load_graph(dir: &Path, file: &str) -> Result<Graph> {
    let path = dir.join(file);
    let text =
        std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
    parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Runs every case in `dir`.
pub fn run_all(dir: &Path) -> Result<Vec<CaseResult>> {
    load(dir)?
        .cases
        .iter()
        .map(|case| {
            let g = load_graph(dir, &case.file)?;
            let rows = check_case(case, &g).with_context(|| format!("case {}", case.name))?;
            Ok(CaseResult {
                name: case.name.clone(),
                graph: g,
                rows,
            })
        })
        .collect()
}

/// Table of every compared field; only failing rows unless `all` is set.
pub fn render_table(results: &[CaseResult], all: bool) -> String {
    let rows: Vec<&Row> = results
        .iter()
        .flat_map(|r| r.rows.iter())
        .filter(|r| all || !r.ok())
        .collect();
    let width = |f: fn(&Row) -> usize, title: &str| {
        rows.iter()
            .map(|r| f(r))
            .max()
            .unwrap_or(0)
            .max(title.chars().count())
    };
    let wc = width(|r| r.case.chars().count(), "case");
    let wf = width(|r| r.field.chars().count(), "field");
    let we = width(|r| r.expected.chars().count(), "expected");
    let pad = |s: &str, w: usize| format!("{s}{}", " ".repeat(w - s.chars().count()));
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{}  {}  {}  got",
        pad("case", wc),
        pad("field", wf),
        pad("expected", we)
    );
    for r in rows {
        let mark = if r.ok() { "" } else { "   <-- differs" };
        let _ = writeln!(
            out,
            "{}  {}  {}  {}{}",
            pad(&r.case, wc),
            pad(&r.field, wf),
            pad(&r.expected, we),
            r.got,
            mark
        );
    }
    out
}

fn name_of(g: &Graph, v: VertexId) -> String {
    g.label(v).map_or_else(|| v.to_string(), str::to_string)
}

fn names(g: &Graph, set: &VertexSet) -> Vec<String> {
    let mut out: Vec<String> = set.iter().map(|&v| name_of(g, v)).collect();
    out.sort();
    out
}

fn show(mut list: Vec<String>) -> String {
    list.sort();
    format!("{{{}}}", list.join(", "))
}

fn resolve(g: &Graph, name: &str) -> Result<VertexId> {
    g.vertex_named(name)
        .or_else(|| {
            name.parse::<usize>()
                .ok()
                .map(VertexId)
                .filter(|&v| g.contains(v))
        })
        .with_context(|| format!("unknown vertex {name:?}"))
}

fn resolve_set(g: &Graph, list: &[String]) -> Result<VertexSet> {
    list.iter().map(|s| resolve(g, s)).collect()
}

struct Rows<'a> {
    case: &'a str,
    rows: Vec<Row>,
}

impl Rows<'_> {
    fn push(&mut self, field: impl Into<String>, expected: impl ToString, got: impl ToString) {
        self.rows.push(Row {
            case: self.case.to_string(),
            field: field.into(),
            expected: expected.to_string(),
            got: got.to_string(),
        });
    }

    fn set(&mut self, field: impl Into<String>, expected: &Option<Vec<String>>, got: Vec<String>) {
        if let Some(e) = expected {
            self.push(field, show(e.clone()), show(got));
        }
    }

    fn num<T: ToString + Copy>(&mut self, field: &str, expected: Option<T>, got: T) {
        if let Some(e) = expected {
            self.push(field, e, got);
        }
    }

    fn decomposition(
        &mut self,
        prefix: &str,
        g: &Graph,
        e: &PartExpectation,
        d: &NullDecomposition,
    ) {
        self.set(format!("{prefix} supp"), &e.supp, names(g, &d.supp));
        self.set(format!("{prefix} core"), &e.core, names(g, &d.core));
        self.set(
            format!("{prefix} N-forest"),
            &e.n_forest,
            names(g, &d.n_forest_vertices),
        );
    }
}

fn check_independent_set(rows: &mut Rows, g: &Graph, list: &[String], alpha: usize) -> Result<()> {
    let set = resolve_set(g, list)?;
    let verdict = |set: &VertexSet| {
        format!(
            "{}independent, size {}",
            if g.is_independent(set) { "" } else { "not " },
            set.len()
        )
    };
    rows.push(
        "example independent set",
        format!("independent, size {alpha}"),
        verdict(&set),
    );
    Ok(())
}

fn check_matching(rows: &mut Rows, g: &Graph, list: &[[String; 2]], nu: usize) -> Result<()> {
    let edges = list
        .iter()
        .map(|[a, b]| Ok((resolve(g, a)?, resolve(g, b)?)))
        .collect::<Result<Vec<_>>>()?;
    let m = Matching::new(edges);
    let valid = m.is_valid_in(g) && m.len() == list.len();
    let got = format!(
        "{}matching, size {}",
        if valid { "" } else { "not a " },
        m.len()
    );
    rows.push("example matching", format!("matching, size {nu}"), got);
    Ok(())
}

/// Compares everything recorded in `case` against what the library computes
/// for `g`. Formula values for α and ν are also checked against the oracles.
pub fn check_case(case: &Case, g: &Graph) -> Result<Vec<Row>> {
    let mut rows = Rows {
        case: &case.name,
        rows: Vec::new(),
    };
    let shape = classify_shape(g)?;
    if let Some(s) = &case.shape {
        rows.push("shape", s, shape.as_str());
    }
    rows.num("nullity", case.nullity, nullity(g));
    rows.set("supp", &case.supp, names(g, &support(g)));
    if case.eg.is_some() {
        rows.set("EG", &case.eg, names(g, &eg_set(g)?));
    }

    let (alpha, nu) = match shape {
        Shape::Tree | Shape::Forest => {
            let d = decompose(g)?;
            rows.set("core", &case.core, names(g, &d.core));
            rows.set("N-forest", &case.n_forest, names(g, &d.n_forest_vertices));
            rows.num("|N-forest|", case.n_forest_order, d.n_forest_vertices.len());
            rows.num("singular", case.singular, nullity(g) > 0);
            (d.alpha(), d.nu())
        }
        Shape::Unicyclic | Shape::Cycle => {
            let a = analyze(g)?;
            if let Some(t) = &case.kind {
                rows.push("type", t, a.verdict.label());
            }
            if let Some(w) = &case.witness {
                let got = a
                    .verdict
                    .witness()
                    .map_or("none".to_string(), |v| name_of(g, v));
                rows.push("witness", w, got);
            }
            rows.set("cycle", &case.cycle, names(g, &a.cycle.vertex_set()));
            rows.num("singular", case.singular, a.singular);
            for (root, expected) in case.root_matched.iter().flatten() {
                let r = resolve(g, root)?;
                let got = a
                    .pendant
                    .iter()
                    .find(|p| p.root == r)
                    .map(|p| p.root_matched);
                rows.push(
                    format!("{root} matched in G{{{root}}}"),
                    expected,
                    got.map_or("missing".into(), |b| b.to_string()),
                );
            }
            for (root, expected) in case.pendant_trees.iter().flatten() {
                let r = resolve(g, root)?;
                let got = a
                    .pendant
                    .iter()
                    .find(|p| p.root == r)
                    .map(|p| names(g, &p.vertices));
                rows.push(
                    format!("V(G{{{root}}})"),
                    show(expected.clone()),
                    got.map_or("missing".into(), show),
                );
            }
            for (root, expected) in case.pendant_supports.iter().flatten() {
                let r = resolve(g, root)?;
                let got = a
                    .pendant
                    .iter()
                    .find(|p| p.root == r)
                    .map(|p| names(g, &p.supp));
                rows.push(
                    format!("Supp(G{{{root}}})"),
                    show(expected.clone()),
                    got.map_or("missing".into(), show),
                );
            }
            for e in case.parts.iter().flatten() {
                let want = resolve_set(g, &e.vertices)?;
                let label = show(e.vertices.clone());
                match a.parts.iter().find(|p| p.vertices == want) {
                    Some(p) => rows.decomposition(&format!("part {label}"), g, e, &p.decomposition),
                    None => rows.push(format!("part {label}"), "present", "missing"),
                }
            }
            (a.alpha, a.nu)
        }
        Shape::Other => anyhow::bail!("{} is neither a forest nor unicyclic", case.file),
    };

    if let Some(e) = case.alpha {
        rows.push("α", e, alpha);
        rows.push("α (oracle)", e, max_independent_set(g)?.0);
    }
    if let Some(e) = case.nu {
        rows.push("ν", e, nu);
        rows.push("ν (oracle)", e, max_matching(g)?.len());
    }
    if let Some(list) = &case.independent_set {
        check_independent_set(&mut rows, g, list, alpha)?;
    }
    if let Some(list) = &case.matching {
        check_matching(&mut rows, g, list, nu)?;
    }
    Ok(rows.rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diff_is_reported() {
        let g = parse_edge_list("label 0 a\nlabel 1 b\nlabel 2 c\na b\nb c").unwrap();
        let case = Case {
            name: "p3".into(),
            file: "p3.edges".into(),
            supp: Some(vec!["a".into(), "c".into()]),
            alpha: Some(3),
            ..Case::default()
        };
        let rows = check_case(&case, &g).unwrap();
        assert!(rows[0].ok());
        let bad: Vec<&Row> = rows.iter().filter(|r| !r.ok()).collect();
        assert_eq!(bad.len(), 2);
        assert_eq!((bad[0].expected.as_str(), bad[0].got.as_str()), ("3", "2"));
        let result = CaseResult {
            name: "p3".into(),
            graph: g,
            rows,
        };
        let table = render_table(&[result], false);
        assert!(table.contains("<-- differs"));
        assert_eq!(table.lines().count(), 3);
    }
}
