//! JSON reports for single graphs.
//!
//! Vertex sets are written as ascending arrays of vertex ids. When the input
//! carried names, `labels[i]` is the name of vertex `i`.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use nulldecomp_core::decomp::independent_set_avoiding;
use nulldecomp_core::oracles::{
    forest_maximum_matching, has_perfect_matching, max_independent_set_with_limit,
    max_matching_with_limit,
};
use nulldecomp_core::unicyclic::{PartKind, SingularityReason};
use nulldecomp_core::{
    analyze, classify_shape, decompose, nullity, support, Error, Graph, Matching, Shape, VertexId,
    VertexSet,
};

use crate::formats::Role;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("unsupported shape: {0}")]
    Unsupported(&'static str),
    #[error(transparent)]
    Core(#[from] Error),
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub input: String,
    pub n: usize,
    pub m: usize,
    pub shape: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    /// `n - rank(A)`, computed directly.
    pub nullity: usize,
    pub supp: Vec<usize>,
    pub alpha: usize,
    pub nu: usize,
    /// Decided combinatorially (perfect matchings of the parts and the
    /// cycle length), not from `nullity`.
    pub singular: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub forest: Option<ForestReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unicyclic: Option<UnicyclicReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<Verification>,
    #[serde(skip)]
    pub roles: BTreeMap<VertexId, Role>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ForestReport {
    pub supp: Vec<usize>,
    pub core: Vec<usize>,
    pub s_forest: Vec<usize>,
    pub n_forest: Vec<usize>,
    pub independent_set: Vec<usize>,
    pub matching: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct UnicyclicReport {
    pub cycle: Vec<usize>,
    pub pure_cycle: bool,
    #[serde(rename = "type")]
    pub kind: &'static str,
    pub witness: Option<usize>,
    pub singularity_reason: Reason,
    /// Nullity assembled from the parts.
    pub nullity: usize,
    pub pendant: Vec<PendantReport>,
    pub parts: Vec<PartReport>,
    pub independent_set: Vec<usize>,
    pub matching: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Reason {
    PendantTreeLacksPerfectMatching { witness: usize },
    RemainderLacksPerfectMatching { witness: usize },
    ComponentLacksPerfectMatching { attached_to: usize },
    CycleLengthMultipleOfFour { length: usize },
    Nonsingular,
}

impl From<SingularityReason> for Reason {
    fn from(r: SingularityReason) -> Self {
        match r {
            SingularityReason::PendantTreeLacksPerfectMatching { witness } => {
                Reason::PendantTreeLacksPerfectMatching { witness: witness.0 }
            }
            SingularityReason::RemainderLacksPerfectMatching { witness } => {
                Reason::RemainderLacksPerfectMatching { witness: witness.0 }
            }
            SingularityReason::ComponentLacksPerfectMatching { attached_to } => {
                Reason::ComponentLacksPerfectMatching {
                    attached_to: attached_to.0,
                }
            }
            SingularityReason::CycleLengthMultipleOfFour { length } => {
                Reason::CycleLengthMultipleOfFour { length }
            }
            SingularityReason::Nonsingular => Reason::Nonsingular,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PendantReport {
    pub root: usize,
    pub vertices: Vec<usize>,
    pub supp: Vec<usize>,
    pub root_matched: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PartReport {
    /// `pendant_tree`, `remainder` or `forest_component`.
    pub kind: &'static str,
    /// The witness for the first two kinds, the cycle vertex the component
    /// hangs from for the third.
    pub anchor: usize,
    pub vertices: Vec<usize>,
    pub supp: Vec<usize>,
    pub core: Vec<usize>,
    pub n_forest: Vec<usize>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Verification {
    /// Set when the oracles refused the graph as too large.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha_oracle: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu_oracle: Option<usize>,
    pub singular_matches_nullity: bool,
    pub mismatch: bool,
}

pub fn ids(set: &VertexSet) -> Vec<usize> {
    set.iter().map(|v| v.0).collect()
}

fn pairs(m: &Matching) -> Vec<[usize; 2]> {
    m.edges().iter().map(|&(u, v)| [u.0, v.0]).collect()
}

fn assign(roles: &mut BTreeMap<VertexId, Role>, set: &VertexSet, role: Role) {
    for &v in set {
        roles.insert(v, role);
    }
}

/// Builds the report for `g`. With `verify_limit` set, the formula values
/// are compared with the brute-force oracles run under that size limit.
pub fn build_report(
    input: &str,
    g: &Graph,
    verify_limit: Option<usize>,
) -> Result<Report, ReportError> {
    let shape = match classify_shape(g) {
        Ok(s) => s,
        Err(Error::EmptyGraph) => return Err(ReportError::Unsupported("empty")),
        Err(e) => return Err(e.into()),
    };
    let direct_nullity = nullity(g);
    let mut roles = BTreeMap::new();
    let mut report = Report {
        input: input.to_string(),
        n: g.order(),
        m: g.size(),
        shape: shape.as_str(),
        labels: g.labels().map(<[String]>::to_vec),
        nullity: direct_nullity,
        supp: ids(&support(g)),
        alpha: 0,
        nu: 0,
        singular: false,
        forest: None,
        unicyclic: None,
        verification: None,
        roles: BTreeMap::new(),
    };

    match shape {
        Shape::Tree | Shape::Forest => {
            let dec = decompose(g)?;
            let independent = independent_set_avoiding(g, &dec, None)
                .ok_or(Error::InvariantViolated("no independent set for forest"))?;
            let matching = forest_maximum_matching(g)?;
            assign(&mut roles, &dec.n_forest_vertices, Role::NVertex);
            assign(&mut roles, &dec.core, Role::Core);
            assign(&mut roles, &dec.supp, Role::Support);
            report.alpha = dec.alpha();
            report.nu = dec.nu();
            report.singular = !has_perfect_matching(g)?;
            report.forest = Some(ForestReport {
                supp: ids(&dec.supp),
                core: ids(&dec.core),
                s_forest: ids(&dec.s_forest_vertices),
                n_forest: ids(&dec.n_forest_vertices),
                independent_set: ids(&independent),
                matching: pairs(&matching),
            });
        }
        Shape::Unicyclic | Shape::Cycle => {
            let a = analyze(g)?;
            let parts = a
                .parts
                .iter()
                .map(|p| {
                    let d = &p.decomposition;
                    assign(&mut roles, &d.n_forest_vertices, Role::NVertex);
                    assign(&mut roles, &d.core, Role::Core);
                    assign(&mut roles, &d.supp, Role::Support);
                    let (kind, anchor) = match p.kind {
                        PartKind::PendantTree { root } => ("pendant_tree", root),
                        PartKind::Remainder { witness } => ("remainder", witness),
                        PartKind::ForestComponent { attached_to } => {
                            ("forest_component", attached_to)
                        }
                    };
                    PartReport {
                        kind,
                        anchor: anchor.0,
                        vertices: ids(&p.vertices),
                        supp: ids(&d.supp),
                        core: ids(&d.core),
                        n_forest: ids(&d.n_forest_vertices),
                    }
                })
                .collect();
            report.alpha = a.alpha;
            report.nu = a.nu;
            report.singular = a.singular;
            report.unicyclic = Some(UnicyclicReport {
                cycle: a.cycle.vertices.iter().map(|v| v.0).collect(),
                pure_cycle: a.pure_cycle,
                kind: a.verdict.label(),
                witness: a.verdict.witness().map(|v| v.0),
                singularity_reason: a.singularity_reason.into(),
                nullity: a.nullity,
                pendant: a
                    .pendant
                    .iter()
                    .map(|p| PendantReport {
                        root: p.root.0,
                        vertices: ids(&p.vertices),
                        supp: ids(&p.supp),
                        root_matched: p.root_matched,
                    })
                    .collect(),
                parts,
                independent_set: ids(&a.independent_set),
                matching: pairs(&a.matching),
            });
        }
        Shape::Other => return Err(ReportError::Unsupported("other")),
    }
    report.roles = roles;

    if let Some(limit) = verify_limit {
        report.verification = Some(verify(g, &report, limit)?);
    }
    Ok(report)
}

fn verify(g: &Graph, report: &Report, limit: usize) -> Result<Verification, ReportError> {
    let singular_matches_nullity = report.singular == (report.nullity > 0);
    let mut v = Verification {
        singular_matches_nullity,
        mismatch: !singular_matches_nullity,
        ..Verification::default()
    };
    let oracles = max_independent_set_with_limit(g, limit)
        .and_then(|(alpha, _)| Ok((alpha, max_matching_with_limit(g, limit)?.len())));
    match oracles {
        Ok((alpha, nu)) => {
            v.alpha_oracle = Some(alpha);
            v.nu_oracle = Some(nu);
            v.mismatch |= alpha != report.alpha || nu != report.nu;
        }
        Err(Error::TooLarge { n, limit }) => {
            v.skipped = Some(format!("order {n} exceeds the oracle limit {limit}"));
        }
        Err(e) => return Err(e.into()),
    }
    Ok(v)
}
