//! Unicyclic graphs: Type I / Type II classification, singularity, nullity
//! composition and closed formulas for the independence and matching numbers.
//!
//! A unicyclic graph is Type I when some cycle vertex `v` is saturated by
//! every maximum matching of its pendant tree `G{v}`, which happens exactly
//! when `v` is outside `Supp(G{v})`. The graph then splits at `v` into the
//! tree `G{v}` and the tree `G - G{v}`, and every quantity is the sum over
//! the two parts. Otherwise the graph is Type II and splits into the cycle
//! and the forest `G - C`; the cycle contributes `floor(|C| / 2)` to both
//! numbers and its own nullity (2 when `4 | |C|`, else 0).
//!
//! Bare cycles are accepted and treated as Type II with an empty forest.

use alloc::vec::Vec;

use crate::decomp::{decompose, independent_set_avoiding, root_is_matched, NullDecomposition};
use crate::error::{Error, Result};
use crate::graph::{
    classify_shape, connected_components, find_cycle, pendant_trees, remove_vertices, CycleInfo,
    Graph, PendantTree, Shape, Subgraph, VertexId, VertexSet,
};
use crate::linalg::{nullity, support};
use crate::oracles::{forest_maximum_matching, has_perfect_matching, Matching};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TypeVerdict {
    /// `witness` is a cycle vertex outside the support of its pendant tree.
    TypeI {
        witness: VertexId,
    },
    TypeII,
}

impl TypeVerdict {
    pub fn witness(self) -> Option<VertexId> {
        match self {
            TypeVerdict::TypeI { witness } => Some(witness),
            TypeVerdict::TypeII => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            TypeVerdict::TypeI { .. } => "I",
            TypeVerdict::TypeII => "II",
        }
    }
}

/// Which clause decided [`is_singular`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingularityReason {
    /// Type I: `G{v}` has no perfect matching.
    PendantTreeLacksPerfectMatching {
        witness: VertexId,
    },
    /// Type I: `G - G{v}` has no perfect matching.
    RemainderLacksPerfectMatching {
        witness: VertexId,
    },
    /// Type II: the component of `G - C` hanging at `attached_to` has no
    /// perfect matching.
    ComponentLacksPerfectMatching {
        attached_to: VertexId,
    },
    /// Type II: the cycle length is a multiple of four.
    CycleLengthMultipleOfFour {
        length: usize,
    },
    Nonsingular,
}

/// Structural pieces shared by every operation.
struct Parts {
    cycle: CycleInfo,
    pendant: Vec<PendantTree>,
}

fn parts(g: &Graph) -> Result<Parts> {
    match classify_shape(g) {
        Ok(Shape::Unicyclic | Shape::Cycle) => {}
        _ => return Err(Error::NotUnicyclic),
    }
    let cycle = find_cycle(g)?;
    let pendant = pendant_trees(g, &cycle)?;
    Ok(Parts { cycle, pendant })
}

impl Parts {
    fn pendant_at(&self, v: VertexId) -> Option<&PendantTree> {
        self.pendant.iter().find(|p| p.root == v)
    }

    /// Every cycle vertex matched in its pendant tree, ascending.
    fn witnesses(&self) -> Result<Vec<VertexId>> {
        let mut out = Vec::new();
        for p in &self.pendant {
            if root_is_matched(&p.tree.graph, p.root_local)? {
                out.push(p.root);
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    fn verdict(&self) -> Result<TypeVerdict> {
        Ok(match self.witnesses()?.first() {
            Some(&witness) => TypeVerdict::TypeI { witness },
            None => TypeVerdict::TypeII,
        })
    }

    /// `G{v}` and `G - G{v}` for a Type I witness; `WrongType` otherwise.
    fn split_at(&self, g: &Graph, v: VertexId) -> Result<(&PendantTree, Subgraph)> {
        let p = self.pendant_at(v).ok_or(Error::WrongType)?;
        if !root_is_matched(&p.tree.graph, p.root_local)? {
            return Err(Error::WrongType);
        }
        let rest = remove_vertices(g, &p.tree.parent_vertices())?;
        Ok((p, rest))
    }

    /// Components of `G - C`, each paired with the cycle vertex it hangs
    /// from and its unique vertex adjacent to the cycle.
    fn forest_components(&self, g: &Graph) -> Result<Vec<ForestComponent>> {
        let on_cycle = self.cycle.vertex_set();
        let forest = remove_vertices(g, &on_cycle)?;
        connected_components(&forest.graph)
            .into_iter()
            .map(|comp| {
                let sub = Subgraph {
                    to_parent: comp
                        .to_parent
                        .iter()
                        .map(|&v| forest.parent_of(v))
                        .collect(),
                    graph: comp.graph,
                };
                let (attach_local, attached_to) = (0..sub.graph.order())
                    .map(VertexId)
                    .find_map(|v| {
                        g.neighbors(sub.parent_of(v))
                            .iter()
                            .find(|w| on_cycle.contains(w))
                            .map(|&c| (v, c))
                    })
                    .ok_or(Error::InvariantViolated(
                        "forest component not attached to cycle",
                    ))?;
                Ok(ForestComponent {
                    sub,
                    attach_local,
                    attached_to,
                })
            })
            .collect()
    }
}

struct ForestComponent {
    sub: Subgraph,
    /// The component's vertex adjacent to the cycle, local numbering.
    attach_local: VertexId,
    attached_to: VertexId,
}

/// `eta(C_n)`: 2 when `4 | n`, else 0.
pub fn cycle_nullity(length: usize) -> usize {
    if length.is_multiple_of(4) {
        2
    } else {
        0
    }
}

/// Type I with the smallest witness, or Type II.
pub fn classify_type(g: &Graph) -> Result<TypeVerdict> {
    parts(g)?.verdict()
}

/// All cycle vertices that can serve as a Type I witness, ascending.
pub fn type_i_witnesses(g: &Graph) -> Result<Vec<VertexId>> {
    parts(g)?.witnesses()
}

/// Nullity assembled from the parts: `eta(G{v}) + eta(G - G{v})` for Type I,
/// `eta(G - C) + eta(C)` for Type II.
pub fn unicyclic_nullity(g: &Graph) -> Result<usize> {
    let p = parts(g)?;
    nullity_from_parts(g, &p, p.verdict()?)
}

fn nullity_from_parts(g: &Graph, p: &Parts, verdict: TypeVerdict) -> Result<usize> {
    Ok(match verdict {
        TypeVerdict::TypeI { witness } => {
            let (tree, rest) = p.split_at(g, witness)?;
            nullity(&tree.tree.graph) + nullity(&rest.graph)
        }
        TypeVerdict::TypeII => {
            let forest = remove_vertices(g, &p.cycle.vertex_set())?;
            nullity(&forest.graph) + cycle_nullity(p.cycle.len())
        }
    })
}

/// Singularity decided from perfect matchings of the parts and the cycle
/// length alone, without touching the adjacency matrix.
pub fn is_singular(g: &Graph) -> Result<(bool, SingularityReason)> {
    let p = parts(g)?;
    singular_from_parts(g, &p, p.verdict()?)
}

fn singular_from_parts(
    g: &Graph,
    p: &Parts,
    verdict: TypeVerdict,
) -> Result<(bool, SingularityReason)> {
    match verdict {
        TypeVerdict::TypeI { witness } => singular_at_witness(g, p, witness),
        TypeVerdict::TypeII => {
            for comp in p.forest_components(g)? {
                if !has_perfect_matching(&comp.sub.graph)? {
                    let reason = SingularityReason::ComponentLacksPerfectMatching {
                        attached_to: comp.attached_to,
                    };
                    return Ok((true, reason));
                }
            }
            if p.cycle.len().is_multiple_of(4) {
                let reason = SingularityReason::CycleLengthMultipleOfFour {
                    length: p.cycle.len(),
                };
                return Ok((true, reason));
            }
            Ok((false, SingularityReason::Nonsingular))
        }
    }
}

fn singular_at_witness(
    g: &Graph,
    p: &Parts,
    witness: VertexId,
) -> Result<(bool, SingularityReason)> {
    let (tree, rest) = p.split_at(g, witness)?;
    if !has_perfect_matching(&tree.tree.graph)? {
        return Ok((
            true,
            SingularityReason::PendantTreeLacksPerfectMatching { witness },
        ));
    }
    if !has_perfect_matching(&rest.graph)? {
        return Ok((
            true,
            SingularityReason::RemainderLacksPerfectMatching { witness },
        ));
    }
    Ok((false, SingularityReason::Nonsingular))
}

/// The singularity verdict evaluated at a chosen Type I witness.
pub fn is_singular_at(g: &Graph, witness: VertexId) -> Result<(bool, SingularityReason)> {
    let p = parts(g)?;
    singular_at_witness(g, &p, witness)
}

fn type_i_decompositions(
    g: &Graph,
    p: &Parts,
    witness: VertexId,
) -> Result<(NullDecomposition, NullDecomposition)> {
    let (tree, rest) = p.split_at(g, witness)?;
    Ok((decompose(&tree.tree.graph)?, decompose(&rest.graph)?))
}

fn type_ii_decompositions(g: &Graph, p: &Parts) -> Result<Vec<NullDecomposition>> {
    p.forest_components(g)?
        .iter()
        .map(|c| decompose(&c.sub.graph))
        .collect()
}

fn require_type_ii(p: &Parts) -> Result<()> {
    match p.verdict()? {
        TypeVerdict::TypeII => Ok(()),
        TypeVerdict::TypeI { .. } => Err(Error::WrongType),
    }
}

/// `|Supp(G{v})| + |Supp(G - G{v})| + (|F_N(G{v})| + |F_N(G - G{v})|) / 2`.
pub fn alpha_type1(g: &Graph, witness: VertexId) -> Result<usize> {
    let p = parts(g)?;
    let (a, b) = type_i_decompositions(g, &p, witness)?;
    Ok(a.supp.len() + b.supp.len() + (a.n_forest_vertices.len() + b.n_forest_vertices.len()) / 2)
}

/// `floor(|C| / 2) + sum_i (|Supp(T_i)| + |F_N(T_i)| / 2)` over the
/// components `T_i` of `G - C`.
pub fn alpha_type2(g: &Graph) -> Result<usize> {
    let p = parts(g)?;
    require_type_ii(&p)?;
    let forest: usize = type_ii_decompositions(g, &p)?
        .iter()
        .map(|d| d.supp.len() + d.n_forest_vertices.len() / 2)
        .sum();
    Ok(p.cycle.len() / 2 + forest)
}

/// `|Core(G{v})| + |Core(G - G{v})| + (|F_N(G{v})| + |F_N(G - G{v})|) / 2`.
pub fn nu_type1(g: &Graph, witness: VertexId) -> Result<usize> {
    let p = parts(g)?;
    let (a, b) = type_i_decompositions(g, &p, witness)?;
    Ok(a.core.len() + b.core.len() + (a.n_forest_vertices.len() + b.n_forest_vertices.len()) / 2)
}

/// `floor(|C| / 2) + sum_i (|Core(T_i)| + |F_N(T_i)| / 2)`.
pub fn nu_type2(g: &Graph) -> Result<usize> {
    let p = parts(g)?;
    require_type_ii(&p)?;
    let forest: usize = type_ii_decompositions(g, &p)?
        .iter()
        .map(|d| d.core.len() + d.n_forest_vertices.len() / 2)
        .sum();
    Ok(p.cycle.len() / 2 + forest)
}

/// Role of a part in the split used by the formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartKind {
    /// `G{v}` at the Type I witness.
    PendantTree { root: VertexId },
    /// `G - G{v}` at the Type I witness.
    Remainder { witness: VertexId },
    /// A component of `G - C`, hanging from a cycle vertex.
    ForestComponent { attached_to: VertexId },
}

/// A part with its null decomposition, all in the graph's numbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartDecomposition {
    pub kind: PartKind,
    pub vertices: VertexSet,
    pub decomposition: NullDecomposition,
}

/// Support of one pendant tree, in the graph's numbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendantSummary {
    pub root: VertexId,
    pub vertices: VertexSet,
    pub supp: VertexSet,
    pub root_matched: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnicyclicAnalysis {
    pub cycle: CycleInfo,
    pub verdict: TypeVerdict,
    /// The whole graph is a cycle.
    pub pure_cycle: bool,
    pub singular: bool,
    pub singularity_reason: SingularityReason,
    /// From the composition rule.
    pub nullity: usize,
    pub alpha: usize,
    pub nu: usize,
    pub pendant: Vec<PendantSummary>,
    pub parts: Vec<PartDecomposition>,
    /// A maximum independent set of size `alpha`.
    pub independent_set: VertexSet,
    /// A maximum matching of size `nu`.
    pub matching: Matching,
}

/// Full analysis. Certificates are assembled from the parts: for Type I a
/// maximum independent set of `G{v}` avoiding `v` joined with one of
/// `G - G{v}`, and the union of maximum matchings of the two trees; for
/// Type II every other cycle vertex joined with maximum independent sets of
/// the `T_i` avoiding their cycle neighbour, and a maximum matching of the
/// cycle joined with maximum matchings of the `T_i`. Both certificates are
/// checked against `g` before returning.
pub fn analyze(g: &Graph) -> Result<UnicyclicAnalysis> {
    let p = parts(g)?;
    let verdict = p.verdict()?;
    let pure_cycle = p.cycle.len() == g.order();

    let mut pendant = Vec::with_capacity(p.pendant.len());
    for t in &p.pendant {
        let supp = support(&t.tree.graph);
        pendant.push(PendantSummary {
            root: t.root,
            vertices: t.tree.parent_vertices(),
            root_matched: !supp.contains(&t.root_local),
            supp: t.tree.lift(&supp),
        });
    }

    let mut parts_out = Vec::new();
    let mut independent_set = VertexSet::new();
    let mut matching: Matching;
    match verdict {
        TypeVerdict::TypeI { witness } => {
            let (tree, rest) = p.split_at(g, witness)?;
            let tg = &tree.tree;
            let d_tree = decompose(&tg.graph)?;
            let d_rest = decompose(&rest.graph)?;
            let i1 = independent_set_avoiding(&tg.graph, &d_tree, Some(tree.root_local)).ok_or(
                Error::InvariantViolated("Type I witness lies in its support"),
            )?;
            let i2 = independent_set_avoiding(&rest.graph, &d_rest, None)
                .ok_or(Error::InvariantViolated("no independent set for remainder"))?;
            independent_set.extend(tg.lift(&i1));
            independent_set.extend(rest.lift(&i2));
            let m1 = forest_maximum_matching(&tg.graph)?.map_vertices(|v| tg.parent_of(v));
            let m2 = forest_maximum_matching(&rest.graph)?.map_vertices(|v| rest.parent_of(v));
            matching = m1.union(&m2);
            parts_out.push(PartDecomposition {
                kind: PartKind::PendantTree { root: witness },
                vertices: tg.parent_vertices(),
                decomposition: d_tree.map_vertices(|v| tg.parent_of(v)),
            });
            parts_out.push(PartDecomposition {
                kind: PartKind::Remainder { witness },
                vertices: rest.parent_vertices(),
                decomposition: d_rest.map_vertices(|v| rest.parent_of(v)),
            });
        }
        TypeVerdict::TypeII => {
            let k = p.cycle.len() / 2;
            independent_set.extend((0..k).map(|i| p.cycle.vertices[2 * i]));
            matching = Matching::new(
                (0..k).map(|i| (p.cycle.vertices[2 * i], p.cycle.vertices[2 * i + 1])),
            );
            for comp in p.forest_components(g)? {
                let sub = &comp.sub;
                let d = decompose(&sub.graph)?;
                let j = independent_set_avoiding(&sub.graph, &d, Some(comp.attach_local)).ok_or(
                    Error::InvariantViolated("cycle neighbour lies in forest support"),
                )?;
                independent_set.extend(sub.lift(&j));
                let m = forest_maximum_matching(&sub.graph)?.map_vertices(|v| sub.parent_of(v));
                matching = matching.union(&m);
                parts_out.push(PartDecomposition {
                    kind: PartKind::ForestComponent {
                        attached_to: comp.attached_to,
                    },
                    vertices: sub.parent_vertices(),
                    decomposition: d.map_vertices(|v| sub.parent_of(v)),
                });
            }
        }
    }

    let (alpha, nu) = match verdict {
        TypeVerdict::TypeI { .. } => {
            let (a, b) = (&parts_out[0].decomposition, &parts_out[1].decomposition);
            let half = (a.n_forest_vertices.len() + b.n_forest_vertices.len()) / 2;
            (
                a.supp.len() + b.supp.len() + half,
                a.core.len() + b.core.len() + half,
            )
        }
        TypeVerdict::TypeII => {
            let c = p.cycle.len() / 2;
            parts_out.iter().fold((c, c), |(al, nu), part| {
                let d = &part.decomposition;
                let half = d.n_forest_vertices.len() / 2;
                (al + d.supp.len() + half, nu + d.core.len() + half)
            })
        }
    };

    if independent_set.len() != alpha || !g.is_independent(&independent_set) {
        return Err(Error::InvariantViolated(
            "independent-set certificate rejected",
        ));
    }
    if matching.len() != nu || !matching.is_valid_in(g) {
        return Err(Error::InvariantViolated("matching certificate rejected"));
    }

    let nullity = nullity_from_parts(g, &p, verdict)?;
    let (singular, singularity_reason) = singular_from_parts(g, &p, verdict)?;
    if singular != (nullity > 0) {
        return Err(Error::InvariantViolated(
            "singularity verdict disagrees with nullity",
        ));
    }

    Ok(UnicyclicAnalysis {
        cycle: p.cycle,
        verdict,
        pure_cycle,
        singular,
        singularity_reason,
        nullity,
        alpha,
        nu,
        pendant,
        parts: parts_out,
        independent_set,
        matching,
    })
}
