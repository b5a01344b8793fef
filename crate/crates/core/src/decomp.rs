//! Null decomposition of trees and forests.
//!
//! The support splits a tree into an S-forest, induced by the closed
//! neighbourhood of the support, and an N-forest made of everything else.
//! The core is the open neighbourhood of the support. Both closed formulas
//!
//! ```text
//! alpha(T) = |Supp(T)| + |V(F_N(T))| / 2
//! nu(T)    = |Core(T)| + |V(F_N(T))| / 2
//! ```
//!
//! are additive over components, so every function here accepts forests.

use alloc::collections::VecDeque;
use alloc::vec;

use crate::error::{Error, Result};
use crate::graph::{connected_components, Graph, VertexId, VertexSet};
use crate::linalg::support;

/// Per-forest record of the null decomposition, in the forest's numbering.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NullDecomposition {
    pub supp: VertexSet,
    pub core: VertexSet,
    pub s_forest_vertices: VertexSet,
    pub n_forest_vertices: VertexSet,
}

impl NullDecomposition {
    pub fn alpha(&self) -> usize {
        self.supp.len() + self.n_forest_vertices.len() / 2
    }

    pub fn nu(&self) -> usize {
        self.core.len() + self.n_forest_vertices.len() / 2
    }

    /// Same record with every vertex pushed through `map`.
    pub fn map_vertices(&self, map: impl Fn(VertexId) -> VertexId) -> Self {
        let m = |s: &VertexSet| s.iter().map(|&v| map(v)).collect();
        NullDecomposition {
            supp: m(&self.supp),
            core: m(&self.core),
            s_forest_vertices: m(&self.s_forest_vertices),
            n_forest_vertices: m(&self.n_forest_vertices),
        }
    }
}

pub fn decompose(t: &Graph) -> Result<NullDecomposition> {
    if !t.is_forest() {
        return Err(Error::NotAForest);
    }
    let supp = support(t);
    let mut core = VertexSet::new();
    for &s in &supp {
        core.extend(t.neighbors(s).iter().copied());
    }
    if !supp.is_disjoint(&core) {
        return Err(Error::InvariantViolated(
            "support of a forest is not independent",
        ));
    }
    let s_forest_vertices: VertexSet = supp.union(&core).copied().collect();
    let n_forest_vertices: VertexSet = t
        .vertices()
        .filter(|v| !s_forest_vertices.contains(v))
        .collect();
    if !n_forest_vertices.len().is_multiple_of(2) {
        return Err(Error::InvariantViolated("N-forest has odd order"));
    }
    Ok(NullDecomposition {
        supp,
        core,
        s_forest_vertices,
        n_forest_vertices,
    })
}

pub fn tree_alpha(t: &Graph) -> Result<usize> {
    Ok(decompose(t)?.alpha())
}

pub fn tree_nu(t: &Graph) -> Result<usize> {
    Ok(decompose(t)?.nu())
}

/// Whether every maximum matching of the tree saturates `v`, decided by
/// support membership. A single vertex is never matched.
pub fn root_is_matched(t: &Graph, v: VertexId) -> Result<bool> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if !t.contains(v) {
        return Err(Error::UnknownVertex(v.0));
    }
    Ok(!support(t).contains(&v))
}

/// A maximum independent set built from the decomposition: the support plus
/// one colour class of every N-tree. With `avoid` set, the class not holding
/// that vertex is taken in its N-tree. Returns `None` when `avoid` lies in
/// the support, since every maximum independent set of a forest contains it
/// then.
pub fn independent_set_avoiding(
    t: &Graph,
    dec: &NullDecomposition,
    avoid: Option<VertexId>,
) -> Option<VertexSet> {
    if avoid.is_some_and(|a| dec.supp.contains(&a)) {
        return None;
    }
    let mut out = dec.supp.clone();
    let n_forest = t.induced(&dec.n_forest_vertices).ok()?;
    for comp in connected_components(&n_forest.graph) {
        let g = &comp.graph;
        let mut colour = vec![u8::MAX; g.order()];
        let mut queue = VecDeque::from([VertexId(0)]);
        colour[0] = 0;
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if colour[w.0] == u8::MAX {
                    colour[w.0] = 1 - colour[v.0];
                    queue.push_back(w);
                }
            }
        }
        let lift = |v: VertexId| n_forest.parent_of(comp.parent_of(v));
        let mut pick = 0;
        if let Some(a) = avoid {
            if let Some(i) = (0..g.order()).find(|&i| lift(VertexId(i)) == a) {
                pick = 1 - colour[i];
            }
        }
        out.extend(
            (0..g.order())
                .filter(|&i| colour[i] == pick)
                .map(|i| lift(VertexId(i))),
        );
    }
    Some(out)
}
