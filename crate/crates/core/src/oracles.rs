//! Combinatorial ground truth: exact maximum independent sets and maximum
//! matchings by search, augmenting-path certificates, perfect matchings of
//! forests and the Edmonds-Gallai vertex set.
//!
//! Nothing in this module looks at the adjacency matrix, so it can be used to
//! check the linear-algebra route independently.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{connected_components, find_cycle, Graph, VertexId, VertexSet};

/// Order guard for the exponential searches.
pub const DEFAULT_ORACLE_LIMIT: usize = 32;

/// Hard ceiling imposed by the bitset used in the independent-set search.
pub const MAX_ORACLE_LIMIT: usize = 128;

/// A set of pairwise vertex-disjoint edges, stored as `(u, v)` with `u < v`,
/// sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    edges: Vec<(VertexId, VertexId)>,
}

impl Matching {
    pub fn new<I: IntoIterator<Item = (VertexId, VertexId)>>(edges: I) -> Self {
        let mut edges: Vec<_> = edges
            .into_iter()
            .map(|(a, b)| if a < b { (a, b) } else { (b, a) })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        Matching { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn saturates(&self, v: VertexId) -> bool {
        self.edges.iter().any(|&(a, b)| a == v || b == v)
    }

    /// Every edge is present in `g` and no vertex is used twice.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.order()];
        for &(a, b) in &self.edges {
            if !g.has_edge(a, b) || used[a.0] || used[b.0] {
                return false;
            }
            used[a.0] = true;
            used[b.0] = true;
        }
        true
    }

    /// `mate[v]` for every vertex of a graph of order `n`.
    pub fn mates(&self, n: usize) -> Vec<Option<VertexId>> {
        let mut mate = vec![None; n];
        for &(a, b) in &self.edges {
            mate[a.0] = Some(b);
            mate[b.0] = Some(a);
        }
        mate
    }

    pub fn map_vertices(&self, map: impl Fn(VertexId) -> VertexId) -> Self {
        Matching::new(self.edges.iter().map(|&(a, b)| (map(a), map(b))))
    }

    pub fn union(mut self, other: &Matching) -> Self {
        self.edges.extend_from_slice(&other.edges);
        Matching::new(self.edges)
    }
}

fn guard(g: &Graph, limit: usize) -> Result<()> {
    let limit = limit.min(MAX_ORACLE_LIMIT);
    if g.order() > limit {
        return Err(Error::TooLarge {
            n: g.order(),
            limit,
        });
    }
    Ok(())
}

/// Exact maximum independent set with the default size guard.
pub fn max_independent_set(g: &Graph) -> Result<(usize, VertexSet)> {
    max_independent_set_with_limit(g, DEFAULT_ORACLE_LIMIT)
}

/// Branch and bound: pick a vertex of maximum degree among the remaining
/// ones, then either drop it or take it and drop its closed neighbourhood.
pub fn max_independent_set_with_limit(g: &Graph, limit: usize) -> Result<(usize, VertexSet)> {
    guard(g, limit)?;
    let adj: Vec<u128> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u128, |m, w| m | 1 << w.0))
        .collect();
    let all = if g.order() == 128 {
        u128::MAX
    } else {
        (1u128 << g.order()) - 1
    };
    let mut best = (0usize, 0u128);
    mis_search(&adj, all, 0, 0, &mut best);
    let set = (0..g.order())
        .filter(|&i| best.1 >> i & 1 == 1)
        .map(VertexId)
        .collect();
    Ok((best.0, set))
}

fn mis_search(adj: &[u128], alive: u128, count: usize, chosen: u128, best: &mut (usize, u128)) {
    if count + alive.count_ones() as usize <= best.0 {
        return;
    }
    let mut pick = None;
    let mut pick_deg = 0u32;
    let mut rest = alive;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & alive).count_ones();
        if pick.is_none() || d > pick_deg {
            pick = Some(v);
            pick_deg = d;
        }
    }
    let Some(v) = pick else {
        *best = (count, chosen);
        return;
    };
    if pick_deg == 0 {
        // Only isolated vertices left: take them all.
        *best = (count + alive.count_ones() as usize, chosen | alive);
        return;
    }
    let bit = 1u128 << v;
    mis_search(adj, alive & !(adj[v] | bit), count + 1, chosen | bit, best);
    mis_search(adj, alive & !bit, count, chosen, best);
}

/// Exact maximum matching with the default size guard.
pub fn max_matching(g: &Graph) -> Result<Matching> {
    max_matching_with_limit(g, DEFAULT_ORACLE_LIMIT)
}

/// Maximum matching, one component at a time. Bipartite components use
/// augmenting paths from every unsaturated vertex on one side. A component
/// with exactly one (odd) cycle is split on its cycle edges: some cycle edge
/// is unused by any matching, and deleting it leaves a tree. Anything else
/// falls back to exhaustive branching.
pub fn max_matching_with_limit(g: &Graph, limit: usize) -> Result<Matching> {
    guard(g, limit)?;
    let mut edges = Vec::new();
    for comp in connected_components(g) {
        let h = &comp.graph;
        let local = if let Some(colour) = bipartition(h) {
            kuhn(h, &colour)
        } else if h.size() == h.order() {
            let cycle = find_cycle(h)?;
            let mut best: Option<Matching> = None;
            for (a, b) in cycle.edges() {
                let pruned = Graph::new(
                    h.order(),
                    h.edges()
                        .iter()
                        .filter(|&&e| e != (a.min(b), a.max(b)))
                        .map(|&(x, y)| (x.0, y.0)),
                )?;
                let colour = bipartition(&pruned)
                    .ok_or(Error::InvariantViolated("tree is not bipartite"))?;
                let m = kuhn(&pruned, &colour);
                if best.as_ref().is_none_or(|b| m.len() > b.len()) {
                    best = Some(m);
                }
            }
            best.unwrap_or_default()
        } else {
            exhaustive_matching(h)
        };
        edges.extend(
            local
                .map_vertices(|v| comp.parent_of(v))
                .edges()
                .iter()
                .copied(),
        );
    }
    Ok(Matching::new(edges))
}

fn bipartition(g: &Graph) -> Option<Vec<u8>> {
    let mut colour = vec![u8::MAX; g.order()];
    for s in g.vertices() {
        if colour[s.0] != u8::MAX {
            continue;
        }
        colour[s.0] = 0;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if colour[w.0] == u8::MAX {
                    colour[w.0] = 1 - colour[v.0];
                    stack.push(w);
                } else if colour[w.0] == colour[v.0] {
                    return None;
                }
            }
        }
    }
    Some(colour)
}

fn kuhn(g: &Graph, colour: &[u8]) -> Matching {
    let n = g.order();
    let mut mate: Vec<Option<VertexId>> = vec![None; n];
    for u in g.vertices().filter(|u| colour[u.0] == 0) {
        let mut visited = vec![false; n];
        kuhn_augment(g, u, &mut mate, &mut visited);
    }
    Matching::new(
        g.vertices()
            .filter(|u| colour[u.0] == 0)
            .filter_map(|u| mate[u.0].map(|w| (u, w))),
    )
}

fn kuhn_augment(
    g: &Graph,
    u: VertexId,
    mate: &mut [Option<VertexId>],
    visited: &mut [bool],
) -> bool {
    for &w in g.neighbors(u) {
        if visited[w.0] {
            continue;
        }
        visited[w.0] = true;
        let free = match mate[w.0] {
            None => true,
            Some(x) => kuhn_augment(g, x, mate, visited),
        };
        if free {
            mate[w.0] = Some(u);
            mate[u.0] = Some(w);
            return true;
        }
    }
    false
}

fn exhaustive_matching(g: &Graph) -> Matching {
    let mut alive = vec![true; g.order()];
    let mut current = Vec::new();
    let mut best = Vec::new();
    branch_edges(g, &mut alive, &mut current, &mut best);
    Matching::new(best)
}

fn branch_edges(
    g: &Graph,
    alive: &mut [bool],
    current: &mut Vec<(VertexId, VertexId)>,
    best: &mut Vec<(VertexId, VertexId)>,
) {
    let remaining = alive.iter().filter(|&&a| a).count();
    if current.len() + remaining / 2 <= best.len() {
        return;
    }
    let Some(u) = g.vertices().find(|u| alive[u.0]) else {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    };
    alive[u.0] = false;
    for &w in g.neighbors(u) {
        if alive[w.0] {
            alive[w.0] = false;
            current.push((u, w));
            branch_edges(g, alive, current, best);
            current.pop();
            alive[w.0] = true;
        }
    }
    branch_edges(g, alive, current, best);
    alive[u.0] = true;
}

/// Exhaustive search for an `m`-augmenting path: an alternating path whose
/// two ends are both unsaturated. `None` certifies that `m` is maximum.
pub fn find_augmenting_path(g: &Graph, m: &Matching) -> Option<Vec<VertexId>> {
    let mate = m.mates(g.order());
    let mut on_path = vec![false; g.order()];
    for s in g.vertices().filter(|s| mate[s.0].is_none()) {
        let mut path = vec![s];
        on_path[s.0] = true;
        if extend_alternating(g, &mate, &mut path, &mut on_path) {
            return Some(path);
        }
        on_path[s.0] = false;
    }
    None
}

/// The path so far ends on a vertex reached through a matched edge (or is
/// the free start); leave through an unmatched edge.
fn extend_alternating(
    g: &Graph,
    mate: &[Option<VertexId>],
    path: &mut Vec<VertexId>,
    on_path: &mut [bool],
) -> bool {
    let x = *path.last().expect("path is never empty");
    for &y in g.neighbors(x) {
        if on_path[y.0] || mate[x.0] == Some(y) {
            continue;
        }
        match mate[y.0] {
            None => {
                path.push(y);
                return true;
            }
            Some(z) if !on_path[z.0] => {
                path.push(y);
                path.push(z);
                on_path[y.0] = true;
                on_path[z.0] = true;
                if extend_alternating(g, mate, path, on_path) {
                    return true;
                }
                on_path[y.0] = false;
                on_path[z.0] = false;
                path.truncate(path.len() - 2);
            }
            Some(_) => {}
        }
    }
    false
}

/// Maximum matching of a forest by the leaf rule: match some leaf to its
/// only neighbour, delete both, repeat. Isolated vertices are dropped
/// unmatched.
pub fn forest_maximum_matching(t: &Graph) -> Result<Matching> {
    if !t.is_forest() {
        return Err(Error::NotAForest);
    }
    let n = t.order();
    let mut deg: Vec<usize> = t.vertices().map(|v| t.degree(v)).collect();
    let mut gone = vec![false; n];
    let mut stack: Vec<VertexId> = (0..n)
        .rev()
        .filter(|&v| deg[v] <= 1)
        .map(VertexId)
        .collect();
    let mut edges = Vec::new();
    let drop = |v: VertexId, gone: &mut [bool], deg: &mut [usize], stack: &mut Vec<VertexId>| {
        gone[v.0] = true;
        for &w in t.neighbors(v) {
            if !gone[w.0] {
                deg[w.0] -= 1;
                if deg[w.0] <= 1 {
                    stack.push(w);
                }
            }
        }
    };
    while let Some(u) = stack.pop() {
        if gone[u.0] {
            continue;
        }
        match t.neighbors(u).iter().copied().find(|w| !gone[w.0]) {
            None => gone[u.0] = true,
            Some(w) => {
                edges.push((u, w));
                gone[u.0] = true;
                drop(w, &mut gone, &mut deg, &mut stack);
            }
        }
    }
    Ok(Matching::new(edges))
}

/// Whether the forest has a matching covering every vertex.
pub fn has_perfect_matching(t: &Graph) -> Result<bool> {
    Ok(2 * forest_maximum_matching(t)?.len() == t.order())
}

/// Vertices missed by at least one maximum matching, found through
/// `nu(G - v) = nu(G)`.
pub fn eg_set(g: &Graph) -> Result<VertexSet> {
    eg_set_with_limit(g, DEFAULT_ORACLE_LIMIT)
}

pub fn eg_set_with_limit(g: &Graph, limit: usize) -> Result<VertexSet> {
    let nu = max_matching_with_limit(g, limit)?.len();
    let mut out = VertexSet::new();
    for v in g.vertices() {
        let rest = crate::graph::remove_vertices(g, &[v].into_iter().collect())?;
        if max_matching_with_limit(&rest.graph, limit)?.len() == nu {
            out.insert(v);
        }
    }
    Ok(out)
}

/// Whether some maximum matching of the tree leaves `v` unsaturated.
pub fn mismatched_in(t: &Graph, v: VertexId) -> Result<bool> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if !t.contains(v) {
        return Err(Error::UnknownVertex(v.0));
    }
    Ok(eg_set(t)?.contains(&v))
}
