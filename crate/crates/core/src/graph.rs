//! Simple undirected graphs and the structural queries the rest of the crate
//! is built on: shape classification, the unique cycle of a unicyclic graph,
//! pendant trees, induced subgraphs and connected components.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Dense vertex index in `[0, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl From<usize> for VertexId {
    fn from(i: usize) -> Self {
        VertexId(i)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub type VertexSet = BTreeSet<VertexId>;

/// An undirected simple graph on vertices `0..n`.
///
/// Adjacency lists are kept sorted and the edge list holds each edge once as
/// `(u, v)` with `u < v`, sorted lexicographically. Optional display names
/// travel with the vertices through subgraph extraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    edges: Vec<(VertexId, VertexId)>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, repeated edges and endpoints
    /// outside `0..n`.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut list = Vec::new();
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            if u >= n {
                return Err(Error::UnknownVertex(u));
            }
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            if !seen.insert((a, b)) {
                return Err(Error::DuplicateEdge(a, b));
            }
            adj[a].push(VertexId(b));
            adj[b].push(VertexId(a));
            list.push((VertexId(a), VertexId(b)));
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        list.sort_unstable();
        Ok(Graph {
            adj,
            edges: list,
            labels: None,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
            labels: None,
        }
    }

    /// Attaches display names, one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order() {
            return Err(Error::UnknownVertex(labels.len().min(self.order())));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.order()).map(VertexId)
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v.0]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.0].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u.0 < self.order() && self.adj[u.0].binary_search(&v).is_ok()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.0 < self.order()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `v`, if the graph carries names.
    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels
            .as_ref()
            .and_then(|l| l.get(v.0))
            .map(String::as_str)
    }

    /// Looks a vertex up by display name.
    pub fn vertex_named(&self, name: &str) -> Option<VertexId> {
        self.labels
            .as_ref()?
            .iter()
            .position(|l| l == name)
            .map(VertexId)
    }

    /// Induced subgraph on `keep`. The local numbering follows the ascending
    /// order of `keep`, so the returned map is sorted.
    pub fn induced(&self, keep: &VertexSet) -> Result<Subgraph> {
        if let Some(bad) = keep.iter().find(|v| !self.contains(**v)) {
            return Err(Error::UnknownVertex(bad.0));
        }
        let to_parent: Vec<VertexId> = keep.iter().copied().collect();
        let mut local = vec![usize::MAX; self.order()];
        for (i, v) in to_parent.iter().enumerate() {
            local[v.0] = i;
        }
        let edges = self.edges.iter().filter_map(|&(a, b)| {
            let (la, lb) = (local[a.0], local[b.0]);
            (la != usize::MAX && lb != usize::MAX).then_some((la, lb))
        });
        let mut graph = Graph::new(to_parent.len(), edges)?;
        if let Some(labels) = &self.labels {
            graph.labels = Some(to_parent.iter().map(|v| labels[v.0].clone()).collect());
        }
        Ok(Subgraph { graph, to_parent })
    }

    /// Number of connected components (0 for the empty graph).
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.order()];
        let mut count = 0;
        for s in 0..self.order() {
            if !seen[s] {
                count += 1;
                self.mark_component(VertexId(s), &mut seen);
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Acyclic, possibly disconnected; the empty graph counts.
    pub fn is_forest(&self) -> bool {
        self.size() + self.component_count() == self.order()
    }

    pub fn is_tree(&self) -> bool {
        self.order() > 0 && self.is_connected() && self.size() + 1 == self.order()
    }

    /// True when no two vertices of `set` are adjacent.
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter()
            .all(|&v| self.neighbors(v).iter().all(|w| !set.contains(w)))
    }

    /// Closed neighbourhood of a vertex set.
    pub fn closed_neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut out = set.clone();
        for &v in set {
            out.extend(self.neighbors(v).iter().copied());
        }
        out
    }

    fn mark_component(&self, start: VertexId, seen: &mut [bool]) -> Vec<VertexId> {
        let mut stack = vec![start];
        let mut members = Vec::new();
        seen[start.0] = true;
        while let Some(v) = stack.pop() {
            members.push(v);
            for &w in self.neighbors(v) {
                if !seen[w.0] {
                    seen[w.0] = true;
                    stack.push(w);
                }
            }
        }
        members
    }
}

/// An induced subgraph together with its map back to the parent graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// `to_parent[local]` is the parent vertex; always ascending.
    pub to_parent: Vec<VertexId>,
}

impl Subgraph {
    pub fn parent_of(&self, local: VertexId) -> VertexId {
        self.to_parent[local.0]
    }

    pub fn local_of(&self, parent: VertexId) -> Option<VertexId> {
        self.to_parent.binary_search(&parent).ok().map(VertexId)
    }

    pub fn lift(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|&v| self.parent_of(v)).collect()
    }

    pub fn parent_vertices(&self) -> VertexSet {
        self.to_parent.iter().copied().collect()
    }
}

/// Coarse structural class of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Tree,
    Unicyclic,
    Cycle,
    Forest,
    Other,
}

impl Shape {
    pub fn as_str(self) -> &'static str {
        match self {
            Shape::Tree => "tree",
            Shape::Unicyclic => "unicyclic",
            Shape::Cycle => "cycle",
            Shape::Forest => "forest",
            Shape::Other => "other",
        }
    }
}

pub fn classify_shape(g: &Graph) -> Result<Shape> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let m = g.size();
    let components = g.component_count();
    let shape = if components == 1 {
        if m + 1 == n {
            Shape::Tree
        } else if m == n {
            if g.vertices().all(|v| g.degree(v) == 2) {
                Shape::Cycle
            } else {
                Shape::Unicyclic
            }
        } else {
            Shape::Other
        }
    } else if m + components == n {
        Shape::Forest
    } else {
        Shape::Other
    };
    Ok(shape)
}

/// The unique cycle of a unicyclic graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleInfo {
    /// Traversal order: smallest vertex first, then its smaller cycle
    /// neighbour.
    pub vertices: Vec<VertexId>,
}

impl CycleInfo {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    /// Cycle edges in traversal order, closing edge last.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }
}

pub fn find_cycle(g: &Graph) -> Result<CycleInfo> {
    match classify_shape(g) {
        Ok(Shape::Unicyclic | Shape::Cycle) => {}
        _ => return Err(Error::NotUnicyclic),
    }
    // Strip leaves until only the cycle is left.
    let n = g.order();
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut queue: VecDeque<VertexId> = g.vertices().filter(|v| deg[v.0] == 1).collect();
    while let Some(v) = queue.pop_front() {
        removed[v.0] = true;
        for &w in g.neighbors(v) {
            if !removed[w.0] {
                deg[w.0] -= 1;
                if deg[w.0] == 1 {
                    queue.push_back(w);
                }
            }
        }
    }
    let on_cycle = |v: VertexId| !removed[v.0];
    let start = g
        .vertices()
        .find(|&v| on_cycle(v))
        .ok_or(Error::InvariantViolated("unicyclic graph without a cycle"))?;
    let mut vertices = vec![start];
    let mut prev = start;
    let mut cur = g
        .neighbors(start)
        .iter()
        .copied()
        .find(|&w| on_cycle(w))
        .ok_or(Error::InvariantViolated(
            "cycle vertex without cycle neighbour",
        ))?;
    while cur != start {
        vertices.push(cur);
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| on_cycle(w) && w != prev)
            .ok_or(Error::InvariantViolated("cycle walk dead end"))?;
        prev = cur;
        cur = next;
    }
    if vertices.len() < 3 {
        return Err(Error::InvariantViolated("cycle shorter than three"));
    }
    Ok(CycleInfo { vertices })
}

/// The maximal subtree hanging at a cycle vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendantTree {
    /// Cycle vertex, in parent numbering.
    pub root: VertexId,
    /// Root in the tree's own numbering.
    pub root_local: VertexId,
    pub tree: Subgraph,
}

/// One pendant tree per cycle vertex, in cycle order. A cycle vertex with
/// nothing hanging off it gets the single-vertex tree.
pub fn pendant_trees(g: &Graph, c: &CycleInfo) -> Result<Vec<PendantTree>> {
    let on_cycle = c.vertex_set();
    c.vertices
        .iter()
        .map(|&root| {
            let mut members = VertexSet::new();
            members.insert(root);
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                for &w in g.neighbors(v) {
                    if !on_cycle.contains(&w) && members.insert(w) {
                        stack.push(w);
                    }
                }
            }
            let tree = g.induced(&members)?;
            let root_local = tree
                .local_of(root)
                .ok_or(Error::InvariantViolated("root missing from pendant tree"))?;
            Ok(PendantTree {
                root,
                root_local,
                tree,
            })
        })
        .collect()
}

/// Induced subgraph on `V(g) \ vs`.
pub fn remove_vertices(g: &Graph, vs: &VertexSet) -> Result<Subgraph> {
    if let Some(bad) = vs.iter().find(|v| !g.contains(**v)) {
        return Err(Error::UnknownVertex(bad.0));
    }
    let keep: VertexSet = g.vertices().filter(|v| !vs.contains(v)).collect();
    g.induced(&keep)
}

/// Connected components ordered by their smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<Subgraph> {
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for s in g.vertices() {
        if seen[s.0] {
            continue;
        }
        let members: VertexSet = g.mark_component(s, &mut seen).into_iter().collect();
        // Induced on existing vertices cannot fail.
        if let Ok(sub) = g.induced(&members) {
            out.push(sub);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::new(2, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::new(2, [(0, 2)]), Err(Error::UnknownVertex(2)));
    }

    #[test]
    fn shapes() {
        assert_eq!(classify_shape(&cycle(4)), Ok(Shape::Cycle));
        assert_eq!(classify_shape(&Graph::empty(1)), Ok(Shape::Tree));
        assert_eq!(classify_shape(&Graph::empty(3)), Ok(Shape::Forest));
        assert_eq!(classify_shape(&Graph::empty(0)), Err(Error::EmptyGraph));
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(classify_shape(&k4), Ok(Shape::Other));
        // triangle plus a disjoint edge: one cycle but disconnected
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap();
        assert_eq!(classify_shape(&g), Ok(Shape::Other));
    }

    #[test]
    fn cycle_orientation_is_canonical() {
        let c5 = cycle(5);
        let info = find_cycle(&c5).unwrap();
        assert_eq!(info.vertices, (0..5).map(VertexId).collect::<Vec<_>>());
        // Same cycle listed backwards and with a tail.
        let g = Graph::new(6, [(4, 3), (3, 2), (2, 1), (1, 4), (0, 2), (5, 0)]).unwrap();
        let info = find_cycle(&g).unwrap();
        assert_eq!(info.vertices, [1, 2, 3, 4].map(VertexId).to_vec());
    }

    #[test]
    fn find_cycle_rejects_trees() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(find_cycle(&p3), Err(Error::NotUnicyclic));
    }

    #[test]
    fn bare_cycle_has_single_vertex_pendant_trees() {
        let c6 = cycle(6);
        let info = find_cycle(&c6).unwrap();
        let trees = pendant_trees(&c6, &info).unwrap();
        assert_eq!(trees.len(), 6);
        for t in &trees {
            assert_eq!(t.tree.graph.order(), 1);
            assert_eq!(t.tree.to_parent, vec![t.root]);
        }
    }

    #[test]
    fn remove_all_and_none() {
        let g = cycle(4);
        let all: VertexSet = g.vertices().collect();
        assert_eq!(remove_vertices(&g, &all).unwrap().graph.order(), 0);
        let none = remove_vertices(&g, &VertexSet::new()).unwrap();
        assert_eq!(none.graph, g);
        assert_eq!(none.to_parent, g.vertices().collect::<Vec<_>>());
        let bad: VertexSet = [VertexId(9)].into_iter().collect();
        assert_eq!(remove_vertices(&g, &bad), Err(Error::UnknownVertex(9)));
    }

    #[test]
    fn components_in_order() {
        let g = Graph::new(5, [(4, 2), (0, 3)]).unwrap();
        let comps = connected_components(&g);
        let sets: Vec<Vec<usize>> = comps
            .iter()
            .map(|c| c.to_parent.iter().map(|v| v.0).collect())
            .collect();
        assert_eq!(sets, vec![vec![0, 3], vec![1], vec![2, 4]]);
        assert!(connected_components(&Graph::empty(0)).is_empty());
        let one = connected_components(&cycle(3));
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].graph, cycle(3));
    }

    #[test]
    fn labels_follow_subgraphs() {
        let g = Graph::new(3, [(0, 1), (1, 2)])
            .unwrap()
            .with_labels(["a", "b", "c"].map(String::from).to_vec())
            .unwrap();
        let sub = remove_vertices(&g, &[VertexId(0)].into_iter().collect()).unwrap();
        assert_eq!(sub.graph.label(VertexId(0)), Some("b"));
        assert_eq!(g.vertex_named("c"), Some(VertexId(2)));
    }
}
