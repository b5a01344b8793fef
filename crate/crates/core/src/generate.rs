//! Random and named graph families used by the test suites and the
//! verification sweeps.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::ops::RangeInclusive;

use rand::Rng;

use crate::graph::{Graph, VertexId};
use crate::unicyclic::{classify_type, TypeVerdict};

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are simple")
}

/// `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are simple")
}

/// Tree with the given Prüfer sequence; the order is `seq.len() + 2`.
pub fn tree_from_prufer(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    Graph::new(n, edges).expect("Prüfer decoding yields a simple tree")
}

/// Uniform labelled tree on `n >= 1` vertices.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Graph {
    match n {
        0 | 1 => Graph::empty(n),
        2 => path(2),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            tree_from_prufer(&seq)
        }
    }
}

/// Random tree closed by one uniformly chosen non-edge, `n >= 3`. The new
/// edge joins two vertices at distance at least two, so the cycle has length
/// at least three.
pub fn random_unicyclic<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Graph {
    assert!(n >= 3, "unicyclic graphs need at least three vertices");
    let tree = random_tree(rng, n);
    let non_edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !tree.has_edge(VertexId(u), VertexId(v)))
        .collect();
    let extra = non_edges[rng.gen_range(0..non_edges.len())];
    Graph::new(
        n,
        tree.edges()
            .iter()
            .map(|&(a, b)| (a.0, b.0))
            .chain(core::iter::once(extra)),
    )
    .expect("adding a non-edge keeps the graph simple")
}

/// `count` random trees with orders drawn uniformly from `orders`.
pub fn tree_corpus<R: Rng + ?Sized>(
    rng: &mut R,
    count: usize,
    orders: RangeInclusive<usize>,
) -> Vec<Graph> {
    (0..count)
        .map(|_| {
            let n = rng.gen_range(orders.clone());
            random_tree(rng, n)
        })
        .collect()
}

/// `count` random unicyclic graphs, rejection-sampled so that Type I and
/// Type II each make up about half of the corpus. After `50 * count`
/// attempts the balance requirement is dropped, so orders that only admit
/// one type (such as `n = 3`) still terminate.
pub fn unicyclic_corpus<R: Rng + ?Sized>(
    rng: &mut R,
    count: usize,
    orders: RangeInclusive<usize>,
) -> Vec<Graph> {
    let quota_i = count.div_ceil(2);
    let quota_ii = count / 2;
    let (mut type_i, mut type_ii) = (0, 0);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0usize;
    while out.len() < count {
        attempts += 1;
        let n = rng.gen_range(orders.clone()).max(3);
        let g = random_unicyclic(rng, n);
        let is_type_i = matches!(classify_type(&g), Ok(TypeVerdict::TypeI { .. }));
        let fits = if is_type_i {
            type_i < quota_i
        } else {
            type_ii < quota_ii
        };
        if fits || attempts > 50 * count {
            if is_type_i {
                type_i += 1;
            } else {
                type_ii += 1;
            }
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{classify_shape, Shape};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn prufer_known_sequence() {
        // Classic example: sequence (3, 3, 3, 4) on 6 vertices.
        let t = tree_from_prufer(&[3, 3, 3, 4]);
        let edges: Vec<(usize, usize)> = t.edges().iter().map(|&(a, b)| (a.0, b.0)).collect();
        assert_eq!(edges, vec![(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]);
    }

    #[test]
    fn random_shapes() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..20 {
            assert_eq!(classify_shape(&random_tree(&mut rng, n)), Ok(Shape::Tree));
        }
        for n in 3..20 {
            let s = classify_shape(&random_unicyclic(&mut rng, n)).unwrap();
            assert!(matches!(s, Shape::Unicyclic | Shape::Cycle));
        }
    }

    #[test]
    fn corpus_is_balanced() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let corpus = unicyclic_corpus(&mut rng, 40, 6..=12);
        let type_i = corpus
            .iter()
            .filter(|g| matches!(classify_type(g), Ok(TypeVerdict::TypeI { .. })))
            .count();
        assert_eq!(type_i, 20);
    }
}
