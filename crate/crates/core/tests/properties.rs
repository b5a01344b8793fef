use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nulldecomp_core::generate::{cycle, random_tree, random_unicyclic, tree_from_prufer};
use nulldecomp_core::linalg::{kernel_basis, support_of};
use nulldecomp_core::oracles::{eg_set, max_independent_set, max_matching};
use nulldecomp_core::{
    decompose, find_cycle, is_singular, null_basis, nullity, pendant_trees, remove_vertices, rref,
    support, Graph, Rational, RationalMatrix, VertexId, VertexSet,
};

fn prufer_tree() -> impl Strategy<Value = Graph> {
    (0usize..13).prop_flat_map(|k| {
        let n = k + 2;
        prop::collection::vec(0..n, k).prop_map(|seq| tree_from_prufer(&seq))
    })
}

fn unicyclic(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n, any::<u64>())
        .prop_map(|(n, seed)| random_unicyclic(&mut ChaCha8Rng::seed_from_u64(seed), n))
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::new(
        g.order(),
        g.edges().iter().map(|&(u, v)| (perm[u.0], perm[v.0])),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn tree_formulas_match_oracles(t in prufer_tree()) {
        let d = decompose(&t).unwrap();
        prop_assert_eq!(d.alpha(), max_independent_set(&t).unwrap().0);
        prop_assert_eq!(d.nu(), max_matching(&t).unwrap().len());
        prop_assert_eq!(eg_set(&t).unwrap(), d.supp.clone());
        prop_assert!(t.is_independent(&d.supp));
    }

    // Any other basis of the null space has the same support: mix the
    // canonical basis with a unit upper-triangular integer matrix.
    #[test]
    fn support_is_basis_independent(t in prufer_tree(), mix in prop::collection::vec(-3i64..=3, 64)) {
        let basis = null_basis(&t);
        let k = basis.dimension();
        let mixed: Vec<Vec<Rational>> = (0..k)
            .map(|i| {
                (0..t.order())
                    .map(|c| {
                        let mut acc = basis.vectors[i][c].clone();
                        for j in i + 1..k {
                            let w = Rational::from_integer(BigInt::from(mix[(i * 8 + j) % 64]));
                            acc += w * &basis.vectors[j][c];
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        prop_assert_eq!(support_of(&mixed), basis.support());
    }

    #[test]
    fn kernel_of_random_matrices(rows in 1usize..6, cols in 1usize..6,
                                 entries in prop::collection::vec(-4i64..=4, 36)) {
        let data: Vec<Vec<BigInt>> = (0..rows)
            .map(|r| (0..cols).map(|c| BigInt::from(entries[r * 6 + c])).collect())
            .collect();
        let m = RationalMatrix::from_rows(&data);
        let (reduced, rank) = rref(&m);
        let kernel = kernel_basis(&m);
        prop_assert_eq!(rank + kernel.len(), cols);
        for x in &kernel {
            prop_assert!(m.mul_vec(x).iter().all(Zero::is_zero));
        }
        // Pivot entries of the reduced form are one.
        for r in 0..rank {
            let lead = (0..cols).find(|&c| !reduced.get(r, c).is_zero()).unwrap();
            prop_assert!(reduced.get(r, lead).is_one());
        }
        let transposed: Vec<Vec<BigInt>> = (0..cols)
            .map(|c| (0..rows).map(|r| data[r][c].clone()).collect())
            .collect();
        prop_assert_eq!(rref(&RationalMatrix::from_rows(&transposed)).1, rank);
    }

    #[test]
    fn pendant_trees_partition(g in unicyclic(16)) {
        let c = find_cycle(&g).unwrap();
        let trees = pendant_trees(&g, &c).unwrap();
        prop_assert_eq!(trees.len(), c.len());
        let total: usize = trees.iter().map(|p| p.tree.graph.order()).sum();
        prop_assert_eq!(total, g.order());
        let mut seen = VertexSet::new();
        for p in &trees {
            prop_assert!(p.tree.graph.is_tree());
            let vs = p.tree.parent_vertices();
            prop_assert_eq!(vs.intersection(&c.vertex_set()).copied().collect::<Vec<_>>(), vec![p.root]);
            seen.extend(vs);
        }
        prop_assert_eq!(seen.len(), g.order());
    }

    #[test]
    fn cycle_is_canonical_under_relabelling(g in unicyclic(14), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let h = relabel(&g, &perm);
        let c = find_cycle(&g).unwrap();
        let ch = find_cycle(&h).unwrap();
        let mapped: VertexSet = c.vertices.iter().map(|v| VertexId(perm[v.0])).collect();
        prop_assert_eq!(ch.vertex_set(), mapped);
        prop_assert_eq!(ch.vertices[0], *ch.vertices.iter().min().unwrap());
        prop_assert!(ch.vertices[1] < ch.vertices[ch.len() - 1]);
    }

    #[test]
    fn removing_nothing_is_identity(g in unicyclic(12)) {
        let s = remove_vertices(&g, &VertexSet::new()).unwrap();
        prop_assert_eq!(&s.graph, &g);
        prop_assert!(g.vertices().all(|v| s.parent_of(v) == v));
    }

    #[test]
    fn supports_agree_with_nullity(g in unicyclic(12)) {
        let s = support(&g);
        prop_assert_eq!(s.is_empty(), nullity(&g) == 0);
        prop_assert_eq!(is_singular(&g).unwrap().0, !s.is_empty());
    }
}

#[test]
fn cycle_singular_iff_order_divisible_by_four() {
    for n in 3..=24 {
        let c = cycle(n);
        assert_eq!(nullity(&c) > 0, n % 4 == 0, "C_{n}");
        assert_eq!(nullity(&c), if n % 4 == 0 { 2 } else { 0 });
        assert_eq!(is_singular(&c).unwrap().0, n % 4 == 0);
    }
}

#[test]
fn random_trees_are_trees() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for n in 1..40 {
        let t = random_tree(&mut rng, n);
        assert!(t.is_tree());
        assert_eq!(t.size(), n - 1);
    }
}
