//! Formula-versus-oracle checks over random corpora.
//!
//! Each checker returns one outcome per named invariant; [`run`] fans the
//! corpus out over a thread pool and tallies the outcomes in a fixed order.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use nulldecomp_core::decomp::independent_set_avoiding;
use nulldecomp_core::generate::{cycle, tree_corpus, unicyclic_corpus};
use nulldecomp_core::linalg::{kernel_basis, support_of};
use nulldecomp_core::oracles::{
    find_augmenting_path, forest_maximum_matching, has_perfect_matching,
    max_independent_set_with_limit, max_matching_with_limit, mismatched_in,
};
use nulldecomp_core::unicyclic::{
    alpha_type1, alpha_type2, cycle_nullity, is_singular_at, nu_type1, nu_type2, type_i_witnesses,
};
use nulldecomp_core::{
    adjacency_matrix, analyze, connected_components, decompose, find_cycle, is_singular, nullity,
    pendant_trees, remove_vertices, support, unicyclic_nullity, Graph, TypeVerdict, VertexSet,
};

use crate::formats::write_edge_list;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Tree,
    Unicyclic,
    Cycle,
}

pub type Outcome = (&'static str, Result<(), String>);

fn core<T>(r: nulldecomp_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn alpha_oracle(g: &Graph, limit: usize) -> Result<usize, String> {
    core(max_independent_set_with_limit(g, limit)).map(|(a, _)| a)
}

fn nu_oracle(g: &Graph, limit: usize) -> Result<usize, String> {
    core(max_matching_with_limit(g, limit)).map(|m| m.len())
}

/// Number of kernel basis vectors and how many of them fail `A x = 0`, plus
/// a consistency check of the basis size and support.
pub fn basis_audit(g: &Graph) -> (usize, usize, Result<(), String>) {
    let a = adjacency_matrix(g);
    let basis = kernel_basis(&a);
    let violations = basis
        .iter()
        .filter(|x| x.iter().all(Zero::is_zero) || !a.mul_vec(x).iter().all(Zero::is_zero))
        .count();
    let consistent = expect_eq("basis size", basis.len(), nullity(g))
        .and_then(|()| expect_eq("support", support_of(&basis), support(g)));
    (basis.len(), violations, consistent)
}

fn exactness(g: &Graph) -> Result<(), String> {
    let (vectors, violations, consistent) = basis_audit(g);
    if violations > 0 {
        return Err(format!(
            "{violations} of {vectors} basis vectors fail A x = 0"
        ));
    }
    consistent
}

fn berge(g: &Graph, m: &nulldecomp_core::Matching) -> Result<(), String> {
    match find_augmenting_path(g, m) {
        None => Ok(()),
        Some(path) => Err(format!("augmenting path {path:?}")),
    }
}

pub const TREE_CHECKS: &[&str] = &[
    "α",
    "ν",
    "EG=Supp",
    "Supp independent",
    "core exclusion",
    "N-vertex flexibility",
    "perfect matching iff nonsingular",
    "α+ν=n",
    "N-trees perfectly matchable",
    "S-trees singular",
    "exactness",
    "certificates",
    "Berge",
];

/// Checks on a tree (forests are accepted as well).
pub fn tree_checks(t: &Graph, limit: usize) -> Vec<Outcome> {
    let dec = core(decompose(t));
    let alpha = alpha_oracle(t, limit);
    let nu = nu_oracle(t, limit);
    let run = |name: &'static str, f: &dyn Fn() -> Result<(), String>| (name, f());
    let d = || dec.clone();
    vec![
        run("α", &|| expect_eq("α", d()?.alpha(), alpha.clone()?)),
        run("ν", &|| expect_eq("ν", d()?.nu(), nu.clone()?)),
        run("EG=Supp", &|| {
            let eg = core(nulldecomp_core::oracles::eg_set_with_limit(t, limit))?;
            expect_eq("EG", eg, d()?.supp)
        }),
        run("Supp independent", &|| {
            expect_eq("independent", t.is_independent(&d()?.supp), true)
        }),
        run("core exclusion", &|| {
            let a = alpha.clone()?;
            for &u in &d()?.core {
                let rest = core(remove_vertices(t, &t.closed_neighborhood(&[u].into())))?;
                let with_u = 1 + alpha_oracle(&rest.graph, limit)?;
                if with_u >= a {
                    return Err(format!(
                        "core vertex {u} lies in an independent set of size {with_u}"
                    ));
                }
            }
            Ok(())
        }),
        run("N-vertex flexibility", &|| {
            let a = alpha.clone()?;
            for &u in &d()?.n_forest_vertices {
                let without = core(remove_vertices(t, &[u].into()))?;
                let with = core(remove_vertices(t, &t.closed_neighborhood(&[u].into())))?;
                expect_eq("alpha(T - u)", alpha_oracle(&without.graph, limit)?, a)?;
                expect_eq(
                    "1 + alpha(T - N[u])",
                    1 + alpha_oracle(&with.graph, limit)?,
                    a,
                )?;
            }
            Ok(())
        }),
        run("perfect matching iff nonsingular", &|| {
            let pm = core(has_perfect_matching(t))?;
            expect_eq("perfect matching", pm, nullity(t) == 0)?;
            expect_eq("oracle perfect matching", 2 * nu.clone()? == t.order(), pm)
        }),
        run("α+ν=n", &|| {
            expect_eq("α+ν", alpha.clone()? + nu.clone()?, t.order())
        }),
        run("N-trees perfectly matchable", &|| {
            let f = core(t.induced(&d()?.n_forest_vertices))?;
            for c in connected_components(&f.graph) {
                if !core(has_perfect_matching(&c.graph))? {
                    return Err(format!(
                        "N-tree {:?} has no perfect matching",
                        f.lift(&c.parent_vertices())
                    ));
                }
            }
            Ok(())
        }),
        run("S-trees singular", &|| {
            let f = core(t.induced(&d()?.s_forest_vertices))?;
            for c in connected_components(&f.graph) {
                if nullity(&c.graph) == 0 {
                    return Err(format!(
                        "S-tree {:?} is nonsingular",
                        f.lift(&c.parent_vertices())
                    ));
                }
            }
            Ok(())
        }),
        run("exactness", &|| exactness(t)),
        run("certificates", &|| {
            let dec = d()?;
            let set = independent_set_avoiding(t, &dec, None).ok_or("no independent set")?;
            expect_eq("independent", t.is_independent(&set), true)?;
            expect_eq("|I|", set.len(), dec.alpha())?;
            let m = core(forest_maximum_matching(t))?;
            expect_eq("matching valid", m.is_valid_in(t), true)?;
            expect_eq("|M|", m.len(), dec.nu())
        }),
        run("Berge", &|| berge(t, &core(forest_maximum_matching(t))?)),
    ]
}

pub const UNICYCLIC_CHECKS: &[&str] = &[
    "α",
    "ν",
    "singular iff η>0",
    "η composition",
    "type via EG",
    "every witness agrees",
    "Type II neighbours outside Supp(G-C)",
    "pendant partition",
    "exactness",
    "certificates",
    "Berge",
];

/// Checks on a unicyclic graph (bare cycles included).
pub fn unicyclic_checks(g: &Graph, limit: usize) -> Vec<Outcome> {
    let analysis = core(analyze(g));
    let alpha = alpha_oracle(g, limit);
    let nu = nu_oracle(g, limit);
    let eta = nullity(g);
    let a = || analysis.as_ref().map_err(Clone::clone);
    let run = |name: &'static str, f: &dyn Fn() -> Result<(), String>| (name, f());
    vec![
        run("α", &|| {
            let formula = match a()?.verdict {
                TypeVerdict::TypeI { witness } => core(alpha_type1(g, witness))?,
                TypeVerdict::TypeII => core(alpha_type2(g))?,
            };
            expect_eq("analysis α", a()?.alpha, formula)?;
            expect_eq("α", formula, alpha.clone()?)
        }),
        run("ν", &|| {
            let formula = match a()?.verdict {
                TypeVerdict::TypeI { witness } => core(nu_type1(g, witness))?,
                TypeVerdict::TypeII => core(nu_type2(g))?,
            };
            expect_eq("analysis ν", a()?.nu, formula)?;
            expect_eq("ν", formula, nu.clone()?)
        }),
        run("singular iff η>0", &|| {
            expect_eq("singular", core(is_singular(g))?.0, eta > 0)
        }),
        run("η composition", &|| {
            expect_eq("η", core(unicyclic_nullity(g))?, eta)
        }),
        run("type via EG", &|| {
            let c = core(find_cycle(g))?;
            let mut matched = Vec::new();
            for p in core(pendant_trees(g, &c))? {
                if !core(mismatched_in(&p.tree.graph, p.root_local))? {
                    matched.push(p.root);
                }
            }
            matched.sort_unstable();
            expect_eq(
                "Type I witness",
                a()?.verdict.witness(),
                matched.first().copied(),
            )?;
            expect_eq("witnesses", core(type_i_witnesses(g))?, matched)
        }),
        run("every witness agrees", &|| {
            for w in core(type_i_witnesses(g))? {
                expect_eq("α at witness", core(alpha_type1(g, w))?, alpha.clone()?)?;
                expect_eq("ν at witness", core(nu_type1(g, w))?, nu.clone()?)?;
                expect_eq(
                    "singular at witness",
                    core(is_singular_at(g, w))?.0,
                    eta > 0,
                )?;
            }
            Ok(())
        }),
        run("Type II neighbours outside Supp(G-C)", &|| {
            if a()?.verdict != TypeVerdict::TypeII {
                return Ok(());
            }
            let cycle_set = a()?.cycle.vertex_set();
            let rest = core(remove_vertices(g, &cycle_set))?;
            let supp = rest.lift(&support(&rest.graph));
            for &c in &a()?.cycle.vertices {
                for u in g.neighbors(c) {
                    if supp.contains(u) {
                        return Err(format!("{u}, next to cycle vertex {c}, is in Supp(G-C)"));
                    }
                }
            }
            Ok(())
        }),
        run("pendant partition", &|| {
            let mut seen = VertexSet::new();
            let mut total = 0;
            for p in &a()?.pendant {
                total += p.vertices.len();
                seen.extend(p.vertices.iter().copied());
            }
            expect_eq("total order", total, g.order())?;
            expect_eq("covered", seen.len(), g.order())
        }),
        run("exactness", &|| exactness(g)),
        run("certificates", &|| {
            let an = a()?;
            expect_eq("independent", g.is_independent(&an.independent_set), true)?;
            expect_eq("|I|", an.independent_set.len(), alpha.clone()?)?;
            expect_eq("matching valid", an.matching.is_valid_in(g), true)?;
            expect_eq("|M|", an.matching.len(), nu.clone()?)
        }),
        run("Berge", &|| berge(g, &a()?.matching)),
    ]
}

pub const CYCLE_CHECKS: &[&str] = &[
    "singular iff 4|n",
    "η in {0,2}",
    "α=ν=floor(n/2)",
    "exactness",
    "certificates",
];

pub fn cycle_checks(g: &Graph, limit: usize) -> Vec<Outcome> {
    let n = g.order();
    let analysis = core(analyze(g));
    let a = || analysis.as_ref().map_err(Clone::clone);
    let run = |name: &'static str, f: &dyn Fn() -> Result<(), String>| (name, f());
    vec![
        run("singular iff 4|n", &|| {
            expect_eq("singular", core(is_singular(g))?.0, n.is_multiple_of(4))?;
            expect_eq("η>0", nullity(g) > 0, n.is_multiple_of(4))
        }),
        run("η in {0,2}", &|| {
            expect_eq("η", nullity(g), cycle_nullity(n))?;
            expect_eq("composed η", a()?.nullity, cycle_nullity(n))
        }),
        run("α=ν=floor(n/2)", &|| {
            expect_eq("α", a()?.alpha, n / 2)?;
            expect_eq("ν", a()?.nu, n / 2)?;
            expect_eq("oracle α", alpha_oracle(g, limit)?, n / 2)?;
            expect_eq("oracle ν", nu_oracle(g, limit)?, n / 2)
        }),
        run("exactness", &|| exactness(g)),
        run("certificates", &|| {
            let an = a()?;
            expect_eq("independent", g.is_independent(&an.independent_set), true)?;
            expect_eq("|I|", an.independent_set.len(), n / 2)?;
            expect_eq("matching valid", an.matching.is_valid_in(g), true)?;
            expect_eq("|M|", an.matching.len(), n / 2)
        }),
    ]
}

/// Deterministic corpus for `kind`. Cycles take `n = min + i mod (max - min + 1)`
/// for the `i`-th instance, with `min` raised to 3.
pub fn corpus(kind: Kind, count: usize, orders: RangeInclusive<usize>, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match kind {
        Kind::Tree => tree_corpus(&mut rng, count, orders),
        Kind::Unicyclic => {
            unicyclic_corpus(&mut rng, count, (*orders.start()).max(3)..=*orders.end())
        }
        Kind::Cycle => {
            let lo = (*orders.start()).max(3);
            let span = orders.end().saturating_sub(lo) + 1;
            (0..count).map(|i| cycle(lo + i % span)).collect()
        }
    }
}

#[derive(Debug, Clone)]
pub struct Tally {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
}

#[derive(Debug, Clone)]
pub struct Failure {
    pub instance: usize,
    pub check: &'static str,
    pub detail: String,
    pub graph: Graph,
}

#[derive(Debug, Clone)]
pub struct Summary {
    pub tallies: Vec<Tally>,
    pub failures: Vec<Failure>,
}

impl Summary {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn tally(&self, name: &str) -> Option<&Tally> {
        self.tallies.iter().find(|t| t.name == name)
    }

    /// One `passed/total name ok|FAIL` line per check, then up to
    /// `max_echo` failing graphs as edge lists.
    pub fn render(&self, max_echo: usize) -> String {
        let mut out = String::new();
        for t in &self.tallies {
            let status = if t.passed == t.total { "ok" } else { "FAIL" };
            let _ = writeln!(out, "{}/{} {} {}", t.passed, t.total, t.name, status);
        }
        for f in self.failures.iter().take(max_echo) {
            let _ = writeln!(
                out,
                "\ninstance {} failed {}: {}",
                f.instance, f.check, f.detail
            );
            out.push_str(&write_edge_list(&f.graph));
        }
        if self.failures.len() > max_echo {
            let _ = writeln!(
                out,
                "\n... {} more failures",
                self.failures.len() - max_echo
            );
        }
        out
    }
}

pub fn checks_for(kind: Kind) -> &'static [&'static str] {
    match kind {
        Kind::Tree => TREE_CHECKS,
        Kind::Unicyclic => UNICYCLIC_CHECKS,
        Kind::Cycle => CYCLE_CHECKS,
    }
}

/// Runs the checks for `kind` on every graph in parallel.
pub fn run(kind: Kind, graphs: &[Graph], limit: usize) -> Summary {
    let outcomes: Vec<Vec<Outcome>> = graphs
        .par_iter()
        .map(|g| match kind {
            Kind::Tree => tree_checks(g, limit),
            Kind::Unicyclic => unicyclic_checks(g, limit),
            Kind::Cycle => cycle_checks(g, limit),
        })
        .collect();
    let mut tallies: Vec<Tally> = checks_for(kind)
        .iter()
        .map(|&name| Tally {
            name,
            passed: 0,
            total: graphs.len(),
        })
        .collect();
    let mut failures = Vec::new();
    for (i, results) in outcomes.into_iter().enumerate() {
        for (name, result) in results {
            let tally = tallies
                .iter_mut()
                .find(|t| t.name == name)
                .expect("every outcome has a registered name");
            match result {
                Ok(()) => tally.passed += 1,
                Err(detail) => failures.push(Failure {
                    instance: i,
                    check: name,
                    detail,
                    graph: graphs[i].clone(),
                }),
            }
        }
    }
    Summary { tallies, failures }
}

/// Orders in `graphs` at which `g` is singular, for the cycle sweep summary.
pub fn singular_orders(graphs: &[Graph]) -> Vec<usize> {
    let mut out: Vec<usize> = graphs
        .iter()
        .filter(|g| nullity(g) > 0)
        .map(Graph::order)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}
