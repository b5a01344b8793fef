//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use nulldecomp::checks::{self, basis_audit, Kind, Summary};
use nulldecomp::fixtures;
use nulldecomp_core::generate::cycle;
use nulldecomp_core::oracles::DEFAULT_ORACLE_LIMIT;
use nulldecomp_core::{is_singular, nullity};

const SEED: u64 = 1;

struct Gate {
    failed: usize,
}

impl Gate {
    fn report(
        &mut self,
        id: u32,
        title: &str,
        ok: bool,
        elapsed: Duration,
        budget: Duration,
        detail: &str,
    ) {
        let in_time = elapsed <= budget;
        let pass = ok && in_time;
        if !pass {
            self.failed += 1;
        }
        let timing = if in_time {
            format!("{:.2?} of {:.0?}", elapsed, budget)
        } else {
            format!("{:.2?}, over the {:.0?} budget", elapsed, budget)
        };
        println!(
            "{} criterion {id}: {title} [{timing}] {detail}",
            if pass { "PASS" } else { "FAIL" }
        );
    }
}

fn tallies(summary: &Summary, names: &[&str]) -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for &name in names {
        let t = summary.tally(name).expect("check is registered");
        ok &= t.passed == t.total;
        parts.push(format!("{}/{} {}", t.passed, t.total, name));
    }
    (ok, parts.join(", "))
}

fn main() -> ExitCode {
    let mut gate = Gate { failed: 0 };

    // 1. Worked examples.
    let start = Instant::now();
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    match fixtures::run_all(&dir) {
        Ok(results) => {
            let elapsed = start.elapsed();
            let fields: usize = results.iter().map(|r| r.rows.len()).sum();
            let ok = results.iter().all(|r| r.ok());
            let detail = format!("{} figures, {} fields", results.len(), fields);
            gate.report(
                1,
                "worked examples",
                ok,
                elapsed,
                Duration::from_secs(1),
                &detail,
            );
            if !ok {
                print!("{}", fixtures::render_table(&results, false));
            }
        }
        Err(e) => {
            gate.report(
                1,
                "worked examples",
                false,
                start.elapsed(),
                Duration::from_secs(1),
                &format!("{e:#}"),
            );
        }
    }

    // 2. Cycle law.
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in 3..=24 {
        let c = cycle(n);
        let eta = nullity(&c);
        let singular = is_singular(&c).map(|(s, _)| s);
        let want = n % 4 == 0;
        if singular != Ok(want) || eta != if want { 2 } else { 0 } {
            bad.push(n);
        }
    }
    gate.report(
        2,
        "cycle law, n = 3..24",
        bad.is_empty(),
        start.elapsed(),
        Duration::from_secs(1),
        &if bad.is_empty() {
            "22/22 cycles".to_string()
        } else {
            format!("fails at n = {bad:?}")
        },
    );

    // 3. Formula against oracle on unicyclic graphs.
    let start = Instant::now();
    let unicyclic = checks::corpus(Kind::Unicyclic, 2000, 6..=16, SEED);
    let u = checks::run(Kind::Unicyclic, &unicyclic, DEFAULT_ORACLE_LIMIT);
    let u_elapsed = start.elapsed();
    let (ok, detail) = tallies(&u, &["α", "ν", "singular iff η>0"]);
    gate.report(
        3,
        "unicyclic formula sweep",
        ok,
        u_elapsed,
        Duration::from_secs(60),
        &detail,
    );

    // 4. Tree formulas and structural properties.
    let start = Instant::now();
    let trees = checks::corpus(Kind::Tree, 1000, 2..=16, SEED);
    let t = checks::run(Kind::Tree, &trees, DEFAULT_ORACLE_LIMIT);
    let t_elapsed = start.elapsed();
    let (ok, detail) = tallies(
        &t,
        &[
            "α",
            "ν",
            "EG=Supp",
            "Supp independent",
            "core exclusion",
            "N-vertex flexibility",
        ],
    );
    gate.report(
        4,
        "tree formula sweep",
        ok,
        t_elapsed,
        Duration::from_secs(60),
        &detail,
    );

    // 5. Exactness of every basis vector on both corpora.
    let start = Instant::now();
    let (mut vectors, mut violations, mut inconsistent) = (0, 0, 0);
    for g in unicyclic.iter().chain(&trees) {
        let (v, bad, consistent) = basis_audit(g);
        vectors += v;
        violations += bad;
        inconsistent += usize::from(consistent.is_err());
    }
    gate.report(
        5,
        "exactness audit",
        violations == 0 && inconsistent == 0,
        start.elapsed(),
        Duration::from_secs(60),
        &format!(
            "{violations} violations in {vectors} basis vectors, {inconsistent} inconsistent bases"
        ),
    );

    // 6. Certificates.
    let (ok_u, detail_u) = tallies(&u, &["certificates", "Berge"]);
    let (ok_t, detail_t) = tallies(&t, &["certificates", "Berge"]);
    gate.report(
        6,
        "certificate validity",
        ok_u && ok_t,
        u_elapsed + t_elapsed,
        Duration::from_secs(120),
        &format!("unicyclic {detail_u}; trees {detail_t}"),
    );

    for s in [&u, &t] {
        if !s.ok() {
            print!("{}", s.render(5));
        }
    }
    if gate.failed == 0 {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {} criteria fail", gate.failed);
        ExitCode::FAILURE
    }
}
