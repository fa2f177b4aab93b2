//! One pass/fail line per release criterion, written straight to stderr so
//! the lines show up in ordinary `cargo test` output.

mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use fitting::corpus::{builtin_catalog, emit_report, run_suite, Format, SuiteOptions};
use fitting::radicals::{
    delta, f_tilde, fitting_by_normal_scan, fitting_by_sylow_cores, frattini,
    p_decomposable_residual_by_commutators, p_decomposable_residual_by_scan,
    quasinilpotent_radical, radical_report,
};
use fitting::theorems::counterexample::build_counterexample;
use fitting::theorems::probes::{probe_problems, ProbeSummary};
use fitting::theorems::{CheckKind, Status, CHECKS};
use fitting::{build_group, direct_product, GroupTable, Subgroup};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn radical_chain() -> Outcome {
    let start = Instant::now();
    let tables = common::catalog_tables();
    let max = tables.iter().map(GroupTable::order).max().unwrap_or(0);
    let mut bad = Vec::new();
    for g in &tables {
        match radical_report(g) {
            Ok(r) if r.chain_violation().is_none() => {}
            Ok(r) => bad.push(format!("{}: {}", g.name(), r.chain_violation().unwrap())),
            Err(e) => bad.push(format!("{}: {e}", g.name())),
        }
    }
    let elapsed = start.elapsed();
    outcome(
        tables.len() >= 35 && bad.is_empty() && elapsed <= Duration::from_secs(300),
        format!(
            "{} groups, orders up to {max}, {} violations, {elapsed:.2?} {bad:?}",
            tables.len(),
            bad.len()
        ),
    )
}

fn dual_oracles() -> Outcome {
    let mut comparisons = 0;
    let mut bad = Vec::new();
    for g in common::catalog_tables() {
        comparisons += 1;
        if fitting_by_normal_scan(&g) != fitting_by_sylow_cores(&g) {
            bad.push(format!("{} F", g.name()));
        }
        for p in g.primes() {
            comparisons += 1;
            match p_decomposable_residual_by_scan(&g, p) {
                Ok(s) if s == p_decomposable_residual_by_commutators(&g, p) => {}
                _ => bad.push(format!("{} p={p}", g.name())),
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{comparisons} comparisons, disagreements {bad:?}"),
    )
}

fn theorem_suite() -> Outcome {
    let out = match run_suite(&builtin_catalog(), &SuiteOptions::default()) {
        Ok(o) => o,
        Err(e) => return outcome(false, e.to_string()),
    };
    let theorem = |id: &str| {
        CHECKS
            .iter()
            .any(|c| c.id == id && c.kind == CheckKind::Theorem)
    };
    let failures: Vec<String> = out
        .records
        .iter()
        .filter(|r| r.status == Status::Fails && (r.is_internal() || theorem(&r.check_id)))
        .map(|r| format!("{} {}", r.group, r.check_id))
        .collect();
    let count = |s: Status| out.records.iter().filter(|r| r.status == s).count();
    outcome(
        failures.is_empty() && out.exit_code == 0,
        format!(
            "{} records: {} holds, {} vacuous, {} skipped; failures {failures:?}",
            out.records.len(),
            count(Status::Holds),
            count(Status::Vacuous),
            count(Status::Skipped)
        ),
    )
}

fn spot_values() -> Outcome {
    let cat = builtin_catalog();
    let get =
        |n: &str| build_group(&cat.iter().find(|e| e.name() == n).unwrap().spec, 360).unwrap();
    let members = |g: &GroupTable, keep: &dyn Fn(usize) -> bool| -> Subgroup {
        g.subgroup_from_elements((0..g.order()).filter(|&x| keep(x)))
            .unwrap()
    };
    let cycle_type = |g: &GroupTable, x: usize| -> Vec<usize> {
        let mut t: Vec<usize> = g.perm(x).unwrap().cycles().iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    };
    let mut checks: Vec<(&str, bool)> = Vec::new();

    let s4 = get("S4");
    let v4 = members(&s4, &|x| x == 0 || cycle_type(&s4, x) == [2, 2]);
    checks.push(("S4 Phi = 1", frattini(&s4).unwrap().is_trivial()));
    checks.push(("S4 F = V4", fitting_by_normal_scan(&s4) == v4));
    checks.push(("S4 F* = V4", quasinilpotent_radical(&s4).unwrap() == v4));
    checks.push(("S4 F~ = V4", f_tilde(&s4).unwrap() == v4));

    let q8 = get("Q8");
    let z = members(&q8, &|x| q8.mul(x, x) == 0);
    checks.push((
        "Q8 Phi of order 2",
        z.order() == 2 && frattini(&q8).unwrap() == z,
    ));
    checks.push(("Q8 F~ = Q8", f_tilde(&q8).unwrap().is_whole()));

    let a5 = get("A5");
    checks.push(("A5 F = 1", fitting_by_normal_scan(&a5).is_trivial()));
    checks.push((
        "A5 F* = A5",
        quasinilpotent_radical(&a5).unwrap().is_whole(),
    ));
    checks.push(("A5 F~ = A5", f_tilde(&a5).unwrap().is_whole()));

    checks.push(("Delta(S3) = 1", delta(&get("S3")).unwrap().is_trivial()));

    let s3 = get("S3");
    let a3 = members(&s3, &|x| x == 0 || cycle_type(&s3, x) == [3]);
    let p = direct_product(&s3, &s4, 360).unwrap();
    let m = s4.order();
    let expected = p
        .table
        .subgroup_from_elements(
            a3.elements()
                .flat_map(|a| v4.elements().map(move |b| a * m + b)),
        )
        .unwrap();
    checks.push((
        "F~(S3xS4) = A3xV4",
        expected.order() == 12 && f_tilde(&p.table).unwrap() == expected,
    ));

    let failed: Vec<&str> = checks
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(n, _)| *n)
        .collect();
    outcome(
        failed.is_empty(),
        format!("{} values, mismatches {failed:?}", checks.len()),
    )
}

fn counterexample() -> Outcome {
    let start = Instant::now();
    let result = build_counterexample();
    let elapsed = start.elapsed();
    match result {
        Ok((r, cert)) => outcome(
            cert.all_hold() && r.order() == 294 && elapsed <= Duration::from_secs(30),
            format!(
                "order {}, {} properties certified in {elapsed:.2?}",
                r.order(),
                cert.properties().len()
            ),
        ),
        Err(e) => outcome(false, e.to_string()),
    }
}

fn probes() -> Outcome {
    let mut list = Vec::new();
    for g in common::catalog_tables() {
        match probe_problems(&g) {
            Ok(p) => list.push(p),
            Err(e) => return outcome(false, format!("{}: {e}", g.name())),
        }
    }
    let all_hold = list.iter().all(|p| p.ftilde_inf_criterion == Status::Holds);
    let s = ProbeSummary::from_probes(&list);
    outcome(
        s.max_index <= 1 && all_hold,
        format!(
            "{} groups, max stabilization index {}, flagged {:?}, F~inf criterion violations {:?}, skipped {:?}",
            s.groups, s.max_index, s.high_index, s.criterion_violations, s.criterion_skipped
        ),
    )
}

fn lattice_oracle() -> Outcome {
    let groups = common::small_catalog(24);
    let mut bad = Vec::new();
    for (_, g) in &groups {
        let brute = common::brute_subgroups(g).len();
        match g.subgroups() {
            Ok(l) if l.len() == brute => {}
            Ok(l) => bad.push(format!("{} {} vs {brute}", g.name(), l.len())),
            Err(e) => bad.push(format!("{} {e}", g.name())),
        }
    }
    outcome(
        bad.is_empty(),
        format!("{} groups of order <= 24, mismatches {bad:?}", groups.len()),
    )
}

fn determinism() -> Outcome {
    let corpus = builtin_catalog();
    let render = |jobs| -> Result<(String, String), String> {
        let opts = SuiteOptions {
            jobs,
            ..Default::default()
        };
        let out = run_suite(&corpus, &opts).map_err(|e| e.to_string())?;
        Ok((
            emit_report(&out.records, Format::Lines),
            emit_report(&out.records, Format::Table),
        ))
    };
    match (render(1), render(4)) {
        (Ok(a), Ok(b)) => outcome(
            a == b,
            format!("{} bytes of line records, jobs 1 vs 4", a.0.len()),
        ),
        (Err(e), _) | (_, Err(e)) => outcome(false, e),
    }
}

type Criterion = (&'static str, fn() -> Outcome);

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        ("radical chain", radical_chain),
        ("dual oracles", dual_oracles),
        ("theorem suite", theorem_suite),
        ("spot values", spot_values),
        ("counterexample", counterexample),
        ("problem probes", probes),
        ("lattice oracle", lattice_oracle),
        ("determinism", determinism),
    ];
    let mut stderr = std::io::stderr();
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        writeln!(stderr, "acceptance {}: {tag} {name}: {}", i + 1, o.detail).unwrap();
        if !o.pass {
            failed.push(*name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
