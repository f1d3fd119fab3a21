//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero when any fails. Runs without the libtest harness.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::BigRational;

use dicrit::bounds::{kn_bound_check, mader_bound_general, subdivision_bound};
use dicrit::colouring::{cc_bound_holds, dichromatic_number, is_k_dicritical};
use dicrit::families::{
    bidirected_complete, circulant_two_jumps, dicritical_short_paths, directed_cycle,
    directed_path, out_star, paley7, spindle, universal_join, wheel_of_digons,
};
use dicrit::graph::{digirth, longest_directed_path};
use dicrit::lab::{canonical_form, enumerate_all, verify, EnumerationSpec, Outcome, Suite, SuiteKind, SuiteParams};
use dicrit::subdivision::{contains_subdivision, find_spindle, find_tree_subdivision, TreeMode};
use dicrit::{Budget, Digraph};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn up_to_iso(n_max: usize) -> Vec<Digraph> {
    (1..=n_max)
        .flat_map(|n| enumerate_all(&EnumerationSpec::new(n), &Budget::new(7)).unwrap())
        .collect()
}

fn dicritical(d: &Digraph, k: usize) -> bool {
    is_k_dicritical(d, k, &Budget::default()).unwrap().is_dicritical()
}

fn suite(kind: SuiteKind, params: SuiteParams) -> Result<dicrit::lab::Verdict, String> {
    let v = verify(Suite::new(kind), &params);
    match &v.outcome {
        Outcome::Pass => Ok(v),
        Outcome::Fail(c) => Err(format!(
            "{} failed on {}: {}",
            v.suite, c.instance.label, c.predicate
        )),
        Outcome::Refused(why) => Err(format!("{} refused: {why}", v.suite)),
    }
}

fn c1() -> Check {
    let budget = Budget::default();
    for n in 1..=5 {
        let chi = dichromatic_number(&bidirected_complete(n), &budget).unwrap().0;
        ensure(chi == n, || format!("chi(bid K_{n}) = {chi}"))?;
    }
    let corpus = up_to_iso(4);
    for d in &corpus {
        let chi = dichromatic_number(d, &budget).unwrap().0;
        let acyclic = common::acyclic(&common::adjacency(d), &d.vertices().collect::<Vec<_>>());
        ensure((chi == 1) == acyclic, || format!("chi = {chi} on {d:?}"))?;
        ensure(chi == common::chi(d), || format!("oracle disagrees on {d:?}"))?;
    }
    Ok(format!("{} digraphs n<=4", corpus.len()))
}

fn c2() -> Check {
    let d = wheel_of_digons(10).unwrap();
    let chi = dichromatic_number(&d, &Budget::default()).unwrap().0;
    ensure(chi == 3, || format!("chi(D_10) = {chi}"))?;
    ensure(dicritical(&d, 3), || "D_10 not 3-dicritical".into())?;
    let c33 = spindle(3, 3).unwrap();
    let found = contains_subdivision(&d, &c33, None, &Budget::default()).unwrap();
    ensure(found.is_none(), || "D_10 contains a C(3,3) subdivision".into())?;
    let finder = find_spindle(&d, 3, &Budget::default()).unwrap();
    ensure(finder.is_none(), || "spindle finder found C(3,3) in D_10".into())?;
    Ok("chi=3, dicritical, no C(3,3)".into())
}

fn c3() -> Check {
    let budget = Budget::default();
    let mut orders = Vec::new();
    for n in [7, 9, 11] {
        let d = dicritical_short_paths(3, n).unwrap();
        ensure(dicritical(&d, 3), || format!("D_(3,{n}) not 3-dicritical"))?;
        let p = longest_directed_path(&d, &budget).unwrap();
        ensure(p.order() <= 9, || format!("D_(3,{n}) has a path on {} vertices", p.order()))?;
        orders.push(p.order());
    }
    let d47 = universal_join(&dicritical_short_paths(3, 7).unwrap());
    ensure(dicritical(&d47, 4), || "D_(4,7) not 4-dicritical".into())?;
    Ok(format!("longest paths {orders:?}, D_(4,7) 4-dicritical"))
}

fn c4() -> Check {
    let fixtures = [
        ("C5", directed_cycle(5).unwrap(), 2),
        ("bid K3", bidirected_complete(3), 3),
        ("D_10", wheel_of_digons(10).unwrap(), 3),
        ("D_(3,7)", dicritical_short_paths(3, 7).unwrap(), 3),
    ];
    let mut sets = 0;
    for (name, d, k) in &fixtures {
        ensure(dicritical(d, *k), || format!("{name} not {k}-dicritical"))?;
        let report = cc_bound_holds(d, *k, 3);
        ensure(report.holds(), || format!("{name}: {report:?}"))?;
        sets += report.checked;
    }
    Ok(format!("{sets} sets"))
}

fn c5() -> Check {
    let params = SuiteParams {
        max_n: Some(6),
        ..SuiteParams::default()
    };
    let v = suite(SuiteKind::SpindleOutDegree, params)?;
    ensure(v.witnesses_validated == v.instances_checked, || "unvalidated instance".into())?;

    let weak = verify(
        Suite::weakened(SuiteKind::SpindleOutDegree),
        &SuiteParams {
            max_n: Some(3),
            ..SuiteParams::default()
        },
    );
    let Outcome::Fail(cx) = &weak.outcome else {
        return Err(format!("negative control did not fail: {}", weak.summary_line()));
    };
    let c3 = directed_cycle(3).unwrap();
    ensure(canonical_form(&cx.instance.digraph) == canonical_form(&c3), || {
        format!("counterexample is {:?}", cx.instance.digraph)
    })?;
    ensure(weak.replay() == Some(true), || "counterexample does not replay".into())?;
    Ok(format!("{} oriented graphs, control fails on C3", v.instances_checked))
}

fn c6() -> Check {
    let v = suite(
        SuiteKind::SmallOutStar,
        SuiteParams {
            max_n: Some(6),
            l: Some(2),
            ..SuiteParams::default()
        },
    )?;
    // No digraph with δ⁺ >= 2 and digirth >= 4 has at most 6 vertices, so
    // the enumerated part is empty and the circulant fixtures carry the check.
    let enumerated: usize = (1..=6)
        .map(|n| {
            let spec = EnumerationSpec {
                min_out_degree: 2,
                min_digirth: Some(4),
                ..EnumerationSpec::new(n)
            };
            enumerate_all(&spec, &Budget::new(7)).unwrap().len()
        })
        .sum();
    Ok(format!(
        "{} digraphs ({enumerated} enumerated n<=6, rest circulant fixtures), {} centres",
        v.instances_checked, v.witnesses_validated
    ))
}

fn c7() -> Check {
    let v = suite(
        SuiteKind::Circulant,
        SuiteParams {
            k: Some(5),
            ..SuiteParams::default()
        },
    )?;
    let mut measured = Vec::new();
    for k in 3..=5 {
        let d = circulant_two_jumps(k).unwrap();
        ensure(d.order() == 2 * k - 1, || format!("k={k}: n={}", d.order()))?;
        ensure(d.vertices().all(|v| d.out_degree(v) == 2), || format!("k={k}: degrees"))?;
        let found = find_spindle(&d, k, &Budget::default()).unwrap();
        ensure(found.is_none(), || format!("k={k}: C({k},{k}) found"))?;
        measured.push(format!("k={k} digirth={}", digirth(&d)));
    }
    ensure(v.instances_checked == 3, || "suite skipped a circulant".into())?;
    Ok(measured.join(", "))
}

fn c8() -> Check {
    let budget = Budget::default();
    let mut witnesses = 0;
    let p2 = directed_path(2).unwrap();
    for m in 5..=9 {
        let d = directed_cycle(m).unwrap();
        for c in 0..=2 {
            let counts = p2.arcs().map(|a| (a, c)).collect();
            let w = find_tree_subdivision(&d, &p2, &counts, TreeMode::Oriented, &budget)
                .map_err(|e| format!("C{m}, count {c}: {e}"))?;
            ensure(w.validate().is_ok() && w.meets_min_counts(&counts), || {
                format!("C{m}, count {c}: bad witness")
            })?;
            witnesses += 1;
        }
    }
    let host = paley7();
    let trees = [
        Digraph::empty(1),
        p2.clone(),
        directed_path(3).unwrap(),
        out_star(2, 1).unwrap(),
        Digraph::from_arc_list(3, [(1, 0), (2, 0)]).unwrap(),
    ];
    for t in &trees {
        let arcs: Vec<_> = t.arcs().collect();
        for code in 0..3usize.pow(arcs.len() as u32) {
            let mut counts = BTreeMap::new();
            let mut rest = code;
            for &a in &arcs {
                counts.insert(a, rest % 3);
                rest /= 3;
            }
            let w = find_tree_subdivision(&host, t, &counts, TreeMode::Oriented, &budget)
                .map_err(|e| format!("Paley7, {t:?} {counts:?}: {e}"))?;
            ensure(w.validate().is_ok() && w.meets_min_counts(&counts), || {
                format!("Paley7, {t:?}: bad witness")
            })?;
            witnesses += 1;
        }
    }
    let v = suite(SuiteKind::Trees, SuiteParams::default())?;
    Ok(format!("{witnesses} witnesses, suite checked {}", v.instances_checked))
}

fn c9() -> Check {
    ensure(kn_bound_check(64), || "bid K_n bound fails for some n <= 64".into())?;
    let mader = [((1, 0, 1), 1u32), ((3, 3, 1), 9), ((2, 2, 1), 5)];
    for ((n, m, c), want) in mader {
        let got = mader_bound_general(n, m, c).map_err(|e| e.to_string())?;
        ensure(got == BigUint::from(want), || format!("mader({n},{m},{c}) = {got}"))?;
    }
    let sub = [((1, 0), (1, 1)), ((2, 1), (31, 3)), ((3, 3), (767, 3))];
    for ((n, m), (p, q)) in sub {
        let got = subdivision_bound(n, m).map_err(|e| e.to_string())?;
        let want = BigRational::new(p.into(), q.into());
        ensure(got == want, || format!("subdivision_bound({n},{m}) = {got}"))?;
    }
    Ok("exact".into())
}

fn c10() -> Check {
    let mut validated = 0;
    for s in Suite::all().into_iter().filter(|s| !s.weakened) {
        let v = verify(s, &SuiteParams::default());
        ensure(v.passed(), || v.summary_line())?;
        validated += v.witnesses_validated;
    }
    ensure(validated > 0, || "no finder output was exercised".into())?;

    let patterns = [
        directed_cycle(3).unwrap(),
        spindle(1, 2).unwrap(),
        spindle(2, 2).unwrap(),
        out_star(2, 1).unwrap(),
    ];
    let corpus = up_to_iso(5);
    let budget = Budget::default();
    let none = BTreeMap::new();
    for d in &corpus {
        for f in &patterns {
            let found = contains_subdivision(d, f, None, &budget).unwrap();
            ensure(found.is_some() == common::contains_subdivision(d, f, &none), || {
                format!("oracle disagrees on {d:?} / {f:?}")
            })?;
            if let Some(w) = found {
                ensure(w.validate().is_ok(), || format!("invalid witness in {d:?}"))?;
                validated += 1;
            }
        }
    }
    Ok(format!("{validated} witnesses validated, {} hosts", corpus.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 dichromatic number", c1, Duration::from_secs(60)),
        ("2 D_10", c2, Duration::from_secs(60)),
        ("3 D_(3,n) and D_(4,7)", c3, Duration::from_secs(600)),
        ("4 component bound", c4, Duration::from_secs(300)),
        ("5 C(2,2) in oriented graphs", c5, Duration::from_secs(1800)),
        ("6 out-stars, l=2", c6, Duration::from_secs(1800)),
        ("7 circulants", c7, Duration::from_secs(300)),
        ("8 tree subdivisions", c8, Duration::from_secs(300)),
        ("9 bound arithmetic", c9, Duration::from_secs(1)),
        ("10 witness closure", c10, Duration::from_secs(900)),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".into()))
            .and_then(|detail| {
                let took = start.elapsed();
                ensure(took <= limit, || format!("took {took:?}, limit {limit:?}"))?;
                Ok(detail)
            });
        let ms = start.elapsed().as_millis();
        match result {
            Ok(detail) => println!("PASS criterion {name}: {detail} ({ms} ms)"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why} ({ms} ms)");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
