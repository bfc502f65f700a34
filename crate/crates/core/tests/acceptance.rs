mod common;

use std::process::ExitCode;
use std::sync::Arc;

use finring::classify::lattice_violations;
use finring::constructions::{ideal_generated, quotient};
use finring::theorems::{build_catalog, matrix_witness, run_suite, select_claims, Catalog, CatalogConfig, Report};
use finring::{Analyzer, ClassificationRecord, ClassifyConfig, Evaluator, FiniteRing, Limits, Status};

type Outcome = Result<String, String>;
type Criterion = fn(&World) -> Outcome;

struct World {
    catalog: Catalog,
    analyzer: Analyzer,
    report: Report,
}

impl World {
    fn record(&self, r: &Arc<FiniteRing>) -> Arc<ClassificationRecord> {
        self.analyzer.classify(r).expect("classification succeeds")
    }

    fn ring(&self, text: &str) -> Arc<FiniteRing> {
        Evaluator::new(Limits::default()).ring(text).expect("expression builds")
    }

    fn w(&self, text: &str) -> bool {
        self.record(&self.ring(text)).w_sqrt_ju
    }

    fn claim_failures(&self, ids: &[&str]) -> Vec<String> {
        ids.iter()
            .filter_map(|id| {
                let s = self.report.summary(id).unwrap_or_else(|| panic!("claim {id} ran"));
                (s.fail > 0).then(|| format!("{id}: {} failures, first on {}", s.fail, s.witnesses[0].subject))
            })
            .collect()
    }
}

fn check(ok: bool, pass: String, fail: String) -> Outcome {
    if ok {
        Ok(pass)
    } else {
        Err(fail)
    }
}

fn separating_example(w: &World) -> Outcome {
    let rec = w.record(&w.ring("Z(3)"));
    check(
        rec.w_sqrt_ju && !rec.sqrt_ju,
        "Z(3): w_sqrt_ju true, sqrt_ju false".into(),
        format!("Z(3): w_sqrt_ju {}, sqrt_ju {}", rec.w_sqrt_ju, rec.sqrt_ju),
    )
}

fn matrix_obstruction(w: &World) -> Outcome {
    let mut bad = Vec::new();
    for base in ["Z(2)", "Z(3)", "Z(4)"] {
        let text = format!("M(2,{base})");
        let entry = w.catalog.find(&text).ok_or(format!("{text} missing from catalog"))?;
        let m = &entry.ring;
        let b = w.ring(base);
        let n = b.order();
        // [[0,1],[1,1]] with entry (i,j) at digit 2i+j
        let a = n + n * n + n * n * n;
        let u = common::units(m);
        let plus = m.add(a, m.one());
        let minus = m.sub(a, m.one());
        if w.record(m).w_sqrt_ju || !u[plus] || !u[minus] || matrix_witness(m) != Some([a, plus, minus]) {
            bad.push(text);
        }
    }
    check(bad.is_empty(), "M(2,Z(2|3|4)) not W√JU; A, A+I, A-I witnessed".into(), format!("{bad:?}"))
}

fn division_rings(w: &World) -> Outcome {
    let fields = [
        (2, "GF(2,1)"),
        (3, "GF(3,1)"),
        (4, "GF(2,2)"),
        (5, "GF(5,1)"),
        (7, "GF(7,1)"),
        (8, "GF(2,3)"),
        (9, "GF(3,2)"),
    ];
    let bad: Vec<_> = fields.iter().filter(|(q, t)| w.w(t) != (*q == 2 || *q == 3)).map(|(q, _)| q).collect();
    check(bad.is_empty(), "GF(q) is W√JU exactly for q in {2,3}".into(), format!("wrong for q = {bad:?}"))
}

fn is_2_3_smooth(mut n: usize) -> bool {
    for p in [2, 3] {
        while n.is_multiple_of(p) {
            n /= p;
        }
    }
    n == 1
}

fn characteristic(w: &World) -> Outcome {
    let bad: Vec<_> = w
        .catalog
        .entries
        .iter()
        .filter(|e| w.record(&e.ring).w_sqrt_ju && !is_2_3_smooth(e.ring.characteristic()))
        .map(|e| e.expr.clone())
        .collect();
    let control = !w.w("Z(5)");
    check(
        bad.is_empty() && control,
        format!("{} rings, W√JU ones have char 2^a 3^b; Z(5) is not W√JU", w.catalog.len()),
        format!("violations {bad:?}, control {control}"),
    )
}

fn two_in_jacobson(w: &World) -> Outcome {
    let mut bad = Vec::new();
    for e in &w.catalog.entries {
        let r = &e.ring;
        let rec = w.record(r);
        let two_in_j = w.analyzer.profile(r).unwrap().jacobson.contains(r.int(2));
        if rec.sqrt_ju != (rec.w_sqrt_ju && two_in_j) {
            bad.push(e.expr.clone());
        }
    }
    check(bad.is_empty(), format!("sqrt_ju ⇔ w_sqrt_ju ∧ 2∈J on {} rings", w.catalog.len()), format!("{bad:?}"))
}

fn quotient_transfer(w: &World) -> Outcome {
    let (mut pairs, mut bad) = (0, Vec::new());
    for e in w.catalog.entries.iter().filter(|e| e.ring.order() <= 64) {
        let r = &e.ring;
        let base = w.record(r).w_sqrt_ju;
        let j = w.analyzer.profile(r).unwrap().jacobson.clone();
        let mut seen = Vec::new();
        for x in j.iter() {
            let i = ideal_generated(r, &[x]).unwrap();
            if seen.contains(&i.members().to_vec()) {
                continue;
            }
            seen.push(i.members().to_vec());
            let (q, _) = quotient(r, &i, Limits::default()).unwrap();
            pairs += 1;
            if w.record(&Arc::new(q)).w_sqrt_ju != base {
                bad.push(format!("{} by ({x})", e.expr));
            }
        }
    }
    check(bad.is_empty(), format!("{pairs} quotients R/(x), x∈J, agree with R"), format!("{bad:?}"))
}

fn products(w: &World) -> Outcome {
    let factors = ["Z(2)", "Z(3)", "Z(4)", "Z(9)", "GF(2,2)"];
    let mut combos: Vec<Vec<&str>> = Vec::new();
    for i in 0..factors.len() {
        for j in i..factors.len() {
            combos.push(vec![factors[i], factors[j]]);
            for k in j..factors.len() {
                combos.push(vec![factors[i], factors[j], factors[k]]);
            }
        }
    }
    let mut bad = Vec::new();
    for c in &combos {
        let text = format!("Prod({})", c.join(","));
        let recs: Vec<_> = c.iter().map(|t| w.record(&w.ring(t))).collect();
        let predicted = recs.iter().all(|r| r.w_sqrt_ju) && recs.iter().filter(|r| !r.sqrt_ju).count() <= 1;
        if w.w(&text) != predicted {
            bad.push(text);
        }
    }
    let spots = !w.w("Prod(Z(3),Z(3))") && w.w("Prod(Z(2),Z(3))");
    check(
        bad.is_empty() && spots,
        format!("{} products match; Z3×Z3 fails, Z2×Z3 passes", combos.len()),
        format!("mismatches {bad:?}, spot values {spots}"),
    )
}

fn jacobson_quotient(w: &World) -> Outcome {
    let mut bad = Vec::new();
    for e in &w.catalog.entries {
        let q = w.analyzer.jacobson_quotient(&e.ring).unwrap();
        if w.record(&e.ring).w_sqrt_ju != w.record(&q).wuu {
            bad.push(e.expr.clone());
        }
    }
    check(bad.is_empty(), format!("w_sqrt_ju(R) ⇔ wuu(R/J) on {} rings", w.catalog.len()), format!("{bad:?}"))
}

fn equivalence_chains(w: &World) -> Outcome {
    let (mut regular, mut exchange, mut unknown, mut bad) = (0, 0, 0, Vec::new());
    for e in &w.catalog.entries {
        let rec = w.record(&e.ring);
        let ws = rec.w_sqrt_ju;
        if rec.regular {
            regular += 1;
        }
        let chain_314 = [rec.regular && ws, rec.strongly_regular && ws, rec.weakly_boolean];
        let unit_regular_ok = rec.unit_regular.is_none_or(|u| (u && ws) == chain_314[0]);
        if chain_314.iter().any(|&x| x != chain_314[0]) || !unit_regular_ok || (rec.regular && ws != rec.weakly_boolean)
        {
            bad.push(format!("{} (regular chain)", e.expr));
        }
        let Some(ex) = rec.exchange else {
            unknown += 1;
            continue;
        };
        let chain_316 = [rec.semi_regular && ws, ex && ws, rec.semi_weakly_boolean, rec.strongly_weakly_nil_clean];
        if chain_316.iter().any(|&x| x != chain_316[0]) {
            bad.push(format!("{} (exchange chain)", e.expr));
        }
        if ws && !(rec.semi_regular == ex && ex == rec.clean) {
            bad.push(format!("{} (W√JU exchange/clean)", e.expr));
        }
        if ex {
            exchange += 1;
            if ws != rec.wuu {
                bad.push(format!("{} (exchange W√JU vs WUU)", e.expr));
            }
        }
    }
    bad.extend(w.claim_failures(&["T-3.13", "T-3.16"]));
    check(
        bad.is_empty(),
        format!("{regular} regular and {exchange} exchange rings agree; {unknown} with exchange skipped by size"),
        format!("{bad:?}"),
    )
}

fn group_rings(w: &World) -> Outcome {
    let bases = ["Z(2)", "Z(3)", "Z(4)", "Z(9)", "Prod(Z(2),Z(3))", "GF(2,2)"];
    let groups = ["C(1)", "C(2)", "C(3)", "C(4)", "Prod(C(2),C(2))"];
    let (mut checked, mut capped, mut bad) = (0, 0, Vec::new());
    for b in bases {
        for g in groups {
            let subject = format!("GR({b},{g})");
            let outs: Vec<_> = w.report.outcomes_for("T-groupring").filter(|o| o.subject == subject).collect();
            match outs.as_slice() {
                [o] if o.status == Status::Skipped => capped += 1,
                [o] if o.status == Status::Pass || o.status == Status::NotApplicable => checked += 1,
                [o] => bad.push(format!("{subject}: {:?}", o.status)),
                _ => bad.push(format!("{subject}: {} outcomes", outs.len())),
            }
        }
    }
    let spots = [
        ("GR(Z(2),C(2))", true),
        ("GR(Z(3),C(3))", true),
        ("GR(Z(3),C(2))", false),
        ("GR(Z(4),C(3))", false),
        ("GR(Z(9),C(3))", true),
    ];
    for (text, want) in spots {
        let r = w.ring(text);
        let (engine, scan) = (w.record(&r).w_sqrt_ju, common::weakly_shifted_units(&r, false));
        if engine != want || scan != want {
            bad.push(format!("{text}: engine {engine}, scan {scan}, expected {want}"));
        }
    }
    check(
        bad.is_empty(),
        format!("{checked} (R,G) pairs match the criterion, {capped} over the size cap; 5 spot values"),
        format!("{bad:?}"),
    )
}

fn radical_oracle(w: &World) -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for e in w.catalog.entries.iter().filter(|e| e.ring.is_commutative() && e.ring.order() <= 64) {
        checked += 1;
        let j = w.analyzer.profile(&e.ring).unwrap();
        if j.jacobson.members() != common::members(&common::maximal_ideal_intersection(&e.ring)) {
            bad.push(e.expr.clone());
        }
    }
    check(bad.is_empty(), format!("J agrees with ∩ maximal ideals on {checked} commutative rings"), format!("{bad:?}"))
}

fn property_suite(w: &World) -> Outcome {
    let ids = [
        "L1.2-1", "L1.2-2", "L1.2-3", "L1.2-4", "L1.2-5", "L1.2-6", "L1.2-7", "L1.2-8", "L2.1", "P-member", "P-corner",
        "P-uper", "P-3.4", "G-l1", "G-2gr", "G-3gr",
    ];
    let bad = w.claim_failures(&ids);
    let subjects: usize = ids.iter().map(|id| w.report.summary(id).unwrap().subjects).sum();
    check(bad.is_empty(), format!("{} claims, {subjects} subject checks, no failures", ids.len()), bad.join("; "))
}

fn lattice_and_determinism(w: &World) -> Outcome {
    let bad: Vec<_> = w
        .catalog
        .entries
        .iter()
        .filter(|e| !lattice_violations(&w.record(&e.ring)).is_empty())
        .map(|e| e.expr.clone())
        .collect();
    let again = run_suite(&w.catalog, &Analyzer::new(ClassifyConfig::default()), &select_claims("all").unwrap());
    let fresh_catalog = build_catalog(&CatalogConfig::default()).unwrap();
    let third = run_suite(&fresh_catalog, &Analyzer::new(ClassifyConfig::default()), &select_claims("all").unwrap());
    let first = w.report.to_json();
    let same = first == again.to_json() && first == third.to_json();
    check(
        bad.is_empty() && same,
        format!("lattice holds on {} rings; repeated reports byte-identical ({} bytes)", w.catalog.len(), first.len()),
        format!("lattice violations {bad:?}, identical reports {same}"),
    )
}

fn main() -> ExitCode {
    let catalog = build_catalog(&CatalogConfig::default()).expect("default catalog builds");
    let analyzer = Analyzer::new(ClassifyConfig::default());
    let report = run_suite(&catalog, &analyzer, &select_claims("all").unwrap());
    let world = World { catalog, analyzer, report };

    let criteria: [(&str, Criterion); 13] = [
        ("separating example", separating_example),
        ("matrix obstruction", matrix_obstruction),
        ("division rings", division_rings),
        ("characteristic", characteristic),
        ("sqrt_ju criterion", two_in_jacobson),
        ("quotient transfer", quotient_transfer),
        ("products", products),
        ("R/J characterization", jacobson_quotient),
        ("equivalence chains", equivalence_chains),
        ("group rings", group_rings),
        ("radical oracle", radical_oracle),
        ("property suite", property_suite),
        ("lattice and determinism", lattice_and_determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f(&world) {
            Ok(msg) => println!("PASS {:>2} {name}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
