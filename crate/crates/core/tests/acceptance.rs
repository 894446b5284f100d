//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//! Every tolerance is zero: the checks are exact booleans and counts.

mod common;

use std::time::Instant;

use rand::seq::SliceRandom;
use rayon::prelude::*;

use routley::calculus::{check_derivation, decide_kl, prove, ProofOutcome, System};
use routley::cli;
use routley::formula::{parse_pair, ConsequencePair, Formula};
use routley::frame::{builtin, enumerate_proto_ifs, enumerate_routley_ifs, RoutleyFrame};
use routley::random::{self, DerivationGen};
use routley::semantics::{
    check_condition, find_countermodel_where, negation_witness, valid_in_frame, Condition, InfoModel, Valuation,
};
use routley::states::StateSet;

const SEED: u64 = 0x5EED_2024;

struct Report {
    passed: bool,
    detail: String,
}

impl Report {
    fn zero(violations: usize, what: String) -> Self {
        Report { passed: violations == 0, detail: format!("{what}; violations {violations} (tolerance 0)") }
    }
}

fn frames(range: std::ops::RangeInclusive<usize>, up_to_iso: bool) -> Vec<RoutleyFrame> {
    range.flat_map(|n| enumerate_routley_ifs(n, up_to_iso).expect("size within limits")).collect()
}

fn upset(frame: &RoutleyFrame, name: &str) -> StateSet {
    frame.upset(frame.state(name).expect("named state"))
}

fn fails_at(frame: &RoutleyFrame, pair: &str, values: &[(&str, &str)], witness: Option<&str>) -> bool {
    let pair = parse_pair(pair).expect("fixed pair");
    let atoms: Vec<String> = values.iter().map(|(a, _)| a.to_string()).collect();
    let sets: Vec<StateSet> = values.iter().map(|(_, g)| upset(frame, g)).collect();
    let lhs = common::eval(frame, &pair.lhs, &atoms, &sets);
    let rhs = common::eval(frame, &pair.rhs, &atoms, &sets);
    // the library agrees state by state
    let valuation = atoms.iter().zip(&sets).fold(Valuation::new(), |v, (a, &s)| {
        v.with(a, routley::frame::ProperFilter::new(frame, s).expect("upset of a non-bottom state"))
    });
    let model = InfoModel::new(frame, valuation);
    let agree = frame.states().all(|s| {
        model.supports(s, &pair.lhs) == Ok(lhs.contains(s)) && model.supports(s, &pair.rhs) == Ok(rhs.contains(s))
    });
    let failing = lhs.difference(rhs);
    agree
        && match witness {
            None => !failing.is_empty(),
            Some(w) => failing.contains(frame.state(w).expect("named state")),
        }
}

fn criterion_1() -> Report {
    let left = builtin("fig1_left").unwrap();
    let right = builtin("fig1_right").unwrap();
    let n5 = builtin("fig2_n5").unwrap();
    let results = [
        fails_at(&left, "~~p |- p", &[("p", "v")], None),
        fails_at(&right, "p |- ~~p", &[("p", "v")], None),
        fails_at(&right, "~p & ~q |- ~(p | q)", &[("p", "t"), ("q", "u")], None),
        fails_at(&n5, "p & (q | r) |- p & q | p & r", &[("p", "w"), ("q", "t"), ("r", "v")], Some("w")),
    ];
    let reproduced = results.iter().filter(|&&r| r).count();
    Report { passed: reproduced == 4, detail: format!("reference examples reproduced {reproduced}/4 (exact)") }
}

fn criterion_2() -> Report {
    let formulas = common::all_formulas(&["p"], 2);
    let atoms = vec!["p".to_string()];
    let neg_p = Formula::neg(Formula::atom("p"));
    let (mut count, mut violations, mut routley) = (0, 0, 0);
    for n in 2..=4 {
        for frame in enumerate_proto_ifs(n).unwrap() {
            count += 1;
            let conditions = common::star_conditions(&frame);
            routley += conditions as usize;
            let all_filters = common::proper_filters(&frame).into_iter().all(|v| {
                let valuation = Valuation::new().with("p", routley::frame::ProperFilter::new(&frame, v).unwrap());
                let model = InfoModel::new(&frame, valuation);
                formulas.iter().all(|f| {
                    let ours = model.proposition(f).unwrap().members();
                    ours == common::eval(&frame, f, &atoms, &[v]) && common::is_proper_filter(&frame, ours)
                })
            });
            if conditions != all_filters || conditions != frame.is_routley_if() {
                violations += 1;
            }
            match (conditions, negation_witness(&frame)) {
                (true, None) => {}
                (false, Some(w)) => {
                    let prop = common::eval(&frame, &neg_p, &atoms, &[w.p.members()]);
                    if common::is_proper_filter(&frame, prop) {
                        violations += 1;
                    }
                }
                _ => violations += 1,
            }
        }
    }
    Report::zero(violations, format!("{count} proto-frames (2-4 states), {routley} satisfy the star conditions"))
}

fn criterion_3() -> Report {
    let mut violations = 0;
    let mut checked = 0usize;
    for frame in frames(2..=5, false) {
        // star-image properties
        let s = |x| frame.star(x);
        for t in frame.states() {
            if !(frame.leq(s(t), s(s(t))) || frame.leq(s(s(t)), s(t))) {
                violations += 1;
            }
            for u in frame.states() {
                let m = s(frame.meet(t, u));
                if !(m == s(t) || m == s(u)) || !(frame.leq(s(t), s(u)) || frame.leq(s(u), s(t))) {
                    violations += 1;
                }
            }
        }
        // disjunctions of negations are truth-functional
        for values in common::valuations(&frame, 2) {
            let props: Vec<StateSet> = common::realized(&frame, &values, 3).into_iter().collect();
            for &a in &props {
                for &b in &props {
                    checked += 1;
                    let (na, nb) = (common::neg(&frame, a), common::neg(&frame, b));
                    if common::join(&frame, na, nb) != na.union(nb) {
                        violations += 1;
                    }
                }
            }
        }
    }
    for frame in frames(2..=6, false).into_iter().filter(common::is_linear) {
        for values in common::valuations(&frame, 2) {
            let props: Vec<StateSet> = common::realized(&frame, &values, 3).into_iter().collect();
            for &a in &props {
                for &b in &props {
                    checked += 1;
                    if common::join(&frame, a, b) != a.union(b) {
                        violations += 1;
                    }
                }
            }
        }
    }
    // the library's literal clause agrees on a concrete pair of depth-3 formulas
    let frame = builtin("fig1_right").unwrap();
    let pair = parse_pair("~(p & ~q) | ~~(q | p) |- ~(p & ~q) | ~~(q | p)").unwrap();
    let model = InfoModel::new(
        &frame,
        Valuation::new()
            .with("p", frame.principal_upset(frame.state("t").unwrap()).unwrap())
            .with("q", frame.principal_upset(frame.state("u").unwrap()).unwrap()),
    );
    let lhs = model.proposition(&pair.lhs).unwrap().members();
    let by_parts = match &pair.lhs {
        Formula::Or(l, r) => model.proposition(l).unwrap().members().union(model.proposition(r).unwrap().members()),
        _ => unreachable!(),
    };
    if lhs != by_parts {
        violations += 1;
    }
    Report::zero(violations, format!("star image, negated and linear disjunctions over {checked} proposition pairs"))
}

fn criterion_4() -> Report {
    let all = frames(2..=5, false);
    let mut violations = 0;
    let mut holds = [0usize; 3];
    for frame in &all {
        let s = |x| frame.star(x);
        let oracle = [
            frame.states().all(|x| frame.leq(x, s(s(x)))),
            frame.states().all(|x| frame.leq(s(s(x)), x)),
            frame.states().all(|x| {
                frame.states().all(|t| {
                    frame
                        .states()
                        .all(|u| !frame.leq(frame.meet(t, u), s(x)) || frame.leq(t, s(x)) || frame.leq(u, s(x)))
                })
            }),
        ];
        for (j, cond) in Condition::ALL.into_iter().enumerate() {
            let pair = cond.characteristic_pair();
            let valid = common::valid(frame, &pair);
            holds[j] += oracle[j] as usize;
            if oracle[j] != valid
                || check_condition(frame, cond) != oracle[j]
                || valid_in_frame(frame, &pair).is_valid() != valid
            {
                violations += 1;
            }
        }
    }
    Report::zero(
        violations,
        format!(
            "{} frames (2-5 states); DN1 holds on {}, DN2 on {}, DM2 on {}",
            all.len(),
            holds[0],
            holds[1],
            holds[2]
        ),
    )
}

fn criterion_5() -> Report {
    let dn1 = Condition::Dn1.characteristic_pair();
    let dn2 = Condition::Dn2.characteristic_pair();
    let all = frames(2..=6, false);
    let both: Vec<&RoutleyFrame> =
        all.iter().filter(|f| valid_in_frame(f, &dn1).is_valid() && valid_in_frame(f, &dn2).is_valid()).collect();
    let violations = both.iter().filter(|f| !common::is_linear(f)).count();
    let converse = all.iter().find(|f| common::is_linear(f) && !common::valid(f, &dn2));
    let mut report = Report::zero(
        violations,
        format!("{} frames (2-6 states), {} validate both double negation pairs", all.len(), both.len()),
    );
    match converse {
        Some(f) => report.detail.push_str(&format!("; linear non-involutive witness: {f}")),
        None => {
            report.passed = false;
            report.detail.push_str("; no linear non-involutive frame found");
        }
    }
    report
}

fn instance_violations(system: System, frames: &[RoutleyFrame], per_schema: usize, seed: u64) -> (usize, usize) {
    let atoms = random::atom_names(2);
    let mut rng = random::rng(seed);
    let instances: Vec<ConsequencePair> = system
        .axioms()
        .iter()
        .flat_map(|&schema| (0..per_schema).map(move |_| schema))
        .map(|schema| random::axiom_instance_of(&mut rng, schema, &atoms, 3, 3).conclusion().unwrap())
        .collect();
    let bad =
        instances.par_iter().map(|pair| frames.iter().filter(|f| !valid_in_frame(f, pair).is_valid()).count()).sum();
    (instances.len(), bad)
}

fn criterion_6() -> Report {
    let mut rng = random::rng(SEED);
    let pool = frames(2..=6, true);
    let sample: Vec<RoutleyFrame> = (0..200).map(|_| pool.choose(&mut rng).unwrap().clone()).collect();
    let linear_pool: Vec<RoutleyFrame> = pool.iter().filter(|f| common::is_linear(f)).cloned().collect();
    let linear: Vec<RoutleyFrame> = (0..200).map(|_| linear_pool.choose(&mut rng).unwrap().clone()).collect();
    let involutive: Vec<RoutleyFrame> = linear_pool.iter().filter(|f| f.is_involutive()).cloned().collect();
    let (n1, v1) = instance_violations(System::Lrif, &sample, 1000, SEED + 1);
    let (n2, v2) = instance_violations(System::LinDllr, &linear, 1000, SEED + 2);
    let (n3, v3) = instance_violations(System::Kl, &involutive, 1000, SEED + 3);
    Report::zero(
        v1 + v2 + v3,
        format!(
            "LRIF {n1} instances x 200 frames, LinDLLR {n2} x 200 linear frames, KL {n3} x {} involutive linear frames",
            involutive.len()
        ),
    )
}

fn criterion_7() -> Report {
    let involutive: Vec<RoutleyFrame> =
        frames(2..=6, false).into_iter().filter(|f| common::is_linear(f) && f.is_involutive()).collect();
    let mut rng = random::rng(SEED + 7);
    let atoms = random::atom_names(2);
    let pairs: Vec<ConsequencePair> = (0..500).map(|_| random::pair(&mut rng, &atoms, 4)).collect();
    let disagreements =
        pairs.par_iter().filter(|pair| decide_kl(pair) != involutive.iter().all(|f| common::valid(f, pair))).count();
    let kl_valid = pairs.iter().filter(|p| decide_kl(p)).count();
    let ikl = builtin("ikl").unwrap();
    let filters = (ikl.proper_filters().len(), common::proper_filters(&ikl).len());
    let mut report = Report::zero(
        disagreements,
        format!(
            "500 pairs ({kl_valid} Kalman-valid) against {} involutive linear frames; ikl proper filters {} (oracle {})",
            involutive.len(),
            filters.0,
            filters.1
        ),
    );
    report.passed &= filters == (3, 3);
    report
}

fn derivation_violations(system: System, frames: &[RoutleyFrame], seed: u64) -> (usize, usize) {
    let mut rng = random::rng(seed);
    let derivations: Vec<_> =
        (0..200).map(|_| DerivationGen::new(&mut rng, system, random::atom_names(2), 2, 3).derivation(4)).collect();
    let unchecked = derivations.iter().filter(|d| check_derivation(system, d, 3).is_err()).count();
    let invalid = derivations
        .par_iter()
        .map(|d| frames.iter().filter(|f| !common::valid(f, &d.conclusion)).count())
        .sum::<usize>();
    let nodes = derivations.iter().map(|d| d.size()).sum();
    (nodes, unchecked + invalid)
}

fn criterion_8() -> Report {
    let all = frames(2..=5, true);
    let linear: Vec<RoutleyFrame> = all.iter().filter(|f| common::is_linear(f)).cloned().collect();
    let (n1, v1) = derivation_violations(System::LinDllr, &linear, SEED + 8);
    let (n2, v2) = derivation_violations(System::Lrif, &all, SEED + 9);
    Report::zero(
        v1 + v2,
        format!(
            "200 LinDLLR derivations ({n1} nodes) on {} linear frames, 200 LRIF derivations ({n2} nodes) on {} frames",
            linear.len(),
            all.len()
        ),
    )
}

fn criterion_9() -> Report {
    let mut rng = random::rng(SEED + 10);
    let atoms = random::atom_names(2);
    let mut commands: Vec<Vec<String>> = Vec::new();
    for _ in 0..6 {
        let pair = random::pair(&mut rng, &atoms, 3).render();
        commands.push(vec!["countermodel".into(), "--pair".into(), pair.clone(), "--max-size".into(), "6".into()]);
    }
    for text in ["~(p | q) |- ~p & ~q", "p & ~p |- ~~q | ~q", "~~p |- p", "p & (q | r) |- p & q | p & r | r"] {
        for system in ["LinDLLR", "LRIF", "KL"] {
            commands.push(
                ["prove", "--system", system, "--pair", text, "--depth", "4"].iter().map(|s| s.to_string()).collect(),
            );
        }
    }
    let mut mismatches = 0;
    for args in &commands {
        let outputs: Vec<String> = [1, 2, 4, 8, 1]
            .iter()
            .map(|w| {
                let w = w.to_string();
                let argv = ["routley", "--json", "--workers", w.as_str()]
                    .into_iter()
                    .map(String::from)
                    .chain(args.iter().cloned());
                let out = cli::run(argv);
                assert_eq!(out.code, 0, "{}", out.stderr);
                out.stdout
            })
            .collect();
        if outputs.iter().any(|o| o != &outputs[0]) {
            mismatches += 1;
        }
    }
    Report::zero(mismatches, format!("{} commands x worker counts 1, 2, 4, 8 and a repeat", commands.len()))
}

fn criterion_10() -> Report {
    let linear: Vec<RoutleyFrame> = frames(2..=5, true).into_iter().filter(common::is_linear).collect();
    let mut rng = random::rng(SEED + 11);
    let atoms = random::atom_names(2);
    let (mut collected, mut found, mut proved, mut conflicts, mut drawn) = (0, 0, 0, 0, 0);
    while collected < 100 && drawn < 20_000 {
        drawn += 1;
        let pair = random::pair(&mut rng, &atoms, 3);
        let invalid_somewhere = linear.iter().any(|f| !common::valid(f, &pair));
        match prove(System::LinDllr, &pair, 6, 2) {
            ProofOutcome::Proved(d) => {
                proved += 1;
                if invalid_somewhere || check_derivation(System::LinDllr, &d, 2).is_err() {
                    conflicts += 1;
                }
            }
            ProofOutcome::Unknown if invalid_somewhere => {
                collected += 1;
                let hit = find_countermodel_where(&pair, 5, |f| f.is_linear()).unwrap();
                if hit.is_some_and(|c| c.refutes(&pair) && c.frame.is_linear()) {
                    found += 1;
                }
            }
            ProofOutcome::Unknown => {}
        }
    }
    let mut report = Report::zero(
        (collected - found) + conflicts,
        format!("{collected} unproved invalid pairs, countermodels found {found}; {proved} proved pairs, none invalid ({drawn} drawn)"),
    );
    report.passed &= collected == 100;
    report
}

fn main() {
    let criteria: [(usize, fn() -> Report); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut failed = 0;
    for (id, run) in criteria {
        let start = Instant::now();
        let report = run();
        failed += !report.passed as usize;
        println!(
            "criterion {id:>2} {} [{:.1?}] {}",
            if report.passed { "PASS" } else { "FAIL" },
            start.elapsed(),
            report.detail
        );
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
