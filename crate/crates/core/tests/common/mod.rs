//! Brute-force reference semantics used as the oracle by integration
//! tests. Filters are found by scanning every subset and formulas are
//! evaluated straight from the support clauses, using nothing from the
//! library beyond the raw frame tables.

#![allow(dead_code)]

use std::collections::BTreeSet;

use routley::formula::{ConsequencePair, Formula};
use routley::frame::RoutleyFrame;
use routley::states::StateSet;

pub fn is_proper_filter(frame: &RoutleyFrame, set: StateSet) -> bool {
    let members: Vec<usize> = set.iter().collect();
    !members.is_empty()
        && !set.contains(frame.bottom())
        && members.iter().all(|&s| frame.states().all(|t| !frame.leq(s, t) || set.contains(t)))
        && members.iter().all(|&s| members.iter().all(|&t| set.contains(frame.meet(s, t))))
}

pub fn proper_filters(frame: &RoutleyFrame) -> Vec<StateSet> {
    (0u32..1 << frame.size()).map(StateSet::from_bits).filter(|&s| is_proper_filter(frame, s)).collect()
}

pub fn neg(frame: &RoutleyFrame, a: StateSet) -> StateSet {
    frame.states().filter(|&s| !a.contains(frame.star(s))).collect()
}

pub fn join(frame: &RoutleyFrame, a: StateSet, b: StateSet) -> StateSet {
    frame.states().filter(|&s| a.iter().any(|t| b.iter().any(|u| frame.leq(frame.meet(t, u), s)))).collect()
}

/// `||f||` with atoms looked up by position in `atoms`.
pub fn eval(frame: &RoutleyFrame, f: &Formula, atoms: &[String], values: &[StateSet]) -> StateSet {
    match f {
        Formula::Atom(p) => values[atoms.iter().position(|a| a == p).expect("atom bound")],
        Formula::And(l, r) => eval(frame, l, atoms, values).intersection(eval(frame, r, atoms, values)),
        Formula::Or(l, r) => join(frame, eval(frame, l, atoms, values), eval(frame, r, atoms, values)),
        Formula::Neg(b) => neg(frame, eval(frame, b, atoms, values)),
    }
}

/// Every assignment of proper filters to `count` atoms.
pub fn valuations(frame: &RoutleyFrame, count: usize) -> Vec<Vec<StateSet>> {
    let filters = proper_filters(frame);
    let mut out = vec![vec![]];
    for _ in 0..count {
        out = out.into_iter().flat_map(|v| filters.iter().map(move |&f| [v.clone(), vec![f]].concat())).collect();
    }
    out
}

pub fn valid(frame: &RoutleyFrame, pair: &ConsequencePair) -> bool {
    let atoms: Vec<String> = pair.atoms().into_iter().collect();
    valuations(frame, atoms.len())
        .iter()
        .all(|v| eval(frame, &pair.lhs, &atoms, v).is_subset(eval(frame, &pair.rhs, &atoms, v)))
}

/// Propositions expressed by formulas of depth at most `depth` built from
/// the given atom values.
pub fn realized(frame: &RoutleyFrame, values: &[StateSet], depth: usize) -> BTreeSet<StateSet> {
    let mut level: BTreeSet<StateSet> = values.iter().copied().collect();
    for _ in 0..depth {
        let mut next = level.clone();
        for &a in &level {
            next.insert(neg(frame, a));
            for &b in &level {
                next.insert(a.intersection(b));
                next.insert(join(frame, a, b));
            }
        }
        level = next;
    }
    level
}

/// Every formula over the given atoms of depth at most `depth`.
pub fn all_formulas(atoms: &[&str], depth: usize) -> Vec<Formula> {
    let mut level: BTreeSet<Formula> = atoms.iter().map(|a| Formula::atom(a)).collect();
    for _ in 0..depth {
        let mut next = level.clone();
        for a in &level {
            next.insert(Formula::neg(a.clone()));
            for b in &level {
                next.insert(Formula::and(a.clone(), b.clone()));
                next.insert(Formula::or(a.clone(), b.clone()));
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

pub fn is_linear(frame: &RoutleyFrame) -> bool {
    frame.states().all(|a| frame.states().all(|b| frame.leq(a, b) || frame.leq(b, a)))
}

/// Filter-preservation conditions on the star, read off the tables.
pub fn star_conditions(frame: &RoutleyFrame) -> bool {
    let (e, i) = (frame.bottom(), frame.top());
    let s = |x| frame.star(x);
    s(i) == e
        && s(e) == i
        && frame.states().all(|t| {
            frame.states().all(|u| {
                (!frame.leq(t, u) || frame.leq(s(u), s(t)))
                    && (frame.leq(s(frame.meet(t, u)), s(t)) || frame.leq(s(frame.meet(t, u)), s(u)))
            })
        })
}
