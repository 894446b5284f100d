//! Bounded backward proof search.
//!
//! Iterative deepening on the height of the derivation. At each goal the
//! search tries, in order: an axiom instance, `I_AND`, `E_OR`, `N`, and
//! finally `T` with every middle formula from a finite candidate space.
//! Candidates are subformulas of the goal with up to `2 k_max + 1` extra
//! negations, closed once under `∧` and `∨`, sorted by rendered text.
//!
//! Goals and middle formulas that fail in some model of the system are
//! discarded before any search. The models are small frames on which the
//! system is sound, so this never loses a derivation; it only saves work.

use std::collections::{BTreeSet, HashMap};
use std::rc::Rc;
use std::sync::OnceLock;

use super::{match_axiom, Derivation, RuleId, System};
use crate::formula::{ConsequencePair, Formula};
use crate::frame::{builtin, enumerate_routley_ifs, RoutleyFrame};
use crate::semantics::{join_support, star_complement};
use crate::standard::StandardFrame;
use crate::states::StateSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest derivation height considered.
    pub depth: usize,
    pub k_max: u32,
    /// Goal expansions before the search gives up.
    pub max_expansions: usize,
    /// Middle formulas for `T` beyond this many (in sorted order) are dropped.
    pub max_candidates: usize,
}

impl SearchLimits {
    pub fn new(depth: usize, k_max: u32) -> Self {
        SearchLimits { depth, k_max, max_expansions: 100_000, max_candidates: 20_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProofOutcome {
    Proved(Derivation),
    Unknown,
}

impl ProofOutcome {
    pub fn derivation(&self) -> Option<&Derivation> {
        match self {
            ProofOutcome::Proved(d) => Some(d),
            ProofOutcome::Unknown => None,
        }
    }

    pub fn is_proved(&self) -> bool {
        self.derivation().is_some()
    }
}

pub fn prove(system: System, pair: &ConsequencePair, depth: usize, k_max: u32) -> ProofOutcome {
    prove_with(system, pair, SearchLimits::new(depth, k_max))
}

pub fn prove_with(system: System, pair: &ConsequencePair, limits: SearchLimits) -> ProofOutcome {
    let mut search = Search::new(system, pair, limits);
    for depth in 1..=limits.depth {
        if let Some(d) = search.goal(pair, depth) {
            return ProofOutcome::Proved(d);
        }
        if search.exhausted {
            break;
        }
    }
    ProofOutcome::Unknown
}

enum Algebra {
    Info(RoutleyFrame),
    Standard(StandardFrame),
}

impl Algebra {
    fn value_sets(&self) -> Vec<StateSet> {
        match self {
            Algebra::Info(f) => f.proper_filters().into_iter().map(|p| p.members()).collect(),
            Algebra::Standard(f) => f.upsets(),
        }
    }
}

fn linear_frames(max: usize, involutive: bool) -> Vec<Algebra> {
    (2..=max)
        .flat_map(|n| enumerate_routley_ifs(n, true).expect("size within limits"))
        .filter(|f| f.is_linear() && (!involutive || f.is_involutive()))
        .map(Algebra::Info)
        .collect()
}

fn prune_algebras(system: System) -> &'static [Algebra] {
    static CACHE: OnceLock<Vec<Vec<Algebra>>> = OnceLock::new();
    let all = CACHE.get_or_init(|| {
        System::ALL
            .into_iter()
            .map(|sys| match sys {
                System::Dll | System::Dllr | System::LinDllr => linear_frames(4, false),
                System::DllrDn => linear_frames(5, true),
                System::Kl => vec![Algebra::Info(builtin("ikl").expect("built-in frame"))],
                System::Classical => {
                    let point = StandardFrame::from_order(vec!["w".into()], &[], vec![0]).expect("one-world frame");
                    vec![Algebra::Standard(point)]
                }
                System::Lrif => {
                    let mut frames: Vec<Algebra> = (2..=5)
                        .flat_map(|n| enumerate_routley_ifs(n, true).expect("size within limits"))
                        .map(Algebra::Info)
                        .collect();
                    for name in ["fig1_left", "fig1_right", "fig2_n5"] {
                        frames.push(Algebra::Info(builtin(name).expect("built-in frame")));
                    }
                    frames
                }
            })
            .collect()
    });
    &all[system as usize]
}

const MAX_POINTS: usize = 4096;

/// A model of the system: an algebra plus one value per goal atom.
struct Point {
    algebra: usize,
    values: Vec<StateSet>,
}

/// One byte per point (all pruning frames have at most eight states).
type Signature = Rc<[u8]>;

struct Pruner {
    algebras: &'static [Algebra],
    atoms: Vec<String>,
    points: Vec<Point>,
    cache: HashMap<Formula, Signature>,
}

impl Pruner {
    fn new(system: System, atoms: Vec<String>) -> Self {
        let algebras = prune_algebras(system);
        let mut points = Vec::new();
        'outer: for (a, algebra) in algebras.iter().enumerate() {
            let sets = algebra.value_sets();
            let total = sets.len().pow(atoms.len() as u32);
            for index in 0..total {
                if points.len() == MAX_POINTS {
                    break 'outer;
                }
                let mut rest = index;
                let mut values = vec![StateSet::EMPTY; atoms.len()];
                for slot in values.iter_mut().rev() {
                    *slot = sets[rest % sets.len()];
                    rest /= sets.len();
                }
                points.push(Point { algebra: a, values });
            }
        }
        Pruner { algebras, atoms, points, cache: HashMap::new() }
    }

    fn signature(&mut self, f: &Formula) -> Signature {
        if let Some(sig) = self.cache.get(f) {
            return sig.clone();
        }
        let sig: Signature = match f {
            Formula::Atom(p) => {
                let j = self.atoms.iter().position(|a| a == p).expect("candidates only use goal atoms");
                self.points.iter().map(|pt| pt.values[j].bits() as u8).collect()
            }
            Formula::And(l, r) => {
                let (l, r) = (self.signature(l), self.signature(r));
                l.iter().zip(r.iter()).map(|(a, b)| a & b).collect()
            }
            Formula::Or(l, r) => {
                let (l, r) = (self.signature(l), self.signature(r));
                self.points
                    .iter()
                    .zip(l.iter().zip(r.iter()))
                    .map(|(pt, (&a, &b))| match &self.algebras[pt.algebra] {
                        Algebra::Info(frame) => join_support(frame, set(a), set(b)).bits() as u8,
                        Algebra::Standard(_) => a | b,
                    })
                    .collect()
            }
            Formula::Neg(body) => {
                let body = self.signature(body);
                self.points
                    .iter()
                    .zip(body.iter())
                    .map(|(pt, &a)| match &self.algebras[pt.algebra] {
                        Algebra::Info(frame) => star_complement(frame, set(a)).bits() as u8,
                        Algebra::Standard(frame) => frame.star_complement(set(a)).bits() as u8,
                    })
                    .collect()
            }
        };
        self.cache.insert(f.clone(), sig.clone());
        sig
    }
}

fn set(byte: u8) -> StateSet {
    StateSet::from_bits(byte as u32)
}

fn below(a: &[u8], b: &[u8]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn candidate_space(goal: &ConsequencePair, k_max: u32, cap: usize) -> Vec<Formula> {
    let mut base = goal.lhs.subformulas();
    base.extend(goal.rhs.subformulas());
    let negated: BTreeSet<Formula> =
        base.iter().flat_map(|f| (0..=2 * k_max + 1).map(move |j| f.clone().neg_power(j))).collect();
    let mut all = negated.clone();
    for a in &negated {
        for b in &negated {
            all.insert(Formula::and(a.clone(), b.clone()));
            all.insert(Formula::or(a.clone(), b.clone()));
        }
    }
    let mut keyed: Vec<(String, Formula)> = all.into_iter().map(|f| (f.render(), f)).collect();
    keyed.sort();
    keyed.truncate(cap);
    keyed.into_iter().map(|(_, f)| f).collect()
}

struct Search {
    system: System,
    limits: SearchLimits,
    pruner: Pruner,
    candidates: Vec<Formula>,
    candidate_sigs: Vec<Option<Signature>>,
    proved: HashMap<ConsequencePair, Derivation>,
    // deepest height at which the goal is known to have no derivation
    failed: HashMap<ConsequencePair, usize>,
    expansions: usize,
    exhausted: bool,
}

impl Search {
    fn new(system: System, goal: &ConsequencePair, limits: SearchLimits) -> Self {
        let candidates = candidate_space(goal, limits.k_max, limits.max_candidates);
        Search {
            system,
            limits,
            pruner: Pruner::new(system, goal.atoms().into_iter().collect()),
            candidate_sigs: vec![None; candidates.len()],
            candidates,
            proved: HashMap::new(),
            failed: HashMap::new(),
            expansions: 0,
            exhausted: false,
        }
    }

    fn admits(&mut self, goal: &ConsequencePair) -> bool {
        let lhs = self.pruner.signature(&goal.lhs);
        let rhs = self.pruner.signature(&goal.rhs);
        below(&lhs, &rhs)
    }

    fn candidate_sig(&mut self, idx: usize) -> Signature {
        if let Some(sig) = &self.candidate_sigs[idx] {
            return sig.clone();
        }
        let sig = self.pruner.signature(&self.candidates[idx]);
        self.candidate_sigs[idx] = Some(sig.clone());
        sig
    }

    fn goal(&mut self, goal: &ConsequencePair, depth: usize) -> Option<Derivation> {
        if let Some(d) = self.proved.get(goal) {
            if d.height() <= depth {
                return Some(d.clone());
            }
        }
        if self.exhausted || self.failed.get(goal).is_some_and(|&f| f >= depth) {
            return None;
        }
        if !self.admits(goal) {
            self.failed.insert(goal.clone(), usize::MAX);
            return None;
        }
        self.expansions += 1;
        if self.expansions > self.limits.max_expansions {
            self.exhausted = true;
            return None;
        }
        let found = self.expand(goal, depth);
        match &found {
            Some(d) => {
                self.proved.insert(goal.clone(), d.clone());
            }
            None if !self.exhausted => {
                self.failed.insert(goal.clone(), depth);
            }
            None => {}
        }
        found
    }

    fn expand(&mut self, goal: &ConsequencePair, depth: usize) -> Option<Derivation> {
        if let Some(inst) = match_axiom(goal, self.system, self.limits.k_max).into_iter().next() {
            return Some(Derivation::axiom(inst).expect("matched instances instantiate"));
        }
        if depth < 2 {
            return None;
        }
        let sub = depth - 1;
        if let Formula::And(b, c) = &goal.rhs {
            if let Some(d) = self.pair_rule(
                goal,
                RuleId::IAnd,
                ConsequencePair::new(goal.lhs.clone(), (**b).clone()),
                ConsequencePair::new(goal.lhs.clone(), (**c).clone()),
                sub,
            ) {
                return Some(d);
            }
        }
        if let Formula::Or(a, b) = &goal.lhs {
            if let Some(d) = self.pair_rule(
                goal,
                RuleId::EOr,
                ConsequencePair::new((**a).clone(), goal.rhs.clone()),
                ConsequencePair::new((**b).clone(), goal.rhs.clone()),
                sub,
            ) {
                return Some(d);
            }
        }
        if self.system.has_rule(RuleId::N) {
            if let (Formula::Neg(b), Formula::Neg(a)) = (&goal.lhs, &goal.rhs) {
                let premise = ConsequencePair::new((**a).clone(), (**b).clone());
                if let Some(p) = self.goal(&premise, sub) {
                    return Some(Derivation::rule(goal.clone(), RuleId::N, vec![p]));
                }
            }
        }
        self.transitivity(goal, sub)
    }

    fn pair_rule(
        &mut self,
        goal: &ConsequencePair,
        rule: RuleId,
        left: ConsequencePair,
        right: ConsequencePair,
        depth: usize,
    ) -> Option<Derivation> {
        let l = self.goal(&left, depth)?;
        let r = self.goal(&right, depth)?;
        Some(Derivation::rule(goal.clone(), rule, vec![l, r]))
    }

    fn transitivity(&mut self, goal: &ConsequencePair, depth: usize) -> Option<Derivation> {
        let lhs = self.pruner.signature(&goal.lhs);
        let rhs = self.pruner.signature(&goal.rhs);
        for idx in 0..self.candidates.len() {
            if self.exhausted {
                return None;
            }
            let mid = &self.candidates[idx];
            if *mid == goal.lhs || *mid == goal.rhs {
                continue;
            }
            let sig = self.candidate_sig(idx);
            if !(below(&lhs, &sig) && below(&sig, &rhs)) {
                continue;
            }
            let mid = self.candidates[idx].clone();
            let first = ConsequencePair::new(goal.lhs.clone(), mid.clone());
            let Some(l) = self.goal(&first, depth) else { continue };
            let second = ConsequencePair::new(mid, goal.rhs.clone());
            if let Some(r) = self.goal(&second, depth) {
                return Some(Derivation::rule(goal.clone(), RuleId::T, vec![l, r]));
            }
        }
        None
    }
}
