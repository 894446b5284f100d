//! Support semantics over Routley frames.
//!
//! ```text
//! s ⊩ p      iff s ∈ V(p)
//! s ⊩ α ∧ β  iff s ⊩ α and s ⊩ β
//! s ⊩ α ∨ β  iff t ∘ u ≤ s for some t ⊩ α, u ⊩ β
//! s ⊩ ¬α     iff s* ⊮ α
//! ```
//!
//! [`InfoModel::supports`] evaluates these clauses literally at one state.
//! [`InfoModel::proposition`] computes the whole set `||α||` bottom-up and
//! is what every validity check uses.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formula::{ConsequencePair, Formula};
use crate::frame::{enumerate_routley_ifs, FrameError, FrameSpec, ProperFilter, RoutleyFrame};
use crate::states::{StateId, StateSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("atom `{0}` has no value in the valuation")]
    UnmappedAtom(String),
    #[error("value of `{atom}` is not a proper filter")]
    NotAFilter { atom: String },
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("malformed valuation: {0}")]
    Malformed(String),
}

/// Assignment of proper filters to atoms.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Valuation(BTreeMap<String, ProperFilter>);

impl Valuation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, atom: &str, filter: ProperFilter) -> Self {
        self.0.insert(atom.to_owned(), filter);
        self
    }

    pub fn insert(&mut self, atom: &str, filter: ProperFilter) {
        self.0.insert(atom.to_owned(), filter);
    }

    pub fn get(&self, atom: &str) -> Option<ProperFilter> {
        self.0.get(atom).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, ProperFilter)> {
        self.0.iter().map(|(k, v)| (k.as_str(), *v))
    }

    /// Atom → member state names.
    pub fn to_names(&self, frame: &RoutleyFrame) -> BTreeMap<String, Vec<String>> {
        self.0
            .iter()
            .map(|(atom, f)| (atom.clone(), f.members().iter().map(|s| frame.name(s).to_owned()).collect()))
            .collect()
    }

    /// Reads a name map, checking every value against the filter laws.
    pub fn from_names(frame: &RoutleyFrame, map: &BTreeMap<String, Vec<String>>) -> Result<Self, SemanticsError> {
        let mut valuation = Valuation::new();
        for (atom, members) in map {
            if !crate::formula::is_atom_name(atom) {
                return Err(SemanticsError::Malformed(format!("`{atom}` is not an atom name")));
            }
            let mut set = StateSet::EMPTY;
            for name in members {
                set.insert(frame.state(name).ok_or_else(|| SemanticsError::UnknownState(name.clone()))?);
            }
            let filter =
                ProperFilter::new(frame, set).map_err(|_| SemanticsError::NotAFilter { atom: atom.clone() })?;
            valuation.insert(atom, filter);
        }
        Ok(valuation)
    }

    /// Parses a JSON object `{"p": ["v", "i"], ...}`.
    pub fn from_json(frame: &RoutleyFrame, text: &str) -> Result<Self, SemanticsError> {
        let map: BTreeMap<String, Vec<String>> =
            serde_json::from_str(text).map_err(|e| SemanticsError::Malformed(e.to_string()))?;
        Self::from_names(frame, &map)
    }
}

/// `||α||` in some model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Proposition(StateSet);

impl Proposition {
    pub fn members(self) -> StateSet {
        self.0
    }

    pub fn contains(self, s: StateId) -> bool {
        self.0.contains(s)
    }

    pub fn is_proper_filter(self, frame: &RoutleyFrame) -> bool {
        frame.is_proper_filter(self.0)
    }
}

/// A frame together with a valuation.
///
/// The support clauses make sense on any proto-frame; only on full Routley
/// frames are the resulting propositions guaranteed to be proper filters.
#[derive(Debug, Clone)]
pub struct InfoModel<'f> {
    frame: &'f RoutleyFrame,
    valuation: Valuation,
}

impl<'f> InfoModel<'f> {
    pub fn new(frame: &'f RoutleyFrame, valuation: Valuation) -> Self {
        InfoModel { frame, valuation }
    }

    pub fn frame(&self) -> &'f RoutleyFrame {
        self.frame
    }

    pub fn valuation(&self) -> &Valuation {
        &self.valuation
    }

    fn atom(&self, name: &str) -> Result<StateSet, SemanticsError> {
        self.valuation.get(name).map(ProperFilter::members).ok_or_else(|| SemanticsError::UnmappedAtom(name.to_owned()))
    }

    /// The clauses applied literally, quantifying over all state pairs for
    /// a disjunction.
    pub fn supports(&self, s: StateId, f: &Formula) -> Result<bool, SemanticsError> {
        let frame = self.frame;
        Ok(match f {
            Formula::Atom(p) => self.atom(p)?.contains(s),
            Formula::And(l, r) => {
                let left = self.supports(s, l)?;
                let right = self.supports(s, r)?;
                left && right
            }
            Formula::Or(l, r) => {
                // check atoms even when no pair qualifies
                self.proposition(f)?;
                let mut found = false;
                'outer: for t in frame.states() {
                    for u in frame.states() {
                        if frame.leq(frame.meet(t, u), s) && self.supports(t, l)? && self.supports(u, r)? {
                            found = true;
                            break 'outer;
                        }
                    }
                }
                found
            }
            Formula::Neg(b) => !self.supports(frame.star(s), b)?,
        })
    }

    pub fn proposition(&self, f: &Formula) -> Result<Proposition, SemanticsError> {
        eval(self.frame, f, &|name| self.atom(name)).map(Proposition)
    }

    /// `||lhs|| ⊆ ||rhs||`.
    pub fn valid(&self, pair: &ConsequencePair) -> Result<bool, SemanticsError> {
        Ok(self.counter_state(pair)?.is_none())
    }

    /// Least state supporting the lhs but not the rhs.
    pub fn counter_state(&self, pair: &ConsequencePair) -> Result<Option<StateId>, SemanticsError> {
        let lhs = self.proposition(&pair.lhs)?.members();
        let rhs = self.proposition(&pair.rhs)?.members();
        Ok(lhs.difference(rhs).first())
    }
}

/// `{ s | t ∘ u ≤ s for some t ∈ a, u ∈ b }`.
pub fn join_support(frame: &RoutleyFrame, a: StateSet, b: StateSet) -> StateSet {
    let mut out = StateSet::EMPTY;
    for t in a {
        for u in b {
            out = out.union(frame.upset(frame.meet(t, u)));
        }
    }
    out
}

/// `{ s | s* ∉ a }`.
pub fn star_complement(frame: &RoutleyFrame, a: StateSet) -> StateSet {
    frame.states().filter(|&s| !a.contains(frame.star(s))).collect()
}

pub(crate) fn eval<E>(
    frame: &RoutleyFrame,
    f: &Formula,
    atom: &impl Fn(&str) -> Result<StateSet, E>,
) -> Result<StateSet, E> {
    Ok(match f {
        Formula::Atom(p) => atom(p)?,
        Formula::And(l, r) => eval(frame, l, atom)?.intersection(eval(frame, r, atom)?),
        Formula::Or(l, r) => join_support(frame, eval(frame, l, atom)?, eval(frame, r, atom)?),
        Formula::Neg(b) => star_complement(frame, eval(frame, b, atom)?),
    })
}

/// Evaluates with atoms listed in `atoms` bound positionally to `values`.
pub(crate) fn eval_assigned(frame: &RoutleyFrame, f: &Formula, atoms: &[String], values: &[StateSet]) -> StateSet {
    eval(frame, f, &|name| {
        let idx = atoms.iter().position(|a| a == name).expect("atom bound by caller");
        Ok::<_, std::convert::Infallible>(values[idx])
    })
    .unwrap_or_else(|never| match never {})
}

/// Outcome of checking a pair against every valuation on a frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrameVerdict {
    Valid,
    Invalid { valuation: Valuation, witness: StateId },
}

impl FrameVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, FrameVerdict::Valid)
    }
}

/// Visits valuations of `atoms` in lexicographic order of filter indices,
/// first atom most significant.
fn decode_valuation(index: usize, radix: usize, slots: &mut [usize]) {
    let mut rest = index;
    for slot in slots.iter_mut().rev() {
        *slot = rest % radix;
        rest /= radix;
    }
}

fn counterexample_at(
    frame: &RoutleyFrame,
    pair: &ConsequencePair,
    atoms: &[String],
    filters: &[ProperFilter],
    index: usize,
) -> Option<(Vec<usize>, StateId)> {
    let mut slots = vec![0; atoms.len()];
    decode_valuation(index, filters.len(), &mut slots);
    let values: Vec<StateSet> = slots.iter().map(|&j| filters[j].members()).collect();
    let lhs = eval_assigned(frame, &pair.lhs, atoms, &values);
    let rhs = eval_assigned(frame, &pair.rhs, atoms, &values);
    lhs.difference(rhs).first().map(|w| (slots, w))
}

const PARALLEL_THRESHOLD: usize = 512;

/// Checks `pair` under every valuation of its atoms. The witness is the
/// first failing valuation in lexicographic order and its least failing
/// state, independent of how the work is scheduled.
pub fn valid_in_frame(frame: &RoutleyFrame, pair: &ConsequencePair) -> FrameVerdict {
    let atoms: Vec<String> = pair.atoms().into_iter().collect();
    let filters = frame.proper_filters();
    let total = filters.len().checked_pow(atoms.len() as u32).expect("valuation space fits in usize");
    let probe = |index| counterexample_at(frame, pair, &atoms, &filters, index);
    let hit = if total >= PARALLEL_THRESHOLD {
        (0..total).into_par_iter().find_map_first(probe)
    } else {
        (0..total).find_map(probe)
    };
    match hit {
        None => FrameVerdict::Valid,
        Some((slots, witness)) => {
            let valuation = atoms.iter().zip(slots).fold(Valuation::new(), |v, (atom, j)| v.with(atom, filters[j]));
            FrameVerdict::Invalid { valuation, witness }
        }
    }
}

/// Frame conditions characterized by single pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Condition {
    /// `s ≤ s**` for all `s`; characterized by `p |- ~~p`.
    Dn1,
    /// `s** ≤ s` for all `s`; characterized by `~~p |- p`.
    Dn2,
    /// `t ∘ u ≤ s*` implies `t ≤ s*` or `u ≤ s*`; characterized by
    /// `~p & ~q |- ~(p | q)`.
    Dm2,
}

impl Condition {
    pub const ALL: [Condition; 3] = [Condition::Dn1, Condition::Dn2, Condition::Dm2];

    pub fn characteristic_pair(self) -> ConsequencePair {
        let text = match self {
            Condition::Dn1 => "p |- ~~p",
            Condition::Dn2 => "~~p |- p",
            Condition::Dm2 => "~p & ~q |- ~(p | q)",
        };
        crate::formula::parse_pair(text).expect("fixed pair parses")
    }
}

pub fn check_condition(frame: &RoutleyFrame, cond: Condition) -> bool {
    match cond {
        Condition::Dn1 => frame.states().all(|s| frame.leq(s, frame.star_n(s, 2))),
        Condition::Dn2 => frame.states().all(|s| frame.leq(frame.star_n(s, 2), s)),
        Condition::Dm2 => frame.states().all(|s| {
            let target = frame.star(s);
            frame.states().all(|t| {
                frame
                    .states()
                    .all(|u| !frame.leq(frame.meet(t, u), target) || frame.leq(t, target) || frame.leq(u, target))
            })
        }),
    }
}

/// A frame, a valuation and a state refuting some pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Countermodel {
    pub frame: RoutleyFrame,
    pub valuation: Valuation,
    pub witness: StateId,
}

impl Countermodel {
    /// Re-evaluates the pair in this model.
    pub fn refutes(&self, pair: &ConsequencePair) -> bool {
        let model = InfoModel::new(&self.frame, self.valuation.clone());
        matches!(model.counter_state(pair), Ok(Some(_)))
            && model.supports(self.witness, &pair.lhs) == Ok(true)
            && model.supports(self.witness, &pair.rhs) == Ok(false)
    }

    pub fn to_record(&self) -> CountermodelRecord {
        CountermodelRecord {
            frame: FrameSpec::from_frame(&self.frame),
            valuation: self.valuation.to_names(&self.frame),
            witness: self.frame.name(self.witness).to_owned(),
        }
    }
}

/// Serialized countermodel: frame file, valuation file and witness name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountermodelRecord {
    pub frame: FrameSpec,
    pub valuation: BTreeMap<String, Vec<String>>,
    pub witness: String,
}

#[derive(Debug, Error)]
pub enum RecordError {
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
}

impl CountermodelRecord {
    pub fn to_countermodel(&self) -> Result<Countermodel, RecordError> {
        let frame = self.frame.load()?;
        let valuation = Valuation::from_names(&frame, &self.valuation)?;
        let witness = frame.state(&self.witness).ok_or_else(|| SemanticsError::UnknownState(self.witness.clone()))?;
        Ok(Countermodel { frame, valuation, witness })
    }
}

/// First countermodel over frames of increasing size (one per isomorphism
/// class, enumeration order), then lexicographic valuations. `None` says
/// nothing about validity beyond `max_states`.
pub fn find_countermodel(pair: &ConsequencePair, max_states: usize) -> Result<Option<Countermodel>, FrameError> {
    find_countermodel_where(pair, max_states, |_| true)
}

/// [`find_countermodel`] restricted to frames accepted by `keep`.
pub fn find_countermodel_where(
    pair: &ConsequencePair,
    max_states: usize,
    keep: impl Fn(&RoutleyFrame) -> bool + Sync,
) -> Result<Option<Countermodel>, FrameError> {
    for n in 2..=max_states {
        let frames: Vec<RoutleyFrame> = enumerate_routley_ifs(n, true)?.filter(|f| keep(f)).collect();
        let hit = frames.into_par_iter().find_map_first(|frame| match valid_in_frame(&frame, pair) {
            FrameVerdict::Valid => None,
            FrameVerdict::Invalid { valuation, witness } => Some(Countermodel { frame, valuation, witness }),
        });
        if hit.is_some() {
            return Ok(hit);
        }
    }
    Ok(None)
}

/// Which filter-preservation condition a proto-frame breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FilterCondition {
    /// `i* ≠ e`
    TopStar,
    /// `e* ≠ i`
    BottomStar,
    /// `t ≤ u` but not `u* ≤ t*`
    Antitone,
    /// neither `(t∘u)* ≤ t*` nor `(t∘u)* ≤ u*`
    Meet,
}

/// A valuation of `p` under which `||~p||` is not a proper filter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegationWitness {
    pub condition: FilterCondition,
    pub states: Vec<StateId>,
    pub p: ProperFilter,
}

/// On a proto-frame that is not a Routley frame, the valuation of `p`
/// built from the first failing condition: `↑i*`, `{i}`, `↑u*` for a
/// non-antitone pair `t ≤ u`, or `↑(t∘u)*` for a pair breaking the meet
/// condition. `None` on Routley frames.
pub fn negation_witness(frame: &RoutleyFrame) -> Option<NegationWitness> {
    let (e, i) = (frame.bottom(), frame.top());
    let upset = |s: StateId| frame.principal_upset(s).expect("generator is not the bottom");
    if frame.star(i) != e {
        return Some(NegationWitness { condition: FilterCondition::TopStar, states: vec![i], p: upset(frame.star(i)) });
    }
    if frame.star(e) != i {
        return Some(NegationWitness { condition: FilterCondition::BottomStar, states: vec![e], p: upset(i) });
    }
    let pairs = || frame.states().flat_map(move |t| frame.states().map(move |u| (t, u)));
    if let Some((t, u)) = pairs().find(|&(t, u)| frame.leq(t, u) && !frame.leq(frame.star(u), frame.star(t))) {
        return Some(NegationWitness {
            condition: FilterCondition::Antitone,
            states: vec![t, u],
            p: upset(frame.star(u)),
        });
    }
    pairs()
        .find(|&(t, u)| {
            let m = frame.star(frame.meet(t, u));
            !frame.leq(m, frame.star(t)) && !frame.leq(m, frame.star(u))
        })
        .map(|(t, u)| NegationWitness {
            condition: FilterCondition::Meet,
            states: vec![t, u],
            p: upset(frame.star(frame.meet(t, u))),
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse_formula, parse_pair};
    use crate::frame::builtin;

    fn set(frame: &RoutleyFrame, names: &[&str]) -> StateSet {
        names.iter().map(|n| frame.state(n).unwrap()).collect()
    }

    fn filter(frame: &RoutleyFrame, names: &[&str]) -> ProperFilter {
        ProperFilter::new(frame, set(frame, names)).unwrap()
    }

    fn up(frame: &RoutleyFrame, name: &str) -> ProperFilter {
        frame.principal_upset(frame.state(name).unwrap()).unwrap()
    }

    #[test]
    fn double_negation_fails_on_left_frame() {
        let frame = builtin("fig1_left").unwrap();
        let model = InfoModel::new(&frame, Valuation::new().with("p", filter(&frame, &["v", "i"])));
        let t = frame.state("t").unwrap();
        assert!(model.supports(t, &parse_formula("~~p").unwrap()).unwrap());
        assert!(!model.supports(t, &parse_formula("p").unwrap()).unwrap());
        assert!(!model.valid(&parse_pair("~~p |- p").unwrap()).unwrap());
    }

    #[test]
    fn units_support_everything_and_nothing() {
        let frame = builtin("fig2_n5").unwrap();
        let model = InfoModel::new(&frame, Valuation::new().with("p", up(&frame, "w")).with("q", up(&frame, "t")));
        for text in ["p", "~p", "p & ~q", "~(p | q)", "~~q | p"] {
            let f = parse_formula(text).unwrap();
            assert!(model.supports(frame.top(), &f).unwrap());
            assert!(!model.supports(frame.bottom(), &f).unwrap());
        }
    }

    #[test]
    fn disjunction_without_disjuncts() {
        let frame = builtin("fig2_n5").unwrap();
        let model = InfoModel::new(&frame, Valuation::new().with("q", up(&frame, "t")).with("r", up(&frame, "v")));
        let w = frame.state("w").unwrap();
        assert!(model.supports(w, &parse_formula("q | r").unwrap()).unwrap());
        assert!(!model.supports(w, &parse_formula("q").unwrap()).unwrap());
        assert!(!model.supports(w, &parse_formula("r").unwrap()).unwrap());
        let (t, v) = (frame.state("t").unwrap(), frame.state("v").unwrap());
        assert!(frame.leq(frame.meet(t, v), w));
    }

    #[test]
    fn propositions_by_oracle() {
        let right = builtin("fig1_right").unwrap();
        let model = InfoModel::new(&right, Valuation::new().with("p", filter(&right, &["v", "i"])));
        let nn = parse_formula("~~p").unwrap();
        let literal: StateSet = right.states().filter(|&s| model.supports(s, &nn).unwrap()).collect();
        assert_eq!(literal, set(&right, &["i"]));
        assert_eq!(model.proposition(&nn).unwrap().members(), literal);
        assert_eq!(model.proposition(&parse_formula("p").unwrap()).unwrap().members(), set(&right, &["v", "i"]));

        let left = builtin("fig1_left").unwrap();
        let model = InfoModel::new(&left, Valuation::new().with("p", filter(&left, &["v", "i"])));
        let neg = parse_formula("~p").unwrap();
        // s* = t* = u* = v* = v supports p, i* = e does not, e* = i does
        let literal: StateSet = left.states().filter(|&s| model.supports(s, &neg).unwrap()).collect();
        assert_eq!(literal, set(&left, &["i"]));
        let prop = model.proposition(&neg).unwrap();
        assert_eq!(prop.members(), literal);
        assert!(prop.is_proper_filter(&left));
    }

    #[test]
    fn model_validity_examples() {
        let right = builtin("fig1_right").unwrap();
        let model = InfoModel::new(&right, Valuation::new().with("p", up(&right, "t")).with("q", up(&right, "u")));
        let pair = parse_pair("~p & ~q |- ~(p | q)").unwrap();
        assert_eq!(model.counter_state(&pair).unwrap(), right.state("s"));
        let id = parse_pair("~(p & q) | p |- ~(p & q) | p").unwrap();
        assert!(model.valid(&id).unwrap());
    }

    #[test]
    fn unmapped_atoms_are_errors() {
        let frame = builtin("ikl").unwrap();
        let model = InfoModel::new(&frame, Valuation::new());
        let f = parse_formula("p | q").unwrap();
        assert_eq!(model.proposition(&f), Err(SemanticsError::UnmappedAtom("p".into())));
        assert_eq!(model.supports(0, &f), Err(SemanticsError::UnmappedAtom("p".into())));
    }

    #[test]
    fn distributivity_counterexample() {
        let frame = builtin("fig2_n5").unwrap();
        let pair = parse_pair("p & (q | r) |- (p & q) | (p & r)").unwrap();
        let verdict = valid_in_frame(&frame, &pair);
        let FrameVerdict::Invalid { valuation, witness } = verdict else { panic!("expected invalid") };
        let model = InfoModel::new(&frame, valuation);
        assert!(model.supports(witness, &pair.lhs).unwrap());
        assert!(!model.supports(witness, &pair.rhs).unwrap());

        let fixed = InfoModel::new(
            &frame,
            Valuation::new().with("p", up(&frame, "w")).with("q", up(&frame, "t")).with("r", up(&frame, "v")),
        );
        assert_eq!(fixed.counter_state(&pair).unwrap(), frame.state("w"));
    }

    #[test]
    fn frame_validity_examples() {
        let dm1 = parse_pair("~(p & q) |- ~p | ~q").unwrap();
        for name in ["fig1_left", "fig1_right", "fig2_n5", "ikl"] {
            assert!(valid_in_frame(&builtin(name).unwrap(), &dm1).is_valid());
        }
        let ka = parse_pair("p & ~p |- q | ~q").unwrap();
        assert!(valid_in_frame(&builtin("ikl").unwrap(), &ka).is_valid());
    }

    #[test]
    fn conditions_on_paper_frames() {
        let left = builtin("fig1_left").unwrap();
        assert!(check_condition(&left, Condition::Dn1));
        assert!(!check_condition(&left, Condition::Dn2));
        assert!(check_condition(&left, Condition::Dm2));
        let right = builtin("fig1_right").unwrap();
        assert!(!check_condition(&right, Condition::Dn1));
        assert!(check_condition(&right, Condition::Dn2));
        assert!(!check_condition(&right, Condition::Dm2));
        let ikl = builtin("ikl").unwrap();
        assert!(Condition::ALL.iter().all(|&c| check_condition(&ikl, c)));
    }

    #[test]
    fn valuation_names_round_trip() {
        let frame = builtin("fig1_left").unwrap();
        let v = Valuation::from_json(&frame, r#"{"p": ["v", "i"], "q": ["t", "v", "i"]}"#).unwrap();
        assert_eq!(Valuation::from_names(&frame, &v.to_names(&frame)).unwrap(), v);
        assert!(matches!(
            Valuation::from_json(&frame, r#"{"p": ["t", "u", "v", "i"]}"#),
            Err(SemanticsError::NotAFilter { .. })
        ));
        assert!(matches!(Valuation::from_json(&frame, r#"{"p": ["x"]}"#), Err(SemanticsError::UnknownState(_))));
    }

    #[test]
    fn countermodel_search() {
        let pair = parse_pair("~~p |- p").unwrap();
        let cm = find_countermodel(&pair, 6).unwrap().expect("countermodel exists");
        assert!(cm.refutes(&pair));
        assert!(find_countermodel(&parse_pair("p |- p").unwrap(), 5).unwrap().is_none());
        let dm2 = parse_pair("~p & ~q |- ~(p | q)").unwrap();
        let cm = find_countermodel(&dm2, 6).unwrap().expect("countermodel exists");
        assert!(cm.refutes(&dm2));
        let record = cm.to_record();
        let json = serde_json::to_string(&record).unwrap();
        let back: CountermodelRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_countermodel().unwrap(), cm);
    }

    #[test]
    fn negation_witness_on_broken_frames() {
        let left = builtin("fig1_left").unwrap();
        assert!(negation_witness(&left).is_none());
        let mut star = left.star_map().to_vec();
        star[left.state("t").unwrap()] = left.state("s").unwrap();
        let broken = left.clone().with_star(star).unwrap();
        let w = negation_witness(&broken).unwrap();
        let model = InfoModel::new(&broken, Valuation::new().with("p", w.p));
        let neg = model.proposition(&parse_formula("~p").unwrap()).unwrap();
        assert!(!neg.is_proper_filter(&broken));
    }
}
