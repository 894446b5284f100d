//! Finite Routley information frames.
//!
//! A frame is a carrier `S` with a binary "common content" operation `∘`, a
//! star map and two designated states: the top `i` (absolute inconsistency)
//! and the bottom `e` (absolute ignorance). The order is derived from the
//! table: `s ≤ t` iff `s ∘ t = s`.
//!
//! A *proto*-frame only needs `∘` to be a semilattice with `i` as unit, `e`
//! as annihilator and `e` meet-irreducible. A full Routley frame additionally
//! constrains the star so that propositions stay proper filters.

mod builtin;
mod enumerate;
mod file;

pub use builtin::{builtin, BUILTIN_NAMES};
pub use enumerate::{
    canonical_form, default_enumeration_limit, enumerate_proto_ifs, enumerate_routley_ifs,
    enumerate_routley_ifs_with_limit, meet_semilattice_orders, FrameEnumerator, ENUMERATION_LIMIT_ENV,
    HARD_ENUMERATION_LIMIT,
};
pub use file::{FrameSpec, MeetSpec};

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::states::{StateId, StateSet, MAX_STATES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ViolationKind {
    NotAssociative,
    NotCommutative,
    NotIdempotent,
    UnitLaw,
    AnnihilatorLaw,
    EPrimeness,
    StarOnUnits,
    StarNotAntitone,
    StarMeetCondition,
    IEqualsE,
}

/// A broken frame law together with the states exhibiting it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FrameViolation {
    pub kind: ViolationKind,
    pub witness: Vec<StateId>,
}

impl FrameViolation {
    fn new(kind: ViolationKind, witness: Vec<StateId>) -> Self {
        FrameViolation { kind, witness }
    }

    pub fn describe(&self, frame: &RoutleyFrame) -> String {
        let names: Vec<&str> = self.witness.iter().map(|&s| frame.name(s)).collect();
        format!("{:?} {{{}}}", self.kind, names.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrameError {
    #[error("malformed frame: {0}")]
    Malformed(String),
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("not a Routley proto-frame: {}", .0.iter().map(|v| format!("{:?}{:?}", v.kind, v.witness)).collect::<Vec<_>>().join(", "))]
    NotProto(Vec<FrameViolation>),
    #[error("not a Routley frame: {}", .0.iter().map(|v| format!("{:?}{:?}", v.kind, v.witness)).collect::<Vec<_>>().join(", "))]
    NotRoutley(Vec<FrameViolation>),
    #[error("order is not a meet-semilattice: {0}")]
    NotSemilattice(String),
    #[error("unknown built-in frame `{0}`")]
    UnknownBuiltin(String),
    #[error("frame size {size} outside the enumeration range 2..={limit}")]
    LimitExceeded { size: usize, limit: usize },
    #[error("the bottom state generates no proper filter")]
    BottomGenerator,
    #[error("{members:?} is not a proper filter")]
    NotAFilter { members: StateSet },
}

/// A finite structure `⟨S, ∘, *, i, e⟩` stored as full tables.
///
/// Construction only checks that the tables are total over the carrier;
/// the algebraic laws are checked by [`RoutleyFrame::validate_proto`] and
/// [`RoutleyFrame::validate_routley_if`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RoutleyFrame {
    names: Vec<String>,
    meet: Vec<StateId>,
    star: Vec<StateId>,
    bottom: StateId,
    top: StateId,
    // up[s] = { t | s ∘ t = s }
    up: Vec<StateSet>,
}

impl RoutleyFrame {
    pub fn from_tables(
        names: Vec<String>,
        meet: Vec<Vec<StateId>>,
        star: Vec<StateId>,
        bottom: StateId,
        top: StateId,
    ) -> Result<Self, FrameError> {
        let n = names.len();
        if n == 0 || n > MAX_STATES {
            return Err(FrameError::Malformed(format!("carrier size {n} outside 1..={MAX_STATES}")));
        }
        if meet.len() != n || meet.iter().any(|row| row.len() != n) {
            return Err(FrameError::Malformed("meet table is not n × n".into()));
        }
        if star.len() != n {
            return Err(FrameError::Malformed("star map is not total".into()));
        }
        let out_of_range = |s: StateId| s >= n;
        if meet.iter().flatten().copied().any(out_of_range) || star.iter().copied().any(out_of_range) {
            return Err(FrameError::Malformed("table entry outside the carrier".into()));
        }
        if out_of_range(bottom) || out_of_range(top) {
            return Err(FrameError::Malformed("designated state outside the carrier".into()));
        }
        let mut seen = std::collections::HashSet::new();
        if let Some(dup) = names.iter().find(|name| !seen.insert(name.as_str())) {
            return Err(FrameError::Malformed(format!("duplicate state name `{dup}`")));
        }
        Ok(Self::from_flat(names, meet.concat(), star, bottom, top))
    }

    pub(crate) fn from_flat(
        names: Vec<String>,
        meet: Vec<StateId>,
        star: Vec<StateId>,
        bottom: StateId,
        top: StateId,
    ) -> Self {
        let n = names.len();
        let up = (0..n).map(|s| (0..n).filter(|&t| meet[s * n + t] == s).collect()).collect();
        RoutleyFrame { names, meet, star, bottom, top, up }
    }

    /// Builds a frame from covering pairs `(lower, upper)` of a partial
    /// order; `∘` is computed as the greatest lower bound.
    pub fn from_hasse(
        names: Vec<String>,
        covers: &[(StateId, StateId)],
        star: Vec<StateId>,
        bottom: StateId,
        top: StateId,
    ) -> Result<Self, FrameError> {
        let n = names.len();
        if n == 0 || n > MAX_STATES {
            return Err(FrameError::Malformed(format!("carrier size {n} outside 1..={MAX_STATES}")));
        }
        if covers.iter().any(|&(a, b)| a >= n || b >= n) {
            return Err(FrameError::Malformed("covering pair outside the carrier".into()));
        }
        let below = order_closure(n, covers)
            .map_err(|(a, b)| FrameError::NotSemilattice(format!("cycle through {} and {}", names[a], names[b])))?;
        let mut meet = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                let lower = below[a].intersection(below[b]);
                let glb = lower.iter().find(|&c| lower.is_subset(below[c]));
                match glb {
                    Some(c) => meet[a][b] = c,
                    None => {
                        return Err(FrameError::NotSemilattice(format!(
                            "{} and {} have no greatest lower bound",
                            names[a], names[b]
                        )))
                    }
                }
            }
        }
        Self::from_tables(names, meet, star, bottom, top)
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn states(&self) -> std::ops::Range<StateId> {
        0..self.size()
    }

    pub fn all(&self) -> StateSet {
        StateSet::full(self.size())
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, s: StateId) -> &str {
        &self.names[s]
    }

    pub fn state(&self, name: &str) -> Option<StateId> {
        self.names.iter().position(|n| n == name)
    }

    pub fn bottom(&self) -> StateId {
        self.bottom
    }

    pub fn top(&self) -> StateId {
        self.top
    }

    pub fn meet(&self, s: StateId, t: StateId) -> StateId {
        self.meet[s * self.size() + t]
    }

    pub fn star(&self, s: StateId) -> StateId {
        self.star[s]
    }

    pub fn star_map(&self) -> &[StateId] {
        &self.star
    }

    /// `s ≤ t` iff `s ∘ t = s`.
    pub fn leq(&self, s: StateId, t: StateId) -> bool {
        self.meet(s, t) == s
    }

    /// `{ t | s ≤ t }`.
    pub fn upset(&self, s: StateId) -> StateSet {
        self.up[s]
    }

    pub fn star_n(&self, s: StateId, n: usize) -> StateId {
        (0..n).fold(s, |cur, _| self.star(cur))
    }

    /// Upward closure of a set under the derived order.
    pub fn up_closure(&self, set: StateSet) -> StateSet {
        set.iter().fold(StateSet::EMPTY, |acc, s| acc.union(self.up[s]))
    }

    pub fn is_linear(&self) -> bool {
        self.states().all(|s| self.states().all(|t| self.leq(s, t) || self.leq(t, s)))
    }

    pub fn is_involutive(&self) -> bool {
        self.states().all(|s| self.star_n(s, 2) == s)
    }

    /// Reports every violated proto-frame law, one witness per law.
    pub fn validate_proto(&self) -> Vec<FrameViolation> {
        use ViolationKind::*;
        let n = self.size();
        let (e, i) = (self.bottom, self.top);
        let mut out = Vec::new();
        if e == i {
            out.push(FrameViolation::new(IEqualsE, vec![i]));
        }
        if let Some(s) = self.states().find(|&s| self.meet(s, s) != s) {
            out.push(FrameViolation::new(NotIdempotent, vec![s]));
        }
        let pairs = || self.states().flat_map(move |a| (0..n).map(move |b| (a, b)));
        if let Some((a, b)) = pairs().find(|&(a, b)| self.meet(a, b) != self.meet(b, a)) {
            out.push(FrameViolation::new(NotCommutative, vec![a, b]));
        }
        let assoc = pairs()
            .flat_map(|(a, b)| (0..n).map(move |c| (a, b, c)))
            .find(|&(a, b, c)| self.meet(self.meet(a, b), c) != self.meet(a, self.meet(b, c)));
        if let Some((a, b, c)) = assoc {
            out.push(FrameViolation::new(NotAssociative, vec![a, b, c]));
        }
        if let Some(s) = self.states().find(|&s| self.meet(s, i) != s) {
            out.push(FrameViolation::new(UnitLaw, vec![s]));
        }
        if let Some(s) = self.states().find(|&s| self.meet(s, e) != e) {
            out.push(FrameViolation::new(AnnihilatorLaw, vec![s]));
        }
        if let Some((a, b)) = pairs().find(|&(a, b)| self.meet(a, b) == e && a != e && b != e) {
            out.push(FrameViolation::new(EPrimeness, vec![a, b]));
        }
        out
    }

    /// The star conditions on top of a valid proto-frame. Errors with
    /// [`FrameError::NotProto`] if the proto-frame laws fail.
    pub fn validate_routley_if(&self) -> Result<Vec<FrameViolation>, FrameError> {
        let proto = self.validate_proto();
        if !proto.is_empty() {
            return Err(FrameError::NotProto(proto));
        }
        Ok(self.star_violations())
    }

    /// Star conditions only; meaningful on proto-frames.
    pub fn star_violations(&self) -> Vec<FrameViolation> {
        use ViolationKind::*;
        let (e, i) = (self.bottom, self.top);
        let mut out = Vec::new();
        if self.star(i) != e {
            out.push(FrameViolation::new(StarOnUnits, vec![i]));
        } else if self.star(e) != i {
            out.push(FrameViolation::new(StarOnUnits, vec![e]));
        }
        let pairs = || self.states().flat_map(move |a| self.states().map(move |b| (a, b)));
        if let Some((t, u)) = pairs().find(|&(t, u)| self.leq(t, u) && !self.leq(self.star(u), self.star(t))) {
            out.push(FrameViolation::new(StarNotAntitone, vec![t, u]));
        }
        let meet_cond = pairs().find(|&(t, u)| {
            let m = self.star(self.meet(t, u));
            !self.leq(m, self.star(t)) && !self.leq(m, self.star(u))
        });
        if let Some((t, u)) = meet_cond {
            out.push(FrameViolation::new(StarMeetCondition, vec![t, u]));
        }
        out
    }

    pub fn is_proto(&self) -> bool {
        self.validate_proto().is_empty()
    }

    pub fn is_routley_if(&self) -> bool {
        matches!(self.validate_routley_if(), Ok(v) if v.is_empty())
    }

    /// Fails unless the frame is a full Routley frame.
    pub fn checked(self) -> Result<Self, FrameError> {
        let violations = self.validate_routley_if()?;
        if violations.is_empty() {
            Ok(self)
        } else {
            Err(FrameError::NotRoutley(violations))
        }
    }

    /// The three defining conditions of a proper filter.
    pub fn is_proper_filter(&self, set: StateSet) -> bool {
        set.contains(self.top)
            && !set.contains(self.bottom)
            && self
                .states()
                .all(|t| self.states().all(|u| set.contains(self.meet(t, u)) == (set.contains(t) && set.contains(u))))
    }

    /// `{ t | s ≤ t }` for `s ≠ e`.
    pub fn principal_upset(&self, s: StateId) -> Result<ProperFilter, FrameError> {
        if s == self.bottom {
            return Err(FrameError::BottomGenerator);
        }
        Ok(ProperFilter(self.up[s]))
    }

    /// Every proper filter, ordered by generating state.
    ///
    /// On a semilattice every proper filter `F` is the principal upset of
    /// the meet of its members, so the filters are exactly the upsets of
    /// the non-bottom states.
    pub fn proper_filters(&self) -> Vec<ProperFilter> {
        self.states().filter(|&s| s != self.bottom).map(|s| ProperFilter(self.up[s])).collect()
    }

    /// Covering pairs `(lower, upper)` of the derived order.
    pub fn hasse(&self) -> Vec<(StateId, StateId)> {
        let mut covers = Vec::new();
        for a in self.states() {
            for b in self.states() {
                if a != b && self.leq(a, b) {
                    let between = self.states().any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b));
                    if !between {
                        covers.push((a, b));
                    }
                }
            }
        }
        covers
    }

    pub fn render_set(&self, set: StateSet) -> String {
        let names: Vec<&str> = set.iter().map(|s| self.name(s)).collect();
        format!("{{{}}}", names.join(", "))
    }

    /// Same order with a different star map.
    pub fn with_star(self, star: Vec<StateId>) -> Result<Self, FrameError> {
        if star.len() != self.size() || star.iter().any(|&s| s >= self.size()) {
            return Err(FrameError::Malformed("star map is not total over the carrier".into()));
        }
        Ok(Self::from_flat(self.names, self.meet, star, self.bottom, self.top))
    }

    /// Same frame with states renamed.
    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.size());
        self.names = names;
        self
    }

    pub(crate) fn meet_flat(&self) -> &[StateId] {
        &self.meet
    }
}

impl fmt::Debug for RoutleyFrame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RoutleyFrame({})", self)
    }
}

impl fmt::Display for RoutleyFrame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> =
            self.hasse().into_iter().map(|(a, b)| format!("{}<{}", self.name(a), self.name(b))).collect();
        let star: Vec<String> =
            self.states().map(|s| format!("{}*={}", self.name(s), self.name(self.star(s)))).collect();
        write!(
            f,
            "states [{}], e={}, i={}, order {}, star {}",
            self.names.join(", "),
            self.name(self.bottom),
            self.name(self.top),
            covers.join(" "),
            star.join(" ")
        )
    }
}

/// A set `F` with `i ∈ F`, `e ∉ F`, and `t ∘ u ∈ F` iff `t, u ∈ F`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProperFilter(StateSet);

impl ProperFilter {
    pub fn new(frame: &RoutleyFrame, members: StateSet) -> Result<Self, FrameError> {
        if frame.is_proper_filter(members) {
            Ok(ProperFilter(members))
        } else {
            Err(FrameError::NotAFilter { members })
        }
    }

    pub fn members(self) -> StateSet {
        self.0
    }

    pub fn contains(self, s: StateId) -> bool {
        self.0.contains(s)
    }
}

/// Reflexive-transitive closure of covering pairs: `below[s]` is the
/// downset of `s`. Errors with a pair on a cycle.
pub(crate) fn order_closure(n: usize, covers: &[(StateId, StateId)]) -> Result<Vec<StateSet>, (StateId, StateId)> {
    let mut below: Vec<StateSet> = (0..n).map(StateSet::singleton).collect();
    for &(lo, hi) in covers {
        below[hi].insert(lo);
    }
    loop {
        let mut changed = false;
        for s in 0..n {
            let closed = below[s].iter().fold(below[s], |acc, t| acc.union(below[t]));
            if closed != below[s] {
                below[s] = closed;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    for a in 0..n {
        for b in 0..n {
            if a != b && below[a].contains(b) && below[b].contains(a) {
                return Err((a, b));
            }
        }
    }
    Ok(below)
}
