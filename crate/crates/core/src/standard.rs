//! Truth-conditional semantics on standard frames `⟨W, ≤, *⟩`: a partial
//! order with an antitone star and upward-closed valuations. Disjunction is
//! classical here (`w ⊨ α ∨ β` iff `w ⊨ α` or `w ⊨ β`), which is the
//! contrast with the support clauses of [`crate::semantics`].

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formula::{ConsequencePair, Formula};
use crate::frame::RoutleyFrame;
use crate::states::{StateId, StateSet, MAX_STATES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StandardError {
    #[error("malformed standard frame: {0}")]
    Malformed(String),
    #[error("order is not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("star is not antitone: {lower} ≤ {upper} but {upper}* ≰ {lower}*")]
    StarNotAntitone { lower: String, upper: String },
    #[error("unknown world `{0}`")]
    UnknownWorld(String),
    #[error("value of `{0}` is not upward closed")]
    NotUpwardClosed(String),
    #[error("atom `{0}` has no value in the valuation")]
    UnmappedAtom(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardFrame {
    names: Vec<String>,
    // up[w] = { v | w ≤ v }
    up: Vec<StateSet>,
    star: Vec<StateId>,
}

impl StandardFrame {
    /// From covering pairs `(lower, upper)`; the order is their
    /// reflexive-transitive closure.
    pub fn from_order(
        names: Vec<String>,
        covers: &[(StateId, StateId)],
        star: Vec<StateId>,
    ) -> Result<Self, StandardError> {
        let n = names.len();
        if n == 0 || n > MAX_STATES {
            return Err(StandardError::Malformed(format!("world count {n} outside 1..={MAX_STATES}")));
        }
        if star.len() != n || star.iter().any(|&s| s >= n) || covers.iter().any(|&(a, b)| a >= n || b >= n) {
            return Err(StandardError::Malformed("table entry outside the carrier".into()));
        }
        let below = crate::frame::order_closure(n, covers)
            .map_err(|(a, b)| StandardError::NotPartialOrder(format!("cycle through {} and {}", names[a], names[b])))?;
        let up = (0..n).map(|w| (0..n).filter(|&v| below[v].contains(w)).collect()).collect();
        let frame = StandardFrame { names, up, star };
        frame.check_star()?;
        Ok(frame)
    }

    /// The order and star of a Routley frame, forgetting `∘`, `i` and `e`.
    pub fn from_routley(frame: &RoutleyFrame) -> Result<Self, StandardError> {
        let sf = StandardFrame {
            names: frame.names().to_vec(),
            up: frame.states().map(|s| frame.upset(s)).collect(),
            star: frame.star_map().to_vec(),
        };
        sf.check_star()?;
        Ok(sf)
    }

    fn check_star(&self) -> Result<(), StandardError> {
        for v in self.worlds() {
            for w in self.up[v] {
                if !self.leq(self.star[w], self.star[v]) {
                    return Err(StandardError::StarNotAntitone {
                        lower: self.names[v].clone(),
                        upper: self.names[w].clone(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn worlds(&self) -> std::ops::Range<StateId> {
        0..self.size()
    }

    pub fn name(&self, w: StateId) -> &str {
        &self.names[w]
    }

    pub fn world(&self, name: &str) -> Option<StateId> {
        self.names.iter().position(|n| n == name)
    }

    pub fn leq(&self, v: StateId, w: StateId) -> bool {
        self.up[v].contains(w)
    }

    pub fn star(&self, w: StateId) -> StateId {
        self.star[w]
    }

    pub fn upset(&self, w: StateId) -> StateSet {
        self.up[w]
    }

    pub fn is_upward_closed(&self, set: StateSet) -> bool {
        set.iter().all(|w| self.up[w].is_subset(set))
    }

    /// Every upward-closed subset, in increasing bit order.
    pub fn upsets(&self) -> Vec<StateSet> {
        (0..1u64 << self.size())
            .map(|bits| StateSet::from_bits(bits as u32))
            .filter(|&set| self.is_upward_closed(set))
            .collect()
    }

    /// `{ w | w* ∉ a }`.
    pub fn star_complement(&self, a: StateSet) -> StateSet {
        self.worlds().filter(|&w| !a.contains(self.star[w])).collect()
    }
}

/// Standard frame file: `worlds`, `order` (covering pairs) and `star`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StandardFrameSpec {
    pub worlds: Vec<String>,
    pub order: Vec<[String; 2]>,
    pub star: BTreeMap<String, String>,
}

impl StandardFrameSpec {
    pub fn to_frame(&self) -> Result<StandardFrame, StandardError> {
        let index = |name: &str| {
            self.worlds.iter().position(|w| w == name).ok_or_else(|| StandardError::UnknownWorld(name.to_owned()))
        };
        let covers =
            self.order.iter().map(|[a, b]| Ok((index(a)?, index(b)?))).collect::<Result<Vec<_>, StandardError>>()?;
        let mut star = vec![None; self.worlds.len()];
        for (from, to) in &self.star {
            star[index(from)?] = Some(index(to)?);
        }
        let star = star
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| StandardError::Malformed("star map is not total".into()))?;
        StandardFrame::from_order(self.worlds.clone(), &covers, star)
    }
}

#[derive(Debug, Clone)]
pub struct StandardModel<'f> {
    frame: &'f StandardFrame,
    valuation: BTreeMap<String, StateSet>,
}

impl<'f> StandardModel<'f> {
    /// Rejects valuations that are not upward closed.
    pub fn new(frame: &'f StandardFrame, valuation: BTreeMap<String, StateSet>) -> Result<Self, StandardError> {
        if let Some((atom, _)) = valuation.iter().find(|(_, &set)| !frame.is_upward_closed(set)) {
            return Err(StandardError::NotUpwardClosed(atom.clone()));
        }
        Ok(StandardModel { frame, valuation })
    }

    fn atom(&self, name: &str) -> Result<StateSet, StandardError> {
        self.valuation.get(name).copied().ok_or_else(|| StandardError::UnmappedAtom(name.to_owned()))
    }

    pub fn truth(&self, w: StateId, f: &Formula) -> Result<bool, StandardError> {
        Ok(match f {
            Formula::Atom(p) => self.atom(p)?.contains(w),
            Formula::And(l, r) => {
                let left = self.truth(w, l)?;
                left & self.truth(w, r)?
            }
            Formula::Or(l, r) => {
                let left = self.truth(w, l)?;
                left | self.truth(w, r)?
            }
            Formula::Neg(b) => !self.truth(self.frame.star(w), b)?,
        })
    }

    /// The set of worlds where `f` is true.
    pub fn extension(&self, f: &Formula) -> Result<StateSet, StandardError> {
        Ok(match f {
            Formula::Atom(p) => self.atom(p)?,
            Formula::And(l, r) => self.extension(l)?.intersection(self.extension(r)?),
            Formula::Or(l, r) => self.extension(l)?.union(self.extension(r)?),
            Formula::Neg(b) => self.frame.star_complement(self.extension(b)?),
        })
    }

    /// First world making the lhs true and the rhs false.
    pub fn counter_world(&self, pair: &ConsequencePair) -> Result<Option<StateId>, StandardError> {
        Ok(self.extension(&pair.lhs)?.difference(self.extension(&pair.rhs)?).first())
    }

    pub fn valid(&self, pair: &ConsequencePair) -> Result<bool, StandardError> {
        Ok(self.counter_world(pair)?.is_none())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse_formula, parse_pair};

    fn point() -> StandardFrame {
        StandardFrame::from_order(vec!["w".into()], &[], vec![0]).unwrap()
    }

    fn valuation(pairs: &[(&str, &[StateId])]) -> BTreeMap<String, StateSet> {
        pairs.iter().map(|(a, ws)| (a.to_string(), ws.iter().copied().collect())).collect()
    }

    #[test]
    fn classical_point() {
        let frame = point();
        let model = StandardModel::new(&frame, valuation(&[("p", &[0])])).unwrap();
        assert!(model.truth(0, &parse_formula("p | ~p").unwrap()).unwrap());
        let model = StandardModel::new(&frame, valuation(&[("p", &[])])).unwrap();
        assert!(model.truth(0, &parse_formula("~p").unwrap()).unwrap());
    }

    #[test]
    fn swapped_chain() {
        // v < w with star swapping them
        let frame = StandardFrame::from_order(vec!["v".into(), "w".into()], &[(0, 1)], vec![1, 0]).unwrap();
        let model = StandardModel::new(&frame, valuation(&[("p", &[1])])).unwrap();
        // v* = w makes p true, so ~p fails at v; w* = v makes p false, so ~p holds at w
        assert!(!model.truth(0, &parse_formula("~p").unwrap()).unwrap());
        assert!(model.truth(1, &parse_formula("~p").unwrap()).unwrap());
        assert!(model.valid(&parse_pair("p & q |- p").unwrap()).is_err());
        let model = StandardModel::new(&frame, valuation(&[("p", &[1]), ("q", &[0, 1])])).unwrap();
        assert!(model.valid(&parse_pair("p & q |- p").unwrap()).unwrap());
        assert!(model.valid(&parse_pair("p & (q | ~p) |- p & q | p & ~p").unwrap()).unwrap());
        // q | ~q holds at v (q is true everywhere) while p fails at v
        assert_eq!(model.counter_world(&parse_pair("q | ~q |- p").unwrap()).unwrap(), Some(0));
    }

    #[test]
    fn rejects_bad_inputs() {
        let frame = StandardFrame::from_order(vec!["v".into(), "w".into()], &[(0, 1)], vec![1, 0]).unwrap();
        assert!(matches!(
            StandardModel::new(&frame, valuation(&[("p", &[0])])),
            Err(StandardError::NotUpwardClosed(_))
        ));
        assert!(matches!(
            StandardFrame::from_order(vec!["v".into(), "w".into()], &[(0, 1)], vec![0, 1]),
            Err(StandardError::StarNotAntitone { .. })
        ));
        assert!(matches!(
            StandardFrame::from_order(vec!["v".into(), "w".into()], &[(0, 1), (1, 0)], vec![0, 1]),
            Err(StandardError::NotPartialOrder(_))
        ));
    }

    #[test]
    fn spec_file() {
        let spec: StandardFrameSpec =
            serde_json::from_str(r#"{"worlds": ["v", "w"], "order": [["v", "w"]], "star": {"v": "w", "w": "v"}}"#)
                .unwrap();
        let frame = spec.to_frame().unwrap();
        assert!(frame.leq(0, 1) && !frame.leq(1, 0));
        assert_eq!(frame.upsets().len(), 3);
    }
}
