//! Frame files: JSON or TOML with the keys `states`, `e`, `i`, `star` and
//! either `meet` (triples `[a, b, a∘b]`) or `hasse` (covering pairs
//! `[lower, upper]`).
//!
//! ```toml
//! states = ["e", "t", "s", "i"]
//! e = "e"
//! i = "i"
//! hasse = [["e", "t"], ["t", "s"], ["s", "i"]]
//! star = { e = "i", t = "s", s = "t", i = "e" }
//! ```
//!
//! A meet triple also fixes the mirrored entry `[b, a]` unless that entry
//! is listed separately.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{FrameError, RoutleyFrame};
use crate::states::StateId;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameSpec {
    pub states: Vec<String>,
    pub e: String,
    pub i: String,
    #[serde(flatten)]
    pub meet: MeetSpec,
    pub star: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MeetSpec {
    Meet(Vec<[String; 3]>),
    Hasse(Vec<[String; 2]>),
}

impl FrameSpec {
    pub fn from_json(text: &str) -> Result<Self, FrameError> {
        serde_json::from_str(text).map_err(|e| FrameError::Malformed(e.to_string()))
    }

    pub fn from_toml(text: &str) -> Result<Self, FrameError> {
        toml::from_str(text).map_err(|e| FrameError::Malformed(e.to_string()))
    }

    /// Full meet table, upper triangle including the diagonal.
    pub fn from_frame(frame: &RoutleyFrame) -> Self {
        let name = |s: StateId| frame.name(s).to_owned();
        let mut triples = Vec::new();
        for a in frame.states() {
            for b in a..frame.size() {
                triples.push([name(a), name(b), name(frame.meet(a, b))]);
                if frame.meet(a, b) != frame.meet(b, a) {
                    triples.push([name(b), name(a), name(frame.meet(b, a))]);
                }
            }
        }
        FrameSpec {
            states: frame.names().to_vec(),
            e: name(frame.bottom()),
            i: name(frame.top()),
            meet: MeetSpec::Meet(triples),
            star: frame.states().map(|s| (name(s), name(frame.star(s)))).collect(),
        }
    }

    /// Builds the tables without checking any frame law.
    pub fn to_frame(&self) -> Result<RoutleyFrame, FrameError> {
        let index = |name: &str| -> Result<StateId, FrameError> {
            self.states.iter().position(|s| s == name).ok_or_else(|| FrameError::UnknownState(name.to_owned()))
        };
        let n = self.states.len();
        let (e, i) = (index(&self.e)?, index(&self.i)?);
        let mut star = vec![None; n];
        for (from, to) in &self.star {
            star[index(from)?] = Some(index(to)?);
        }
        let star = star
            .into_iter()
            .enumerate()
            .map(|(s, v)| v.ok_or_else(|| FrameError::Malformed(format!("no star image for `{}`", self.states[s]))))
            .collect::<Result<Vec<_>, _>>()?;
        match &self.meet {
            MeetSpec::Hasse(covers) => {
                let covers = covers
                    .iter()
                    .map(|[lo, hi]| Ok((index(lo)?, index(hi)?)))
                    .collect::<Result<Vec<_>, FrameError>>()?;
                RoutleyFrame::from_hasse(self.states.clone(), &covers, star, e, i)
            }
            MeetSpec::Meet(triples) => {
                let mut explicit = vec![vec![None; n]; n];
                for [a, b, c] in triples {
                    let (a, b, c) = (index(a)?, index(b)?, index(c)?);
                    match explicit[a][b] {
                        Some(prev) if prev != c => {
                            return Err(FrameError::Malformed(format!(
                                "conflicting meet entries for ({}, {})",
                                self.states[a], self.states[b]
                            )))
                        }
                        _ => explicit[a][b] = Some(c),
                    }
                }
                let mut table = vec![vec![0; n]; n];
                for a in 0..n {
                    for b in 0..n {
                        table[a][b] = explicit[a][b].or(explicit[b][a]).ok_or_else(|| {
                            FrameError::Malformed(format!(
                                "missing meet entry for ({}, {})",
                                self.states[a], self.states[b]
                            ))
                        })?;
                    }
                }
                RoutleyFrame::from_tables(self.states.clone(), table, star, e, i)
            }
        }
    }

    /// Builds the frame and runs both validators.
    pub fn load(&self) -> Result<RoutleyFrame, FrameError> {
        self.to_frame()?.checked()
    }
}
