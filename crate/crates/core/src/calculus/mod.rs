//! Hilbert-style consequence systems over pairs `α |- β`.
//!
//! Axioms are schemata over the metavariables `alpha`, `beta`, `gamma`;
//! the families `L1`, `L2`, `L1_STAR`, `L2_STAR` are additionally indexed
//! by a natural number `k` controlling how many negations are stacked.
//! Matching is purely syntactic: no associativity or commutativity.

mod derivation;
mod search;

pub use derivation::{check_derivation, Derivation, Justification, NodeError, NodeErrorKind, TextError};
pub use search::{prove, prove_with, ProofOutcome, SearchLimits};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formula::{ConsequencePair, Formula};
use crate::frame::builtin;
use crate::semantics::valid_in_frame;

/// Default bound on the `k` index of schema families.
pub const DEFAULT_K_MAX: u32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Meta {
    Alpha,
    Beta,
    Gamma,
}

impl Meta {
    pub const ALL: [Meta; 3] = [Meta::Alpha, Meta::Beta, Meta::Gamma];

    pub fn name(self) -> &'static str {
        match self {
            Meta::Alpha => "alpha",
            Meta::Beta => "beta",
            Meta::Gamma => "gamma",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl FromStr for Meta {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "alpha" | "α" | "a" => Ok(Meta::Alpha),
            "beta" | "β" | "b" => Ok(Meta::Beta),
            "gamma" | "γ" | "g" => Ok(Meta::Gamma),
            other => Err(format!("unknown metavariable `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SchemaId {
    #[serde(rename = "ID")]
    Id,
    #[serde(rename = "E_AND_1")]
    EAnd1,
    #[serde(rename = "E_AND_2")]
    EAnd2,
    #[serde(rename = "I_OR_1")]
    IOr1,
    #[serde(rename = "I_OR_2")]
    IOr2,
    D,
    #[serde(rename = "DM1")]
    Dm1,
    #[serde(rename = "DM2")]
    Dm2,
    #[serde(rename = "DM2_STAR")]
    Dm2Star,
    #[serde(rename = "D_STAR")]
    DStar,
    #[serde(rename = "DN1")]
    Dn1,
    #[serde(rename = "DN2")]
    Dn2,
    #[serde(rename = "EM")]
    Em,
    #[serde(rename = "EFQ")]
    Efq,
    #[serde(rename = "KA")]
    Ka,
    L1,
    L2,
    #[serde(rename = "L1_STAR")]
    L1Star,
    #[serde(rename = "L2_STAR")]
    L2Star,
}

impl SchemaId {
    pub const ALL: [SchemaId; 19] = [
        SchemaId::Id,
        SchemaId::EAnd1,
        SchemaId::EAnd2,
        SchemaId::IOr1,
        SchemaId::IOr2,
        SchemaId::D,
        SchemaId::Dm1,
        SchemaId::Dm2,
        SchemaId::Dm2Star,
        SchemaId::DStar,
        SchemaId::Dn1,
        SchemaId::Dn2,
        SchemaId::Em,
        SchemaId::Efq,
        SchemaId::Ka,
        SchemaId::L1,
        SchemaId::L2,
        SchemaId::L1Star,
        SchemaId::L2Star,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SchemaId::Id => "ID",
            SchemaId::EAnd1 => "E_AND_1",
            SchemaId::EAnd2 => "E_AND_2",
            SchemaId::IOr1 => "I_OR_1",
            SchemaId::IOr2 => "I_OR_2",
            SchemaId::D => "D",
            SchemaId::Dm1 => "DM1",
            SchemaId::Dm2 => "DM2",
            SchemaId::Dm2Star => "DM2_STAR",
            SchemaId::DStar => "D_STAR",
            SchemaId::Dn1 => "DN1",
            SchemaId::Dn2 => "DN2",
            SchemaId::Em => "EM",
            SchemaId::Efq => "EFQ",
            SchemaId::Ka => "KA",
            SchemaId::L1 => "L1",
            SchemaId::L2 => "L2",
            SchemaId::L1Star => "L1_STAR",
            SchemaId::L2Star => "L2_STAR",
        }
    }

    /// Least admissible `k` for indexed families.
    pub fn min_k(self) -> Option<u32> {
        match self {
            SchemaId::L1 | SchemaId::L2 => Some(0),
            SchemaId::L1Star | SchemaId::L2Star => Some(1),
            _ => None,
        }
    }

    pub fn is_indexed(self) -> bool {
        self.min_k().is_some()
    }

    pub fn schema(self) -> &'static Schema {
        &schemas()[self as usize]
    }
}

impl fmt::Display for SchemaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SchemaId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        SchemaId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| format!("unknown schema `{s}`"))
    }
}

/// Formula shape with metavariables; `NegPow` stacks `per_k * k + offset`
/// negations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Template {
    Meta(Meta),
    And(Box<Template>, Box<Template>),
    Or(Box<Template>, Box<Template>),
    Neg(Box<Template>),
    NegPow { per_k: u32, offset: u32, body: Box<Template> },
}

impl Template {
    fn instantiate(&self, subst: &[Option<Formula>; 3], k: u32) -> Formula {
        match self {
            Template::Meta(m) => subst[m.index()].clone().expect("caller checked coverage"),
            Template::And(l, r) => Formula::and(l.instantiate(subst, k), r.instantiate(subst, k)),
            Template::Or(l, r) => Formula::or(l.instantiate(subst, k), r.instantiate(subst, k)),
            Template::Neg(b) => Formula::neg(b.instantiate(subst, k)),
            Template::NegPow { per_k, offset, body } => body.instantiate(subst, k).neg_power(per_k * k + offset),
        }
    }

    /// Extends `subst` so that the template matches `f`; false on clash.
    fn matches(&self, f: &Formula, k: u32, subst: &mut [Option<Formula>; 3]) -> bool {
        match (self, f) {
            (Template::Meta(m), _) => match &subst[m.index()] {
                Some(bound) => bound == f,
                None => {
                    subst[m.index()] = Some(f.clone());
                    true
                }
            },
            (Template::And(tl, tr), Formula::And(l, r)) | (Template::Or(tl, tr), Formula::Or(l, r)) => {
                tl.matches(l, k, subst) && tr.matches(r, k, subst)
            }
            (Template::Neg(tb), Formula::Neg(b)) => tb.matches(b, k, subst),
            (Template::NegPow { per_k, offset, body }, _) => match f.strip_negations(per_k * k + offset) {
                Some(inner) => body.matches(inner, k, subst),
                None => false,
            },
            _ => false,
        }
    }

    fn metas(&self, out: &mut Vec<Meta>) {
        match self {
            Template::Meta(m) => {
                if !out.contains(m) {
                    out.push(*m)
                }
            }
            Template::And(l, r) | Template::Or(l, r) => {
                l.metas(out);
                r.metas(out);
            }
            Template::Neg(b) | Template::NegPow { body: b, .. } => b.metas(out),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schema {
    pub id: SchemaId,
    pub lhs: Template,
    pub rhs: Template,
}

impl Schema {
    pub fn metas(&self) -> Vec<Meta> {
        let mut out = Vec::new();
        self.lhs.metas(&mut out);
        self.rhs.metas(&mut out);
        out.sort();
        out
    }
}

fn schemas() -> &'static [Schema] {
    static TABLE: OnceLock<Vec<Schema>> = OnceLock::new();
    TABLE.get_or_init(|| SchemaId::ALL.into_iter().map(build_schema).collect())
}

fn build_schema(id: SchemaId) -> Schema {
    use Template as T;
    let meta = |m| T::Meta(m);
    let (a, b, c) = (|| meta(Meta::Alpha), || meta(Meta::Beta), || meta(Meta::Gamma));
    let and = |l, r| T::And(Box::new(l), Box::new(r));
    let or = |l, r| T::Or(Box::new(l), Box::new(r));
    let neg = |x| T::Neg(Box::new(x));
    let pow = |per_k, offset, body| T::NegPow { per_k, offset, body: Box::new(body) };
    let (lhs, rhs) = match id {
        SchemaId::Id => (a(), a()),
        SchemaId::EAnd1 => (and(a(), b()), a()),
        SchemaId::EAnd2 => (and(a(), b()), b()),
        SchemaId::IOr1 => (a(), or(a(), b())),
        SchemaId::IOr2 => (b(), or(a(), b())),
        SchemaId::D => (and(a(), or(b(), c())), or(and(a(), b()), and(a(), c()))),
        SchemaId::Dm1 => (neg(and(a(), b())), or(neg(a()), neg(b()))),
        SchemaId::Dm2 => (and(neg(a()), neg(b())), neg(or(a(), b()))),
        SchemaId::Dm2Star => (and(neg(neg(a())), neg(neg(b()))), neg(or(neg(a()), neg(b())))),
        SchemaId::DStar => (and(a(), or(neg(b()), neg(c()))), or(and(a(), neg(b())), and(a(), neg(c())))),
        SchemaId::Dn1 => (a(), neg(neg(a()))),
        SchemaId::Dn2 => (neg(neg(a())), a()),
        SchemaId::Em => (b(), or(a(), neg(a()))),
        SchemaId::Efq => (and(a(), neg(a())), b()),
        SchemaId::Ka => (and(a(), neg(a())), or(b(), neg(b()))),
        // α ∧ ¬^{2k}β |- ¬^{2k}α ∨ β
        SchemaId::L1 => (and(a(), pow(2, 0, b())), or(pow(2, 0, a()), b())),
        // α ∧ ¬^{2k+1}α |- β ∨ ¬^{2k+1}β
        SchemaId::L2 => (and(a(), pow(2, 1, a())), or(b(), pow(2, 1, b()))),
        // ¬α ∧ ¬^{2k+1}β |- ¬^{2k+1}α ∨ ¬β
        SchemaId::L1Star => (and(neg(a()), pow(2, 1, b())), or(pow(2, 1, a()), neg(b()))),
        // ¬α ∧ ¬^{2k}α |- ¬β ∨ ¬^{2k}β
        SchemaId::L2Star => (and(neg(a()), pow(2, 0, a())), or(neg(b()), pow(2, 0, b()))),
    };
    Schema { id, lhs, rhs }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RuleId {
    /// `α |- β, β |- γ / α |- γ`
    T,
    /// `α |- β, α |- γ / α |- β ∧ γ`
    #[serde(rename = "I_AND")]
    IAnd,
    /// `α |- γ, β |- γ / α ∨ β |- γ`
    #[serde(rename = "E_OR")]
    EOr,
    /// `α |- β / ¬β |- ¬α`
    N,
}

impl RuleId {
    pub const ALL: [RuleId; 4] = [RuleId::T, RuleId::IAnd, RuleId::EOr, RuleId::N];

    pub fn name(self) -> &'static str {
        match self {
            RuleId::T => "T",
            RuleId::IAnd => "I_AND",
            RuleId::EOr => "E_OR",
            RuleId::N => "N",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            RuleId::N => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RuleId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        RuleId::ALL
            .into_iter()
            .find(|r| r.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| format!("unknown rule `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum System {
    #[serde(rename = "DLL")]
    Dll,
    #[serde(rename = "DLLR")]
    Dllr,
    #[serde(rename = "DLLR_DN")]
    DllrDn,
    #[serde(rename = "CLASSICAL")]
    Classical,
    #[serde(rename = "LinDLLR")]
    LinDllr,
    #[serde(rename = "KL")]
    Kl,
    #[serde(rename = "LRIF")]
    Lrif,
}

impl System {
    pub const ALL: [System; 7] =
        [System::Dll, System::Dllr, System::DllrDn, System::Classical, System::LinDllr, System::Kl, System::Lrif];

    pub fn name(self) -> &'static str {
        match self {
            System::Dll => "DLL",
            System::Dllr => "DLLR",
            System::DllrDn => "DLLR_DN",
            System::Classical => "CLASSICAL",
            System::LinDllr => "LinDLLR",
            System::Kl => "KL",
            System::Lrif => "LRIF",
        }
    }

    /// Axiom schemata in matching order.
    pub fn axioms(self) -> &'static [SchemaId] {
        use SchemaId::*;
        match self {
            System::Dll => &[Id, EAnd1, EAnd2, IOr1, IOr2, D],
            System::Dllr => &[Id, EAnd1, EAnd2, IOr1, IOr2, D, Dm1, Dm2],
            System::DllrDn => &[Id, EAnd1, EAnd2, IOr1, IOr2, D, Dm1, Dm2, Dn1, Dn2],
            System::Classical => &[Id, EAnd1, EAnd2, IOr1, IOr2, D, Dm1, Dm2, Dn1, Dn2, Em, Efq],
            System::LinDllr => &[Id, EAnd1, EAnd2, IOr1, IOr2, D, Dm1, Dm2, L1, L2],
            System::Kl => &[Id, EAnd1, EAnd2, IOr1, IOr2, D, Dm1, Dm2, Dn1, Dn2, Ka],
            System::Lrif => &[Id, EAnd1, EAnd2, IOr1, IOr2, Dm1, Dm2Star, DStar, L1Star, L2Star],
        }
    }

    pub fn rules(self) -> &'static [RuleId] {
        match self {
            System::Dll => &[RuleId::T, RuleId::IAnd, RuleId::EOr],
            _ => &[RuleId::T, RuleId::IAnd, RuleId::EOr, RuleId::N],
        }
    }

    pub fn has_axiom(self, id: SchemaId) -> bool {
        self.axioms().contains(&id)
    }

    pub fn has_rule(self, rule: RuleId) -> bool {
        self.rules().contains(&rule)
    }
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for System {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        System::ALL
            .into_iter()
            .find(|sys| sys.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| format!("unknown system `{s}`"))
    }
}

/// A schema, a substitution for its metavariables and, for indexed
/// families, the index `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AxiomInstance {
    pub schema: SchemaId,
    pub subst: BTreeMap<Meta, Formula>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
}

impl AxiomInstance {
    pub fn conclusion(&self) -> Result<ConsequencePair, CalculusError> {
        instantiate(self.schema, &self.subst, self.k)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CalculusError {
    #[error("schema {schema} needs a value for `{meta}`")]
    MissingMeta { schema: SchemaId, meta: &'static str },
    #[error("schema {schema} is indexed and needs k")]
    MissingK { schema: SchemaId },
    #[error("schema {schema} takes no index")]
    UnexpectedK { schema: SchemaId },
    #[error("k = {k} is below the least index {min} of {schema}")]
    KOutOfRange { schema: SchemaId, k: u32, min: u32 },
}

fn check_index(id: SchemaId, k: Option<u32>) -> Result<u32, CalculusError> {
    match (id.min_k(), k) {
        (None, None) => Ok(0),
        (None, Some(_)) => Err(CalculusError::UnexpectedK { schema: id }),
        (Some(_), None) => Err(CalculusError::MissingK { schema: id }),
        (Some(min), Some(k)) if k < min => Err(CalculusError::KOutOfRange { schema: id, k, min }),
        (Some(_), Some(k)) => Ok(k),
    }
}

/// Substitutes into a schema; `k` must be given exactly for indexed
/// families and respect their least index.
pub fn instantiate(
    id: SchemaId,
    subst: &BTreeMap<Meta, Formula>,
    k: Option<u32>,
) -> Result<ConsequencePair, CalculusError> {
    let k = check_index(id, k)?;
    let schema = id.schema();
    let mut slots: [Option<Formula>; 3] = Default::default();
    for meta in schema.metas() {
        let value = subst.get(&meta).ok_or(CalculusError::MissingMeta { schema: id, meta: meta.name() })?;
        slots[meta.index()] = Some(value.clone());
    }
    Ok(ConsequencePair::new(schema.lhs.instantiate(&slots, k), schema.rhs.instantiate(&slots, k)))
}

fn match_schema(id: SchemaId, pair: &ConsequencePair, k: Option<u32>) -> Option<AxiomInstance> {
    let schema = id.schema();
    let kk = k.unwrap_or(0);
    let mut slots: [Option<Formula>; 3] = Default::default();
    if !(schema.lhs.matches(&pair.lhs, kk, &mut slots) && schema.rhs.matches(&pair.rhs, kk, &mut slots)) {
        return None;
    }
    let subst = Meta::ALL.into_iter().filter_map(|m| slots[m.index()].take().map(|f| (m, f))).collect();
    Some(AxiomInstance { schema: id, subst, k })
}

/// An instance of `id` whose left side (or right side, if `on_lhs` is
/// false) is exactly `f`; metavariables not fixed by `f` come from `fill`.
pub(crate) fn instance_with_side(
    id: SchemaId,
    k: Option<u32>,
    f: &Formula,
    on_lhs: bool,
    mut fill: impl FnMut(Meta) -> Formula,
) -> Option<AxiomInstance> {
    let kk = check_index(id, k).ok()?;
    let schema = id.schema();
    let template = if on_lhs { &schema.lhs } else { &schema.rhs };
    let mut slots: [Option<Formula>; 3] = Default::default();
    if !template.matches(f, kk, &mut slots) {
        return None;
    }
    let subst = schema.metas().into_iter().map(|m| (m, slots[m.index()].take().unwrap_or_else(|| fill(m)))).collect();
    Some(AxiomInstance { schema: id, subst, k })
}

/// Every axiom instance of `system` (with `k ≤ k_max`) whose conclusion is
/// syntactically `pair`, in schema order then increasing `k`.
pub fn match_axiom(pair: &ConsequencePair, system: System, k_max: u32) -> Vec<AxiomInstance> {
    let mut out = Vec::new();
    for &id in system.axioms() {
        match id.min_k() {
            None => out.extend(match_schema(id, pair, None)),
            Some(min) => out.extend((min..=k_max).filter_map(|k| match_schema(id, pair, Some(k)))),
        }
    }
    out
}

/// Membership in Kalman logic, decided by validity in the four-element
/// involutive chain.
pub fn decide_kl(pair: &ConsequencePair) -> bool {
    static IKL: OnceLock<crate::frame::RoutleyFrame> = OnceLock::new();
    let frame = IKL.get_or_init(|| builtin("ikl").expect("built-in frame"));
    valid_in_frame(frame, pair).is_valid()
}
