use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{AxiomInstance, CalculusError, Meta, RuleId, SchemaId, System};
use crate::formula::{parse_formula, parse_pair, ConsequencePair, Formula};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Derivation {
    pub conclusion: ConsequencePair,
    pub justification: Justification,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Justification {
    Axiom(AxiomInstance),
    Rule { rule: RuleId, premises: Vec<Derivation> },
}

impl Derivation {
    /// A leaf whose conclusion is computed from the instance.
    pub fn axiom(instance: AxiomInstance) -> Result<Self, CalculusError> {
        Ok(Derivation { conclusion: instance.conclusion()?, justification: Justification::Axiom(instance) })
    }

    pub fn rule(conclusion: ConsequencePair, rule: RuleId, premises: Vec<Derivation>) -> Self {
        Derivation { conclusion, justification: Justification::Rule { rule, premises } }
    }

    pub fn premises(&self) -> &[Derivation] {
        match &self.justification {
            Justification::Axiom(_) => &[],
            Justification::Rule { premises, .. } => premises,
        }
    }

    /// Number of nodes on the longest root-to-leaf path.
    pub fn height(&self) -> usize {
        1 + self.premises().iter().map(Derivation::height).max().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        1 + self.premises().iter().map(Derivation::size).sum::<usize>()
    }

    /// Indented text, one node per line, children two spaces deeper.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.write_text(0, &mut out);
        out
    }

    fn write_text(&self, depth: usize, out: &mut String) {
        out.push_str(&"  ".repeat(depth));
        out.push_str(&self.conclusion.render());
        out.push_str(" :: ");
        match &self.justification {
            Justification::Axiom(inst) => {
                out.push_str("axiom ");
                out.push_str(inst.schema.name());
                if let Some(k) = inst.k {
                    out.push_str(&format!(" k={k}"));
                }
                let binds: Vec<String> =
                    inst.subst.iter().map(|(m, f)| format!("{} := {}", m.name(), f.render())).collect();
                out.push_str(&format!(" {{{}}}", binds.join("; ")));
            }
            Justification::Rule { rule, .. } => {
                out.push_str("rule ");
                out.push_str(rule.name());
            }
        }
        out.push('\n');
        for p in self.premises() {
            p.write_text(depth + 1, out);
        }
    }

    pub fn from_text(text: &str) -> Result<Self, TextError> {
        // (depth, node) pairs; a node's children follow it one level deeper
        let mut lines = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            if raw.trim().is_empty() {
                continue;
            }
            let indent = raw.len() - raw.trim_start_matches(' ').len();
            if indent % 2 != 0 {
                return Err(TextError::new(no, "indentation must be a multiple of two spaces"));
            }
            lines.push((no, indent / 2, parse_line(raw.trim()).map_err(|m| TextError::new(no, &m))?));
        }
        let mut pos = 0;
        let root = build_tree(&lines, &mut pos, 0)?;
        if let Some((no, ..)) = lines.get(pos) {
            return Err(TextError::new(*no, "more than one root node"));
        }
        Ok(root)
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct TextError {
    pub line: usize,
    pub message: String,
}

impl TextError {
    fn new(index: usize, message: &str) -> Self {
        TextError { line: index + 1, message: message.to_owned() }
    }
}

enum Line {
    Axiom(ConsequencePair, AxiomInstance),
    Rule(ConsequencePair, RuleId),
}

fn parse_line(line: &str) -> Result<Line, String> {
    let (pair, just) = line.split_once(" :: ").ok_or("expected `<pair> :: <justification>`")?;
    let pair = parse_pair(pair).map_err(|e| e.to_string())?;
    let just = just.trim();
    if let Some(rule) = just.strip_prefix("rule ") {
        return Ok(Line::Rule(pair, rule.parse()?));
    }
    let rest = just.strip_prefix("axiom ").ok_or("justification must start with `axiom` or `rule`")?;
    let (head, binds) = match rest.split_once('{') {
        Some((head, tail)) => (head, tail.strip_suffix('}').ok_or("unterminated substitution")?),
        None => (rest, ""),
    };
    let mut words = head.split_whitespace();
    let schema: SchemaId = words.next().ok_or("missing schema name")?.parse()?;
    let k = match words.next() {
        None => None,
        Some(word) => {
            let value = word.strip_prefix("k=").ok_or_else(|| format!("unexpected `{word}`"))?;
            Some(value.parse::<u32>().map_err(|e| format!("bad index `{value}`: {e}"))?)
        }
    };
    if let Some(extra) = words.next() {
        return Err(format!("unexpected `{extra}`"));
    }
    let mut subst = BTreeMap::new();
    for bind in binds.split(';').filter(|b| !b.trim().is_empty()) {
        let (meta, formula) = bind.split_once(":=").ok_or_else(|| format!("bad binding `{bind}`"))?;
        let meta: Meta = meta.parse()?;
        let formula: Formula = parse_formula(formula).map_err(|e| e.to_string())?;
        subst.insert(meta, formula);
    }
    Ok(Line::Axiom(pair, AxiomInstance { schema, subst, k }))
}

fn build_tree(lines: &[(usize, usize, Line)], pos: &mut usize, depth: usize) -> Result<Derivation, TextError> {
    let (no, d, line) = lines.get(*pos).ok_or_else(|| TextError::new(0, "empty derivation"))?;
    if *d != depth {
        return Err(TextError::new(*no, "unexpected indentation"));
    }
    *pos += 1;
    match line {
        Line::Axiom(pair, inst) => {
            Ok(Derivation { conclusion: pair.clone(), justification: Justification::Axiom(inst.clone()) })
        }
        Line::Rule(pair, rule) => {
            let mut premises = Vec::new();
            while let Some((_, d, _)) = lines.get(*pos) {
                if *d <= depth {
                    break;
                }
                premises.push(build_tree(lines, pos, depth + 1)?);
            }
            Ok(Derivation::rule(pair.clone(), *rule, premises))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NodeError {
    /// Child indices from the root to the offending node.
    pub path: Vec<usize>,
    pub kind: NodeErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Error)]
pub enum NodeErrorKind {
    #[error("schema {0} is not an axiom of the system")]
    SchemaNotInSystem(SchemaId),
    #[error("rule {0} is not a rule of the system")]
    RuleNotInSystem(RuleId),
    #[error("bad axiom instance: {0}")]
    BadInstance(String),
    #[error("index k = {k} exceeds the bound {k_max}")]
    KAboveBound { k: u32, k_max: u32 },
    #[error("axiom instance yields {expected}, not the stated conclusion")]
    InstanceMismatch { expected: String },
    #[error("rule {rule} takes {expected} premises, found {found}")]
    WrongArity { rule: RuleId, expected: usize, found: usize },
    #[error("premises and conclusion do not fit the shape of rule {0}")]
    ShapeMismatch(RuleId),
}

impl fmt::Display for NodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let path: Vec<String> = self.path.iter().map(usize::to_string).collect();
        write!(f, "node [{}]: {}", path.join("."), self.kind)
    }
}

fn rule_fits(rule: RuleId, c: &ConsequencePair, p: &[Derivation]) -> bool {
    let p: Vec<&ConsequencePair> = p.iter().map(|d| &d.conclusion).collect();
    match rule {
        RuleId::T => p[0].lhs == c.lhs && p[0].rhs == p[1].lhs && p[1].rhs == c.rhs,
        RuleId::IAnd => {
            p[0].lhs == c.lhs && p[1].lhs == c.lhs && c.rhs == Formula::and(p[0].rhs.clone(), p[1].rhs.clone())
        }
        RuleId::EOr => {
            p[0].rhs == c.rhs && p[1].rhs == c.rhs && c.lhs == Formula::or(p[0].lhs.clone(), p[1].lhs.clone())
        }
        RuleId::N => c.lhs == Formula::neg(p[0].rhs.clone()) && c.rhs == Formula::neg(p[0].lhs.clone()),
    }
}

fn check_node(system: System, d: &Derivation, k_max: u32, path: &mut Vec<usize>, errors: &mut Vec<NodeError>) {
    let mut fail = |kind| errors.push(NodeError { path: path.clone(), kind });
    match &d.justification {
        Justification::Axiom(inst) => {
            if !system.has_axiom(inst.schema) {
                fail(NodeErrorKind::SchemaNotInSystem(inst.schema));
            }
            if let Some(k) = inst.k.filter(|&k| k > k_max) {
                fail(NodeErrorKind::KAboveBound { k, k_max });
            }
            match inst.conclusion() {
                Err(e) => fail(NodeErrorKind::BadInstance(e.to_string())),
                Ok(pair) if pair != d.conclusion => fail(NodeErrorKind::InstanceMismatch { expected: pair.render() }),
                Ok(_) => {}
            }
        }
        Justification::Rule { rule, premises } => {
            if !system.has_rule(*rule) {
                fail(NodeErrorKind::RuleNotInSystem(*rule));
            }
            if premises.len() != rule.arity() {
                fail(NodeErrorKind::WrongArity { rule: *rule, expected: rule.arity(), found: premises.len() });
            } else if !rule_fits(*rule, &d.conclusion, premises) {
                fail(NodeErrorKind::ShapeMismatch(*rule));
            }
            for (i, p) in premises.iter().enumerate() {
                path.push(i);
                check_node(system, p, k_max, path, errors);
                path.pop();
            }
        }
    }
}

/// Checks every node; errors are listed in pre-order.
pub fn check_derivation(system: System, d: &Derivation, k_max: u32) -> Result<(), Vec<NodeError>> {
    let mut errors = Vec::new();
    check_node(system, d, k_max, &mut Vec::new(), &mut errors);
    if errors.is_empty() {
        Ok(())
    } else {
        Err(errors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leaf(schema: SchemaId, binds: &[(Meta, &str)], k: Option<u32>) -> Derivation {
        let subst = binds.iter().map(|(m, f)| (*m, parse_formula(f).unwrap())).collect();
        Derivation::axiom(AxiomInstance { schema, subst, k }).unwrap()
    }

    fn n_rule_example() -> Derivation {
        let premise = leaf(SchemaId::IOr1, &[(Meta::Alpha, "p"), (Meta::Beta, "q")], None);
        Derivation::rule(parse_pair("~(p | q) |- ~p").unwrap(), RuleId::N, vec![premise])
    }

    #[test]
    fn single_axiom_node() {
        let d = leaf(SchemaId::EAnd1, &[(Meta::Alpha, "p"), (Meta::Beta, "q")], None);
        assert_eq!(d.conclusion, parse_pair("p & q |- p").unwrap());
        assert_eq!(check_derivation(System::Dll, &d, 3), Ok(()));
    }

    #[test]
    fn negation_rule() {
        let d = n_rule_example();
        for sys in System::ALL {
            let verdict = check_derivation(sys, &d, 3);
            if sys == System::Dll {
                let errs = verdict.unwrap_err();
                assert_eq!(errs[0].kind, NodeErrorKind::RuleNotInSystem(RuleId::N));
            } else {
                assert_eq!(verdict, Ok(()), "{sys}");
            }
        }
    }

    #[test]
    fn shape_and_instance_errors() {
        let mut d = n_rule_example();
        d.conclusion = parse_pair("~p |- ~(p | q)").unwrap();
        assert_eq!(check_derivation(System::Dllr, &d, 3).unwrap_err()[0].kind, NodeErrorKind::ShapeMismatch(RuleId::N));

        let mut d = leaf(SchemaId::EAnd1, &[(Meta::Alpha, "p"), (Meta::Beta, "q")], None);
        d.conclusion = parse_pair("p & q |- q").unwrap();
        assert!(matches!(
            check_derivation(System::Dll, &d, 3).unwrap_err()[0].kind,
            NodeErrorKind::InstanceMismatch { .. }
        ));

        let d = leaf(SchemaId::L1, &[(Meta::Alpha, "p"), (Meta::Beta, "q")], Some(2));
        let errs = check_derivation(System::Dll, &d, 1).unwrap_err();
        assert_eq!(errs.len(), 2);
        assert_eq!(check_derivation(System::LinDllr, &d, 2), Ok(()));

        let bare = Derivation::rule(parse_pair("p |- p").unwrap(), RuleId::T, vec![]);
        assert!(matches!(
            check_derivation(System::Dll, &bare, 3).unwrap_err()[0].kind,
            NodeErrorKind::WrongArity { expected: 2, found: 0, .. }
        ));
    }

    #[test]
    fn error_paths_point_at_nodes() {
        let good = leaf(SchemaId::Id, &[(Meta::Alpha, "p")], None);
        let bad = leaf(SchemaId::Dn2, &[(Meta::Alpha, "p")], None);
        let d = Derivation::rule(parse_pair("~~p |- p").unwrap(), RuleId::T, vec![bad, good]);
        let errs = check_derivation(System::Dllr, &d, 3).unwrap_err();
        // the premises ~~p |- p and p |- p chain fine; only the DN2 leaf is foreign to DLLR
        assert_eq!(errs, vec![NodeError { path: vec![0], kind: NodeErrorKind::SchemaNotInSystem(SchemaId::Dn2) }]);
    }

    #[test]
    fn text_round_trip() {
        let left = leaf(SchemaId::EAnd1, &[(Meta::Alpha, "p"), (Meta::Beta, "~~~~q")], None);
        let right = leaf(SchemaId::IOr1, &[(Meta::Alpha, "p"), (Meta::Beta, "q")], None);
        let d = Derivation::rule(parse_pair("p & ~~~~q |- p | q").unwrap(), RuleId::T, vec![left, right]);
        let d = Derivation::rule(parse_pair("~(p | q) |- ~(p & ~~~~q)").unwrap(), RuleId::N, vec![d]);
        let text = d.to_text();
        assert_eq!(
            text,
            "~(p | q) |- ~(p & ~~~~q) :: rule N\n  p & ~~~~q |- p | q :: rule T\n    \
             p & ~~~~q |- p :: axiom E_AND_1 {alpha := p; beta := ~~~~q}\n    \
             p |- p | q :: axiom I_OR_1 {alpha := p; beta := q}\n"
        );
        assert_eq!(Derivation::from_text(&text).unwrap(), d);
        assert_eq!(check_derivation(System::Dllr, &d, 3), Ok(()));

        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(serde_json::from_str::<Derivation>(&json).unwrap(), d);

        let indexed = leaf(SchemaId::L2Star, &[(Meta::Alpha, "p"), (Meta::Beta, "q")], Some(1));
        assert_eq!(Derivation::from_text(&indexed.to_text()).unwrap(), indexed);
    }

    #[test]
    fn text_errors() {
        assert!(Derivation::from_text("").is_err());
        assert!(Derivation::from_text("p |- p").is_err());
        assert!(Derivation::from_text("p |- p :: axiom ID {alpha := p}\np |- p :: axiom ID {alpha := p}").is_err());
        assert!(Derivation::from_text("p |- p :: axiom NOPE {alpha := p}").is_err());
        let err = Derivation::from_text("p |- p :: rule T\n   p |- p :: axiom ID {alpha := p}").unwrap_err();
        assert_eq!(err.line, 2);
    }
}
