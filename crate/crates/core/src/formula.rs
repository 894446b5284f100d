//! The object language: atoms combined with `~`, `&` and `|`.
//!
//! Concrete syntax (ASCII is canonical, the Unicode forms are accepted on
//! input only):
//!
//! ```text
//! pair    := formula "|-" formula          ("⊢" also accepted)
//! formula := conj ("|" conj)*              ("∨")
//! conj    := unary ("&" unary)*            ("∧")
//! unary   := "~" unary | atom | "(" formula ")"   ("¬")
//! atom    := [a-z][a-z0-9_]*
//! ```
//!
//! Binary connectives associate to the left.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(String),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Neg(Box<Formula>),
}

impl Formula {
    /// Builds an atom, panicking on a name outside `[a-z][a-z0-9_]*`.
    /// Use [`Formula::try_atom`] for untrusted input.
    pub fn atom(name: &str) -> Formula {
        Formula::try_atom(name).unwrap_or_else(|| panic!("invalid atom name {name:?}"))
    }

    pub fn try_atom(name: &str) -> Option<Formula> {
        is_atom_name(name).then(|| Formula::Atom(name.to_owned()))
    }

    pub fn and(left: Formula, right: Formula) -> Formula {
        Formula::And(Box::new(left), Box::new(right))
    }

    pub fn or(left: Formula, right: Formula) -> Formula {
        Formula::Or(Box::new(left), Box::new(right))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(body: Formula) -> Formula {
        Formula::Neg(Box::new(body))
    }

    /// `n` negations stacked on top of `self`; `neg_power(0)` is the identity.
    pub fn neg_power(self, n: u32) -> Formula {
        (0..n).fold(self, |f, _| Formula::neg(f))
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(name) => {
                out.insert(name.clone());
            }
            Formula::And(l, r) | Formula::Or(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
            Formula::Neg(b) => b.collect_atoms(out),
        }
    }

    /// Nesting depth; atoms have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom(_) => 0,
            Formula::And(l, r) | Formula::Or(l, r) => 1 + l.depth().max(r.depth()),
            Formula::Neg(b) => 1 + b.depth(),
        }
    }

    /// Number of connective and atom occurrences.
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) => 1,
            Formula::And(l, r) | Formula::Or(l, r) => 1 + l.size() + r.size(),
            Formula::Neg(b) => 1 + b.size(),
        }
    }

    /// All distinct subformulas, including `self`.
    pub fn subformulas(&self) -> BTreeSet<Formula> {
        let mut out = BTreeSet::new();
        self.collect_subformulas(&mut out);
        out
    }

    fn collect_subformulas(&self, out: &mut BTreeSet<Formula>) {
        if !out.insert(self.clone()) {
            return;
        }
        match self {
            Formula::Atom(_) => {}
            Formula::And(l, r) | Formula::Or(l, r) => {
                l.collect_subformulas(out);
                r.collect_subformulas(out);
            }
            Formula::Neg(b) => b.collect_subformulas(out),
        }
    }

    /// Strips exactly `n` leading negations, or returns `None`.
    pub fn strip_negations(&self, n: u32) -> Option<&Formula> {
        let mut cur = self;
        for _ in 0..n {
            match cur {
                Formula::Neg(b) => cur = b,
                _ => return None,
            }
        }
        Some(cur)
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Or(..) => 1,
            Formula::And(..) => 2,
            Formula::Neg(_) => 3,
            Formula::Atom(_) => 4,
        }
    }

    fn write_with(&self, out: &mut String, min_prec: u8) {
        let parens = self.precedence() < min_prec;
        if parens {
            out.push('(');
        }
        match self {
            Formula::Atom(name) => out.push_str(name),
            Formula::Neg(body) => {
                out.push('~');
                body.write_with(out, 3);
            }
            Formula::And(l, r) => {
                l.write_with(out, 2);
                out.push_str(" & ");
                r.write_with(out, 3);
            }
            Formula::Or(l, r) => {
                l.write_with(out, 1);
                out.push_str(" | ");
                r.write_with(out, 2);
            }
        }
        if parens {
            out.push(')');
        }
    }

    /// Minimal-parenthesis ASCII rendering.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.write_with(&mut out, 0);
        out
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_formula(s)
    }
}

impl Serialize for Formula {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.render())
    }
}

impl<'de> Deserialize<'de> for Formula {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_formula(&text).map_err(serde::de::Error::custom)
    }
}

pub fn is_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

/// An ordered pair `lhs |- rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConsequencePair {
    pub lhs: Formula,
    pub rhs: Formula,
}

impl ConsequencePair {
    pub fn new(lhs: Formula, rhs: Formula) -> Self {
        ConsequencePair { lhs, rhs }
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut atoms = self.lhs.atoms();
        atoms.extend(self.rhs.atoms());
        atoms
    }

    pub fn render(&self) -> String {
        format!("{} |- {}", self.lhs.render(), self.rhs.render())
    }
}

impl fmt::Display for ConsequencePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} |- {}", self.lhs, self.rhs)
    }
}

impl FromStr for ConsequencePair {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_pair(s)
    }
}

impl Serialize for ConsequencePair {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.render())
    }
}

impl<'de> Deserialize<'de> for ConsequencePair {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_pair(&text).map_err(serde::de::Error::custom)
    }
}

/// Syntax error; `position` is a character offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError { position, message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Not,
    And,
    Or,
    Turnstile,
    LParen,
    RParen,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Ident(name) => format!("atom `{name}`"),
            Token::Not => "`~`".into(),
            Token::And => "`&`".into(),
            Token::Or => "`|`".into(),
            Token::Turnstile => "`|-`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<(Vec<(usize, Token)>, usize), ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut pos = 0;
    while pos < chars.len() {
        let c = chars[pos];
        let start = pos;
        let token = match c {
            c if c.is_whitespace() => {
                pos += 1;
                continue;
            }
            '~' | '¬' => Token::Not,
            '&' | '∧' => Token::And,
            '∨' => Token::Or,
            '⊢' => Token::Turnstile,
            '|' if chars.get(pos + 1) == Some(&'-') => {
                pos += 1;
                Token::Turnstile
            }
            '|' => Token::Or,
            '(' => Token::LParen,
            ')' => Token::RParen,
            c if c.is_ascii_lowercase() => {
                let mut name = String::new();
                while pos < chars.len()
                    && (chars[pos].is_ascii_lowercase() || chars[pos].is_ascii_digit() || chars[pos] == '_')
                {
                    name.push(chars[pos]);
                    pos += 1;
                }
                if let Some(&next) = chars.get(pos) {
                    if next.is_alphanumeric() {
                        return Err(ParseError::new(pos, format!("invalid character {next:?} in atom name")));
                    }
                }
                tokens.push((start, Token::Ident(name)));
                continue;
            }
            other => return Err(ParseError::new(pos, format!("unexpected character {other:?}"))),
        };
        pos += 1;
        tokens.push((start, token));
    }
    Ok((tokens, chars.len()))
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    cursor: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.cursor).map_or(self.end, |(p, _)| *p)
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        match self.peek() {
            Some(tok) => ParseError::new(self.position(), format!("expected {expected}, found {}", tok.describe())),
            None => ParseError::new(self.end, format!("expected {expected}, found end of input")),
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let mut left = self.conjunction()?;
        while self.peek() == Some(&Token::Or) {
            self.cursor += 1;
            left = Formula::or(left, self.conjunction()?);
        }
        Ok(left)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut left = self.unary()?;
        while self.peek() == Some(&Token::And) {
            self.cursor += 1;
            left = Formula::and(left, self.unary()?);
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().cloned() {
            Some(Token::Not) => {
                self.cursor += 1;
                Ok(Formula::neg(self.unary()?))
            }
            Some(Token::Ident(name)) => {
                self.cursor += 1;
                Ok(Formula::Atom(name))
            }
            Some(Token::LParen) => {
                self.cursor += 1;
                let inner = self.formula()?;
                if self.peek() != Some(&Token::RParen) {
                    return Err(self.unexpected("`)`"));
                }
                self.cursor += 1;
                Ok(inner)
            }
            _ => Err(self.unexpected("a formula")),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.unexpected("end of input")),
        }
    }
}

fn parser_for(text: &str) -> Result<Parser, ParseError> {
    let (tokens, end) = tokenize(text)?;
    Ok(Parser { tokens, cursor: 0, end })
}

pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut parser = parser_for(text)?;
    let formula = parser.formula()?;
    parser.finish()?;
    Ok(formula)
}

pub fn parse_pair(text: &str) -> Result<ConsequencePair, ParseError> {
    let mut parser = parser_for(text)?;
    if !parser.tokens.iter().any(|(_, t)| *t == Token::Turnstile) {
        return Err(ParseError::new(parser.end, "missing turnstile `|-`"));
    }
    let lhs = parser.formula()?;
    if parser.peek() != Some(&Token::Turnstile) {
        return Err(parser.unexpected("`|-`"));
    }
    parser.cursor += 1;
    let rhs = parser.formula()?;
    parser.finish()?;
    Ok(ConsequencePair::new(lhs, rhs))
}
