//! Seeded generators for formulas, pairs, axiom instances and derivations.
//! Every generator takes the RNG explicitly so corpora are reproducible from
//! a single seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::calculus::{instance_with_side, AxiomInstance, Derivation, Meta, RuleId, SchemaId, System};
use crate::formula::{ConsequencePair, Formula};

pub const DEFAULT_SEED: u64 = 20_240_601;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p`, `q`, `r`, ... up to `count` names.
pub fn atom_names(count: usize) -> Vec<String> {
    ["p", "q", "r", "s", "t", "u"].iter().take(count).map(|s| s.to_string()).collect()
}

/// A formula of depth at most `depth`; roughly a third of the inner nodes
/// are negations.
pub fn formula<R: Rng>(rng: &mut R, atoms: &[String], depth: usize) -> Formula {
    if depth == 0 || rng.gen_ratio(1, 4) {
        return Formula::atom(atoms.choose(rng).expect("at least one atom"));
    }
    match rng.gen_range(0..3) {
        0 => Formula::neg(formula(rng, atoms, depth - 1)),
        1 => Formula::and(formula(rng, atoms, depth - 1), formula(rng, atoms, depth - 1)),
        _ => Formula::or(formula(rng, atoms, depth - 1), formula(rng, atoms, depth - 1)),
    }
}

pub fn pair<R: Rng>(rng: &mut R, atoms: &[String], depth: usize) -> ConsequencePair {
    ConsequencePair::new(formula(rng, atoms, depth), formula(rng, atoms, depth))
}

/// A random instance of `schema`; indexed families draw `k` uniformly
/// from their least index up to `k_max`.
pub fn axiom_instance_of<R: Rng>(
    rng: &mut R,
    schema: SchemaId,
    atoms: &[String],
    depth: usize,
    k_max: u32,
) -> AxiomInstance {
    let k = schema.min_k().map(|min| rng.gen_range(min..=k_max.max(min)));
    let subst = schema.schema().metas().into_iter().map(|m| (m, formula(rng, atoms, depth))).collect();
    AxiomInstance { schema, subst, k }
}

pub fn axiom_instance<R: Rng>(
    rng: &mut R,
    system: System,
    atoms: &[String],
    depth: usize,
    k_max: u32,
) -> AxiomInstance {
    let schema = *system.axioms().choose(rng).expect("systems have axioms");
    axiom_instance_of(rng, schema, atoms, depth, k_max)
}

/// Builds derivations forward from axiom leaves by applying the rules of
/// the system. Side conditions of the two-premise rules are met by
/// generating the second premise with one side prescribed.
pub struct DerivationGen<'r, R> {
    rng: &'r mut R,
    system: System,
    atoms: Vec<String>,
    depth: usize,
    k_max: u32,
}

impl<'r, R: Rng> DerivationGen<'r, R> {
    pub fn new(rng: &'r mut R, system: System, atoms: Vec<String>, depth: usize, k_max: u32) -> Self {
        DerivationGen { rng, system, atoms, depth, k_max }
    }

    fn leaf(&mut self) -> Derivation {
        let inst = axiom_instance(self.rng, self.system, &self.atoms, self.depth, self.k_max);
        Derivation::axiom(inst).expect("generated instances are complete")
    }

    fn pick_rule(&mut self) -> RuleId {
        *self.system.rules().choose(self.rng).expect("systems have rules")
    }

    /// A derivation of height at most `height + 1`.
    pub fn derivation(&mut self, height: usize) -> Derivation {
        if height == 0 || self.rng.gen_ratio(1, 4) {
            return self.leaf();
        }
        let first = self.derivation(height - 1);
        let c = first.conclusion.clone();
        match self.pick_rule() {
            RuleId::N => Derivation::rule(
                ConsequencePair::new(Formula::neg(c.rhs.clone()), Formula::neg(c.lhs.clone())),
                RuleId::N,
                vec![first],
            ),
            RuleId::T => {
                let second = self.from_lhs(&c.rhs, height - 1);
                let concl = ConsequencePair::new(c.lhs.clone(), second.conclusion.rhs.clone());
                Derivation::rule(concl, RuleId::T, vec![first, second])
            }
            RuleId::IAnd => {
                let second = self.from_lhs(&c.lhs, height - 1);
                let concl =
                    ConsequencePair::new(c.lhs.clone(), Formula::and(c.rhs.clone(), second.conclusion.rhs.clone()));
                Derivation::rule(concl, RuleId::IAnd, vec![first, second])
            }
            RuleId::EOr => {
                let second = self.to_rhs(&c.rhs, height - 1);
                let concl =
                    ConsequencePair::new(Formula::or(c.lhs.clone(), second.conclusion.lhs.clone()), c.rhs.clone());
                Derivation::rule(concl, RuleId::EOr, vec![first, second])
            }
        }
    }

    fn side_leaf(&mut self, f: &Formula, on_lhs: bool) -> Derivation {
        let mut options = Vec::new();
        for &id in self.system.axioms() {
            match id.min_k() {
                None => options.push((id, None)),
                Some(min) => options.extend((min..=self.k_max).map(|k| (id, Some(k)))),
            }
        }
        options.shuffle(self.rng);
        let (atoms, depth) = (self.atoms.clone(), self.depth);
        for (id, k) in options {
            let rng = &mut *self.rng;
            if let Some(inst) = instance_with_side(id, k, f, on_lhs, |_: Meta| formula(rng, &atoms, depth)) {
                return Derivation::axiom(inst).expect("instance is complete");
            }
        }
        unreachable!("ID matches every formula")
    }

    /// A derivation whose conclusion has left side `lhs`.
    pub fn from_lhs(&mut self, lhs: &Formula, height: usize) -> Derivation {
        if height == 0 || self.rng.gen_ratio(1, 3) {
            return self.side_leaf(lhs, true);
        }
        match self.pick_rule() {
            RuleId::T => {
                let first = self.from_lhs(lhs, height - 1);
                let second = self.from_lhs(&first.conclusion.rhs.clone(), height - 1);
                let concl = ConsequencePair::new(lhs.clone(), second.conclusion.rhs.clone());
                Derivation::rule(concl, RuleId::T, vec![first, second])
            }
            RuleId::IAnd => {
                let first = self.from_lhs(lhs, height - 1);
                let second = self.from_lhs(lhs, height - 1);
                let rhs = Formula::and(first.conclusion.rhs.clone(), second.conclusion.rhs.clone());
                Derivation::rule(ConsequencePair::new(lhs.clone(), rhs), RuleId::IAnd, vec![first, second])
            }
            RuleId::N => match lhs {
                Formula::Neg(body) => {
                    let premise = self.to_rhs(body, height - 1);
                    let concl = ConsequencePair::new(lhs.clone(), Formula::neg(premise.conclusion.lhs.clone()));
                    Derivation::rule(concl, RuleId::N, vec![premise])
                }
                _ => self.side_leaf(lhs, true),
            },
            RuleId::EOr => self.side_leaf(lhs, true),
        }
    }

    /// A derivation whose conclusion has right side `rhs`.
    pub fn to_rhs(&mut self, rhs: &Formula, height: usize) -> Derivation {
        if height == 0 || self.rng.gen_ratio(1, 3) {
            return self.side_leaf(rhs, false);
        }
        match self.pick_rule() {
            RuleId::T => {
                let second = self.to_rhs(rhs, height - 1);
                let first = self.to_rhs(&second.conclusion.lhs.clone(), height - 1);
                let concl = ConsequencePair::new(first.conclusion.lhs.clone(), rhs.clone());
                Derivation::rule(concl, RuleId::T, vec![first, second])
            }
            RuleId::EOr => {
                let first = self.to_rhs(rhs, height - 1);
                let second = self.to_rhs(rhs, height - 1);
                let lhs = Formula::or(first.conclusion.lhs.clone(), second.conclusion.lhs.clone());
                Derivation::rule(ConsequencePair::new(lhs, rhs.clone()), RuleId::EOr, vec![first, second])
            }
            RuleId::N => match rhs {
                Formula::Neg(body) => {
                    let premise = self.from_lhs(body, height - 1);
                    let concl = ConsequencePair::new(Formula::neg(premise.conclusion.rhs.clone()), rhs.clone());
                    Derivation::rule(concl, RuleId::N, vec![premise])
                }
                _ => self.side_leaf(rhs, false),
            },
            RuleId::IAnd => self.side_leaf(rhs, false),
        }
    }
}
