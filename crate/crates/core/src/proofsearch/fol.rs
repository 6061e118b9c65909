//! Depth-bounded backward search in cut-free first-order sequent calculi.
//!
//! Propositional rules that are invertible, together with right-universal
//! and left-existential introduction of fresh parameters, are applied
//! eagerly and cost nothing. The budget counts the remaining choices on a
//! branch: left implication, universal instantiation on the left,
//! existential instantiation and disjunction choice on the right.
//! Instantiation ranges over the parameters already present in the sequent.

use std::collections::{BTreeSet, HashMap};

use crate::formula::{Formula, Term};

const PARAM_PREFIX: char = '#';

fn param(n: usize) -> Term {
    Term::constant(format!("{PARAM_PREFIX}{n}"))
}

fn collect_ground(f: &Formula, out: &mut BTreeSet<Term>) {
    fn ground(t: &Term) -> bool {
        match t {
            Term::Var(_) => false,
            Term::App(_, args) => args.iter().all(ground),
        }
    }
    fn walk(t: &Term, out: &mut BTreeSet<Term>) {
        if ground(t) {
            out.insert(t.clone());
        }
        if let Term::App(_, args) = t {
            args.iter().for_each(|a| walk(a, out));
        }
    }
    f.visit(&mut |g| {
        if let Formula::Atom(_, args) = g {
            args.iter().for_each(|t| walk(t, out));
        }
    });
}

/// Replaces free variables by fresh parameters so that every formula in a
/// sequent is closed and substitution of parameters cannot capture.
pub(crate) fn close_with_params(f: &Formula, next: &mut usize) -> Formula {
    let mut out = f.clone();
    for v in f.free_vars() {
        out = out.substitute(&v, &param(*next));
        *next += 1;
    }
    out
}

/// Search outcome.
pub(crate) enum Outcome {
    Proved(usize),
    Exhausted,
}

/// Hard cap on explored sequents per call, so that a bound that is far too
/// generous still returns.
const NODE_LIMIT: usize = 2_000_000;

struct Search {
    fresh: usize,
    nodes: usize,
    failed: HashMap<(Vec<Formula>, Vec<Formula>), usize>,
}

impl Search {
    fn fresh_param(&mut self) -> Term {
        let t = param(self.fresh);
        self.fresh += 1;
        t
    }

    fn universe(&self, gamma: &BTreeSet<Formula>, delta: &[&Formula]) -> Vec<Term> {
        let mut terms = BTreeSet::new();
        gamma.iter().for_each(|f| collect_ground(f, &mut terms));
        delta.iter().for_each(|f| collect_ground(f, &mut terms));
        if terms.is_empty() {
            terms.insert(Term::constant(format!("{PARAM_PREFIX}c")));
        }
        terms.into_iter().collect()
    }

    fn key(gamma: &BTreeSet<Formula>, delta: &BTreeSet<Formula>) -> (Vec<Formula>, Vec<Formula>) {
        (gamma.iter().cloned().collect(), delta.iter().cloned().collect())
    }

    fn known_failure(&self, key: &(Vec<Formula>, Vec<Formula>), budget: usize) -> bool {
        self.failed.get(key).is_some_and(|&b| b >= budget)
    }

    fn record_failure(&mut self, key: (Vec<Formula>, Vec<Formula>), budget: usize) {
        let e = self.failed.entry(key).or_insert(budget);
        *e = (*e).max(budget);
    }

    fn over_limit(&mut self) -> bool {
        self.nodes += 1;
        self.nodes > NODE_LIMIT
    }

    // Single-succedent (intuitionistic) search.
    fn prove_i(&mut self, mut gamma: BTreeSet<Formula>, goal: Formula, budget: usize) -> bool {
        if self.over_limit() {
            return false;
        }
        // Invertible left rules, to a fixpoint.
        loop {
            let mut step = None;
            for h in &gamma {
                let action = match h {
                    Formula::Bot => return true,
                    Formula::Top => Some(vec![]),
                    Formula::And(a, b) => Some(vec![(**a).clone(), (**b).clone()]),
                    Formula::Or(..) => {
                        step = Some((h.clone(), None));
                        break;
                    }
                    Formula::Exists(x, a) => {
                        let t = self.fresh_param();
                        Some(vec![a.substitute(x, &t)])
                    }
                    Formula::Imp(a, b) if gamma.contains(a) => Some(vec![(**b).clone()]),
                    Formula::Imp(a, b) => match &**a {
                        Formula::Bot => Some(vec![]),
                        Formula::Top => Some(vec![(**b).clone()]),
                        Formula::And(c, d) => {
                            Some(vec![Formula::imp((**c).clone(), Formula::imp((**d).clone(), (**b).clone()))])
                        }
                        Formula::Or(c, d) => Some(vec![
                            Formula::imp((**c).clone(), (**b).clone()),
                            Formula::imp((**d).clone(), (**b).clone()),
                        ]),
                        Formula::Exists(x, c) => {
                            Some(vec![Formula::forall(x.clone(), Formula::imp((**c).clone(), (**b).clone()))])
                        }
                        _ => None,
                    },
                    _ => None,
                };
                if let Some(extra) = action {
                    step = Some((h.clone(), Some(extra)));
                    break;
                }
            }
            match step {
                None => break,
                Some((h, Some(extra))) => {
                    gamma.remove(&h);
                    gamma.extend(extra);
                }
                Some((h, None)) => {
                    let Formula::Or(a, b) = &h else { unreachable!() };
                    gamma.remove(&h);
                    let mut left = gamma.clone();
                    left.insert((**a).clone());
                    if !self.prove_i(left, goal.clone(), budget) {
                        return false;
                    }
                    gamma.insert((**b).clone());
                    return self.prove_i(gamma, goal, budget);
                }
            }
        }

        // Axioms and invertible right rules.
        if matches!(goal, Formula::Top) || gamma.contains(&goal) {
            return true;
        }
        match &goal {
            Formula::And(a, b) => {
                return self.prove_i(gamma.clone(), (**a).clone(), budget) && self.prove_i(gamma, (**b).clone(), budget)
            }
            Formula::Imp(a, b) => {
                gamma.insert((**a).clone());
                return self.prove_i(gamma, (**b).clone(), budget);
            }
            Formula::Forall(x, a) => {
                let t = self.fresh_param();
                return self.prove_i(gamma, a.substitute(x, &t), budget);
            }
            _ => {}
        }

        if budget == 0 {
            return false;
        }
        let key = Self::key(&gamma, &BTreeSet::from([goal.clone()]));
        if self.known_failure(&key, budget) {
            return false;
        }
        let next = budget - 1;
        let universe = self.universe(&gamma, &[&goal]);

        let found = 'choice: {
            match &goal {
                Formula::Or(a, b) => {
                    if self.prove_i(gamma.clone(), (**a).clone(), next)
                        || self.prove_i(gamma.clone(), (**b).clone(), next)
                    {
                        break 'choice true;
                    }
                }
                Formula::Exists(x, a) => {
                    for t in &universe {
                        if self.prove_i(gamma.clone(), a.substitute(x, t), next) {
                            break 'choice true;
                        }
                    }
                }
                _ => {}
            }
            let hyps: Vec<Formula> = gamma.iter().cloned().collect();
            for h in &hyps {
                match h {
                    Formula::Imp(a, b) => {
                        if self.prove_i(gamma.clone(), (**a).clone(), next) {
                            let mut rest = gamma.clone();
                            rest.remove(h);
                            rest.insert((**b).clone());
                            if self.prove_i(rest, goal.clone(), next) {
                                break 'choice true;
                            }
                        }
                    }
                    Formula::Forall(x, a) => {
                        for t in &universe {
                            let inst = a.substitute(x, t);
                            if gamma.contains(&inst) {
                                continue;
                            }
                            let mut more = gamma.clone();
                            more.insert(inst);
                            if self.prove_i(more, goal.clone(), next) {
                                break 'choice true;
                            }
                        }
                    }
                    _ => {}
                }
            }
            false
        };
        if !found {
            self.record_failure(key, budget);
        }
        found
    }

    // Multi-succedent (classical) search.
    fn prove_c(&mut self, mut gamma: BTreeSet<Formula>, mut delta: BTreeSet<Formula>, budget: usize) -> bool {
        if self.over_limit() {
            return false;
        }
        loop {
            if gamma.iter().any(|g| delta.contains(g)) {
                return true;
            }
            if gamma.contains(&Formula::Bot) || delta.contains(&Formula::Top) {
                return true;
            }
            let left = gamma.iter().find(|h| !matches!(h, Formula::Atom(..) | Formula::Forall(..))).cloned();
            if let Some(h) = left {
                gamma.remove(&h);
                match h {
                    Formula::Top => {}
                    Formula::And(a, b) => {
                        gamma.insert(*a);
                        gamma.insert(*b);
                    }
                    Formula::Or(a, b) => {
                        let mut g1 = gamma.clone();
                        g1.insert(*a);
                        if !self.prove_c(g1, delta.clone(), budget) {
                            return false;
                        }
                        gamma.insert(*b);
                        return self.prove_c(gamma, delta, budget);
                    }
                    Formula::Imp(a, b) => {
                        let mut d1 = delta.clone();
                        d1.insert(*a);
                        if !self.prove_c(gamma.clone(), d1, budget) {
                            return false;
                        }
                        gamma.insert(*b);
                        return self.prove_c(gamma, delta, budget);
                    }
                    Formula::Exists(x, a) => {
                        let t = self.fresh_param();
                        gamma.insert(a.substitute(&x, &t));
                    }
                    Formula::Neg(a) => {
                        delta.insert(*a);
                    }
                    _ => unreachable!(),
                }
                continue;
            }
            let right = delta.iter().find(|h| !matches!(h, Formula::Atom(..) | Formula::Exists(..))).cloned();
            if let Some(h) = right {
                delta.remove(&h);
                match h {
                    Formula::Bot => {}
                    Formula::Or(a, b) => {
                        delta.insert(*a);
                        delta.insert(*b);
                    }
                    Formula::And(a, b) => {
                        let mut d1 = delta.clone();
                        d1.insert(*a);
                        if !self.prove_c(gamma.clone(), d1, budget) {
                            return false;
                        }
                        delta.insert(*b);
                        return self.prove_c(gamma, delta, budget);
                    }
                    Formula::Imp(a, b) => {
                        gamma.insert(*a);
                        delta.insert(*b);
                    }
                    Formula::Forall(x, a) => {
                        let t = self.fresh_param();
                        delta.insert(a.substitute(&x, &t));
                    }
                    Formula::Neg(a) => {
                        gamma.insert(*a);
                    }
                    _ => unreachable!(),
                }
                continue;
            }
            break;
        }

        if budget == 0 {
            return false;
        }
        let key = Self::key(&gamma, &delta);
        if self.known_failure(&key, budget) {
            return false;
        }
        let next = budget - 1;
        let delta_refs: Vec<&Formula> = delta.iter().collect();
        let universe = self.universe(&gamma, &delta_refs);
        let mut found = false;
        'outer: for h in gamma.iter().chain(delta.iter()).cloned().collect::<Vec<_>>() {
            let on_left = gamma.contains(&h);
            let (x, a) = match (&h, on_left) {
                (Formula::Forall(x, a), true) | (Formula::Exists(x, a), false) => (x, a),
                _ => continue,
            };
            for t in &universe {
                let inst = a.substitute(x, t);
                let (mut g, mut d) = (gamma.clone(), delta.clone());
                let fresh = if on_left { g.insert(inst) } else { d.insert(inst) };
                if fresh && self.prove_c(g, d, next) {
                    found = true;
                    break 'outer;
                }
            }
        }
        if !found {
            self.record_failure(key, budget);
        }
        found
    }
}

/// Iterative deepening up to `max_depth` choices per branch.
pub(crate) fn prove_intuitionistic(f: &Formula, max_depth: usize) -> Outcome {
    let mut next = 0;
    let goal = close_with_params(&f.expand_neg(), &mut next);
    for depth in 0..=max_depth {
        let mut s = Search { fresh: next + 1000, nodes: 0, failed: HashMap::new() };
        if s.prove_i(BTreeSet::new(), goal.clone(), depth) {
            return Outcome::Proved(depth);
        }
        if s.nodes > NODE_LIMIT {
            break;
        }
    }
    Outcome::Exhausted
}

pub(crate) fn prove_classical(f: &Formula, max_depth: usize) -> Outcome {
    let mut next = 0;
    let goal = close_with_params(&f.expand_neg(), &mut next);
    for depth in 0..=max_depth {
        let mut s = Search { fresh: next + 1000, nodes: 0, failed: HashMap::new() };
        if s.prove_c(BTreeSet::new(), BTreeSet::from([goal.clone()]), depth) {
            return Outcome::Proved(depth);
        }
        if s.nodes > NODE_LIMIT {
            break;
        }
    }
    Outcome::Exhausted
}
