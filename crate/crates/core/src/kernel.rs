//! One entry point over the deciders, the bounded search and the
//! countermodel search.

use serde::Serialize;

use crate::formula::Formula;
use crate::kripke::{find_countermodel, Countermodel, SearchBounds};
use crate::proofsearch::{self, Decision, Logic};

/// Default bound for first-order search.
pub const DEFAULT_FO_DEPTH: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Valid {
        depth: usize,
    },
    /// Not valid. The witness is a refuting Kripke model when the search found
    /// one; propositional refutations by decision may come without one.
    Invalid {
        witness: Option<Countermodel>,
    },
    /// Neither a proof within the depth bound nor a model within the search
    /// bounds.
    Unknown {
        bound: usize,
    },
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid { .. })
    }

    pub fn is_invalid(&self) -> bool {
        matches!(self, Verdict::Invalid { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Kernel {
    pub fo_depth: usize,
    pub bounds: SearchBounds,
}

impl Default for Kernel {
    fn default() -> Self {
        Kernel { fo_depth: DEFAULT_FO_DEPTH, bounds: SearchBounds::default() }
    }
}

/// Atom standing for `bot` in minimal-logic models.
const MINIMAL_BOT: &str = "falsum";

impl Kernel {
    pub fn new(fo_depth: usize, bounds: SearchBounds) -> Self {
        Kernel { fo_depth, bounds }
    }

    fn countermodel(&self, f: &Formula, logic: Logic, bounds: SearchBounds) -> Option<Countermodel> {
        let (goal, bounds) = match logic {
            Logic::Classical => (f.clone(), SearchBounds { max_worlds: 1, ..bounds }),
            Logic::Intuitionistic => (f.clone(), bounds),
            Logic::Minimal => (f.expand_neg().replace_bot(&Formula::atom(MINIMAL_BOT)), bounds),
        };
        find_countermodel(&goal, &bounds).ok().flatten()
    }

    /// Validity of `f` in `logic`.
    ///
    /// ```
    /// use negtrans::{parse, kernel::Kernel, proofsearch::Logic};
    /// let k = Kernel::default();
    /// let f = parse("~~(exists x. ~~P(x)) -> ~~(exists x. P(x))").unwrap();
    /// assert!(k.valid(&f, Logic::Intuitionistic).is_valid());
    /// let g = parse("~~(exists x. ~~P(x)) -> exists x. ~~P(x)").unwrap();
    /// assert!(k.valid(&g, Logic::Intuitionistic).is_invalid());
    /// ```
    pub fn valid(&self, f: &Formula, logic: Logic) -> Verdict {
        // Small models are cheap and spare the proof search its full depth.
        if !f.is_propositional() {
            let quick = SearchBounds {
                max_worlds: self.bounds.max_worlds.min(2),
                max_domain: self.bounds.max_domain.min(2),
                ..self.bounds
            };
            if let Some(m) = self.countermodel(f, logic, quick) {
                return Verdict::Invalid { witness: Some(m) };
            }
        }
        match proofsearch::prove(f, logic, self.fo_depth) {
            Ok(Decision::Proved { depth }) => Verdict::Valid { depth },
            Ok(Decision::Refuted) => Verdict::Invalid { witness: self.countermodel(f, logic, self.bounds) },
            Ok(Decision::Unknown { .. }) | Err(_) => match self.countermodel(f, logic, self.bounds) {
                Some(m) => Verdict::Invalid { witness: Some(m) },
                None => Verdict::Unknown { bound: self.fo_depth },
            },
        }
    }

    /// Both directions of `a <-> b`.
    pub fn equivalent(&self, a: &Formula, b: &Formula, logic: Logic) -> (Verdict, Verdict) {
        (self.valid(&Formula::imp(a.clone(), b.clone()), logic), self.valid(&Formula::imp(b.clone(), a.clone()), logic))
    }

    /// Whether both directions are valid.
    pub fn is_equivalent(&self, a: &Formula, b: &Formula, logic: Logic) -> bool {
        let (l, r) = self.equivalent(a, b, logic);
        l.is_valid() && r.is_valid()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse;

    #[test]
    fn propositional_refutations_carry_models() {
        let k = Kernel::default();
        match k.valid(&parse("~~P -> P").unwrap(), Logic::Intuitionistic) {
            Verdict::Invalid { witness: Some(m) } => assert_eq!(m.model.worlds(), 2),
            v => panic!("{v:?}"),
        }
        assert!(k.valid(&parse("~~P -> P").unwrap(), Logic::Classical).is_valid());
    }

    #[test]
    fn minimal_logic_models_interpret_bot_freely() {
        let k = Kernel::default();
        match k.valid(&parse("bot -> P").unwrap(), Logic::Minimal) {
            Verdict::Invalid { witness: Some(_) } => {}
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn double_negation_shift_is_unknown() {
        let k = Kernel { fo_depth: 6, ..Kernel::default() };
        let f = parse("(forall x. ~~P(x)) -> ~~(forall x. P(x))").unwrap();
        assert_eq!(k.valid(&f, Logic::Intuitionistic), Verdict::Unknown { bound: 6 });
    }
}
