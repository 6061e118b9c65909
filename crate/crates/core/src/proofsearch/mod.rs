//! Decision procedures for classical, intuitionistic and minimal logic.
//!
//! Propositional input is decided exactly: classical logic by truth tables,
//! intuitionistic logic by the contraction-free calculus G4ip, and minimal
//! logic by reading `bot` as an uninterpreted atom. Quantified input goes
//! through a depth-bounded sequent search that can prove but never refute.

mod classical;
mod fol;
mod g4ip;

use serde::Serialize;
use thiserror::Error;

use crate::formula::Formula;

pub use classical::MAX_ATOMS;

/// Outcome of a proof attempt.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Decision {
    /// A proof was found; `depth` is its height (propositional) or the
    /// smallest search bound that succeeded (first-order).
    Proved { depth: usize },
    /// No proof exists.
    Refuted,
    /// No proof within `bound`; nothing is claimed either way.
    Unknown { bound: usize },
}

impl Decision {
    pub fn is_proved(&self) -> bool {
        matches!(self, Decision::Proved { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Logic {
    Classical,
    Intuitionistic,
    Minimal,
}

impl Logic {
    pub const ALL: [Logic; 3] = [Logic::Classical, Logic::Intuitionistic, Logic::Minimal];

    pub fn name(self) -> &'static str {
        match self {
            Logic::Classical => "classical",
            Logic::Intuitionistic => "intuitionistic",
            Logic::Minimal => "minimal",
        }
    }
}

impl std::str::FromStr for Logic {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "classical" | "cl" | "cpc" => Ok(Logic::Classical),
            "intuitionistic" | "il" | "ipc" => Ok(Logic::Intuitionistic),
            "minimal" | "ml" => Ok(Logic::Minimal),
            _ => Err(format!("unknown logic `{s}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ProofError {
    #[error("propositional decision procedure given a quantified formula")]
    Quantified,
    #[error("{0} atoms exceed the truth-table limit of {MAX_ATOMS}")]
    TooManyAtoms(usize),
}

/// Name substituted for `bot` when deciding minimal logic.
const MINIMAL_BOT: &str = "#bot";

fn require_propositional(f: &Formula) -> Result<(), ProofError> {
    if f.is_propositional() {
        Ok(())
    } else {
        Err(ProofError::Quantified)
    }
}

/// Classical propositional validity.
///
/// ```
/// use negtrans::{parse, proofsearch::{prove_cpc, Decision}};
/// assert!(prove_cpc(&parse("P | ~P").unwrap()).unwrap().is_proved());
/// assert_eq!(prove_cpc(&parse("P -> Q").unwrap()).unwrap(), Decision::Refuted);
/// ```
pub fn prove_cpc(f: &Formula) -> Result<Decision, ProofError> {
    require_propositional(f)?;
    let n = classical::atoms(f).len();
    if n > MAX_ATOMS {
        return Err(ProofError::TooManyAtoms(n));
    }
    Ok(match classical::tautology(f) {
        Ok(()) => Decision::Proved { depth: 0 },
        Err(_) => Decision::Refuted,
    })
}

/// A valuation falsifying `f`, listing the atoms set true.
pub fn classical_countermodel(f: &Formula) -> Result<Option<Vec<String>>, ProofError> {
    require_propositional(f)?;
    let n = classical::atoms(f).len();
    if n > MAX_ATOMS {
        return Err(ProofError::TooManyAtoms(n));
    }
    Ok(classical::tautology(f).err())
}

/// Intuitionistic propositional validity.
///
/// ```
/// use negtrans::{parse, proofsearch::{prove_ipc, Decision}};
/// assert!(prove_ipc(&parse("~~(P | ~P)").unwrap()).unwrap().is_proved());
/// assert_eq!(prove_ipc(&parse("P | ~P").unwrap()).unwrap(), Decision::Refuted);
/// ```
pub fn prove_ipc(f: &Formula) -> Result<Decision, ProofError> {
    require_propositional(f)?;
    let mut g = g4ip::G4ip::default();
    let goal = g.add(f);
    Ok(match g.prove_goal(goal) {
        Some(depth) => Decision::Proved { depth },
        None => Decision::Refuted,
    })
}

/// Minimal propositional validity: intuitionistic validity with `bot`
/// treated as an ordinary atom.
pub fn prove_minimal(f: &Formula) -> Result<Decision, ProofError> {
    prove_ipc(&f.expand_neg().replace_bot(&Formula::atom(MINIMAL_BOT)))
}

/// Decides `f` in `logic`. Propositional input is decided exactly;
/// quantified input is searched up to `fo_depth`.
pub fn prove(f: &Formula, logic: Logic, fo_depth: usize) -> Result<Decision, ProofError> {
    if !f.is_propositional() {
        return Ok(prove_fo_bounded(f, logic, fo_depth));
    }
    match logic {
        Logic::Classical => prove_cpc(f),
        Logic::Intuitionistic => prove_ipc(f),
        Logic::Minimal => prove_minimal(f),
    }
}

/// Bounded first-order proof search. Never returns `Refuted`.
pub fn prove_fo_bounded(f: &Formula, logic: Logic, depth: usize) -> Decision {
    let outcome = match logic {
        Logic::Classical => fol::prove_classical(f, depth),
        Logic::Intuitionistic => fol::prove_intuitionistic(f, depth),
        Logic::Minimal => fol::prove_intuitionistic(&f.expand_neg().replace_bot(&Formula::atom(MINIMAL_BOT)), depth),
    };
    match outcome {
        fol::Outcome::Proved(depth) => Decision::Proved { depth },
        fol::Outcome::Exhausted => Decision::Unknown { bound: depth },
    }
}

/// Glivenko: a propositional formula is classically valid exactly when its
/// double negation is intuitionistically valid. Returns both verdicts.
pub fn glivenko_check(f: &Formula) -> Result<(bool, bool), ProofError> {
    let classical = prove_cpc(f)?.is_proved();
    let intuitionistic = prove_ipc(&Formula::dneg(f.clone()))?.is_proved();
    Ok((classical, intuitionistic))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse;

    fn p(s: &str) -> Formula {
        parse(s).unwrap()
    }

    #[test]
    fn classical_basics() {
        assert!(prove_cpc(&p("((P -> Q) -> P) -> P")).unwrap().is_proved());
        assert_eq!(prove_cpc(&p("P | Q")).unwrap(), Decision::Refuted);
        assert_eq!(classical_countermodel(&p("P -> Q")).unwrap(), Some(vec!["P".to_string()]));
    }

    #[test]
    fn intuitionistic_basics() {
        assert_eq!(prove_ipc(&p("((P -> Q) -> P) -> P")).unwrap(), Decision::Refuted);
        assert!(prove_ipc(&p("~~~P -> ~P")).unwrap().is_proved());
        assert!(prove_ipc(&p("~~(P -> Q) -> ~~P -> ~~Q")).unwrap().is_proved());
        assert_eq!(prove_ipc(&p("~~P -> P")).unwrap(), Decision::Refuted);
        assert!(prove_ipc(&p("(P -> Q) | (Q -> P)")).unwrap() == Decision::Refuted);
    }

    #[test]
    fn minimal_separates_from_intuitionistic() {
        let f = p("~~(~~P -> ~~Q) -> ~~(P -> Q)");
        assert!(prove_ipc(&f).unwrap().is_proved());
        assert_eq!(prove_minimal(&f).unwrap(), Decision::Refuted);
        assert_eq!(prove_minimal(&p("bot -> P")).unwrap(), Decision::Refuted);
        assert!(prove_minimal(&p("~~~P -> ~P")).unwrap().is_proved());
    }

    #[test]
    fn quantified_input_rejected_by_propositional_deciders() {
        assert_eq!(prove_ipc(&p("forall x. P(x)")), Err(ProofError::Quantified));
    }

    #[test]
    fn first_order_search() {
        let proved = [
            "(forall x. P(x)) -> exists x. P(x)",
            "~~(forall x. ~~P(x)) -> forall x. ~~P(x)",
            "(exists x. ~P(x)) -> ~(forall x. P(x))",
            "~(exists x. P(x)) -> forall x. ~P(x)",
            "(forall x. ~P(x)) -> ~(exists x. P(x))",
            "(forall x. P(x) & Q(x)) -> (forall x. P(x)) & forall x. Q(x)",
        ];
        for s in proved {
            let d = prove_fo_bounded(&p(s), Logic::Intuitionistic, 12);
            assert!(d.is_proved(), "{s}: {d:?}");
        }
        let d = prove_fo_bounded(&p("~~(forall x. P(x) | ~P(x))"), Logic::Intuitionistic, 6);
        assert!(matches!(d, Decision::Unknown { .. }), "{d:?}");
        let d = prove_fo_bounded(&p("~(forall x. P(x)) -> exists x. ~P(x)"), Logic::Classical, 6);
        assert!(d.is_proved(), "{d:?}");
        let d = prove_fo_bounded(&p("~(forall x. P(x)) -> exists x. ~P(x)"), Logic::Intuitionistic, 6);
        assert!(matches!(d, Decision::Unknown { .. }), "{d:?}");
    }

    #[test]
    fn glivenko() {
        assert_eq!(glivenko_check(&p("P | ~P")).unwrap(), (true, true));
        assert_eq!(glivenko_check(&p("P -> Q")).unwrap(), (false, false));
    }
}
