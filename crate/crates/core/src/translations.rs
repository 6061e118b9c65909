//! Negative translations as data.
//!
//! A modular translation is a table of clause templates, one per connective,
//! quantifier and atomic case, plus a wrapper applied once at the top.
//! Templates are written in the ordinary formula syntax with `H1`, `H2` for
//! the translated immediate subformulas and `x` for the bound variable:
//!
//! ```
//! use negtrans::{parse, translations::{apply_translation, builtin}};
//! let kuroda = builtin("kuroda").unwrap();
//! assert_eq!(kuroda.forall.to_string(), "forall x. ~~H1");
//! let f = parse("forall x. P(x)").unwrap();
//! assert_eq!(apply_translation(&kuroda, &f).to_string(), "~~forall x. ~~P(x)");
//! ```

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::formula::{BinOp, Formula, Quantifier, Symbol, Term};
use crate::kernel::{Kernel, Verdict};
use crate::proofsearch::Logic;
use crate::syntax::parse;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TranslationError {
    #[error("unknown translation `{name}`; expected one of: {}", BUILTIN_NAMES.join(", "))]
    Unknown { name: String },
    #[error("monad target `{0}` must be closed")]
    OpenTarget(String),
}

/// A formula context with holes `H1`, `H2` and, under a quantifier, the
/// clause's bound variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Template {
    Hole(usize),
    Fixed(Formula),
    Neg(Box<Template>),
    Bin(BinOp, Box<Template>, Box<Template>),
    Quant(Quantifier, Box<Template>),
}

const HOLE_NAMES: [&str; 2] = ["H1", "H2"];
const CLAUSE_VAR: &str = "x";

impl Template {
    /// Reads a template from the formula syntax.
    ///
    /// # Panics
    /// On a syntax error; intended for literal templates.
    pub fn parse(text: &str) -> Template {
        Template::from_formula(&parse(text).unwrap_or_else(|e| panic!("template `{text}`: {e}")))
    }

    pub fn from_formula(f: &Formula) -> Template {
        match f {
            Formula::Atom(p, args) if args.is_empty() => match HOLE_NAMES.iter().position(|h| h == p) {
                Some(i) => Template::Hole(i),
                None => Template::Fixed(f.clone()),
            },
            Formula::Neg(a) => Template::Neg(Box::new(Template::from_formula(a))),
            _ => {
                if let Some((op, a, b)) = f.as_binary() {
                    let (a, b) = (Template::from_formula(a), Template::from_formula(b));
                    if matches!((&a, &b), (Template::Fixed(_), Template::Fixed(_))) {
                        return Template::Fixed(f.clone());
                    }
                    return Template::Bin(op, Box::new(a), Box::new(b));
                }
                if let Some((q, _, body)) = f.as_quant() {
                    return Template::Quant(q, Box::new(Template::from_formula(body)));
                }
                Template::Fixed(f.clone())
            }
        }
    }

    /// The identity context `H1`.
    pub fn hole() -> Template {
        Template::Hole(0)
    }

    /// Fills the holes; `var` names the variable bound by a quantifier node.
    pub fn instantiate(&self, holes: &[Formula], var: &str) -> Formula {
        match self {
            Template::Hole(i) => holes[*i].clone(),
            Template::Fixed(f) => f.clone(),
            Template::Neg(a) => Formula::neg(a.instantiate(holes, var)),
            Template::Bin(op, a, b) => Formula::binary(*op, a.instantiate(holes, var), b.instantiate(holes, var)),
            Template::Quant(q, a) => Formula::quant(*q, var, a.instantiate(holes, var)),
        }
    }

    /// Replaces `H1` in `self` by `inner`.
    pub fn compose(&self, inner: &Template) -> Template {
        match self {
            Template::Hole(0) => inner.clone(),
            Template::Hole(_) | Template::Fixed(_) => self.clone(),
            Template::Neg(a) => Template::Neg(Box::new(a.compose(inner))),
            Template::Bin(op, a, b) => Template::Bin(*op, Box::new(a.compose(inner)), Box::new(b.compose(inner))),
            Template::Quant(q, a) => Template::Quant(*q, Box::new(a.compose(inner))),
        }
    }

    fn placeholder_holes() -> Vec<Formula> {
        HOLE_NAMES.iter().map(|h| Formula::atom(*h)).collect()
    }
}

impl fmt::Display for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.instantiate(&Template::placeholder_holes(), CLAUSE_VAR))
    }
}

/// How `bot` is translated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BotClause {
    /// Like any other atom.
    #[default]
    AsAtom,
    /// To `bot` itself.
    Literal,
}

/// The eight clause positions compared by [`translations_related`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Clause {
    And,
    Or,
    Imp,
    Forall,
    Exists,
    Atom,
    Bot,
    Wrapper,
}

impl Clause {
    pub const ALL: [Clause; 8] = [
        Clause::And,
        Clause::Or,
        Clause::Imp,
        Clause::Forall,
        Clause::Exists,
        Clause::Atom,
        Clause::Bot,
        Clause::Wrapper,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Clause::And => "and",
            Clause::Or => "or",
            Clause::Imp => "imp",
            Clause::Forall => "forall",
            Clause::Exists => "exists",
            Clause::Atom => "atom",
            Clause::Bot => "bot",
            Clause::Wrapper => "wrapper",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TranslationSpec {
    pub name: String,
    pub and: Template,
    pub or: Template,
    pub imp: Template,
    pub forall: Template,
    pub exists: Template,
    /// Applied to atoms and `top`.
    pub atom: Template,
    pub bot: BotClause,
    pub wrapper: Template,
}

impl TranslationSpec {
    pub fn clause(&self, symbol: Symbol) -> &Template {
        match symbol {
            Symbol::Bin(BinOp::And) => &self.and,
            Symbol::Bin(BinOp::Or) => &self.or,
            Symbol::Bin(BinOp::Imp) => &self.imp,
            Symbol::Quant(Quantifier::Forall) => &self.forall,
            Symbol::Quant(Quantifier::Exists) => &self.exists,
        }
    }

    pub fn clause_mut(&mut self, symbol: Symbol) -> &mut Template {
        match symbol {
            Symbol::Bin(BinOp::And) => &mut self.and,
            Symbol::Bin(BinOp::Or) => &mut self.or,
            Symbol::Bin(BinOp::Imp) => &mut self.imp,
            Symbol::Quant(Quantifier::Forall) => &mut self.forall,
            Symbol::Quant(Quantifier::Exists) => &mut self.exists,
        }
    }

    pub fn with_bot(mut self, bot: BotClause) -> Self {
        self.bot = bot;
        self
    }

    /// Translation of `bot` under this spec.
    pub fn translate_bot(&self) -> Formula {
        match self.bot {
            BotClause::AsAtom => self.atom.instantiate(&[Formula::Bot], CLAUSE_VAR),
            BotClause::Literal => Formula::Bot,
        }
    }

    /// The translation without the wrapper.
    pub fn core(&self, f: &Formula) -> Formula {
        self.core_with(f, &|_| false)
    }

    fn core_with(&self, f: &Formula, literal: &dyn Fn(&Formula) -> bool) -> Formula {
        if literal(f) {
            return self.atom.instantiate(std::slice::from_ref(f), CLAUSE_VAR);
        }
        match f {
            Formula::Atom(..) | Formula::Top => self.atom.instantiate(std::slice::from_ref(f), CLAUSE_VAR),
            Formula::Bot => self.translate_bot(),
            Formula::Neg(a) => self.core_with(&Formula::imp((**a).clone(), Formula::Bot), literal),
            _ => {
                if let Some((op, a, b)) = f.as_binary() {
                    let holes = [self.core_with(a, literal), self.core_with(b, literal)];
                    return self.clause(Symbol::Bin(op)).instantiate(&holes, CLAUSE_VAR);
                }
                let (q, x, body) = f.as_quant().expect("quantifier");
                self.clause(Symbol::Quant(q)).instantiate(&[self.core_with(body, literal)], x)
            }
        }
    }

    /// Template or formula standing for `clause`, for comparison.
    fn clause_instance(&self, clause: Clause) -> Formula {
        let a = Formula::atom("A");
        let b = Formula::atom("B");
        let ax = Formula::pred("A", vec![Term::var(CLAUSE_VAR)]);
        match clause {
            Clause::And => self.and.instantiate(&[a, b], CLAUSE_VAR),
            Clause::Or => self.or.instantiate(&[a, b], CLAUSE_VAR),
            Clause::Imp => self.imp.instantiate(&[a, b], CLAUSE_VAR),
            Clause::Forall => self.forall.instantiate(&[ax], CLAUSE_VAR),
            Clause::Exists => self.exists.instantiate(&[ax], CLAUSE_VAR),
            Clause::Atom => self.atom.instantiate(&[a], CLAUSE_VAR),
            Clause::Bot => self.translate_bot(),
            Clause::Wrapper => self.wrapper.instantiate(&[a], CLAUSE_VAR),
        }
    }
}

/// `wrapper(core(f))`. `~A` in the input is read as `A -> bot`.
pub fn apply_translation(spec: &TranslationSpec, f: &Formula) -> Formula {
    spec.wrapper.instantiate(&[spec.core(f)], CLAUSE_VAR)
}

/// Like [`apply_translation`] on the formula view of an NNF formula, but with
/// negated atoms treated as atoms.
pub fn apply_to_nnf(spec: &TranslationSpec, a: &NnfFormula) -> Formula {
    let literal = |f: &Formula| matches!(f, Formula::Neg(inner) if inner.is_atomic());
    spec.wrapper.instantiate(&[spec.core_with(&a.to_formula(), &literal)], CLAUSE_VAR)
}

pub const BUILTIN_NAMES: [&str; 10] = [
    "kolmogorov",
    "goedel_gentzen",
    "goedel",
    "gentzen_original",
    "kuroda",
    "krivine",
    "g",
    "em",
    "aczel",
    "kuroda_ml",
];

struct Row<'a> {
    atom: &'a str,
    and: &'a str,
    or: &'a str,
    imp: &'a str,
    forall: &'a str,
    exists: &'a str,
    wrapper: &'a str,
}

fn spec_from(name: &str, r: Row<'_>) -> TranslationSpec {
    TranslationSpec {
        name: name.to_string(),
        and: Template::parse(r.and),
        or: Template::parse(r.or),
        imp: Template::parse(r.imp),
        forall: Template::parse(r.forall),
        exists: Template::parse(r.exists),
        atom: Template::parse(r.atom),
        bot: BotClause::AsAtom,
        wrapper: Template::parse(r.wrapper),
    }
}

/// A built-in translation by name. `bot` is translated like an atom; use
/// [`TranslationSpec::with_bot`] for the literal variant.
pub fn builtin(name: &str) -> Result<TranslationSpec, TranslationError> {
    let gg = Row {
        atom: "~~H1",
        and: "H1 & H2",
        or: "~~(H1 | H2)",
        imp: "H1 -> H2",
        forall: "forall x. H1",
        exists: "~~exists x. H1",
        wrapper: "H1",
    };
    let kuroda = Row {
        atom: "H1",
        and: "H1 & H2",
        or: "H1 | H2",
        imp: "H1 -> H2",
        forall: "forall x. ~~H1",
        exists: "exists x. H1",
        wrapper: "~~H1",
    };
    let row = match name {
        "kolmogorov" => Row {
            atom: "~~H1",
            and: "~~(H1 & H2)",
            or: "~~(H1 | H2)",
            imp: "~~(H1 -> H2)",
            forall: "~~forall x. H1",
            exists: "~~exists x. H1",
            wrapper: "H1",
        },
        "goedel_gentzen" => gg,
        "goedel" => Row { imp: "~(H1 & ~H2)", ..gg },
        "gentzen_original" => Row { or: "~(~H1 & ~H2)", exists: "~forall x. ~H1", ..gg },
        "kuroda" => kuroda,
        "kuroda_ml" => Row { imp: "H1 -> ~~H2", ..kuroda },
        "krivine" => Row {
            atom: "~H1",
            and: "H1 | H2",
            or: "H1 & H2",
            imp: "~H1 & H2",
            forall: "exists x. H1",
            exists: "~exists x. ~H1",
            wrapper: "~H1",
        },
        "g" => Row { or: "~H1 -> H2", ..gg },
        "em" => Row {
            atom: "~H1",
            and: "~H1 -> H2",
            or: "H1 & H2",
            imp: "~H1 & H2",
            forall: "~forall x. ~H1",
            exists: "forall x. H1",
            wrapper: "~H1",
        },
        "aczel" => Row { and: "~~(H1 & H2)", ..gg },
        _ => return Err(TranslationError::Unknown { name: name.to_string() }),
    };
    Ok(spec_from(name, row))
}

/// Equivalence status of one clause pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClauseStatus {
    Equivalent,
    Inequivalent,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseVerdict {
    pub clause: Clause,
    pub left: String,
    pub right: String,
    pub status: ClauseStatus,
    pub forward: Verdict,
    pub backward: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub clauses: Vec<ClauseVerdict>,
    /// True only when every clause pair is intuitionistically equivalent.
    pub related: bool,
}

/// Compares two translations clause by clause, with holes filled by fresh
/// atoms `A`, `B` (and `A(x)` under quantifiers).
///
/// ```
/// use negtrans::{kernel::Kernel, translations::{builtin, translations_related}};
/// let k = Kernel::default();
/// let gg = builtin("goedel_gentzen").unwrap();
/// assert!(translations_related(&gg, &builtin("gentzen_original").unwrap(), &k).related);
/// assert!(!translations_related(&gg, &builtin("kuroda").unwrap(), &k).related);
/// ```
pub fn translations_related(t1: &TranslationSpec, t2: &TranslationSpec, kernel: &Kernel) -> Relation {
    let clauses: Vec<ClauseVerdict> = Clause::ALL
        .iter()
        .map(|&clause| {
            let left = t1.clause_instance(clause);
            let right = t2.clause_instance(clause);
            let (forward, backward) = if left == right {
                (Verdict::Valid { depth: 0 }, Verdict::Valid { depth: 0 })
            } else {
                kernel.equivalent(&left, &right, Logic::Intuitionistic)
            };
            let status = if forward.is_valid() && backward.is_valid() {
                ClauseStatus::Equivalent
            } else if forward.is_invalid() || backward.is_invalid() {
                ClauseStatus::Inequivalent
            } else {
                ClauseStatus::Unknown
            };
            ClauseVerdict { clause, left: left.to_string(), right: right.to_string(), status, forward, backward }
        })
        .collect();
    let related = clauses.iter().all(|c| c.status == ClauseStatus::Equivalent);
    Relation { clauses, related }
}

/// Negation normal form over literals. `bot` and `top` are kept as
/// constants, each the dual of the other.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum NnfFormula {
    Lit { positive: bool, predicate: String, args: Vec<Term> },
    Bot,
    Top,
    And(Box<NnfFormula>, Box<NnfFormula>),
    Or(Box<NnfFormula>, Box<NnfFormula>),
    Forall(String, Box<NnfFormula>),
    Exists(String, Box<NnfFormula>),
}

impl NnfFormula {
    pub fn and(a: NnfFormula, b: NnfFormula) -> Self {
        NnfFormula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: NnfFormula, b: NnfFormula) -> Self {
        NnfFormula::Or(Box::new(a), Box::new(b))
    }

    /// The formula view; a negative literal becomes `~P`.
    pub fn to_formula(&self) -> Formula {
        match self {
            NnfFormula::Lit { positive, predicate, args } => {
                let atom = Formula::pred(predicate.clone(), args.clone());
                if *positive {
                    atom
                } else {
                    Formula::neg(atom)
                }
            }
            NnfFormula::Bot => Formula::Bot,
            NnfFormula::Top => Formula::Top,
            NnfFormula::And(a, b) => Formula::and(a.to_formula(), b.to_formula()),
            NnfFormula::Or(a, b) => Formula::or(a.to_formula(), b.to_formula()),
            NnfFormula::Forall(x, a) => Formula::forall(x.clone(), a.to_formula()),
            NnfFormula::Exists(x, a) => Formula::exists(x.clone(), a.to_formula()),
        }
    }
}

impl fmt::Display for NnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_formula())
    }
}

/// Classical negation normal form, with `A -> B` read as `~A | B`.
///
/// ```
/// use negtrans::{parse, translations::nnf};
/// assert_eq!(nnf(&parse("~(P & Q)").unwrap()).to_string(), "~P | ~Q");
/// assert_eq!(nnf(&parse("~forall x. P(x)").unwrap()).to_string(), "exists x. ~P(x)");
/// ```
pub fn nnf(f: &Formula) -> NnfFormula {
    fn go(f: &Formula, positive: bool) -> NnfFormula {
        match f {
            Formula::Atom(p, args) => NnfFormula::Lit { positive, predicate: p.clone(), args: args.clone() },
            Formula::Bot if positive => NnfFormula::Bot,
            Formula::Bot => NnfFormula::Top,
            Formula::Top if positive => NnfFormula::Top,
            Formula::Top => NnfFormula::Bot,
            Formula::Neg(a) => go(a, !positive),
            Formula::And(a, b) if positive => NnfFormula::and(go(a, true), go(b, true)),
            Formula::And(a, b) => NnfFormula::or(go(a, false), go(b, false)),
            Formula::Or(a, b) if positive => NnfFormula::or(go(a, true), go(b, true)),
            Formula::Or(a, b) => NnfFormula::and(go(a, false), go(b, false)),
            Formula::Imp(a, b) if positive => NnfFormula::or(go(a, false), go(b, true)),
            Formula::Imp(a, b) => NnfFormula::and(go(a, true), go(b, false)),
            Formula::Forall(x, a) if positive => NnfFormula::Forall(x.clone(), Box::new(go(a, true))),
            Formula::Forall(x, a) => NnfFormula::Exists(x.clone(), Box::new(go(a, false))),
            Formula::Exists(x, a) if positive => NnfFormula::Exists(x.clone(), Box::new(go(a, true))),
            Formula::Exists(x, a) => NnfFormula::Forall(x.clone(), Box::new(go(a, false))),
        }
    }
    go(f, true)
}

/// The De Morgan dual: swaps `&`/`|`, `forall`/`exists`, `P`/`~P` and
/// `bot`/`top`.
pub fn dual(f: &NnfFormula) -> NnfFormula {
    match f {
        NnfFormula::Lit { positive, predicate, args } => {
            NnfFormula::Lit { positive: !positive, predicate: predicate.clone(), args: args.clone() }
        }
        NnfFormula::Bot => NnfFormula::Top,
        NnfFormula::Top => NnfFormula::Bot,
        NnfFormula::And(a, b) => NnfFormula::or(dual(a), dual(b)),
        NnfFormula::Or(a, b) => NnfFormula::and(dual(a), dual(b)),
        NnfFormula::Forall(x, a) => NnfFormula::Exists(x.clone(), Box::new(dual(a))),
        NnfFormula::Exists(x, a) => NnfFormula::Forall(x.clone(), Box::new(dual(a))),
    }
}

fn literal_formula(f: &NnfFormula) -> Option<Formula> {
    match f {
        NnfFormula::Lit { .. } => Some(f.to_formula()),
        NnfFormula::Bot => Some(Formula::Bot),
        NnfFormula::Top => Some(Formula::Top),
        _ => None,
    }
}

/// Avigad's M: conjunctions and universals go through the dual.
///
/// ```
/// use negtrans::{parse, translations::{avigad_m, nnf}};
/// let f = nnf(&parse("P & Q").unwrap());
/// assert_eq!(avigad_m(&f).to_string(), "~(~P | ~Q)");
/// ```
pub fn avigad_m(f: &NnfFormula) -> Formula {
    if let Some(lit) = literal_formula(f) {
        return lit;
    }
    match f {
        NnfFormula::Or(a, b) => Formula::or(avigad_m(a), avigad_m(b)),
        NnfFormula::Exists(x, a) => Formula::exists(x.clone(), avigad_m(a)),
        NnfFormula::And(a, b) => Formula::neg(Formula::or(avigad_m(&dual(a)), avigad_m(&dual(b)))),
        NnfFormula::Forall(x, a) => Formula::neg(Formula::exists(x.clone(), avigad_m(&dual(a)))),
        _ => unreachable!(),
    }
}

/// The modular M′: double negations on conjuncts and under universals.
pub fn avigad_m_prime(f: &NnfFormula) -> Formula {
    if let Some(lit) = literal_formula(f) {
        return lit;
    }
    match f {
        NnfFormula::Or(a, b) => Formula::or(avigad_m_prime(a), avigad_m_prime(b)),
        NnfFormula::Exists(x, a) => Formula::exists(x.clone(), avigad_m_prime(a)),
        NnfFormula::And(a, b) => Formula::and(Formula::dneg(avigad_m_prime(a)), Formula::dneg(avigad_m_prime(b))),
        NnfFormula::Forall(x, a) => Formula::forall(x.clone(), Formula::dneg(avigad_m_prime(a))),
        _ => unreachable!(),
    }
}

/// A one-hole context generalising `~~`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "monad", content = "target", rename_all = "snake_case")]
pub enum MonadDescriptor {
    /// `~~H1`
    DoubleNeg,
    /// `(H1 -> A) -> A`
    Friedman(Formula),
    /// `~H1 -> H1`
    PeirceNeg,
    /// `(H1 -> R) -> H1`
    PeirceR(Formula),
}

impl MonadDescriptor {
    pub fn template(&self) -> Template {
        let h = Template::hole;
        let fixed = |f: &Formula| Template::Fixed(f.clone());
        match self {
            MonadDescriptor::DoubleNeg => Template::Neg(Box::new(Template::Neg(Box::new(h())))),
            MonadDescriptor::Friedman(a) => Template::Bin(
                BinOp::Imp,
                Box::new(Template::Bin(BinOp::Imp, Box::new(h()), Box::new(fixed(a)))),
                Box::new(fixed(a)),
            ),
            MonadDescriptor::PeirceNeg => {
                Template::Bin(BinOp::Imp, Box::new(Template::Neg(Box::new(h()))), Box::new(h()))
            }
            MonadDescriptor::PeirceR(r) => Template::Bin(
                BinOp::Imp,
                Box::new(Template::Bin(BinOp::Imp, Box::new(h()), Box::new(fixed(r)))),
                Box::new(h()),
            ),
        }
    }

    /// `T(f)`.
    pub fn apply(&self, f: &Formula) -> Formula {
        self.template().instantiate(std::slice::from_ref(f), CLAUSE_VAR)
    }

    fn check(&self) -> Result<(), TranslationError> {
        match self {
            MonadDescriptor::Friedman(t) | MonadDescriptor::PeirceR(t) if !t.free_vars().is_empty() => {
                Err(TranslationError::OpenTarget(t.to_string()))
            }
            _ => Ok(()),
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonadDescriptor::DoubleNeg => "double_neg".into(),
            MonadDescriptor::Friedman(a) => format!("friedman({a})"),
            MonadDescriptor::PeirceNeg => "peirce_neg".into(),
            MonadDescriptor::PeirceR(r) => format!("peirce({r})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MonadicVariant {
    /// `T` around every subformula.
    KolmogorovT,
    /// `T` at the top, after universals and on implication conclusions.
    KurodaMlT,
    /// `T` on atoms, disjunctions and existentials.
    GoedelGentzenT,
}

impl MonadicVariant {
    pub const ALL: [MonadicVariant; 3] =
        [MonadicVariant::KolmogorovT, MonadicVariant::KurodaMlT, MonadicVariant::GoedelGentzenT];

    pub fn name(self) -> &'static str {
        match self {
            MonadicVariant::KolmogorovT => "kolmogorov_t",
            MonadicVariant::KurodaMlT => "kuroda_ml_t",
            MonadicVariant::GoedelGentzenT => "goedel_gentzen_t",
        }
    }
}

/// The modular translation obtained by replacing `~~` with `T` in the
/// clauses of `variant`.
pub fn monadic_spec(m: &MonadDescriptor, variant: MonadicVariant) -> Result<TranslationSpec, TranslationError> {
    m.check()?;
    let t = m.template();
    let tp = |s: &str| t.compose(&Template::parse(s));
    let p = Template::parse;
    let (atom, and, or, imp, forall, exists, wrapper) = match variant {
        MonadicVariant::KolmogorovT => {
            (tp("H1"), tp("H1 & H2"), tp("H1 | H2"), tp("H1 -> H2"), tp("forall x. H1"), tp("exists x. H1"), p("H1"))
        }
        MonadicVariant::KurodaMlT => (
            p("H1"),
            p("H1 & H2"),
            p("H1 | H2"),
            Template::Bin(BinOp::Imp, Box::new(Template::Hole(0)), Box::new(t.compose(&Template::Hole(1)))),
            Template::Quant(Quantifier::Forall, Box::new(t.clone())),
            p("exists x. H1"),
            t.clone(),
        ),
        MonadicVariant::GoedelGentzenT => {
            (tp("H1"), p("H1 & H2"), tp("H1 | H2"), p("H1 -> H2"), p("forall x. H1"), tp("exists x. H1"), p("H1"))
        }
    };
    Ok(TranslationSpec {
        name: format!("{}[{}]", variant.name(), m.name()),
        and,
        or,
        imp,
        forall,
        exists,
        atom,
        bot: BotClause::AsAtom,
        wrapper,
    })
}

/// ```
/// use negtrans::{parse, translations::{monadic_translation, MonadDescriptor, MonadicVariant}};
/// let p = parse("P").unwrap();
/// let t = monadic_translation(&MonadDescriptor::PeirceNeg, MonadicVariant::KolmogorovT, &p).unwrap();
/// assert_eq!(t.to_string(), "~P -> P");
/// ```
pub fn monadic_translation(
    m: &MonadDescriptor,
    variant: MonadicVariant,
    f: &Formula,
) -> Result<Formula, TranslationError> {
    Ok(apply_translation(&monadic_spec(m, variant)?, f))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Formula {
        parse(s).unwrap()
    }

    fn tr(name: &str, s: &str) -> String {
        apply_translation(&builtin(name).unwrap(), &p(s)).to_string()
    }

    #[test]
    fn builtin_examples() {
        assert_eq!(tr("kolmogorov", "P | Q"), "~~(~~P | ~~Q)");
        assert_eq!(tr("kuroda", "forall x. P(x)"), "~~forall x. ~~P(x)");
        assert_eq!(tr("g", "P | Q"), "~~~P -> ~~Q");
        assert_eq!(tr("em", "P & Q"), "~(~~P -> ~Q)");
        assert_eq!(tr("krivine", "P"), "~~P");
        assert_eq!(tr("goedel", "P -> Q"), "~(~~P & ~~~Q)");
        assert_eq!(tr("kuroda_ml", "P -> Q"), "~~(P -> ~~Q)");
        assert!(matches!(builtin("nope"), Err(TranslationError::Unknown { .. })));
    }

    #[test]
    fn kuroda_is_double_negation_without_universals() {
        let f = p("(P -> Q) | ~(R & exists x. S(x))");
        assert_eq!(apply_translation(&builtin("kuroda").unwrap(), &f), Formula::dneg(f.expand_neg()));
    }

    #[test]
    fn bot_toggle() {
        let ko = builtin("kolmogorov").unwrap();
        assert_eq!(apply_translation(&ko, &p("bot")).to_string(), "~~bot");
        let lit = ko.with_bot(BotClause::Literal);
        assert_eq!(apply_translation(&lit, &p("~P")).to_string(), "~~(~~P -> bot)");
    }

    #[test]
    fn kolmogorov_preserves_counts() {
        let f = p("(P -> Q) | forall x. R(x)");
        let t = apply_translation(&builtin("kolmogorov").unwrap(), &f);
        assert_eq!(f.count_connectives(), t.count_connectives());
        assert_eq!(t.count_connectives().imp, 1);
    }

    #[test]
    fn relation_examples() {
        let k = Kernel::default();
        let gg = builtin("goedel_gentzen").unwrap();
        assert!(translations_related(&gg, &gg, &k).related);
        let r = translations_related(&gg, &builtin("kuroda").unwrap(), &k);
        assert!(!r.related);
        let forall = r.clauses.iter().find(|c| c.clause == Clause::Forall).unwrap();
        assert_eq!(forall.status, ClauseStatus::Inequivalent);
    }

    #[test]
    fn nnf_and_dual() {
        assert_eq!(nnf(&p("P -> Q")).to_string(), "~P | Q");
        let f = nnf(&p("P & forall x. Q(x)"));
        assert_eq!(dual(&f).to_string(), "~P | exists x. ~Q(x)");
        assert_eq!(dual(&nnf(&p("exists x. P(x)"))).to_string(), "forall x. ~P(x)");
        assert_eq!(dual(&dual(&f)), f);
    }

    #[test]
    fn avigad_examples() {
        assert_eq!(avigad_m(&nnf(&p("P | Q"))).to_string(), "P | Q");
        assert_eq!(avigad_m(&nnf(&p("P & Q"))).to_string(), "~(~P | ~Q)");
        assert_eq!(avigad_m_prime(&nnf(&p("P & Q"))).to_string(), "~~P & ~~Q");
        assert_eq!(avigad_m(&nnf(&p("forall x. P(x)"))).to_string(), "~exists x. ~P(x)");
    }

    #[test]
    fn monad_examples() {
        let dn = monadic_translation(&MonadDescriptor::DoubleNeg, MonadicVariant::KolmogorovT, &p("P & Q")).unwrap();
        assert_eq!(dn.to_string(), "~~(~~P & ~~Q)");
        let fr = MonadDescriptor::Friedman(p("R0"));
        assert_eq!(
            monadic_translation(&fr, MonadicVariant::KolmogorovT, &p("P")).unwrap().to_string(),
            "(P -> R0) -> R0"
        );
        let open = MonadDescriptor::PeirceR(p("R(y)"));
        assert!(monadic_translation(&open, MonadicVariant::KolmogorovT, &p("P")).is_err());
        let f = p("(P -> Q) | forall x. exists y. R(x,y)");
        for (variant, name) in [
            (MonadicVariant::KolmogorovT, "kolmogorov"),
            (MonadicVariant::KurodaMlT, "kuroda_ml"),
            (MonadicVariant::GoedelGentzenT, "goedel_gentzen"),
        ] {
            let m = monadic_translation(&MonadDescriptor::DoubleNeg, variant, &f).unwrap();
            assert_eq!(m, apply_translation(&builtin(name).unwrap(), &f), "{name}");
        }
    }

    #[test]
    fn templates_print_with_holes() {
        let em = builtin("em").unwrap();
        assert_eq!(em.forall.to_string(), "~forall x. ~H1");
        let t = monadic_spec(&MonadDescriptor::PeirceNeg, MonadicVariant::KurodaMlT).unwrap();
        assert_eq!(t.imp.to_string(), "H1 -> ~H2 -> H2");
    }
}
