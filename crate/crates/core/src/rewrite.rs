//! The simplification calculus: rewrite schemas that trade negations
//! around a connective or quantifier for fewer ones.
//!
//! A rule *from inside* moves the negations `N` in front of the immediate
//! subformulas out over the enclosing `~~`; a rule *from outside* moves an
//! outer `N` in over the `~~` of the subformulas:
//!
//! ```text
//! inside   ~~(N A # N B)  =>  N(N1 A #' N2 B)      ~~Qx N A  =>  N(Q'x N1 A)
//! outside  N(~~A # ~~B)   =>  N1 N A #' N2 N B     N Qx ~~A  =>  Q'x N1 N A
//! ```
//!
//! Matching is syntactic on the primitive `~` node, so `~~P` matches `~A`
//! with `A := ~P`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::formula::{BinOp, Formula, Quantifier, Symbol, Term};
use crate::kernel::{Kernel, Verdict};
use crate::kripke::{curated_lookup, CuratedRefutation};
use crate::proofsearch::Logic;
use crate::syntax::parse;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("unknown rule set `{name}`; expected one of: {}, or <base>_minus_<symbol>[_<symbol>..]", BUILTIN_RULESETS.join(", "))]
    UnknownRuleSet { name: String },
    #[error("no rule of the given rule set applies at position {0:?}")]
    NotARedex(Vec<usize>),
    #[error("path enumeration exceeded the budget of {0} nodes")]
    Budget(usize),
    #[error("line {line}: {message}")]
    RuleText { line: usize, message: String },
    #[error("rule set mixes sides or negation prefixes, or has two rules for `{0}`")]
    Inconsistent(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Inside,
    Outside,
}

/// A run of zero, one or two negations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Negs {
    None,
    Single,
    Double,
}

impl Negs {
    pub const ALL: [Negs; 3] = [Negs::None, Negs::Single, Negs::Double];

    pub fn count(self) -> usize {
        self as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct RewriteRule {
    pub side: Side,
    /// `N`; never `Negs::None`.
    pub n: Negs,
    pub symbol: Symbol,
    pub result: Symbol,
    pub n1: Negs,
    /// Unused (and `Negs::None`) for quantifier rules.
    pub n2: Negs,
}

fn meta_a() -> Formula {
    Formula::atom("A")
}

fn meta_b() -> Formula {
    Formula::atom("B")
}

fn negs(n: Negs, f: Formula) -> Formula {
    Formula::negs(n.count(), f)
}

impl RewriteRule {
    pub fn binary(side: Side, n: Negs, op: BinOp, result: BinOp, n1: Negs, n2: Negs) -> Self {
        RewriteRule { side, n, symbol: Symbol::Bin(op), result: Symbol::Bin(result), n1, n2 }
    }

    pub fn quant(side: Side, n: Negs, q: Quantifier, result: Quantifier, n1: Negs) -> Self {
        RewriteRule { side, n, symbol: Symbol::Quant(q), result: Symbol::Quant(result), n1, n2: Negs::None }
    }

    /// Left schema over the metavariables `A`, `B`.
    pub fn lhs(&self) -> Formula {
        let (a, b) = (meta_a(), meta_b());
        match (self.side, self.symbol) {
            (Side::Inside, Symbol::Bin(op)) => Formula::dneg(Formula::binary(op, negs(self.n, a), negs(self.n, b))),
            (Side::Inside, Symbol::Quant(q)) => Formula::dneg(Formula::quant(q, "x", negs(self.n, a))),
            (Side::Outside, Symbol::Bin(op)) => negs(self.n, Formula::binary(op, Formula::dneg(a), Formula::dneg(b))),
            (Side::Outside, Symbol::Quant(q)) => negs(self.n, Formula::quant(q, "x", Formula::dneg(a))),
        }
    }

    /// Right schema over the metavariables `A`, `B`.
    pub fn rhs(&self) -> Formula {
        self.build(meta_a(), meta_b(), "x")
    }

    fn build(&self, a: Formula, b: Formula, x: &str) -> Formula {
        match (self.side, self.result) {
            (Side::Inside, Symbol::Bin(op)) => negs(self.n, Formula::binary(op, negs(self.n1, a), negs(self.n2, b))),
            (Side::Inside, Symbol::Quant(q)) => negs(self.n, Formula::quant(q, x, negs(self.n1, a))),
            (Side::Outside, Symbol::Bin(op)) => {
                Formula::binary(op, negs(self.n1, negs(self.n, a)), negs(self.n2, negs(self.n, b)))
            }
            (Side::Outside, Symbol::Quant(q)) => Formula::quant(q, x, negs(self.n1, negs(self.n, a))),
        }
    }

    pub fn lhs_negations(&self) -> usize {
        self.lhs().neg_count()
    }

    pub fn rhs_negations(&self) -> usize {
        self.rhs().neg_count()
    }

    /// Both schemas with `A` read as `A(x)` under quantifiers, ready for the
    /// kernel.
    pub fn instance(&self) -> (Formula, Formula) {
        let unary = |f: Formula| {
            if self.symbol.is_quantifier() {
                f.substitute_atoms(&|p| (p == "A").then(|| Formula::pred("A", vec![Term::var("x")])))
            } else {
                f
            }
        };
        (unary(self.lhs()), unary(self.rhs()))
    }

    /// Every schema of the given side and `N`, for one symbol.
    pub fn candidates(side: Side, n: Negs, symbol: Symbol) -> Vec<RewriteRule> {
        let mut out = Vec::new();
        match symbol {
            Symbol::Bin(op) => {
                for result in BinOp::ALL {
                    for n1 in Negs::ALL {
                        for n2 in Negs::ALL {
                            out.push(RewriteRule::binary(side, n, op, result, n1, n2));
                        }
                    }
                }
            }
            Symbol::Quant(q) => {
                for result in Quantifier::ALL {
                    for n1 in Negs::ALL {
                        out.push(RewriteRule::quant(side, n, q, result, n1));
                    }
                }
            }
        }
        out
    }

    fn all_schemas() -> Vec<RewriteRule> {
        let mut out = Vec::new();
        for side in [Side::Inside, Side::Outside] {
            for n in [Negs::Double, Negs::Single] {
                for symbol in Symbol::ALL {
                    out.extend(RewriteRule::candidates(side, n, symbol));
                }
            }
        }
        out
    }
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} => {}", self.lhs(), self.rhs())
    }
}

/// At most one rule per symbol, all sharing side and `N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleSet {
    pub name: String,
    pub side: Side,
    pub n: Negs,
    rules: Vec<RewriteRule>,
}

impl RuleSet {
    pub fn new(name: impl Into<String>, rules: Vec<RewriteRule>) -> Result<Self, RewriteError> {
        let first = rules.first().ok_or_else(|| RewriteError::Inconsistent("empty set".into()))?;
        let (side, n) = (first.side, first.n);
        let mut seen = HashSet::new();
        for r in &rules {
            if r.side != side || r.n != n || !seen.insert(r.symbol) {
                return Err(RewriteError::Inconsistent(r.symbol.name().into()));
            }
        }
        let mut rules = rules;
        rules.sort_by_key(|r| Symbol::ALL.iter().position(|&s| s == r.symbol));
        Ok(RuleSet { name: name.into(), side, n, rules })
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn get(&self, symbol: Symbol) -> Option<&RewriteRule> {
        self.rules.iter().find(|r| r.symbol == symbol)
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        self.rules.iter().map(|r| r.symbol).collect()
    }

    /// The set without the rules for `symbols`.
    pub fn without(&self, symbols: &[Symbol]) -> RuleSet {
        let suffix: Vec<&str> = symbols.iter().map(|s| s.word()).collect();
        RuleSet {
            name: format!("{}_minus_{}", self.name, suffix.join("_")),
            side: self.side,
            n: self.n,
            rules: self.rules.iter().filter(|r| !symbols.contains(&r.symbol)).copied().collect(),
        }
    }

    /// Whether every rule belongs to `other`.
    pub fn is_subset_of(&self, other: &RuleSet) -> bool {
        self.rules.iter().all(|r| other.rules.contains(r))
    }

    /// One `LHS => RHS` line per rule.
    pub fn to_text(&self) -> String {
        self.rules.iter().map(|r| format!("{r}\n")).collect()
    }

    /// Reads the `LHS => RHS` format; blank lines and `#` comments are
    /// skipped. Each line must be one of the schemas above, written with
    /// metavariables `A`, `B` and bound variable `x`.
    pub fn from_text(name: &str, text: &str) -> Result<RuleSet, RewriteError> {
        let schemas = RewriteRule::all_schemas();
        let mut rules = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| RewriteError::RuleText { line: i + 1, message };
            let (l, r) = line.split_once("=>").ok_or_else(|| err("expected `LHS => RHS`".into()))?;
            let l = parse(l.trim()).map_err(|e| err(e.to_string()))?;
            let r = parse(r.trim()).map_err(|e| err(e.to_string()))?;
            let rule = schemas
                .iter()
                .find(|s| s.lhs() == l && s.rhs() == r)
                .ok_or_else(|| err("not a simplification schema".into()))?;
            rules.push(*rule);
        }
        RuleSet::new(name, rules).map_err(|e| match e {
            RewriteError::Inconsistent(s) if s == "empty set" => {
                RewriteError::RuleText { line: 0, message: "no rules".into() }
            }
            e => e,
        })
    }
}

impl fmt::Display for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

pub const BUILTIN_RULESETS: [&str; 10] = [
    "r1",
    "r2",
    "r3",
    "r4",
    "r3_prime",
    "r3_prime_minus_imp",
    "r3_prime_minus_and",
    "r1_tilde",
    "r1_minus_and",
    "example_nonmaximal",
];

fn base_ruleset(name: &str) -> Option<RuleSet> {
    use BinOp::{And, Imp, Or};
    use Negs::{Double as D, None as Z, Single as S};
    use Quantifier::{Exists, Forall};
    use Side::{Inside as In, Outside as Out};
    let rules = match name {
        "r1" => vec![
            RewriteRule::binary(In, D, And, And, Z, Z),
            RewriteRule::binary(In, D, Or, Or, Z, Z),
            RewriteRule::binary(In, D, Imp, Imp, Z, Z),
            RewriteRule::quant(In, D, Exists, Exists, Z),
        ],
        "r2" => vec![
            RewriteRule::binary(In, S, And, Or, Z, Z),
            RewriteRule::binary(In, S, Or, And, Z, Z),
            RewriteRule::binary(In, S, Imp, And, S, Z),
            RewriteRule::quant(In, S, Forall, Exists, Z),
        ],
        "r3" => vec![
            RewriteRule::binary(Out, D, And, And, Z, Z),
            RewriteRule::binary(Out, D, Or, Imp, S, Z),
            RewriteRule::binary(Out, D, Imp, Imp, Z, Z),
            RewriteRule::quant(Out, D, Forall, Forall, Z),
        ],
        "r4" => vec![
            RewriteRule::binary(Out, S, And, Imp, S, Z),
            RewriteRule::binary(Out, S, Or, And, Z, Z),
            RewriteRule::binary(Out, S, Imp, And, S, Z),
            RewriteRule::quant(Out, S, Exists, Forall, Z),
        ],
        "r1_tilde" => vec![
            RewriteRule::binary(In, D, And, And, Z, Z),
            RewriteRule::binary(In, D, Or, Or, Z, Z),
            RewriteRule::binary(In, D, Imp, Imp, Z, D),
            RewriteRule::quant(In, D, Exists, Exists, Z),
        ],
        "example_nonmaximal" => {
            vec![RewriteRule::binary(In, S, And, Or, Z, D), RewriteRule::binary(In, S, Or, And, Z, Z)]
        }
        _ => return None,
    };
    Some(RuleSet::new(name, rules).expect("built-in sets are consistent"))
}

fn symbol_by_name(name: &str) -> Option<Symbol> {
    Symbol::ALL.into_iter().find(|s| s.word() == name)
}

/// A built-in rule set, or `<base>_minus_<symbol>[_<symbol>..]` for any
/// base. `r3_prime` is `r3` without its disjunction rule.
///
/// ```
/// use negtrans::rewrite::builtin_ruleset;
/// let r1 = builtin_ruleset("r1").unwrap();
/// assert!(r1.to_text().contains("~~(~~A -> ~~B) => ~~(A -> B)"));
/// assert_eq!(builtin_ruleset("r3_prime_minus_imp").unwrap().rules().len(), 2);
/// ```
pub fn builtin_ruleset(name: &str) -> Result<RuleSet, RewriteError> {
    let unknown = || RewriteError::UnknownRuleSet { name: name.to_string() };
    let (base, minus) = match name.split_once("_minus_") {
        Some((b, rest)) => (b, rest.split('_').collect::<Vec<_>>()),
        None => (name, vec![]),
    };
    let mut set = match base {
        "r3_prime" => {
            let mut s = base_ruleset("r3").unwrap().without(&[Symbol::Bin(BinOp::Or)]);
            s.name = "r3_prime".into();
            s
        }
        _ => base_ruleset(base).ok_or_else(unknown)?,
    };
    if !minus.is_empty() {
        let symbols = minus.iter().map(|m| symbol_by_name(m)).collect::<Option<Vec<_>>>().ok_or_else(unknown)?;
        set = set.without(&symbols);
        set.name = name.to_string();
    }
    Ok(set)
}

/// Outcome of checking a rule against both conditions of a simplification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RuleValidity {
    Valid,
    Invalid { reason: InvalidReason },
    Unknown { curated: Option<CuratedRefutation> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InvalidReason {
    /// The right side does not have strictly fewer negations.
    NegationCount { lhs: usize, rhs: usize },
    /// One direction fails; the verdict carries any countermodel.
    NotEquivalent { direction: String, verdict: Verdict },
}

impl RuleValidity {
    pub fn is_valid(&self) -> bool {
        matches!(self, RuleValidity::Valid)
    }
}

/// Checks that the right side has fewer negations and that both sides are
/// equivalent in `logic`. Unknown verdicts are matched against the curated
/// refutation table.
pub fn validate_rule(rule: &RewriteRule, kernel: &Kernel, logic: Logic) -> RuleValidity {
    let (lhs, rhs) = (rule.lhs_negations(), rule.rhs_negations());
    if rhs >= lhs {
        return RuleValidity::Invalid { reason: InvalidReason::NegationCount { lhs, rhs } };
    }
    let (l, r) = rule.instance();
    let mut unknown = None;
    for (from, to) in [(&l, &r), (&r, &l)] {
        let imp = Formula::imp(from.clone(), to.clone());
        match kernel.valid(&imp, logic) {
            Verdict::Valid { .. } => {}
            v @ Verdict::Invalid { .. } => {
                return RuleValidity::Invalid {
                    reason: InvalidReason::NotEquivalent { direction: imp.to_string(), verdict: v },
                }
            }
            Verdict::Unknown { .. } => unknown = Some(imp),
        }
    }
    match unknown {
        None => RuleValidity::Valid,
        Some(imp) => RuleValidity::Unknown { curated: curated_lookup(&imp).copied() },
    }
}

/// A formula whose connective and quantifier nodes carry identities that
/// survive rewriting.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ProvenanceFormula {
    Leaf(Formula),
    Neg(Box<ProvenanceFormula>),
    Bin(BinOp, u32, Box<ProvenanceFormula>, Box<ProvenanceFormula>),
    Quant(Quantifier, u32, String, Box<ProvenanceFormula>),
}

impl ProvenanceFormula {
    /// Numbers connectives and quantifiers in pre-order from 0.
    pub fn new(f: &Formula) -> Self {
        fn go(f: &Formula, next: &mut u32) -> ProvenanceFormula {
            if let Some(a) = f.as_neg() {
                return ProvenanceFormula::Neg(Box::new(go(a, next)));
            }
            if let Some((op, a, b)) = f.as_binary() {
                let id = *next;
                *next += 1;
                let a = go(a, next);
                return ProvenanceFormula::Bin(op, id, Box::new(a), Box::new(go(b, next)));
            }
            if let Some((q, x, a)) = f.as_quant() {
                let id = *next;
                *next += 1;
                return ProvenanceFormula::Quant(q, id, x.to_string(), Box::new(go(a, next)));
            }
            ProvenanceFormula::Leaf(f.clone())
        }
        go(f, &mut 0)
    }

    pub fn to_formula(&self) -> Formula {
        match self {
            ProvenanceFormula::Leaf(f) => f.clone(),
            ProvenanceFormula::Neg(a) => Formula::neg(a.to_formula()),
            ProvenanceFormula::Bin(op, _, a, b) => Formula::binary(*op, a.to_formula(), b.to_formula()),
            ProvenanceFormula::Quant(q, _, x, a) => Formula::quant(*q, x.clone(), a.to_formula()),
        }
    }

    pub fn ids(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        self.collect_ids(&mut out);
        out
    }

    fn collect_ids(&self, out: &mut BTreeSet<u32>) {
        match self {
            ProvenanceFormula::Leaf(_) => {}
            ProvenanceFormula::Neg(a) => a.collect_ids(out),
            ProvenanceFormula::Bin(_, id, a, b) => {
                out.insert(*id);
                a.collect_ids(out);
                b.collect_ids(out);
            }
            ProvenanceFormula::Quant(_, id, _, a) => {
                out.insert(*id);
                a.collect_ids(out);
            }
        }
    }

    fn strip(&self, n: usize) -> Option<&ProvenanceFormula> {
        let mut cur = self;
        for _ in 0..n {
            match cur {
                ProvenanceFormula::Neg(a) => cur = a,
                _ => return None,
            }
        }
        Some(cur)
    }

    fn negs(n: usize, f: ProvenanceFormula) -> ProvenanceFormula {
        (0..n).fold(f, |acc, _| ProvenanceFormula::Neg(Box::new(acc)))
    }

    fn children(&self) -> Vec<&ProvenanceFormula> {
        match self {
            ProvenanceFormula::Leaf(_) => vec![],
            ProvenanceFormula::Neg(a) | ProvenanceFormula::Quant(_, _, _, a) => vec![a],
            ProvenanceFormula::Bin(_, _, a, b) => vec![a, b],
        }
    }

    pub fn at(&self, pos: &[usize]) -> Option<&ProvenanceFormula> {
        let mut cur = self;
        for &i in pos {
            cur = *cur.children().get(i)?;
        }
        Some(cur)
    }

    fn at_mut(&mut self, pos: &[usize]) -> Option<&mut ProvenanceFormula> {
        let mut cur = self;
        for &i in pos {
            cur = match (cur, i) {
                (ProvenanceFormula::Neg(a), 0)
                | (ProvenanceFormula::Quant(_, _, _, a), 0)
                | (ProvenanceFormula::Bin(_, _, a, _), 0)
                | (ProvenanceFormula::Bin(_, _, _, a), 1) => a,
                _ => return None,
            };
        }
        Some(cur)
    }

    /// The rewritten subformula and the identity acted on, if `rule`
    /// matches here.
    fn rewrite(&self, rule: &RewriteRule) -> Option<(ProvenanceFormula, u32)> {
        let n = rule.n.count();
        let (n1, n2) = (rule.n1.count(), rule.n2.count());
        let neg = Self::negs;
        match (rule.side, rule.symbol) {
            (Side::Inside, Symbol::Bin(op)) => {
                let ProvenanceFormula::Bin(o, id, x, y) = self.strip(2)? else { return None };
                if *o != op {
                    return None;
                }
                let (a, b) = (x.strip(n)?.clone(), y.strip(n)?.clone());
                let Symbol::Bin(r) = rule.result else { return None };
                Some((neg(n, ProvenanceFormula::Bin(r, *id, Box::new(neg(n1, a)), Box::new(neg(n2, b)))), *id))
            }
            (Side::Inside, Symbol::Quant(q)) => {
                let ProvenanceFormula::Quant(qq, id, v, x) = self.strip(2)? else { return None };
                if *qq != q {
                    return None;
                }
                let a = x.strip(n)?.clone();
                let Symbol::Quant(r) = rule.result else { return None };
                Some((neg(n, ProvenanceFormula::Quant(r, *id, v.clone(), Box::new(neg(n1, a)))), *id))
            }
            (Side::Outside, Symbol::Bin(op)) => {
                let ProvenanceFormula::Bin(o, id, x, y) = self.strip(n)? else { return None };
                if *o != op {
                    return None;
                }
                let (a, b) = (x.strip(2)?.clone(), y.strip(2)?.clone());
                let Symbol::Bin(r) = rule.result else { return None };
                Some((ProvenanceFormula::Bin(r, *id, Box::new(neg(n1 + n, a)), Box::new(neg(n2 + n, b))), *id))
            }
            (Side::Outside, Symbol::Quant(q)) => {
                let ProvenanceFormula::Quant(qq, id, v, x) = self.strip(n)? else { return None };
                if *qq != q {
                    return None;
                }
                let a = x.strip(2)?.clone();
                let Symbol::Quant(r) = rule.result else { return None };
                Some((ProvenanceFormula::Quant(r, *id, v.clone(), Box::new(neg(n1 + n, a))), *id))
            }
        }
    }
}

/// Traversal order for redex search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Order {
    Pre,
    Post,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Redex {
    pub position: Vec<usize>,
    pub rule: RewriteRule,
}

fn redexes(f: &ProvenanceFormula, rs: &RuleSet, order: Order) -> Vec<Redex> {
    fn go(f: &ProvenanceFormula, rs: &RuleSet, order: Order, pos: &mut Vec<usize>, out: &mut Vec<Redex>) {
        let here: Vec<Redex> = rs
            .rules()
            .iter()
            .filter(|r| f.rewrite(r).is_some())
            .map(|r| Redex { position: pos.clone(), rule: *r })
            .collect();
        if order == Order::Pre {
            out.extend(here.iter().cloned());
        }
        for (i, c) in f.children().into_iter().enumerate() {
            pos.push(i);
            go(c, rs, order, pos, out);
            pos.pop();
        }
        if order == Order::Post {
            out.extend(here);
        }
    }
    let mut out = Vec::new();
    go(f, rs, order, &mut Vec::new(), &mut out);
    out
}

/// Every position (in pre-order) where a rule of `rs` matches.
pub fn find_redexes(f: &Formula, rs: &RuleSet) -> Vec<Redex> {
    redexes(&ProvenanceFormula::new(f), rs, Order::Pre)
}

fn apply_provenance(
    f: &ProvenanceFormula,
    pos: &[usize],
    rule: &RewriteRule,
) -> Result<(ProvenanceFormula, u32), RewriteError> {
    let not_redex = || RewriteError::NotARedex(pos.to_vec());
    let (new, id) = f.at(pos).and_then(|g| g.rewrite(rule)).ok_or_else(not_redex)?;
    let mut out = f.clone();
    *out.at_mut(pos).ok_or_else(not_redex)? = new;
    Ok((out, id))
}

/// Rewrites the subformula at `pos` with `rule`.
///
/// ```
/// use negtrans::{parse, formula::{BinOp, Symbol}, rewrite::{apply_at, builtin_ruleset}};
/// let r2 = builtin_ruleset("r2").unwrap();
/// let rule = r2.get(Symbol::Bin(BinOp::Or)).unwrap();
/// let f = parse("~~(~~P | ~~Q)").unwrap();
/// assert_eq!(apply_at(&f, &[], rule).unwrap().to_string(), "~(~P & ~Q)");
/// ```
pub fn apply_at(f: &Formula, pos: &[usize], rule: &RewriteRule) -> Result<Formula, RewriteError> {
    Ok(apply_provenance(&ProvenanceFormula::new(f), pos, rule)?.0.to_formula())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub position: Vec<usize>,
    pub rule: RewriteRule,
    /// Identity of the connective or quantifier acted on, numbered in
    /// pre-order over the first node.
    pub id: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplificationPath {
    pub nodes: Vec<Formula>,
    pub steps: Vec<Step>,
}

impl SimplificationPath {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn start(&self) -> &Formula {
        &self.nodes[0]
    }

    pub fn end(&self) -> &Formula {
        self.nodes.last().expect("paths are nonempty")
    }

    /// Whether no identity is acted on twice and every one acted on was in
    /// the first node.
    pub fn acts_once_on_original_symbols(&self) -> bool {
        let original = ProvenanceFormula::new(self.start()).ids();
        let mut seen = HashSet::new();
        self.steps.iter().all(|s| original.contains(&s.id) && seen.insert(s.id))
    }
}

/// The deterministic longest path: innermost-first for rule sets from
/// inside, outermost-first for rule sets from outside, left to right.
///
/// ```
/// use negtrans::{parse, rewrite::{builtin_ruleset, standard_path}};
/// let ko = parse("~~(~~P & ~~exists x. ~~Q(x))").unwrap();
/// let path = standard_path(&ko, &builtin_ruleset("r1").unwrap());
/// assert_eq!(path.len(), 2);
/// assert_eq!(path.end().to_string(), "~~(P & exists x. Q(x))");
/// ```
pub fn standard_path(f: &Formula, rs: &RuleSet) -> SimplificationPath {
    let order = match rs.side {
        Side::Inside => Order::Post,
        Side::Outside => Order::Pre,
    };
    let mut cur = ProvenanceFormula::new(f);
    let mut path = SimplificationPath { nodes: vec![f.clone()], steps: vec![] };
    while let Some(redex) = redexes(&cur, rs, order).into_iter().next() {
        let (next, id) = apply_provenance(&cur, &redex.position, &redex.rule).expect("redex applies");
        path.nodes.push(next.to_formula());
        path.steps.push(Step { position: redex.position, rule: redex.rule, id });
        cur = next;
    }
    path
}

/// The endpoint of a longest path.
pub fn longest_result(f: &Formula, rs: &RuleSet) -> Formula {
    standard_path(f, rs).end().clone()
}

/// Occurrences in the source `a` of the symbols `rs` has rules for.
pub fn expected_length(a: &Formula, rs: &RuleSet) -> usize {
    let counts = a.expand_neg().count_connectives();
    rs.symbols().into_iter().map(|s| counts.get(s)).sum()
}

/// Every maximal path from `f`. Fails once more than `budget` nodes have
/// been generated.
pub fn enumerate_all_paths(f: &Formula, rs: &RuleSet, budget: usize) -> Result<Vec<SimplificationPath>, RewriteError> {
    fn go(
        cur: &ProvenanceFormula,
        rs: &RuleSet,
        path: &mut SimplificationPath,
        out: &mut Vec<SimplificationPath>,
        used: &mut usize,
        budget: usize,
    ) -> Result<(), RewriteError> {
        let found = redexes(cur, rs, Order::Pre);
        if found.is_empty() {
            out.push(path.clone());
            return Ok(());
        }
        for redex in found {
            *used += 1;
            if *used > budget {
                return Err(RewriteError::Budget(budget));
            }
            let (next, id) = apply_provenance(cur, &redex.position, &redex.rule)?;
            path.nodes.push(next.to_formula());
            path.steps.push(Step { position: redex.position, rule: redex.rule, id });
            go(&next, rs, path, out, used, budget)?;
            path.nodes.pop();
            path.steps.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    let mut path = SimplificationPath { nodes: vec![f.clone()], steps: vec![] };
    go(&ProvenanceFormula::new(f), rs, &mut path, &mut out, &mut 0, budget)?;
    Ok(out)
}

/// Where a candidate's validity verdict came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub rule: RewriteRule,
    pub schema: String,
    pub validity: RuleValidity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaximalReport {
    pub sets: Vec<RuleSet>,
    /// Every schema that passed the negation count, with its verdict.
    pub candidates: Vec<Candidate>,
    /// Quantifier candidates left unknown and absent from the curated table.
    pub unresolved: Vec<Candidate>,
}

impl MaximalReport {
    /// Curated entries used to reject candidates.
    pub fn curated_used(&self) -> Vec<CuratedRefutation> {
        let mut out: Vec<CuratedRefutation> = Vec::new();
        for c in &self.candidates {
            if let RuleValidity::Unknown { curated: Some(entry) } = &c.validity {
                if !out.contains(entry) {
                    out.push(*entry);
                }
            }
        }
        out
    }
}

/// Enumerates the schema space for each side and `N`, keeps the candidates
/// that are valid in IL, and assembles the sets that cannot be extended by
/// another symbol nor have a rule replaced by one with fewer negations on
/// the right.
pub fn enumerate_maximal(kernel: &Kernel) -> MaximalReport {
    let mut sets = Vec::new();
    let mut candidates = Vec::new();
    let mut unresolved = Vec::new();
    for side in [Side::Inside, Side::Outside] {
        for n in [Negs::Double, Negs::Single] {
            let mut per_symbol: Vec<Vec<RewriteRule>> = Vec::new();
            for symbol in Symbol::ALL {
                let mut valid = Vec::new();
                for rule in RewriteRule::candidates(side, n, symbol) {
                    if rule.rhs_negations() >= rule.lhs_negations() {
                        continue;
                    }
                    let validity = validate_rule(&rule, kernel, Logic::Intuitionistic);
                    let cand = Candidate { rule, schema: rule.to_string(), validity: validity.clone() };
                    if matches!(validity, RuleValidity::Unknown { curated: None }) {
                        unresolved.push(cand.clone());
                    }
                    if validity.is_valid() {
                        valid.push(rule);
                    }
                    candidates.push(cand);
                }
                if let Some(best) = valid.iter().map(|r| r.rhs_negations()).min() {
                    per_symbol.push(valid.into_iter().filter(|r| r.rhs_negations() == best).collect());
                }
            }
            // Cartesian product over symbols of the cheapest valid rules.
            let mut combos: Vec<Vec<RewriteRule>> = vec![vec![]];
            for options in &per_symbol {
                combos = combos
                    .into_iter()
                    .flat_map(|c| {
                        options.iter().map(move |r| {
                            let mut c = c.clone();
                            c.push(*r);
                            c
                        })
                    })
                    .collect();
            }
            for rules in combos {
                if rules.is_empty() {
                    continue;
                }
                let name = format!("maximal_{}_{}", side_name(side), n.count());
                sets.push(RuleSet::new(name, rules).expect("one rule per symbol"));
            }
        }
    }
    MaximalReport { sets, candidates, unresolved }
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Inside => "inside",
        Side::Outside => "outside",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Formula {
        parse(s).unwrap()
    }

    fn rs(name: &str) -> RuleSet {
        builtin_ruleset(name).unwrap()
    }

    #[test]
    fn schemas_print_as_in_the_tables() {
        let text = rs("r4").to_text();
        assert!(text.contains("~(~~A | ~~B) => ~A & ~B"), "{text}");
        assert!(text.contains("~exists x. ~~A => forall x. ~A"), "{text}");
        assert!(rs("example_nonmaximal").to_text().contains("~~(~A & ~B) => ~(A | ~~B)"));
        assert!(rs("r3").to_text().contains("~~(~~A | ~~B) => ~~~A -> ~~B"));
    }

    #[test]
    fn text_format_round_trips() {
        for name in BUILTIN_RULESETS {
            let set = rs(name);
            let back = RuleSet::from_text(name, &set.to_text()).unwrap();
            assert_eq!(back.rules(), set.rules(), "{name}");
        }
        assert!(matches!(RuleSet::from_text("x", "A => A"), Err(RewriteError::RuleText { line: 1, .. })));
    }

    #[test]
    fn negation_counts() {
        for name in ["r1", "r2", "r3", "r4"] {
            for r in rs(name).rules() {
                assert!(r.rhs_negations() < r.lhs_negations(), "{r}");
            }
        }
    }

    #[test]
    fn validation_examples() {
        let k = Kernel::default();
        let item1 = RewriteRule::binary(Side::Inside, Negs::Double, BinOp::And, BinOp::And, Negs::None, Negs::None);
        assert!(validate_rule(&item1, &k, Logic::Intuitionistic).is_valid());
        let item19 = RewriteRule::binary(Side::Outside, Negs::Double, BinOp::Or, BinOp::Or, Negs::None, Negs::None);
        match validate_rule(&item19, &k, Logic::Intuitionistic) {
            RuleValidity::Invalid {
                reason: InvalidReason::NotEquivalent { verdict: Verdict::Invalid { witness: Some(m) }, .. },
            } => {
                assert_eq!(m.model.worlds(), 3)
            }
            v => panic!("{v:?}"),
        }
        let item9 = RewriteRule::binary(Side::Outside, Negs::Double, BinOp::And, BinOp::And, Negs::None, Negs::None);
        assert!(validate_rule(&item9, &k, Logic::Intuitionistic).is_valid());
    }

    #[test]
    fn redex_examples() {
        assert_eq!(find_redexes(&p("~~(~~P & ~~Q)"), &rs("r1")).len(), 1);
        let f = p("~~(~~(~~P & ~~Q) & ~~exists x. ~~R(x))");
        let found = find_redexes(&f, &rs("r1"));
        assert_eq!(found.len(), 3);
        assert!(find_redexes(&p("P & Q"), &rs("r1")).is_empty());
    }

    #[test]
    fn figure_paths() {
        let f = p("~~(~~(~~A & ~~B) & ~~exists x. ~~A)");
        let r1 = rs("r1");
        let paths = enumerate_all_paths(&f, &r1, 10_000).unwrap();
        let ends: Vec<(usize, Formula)> = paths.iter().map(|q| (q.len(), q.end().clone())).collect();
        for (len, end) in
            [(2, "~~((~~A & ~~B) & exists x. A)"), (2, "~~((A & B) & exists x. ~~A)"), (3, "~~((A & B) & exists x. A)")]
        {
            assert!(ends.contains(&(len, p(end))), "{ends:?}");
        }
        let left = apply_at(&f, &[0, 0, 1], r1.get(Symbol::Quant(Quantifier::Exists)).unwrap()).unwrap();
        assert_eq!(left, p("~~(~~(~~A & ~~B) & ~~exists x. A)"));
    }

    #[test]
    fn standard_path_examples() {
        let ko = p("~~(~~P & ~~Q)");
        let path = standard_path(&ko, &rs("r2"));
        assert_eq!(path.len(), 1);
        assert_eq!(path.end().to_string(), "~(~P | ~Q)");
        let atom = standard_path(&p("~~P"), &rs("r3"));
        assert!(atom.is_empty());
        let src = p("P & exists x. Q(x)");
        assert_eq!(expected_length(&src, &rs("r1")), 2);
        assert_eq!(expected_length(&src, &rs("r2")), 1);
    }

    #[test]
    fn provenance_survives_rewriting() {
        let f = p("~~(~~P | ~~Q)");
        let path = standard_path(&f, &rs("r2"));
        assert_eq!(path.steps[0].id, 0);
        assert!(path.acts_once_on_original_symbols());
    }

    #[test]
    fn builtin_names() {
        assert_eq!(rs("r1_minus_and").rules().len(), 3);
        assert_eq!(rs("r2_minus_or_forall").rules().len(), 2);
        assert!(builtin_ruleset("r9").is_err());
        assert!(builtin_ruleset("r1_minus_iff").is_err());
    }
}
