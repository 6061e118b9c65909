//! First-order formulas with a primitive negation node.
//!
//! `Neg` is kept distinct from `Imp(_, Bot)`: the rewrite rules match on
//! literal negation symbols and the implication count ignores them. Provers
//! consume the [`Formula::expand_neg`] image instead.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A first-order term. Zero-argument applications are constants.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Term {
    Var(String),
    App(String, Vec<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Self {
        Term::Var(name.into())
    }

    pub fn constant(name: impl Into<String>) -> Self {
        Term::App(name.into(), Vec::new())
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::App(_, args) => args.iter().for_each(|t| t.collect_vars(out)),
        }
    }

    /// Replaces every occurrence of the variable `var` by `with`.
    pub fn substitute(&self, var: &str, with: &Term) -> Term {
        match self {
            Term::Var(v) if v == var => with.clone(),
            Term::Var(_) => self.clone(),
            Term::App(f, args) => Term::App(f.clone(), args.iter().map(|t| t.substitute(var, with)).collect()),
        }
    }
}

/// Binary connectives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BinOp {
    And,
    Or,
    Imp,
}

impl BinOp {
    pub const ALL: [BinOp; 3] = [BinOp::And, BinOp::Or, BinOp::Imp];

    pub fn ascii(self) -> &'static str {
        match self {
            BinOp::And => "&",
            BinOp::Or => "|",
            BinOp::Imp => "->",
        }
    }
}

/// Quantifiers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Quantifier {
    Forall,
    Exists,
}

impl Quantifier {
    pub const ALL: [Quantifier; 2] = [Quantifier::Forall, Quantifier::Exists];

    pub fn keyword(self) -> &'static str {
        match self {
            Quantifier::Forall => "forall",
            Quantifier::Exists => "exists",
        }
    }

    pub fn dual(self) -> Quantifier {
        match self {
            Quantifier::Forall => Quantifier::Exists,
            Quantifier::Exists => Quantifier::Forall,
        }
    }
}

/// A logical symbol that a rewrite rule or a counting function talks about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Symbol {
    Bin(BinOp),
    Quant(Quantifier),
}

impl Symbol {
    pub const ALL: [Symbol; 5] = [
        Symbol::Bin(BinOp::And),
        Symbol::Bin(BinOp::Or),
        Symbol::Bin(BinOp::Imp),
        Symbol::Quant(Quantifier::Forall),
        Symbol::Quant(Quantifier::Exists),
    ];

    pub fn name(self) -> &'static str {
        match self {
            Symbol::Bin(op) => op.ascii(),
            Symbol::Quant(q) => q.keyword(),
        }
    }

    /// Identifier-friendly name: `and`, `or`, `imp`, `forall`, `exists`.
    pub fn word(self) -> &'static str {
        match self {
            Symbol::Bin(BinOp::And) => "and",
            Symbol::Bin(BinOp::Or) => "or",
            Symbol::Bin(BinOp::Imp) => "imp",
            Symbol::Quant(q) => q.keyword(),
        }
    }

    pub fn is_quantifier(self) -> bool {
        matches!(self, Symbol::Quant(_))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Formula {
    Atom(String, Vec<Term>),
    Bot,
    Top,
    Neg(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Forall(String, Box<Formula>),
    Exists(String, Box<Formula>),
}

/// Number of occurrences of each connective and quantifier. `Neg` nodes do
/// not count as implications.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConnectiveCounts {
    pub and: usize,
    pub or: usize,
    pub imp: usize,
    pub forall: usize,
    pub exists: usize,
}

impl ConnectiveCounts {
    pub fn get(&self, symbol: Symbol) -> usize {
        match symbol {
            Symbol::Bin(BinOp::And) => self.and,
            Symbol::Bin(BinOp::Or) => self.or,
            Symbol::Bin(BinOp::Imp) => self.imp,
            Symbol::Quant(Quantifier::Forall) => self.forall,
            Symbol::Quant(Quantifier::Exists) => self.exists,
        }
    }

    fn bump(&mut self, symbol: Symbol) {
        match symbol {
            Symbol::Bin(BinOp::And) => self.and += 1,
            Symbol::Bin(BinOp::Or) => self.or += 1,
            Symbol::Bin(BinOp::Imp) => self.imp += 1,
            Symbol::Quant(Quantifier::Forall) => self.forall += 1,
            Symbol::Quant(Quantifier::Exists) => self.exists += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.and + self.or + self.imp + self.forall + self.exists
    }
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(name.into(), Vec::new())
    }

    pub fn pred(name: impl Into<String>, args: Vec<Term>) -> Self {
        Formula::Atom(name.into(), args)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(f: Formula) -> Self {
        Formula::Neg(Box::new(f))
    }

    /// Prefixes `f` with `n` negation symbols.
    pub fn negs(n: usize, f: Formula) -> Self {
        (0..n).fold(f, |acc, _| Formula::neg(acc))
    }

    pub fn dneg(f: Formula) -> Self {
        Formula::negs(2, f)
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Self {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Self {
        Formula::and(Formula::imp(a.clone(), b.clone()), Formula::imp(b, a))
    }

    pub fn forall(var: impl Into<String>, body: Formula) -> Self {
        Formula::Forall(var.into(), Box::new(body))
    }

    pub fn exists(var: impl Into<String>, body: Formula) -> Self {
        Formula::Exists(var.into(), Box::new(body))
    }

    pub fn binary(op: BinOp, a: Formula, b: Formula) -> Self {
        match op {
            BinOp::And => Formula::and(a, b),
            BinOp::Or => Formula::or(a, b),
            BinOp::Imp => Formula::imp(a, b),
        }
    }

    pub fn quant(q: Quantifier, var: impl Into<String>, body: Formula) -> Self {
        match q {
            Quantifier::Forall => Formula::forall(var, body),
            Quantifier::Exists => Formula::exists(var, body),
        }
    }

    pub fn as_binary(&self) -> Option<(BinOp, &Formula, &Formula)> {
        match self {
            Formula::And(a, b) => Some((BinOp::And, a, b)),
            Formula::Or(a, b) => Some((BinOp::Or, a, b)),
            Formula::Imp(a, b) => Some((BinOp::Imp, a, b)),
            _ => None,
        }
    }

    pub fn as_quant(&self) -> Option<(Quantifier, &str, &Formula)> {
        match self {
            Formula::Forall(x, a) => Some((Quantifier::Forall, x, a)),
            Formula::Exists(x, a) => Some((Quantifier::Exists, x, a)),
            _ => None,
        }
    }

    pub fn as_neg(&self) -> Option<&Formula> {
        match self {
            Formula::Neg(a) => Some(a),
            _ => None,
        }
    }

    /// Strips exactly `n` leading negations, if present.
    pub fn strip_negs(&self, n: usize) -> Option<&Formula> {
        let mut cur = self;
        for _ in 0..n {
            cur = cur.as_neg()?;
        }
        Some(cur)
    }

    /// Atomic in the sense of the translations: predicates, `bot` and `top`.
    pub fn is_atomic(&self) -> bool {
        matches!(self, Formula::Atom(..) | Formula::Bot | Formula::Top)
    }

    pub fn is_propositional(&self) -> bool {
        match self {
            Formula::Atom(..) | Formula::Bot | Formula::Top => true,
            Formula::Neg(a) => a.is_propositional(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => a.is_propositional() && b.is_propositional(),
            Formula::Forall(..) | Formula::Exists(..) => false,
        }
    }

    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::Atom(..) | Formula::Bot | Formula::Top => Vec::new(),
            Formula::Neg(a) | Formula::Forall(_, a) | Formula::Exists(_, a) => vec![a],
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => vec![a, b],
        }
    }

    pub fn child_mut(&mut self, index: usize) -> Option<&mut Formula> {
        match (self, index) {
            (Formula::Neg(a), 0) | (Formula::Forall(_, a), 0) | (Formula::Exists(_, a), 0) => Some(a),
            (Formula::And(a, _), 0) | (Formula::Or(a, _), 0) | (Formula::Imp(a, _), 0) => Some(a),
            (Formula::And(_, b), 1) | (Formula::Or(_, b), 1) | (Formula::Imp(_, b), 1) => Some(b),
            _ => None,
        }
    }

    pub fn count_connectives(&self) -> ConnectiveCounts {
        let mut counts = ConnectiveCounts::default();
        self.visit(&mut |f| {
            if let Some((op, _, _)) = f.as_binary() {
                counts.bump(Symbol::Bin(op));
            } else if let Some((q, _, _)) = f.as_quant() {
                counts.bump(Symbol::Quant(q));
            }
        });
        counts
    }

    /// Total number of connectives and quantifiers (negations excluded).
    pub fn logical_symbols(&self) -> usize {
        self.count_connectives().total()
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        1 + self.children().into_iter().map(Formula::size).sum::<usize>()
    }

    /// Number of primitive negation symbols.
    pub fn neg_count(&self) -> usize {
        let mut n = 0;
        self.visit(&mut |f| {
            if matches!(f, Formula::Neg(_)) {
                n += 1;
            }
        });
        n
    }

    /// Pre-order traversal.
    pub fn visit<'a>(&'a self, visitor: &mut impl FnMut(&'a Formula)) {
        visitor(self);
        for c in self.children() {
            c.visit(visitor);
        }
    }

    /// Replaces every `Neg(A)` by `Imp(A, Bot)`.
    pub fn expand_neg(&self) -> Formula {
        match self {
            Formula::Atom(..) | Formula::Bot | Formula::Top => self.clone(),
            Formula::Neg(a) => Formula::imp(a.expand_neg(), Formula::Bot),
            Formula::And(a, b) => Formula::and(a.expand_neg(), b.expand_neg()),
            Formula::Or(a, b) => Formula::or(a.expand_neg(), b.expand_neg()),
            Formula::Imp(a, b) => Formula::imp(a.expand_neg(), b.expand_neg()),
            Formula::Forall(x, a) => Formula::forall(x.clone(), a.expand_neg()),
            Formula::Exists(x, a) => Formula::exists(x.clone(), a.expand_neg()),
        }
    }

    pub fn contains_neg(&self) -> bool {
        self.neg_count() > 0
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(_, args) => {
                let mut vs = BTreeSet::new();
                args.iter().for_each(|t| t.collect_vars(&mut vs));
                out.extend(vs.into_iter().filter(|v| !bound.contains(v)));
            }
            Formula::Bot | Formula::Top => {}
            Formula::Neg(a) => a.collect_free(bound, out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Forall(x, a) | Formula::Exists(x, a) => {
                bound.push(x.clone());
                a.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    /// All variable names, bound or free, plus predicate and function names.
    pub fn names(&self) -> BTreeSet<String> {
        fn term_names(t: &Term, out: &mut BTreeSet<String>) {
            match t {
                Term::Var(v) => {
                    out.insert(v.clone());
                }
                Term::App(f, args) => {
                    out.insert(f.clone());
                    args.iter().for_each(|a| term_names(a, out));
                }
            }
        }
        let mut out = BTreeSet::new();
        self.visit(&mut |f| match f {
            Formula::Atom(p, args) => {
                out.insert(p.clone());
                args.iter().for_each(|t| term_names(t, &mut out));
            }
            Formula::Forall(x, _) | Formula::Exists(x, _) => {
                out.insert(x.clone());
            }
            _ => {}
        });
        out
    }

    /// Substitutes `with` for the free occurrences of `var`. The caller
    /// guarantees that no variable of `with` is bound in `self`.
    pub fn substitute(&self, var: &str, with: &Term) -> Formula {
        match self {
            Formula::Atom(p, args) => Formula::Atom(p.clone(), args.iter().map(|t| t.substitute(var, with)).collect()),
            Formula::Bot | Formula::Top => self.clone(),
            Formula::Neg(a) => Formula::neg(a.substitute(var, with)),
            Formula::And(a, b) => Formula::and(a.substitute(var, with), b.substitute(var, with)),
            Formula::Or(a, b) => Formula::or(a.substitute(var, with), b.substitute(var, with)),
            Formula::Imp(a, b) => Formula::imp(a.substitute(var, with), b.substitute(var, with)),
            Formula::Forall(x, _) | Formula::Exists(x, _) if x == var => self.clone(),
            Formula::Forall(x, a) => Formula::forall(x.clone(), a.substitute(var, with)),
            Formula::Exists(x, a) => Formula::exists(x.clone(), a.substitute(var, with)),
        }
    }

    /// Replaces each 0-ary atom named in `map` by the given formula.
    pub fn substitute_atoms(&self, map: &dyn Fn(&str) -> Option<Formula>) -> Formula {
        match self {
            Formula::Atom(p, args) if args.is_empty() => map(p).unwrap_or_else(|| self.clone()),
            Formula::Atom(..) | Formula::Bot | Formula::Top => self.clone(),
            Formula::Neg(a) => Formula::neg(a.substitute_atoms(map)),
            Formula::And(a, b) => Formula::and(a.substitute_atoms(map), b.substitute_atoms(map)),
            Formula::Or(a, b) => Formula::or(a.substitute_atoms(map), b.substitute_atoms(map)),
            Formula::Imp(a, b) => Formula::imp(a.substitute_atoms(map), b.substitute_atoms(map)),
            Formula::Forall(x, a) => Formula::forall(x.clone(), a.substitute_atoms(map)),
            Formula::Exists(x, a) => Formula::exists(x.clone(), a.substitute_atoms(map)),
        }
    }

    /// Replaces `bot` everywhere by `with`.
    pub fn replace_bot(&self, with: &Formula) -> Formula {
        match self {
            Formula::Bot => with.clone(),
            Formula::Atom(..) | Formula::Top => self.clone(),
            Formula::Neg(a) => Formula::neg(a.replace_bot(with)),
            Formula::And(a, b) => Formula::and(a.replace_bot(with), b.replace_bot(with)),
            Formula::Or(a, b) => Formula::or(a.replace_bot(with), b.replace_bot(with)),
            Formula::Imp(a, b) => Formula::imp(a.replace_bot(with), b.replace_bot(with)),
            Formula::Forall(x, a) => Formula::forall(x.clone(), a.replace_bot(with)),
            Formula::Exists(x, a) => Formula::exists(x.clone(), a.replace_bot(with)),
        }
    }

    /// Subformula at `pos`, a sequence of child indices from the root.
    pub fn at(&self, pos: &[usize]) -> Option<&Formula> {
        let mut cur = self;
        for &i in pos {
            cur = *cur.children().get(i)?;
        }
        Some(cur)
    }

    pub fn at_mut(&mut self, pos: &[usize]) -> Option<&mut Formula> {
        let mut cur = self;
        for &i in pos {
            cur = cur.child_mut(i)?;
        }
        Some(cur)
    }
}

impl From<&str> for Formula {
    fn from(name: &str) -> Self {
        Formula::atom(name)
    }
}
