//! Finite first-order Kripke models and bounded countermodel search.
//!
//! Search enumerates rooted frames, monotone domain sizes and monotone
//! valuations, evaluating the formula once per valuation as a bitmask of
//! forcing worlds. Domains are always prefixes `{0, .., n-1}`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::formula::{Formula, Term};

/// Upper limit on worlds, so forcing sets fit in a `u32`.
pub const MAX_WORLDS: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum KripkeError {
    #[error("unbound variable `{0}`")]
    Unbound(String),
    #[error("function symbol `{0}` has no interpretation in Kripke models")]
    FunctionSymbol(String),
    #[error("world {0} out of range")]
    NoSuchWorld(usize),
    #[error("search bounds must be positive and at most {MAX_WORLDS} worlds")]
    Bounds,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Fact {
    pub world: usize,
    pub predicate: String,
    pub args: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KripkeModel {
    /// `order[w][v]` holds when `w <= v`.
    pub order: Vec<Vec<bool>>,
    pub domains: Vec<BTreeSet<usize>>,
    pub valuation: BTreeSet<Fact>,
}

impl KripkeModel {
    pub fn worlds(&self) -> usize {
        self.order.len()
    }

    pub fn leq(&self, w: usize, v: usize) -> bool {
        self.order[w][v]
    }

    fn successors(&self, w: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.worlds()).filter(move |&v| self.order[w][v])
    }

    /// Forcing relation. `Neg` is read as implication into `bot`.
    pub fn forces(&self, w: usize, env: &BTreeMap<String, usize>, f: &Formula) -> Result<bool, KripkeError> {
        if w >= self.worlds() {
            return Err(KripkeError::NoSuchWorld(w));
        }
        Ok(match f {
            Formula::Atom(p, args) => {
                let args = args
                    .iter()
                    .map(|t| match t {
                        Term::Var(x) => env.get(x).copied().ok_or_else(|| KripkeError::Unbound(x.clone())),
                        Term::App(g, _) => Err(KripkeError::FunctionSymbol(g.clone())),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                self.valuation.contains(&Fact { world: w, predicate: p.clone(), args })
            }
            Formula::Bot => false,
            Formula::Top => true,
            Formula::Neg(a) => {
                for v in self.successors(w) {
                    if self.forces(v, env, a)? {
                        return Ok(false);
                    }
                }
                true
            }
            Formula::And(a, b) => self.forces(w, env, a)? && self.forces(w, env, b)?,
            Formula::Or(a, b) => self.forces(w, env, a)? || self.forces(w, env, b)?,
            Formula::Imp(a, b) => {
                for v in self.successors(w) {
                    if self.forces(v, env, a)? && !self.forces(v, env, b)? {
                        return Ok(false);
                    }
                }
                true
            }
            Formula::Forall(x, a) => {
                let mut env = env.clone();
                for v in self.successors(w) {
                    for &d in &self.domains[v] {
                        env.insert(x.clone(), d);
                        if !self.forces(v, &env, a)? {
                            return Ok(false);
                        }
                    }
                }
                true
            }
            Formula::Exists(x, a) => {
                let mut env = env.clone();
                for &d in &self.domains[w] {
                    env.insert(x.clone(), d);
                    if self.forces(w, &env, a)? {
                        return Ok(true);
                    }
                }
                false
            }
        })
    }

    /// Atoms (with arguments) forced at `w`, in printed form.
    pub fn true_atoms(&self, w: usize) -> Vec<String> {
        self.valuation
            .iter()
            .filter(|f| f.world == w)
            .map(|f| {
                if f.args.is_empty() {
                    f.predicate.clone()
                } else {
                    let args: Vec<String> = f.args.iter().map(|a| a.to_string()).collect();
                    format!("{}({})", f.predicate, args.join(","))
                }
            })
            .collect()
    }
}

impl fmt::Display for KripkeModel {
    /// Worlds, immediate successor edges, domains and true atoms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.worlds();
        let mut edges = Vec::new();
        for w in 0..n {
            for v in 0..n {
                let immediate =
                    w != v && self.leq(w, v) && !(0..n).any(|u| u != w && u != v && self.leq(w, u) && self.leq(u, v));
                if immediate {
                    edges.push(format!("w{w} < w{v}"));
                }
            }
        }
        writeln!(f, "order: {}", if edges.is_empty() { "(single world)".into() } else { edges.join(", ") })?;
        for w in 0..n {
            let dom: Vec<String> = self.domains[w].iter().map(|d| d.to_string()).collect();
            let atoms = self.true_atoms(w);
            write!(f, "w{w}: D = {{{}}}  forces: ", dom.join(","))?;
            if atoms.is_empty() {
                write!(f, "-")?;
            } else {
                write!(f, "{}", atoms.join(" "))?;
            }
            if w + 1 < n {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Checks that the order is a preorder, domains grow along it, valuations
/// persist, and every fact only mentions elements of its world.
pub fn check_monotone(m: &KripkeModel) -> bool {
    let n = m.worlds();
    if m.order.iter().any(|row| row.len() != n) || m.domains.len() != n {
        return false;
    }
    for w in 0..n {
        if !m.leq(w, w) {
            return false;
        }
        for v in 0..n {
            for u in 0..n {
                if m.leq(w, v) && m.leq(v, u) && !m.leq(w, u) {
                    return false;
                }
            }
            if m.leq(w, v) && !m.domains[w].is_subset(&m.domains[v]) {
                return false;
            }
        }
    }
    m.valuation.iter().all(|fact| {
        fact.world < n
            && fact.args.iter().all(|d| m.domains[fact.world].contains(d))
            && (0..n)
                .filter(|&v| m.leq(fact.world, v))
                .all(|v| m.valuation.contains(&Fact { world: v, ..fact.clone() }))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FrameCatalog {
    /// Chains, forks (a root below incomparable leaves) and the diamond.
    Standard,
    /// Every rooted partial order, labelled so that `w <= v` implies `w <= v`
    /// as integers.
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBounds {
    pub max_worlds: usize,
    pub max_domain: usize,
    pub catalog: FrameCatalog,
    pub constant_domain: bool,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds { max_worlds: 4, max_domain: 2, catalog: FrameCatalog::Standard, constant_domain: false }
    }
}

/// Frames as `up[w]` masks: the set of worlds above `w`, including `w`.
fn frames(bounds: &SearchBounds) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = Vec::new();
    let mut push = |up: Vec<u32>| {
        if !out.contains(&up) {
            out.push(up);
        }
    };
    for n in 1..=bounds.max_worlds {
        match bounds.catalog {
            FrameCatalog::Standard => {
                // chain 0 < 1 < .. < n-1
                push((0..n).map(|w| ((1u32 << n) - 1) & !((1u32 << w) - 1)).collect());
                if n >= 3 {
                    let mut fork = vec![(1u32 << n) - 1];
                    fork.extend((1..n).map(|w| 1u32 << w));
                    push(fork);
                }
                if n == 4 {
                    push(vec![0b1111, 0b1010, 0b1100, 0b1000]);
                }
            }
            FrameCatalog::Full => {
                let pairs: Vec<(usize, usize)> = (1..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
                for choice in 0u32..(1 << pairs.len()) {
                    // The root is below everything.
                    let mut le: Vec<Vec<bool>> = (0..n).map(|w| (0..n).map(|v| w == v || w == 0).collect()).collect();
                    for (k, &(i, j)) in pairs.iter().enumerate() {
                        le[i][j] = choice >> k & 1 == 1;
                    }
                    let transitive =
                        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(le[a][b] && le[b][c]) || le[a][c])));
                    if transitive {
                        push((0..n).map(|w| (0..n).filter(|&v| le[w][v]).fold(0, |m, v| m | 1 << v)).collect());
                    }
                }
            }
        }
    }
    out
}

/// Domain size per world, nondecreasing along the order.
fn domain_assignments(up: &[u32], bounds: &SearchBounds, needs_domain: bool) -> Vec<Vec<usize>> {
    let n = up.len();
    if !needs_domain {
        return vec![vec![1; n]];
    }
    let mut out = Vec::new();
    let mut sizes = vec![1usize; n];
    loop {
        let monotone = (0..n).all(|w| (0..n).all(|v| up[w] >> v & 1 == 0 || sizes[w] <= sizes[v]));
        let constant = sizes.iter().all(|&s| s == sizes[0]);
        if monotone && (constant || !bounds.constant_domain) {
            out.push(sizes.clone());
        }
        let mut i = 0;
        while i < n && sizes[i] == bounds.max_domain {
            sizes[i] = 1;
            i += 1;
        }
        if i == n {
            break;
        }
        sizes[i] += 1;
    }
    out
}

#[derive(Clone, Debug)]
enum Node {
    Atom(usize, Vec<usize>),
    Bot,
    Top,
    And(Box<Node>, Box<Node>),
    Or(Box<Node>, Box<Node>),
    Imp(Box<Node>, Box<Node>),
    Forall(Box<Node>),
    Exists(Box<Node>),
}

/// A formula with variables resolved to binder depth and predicates to
/// indices.
struct Compiled {
    root: Node,
    arities: Vec<usize>,
    names: Vec<String>,
    quantified: bool,
}

fn compile(f: &Formula) -> Result<Compiled, KripkeError> {
    fn go(
        f: &Formula,
        scope: &mut Vec<String>,
        preds: &mut HashMap<String, usize>,
        arities: &mut Vec<usize>,
        names: &mut Vec<String>,
    ) -> Result<Node, KripkeError> {
        Ok(match f {
            Formula::Atom(p, args) => {
                let idx = *preds.entry(p.clone()).or_insert_with(|| {
                    arities.push(args.len());
                    names.push(p.clone());
                    names.len() - 1
                });
                let slots = args
                    .iter()
                    .map(|t| match t {
                        Term::Var(x) => {
                            scope.iter().rposition(|y| y == x).ok_or_else(|| KripkeError::Unbound(x.clone()))
                        }
                        Term::App(g, _) => Err(KripkeError::FunctionSymbol(g.clone())),
                    })
                    .collect::<Result<_, _>>()?;
                Node::Atom(idx, slots)
            }
            Formula::Bot => Node::Bot,
            Formula::Top => Node::Top,
            Formula::Neg(a) => Node::Imp(Box::new(go(a, scope, preds, arities, names)?), Box::new(Node::Bot)),
            Formula::And(a, b) => Node::And(
                Box::new(go(a, scope, preds, arities, names)?),
                Box::new(go(b, scope, preds, arities, names)?),
            ),
            Formula::Or(a, b) => {
                Node::Or(Box::new(go(a, scope, preds, arities, names)?), Box::new(go(b, scope, preds, arities, names)?))
            }
            Formula::Imp(a, b) => Node::Imp(
                Box::new(go(a, scope, preds, arities, names)?),
                Box::new(go(b, scope, preds, arities, names)?),
            ),
            Formula::Forall(x, a) | Formula::Exists(x, a) => {
                scope.push(x.clone());
                let body = go(a, scope, preds, arities, names);
                scope.pop();
                let body = Box::new(body?);
                if matches!(f, Formula::Forall(..)) {
                    Node::Forall(body)
                } else {
                    Node::Exists(body)
                }
            }
        })
    }
    let mut closed = f.clone();
    for v in f.free_vars().into_iter().rev() {
        closed = Formula::forall(v, closed);
    }
    let mut preds = HashMap::new();
    let mut arities = Vec::new();
    let mut names = Vec::new();
    let root = go(&closed, &mut Vec::new(), &mut preds, &mut arities, &mut names)?;
    let quantified = !closed.is_propositional();
    Ok(Compiled { root, arities, names, quantified })
}

/// One frame with one domain assignment, and the atom instances over it.
struct Layout {
    up: Vec<u32>,
    all: u32,
    sizes: Vec<usize>,
    /// `has[d]`: worlds whose domain contains `d`.
    has: Vec<u32>,
    max_domain: usize,
    offsets: Vec<usize>,
    tuples: Vec<(usize, Vec<usize>)>,
    /// Up-sets available to each instance: only worlds holding all its arguments.
    choices: Vec<Vec<u32>>,
}

fn layouts(c: &Compiled, bounds: &SearchBounds) -> Vec<Layout> {
    let mut out = Vec::new();
    for up in frames(bounds) {
        let n = up.len();
        let all = (1u32 << n) - 1;
        let upsets: Vec<u32> = (0..=all).filter(|&s| (0..n).all(|w| s >> w & 1 == 0 || up[w] & !s == 0)).collect();
        for sizes in domain_assignments(&up, bounds, c.quantified) {
            let max_domain = *sizes.iter().max().unwrap();
            let has: Vec<u32> =
                (0..max_domain).map(|d| (0..n).filter(|&w| sizes[w] > d).fold(0, |m, w| m | 1 << w)).collect();
            let mut offsets = Vec::new();
            let mut tuples = Vec::new();
            for (p, &arity) in c.arities.iter().enumerate() {
                offsets.push(tuples.len());
                for code in 0..max_domain.pow(arity as u32) {
                    let mut args = vec![0; arity];
                    let mut rest = code;
                    for slot in args.iter_mut().rev() {
                        *slot = rest % max_domain;
                        rest /= max_domain;
                    }
                    tuples.push((p, args));
                }
            }
            let choices = tuples
                .iter()
                .map(|(_, args): &(usize, Vec<usize>)| {
                    let allowed = args.iter().fold(all, |m, &d| m & has[d]);
                    upsets.iter().copied().filter(|s| s & !allowed == 0).collect()
                })
                .collect();
            out.push(Layout { up: up.clone(), all, sizes, has, max_domain, offsets, tuples, choices });
        }
    }
    out
}

impl Layout {
    /// Worlds all of whose successors lie in `s`.
    fn box_of(&self, s: u32) -> u32 {
        (0..self.up.len()).filter(|&w| self.up[w] & !s == 0).fold(0, |m, w| m | 1 << w)
    }

    fn instance(&self, pred: usize, args: &[usize]) -> usize {
        self.offsets[pred] + args.iter().fold(0, |acc, &d| acc * self.max_domain + d)
    }

    fn eval(&self, node: &Node, env: &mut Vec<usize>, val: &[u32]) -> u32 {
        match node {
            Node::Atom(p, slots) => {
                let args: Vec<usize> = slots.iter().map(|&s| env[s]).collect();
                val[self.instance(*p, &args)]
            }
            Node::Bot => 0,
            Node::Top => self.all,
            Node::And(a, b) => self.eval(a, env, val) & self.eval(b, env, val),
            Node::Or(a, b) => self.eval(a, env, val) | self.eval(b, env, val),
            Node::Imp(a, b) => {
                let s = !self.eval(a, env, val) | self.eval(b, env, val);
                self.box_of(s & self.all)
            }
            Node::Forall(a) => {
                let mut s = self.all;
                for d in 0..self.max_domain {
                    env.push(d);
                    s &= !self.has[d] | self.eval(a, env, val);
                    env.pop();
                }
                self.box_of(s & self.all)
            }
            Node::Exists(a) => {
                let mut s = 0;
                for d in 0..self.max_domain {
                    env.push(d);
                    s |= self.has[d] & self.eval(a, env, val);
                    env.pop();
                }
                s
            }
        }
    }

    /// Visits every valuation in odometer order until `visit` returns true.
    fn valuations(&self, mut visit: impl FnMut(&[u32]) -> bool) {
        let mut pick = vec![0usize; self.choices.len()];
        let mut val: Vec<u32> = self.choices.iter().map(|c| c[0]).collect();
        loop {
            if visit(&val) {
                return;
            }
            let mut i = 0;
            while i < pick.len() && pick[i] + 1 == self.choices[i].len() {
                pick[i] = 0;
                val[i] = self.choices[i][0];
                i += 1;
            }
            if i == pick.len() {
                return;
            }
            pick[i] += 1;
            val[i] = self.choices[i][pick[i]];
        }
    }

    fn model(&self, val: &[u32], names: &[String]) -> KripkeModel {
        let n = self.up.len();
        let order = (0..n).map(|w| (0..n).map(|v| self.up[w] >> v & 1 == 1).collect()).collect();
        let domains = self.sizes.iter().map(|&s| (0..s).collect()).collect();
        let mut valuation = BTreeSet::new();
        for ((p, args), &mask) in self.tuples.iter().zip(val) {
            for w in 0..n {
                if mask >> w & 1 == 1 {
                    valuation.insert(Fact { world: w, predicate: names[*p].clone(), args: args.clone() });
                }
            }
        }
        KripkeModel { order, domains, valuation }
    }
}

/// A refuting model together with a world that does not force the formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Countermodel {
    pub model: KripkeModel,
    pub world: usize,
}

impl fmt::Display for Countermodel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\nrefuted at w{}", self.model, self.world)
    }
}

fn check_bounds(bounds: &SearchBounds) -> Result<(), KripkeError> {
    if bounds.max_worlds == 0 || bounds.max_worlds > MAX_WORLDS || bounds.max_domain == 0 {
        Err(KripkeError::Bounds)
    } else {
        Ok(())
    }
}

/// Searches for a finite model refuting `f` (read as its universal closure),
/// in a fixed order: frame size, catalog position, domain sizes, valuation.
pub fn find_countermodel(f: &Formula, bounds: &SearchBounds) -> Result<Option<Countermodel>, KripkeError> {
    check_bounds(bounds)?;
    let c = compile(f)?;
    for layout in layouts(&c, bounds) {
        let mut found = None;
        layout.valuations(|val| {
            let forced = layout.eval(&c.root, &mut Vec::new(), val);
            if forced != layout.all {
                let world = (!forced & layout.all).trailing_zeros() as usize;
                found = Some(Countermodel { model: layout.model(val, &c.names), world });
            }
            found.is_some()
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Every model the search would visit for `f`, in search order. Intended
/// for property tests over small bounds.
pub fn enumerate_models(f: &Formula, bounds: &SearchBounds) -> Result<Vec<KripkeModel>, KripkeError> {
    check_bounds(bounds)?;
    let c = compile(f)?;
    let mut out = Vec::new();
    for layout in layouts(&c, bounds) {
        layout.valuations(|val| {
            out.push(layout.model(val, &c.names));
            false
        });
    }
    Ok(out)
}

/// Status attached to every curated entry.
pub const CURATED_STATUS: &str = "infinite-countermodel; not machine-refuted";

/// A schema that is not intuitionistically valid but holds on every finite
/// frame, so the search above can never refute it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CuratedRefutation {
    /// Position in the list of classical-only equivalences.
    pub item: u8,
    /// The failing implication, with `A` unary.
    pub schema: &'static str,
    pub status: &'static str,
    /// Why no finite model refutes it.
    pub note: &'static str,
}

const MAXIMAL_WORLDS: &str = "forcing at a maximal world of a finite frame is classical, and every world \
     lies below one; both sides then agree at each maximal world, which decides them everywhere";

const CURATED: [CuratedRefutation; 2] = [
    CuratedRefutation {
        item: 17,
        schema: "~~(forall x. ~~A(x)) -> ~~(forall x. A(x))",
        status: CURATED_STATUS,
        note: MAXIMAL_WORLDS,
    },
    CuratedRefutation {
        item: 18,
        schema: "~(forall x. A(x)) -> ~~(exists x. ~A(x))",
        status: CURATED_STATUS,
        note: MAXIMAL_WORLDS,
    },
];

pub fn curated_refutations() -> &'static [CuratedRefutation] {
    &CURATED
}

/// The curated entry whose schema is `f`, compared structurally.
pub fn curated_lookup(f: &Formula) -> Option<&'static CuratedRefutation> {
    CURATED.iter().find(|c| crate::syntax::parse(c.schema).is_ok_and(|s| s == *f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse;

    fn p(s: &str) -> Formula {
        parse(s).unwrap()
    }

    fn chain2(domains: [&[usize]; 2], facts: &[(usize, &str, &[usize])]) -> KripkeModel {
        KripkeModel {
            order: vec![vec![true, true], vec![false, true]],
            domains: domains.iter().map(|d| d.iter().copied().collect()).collect(),
            valuation: facts
                .iter()
                .map(|&(w, q, a)| Fact { world: w, predicate: q.into(), args: a.to_vec() })
                .collect(),
        }
    }

    #[test]
    fn increasing_domain_refutes_double_negation_exists() {
        let m = chain2([&[0], &[0, 1]], &[(1, "P", &[1])]);
        assert!(check_monotone(&m));
        let env = BTreeMap::new();
        assert!(m.forces(0, &env, &p("~~exists x. P(x)")).unwrap());
        assert!(!m.forces(0, &env, &p("exists x. ~~P(x)")).unwrap());
    }

    #[test]
    fn fork_refutes_disjunction_of_double_negations() {
        let m = KripkeModel {
            order: vec![vec![true, true, true], vec![false, true, false], vec![false, false, true]],
            domains: vec![BTreeSet::from([0]); 3],
            valuation: [(1, "P"), (2, "Q")]
                .iter()
                .map(|&(w, q)| Fact { world: w, predicate: q.into(), args: vec![] })
                .collect(),
        };
        let env = BTreeMap::new();
        assert!(m.forces(0, &env, &p("~~(~~P | ~~Q)")).unwrap());
        assert!(!m.forces(0, &env, &p("~~P | ~~Q")).unwrap());
    }

    #[test]
    fn single_world_is_classical() {
        let m = KripkeModel {
            order: vec![vec![true]],
            domains: vec![BTreeSet::from([0])],
            valuation: BTreeSet::from([Fact { world: 0, predicate: "P".into(), args: vec![] }]),
        };
        let env = BTreeMap::new();
        assert!(m.forces(0, &env, &p("P | ~P")).unwrap());
        assert!(m.forces(0, &env, &p("~Q")).unwrap());
        assert!(!m.forces(0, &env, &p("P -> Q")).unwrap());
    }

    #[test]
    fn monotonicity_checks() {
        let bad = chain2([&[0], &[0]], &[(0, "P", &[])]);
        assert!(!check_monotone(&bad));
        let empty_below = chain2([&[], &[0]], &[]);
        assert!(check_monotone(&empty_below));
        let shrinking = chain2([&[0, 1], &[0]], &[]);
        assert!(!check_monotone(&shrinking));
    }

    #[test]
    fn unbound_variable_is_an_error() {
        let m = chain2([&[0], &[0]], &[]);
        assert_eq!(m.forces(0, &BTreeMap::new(), &p("P(x)")), Err(KripkeError::Unbound("x".into())));
    }

    #[test]
    fn search_finds_small_countermodels() {
        let b = SearchBounds::default();
        let cm = find_countermodel(&p("~(~~P & ~~Q) -> ~P | ~Q"), &b).unwrap().unwrap();
        assert_eq!(cm.model.worlds(), 3);
        assert!(!cm.model.forces(cm.world, &BTreeMap::new(), &p("~(~~P & ~~Q) -> ~P | ~Q")).unwrap());

        let item20 = p("~~(exists x. ~~P(x)) -> exists x. ~~P(x)");
        let cm = find_countermodel(&item20, &b).unwrap().unwrap();
        assert!(cm.model.worlds() <= 2 && cm.model.domains.iter().all(|d| d.len() <= 2));

        let excluded_middle = find_countermodel(&p("P | ~P"), &b).unwrap().unwrap();
        assert_eq!(excluded_middle.model.worlds(), 2);
    }

    #[test]
    fn two_world_constant_domains_miss_the_refutation() {
        let b = SearchBounds { max_worlds: 2, constant_domain: true, ..SearchBounds::default() };
        let f = p("~~(exists x. ~~P(x)) -> exists x. ~~P(x)");
        assert!(find_countermodel(&f, &b).unwrap().is_none());
    }

    #[test]
    fn valid_schemas_have_no_countermodel() {
        let full = SearchBounds { catalog: FrameCatalog::Full, ..SearchBounds::default() };
        for s in
            ["~~(~~P & ~~Q) -> ~~(P & Q)", "~~(P & Q) -> ~~(~~P & ~~Q)", "~~(forall x. ~~P(x)) -> ~~(forall x. P(x))"]
        {
            assert!(find_countermodel(&p(s), &full).unwrap().is_none(), "{s}");
        }
    }

    #[test]
    fn enumerated_models_are_monotone() {
        let b = SearchBounds { max_worlds: 3, catalog: FrameCatalog::Full, ..SearchBounds::default() };
        let models = enumerate_models(&p("P(x) | Q"), &b).unwrap();
        assert!(!models.is_empty());
        assert!(models.iter().all(check_monotone));
    }

    #[test]
    fn curated_schemas_survive_full_search() {
        let b = SearchBounds { catalog: FrameCatalog::Full, max_domain: 3, ..SearchBounds::default() };
        for c in curated_refutations() {
            let f = p(c.schema);
            assert_eq!(curated_lookup(&f), Some(c));
            assert!(find_countermodel(&f, &b).unwrap().is_none(), "{}", c.schema);
        }
    }

    #[test]
    fn diagram_lists_edges_and_atoms() {
        let m = chain2([&[0], &[0, 1]], &[(1, "P", &[1])]);
        assert_eq!(m.to_string(), "order: w0 < w1\nw0: D = {0}  forces: -\nw1: D = {0,1}  forces: P(1)");
    }
}
