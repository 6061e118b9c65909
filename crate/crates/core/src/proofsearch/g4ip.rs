//! Contraction-free intuitionistic sequent calculus (G4ip).
//!
//! Formulas are hash-consed into an arena so that antecedents are sorted
//! vectors of ids and whole sequents can be memoised. Every rule except the
//! right disjunction rules and the nested-implication left rule is
//! invertible and applied eagerly.

use std::collections::HashMap;

use crate::formula::Formula;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct Id(u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Node {
    Atom(u32),
    Bot,
    Top,
    And(Id, Id),
    Or(Id, Id),
    Imp(Id, Id),
}

/// One search instance. The memo table lives and dies with it.
#[derive(Default)]
pub(crate) struct G4ip {
    nodes: Vec<Node>,
    index: HashMap<Node, Id>,
    atoms: HashMap<String, u32>,
    memo: HashMap<(Vec<Id>, Id), Option<usize>>,
}

impl G4ip {
    fn intern(&mut self, node: Node) -> Id {
        if let Some(&id) = self.index.get(&node) {
            return id;
        }
        let id = Id(self.nodes.len() as u32);
        self.nodes.push(node);
        self.index.insert(node, id);
        id
    }

    fn node(&self, id: Id) -> Node {
        self.nodes[id.0 as usize]
    }

    /// Interns a quantifier-free formula; `Neg` is read as `-> bot`.
    pub(crate) fn add(&mut self, f: &Formula) -> Id {
        let node = match f {
            Formula::Atom(..) => {
                let key = f.to_string();
                let next = self.atoms.len() as u32;
                Node::Atom(*self.atoms.entry(key).or_insert(next))
            }
            Formula::Bot => Node::Bot,
            Formula::Top => Node::Top,
            Formula::Neg(a) => {
                let a = self.add(a);
                let bot = self.intern(Node::Bot);
                Node::Imp(a, bot)
            }
            Formula::And(a, b) => Node::And(self.add(a), self.add(b)),
            Formula::Or(a, b) => Node::Or(self.add(a), self.add(b)),
            Formula::Imp(a, b) => Node::Imp(self.add(a), self.add(b)),
            Formula::Forall(..) | Formula::Exists(..) => {
                panic!("G4ip only handles quantifier-free formulas")
            }
        };
        self.intern(node)
    }

    /// Returns the height of a proof of `=> goal`, if one exists.
    pub(crate) fn prove_goal(&mut self, goal: Id) -> Option<usize> {
        self.prove(Vec::new(), goal)
    }

    fn prove(&mut self, mut gamma: Vec<Id>, goal: Id) -> Option<usize> {
        gamma.sort_unstable();
        gamma.dedup();
        let key = (gamma, goal);
        if let Some(&r) = self.memo.get(&key) {
            return r;
        }
        let r = self.search(key.0.clone(), goal);
        self.memo.insert(key, r);
        r
    }

    fn with(gamma: &[Id], skip: usize, extra: &[Id]) -> Vec<Id> {
        let mut out: Vec<Id> = gamma.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &g)| g).collect();
        out.extend_from_slice(extra);
        out
    }

    fn search(&mut self, gamma: Vec<Id>, goal: Id) -> Option<usize> {
        // Invertible left rules.
        for (i, &h) in gamma.iter().enumerate() {
            match self.node(h) {
                Node::Bot => return Some(0),
                Node::Top => return self.prove(Self::with(&gamma, i, &[]), goal),
                Node::And(a, b) => return self.prove(Self::with(&gamma, i, &[a, b]), goal).map(|d| d + 1),
                Node::Or(a, b) => {
                    let left = self.prove(Self::with(&gamma, i, &[a]), goal)?;
                    let right = self.prove(Self::with(&gamma, i, &[b]), goal)?;
                    return Some(left.max(right) + 1);
                }
                Node::Imp(a, b) => {
                    let replacement: Option<Vec<Id>> = match self.node(a) {
                        Node::Bot => Some(vec![]),
                        Node::Top => Some(vec![b]),
                        Node::Atom(_) if gamma.binary_search(&a).is_ok() => Some(vec![b]),
                        Node::And(c, d) => {
                            let inner = self.intern(Node::Imp(d, b));
                            Some(vec![self.intern(Node::Imp(c, inner))])
                        }
                        Node::Or(c, d) => {
                            let cb = self.intern(Node::Imp(c, b));
                            let db = self.intern(Node::Imp(d, b));
                            Some(vec![cb, db])
                        }
                        _ => None,
                    };
                    if let Some(extra) = replacement {
                        return self.prove(Self::with(&gamma, i, &extra), goal).map(|d| d + 1);
                    }
                }
                Node::Atom(_) => {}
            }
        }

        // Axioms and invertible right rules.
        match self.node(goal) {
            Node::Top => return Some(0),
            _ if gamma.binary_search(&goal).is_ok() => return Some(0),
            Node::And(a, b) => {
                let left = self.prove(gamma.clone(), a)?;
                let right = self.prove(gamma, b)?;
                return Some(left.max(right) + 1);
            }
            Node::Imp(a, b) => {
                let mut g = gamma;
                g.push(a);
                return self.prove(g, b).map(|d| d + 1);
            }
            _ => {}
        }

        // Non-invertible choices.
        if let Node::Or(a, b) = self.node(goal) {
            if let Some(d) = self.prove(gamma.clone(), a) {
                return Some(d + 1);
            }
            if let Some(d) = self.prove(gamma.clone(), b) {
                return Some(d + 1);
            }
        }
        for (i, &h) in gamma.iter().enumerate() {
            if let Node::Imp(a, b) = self.node(h) {
                if let Node::Imp(_, d) = self.node(a) {
                    let db = self.intern(Node::Imp(d, b));
                    let Some(left) = self.prove(Self::with(&gamma, i, &[db]), a) else {
                        continue;
                    };
                    if let Some(right) = self.prove(Self::with(&gamma, i, &[b]), goal) {
                        return Some(left.max(right) + 1);
                    }
                }
            }
        }
        None
    }
}
