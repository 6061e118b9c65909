//! ASCII concrete syntax.
//!
//! ```text
//! formula := unary ( '&' unary )*  ( '|' ... )*  ( '->' formula )?
//! unary   := '~' unary | ('forall' | 'exists') ident '.' formula | primary
//! primary := 'bot' | 'top' | ident [ '(' term, ... ')' ] | '(' formula ')'
//! term    := ident [ '(' term, ... ')' ]
//! ```
//!
//! Precedence is `~` > `&` > `|` > `->`; `&` and `|` associate to the left,
//! `->` to the right, and a quantifier body extends as far right as possible.
//! A bare identifier in term position is a variable; constants are written
//! `c()`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::formula::{Formula, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("arity mismatch for `{symbol}`: used with {first} and {second} arguments")]
    Arity { symbol: String, first: usize, second: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Tilde,
    Amp,
    Bar,
    Arrow,
    Dot,
    Comma,
    LParen,
    RParen,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Tilde => f.write_str("`~`"),
            Tok::Amp => f.write_str("`&`"),
            Tok::Bar => f.write_str("`|`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::Dot => f.write_str("`.`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

const KEYWORDS: [&str; 4] = ["forall", "exists", "bot", "top"];

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'~' => Tok::Tilde,
            b'&' => Tok::Amp,
            b'|' => Tok::Bar,
            b'.' => Tok::Dot,
            b',' => Tok::Comma,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Arrow
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i + 1 < bytes.len()
                    && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_' || bytes[i + 1] == b'\'')
                {
                    i += 1;
                }
                Tok::Ident(text[start..=i].to_string())
            }
            _ => {
                return Err(ParseError::Syntax {
                    position: start,
                    message: format!("unexpected character `{}`", text[start..].chars().next().unwrap()),
                })
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::Eof, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { position: self.offset(), message: message.into() })
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected {tok}, found {}", self.peek()))
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()) => {
                self.bump();
                Ok(s)
            }
            t => self.error(format!("expected identifier, found {t}")),
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.formula()?;
            return Ok(Formula::imp(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.conjunction()?;
        while *self.peek() == Tok::Bar {
            self.bump();
            let rhs = self.conjunction()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Tilde => {
                self.bump();
                Ok(Formula::neg(self.unary()?))
            }
            Tok::Ident(kw) if kw == "forall" || kw == "exists" => {
                self.bump();
                let var = self.ident()?;
                self.expect(Tok::Dot)?;
                let body = self.formula()?;
                Ok(if kw == "forall" { Formula::forall(var, body) } else { Formula::exists(var, body) })
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let f = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            Tok::Ident(kw) if kw == "bot" => {
                self.bump();
                Ok(Formula::Bot)
            }
            Tok::Ident(kw) if kw == "top" => {
                self.bump();
                Ok(Formula::Top)
            }
            Tok::Ident(_) => {
                let name = self.ident()?;
                let args = if *self.peek() == Tok::LParen { self.arguments()? } else { Vec::new() };
                Ok(Formula::Atom(name, args))
            }
            t => self.error(format!("expected a formula, found {t}")),
        }
    }

    fn arguments(&mut self) -> Result<Vec<Term>, ParseError> {
        self.expect(Tok::LParen)?;
        let mut args = Vec::new();
        if *self.peek() != Tok::RParen {
            loop {
                args.push(self.term()?);
                if *self.peek() == Tok::Comma {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::RParen)?;
        Ok(args)
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let name = self.ident()?;
        if *self.peek() == Tok::LParen {
            Ok(Term::App(name, self.arguments()?))
        } else {
            Ok(Term::Var(name))
        }
    }
}

/// Parses a formula, checks symbol arities, and renames any binder that
/// shadows an enclosing binder of the same name.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut parser = Parser { toks: lex(text)?, pos: 0 };
    let f = parser.formula()?;
    if *parser.peek() != Tok::Eof {
        return parser.error(format!("unexpected {}", parser.peek()));
    }
    check_arities(&f)?;
    Ok(rename_shadowed(&f))
}

fn check_arities(f: &Formula) -> Result<(), ParseError> {
    fn term(t: &Term, funcs: &mut HashMap<String, usize>) -> Result<(), ParseError> {
        if let Term::App(name, args) = t {
            record(funcs, name, args.len())?;
            for a in args {
                term(a, funcs)?;
            }
        }
        Ok(())
    }
    fn record(table: &mut HashMap<String, usize>, name: &str, n: usize) -> Result<(), ParseError> {
        match table.get(name) {
            Some(&m) if m != n => Err(ParseError::Arity { symbol: name.to_string(), first: m, second: n }),
            _ => {
                table.insert(name.to_string(), n);
                Ok(())
            }
        }
    }
    let mut preds = HashMap::new();
    let mut funcs = HashMap::new();
    let mut result = Ok(());
    f.visit(&mut |g| {
        if result.is_err() {
            return;
        }
        if let Formula::Atom(p, args) = g {
            result = record(&mut preds, p, args.len());
            for a in args {
                if result.is_ok() {
                    result = term(a, &mut funcs);
                }
            }
        }
    });
    result
}

fn rename_shadowed(f: &Formula) -> Formula {
    let mut used: BTreeSet<String> = f.names();
    let mut scope: Vec<(String, String)> = Vec::new();
    rename_rec(f, &mut scope, &mut used)
}

fn rename_term(t: &Term, scope: &[(String, String)]) -> Term {
    match t {
        Term::Var(v) => Term::Var(
            scope.iter().rev().find(|(orig, _)| orig == v).map(|(_, new)| new.clone()).unwrap_or_else(|| v.clone()),
        ),
        Term::App(g, args) => Term::App(g.clone(), args.iter().map(|a| rename_term(a, scope)).collect()),
    }
}

fn rename_rec(f: &Formula, scope: &mut Vec<(String, String)>, used: &mut BTreeSet<String>) -> Formula {
    match f {
        Formula::Atom(p, args) => Formula::Atom(p.clone(), args.iter().map(|t| rename_term(t, scope)).collect()),
        Formula::Bot | Formula::Top => f.clone(),
        Formula::Neg(a) => Formula::neg(rename_rec(a, scope, used)),
        Formula::And(a, b) => Formula::and(rename_rec(a, scope, used), rename_rec(b, scope, used)),
        Formula::Or(a, b) => Formula::or(rename_rec(a, scope, used), rename_rec(b, scope, used)),
        Formula::Imp(a, b) => Formula::imp(rename_rec(a, scope, used), rename_rec(b, scope, used)),
        Formula::Forall(x, a) | Formula::Exists(x, a) => {
            let shadows = scope.iter().any(|(orig, _)| orig == x);
            let name = if shadows { fresh_name(x, used) } else { x.clone() };
            scope.push((x.clone(), name.clone()));
            let body = rename_rec(a, scope, used);
            scope.pop();
            match f {
                Formula::Forall(..) => Formula::forall(name, body),
                _ => Formula::exists(name, body),
            }
        }
    }
}

/// A name derived from `base` that does not occur in `used`; it is added to
/// `used` before returning.
pub fn fresh_name(base: &str, used: &mut BTreeSet<String>) -> String {
    let name = (1..).map(|i| format!("{base}{i}")).find(|n| !used.contains(n)).unwrap();
    used.insert(name.clone());
    name
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::App(g, args) => {
                write!(f, "{g}(")?;
                write_args(f, args)?;
                f.write_str(")")
            }
        }
    }
}

fn write_args(f: &mut fmt::Formatter<'_>, args: &[Term]) -> fmt::Result {
    for (i, a) in args.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{a}")?;
    }
    Ok(())
}

// Binding strength used by the printer.
const PREC_IMP: u8 = 1;
const PREC_OR: u8 = 2;
const PREC_AND: u8 = 3;
const PREC_UNARY: u8 = 4;

fn prec(f: &Formula) -> u8 {
    match f {
        Formula::Imp(..) => PREC_IMP,
        Formula::Or(..) => PREC_OR,
        Formula::And(..) => PREC_AND,
        _ => PREC_UNARY,
    }
}

/// `min` is the weakest binding strength allowed without parentheses;
/// `rightmost` says whether nothing follows this subformula in its
/// enclosing parenthesised region, which decides whether a quantifier may
/// run unparenthesised to the right.
fn write_formula(out: &mut String, f: &Formula, min: u8, rightmost: bool) {
    if prec(f) < min {
        out.push('(');
        write_formula(out, f, 0, true);
        out.push(')');
        return;
    }
    match f {
        Formula::Atom(p, args) => {
            out.push_str(p);
            if !args.is_empty() {
                out.push('(');
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push_str(&a.to_string());
                }
                out.push(')');
            }
        }
        Formula::Bot => out.push_str("bot"),
        Formula::Top => out.push_str("top"),
        Formula::Neg(a) => {
            out.push('~');
            write_formula(out, a, PREC_UNARY, rightmost);
        }
        Formula::And(a, b) => {
            write_formula(out, a, PREC_AND, false);
            out.push_str(" & ");
            write_formula(out, b, PREC_AND + 1, rightmost);
        }
        Formula::Or(a, b) => {
            write_formula(out, a, PREC_OR, false);
            out.push_str(" | ");
            write_formula(out, b, PREC_OR + 1, rightmost);
        }
        Formula::Imp(a, b) => {
            write_formula(out, a, PREC_IMP + 1, false);
            out.push_str(" -> ");
            write_formula(out, b, PREC_IMP, rightmost);
        }
        Formula::Forall(x, a) | Formula::Exists(x, a) => {
            let kw = if matches!(f, Formula::Forall(..)) { "forall" } else { "exists" };
            if !rightmost {
                out.push('(');
            }
            out.push_str(kw);
            out.push(' ');
            out.push_str(x);
            out.push_str(". ");
            write_formula(out, a, 0, true);
            if !rightmost {
                out.push(')');
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        write_formula(&mut s, self, 0, true);
        f.write_str(&s)
    }
}

impl std::str::FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Formula {
        parse(s).unwrap()
    }

    #[test]
    fn grammar_examples() {
        let pq = Formula::and(Formula::atom("P"), Formula::atom("Q"));
        assert_eq!(p("~~(P & Q)"), Formula::dneg(pq));
        assert_eq!(
            p("forall x. P(x) -> Q"),
            Formula::forall("x", Formula::imp(Formula::pred("P", vec![Term::var("x")]), Formula::atom("Q")))
        );
        assert_eq!(
            p("P -> Q -> R"),
            Formula::imp(Formula::atom("P"), Formula::imp(Formula::atom("Q"), Formula::atom("R")))
        );
    }

    #[test]
    fn printer_examples() {
        assert_eq!(Formula::neg(Formula::atom("P")).to_string(), "~P");
        let f = Formula::and(Formula::or(Formula::atom("P"), Formula::atom("Q")), Formula::atom("R"));
        assert_eq!(f.to_string(), "(P | Q) & R");
        let g = Formula::forall("x", Formula::dneg(Formula::pred("P", vec![Term::var("x")])));
        assert_eq!(g.to_string(), "forall x. ~~P(x)");
    }

    #[test]
    fn quantifiers_in_operand_position_are_parenthesised() {
        let px = Formula::pred("P", vec![Term::var("x")]);
        let f = Formula::and(Formula::forall("x", px.clone()), Formula::atom("Q"));
        assert_eq!(f.to_string(), "(forall x. P(x)) & Q");
        let g = Formula::and(Formula::atom("Q"), Formula::forall("x", px.clone()));
        assert_eq!(g.to_string(), "Q & forall x. P(x)");
        let h = Formula::imp(Formula::neg(Formula::exists("x", px)), Formula::atom("Q"));
        assert_eq!(h.to_string(), "~(exists x. P(x)) -> Q");
        assert_eq!(p(&h.to_string()), h);
    }

    #[test]
    fn shadowed_binders_are_renamed() {
        let f = p("forall x. exists x. P(x)");
        assert_eq!(f.to_string(), "forall x. exists x1. P(x1)");
        let g = p("forall x. P(x) & exists x. Q(x, x1)");
        assert_eq!(g.to_string(), "forall x. P(x) & exists x2. Q(x2,x1)");
    }

    #[test]
    fn constants_and_functions() {
        let f = p("P(f(x, c()), y)");
        assert_eq!(f.to_string(), "P(f(x,c()),y)");
        assert_eq!(p(&f.to_string()), f);
    }

    #[test]
    fn errors_carry_positions() {
        match parse("P & & Q") {
            Err(ParseError::Syntax { position, .. }) => assert_eq!(position, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse("P(x) & P(x, y)"), Err(ParseError::Arity { .. })));
        assert!(matches!(parse("P $ Q"), Err(ParseError::Syntax { position: 2, .. })));
        assert!(parse("forall . P").is_err());
        assert!(parse("(P").is_err());
    }
}
