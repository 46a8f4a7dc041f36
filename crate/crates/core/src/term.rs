//! First-order terms and their text syntax.
//!
//! ```text
//! term := VAR | CONST | INT | FUNCTOR '(' term (',' term)* ')'
//! VAR  := [A-Z][A-Za-z0-9_]*
//! CONST, FUNCTOR := [a-z][a-z0-9_]*
//! INT  := [0-9]+
//! ```
//!
//! Parsing, printing and dropping are all iterative, so terms nested
//! arbitrarily deep never overflow the call stack.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::error::ParseError;
use crate::nat::Nat;

/// An atomic constant: a lowercase symbol or a non-negative integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Constant {
    Symbol(String),
    Int(Nat),
}

#[derive(Debug)]
pub enum Term {
    Var(String),
    Const(Constant),
    /// Functor applied to one or more arguments.
    Compound(String, Vec<Term>),
}

/// A leaf payload of a term's content list: a variable, or a constant
/// (functor names appear as symbol constants).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Leaf {
    Var(String),
    Const(Constant),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Self {
        Term::Var(name.into())
    }

    pub fn sym(name: impl Into<String>) -> Self {
        Term::Const(Constant::Symbol(name.into()))
    }

    pub fn int(v: impl Into<Nat>) -> Self {
        Term::Const(Constant::Int(v.into()))
    }

    pub fn app(functor: impl Into<String>, args: Vec<Term>) -> Self {
        debug_assert!(!args.is_empty(), "compound terms need arguments");
        Term::Compound(functor.into(), args)
    }

    pub fn is_compound(&self) -> bool {
        matches!(self, Term::Compound(..))
    }

    /// Number of variable, constant and compound nodes.
    pub fn node_count(&self) -> usize {
        let mut count = 0;
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            count += 1;
            if let Term::Compound(_, args) = t {
                stack.extend(args);
            }
        }
        count
    }

    /// The term itself as a leaf, if it is not compound.
    pub fn as_leaf(&self) -> Option<Leaf> {
        match self {
            Term::Var(v) => Some(Leaf::Var(v.clone())),
            Term::Const(c) => Some(Leaf::Const(c.clone())),
            Term::Compound(..) => None,
        }
    }
}

impl Drop for Term {
    fn drop(&mut self) {
        let Term::Compound(_, args) = self else {
            return;
        };
        let mut pending = std::mem::take(args);
        while let Some(mut t) = pending.pop() {
            if let Term::Compound(_, args) = &mut t {
                pending.append(args);
            }
        }
    }
}

impl PartialEq for Term {
    fn eq(&self, other: &Self) -> bool {
        let mut pairs = vec![(self, other)];
        while let Some(pair) = pairs.pop() {
            match pair {
                (Term::Var(a), Term::Var(b)) if a == b => {}
                (Term::Const(a), Term::Const(b)) if a == b => {}
                (Term::Compound(f, xs), Term::Compound(g, ys))
                    if f == g && xs.len() == ys.len() =>
                {
                    pairs.extend(xs.iter().zip(ys));
                }
                _ => return false,
            }
        }
        true
    }
}

impl Eq for Term {}

impl Hash for Term {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            std::mem::discriminant(t).hash(state);
            match t {
                Term::Var(v) => v.hash(state),
                Term::Const(c) => c.hash(state),
                Term::Compound(f, args) => {
                    f.hash(state);
                    args.len().hash(state);
                    stack.extend(args.iter().rev());
                }
            }
        }
    }
}

impl Clone for Term {
    fn clone(&self) -> Self {
        enum Step<'a> {
            Copy(&'a Term),
            Build(&'a str, usize),
        }
        let mut steps = vec![Step::Copy(self)];
        let mut done: Vec<Term> = Vec::new();
        while let Some(step) = steps.pop() {
            match step {
                Step::Copy(Term::Var(v)) => done.push(Term::Var(v.clone())),
                Step::Copy(Term::Const(c)) => done.push(Term::Const(c.clone())),
                Step::Copy(Term::Compound(f, args)) => {
                    steps.push(Step::Build(f, args.len()));
                    steps.extend(args.iter().rev().map(Step::Copy));
                }
                Step::Build(f, arity) => {
                    let args = done.split_off(done.len() - arity);
                    done.push(Term::Compound(f.to_owned(), args));
                }
            }
        }
        done.pop().expect("one copy")
    }
}

impl From<Leaf> for Term {
    fn from(leaf: Leaf) -> Self {
        match leaf {
            Leaf::Var(v) => Term::Var(v),
            Leaf::Const(c) => Term::Const(c),
        }
    }
}

impl fmt::Display for Constant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constant::Symbol(s) => f.write_str(s),
            Constant::Int(n) => write!(f, "{n}"),
        }
    }
}

impl fmt::Display for Leaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Leaf::Var(v) => f.write_str(v),
            Leaf::Const(c) => c.fmt(f),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        enum Item<'a> {
            Term(&'a Term),
            Text(&'static str),
        }
        let mut stack = vec![Item::Term(self)];
        while let Some(item) = stack.pop() {
            match item {
                Item::Text(s) => f.write_str(s)?,
                Item::Term(Term::Var(v)) => f.write_str(v)?,
                Item::Term(Term::Const(c)) => c.fmt(f)?,
                Item::Term(Term::Compound(functor, args)) => {
                    f.write_str(functor)?;
                    f.write_str("(")?;
                    stack.push(Item::Text(")"));
                    for (i, arg) in args.iter().enumerate().rev() {
                        stack.push(Item::Term(arg));
                        if i > 0 {
                            stack.push(Item::Text(","));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Canonical text of a term: no whitespace, comma-separated arguments.
pub fn print_term(t: &Term) -> String {
    t.to_string()
}

pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    Parser::new(text).term()
}

impl FromStr for Term {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_term(s)
    }
}

/// Parse a comma-separated list of leaf tokens, e.g. `f,a,X,42`. The empty
/// string (or all whitespace) is the empty list.
pub fn parse_leaves(text: &str) -> Result<Vec<Leaf>, ParseError> {
    let mut p = Parser::new(text);
    let mut out = Vec::new();
    if p.peek()?.1 == Tok::Eof {
        return Ok(out);
    }
    loop {
        let (pos, tok) = p.next()?;
        out.push(match tok {
            Tok::Var(v) => Leaf::Var(v.to_owned()),
            Tok::Sym(s) => Leaf::Const(Constant::Symbol(s.to_owned())),
            Tok::Int(n) => Leaf::Const(Constant::Int(n)),
            _ => return Err(ParseError::new(pos, "expected an atom")),
        });
        match p.next()? {
            (_, Tok::Comma) => {}
            (_, Tok::Eof) => return Ok(out),
            (pos, _) => return Err(ParseError::new(pos, "expected ',' or end of input")),
        }
    }
}

pub fn print_leaves(leaves: &[Leaf]) -> String {
    leaves
        .iter()
        .map(Leaf::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub(crate) fn is_var_name(s: &str) -> bool {
    let mut cs = s.chars();
    cs.next().is_some_and(|c| c.is_ascii_uppercase())
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn is_symbol_name(s: &str) -> bool {
    let mut cs = s.chars();
    cs.next().is_some_and(|c| c.is_ascii_lowercase())
        && cs.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

#[derive(Debug, PartialEq)]
enum Tok<'a> {
    Var(&'a str),
    Sym(&'a str),
    Int(Nat),
    Open,
    Close,
    Comma,
    Eof,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Result<(usize, Tok<'a>), ParseError> {
        let save = self.pos;
        let tok = self.next();
        self.pos = save;
        tok
    }

    fn next(&mut self) -> Result<(usize, Tok<'a>), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let Some(c) = rest.chars().next() else {
            return Ok((start, Tok::Eof));
        };
        let word_len =
            |pred: fn(char) -> bool| rest.find(|ch: char| !pred(ch)).unwrap_or(rest.len());
        let tok = match c {
            '(' => {
                self.pos += 1;
                Tok::Open
            }
            ')' => {
                self.pos += 1;
                Tok::Close
            }
            ',' => {
                self.pos += 1;
                Tok::Comma
            }
            'A'..='Z' => {
                let len = word_len(|ch| ch.is_ascii_alphanumeric() || ch == '_');
                self.pos += len;
                Tok::Var(&rest[..len])
            }
            'a'..='z' => {
                let len =
                    word_len(|ch| ch.is_ascii_lowercase() || ch.is_ascii_digit() || ch == '_');
                self.pos += len;
                Tok::Sym(&rest[..len])
            }
            '0'..='9' => {
                let len = word_len(|ch| ch.is_ascii_digit());
                self.pos += len;
                Tok::Int(rest[..len].parse().expect("decimal digits"))
            }
            other => {
                return Err(ParseError::new(
                    start,
                    format!("unexpected character {other:?}"),
                ))
            }
        };
        Ok((start, tok))
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut frames: Vec<(String, Vec<Term>)> = Vec::new();
        loop {
            let (pos, tok) = self.next()?;
            let mut done = match tok {
                Tok::Var(v) => Term::Var(v.to_owned()),
                Tok::Int(n) => Term::Const(Constant::Int(n)),
                Tok::Sym(s) => {
                    if self.peek()?.1 == Tok::Open {
                        self.next()?;
                        if let (p, Tok::Close) = self.peek()? {
                            return Err(ParseError::new(p, "empty argument list"));
                        }
                        frames.push((s.to_owned(), Vec::new()));
                        continue;
                    }
                    Term::Const(Constant::Symbol(s.to_owned()))
                }
                Tok::Eof => return Err(ParseError::new(pos, "unexpected end of input")),
                _ => return Err(ParseError::new(pos, "expected a term")),
            };
            loop {
                let Some((_, args)) = frames.last_mut() else {
                    return match self.next()? {
                        (_, Tok::Eof) => Ok(done),
                        (p, _) => Err(ParseError::new(p, "trailing input after term")),
                    };
                };
                args.push(done);
                match self.next()? {
                    (_, Tok::Comma) => break,
                    (_, Tok::Close) => {
                        let (functor, args) = frames.pop().expect("frame present");
                        done = Term::Compound(functor, args);
                    }
                    (p, Tok::Eof) => return Err(ParseError::new(p, "unclosed argument list")),
                    (p, _) => return Err(ParseError::new(p, "expected ',' or ')'")),
                }
            }
        }
    }
}
