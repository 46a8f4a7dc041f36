//! Finite signatures: ordered variables, constants and functor/arity pairs.
//!
//! Positions in each list define the code ranges, so order matters. The
//! text form has one declaration per line:
//!
//! ```text
//! # comment
//! vars: X Y
//! consts: a b
//! funs: f/2 g/1
//! ```

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::SignatureError;
use crate::term::{is_symbol_name, is_var_name, Constant};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functor {
    pub name: String,
    pub arity: usize,
}

impl Functor {
    pub fn new(name: impl Into<String>, arity: usize) -> Self {
        Self {
            name: name.into(),
            arity,
        }
    }
}

impl fmt::Display for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.name, self.arity)
    }
}

/// A validated signature with index maps for encoding.
#[derive(Debug, Clone)]
pub struct Signature {
    vars: Vec<String>,
    consts: Vec<Constant>,
    funs: Vec<Functor>,
    var_index: HashMap<String, usize>,
    const_index: HashMap<Constant, usize>,
    fun_index: HashMap<(String, usize), usize>,
}

impl PartialEq for Signature {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.consts == other.consts && self.funs == other.funs
    }
}

impl Eq for Signature {}

/// Check every signature invariant, naming the first one violated.
pub fn validate_signature(
    vars: &[String],
    consts: &[Constant],
    funs: &[Functor],
) -> Result<(), SignatureError> {
    if vars.is_empty() && consts.is_empty() {
        return Err(SignatureError::NoLeaves);
    }
    for v in vars {
        if !is_var_name(v) {
            return Err(SignatureError::BadName {
                kind: "variable",
                name: v.clone(),
            });
        }
    }
    for c in consts {
        if let Constant::Symbol(s) = c {
            if !is_symbol_name(s) {
                return Err(SignatureError::BadName {
                    kind: "constant",
                    name: s.clone(),
                });
            }
        }
    }
    for f in funs {
        if !is_symbol_name(&f.name) {
            return Err(SignatureError::BadName {
                kind: "functor",
                name: f.name.clone(),
            });
        }
        if f.arity == 0 {
            return Err(SignatureError::ZeroArity(f.name.clone()));
        }
    }
    first_duplicate(vars, "variable", String::clone)?;
    first_duplicate(consts, "constant", Constant::to_string)?;
    first_duplicate(funs, "functor", Functor::to_string)?;
    Ok(())
}

fn first_duplicate<T: PartialEq>(
    items: &[T],
    kind: &'static str,
    show: fn(&T) -> String,
) -> Result<(), SignatureError> {
    for (i, x) in items.iter().enumerate() {
        if items[..i].contains(x) {
            return Err(SignatureError::Duplicate {
                kind,
                name: show(x),
            });
        }
    }
    Ok(())
}

impl Signature {
    pub fn new(
        vars: Vec<String>,
        consts: Vec<Constant>,
        funs: Vec<Functor>,
    ) -> Result<Self, SignatureError> {
        validate_signature(&vars, &consts, &funs)?;
        let var_index = vars.iter().cloned().zip(0..).collect();
        let const_index = consts.iter().cloned().zip(0..).collect();
        let fun_index = funs
            .iter()
            .map(|f| (f.name.clone(), f.arity))
            .zip(0..)
            .collect();
        Ok(Self {
            vars,
            consts,
            funs,
            var_index,
            const_index,
            fun_index,
        })
    }

    /// Build from symbol names; integer-looking constants become integers.
    /// Panics on an invalid signature, so only suitable for fixed inputs.
    pub fn from_names(vars: &[&str], consts: &[&str], funs: &[(&str, usize)]) -> Self {
        Self::new(
            vars.iter().map(|v| v.to_string()).collect(),
            consts.iter().map(|c| parse_constant(c)).collect(),
            funs.iter().map(|&(n, a)| Functor::new(n, a)).collect(),
        )
        .expect("valid signature")
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn consts(&self) -> &[Constant] {
        &self.consts
    }

    pub fn funs(&self) -> &[Functor] {
        &self.funs
    }

    /// LV
    pub fn var_count(&self) -> usize {
        self.vars.len()
    }

    /// LC
    pub fn const_count(&self) -> usize {
        self.consts.len()
    }

    /// LF
    pub fn fun_count(&self) -> usize {
        self.funs.len()
    }

    /// LVC = LV + LC, the number of leaf codes.
    pub fn leaf_count(&self) -> usize {
        self.vars.len() + self.consts.len()
    }

    pub fn var_position(&self, name: &str) -> Option<usize> {
        self.var_index.get(name).copied()
    }

    pub fn const_position(&self, c: &Constant) -> Option<usize> {
        self.const_index.get(c).copied()
    }

    pub fn fun_position(&self, name: &str, arity: usize) -> Option<usize> {
        self.fun_index.get(&(name.to_owned(), arity)).copied()
    }
}

fn parse_constant(s: &str) -> Constant {
    match s.parse() {
        Ok(n) if s.bytes().all(|b| b.is_ascii_digit()) => Constant::Int(n),
        _ => Constant::Symbol(s.to_owned()),
    }
}

impl FromStr for Signature {
    type Err = SignatureError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut vars: Option<Vec<String>> = None;
        let mut consts: Option<Vec<Constant>> = None;
        let mut funs = None;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let syntax = |msg: String| SignatureError::Syntax { line: line_no, msg };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| syntax("expected 'vars:', 'consts:' or 'funs:'".into()))?;
            let items = rest.split_whitespace();
            let slot_taken = match key.trim() {
                "vars" => vars.replace(items.map(str::to_owned).collect()).is_some(),
                "consts" => consts
                    .replace(items.map(parse_constant).collect())
                    .is_some(),
                "funs" => {
                    let parsed = items
                        .map(|item| {
                            let (name, arity) = item.rsplit_once('/').ok_or_else(|| {
                                syntax(format!("expected name/arity, got {item:?}"))
                            })?;
                            let arity = arity
                                .parse()
                                .map_err(|_| syntax(format!("bad arity in {item:?}")))?;
                            Ok(Functor::new(name, arity))
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    funs.replace(parsed).is_some()
                }
                other => return Err(syntax(format!("unknown declaration {other:?}"))),
            };
            if slot_taken {
                return Err(syntax(format!("repeated '{}' declaration", key.trim())));
            }
        }
        Self::new(
            vars.unwrap_or_default(),
            consts.unwrap_or_default(),
            funs.unwrap_or_default(),
        )
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |items: Vec<String>| items.join(" ");
        writeln!(f, "vars: {}", join(self.vars.clone()))?;
        writeln!(
            f,
            "consts: {}",
            join(self.consts.iter().map(Constant::to_string).collect())
        )?;
        writeln!(
            f,
            "funs: {}",
            join(self.funs.iter().map(Functor::to_string).collect())
        )
    }
}
