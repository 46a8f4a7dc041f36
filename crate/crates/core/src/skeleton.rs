//! Catalan skeletons: a term split into its balanced-parenthesis structure
//! and the list of symbols it carries.
//!
//! A leaf term has skeleton `()`. A compound `f(t1, ..., tk)` is one group
//! holding `k + 1` child slots, one for the functor name and one per
//! argument. A slot is `()` when it holds a symbol and `(G)` when it holds a
//! nested compound whose own group is `G`. The symbols are collected in the
//! same left-to-right order as their slots.
//!
//! Skeletons are numbered two ways: injectively, by reading the sequence as
//! bijective base-2 digits, and bijectively, by recursively coding the list
//! of child groups with [`nats2nat`].

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::bbase::{from_bbase, to_bbase};
use crate::error::{ParseError, SkeletonError};
use crate::nat::{cons, decons, Nat};
use crate::term::{Constant, Leaf, Term};
use crate::tuple::{from_tuple, to_tuple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Paren {
    /// `0`, written `(`
    Open,
    /// `1`, written `)`
    Close,
}

impl Paren {
    pub fn bit(self) -> u32 {
        match self {
            Paren::Open => 0,
            Paren::Close => 1,
        }
    }

    pub fn from_bit(b: u32) -> Option<Self> {
        match b {
            0 => Some(Paren::Open),
            1 => Some(Paren::Close),
            _ => None,
        }
    }
}

/// A sequence of parentheses in emission order. Balance is not enforced on
/// construction; decoders check it.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ParenSeq(Vec<Paren>);

impl ParenSeq {
    pub fn new(ps: Vec<Paren>) -> Self {
        Self(ps)
    }

    /// From a 0/1 list. `None` if any entry is not 0 or 1.
    pub fn from_bits(bits: &[u32]) -> Option<Self> {
        bits.iter()
            .map(|&b| Paren::from_bit(b))
            .collect::<Option<_>>()
            .map(Self)
    }

    pub fn bits(&self) -> Vec<u32> {
        self.0.iter().map(|p| p.bit()).collect()
    }

    pub fn into_inner(self) -> Vec<Paren> {
        self.0
    }
}

impl Deref for ParenSeq {
    type Target = [Paren];

    fn deref(&self) -> &[Paren] {
        &self.0
    }
}

impl fmt::Display for ParenSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.0 {
            f.write_str(match p {
                Paren::Open => "(",
                Paren::Close => ")",
            })?;
        }
        Ok(())
    }
}

impl FromStr for ParenSeq {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.char_indices()
            .map(|(i, c)| match c {
                '(' => Ok(Paren::Open),
                ')' => Ok(Paren::Close),
                _ => Err(ParseError::new(
                    i,
                    format!("expected '(' or ')', got {c:?}"),
                )),
            })
            .collect::<Result<_, _>>()
            .map(Self)
    }
}

/// Check that `ps` is exactly one balanced group.
pub fn check_group(ps: &[Paren]) -> Result<(), SkeletonError> {
    if ps.is_empty() {
        return Err(SkeletonError::Empty);
    }
    let mut depth = 0usize;
    for (i, p) in ps.iter().enumerate() {
        match p {
            Paren::Open => depth += 1,
            Paren::Close => {
                depth = depth.checked_sub(1).ok_or(SkeletonError::Unbalanced)?;
                if depth == 0 && i + 1 != ps.len() {
                    return Err(SkeletonError::Trailing(i));
                }
            }
        }
    }
    if depth == 0 {
        Ok(())
    } else {
        Err(SkeletonError::Unbalanced)
    }
}

/// Number of `()` pairs, i.e. symbol slots.
pub fn leaf_slots(ps: &[Paren]) -> usize {
    ps.windows(2)
        .filter(|w| w == &[Paren::Open, Paren::Close])
        .count()
}

pub fn term2bitpars(t: &Term) -> (ParenSeq, Vec<Leaf>) {
    enum Step<'a> {
        Emit(Paren),
        Atom(Leaf),
        Group(&'a Term),
    }
    if let Some(leaf) = t.as_leaf() {
        return (ParenSeq(vec![Paren::Open, Paren::Close]), vec![leaf]);
    }
    let mut ps = Vec::new();
    let mut atoms = Vec::new();
    let mut steps = vec![Step::Group(t)];
    while let Some(step) = steps.pop() {
        match step {
            Step::Emit(p) => ps.push(p),
            Step::Atom(a) => atoms.push(a),
            Step::Group(Term::Compound(name, args)) => {
                ps.push(Paren::Open);
                steps.push(Step::Emit(Paren::Close));
                for arg in args.iter().rev() {
                    steps.push(Step::Emit(Paren::Close));
                    steps.push(match arg.as_leaf() {
                        Some(leaf) => Step::Atom(leaf),
                        None => Step::Group(arg),
                    });
                    steps.push(Step::Emit(Paren::Open));
                }
                steps.push(Step::Emit(Paren::Close));
                steps.push(Step::Atom(Leaf::Const(Constant::Symbol(name.clone()))));
                steps.push(Step::Emit(Paren::Open));
            }
            Step::Group(_) => unreachable!("leaves are emitted as atoms"),
        }
    }
    (ParenSeq(ps), atoms)
}

pub fn bitpars2term(ps: &[Paren], atoms: &[Leaf]) -> Result<Term, SkeletonError> {
    struct Frame {
        start: usize,
        functor: Option<String>,
        args: Vec<Term>,
    }

    fn add_child(frame: &mut Frame, child: Term, slot: usize) -> Result<(), SkeletonError> {
        if frame.functor.is_some() {
            frame.args.push(child);
            return Ok(());
        }
        match child {
            Term::Const(Constant::Symbol(ref s)) => {
                frame.functor = Some(s.clone());
                Ok(())
            }
            Term::Compound(..) => Err(SkeletonError::CompoundFunctor(slot)),
            other => Err(SkeletonError::BadFunctor(other.to_string())),
        }
    }

    check_group(ps)?;
    let slots = leaf_slots(ps);
    if slots != atoms.len() {
        return Err(SkeletonError::AtomCount {
            slots,
            atoms: atoms.len(),
        });
    }
    if ps.len() == 2 {
        return Ok(atoms[0].clone().into());
    }

    let mut atoms = atoms.iter().cloned();
    let mut frames = vec![Frame {
        start: 0,
        functor: None,
        args: Vec::new(),
    }];
    let mut i = 1;
    loop {
        match ps[i] {
            Paren::Open if ps[i + 1] == Paren::Close => {
                let leaf = atoms.next().expect("slot count checked");
                add_child(frames.last_mut().expect("open frame"), leaf.into(), i)?;
                i += 2;
            }
            Paren::Open => {
                frames.push(Frame {
                    start: i + 1,
                    functor: None,
                    args: Vec::new(),
                });
                i += 2;
            }
            Paren::Close => {
                let frame = frames.pop().expect("open frame");
                let (Some(functor), false) = (frame.functor, frame.args.is_empty()) else {
                    return Err(SkeletonError::TooFewChildren(frame.start));
                };
                let term = Term::Compound(functor, frame.args);
                let Some(parent) = frames.last_mut() else {
                    return Ok(term);
                };
                // The group just closed must fill its slot on its own.
                let slot = frame.start - 1;
                if ps[i + 1] != Paren::Close {
                    return Err(SkeletonError::CrowdedSlot(slot));
                }
                add_child(parent, term, slot)?;
                i += 2;
            }
        }
    }
}

pub fn term2inj_code(t: &Term) -> (Nat, Vec<Leaf>) {
    let (ps, atoms) = term2bitpars(t);
    let n = from_bbase(2, &ps.bits()).expect("binary digits");
    (n, atoms)
}

pub fn inj_code2term(n: &Nat, atoms: &[Leaf]) -> Result<Term, SkeletonError> {
    let ps = ParenSeq::from_bits(&to_bbase(2, n).expect("base 2")).expect("binary digits");
    check_group(&ps).map_err(|_| SkeletonError::NotSkeleton(n.to_string()))?;
    bitpars2term(&ps, atoms)
}

pub fn nat2nats(n: &Nat) -> Vec<Nat> {
    match decons(n) {
        Err(_) => Vec::new(),
        Ok((len_minus_one, content)) => {
            to_tuple(len_minus_one as usize + 1, &content).expect("positive arity")
        }
    }
}

pub fn nats2nat(ns: &[Nat]) -> Nat {
    if ns.is_empty() {
        return Nat::default();
    }
    cons(ns.len() as u64 - 1, &from_tuple(ns).expect("non-empty"))
}

pub fn nat2pars(n: &Nat) -> ParenSeq {
    let mut ps = vec![Paren::Open];
    let mut pending = vec![nat2nats(n).into_iter()];
    while let Some(children) = pending.last_mut() {
        match children.next() {
            Some(child) => {
                ps.push(Paren::Open);
                pending.push(nat2nats(&child).into_iter());
            }
            None => {
                ps.push(Paren::Close);
                pending.pop();
            }
        }
    }
    ParenSeq(ps)
}

pub fn pars2nat(ps: &[Paren]) -> Result<Nat, SkeletonError> {
    check_group(ps)?;
    let mut open: Vec<Vec<Nat>> = Vec::new();
    for p in ps {
        match p {
            Paren::Open => open.push(Vec::new()),
            Paren::Close => {
                let children = open.pop().expect("balance checked");
                let code = nats2nat(&children);
                match open.last_mut() {
                    Some(parent) => parent.push(code),
                    None => return Ok(code),
                }
            }
        }
    }
    unreachable!("balanced group closes its outermost paren")
}

/// Bijective skeleton code of `t`, with its symbol list.
pub fn term2code(t: &Term) -> (Nat, Vec<Leaf>) {
    let (ps, atoms) = term2bitpars(t);
    (
        pars2nat(&ps).expect("encoder emits a balanced group"),
        atoms,
    )
}

pub fn code2term(n: &Nat, atoms: &[Leaf]) -> Result<Term, SkeletonError> {
    bitpars2term(&nat2pars(n), atoms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::{parse_leaves, parse_term};
    use proptest::prelude::*;
    use std::collections::{HashMap, HashSet};

    fn n(v: u64) -> Nat {
        Nat::from(v)
    }

    fn ps(bits: &[u32]) -> ParenSeq {
        ParenSeq::from_bits(bits).unwrap()
    }

    fn leaves(s: &str) -> Vec<Leaf> {
        parse_leaves(s).unwrap()
    }

    const PARS_2012: [u32; 24] = [
        0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 1, 1, 1,
    ];

    #[test]
    fn bitpars_examples() {
        let t = parse_term("f(g(a,X),X,42)").unwrap();
        let (p, a) = term2bitpars(&t);
        assert_eq!(
            p.bits(),
            vec![0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 1, 1, 0, 1, 0, 1, 1]
        );
        assert_eq!(a, leaves("f,g,a,X,X,42"));
        assert_eq!(bitpars2term(&p, &a).unwrap(), t);

        let (p, a) = term2bitpars(&Term::sym("a"));
        assert_eq!((p.bits(), a), (vec![0, 1], leaves("a")));

        let (p, a) = term2bitpars(&parse_term("f(a,b)").unwrap());
        assert_eq!(
            (p.bits(), a),
            (vec![0, 0, 1, 0, 1, 0, 1, 1], leaves("f,a,b"))
        );
    }

    #[test]
    fn bitpars_decode_errors() {
        assert_eq!(
            bitpars2term(&ps(&[0, 1]), &leaves("X")).unwrap(),
            Term::var("X")
        );
        assert_eq!(
            bitpars2term(&ps(&[0, 0, 1, 1]), &leaves("a")),
            Err(SkeletonError::TooFewChildren(0))
        );
        assert_eq!(
            bitpars2term(&ps(&[0, 1]), &leaves("a,b")),
            Err(SkeletonError::AtomCount { slots: 1, atoms: 2 })
        );
        assert_eq!(
            bitpars2term(&ps(&[0, 0, 1]), &leaves("a")),
            Err(SkeletonError::Unbalanced)
        );
        assert_eq!(
            bitpars2term(&ps(&[0, 1, 0, 1]), &leaves("a,b")),
            Err(SkeletonError::Trailing(1))
        );
        assert_eq!(bitpars2term(&ps(&[]), &[]), Err(SkeletonError::Empty));
        assert_eq!(
            bitpars2term(&ps(&[0, 0, 1, 0, 1, 1]), &leaves("X,a")),
            Err(SkeletonError::BadFunctor("X".into()))
        );
        assert_eq!(
            bitpars2term(&ps(&[0, 0, 1, 0, 1, 1]), &leaves("7,a")),
            Err(SkeletonError::BadFunctor("7".into()))
        );
        // Functor slot holding the compound g(a).
        let bad: ParenSeq = "(((()()))())".parse().unwrap();
        assert_eq!(
            bitpars2term(&bad, &leaves("g,a,b")),
            Err(SkeletonError::CompoundFunctor(1))
        );
        // One slot holding two groups.
        let crowded: ParenSeq = "(()((()())(()())))".parse().unwrap();
        assert_eq!(
            bitpars2term(&crowded, &leaves("f,g,a,h,b")),
            Err(SkeletonError::CrowdedSlot(3))
        );
    }

    #[test]
    fn injective_code_examples() {
        let t = parse_term("f(a,g(X,Y),g(Y,X))").unwrap();
        let (code, a) = term2inj_code(&t);
        assert_eq!(code, n(131364115));
        assert_eq!(a, leaves("f,a,g,X,Y,g,Y,X"));
        assert_eq!(inj_code2term(&code, &a).unwrap(), t);

        assert_eq!(term2inj_code(&Term::sym("a")), (n(5), leaves("a")));
        assert_eq!(
            inj_code2term(&n(7), &leaves("a")),
            Err(SkeletonError::NotSkeleton("7".into()))
        );
    }

    #[test]
    fn list_examples() {
        assert!(nat2nats(&n(0)).is_empty());
        assert_eq!(nat2nats(&n(2012)), vec![n(7), n(7), n(2)]);
        assert_eq!(nat2nats(&n(1)), vec![n(0)]);
        assert_eq!(nats2nat(&[]), n(0));
        assert_eq!(nats2nat(&[n(7), n(7), n(2)]), n(2012));
        assert_eq!(nats2nat(&[n(0)]), n(1));
    }

    #[test]
    fn pars_examples() {
        assert_eq!(nat2pars(&n(0)).bits(), vec![0, 1]);
        assert_eq!(nat2pars(&n(1)).bits(), vec![0, 0, 1, 1]);
        assert_eq!(nat2pars(&n(2012)).bits(), PARS_2012.to_vec());
        assert_eq!(pars2nat(&ps(&[0, 1])).unwrap(), n(0));
        assert_eq!(pars2nat(&ps(&[0, 0, 1, 1])).unwrap(), n(1));
        assert_eq!(pars2nat(&ps(&PARS_2012)).unwrap(), n(2012));
        assert_eq!(nat2pars(&n(2012)).to_string(), "((((())))(((())))(()()))");
    }

    #[test]
    fn pars_decode_errors() {
        assert_eq!(pars2nat(&[]), Err(SkeletonError::Empty));
        assert_eq!(pars2nat(&ps(&[1, 0])), Err(SkeletonError::Unbalanced));
        assert_eq!(pars2nat(&ps(&[0, 0, 1])), Err(SkeletonError::Unbalanced));
        assert_eq!(
            pars2nat(&ps(&[0, 1, 0, 1])),
            Err(SkeletonError::Trailing(1))
        );
    }

    #[test]
    fn catalan_code_examples() {
        let t = parse_term("f(a,g(X,Y),g(Y,X))").unwrap();
        let (code, a) = term2code(&t);
        assert_eq!(code, n(786632));
        assert_eq!(a, leaves("f,a,g,X,Y,g,Y,X"));
        assert_eq!(code2term(&n(786632), &a).unwrap(), t);
        assert_eq!(term2code(&Term::sym("a")), (n(0), leaves("a")));
    }

    #[test]
    fn paren_text() {
        let p: ParenSeq = "(()())".parse().unwrap();
        assert_eq!(p.bits(), vec![0, 0, 1, 0, 1, 1]);
        assert_eq!(p.to_string(), "(()())");
        assert!("(x)".parse::<ParenSeq>().is_err());
        assert_eq!(ParenSeq::from_bits(&[0, 2]), None);
    }

    #[test]
    fn lists_exhaustive() {
        for v in 0..=100_000u64 {
            assert_eq!(nats2nat(&nat2nats(&n(v))), n(v));
        }
        for len in 0..=3u32 {
            for code in 0..16u64.pow(len) {
                let list: Vec<Nat> = (0..len).map(|j| n((code >> (4 * j)) & 15)).collect();
                assert_eq!(nat2nats(&nats2nat(&list)), list);
            }
        }
    }

    #[test]
    fn pars_exhaustive() {
        let mut seen = HashSet::new();
        for v in 0..=10_000u64 {
            let p = nat2pars(&n(v));
            check_group(&p).unwrap();
            assert_eq!(pars2nat(&p).unwrap(), n(v));
            assert!(seen.insert(p));
        }
    }

    // All terms with at most `max` functor nodes over f/2, g/1 and leaf a.
    fn small_terms(max: usize) -> Vec<Term> {
        let mut by_size: Vec<Vec<Term>> = vec![vec![Term::sym("a")]];
        for size in 1..=max {
            let mut out = Vec::new();
            for t in &by_size[size - 1] {
                out.push(Term::app("g", vec![t.clone()]));
            }
            for left in 0..size {
                for l in &by_size[left] {
                    for r in &by_size[size - 1 - left] {
                        out.push(Term::app("f", vec![l.clone(), r.clone()]));
                    }
                }
            }
            by_size.push(out);
        }
        by_size.concat()
    }

    #[test]
    fn structure_codes_separate_equal_contents() {
        let mut by_atoms: HashMap<Vec<Leaf>, HashSet<Nat>> = HashMap::new();
        let terms = small_terms(4);
        for t in &terms {
            let (code, atoms) = term2code(t);
            assert_eq!(&code2term(&code, &atoms).unwrap(), t);
            assert!(by_atoms.entry(atoms).or_default().insert(code));
        }
        let distinct: usize = by_atoms.values().map(HashSet::len).sum();
        assert_eq!(distinct, terms.len());
    }

    #[test]
    fn deep_skeletons() {
        let depth = 50_000;
        let text = format!("{}a{}", "g(".repeat(depth), ")".repeat(depth));
        let t = parse_term(&text).unwrap();
        let (p, atoms) = term2bitpars(&t);
        assert_eq!(bitpars2term(&p, &atoms).unwrap(), t);
        assert_eq!(inj_code2term(&term2inj_code(&t).0, &atoms).unwrap(), t);

        // Each unary level at least doubles the Catalan code's bit length,
        // so only shallow chains are practical here.
        let depth = 16;
        let text = format!("{}a{}", "g(".repeat(depth), ")".repeat(depth));
        let t = parse_term(&text).unwrap();
        let (code, atoms) = term2code(&t);
        assert!(code.bits() > 1 << depth);
        assert_eq!(code2term(&code, &atoms).unwrap(), t);
    }

    proptest! {
        #[test]
        fn bitpars_of_parsed_terms(idx in 0usize..1000) {
            let terms = small_terms(4);
            let t = &terms[idx % terms.len()];
            let (p, atoms) = term2bitpars(t);
            prop_assert!(check_group(&p).is_ok());
            prop_assert_eq!(p.len() % 2, 0);
            prop_assert_eq!(leaf_slots(&p), atoms.len());
            prop_assert_eq!(&bitpars2term(&p, &atoms).unwrap(), t);
        }

        #[test]
        fn pars_big(limbs in prop::collection::vec(any::<u32>(), 0..6)) {
            let v = num_bigint::BigUint::new(limbs);
            prop_assert_eq!(pars2nat(&nat2pars(&v)).unwrap(), v);
        }
    }
}
