//! Bijective numbering of the terms over a finite signature.
//!
//! With `LV` variables, `LC` constants and `LF` functors (`LVC = LV + LC`):
//!
//! * variable `i` has code `i`,
//! * constant `i` has code `LV + i`,
//! * `f(t1, ..., tk)` with `f/k` at functor index `l` has code
//!   `LVC + LF * from_tuple([code(t1), ..., code(tk)]) + l`.
//!
//! Decoding undoes the last rule with a division by `LF`. Every argument
//! code is smaller than its parent, and both directions use explicit work
//! stacks.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand_core::RngCore;

use crate::error::{Error, Result};
use crate::nat::Nat;
use crate::signature::Signature;
use crate::term::Term;
use crate::tuple::{from_tuple, to_tuple};

pub fn term2nat(sig: &Signature, t: &Term) -> Result<Nat> {
    enum Task<'a> {
        Visit(&'a Term),
        Combine { fun: usize, arity: usize },
    }
    let lv = sig.var_count();
    let lvc = Nat::from(sig.leaf_count());
    let lf = sig.fun_count();

    let mut tasks = vec![Task::Visit(t)];
    let mut codes: Vec<Nat> = Vec::new();
    while let Some(task) = tasks.pop() {
        match task {
            Task::Visit(Term::Var(v)) => {
                let i = sig
                    .var_position(v)
                    .ok_or_else(|| Error::UnknownVariable(v.clone()))?;
                codes.push(Nat::from(i));
            }
            Task::Visit(Term::Const(c)) => {
                let i = sig
                    .const_position(c)
                    .ok_or_else(|| Error::UnknownConstant(c.to_string()))?;
                codes.push(Nat::from(lv + i));
            }
            Task::Visit(Term::Compound(name, args)) => {
                let fun =
                    sig.fun_position(name, args.len())
                        .ok_or_else(|| Error::UnknownFunctor {
                            name: name.clone(),
                            arity: args.len(),
                        })?;
                tasks.push(Task::Combine {
                    fun,
                    arity: args.len(),
                });
                tasks.extend(args.iter().rev().map(Task::Visit));
            }
            Task::Combine { fun, arity } => {
                let args = codes.split_off(codes.len() - arity);
                let n = from_tuple(&args)?;
                codes.push(&lvc + n * lf + fun);
            }
        }
    }
    Ok(codes.pop().expect("one code per term"))
}

pub fn nat2term(sig: &Signature, n: &Nat) -> Result<Term> {
    enum Task {
        Decode(Nat),
        Build(usize),
    }
    let lv = Nat::from(sig.var_count());
    let lvc = Nat::from(sig.leaf_count());
    let lf = Nat::from(sig.fun_count());

    let mut tasks = vec![Task::Decode(n.clone())];
    let mut terms: Vec<Term> = Vec::new();
    while let Some(task) = tasks.pop() {
        match task {
            Task::Decode(x) if x < lv => {
                let i = x.to_usize().expect("below LV");
                terms.push(Term::Var(sig.vars()[i].clone()));
            }
            Task::Decode(x) if x < lvc => {
                let i = (x - &lv).to_usize().expect("below LC");
                terms.push(Term::Const(sig.consts()[i].clone()));
            }
            Task::Decode(x) => {
                if sig.fun_count() == 0 {
                    return Err(Error::NoFunctors {
                        code: n.to_string(),
                        max: (&lvc - 1u32).to_string(),
                    });
                }
                let (q, l) = (x - &lvc).div_rem(&lf);
                let fun = l.to_usize().expect("below LF");
                let arity = sig.funs()[fun].arity;
                tasks.push(Task::Build(fun));
                let args = to_tuple(arity, &q)?;
                tasks.extend(args.into_iter().rev().map(Task::Decode));
            }
            Task::Build(fun) => {
                let f = &sig.funs()[fun];
                let args = terms.split_off(terms.len() - f.arity);
                terms.push(Term::Compound(f.name.clone(), args));
            }
        }
    }
    Ok(terms.pop().expect("one term per code"))
}

/// Uniform natural in `[0, 2^bits)`.
///
/// Fills `ceil(bits / 32)` limbs, least significant first, with successive
/// `next_u32` draws and clears the bits above `bits` in the top limb. The
/// result is a pure function of the generator state.
pub fn random_nat<R: RngCore + ?Sized>(bits: u64, rng: &mut R) -> Nat {
    let limbs = bits.div_ceil(32) as usize;
    let mut words: Vec<u32> = (0..limbs).map(|_| rng.next_u32()).collect();
    let spare = (limbs as u64 * 32 - bits) as u32;
    if let Some(top) = words.last_mut() {
        *top &= u32::MAX >> spare;
    }
    BigUint::new(words)
}

/// Decode a code drawn uniformly from `[0, 2^bits)`. Uniform over codes,
/// not over term shapes.
pub fn ranterm<R: RngCore + ?Sized>(sig: &Signature, bits: u64, rng: &mut R) -> Result<Term> {
    if bits == 0 {
        return Err(Error::ZeroBits);
    }
    nat2term(sig, &random_nat(bits, rng))
}

/// `true` if every leaf and functor of `t` is declared in `sig`.
pub fn fits_signature(sig: &Signature, t: &Term) -> bool {
    let mut stack = vec![t];
    while let Some(t) = stack.pop() {
        let ok = match t {
            Term::Var(v) => sig.var_position(v).is_some(),
            Term::Const(c) => sig.const_position(c).is_some(),
            Term::Compound(f, args) => {
                stack.extend(args);
                sig.fun_position(f, args.len()).is_some()
            }
        };
        if !ok {
            return false;
        }
    }
    true
}
