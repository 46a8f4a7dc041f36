//! Bijections between naturals and fixed-length tuples by k-way bit
//! interleaving. The 2-tuple case is the Morton pairing function.
//!
//! Member `j` of the `k`-tuple for `n` collects bits `j, j+k, j+2k, ...` of
//! `n`. All routines walk the 32-bit limbs directly, so cost is linear in
//! the bit length and independent of recursion depth.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::nat::Nat;

/// Collect bits `offset, offset+stride, ...` of `n` into a new number.
fn gather(limbs: &[u32], offset: u64, stride: u64) -> Nat {
    let total = limbs.len() as u64 * 32;
    if offset >= total {
        return Nat::default();
    }
    let mut out = Vec::with_capacity(((total - offset) / stride / 32 + 1) as usize);
    let (mut acc, mut filled) = (0u32, 0u32);
    let mut pos = offset;
    while pos < total {
        let bit = (limbs[(pos / 32) as usize] >> (pos % 32)) & 1;
        acc |= bit << filled;
        filled += 1;
        if filled == 32 {
            out.push(acc);
            acc = 0;
            filled = 0;
        }
        pos += stride;
    }
    if filled > 0 {
        out.push(acc);
    }
    BigUint::new(out)
}

/// OR the bits of `n` into `out` at positions `offset + stride * i`.
fn scatter(n: &Nat, offset: u64, stride: u64, out: &mut [u32]) {
    let bits = n.bits();
    for (w, limb) in n.iter_u32_digits().enumerate() {
        if limb == 0 {
            continue;
        }
        for b in 0..32u64 {
            let i = w as u64 * 32 + b;
            if i >= bits {
                break;
            }
            if (limb >> b) & 1 == 1 {
                let pos = offset + stride * i;
                out[(pos / 32) as usize] |= 1 << (pos % 32);
            }
        }
    }
}

fn check_arity(op: &'static str, k: usize) -> Result<u64> {
    if k == 0 {
        Err(Error::ZeroArity { op })
    } else {
        Ok(k as u64)
    }
}

/// Keep every `k`-th bit of `n`, starting with bit 0.
pub fn k_deflate(k: usize, n: &Nat) -> Result<Nat> {
    let k = check_arity("k_deflate", k)?;
    Ok(gather(&n.to_u32_digits(), 0, k))
}

/// Spread the bits of `n` to positions `0, k, 2k, ...`, zero elsewhere.
pub fn k_inflate(k: usize, n: &Nat) -> Result<Nat> {
    let k = check_arity("k_inflate", k)?;
    let mut out = vec![0u32; (n.bits() * k / 32 + 1) as usize];
    scatter(n, 0, k, &mut out);
    Ok(BigUint::new(out))
}

/// Split `n` into exactly `k` members by de-interleaving its bits.
pub fn to_tuple(k: usize, n: &Nat) -> Result<Vec<Nat>> {
    let stride = check_arity("to_tuple", k)?;
    if k == 1 {
        return Ok(vec![n.clone()]);
    }
    let limbs = n.to_u32_digits();
    Ok((0..stride).map(|j| gather(&limbs, j, stride)).collect())
}

/// Merge the members of `ns` by interleaving their bits. The arity is the
/// tuple length; inverse of [`to_tuple`].
pub fn from_tuple(ns: &[Nat]) -> Result<Nat> {
    let k = ns.len() as u64;
    match ns {
        [] => Err(Error::EmptyTuple),
        [n] => Ok(n.clone()),
        _ => {
            let max_bits = ns.iter().map(Nat::bits).max().unwrap_or(0);
            let mut out = vec![0u32; (max_bits * k / 32 + 1) as usize];
            for (j, n) in ns.iter().enumerate() {
                scatter(n, j as u64, k, &mut out);
            }
            Ok(BigUint::new(out))
        }
    }
}

pub fn to_pair(n: &Nat) -> (Nat, Nat) {
    let mut ns = to_tuple(2, n).expect("arity 2").into_iter();
    (ns.next().unwrap(), ns.next().unwrap())
}

pub fn from_pair(a: &Nat, b: &Nat) -> Nat {
    from_tuple(&[a.clone(), b.clone()]).expect("arity 2")
}
