//! Natural-number primitives.
//!
//! Codes are arbitrary-precision non-negative integers backed by
//! [`num_bigint::BigUint`]. Shift amounts and exponents are machine words:
//! a shift by more than `u64::MAX` bits could not be materialized anyway.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The universal code domain.
pub type Nat = BigUint;

/// Lowest bit of `n` (`n mod 2`).
pub fn first_bit(n: &Nat) -> Nat {
    Nat::from(n.bit(0) as u8)
}

pub fn shift_left(n: &Nat, k: u64) -> Nat {
    n << k
}

pub fn shift_right(n: &Nat, k: u64) -> Nat {
    n >> k
}

pub fn successor(n: &Nat) -> Nat {
    n + 1u32
}

pub fn predecessor(n: &Nat) -> Result<Nat> {
    if n.is_zero() {
        return Err(Error::ZeroArgument { op: "predecessor" });
    }
    Ok(n - 1u32)
}

/// Index of the lowest set bit, i.e. the largest `e` with `2^e | n`.
pub fn lsb(n: &Nat) -> Result<u64> {
    n.trailing_zeros().ok_or(Error::ZeroArgument { op: "lsb" })
}

/// `2^x * (2y + 1)`. Never zero.
pub fn cons(x: u64, y: &Nat) -> Nat {
    ((y << 1u8) + Nat::one()) << x
}

/// Inverse of [`cons`]: the unique `(x, y)` with `2^x * (2y + 1) = z`.
pub fn decons(z: &Nat) -> Result<(u64, Nat)> {
    let x = z
        .trailing_zeros()
        .ok_or(Error::ZeroArgument { op: "decons" })?;
    Ok((x, z >> (x + 1)))
}
