//! Bijective base-k numeration and the lowercase string codec built on it.
//!
//! Digits are given least-significant first and range over `0..base`; each
//! is shifted up by one before weighting, so every digit sequence (including
//! ones with trailing "zeros") names a distinct natural.

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::nat::Nat;

const FIRST: char = 'a';
const LAST: char = 'z';

/// Size of the string alphabet, `'a'..='z'`.
pub const STRING_BASE: u32 = LAST as u32 - FIRST as u32 + 1;

pub fn from_bbase(base: u32, digits: &[u32]) -> Result<Nat> {
    if base < 2 {
        return Err(Error::InvalidBase {
            op: "from_bbase",
            base,
        });
    }
    let mut r = Nat::zero();
    for &d in digits.iter().rev() {
        if d >= base {
            return Err(Error::DigitOutOfRange { digit: d, base });
        }
        r = r * base + (d + 1);
    }
    Ok(r)
}

pub fn to_bbase(base: u32, n: &Nat) -> Result<Vec<u32>> {
    if base < 2 {
        return Err(Error::InvalidBase {
            op: "to_bbase",
            base,
        });
    }
    let big_base = Nat::from(base);
    let mut digits = Vec::new();
    let mut n = n.clone();
    while !n.is_zero() {
        let (mut q, d) = n.div_rem(&big_base);
        let d = d.to_u32().expect("remainder below base");
        if d == 0 {
            q -= 1u32;
            digits.push(base - 1);
        } else {
            digits.push(d - 1);
        }
        n = q;
    }
    Ok(digits)
}

pub fn chr2ord(c: char) -> Result<u32> {
    if (FIRST..=LAST).contains(&c) {
        Ok(c as u32 - FIRST as u32)
    } else {
        Err(Error::CharOutOfRange(c))
    }
}

pub fn ord2chr(o: u32) -> Option<char> {
    (o < STRING_BASE).then(|| char::from_u32(FIRST as u32 + o).unwrap())
}

pub fn string2nat(s: &str) -> Result<Nat> {
    let digits = s.chars().map(chr2ord).collect::<Result<Vec<_>>>()?;
    from_bbase(STRING_BASE, &digits)
}

pub fn nat2string(n: &Nat) -> String {
    to_bbase(STRING_BASE, n)
        .expect("base 26")
        .into_iter()
        .map(|d| ord2chr(d).expect("digit below base"))
        .collect()
}

/// Code of a symbol name; same numbering as [`string2nat`].
pub fn atom2nat(name: &str) -> Result<Nat> {
    string2nat(name)
}

pub fn nat2atom(n: &Nat) -> String {
    nat2string(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn n(v: u64) -> Nat {
        Nat::from(v)
    }

    #[test]
    fn worked_examples() {
        assert_eq!(from_bbase(7, &[2, 6, 4, 4]).unwrap(), n(2012));
        assert_eq!(to_bbase(7, &n(2012)).unwrap(), vec![2, 6, 4, 4]);
        assert_eq!(string2nat("hello").unwrap(), n(7073802));
        assert_eq!(nat2string(&n(2012)), "jyb");
        assert_eq!(nat2string(&n(7073802)), "hello");
        assert_eq!(atom2nat("hello").unwrap(), n(7073802));
    }

    #[test]
    fn small_cases() {
        for base in [2, 7, 26] {
            assert_eq!(from_bbase(base, &[]).unwrap(), n(0));
            assert!(to_bbase(base, &n(0)).unwrap().is_empty());
        }
        assert_eq!(from_bbase(2, &[0, 1]).unwrap(), n(5));
        assert_eq!(to_bbase(2, &n(5)).unwrap(), vec![0, 1]);
        assert_eq!(from_bbase(2, &[0]).unwrap(), n(1));
        assert_eq!(string2nat("").unwrap(), n(0));
        assert_eq!(string2nat("a").unwrap(), n(1));
        assert_eq!(nat2string(&n(0)), "");
        assert_eq!(nat2atom(&n(0)), "");
        assert_eq!(nat2atom(&n(1)), "a");
    }

    #[test]
    fn domain_errors() {
        assert_eq!(
            from_bbase(7, &[7]),
            Err(Error::DigitOutOfRange { digit: 7, base: 7 })
        );
        assert_eq!(
            to_bbase(1, &n(3)),
            Err(Error::InvalidBase {
                op: "to_bbase",
                base: 1
            })
        );
        assert_eq!(
            from_bbase(0, &[]),
            Err(Error::InvalidBase {
                op: "from_bbase",
                base: 0
            })
        );
        assert_eq!(string2nat("Hello"), Err(Error::CharOutOfRange('H')));
        assert_eq!(atom2nat("->"), Err(Error::CharOutOfRange('-')));
        assert_eq!(ord2chr(26), None);
    }

    #[test]
    fn decode_encode_exhaustive() {
        for base in [2, 7, 26] {
            for v in 0..100_000u64 {
                let ds = to_bbase(base, &n(v)).unwrap();
                assert_eq!(from_bbase(base, &ds).unwrap(), n(v));
            }
        }
    }

    #[test]
    fn encode_decode_exhaustive() {
        for base in [2u32, 3] {
            let mut seqs: Vec<Vec<u32>> = vec![vec![]];
            let mut frontier = seqs.clone();
            for _ in 0..8 {
                frontier = frontier
                    .iter()
                    .flat_map(|s| {
                        (0..base).map(move |d| {
                            let mut s = s.clone();
                            s.push(d);
                            s
                        })
                    })
                    .collect();
                seqs.extend(frontier.iter().cloned());
            }
            for ds in seqs {
                assert_eq!(to_bbase(base, &from_bbase(base, &ds).unwrap()).unwrap(), ds);
            }
        }
    }

    #[test]
    fn all_a_strings_grow() {
        let mut prev = string2nat("").unwrap();
        for m in 1..40 {
            let cur = string2nat(&"a".repeat(m)).unwrap();
            assert!(cur > prev);
            prev = cur;
        }
    }

    proptest! {
        #[test]
        fn strings_round_trip(s in "[a-z]{0,40}") {
            prop_assert_eq!(nat2string(&string2nat(&s).unwrap()), s);
        }
    }
}
