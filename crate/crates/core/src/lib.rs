//! Bijective codecs between natural numbers and first-order terms, tuples,
//! lists, lowercase strings and balanced-parenthesis sequences.
//!
//! The modules build on each other bottom-up:
//!
//! * [`nat`]: bit primitives and the `2^x(2y+1)` decomposition,
//! * [`tuple`]: k-way bit interleaving,
//! * [`bbase`]: bijective base-k digits and the string codec,
//! * [`term`] and [`signature`]: the term model and its text forms,
//! * [`sigcodec`]: numbering of the terms over a finite signature,
//! * [`skeleton`]: structure/content separation and Catalan codes.

pub mod bbase;
pub mod error;
pub mod nat;
pub mod sigcodec;
pub mod signature;
pub mod skeleton;
pub mod term;
pub mod tuple;

pub use bbase::{atom2nat, from_bbase, nat2atom, nat2string, string2nat, to_bbase};
pub use error::{Error, ParseError, Result, SignatureError, SkeletonError};
pub use nat::{cons, decons, Nat};
pub use sigcodec::{nat2term, ranterm, term2nat};
pub use signature::{validate_signature, Functor, Signature};
pub use skeleton::{
    bitpars2term, code2term, inj_code2term, nat2nats, nat2pars, nats2nat, pars2nat, term2bitpars,
    term2code, term2inj_code, Paren, ParenSeq,
};
pub use term::{parse_leaves, parse_term, print_leaves, print_term, Constant, Leaf, Term};
pub use tuple::{from_pair, from_tuple, k_deflate, k_inflate, to_pair, to_tuple};
