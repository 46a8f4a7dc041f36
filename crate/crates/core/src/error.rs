use thiserror::Error;

/// Errors raised by the codecs in this crate.
///
/// Every variant that can be reached from more than one entry point carries
/// the name of the operation that rejected its input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{op}: argument must be at least 1")]
    ZeroArgument { op: &'static str },

    #[error("{op}: tuple arity must be at least 1")]
    ZeroArity { op: &'static str },

    #[error("from_tuple: empty tuple")]
    EmptyTuple,

    #[error("{op}: base must be at least 2, got {base}")]
    InvalidBase { op: &'static str, base: u32 },

    #[error("from_bbase: digit {digit} out of range for base {base}")]
    DigitOutOfRange { digit: u32, base: u32 },

    #[error("string2nat: character {0:?} is outside 'a'..'z'")]
    CharOutOfRange(char),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error(transparent)]
    Signature(#[from] SignatureError),

    #[error("term2nat: variable {0} is not in the signature")]
    UnknownVariable(String),

    #[error("term2nat: constant {0} is not in the signature")]
    UnknownConstant(String),

    #[error("term2nat: functor {name}/{arity} is not in the signature")]
    UnknownFunctor { name: String, arity: usize },

    #[error("nat2term: no function symbols: codes beyond {max} are undecodable (got {code})")]
    NoFunctors { code: String, max: String },

    #[error("ranterm: bit count must be at least 1")]
    ZeroBits,

    #[error(transparent)]
    Skeleton(#[from] SkeletonError),
}

/// A syntax error in term or token-list text, with the byte offset where it
/// was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at offset {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl ParseError {
    pub(crate) fn new(pos: usize, msg: impl Into<String>) -> Self {
        Self {
            pos,
            msg: msg.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignatureError {
    #[error("signature has no variables and no constants (LVC = 0)")]
    NoLeaves,

    #[error("duplicate {kind} {name} in signature")]
    Duplicate { kind: &'static str, name: String },

    #[error("functor {0} declared with arity 0")]
    ZeroArity(String),

    #[error("invalid {kind} name {name:?}")]
    BadName { kind: &'static str, name: String },

    #[error("signature line {line}: {msg}")]
    Syntax { line: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeletonError {
    #[error("empty parenthesis sequence")]
    Empty,

    #[error("unbalanced parenthesis sequence")]
    Unbalanced,

    #[error("trailing symbols after position {0}")]
    Trailing(usize),

    #[error("malformed skeleton: group at position {0} has fewer than two children")]
    TooFewChildren(usize),

    #[error("malformed skeleton: functor slot at position {0} holds a subterm")]
    CompoundFunctor(usize),

    #[error("malformed skeleton: slot at position {0} holds more than one group")]
    CrowdedSlot(usize),

    #[error("functor slot filled by {0}, which is not a lowercase symbol")]
    BadFunctor(String),

    #[error("skeleton has {slots} leaf slots but {atoms} atoms were supplied")]
    AtomCount { slots: usize, atoms: usize },

    #[error("code {0} is not a balanced skeleton")]
    NotSkeleton(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
