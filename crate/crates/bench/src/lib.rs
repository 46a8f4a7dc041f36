//! Inputs shared by the criterion benchmarks.

use termcode_core::Signature;

/// vars X Y, consts a, funs f/2 g/1
pub fn mixed_signature() -> Signature {
    Signature::from_names(&["X", "Y"], &["a"], &[("f", 2), ("g", 1)])
}

/// vars A B, consts z, funs imp/2
pub fn implication_signature() -> Signature {
    Signature::from_names(&["A", "B"], &["z"], &[("imp", 2)])
}
