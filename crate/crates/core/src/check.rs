//! Outcome of a single exact comparison.

use std::fmt::Debug;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub what: String,
    pub expected: String,
    pub actual: String,
}

pub type Outcome = std::result::Result<(), Mismatch>;

pub fn expect_eq<T: PartialEq + Debug>(what: impl Into<String>, expected: &T, actual: &T) -> Outcome {
    if expected == actual {
        Ok(())
    } else {
        Err(Mismatch {
            what: what.into(),
            expected: format!("{expected:?}"),
            actual: format!("{actual:?}"),
        })
    }
}

pub fn expect(what: impl Into<String>, cond: bool) -> Outcome {
    expect_eq(what, &true, &cond)
}
