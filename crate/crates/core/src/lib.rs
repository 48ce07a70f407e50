//! Exact cocycle twisting of conic quantum spaces.

pub mod bridge;
pub mod cli;
pub mod cochain;
pub mod io;
pub mod linalg;
pub mod random;
pub mod scenarios;
pub mod space;
pub mod word;

/// Outcome of a property check, with the first failing index if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict { holds: true, witness: None }
    }

    pub fn fail(witness: Vec<usize>) -> Self {
        Verdict { holds: false, witness: Some(witness) }
    }
}
