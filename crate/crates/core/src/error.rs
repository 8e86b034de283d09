use thiserror::Error;

use crate::automaton::Letter;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("transition table has {rows} rows but the automaton has {expected} states")]
    RowCount { rows: usize, expected: usize },
    #[error("state {state} has {found} transitions, expected one per letter ({expected})")]
    PartialRow {
        state: usize,
        found: usize,
        expected: usize,
    },
    #[error("state {state} is out of range for an automaton with {n} states")]
    StateOutOfRange { state: usize, n: usize },
    #[error("letter '{0}' appears more than once in the alphabet")]
    DuplicateLetter(Letter),
    #[error("letter '{0}' is not in the alphabet")]
    UnknownLetter(Letter),
    #[error("alphabets differ: {left:?} vs {right:?}")]
    AlphabetMismatch {
        left: Vec<Letter>,
        right: Vec<Letter>,
    },
    #[error("letter mapping is not a bijection on the alphabet: {0}")]
    NotBijective(String),
    #[error("subset construction refused: {states} NFA states exceed the cap of {cap}")]
    DeterminizationCap { states: usize, cap: usize },
    #[error("construction explored more than {cap} states")]
    StateExplosion { cap: usize },
    #[error("transition monoid exceeds the cap of {cap} elements")]
    MonoidCapExceeded { cap: usize },
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("parameter {name} = {value} is below the minimum of 3")]
    ParameterTooSmall { name: &'static str, value: usize },
    #[error("{0}")]
    InvalidBound(String),
    #[error("malformed automaton JSON: {0}")]
    Json(String),
}
