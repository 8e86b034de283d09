//! Automaton types: complete DFAs, epsilon-free NFAs with a set of initial
//! states, and the subset construction connecting them.

mod dfa;
mod nfa;
mod stateset;
mod subset;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use dfa::{complement, make_dfa, reverse, Dfa};
pub use nfa::Nfa;
pub use stateset::StateSet;
pub use subset::{
    determinize, determinize_with_cap, Determinized, DEFAULT_SUBSET_CAP, EXPLORATION_CAP,
};

/// An alphabet symbol, compared by identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter(pub char);

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<char> for Letter {
    fn from(c: char) -> Self {
        Letter(c)
    }
}

/// Builds an alphabet from a string of single-character letters, keeping order.
pub fn alphabet(letters: &str) -> Vec<Letter> {
    letters.chars().map(Letter).collect()
}

/// A finite word over some alphabet.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word(s.chars().map(Letter).collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for letter in &self.0 {
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

/// Either kind of automaton; the unit of exchange for the CLI and JSON files.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Automaton {
    Dfa(Dfa),
    Nfa(Nfa),
}

impl Automaton {
    pub fn n(&self) -> usize {
        match self {
            Automaton::Dfa(d) => d.n(),
            Automaton::Nfa(nf) => nf.n(),
        }
    }

    pub fn alphabet(&self) -> &[Letter] {
        match self {
            Automaton::Dfa(d) => d.alphabet(),
            Automaton::Nfa(nf) => nf.alphabet(),
        }
    }

    pub fn accepts(&self, word: &Word) -> Result<bool> {
        match self {
            Automaton::Dfa(d) => d.accepts(word),
            Automaton::Nfa(nf) => nf.accepts(word),
        }
    }

    /// Views the automaton as an NFA (a DFA is a special case).
    pub fn to_nfa(&self) -> Nfa {
        match self {
            Automaton::Dfa(d) => d.to_nfa(),
            Automaton::Nfa(nf) => nf.clone(),
        }
    }

    /// Returns the DFA unchanged, or determinizes an NFA under `cap`.
    pub fn into_dfa(self, cap: usize) -> Result<Dfa> {
        match self {
            Automaton::Dfa(d) => Ok(d),
            Automaton::Nfa(nf) => Ok(determinize_with_cap(&nf, cap)?.dfa),
        }
    }
}

impl From<Dfa> for Automaton {
    fn from(d: Dfa) -> Self {
        Automaton::Dfa(d)
    }
}

impl From<Nfa> for Automaton {
    fn from(nf: Nfa) -> Self {
        Automaton::Nfa(nf)
    }
}

pub(crate) fn check_distinct(alphabet: &[Letter]) -> Result<()> {
    for (i, letter) in alphabet.iter().enumerate() {
        if alphabet[..i].contains(letter) {
            return Err(Error::DuplicateLetter(*letter));
        }
    }
    Ok(())
}

pub(crate) fn ensure_same_alphabet(left: &[Letter], right: &[Letter]) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::AlphabetMismatch {
            left: left.to_vec(),
            right: right.to_vec(),
        })
    }
}

pub(crate) fn letter_index(alphabet: &[Letter], letter: Letter) -> Result<usize> {
    alphabet
        .iter()
        .position(|l| *l == letter)
        .ok_or(Error::UnknownLetter(letter))
}
