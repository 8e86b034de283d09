use super::{check_distinct, letter_index, Letter, StateSet, Word};
use crate::error::{Error, Result};

/// A nondeterministic automaton without epsilon transitions.
///
/// Successor lists are sorted and duplicate-free. The set of initial states
/// may be empty, in which case the language is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Nfa {
    alphabet: Vec<Letter>,
    delta: Vec<Vec<usize>>,
    initials: Vec<usize>,
    finals: Vec<bool>,
}

impl Nfa {
    /// Validating constructor; `delta[q][x]` lists the successors of `q` on `alphabet[x]`.
    pub fn new(
        n: usize,
        alphabet: Vec<Letter>,
        delta: Vec<Vec<Vec<usize>>>,
        initials: impl IntoIterator<Item = usize>,
        finals: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        check_distinct(&alphabet)?;
        if delta.len() != n {
            return Err(Error::RowCount {
                rows: delta.len(),
                expected: n,
            });
        }
        let k = alphabet.len();
        let mut flat = Vec::with_capacity(n * k);
        for (state, row) in delta.into_iter().enumerate() {
            if row.len() != k {
                return Err(Error::PartialRow {
                    state,
                    found: row.len(),
                    expected: k,
                });
            }
            for targets in row {
                if let Some(&bad) = targets.iter().find(|&&t| t >= n) {
                    return Err(Error::StateOutOfRange { state: bad, n });
                }
                flat.push(targets);
            }
        }
        let initials: Vec<usize> = initials.into_iter().collect();
        if let Some(&bad) = initials.iter().find(|&&q| q >= n) {
            return Err(Error::StateOutOfRange { state: bad, n });
        }
        let mut final_flags = vec![false; n];
        for f in finals {
            if f >= n {
                return Err(Error::StateOutOfRange { state: f, n });
            }
            final_flags[f] = true;
        }
        Ok(Self::from_parts(alphabet, flat, initials, final_flags))
    }

    /// Assembles an NFA from a flat successor table, normalizing every list.
    pub(crate) fn from_parts(
        alphabet: Vec<Letter>,
        mut delta: Vec<Vec<usize>>,
        mut initials: Vec<usize>,
        finals: Vec<bool>,
    ) -> Self {
        debug_assert_eq!(delta.len(), finals.len() * alphabet.len());
        for targets in &mut delta {
            targets.sort_unstable();
            targets.dedup();
        }
        initials.sort_unstable();
        initials.dedup();
        Nfa {
            alphabet,
            delta,
            initials,
            finals,
        }
    }

    pub fn n(&self) -> usize {
        self.finals.len()
    }

    pub fn alphabet(&self) -> &[Letter] {
        &self.alphabet
    }

    pub fn letter_index(&self, letter: Letter) -> Result<usize> {
        letter_index(&self.alphabet, letter)
    }

    pub fn successors(&self, state: usize, letter: usize) -> &[usize] {
        &self.delta[state * self.alphabet.len() + letter]
    }

    pub fn initials(&self) -> &[usize] {
        &self.initials
    }

    pub fn is_final(&self, state: usize) -> bool {
        self.finals[state]
    }

    pub fn finals(&self) -> impl Iterator<Item = usize> + '_ {
        self.finals
            .iter()
            .enumerate()
            .filter_map(|(q, &f)| f.then_some(q))
    }

    /// Successor lists as one row per state.
    pub fn delta(&self) -> Vec<Vec<Vec<usize>>> {
        let k = self.alphabet.len();
        (0..self.n())
            .map(|q| self.delta[q * k..(q + 1) * k].to_vec())
            .collect()
    }

    pub(crate) fn flat_delta(&self) -> &[Vec<usize>] {
        &self.delta
    }

    /// Whether the NFA has exactly one initial state and one successor per
    /// state and letter.
    pub fn is_deterministic(&self) -> bool {
        self.initials.len() == 1 && self.delta.iter().all(|t| t.len() == 1)
    }

    /// Membership by simulating the set of active states.
    pub fn accepts(&self, word: &Word) -> Result<bool> {
        let mut current = vec![false; self.n()];
        for &q in &self.initials {
            current[q] = true;
        }
        for &letter in word.letters() {
            let x = self.letter_index(letter)?;
            let mut next = vec![false; self.n()];
            for (q, _) in current.iter().enumerate().filter(|(_, on)| **on) {
                for &t in self.successors(q, x) {
                    next[t] = true;
                }
            }
            current = next;
        }
        Ok(current
            .iter()
            .zip(&self.finals)
            .any(|(&on, &fin)| on && fin))
    }

    /// Swaps initial and final states and reverses every transition.
    pub fn reverse(&self) -> Nfa {
        let n = self.n();
        let k = self.alphabet.len();
        let mut delta = vec![Vec::new(); n * k];
        for p in 0..n {
            for x in 0..k {
                for &q in self.successors(p, x) {
                    delta[q * k + x].push(p);
                }
            }
        }
        let mut finals = vec![false; n];
        for &q in &self.initials {
            finals[q] = true;
        }
        Nfa::from_parts(
            self.alphabet.clone(),
            delta,
            self.finals().collect(),
            finals,
        )
    }

    pub(crate) fn final_set(&self) -> StateSet {
        self.finals().collect()
    }
}
