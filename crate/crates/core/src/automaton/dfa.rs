use std::collections::VecDeque;

use super::{check_distinct, letter_index, Letter, Nfa, Word};
use crate::error::{Error, Result};

/// A complete deterministic automaton over states `0..n`.
///
/// The transition table is stored row-major: the successor of state `q` on
/// the letter at alphabet position `x` lives at `q * alphabet.len() + x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: Vec<Letter>,
    table: Vec<usize>,
    initial: usize,
    finals: Vec<bool>,
}

/// Validating constructor; `delta[q][x]` is the successor of `q` on `alphabet[x]`.
pub fn make_dfa(
    n: usize,
    alphabet: Vec<Letter>,
    delta: Vec<Vec<usize>>,
    initial: usize,
    finals: impl IntoIterator<Item = usize>,
) -> Result<Dfa> {
    Dfa::new(n, alphabet, delta, initial, finals)
}

impl Dfa {
    pub fn new(
        n: usize,
        alphabet: Vec<Letter>,
        delta: Vec<Vec<usize>>,
        initial: usize,
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
        let mut table = Vec::with_capacity(n * k);
        for (state, row) in delta.into_iter().enumerate() {
            if row.len() != k {
                return Err(Error::PartialRow {
                    state,
                    found: row.len(),
                    expected: k,
                });
            }
            if let Some(&bad) = row.iter().find(|&&t| t >= n) {
                return Err(Error::StateOutOfRange { state: bad, n });
            }
            table.extend(row);
        }
        if initial >= n {
            return Err(Error::StateOutOfRange { state: initial, n });
        }
        let mut final_flags = vec![false; n];
        for f in finals {
            if f >= n {
                return Err(Error::StateOutOfRange { state: f, n });
            }
            final_flags[f] = true;
        }
        Ok(Dfa {
            alphabet,
            table,
            initial,
            finals: final_flags,
        })
    }

    /// Unchecked assembly for constructions that produce valid tables by design.
    pub(crate) fn from_parts(
        alphabet: Vec<Letter>,
        table: Vec<usize>,
        initial: usize,
        finals: Vec<bool>,
    ) -> Self {
        debug_assert_eq!(table.len(), finals.len() * alphabet.len());
        debug_assert!(initial < finals.len());
        debug_assert!(table.iter().all(|&t| t < finals.len()));
        Dfa {
            alphabet,
            table,
            initial,
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

    pub fn initial(&self) -> usize {
        self.initial
    }

    #[inline]
    pub fn next(&self, state: usize, letter: usize) -> usize {
        self.table[state * self.alphabet.len() + letter]
    }

    pub fn row(&self, state: usize) -> &[usize] {
        let k = self.alphabet.len();
        &self.table[state * k..(state + 1) * k]
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

    /// The table as one row per state.
    pub fn delta(&self) -> Vec<Vec<usize>> {
        (0..self.n()).map(|q| self.row(q).to_vec()).collect()
    }

    /// Same table and initial state, different final states.
    pub fn with_finals(&self, finals: impl IntoIterator<Item = usize>) -> Result<Dfa> {
        let mut flags = vec![false; self.n()];
        for f in finals {
            if f >= self.n() {
                return Err(Error::StateOutOfRange {
                    state: f,
                    n: self.n(),
                });
            }
            flags[f] = true;
        }
        Ok(Dfa {
            finals: flags,
            ..self.clone()
        })
    }

    /// State reached from `from` after reading `word`.
    pub fn run_from(&self, from: usize, word: &Word) -> Result<usize> {
        word.letters().iter().try_fold(from, |q, &letter| {
            Ok(self.next(q, self.letter_index(letter)?))
        })
    }

    pub fn accepts(&self, word: &Word) -> Result<bool> {
        Ok(self.finals[self.run_from(self.initial, word)?])
    }

    /// Same table with final and non-final states exchanged.
    pub fn complement(&self) -> Dfa {
        Dfa {
            finals: self.finals.iter().map(|f| !f).collect(),
            ..self.clone()
        }
    }

    /// Swaps initial and final states and reverses every transition.
    pub fn reverse(&self) -> Nfa {
        let n = self.n();
        let k = self.alphabet.len();
        let mut delta = vec![Vec::new(); n * k];
        for p in 0..n {
            for x in 0..k {
                delta[self.next(p, x) * k + x].push(p);
            }
        }
        Nfa::from_parts(
            self.alphabet.clone(),
            delta,
            self.finals().collect(),
            (0..n).map(|q| q == self.initial).collect(),
        )
    }

    pub fn to_nfa(&self) -> Nfa {
        Nfa::from_parts(
            self.alphabet.clone(),
            self.table.iter().map(|&t| vec![t]).collect(),
            vec![self.initial],
            self.finals.clone(),
        )
    }

    /// States reachable from the initial state, in breadth-first discovery
    /// order with letters taken in alphabet order.
    pub fn reachable_states(&self) -> Vec<usize> {
        let mut seen = vec![false; self.n()];
        let mut order = vec![self.initial];
        seen[self.initial] = true;
        let mut queue = VecDeque::from([self.initial]);
        while let Some(q) = queue.pop_front() {
            for &t in self.row(q) {
                if !seen[t] {
                    seen[t] = true;
                    order.push(t);
                    queue.push_back(t);
                }
            }
        }
        order
    }
}

/// Language-level reversal of a DFA: an NFA for the reversed language.
pub fn reverse(d: &Dfa) -> Nfa {
    d.reverse()
}

pub fn complement(d: &Dfa) -> Dfa {
    d.complement()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::alphabet;

    fn sigma_star() -> Dfa {
        make_dfa(1, alphabet("a"), vec![vec![0]], 0, [0]).unwrap()
    }

    fn empty_language() -> Dfa {
        make_dfa(1, alphabet("a"), vec![vec![0]], 0, []).unwrap()
    }

    fn u4() -> Dfa {
        // a: 4-cycle, b: (0,1), c: 3 -> 0
        make_dfa(
            4,
            alphabet("abc"),
            vec![vec![1, 1, 0], vec![2, 0, 1], vec![3, 2, 2], vec![0, 3, 0]],
            0,
            [3],
        )
        .unwrap()
    }

    #[test]
    fn one_state_machines() {
        assert!(sigma_star().accepts(&Word::from("aaa")).unwrap());
        assert!(sigma_star().accepts(&Word::empty()).unwrap());
        assert!(!empty_language().accepts(&Word::empty()).unwrap());
        assert!(!empty_language().accepts(&Word::from("a")).unwrap());
    }

    #[test]
    fn four_cycle_row_wraps() {
        let d = u4();
        assert_eq!(d.next(3, 0), 0);
        assert_eq!(d.n(), 4);
    }

    #[test]
    fn rejects_malformed_tables() {
        assert_eq!(
            make_dfa(2, alphabet("ab"), vec![vec![0, 1], vec![0]], 0, []),
            Err(Error::PartialRow {
                state: 1,
                found: 1,
                expected: 2
            })
        );
        assert_eq!(
            make_dfa(2, alphabet("a"), vec![vec![0], vec![2]], 0, []),
            Err(Error::StateOutOfRange { state: 2, n: 2 })
        );
        assert_eq!(
            make_dfa(1, alphabet("aa"), vec![vec![0, 0]], 0, []),
            Err(Error::DuplicateLetter(Letter('a')))
        );
        assert_eq!(
            make_dfa(2, alphabet("a"), vec![vec![0]], 0, []),
            Err(Error::RowCount {
                rows: 1,
                expected: 2
            })
        );
        assert!(make_dfa(1, alphabet("a"), vec![vec![0]], 1, []).is_err());
        assert!(make_dfa(1, alphabet("a"), vec![vec![0]], 0, [4]).is_err());
    }

    #[test]
    fn unknown_letter_is_an_error() {
        assert_eq!(
            u4().accepts(&Word::from("ax")),
            Err(Error::UnknownLetter(Letter('x')))
        );
    }

    #[test]
    fn complement_flips_finals_and_is_an_involution() {
        let d = u4();
        assert_eq!(d.complement().finals().collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(d.complement().complement(), d);
        let full = empty_language().complement();
        assert!(full.accepts(&Word::from("aaaa")).unwrap());
    }

    #[test]
    fn reverse_collects_preimages() {
        let r = u4().reverse();
        // c fixes 0 and sends 3 to 0
        assert_eq!(r.successors(0, 2), &[0, 3]);
        assert_eq!(r.successors(3, 2), &[] as &[usize]);
        assert_eq!(r.initials(), &[3]);
        assert_eq!(r.finals().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn reachable_states_follow_letter_order() {
        let d = make_dfa(
            4,
            alphabet("ab"),
            vec![vec![2, 1], vec![1, 1], vec![2, 2], vec![0, 0]],
            0,
            [1],
        )
        .unwrap();
        assert_eq!(d.reachable_states(), vec![0, 2, 1]);
    }
}
