use std::collections::hash_map::Entry;
use std::collections::HashMap;

use super::{Dfa, Nfa, StateSet};
use crate::error::{Error, Result};

/// Default limit on the number of NFA states accepted by the subset construction.
pub const DEFAULT_SUBSET_CAP: usize = 24;

/// Limit on the number of states any single construction may discover.
pub const EXPLORATION_CAP: usize = 1 << 26;

/// Result of the accessible subset construction.
#[derive(Clone, Debug)]
pub struct Determinized {
    pub dfa: Dfa,
    /// `subsets[i]` is the set of NFA states that DFA state `i` stands for.
    pub subsets: Vec<StateSet>,
}

impl Determinized {
    pub fn reachable_subsets(&self) -> usize {
        self.subsets.len()
    }
}

pub fn determinize(nfa: &Nfa) -> Result<Determinized> {
    determinize_with_cap(nfa, DEFAULT_SUBSET_CAP)
}

/// Accessible subset construction.
///
/// DFA states are numbered in breadth-first discovery order from the set of
/// initial states. The empty subset is kept as an ordinary dead state, so the
/// result is complete. Refuses NFAs with more than `cap` states; `cap` itself
/// is clamped to [`StateSet::WIDTH`].
pub fn determinize_with_cap(nfa: &Nfa, cap: usize) -> Result<Determinized> {
    let cap = cap.min(StateSet::WIDTH);
    if nfa.n() > cap {
        return Err(Error::DeterminizationCap {
            states: nfa.n(),
            cap,
        });
    }
    let k = nfa.alphabet().len();
    let images: Vec<StateSet> = nfa
        .flat_delta()
        .iter()
        .map(|targets| targets.iter().copied().collect())
        .collect();
    let finals = nfa.final_set();

    let start: StateSet = nfa.initials().iter().copied().collect();
    let mut index: HashMap<StateSet, usize> = HashMap::from([(start, 0)]);
    let mut subsets = vec![start];
    let mut table = Vec::new();
    let mut next = 0;
    while next < subsets.len() {
        let current = subsets[next];
        next += 1;
        for x in 0..k {
            let mut image = StateSet::empty();
            for q in current.iter() {
                image.union_with(&images[q * k + x]);
            }
            let target = match index.entry(image) {
                Entry::Occupied(e) => *e.get(),
                Entry::Vacant(e) => {
                    if subsets.len() >= EXPLORATION_CAP {
                        return Err(Error::StateExplosion {
                            cap: EXPLORATION_CAP,
                        });
                    }
                    subsets.push(image);
                    *e.insert(subsets.len() - 1)
                }
            };
            table.push(target);
        }
    }
    let final_flags = subsets.iter().map(|s| s.intersects(&finals)).collect();
    Ok(Determinized {
        dfa: Dfa::from_parts(nfa.alphabet().to_vec(), table, 0, final_flags),
        subsets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::{alphabet, make_dfa, Word};

    #[test]
    fn deterministic_input_keeps_its_shape() {
        let d = make_dfa(
            3,
            alphabet("ab"),
            vec![vec![1, 0], vec![2, 0], vec![2, 2]],
            0,
            [2],
        )
        .unwrap();
        let det = determinize(&d.to_nfa()).unwrap();
        assert_eq!(det.dfa, d);
        assert!(det.subsets.iter().all(|s| s.len() == 1));
    }

    #[test]
    fn empty_subset_is_a_dead_state() {
        // only "a" is accepted
        let nf = Nfa::new(
            2,
            alphabet("a"),
            vec![vec![vec![1]], vec![vec![]]],
            [0],
            [1],
        )
        .unwrap();
        let det = determinize(&nf).unwrap();
        assert_eq!(det.dfa.n(), 3);
        assert_eq!(det.subsets[2], StateSet::empty());
        assert!(det.dfa.accepts(&Word::from("a")).unwrap());
        assert!(!det.dfa.accepts(&Word::from("aa")).unwrap());
    }

    #[test]
    fn cap_is_enforced_and_named() {
        let n = 5;
        let nf = Nfa::new(n, alphabet("a"), vec![vec![vec![0]]; n], [0], []).unwrap();
        assert_eq!(
            determinize_with_cap(&nf, 4).unwrap_err(),
            Error::DeterminizationCap { states: 5, cap: 4 }
        );
        assert!(determinize_with_cap(&nf, 5).is_ok());
    }

    #[test]
    fn empty_initial_set_gives_the_empty_language() {
        let nf = Nfa::new(1, alphabet("ab"), vec![vec![vec![0], vec![0]]], [], [0]).unwrap();
        let det = determinize(&nf).unwrap();
        assert_eq!(det.dfa.n(), 1);
        assert_eq!(det.dfa.finals().count(), 0);
    }
}
