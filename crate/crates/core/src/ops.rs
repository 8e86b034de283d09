//! Language operations: boolean combinations by direct product, and
//! epsilon-free concatenation and star.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::automaton::{ensure_same_alphabet, Dfa, Nfa, EXPLORATION_CAP};
use crate::error::{Error, Result};

/// The four boolean operations, each identified by its finality predicate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoolOp {
    Union,
    Intersection,
    Difference,
    SymmetricDifference,
}

impl BoolOp {
    pub const ALL: [BoolOp; 4] = [
        BoolOp::Union,
        BoolOp::Intersection,
        BoolOp::Difference,
        BoolOp::SymmetricDifference,
    ];

    /// Whether a product state is final given the finality of its components.
    pub fn accepts(self, left: bool, right: bool) -> bool {
        match self {
            BoolOp::Union => left || right,
            BoolOp::Intersection => left && right,
            BoolOp::Difference => left && !right,
            BoolOp::SymmetricDifference => left != right,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BoolOp::Union => "union",
            BoolOp::Intersection => "intersection",
            BoolOp::Difference => "difference",
            BoolOp::SymmetricDifference => "symdiff",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            BoolOp::Union => "∪",
            BoolOp::Intersection => "∩",
            BoolOp::Difference => "\\",
            BoolOp::SymmetricDifference => "⊕",
        }
    }
}

impl fmt::Display for BoolOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoolOp {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        BoolOp::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| format!("unknown boolean operation '{s}'"))
    }
}

/// Accessible direct product of two DFAs.
#[derive(Clone, Debug)]
pub struct Product {
    pub dfa: Dfa,
    /// `pairs[i]` holds the component states of product state `i`.
    pub pairs: Vec<(usize, usize)>,
}

impl Product {
    pub fn reachable_pairs(&self) -> usize {
        self.pairs.len()
    }
}

/// Direct product restricted to pairs reachable from `(d1.initial, d2.initial)`.
///
/// Pairs are numbered in breadth-first discovery order; within one state the
/// letters are taken in alphabet order.
pub fn boolean_product(d1: &Dfa, d2: &Dfa, op: BoolOp) -> Result<Product> {
    ensure_same_alphabet(d1.alphabet(), d2.alphabet())?;
    let k = d1.alphabet().len();
    let start = (d1.initial(), d2.initial());
    let mut index: HashMap<(usize, usize), usize> = HashMap::from([(start, 0)]);
    let mut pairs = vec![start];
    let mut table = Vec::new();
    let mut next = 0;
    while next < pairs.len() {
        let (p, q) = pairs[next];
        next += 1;
        for x in 0..k {
            let target = (d1.next(p, x), d2.next(q, x));
            let id = match index.entry(target) {
                Entry::Occupied(e) => *e.get(),
                Entry::Vacant(e) => {
                    if pairs.len() >= EXPLORATION_CAP {
                        return Err(Error::StateExplosion {
                            cap: EXPLORATION_CAP,
                        });
                    }
                    pairs.push(target);
                    *e.insert(pairs.len() - 1)
                }
            };
            table.push(id);
        }
    }
    let finals = pairs
        .iter()
        .map(|&(p, q)| op.accepts(d1.is_final(p), d2.is_final(q)))
        .collect();
    Ok(Product {
        dfa: Dfa::from_parts(d1.alphabet().to_vec(), table, 0, finals),
        pairs,
    })
}

/// NFA for `L(left) · L(right)` on the disjoint union of the state sets
/// (left states first).
///
/// Every left transition that enters a left final state is doubled by
/// transitions to all right initial states. The right initial states are
/// also initial when some left initial state is final.
pub fn concatenate_nfa(left: &Nfa, right: &Nfa) -> Result<Nfa> {
    ensure_same_alphabet(left.alphabet(), right.alphabet())?;
    let k = left.alphabet().len();
    let offset = left.n();
    let total = offset + right.n();
    let right_initials: Vec<usize> = right.initials().iter().map(|&q| q + offset).collect();

    let mut delta = Vec::with_capacity(total * k);
    for p in 0..left.n() {
        for x in 0..k {
            let mut targets = left.successors(p, x).to_vec();
            if targets.iter().any(|&t| left.is_final(t)) {
                targets.extend_from_slice(&right_initials);
            }
            delta.push(targets);
        }
    }
    for p in 0..right.n() {
        for x in 0..k {
            delta.push(right.successors(p, x).iter().map(|&t| t + offset).collect());
        }
    }

    let mut initials = left.initials().to_vec();
    if left.initials().iter().any(|&q| left.is_final(q)) {
        initials.extend_from_slice(&right_initials);
    }
    let finals = (0..total)
        .map(|q| q >= offset && right.is_final(q - offset))
        .collect();
    Ok(Nfa::from_parts(
        left.alphabet().to_vec(),
        delta,
        initials,
        finals,
    ))
}

/// NFA for `L(left) · L(right)` with a DFA on the left.
pub fn concatenate(left: &Dfa, right: &Nfa) -> Result<Nfa> {
    concatenate_nfa(&left.to_nfa(), right)
}

/// NFA for `L(d)*`, with one added state (numbered `d.n()`) that is the sole
/// initial state and is final.
///
/// Transitions entering a final state of `d` also re-enter `d.initial`, and
/// the added state copies the moves of `d.initial`.
pub fn star(d: &Dfa) -> Nfa {
    star_nfa(&d.to_nfa())
}

/// Star of an arbitrary NFA, with the same added-state construction as [`star`].
pub fn star_nfa(nf: &Nfa) -> Nfa {
    let n = nf.n();
    let k = nf.alphabet().len();
    let restart = nf.initials();
    let feedback = |targets: &[usize]| {
        let mut out = targets.to_vec();
        if targets.iter().any(|&t| nf.is_final(t)) {
            out.extend_from_slice(restart);
        }
        out
    };
    let mut delta = Vec::with_capacity((n + 1) * k);
    for p in 0..n {
        for x in 0..k {
            delta.push(feedback(nf.successors(p, x)));
        }
    }
    for x in 0..k {
        let mut moves = Vec::new();
        for &q in restart {
            moves.extend(feedback(nf.successors(q, x)));
        }
        delta.push(moves);
    }
    let finals = (0..=n).map(|q| q == n || nf.is_final(q)).collect();
    Nfa::from_parts(nf.alphabet().to_vec(), delta, vec![n], finals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::{alphabet, determinize, make_dfa, Word};
    use crate::minimize::{are_equivalent, minimize_refine};

    fn sigma_star() -> Dfa {
        make_dfa(1, alphabet("ab"), vec![vec![0, 0]], 0, [0]).unwrap()
    }

    fn nothing() -> Dfa {
        make_dfa(1, alphabet("ab"), vec![vec![0, 0]], 0, []).unwrap()
    }

    // words containing "ab"
    fn has_ab() -> Dfa {
        make_dfa(
            3,
            alphabet("ab"),
            vec![vec![1, 0], vec![1, 2], vec![2, 2]],
            0,
            [2],
        )
        .unwrap()
    }

    // even number of a's
    fn even_a() -> Dfa {
        make_dfa(2, alphabet("ab"), vec![vec![1, 0], vec![0, 1]], 0, [0]).unwrap()
    }

    #[test]
    fn predicate_tables_match_set_semantics() {
        let rows = [(false, false), (false, true), (true, false), (true, true)];
        let expect = |op| match op {
            BoolOp::Union => [false, true, true, true],
            BoolOp::Intersection => [false, false, false, true],
            BoolOp::Difference => [false, false, true, false],
            BoolOp::SymmetricDifference => [false, true, true, false],
        };
        for op in BoolOp::ALL {
            let got: Vec<bool> = rows.iter().map(|&(l, r)| op.accepts(l, r)).collect();
            assert_eq!(got, expect(op), "{op}");
            assert_eq!(op.name().parse::<BoolOp>().unwrap(), op);
        }
    }

    #[test]
    fn difference_with_empty_language_is_identity() {
        let p = boolean_product(&has_ab(), &nothing(), BoolOp::Difference).unwrap();
        assert!(are_equivalent(&p.dfa, &has_ab()).unwrap());
    }

    #[test]
    fn symmetric_difference_with_itself_is_empty() {
        let p = boolean_product(&has_ab(), &has_ab(), BoolOp::SymmetricDifference).unwrap();
        assert_eq!(p.dfa.finals().count(), 0);
        assert_eq!(p.reachable_pairs(), 3);
    }

    #[test]
    fn product_counts_are_bounded_by_mn() {
        for op in BoolOp::ALL {
            let p = boolean_product(&has_ab(), &even_a(), op).unwrap();
            assert!(p.reachable_pairs() <= 6);
        }
    }

    #[test]
    fn concatenation_with_sigma_star_on_the_left() {
        let nf = concatenate(&sigma_star(), &has_ab().to_nfa()).unwrap();
        assert_eq!(nf.n(), 4);
        let det = determinize(&nf).unwrap().dfa;
        // Σ*·L where L already absorbs prefixes: the language is unchanged
        assert!(are_equivalent(&det, &has_ab()).unwrap());
    }

    #[test]
    fn concatenation_splices_at_final_entries() {
        // a* over {a,b} followed by b
        let a_star = make_dfa(2, alphabet("ab"), vec![vec![0, 1], vec![1, 1]], 0, [0]).unwrap();
        let just_b = make_dfa(
            3,
            alphabet("ab"),
            vec![vec![2, 1], vec![2, 2], vec![2, 2]],
            0,
            [1],
        )
        .unwrap();
        let nf = concatenate(&a_star, &just_b.to_nfa()).unwrap();
        assert_eq!(nf.initials(), &[0, 2]);
        for (w, expect) in [
            ("b", true),
            ("aab", true),
            ("", false),
            ("aba", false),
            ("bb", false),
        ] {
            assert_eq!(nf.accepts(&Word::from(w)).unwrap(), expect, "{w}");
        }
    }

    #[test]
    fn star_of_empty_language_is_epsilon() {
        let s = star(&nothing());
        assert_eq!(s.n(), 2);
        assert!(s.accepts(&Word::empty()).unwrap());
        assert!(!s.accepts(&Word::from("a")).unwrap());
        let m = minimize_refine(&determinize(&s).unwrap().dfa);
        assert_eq!(m.n(), 2);
    }

    #[test]
    fn star_accepts_concatenations() {
        let s = star(&has_ab());
        for (w, expect) in [
            ("", true),
            ("ab", true),
            ("abab", true),
            ("ba", false),
            ("bab", true),
        ] {
            assert_eq!(s.accepts(&Word::from(w)).unwrap(), expect, "{w}");
        }
    }

    #[test]
    fn mismatched_alphabets_are_rejected() {
        let other = make_dfa(1, alphabet("abc"), vec![vec![0, 0, 0]], 0, []).unwrap();
        assert!(matches!(
            boolean_product(&has_ab(), &other, BoolOp::Union),
            Err(Error::AlphabetMismatch { .. })
        ));
        assert!(concatenate(&has_ab(), &other.to_nfa()).is_err());
    }
}
