//! Random DFAs for upper-bound sanity checks.
//!
//! Tables are uniform over all total transition functions, the initial state
//! is 0, and final sets are uniform over nonempty proper subsets. Minimal
//! accessible DFAs are obtained by rejection.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::bounds::BoundTable;
use super::verify::measure;
use super::OperationKind;
use crate::automaton::{Dfa, Letter, DEFAULT_SUBSET_CAP};
use crate::error::Result;
use crate::minimize::minimize_refine;
use crate::ops::BoolOp;

/// A uniformly random complete DFA with `n >= 2` states.
pub fn random_dfa<R: Rng>(rng: &mut R, n: usize, alphabet: &[Letter]) -> Dfa {
    assert!(n >= 2, "a nonempty proper final set needs two states");
    let delta = (0..n)
        .map(|_| (0..alphabet.len()).map(|_| rng.gen_range(0..n)).collect())
        .collect();
    let mask: u64 = rng.gen_range(1..(1u64 << n) - 1);
    let finals = (0..n).filter(|q| mask >> q & 1 == 1);
    Dfa::new(n, alphabet.to_vec(), delta, 0, finals).expect("random table is well formed")
}

/// A random DFA with exactly `n` states, all reachable and pairwise
/// distinguishable.
pub fn random_minimal_dfa<R: Rng>(rng: &mut R, n: usize, alphabet: &[Letter]) -> Dfa {
    loop {
        let d = random_dfa(rng, n, alphabet);
        if d.reachable_states().len() == n && minimize_refine(&d).n() == n {
            return d;
        }
    }
}

/// One measured operation on a random pair, next to its upper bound.
#[derive(Clone, Debug)]
pub struct UpperBoundSample {
    pub kind: OperationKind,
    pub m: usize,
    pub n: usize,
    pub measured: usize,
    pub bound: u64,
}

impl UpperBoundSample {
    pub fn holds(&self) -> bool {
        self.measured as u64 <= self.bound
    }
}

/// Kinds whose bounds are upper bounds for arbitrary operands.
pub fn upper_bound_kinds() -> Vec<OperationKind> {
    let mut kinds: Vec<OperationKind> = BoolOp::ALL.map(OperationKind::BoolRevRight).to_vec();
    kinds.push(OperationKind::RevRightMinusLeft);
    kinds.extend(BoolOp::ALL.map(OperationKind::BoolRevBoth));
    kinds
}

/// Measures [`upper_bound_kinds`] on `pairs` random minimal DFA pairs with
/// sizes in `3..=max_size`, seeded by `seed`.
pub fn sample_upper_bounds(
    seed: u64,
    pairs: usize,
    max_size: usize,
    bounds: &BoundTable,
) -> Result<Vec<UpperBoundSample>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for _ in 0..pairs {
        let k = rng.gen_range(2..=3);
        let alphabet: Vec<Letter> = "abc".chars().take(k).map(Letter).collect();
        let m = rng.gen_range(3..=max_size);
        let n = rng.gen_range(3..=max_size);
        let left = random_minimal_dfa(&mut rng, m, &alphabet);
        let right = random_minimal_dfa(&mut rng, n, &alphabet);
        for kind in upper_bound_kinds() {
            let measured = measure(kind, &left, Some(&right), DEFAULT_SUBSET_CAP)?.measured;
            out.push(UpperBoundSample {
                kind,
                m,
                n,
                measured,
                bound: bounds.expected(kind, m, n)?,
            });
        }
    }
    Ok(out)
}
