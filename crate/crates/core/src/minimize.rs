//! Minimization and comparison of DFAs.
//!
//! Two independent minimizers live here: Hopcroft partition refinement and
//! Brzozowski's double reversal. They are the measuring instrument for every
//! state-complexity figure, so they cross-check each other, and language
//! equivalence is decided by a third route that uses neither.

use std::collections::{HashMap, VecDeque};

use crate::automaton::{
    determinize_with_cap, ensure_same_alphabet, Dfa, StateSet, Word, DEFAULT_SUBSET_CAP,
};
use crate::error::Result;

/// Assignment of states to blocks of indistinguishable states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    block_of: Vec<usize>,
    blocks: usize,
}

impl Partition {
    pub fn block_of(&self, state: usize) -> usize {
        self.block_of[state]
    }

    pub fn block_count(&self) -> usize {
        self.blocks
    }

    /// Members of every block, each list ascending.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.blocks];
        for (q, &b) in self.block_of.iter().enumerate() {
            out[b].push(q);
        }
        out
    }
}

/// Removes unreachable states, renumbering the rest in breadth-first order
/// (letters in alphabet order). The initial state becomes state 0.
pub fn trim(d: &Dfa) -> Dfa {
    let order = d.reachable_states();
    if order.len() == d.n() && order.iter().enumerate().all(|(i, &q)| i == q) {
        return d.clone();
    }
    let mut new_id = vec![usize::MAX; d.n()];
    for (i, &q) in order.iter().enumerate() {
        new_id[q] = i;
    }
    let table = order
        .iter()
        .flat_map(|&q| d.row(q).iter().map(|&t| new_id[t]))
        .collect();
    let finals = order.iter().map(|&q| d.is_final(q)).collect();
    Dfa::from_parts(d.alphabet().to_vec(), table, 0, finals)
}

/// Coarsest partition of all states of `d` into indistinguishable blocks,
/// computed by Hopcroft's algorithm. Block ids ascend with each block's
/// smallest member.
#[allow(clippy::needless_range_loop)]
pub fn refine_partition(d: &Dfa) -> Partition {
    let n = d.n();
    let k = d.alphabet().len();

    // inverse[x] in CSR form: predecessors of t on letter x are
    // preds[x][offsets[x][t]..offsets[x][t + 1]]
    let mut offsets = vec![vec![0usize; n + 1]; k];
    let mut preds = vec![vec![0usize; n]; k];
    for x in 0..k {
        for p in 0..n {
            offsets[x][d.next(p, x) + 1] += 1;
        }
        for t in 0..n {
            offsets[x][t + 1] += offsets[x][t];
        }
        let mut fill = offsets[x].clone();
        for p in 0..n {
            let t = d.next(p, x);
            preds[x][fill[t]] = p;
            fill[t] += 1;
        }
    }

    let (finals, others): (Vec<usize>, Vec<usize>) = (0..n).partition(|&q| d.is_final(q));
    let mut blocks: Vec<Vec<usize>> = [finals, others]
        .into_iter()
        .filter(|b| !b.is_empty())
        .collect();
    let mut block_of = vec![0usize; n];
    for (b, members) in blocks.iter().enumerate() {
        for &q in members {
            block_of[q] = b;
        }
    }

    let mut in_work: Vec<Vec<bool>> = vec![vec![false; k]; blocks.len()];
    let mut work: Vec<(usize, usize)> = Vec::new();
    if blocks.len() == 2 {
        let smaller = if blocks[0].len() <= blocks[1].len() {
            0
        } else {
            1
        };
        work.extend((0..k).map(|x| (smaller, x)));
        in_work[smaller].fill(true);
    }

    let mut marked = vec![false; n];
    let mut hits = vec![0usize; n];
    let mut preimage = Vec::new();
    let mut touched = Vec::new();
    while let Some((splitter, x)) = work.pop() {
        in_work[splitter][x] = false;
        preimage.clear();
        for &t in &blocks[splitter] {
            preimage.extend_from_slice(&preds[x][offsets[x][t]..offsets[x][t + 1]]);
        }
        touched.clear();
        for &p in &preimage {
            if !marked[p] {
                marked[p] = true;
                let b = block_of[p];
                if hits[b] == 0 {
                    touched.push(b);
                }
                hits[b] += 1;
            }
        }
        for &b in &touched {
            if hits[b] < blocks[b].len() {
                let (inside, outside): (Vec<usize>, Vec<usize>) =
                    blocks[b].iter().partition(|&&q| marked[q]);
                let fresh = blocks.len();
                for &q in &outside {
                    block_of[q] = fresh;
                }
                let fresh_smaller = outside.len() < inside.len();
                blocks[b] = inside;
                blocks.push(outside);
                in_work.push(vec![false; k]);
                for c in 0..k {
                    let target = if in_work[b][c] || fresh_smaller {
                        fresh
                    } else {
                        b
                    };
                    if !in_work[target][c] {
                        in_work[target][c] = true;
                        work.push((target, c));
                    }
                }
            }
            hits[b] = 0;
        }
        for &p in &preimage {
            marked[p] = false;
        }
    }

    // renumber blocks by smallest member
    let mut order: Vec<usize> = (0..blocks.len()).collect();
    order.sort_by_key(|&b| blocks[b].iter().min().copied().unwrap_or(usize::MAX));
    let mut rank = vec![0usize; blocks.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    Partition {
        block_of: block_of.iter().map(|&b| rank[b]).collect(),
        blocks: blocks.len(),
    }
}

/// The quotient automaton of `d` by a partition that respects transitions
/// and finality.
pub fn quotient(d: &Dfa, partition: &Partition) -> Dfa {
    let mut representative = vec![usize::MAX; partition.block_count()];
    for q in (0..d.n()).rev() {
        representative[partition.block_of(q)] = q;
    }
    let table = representative
        .iter()
        .flat_map(|&r| d.row(r).iter().map(|&t| partition.block_of(t)))
        .collect();
    let finals = representative.iter().map(|&r| d.is_final(r)).collect();
    Dfa::from_parts(
        d.alphabet().to_vec(),
        table,
        partition.block_of(d.initial()),
        finals,
    )
}

/// Minimal complete DFA by reachability trim followed by partition refinement.
pub fn minimize_refine(d: &Dfa) -> Dfa {
    let trimmed = trim(d);
    let partition = refine_partition(&trimmed);
    quotient(&trimmed, &partition)
}

/// Minimal complete DFA by double reversal and determinization.
pub fn minimize_brzozowski(d: &Dfa) -> Result<Dfa> {
    minimize_brzozowski_with_cap(d, DEFAULT_SUBSET_CAP)
}

/// Brzozowski minimization where the first subset construction is subject to
/// `cap`. The second pass starts from a DFA whose reverse is deterministic, so
/// it discovers at most as many subsets as `d` has reachable states; it is only
/// limited by the state-set width.
pub fn minimize_brzozowski_with_cap(d: &Dfa, cap: usize) -> Result<Dfa> {
    let once = determinize_with_cap(&d.reverse(), cap)?.dfa;
    Ok(determinize_with_cap(&once.reverse(), StateSet::WIDTH)?.dfa)
}

/// Isomorphism of the accessible parts of two DFAs with equal state counts,
/// decided by a parallel breadth-first walk from the initial pair.
///
/// For trim DFAs (in particular minimal ones) this is exactly isomorphism.
pub fn are_isomorphic(d1: &Dfa, d2: &Dfa) -> Result<bool> {
    ensure_same_alphabet(d1.alphabet(), d2.alphabet())?;
    if d1.n() != d2.n() {
        return Ok(false);
    }
    let k = d1.alphabet().len();
    let mut forward = vec![usize::MAX; d1.n()];
    let mut backward = vec![usize::MAX; d2.n()];
    forward[d1.initial()] = d2.initial();
    backward[d2.initial()] = d1.initial();
    let mut queue = VecDeque::from([(d1.initial(), d2.initial())]);
    while let Some((p, q)) = queue.pop_front() {
        if d1.is_final(p) != d2.is_final(q) {
            return Ok(false);
        }
        for x in 0..k {
            let (s, t) = (d1.next(p, x), d2.next(q, x));
            match (forward[s], backward[t]) {
                (usize::MAX, usize::MAX) => {
                    forward[s] = t;
                    backward[t] = s;
                    queue.push_back((s, t));
                }
                (fs, bt) if fs == t && bt == s => {}
                _ => return Ok(false),
            }
        }
    }
    Ok(true)
}

/// A shortest word accepted by exactly one of the two DFAs, if any.
///
/// Explores the product breadth-first and stops at the first pair whose
/// components disagree on finality; no minimization is involved.
pub fn distinguishing_word(d1: &Dfa, d2: &Dfa) -> Result<Option<Word>> {
    ensure_same_alphabet(d1.alphabet(), d2.alphabet())?;
    let k = d1.alphabet().len();
    let start = (d1.initial(), d2.initial());
    // pair -> (predecessor pair, letter index) on a shortest path
    type Parent = Option<((usize, usize), usize)>;
    let mut parent: HashMap<(usize, usize), Parent> = HashMap::from([(start, None)]);
    let mut queue = VecDeque::from([start]);
    while let Some(pair @ (p, q)) = queue.pop_front() {
        if d1.is_final(p) != d2.is_final(q) {
            let mut letters = Vec::new();
            let mut cursor = pair;
            while let Some(Some((prev, x))) = parent.get(&cursor) {
                letters.push(d1.alphabet()[*x]);
                cursor = *prev;
            }
            letters.reverse();
            return Ok(Some(Word(letters)));
        }
        for x in 0..k {
            let next = (d1.next(p, x), d2.next(q, x));
            if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(next) {
                e.insert(Some((pair, x)));
                queue.push_back(next);
            }
        }
    }
    Ok(None)
}

/// Language equality, via emptiness of the symmetric-difference product.
pub fn are_equivalent(d1: &Dfa, d2: &Dfa) -> Result<bool> {
    Ok(distinguishing_word(d1, d2)?.is_none())
}
