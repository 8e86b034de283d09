use std::fmt;

const WORDS: usize = 4;

/// A subset of `{0..WIDTH-1}` stored as a fixed-width characteristic bitmask.
///
/// Every set operation touches a constant number of machine words, which is
/// what makes the subset construction cheap per discovered state.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateSet([u64; WORDS]);

impl StateSet {
    /// Largest number of distinct members a set can hold.
    pub const WIDTH: usize = WORDS * 64;

    pub const fn empty() -> Self {
        StateSet([0; WORDS])
    }

    pub fn singleton(state: usize) -> Self {
        let mut set = Self::empty();
        set.insert(state);
        set
    }

    /// `{0..n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= Self::WIDTH, "state set width exceeded");
        let mut set = Self::empty();
        for (i, word) in set.0.iter_mut().enumerate() {
            let lo = i * 64;
            if n >= lo + 64 {
                *word = u64::MAX;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        set
    }

    pub fn insert(&mut self, state: usize) {
        assert!(
            state < Self::WIDTH,
            "state {state} does not fit a state set"
        );
        self.0[state / 64] |= 1 << (state % 64);
    }

    pub fn remove(&mut self, state: usize) {
        if state < Self::WIDTH {
            self.0[state / 64] &= !(1 << (state % 64));
        }
    }

    pub fn contains(&self, state: usize) -> bool {
        state < Self::WIDTH && self.0[state / 64] & (1 << (state % 64)) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|w| *w == 0)
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = *self;
        out.union_with(other);
        out
    }

    pub fn union_with(&mut self, other: &Self) {
        for (a, b) in self.0.iter_mut().zip(other.0.iter()) {
            *a |= *b;
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a &= *b;
        }
        out
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a &= !*b;
        }
        out
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).any(|(a, b)| a & b != 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter {
        Iter {
            words: self.0,
            index: 0,
        }
    }

    /// Largest member plus one, or zero for the empty set.
    pub fn bound(&self) -> usize {
        for i in (0..WORDS).rev() {
            if self.0[i] != 0 {
                return i * 64 + 64 - self.0[i].leading_zeros() as usize;
            }
        }
        0
    }
}

impl FromIterator<usize> for StateSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = Self::empty();
        for state in iter {
            set.insert(state);
        }
        set
    }
}

impl IntoIterator for &StateSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, state) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{state}")?;
        }
        f.write_str("}")
    }
}

pub struct Iter {
    words: [u64; WORDS],
    index: usize,
}

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.index < WORDS {
            let word = &mut self.words[self.index];
            if *word != 0 {
                let bit = word.trailing_zeros() as usize;
                *word &= *word - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_sets_have_exact_width() {
        assert_eq!(StateSet::full(0), StateSet::empty());
        assert_eq!(StateSet::full(3).iter().collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(StateSet::full(64).len(), 64);
        assert!(!StateSet::full(64).contains(64));
        assert_eq!(StateSet::full(130).len(), 130);
        assert_eq!(StateSet::full(StateSet::WIDTH).len(), StateSet::WIDTH);
    }

    #[test]
    fn bound_tracks_largest_member() {
        assert_eq!(StateSet::empty().bound(), 0);
        assert_eq!(StateSet::singleton(0).bound(), 1);
        assert_eq!([3, 200].into_iter().collect::<StateSet>().bound(), 201);
    }

    #[test]
    fn display_lists_members() {
        let set: StateSet = [0, 2, 70].into_iter().collect();
        assert_eq!(set.to_string(), "{0,2,70}");
    }

    proptest! {
        #[test]
        fn agrees_with_btreeset(xs in proptest::collection::btree_set(0usize..StateSet::WIDTH, 0..40),
                                ys in proptest::collection::btree_set(0usize..StateSet::WIDTH, 0..40)) {
            let a: StateSet = xs.iter().copied().collect();
            let b: StateSet = ys.iter().copied().collect();
            prop_assert_eq!(a.iter().collect::<Vec<_>>(), xs.iter().copied().collect::<Vec<_>>());
            prop_assert_eq!(a.len(), xs.len());
            prop_assert_eq!(a.union(&b).iter().collect::<Vec<_>>(), xs.union(&ys).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.intersection(&b).iter().collect::<Vec<_>>(), xs.intersection(&ys).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.difference(&b).iter().collect::<Vec<_>>(), xs.difference(&ys).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.intersects(&b), xs.intersection(&ys).next().is_some());
        }
    }
}
