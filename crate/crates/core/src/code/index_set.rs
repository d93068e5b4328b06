use std::cmp::Ordering;
use std::fmt;

/// Subset of the coordinate positions of a code of length at most 128.
///
/// Positions are 0-based internally; [`IndexSet::to_one_based`] and
/// [`IndexSet::from_one_based`] convert at the interfaces.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct IndexSet(u128);

pub const MAX_LENGTH: usize = 128;

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_LENGTH);
        if n == MAX_LENGTH {
            IndexSet(u128::MAX)
        } else {
            IndexSet((1u128 << n) - 1)
        }
    }

    pub fn from_bits(bits: u128) -> Self {
        IndexSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn from_indices(idx: impl IntoIterator<Item = usize>) -> Self {
        IndexSet(idx.into_iter().fold(0, |acc, i| {
            assert!(i < MAX_LENGTH, "index {i} out of range");
            acc | 1 << i
        }))
    }

    /// From 1-based positions; `None` if any position is 0 or exceeds `n`.
    pub fn from_one_based(idx: &[usize], n: usize) -> Option<Self> {
        idx.iter()
            .all(|&i| (1..=n).contains(&i))
            .then(|| IndexSet::from_indices(idx.iter().map(|i| i - 1)))
    }

    pub fn to_one_based(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_LENGTH && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn with(self, i: usize) -> Self {
        IndexSet(self.0 | 1 << i)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: IndexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_strict_subset(self, other: IndexSet) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn union(self, other: IndexSet) -> Self {
        IndexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: IndexSet) -> Self {
        IndexSet(self.0 & other.0)
    }

    /// Positions `0..n` not in the set.
    pub fn complement(self, n: usize) -> Self {
        IndexSet(!self.0 & IndexSet::full(n).0)
    }

    /// Ascending 0-based positions.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            (bits != 0).then(|| {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                i
            })
        })
    }

    /// Image under a permutation of positions (`perm[i]` is the new index of `i`).
    pub fn permute(self, perm: &[usize]) -> Self {
        IndexSet::from_indices(self.iter().map(|i| perm[i]))
    }
}

impl Ord for IndexSet {
    /// Cardinality first, then lexicographic on the sorted positions.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_by_size_then_lex() {
        let mut sets = vec![
            IndexSet::from_indices([0, 1, 2]),
            IndexSet::from_indices([2]),
            IndexSet::EMPTY,
            IndexSet::from_indices([0, 2]),
            IndexSet::from_indices([0]),
            IndexSet::from_indices([1, 2]),
        ];
        sets.sort();
        let shown: Vec<String> = sets.iter().map(|s| format!("{s:?}")).collect();
        assert_eq!(shown, ["{}", "{1}", "{3}", "{1,3}", "{2,3}", "{1,2,3}"]);
    }

    #[test]
    fn one_based_conversion() {
        let s = IndexSet::from_one_based(&[1, 3], 3).unwrap();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(s.to_one_based(), vec![1, 3]);
        assert!(IndexSet::from_one_based(&[0], 3).is_none());
        assert!(IndexSet::from_one_based(&[4], 3).is_none());
        assert_eq!(IndexSet::full(128).len(), 128);
        assert_eq!(s.complement(4), IndexSet::from_indices([1, 3]));
    }
}
