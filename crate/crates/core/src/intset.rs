use std::fmt;

use serde::{Deserialize, Serialize};

/// A strictly increasing sequence of nonnegative integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SortedIntSet(Vec<u64>);

impl SortedIntSet {
    pub fn new() -> Self {
        SortedIntSet(Vec::new())
    }

    /// Returns `None` unless `values` is strictly increasing.
    pub fn from_sorted(values: Vec<u64>) -> Option<Self> {
        if values.windows(2).all(|w| w[0] < w[1]) {
            Some(SortedIntSet(values))
        } else {
            None
        }
    }

    pub fn singleton(v: u64) -> Self {
        SortedIntSet(vec![v])
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, u64> {
        self.0.iter()
    }

    pub fn first(&self) -> Option<u64> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<u64> {
        self.0.last().copied()
    }

    pub fn contains(&self, v: u64) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn union(&self, other: &SortedIntSet) -> SortedIntSet {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (self.0[i], other.0[j]);
            if a < b {
                out.push(a);
                i += 1;
            } else if b < a {
                out.push(b);
                j += 1;
            } else {
                out.push(a);
                i += 1;
                j += 1;
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        SortedIntSet(out)
    }

    /// The set of successive differences; empty when there are fewer than two
    /// elements.
    pub fn gaps(&self) -> SortedIntSet {
        self.0.windows(2).map(|w| w[1] - w[0]).collect()
    }
}

/// Successive-difference set of a sorted set.
pub fn gaps_of(set: &SortedIntSet) -> SortedIntSet {
    set.gaps()
}

impl FromIterator<u64> for SortedIntSet {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        let mut v: Vec<u64> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        SortedIntSet(v)
    }
}

impl<'a> IntoIterator for &'a SortedIntSet {
    type Item = &'a u64;
    type IntoIter = std::slice::Iter<'a, u64>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl From<SortedIntSet> for Vec<u64> {
    fn from(s: SortedIntSet) -> Vec<u64> {
        s.0
    }
}

impl fmt::Display for SortedIntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(v: &[u64]) -> SortedIntSet {
        v.iter().copied().collect()
    }

    #[test]
    fn gaps_examples() {
        assert_eq!(gaps_of(&set(&[3, 5, 9])), set(&[2, 4]));
        assert!(gaps_of(&set(&[7])).is_empty());
        assert!(gaps_of(&SortedIntSet::new()).is_empty());
        assert_eq!(gaps_of(&set(&[5, 7, 9])), set(&[2]));
    }

    #[test]
    fn from_sorted_rejects_duplicates() {
        assert!(SortedIntSet::from_sorted(vec![1, 1]).is_none());
        assert!(SortedIntSet::from_sorted(vec![2, 1]).is_none());
        assert!(SortedIntSet::from_sorted(vec![1, 4]).is_some());
    }

    proptest! {
        #[test]
        fn appending_above_max_adds_that_gap(v in prop::collection::vec(0u64..500, 1..30), g in 1u64..50) {
            let a: SortedIntSet = v.into_iter().collect();
            let top = a.last().unwrap() + g;
            let b: SortedIntSet = a.iter().copied().chain(std::iter::once(top)).collect();
            prop_assert!(b.gaps().contains(g));
        }

        #[test]
        fn union_matches_collect(a in prop::collection::vec(0u64..100, 0..20), b in prop::collection::vec(0u64..100, 0..20)) {
            let sa: SortedIntSet = a.iter().copied().collect();
            let sb: SortedIntSet = b.iter().copied().collect();
            let both: SortedIntSet = a.into_iter().chain(b).collect();
            prop_assert_eq!(sa.union(&sb), both);
        }
    }
}
