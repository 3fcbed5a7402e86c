//! Factorizations, length sets, `W(n)`, `nu(n)` and the naive `delta_nu(n)`.

use serde::Serialize;

use crate::bits;
use crate::intset::SortedIntSet;
use crate::semigroup::NumericalSemigroup;

/// A vector `x` in `N^p` together with its length `x1 + ... + xp`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Factorization {
    coordinates: Vec<u64>,
    length: u64,
}

impl Factorization {
    pub fn new(coordinates: Vec<u64>) -> Self {
        let length = coordinates.iter().sum();
        Factorization {
            coordinates,
            length,
        }
    }

    pub fn coordinates(&self) -> &[u64] {
        &self.coordinates
    }

    pub fn length(&self) -> u64 {
        self.length
    }

    /// `sum x_i a_i`, or `None` when the dimensions disagree.
    pub fn value(&self, s: &NumericalSemigroup) -> Option<u64> {
        let gens = s.generators();
        (gens.len() == self.coordinates.len())
            .then(|| gens.iter().zip(&self.coordinates).map(|(a, x)| a * x).sum())
    }
}

/// The length set of one element. Empty iff the element is not in `S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LengthSet {
    pub element: u64,
    pub lengths: SortedIntSet,
}

/// All factorizations of `s`, lexicographically descending.
pub fn factorizations(sg: &NumericalSemigroup, s: u64) -> Vec<Factorization> {
    fn go(gens: &[u64], rest: u64, prefix: &mut Vec<u64>, out: &mut Vec<Factorization>) {
        let (&g, tail) = gens.split_first().unwrap();
        if tail.is_empty() {
            if rest.is_multiple_of(g) {
                prefix.push(rest / g);
                out.push(Factorization::new(prefix.clone()));
                prefix.pop();
            }
            return;
        }
        for k in (0..=rest / g).rev() {
            prefix.push(k);
            go(tail, rest - k * g, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(sg.generators(), s, &mut Vec::new(), &mut out);
    out
}

/// Length sets of every value in `[0, max_value]`, one bitset per value.
///
/// Row `s` has bit `l` set iff `s` has a factorization of length `l`. Rows are
/// stored back to back, row `s` holding `s / a1 + 1` bits.
#[derive(Clone, Debug)]
pub struct LengthTable {
    generators: Vec<u64>,
    max_value: u64,
    offsets: Vec<usize>,
    rows: Vec<u64>,
}

impl LengthTable {
    pub fn new(sg: &NumericalSemigroup, max_value: u64) -> Self {
        let a1 = sg.smallest();
        let n = max_value as usize + 1;
        let mut offsets = Vec::with_capacity(n + 1);
        let mut total = 0usize;
        for s in 0..n as u64 {
            offsets.push(total);
            total += bits::words_for((s / a1 + 1) as usize);
        }
        offsets.push(total);
        let mut rows = vec![0u64; total];
        rows[0] = 1;
        for s in 1..n {
            let (below, cur) = rows.split_at_mut(offsets[s]);
            let cur = &mut cur[..offsets[s + 1] - offsets[s]];
            for &g in sg.generators() {
                let g = g as usize;
                if g > s {
                    break;
                }
                let src = &below[offsets[s - g]..offsets[s - g + 1]];
                bits::or_shifted(cur, src, 1);
            }
        }
        LengthTable {
            generators: sg.generators().to_vec(),
            max_value,
            offsets,
            rows,
        }
    }

    pub fn max_value(&self) -> u64 {
        self.max_value
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub(crate) fn row(&self, s: u64) -> &[u64] {
        assert!(
            s <= self.max_value,
            "{s} beyond table limit {}",
            self.max_value
        );
        let s = s as usize;
        &self.rows[self.offsets[s]..self.offsets[s + 1]]
    }

    /// Width in bits of an accumulator that can hold any row.
    pub(crate) fn length_bits(&self) -> usize {
        (self.max_value / self.generators[0] + 1) as usize
    }

    pub fn lengths(&self, s: u64) -> SortedIntSet {
        bits::ones(self.row(s)).map(|l| l as u64).collect()
    }

    pub(crate) fn union_into(&self, acc: &mut [u64], s: u64) {
        for (a, r) in acc.iter_mut().zip(self.row(s)) {
            *a |= r;
        }
    }
}

pub fn length_set(sg: &NumericalSemigroup, s: u64) -> LengthSet {
    let table = LengthTable::new(sg, s);
    LengthSet {
        element: s,
        lengths: table.lengths(s),
    }
}

pub fn delta_of_element(sg: &NumericalSemigroup, s: u64) -> SortedIntSet {
    length_set(sg, s).lengths.gaps()
}

/// `W(n)`: the values `sum x_i a_i` over all `x` of length `n`.
///
/// Built in `n` steps over offsets from `n * a1`, each step adding one more
/// generator.
pub fn w_set(sg: &NumericalSemigroup, n: u64) -> SortedIntSet {
    let a1 = sg.smallest();
    let span = sg.largest() - a1;
    let width = (n * span + 1) as usize;
    let words = bits::words_for(width);
    let mut cur = vec![0u64; words];
    let mut next = vec![0u64; words];
    cur[0] = 1;
    for k in 1..=n {
        next.iter_mut().for_each(|w| *w = 0);
        for &g in sg.generators() {
            bits::or_shifted(&mut next, &cur, (g - a1) as usize);
        }
        bits::truncate(&mut next, (k * span + 1) as usize);
        std::mem::swap(&mut cur, &mut next);
    }
    let base = n * a1;
    bits::ones(&cur).map(|t| base + t as u64).collect()
}

/// `nu(n)` given `W(n)` and a table covering `max W(n)`.
pub(crate) fn nu_from(table: &LengthTable, w: &SortedIntSet) -> SortedIntSet {
    let mut acc = vec![0u64; bits::words_for(table.length_bits())];
    for &s in w {
        table.union_into(&mut acc, s);
    }
    bits::ones(&acc).map(|l| l as u64).collect()
}

/// `nu(n)`: the union of the length sets of the elements of `W(n)`.
pub fn nu(sg: &NumericalSemigroup, n: u64) -> SortedIntSet {
    let table = LengthTable::new(sg, n * sg.largest());
    nu_from(&table, &w_set(sg, n))
}

/// `delta_nu(n)` by visiting every element of `W(n)`.
pub fn delta_nu_naive(sg: &NumericalSemigroup, n: u64) -> SortedIntSet {
    nu(sg, n).gaps()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::new(g).unwrap()
    }

    fn set(v: &[u64]) -> SortedIntSet {
        v.iter().copied().collect()
    }

    #[test]
    fn factorizations_of_zero_and_small() {
        let s = sg(&[5, 9, 11]);
        let z = factorizations(&s, 0);
        assert_eq!(z, vec![Factorization::new(vec![0, 0, 0])]);
        // 20 = 4*5 = 9 + 11
        assert_eq!(
            factorizations(&s, 20),
            vec![
                Factorization::new(vec![4, 0, 0]),
                Factorization::new(vec![0, 1, 1])
            ]
        );
        assert!(factorizations(&s, 7).is_empty());
    }

    #[test]
    fn factorizations_of_45_in_lex_order() {
        let s = sg(&[5, 9, 11]);
        let got: Vec<Vec<u64>> = factorizations(&s, 45)
            .into_iter()
            .map(|f| f.coordinates().to_vec())
            .collect();
        assert_eq!(
            got,
            vec![vec![9, 0, 0], vec![5, 1, 1], vec![1, 2, 2], vec![0, 5, 0]]
        );
        for f in factorizations(&s, 45) {
            assert_eq!(f.value(&s), Some(45));
        }
    }

    #[test]
    fn length_set_examples() {
        let s = sg(&[5, 9, 11]);
        assert_eq!(length_set(&s, 45).lengths, set(&[5, 7, 9]));
        assert_eq!(length_set(&s, 0).lengths, set(&[0]));
        assert!(length_set(&s, 7).lengths.is_empty());
        assert_eq!(delta_of_element(&s, 45), set(&[2]));
        assert!(delta_of_element(&s, 5).is_empty());
    }

    #[test]
    fn delta_of_30_in_3_10_14() {
        // 30 = 10*3 = 3*10 = 3*2 + 10 + 14 = 2*3 + 10 + 14
        let s = sg(&[3, 10, 14]);
        let lengths: SortedIntSet = factorizations(&s, 30).iter().map(|f| f.length()).collect();
        assert_eq!(length_set(&s, 30).lengths, lengths);
        assert_eq!(delta_of_element(&s, 30), lengths.gaps());
    }

    #[test]
    fn w_set_small_n() {
        let s = sg(&[5, 9, 11]);
        assert_eq!(w_set(&s, 0), set(&[0]));
        assert_eq!(w_set(&s, 1), set(&[5, 9, 11]));
        assert_eq!(w_set(&s, 41).len(), 123);
    }

    #[test]
    fn nu_small_n() {
        let s = sg(&[5, 9, 11]);
        assert_eq!(nu(&s, 0), set(&[0]));
        assert_eq!(nu(&s, 1), set(&[1]));
        let s = sg(&[3, 10, 14]);
        assert_eq!(nu(&s, 2), set(&[2, 3, 7, 8]));
        assert_eq!(nu(&s, 2).gaps(), set(&[1, 4]));
    }

    #[test]
    fn naive_examples() {
        let s = sg(&[3, 10, 14]);
        assert!(delta_nu_naive(&s, 1).is_empty());
        assert_eq!(delta_nu_naive(&s, 3), set(&[1, 3, 4]));
        let s = sg(&[3, 10, 11]);
        assert_eq!(delta_nu_naive(&s, 2), set(&[1, 2]));
    }

    #[test]
    fn table_rows_reuse() {
        let s = sg(&[4, 9, 10, 15]);
        let t = LengthTable::new(&s, 300);
        for v in [0, 1, 4, 36, 100, 299, 300] {
            assert_eq!(t.lengths(v), length_set(&s, v).lengths, "{v}");
        }
    }
}
