//! Validated numerical semigroups.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A numerical semigroup given by its minimal generating system
/// `a1 < a2 < ... < ap` with `gcd = 1` and `p >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    // apery[r] is the least element of S congruent to r mod a1.
    apery: Vec<u64>,
}

impl NumericalSemigroup {
    /// Sorts, deduplicates and drops every generator that is a combination of
    /// the others.
    pub fn new(raw: &[u64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::Empty);
        }
        if raw.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let g = raw.iter().fold(0u64, |acc, &a| acc.gcd(&a));
        if g != 1 {
            return Err(Error::NotPrimitive(g));
        }
        let mut sorted = raw.to_vec();
        sorted.sort_unstable();
        sorted.dedup();

        // A generator can only be a combination of strictly smaller ones.
        let mut minimal: Vec<u64> = Vec::with_capacity(sorted.len());
        for &a in &sorted {
            if !representable(&minimal, a) {
                minimal.push(a);
            }
        }
        if minimal.len() < 2 {
            return Err(Error::Degenerate);
        }
        let apery = apery_set(&minimal);
        Ok(NumericalSemigroup {
            generators: minimal,
            apery,
        })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Embedding dimension `p`.
    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// `a1`, the multiplicity.
    pub fn smallest(&self) -> u64 {
        self.generators[0]
    }

    /// `ap`.
    pub fn largest(&self) -> u64 {
        *self.generators.last().unwrap()
    }

    pub fn contains(&self, s: u64) -> bool {
        let a1 = self.smallest();
        s >= self.apery[(s % a1) as usize]
    }

    /// Largest integer not in the semigroup, or `-1` for `N` itself (never
    /// produced here since `p >= 2`).
    pub fn frobenius_number(&self) -> i64 {
        *self.apery.iter().max().unwrap() as i64 - self.smallest() as i64
    }

    /// Number of gaps.
    pub fn genus(&self) -> u64 {
        let a1 = self.smallest();
        self.apery.iter().map(|w| w / a1).sum()
    }

    /// Gaps in increasing order.
    pub fn gaps(&self) -> Vec<u64> {
        let f = self.frobenius_number();
        if f < 0 {
            return Vec::new();
        }
        (1..=f as u64).filter(|&s| !self.contains(s)).collect()
    }
}

// Membership of `target` in the monoid spanned by `gens`, by a reachability
// table over [0, target].
fn representable(gens: &[u64], target: u64) -> bool {
    if gens.is_empty() {
        return target == 0;
    }
    let t = target as usize;
    let mut reach = vec![false; t + 1];
    reach[0] = true;
    for s in 1..=t {
        reach[s] = gens
            .iter()
            .any(|&g| (g as usize) <= s && reach[s - g as usize]);
    }
    reach[t]
}

fn apery_set(gens: &[u64]) -> Vec<u64> {
    let m = gens[0] as usize;
    let mut dist = vec![u64::MAX; m];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((w, r))) = heap.pop() {
        if w > dist[r] {
            continue;
        }
        for &g in &gens[1..] {
            let nw = w + g;
            let nr = (r + g as usize) % m;
            if nw < dist[nr] {
                dist[nr] = nw;
                heap.push(Reverse((nw, nr)));
            }
        }
    }
    dist
}

impl FromStr for NumericalSemigroup {
    type Err = Error;

    /// Parses a comma-separated list such as `"4, 9,10,15"`.
    fn from_str(s: &str) -> Result<Self> {
        let gens = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<u64>()
                    .map_err(|_| Error::Parse(format!("invalid generator {tok:?}")))
            })
            .collect::<Result<Vec<u64>>>()?;
        NumericalSemigroup::new(&gens)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.generators.serialize(serializer)
    }
}
