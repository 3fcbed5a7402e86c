//! Windowed computation of `delta_nu(n)` for `n >= N0`.
//!
//! Only the elements of `W(n)` in `[n a1, x1]` and `[x2, n ap]` are visited,
//! with `x1 = n a1 + ceil(lambda1)` and `x2 = n ap - floor(lambda2)`. Their
//! lengths are filtered to `B3 = {l <= x1 / ap}` and `B1 = {l >= x2 / a1}`,
//! and the middle of `nu(n)` contributes exactly `{d}`.
//!
//! Neither window needs a full length table. A length `l` of `s` with
//! `l ap <= x1` corresponds to a deficit `u = l ap - s = sum_{i<p} x_i (ap - a_i)`
//! with `u <= x1 - s`; it is realizable iff the fewest coins `ap - a_i` summing
//! to `u` is at most `l`. The high window is symmetric with surplus
//! `t = s - l a1` over coins `a_i - a1`. Both coin tables have width
//! `max(ceil(lambda1), floor(lambda2))`, independent of `n`.

use serde::Serialize;

use crate::bits;
use crate::bounds::{compute_bounds, BoundsProfile};
use crate::error::{Error, Result};
use crate::factorization::{nu_from, LengthTable};
use crate::intset::SortedIntSet;
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Fast,
    Naive,
}

/// One evaluated `delta_nu(n)`, with the number of elements of `W(n)` whose
/// lengths were inspected.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DeltaNuRecord {
    pub n: u64,
    pub method: Method,
    pub delta_nu: SortedIntSet,
    pub evaluated_elements: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZoneDecomposition {
    pub n: u64,
    pub x1: u64,
    pub x2: u64,
    /// `W(n) ∩ [n a1, x1]`
    pub w3: SortedIntSet,
    /// `W(n) ∩ [x2, n ap]`
    pub w1: SortedIntSet,
    pub b3: SortedIntSet,
    pub b1: SortedIntSet,
}

const UNREACHABLE: u64 = u64::MAX;

// Fewest coins summing to each t in [0, width].
fn min_coins(coins: &[u64], width: u64) -> Vec<u64> {
    let mut mc = vec![UNREACHABLE; width as usize + 1];
    mc[0] = 0;
    for t in 1..=width as usize {
        let mut best = UNREACHABLE;
        for &c in coins {
            let c = c as usize;
            if c <= t && mc[t - c] != UNREACHABLE {
                best = best.min(mc[t - c] + 1);
            }
        }
        mc[t] = best;
    }
    mc
}

fn max_finite(mc: &[u64]) -> u64 {
    mc.iter()
        .copied()
        .filter(|&c| c != UNREACHABLE)
        .max()
        .unwrap_or(0)
}

// Values base + j for set bits j that are multiples of m, divided by m.
fn filter_multiples(acc: &[u64], base: u64, m: u64) -> SortedIntSet {
    bits::ones(acc)
        .map(|j| base + j as u64)
        .filter(|v| v % m == 0)
        .map(|v| v / m)
        .collect()
}

fn low_coins(sg: &NumericalSemigroup) -> Vec<u64> {
    let a1 = sg.smallest();
    sg.generators()[1..].iter().map(|a| a - a1).collect()
}

fn high_coins(sg: &NumericalSemigroup) -> Vec<u64> {
    let ap = sg.largest();
    let g = sg.generators();
    g[..g.len() - 1].iter().map(|a| ap - a).collect()
}

// W(n) ∩ [lo, hi] from whichever end of [n a1, n ap] is closer, given
// min-coin tables at least as wide as the offset range used.
fn window_with(
    sg: &NumericalSemigroup,
    n: u64,
    lo: u64,
    hi: u64,
    low_mc: &dyn Fn(u64) -> Vec<u64>,
    high_mc: &dyn Fn(u64) -> Vec<u64>,
) -> SortedIntSet {
    let base_lo = n * sg.smallest();
    let base_hi = n * sg.largest();
    let lo = lo.max(base_lo);
    let hi = hi.min(base_hi);
    if lo > hi {
        return SortedIntSet::new();
    }
    if hi - base_lo <= base_hi - lo {
        let width = hi - base_lo;
        let mc = low_mc(width);
        (lo - base_lo..=width)
            .filter(|&t| mc[t as usize] <= n)
            .map(|t| base_lo + t)
            .collect()
    } else {
        let width = base_hi - lo;
        let mc = high_mc(width);
        (base_hi - hi..=width)
            .filter(|&u| mc[u as usize] <= n)
            .map(|u| base_hi - u)
            .collect()
    }
}

/// `W(n) ∩ [lo, hi]` without materializing `W(n)`.
///
/// The cost depends on the distance of the window from the nearer end of
/// `[n a1, n ap]`, not on `n`.
pub fn window_w_set(sg: &NumericalSemigroup, n: u64, lo: u64, hi: u64) -> SortedIntSet {
    let lc = low_coins(sg);
    let hc = high_coins(sg);
    window_with(sg, n, lo, hi, &|w| min_coins(&lc, w), &|w| {
        min_coins(&hc, w)
    })
}

/// Evaluates `delta_nu` for one semigroup, sharing the bounds, the min-coin
/// tables of the windowed path and the length table of the naive path.
///
/// Immutable after construction, so one evaluator can serve many threads.
#[derive(Clone, Debug)]
pub struct Evaluator {
    sg: NumericalSemigroup,
    bounds: Option<BoundsProfile>,
    low_mc: Vec<u64>,
    high_mc: Vec<u64>,
    table: LengthTable,
    naive_capacity: u64,
    windows: Option<WindowCache>,
}

// For n >= N0 the window offsets and the length sumsets no longer depend on
// n once every reachable offset needs at most N0 coins; only the
// divisibility filter moves with n.
#[derive(Clone, Debug)]
struct WindowCache {
    low_sum: Vec<u64>,
    high_sum: Vec<u64>,
    w3_len: u64,
    w1_len: u64,
    from: u64,
}

impl Evaluator {
    /// Naive evaluation is available below `N0` (and not at all for `p = 2`,
    /// see [`Evaluator::with_naive_capacity`]).
    pub fn new(sg: &NumericalSemigroup) -> Self {
        Self::build(sg, compute_bounds(sg).ok(), 0)
    }

    pub fn with_bounds(sg: &NumericalSemigroup, bounds: BoundsProfile) -> Self {
        Self::build(sg, Some(bounds), 0)
    }

    /// Naive evaluation is available for every `n <= n_max`.
    pub fn with_naive_capacity(sg: &NumericalSemigroup, n_max: u64) -> Self {
        Self::build(sg, compute_bounds(sg).ok(), n_max)
    }

    fn build(sg: &NumericalSemigroup, bounds: Option<BoundsProfile>, n_max: u64) -> Self {
        let below_n0 = bounds.as_ref().map_or(0, |b| b.n0.saturating_sub(1));
        let naive_capacity = n_max.max(below_n0);
        let width = bounds
            .as_ref()
            .map_or(0, |b| b.low_width().max(b.high_width()));
        let mut ev = Evaluator {
            sg: sg.clone(),
            low_mc: min_coins(&low_coins(sg), width),
            high_mc: min_coins(&high_coins(sg), width),
            table: LengthTable::new(sg, naive_capacity * sg.largest()),
            bounds,
            naive_capacity,
            windows: None,
        };
        ev.windows = ev.window_cache();
        ev
    }

    fn window_cache(&self) -> Option<WindowCache> {
        let b = self.bounds.as_ref()?;
        let (a1, ap) = (self.sg.smallest(), self.sg.largest());
        let (w_lo, w_hi) = (b.low_width() as usize, b.high_width() as usize);
        let (lo_lo, hi_hi) = (
            max_finite(&self.low_mc[..=w_lo]),
            max_finite(&self.high_mc[..=w_hi]),
        );
        let (hi_lo, lo_hi) = (
            max_finite(&self.high_mc[..=w_lo]),
            max_finite(&self.low_mc[..=w_hi]),
        );
        let ready = |n: u64| {
            lo_lo <= n
                && hi_hi <= n
                && hi_lo <= (n * a1).div_ceil(ap)
                && lo_hi <= (n * ap - w_hi as u64).div_ceil(a1)
                && n * (ap - a1) > (w_lo + w_hi) as u64
        };
        let from = (b.n0..b.n0 + 4 * (lo_lo + hi_hi + hi_lo + lo_hi + 1)).find(|&n| ready(n))?;
        let t: Vec<usize> = (0..=w_lo)
            .filter(|&t| self.low_mc[t] != UNREACHABLE)
            .collect();
        let u: Vec<usize> = (0..=w_hi)
            .filter(|&u| self.high_mc[u] != UNREACHABLE)
            .collect();
        Some(WindowCache {
            low_sum: self.low_sumset(t.iter().copied(), w_lo),
            high_sum: self.high_sumset(u.iter().map(|&u| w_hi - u), w_hi),
            w3_len: t.len() as u64,
            w1_len: u.len() as u64,
            from,
        })
    }

    // Bits j in [0, width] with j = o + u, o an offset of an element from
    // n a1 and u a reachable deficit.
    fn low_sumset(&self, offsets: impl Iterator<Item = usize>, width: usize) -> Vec<u64> {
        let mut src = vec![0u64; bits::words_for(width + 1)];
        for o in offsets {
            bits::set(&mut src, o);
        }
        let mut acc = vec![0u64; src.len()];
        for u in 0..=width {
            if self.high_mc[u] != UNREACHABLE {
                bits::or_shifted(&mut acc, &src, u);
            }
        }
        bits::truncate(&mut acc, width + 1);
        acc
    }

    // Bits j in [0, width] with j = o - t, o an offset of an element from x2
    // and t a reachable surplus.
    fn high_sumset(&self, offsets: impl Iterator<Item = usize>, width: usize) -> Vec<u64> {
        let mut src = vec![0u64; bits::words_for(width + 1)];
        for o in offsets {
            bits::set(&mut src, o);
        }
        let mut acc = vec![0u64; src.len()];
        for t in 0..=width {
            if self.low_mc[t] != UNREACHABLE {
                bits::or_shifted_right(&mut acc, &src, t);
            }
        }
        acc
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.sg
    }

    pub fn bounds(&self) -> Option<&BoundsProfile> {
        self.bounds.as_ref()
    }

    pub fn naive_capacity(&self) -> u64 {
        self.naive_capacity
    }

    pub fn has_fast_path(&self) -> bool {
        self.bounds.is_some()
    }

    pub fn nu(&self, n: u64) -> Result<SortedIntSet> {
        if n > self.naive_capacity {
            return Err(Error::BeyondCapacity {
                n,
                capacity: self.naive_capacity,
            });
        }
        Ok(nu_from(&self.table, &self.full_w_set(n)))
    }

    // W(n) as n a1 plus the offsets needing at most n coins a_i - a1.
    fn full_w_set(&self, n: u64) -> SortedIntSet {
        let (a1, ap) = (self.sg.smallest(), self.sg.largest());
        window_w_set(&self.sg, n, n * a1, n * ap)
    }

    pub fn naive(&self, n: u64) -> Result<DeltaNuRecord> {
        if n > self.naive_capacity {
            return Err(Error::BeyondCapacity {
                n,
                capacity: self.naive_capacity,
            });
        }
        let w = self.full_w_set(n);
        let nu = nu_from(&self.table, &w);
        Ok(DeltaNuRecord {
            n,
            method: Method::Naive,
            delta_nu: nu.gaps(),
            evaluated_elements: w.len() as u64,
        })
    }

    fn require_bounds(&self) -> Result<&BoundsProfile> {
        let b = self
            .bounds
            .as_ref()
            .ok_or(Error::EmbeddingDimensionTooSmall(
                self.sg.embedding_dimension(),
            ))?;
        if b.lambda1.is_negative() || b.lambda2.is_negative() {
            return Err(Error::NegativeWindow);
        }
        Ok(b)
    }

    pub fn decompose(&self, n: u64) -> Result<ZoneDecomposition> {
        let b = self.require_bounds()?;
        if n < b.n0 {
            return Err(Error::BelowN0 { n, n0: b.n0 });
        }
        let (a1, ap) = (self.sg.smallest(), self.sg.largest());
        let x1 = n * a1 + b.low_width();
        let x2 = n * ap - b.high_width();

        let slice = |mc: &[u64], w: u64| mc[..=w as usize].to_vec();
        let w3 = window_with(&self.sg, n, n * a1, x1, &|w| slice(&self.low_mc, w), &|w| {
            slice(&self.high_mc, w)
        });
        let w1 = window_with(&self.sg, n, x2, n * ap, &|w| slice(&self.low_mc, w), &|w| {
            slice(&self.high_mc, w)
        });

        let b3 = self.low_lengths(n, x1, &w3);
        let b1 = self.high_lengths(n, x2, &w1);
        Ok(ZoneDecomposition {
            n,
            x1,
            x2,
            w3,
            w1,
            b3,
            b1,
        })
    }

    /// Lengths `l <= x1 / ap` of the elements of `w3`.
    ///
    /// `l ap = s + u` with deficit `u` a sum of coins `ap - a_i` using at most
    /// `l` coins. When every reachable deficit needs at most
    /// `ceil(n a1 / ap)` coins the count condition always holds and the
    /// lengths are the multiples of `ap` in the sumset `w3 + U`.
    fn low_lengths(&self, n: u64, x1: u64, w3: &SortedIntSet) -> SortedIntSet {
        let ap = self.sg.largest();
        let base = n * self.sg.smallest();
        let width = (x1 - base) as usize;
        if max_finite(&self.high_mc[..=width]) <= base.div_ceil(ap) {
            let acc = self.low_sumset(w3.iter().map(|&s| (s - base) as usize), width);
            return filter_multiples(&acc, base, ap);
        }
        let mut out = Vec::new();
        for &s in w3 {
            let mut u = (ap - s % ap) % ap;
            while s + u <= x1 {
                let l = (s + u) / ap;
                if self.high_mc[u as usize] <= l {
                    out.push(l);
                }
                u += ap;
            }
        }
        out.into_iter().collect()
    }

    /// Lengths `l >= x2 / a1` of the elements of `w1`: `l a1 = s - t` with
    /// surplus `t` a sum of at most `l` coins `a_i - a1`.
    fn high_lengths(&self, n: u64, x2: u64, w1: &SortedIntSet) -> SortedIntSet {
        let a1 = self.sg.smallest();
        let width = (n * self.sg.largest() - x2) as usize;
        if max_finite(&self.low_mc[..=width]) <= x2.div_ceil(a1) {
            let acc = self.high_sumset(w1.iter().map(|&s| (s - x2) as usize), width);
            return filter_multiples(&acc, x2, a1);
        }
        let mut out = Vec::new();
        for &s in w1 {
            let mut t = s % a1;
            while s - t >= x2 {
                let l = (s - t) / a1;
                if self.low_mc[t as usize] <= l {
                    out.push(l);
                }
                t += a1;
            }
        }
        out.into_iter().collect()
    }

    /// Windowed `delta_nu(n)`; below `N0` it falls back to the naive route and
    /// says so in the record.
    pub fn fast(&self, n: u64) -> Result<DeltaNuRecord> {
        let b = self.require_bounds()?;
        if n < b.n0 {
            return self.naive(n);
        }
        let (b3, b1, evaluated) = match self.windows.as_ref().filter(|c| n >= c.from) {
            Some(c) => {
                let (a1, ap) = (self.sg.smallest(), self.sg.largest());
                let x2 = n * ap - b.high_width();
                (
                    filter_multiples(&c.low_sum, n * a1, ap),
                    filter_multiples(&c.high_sum, x2, a1),
                    c.w3_len + c.w1_len,
                )
            }
            None => {
                let z = self.decompose(n)?;
                let count = (z.w3.len() + z.w1.len()) as u64;
                (z.b3, z.b1, count)
            }
        };
        let delta_nu = b3
            .gaps()
            .union(&SortedIntSet::singleton(b.d))
            .union(&b1.gaps());
        Ok(DeltaNuRecord {
            n,
            method: Method::Fast,
            delta_nu,
            evaluated_elements: evaluated,
        })
    }

    /// Windowed when bounds exist, naive otherwise.
    pub fn evaluate(&self, n: u64) -> Result<DeltaNuRecord> {
        if self.has_fast_path() {
            self.fast(n)
        } else {
            self.naive(n)
        }
    }

    /// Runs both routes and fails on any disagreement.
    pub fn check(&self, n: u64) -> Result<DeltaNuRecord> {
        let fast = self.fast(n)?;
        let naive = Evaluator::with_naive_capacity(&self.sg, n).naive(n)?;
        if fast.delta_nu != naive.delta_nu {
            return Err(Error::Mismatch {
                n,
                fast: fast.delta_nu.into_vec(),
                naive: naive.delta_nu.into_vec(),
            });
        }
        Ok(fast)
    }
}

pub fn decompose(
    sg: &NumericalSemigroup,
    n: u64,
    bounds: &BoundsProfile,
) -> Result<ZoneDecomposition> {
    Evaluator::with_bounds(sg, bounds.clone()).decompose(n)
}

pub fn delta_nu_fast(
    sg: &NumericalSemigroup,
    n: u64,
    bounds: &BoundsProfile,
) -> Result<DeltaNuRecord> {
    if sg.embedding_dimension() < 3 {
        return Err(Error::EmbeddingDimensionTooSmall(sg.embedding_dimension()));
    }
    Evaluator::with_bounds(sg, bounds.clone()).fast(n)
}
