//! Eventual periodicity of `delta_nu`.
//!
//! `delta_nu(n + delta) = delta_nu(n)` for `n >= N0` with
//! `delta = lcm(a1, ap)`. This module checks that on computed tables and
//! measures the smallest period and the point from which it holds.

use std::collections::BTreeMap;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{compute_bounds, BoundsProfile};
use crate::error::{Error, Result};
use crate::fastdnu::{DeltaNuRecord, Evaluator};
use crate::intset::SortedIntSet;
use crate::semigroup::NumericalSemigroup;

pub fn lcm_period(sg: &NumericalSemigroup) -> u64 {
    sg.smallest().lcm(&sg.largest())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodReport {
    pub generators: Vec<u64>,
    pub delta: u64,
    #[serde(rename = "N0")]
    pub n0: u64,
    pub minimal_period: u64,
    pub minimal_preperiod: u64,
    pub residue_table: BTreeMap<u64, SortedIntSet>,
    pub theorem_holds: bool,
    pub verified_upto: u64,
    /// Set for `p = 2`, where no `N0` exists and `N0` is the start of the
    /// checked top window.
    pub empirical: bool,
}

impl PeriodReport {
    /// `delta_nu(n)` as predicted by the residue table, for
    /// `n >= minimal_preperiod`.
    pub fn predict(&self, n: u64) -> Option<&SortedIntSet> {
        if n < self.minimal_preperiod {
            return None;
        }
        self.residue_table.get(&(n % self.minimal_period))
    }

    /// More than one distinct value in the periodic part.
    pub fn nonconstant_periodic_part(&self) -> bool {
        let mut vals = self.residue_table.values();
        match vals.next() {
            Some(first) => vals.any(|v| v != first),
            None => false,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PeriodOptions {
    /// Use only the naive route.
    pub naive_only: bool,
    /// Worker threads for the table fill; 0 lets rayon decide.
    pub jobs: usize,
    /// Accept `n_max < N0 + 2 delta`, checking whatever window is available.
    pub allow_small_window: bool,
}

fn run_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs == 0 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Evaluates `n = 0..=upto` in parallel; records come back in order of `n`.
pub fn evaluate_range(
    ev: &Evaluator,
    upto: u64,
    naive_only: bool,
    jobs: usize,
) -> Result<Vec<DeltaNuRecord>> {
    run_pool(jobs, || {
        (0..=upto)
            .into_par_iter()
            .map(|n| {
                if naive_only {
                    ev.naive(n)
                } else {
                    ev.evaluate(n)
                }
            })
            .collect()
    })
}

/// `delta_nu(n)` for `n = 0..=upto`, windowed where bounds exist.
pub fn delta_nu_table(
    sg: &NumericalSemigroup,
    upto: u64,
    jobs: usize,
) -> Result<Vec<DeltaNuRecord>> {
    let ev = if sg.embedding_dimension() >= 3 {
        Evaluator::new(sg)
    } else {
        Evaluator::with_naive_capacity(sg, upto)
    };
    evaluate_range(&ev, upto, false, jobs)
}

/// Checks `delta_nu(n + delta) = delta_nu(n)` on `[N0, N0 + cycles delta]`,
/// together with the per-zone shifts
/// `gaps(B1(n)) = gaps(B1(n + mu a1))` and `gaps(B3(n)) = gaps(B3(n + mu ap))`
/// for `mu` in `{1, 2}`.
pub fn verify_shift_invariance(
    sg: &NumericalSemigroup,
    bounds: &BoundsProfile,
    cycles: u64,
) -> Result<bool> {
    let ev = Evaluator::with_bounds(sg, bounds.clone());
    let delta = lcm_period(sg);
    let (a1, ap) = (sg.smallest(), sg.largest());
    let start = bounds.n0;
    let end = start + cycles * delta;
    let top = end + delta.max(2 * a1).max(2 * ap);
    let zones = (start..=top)
        .into_par_iter()
        .map(|n| ev.decompose(n).map(|z| (z.b3.gaps(), z.b1.gaps())))
        .collect::<Result<Vec<_>>>()?;
    let at = |n: u64| &zones[(n - start) as usize];
    let dnu = |n: u64| {
        let (g3, g1) = at(n);
        g3.union(&SortedIntSet::singleton(bounds.d)).union(g1)
    };
    for n in start..=end {
        if dnu(n) != dnu(n + delta) {
            return Ok(false);
        }
        for mu in 1..=2 {
            if at(n).1 != at(n + mu * a1).1 || at(n).0 != at(n + mu * ap).0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn divisors(v: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=v).filter(|d| v.is_multiple_of(*d)).collect();
    out.sort_unstable();
    out
}

/// Builds a report from `values[n] = delta_nu(n)`, `n = 0..=n_max`.
pub fn report_from_values(
    sg: &NumericalSemigroup,
    n0: u64,
    values: &[SortedIntSet],
    empirical: bool,
) -> Result<PeriodReport> {
    let delta = lcm_period(sg);
    let n_max = values.len() as u64 - 1;
    let eq_shift = |n: u64, rho: u64| values[n as usize] == values[(n + rho) as usize];

    let theorem_holds = (n0..=n_max.saturating_sub(delta))
        .take_while(|&n| n + delta <= n_max)
        .all(|n| eq_shift(n, delta));

    let window_start = n_max.saturating_sub(2 * delta);
    let rho = divisors(delta)
        .into_iter()
        .find(|&rho| rho <= n_max && (window_start..=n_max - rho).all(|n| eq_shift(n, rho)))
        .ok_or(Error::NoPeriod { delta })?;

    let mut pre = window_start;
    while pre > 0 && eq_shift(pre - 1, rho) {
        pre -= 1;
    }

    let residue_table = (pre..(pre + rho).min(n_max + 1))
        .map(|n| (n % rho, values[n as usize].clone()))
        .collect();

    Ok(PeriodReport {
        generators: sg.generators().to_vec(),
        delta,
        n0,
        minimal_period: rho,
        minimal_preperiod: pre,
        residue_table,
        theorem_holds,
        verified_upto: n_max,
        empirical,
    })
}

pub fn minimal_period_report(sg: &NumericalSemigroup, n_max: u64) -> Result<PeriodReport> {
    minimal_period_report_with(sg, n_max, PeriodOptions::default())
}

pub fn minimal_period_report_with(
    sg: &NumericalSemigroup,
    n_max: u64,
    opts: PeriodOptions,
) -> Result<PeriodReport> {
    let delta = lcm_period(sg);
    let bounds = compute_bounds(sg).ok();
    let (n0, empirical) = match &bounds {
        Some(b) => (b.n0, false),
        None => (n_max.saturating_sub(2 * delta), true),
    };
    let required = n0 + 2 * delta;
    if n_max < required && !opts.allow_small_window {
        return Err(Error::WindowTooSmall { n_max, required });
    }
    let ev = match (&bounds, opts.naive_only) {
        (Some(b), false) => Evaluator::with_bounds(sg, b.clone()),
        _ => Evaluator::with_naive_capacity(sg, n_max),
    };
    let values: Vec<SortedIntSet> = evaluate_range(&ev, n_max, opts.naive_only, opts.jobs)?
        .into_iter()
        .map(|r| r.delta_nu)
        .collect();
    report_from_values(sg, n0, &values, empirical)
}
