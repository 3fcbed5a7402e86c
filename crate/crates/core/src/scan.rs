//! Genus-ordered walk over the tree of numerical semigroups.
//!
//! The children of `S` are `S \ {g}` for every minimal generator `g` greater
//! than the Frobenius number of `S`; starting from `N` this reaches every
//! numerical semigroup exactly once, at depth equal to its genus.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fastdnu::Evaluator;
use crate::periodicity::{lcm_period, report_from_values, PeriodReport};
use crate::semigroup::NumericalSemigroup;

pub const MAX_GENUS_CEILING: u64 = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanFilter {
    pub max_genus: u64,
    pub skip_generalized_arithmetic: bool,
    pub require_nonconstant: bool,
}

impl ScanFilter {
    pub fn new(max_genus: u64) -> Self {
        ScanFilter {
            max_genus: max_genus.min(MAX_GENUS_CEILING),
            skip_generalized_arithmetic: true,
            require_nonconstant: false,
        }
    }
}

/// True iff the minimal generators are `m, m + k, ..., m + (p-1) k`. Every
/// two-generator semigroup qualifies.
pub fn is_generalized_arithmetic(sg: &NumericalSemigroup) -> bool {
    let g = sg.generators();
    let k = g[1] - g[0];
    g.windows(2).all(|w| w[1] - w[0] == k)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub genus: u64,
    pub generators: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<PeriodReport>,
    /// Two or more distinct values in the periodic part.
    pub nonconstant_periodic: bool,
    /// `delta_nu(n)` takes two or more values over `n >= 2`.
    pub nonconstant: bool,
    pub truncated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

// A node of the tree: gaps plus minimal generators, enough to list children.
#[derive(Clone, Debug)]
struct Node {
    gaps: Vec<u64>,
    generators: Vec<u64>,
}

impl Node {
    fn root() -> Self {
        Node {
            gaps: Vec::new(),
            generators: vec![1],
        }
    }

    fn frobenius(&self) -> i64 {
        self.gaps.last().map_or(-1, |&f| f as i64)
    }

    fn from_gaps(gaps: Vec<u64>) -> Self {
        let f = gaps.last().copied().unwrap_or(0);
        let is_member = |s: u64| s == 0 || gaps.binary_search(&s).is_err();
        let m = (1..).find(|&s| is_member(s)).unwrap();
        // minimal generators are bounded by F + m
        let generators = (1..=f + m)
            .filter(|&s| is_member(s))
            .filter(|&s| !(1..=s / 2).any(|a| is_member(a) && is_member(s - a)))
            .collect();
        Node { gaps, generators }
    }

    fn children(&self) -> Vec<Node> {
        let f = self.frobenius();
        self.generators
            .iter()
            .filter(|&&g| g as i64 > f)
            .map(|&g| {
                let mut gaps = self.gaps.clone();
                gaps.push(g);
                Node::from_gaps(gaps)
            })
            .collect()
    }
}

/// Semigroups of genus exactly `1..=max_genus`, grouped by genus, each group
/// sorted by generators.
pub fn semigroups_by_genus(max_genus: u64) -> Vec<Vec<NumericalSemigroup>> {
    let mut level = vec![Node::root()];
    let mut out = Vec::new();
    for _ in 1..=max_genus {
        level = level.iter().flat_map(Node::children).collect();
        let mut sgs: Vec<NumericalSemigroup> = level
            .iter()
            .map(|n| {
                NumericalSemigroup::new(&n.generators).expect("tree node is a valid semigroup")
            })
            .collect();
        sgs.sort_by(|a, b| a.generators().cmp(b.generators()));
        out.push(sgs);
    }
    out
}

/// Report for one semigroup up to `N0 + 3 delta`, evaluated sequentially with
/// an optional wall-clock budget.
pub fn scan_one(sg: &NumericalSemigroup, budget: Option<Duration>) -> Result<PeriodReport> {
    let started = Instant::now();
    let delta = lcm_period(sg);
    let ev0 = Evaluator::new(sg);
    let (n0, empirical, ev) = match ev0.bounds().map(|b| b.n0) {
        Some(n0) => (n0, false, ev0),
        None => {
            let n_max = 3 * delta;
            (
                n_max - 2 * delta,
                true,
                Evaluator::with_naive_capacity(sg, n_max),
            )
        }
    };
    let n_max = if empirical { 3 * delta } else { n0 + 3 * delta };
    let mut values = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max {
        if let Some(b) = budget {
            if started.elapsed() > b {
                return Err(Error::OverBudget(b.as_millis() as u64));
            }
        }
        values.push(ev.evaluate(n)?.delta_nu);
    }
    report_from_values(sg, n0, &values, empirical)
}

fn record_for(sg: &NumericalSemigroup, genus: u64, budget: Option<Duration>) -> ScanRecord {
    let mut rec = ScanRecord {
        genus,
        generators: sg.generators().to_vec(),
        report: None,
        nonconstant_periodic: false,
        nonconstant: false,
        truncated: false,
        error: None,
    };
    match scan_one(sg, budget) {
        Ok(report) => {
            rec.nonconstant_periodic = report.nonconstant_periodic_part();
            rec.report = Some(report);
        }
        Err(Error::OverBudget(_)) => rec.truncated = true,
        Err(e) => rec.error = Some(e.to_string()),
    }
    if let Some(r) = &rec.report {
        // the pre-period part is not stored, recompute the small-n values
        rec.nonconstant = rec.nonconstant_periodic || prefix_differs(sg, r);
    }
    rec
}

fn prefix_differs(sg: &NumericalSemigroup, r: &PeriodReport) -> bool {
    let eventual = match r.residue_table.values().next() {
        Some(v) => v,
        None => return false,
    };
    let ev = Evaluator::with_naive_capacity(sg, r.minimal_preperiod);
    (2..r.minimal_preperiod).any(|n| match ev.evaluate(n) {
        Ok(rec) => &rec.delta_nu != eventual,
        Err(_) => false,
    })
}

/// Walks genus `1..=max_genus`, emitting one record per semigroup that passes
/// the filter, ordered by genus then generators regardless of `jobs`.
///
/// Per-semigroup failures become records with `error` set. `budget` caps the
/// time spent on each semigroup; over-budget ones are marked `truncated`.
pub fn genus_tree_scan(
    filter: &ScanFilter,
    jobs: usize,
    budget: Option<Duration>,
) -> Vec<ScanRecord> {
    let work = || {
        let mut out = Vec::new();
        for (i, level) in semigroups_by_genus(filter.max_genus.min(MAX_GENUS_CEILING))
            .into_iter()
            .enumerate()
        {
            let genus = i as u64 + 1;
            let recs: Vec<ScanRecord> = level
                .par_iter()
                .filter(|sg| !(filter.skip_generalized_arithmetic && is_generalized_arithmetic(sg)))
                .map(|sg| record_for(sg, genus, budget))
                .filter(|r| {
                    !filter.require_nonconstant
                        || r.nonconstant_periodic
                        || r.error.is_some()
                        || r.truncated
                })
                .collect();
            out.extend(recs);
        }
        out
    };
    if jobs == 0 {
        return work();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(work),
        Err(_) => work(),
    }
}
