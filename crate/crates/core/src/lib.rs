//! Factorization-length invariants of numerical semigroups.
//!
//! For a numerical semigroup `S = <a1 < ... < ap>` this crate computes the
//! factorizations `Z(s)` of an element, its length set `L(s)` and delta set,
//! the sets `W(n)` of elements admitting a factorization of length `n`, the
//! union `nu(n)` of their length sets and the successive-difference set
//! `delta_nu(n)`.
//!
//! Two routes compute `delta_nu(n)`:
//!
//! * [`delta_nu_naive`] walks every element of `W(n)`;
//! * [`delta_nu_fast`] only looks at the elements of `W(n)` within `lambda1`
//!   of `n * a1` and within `lambda2` of `n * ap`, once `n >= N0`. The bounds
//!   come from [`compute_bounds`] and are evaluated in exact rational
//!   arithmetic.
//!
//! `delta_nu` is eventually periodic with period dividing `lcm(a1, ap)`;
//! [`periodicity`] checks this and measures the true period and pre-period.

mod bits;
pub mod bounds;
pub mod error;
pub mod factorization;
pub mod fastdnu;
pub mod intset;
pub mod periodicity;
pub mod rational;
pub mod scan;
pub mod semigroup;

pub use bounds::{compute_bounds, compute_d, zone_classify, BoundsProfile, Zone, ZoneSet};
pub use error::{Error, Result};
pub use factorization::{
    delta_nu_naive, delta_of_element, factorizations, length_set, nu, w_set, Factorization,
    LengthSet, LengthTable,
};
pub use fastdnu::{
    decompose, delta_nu_fast, window_w_set, DeltaNuRecord, Evaluator, Method, ZoneDecomposition,
};
pub use intset::{gaps_of, SortedIntSet};
pub use periodicity::{
    delta_nu_table, lcm_period, minimal_period_report, minimal_period_report_with,
    verify_shift_invariance, PeriodOptions, PeriodReport,
};
pub use rational::Rational;
pub use scan::{genus_tree_scan, is_generalized_arithmetic, ScanFilter, ScanRecord};
pub use semigroup::NumericalSemigroup;
