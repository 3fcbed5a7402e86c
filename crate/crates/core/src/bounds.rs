//! Closed-form bounds for the windowed `delta_nu` computation.
//!
//! With `a1 < ... < ap`, `d = gcd(a_{i+1} - a_i)` and, for `i = 2..p-1`,
//! `g_i = gcd(a_i - a1, a1 - ap, ap - a_i)`:
//!
//! ```text
//! S_i  = -a2 (a1 d g_i + (p-2)(a1 - a_i)(a1 - ap)) / ((a1 - a2) g_i)
//! S'_i = a_{p-1} ((p-2)(a1 - ap)(ap - a_i) - d ap g_i) / ((a_{p-1} - ap) g_i)
//! N_S  = ceil(max(S_i, S'_i))
//! L(w)  = (a1 - a2) N_S / (a1 a2)
//! L(w') = (ap - a_{p-1}) N_S / (ap a_{p-1})
//! C1 = (ap - a_{p-1}) N_S / a_{p-1}
//! C2 = (a1 - a2) N_S / a2
//! C3 = (-ap/a1 + ap/a2 - ap/a_{p-1} + 1) N_S
//! C4 = (a1/a_{p-1} - a1/ap - a1/a2 + 1) N_S
//! lambda1 = max(C1, C4), lambda2 = -min(C2, C3)
//! N0 = ceil(max(N_S / a1, (ap - a1 + lambda1 + lambda2) / (ap - a1)))
//! ```
//!
//! The vectors `w`, `w'` behind `L(w)` and `L(w')` are
//!
//! ```text
//! w  = N_S (a2 - ap)/(a2 (a1 - ap)) e1 + N_S (a1 - a2)/(a2 (a1 - ap)) ep - N_S/a1 e1
//! w' = N_S (a_{p-1} - ap)/(a_{p-1} (a1 - ap)) e1 + N_S (a1 - a_{p-1})/(a_{p-1} (a1 - ap)) ep - N_S/ap ep
//! ```
//!
//! Only their lengths are used.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::factorization::Factorization;
use crate::rational::Rational;
use crate::semigroup::NumericalSemigroup;

/// `gcd(a_{i+1} - a_i)` over consecutive generators.
pub fn compute_d(sg: &NumericalSemigroup) -> u64 {
    sg.generators()
        .windows(2)
        .fold(0u64, |acc, w| acc.gcd(&(w[1] - w[0])))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsProfile {
    pub generators: Vec<u64>,
    pub d: u64,
    /// `g_i` for `i = 2..p-1`.
    pub g: Vec<u64>,
    #[serde(rename = "S_lower")]
    pub s_lower: Vec<Rational>,
    #[serde(rename = "S_upper")]
    pub s_upper: Vec<Rational>,
    #[serde(rename = "NS")]
    pub ns: u64,
    #[serde(rename = "Lw")]
    pub lw: Rational,
    #[serde(rename = "Lwp")]
    pub lwp: Rational,
    #[serde(rename = "C1")]
    pub c1: Rational,
    #[serde(rename = "C2")]
    pub c2: Rational,
    #[serde(rename = "C3")]
    pub c3: Rational,
    #[serde(rename = "C4")]
    pub c4: Rational,
    pub lambda1: Rational,
    pub lambda2: Rational,
    #[serde(rename = "N0")]
    pub n0: u64,
}

impl BoundsProfile {
    /// `ceil(lambda1)`, the width of the low window.
    pub fn low_width(&self) -> u64 {
        self.lambda1.ceil() as u64
    }

    /// `floor(lambda2)`, the width of the high window.
    pub fn high_width(&self) -> u64 {
        self.lambda2.floor() as u64
    }
}

pub fn compute_bounds(sg: &NumericalSemigroup) -> Result<BoundsProfile> {
    let p = sg.embedding_dimension();
    if p < 3 {
        return Err(Error::EmbeddingDimensionTooSmall(p));
    }
    let a: Vec<i128> = sg.generators().iter().map(|&x| x as i128).collect();
    let (a1, a2, apm, ap) = (a[0], a[1], a[p - 2], a[p - 1]);
    let d = compute_d(sg);
    let di = d as i128;
    let pm2 = (p - 2) as i128;

    let mut g = Vec::with_capacity(p - 2);
    let mut s_lower = Vec::with_capacity(p - 2);
    let mut s_upper = Vec::with_capacity(p - 2);
    for &ai in &a[1..p - 1] {
        let gi = (ai - a1).gcd(&(a1 - ap)).gcd(&(ap - ai));
        g.push(gi as u64);
        s_lower.push(Rational::new(
            -a2 * (a1 * di * gi + pm2 * (a1 - ai) * (a1 - ap)),
            (a1 - a2) * gi,
        ));
        s_upper.push(Rational::new(
            apm * (pm2 * (a1 - ap) * (ap - ai) - di * ap * gi),
            (apm - ap) * gi,
        ));
    }
    let max_s = s_lower.iter().chain(&s_upper).max().copied().unwrap();
    let ns_i = max_s.ceil();
    let ns_r = Rational::from_int(ns_i);
    let r = |x: i128| Rational::from_int(x);

    let lw = Rational::new((a1 - a2) * ns_i, a1 * a2);
    let lwp = Rational::new((ap - apm) * ns_i, ap * apm);
    let c1 = Rational::new((ap - apm) * ns_i, apm);
    let c2 = Rational::new((a1 - a2) * ns_i, a2);
    let c3 =
        (-Rational::new(ap, a1) + Rational::new(ap, a2) - Rational::new(ap, apm) + r(1)) * ns_r;
    let c4 = (Rational::new(a1, apm) - Rational::new(a1, ap) - Rational::new(a1, a2) + r(1)) * ns_r;
    let lambda1 = c1.max(c4);
    let lambda2 = -c2.min(c3);

    let span = r(ap - a1);
    let n0 = (ns_r / r(a1)).max((span + lambda1 + lambda2) / span).ceil();

    Ok(BoundsProfile {
        generators: sg.generators().to_vec(),
        d,
        g,
        s_lower,
        s_upper,
        ns: ns_i.max(0) as u64,
        lw,
        lwp,
        c1,
        c2,
        c3,
        c4,
        lambda1,
        lambda2,
        n0: n0.max(1) as u64,
    })
}

/// One of the three length zones of an element `s >= N_S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Zone {
    Z1,
    Z2,
    Z3,
}

/// The zones a factorization falls into. The middle zone overlaps the outer
/// two at their inner edges, so more than one flag may be set.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ZoneSet {
    pub z1: bool,
    pub z2: bool,
    pub z3: bool,
}

impl ZoneSet {
    pub fn contains(&self, z: Zone) -> bool {
        match z {
            Zone::Z1 => self.z1,
            Zone::Z2 => self.z2,
            Zone::Z3 => self.z3,
        }
    }

    pub fn is_empty(&self) -> bool {
        !(self.z1 || self.z2 || self.z3)
    }

    pub fn zones(&self) -> Vec<Zone> {
        [Zone::Z1, Zone::Z2, Zone::Z3]
            .into_iter()
            .filter(|&z| self.contains(z))
            .collect()
    }
}

/// Classifies `x in Z(s)` by its length:
///
/// * `Z1`: `s/a1 + L(w) < L(x) <= s/a1`
/// * `Z2`: `s/ap + L(w') - d <= L(x) <= s/a1 + L(w) + d`
/// * `Z3`: `s/ap <= L(x) < s/ap + L(w')`
pub fn zone_classify(
    sg: &NumericalSemigroup,
    s: u64,
    x: &Factorization,
    bounds: &BoundsProfile,
) -> Result<ZoneSet> {
    if s < bounds.ns {
        return Err(Error::BelowBound {
            s,
            bound: bounds.ns,
        });
    }
    if x.value(sg) != Some(s) {
        return Err(Error::NotAFactorization {
            s,
            coords: x.coordinates().to_vec(),
        });
    }
    let len = Rational::from(x.length());
    let hi = Rational::new(s as i128, sg.smallest() as i128);
    let lo = Rational::new(s as i128, sg.largest() as i128);
    let d = Rational::from(bounds.d);
    Ok(ZoneSet {
        z1: hi + bounds.lw < len && len <= hi,
        z2: lo + bounds.lwp - d <= len && len <= hi + bounds.lw + d,
        z3: lo <= len && len < lo + bounds.lwp,
    })
}
