//! Feasibility oracles.
//!
//! [`decide_segment`] is the left-to-right greedy over the feasible intervals
//! of the segment. [`decide_circle`] runs the same greedy around the circle,
//! once per feasible-arc endpoint used as the first center. Both return a
//! [`Packing`] on success that [`verify_packing`] checks from scratch against
//! the raw geometry.

use std::f64::consts::TAU;

use crate::error::{check_radius, Result};
use crate::geom::{arcs_unchecked, intervals_unchecked, normalize_angle, CircularInstance, Instance, Interval, Point};
use crate::{EPS, SNAP};

/// A common radius and the facility centers: x-coordinates on the segment,
/// or angles on the circle.
#[derive(Clone, Debug, PartialEq)]
pub struct Packing {
    pub radius: f64,
    pub centers: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum DecisionOutcome {
    Yes(Packing),
    No,
}

impl DecisionOutcome {
    pub fn is_yes(&self) -> bool {
        matches!(self, DecisionOutcome::Yes(_))
    }

    pub fn packing(&self) -> Option<&Packing> {
        match self {
            DecisionOutcome::Yes(p) => Some(p),
            DecisionOutcome::No => None,
        }
    }

    pub fn into_packing(self) -> Option<Packing> {
        match self {
            DecisionOutcome::Yes(p) => Some(p),
            DecisionOutcome::No => None,
        }
    }
}

/// Can `k` facilities of radius `l` be centered on the segment?
pub fn decide_segment(inst: &Instance, l: f64) -> Result<DecisionOutcome> {
    check_radius(l)?;
    let set = intervals_unchecked(inst, l);
    Ok(match pack_intervals(&set.feasible, inst.k(), l) {
        Some(centers) => DecisionOutcome::Yes(Packing { radius: l, centers }),
        None => DecisionOutcome::No,
    })
}

/// Greedy packing over ordered feasible intervals. Each interval receives
/// `floor(len / 2l) + 1` centers (or whatever is still missing), starting at
/// its usable left end, which is pushed right to stay `2l` away from the last
/// center placed.
fn pack_intervals(feasible: &[Interval], k: usize, l: f64) -> Option<Vec<f64>> {
    let step = 2.0 * l;
    let mut centers: Vec<f64> = Vec::with_capacity(k);
    for iv in feasible {
        let start = match centers.last() {
            Some(&c) => iv.lo.max(c + step),
            None => iv.lo,
        };
        if start > iv.hi + SNAP {
            continue;
        }
        let gamma = ((iv.hi - start + SNAP).max(0.0) / step).floor() as usize;
        let place = gamma.saturating_add(1).min(k - centers.len());
        centers.extend((0..place).map(|t| (start + t as f64 * step).min(iv.hi)));
        if centers.len() == k {
            return Some(centers);
        }
    }
    None
}

/// Can `k` facilities of radius `l` be centered on the circle, consecutive
/// facilities at least `2l` apart in arc length?
pub fn decide_circle(inst: &CircularInstance, l: f64) -> Result<DecisionOutcome> {
    check_radius(l)?;
    let set = arcs_unchecked(inst, l);
    let k = inst.k();
    let yes = |centers| Ok(DecisionOutcome::Yes(Packing { radius: l, centers }));
    let Some(first) = set.feasible.first() else {
        return Ok(DecisionOutcome::No);
    };
    if k == 1 {
        return yes(vec![first.start]);
    }
    let sep = 2.0 * l / inst.r_c();
    let tol = SNAP / inst.r_c();
    if k as f64 * sep > TAU + tol {
        return Ok(DecisionOutcome::No);
    }
    if set.blocked.is_empty() {
        return yes((0..k).map(|i| normalize_angle(i as f64 * sep)).collect());
    }
    let mut anchors: Vec<f64> = set
        .feasible
        .iter()
        .flat_map(|a| [a.start, a.end()])
        .collect();
    anchors.sort_by(f64::total_cmp);
    anchors.dedup();
    for anchor in anchors {
        if let Some(centers) = pack_from_anchor(&set.feasible, anchor, sep, tol, k) {
            return yes(centers);
        }
    }
    Ok(DecisionOutcome::No)
}

/// Greedy counterclockwise placement starting with a center at `anchor`,
/// which must itself be feasible. All angles are relative to the anchor.
fn pack_from_anchor(
    feasible: &[crate::geom::ArcInterval],
    anchor: f64,
    sep: f64,
    tol: f64,
    k: usize,
) -> Option<Vec<f64>> {
    let mut arcs: Vec<(f64, f64)> = Vec::with_capacity(feasible.len() + 1);
    for a in feasible {
        let u = normalize_angle(a.start - anchor);
        let e = u + a.sweep;
        if e > TAU {
            arcs.push((u, TAU));
            arcs.push((0.0, e - TAU));
        } else {
            arcs.push((u, e));
        }
    }
    arcs.sort_by(|a, b| a.0.total_cmp(&b.0));

    let limit = TAU - sep;
    let mut centers = Vec::with_capacity(k);
    centers.push(normalize_angle(anchor));
    let mut pos = 0.0;
    let mut idx = 0;
    while centers.len() < k {
        let target = pos + sep;
        while idx < arcs.len() && arcs[idx].1 < target - tol {
            idx += 1;
        }
        let &(lo, hi) = arcs.get(idx)?;
        let c = target.max(lo);
        if c > limit + tol {
            return None;
        }
        pos = c.min(hi).min(limit);
        centers.push(normalize_angle(anchor + pos));
    }
    Some(centers)
}

/// Anything a [`Packing`] can certify.
pub trait Verify {
    /// True iff the packing has the right number of centers, consecutive
    /// centers are at least `2 * radius` apart and every demand point is at
    /// least `radius` from every center, all up to [`EPS`].
    fn verify(&self, pk: &Packing) -> bool;
}

pub fn verify_packing<T: Verify + ?Sized>(inst: &T, pk: &Packing) -> bool {
    inst.verify(pk)
}

impl Verify for Instance {
    fn verify(&self, pk: &Packing) -> bool {
        let r = pk.radius;
        if pk.centers.len() != self.k() || !r.is_finite() || r < 0.0 {
            return false;
        }
        let (xp, xq, y) = (self.p().x, self.q().x, self.q().y);
        if pk.centers.iter().any(|c| !c.is_finite() || *c < xp - EPS || *c > xq + EPS) {
            return false;
        }
        if pk.centers.windows(2).any(|w| w[1] <= w[0] || w[1] - w[0] < 2.0 * r - EPS) {
            return false;
        }
        let metric = self.metric();
        pk.centers.iter().all(|&c| {
            let at = Point::new(c, y);
            self.points().iter().all(|pt| metric.distance(&at, pt) >= r - EPS)
        })
    }
}

impl Verify for CircularInstance {
    fn verify(&self, pk: &Packing) -> bool {
        let r = pk.radius;
        let k = self.k();
        if pk.centers.len() != k || !r.is_finite() || r < 0.0 {
            return false;
        }
        if pk.centers.iter().any(|c| !c.is_finite()) {
            return false;
        }
        if k >= 2 {
            let gaps: Vec<f64> = (0..k)
                .map(|i| normalize_angle(pk.centers[(i + 1) % k] - pk.centers[i]))
                .collect();
            // Gaps of a cyclically increasing sequence add up to one turn.
            if (gaps.iter().sum::<f64>() - TAU).abs() > 1e-6 {
                return false;
            }
            if gaps.iter().any(|&g| g <= 0.0 || g * self.r_c() < 2.0 * r - EPS) {
                return false;
            }
        }
        pk.centers.iter().all(|&theta| {
            let at = self.position(theta);
            self.points().iter().all(|pt| at.dist(pt) >= r - EPS)
        })
    }
}
