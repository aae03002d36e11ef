//! `(1 - eps)`-approximations by bisection on the radius.
//!
//! On the segment the bracket `[0, ||pq|| / (2(k-1))]` is known up front. On
//! the circle there is no such bound, so the search starts from a cap beyond
//! which nothing changes and halves until the first feasible radius before
//! bisecting.

use std::f64::consts::PI;

use crate::decision::{decide_circle, decide_segment, DecisionOutcome, Packing};
use crate::error::{Error, Result};
use crate::geom::{CircularInstance, Instance};

#[derive(Clone, Debug, PartialEq)]
pub struct ApproxResult {
    pub radius: f64,
    pub packing: Packing,
    pub epsilon: f64,
    pub decision_calls: usize,
    /// `false` only when no positive radius admits a placement; `radius` is
    /// then zero and the packing empty.
    pub feasible: bool,
}

fn check_eps(eps: f64) -> Result<()> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::Usage(format!("eps must lie in (0, 1), got {eps}")));
    }
    Ok(())
}

/// Bisects `(lo, hi)` until `hi - lo <= eps * lo`. `lo` must be feasible with
/// certificate `best`, `hi` infeasible.
fn bisect(
    mut decide: impl FnMut(f64) -> Result<DecisionOutcome>,
    mut lo: f64,
    mut hi: f64,
    mut best: Option<Packing>,
    eps: f64,
) -> Result<(f64, Option<Packing>)> {
    for _ in 0..2048 {
        if lo > 0.0 && hi - lo <= eps * lo {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        match decide(mid)? {
            DecisionOutcome::Yes(pk) => {
                lo = mid;
                best = Some(pk);
            }
            DecisionOutcome::No => hi = mid,
        }
    }
    Ok((lo, best))
}

pub fn solve_fptas_segment(inst: &Instance, eps: f64) -> Result<ApproxResult> {
    check_eps(eps)?;
    let mut calls = 0;
    let mut decide = |l: f64| {
        calls += 1;
        decide_segment(inst, l)
    };
    let u = inst.upper_bound();
    let (radius, packing) = match decide(u)? {
        DecisionOutcome::Yes(pk) => (u, Some(pk)),
        DecisionOutcome::No => bisect(&mut decide, 0.0, u, None, eps)?,
    };
    let packing = packing.ok_or_else(|| Error::Invariant("bisection found no feasible radius".into()))?;
    Ok(ApproxResult { radius, packing, epsilon: eps, decision_calls: calls, feasible: true })
}

/// Radius beyond which a larger value cannot matter: arc separation alone
/// caps `k >= 2` at `pi r_c / k`, and past `max |p - center| + r_c` every
/// point blocks the whole circle.
pub fn circle_cap(inst: &CircularInstance) -> f64 {
    let far = inst
        .points()
        .iter()
        .map(|p| p.dist(&inst.center()))
        .fold(0.0, f64::max);
    PI * inst.r_c() / inst.k() as f64 + far + inst.r_c()
}

pub fn solve_fptas_circle(inst: &CircularInstance, eps: f64) -> Result<ApproxResult> {
    check_eps(eps)?;
    let mut calls = 0;
    let mut decide = |l: f64| {
        calls += 1;
        decide_circle(inst, l)
    };
    let cap = circle_cap(inst);
    if let DecisionOutcome::Yes(pk) = decide(cap)? {
        return Ok(ApproxResult { radius: cap, packing: pk, epsilon: eps, decision_calls: calls, feasible: true });
    }

    let floor = cap * 1e-15;
    let mut hi = cap;
    let mut found = None;
    let mut l = cap / 2.0;
    while l > floor {
        match decide(l)? {
            DecisionOutcome::Yes(pk) => {
                found = Some((l, pk));
                break;
            }
            DecisionOutcome::No => {
                hi = l;
                l /= 2.0;
            }
        }
    }
    let Some((mut lo, mut best)) = found else {
        return Ok(ApproxResult {
            radius: 0.0,
            packing: Packing { radius: 0.0, centers: Vec::new() },
            epsilon: eps,
            decision_calls: calls,
            feasible: false,
        });
    };

    while 2.0 * lo < hi {
        match decide(2.0 * lo)? {
            DecisionOutcome::Yes(pk) => {
                lo *= 2.0;
                best = pk;
            }
            DecisionOutcome::No => {
                hi = 2.0 * lo;
                break;
            }
        }
    }
    let (radius, packing) = bisect(&mut decide, lo, hi, Some(best), eps)?;
    let packing = packing.expect("bisection keeps the initial certificate");
    Ok(ApproxResult { radius, packing, epsilon: eps, decision_calls: calls, feasible: true })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decision::verify_packing;
    use crate::geom::{Metric, Point};
    use proptest::prelude::*;

    fn seg(len: f64, pts: &[(f64, f64)], k: usize) -> Instance {
        let pts = pts.iter().map(|&(x, y)| Point::new(x, y)).collect();
        Instance::new(Point::new(0.0, 0.0), Point::new(len, 0.0), pts, k, Metric::Euclidean).unwrap()
    }

    fn circle(pts: &[(f64, f64)], k: usize) -> CircularInstance {
        let pts = pts.iter().map(|&(x, y)| Point::new(x, y)).collect();
        CircularInstance::new(Point::new(0.0, 0.0), 10.0, pts, k).unwrap()
    }

    #[test]
    fn segment_examples() {
        let r = solve_fptas_segment(&seg(12.0, &[], 4), 0.01).unwrap();
        assert!((1.98..=2.0).contains(&r.radius));
        let r = solve_fptas_segment(&seg(10.0, &[(5.0, 3.0)], 2), 0.01).unwrap();
        assert!((4.95..=5.0).contains(&r.radius));
        let r = solve_fptas_segment(&seg(12.0, &[], 4), 0.5).unwrap();
        assert!(r.radius >= 1.0);
        let inst = seg(10.0, &[(2.0, 1.0)], 2);
        let r = solve_fptas_segment(&inst, 1e-4).unwrap();
        assert!(r.radius >= (1.0 - 1e-4) * 2.7299167746977817 && r.radius <= 2.7299167746977817 + 1e-9);
        assert!(verify_packing(&inst, &r.packing));
    }

    #[test]
    fn eps_is_validated() {
        for eps in [0.0, 1.0, -0.5, f64::NAN] {
            assert!(matches!(solve_fptas_segment(&seg(1.0, &[], 2), eps), Err(Error::Usage(_))));
            assert!(matches!(solve_fptas_circle(&circle(&[], 2), eps), Err(Error::Usage(_))));
        }
    }

    #[test]
    fn empty_circle_reaches_arc_bound() {
        let r = solve_fptas_circle(&circle(&[], 4), 0.01).unwrap();
        let bound = PI * 10.0 / 4.0;
        assert!(r.radius >= 0.99 * bound && r.radius <= bound + 1e-9, "{}", r.radius);
    }

    #[test]
    fn single_facility_hits_the_cap() {
        let inst = circle(&[], 1);
        let r = solve_fptas_circle(&inst, 0.1).unwrap();
        assert!(r.radius >= 0.9 * circle_cap(&inst));
    }

    #[test]
    fn point_on_the_circle() {
        let inst = circle(&[(10.0, 0.0)], 2);
        let r = solve_fptas_circle(&inst, 0.01).unwrap();
        assert!(r.feasible);
        assert!(verify_packing(&inst, &r.packing));
    }

    proptest! {
        #[test]
        fn circle_results_are_certified(
            pts in proptest::collection::vec((-14.0..14.0f64, -14.0..14.0f64), 0..5),
            k in 1usize..5,
            eps in 0.001..0.5f64,
        ) {
            let inst = circle(&pts, k);
            let r = solve_fptas_circle(&inst, eps).unwrap();
            prop_assert!(r.feasible);
            prop_assert!(verify_packing(&inst, &r.packing));
            // Doubling from the cap, then bisection to relative width eps.
            let bound = 4.0 + (circle_cap(&inst) / r.radius).log2() + (1.0 / eps).log2();
            prop_assert!(r.decision_calls as f64 <= 2.0 * bound, "{} calls", r.decision_calls);
            prop_assert!(decide_circle(&inst, r.radius * (1.0 + eps) + 1e-12).map(|d| !d.is_yes()).unwrap()
                || r.radius >= circle_cap(&inst) / (1.0 + eps));
        }
    }
}
