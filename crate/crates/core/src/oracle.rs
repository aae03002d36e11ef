//! Ground truth for tests and a deterministic instance generator.
//!
//! [`oracle_rmax`] is deliberately slow. It takes the best of an unordered
//! scan over all candidate radii and a fine radius sweep, and on tiny inputs
//! cross-checks the result against a direct grid search over center
//! placements that never touches the interval machinery.
//!
//! Instances come from SplitMix64 (increment `0x9E3779B97F4A7C15`, mixing
//! multipliers `0xBF58476D1CE4E5B9` and `0x94D049BB133111EB`); a uniform
//! double is the top 53 bits of one output scaled by `2^-53`. Output is
//! therefore identical on every platform.

use crate::approx::circle_cap;
use crate::candidates::{candidates_l2, candidates_linf};
use crate::decision::{decide_circle, decide_segment};
use crate::error::{Error, Result};
use crate::geom::{CircularInstance, Instance, Metric, Point};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenParams {
    pub seed: u64,
    pub n: usize,
    pub k: usize,
    pub segment_length: f64,
    pub height_max: f64,
    pub metric: Metric,
}

impl GenParams {
    /// Segment of length 10, heights up to 3, Euclidean metric.
    pub fn new(seed: u64, n: usize, k: usize) -> Self {
        Self { seed, n, k, segment_length: 10.0, height_max: 3.0, metric: Metric::Euclidean }
    }
}

#[derive(Clone, Debug)]
pub struct SplitMix64(u64);

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

fn check_params(gp: &GenParams, k_min: usize) -> Result<()> {
    if gp.k < k_min || !(gp.segment_length > 0.0) || !(gp.height_max >= 0.0) {
        return Err(Error::Usage(format!("invalid generator parameters {gp:?}")));
    }
    Ok(())
}

/// Points uniform in `[0, len] x [0, height_max]` above the segment from
/// `(0, 0)` to `(len, 0)`.
pub fn gen_instance(gp: &GenParams) -> Result<Instance> {
    check_params(gp, 2)?;
    let mut rng = SplitMix64::new(gp.seed);
    let points = (0..gp.n)
        .map(|_| {
            let x = rng.next_f64() * gp.segment_length;
            Point::new(x, rng.next_f64() * gp.height_max)
        })
        .collect();
    Instance::new(
        Point::new(0.0, 0.0),
        Point::new(gp.segment_length, 0.0),
        points,
        gp.k,
        gp.metric,
    )
}

/// Circle of radius `segment_length / 2` at the origin, with points uniform in
/// the square reaching `height_max` beyond it.
pub fn gen_circular_instance(gp: &GenParams) -> Result<CircularInstance> {
    check_params(gp, 1)?;
    let mut rng = SplitMix64::new(gp.seed);
    let r_c = gp.segment_length / 2.0;
    let half = r_c + gp.height_max;
    let points = (0..gp.n)
        .map(|_| {
            let x = (2.0 * rng.next_f64() - 1.0) * half;
            Point::new(x, (2.0 * rng.next_f64() - 1.0) * half)
        })
        .collect();
    CircularInstance::new(Point::new(0.0, 0.0), r_c, points, gp.k)
}

/// The pieces [`oracle_rmax`] combines.
#[derive(Clone, Debug, PartialEq)]
pub struct OracleReport {
    /// Largest candidate radius the decision procedure accepts.
    pub candidate_max: f64,
    /// Largest multiple of `upper / 10^6` the decision procedure accepts.
    pub sweep_max: f64,
    /// Coarse and refined grid optima over center placements, when run.
    pub grid: Option<(f64, f64)>,
}

impl OracleReport {
    pub fn rmax(&self) -> f64 {
        self.candidate_max.max(self.sweep_max)
    }
}

pub const SWEEP_STEPS: usize = 1_000_000;
const GRID_COARSE: usize = 120;
const GRID_FINE: usize = 24;

pub fn oracle_report(inst: &Instance) -> Result<OracleReport> {
    if inst.n() > 10 || inst.k() > 5 {
        return Err(Error::Usage(format!(
            "oracle limited to n <= 10 and k <= 5, got n = {} and k = {}",
            inst.n(),
            inst.k()
        )));
    }
    let cands = match inst.metric() {
        Metric::Euclidean => candidates_l2(inst)?,
        Metric::Rectilinear => candidates_linf(inst)?,
    };
    let mut candidate_max: f64 = 0.0;
    for c in &cands {
        if c.value > candidate_max && decide_segment(inst, c.value)?.is_yes() {
            candidate_max = c.value;
        }
    }

    // Largest accepted grid index, by bisection over the index range.
    let u = inst.upper_bound();
    let step = u / SWEEP_STEPS as f64;
    let (mut good, mut bad) = (0usize, SWEEP_STEPS + 1);
    while bad - good > 1 {
        let mid = (good + bad) / 2;
        if decide_segment(inst, mid as f64 * step)?.is_yes() {
            good = mid;
        } else {
            bad = mid;
        }
    }
    let sweep_max = good as f64 * step;

    let grid = if inst.n() <= 4 && inst.k() <= 3 {
        let (coarse, h, refined) = grid_search(inst);
        let best = candidate_max.max(sweep_max);
        if coarse < best - h / 2.0 - 1e-9 || refined > best + 1e-9 {
            return Err(Error::Invariant(format!(
                "grid search disagrees: coarse {coarse}, refined {refined}, decision {best}"
            )));
        }
        Some((coarse, refined))
    } else {
        None
    };
    Ok(OracleReport { candidate_max, sweep_max, grid })
}

/// Optimal radius of `inst` from the candidate scan and the radius sweep.
pub fn oracle_rmax(inst: &Instance) -> Result<f64> {
    Ok(oracle_report(inst)?.rmax())
}

/// Radius achieved by centers `cs`: half the closest spacing, capped by the
/// clearance to every point.
fn placement_radius(inst: &Instance, cs: &[f64]) -> f64 {
    let y = inst.p().y;
    let mut r = f64::INFINITY;
    for w in cs.windows(2) {
        r = r.min((w[1] - w[0]) / 2.0);
    }
    for &c in cs {
        let at = Point::new(c, y);
        for pt in inst.points() {
            r = r.min(inst.metric().distance(&at, pt));
        }
    }
    r
}

/// Visits every nondecreasing `k`-tuple drawn from `axis`.
fn for_tuples(axis: &[Vec<f64>], k: usize, f: &mut impl FnMut(&[f64])) {
    fn go(axis: &[Vec<f64>], start: usize, cur: &mut Vec<f64>, k: usize, f: &mut impl FnMut(&[f64])) {
        let d = cur.len();
        if d == k {
            f(cur);
            return;
        }
        let shared = axis.len() == 1;
        let choices = if shared { &axis[0] } else { &axis[d] };
        let from = if shared { start } else { 0 };
        for (i, &x) in choices.iter().enumerate().skip(from) {
            if cur.last().is_some_and(|&l| x < l) {
                continue;
            }
            cur.push(x);
            go(axis, i, cur, k, f);
            cur.pop();
        }
    }
    go(axis, 0, &mut Vec::with_capacity(k), k, f);
}

/// Two-level grid maximisation over center placements. Returns the coarse
/// optimum, the coarse spacing and the refined optimum.
fn grid_search(inst: &Instance) -> (f64, f64, f64) {
    let k = inst.k();
    let (xp, len) = (inst.p().x, inst.length());
    let h = len / GRID_COARSE as f64;
    let coarse_axis: Vec<f64> = (0..=GRID_COARSE).map(|i| xp + i as f64 * h).collect();
    let mut best = (f64::NEG_INFINITY, Vec::new());
    for_tuples(&[coarse_axis], k, &mut |cs| {
        let r = placement_radius(inst, cs);
        if r > best.0 {
            best = (r, cs.to_vec());
        }
    });
    let coarse = best.0;

    let fine = h / GRID_FINE as f64;
    let axes: Vec<Vec<f64>> = best
        .1
        .iter()
        .map(|&c| {
            (0..=2 * GRID_FINE)
                .map(|i| (c - h + i as f64 * fine).clamp(xp, xp + len))
                .collect()
        })
        .collect();
    let mut refined = coarse;
    for_tuples(&axes, k, &mut |cs| refined = refined.max(placement_radius(inst, cs)));
    (coarse, h, refined)
}

/// Optimal radius on the circle restricted to centers at multiples of
/// `step` radians, by bisection on the radius. Never exceeds the true
/// optimum, since every grid placement it accepts is a real one.
pub fn circle_grid_rmax(inst: &CircularInstance, step: f64) -> f64 {
    let m = (std::f64::consts::TAU / step).floor() as usize;
    let step = std::f64::consts::TAU / m as f64;
    let clearance: Vec<f64> = (0..m)
        .map(|t| {
            let at = inst.position(t as f64 * step);
            inst.points().iter().map(|p| at.dist(p)).fold(f64::INFINITY, f64::min)
        })
        .collect();
    let k = inst.k();
    let arc = step * inst.r_c();

    let feasible = |l: f64| -> bool {
        // next[t]: first index >= t (over two turns) whose position is clear.
        let mut next = vec![usize::MAX; 2 * m + 1];
        for t in (0..2 * m).rev() {
            next[t] = if clearance[t % m] >= l { t } else { next[t + 1] };
        }
        if k == 1 {
            return next[0] < m;
        }
        let gap = (2.0 * l / arc).ceil().max(1.0) as usize;
        if k * gap > m {
            return false;
        }
        (0..m).filter(|&a| clearance[a] >= l).any(|a| {
            let mut pos = a;
            for _ in 1..k {
                let want = pos + gap;
                if want >= 2 * m {
                    return false;
                }
                pos = next[want];
                if pos == usize::MAX {
                    return false;
                }
            }
            pos + gap <= a + m
        })
    };

    let (mut lo, mut hi) = (0.0, circle_cap(inst));
    if feasible(hi) {
        return hi;
    }
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if mid > 0.0 && feasible(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Largest radius for which `decide_circle` accepts, by bisection; used to
/// cross-check the grid oracle.
pub fn circle_decision_rmax(inst: &CircularInstance) -> Result<f64> {
    let (mut lo, mut hi) = (0.0, circle_cap(inst));
    if decide_circle(inst, hi)?.is_yes() {
        return Ok(hi);
    }
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if decide_circle(inst, mid)?.is_yes() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seg(len: f64, pts: &[(f64, f64)], k: usize, metric: Metric) -> Instance {
        let pts = pts.iter().map(|&(x, y)| Point::new(x, y)).collect();
        Instance::new(Point::new(0.0, 0.0), Point::new(len, 0.0), pts, k, metric).unwrap()
    }

    #[test]
    fn splitmix_reference_outputs() {
        // First outputs for seed 0, as published with the generator.
        let mut r = SplitMix64::new(0);
        assert_eq!(r.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(r.next_u64(), 0x6E78_9E6A_A1B9_65F4);
    }

    #[test]
    fn generator_is_deterministic() {
        let a = gen_instance(&GenParams::new(42, 5, 2)).unwrap();
        let b = gen_instance(&GenParams::new(42, 5, 2)).unwrap();
        let c = gen_instance(&GenParams::new(43, 5, 2)).unwrap();
        assert_eq!(a, b);
        assert_ne!(a.points(), c.points());
        assert_eq!(gen_instance(&GenParams::new(1, 0, 3)).unwrap().n(), 0);
        for p in a.points() {
            assert!((0.0..10.0).contains(&p.x) && (0.0..3.0).contains(&p.y));
        }
        let circ = gen_circular_instance(&GenParams::new(7, 4, 3)).unwrap();
        assert_eq!(circ.r_c(), 5.0);
        assert_eq!(circ.n(), 4);
    }

    #[test]
    fn reference_optima() {
        assert_eq!(oracle_rmax(&seg(12.0, &[], 4, Metric::Euclidean)).unwrap(), 2.0);
        let r = oracle_rmax(&seg(10.0, &[(5.0, 3.0)], 2, Metric::Euclidean)).unwrap();
        assert!((r - 5.0).abs() < 1e-12);
        let r = oracle_rmax(&seg(10.0, &[(4.0, 1.0)], 2, Metric::Rectilinear)).unwrap();
        assert!((r - 4.0).abs() < 1e-9);
        let r = oracle_rmax(&seg(10.0, &[(2.0, 1.0)], 2, Metric::Euclidean)).unwrap();
        assert!((r - 2.7299167746977817).abs() < 1e-9);
    }

    #[test]
    fn size_limits() {
        let many: Vec<_> = (0..11).map(|i| (i as f64 * 0.5, 1.0)).collect();
        assert!(matches!(oracle_rmax(&seg(10.0, &many, 2, Metric::Euclidean)), Err(Error::Usage(_))));
        assert!(matches!(oracle_rmax(&seg(10.0, &[], 6, Metric::Euclidean)), Err(Error::Usage(_))));
    }

    #[test]
    fn circle_grid_on_empty_circle() {
        let inst = CircularInstance::new(Point::new(0.0, 0.0), 10.0, vec![], 4).unwrap();
        let g = circle_grid_rmax(&inst, 1e-4);
        let exact = std::f64::consts::PI * 10.0 / 4.0;
        assert!(g <= exact + 1e-9 && g >= exact - 1e-3, "{g}");
    }

    #[test]
    fn circle_grid_agrees_with_decisions() {
        let inst = CircularInstance::new(Point::new(0.0, 0.0), 10.0, vec![Point::new(10.0, 0.0)], 2).unwrap();
        let g = circle_grid_rmax(&inst, 1e-4);
        let d = circle_decision_rmax(&inst).unwrap();
        assert!(g <= d + 1e-9 && g >= d - 2e-3, "{g} vs {d}");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn empty_instance_is_closed_form(len in 0.5..50.0f64, k in 2usize..=5) {
            let inst = seg(len, &[], k, Metric::Euclidean);
            let want = len / (2.0 * (k - 1) as f64);
            prop_assert!((oracle_rmax(&inst).unwrap() - want).abs() <= 1e-12 * want);
        }

        #[test]
        fn deleting_points_never_hurts(seed in any::<u64>(), n in 1usize..=4, k in 2usize..=3) {
            let inst = gen_instance(&GenParams::new(seed, n, k)).unwrap();
            let full = oracle_rmax(&inst).unwrap();
            for skip in 0..n {
                let pts: Vec<_> = inst.points().iter().enumerate()
                    .filter(|&(i, _)| i != skip).map(|(_, p)| *p).collect();
                prop_assert!(oracle_rmax(&inst.with_points(pts).unwrap()).unwrap() >= full - 1e-12);
            }
        }
    }
}
