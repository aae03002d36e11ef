//! Blocked and feasible center positions.
//!
//! Every demand point forbids an open set of facility centers: the centers
//! whose facility would contain the point strictly inside. On the segment that
//! set is an interval of x-coordinates, on the circle it is an arc of angles.
//! Boundary contact is allowed, so the complement is always closed and the
//! tangency positions stay feasible.

use std::f64::consts::TAU;

use crate::error::{check_radius, Error, Result};
use crate::SNAP;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dist(&self, other: &Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// Shape of the facilities: Euclidean disks or axis-aligned squares, whose
/// size is half the side length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Metric {
    Euclidean,
    Rectilinear,
}

impl Metric {
    pub fn distance(&self, a: &Point, b: &Point) -> f64 {
        match self {
            Metric::Euclidean => a.dist(b),
            Metric::Rectilinear => (a.x - b.x).abs().max((a.y - b.y).abs()),
        }
    }
}

/// A segment instance: facilities are centered on the horizontal segment
/// `pq`, demand points lie on or above the line through it.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    p: Point,
    q: Point,
    points: Vec<Point>,
    k: usize,
    metric: Metric,
}

impl Instance {
    /// Validates the segment and sorts the demand points by `x`, then `y`.
    pub fn new(p: Point, q: Point, mut points: Vec<Point>, k: usize, metric: Metric) -> Result<Self> {
        if !p.is_finite() || !q.is_finite() {
            return Err(Error::InvalidInstance("segment endpoints must be finite".into()));
        }
        if p.y != q.y {
            return Err(Error::InvalidInstance(format!(
                "segment must be horizontal, got y(p) = {} and y(q) = {}",
                p.y, q.y
            )));
        }
        if p.x >= q.x {
            return Err(Error::InvalidInstance(format!(
                "need x(p) < x(q), got {} and {}",
                p.x, q.x
            )));
        }
        if k < 2 {
            return Err(Error::InvalidInstance(format!("k must be at least 2, got {k}")));
        }
        for (i, pt) in points.iter().enumerate() {
            if !pt.is_finite() {
                return Err(Error::InvalidInstance(format!("point {i} is not finite")));
            }
            if pt.y < p.y {
                return Err(Error::InvalidInstance(format!(
                    "point {i} at y = {} lies below the segment line y = {}",
                    pt.y, p.y
                )));
            }
        }
        points.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
        Ok(Self { p, q, points, k, metric })
    }

    pub fn p(&self) -> Point {
        self.p
    }

    pub fn q(&self) -> Point {
        self.q
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    pub fn length(&self) -> f64 {
        self.q.x - self.p.x
    }

    /// Height of point `i` above the segment line.
    pub fn height(&self, i: usize) -> f64 {
        self.points[i].y - self.q.y
    }

    /// `||pq|| / (2(k-1))`: the radius reached when no demand point interferes.
    pub fn upper_bound(&self) -> f64 {
        self.length() / (2.0 * (self.k - 1) as f64)
    }

    /// Same segment and points with a different facility count.
    pub fn with_k(&self, k: usize) -> Result<Self> {
        Self::new(self.p, self.q, self.points.clone(), k, self.metric)
    }

    /// Same segment and facility count with a subset of the points.
    pub fn with_points(&self, points: Vec<Point>) -> Result<Self> {
        Self::new(self.p, self.q, points, self.k, self.metric)
    }
}

/// Closed interval of x-coordinates on the segment line.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub const fn new(lo: f64, hi: f64) -> Self {
        Self { lo, hi }
    }

    pub fn len(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn is_empty(&self) -> bool {
        self.hi < self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// Merged blocked intervals and their closed complement inside `[x(p), x(q)]`,
/// both ordered left to right.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct IntervalSet {
    pub blocked: Vec<Interval>,
    pub feasible: Vec<Interval>,
}

/// Centers on the segment line whose facility of size `l` would contain `pt`
/// strictly inside. Not clipped to the segment.
pub fn blocked_interval(pt: &Point, inst: &Instance, l: f64) -> Result<Option<Interval>> {
    check_radius(l)?;
    Ok(raw_blocked(pt.x, pt.y - inst.q.y, inst.metric, l))
}

pub(crate) fn raw_blocked(x: f64, h: f64, metric: Metric, l: f64) -> Option<Interval> {
    match metric {
        Metric::Euclidean => {
            if h > l {
                None
            } else {
                let s = ((l - h) * (l + h)).max(0.0).sqrt();
                Some(Interval::new(x - s, x + s))
            }
        }
        Metric::Rectilinear => {
            if h >= l {
                None
            } else {
                Some(Interval::new(x - l, x + l))
            }
        }
    }
}

/// Blocked intervals merged into maximal runs, plus the feasible complement
/// within the segment.
///
/// Touching blocked intervals are kept apart: their shared endpoint is at
/// distance exactly `l` from both points and stays feasible as a zero-length
/// interval. Overlaps and gaps smaller than the crate tolerance count as
/// touching.
pub fn feasible_intervals(inst: &Instance, l: f64) -> Result<IntervalSet> {
    check_radius(l)?;
    Ok(intervals_unchecked(inst, l))
}

pub(crate) fn intervals_unchecked(inst: &Instance, l: f64) -> IntervalSet {
    let (xp, xq) = (inst.p.x, inst.q.x);
    let mut raw: Vec<Interval> = inst
        .points
        .iter()
        .filter_map(|pt| {
            let h = pt.y - inst.q.y;
            if inst.metric == Metric::Rectilinear && h >= l - SNAP {
                return None;
            }
            raw_blocked(pt.x, h, inst.metric, l)
        })
        .filter(|iv| iv.len() > 2.0 * SNAP && iv.hi > xp + SNAP && iv.lo < xq - SNAP)
        .collect();
    raw.sort_by(|a, b| a.lo.total_cmp(&b.lo));

    let mut merged: Vec<Interval> = Vec::with_capacity(raw.len());
    for iv in raw {
        match merged.last_mut() {
            Some(last) if iv.lo < last.hi - 2.0 * SNAP => last.hi = last.hi.max(iv.hi),
            _ => merged.push(iv),
        }
    }

    let mut feasible = Vec::with_capacity(merged.len() + 1);
    // `cursor` is the left end of the next gap; `soft` marks it as the end of a
    // blocked run rather than the hard segment boundary.
    let mut cursor = xp;
    let mut soft = false;
    let mut open = true;
    for b in &merged {
        let slack = if soft { 2.0 * SNAP } else { SNAP };
        if b.lo >= cursor - slack {
            feasible.push(gap(cursor, b.lo.min(xq), soft));
        }
        cursor = b.hi;
        soft = true;
        if b.hi >= xq - SNAP {
            if b.hi <= xq + SNAP {
                feasible.push(Interval::new(xq, xq));
            }
            open = false;
            break;
        }
    }
    if open && xq >= cursor - SNAP {
        feasible.push(gap(cursor, xq, false));
    }

    let blocked = merged
        .into_iter()
        .map(|b| Interval::new(b.lo.max(xp), b.hi.min(xq)))
        .collect();
    IntervalSet { blocked, feasible }
}

fn gap(a: f64, b: f64, soft: bool) -> Interval {
    if b >= a {
        Interval::new(a, b)
    } else if soft {
        let m = 0.5 * (a + b);
        Interval::new(m, m)
    } else {
        Interval::new(a, a)
    }
}

/// A circle on whose boundary the facilities are centered.
#[derive(Clone, Debug, PartialEq)]
pub struct CircularInstance {
    center: Point,
    r_c: f64,
    points: Vec<Point>,
    k: usize,
}

impl CircularInstance {
    pub fn new(center: Point, r_c: f64, points: Vec<Point>, k: usize) -> Result<Self> {
        if !center.is_finite() {
            return Err(Error::InvalidInstance("circle center must be finite".into()));
        }
        if !(r_c.is_finite() && r_c > 0.0) {
            return Err(Error::InvalidInstance(format!("circle radius must be positive, got {r_c}")));
        }
        if k < 1 {
            return Err(Error::InvalidInstance("k must be at least 1".into()));
        }
        if let Some(i) = points.iter().position(|p| !p.is_finite()) {
            return Err(Error::InvalidInstance(format!("point {i} is not finite")));
        }
        Ok(Self { center, r_c, points, k })
    }

    pub fn center(&self) -> Point {
        self.center
    }

    pub fn r_c(&self) -> f64 {
        self.r_c
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn circumference(&self) -> f64 {
        TAU * self.r_c
    }

    /// Point on the circle at angle `theta`.
    pub fn position(&self, theta: f64) -> Point {
        Point::new(
            self.center.x + self.r_c * theta.cos(),
            self.center.y + self.r_c * theta.sin(),
        )
    }
}

/// Counterclockwise arc of angles starting at `start` and spanning `sweep`
/// radians. `sweep == 2π` is the whole circle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ArcInterval {
    pub start: f64,
    pub sweep: f64,
}

impl ArcInterval {
    pub fn new(start: f64, sweep: f64) -> Self {
        Self { start: normalize_angle(start), sweep: sweep.clamp(0.0, TAU) }
    }

    pub fn full() -> Self {
        Self { start: 0.0, sweep: TAU }
    }

    /// End angle in `[0, 2π)`; smaller than `start` when the arc wraps.
    pub fn end(&self) -> f64 {
        normalize_angle(self.start + self.sweep)
    }

    pub fn is_full(&self) -> bool {
        self.sweep >= TAU
    }

    pub fn contains(&self, theta: f64) -> bool {
        normalize_angle(theta - self.start) <= self.sweep
    }
}

/// Maps an angle into `[0, 2π)`.
pub fn normalize_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(TAU);
    if t >= TAU {
        0.0
    } else {
        t
    }
}

/// Blocked and feasible arcs on the circle, each list ordered by start angle.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ArcSet {
    pub blocked: Vec<ArcInterval>,
    pub feasible: Vec<ArcInterval>,
}

/// Angles on the circle whose facility of radius `l` would contain `pt`
/// strictly inside.
///
/// Points inside the circle of radius `r_c - l` or outside the circle of
/// radius `r_c + l` block nothing. When `l > r_c` a point close to the center
/// blocks the whole circle.
pub fn blocked_arc(pt: &Point, inst: &CircularInstance, l: f64) -> Result<Option<ArcInterval>> {
    check_radius(l)?;
    Ok(raw_blocked_arc(pt, inst, l))
}

fn raw_blocked_arc(pt: &Point, inst: &CircularInstance, l: f64) -> Option<ArcInterval> {
    let (dx, dy) = (pt.x - inst.center.x, pt.y - inst.center.y);
    let rho = dx.hypot(dy);
    let r = inst.r_c;
    if rho == 0.0 {
        return (r < l).then(ArcInterval::full);
    }
    if (rho - r).abs() >= l {
        return None;
    }
    let cos_half = (r * r + rho * rho - l * l) / (2.0 * r * rho);
    if cos_half <= -1.0 {
        return Some(ArcInterval::full());
    }
    let half = cos_half.min(1.0).acos();
    Some(ArcInterval::new(dy.atan2(dx) - half, 2.0 * half))
}

/// Blocked arcs merged around the circle and their closed complement.
///
/// Same tolerance rules as [`feasible_intervals`], measured in arc length.
pub fn feasible_arcs(inst: &CircularInstance, l: f64) -> Result<ArcSet> {
    check_radius(l)?;
    Ok(arcs_unchecked(inst, l))
}

pub(crate) fn arcs_unchecked(inst: &CircularInstance, l: f64) -> ArcSet {
    let tol = SNAP / inst.r_c;
    let mut raw: Vec<(f64, f64)> = Vec::with_capacity(inst.points.len());
    for pt in &inst.points {
        if let Some(a) = raw_blocked_arc(pt, inst, l) {
            if a.sweep >= TAU - 2.0 * tol {
                return ArcSet { blocked: vec![ArcInterval::full()], feasible: vec![] };
            }
            if a.sweep > 2.0 * tol {
                raw.push((a.start, a.start + a.sweep));
            }
        }
    }
    if raw.is_empty() {
        return ArcSet { blocked: vec![], feasible: vec![ArcInterval::full()] };
    }
    raw.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut merged: Vec<(f64, f64)> = Vec::with_capacity(raw.len());
    for (s, e) in raw {
        match merged.last_mut() {
            Some(last) if s < last.1 - 2.0 * tol => last.1 = last.1.max(e),
            _ => merged.push((s, e)),
        }
    }
    // The last run may wrap past 2π and swallow runs at the start.
    while merged.len() > 1 {
        let (s0, e0) = merged[0];
        let last = merged.len() - 1;
        if s0 + TAU < merged[last].1 - 2.0 * tol {
            merged[last].1 = merged[last].1.max(e0 + TAU);
            merged.remove(0);
        } else {
            break;
        }
    }
    let first_start = merged[0].0;
    let last_end = merged[merged.len() - 1].1;
    if last_end - first_start >= TAU - 2.0 * tol && merged.len() == 1 {
        return ArcSet { blocked: vec![ArcInterval::full()], feasible: vec![] };
    }

    let mut feasible = Vec::with_capacity(merged.len());
    for (i, &(_, e)) in merged.iter().enumerate() {
        let next_start = if i + 1 < merged.len() { merged[i + 1].0 } else { first_start + TAU };
        let g = next_start - e;
        if g >= 0.0 {
            feasible.push(ArcInterval::new(e, g));
        } else {
            feasible.push(ArcInterval::new(0.5 * (e + next_start), 0.0));
        }
    }
    feasible.sort_by(|a, b| a.start.total_cmp(&b.start));
    let mut blocked: Vec<ArcInterval> =
        merged.iter().map(|&(s, e)| ArcInterval::new(s, e - s)).collect();
    blocked.sort_by(|a, b| a.start.total_cmp(&b.start));
    ArcSet { blocked, feasible }
}

/// Length of the minor arc of a circle of radius `r_c` subtending a chord of
/// length `d`.
pub fn arc_length(d: f64, r_c: f64) -> Result<f64> {
    if !(r_c.is_finite() && r_c > 0.0) {
        return Err(Error::Domain(format!("circle radius must be positive, got {r_c}")));
    }
    if !(0.0..=2.0 * r_c).contains(&d) {
        return Err(Error::Domain(format!("chord {d} outside [0, {}]", 2.0 * r_c)));
    }
    let cos_theta = (1.0 - d * d / (2.0 * r_c * r_c)).clamp(-1.0, 1.0);
    Ok(r_c * cos_theta.acos())
}
