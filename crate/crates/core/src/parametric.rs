//! Parametric search for the optimal radius.
//!
//! The greedy decision procedure is replayed at the unknown optimum `L*`.
//! Every quantity it manipulates is an expression in `L` of the form
//! `c + aL + sum w * sqrt(L^2 - h^2)` with at most two radicals, so each
//! branch is the sign of such an expression at `L*`. Its roots are extracted
//! in closed form, the decision procedure locates `L*` among them, and the
//! sign is then constant on the surviving bracket. When the replay ends no
//! branch changes inside `(lo, hi)`, `lo` is feasible and `hi` is not, hence
//! `L* = lo`.
//!
//! [`solve_k2`] does the same for two facilities, but evaluates the interval
//! union by rounds of independent pairwise merges and resolves each round
//! as one batch, so a round costs `O(log n)` decisions regardless of its size.

use std::cmp::Ordering;

use crate::candidates::{OptimalResult, SolveStats};
use crate::decision::decide_segment;
use crate::error::{Error, Result};
use crate::geom::{Instance, Metric};
use crate::poly::{quadratic_roots, Poly};

/// Current bracket around the optimum: `lo` is feasible (or zero) and `hi`
/// is not.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchInterval {
    pub lo: f64,
    pub hi: f64,
}

impl SearchInterval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo >= 0.0 && lo < hi && hi.is_finite()) {
            return Err(Error::Domain(format!("invalid bracket [{lo}, {hi}]")));
        }
        Ok(Self { lo, hi })
    }
}

/// `A L^2 + B L + C + 2 sqrt((L^2 - D)(L^2 - E))`: the once-squared form of a
/// comparison between two expressions that each carry one radical.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComparisonPoly {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub e: f64,
}

impl ComparisonPoly {
    pub fn eval(&self, l: f64) -> f64 {
        let rad = ((l * l - self.d) * (l * l - self.e)).max(0.0).sqrt();
        (self.a * l + self.b) * l + self.c + 2.0 * rad
    }
}

/// Roots of `cp` inside the bracket where both radicands are nonnegative.
pub fn comparison_roots(cp: &ComparisonPoly, bracket: &SearchInterval) -> Vec<f64> {
    let lo = bracket.lo.max(cp.d.max(cp.e).max(0.0).sqrt());
    if lo > bracket.hi {
        return Vec::new();
    }
    let q = Poly::new(vec![cp.c, cp.b, cp.a]);
    let rad = &Poly::new(vec![-cp.d, 0.0, 1.0]) * &Poly::new(vec![-cp.e, 0.0, 1.0]);
    let quartic = &(&q * &q) - &rad.scale(4.0);
    let tol = 1e-7 * (1.0 + cp.c.abs());
    let candidates = match quartic.degree() {
        None => return Vec::new(),
        Some(_) => quartic.roots_in(lo, bracket.hi),
    };
    candidates
        .into_iter()
        .filter(|&l| q.eval(l) <= tol && cp.eval(l).abs() <= tol)
        .collect()
}

/// `c + a L + sum w_i sqrt(L^2 - d_i)`.
#[derive(Clone, Debug, PartialEq)]
struct Expr {
    c: f64,
    a: f64,
    terms: Vec<(f64, f64)>,
}

impl Expr {
    fn constant(c: f64) -> Self {
        Self { c, a: 0.0, terms: Vec::new() }
    }

    /// `x + w sqrt(L^2 - h^2)`: an endpoint of a blocked interval.
    fn endpoint(x: f64, w: f64, h: f64) -> Self {
        Self { c: x, a: 0.0, terms: vec![(w, h * h)] }
    }

    fn plus_l(&self, t: f64) -> Self {
        Self { a: self.a + t, ..self.clone() }
    }

    fn minus(&self, other: &Expr) -> Self {
        let mut terms = self.terms.clone();
        for &(w, d) in &other.terms {
            match terms.iter_mut().find(|t| t.1 == d) {
                Some(t) => t.0 -= w,
                None => terms.push((-w, d)),
            }
        }
        terms.retain(|t| t.0 != 0.0);
        Self { c: self.c - other.c, a: self.a - other.a, terms }
    }

    fn eval(&self, l: f64) -> f64 {
        self.c
            + self.a * l
            + self.terms.iter().map(|&(w, d)| w * (l * l - d).max(0.0).sqrt()).sum::<f64>()
    }

    fn magnitude(&self, l: f64) -> f64 {
        1.0 + self.c.abs()
            + self.a.abs() * l
            + self.terms.iter().map(|&(w, d)| w.abs() * (l * l - d).max(0.0).sqrt()).sum::<f64>()
    }

    fn is_zero(&self) -> bool {
        let s = 1e-12 * (1.0 + self.c.abs());
        self.c.abs() <= s && self.a.abs() <= 1e-12 && self.terms.iter().all(|t| t.0.abs() <= 1e-12)
    }

    fn slope(&self, l: f64) -> f64 {
        self.a
            + self
                .terms
                .iter()
                .map(|&(w, d)| w * l / (l * l - d).max(0.0).sqrt())
                .sum::<f64>()
    }

    /// A few Newton steps on the unsquared expression, kept only while they
    /// reduce the residual. Squaring costs roughly half the digits near
    /// tangencies; this restores them.
    fn polish(&self, mut l: f64) -> f64 {
        for _ in 0..3 {
            let (v, dv) = (self.eval(l), self.slope(l));
            if v == 0.0 || !dv.is_finite() || dv == 0.0 {
                break;
            }
            let next = l - v / dv;
            if !(next.is_finite() && self.eval(next).abs() < v.abs()) {
                break;
            }
            l = next;
        }
        l
    }

    /// Roots strictly inside `(lo, hi)`.
    fn roots_in(&self, lo: f64, hi: f64) -> Vec<f64> {
        let raw = match self.terms.as_slice() {
            [] => {
                if self.a == 0.0 {
                    Vec::new()
                } else {
                    vec![-self.c / self.a]
                }
            }
            &[(w, d)] => {
                let (a, c) = (self.a, self.c);
                quadratic_roots(a * a - w * w, 2.0 * a * c, c * c + w * w * d)
            }
            &[(w1, d1), (w2, d2)] => {
                let (a, c, s) = (self.a, self.c, -w1 * w2);
                let cp = ComparisonPoly {
                    a: (a * a - w1 * w1 - w2 * w2) / s,
                    b: 2.0 * a * c / s,
                    c: (c * c + w1 * w1 * d1 + w2 * w2 * d2) / s,
                    d: d1,
                    e: d2,
                };
                match SearchInterval::new(lo, hi) {
                    Ok(b) => comparison_roots(&cp, &b),
                    Err(_) => Vec::new(),
                }
            }
            _ => unreachable!("comparisons carry at most two radicals"),
        };
        let mut out: Vec<f64> = raw
            .into_iter()
            .map(|l| self.polish(l))
            .filter(|&l| {
                l > lo
                    && l < hi
                    && self.terms.iter().all(|t| l * l >= t.1)
                    && self.eval(l).abs() <= 1e-7 * self.magnitude(l)
            })
            .collect();
        out.sort_by(f64::total_cmp);
        out.dedup();
        out
    }
}

/// The bracket plus the bookkeeping of one search.
struct Search<'a> {
    inst: &'a Instance,
    lo: f64,
    hi: f64,
    calls: usize,
    comparisons: usize,
}

impl<'a> Search<'a> {
    fn decide(&mut self, l: f64) -> Result<bool> {
        self.calls += 1;
        Ok(decide_segment(self.inst, l)?.is_yes())
    }

    /// Shrinks the bracket so that no value of `roots` lies strictly inside.
    fn locate(&mut self, mut roots: Vec<f64>) -> Result<()> {
        roots.retain(|&r| r > self.lo && r < self.hi);
        roots.sort_by(f64::total_cmp);
        roots.dedup();
        let (mut i, mut j) = (0, roots.len());
        while i < j {
            let mid = i + (j - i) / 2;
            if self.decide(roots[mid])? {
                self.lo = roots[mid];
                i = mid + 1;
            } else {
                self.hi = roots[mid];
                j = mid;
            }
        }
        Ok(())
    }

    /// Sign of `e` on the open bracket, or `None` if samples disagree.
    fn sample(&self, e: &Expr) -> Option<Ordering> {
        let mut sign = Ordering::Equal;
        for f in [0.5, 0.25, 0.75] {
            let l = self.lo + f * (self.hi - self.lo);
            let v = e.eval(l);
            let s = if v.abs() <= 1e-13 * e.magnitude(l) {
                Ordering::Equal
            } else if v > 0.0 {
                Ordering::Greater
            } else {
                Ordering::Less
            };
            match (sign, s) {
                (_, Ordering::Equal) => {}
                (Ordering::Equal, _) => sign = s,
                (a, b) if a != b => return None,
                _ => {}
            }
        }
        Some(sign)
    }

    /// A root of `e` between two sample points of opposite sign, by bisection.
    fn stray_root(&self, e: &Expr) -> f64 {
        let pts = [0.25, 0.5, 0.75].map(|f| self.lo + f * (self.hi - self.lo));
        let vals = pts.map(|l| e.eval(l));
        let (mut a, mut b) = (pts[0], pts[2]);
        for w in 0..2 {
            if vals[w] != 0.0 && vals[w + 1] != 0.0 && (vals[w] < 0.0) != (vals[w + 1] < 0.0) {
                a = pts[w];
                b = pts[w + 1];
                break;
            }
        }
        let fa_neg = e.eval(a) < 0.0;
        for _ in 0..200 {
            let m = 0.5 * (a + b);
            if m <= a || m >= b {
                break;
            }
            if (e.eval(m) < 0.0) == fa_neg {
                a = m;
            } else {
                b = m;
            }
        }
        0.5 * (a + b)
    }

    fn settle(&mut self, e: &Expr) -> Result<Ordering> {
        for _ in 0..64 {
            if let Some(s) = self.sample(e) {
                return Ok(s);
            }
            let r = self.stray_root(e);
            self.locate(vec![r])?;
        }
        let v = e.eval(0.5 * (self.lo + self.hi));
        Ok(v.partial_cmp(&0.0).unwrap_or(Ordering::Equal))
    }

    /// Sign of `e(L*)`, with identically vanishing expressions reported as
    /// `Equal`.
    fn sign(&mut self, e: &Expr) -> Result<Ordering> {
        self.comparisons += 1;
        if e.is_zero() {
            return Ok(Ordering::Equal);
        }
        let roots = e.roots_in(self.lo, self.hi);
        self.locate(roots)?;
        self.settle(e)
    }

    /// Signs of a batch of independent comparisons, resolved together.
    fn signs(&mut self, es: &[Expr]) -> Result<Vec<Ordering>> {
        self.comparisons += es.len();
        let mut roots = Vec::new();
        for e in es.iter().filter(|e| !e.is_zero()) {
            roots.extend(e.roots_in(self.lo, self.hi));
        }
        self.locate(roots)?;
        es.iter()
            .map(|e| if e.is_zero() { Ok(Ordering::Equal) } else { self.settle(e) })
            .collect()
    }

    /// `true` when `x <= y` at `L*`.
    fn le(&mut self, x: &Expr, y: &Expr) -> Result<bool> {
        Ok(self.sign(&y.minus(x))? != Ordering::Less)
    }
}

fn start(inst: &Instance, what: &str) -> Result<()> {
    if inst.metric() != Metric::Euclidean {
        return Err(Error::Usage(format!("{what} supports the Euclidean metric only")));
    }
    Ok(())
}

/// In exact arithmetic the replay ends with `L* = lo`. A root computed a hair
/// above a true breakpoint can instead end it with `L*` just below `hi`; that
/// case is detected with one extra decision and settled by bisection.
fn close_gap(search: &mut Search<'_>) -> Result<()> {
    if !search.hi.is_finite() {
        return Ok(());
    }
    let probe = search.hi * (1.0 - 1e-9);
    if probe <= search.lo || !search.decide(probe)? {
        return Ok(());
    }
    search.lo = probe;
    while search.hi - search.lo > 4.0 * f64::EPSILON * search.hi {
        let mid = 0.5 * (search.lo + search.hi);
        if search.decide(mid)? {
            search.lo = mid;
        } else {
            search.hi = mid;
        }
    }
    Ok(())
}

fn finish(mut search: Search<'_>, rounds: usize) -> Result<OptimalResult> {
    close_gap(&mut search)?;
    let r = search.lo;
    if r <= 0.0 {
        return Err(Error::Invariant("parametric search left an empty bracket".into()));
    }
    let packing = decide_segment(search.inst, r)?
        .into_packing()
        .ok_or_else(|| Error::Invariant(format!("radius {r} failed its final check")))?;
    Ok(OptimalResult {
        r_max: r,
        packing,
        witness: None,
        stats: SolveStats {
            decision_calls: search.calls + 1,
            candidates: 0,
            comparisons: search.comparisons,
            rounds,
        },
    })
}

/// Ends the search early when the unobstructed bound is feasible.
fn try_upper(search: &mut Search<'_>) -> Result<bool> {
    let u = search.inst.upper_bound();
    if search.decide(u)? {
        search.lo = u;
        return Ok(true);
    }
    search.hi = u;
    Ok(false)
}

/// Exact optimum by replaying the greedy decision at the unknown radius.
pub fn solve_parametric(inst: &Instance) -> Result<OptimalResult> {
    start(inst, "parametric search")?;
    let mut s = Search { inst, lo: 0.0, hi: f64::INFINITY, calls: 0, comparisons: 0 };
    if !try_upper(&mut s)? {
        replay_greedy(&mut s)?;
    }
    finish(s, 0)
}

struct Group {
    lo: Expr,
    hi: Expr,
}

fn active_points(s: &mut Search<'_>) -> Result<Vec<usize>> {
    let inst = s.inst;
    let mut active = Vec::new();
    for i in 0..inst.n() {
        let e = Expr { c: -inst.height(i), a: 1.0, terms: Vec::new() };
        if s.sign(&e)? == Ordering::Greater {
            active.push(i);
        }
    }
    Ok(active)
}

fn blocked(inst: &Instance, i: usize) -> Group {
    let (x, h) = (inst.points()[i].x, inst.height(i));
    Group { lo: Expr::endpoint(x, -1.0, h), hi: Expr::endpoint(x, 1.0, h) }
}

fn replay_greedy(s: &mut Search<'_>) -> Result<()> {
    let inst = s.inst;
    let active = active_points(s)?;

    // Union of the blocked intervals, scanning centers left to right.
    let mut stack: Vec<Group> = Vec::new();
    for i in active {
        let mut g = blocked(inst, i);
        while let Some(top) = stack.last() {
            if s.le(&top.hi, &g.lo)? {
                break;
            }
            let top = stack.pop().expect("non-empty stack");
            if s.le(&top.lo, &g.lo)? {
                g.lo = top.lo;
            }
            if s.le(&g.hi, &top.hi)? {
                g.hi = top.hi;
            }
        }
        stack.push(g);
    }

    // Feasible gaps inside the segment.
    let (xp, xq) = (Expr::constant(inst.p().x), Expr::constant(inst.q().x));
    let mut gaps = Vec::new();
    let mut cursor = xp.clone();
    let mut open = true;
    for g in stack {
        if s.le(&g.hi, &xp)? {
            continue;
        }
        if s.le(&xq, &g.lo)? {
            break;
        }
        if s.le(&cursor, &g.lo)? {
            gaps.push((cursor.clone(), g.lo));
        }
        if s.le(&xq, &g.hi)? {
            open = false;
            break;
        }
        cursor = g.hi;
    }
    if open {
        gaps.push((cursor, xq));
    }

    // Greedy packing over the gaps.
    let k = inst.k();
    let mut placed = 0usize;
    let mut prev: Option<Expr> = None;
    for (a, b) in gaps {
        let first = match &prev {
            None => a,
            Some(p) => {
                let next = p.plus_l(2.0);
                if s.le(&next, &a)? {
                    a
                } else {
                    next
                }
            }
        };
        if !s.le(&first, &b)? {
            continue;
        }
        let remaining = k - placed;
        if s.le(&first.plus_l(2.0 * (remaining - 1) as f64), &b)? {
            return Ok(());
        }
        let mut gamma = 0usize;
        while s.le(&first.plus_l(2.0 * (gamma + 1) as f64), &b)? {
            gamma += 1;
        }
        placed += gamma + 1;
        prev = Some(first.plus_l(2.0 * gamma as f64));
    }
    Ok(())
}

/// Exact optimum for two facilities with batched comparison rounds.
pub fn solve_k2(inst: &Instance) -> Result<OptimalResult> {
    if inst.k() != 2 {
        return Err(Error::Usage(format!("solve_k2 needs k = 2, got k = {}", inst.k())));
    }
    start(inst, "solve_k2")?;
    let mut s = Search { inst, lo: 0.0, hi: f64::INFINITY, calls: 0, comparisons: 0 };
    let mut rounds = 0;
    if !try_upper(&mut s)? {
        rounds = k2_rounds(&mut s)?;
    }
    finish(s, rounds)
}

fn k2_rounds(s: &mut Search<'_>) -> Result<usize> {
    let inst = s.inst;
    let activity: Vec<Expr> = (0..inst.n())
        .map(|i| Expr { c: -inst.height(i), a: 1.0, terms: Vec::new() })
        .collect();
    let mut groups: Vec<Group> = s
        .signs(&activity)?
        .into_iter()
        .enumerate()
        .filter(|(_, o)| *o == Ordering::Greater)
        .map(|(i, _)| blocked(inst, i))
        .collect();
    let mut rounds = 1;

    loop {
        let overlap: Vec<Expr> = groups.windows(2).map(|w| w[0].hi.minus(&w[1].lo)).collect();
        if overlap.is_empty() {
            break;
        }
        let signs = s.signs(&overlap)?;
        rounds += 1;
        let mut pairs = Vec::new();
        let mut t = 0;
        while t < signs.len() {
            if signs[t] == Ordering::Greater {
                pairs.push(t);
                t += 2;
            } else {
                t += 1;
            }
        }
        if pairs.is_empty() {
            break;
        }
        let mut cmp = Vec::with_capacity(2 * pairs.len());
        for &t in &pairs {
            cmp.push(groups[t + 1].lo.minus(&groups[t].lo));
            cmp.push(groups[t + 1].hi.minus(&groups[t].hi));
        }
        let res = s.signs(&cmp)?;
        let mut merged = Vec::with_capacity(groups.len() - pairs.len());
        let mut it = groups.into_iter().enumerate().peekable();
        let mut pi = 0;
        while let Some((idx, g)) = it.next() {
            if pi < pairs.len() && pairs[pi] == idx {
                let (_, h) = it.next().expect("pair partner");
                let lo = if res[2 * pi] == Ordering::Less { h.lo } else { g.lo };
                let hi = if res[2 * pi + 1] == Ordering::Greater { h.hi } else { g.hi };
                merged.push(Group { lo, hi });
                pi += 1;
            } else {
                merged.push(g);
            }
        }
        groups = merged;
    }

    // Extreme feasible points: x(p) unless a group strictly contains it, and
    // symmetrically at x(q).
    let (xp, xq) = (Expr::constant(inst.p().x), Expr::constant(inst.q().x));
    let mut cmp = Vec::with_capacity(4 * groups.len());
    for g in &groups {
        cmp.push(xp.minus(&g.lo));
        cmp.push(g.hi.minus(&xp));
        cmp.push(xq.minus(&g.lo));
        cmp.push(g.hi.minus(&xq));
    }
    let res = s.signs(&cmp)?;
    rounds += 1;
    let mut left = xp.clone();
    let mut right = xq.clone();
    for (g, r) in groups.iter().zip(res.chunks(4)) {
        if r[0] == Ordering::Greater && r[1] == Ordering::Greater {
            left = g.hi.clone();
        }
        if r[2] == Ordering::Greater && r[3] == Ordering::Greater {
            right = g.lo.clone();
        }
    }
    s.signs(&[right.minus(&left.plus_l(2.0))])?;
    Ok(rounds + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::candidates::solve_exact;
    use crate::geom::Point;
    use proptest::prelude::*;

    fn seg(len: f64, pts: &[(f64, f64)], k: usize) -> Instance {
        let pts = pts.iter().map(|&(x, y)| Point::new(x, y)).collect();
        Instance::new(Point::new(0.0, 0.0), Point::new(len, 0.0), pts, k, Metric::Euclidean).unwrap()
    }

    fn bracket(lo: f64, hi: f64) -> SearchInterval {
        SearchInterval::new(lo, hi).unwrap()
    }

    #[test]
    fn roots_without_radicands() {
        let cp = ComparisonPoly { a: 0.0, b: -6.0, c: 4.0, d: 0.0, e: 0.0 };
        let r = comparison_roots(&cp, &bracket(0.0, 10.0));
        assert_eq!(r.len(), 2);
        assert!((r[0] - 1.0).abs() < 1e-12 && (r[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn double_root_of_comparison() {
        let cp = ComparisonPoly { a: 0.0, b: 0.0, c: 0.0, d: 4.0, e: 4.0 };
        let r = comparison_roots(&cp, &bracket(0.0, 10.0));
        assert_eq!(r.len(), 1);
        assert!((r[0] - 2.0).abs() < 1e-9);
    }

    #[test]
    fn root_matches_bisection() {
        let cp = ComparisonPoly { a: 1.0, b: 0.0, c: -25.0, d: 9.0, e: 0.0 };
        let (mut a, mut b) = (3.0, 25.0);
        for _ in 0..200 {
            let m = 0.5 * (a + b);
            if (cp.eval(m) < 0.0) == (cp.eval(a) < 0.0) {
                a = m;
            } else {
                b = m;
            }
        }
        let r = comparison_roots(&cp, &bracket(0.0, 30.0));
        assert_eq!(r.len(), 1);
        assert!((r[0] - a).abs() < 1e-10, "{} vs {}", r[0], a);
    }

    #[test]
    fn bracket_validation() {
        assert!(SearchInterval::new(1.0, 1.0).is_err());
        assert!(SearchInterval::new(-1.0, 1.0).is_err());
    }

    #[test]
    fn reference_instances() {
        let r = solve_parametric(&seg(12.0, &[], 4)).unwrap();
        assert_eq!(r.r_max, 2.0);
        assert_eq!(r.packing.centers, vec![0.0, 4.0, 8.0, 12.0]);
        assert!((solve_parametric(&seg(10.0, &[(5.0, 3.0)], 2)).unwrap().r_max - 5.0).abs() < 1e-12);
        let one = seg(10.0, &[(2.0, 1.0)], 2);
        let r = solve_parametric(&one).unwrap().r_max;
        assert!((r - solve_exact(&one).unwrap().r_max).abs() < 1e-9);
    }

    #[test]
    fn k2_reference_instances() {
        assert_eq!(solve_k2(&seg(10.0, &[], 2)).unwrap().packing.centers, vec![0.0, 10.0]);
        assert!((solve_k2(&seg(10.0, &[(5.0, 3.0)], 2)).unwrap().r_max - 5.0).abs() < 1e-12);
        let two = seg(10.0, &[(2.0, 1.0), (7.0, 1.0)], 2);
        let r = solve_k2(&two).unwrap().r_max;
        assert!((r - 7.25f64.sqrt()).abs() < 1e-9, "{r}");
    }

    #[test]
    fn unsupported_inputs() {
        let linf = Instance::new(Point::new(0.0, 0.0), Point::new(1.0, 0.0), vec![], 2, Metric::Rectilinear)
            .unwrap();
        assert!(matches!(solve_parametric(&linf), Err(Error::Usage(_))));
        assert!(matches!(solve_k2(&seg(10.0, &[], 3)), Err(Error::Usage(_))));
    }

    fn arb_instance(kmax: usize) -> impl Strategy<Value = Instance> {
        (
            1.0..30.0f64,
            proptest::collection::vec((0.0..1.0f64, 0.0..6.0f64), 0..8),
            2usize..=kmax,
        )
            .prop_map(|(len, pts, k)| {
                let pts: Vec<_> = pts.into_iter().map(|(t, y)| (t * len, y)).collect();
                seg(len, &pts, k)
            })
    }

    proptest! {
        #[test]
        fn parametric_matches_exact(inst in arb_instance(4)) {
            let a = solve_parametric(&inst).unwrap();
            let b = solve_exact(&inst).unwrap();
            prop_assert!((a.r_max - b.r_max).abs() <= 1e-9, "{} vs {}", a.r_max, b.r_max);
            prop_assert!(a.stats.decision_calls <= 12 * (inst.n() + inst.k()) + 4);
        }

        #[test]
        fn k2_matches_exact(inst in arb_instance(2)) {
            let a = solve_k2(&inst).unwrap();
            let b = solve_exact(&inst).unwrap();
            prop_assert!((a.r_max - b.r_max).abs() <= 1e-9, "{} vs {}", a.r_max, b.r_max);
        }

        #[test]
        fn comparison_roots_pass_back_substitution(
            a in -3.0..3.0f64, b in -10.0..10.0f64, c in -50.0..50.0f64,
            d in 0.0..25.0f64, e in 0.0..25.0f64,
        ) {
            let cp = ComparisonPoly { a, b, c, d, e };
            for r in comparison_roots(&cp, &bracket(0.0, 20.0)) {
                prop_assert!(cp.eval(r).abs() <= 1e-7 * (1.0 + c.abs()));
                prop_assert!(r * r >= d.max(e) - 1e-12);
            }
        }
    }
}
