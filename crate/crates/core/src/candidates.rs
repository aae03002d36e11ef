//! Candidate radii and the exact solver built on them.
//!
//! At the optimum some facility boundary is pinned, either by an end of the
//! segment or by demand points. Every such contact configuration has a
//! closed-form radius. The lists below are deliberately a superset of the
//! configurations that can actually occur; [`solve_exact`] sorts them and
//! binary-searches with [`decide_segment`], so a spurious value costs one
//! comparison and never changes the answer.

use crate::decision::{decide_segment, Packing};
use crate::error::{Error, Result};
use crate::geom::{Instance, Metric};
use crate::poly::{quadratic_roots, Poly};

/// Which contact configuration produced a candidate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// No demand point involved: `||pq|| / (2(k-1))`.
    Case0,
    LinfCase1,
    LinfCase2i,
    LinfCase2ii,
    LinfCase3i,
    LinfCase3iia,
    LinfCase3iib,
    LinfCase3iic,
    LinfCase4,
    L2Case1,
    L2Case2Left,
    L2Case2Right,
    L2Case3PP,
    L2Case3PM,
    L2Case3MP,
    L2Case3MM,
}

/// A candidate radius with the points and disk indices that produced it.
///
/// Disk indices are 1-based. For pair configurations `j` is the disk pinned
/// by point `i` and `j2` the disk pinned by `i2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Candidate {
    pub value: f64,
    pub case_tag: CaseTag,
    pub i: Option<usize>,
    pub i2: Option<usize>,
    pub j: Option<usize>,
    pub j2: Option<usize>,
}

impl Candidate {
    fn new(value: f64, case_tag: CaseTag) -> Self {
        Self { value, case_tag, i: None, i2: None, j: None, j2: None }
    }

    fn point(mut self, i: usize) -> Self {
        self.i = Some(i);
        self
    }

    fn pair(mut self, i: usize, i2: usize) -> Self {
        self.i = Some(i);
        self.i2 = Some(i2);
        self
    }

    fn disks(mut self, j: usize, j2: Option<usize>) -> Self {
        self.j = Some(j);
        self.j2 = j2;
        self
    }
}

/// Diagnostic counters shared by the exact engines.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub decision_calls: usize,
    pub candidates: usize,
    pub comparisons: usize,
    pub rounds: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OptimalResult {
    pub r_max: f64,
    pub packing: Packing,
    pub witness: Option<Candidate>,
    pub stats: SolveStats,
}

/// Candidate square half-sizes under the rectilinear metric.
pub fn candidates_linf(inst: &Instance) -> Result<Vec<Candidate>> {
    if inst.metric() != Metric::Rectilinear {
        return Err(Error::Usage("candidates_linf needs a rectilinear instance".into()));
    }
    let (k, u) = (inst.k(), inst.upper_bound());
    let (xp, xq) = (inst.p().x, inst.q().x);
    let pts = inst.points();
    let mut out = vec![Candidate::new(u, CaseTag::Case0)];

    for (i, pt) in pts.iter().enumerate() {
        let h = inst.height(i);
        out.push(Candidate::new(h, CaseTag::LinfCase2i).point(i));
        out.push(Candidate::new(h, CaseTag::LinfCase3iic).point(i));
        for j in 1..=k {
            let odd = (2 * j - 1) as f64;
            out.push(Candidate::new((pt.x - xp) / odd, CaseTag::LinfCase1).point(i).disks(j, None));
            out.push(Candidate::new((xq - pt.x) / odd, CaseTag::LinfCase3i).point(i).disks(1, Some(j)));
        }
    }
    if let Some(low) = (0..pts.len()).min_by(|&a, &b| inst.height(a).total_cmp(&inst.height(b))) {
        out.push(Candidate::new(inst.height(low), CaseTag::LinfCase2ii).point(low));
    }
    for i in 0..pts.len() {
        for i2 in i + 1..pts.len() {
            let dx = pts[i2].x - pts[i].x;
            out.push(Candidate::new(dx / 2.0, CaseTag::LinfCase3iia).pair(i, i2).disks(1, Some(1)));
            out.push(Candidate::new(dx, CaseTag::LinfCase4).pair(i, i2));
            for j2 in 2..=k {
                for div in [2 * j2 - 1, 2 * j2] {
                    out.push(
                        Candidate::new(dx / div as f64, CaseTag::LinfCase3iib)
                            .pair(i, i2)
                            .disks(1, Some(j2)),
                    );
                }
            }
        }
    }
    Ok(finish(out, u))
}

/// Candidate disk radii under the Euclidean metric.
pub fn candidates_l2(inst: &Instance) -> Result<Vec<Candidate>> {
    if inst.metric() != Metric::Euclidean {
        return Err(Error::Usage("candidates_l2 needs a Euclidean instance".into()));
    }
    let (k, u) = (inst.k(), inst.upper_bound());
    let (xp, xq) = (inst.p().x, inst.q().x);
    let pts = inst.points();
    let mut out = vec![Candidate::new(u, CaseTag::L2Case1)];

    // One point on the boundary of a disk in a tight chain anchored at an end
    // of the segment: D - 2mr = sqrt(r^2 - h^2).
    for (i, pt) in pts.iter().enumerate() {
        let h = inst.height(i);
        for (d, tag) in [(pt.x - xp, CaseTag::L2Case2Left), (xq - pt.x, CaseTag::L2Case2Right)] {
            if d < 0.0 {
                continue;
            }
            for m in 0..k {
                let mf = m as f64;
                let a = 4.0 * mf * mf - 1.0;
                for r in quadratic_roots(a, -4.0 * mf * d, d * d + h * h) {
                    if r < h || r <= 0.0 || r > u * (1.0 + 1e-12) {
                        continue;
                    }
                    let s = root_term(r, h);
                    if (d - 2.0 * mf * r - s).abs() > 1e-7 * (1.0 + d.abs()) {
                        continue;
                    }
                    let j = match tag {
                        CaseTag::L2Case2Left => m + 1,
                        _ => k - m,
                    };
                    out.push(Candidate::new(r, tag).point(i).disks(j, None));
                }
            }
        }
    }

    // Two points pinning a tight chain between them:
    // D = 2mr + sa * S_i + sb * S_i2 with S = sqrt(r^2 - h^2).
    for i in 0..pts.len() {
        let ha = inst.height(i);
        for i2 in i + 1..pts.len() {
            let hb = inst.height(i2);
            let d = pts[i2].x - pts[i].x;
            let lo = ha.max(hb);
            if lo > u {
                continue;
            }
            for m in 0..k {
                let mf = m as f64;
                if d < 2.0 * mf * lo - 2.0 * u || d > 2.0 * (mf + 1.0) * u {
                    continue;
                }
                pair_roots(d, mf, ha, hb, lo, u, |r, tag| {
                    out.push(Candidate::new(r, tag).pair(i, i2).disks(1, Some(m + 1)));
                });
            }
        }
    }
    Ok(finish(out, u))
}

fn root_term(r: f64, h: f64) -> f64 {
    ((r - h) * (r + h)).max(0.0).sqrt()
}

/// Roots in `[lo, u]` of `D - 2mr = sa*Sa + sb*Sb` for every sign pattern,
/// through the twice-squared quartic `(w^2 + B - A)^2 = 4 w^2 (r^2 - A)` with
/// `w = D - 2mr`, `A = ha^2`, `B = hb^2`. Each root is matched back to the sign
/// patterns it actually satisfies and polished with one Newton step.
fn pair_roots(d: f64, m: f64, ha: f64, hb: f64, lo: f64, u: f64, mut emit: impl FnMut(f64, CaseTag)) {
    let (a, b) = (ha * ha, hb * hb);
    let w = Poly::linear(d, -2.0 * m);
    let w2 = &w * &w;
    let lhs = &w2 + &Poly::constant(b - a);
    let lhs = &lhs * &lhs;
    let rhs = (&w2 * &Poly::new(vec![-a, 0.0, 1.0])).scale(4.0);
    let quartic = &lhs - &rhs;
    let hi = u * (1.0 + 1e-12);
    const SIGNS: [(f64, f64, CaseTag); 4] = [
        (1.0, 1.0, CaseTag::L2Case3PP),
        (1.0, -1.0, CaseTag::L2Case3PM),
        (-1.0, 1.0, CaseTag::L2Case3MP),
        (-1.0, -1.0, CaseTag::L2Case3MM),
    ];
    let roots = match quartic.degree() {
        None => return,
        Some(_) => quartic.roots_in(lo, hi),
    };
    for r0 in roots {
        if r0 <= 0.0 {
            continue;
        }
        for &(sa, sb, tag) in &SIGNS {
            let f = |r: f64| 2.0 * m * r + sa * root_term(r, ha) + sb * root_term(r, hb) - d;
            let scale = 1.0 + d.abs() + 2.0 * m * r0 + 2.0 * r0;
            if f(r0).abs() > 1e-7 * scale {
                continue;
            }
            let mut r = r0;
            let (s1, s2) = (root_term(r, ha), root_term(r, hb));
            if s1 > 0.0 && s2 > 0.0 {
                let df = 2.0 * m + sa * r / s1 + sb * r / s2;
                if df != 0.0 {
                    let step = r - f(r) / df;
                    if step >= lo && step <= hi && f(step).abs() <= f(r).abs() {
                        r = step;
                    }
                }
            }
            emit(r, tag);
        }
    }
}

/// Keeps values in `(0, u]`, sorts them and drops near duplicates.
fn finish(mut out: Vec<Candidate>, u: f64) -> Vec<Candidate> {
    let cap = u * (1.0 + 1e-12);
    out.retain(|c| c.value.is_finite() && c.value > 0.0 && c.value <= cap);
    for c in &mut out {
        c.value = c.value.min(u);
    }
    out.sort_by(|a, b| a.value.total_cmp(&b.value));
    out.dedup_by(|b, a| b.value - a.value <= 1e-12 * a.value.abs().max(1.0));
    out
}

/// Largest candidate accepted by the decision procedure.
pub fn solve_exact(inst: &Instance) -> Result<OptimalResult> {
    let cands = match inst.metric() {
        Metric::Euclidean => candidates_l2(inst)?,
        Metric::Rectilinear => candidates_linf(inst)?,
    };
    let mut calls = 0usize;
    let mut yes = |v: f64| -> Result<Option<Packing>> {
        calls += 1;
        Ok(decide_segment(inst, v)?.into_packing())
    };

    let mut best = None;
    let (mut lo, mut hi) = (0usize, cands.len());
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        match yes(cands[mid].value)? {
            Some(pk) => {
                best = Some((mid, pk));
                lo = mid + 1;
            }
            None => hi = mid,
        }
    }
    let (idx, packing) = best.ok_or_else(|| {
        Error::Invariant("no candidate radius is feasible".into())
    })?;
    Ok(OptimalResult {
        r_max: cands[idx].value,
        packing,
        witness: Some(cands[idx]),
        stats: SolveStats {
            decision_calls: calls,
            candidates: cands.len(),
            comparisons: 0,
            rounds: 0,
        },
    })
}
