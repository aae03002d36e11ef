//! Real polynomials of small degree and their real roots inside a bracket.
//!
//! Roots are isolated recursively: the roots of the derivative split the
//! bracket into monotone pieces, and each piece with a sign change holds
//! exactly one root, refined by safeguarded Newton iteration. Critical points
//! where the value vanishes to working precision are reported as (even
//! multiplicity) roots, which a sign-change search alone would miss.

use std::ops::{Add, Mul, Neg, Sub};

/// Coefficients in ascending order of degree.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly(Vec<f64>);

impl Poly {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    pub fn constant(c: f64) -> Self {
        Self::new(vec![c])
    }

    /// `a + b x`
    pub fn linear(a: f64, b: f64) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.0
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// Sum of the absolute values of the terms at `x`; the natural scale for
    /// deciding whether a computed value is zero.
    pub fn magnitude(&self, x: f64) -> f64 {
        let ax = x.abs();
        self.0.iter().rev().fold(0.0, |acc, &c| acc * ax + c.abs())
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| i as f64 * c)
                .collect(),
        )
    }

    pub fn scale(&self, s: f64) -> Poly {
        Poly::new(self.0.iter().map(|c| c * s).collect())
    }

    /// Real roots in `[lo, hi]`, ascending, without duplicates.
    pub fn roots_in(&self, lo: f64, hi: f64) -> Vec<f64> {
        if !(lo <= hi) {
            return Vec::new();
        }
        let mut roots = match self.degree() {
            None | Some(0) => Vec::new(),
            Some(1) => {
                let r = -self.0[0] / self.0[1];
                if (lo..=hi).contains(&r) {
                    vec![r]
                } else {
                    Vec::new()
                }
            }
            Some(2) => quadratic_roots(self.0[2], self.0[1], self.0[0])
                .into_iter()
                .filter(|r| (lo..=hi).contains(r))
                .collect(),
            Some(_) => self.isolate(lo, hi),
        };
        roots.sort_by(f64::total_cmp);
        roots.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * (1.0 + b.abs()));
        roots
    }

    fn isolate(&self, lo: f64, hi: f64) -> Vec<f64> {
        let d = self.derivative();
        let crit = d.roots_in(lo, hi);
        let mut knots = Vec::with_capacity(crit.len() + 2);
        knots.push(lo);
        knots.extend(crit.iter().copied().filter(|&c| c > lo && c < hi));
        knots.push(hi);

        let mut roots = Vec::new();
        for &c in &crit {
            if self.eval(c).abs() <= 1e-10 * self.magnitude(c) {
                roots.push(c);
            }
        }
        let mut fa = self.eval(knots[0]);
        if fa == 0.0 {
            roots.push(knots[0]);
        }
        for w in knots.windows(2) {
            let (a, b) = (w[0], w[1]);
            let fb = self.eval(b);
            if fb == 0.0 {
                roots.push(b);
            } else if fa != 0.0 && (fa < 0.0) != (fb < 0.0) {
                roots.push(self.refine(&d, a, b, fa));
            }
            fa = fb;
        }
        roots
    }

    /// Newton iteration kept inside a sign-change bracket, falling back to
    /// bisection whenever a step leaves it or stalls.
    fn refine(&self, d: &Poly, mut a: f64, mut b: f64, fa: f64) -> f64 {
        let neg_at_a = fa < 0.0;
        let mut x = 0.5 * (a + b);
        for _ in 0..200 {
            let fx = self.eval(x);
            if fx == 0.0 {
                return x;
            }
            if (fx < 0.0) == neg_at_a {
                a = x;
            } else {
                b = x;
            }
            let dx = d.eval(x);
            let newton = x - fx / dx;
            let next = if dx != 0.0 && newton > a && newton < b {
                newton
            } else {
                0.5 * (a + b)
            };
            if next == x || b - a <= f64::EPSILON * a.abs().max(b.abs()) {
                return next;
            }
            x = next;
        }
        x
    }
}

/// Real roots of `a x^2 + b x + c` by the cancellation-free formula. A
/// slightly negative discriminant within rounding of zero yields the double
/// root.
pub fn quadratic_roots(a: f64, b: f64, c: f64) -> Vec<f64> {
    if a == 0.0 {
        return if b == 0.0 { Vec::new() } else { vec![-c / b] };
    }
    let disc = b * b - 4.0 * a * c;
    let scale = b * b + (4.0 * a * c).abs();
    if disc < 0.0 {
        return if disc >= -1e-12 * scale { vec![-b / (2.0 * a)] } else { Vec::new() };
    }
    let q = -0.5 * (b + b.signum() * disc.sqrt());
    if q == 0.0 {
        return vec![0.0];
    }
    let mut r = vec![q / a, c / q];
    r.sort_by(f64::total_cmp);
    r
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.0.len().max(rhs.0.len());
        Poly::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&0.0) + rhs.0.get(i).unwrap_or(&0.0))
                .collect(),
        )
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(-1.0)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.0.is_empty() || rhs.0.is_empty() {
            return Poly::new(Vec::new());
        }
        let mut out = vec![0.0; self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn from_roots(roots: &[f64]) -> Poly {
        roots
            .iter()
            .fold(Poly::constant(1.0), |acc, &r| &acc * &Poly::linear(-r, 1.0))
    }

    #[test]
    fn quadratic_basics() {
        assert_eq!(quadratic_roots(1.0, -3.0, 2.0), vec![1.0, 2.0]);
        assert!(quadratic_roots(1.0, 0.0, 1.0).is_empty());
        assert_eq!(quadratic_roots(1.0, -4.0, 4.0), vec![2.0, 2.0]);
        assert_eq!(quadratic_roots(0.0, 2.0, -4.0), vec![2.0]);
    }

    #[test]
    fn quartic_with_four_roots() {
        let p = from_roots(&[-1.5, 0.25, 2.0, 7.0]);
        let r = p.roots_in(-10.0, 10.0);
        assert_eq!(r.len(), 4);
        for (a, b) in r.iter().zip([-1.5, 0.25, 2.0, 7.0]) {
            assert!((a - b).abs() < 1e-12);
        }
        assert_eq!(p.roots_in(0.0, 5.0).len(), 2);
    }

    #[test]
    fn double_root_is_found() {
        // 4 (x^2 - 4)^2 has a double root at 2 and at -2.
        let p = from_roots(&[2.0, 2.0, -2.0, -2.0]).scale(4.0);
        let r = p.roots_in(0.0, 10.0);
        assert_eq!(r.len(), 1);
        assert!((r[0] - 2.0).abs() < 1e-9);
    }

    #[test]
    fn zero_polynomial_has_no_isolated_roots() {
        assert!(Poly::new(vec![0.0, 0.0]).roots_in(-1.0, 1.0).is_empty());
        assert_eq!(Poly::new(vec![0.0, 0.0]).degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = Poly::new(vec![1.0, 2.0]);
        let b = Poly::new(vec![-1.0, 0.0, 3.0]);
        assert_eq!((&a * &b).coeffs(), &[-1.0, -2.0, 3.0, 6.0]);
        assert_eq!((&a + &b).coeffs(), &[0.0, 2.0, 3.0]);
        assert_eq!((&a - &a).degree(), None);
        assert_eq!(b.derivative().coeffs(), &[0.0, 6.0]);
        assert_eq!(b.eval(2.0), 11.0);
    }

    proptest! {
        #[test]
        fn recovers_separated_roots(mut roots in proptest::collection::vec(-50.0..50.0f64, 1..=4)) {
            roots.sort_by(f64::total_cmp);
            prop_assume!(roots.windows(2).all(|w| w[1] - w[0] > 0.1));
            let p = from_roots(&roots);
            let found = p.roots_in(-60.0, 60.0);
            prop_assert_eq!(found.len(), roots.len());
            for (a, b) in found.iter().zip(&roots) {
                prop_assert!((a - b).abs() < 1e-6 * (1.0 + b.abs()), "{} vs {}", a, b);
            }
        }
    }
}
