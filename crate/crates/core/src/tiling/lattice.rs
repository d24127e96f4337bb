//! Canonical bases of rank-2 integer lattices.

use std::fmt;

use crate::geom::Vec2;

/// Basis `{(d1, 0), (s, d2)}` with `d1, d2 > 0` and `0 <= s < d1`; every
/// full-rank sublattice of Z² has exactly one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hnf {
    pub d1: i64,
    pub s: i64,
    pub d2: i64,
}

impl Hnf {
    pub fn basis(&self) -> [Vec2; 2] {
        [Vec2::new(self.d1, 0), Vec2::new(self.s, self.d2)]
    }

    pub fn det(&self) -> i64 {
        self.d1 * self.d2
    }

    pub fn contains(&self, p: Vec2) -> bool {
        p.y.rem_euclid(self.d2) == 0 && (p.x - (p.y / self.d2) * self.s).rem_euclid(self.d1) == 0
    }
}

impl fmt::Display for Hnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},0],[{},{}]]", self.d1, self.s, self.d2)
    }
}

/// `(g, x, y)` with `a·x + b·y = g = gcd(a, b) >= 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut x0, mut x1) = (1i64, 0i64);
    let (mut y0, mut y1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    if r0 < 0 {
        (-r0, -x0, -y0)
    } else {
        (r0, x0, y0)
    }
}

/// Canonical basis of the lattice spanned by `a` and `b`, or `None` when
/// they are parallel.
pub fn hnf(a: Vec2, b: Vec2) -> Option<Hnf> {
    if a.cross(b) == 0 {
        return None;
    }
    let (d2, p, q) = ext_gcd(a.y, b.y);
    let v = p * a + q * b;
    let w = (b.y / d2) * a - (a.y / d2) * b;
    debug_assert_eq!(v.y, d2);
    debug_assert_eq!(w.y, 0);
    let d1 = w.x.abs();
    Some(Hnf {
        d1,
        s: v.x.rem_euclid(d1),
        d2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(x: i64, y: i64) -> Vec2 {
        Vec2::new(x, y)
    }

    #[test]
    fn examples() {
        assert_eq!(hnf(v(-2, 0), v(0, 1)), Some(Hnf { d1: 2, s: 0, d2: 1 }));
        assert_eq!(hnf(v(-2, 0), v(-1, 1)), Some(Hnf { d1: 2, s: 1, d2: 1 }));
        assert_eq!(hnf(v(-1, 0), v(0, 1)), Some(Hnf { d1: 1, s: 0, d2: 1 }));
        assert_eq!(hnf(v(2, 4), v(1, 2)), None);
        assert_eq!(hnf(v(0, 0), v(1, 2)), None);
        assert_eq!(ext_gcd(0, 0).0, 0);
        assert_eq!(ext_gcd(-4, 6).0, 2);
    }

    // The lattice of (a, b) contains both basis vectors of the HNF and the
    // HNF lattice contains a and b, so they coincide.
    proptest! {
        #[test]
        fn same_lattice(ax in -30i64..30, ay in -30i64..30, bx in -30i64..30, by in -30i64..30,
                        i in -5i64..5, j in -5i64..5) {
            let (a, b) = (v(ax, ay), v(bx, by));
            prop_assume!(a.cross(b) != 0);
            let h = hnf(a, b).unwrap();
            prop_assert!(h.d1 > 0 && h.d2 > 0 && 0 <= h.s && h.s < h.d1);
            prop_assert_eq!(h.det(), a.cross(b).abs());
            prop_assert!(h.contains(a) && h.contains(b));
            prop_assert!(h.contains(i * a + j * b));
            let det = a.cross(b);
            for e in h.basis() {
                // Cramer's rule: integer coefficients in the (a, b) basis
                prop_assert_eq!(e.cross(b) % det, 0);
                prop_assert_eq!(a.cross(e) % det, 0);
            }
            // unimodular change of basis gives the same form
            prop_assert_eq!(hnf(a + b, b), Some(h));
            prop_assert_eq!(hnf(b, -a), Some(h));
        }
    }
}
