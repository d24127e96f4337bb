//! Translation vectors, lattices and finite patches of a factorization.
//!
//! For a nonempty factor `X` the copy `P + tX` touches `P` along `X`: its
//! own `X̂` segment lies on top of `P`'s `X` segment, traversed the other
//! way. So `tX` is the end vertex of `X` minus the start vertex of `X̂`.

mod lattice;
mod svg;

pub use lattice::{ext_gcd, hnf, Hnf};
pub use svg::{render_svg, RenderOptions};

use std::collections::HashMap;

use thiserror::Error;

use crate::bn::BnFactorization;
use crate::boundary::BoundaryWord;
use crate::cells::{cells_of_boundary, CellSet};
use crate::geom::Vec2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("translation vectors {0} and {1} are parallel")]
    Degenerate(Vec2, Vec2),
}

/// `(tA, tB, tC)` for a factorization of `w`. An empty factor gets the
/// vector that makes `tA − tB + tC = 0`.
pub fn translation_vectors(w: &BoundaryWord, f: &BnFactorization) -> (Vec2, Vec2, Vec2) {
    let fs = f.factors();
    let n = w.len();
    let t = |k: usize| -> Option<Vec2> {
        let (x, hat) = (fs[k], fs[k + 3]);
        (x.len > 0).then(|| w.vertex((x.start + x.len) % n) - w.vertex(hat.start))
    };
    match (t(0), t(1), t(2)) {
        (Some(a), Some(b), Some(c)) => (a, b, c),
        (Some(a), Some(b), None) => (a, b, b - a),
        (Some(a), None, Some(c)) => (a, a + c, c),
        (None, Some(b), Some(c)) => (b - c, b, c),
        _ => unreachable!("a factorization has at most one empty factor"),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TilingLattice {
    pub ta: Vec2,
    pub tb: Vec2,
    pub tc: Vec2,
    hnf: Hnf,
}

impl TilingLattice {
    pub fn from_vectors(ta: Vec2, tb: Vec2, tc: Vec2) -> Result<TilingLattice, LatticeError> {
        let hnf = hnf(ta, tb).ok_or(LatticeError::Degenerate(ta, tb))?;
        Ok(TilingLattice { ta, tb, tc, hnf })
    }

    pub fn hnf(&self) -> Hnf {
        self.hnf
    }

    pub fn det(&self) -> i64 {
        self.ta.cross(self.tb)
    }
}

pub fn lattice_of(w: &BoundaryWord, f: &BnFactorization) -> Result<TilingLattice, LatticeError> {
    let (ta, tb, tc) = translation_vectors(w, f);
    TilingLattice::from_vectors(ta, tb, tc)
}

/// Copies of a polyomino at `i·ta + j·tb` for `|i|, |j| <= radius`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TilingPatch {
    pub ta: Vec2,
    pub tb: Vec2,
    pub radius: u32,
    /// `(i, j, offset)` in row-major order of `(i, j)`.
    pub translates: Vec<(i64, i64, Vec2)>,
}

impl TilingPatch {
    pub fn new(ta: Vec2, tb: Vec2, radius: u32) -> TilingPatch {
        let r = radius as i64;
        let translates = (-r..=r)
            .flat_map(|i| (-r..=r).map(move |j| (i, j, i * ta + j * tb)))
            .collect();
        TilingPatch {
            ta,
            tb,
            radius,
            translates,
        }
    }

    pub fn len(&self) -> usize {
        self.translates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.translates.is_empty()
    }
}

pub fn patch(w: &BoundaryWord, f: &BnFactorization, radius: u32) -> TilingPatch {
    let (ta, tb, _) = translation_vectors(w, f);
    TilingPatch::new(ta, tb, radius)
}

/// Whether the copies in `patch` are pairwise disjoint and leave no gap
/// where a gap could not be filled by copies outside the patch.
///
/// A cell is checked for coverage only if every lattice translate that
/// could cover it lies inside the patch. Parallel vectors fail.
pub fn verify_patch(w: &BoundaryWord, patch: &TilingPatch) -> bool {
    let det = patch.ta.cross(patch.tb);
    if det == 0 {
        return false;
    }
    let shape = cells_of_boundary(w);
    let mut cover: HashMap<Vec2, u32> = HashMap::new();
    for &(_, _, t) in &patch.translates {
        for c in shape.iter() {
            let slot = cover.entry(c + t).or_insert(0);
            *slot += 1;
            if *slot > 1 {
                return false;
            }
        }
    }

    let r = patch.radius as i64;
    // coefficients of p in the (ta, tb) basis, if integral
    let coeffs = |p: Vec2| -> Option<(i64, i64)> {
        let (i, j) = (p.cross(patch.tb), patch.ta.cross(p));
        (i % det == 0 && j % det == 0).then(|| (i / det, j / det))
    };
    let (lo, hi) = hull(&shape, patch);
    for y in lo.y..=hi.y {
        for x in lo.x..=hi.x {
            let c = Vec2::new(x, y);
            if cover.contains_key(&c) {
                continue;
            }
            let fillable_outside = shape
                .iter()
                .any(|q| coeffs(c - q).is_some_and(|(i, j)| i.abs() > r || j.abs() > r));
            if !fillable_outside {
                return false;
            }
        }
    }
    true
}

fn hull(shape: &CellSet, patch: &TilingPatch) -> (Vec2, Vec2) {
    let (slo, shi) = shape.bounds();
    let mut lo = Vec2::new(i64::MAX, i64::MAX);
    let mut hi = Vec2::new(i64::MIN, i64::MIN);
    for &(_, _, t) in &patch.translates {
        lo = Vec2::new(lo.x.min(slo.x + t.x), lo.y.min(slo.y + t.y));
        hi = Vec2::new(hi.x.max(shi.x + t.x), hi.y.max(shi.y + t.y));
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bn::{canonicalize, factorizations, SixSplit};

    fn bw(s: &str) -> BoundaryWord {
        s.parse().unwrap()
    }

    fn v(x: i64, y: i64) -> Vec2 {
        Vec2::new(x, y)
    }

    #[test]
    fn vector_examples() {
        let square = bw("urdl");
        let f = canonicalize(SixSplit::new(0, 1, 1, 0), 4);
        assert_eq!(
            translation_vectors(&square, &f),
            (v(-1, 0), v(0, 1), v(1, 1))
        );
        assert_eq!(
            lattice_of(&square, &f).unwrap().hnf(),
            Hnf { d1: 1, s: 0, d2: 1 }
        );

        let domino = bw("urrdll");
        let stacked = canonicalize(SixSplit::new(0, 1, 2, 0), 6);
        let (ta, tb, _) = translation_vectors(&domino, &stacked);
        assert_eq!((ta, tb), (v(-2, 0), v(0, 1)));
        assert_eq!(
            lattice_of(&domino, &stacked).unwrap().hnf(),
            Hnf { d1: 2, s: 0, d2: 1 }
        );

        let brick = canonicalize(SixSplit::new(0, 1, 1, 1), 6);
        let (ta, tb, tc) = translation_vectors(&domino, &brick);
        assert_eq!((ta, tb, tc), (v(-2, 0), v(-1, 1), v(1, 1)));
        assert_eq!(
            lattice_of(&domino, &brick).unwrap().hnf(),
            Hnf { d1: 2, s: 1, d2: 1 }
        );
    }

    #[test]
    fn patches() {
        let square = bw("urdl");
        let f = factorizations(&square).as_slice()[0];
        assert_eq!(patch(&square, &f, 0).len(), 1);
        let p = patch(&square, &f, 1);
        assert_eq!(p.len(), 9);
        assert!(verify_patch(&square, &p));

        let broken = TilingPatch::new(v(-1, 0), v(0, 2), 1);
        assert!(!verify_patch(&square, &broken));
        assert!(!verify_patch(
            &square,
            &TilingPatch::new(v(1, 0), v(2, 0), 1)
        ));

        let domino = bw("urrdll");
        for f in &factorizations(&domino) {
            assert!(verify_patch(&domino, &patch(&domino, f, 1)));
            assert!(verify_patch(&domino, &patch(&domino, f, 2)));
        }
    }

    #[test]
    fn forged_splits_fail_verification() {
        let w = bw("uurdrurddlll");
        for start in 0..12 {
            for a in 1..5 {
                for b in 1..6 - a {
                    let f = canonicalize(SixSplit::new(start, a, b, 6 - a - b), 12);
                    assert!(!verify_patch(&w, &patch(&w, &f, 2)), "{start} {a} {b}");
                }
            }
        }
    }
}
