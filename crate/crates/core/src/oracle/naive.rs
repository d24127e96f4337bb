//! Brute-force admissible factors and factorizations, straight from the
//! definitions. Nothing here may use the LCE index or the linear scan.

use std::collections::BTreeSet;

use crate::admissible::{AdmissibleFactor, Center};
use crate::bn::{FactorizationSet, SixSplit};
use crate::boundary::{BoundaryWord, Factor};

/// `mirror[s][m]`: the factor of length `m` at `s` is followed, half a
/// turn later, by its backtrack. Lengths run over `0..=|W|/2`.
pub struct MirrorTable {
    h: usize,
    rows: Vec<Vec<bool>>,
}

impl MirrorTable {
    pub fn build(w: &BoundaryWord) -> MirrorTable {
        let (n, h) = (w.len(), w.half());
        let rows = (0..n)
            .map(|s| (0..=h).map(|m| letterwise_mirror(w, s, m)).collect())
            .collect();
        MirrorTable { h, rows }
    }

    pub fn get(&self, start: usize, len: usize) -> bool {
        len <= self.h && self.rows[start % self.rows.len()][len]
    }
}

fn letterwise_mirror(w: &BoundaryWord, s: usize, m: usize) -> bool {
    let n = w.len();
    let x: Vec<_> = (0..m).map(|k| w.at(s + k)).collect();
    let partner: Vec<_> = (0..m).map(|k| w.at(s + w.half() + k)).collect();
    let back: Vec<_> = x.iter().rev().map(|l| l.complement()).collect();
    debug_assert!(s < n);
    partner == back
}

/// Every mirror factor that fails both one-letter extensions.
pub fn naive_admissible(w: &BoundaryWord) -> BTreeSet<AdmissibleFactor> {
    let (n, h) = (w.len(), w.half());
    let mirrors = MirrorTable::build(w);
    let mut out = BTreeSet::new();
    for s in 0..n {
        for m in 1..=h {
            if !mirrors.get(s, m) {
                continue;
            }
            let e = s + m - 1;
            let right_blocked = w.at(e + 1) != w.at(s + h + n - 1).complement();
            let left_blocked = w.at(e + h + 1) != w.at(s + n - 1).complement();
            if right_blocked && left_blocked {
                let span = Factor::new(s, m);
                out.insert(AdmissibleFactor {
                    center: Center::of(span, n),
                    span,
                    partner: Factor::new((s + h) % n, m),
                });
            }
        }
    }
    out
}

/// Every split `W = A B C Â B̂ Ĉ` found by trying all start positions and
/// all lengths `|A| + |B| + |C| = |W|/2`, with at most one empty factor.
pub fn naive_enumerate(w: &BoundaryWord) -> FactorizationSet {
    let (n, h) = (w.len(), w.half());
    let mirrors = MirrorTable::build(w);
    let mut found = Vec::new();
    for a in 0..n {
        for la in 0..=h {
            if !mirrors.get(a, la) {
                continue;
            }
            for lb in 0..=h - la {
                let lc = h - la - lb;
                if [la, lb, lc].iter().filter(|&&l| l == 0).count() > 1 {
                    continue;
                }
                if mirrors.get(a + la, lb) && mirrors.get(a + la + lb, lc) {
                    found.push(SixSplit::new(a, la, lb, lc));
                }
            }
        }
    }
    FactorizationSet::from_splits(n, found)
}

/// Letter-by-letter check that a labeled split is a factorization.
pub fn is_factorization(w: &BoundaryWord, split: SixSplit) -> bool {
    let h = w.half();
    let [la, lb, lc] = split.lens;
    la + lb + lc == h
        && [la, lb, lc].iter().filter(|&&l| l == 0).count() <= 1
        && letterwise_mirror(w, split.start % w.len(), la)
        && letterwise_mirror(w, (split.start + la) % w.len(), lb)
        && letterwise_mirror(w, (split.start + la + lb) % w.len(), lc)
}
