//! Factorizations `W = A B C Â B̂ Ĉ` of a boundary word.
//!
//! Every factor of such a factorization is admissible, so the search only
//! walks the admissible table. Three passes cover everything:
//!
//! 1. for each `A`, the `B` candidates starting right after it, longest
//!    first, each completed by the length-determined `C`;
//! 2. the same with the roles of `B` and `C` exchanged;
//! 3. for each `A`, the single split `A B Â B̂` with `C` empty.
//!
//! The valid completions of a fixed `A` form a run of the longest
//! candidates, so passes 1 and 2 stop at the first candidate whose
//! completion is not admissible.

use crate::admissible::{all_admissible, AdmissibleTable};
use crate::boundary::{BoundaryWord, Factor};
use crate::tiling::{lattice_of, TilingLattice};
use crate::word::Word;

/// A labeled split: `A` starts at `start` (0-based) and the lengths of
/// `A`, `B`, `C` are `lens`. The other three factors follow.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SixSplit {
    pub start: usize,
    pub lens: [usize; 3],
}

impl SixSplit {
    pub fn new(start: usize, a: usize, b: usize, c: usize) -> SixSplit {
        SixSplit {
            start,
            lens: [a, b, c],
        }
    }

    /// `A, B, C, Â, B̂, Ĉ` as spans of a word of length `n`.
    pub fn factors(&self, n: usize) -> [Factor; 6] {
        let h = n / 2;
        let [a, b, c] = self.lens;
        let s = self.start;
        [
            Factor::new(s % n, a),
            Factor::new((s + a) % n, b),
            Factor::new((s + a + b) % n, c),
            Factor::new((s + h) % n, a),
            Factor::new((s + h + a) % n, b),
            Factor::new((s + h + a + b) % n, c),
        ]
    }

    /// 1-based positions of the last letters of the six factors. An empty
    /// factor ends where its predecessor ends.
    pub fn cuts(&self, n: usize) -> [usize; 6] {
        let h = n / 2;
        let [a, b, c] = self.lens;
        let s = self.start;
        let end = |x: usize| (x + n - 1) % n + 1;
        [
            end(s + a),
            end(s + a + b),
            end(s + h),
            end(s + h + a),
            end(s + h + a + b),
            end(s + h + a + b + c),
        ]
    }

    pub fn empty_count(&self) -> usize {
        self.lens.iter().filter(|&&l| l == 0).count()
    }
}

/// A factorization in canonical labeling.
///
/// Relabelings that describe the same partition of the word into factors
/// share one canonical form: the six cyclic label shifts, and for a split
/// with an empty factor also the choice of which slot is empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BnFactorization {
    cuts: [usize; 6],
    split: SixSplit,
    n: usize,
}

impl BnFactorization {
    pub fn cuts(&self) -> [usize; 6] {
        self.cuts
    }

    pub fn split(&self) -> SixSplit {
        self.split
    }

    pub fn word_len(&self) -> usize {
        self.n
    }

    pub fn factors(&self) -> [Factor; 6] {
        self.split.factors(self.n)
    }

    pub fn a(&self) -> Factor {
        self.factors()[0]
    }

    pub fn b(&self) -> Factor {
        self.factors()[1]
    }

    pub fn c(&self) -> Factor {
        self.factors()[2]
    }

    pub fn is_degenerate(&self) -> bool {
        self.split.empty_count() > 0
    }

    pub fn texts(&self, w: &BoundaryWord) -> [Word; 3] {
        let f = self.factors();
        [
            w.factor_word(f[0]),
            w.factor_word(f[1]),
            w.factor_word(f[2]),
        ]
    }
}

/// Canonical labeling of a split of a word of length `n`.
///
/// With three nonempty factors the candidates are the six label shifts.
/// With an empty factor the split is first rewritten as `X Y X̂ Ŷ` with `C`
/// empty, whose four label shifts are the candidates. Each shift rotates
/// the cyclic sequence of end positions, and those positions are pairwise
/// distinct, so the least cut tuple is the shift that puts the smallest
/// end position first.
pub fn canonicalize(split: SixSplit, n: usize) -> BnFactorization {
    let h = n / 2;
    let [a, b, c] = split.lens;
    let s = split.start % n;
    let end = |x: usize| (x + n - 1) % n + 1;
    let canonical = if split.empty_count() == 0 {
        let starts = [s, s + a, s + a + b, s + h, s + h + a, s + h + a + b];
        let lens = [a, b, c, a, b, c];
        let k = (0..6)
            .min_by_key(|&k| end(starts[k] + lens[k]))
            .expect("six factors");
        SixSplit::new(starts[k] % n, lens[k], lens[(k + 1) % 6], lens[(k + 2) % 6])
    } else {
        let (x, y) = match (a, b, c) {
            (_, _, 0) => (a, b),
            (_, 0, _) => (a, c),
            _ => (b, c),
        };
        let starts = [s, s + x, s + h, s + h + x];
        let lens = [x, y, x, y];
        let k = (0..4)
            .min_by_key(|&k| end(starts[k] + lens[k]))
            .expect("four factors");
        SixSplit::new(starts[k] % n, lens[k], lens[(k + 1) % 4], 0)
    };
    BnFactorization {
        cuts: canonical.cuts(n),
        split: canonical,
        n,
    }
}

/// Canonical factorizations of one word, sorted by cut tuple.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FactorizationSet {
    items: Vec<BnFactorization>,
}

impl FactorizationSet {
    pub fn from_splits<I: IntoIterator<Item = SixSplit>>(n: usize, splits: I) -> Self {
        // a canonical split is fixed by its start and first two lengths;
        // deduplicate on that packed key before building the wide records
        let mut keys: Vec<u128> = splits
            .into_iter()
            .map(|s| {
                let c = canonicalize(s, n).split;
                ((c.start as u128) << 84) | ((c.lens[0] as u128) << 42) | c.lens[1] as u128
            })
            .collect();
        keys.sort_unstable();
        keys.dedup();
        let h = n / 2;
        let mask = (1u128 << 42) - 1;
        let mut items: Vec<BnFactorization> = keys
            .into_iter()
            .map(|k| {
                let (start, a, b) = (
                    (k >> 84) as usize,
                    ((k >> 42) & mask) as usize,
                    (k & mask) as usize,
                );
                let split = SixSplit::new(start, a, b, h - a - b);
                BnFactorization {
                    cuts: split.cuts(n),
                    split,
                    n,
                }
            })
            .collect();
        items.sort_unstable_by_key(|f| f.cuts);
        FactorizationSet { items }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BnFactorization> {
        self.items.iter()
    }

    pub fn as_slice(&self) -> &[BnFactorization] {
        &self.items
    }

    pub fn get(&self, i: usize) -> Option<&BnFactorization> {
        self.items.get(i)
    }

    /// Whether the canonical class of `split` is in the set.
    pub fn contains_split(&self, split: SixSplit) -> bool {
        let n = match self.items.first() {
            Some(f) => f.n,
            None => return false,
        };
        self.items.binary_search(&canonicalize(split, n)).is_ok()
    }
}

impl<'a> IntoIterator for &'a FactorizationSet {
    type Item = &'a BnFactorization;
    type IntoIter = std::slice::Iter<'a, BnFactorization>;

    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Scan every candidate instead of stopping at the first failed
    /// completion, and panic if that finds a factorization the stopping
    /// scan missed.
    pub exhaustive_scan: bool,
    /// Leave out the pass for splits with an empty factor. Mutation control.
    pub skip_square_pass: bool,
}

struct Scan<'a> {
    table: &'a AdmissibleTable,
    n: usize,
    h: usize,
    stop_at_failure: bool,
    first_only: bool,
    found: Vec<SixSplit>,
}

impl Scan<'_> {
    fn done(&self) -> bool {
        self.first_only && !self.found.is_empty()
    }

    /// `A` ending at `k`, `B` starting at `k + 1`, `C` length-determined.
    fn b_pass(&mut self) {
        let (n, h, t) = (self.n, self.h, self.table);
        for k in 0..n {
            let bs = t.starting_indices(k + 1);
            let mut top = bs.len();
            for &ia in t.ending_indices(k) {
                let la = t.factor(ia).span.len;
                if la + 2 > h {
                    break;
                }
                let bound = h - 1 - la;
                while top > 0 && t.factor(bs[top - 1]).span.len > bound {
                    top -= 1;
                }
                for &ib in bs[..top].iter().rev() {
                    let lb = t.factor(ib).span.len;
                    let lc = h - la - lb;
                    if t.contains(k + 1 + lb, lc) {
                        self.found.push(SixSplit::new(k + n + 1 - la, la, lb, lc));
                        if self.done() {
                            return;
                        }
                    } else if self.stop_at_failure {
                        break;
                    }
                }
            }
        }
    }

    /// `A` starting at `a`, `C` ending at `a + h − 1`, `B` length-determined.
    fn c_pass(&mut self) {
        let (n, h, t) = (self.n, self.h, self.table);
        for a in 0..n {
            let cs = t.ending_indices(a + h + n - 1);
            let mut top = cs.len();
            for &ia in t.starting_indices(a) {
                let la = t.factor(ia).span.len;
                if la + 2 > h {
                    break;
                }
                let bound = h - 1 - la;
                while top > 0 && t.factor(cs[top - 1]).span.len > bound {
                    top -= 1;
                }
                for &ic in cs[..top].iter().rev() {
                    let lc = t.factor(ic).span.len;
                    let lb = h - la - lc;
                    if t.contains(a + la, lb) {
                        self.found.push(SixSplit::new(a, la, lb, lc));
                        if self.done() {
                            return;
                        }
                    } else if self.stop_at_failure {
                        break;
                    }
                }
            }
        }
    }

    fn square_pass(&mut self) {
        let h = self.h;
        for f in self.table.factors() {
            let (a, la) = (f.span.start, f.span.len);
            if la < h && self.table.contains(a + la, h - la) {
                self.found.push(SixSplit::new(a, la, h - la, 0));
                if self.done() {
                    return;
                }
            }
        }
    }

    fn run(&mut self, square: bool) {
        self.b_pass();
        if !self.done() {
            self.c_pass();
        }
        if square && !self.done() {
            self.square_pass();
        }
    }
}

fn scan(
    w: &BoundaryWord,
    table: &AdmissibleTable,
    stop_at_failure: bool,
    first_only: bool,
    square: bool,
) -> Vec<SixSplit> {
    assert_eq!(table.word_len(), w.len(), "table built for another word");
    let mut s = Scan {
        table,
        n: w.len(),
        h: w.half(),
        stop_at_failure,
        first_only,
        found: Vec::new(),
    };
    s.run(square);
    s.found
}

pub fn enumerate(w: &BoundaryWord, table: &AdmissibleTable) -> FactorizationSet {
    enumerate_with(w, table, EnumerateOptions::default())
}

pub fn enumerate_with(
    w: &BoundaryWord,
    table: &AdmissibleTable,
    opts: EnumerateOptions,
) -> FactorizationSet {
    let square = !opts.skip_square_pass;
    let fast = FactorizationSet::from_splits(w.len(), scan(w, table, true, false, square));
    if opts.exhaustive_scan {
        let full = FactorizationSet::from_splits(w.len(), scan(w, table, false, false, square));
        assert_eq!(fast, full, "stopping scan missed a factorization of {w}");
    }
    fast
}

/// All factorizations of `w`, building the admissible table on the way.
pub fn factorizations(w: &BoundaryWord) -> FactorizationSet {
    enumerate(w, &all_admissible(w))
}

/// The first factorization found, if any.
pub fn find_factorization(w: &BoundaryWord) -> Option<BnFactorization> {
    let table = all_admissible(w);
    scan(w, &table, true, true, true)
        .first()
        .map(|&s| canonicalize(s, w.len()))
}

pub fn is_tileable(w: &BoundaryWord) -> bool {
    find_factorization(w).is_some()
}

pub fn count_factorizations(w: &BoundaryWord) -> usize {
    factorizations(w).len()
}

/// Number of distinct lattices among the factorizations of `w`.
pub fn count_tilings(w: &BoundaryWord) -> usize {
    distinct_lattices(w, &factorizations(w)).len()
}

pub fn distinct_lattices(w: &BoundaryWord, set: &FactorizationSet) -> Vec<TilingLattice> {
    let mut lattices: Vec<TilingLattice> = set
        .iter()
        .map(|f| lattice_of(w, f).expect("factorization lattices are nondegenerate"))
        .collect();
    lattices.sort_unstable_by_key(|l| l.hnf());
    lattices.dedup_by_key(|l| l.hnf());
    lattices
}

/// Whether the letters of `w` spell `A B C Â B̂ Ĉ` for this labeling.
pub fn recomposes(w: &BoundaryWord, f: &BnFactorization) -> bool {
    let [a, b, c] = f.texts(w);
    let rebuilt = a
        .concat(&b)
        .concat(&c)
        .concat(&a.backtrack())
        .concat(&b.backtrack())
        .concat(&c.backtrack());
    let start = f.split().start;
    (0..w.len()).all(|i| rebuilt[i] == w.at(start + i))
}
