//! Admissible factors: maximal mirror factors, one per center at most.
//!
//! A factor `X = W[s..s+m)` of a boundary word of length `n = 2h` is a
//! *mirror* when the factor of the same length starting `h` letters later
//! spells `backtrack(X)`. Pair each position `x` with `σ + h − x`, where
//! `σ` is the sum of the first and last positions of `X`; `X` is mirror
//! exactly when every letter of `X` is the complement of its partner.
//! Call a position *good* for `σ` when that holds. A mirror is admissible
//! when it cannot be extended one letter to the right nor one letter to
//! the left, i.e. the good run around the center has the same length on
//! both sides and stops there.
//!
//! The fast path measures both runs with two LCE queries against the
//! backtrack of the word; [`crate::oracle`] holds the brute-force
//! reference it is checked against.

use thiserror::Error;

use crate::boundary::{BoundaryWord, Factor};
use crate::lce::{CrossLce, LceError};

const NONE: u32 = u32::MAX;

/// The middle letter (odd) or the gap between letters `i` and `i + 1`
/// (even) of a factor, positions 0-based and circular.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Center {
    Odd(usize),
    Even(usize),
}

impl Center {
    /// Dense id in `0..2n`: `2i` for `Odd(i)`, `2i + 1` for `Even(i)`.
    pub fn id(self) -> usize {
        match self {
            Center::Odd(i) => 2 * i,
            Center::Even(i) => 2 * i + 1,
        }
    }

    pub fn from_id(id: usize) -> Center {
        if id.is_multiple_of(2) {
            Center::Odd(id / 2)
        } else {
            Center::Even(id / 2)
        }
    }

    /// Center of a nonempty factor of a word of length `n`.
    pub fn of(f: Factor, n: usize) -> Center {
        debug_assert!(f.len > 0);
        Center::from_id((2 * f.start + f.len - 1) % (2 * n))
    }

    pub fn all(n: usize) -> impl Iterator<Item = Center> {
        (0..2 * n).map(Center::from_id)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdmissibleFactor {
    pub center: Center,
    pub span: Factor,
    /// Occurrence of `backtrack(span)`, `|W|/2` letters after `span`.
    pub partner: Factor,
}

impl AdmissibleFactor {
    fn new(span: Factor, n: usize) -> Self {
        AdmissibleFactor {
            center: Center::of(span, n),
            span,
            partner: Factor::new((span.start + n / 2) % n, span.len),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("mirror span length {len} outside 1..={half}")]
pub struct SpanError {
    pub len: usize,
    pub half: usize,
}

/// Whether `W[start..start+len)` is a mirror factor.
pub fn is_mirror(w: &BoundaryWord, start: usize, len: usize) -> Result<bool, SpanError> {
    let h = w.half();
    if len == 0 || len > h {
        return Err(SpanError { len, half: h });
    }
    Ok(mirror_unchecked(w, start, len))
}

/// Mirror predicate without the length check; the empty factor is mirror.
pub(crate) fn mirror_unchecked(w: &BoundaryWord, start: usize, len: usize) -> bool {
    let h = w.half();
    let last = start + len - 1 + w.len();
    (0..len).all(|k| w.at(start + h + k) == w.at(last - k).complement())
}

/// LCE structure over `WW` and `backtrack(W)·backtrack(W)`.
///
/// A good run moving right from `x` (partner moving left from `p`) compares
/// `W[x+k]` with `comp(W[p−k]) = backtrack(W)[n−1−p+k]`. A run moving left
/// from `x` (partner moving right from `p`) compares `comp(W[x−k]) =
/// backtrack(W)[n−1−x+k]` with `W[p+k]`. Both are forward LCEs between the
/// two doubled texts, capped at `n`.
pub struct MirrorIndex {
    lce: CrossLce,
    n: usize,
}

impl MirrorIndex {
    pub fn build(w: &BoundaryWord) -> Result<MirrorIndex, LceError> {
        let n = w.len();
        let ww = w.word().repeat(2);
        let bb = w.word().backtrack().repeat(2);
        Ok(MirrorIndex {
            lce: CrossLce::build(ww.letters(), bb.letters())?,
            n,
        })
    }

    #[inline]
    fn wrap(&self, i: i64) -> usize {
        i.rem_euclid(self.n as i64) as usize
    }

    /// Good positions `x, x+1, ...` for pairing sum `σ + h`.
    #[inline]
    fn run_right(&self, x: i64, pair_sum: i64) -> usize {
        let p = pair_sum - x;
        let n = self.n as i64;
        self.lce.lce(self.wrap(x), self.wrap(n - 1 - p)).min(self.n)
    }

    /// Good positions `x, x−1, ...` for pairing sum `σ + h`.
    #[inline]
    fn run_left(&self, x: i64, pair_sum: i64) -> usize {
        let p = pair_sum - x;
        let n = self.n as i64;
        self.lce.lce(self.wrap(p), self.wrap(n - 1 - x)).min(self.n)
    }
}

/// How the left and right good runs around a center are compared.
///
/// Only [`RunCheck::Equal`] is correct; the other variants exist so tests
/// and the CLI can confirm that the oracle notices a broken fast path.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RunCheck {
    #[default]
    Equal,
    /// Accept every center with the shorter run as radius.
    Min,
    /// Accept exactly the centers whose runs differ.
    Inverted,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AdmissibleOptions {
    pub run_check: RunCheck,
}

impl RunCheck {
    fn accepts(self, left: usize, right: usize) -> bool {
        match self {
            RunCheck::Equal => left == right,
            RunCheck::Min => true,
            RunCheck::Inverted => left != right,
        }
    }
}

/// The admissible factor centered at `c`, if any.
pub fn admissible_at_center(
    w: &BoundaryWord,
    c: Center,
    index: &MirrorIndex,
) -> Option<AdmissibleFactor> {
    admissible_at_center_with(w, c, index, AdmissibleOptions::default())
}

fn admissible_at_center_with(
    w: &BoundaryWord,
    c: Center,
    index: &MirrorIndex,
    opts: AdmissibleOptions,
) -> Option<AdmissibleFactor> {
    let n = w.len();
    let h = w.half() as i64;
    let (span, radius) = match c {
        Center::Odd(i) => {
            if w.at(i + w.half()) != w.at(i).complement() {
                return None;
            }
            let i = i as i64;
            let pair_sum = 2 * i + h;
            let right = index.run_right(i + 1, pair_sum);
            let left = index.run_left(i - 1, pair_sum);
            if !opts.run_check.accepts(left, right) {
                return None;
            }
            let r = left.min(right) as i64;
            ((i - r, 2 * r + 1), r)
        }
        Center::Even(i) => {
            let i = i as i64;
            let pair_sum = 2 * i + 1 + h;
            let right = index.run_right(i + 1, pair_sum);
            let left = index.run_left(i, pair_sum);
            if !opts.run_check.accepts(left, right) {
                return None;
            }
            let r = left.min(right) as i64;
            if r == 0 {
                return None;
            }
            ((i - r + 1, 2 * r), r)
        }
    };
    let (start, len) = span;
    // a mirror of length >= |W|/2 would make the boundary retrace itself
    if radius >= h || len >= h {
        return None;
    }
    let start = start.rem_euclid(n as i64) as usize;
    Some(AdmissibleFactor::new(Factor::new(start, len as usize), n))
}

/// Admissible factors of a boundary word with per-center lookup and
/// per-position start and end lists ordered by increasing length.
#[derive(Clone, Debug)]
pub struct AdmissibleTable {
    n: usize,
    factors: Vec<AdmissibleFactor>,
    by_center: Vec<u32>,
    start_offsets: Vec<u32>,
    start_items: Vec<u32>,
    end_offsets: Vec<u32>,
    end_items: Vec<u32>,
}

pub fn all_admissible(w: &BoundaryWord) -> AdmissibleTable {
    all_admissible_with(w, AdmissibleOptions::default())
}

pub fn all_admissible_with(w: &BoundaryWord, opts: AdmissibleOptions) -> AdmissibleTable {
    let index = MirrorIndex::build(w).expect("boundary words are nonempty");
    let factors: Vec<AdmissibleFactor> = Center::all(w.len())
        .filter_map(|c| admissible_at_center_with(w, c, &index, opts))
        .collect();
    AdmissibleTable::from_factors(w.len(), factors)
}

impl AdmissibleTable {
    /// Builds lookup tables from factors with pairwise distinct centers.
    pub fn from_factors(n: usize, factors: Vec<AdmissibleFactor>) -> AdmissibleTable {
        let mut by_center = vec![NONE; 2 * n];
        for (k, f) in factors.iter().enumerate() {
            debug_assert_eq!(by_center[f.center.id()], NONE, "duplicate center");
            by_center[f.center.id()] = k as u32;
        }

        // counting sort by length, then a stable distribution by position
        let max_len = factors.iter().map(|f| f.span.len).max().unwrap_or(0);
        let mut len_count = vec![0u32; max_len + 2];
        for f in &factors {
            len_count[f.span.len + 1] += 1;
        }
        for l in 1..len_count.len() {
            len_count[l] += len_count[l - 1];
        }
        let mut by_len = vec![0u32; factors.len()];
        for (k, f) in factors.iter().enumerate() {
            let slot = &mut len_count[f.span.len];
            by_len[*slot as usize] = k as u32;
            *slot += 1;
        }

        let bucket = |key: &dyn Fn(&AdmissibleFactor) -> usize| {
            let mut offsets = vec![0u32; n + 1];
            for f in &factors {
                offsets[key(f) + 1] += 1;
            }
            for p in 1..=n {
                offsets[p] += offsets[p - 1];
            }
            let mut fill = offsets.clone();
            let mut items = vec![0u32; factors.len()];
            for &k in &by_len {
                let p = key(&factors[k as usize]);
                items[fill[p] as usize] = k;
                fill[p] += 1;
            }
            (offsets, items)
        };
        let (start_offsets, start_items) = bucket(&|f| f.span.start);
        let (end_offsets, end_items) = bucket(&|f| f.span.last(n));

        AdmissibleTable {
            n,
            factors,
            by_center,
            start_offsets,
            start_items,
            end_offsets,
            end_items,
        }
    }

    pub fn word_len(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// All factors, ordered by center id.
    pub fn factors(&self) -> &[AdmissibleFactor] {
        &self.factors
    }

    pub fn at_center(&self, c: Center) -> Option<&AdmissibleFactor> {
        match self.by_center[c.id()] {
            NONE => None,
            k => Some(&self.factors[k as usize]),
        }
    }

    /// Whether the factor of length `len` at `start` is admissible.
    #[inline]
    pub fn contains(&self, start: usize, len: usize) -> bool {
        if len == 0 || len >= self.n {
            return false;
        }
        let start = start % self.n;
        let f = Factor::new(start, len);
        self.at_center(Center::of(f, self.n))
            .is_some_and(|a| a.span == f)
    }

    /// Factors starting at position `k`, by increasing length.
    pub fn starting_at(&self, k: usize) -> impl DoubleEndedIterator<Item = &AdmissibleFactor> {
        self.starting_indices(k)
            .iter()
            .map(|&i| &self.factors[i as usize])
    }

    /// Factors whose last letter is at position `k`, by increasing length.
    pub fn ending_at(&self, k: usize) -> impl DoubleEndedIterator<Item = &AdmissibleFactor> {
        self.ending_indices(k)
            .iter()
            .map(|&i| &self.factors[i as usize])
    }

    /// Indices into [`Self::factors`] of the factors starting at `k`, by
    /// increasing length.
    pub fn starting_indices(&self, k: usize) -> &[u32] {
        let k = k % self.n;
        &self.start_items[self.start_offsets[k] as usize..self.start_offsets[k + 1] as usize]
    }

    /// Indices of the factors whose last letter is at `k`, by increasing length.
    pub fn ending_indices(&self, k: usize) -> &[u32] {
        let k = k % self.n;
        &self.end_items[self.end_offsets[k] as usize..self.end_offsets[k + 1] as usize]
    }

    #[inline]
    pub fn factor(&self, index: u32) -> &AdmissibleFactor {
        &self.factors[index as usize]
    }

    #[cfg(test)]
    fn starting_lengths(&self, k: usize) -> Vec<usize> {
        self.starting_at(k).map(|f| f.span.len).collect()
    }

    #[cfg(test)]
    fn ending_lengths(&self, k: usize) -> Vec<usize> {
        self.ending_at(k).map(|f| f.span.len).collect()
    }
}
