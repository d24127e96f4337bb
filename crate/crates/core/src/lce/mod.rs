//! Longest-common-extension queries over a fixed text.
//!
//! Built from a suffix array (SA-IS), its LCP array (Kasai) and a
//! constant-time range-minimum structure, so construction is linear and
//! each query is O(1). Positions are 0-based.

mod rmq;
mod sais;

pub use rmq::BlockRmq;
pub use sais::{lcp_array, suffix_array};

use thiserror::Error;

use crate::word::Letter;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LceError {
    #[error("cannot index an empty text")]
    EmptyText,
    #[error("position {pos} out of range for text of length {len}")]
    OutOfRange { pos: usize, len: usize },
}

pub struct LceIndex {
    len: usize,
    rank: Vec<u32>,
    lcp: BlockRmq,
}

impl LceIndex {
    pub fn build(text: &[Letter]) -> Result<LceIndex, LceError> {
        let symbols: Vec<u32> = text.iter().map(|l| l.code() as u32).collect();
        LceIndex::from_symbols(&symbols, 3)
    }

    /// Index over an arbitrary integer alphabet `0..=upper`.
    pub fn from_symbols(symbols: &[u32], upper: u32) -> Result<LceIndex, LceError> {
        if symbols.is_empty() {
            return Err(LceError::EmptyText);
        }
        let sa = suffix_array(symbols, upper);
        let mut rank = vec![0u32; symbols.len()];
        for (r, &p) in sa.iter().enumerate() {
            rank[p as usize] = r as u32;
        }
        let lcp = lcp_array(symbols, &sa, &rank);
        Ok(LceIndex {
            len: symbols.len(),
            rank,
            lcp: BlockRmq::new(lcp),
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Length of the longest common prefix of the suffixes at `i` and `j`.
    ///
    /// Panics if either position is out of range.
    #[inline]
    pub fn lce(&self, i: usize, j: usize) -> usize {
        assert!(i < self.len && j < self.len, "lce position out of range");
        if i == j {
            return self.len - i;
        }
        let (a, b) = (self.rank[i] as usize, self.rank[j] as usize);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.lcp.min(lo + 1, hi) as usize
    }

    pub fn try_lce(&self, i: usize, j: usize) -> Result<usize, LceError> {
        for pos in [i, j] {
            if pos >= self.len {
                return Err(LceError::OutOfRange { pos, len: self.len });
            }
        }
        Ok(self.lce(i, j))
    }
}

/// LCE between positions of two texts `X` and `Y`, answered by one index
/// over the concatenation `X·Y`. Results are clamped to the remaining
/// length of each text, so they do not depend on what follows `X`.
pub struct CrossLce {
    index: LceIndex,
    x_len: usize,
    y_len: usize,
}

impl CrossLce {
    pub fn build(x: &[Letter], y: &[Letter]) -> Result<CrossLce, LceError> {
        if x.is_empty() || y.is_empty() {
            return Err(LceError::EmptyText);
        }
        let mut text = Vec::with_capacity(x.len() + y.len());
        text.extend_from_slice(x);
        text.extend_from_slice(y);
        Ok(CrossLce {
            index: LceIndex::build(&text)?,
            x_len: x.len(),
            y_len: y.len(),
        })
    }

    /// Longest common prefix of `X[i..]` and `Y[j..]`.
    #[inline]
    pub fn lce(&self, i: usize, j: usize) -> usize {
        assert!(
            i < self.x_len && j < self.y_len,
            "lce position out of range"
        );
        let raw = self.index.lce(i, self.x_len + j);
        raw.min(self.x_len - i).min(self.y_len - j)
    }
}
