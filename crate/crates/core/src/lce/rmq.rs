//! Range-minimum queries in O(1) after linear preprocessing.
//!
//! The array is cut into 64-element blocks. A sparse table over block
//! minima answers the whole-block part of a query; inside a block, each
//! position keeps a bitmask of the increasing min-stack ending there, so
//! the minimum of `[i, j]` sits at the lowest set bit at or after `i`.

const BLOCK: usize = 64;

pub struct BlockRmq {
    values: Vec<u32>,
    masks: Vec<u64>,
    /// `sparse[k][b]` = min over blocks `b .. b + 2^k`.
    sparse: Vec<Vec<u32>>,
}

impl BlockRmq {
    pub fn new(values: Vec<u32>) -> Self {
        let n = values.len();
        let mut masks = vec![0u64; n];
        for start in (0..n).step_by(BLOCK) {
            let end = (start + BLOCK).min(n);
            let mut stack = 0u64;
            for j in start..end {
                while stack != 0 {
                    let top = 63 - stack.leading_zeros() as usize;
                    if values[start + top] >= values[j] {
                        stack &= !(1u64 << top);
                    } else {
                        break;
                    }
                }
                stack |= 1u64 << (j - start);
                masks[j] = stack;
            }
        }

        let block_min: Vec<u32> = values
            .chunks(BLOCK)
            .map(|c| *c.iter().min().expect("nonempty chunk"))
            .collect();
        let blocks = block_min.len();
        let mut sparse = vec![block_min];
        let mut width = 1;
        while 2 * width <= blocks {
            let prev = sparse.last().expect("level 0 exists");
            let next: Vec<u32> = (0..=blocks - 2 * width)
                .map(|b| prev[b].min(prev[b + width]))
                .collect();
            sparse.push(next);
            width *= 2;
        }
        BlockRmq {
            values,
            masks,
            sparse,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Minimum of `values[i..=j]`; requires `i <= j < len`.
    #[inline]
    pub fn min(&self, i: usize, j: usize) -> u32 {
        debug_assert!(i <= j && j < self.values.len());
        let (bi, bj) = (i / BLOCK, j / BLOCK);
        if bi == bj {
            return self.in_block(i, j);
        }
        let mut best = self
            .in_block(i, bi * BLOCK + BLOCK - 1)
            .min(self.in_block(bj * BLOCK, j));
        if bi + 1 < bj {
            best = best.min(self.blocks(bi + 1, bj - 1));
        }
        best
    }

    #[inline]
    fn in_block(&self, i: usize, j: usize) -> u32 {
        let start = i - i % BLOCK;
        let m = self.masks[j] & (!0u64 << (i - start));
        self.values[start + m.trailing_zeros() as usize]
    }

    #[inline]
    fn blocks(&self, a: usize, b: usize) -> u32 {
        let k = (b - a + 1).ilog2() as usize;
        let level = &self.sparse[k];
        level[a].min(level[b + 1 - (1 << k)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn exhaustive_small() {
        let values: Vec<u32> = (0..300u32).map(|i| (i * 7919 + 13) % 97).collect();
        let rmq = BlockRmq::new(values.clone());
        for i in 0..values.len() {
            let mut m = u32::MAX;
            for (j, &v) in values.iter().enumerate().skip(i) {
                m = m.min(v);
                assert_eq!(rmq.min(i, j), m, "[{i}, {j}]");
            }
        }
    }

    proptest! {
        #[test]
        fn random_queries(values in prop::collection::vec(0u32..50, 1..1000),
                          q in prop::collection::vec((0usize..1000, 0usize..1000), 50)) {
            let rmq = BlockRmq::new(values.clone());
            for (a, b) in q {
                let (a, b) = (a % values.len(), b % values.len());
                let (i, j) = (a.min(b), a.max(b));
                prop_assert_eq!(rmq.min(i, j), *values[i..=j].iter().min().unwrap());
            }
        }
    }
}
