//! Reference implementations used to check the fast path.
//!
//! `naive` and `corpus` depend only on words, cells and the canonical
//! labeling of splits; they never touch the LCE index, the admissible
//! fast path or the linear scan. `diff` is the one place that runs both
//! sides and compares them.

pub mod corpus;
pub mod diff;
pub mod naive;

pub use corpus::{enumerate_fixed_polyominoes, redelmeier_counts, PolyominoCorpus};
pub use diff::{oracle_diff, oracle_diff_with, OracleDiff};
pub use naive::{is_factorization, naive_admissible, naive_enumerate};
