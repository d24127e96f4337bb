//! Deciding whether a polyomino tiles the plane by translated copies.
//!
//! A polyomino is given by its boundary word over `u d l r`. It tiles by
//! translation exactly when that word factors as `A B C Â B̂ Ĉ`, where `X̂`
//! is the backtrack of `X` and one of the three factors may be empty.
//! Such factorizations are found in time linear in the word length from
//! the admissible factors of the word.

pub mod admissible;
pub mod bn;
pub mod boundary;
pub mod cells;
pub mod families;
pub mod geom;
pub mod lce;
pub mod oracle;
pub mod tiling;
pub mod word;

pub use admissible::{all_admissible, AdmissibleFactor, AdmissibleTable, Center};
pub use bn::{
    canonicalize, count_factorizations, count_tilings, enumerate, factorizations, is_tileable,
    BnFactorization, FactorizationSet, SixSplit,
};
pub use boundary::{BoundaryError, BoundaryWord, Factor};
pub use cells::{boundary_of_cells, cells_of_boundary, CellError, CellSet};
pub use geom::Vec2;
pub use tiling::{
    lattice_of, patch, translation_vectors, verify_patch, TilingLattice, TilingPatch,
};
pub use word::{Letter, Word};
