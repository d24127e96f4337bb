//! Parametrized boundary words used by tests, the generator and the bench.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::boundary::BoundaryWord;
use crate::cells::{boundary_of_cells, has_hole, is_connected, CellSet};
use crate::geom::Vec2;
use crate::tiling::{hnf, Hnf};
use crate::word::{Letter, Word};

fn valid(letters: Vec<Letter>) -> BoundaryWord {
    BoundaryWord::validate(Word::new(letters)).expect("family words are simple closed curves")
}

fn run(l: Letter, k: usize) -> impl Iterator<Item = Letter> {
    std::iter::repeat_n(l, k)
}

/// `u rⁱ d lⁱ`, a 1×i bar.
pub fn bar(i: usize) -> BoundaryWord {
    assert!(i >= 1);
    valid(
        run(Letter::U, 1)
            .chain(run(Letter::R, i))
            .chain(run(Letter::D, 1))
            .chain(run(Letter::L, i))
            .collect(),
    )
}

/// `uᵇ rᵃ dᵇ lᵃ`, an a×b rectangle.
pub fn rectangle(a: usize, b: usize) -> BoundaryWord {
    assert!(a >= 1 && b >= 1);
    valid(
        run(Letter::U, b)
            .chain(run(Letter::R, a))
            .chain(run(Letter::D, b))
            .chain(run(Letter::L, a))
            .collect(),
    )
}

/// `k` horizontal dominoes stacked diagonally, each one cell to the right
/// of the one below.
pub fn staircase(k: usize) -> BoundaryWord {
    assert!(k >= 1);
    let k = k as i64;
    let cells = CellSet::new((0..k).flat_map(|j| [Vec2::new(j, j), Vec2::new(j + 1, j)]))
        .expect("staircase is a polyomino");
    boundary_of_cells(&cells).expect("staircase has no hole")
}

pub const FIG2: &str = "u r u r d r u r d^3 l u l d l u l";

pub fn fig2() -> BoundaryWord {
    BoundaryWord::parse(FIG2).expect("constant word is valid")
}

/// A random polyomino grown cell by cell, rejecting growth that closes a hole.
pub fn random_polyomino<R: Rng>(rng: &mut R, area: usize) -> CellSet {
    assert!(area >= 1);
    let mut cells = BTreeSet::from([Vec2::ZERO]);
    let dirs = [
        Vec2::new(1, 0),
        Vec2::new(-1, 0),
        Vec2::new(0, 1),
        Vec2::new(0, -1),
    ];
    while cells.len() < area {
        let frontier: Vec<Vec2> = cells
            .iter()
            .flat_map(|&c| dirs.iter().map(move |&d| c + d))
            .filter(|c| !cells.contains(c))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let pick = *frontier.choose(rng).expect("frontier of a finite set");
        cells.insert(pick);
        if has_hole(&cells) {
            cells.remove(&pick);
        }
    }
    CellSet::new(cells).expect("growth keeps the set valid")
}

/// A polyomino that tiles the plane with a known lattice.
#[derive(Clone, Debug)]
pub struct RandomTileable {
    pub cells: CellSet,
    pub word: BoundaryWord,
    pub lattice: Hnf,
}

/// Starts from the `d1 × d2` rectangle, which tiles with basis
/// `{(d1, 0), (s, d2)}`, and moves single cells by lattice vectors while
/// the set stays a polyomino. Any such set still has one cell per coset,
/// so it tiles with the same lattice.
pub fn random_tileable<R: Rng>(rng: &mut R, max_side: i64, moves: usize) -> RandomTileable {
    assert!(max_side >= 1);
    let d1 = rng.gen_range(1..=max_side);
    let d2 = rng.gen_range(1..=max_side);
    let s = rng.gen_range(0..d1);
    let e1 = Vec2::new(d1, 0);
    let e2 = Vec2::new(s, d2);
    let steps = [e1, -e1, e2, -e2, e1 + e2, -(e1 + e2), e1 - e2, e2 - e1];
    let mut cells: BTreeSet<Vec2> = (0..d1)
        .flat_map(|x| (0..d2).map(move |y| Vec2::new(x, y)))
        .collect();
    for _ in 0..moves {
        let all: Vec<Vec2> = cells.iter().copied().collect();
        let from = *all.choose(rng).expect("nonempty");
        let to = from + *steps.choose(rng).expect("nonempty");
        if cells.contains(&to) {
            continue;
        }
        cells.remove(&from);
        cells.insert(to);
        if !is_connected(&cells) || has_hole(&cells) {
            cells.remove(&to);
            cells.insert(from);
        }
    }
    let cells = CellSet::new(cells)
        .expect("moves keep the set valid")
        .normalized();
    let word = boundary_of_cells(&cells).expect("no hole");
    RandomTileable {
        cells,
        word,
        lattice: Hnf { d1, s, d2 },
    }
}

/// A height-2 strip `uu T dd T̂` where `T` alternates runs of `r` with
/// single `u` or `d` steps. Length close to `target`, linear-time to build,
/// and tileable with lattice `{(−X, −Y), (0, 2)}` where `(X, Y)` is the
/// displacement of `T`.
pub fn strip<R: Rng>(rng: &mut R, target: usize) -> (BoundaryWord, Hnf) {
    let half = target.max(8) / 2 - 2;
    let mut t = Vec::with_capacity(half);
    while t.len() < half {
        let room = half - t.len();
        if room <= 2 || t.last() != Some(&Letter::R) {
            let k = rng.gen_range(1..=room.min(8));
            t.extend(run(Letter::R, k));
        } else {
            t.push(if rng.gen_bool(0.5) {
                Letter::U
            } else {
                Letter::D
            });
        }
    }
    while t.last() != Some(&Letter::R) {
        t.pop();
    }
    let (x, y) = t.iter().fold((0i64, 0i64), |(x, y), l| {
        let (dx, dy) = l.step();
        (x + dx, y + dy)
    });
    let t = Word::new(t);
    let letters: Vec<Letter> = run(Letter::U, 2)
        .chain(t.letters().iter().copied())
        .chain(run(Letter::D, 2))
        .chain(t.backtrack().into_letters())
        .collect();
    let lattice = hnf(Vec2::new(-x, -y), Vec2::new(0, 2)).expect("x > 0");
    (valid(letters), lattice)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bn::{count_tilings, distinct_lattices, factorizations, is_tileable};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn fixed_families() {
        assert_eq!(bar(3).to_string(), "urrrdlll");
        assert_eq!(rectangle(2, 1).to_string(), "urrdll");
        assert_eq!(staircase(1).to_string(), "urrdll");
        assert_eq!(staircase(3).area(), 6);
        assert_eq!(fig2().len(), 18);
        assert!(is_tileable(&staircase(4)));
        // three row offsets plus the column offset by one
        assert_eq!(count_tilings(&rectangle(3, 2)), 4);
    }

    #[test]
    fn random_tileable_has_its_lattice() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let t = random_tileable(&mut rng, 5, 30);
            assert_eq!(t.cells.len() as i64, t.lattice.det());
            let lattices = distinct_lattices(&t.word, &factorizations(&t.word));
            assert!(
                lattices.iter().any(|l| l.hnf() == t.lattice),
                "{} lacks {}",
                t.word,
                t.lattice
            );
        }
    }

    #[test]
    fn strips_tile() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for target in [8, 20, 64, 300] {
            let (w, lattice) = strip(&mut rng, target);
            assert!(w.len() <= target.max(8));
            let lattices = distinct_lattices(&w, &factorizations(&w));
            assert!(lattices.iter().any(|l| l.hnf() == lattice), "{w}");
        }
    }

    #[test]
    fn random_polyominoes_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for area in [1, 5, 30] {
            let p = random_polyomino(&mut rng, area);
            assert_eq!(p.len(), area);
            assert_eq!(boundary_of_cells(&p).unwrap().area(), area as i64);
        }
    }
}
