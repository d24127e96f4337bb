//! Finite cell sets and conversion to and from boundary words.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use thiserror::Error;

use crate::boundary::BoundaryWord;
use crate::geom::Vec2;
use crate::word::{Letter, Word};

const NEIGHBORS: [Vec2; 4] = [
    Vec2::new(1, 0),
    Vec2::new(-1, 0),
    Vec2::new(0, 1),
    Vec2::new(0, -1),
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CellError {
    #[error("empty cell set")]
    Empty,
    #[error("cells are not edge-connected")]
    Disconnected,
    #[error("cell set has a hole")]
    HasHole,
    #[error("line {line}: expected two integers, got '{text}'")]
    BadLine { line: usize, text: String },
}

/// A polyomino as a set of unit cells, each named by its lower-left corner.
///
/// Invariants: nonempty, edge-connected, and the complement is connected.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CellSet {
    cells: BTreeSet<Vec2>,
}

impl CellSet {
    pub fn new<I: IntoIterator<Item = Vec2>>(cells: I) -> Result<CellSet, CellError> {
        let cells: BTreeSet<Vec2> = cells.into_iter().collect();
        if cells.is_empty() {
            return Err(CellError::Empty);
        }
        if !is_connected(&cells) {
            return Err(CellError::Disconnected);
        }
        if has_hole(&cells) {
            return Err(CellError::HasHole);
        }
        Ok(CellSet { cells })
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<CellSet, CellError> {
        CellSet::new(pairs.iter().map(|&p| Vec2::from(p)))
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Vec2) -> bool {
        self.cells.contains(&c)
    }

    pub fn iter(&self) -> impl Iterator<Item = Vec2> + '_ {
        self.cells.iter().copied()
    }

    /// Translate so the minimum x and minimum y are both 0.
    pub fn normalized(&self) -> CellSet {
        let min_x = self.cells.iter().map(|c| c.x).min().unwrap_or(0);
        let min_y = self.cells.iter().map(|c| c.y).min().unwrap_or(0);
        let shift = Vec2::new(min_x, min_y);
        CellSet {
            cells: self.cells.iter().map(|&c| c - shift).collect(),
        }
    }

    pub fn translated(&self, by: Vec2) -> CellSet {
        CellSet {
            cells: self.cells.iter().map(|&c| c + by).collect(),
        }
    }

    /// Inclusive bounds `(min, max)` of the cell coordinates.
    pub fn bounds(&self) -> (Vec2, Vec2) {
        let mut lo = Vec2::new(i64::MAX, i64::MAX);
        let mut hi = Vec2::new(i64::MIN, i64::MIN);
        for c in &self.cells {
            lo = Vec2::new(lo.x.min(c.x), lo.y.min(c.y));
            hi = Vec2::new(hi.x.max(c.x), hi.y.max(c.y));
        }
        (lo, hi)
    }
}

pub fn is_connected(cells: &BTreeSet<Vec2>) -> bool {
    let Some(&first) = cells.iter().next() else {
        return true;
    };
    let mut seen = HashSet::with_capacity(cells.len());
    let mut queue = VecDeque::from([first]);
    seen.insert(first);
    while let Some(c) = queue.pop_front() {
        for d in NEIGHBORS {
            let nb = c + d;
            if cells.contains(&nb) && seen.insert(nb) {
                queue.push_back(nb);
            }
        }
    }
    seen.len() == cells.len()
}

/// Flood fill of the complement inside the bounding box grown by one.
pub fn has_hole(cells: &BTreeSet<Vec2>) -> bool {
    let Some(lo_x) = cells.iter().map(|c| c.x).min() else {
        return false;
    };
    let lo = Vec2::new(lo_x - 1, cells.iter().map(|c| c.y).min().unwrap() - 1);
    let hi = Vec2::new(
        cells.iter().map(|c| c.x).max().unwrap() + 1,
        cells.iter().map(|c| c.y).max().unwrap() + 1,
    );
    let width = (hi.x - lo.x + 1) as usize;
    let height = (hi.y - lo.y + 1) as usize;
    let idx = |c: Vec2| (c.y - lo.y) as usize * width + (c.x - lo.x) as usize;
    let mut seen = vec![false; width * height];
    for &c in cells {
        seen[idx(c)] = true;
    }
    let mut reached = 0usize;
    let mut stack = vec![lo];
    seen[idx(lo)] = true;
    while let Some(c) = stack.pop() {
        reached += 1;
        for d in NEIGHBORS {
            let nb = c + d;
            if nb.x < lo.x || nb.y < lo.y || nb.x > hi.x || nb.y > hi.y {
                continue;
            }
            let i = idx(nb);
            if !seen[i] {
                seen[i] = true;
                stack.push(nb);
            }
        }
    }
    reached + cells.len() != width * height
}

/// Clockwise boundary word of a polyomino, starting at the lower-left
/// corner of its lowest (then leftmost) cell.
pub fn boundary_of_cells(cells: &CellSet) -> Result<BoundaryWord, CellError> {
    let set = &cells.cells;
    let mut out_edge: HashMap<Vec2, Letter> = HashMap::with_capacity(4 * set.len());
    let mut edges = 0usize;
    for &c in set {
        let sides = [
            (Vec2::new(-1, 0), c, Letter::U),
            (Vec2::new(0, 1), c + Vec2::new(0, 1), Letter::R),
            (Vec2::new(1, 0), c + Vec2::new(1, 1), Letter::D),
            (Vec2::new(0, -1), c + Vec2::new(1, 0), Letter::L),
        ];
        for (dir, from, letter) in sides {
            if !set.contains(&(c + dir)) {
                edges += 1;
                if out_edge.insert(from, letter).is_some() {
                    // two boundary curves touch at a vertex
                    return Err(CellError::HasHole);
                }
            }
        }
    }
    let start = *set
        .iter()
        .min_by_key(|c| (c.y, c.x))
        .ok_or(CellError::Empty)?;
    let mut letters = Vec::with_capacity(edges);
    let mut at = start;
    loop {
        let l = out_edge[&at];
        letters.push(l);
        at += Vec2::from(l.step());
        if at == start {
            break;
        }
    }
    if letters.len() != edges {
        return Err(CellError::HasHole);
    }
    BoundaryWord::validate(Word::new(letters)).map_err(|_| CellError::HasHole)
}

/// The cells enclosed by a boundary word, placed so that the word's start
/// vertex is the origin.
pub fn cells_of_boundary(w: &BoundaryWord) -> CellSet {
    // per row: left edges (u steps) and right edges (d steps)
    let mut rows: BTreeMap<i64, (Vec<i64>, Vec<i64>)> = BTreeMap::new();
    for i in 0..w.len() {
        let p = w.vertex(i);
        match w.at(i) {
            Letter::U => rows.entry(p.y).or_default().0.push(p.x),
            Letter::D => rows.entry(p.y - 1).or_default().1.push(p.x),
            _ => {}
        }
    }
    let mut cells = BTreeSet::new();
    for (y, (mut lefts, mut rights)) in rows {
        lefts.sort_unstable();
        rights.sort_unstable();
        debug_assert_eq!(lefts.len(), rights.len());
        for (a, b) in lefts.into_iter().zip(rights) {
            for x in a..b {
                cells.insert(Vec2::new(x, y));
            }
        }
    }
    CellSet { cells }
}

/// Parses "x y" pairs, one per line; `#` starts a comment.
pub fn parse_cell_list(text: &str) -> Result<Vec<Vec2>, CellError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = || CellError::BadLine {
            line: i + 1,
            text: raw.to_string(),
        };
        let mut it = line.split_whitespace();
        let x = it.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
        let y = it.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
        if it.next().is_some() {
            return Err(bad());
        }
        out.push(Vec2::new(x, y));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(p: &[(i64, i64)]) -> CellSet {
        CellSet::from_pairs(p).unwrap()
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(
            boundary_of_cells(&cs(&[(0, 0)])).unwrap().to_string(),
            "urdl"
        );
        assert_eq!(
            boundary_of_cells(&cs(&[(0, 0), (1, 0)]))
                .unwrap()
                .to_string(),
            "urrdll"
        );
        let u_pentomino = cs(&[(0, 0), (1, 0), (2, 0), (0, 1), (2, 1)]);
        assert_eq!(
            boundary_of_cells(&u_pentomino).unwrap().to_string(),
            "uurdrurddlll"
        );
    }

    #[test]
    fn invalid_cell_sets() {
        assert_eq!(CellSet::new([]), Err(CellError::Empty));
        assert_eq!(
            CellSet::from_pairs(&[(0, 0), (1, 1)]),
            Err(CellError::Disconnected)
        );
        let ring: Vec<(i64, i64)> = (0..3)
            .flat_map(|x| (0..3).map(move |y| (x, y)))
            .filter(|&c| c != (1, 1))
            .collect();
        assert_eq!(CellSet::from_pairs(&ring), Err(CellError::HasHole));
    }

    #[test]
    fn cells_from_words() {
        let w: BoundaryWord = "urdl".parse().unwrap();
        assert_eq!(cells_of_boundary(&w), cs(&[(0, 0)]));
        let w: BoundaryWord = "urrdll".parse().unwrap();
        assert_eq!(cells_of_boundary(&w), cs(&[(0, 0), (1, 0)]));
        let w: BoundaryWord = "uurdrurddlll".parse().unwrap();
        assert_eq!(
            cells_of_boundary(&w),
            cs(&[(0, 0), (1, 0), (2, 0), (0, 1), (2, 1)])
        );
    }

    #[test]
    fn roundtrip_through_cells() {
        let shape = cs(&[(3, 5), (3, 6), (4, 6), (5, 6), (5, 5), (5, 4)]);
        let w = boundary_of_cells(&shape).unwrap();
        let back = cells_of_boundary(&w);
        assert_eq!(back.normalized(), shape.normalized());
        assert_eq!(w.area(), shape.len() as i64);
    }

    #[test]
    fn cell_list_parsing() {
        let text = "# domino\n0 0\n1 0  # right half\n\n";
        assert_eq!(
            parse_cell_list(text).unwrap(),
            vec![Vec2::new(0, 0), Vec2::new(1, 0)]
        );
        assert!(matches!(
            parse_cell_list("0 0\n1\n"),
            Err(CellError::BadLine { line: 2, .. })
        ));
        assert!(parse_cell_list("0 0 0").is_err());
    }
}
