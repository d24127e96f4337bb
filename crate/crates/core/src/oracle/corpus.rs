//! Exhaustive lists of fixed polyominoes of small area.
//!
//! Two independent generators: growth by single cells with a dedup set,
//! and Redelmeier's counting scheme. Both count polyominoes with holes
//! too; those are then set aside, since a polyomino with a hole has no
//! single boundary word.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write;

use crate::cells::{has_hole, CellError, CellSet};
use crate::geom::Vec2;

const NEIGHBORS: [Vec2; 4] = [
    Vec2::new(1, 0),
    Vec2::new(0, 1),
    Vec2::new(-1, 0),
    Vec2::new(0, -1),
];

#[derive(Clone, Debug)]
pub struct PolyominoCorpus {
    pub max_area: usize,
    /// Simply connected shapes, normalized, ordered by area then cells.
    pub shapes: Vec<CellSet>,
    /// `fixed_counts[k]`: fixed polyominoes of area `k`, holes included.
    pub fixed_counts: Vec<usize>,
    /// `hole_counts[k]`: how many of those have a hole.
    pub hole_counts: Vec<usize>,
}

impl PolyominoCorpus {
    pub fn total_fixed(&self) -> usize {
        self.fixed_counts.iter().sum()
    }

    pub fn total_with_holes(&self) -> usize {
        self.hole_counts.iter().sum()
    }

    pub fn of_area(&self, k: usize) -> impl Iterator<Item = &CellSet> {
        self.shapes.iter().filter(move |s| s.len() == k)
    }
}

fn normalize(cells: &BTreeSet<Vec2>) -> BTreeSet<Vec2> {
    let mx = cells.iter().map(|c| c.x).min().unwrap_or(0);
    let my = cells.iter().map(|c| c.y).min().unwrap_or(0);
    cells.iter().map(|&c| c - Vec2::new(mx, my)).collect()
}

/// All fixed polyominoes of area `1..=max_area`, grown one cell at a time.
pub fn enumerate_fixed_polyominoes(max_area: usize) -> PolyominoCorpus {
    assert!(max_area >= 1, "area bound must be positive");
    let mut fixed_counts = vec![0; max_area + 1];
    let mut hole_counts = vec![0; max_area + 1];
    let mut shapes = Vec::new();
    let mut level: BTreeSet<BTreeSet<Vec2>> = BTreeSet::from([BTreeSet::from([Vec2::ZERO])]);
    for k in 1..=max_area {
        if k > 1 {
            let mut next = BTreeSet::new();
            for p in &level {
                for &c in p {
                    for d in NEIGHBORS {
                        let nb = c + d;
                        if !p.contains(&nb) {
                            let mut q = p.clone();
                            q.insert(nb);
                            next.insert(normalize(&q));
                        }
                    }
                }
            }
            level = next;
        }
        fixed_counts[k] = level.len();
        for p in &level {
            if has_hole(p) {
                hole_counts[k] += 1;
            } else {
                shapes.push(CellSet::new(p.iter().copied()).expect("grown shapes are connected"));
            }
        }
    }
    PolyominoCorpus {
        max_area,
        shapes,
        fixed_counts,
        hole_counts,
    }
}

/// Per-area counts `(all, with holes)` by Redelmeier's method.
pub fn redelmeier_counts(max_area: usize) -> (Vec<usize>, Vec<usize>) {
    let mut all = vec![0; max_area + 1];
    let mut holes = vec![0; max_area + 1];
    let mut poly = Vec::with_capacity(max_area);
    let mut reached = HashSet::from([Vec2::ZERO]);
    let mut untried = vec![Vec2::ZERO];
    redelmeier(&mut untried, &mut poly, &mut reached, max_area, &mut |p| {
        all[p.len()] += 1;
        if has_hole(&p.iter().copied().collect()) {
            holes[p.len()] += 1;
        }
    });
    (all, holes)
}

fn redelmeier(
    untried: &mut Vec<Vec2>,
    poly: &mut Vec<Vec2>,
    reached: &mut HashSet<Vec2>,
    max_area: usize,
    visit: &mut dyn FnMut(&[Vec2]),
) {
    // cells below the origin's row, or left of it in that row, are never used
    let allowed = |c: Vec2| c.y > 0 || (c.y == 0 && c.x >= 0);
    while let Some(c) = untried.pop() {
        poly.push(c);
        visit(poly);
        if poly.len() < max_area {
            let mut added = Vec::new();
            for d in NEIGHBORS {
                let nb = c + d;
                if allowed(nb) && reached.insert(nb) {
                    added.push(nb);
                }
            }
            let mut next = untried.clone();
            next.extend_from_slice(&added);
            redelmeier(&mut next, poly, reached, max_area, visit);
            for a in added {
                reached.remove(&a);
            }
        }
        poly.pop();
    }
}

/// One shape per line, cells sorted, as `x,y;x,y;...`.
pub fn write_cache(shapes: &[CellSet]) -> String {
    let mut out = String::new();
    for s in shapes {
        let line: Vec<String> = s.iter().map(|c| format!("{},{}", c.x, c.y)).collect();
        let _ = writeln!(out, "{}", line.join(";"));
    }
    out
}

pub fn read_cache(text: &str) -> Result<Vec<CellSet>, CellError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let bad = || CellError::BadLine {
            line: i + 1,
            text: line.to_string(),
        };
        let mut cells = Vec::new();
        for pair in line.split(';') {
            let (x, y) = pair.split_once(',').ok_or_else(bad)?;
            cells.push(Vec2::new(
                x.trim().parse().map_err(|_| bad())?,
                y.trim().parse().map_err(|_| bad())?,
            ));
        }
        out.push(CellSet::new(cells)?);
    }
    Ok(out)
}
