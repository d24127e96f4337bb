//! Boundary words: closed, simple, clockwise circular words.
//!
//! Positions inside a [`BoundaryWord`] are 0-based and reduced modulo the
//! length wherever a method takes a `usize`. The 1-based, sign-aware
//! accessors [`BoundaryWord::get`] and [`BoundaryWord::factor`] follow the
//! usual circular-word convention where `W[-1]` is the last letter and
//! `W[i..j]` wraps around when `j < i`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::geom::Vec2;
use crate::word::{Letter, ParseError, Word};

/// An occurrence of a word inside a circular word: `len` letters starting
/// at the 0-based position `start`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factor {
    pub start: usize,
    pub len: usize,
}

impl Factor {
    pub fn new(start: usize, len: usize) -> Self {
        Factor { start, len }
    }

    /// 0-based position of the last letter. Meaningless for empty factors.
    pub fn last(&self, n: usize) -> usize {
        (self.start + self.len + n - 1) % n
    }

    /// 0-based position just past the factor.
    pub fn end(&self, n: usize) -> usize {
        (self.start + self.len) % n
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundaryError {
    #[error("empty word")]
    Empty,
    #[error("not closed: #u={up} #d={down} #l={left} #r={right}")]
    NotClosed {
        up: usize,
        down: usize,
        left: usize,
        right: usize,
    },
    #[error("not simple: vertex {vertex} visited after steps {first} and {second}")]
    NotSimple {
        vertex: Vec2,
        first: usize,
        second: usize,
    },
    #[error("word retraces itself and encloses no cells")]
    Degenerate,
    #[error("index 0 is not a circular position")]
    IndexZero,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Signed cell count enclosed by a closed word, positive for clockwise
/// traversal (interior on the right of every step).
pub fn signed_area(letters: &[Letter]) -> i64 {
    let mut y = 0i64;
    let mut area = 0i64;
    for &l in letters {
        match l {
            Letter::R => area += y,
            Letter::L => area -= y,
            Letter::U => y += 1,
            Letter::D => y -= 1,
        }
    }
    area
}

/// Vertex path `p[0..=len]` starting from the origin.
pub fn vertex_path(letters: &[Letter]) -> Vec<Vec2> {
    let mut p = Vec2::ZERO;
    let mut out = Vec::with_capacity(letters.len() + 1);
    out.push(p);
    for &l in letters {
        p += Vec2::from(l.step());
        out.push(p);
    }
    out
}

/// A validated polyomino boundary word.
///
/// Invariants: closed, simple, clockwise, and rotated so that it starts at
/// the lowest vertex (ties broken leftmost), which is always the lower-left
/// corner of a cell and therefore always leaves with an `u` step. The
/// start vertex is the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryWord {
    word: Word,
    /// `vertices[i]` is the vertex before letter `i`; `vertices[0]` is the origin.
    vertices: Vec<Vec2>,
    area: i64,
    reoriented: bool,
    rotation: usize,
}

impl BoundaryWord {
    /// Checks closure and simplicity, reorients counterclockwise input by
    /// backtracking, and rotates to the canonical start vertex.
    pub fn validate(word: Word) -> Result<BoundaryWord, BoundaryError> {
        if word.is_empty() {
            return Err(BoundaryError::Empty);
        }
        let (up, down, left, right) = (
            word.count(Letter::U),
            word.count(Letter::D),
            word.count(Letter::L),
            word.count(Letter::R),
        );
        if up != down || left != right {
            return Err(BoundaryError::NotClosed {
                up,
                down,
                left,
                right,
            });
        }
        let n = word.len();
        let path = vertex_path(word.letters());
        let mut seen: HashMap<Vec2, usize> = HashMap::with_capacity(n);
        for (i, &v) in path[..n].iter().enumerate() {
            if let Some(first) = seen.insert(v, i) {
                return Err(BoundaryError::NotSimple {
                    vertex: v,
                    first,
                    second: i,
                });
            }
        }

        let signed = signed_area(word.letters());
        if signed == 0 {
            return Err(BoundaryError::Degenerate);
        }
        let (oriented, reoriented) = if signed < 0 {
            (word.backtrack(), true)
        } else {
            (word, false)
        };
        let path = vertex_path(oriented.letters());
        let rotation = (0..n)
            .min_by_key(|&i| (path[i].y, path[i].x))
            .expect("nonempty");
        let mut letters = oriented.into_letters();
        letters.rotate_left(rotation);
        debug_assert_eq!(letters[0], Letter::U);
        let area = signed_area(&letters);
        let vertices = vertex_path(&letters[..n - 1]);
        Ok(BoundaryWord {
            word: Word::new(letters),
            vertices,
            area,
            reoriented,
            rotation,
        })
    }

    pub fn parse(text: &str) -> Result<BoundaryWord, BoundaryError> {
        BoundaryWord::validate(Word::parse(text)?)
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    /// Always false; a boundary word has at least four letters.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// `|W|/2`.
    pub fn half(&self) -> usize {
        self.word.len() / 2
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn letters(&self) -> &[Letter] {
        self.word.letters()
    }

    /// Number of enclosed cells.
    pub fn area(&self) -> i64 {
        self.area
    }

    /// Whether the input was counterclockwise and got backtracked.
    pub fn reoriented(&self) -> bool {
        self.reoriented
    }

    /// Letter `i` of this word is letter `i + rotation` (mod `|W|`) of the
    /// input, after reorientation if that happened.
    pub fn rotation(&self) -> usize {
        self.rotation
    }

    /// Letter at 0-based circular position `i`.
    #[inline]
    pub fn at(&self, i: usize) -> Letter {
        let n = self.len();
        self.word[i % n]
    }

    /// Vertex reached before letter `i` (0-based, circular).
    #[inline]
    pub fn vertex(&self, i: usize) -> Vec2 {
        self.vertices[i % self.len()]
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    /// `W[i]` with 1-based, sign-aware circular indexing.
    pub fn get(&self, i: i64) -> Result<Letter, BoundaryError> {
        Ok(self.word[self.circular_index(i)?])
    }

    /// `W[i..j]` with 1-based, sign-aware circular indexing; wraps when the
    /// reduced `j` precedes the reduced `i`.
    pub fn factor(&self, i: i64, j: i64) -> Result<Word, BoundaryError> {
        let a = self.circular_index(i)?;
        let b = self.circular_index(j)?;
        let n = self.len();
        let len = (b + n - a) % n + 1;
        Ok(self.factor_word(Factor::new(a, len)))
    }

    pub fn factor_word(&self, f: Factor) -> Word {
        (0..f.len).map(|k| self.at(f.start + k)).collect()
    }

    fn circular_index(&self, i: i64) -> Result<usize, BoundaryError> {
        let n = self.len() as i64;
        match i {
            0 => Err(BoundaryError::IndexZero),
            i if i > 0 => Ok((i - 1).rem_euclid(n) as usize),
            i => Ok(i.rem_euclid(n) as usize),
        }
    }
}

impl FromStr for BoundaryWord {
    type Err = BoundaryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BoundaryWord::parse(s)
    }
}

impl fmt::Display for BoundaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(s: &str) -> BoundaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn circular_indexing() {
        let w = bw("urrdll");
        assert_eq!(w.get(10), Ok(Letter::D));
        assert_eq!(w.get(-9), Ok(Letter::D));
        assert_eq!(w.get(1), Ok(Letter::U));
        assert_eq!(w.get(-1), Ok(Letter::L));
        assert_eq!(w.get(0), Err(BoundaryError::IndexZero));
        assert_eq!(w.factor(6, 2).unwrap().to_string(), "lur");
        assert_eq!(w.factor(2, 4).unwrap().to_string(), "rrd");
        assert_eq!(w.factor(3, 3).unwrap().to_string(), "r");
        assert!(w.factor(0, 3).is_err());
        assert_eq!(bw("urdl").get(1), Ok(Letter::U));
    }

    #[test]
    fn signed_area_orientation() {
        let w = |s: &str| Word::parse(s).unwrap();
        assert_eq!(signed_area(w("urdl").letters()), 1);
        assert_eq!(signed_area(w("urrdll").letters()), 2);
        assert_eq!(signed_area(w("urdl").backtrack().letters()), -1);
    }

    #[test]
    fn validate_errors() {
        let v = |s: &str| BoundaryWord::validate(Word::parse(s).unwrap());
        assert!(matches!(
            v("uu"),
            Err(BoundaryError::NotClosed { up: 2, down: 0, .. })
        ));
        assert!(matches!(
            v("urdlurdl"),
            Err(BoundaryError::NotSimple {
                first: 0,
                second: 4,
                ..
            })
        ));
        assert_eq!(v(""), Err(BoundaryError::Empty));
        assert_eq!(v("ud"), Err(BoundaryError::Degenerate));
    }

    #[test]
    fn counterclockwise_is_reoriented() {
        let w = bw("uldr");
        assert!(w.reoriented());
        assert_eq!(w.to_string(), "urdl");
        assert_eq!(w.area(), 1);
    }

    #[test]
    fn start_vertex_is_normalized() {
        // rotation of the domino starting at its top-right corner
        let w = bw("dllurr");
        assert_eq!(w.to_string(), "urrdll");
        assert_eq!(w.rotation(), 3);
        assert!(!w.reoriented());
        // L-tromino {(0,1),(1,0),(1,1)}: the lowest vertex (1,0) is not on
        // the leftmost column, whose lowest vertex is (0,1).
        let w = bw("urrddlul");
        assert_eq!(w.to_string(), "ulurrddl");
        let lowest = w.vertices().iter().map(|v| (v.y, v.x)).min().unwrap();
        assert_eq!(lowest, (0, 0));
    }

    #[test]
    fn fig2_word_rotation() {
        let input = "u r u r d r u r d^3 l u l d l u l";
        let w = bw(input);
        let raw = Word::parse(input).unwrap();
        let n = w.len();
        for i in 0..n {
            assert_eq!(w.at(i), raw[(i + w.rotation()) % n]);
        }
        assert_eq!(w.area(), 8);
    }
}
