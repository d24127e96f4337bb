//! Letters over the four unit steps and finite words built from them.

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use thiserror::Error;

/// A unit step of a lattice path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Letter {
    U = 0,
    D = 1,
    L = 2,
    R = 3,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::U, Letter::D, Letter::L, Letter::R];

    /// u↔d, l↔r.
    #[inline]
    pub fn complement(self) -> Letter {
        // codes are laid out so that complementary letters differ in bit 0
        Letter::from_code(self as u8 ^ 1)
    }

    #[inline]
    pub fn from_code(code: u8) -> Letter {
        match code & 3 {
            0 => Letter::U,
            1 => Letter::D,
            2 => Letter::L,
            _ => Letter::R,
        }
    }

    #[inline]
    pub fn code(self) -> u8 {
        self as u8
    }

    /// Displacement of the step: u=(0,1), d=(0,-1), l=(-1,0), r=(1,0).
    #[inline]
    pub fn step(self) -> (i64, i64) {
        match self {
            Letter::U => (0, 1),
            Letter::D => (0, -1),
            Letter::L => (-1, 0),
            Letter::R => (1, 0),
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c.to_ascii_lowercase() {
            'u' => Some(Letter::U),
            'd' => Some(Letter::D),
            'l' => Some(Letter::L),
            'r' => Some(Letter::R),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::U => 'u',
            Letter::D => 'd',
            Letter::L => 'l',
            Letter::R => 'r',
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unknown letter '{0}'")]
    UnknownLetter(char),
    #[error("exponent must be a positive integer, got '{0}'")]
    BadExponent(String),
    #[error("exponent without a preceding word")]
    DanglingExponent,
}

/// A finite word over {u, d, l, r}.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Parses whitespace-separated tokens. A token is a run of letters,
    /// optionally followed by `^k` which repeats the whole run `k` times:
    /// `"u r^3 d l^3"` is `urrrdlll` and `"ur^2"` is `urur`.
    pub fn parse(text: &str) -> Result<Word, ParseError> {
        let mut out = Vec::new();
        for token in text.split_whitespace() {
            let (body, exponent) = match token.split_once('^') {
                Some((body, exp)) => (body, Some(exp)),
                None => (token, None),
            };
            let mut run = Vec::with_capacity(body.len());
            for c in body.chars() {
                run.push(Letter::from_char(c).ok_or(ParseError::UnknownLetter(c))?);
            }
            let repeat = match exponent {
                None => 1,
                Some(exp) => {
                    if run.is_empty() {
                        return Err(ParseError::DanglingExponent);
                    }
                    match exp.parse::<usize>() {
                        Ok(k) if k > 0 => k,
                        _ => return Err(ParseError::BadExponent(exp.to_string())),
                    }
                }
            };
            for _ in 0..repeat {
                out.extend_from_slice(&run);
            }
        }
        Ok(Word(out))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn complement(&self) -> Word {
        Word(self.0.iter().map(|l| l.complement()).collect())
    }

    pub fn reverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Complement of the reverse: the same path walked backwards.
    pub fn backtrack(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.complement()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn repeat(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    /// Whether `X[i] = X[i+p]` for every valid `i`. `p` must lie in `1..=|X|`.
    pub fn has_period(&self, p: usize) -> Result<bool, PeriodError> {
        has_period(&self.0, p)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("period {period} outside 1..={len}")]
pub struct PeriodError {
    pub period: usize,
    pub len: usize,
}

pub fn has_period(x: &[Letter], p: usize) -> Result<bool, PeriodError> {
    if p == 0 || p > x.len() {
        return Err(PeriodError {
            period: p,
            len: x.len(),
        });
    }
    Ok(x.iter().zip(&x[p..]).all(|(a, b)| a == b))
}

impl Index<usize> for Word {
    type Output = Letter;

    fn index(&self, i: usize) -> &Letter {
        &self.0[i]
    }
}

impl FromStr for Word {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Word::parse(s)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn parse_plain_and_exponents() {
        assert_eq!(w("urdl").to_string(), "urdl");
        assert_eq!(w("u r^3 d l^3").to_string(), "urrrdlll");
        assert_eq!(w("UR dL").to_string(), "urdl");
        assert_eq!(w("ur^2").to_string(), "urur");
        assert_eq!(w("").len(), 0);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(Word::parse("urx"), Err(ParseError::UnknownLetter('x')));
        assert!(matches!(
            Word::parse("u^0"),
            Err(ParseError::BadExponent(_))
        ));
        assert!(matches!(
            Word::parse("u^-2"),
            Err(ParseError::BadExponent(_))
        ));
        assert!(matches!(Word::parse("u^"), Err(ParseError::BadExponent(_))));
        assert_eq!(Word::parse("^3"), Err(ParseError::DanglingExponent));
    }

    #[test]
    fn backtrack_examples() {
        assert_eq!(w("ur").backtrack(), w("ld"));
        assert_eq!(Word::empty().backtrack(), Word::empty());
        let (a, b) = (w("u"), w("rd"));
        assert_eq!(a.concat(&b).backtrack(), w("uld"));
        assert_eq!(
            a.concat(&b).backtrack(),
            b.backtrack().concat(&a.backtrack())
        );
    }

    #[test]
    fn period_examples() {
        assert_eq!(w("ururu").has_period(2), Ok(true));
        assert_eq!(w("ururu").has_period(5), Ok(true));
        assert_eq!(w("uurd").has_period(1), Ok(false));
        assert!(w("uurd").has_period(0).is_err());
        assert!(w("uurd").has_period(5).is_err());
    }

    fn arb_word(max: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(0u8..4, 0..max)
            .prop_map(|v| v.into_iter().map(Letter::from_code).collect())
    }

    proptest! {
        #[test]
        fn operators_are_involutions(x in arb_word(40)) {
            prop_assert_eq!(x.backtrack().backtrack(), x.clone());
            prop_assert_eq!(x.reverse().reverse(), x.clone());
            prop_assert_eq!(x.complement().complement(), x.clone());
            prop_assert_eq!(x.backtrack().len(), x.len());
            prop_assert_eq!(x.backtrack(), x.reverse().complement());
        }

        #[test]
        fn backtrack_antimorphism(a in arb_word(20), b in arb_word(20)) {
            prop_assert_eq!(a.concat(&b).backtrack(), b.backtrack().concat(&a.backtrack()));
        }

        #[test]
        fn display_parse_roundtrip(x in arb_word(40)) {
            prop_assert_eq!(Word::parse(&x.to_string()).unwrap(), x);
        }
    }
}
