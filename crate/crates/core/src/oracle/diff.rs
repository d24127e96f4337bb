//! Side-by-side comparison of the fast path and the brute-force oracle.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::admissible::{all_admissible_with, AdmissibleFactor, AdmissibleOptions};
use crate::bn::{enumerate_with, EnumerateOptions};
use crate::boundary::{BoundaryWord, Factor};

use super::naive::{naive_admissible, naive_enumerate};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleDiff {
    pub word: String,
    /// Admissible factors the oracle finds and the fast path does not.
    pub admissible_missing: Vec<AdmissibleFactor>,
    pub admissible_extra: Vec<AdmissibleFactor>,
    /// Canonical cut tuples of factorizations missing from the fast path.
    pub factorizations_missing: Vec<[usize; 6]>,
    pub factorizations_extra: Vec<[usize; 6]>,
    /// Admissible `A` whose valid completions are a run of the longest
    /// candidates neither in the `B` list nor in the `C` list.
    pub interval_violations: Vec<Factor>,
}

impl OracleDiff {
    pub fn is_empty(&self) -> bool {
        self.admissible_missing.is_empty()
            && self.admissible_extra.is_empty()
            && self.factorizations_missing.is_empty()
            && self.factorizations_extra.is_empty()
            && self.interval_violations.is_empty()
    }
}

impl fmt::Display for OracleDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let spans = |v: &[AdmissibleFactor]| {
            v.iter()
                .map(|a| format!("{}+{}", a.span.start + 1, a.span.len))
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "{}:", self.word)?;
        if !self.admissible_missing.is_empty() {
            write!(
                f,
                " admissible missing [{}]",
                spans(&self.admissible_missing)
            )?;
        }
        if !self.admissible_extra.is_empty() {
            write!(f, " admissible extra [{}]", spans(&self.admissible_extra))?;
        }
        if !self.factorizations_missing.is_empty() {
            write!(
                f,
                " factorizations missing {:?}",
                self.factorizations_missing
            )?;
        }
        if !self.factorizations_extra.is_empty() {
            write!(f, " factorizations extra {:?}", self.factorizations_extra)?;
        }
        if !self.interval_violations.is_empty() {
            write!(f, " interval violations at {:?}", self.interval_violations)?;
        }
        Ok(())
    }
}

pub fn oracle_diff(w: &BoundaryWord) -> OracleDiff {
    oracle_diff_with(w, AdmissibleOptions::default(), EnumerateOptions::default())
}

pub fn oracle_diff_with(
    w: &BoundaryWord,
    adm: AdmissibleOptions,
    opts: EnumerateOptions,
) -> OracleDiff {
    let n = w.len();
    let table = all_admissible_with(w, adm);
    let fast_adm: BTreeSet<AdmissibleFactor> = table.factors().iter().copied().collect();
    let slow_adm = naive_admissible(w);

    let fast: BTreeSet<[usize; 6]> = enumerate_with(w, &table, opts)
        .iter()
        .map(|f| f.cuts())
        .collect();
    let slow: BTreeSet<[usize; 6]> = naive_enumerate(w).iter().map(|f| f.cuts()).collect();

    OracleDiff {
        word: w.to_string(),
        admissible_missing: slow_adm.difference(&fast_adm).copied().collect(),
        admissible_extra: fast_adm.difference(&slow_adm).copied().collect(),
        factorizations_missing: slow.difference(&fast).copied().collect(),
        factorizations_extra: fast.difference(&slow).copied().collect(),
        interval_violations: interval_violations(w, &slow_adm)
            .into_iter()
            .map(|a| Factor::new(a.start % n, a.len))
            .collect(),
    }
}

/// For each admissible `A`, list the admissible candidates that fit after
/// it (or before `Â`) by increasing length and mark the ones whose
/// length-determined completion is admissible. The marked ones must be a
/// suffix of the list on at least one side.
fn interval_violations(w: &BoundaryWord, adm: &BTreeSet<AdmissibleFactor>) -> Vec<Factor> {
    let (n, h) = (w.len(), w.half());
    let spans: HashSet<Factor> = adm.iter().map(|f| f.span).collect();
    let is_adm = |s: usize, len: usize| spans.contains(&Factor::new(s % n, len));
    let is_suffix = |marks: &[bool]| {
        let first = marks.iter().position(|&m| m).unwrap_or(marks.len());
        marks[first..].iter().all(|&m| m)
    };
    let mut out = Vec::new();
    for a in adm {
        let (s, la) = (a.span.start, a.span.len);
        if la + 2 > h {
            continue;
        }
        let mut b_list: Vec<usize> = adm
            .iter()
            .filter(|f| f.span.start == (s + la) % n && f.span.len <= h - 1 - la)
            .map(|f| f.span.len)
            .collect();
        b_list.sort_unstable();
        let b_marks: Vec<bool> = b_list
            .iter()
            .map(|&lb| is_adm(s + la + lb, h - la - lb))
            .collect();

        let c_end = (s + h + n - 1) % n;
        let mut c_list: Vec<usize> = adm
            .iter()
            .filter(|f| f.span.last(n) == c_end && f.span.len <= h - 1 - la)
            .map(|f| f.span.len)
            .collect();
        c_list.sort_unstable();
        let c_marks: Vec<bool> = c_list
            .iter()
            .map(|&lc| is_adm(s + la, h - la - lc))
            .collect();

        if !is_suffix(&b_marks) && !is_suffix(&c_marks) {
            out.push(a.span);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::admissible::RunCheck;

    #[test]
    fn clean_and_mutated() {
        for word in ["urdl", "urrdll", "uurdrurddlll", "ururdrdlll"] {
            let w: BoundaryWord = word.parse().unwrap();
            assert!(oracle_diff(&w).is_empty(), "{}", oracle_diff(&w));
        }
        let w: BoundaryWord = "urrdll".parse().unwrap();
        let broken = AdmissibleOptions {
            run_check: RunCheck::Inverted,
        };
        let d = oracle_diff_with(&w, broken, EnumerateOptions::default());
        assert!(!d.is_empty());
        assert_eq!(d.admissible_missing.len(), 8);

        let no_square = EnumerateOptions {
            skip_square_pass: true,
            ..Default::default()
        };
        let d = oracle_diff_with(&w, AdmissibleOptions::default(), no_square);
        assert_eq!(d.factorizations_missing, vec![[1, 3, 3, 4, 6, 6]]);
    }
}
