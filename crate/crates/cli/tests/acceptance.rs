//! Acceptance suite. Runs every criterion in order, prints one PASS or FAIL
//! line each and exits nonzero if any failed. Criteria run sequentially so
//! the timing criterion has the machine to itself.

use std::fs;
use std::process::{Command, ExitCode};

use polytile::admissible::all_admissible;
use polytile::bn::{count_factorizations, count_tilings, factorizations, BnFactorization};
use polytile::cells::boundary_of_cells;
use polytile::families;
use polytile::oracle::{enumerate_fixed_polyominoes, oracle_diff};
use polytile::tiling::{lattice_of, patch, translation_vectors, verify_patch};
use polytile::word::has_period;
use polytile::{BoundaryWord, Factor, Vec2};
use polytile_cli::bench::{fitted_exponent, measure};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn bw(s: &str) -> BoundaryWord {
    s.parse().unwrap()
}

fn corpus_words(max_area: usize) -> Vec<BoundaryWord> {
    enumerate_fixed_polyominoes(max_area)
        .shapes
        .iter()
        .map(|s| boundary_of_cells(s).unwrap())
        .collect()
}

fn polytile(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_polytile"))
        .args(args)
        .output()
        .expect("binary runs")
}

/// Texts of the three leading factors under each of the six label shifts.
fn labeled_texts(w: &BoundaryWord, f: &BnFactorization) -> Vec<[String; 3]> {
    let n = w.len();
    let fs = f.factors();
    (0..6)
        .map(|k| {
            [fs[k], fs[(k + 1) % 6], fs[(k + 2) % 6]]
                .map(|x| w.factor_word(Factor::new(x.start % n, x.len)).to_string())
        })
        .collect()
}

fn has_labeled_split(w: &BoundaryWord, texts: [&str; 3]) -> bool {
    let want = texts.map(String::from);
    factorizations(w)
        .iter()
        .any(|f| labeled_texts(w, f).contains(&want))
}

fn oracle_equivalence() -> Outcome {
    let corpus = enumerate_fixed_polyominoes(7);
    if corpus.total_fixed() != 1067 {
        return Err(format!(
            "{} fixed polyominoes, expected 1067",
            corpus.total_fixed()
        ));
    }
    let diffs: Vec<_> = corpus
        .shapes
        .iter()
        .map(|s| oracle_diff(&boundary_of_cells(s).unwrap()))
        .filter(|d| !d.is_empty())
        .collect();
    if let Some(d) = diffs.first() {
        return Err(format!("{} diffs, first:\n{d}", diffs.len()));
    }
    Ok(format!(
        "1067 fixed polyominoes, {} simply connected checked, {} with holes skipped, 0 diffs",
        corpus.shapes.len(),
        corpus.total_with_holes()
    ))
}

fn bar_counts() -> Outcome {
    for i in 1..=64 {
        let c = count_tilings(&families::bar(i));
        if c != i {
            return Err(format!("bar {i}: {c} tilings"));
        }
    }
    Ok("count_tilings(u r^i d l^i) = i for i = 1..64".into())
}

fn fig2_witness() -> Outcome {
    let w = families::fig2();
    if has_labeled_split(&w, ["u", "ru", "rdrurd"]) {
        Ok("A = u, B = ru, C = rdrurd found".into())
    } else {
        Err("caption split missing".into())
    }
}

fn u_pentomino() -> Outcome {
    let n = count_factorizations(&bw("uurdrurddlll"));
    let code = polytile(&["check", "--word", "uurdrurddlll"]).status.code();
    if n == 0 && code == Some(2) {
        Ok("0 factorizations, check exits 2".into())
    } else {
        Err(format!("{n} factorizations, check exit {code:?}"))
    }
}

fn t_tetromino() -> Outcome {
    let w = bw("ururdrdlll");
    if has_labeled_split(&w, ["l", "lu", "ru"]) {
        Ok("tileable with witness (l, lu, ru)".into())
    } else {
        Err(format!(
            "{} factorizations, none is (l, lu, ru)",
            count_factorizations(&w)
        ))
    }
}

fn geometric_soundness() -> Outcome {
    let (mut checked, mut failures) = (0usize, Vec::new());
    for w in corpus_words(7) {
        for f in &factorizations(&w) {
            let (ta, tb, tc) = translation_vectors(&w, f);
            let ok = ta - tb + tc == Vec2::ZERO
                && ta.cross(tb).abs() == w.area()
                && lattice_of(&w, f).is_ok()
                && verify_patch(&w, &patch(&w, f, 2));
            if !ok {
                failures.push(format!("{w} {:?}", f.cuts()));
            }
            checked += 1;
        }
    }
    if failures.is_empty() {
        Ok(format!("{checked} factorizations sound at radius 2"))
    } else {
        Err(format!(
            "{} failures, first {}",
            failures.len(),
            failures[0]
        ))
    }
}

fn linearity() -> Outcome {
    let words: Vec<_> = (16..=20)
        .map(|k| families::bar((1usize << k) / 2 - 1))
        .collect();
    for w in &words {
        let c = count_factorizations(w);
        if c > 2 * w.len() {
            return Err(format!("n = {}: {c} factorizations", w.len()));
        }
    }
    let rows = measure(&words, 3);
    let ratios: Vec<f64> = rows.iter().filter_map(|r| r.ratio).collect();
    let exponent = fitted_exponent(&rows).unwrap_or(f64::NAN);
    let shown = ratios
        .iter()
        .map(|r| format!("{r:.2}"))
        .collect::<Vec<_>>()
        .join(" ");
    let detail = format!("ratios {shown}, fitted exponent {exponent:.3}");
    if ratios.iter().all(|&r| r <= 3.0) {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn period_property() -> Outcome {
    let (mut checked, mut violations) = (0usize, Vec::new());
    for w in corpus_words(6) {
        let (n, h) = (w.len(), w.half());
        let adm = all_admissible(&w);
        for p in adm.factors() {
            for s in adm.factors() {
                if p.span == s.span {
                    continue;
                }
                let (lp, ls) = (p.span.len, s.span.len);
                let len = (s.span.last(n) + n - p.span.start) % n + 1;
                if len > h || len < lp.max(ls) {
                    continue;
                }
                let r = 2 * len - (lp + ls);
                if r > len {
                    continue;
                }
                let x: Vec<_> = (0..len).map(|k| w.at(p.span.start + k)).collect();
                if !has_period(&x, r).unwrap() {
                    violations.push(format!("{w}: X at {} len {len}, period {r}", p.span.start));
                }
                checked += 1;
            }
        }
    }
    if violations.is_empty() {
        Ok(format!("{checked} triples, 0 violations"))
    } else {
        Err(format!(
            "{} violations, first {}",
            violations.len(),
            violations[0]
        ))
    }
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let fig2 = families::fig2().to_string();
    let words = [
        "urdl",
        "urrdll",
        "ururdrdlll",
        fig2.as_str(),
        "urrrdrdrdlllulul",
    ];
    let mut runs = 0;
    for w in words {
        for args in [
            vec!["enumerate", "--word", w],
            vec!["enumerate", "--word", w, "--format", "text"],
        ] {
            let a = polytile(&args);
            let b = polytile(&args);
            if !a.status.success() || a.stdout != b.stdout {
                return Err(format!("enumerate differs on {w}"));
            }
            runs += 1;
        }
        let paths = [dir.path().join("a.svg"), dir.path().join("b.svg")];
        for p in &paths {
            let o = polytile(&[
                "render",
                "--word",
                w,
                "--radius",
                "2",
                "--out",
                p.to_str().unwrap(),
            ]);
            if !o.status.success() {
                return Err(format!("render failed on {w}"));
            }
        }
        if fs::read(&paths[0]).unwrap() != fs::read(&paths[1]).unwrap() {
            return Err(format!("render differs on {w}"));
        }
        runs += 1;
    }
    Ok(format!("{runs} command pairs byte-identical"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("oracle equivalence", oracle_equivalence),
        ("bar family counts", bar_counts),
        ("fig2 witness", fig2_witness),
        ("U-pentomino negative", u_pentomino),
        ("T-tetromino witness", t_tetromino),
        ("geometric soundness", geometric_soundness),
        ("linearity", linearity),
        ("period property", period_property),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {}. {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {}. {name}: {detail}", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
