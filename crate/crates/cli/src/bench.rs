//! Timing of the admissible table plus enumeration on growing words.

use std::time::{Duration, Instant};

use polytile::admissible::all_admissible;
use polytile::bn::enumerate;
use polytile::BoundaryWord;

#[derive(Clone, Debug)]
pub struct BenchRow {
    pub n: usize,
    pub time: Duration,
    pub factorizations: usize,
    /// `time(n) / time(previous n)`.
    pub ratio: Option<f64>,
}

/// Best of `reps` runs per word; words should be in increasing length.
pub fn measure(words: &[BoundaryWord], reps: usize) -> Vec<BenchRow> {
    let mut rows: Vec<BenchRow> = Vec::with_capacity(words.len());
    for w in words {
        let mut best = Duration::MAX;
        let mut count = 0;
        for _ in 0..reps.max(1) {
            let start = Instant::now();
            let set = enumerate(w, &all_admissible(w));
            best = best.min(start.elapsed());
            count = set.len();
        }
        let ratio = rows
            .last()
            .map(|p| best.as_secs_f64() / p.time.as_secs_f64().max(1e-9));
        rows.push(BenchRow {
            n: w.len(),
            time: best,
            factorizations: count,
            ratio,
        });
    }
    rows
}

/// Least-squares slope of log(time) against log(n).
pub fn fitted_exponent(rows: &[BenchRow]) -> Option<f64> {
    if rows.len() < 2 {
        return None;
    }
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| ((r.n as f64).ln(), r.time.as_secs_f64().max(1e-9).ln()))
        .collect();
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

pub fn table(rows: &[BenchRow]) -> String {
    let mut out = format!(
        "{:>10} {:>12} {:>14} {:>7}\n",
        "n", "time_ms", "factorizations", "ratio"
    );
    for r in rows {
        let ratio = r.ratio.map_or("-".to_string(), |x| format!("{x:.2}"));
        out.push_str(&format!(
            "{:>10} {:>12.3} {:>14} {:>7}\n",
            r.n,
            r.time.as_secs_f64() * 1e3,
            r.factorizations,
            ratio
        ));
    }
    if let Some(e) = fitted_exponent(rows) {
        out.push_str(&format!("fitted exponent {e:.3}\n"));
    }
    out
}
