//! Serialized forms of factorizations.

use serde::Serialize;

use polytile::bn::{distinct_lattices, FactorizationSet};
use polytile::tiling::lattice_of;
use polytile::{BoundaryWord, Factor, Vec2};

#[derive(Serialize)]
pub struct FactorJson {
    /// 1-based start in the normalized word.
    pub start: usize,
    pub len: usize,
    pub text: String,
}

#[derive(Serialize)]
pub struct FactorizationJson {
    #[serde(rename = "A")]
    pub a: FactorJson,
    #[serde(rename = "B")]
    pub b: FactorJson,
    #[serde(rename = "C")]
    pub c: FactorJson,
    #[serde(rename = "tA")]
    pub ta: [i64; 2],
    #[serde(rename = "tB")]
    pub tb: [i64; 2],
    #[serde(rename = "tC")]
    pub tc: [i64; 2],
    pub lattice: [[i64; 2]; 2],
}

#[derive(Serialize)]
pub struct EnumerationJson {
    pub word: String,
    pub n: usize,
    pub factorizations: Vec<FactorizationJson>,
    pub factorization_count: usize,
    pub tiling_count: usize,
}

fn factor_json(w: &BoundaryWord, f: Factor) -> FactorJson {
    FactorJson {
        start: f.start + 1,
        len: f.len,
        text: w.factor_word(f).to_string(),
    }
}

fn pair(v: Vec2) -> [i64; 2] {
    [v.x, v.y]
}

pub fn enumeration_json(w: &BoundaryWord, set: &FactorizationSet) -> EnumerationJson {
    let factorizations = set
        .iter()
        .map(|f| {
            let lattice = lattice_of(w, f).expect("factorization lattices are nondegenerate");
            let [e1, e2] = lattice.hnf().basis();
            FactorizationJson {
                a: factor_json(w, f.a()),
                b: factor_json(w, f.b()),
                c: factor_json(w, f.c()),
                ta: pair(lattice.ta),
                tb: pair(lattice.tb),
                tc: pair(lattice.tc),
                lattice: [pair(e1), pair(e2)],
            }
        })
        .collect();
    EnumerationJson {
        word: w.to_string(),
        n: w.len(),
        factorizations,
        factorization_count: set.len(),
        tiling_count: distinct_lattices(w, set).len(),
    }
}

/// One line per factorization: `A|B|C @ tA tB`, empty factors as `-`.
pub fn enumeration_text(e: &EnumerationJson) -> String {
    let show = |f: &FactorJson| {
        if f.text.is_empty() {
            "-".to_string()
        } else {
            f.text.clone()
        }
    };
    e.factorizations
        .iter()
        .map(|f| {
            format!(
                "{}|{}|{} @ ({},{}) ({},{})\n",
                show(&f.a),
                show(&f.b),
                show(&f.c),
                f.ta[0],
                f.ta[1],
                f.tb[0],
                f.tb[1]
            )
        })
        .collect()
}
