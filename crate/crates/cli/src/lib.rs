//! Command-line front end for the polytile library.

pub mod bench;
pub mod output;

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use polytile::admissible::{all_admissible, AdmissibleOptions, RunCheck};
use polytile::bn::{factorizations, find_factorization, EnumerateOptions};
use polytile::cells::{boundary_of_cells, parse_cell_list, CellSet};
use polytile::families;
use polytile::oracle::{enumerate_fixed_polyominoes, oracle_diff_with};
use polytile::tiling::{patch, render_svg, RenderOptions};
use polytile::BoundaryWord;

/// Exit status for a valid input that does not tile.
pub const NOT_TILEABLE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "polytile",
    version,
    about = "Decide and enumerate translation tilings of polyominoes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Boundary word over u, d, l, r (whitespace and `x^k` allowed).
    #[arg(long)]
    pub word: Option<String>,
    /// File holding a boundary word.
    #[arg(long)]
    pub word_file: Option<PathBuf>,
    /// File with one `x y` cell per line.
    #[arg(long)]
    pub cells_file: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Mutation {
    None,
    SkipSquarePass,
    MinRuns,
    InvertedRuns,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum BenchFamily {
    Bar,
    Strip,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print whether the polyomino tiles the plane by translation.
    Check {
        #[command(flatten)]
        input: Input,
    },
    /// List every factorization with its translation vectors and lattice.
    Enumerate {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw a patch of the tiling given by one factorization as SVG.
    Render {
        #[command(flatten)]
        input: Input,
        /// Position in the enumerate listing, from 0.
        #[arg(long, default_value_t = 0)]
        index: usize,
        #[arg(long, default_value_t = 1)]
        radius: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the fast path with brute force on every small polyomino.
    Oracle {
        #[arg(long, default_value_t = 7)]
        max_area: usize,
        /// Deliberately break the fast path to check that diffs show up.
        #[arg(long, value_enum, default_value = "none", hide = true)]
        mutate: Mutation,
    },
    /// Print a word from a family: bar I, rectangle A B, staircase K,
    /// fig2, random-tileable, strip N.
    Gen {
        family: String,
        params: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time table construction plus enumeration at the given word lengths.
    Bench {
        /// Word lengths, plain or as powers like 2^16.
        sizes: Vec<String>,
        #[arg(long, value_enum, default_value = "bar")]
        family: BenchFamily,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the admissible factors as JSON.
    Factors {
        #[command(flatten)]
        input: Input,
    },
}

pub fn read_input(input: &Input) -> Result<BoundaryWord> {
    if let Some(w) = &input.word {
        return Ok(BoundaryWord::parse(w)?);
    }
    if let Some(path) = &input.word_file {
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        return Ok(BoundaryWord::parse(&text)?);
    }
    if let Some(path) = &input.cells_file {
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let cells = CellSet::new(parse_cell_list(&text)?)?;
        return Ok(boundary_of_cells(&cells)?);
    }
    bail!("no input given")
}

fn emit(out: &Option<PathBuf>, bytes: &[u8]) -> Result<()> {
    match out {
        Some(path) => fs::write(path, bytes).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(bytes)?;
            Ok(())
        }
    }
}

pub fn parse_size(s: &str) -> Result<usize> {
    let s = s.trim();
    match s.split_once('^') {
        Some((b, e)) => {
            let b: usize = b.parse().with_context(|| format!("bad size '{s}'"))?;
            let e: u32 = e.parse().with_context(|| format!("bad size '{s}'"))?;
            b.checked_pow(e)
                .ok_or_else(|| anyhow!("size '{s}' overflows"))
        }
        None => s.parse().with_context(|| format!("bad size '{s}'")),
    }
}

pub fn gen_word(
    family: &str,
    params: &[usize],
    seed: u64,
) -> Result<(BoundaryWord, Option<String>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let need = |k: usize| -> Result<()> {
        if params.len() != k {
            bail!("family '{family}' takes {k} parameter(s)");
        }
        if params.contains(&0) {
            bail!("family parameters must be positive");
        }
        Ok(())
    };
    Ok(match family {
        "bar" => {
            need(1)?;
            (families::bar(params[0]), None)
        }
        "rectangle" => {
            need(2)?;
            (families::rectangle(params[0], params[1]), None)
        }
        "staircase" => {
            need(1)?;
            (families::staircase(params[0]), None)
        }
        "fig2" => {
            need(0)?;
            (families::fig2(), None)
        }
        "random-tileable" => {
            let side = params.first().copied().unwrap_or(5) as i64;
            let t = families::random_tileable(&mut rng, side.max(1), 60);
            (t.word, Some(format!("lattice {}", t.lattice)))
        }
        "strip" => {
            need(1)?;
            let (w, lattice) = families::strip(&mut rng, params[0]);
            (w, Some(format!("lattice {lattice}")))
        }
        other => bail!("unknown family '{other}'"),
    })
}

/// Runs one command and returns the process exit status.
pub fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Check { input } => {
            let w = read_input(&input)?;
            if find_factorization(&w).is_some() {
                println!("tileable");
                Ok(0)
            } else {
                println!("not tileable");
                Ok(NOT_TILEABLE)
            }
        }
        Command::Enumerate { input, format, out } => {
            let w = read_input(&input)?;
            let e = output::enumeration_json(&w, &factorizations(&w));
            let bytes = match format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&e)?;
                    s.push('\n');
                    s
                }
                Format::Text => output::enumeration_text(&e),
            };
            emit(&out, bytes.as_bytes())?;
            Ok(0)
        }
        Command::Render {
            input,
            index,
            radius,
            out,
        } => {
            let w = read_input(&input)?;
            let set = factorizations(&w);
            let f = set.get(index).ok_or_else(|| {
                anyhow!("index {index} out of range: {} factorization(s)", set.len())
            })?;
            let svg = render_svg(&w, &patch(&w, f, radius), &RenderOptions::default());
            emit(&out, svg.as_bytes())?;
            Ok(0)
        }
        Command::Oracle { max_area, mutate } => {
            if !(1..=8).contains(&max_area) {
                bail!("--max-area must be in 1..=8");
            }
            let (adm, opts) = match mutate {
                Mutation::None => Default::default(),
                Mutation::SkipSquarePass => (
                    AdmissibleOptions::default(),
                    EnumerateOptions {
                        skip_square_pass: true,
                        ..Default::default()
                    },
                ),
                Mutation::MinRuns => (
                    AdmissibleOptions {
                        run_check: RunCheck::Min,
                    },
                    Default::default(),
                ),
                Mutation::InvertedRuns => (
                    AdmissibleOptions {
                        run_check: RunCheck::Inverted,
                    },
                    Default::default(),
                ),
            };
            let corpus = enumerate_fixed_polyominoes(max_area);
            let diffs: Vec<String> = corpus
                .shapes
                .par_iter()
                .map(|s| {
                    let w = boundary_of_cells(s).expect("corpus shapes have no holes");
                    oracle_diff_with(&w, adm, opts)
                })
                .filter(|d| !d.is_empty())
                .map(|d| d.to_string())
                .collect();
            for d in &diffs {
                println!("{d}");
            }
            let holes = corpus.total_with_holes();
            let mut summary = format!(
                "{} shapes checked, {} diffs",
                corpus.shapes.len(),
                diffs.len()
            );
            if holes > 0 {
                summary.push_str(&format!(" ({holes} with holes skipped)"));
            }
            println!("{summary}");
            Ok(if diffs.is_empty() { 0 } else { 1 })
        }
        Command::Gen {
            family,
            params,
            seed,
        } => {
            let (w, witness) = gen_word(&family, &params, seed)?;
            // the figure word is printed as written, not rotated to its
            // normalized start
            if family == "fig2" {
                println!("{}", polytile::Word::parse(families::FIG2)?);
            } else {
                println!("{w}");
            }
            if let Some(wit) = witness {
                eprintln!("{wit}");
            }
            Ok(0)
        }
        Command::Bench {
            sizes,
            family,
            reps,
            seed,
        } => {
            let sizes = if sizes.is_empty() {
                (12..=18).map(|k| 1usize << k).collect()
            } else {
                sizes
                    .iter()
                    .map(|s| parse_size(s))
                    .collect::<Result<Vec<_>>>()?
            };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut words = Vec::new();
            for &n in &sizes {
                if n < 4 {
                    bail!("sizes must be at least 4");
                }
                words.push(match family {
                    BenchFamily::Bar => families::bar(n / 2 - 1),
                    BenchFamily::Strip => families::strip(&mut rng, n).0,
                });
            }
            let rows = bench::measure(&words, reps);
            print!("{}", bench::table(&rows));
            Ok(0)
        }
        Command::Factors { input } => {
            let w = read_input(&input)?;
            let table = all_admissible(&w);
            let items: Vec<serde_json::Value> = table
                .factors()
                .iter()
                .map(|f| {
                    serde_json::json!({
                        "start": f.span.start + 1,
                        "len": f.span.len,
                        "text": w.factor_word(f.span).to_string(),
                        "partner_start": f.partner.start + 1,
                    })
                })
                .collect();
            let doc = serde_json::json!({ "word": w.to_string(), "n": w.len(), "factors": items });
            println!("{}", serde_json::to_string_pretty(&doc)?);
            Ok(0)
        }
    }
}
