//! The `fanoq` command line: each subcommand reads JSON, calls one library
//! function and writes the result.
//!
//! Exit codes: 0 success, 1 invalid input or domain error, 2 an identity
//! failed in `check`, 64 usage error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_rational::Rational64;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use crate::complex3::{block_complex3, FanoPolytope3};
use crate::invariants::{check_corpus, Check, CorpusSummary};
use crate::lattice2d::{
    enumerate_fano_polygons, mutate_polygon, polygons_equivalent, standard_refinement, EquivalenceGroup, FanoPolygon,
};
use crate::polygonal::{
    build_bquiv, build_quiv, degree_from_block, degree_from_quiver, markov_point, residual_sum, singularity_content,
    triangle_feasibility,
};
use crate::quiver::{block, mutate, DecoratedQuiver};
use crate::reconstruction::{reconstruct_all, reconstruct_general, reconstruct_triangle};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "fanoq", version, about = "Decorated quivers of Fano polygons")]
struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Quiver of the standard refinement of a polygon.
    Quiver { input: PathBuf },
    /// Block quiver of a polygon, or the block of a quiver.
    Block { input: PathBuf },
    /// Standard refinement of a polygon.
    Refine { input: PathBuf },
    /// Mutate a polygon at a T-vertex of its quiver.
    MutatePolygon {
        input: PathBuf,
        #[arg(long)]
        vertex: usize,
    },
    /// Apply mut^k to a quiver.
    MutateQuiver {
        input: PathBuf,
        #[arg(long)]
        vertex: usize,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        k: i64,
    },
    /// Degree read off a polygon's quiver or a block quiver's Hamiltonian cycle.
    Degree { input: PathBuf },
    /// Singularity content and residual sum of a polygon.
    Content { input: PathBuf },
    /// Markov-type point of a polygon.
    Markov { input: PathBuf },
    /// Rebuild a polygon from a balanced block quiver.
    Reconstruct {
        input: PathBuf,
        /// List every polygon with this block quiver.
        #[arg(long)]
        all: bool,
    },
    /// Solve the degree formula of a triangle for the arrow gcd.
    Feasibility {
        #[arg(long, value_delimiter = ',', required = true)]
        w: Vec<i64>,
        #[arg(long, value_delimiter = ',', required = true)]
        l: Vec<i64>,
        #[arg(long)]
        tau: i64,
        #[arg(long, allow_hyphen_values = true)]
        residual: Rational64,
    },
    /// Fano polygons with coordinates in [-bound, bound], one JSON per line.
    Enumerate {
        #[arg(long, default_value_t = 2)]
        bound: i64,
    },
    /// Block complex of a three-dimensional Fano polytope.
    Complex3 { input: PathBuf },
    /// Compare two polygons.
    Equivalent {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, default_value = "GL")]
        group: EquivalenceGroup,
    },
    /// Run the invariant suite on one polygon or on the enumeration corpus.
    Check {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        bound: i64,
        /// Check a random sample of this many corpus polygons (seeded by FANOQ_SEED).
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value = "GL")]
        group: EquivalenceGroup,
    },
}

enum Failure {
    Domain(String),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Domain(format!("invalid JSON: {e}"))
    }
}

type Outcome = Result<String, Failure>;

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    let (text, code) = match dispatch(cli.command) {
        Ok(text) => (text, EXIT_OK),
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_DOMAIN;
        }
        Err(Failure::Verify(report)) => (report, EXIT_VERIFY),
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &text),
        None => stdout.write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_DOMAIN;
    }
    code
}

fn read_input(path: &PathBuf) -> Result<Value, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?
    };
    Ok(serde_json::from_str(&text)?)
}

fn polygon(path: &PathBuf) -> Result<FanoPolygon, Failure> {
    Ok(serde_json::from_value(read_input(path)?)?)
}

fn is_quiver(v: &Value) -> bool {
    v.get("labels").is_some()
}

fn json(v: &impl Serialize) -> Outcome {
    Ok(serde_json::to_string(v)? + "\n")
}

fn dispatch(cmd: Command) -> Outcome {
    match cmd {
        Command::Quiver { input } => json(&build_quiv(&polygon(&input)?)),
        Command::Block { input } => {
            let v = read_input(&input)?;
            if is_quiver(&v) {
                json(&block(&serde_json::from_value::<DecoratedQuiver>(v)?))
            } else {
                json(&build_bquiv(&serde_json::from_value::<FanoPolygon>(v)?))
            }
        }
        Command::Refine { input } => json(&standard_refinement(&polygon(&input)?)),
        Command::MutatePolygon { input, vertex } => {
            let p = polygon(&input)?;
            let pq = build_quiv(&p);
            pq.quiver.check_vertex(vertex)?;
            json(&mutate_polygon(&p, pq.normals[vertex])?)
        }
        Command::MutateQuiver { input, vertex, k } => {
            let q: DecoratedQuiver = serde_json::from_value(read_input(&input)?)?;
            json(&mutate(&q, vertex, k)?)
        }
        Command::Degree { input } => {
            let v = read_input(&input)?;
            let d = if is_quiver(&v) {
                degree_from_block(&serde_json::from_value(v)?)?
            } else {
                degree_from_quiver(&build_quiv(&serde_json::from_value(v)?))
            };
            Ok(format!("{d}\n"))
        }
        Command::Content { input } => {
            #[derive(Serialize)]
            struct Content {
                tau: usize,
                basket: Vec<String>,
                #[serde(serialize_with = "crate::serialize_rational")]
                residual_sum: Rational64,
            }
            let p = polygon(&input)?;
            let c = singularity_content(&p);
            json(&Content {
                tau: c.tau,
                basket: c.basket.iter().map(|b| b.to_string()).collect(),
                residual_sum: residual_sum(&p),
            })
        }
        Command::Markov { input } => json(&markov_point(&polygon(&input)?)),
        Command::Reconstruct { input, all } => {
            let q: DecoratedQuiver = serde_json::from_value(read_input(&input)?)?;
            if all {
                json(&reconstruct_all(&q)?)
            } else if q.len() == 3 {
                json(&reconstruct_triangle(&q)?)
            } else {
                json(&reconstruct_general(&q)?)
            }
        }
        Command::Feasibility { w, l, tau, residual } => {
            let (Ok(w), Ok(l)) = (<[i64; 3]>::try_from(w), <[i64; 3]>::try_from(l)) else {
                return Err(Failure::Domain("--w and --l take three comma-separated integers".into()));
            };
            let f = triangle_feasibility(w, l, tau, residual)?;
            Ok(format!("{f}\n"))
        }
        Command::Enumerate { bound } => {
            if !(1..=5).contains(&bound) {
                return Err(Failure::Domain(format!("bound {bound} outside 1..=5")));
            }
            let mut s = String::new();
            for p in enumerate_fano_polygons(bound) {
                s += &serde_json::to_string(&p)?;
                s.push('\n');
            }
            Ok(s)
        }
        Command::Complex3 { input } => {
            let p: FanoPolytope3 = serde_json::from_value(read_input(&input)?)?;
            json(&block_complex3(&p))
        }
        Command::Equivalent { first, second, group } => {
            Ok(format!("{}\n", polygons_equivalent(&polygon(&first)?, &polygon(&second)?, group)))
        }
        Command::Check { input, bound, sample, group } => {
            let polygons = match input {
                Some(path) => vec![polygon(&path)?],
                None => {
                    let mut corpus = enumerate_fano_polygons(bound);
                    if let Some(n) = sample {
                        let mut rng = ChaCha8Rng::seed_from_u64(seed()?);
                        corpus.shuffle(&mut rng);
                        corpus.truncate(n);
                    }
                    corpus
                }
            };
            let summary = check_corpus(&polygons, group);
            let text = summary_text(&summary);
            if summary.is_clean() {
                Ok(text)
            } else {
                Err(Failure::Verify(text))
            }
        }
    }
}

fn seed() -> Result<u64, Failure> {
    match std::env::var("FANOQ_SEED") {
        Ok(s) => s.trim().parse().map_err(|_| Failure::Domain(format!("FANOQ_SEED={s} is not an unsigned integer"))),
        Err(_) => Ok(0),
    }
}

fn summary_text(s: &CorpusSummary) -> String {
    let mut out = format!("{} polygons\n", s.polygons);
    for check in Check::ALL {
        let bad = s.count(check);
        if bad == 0 {
            out += &format!("ok    {check}\n");
        } else {
            let (p, detail) = &s.examples[&check];
            let vs = serde_json::to_string(p).unwrap_or_default();
            out += &format!("FAIL  {check}: {bad} polygons, e.g. {vs} ({detail})\n");
        }
    }
    out
}
