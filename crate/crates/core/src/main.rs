//! Batch command-line surface for the library: construct metrics, evaluate
//! weights and balls, verify and complete tilings, run the classification,
//! and apply the extension/concatenation constructions.
//!
//! Exit codes: 0 for an affirmative or valid verdict, 1 for a negative
//! verdict (with the witness on standard output), 2 for usage or
//! input-format errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use tscodes::classify::{classify_small_tiles, realize_combinatorial, realize_poset};
use tscodes::io::{
    ClassificationRecordDto, CoveringFile, PosetFile, RealizationDto, TilingFile, VectorSetFile,
    WeightTableFile,
};
use tscodes::metrics::{
    decoding_equivalent, extend_weight, is_ts_ball, max_weight, metrize_by_rank, Equivalence,
    TsBallVerdict, WeightTable,
};
use tscodes::tilings::{
    complete_tiling, dn_is_tile, dn_tile, dn_ts_perfect, extend_tiling, verify_perfect,
    verify_tiling, DnVerdict, TilingVerdict,
};
use tscodes::{BitVector, VectorSet};

#[derive(Parser)]
#[command(name = "tscodes", version, about = "Metrics, tilings and perfect codes on F2^n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a weight at a vector.
    Weight {
        #[command(flatten)]
        source: WeightSource,
        /// Vector as a '0'/'1' string, coordinate 1 leftmost.
        #[arg(long)]
        vector: String,
    },
    /// The ball of a weight around a center.
    Ball {
        #[command(flatten)]
        source: WeightSource,
        #[arg(long)]
        center: String,
        #[arg(long)]
        radius: u32,
    },
    /// Check the weight axioms and the TS property of a table.
    ValidateWeight {
        #[arg(long)]
        table: PathBuf,
    },
    /// Decide whether a set is a ball of some TS-metric.
    IsTsBall {
        #[arg(long)]
        set: PathBuf,
    },
    /// Verify that a (tile, code) pair tiles the space.
    VerifyTiling {
        #[arg(long)]
        tiling: PathBuf,
    },
    /// Find the lexicographically least code completing a tile to a tiling.
    CompleteTiling {
        #[arg(long)]
        tile: PathBuf,
        #[arg(long)]
        n: u8,
    },
    /// Check that a code is perfect at a radius under a weight.
    PerfectCheck {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        radius: u32,
    },
    /// The tile {e_i} ∪ {0, x} and its tilability/perfection verdicts.
    DnFamily {
        #[arg(long)]
        n: u8,
        /// Distinguished vector x as a '0'/'1' string.
        #[arg(long, conflicts_with = "weight")]
        x: Option<String>,
        /// Hamming weight of x; picks x supported on the lowest coordinates.
        #[arg(long)]
        weight: Option<u32>,
        /// Exit by the closed-form tilability criterion.
        #[arg(long)]
        check_tile: bool,
        /// Report the perfection verdict with its witness.
        #[arg(long)]
        ts_witness: bool,
    },
    /// Extend a weight or a tiling to a larger dimension.
    Extend {
        #[arg(long, conflicts_with = "tiling", requires = "s")]
        weight: Option<PathBuf>,
        /// Expected dimension of the input weight.
        #[arg(long)]
        s: Option<u8>,
        #[arg(long)]
        tiling: Option<PathBuf>,
        #[arg(long)]
        n: u8,
    },
    /// Concatenate two weights (max combination) or two tilings.
    Concat {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        /// Scale factors for the max combination of two weights.
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        scales: Option<Vec<u32>>,
    },
    /// Decoding equivalence of two weight tables.
    Equiv {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Replace values by ranks, producing an always-metric table.
    Metrize {
        #[arg(long)]
        table: PathBuf,
    },
    /// Classify small downward-closed tiles up to permutation.
    Classify {
        #[arg(long)]
        size: usize,
        /// Search for realizing metrics of the given kind.
        #[arg(long)]
        realize: Option<RealizeKind>,
        /// Allow the poset search at rank 7.
        #[arg(long)]
        opt_in_rank7: bool,
        /// Render a human-readable table instead of JSON.
        #[arg(long)]
        table: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct WeightSource {
    /// Poset file (cover pairs).
    #[arg(long)]
    poset: Option<PathBuf>,
    /// Covering file (blocks of coordinates).
    #[arg(long)]
    covering: Option<PathBuf>,
    /// Explicit weight table file.
    #[arg(long)]
    table: Option<PathBuf>,
}

#[derive(Copy, Clone, ValueEnum)]
enum RealizeKind {
    Poset,
    Combinatorial,
}

/// Anything that should terminate with exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type RunResult = Result<ExitCode, UsageError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> RunResult {
    match command {
        Command::Weight { source, vector } => {
            let w = source.load()?;
            let v: BitVector = vector.parse()?;
            let value = w.eval(&v)?;
            emit(&json!({ "weight": value }))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Ball { source, center, radius } => {
            let w = source.load()?;
            let c: BitVector = center.parse()?;
            let ball = w.ball(&c, radius)?;
            emit(&VectorSetFile::from_set(&ball))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::ValidateWeight { table } => {
            let w = load_raw_table(&table)?;
            let verdict = w.validate();
            let ts = match &verdict.ts_violation {
                None => json!({ "status": "yes" }),
                Some(tv) => json!({
                    "status": "no",
                    "witness": { "smaller": tv.smaller.to_string(), "larger": tv.larger.to_string() },
                }),
            };
            let report = json!({
                "valid": verdict.is_valid_weight(),
                "violation": verdict.violation.as_ref().map(|v| format!("{v:?}")),
                "ts": ts,
                "triangle_skipped": verdict.triangle_skipped,
            });
            emit(&report)?;
            Ok(verdict_code(verdict.is_ts()))
        }
        Command::IsTsBall { set } => {
            let s = load_set(&set)?;
            match is_ts_ball(&s)? {
                TsBallVerdict::Yes { weight, radius } => {
                    emit(&json!({
                        "status": "yes",
                        "radius": radius,
                        "weight": WeightTableFile::from_table(&weight),
                    }))?;
                    Ok(ExitCode::SUCCESS)
                }
                TsBallVerdict::No { member, missing } => {
                    emit(&json!({
                        "status": "no",
                        "witness": { "member": member.to_string(), "missing": missing.to_string() },
                    }))?;
                    Ok(ExitCode::FAILURE)
                }
            }
        }
        Command::VerifyTiling { tiling } => {
            let file: TilingFile = load_json(&tiling)?;
            let (n, tile, code) = file.to_parts()?;
            let verdict = verify_tiling(n, &tile, &code)?;
            emit(&tiling_verdict_json(&verdict))?;
            Ok(verdict_code(verdict.is_valid()))
        }
        Command::CompleteTiling { tile, n } => {
            let d = load_set(&tile)?;
            if d.dim() != n {
                return Err(UsageError(format!(
                    "tile has dimension {}, expected {}",
                    d.dim(),
                    n
                )));
            }
            match complete_tiling(n, &d)? {
                Some(code) => {
                    emit(&TilingFile {
                        n,
                        tile: d.to_strings(),
                        code: code.to_strings(),
                    })?;
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    emit(&json!({ "status": "not a tile" }))?;
                    Ok(ExitCode::FAILURE)
                }
            }
        }
        Command::PerfectCheck { code, table, radius } => {
            let c = load_set(&code)?;
            let w = load_table(&table)?;
            let verdict = verify_perfect(&c, &w, radius)?;
            emit(&tiling_verdict_json(&verdict))?;
            Ok(verdict_code(verdict.is_valid()))
        }
        Command::DnFamily { n, x, weight, check_tile, ts_witness } => {
            let x = match (x, weight) {
                (Some(s), None) => s.parse::<BitVector>()?,
                (None, Some(w)) => {
                    if w > n as u32 {
                        return Err(UsageError(format!("weight {w} exceeds dimension {n}")));
                    }
                    BitVector::new(n, (1u32 << w) - 1)?
                }
                _ => return Err(UsageError("provide exactly one of --x and --weight".into())),
            };
            let tile = dn_tile(n, &x)?;
            if check_tile {
                let ok = dn_is_tile(n, &x)?;
                emit(&json!({
                    "status": if ok { "tile" } else { "not a tile" },
                    "tile": VectorSetFile::from_set(&tile),
                }))?;
                return Ok(verdict_code(ok));
            }
            if ts_witness {
                return match dn_ts_perfect(n, &x)? {
                    DnVerdict::Perfect { covering } => {
                        emit(&json!({
                            "status": "perfect",
                            "covering": CoveringFile::from_covering(&covering),
                            "radius": 1,
                        }))?;
                        Ok(ExitCode::SUCCESS)
                    }
                    DnVerdict::NotPerfect { missing } => {
                        emit(&json!({ "status": "not perfect", "witness": missing.to_string() }))?;
                        Ok(ExitCode::FAILURE)
                    }
                };
            }
            emit(&VectorSetFile::from_set(&tile))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Extend { weight, s, tiling, n } => match (weight, tiling) {
            (Some(path), None) => {
                let w = load_table(&path)?;
                if let Some(s) = s {
                    if w.dim() != s {
                        return Err(UsageError(format!(
                            "weight has dimension {}, expected {}",
                            w.dim(),
                            s
                        )));
                    }
                }
                let extended = extend_weight(&w, n)?;
                emit(&WeightTableFile::from_table(&extended))?;
                Ok(ExitCode::SUCCESS)
            }
            (None, Some(path)) => {
                let file: TilingFile = load_json(&path)?;
                let t = file.to_tiling()?;
                let extended = extend_tiling(&t, n)?;
                emit(&TilingFile::from_tiling(&extended))?;
                Ok(ExitCode::SUCCESS)
            }
            _ => Err(UsageError("provide exactly one of --weight and --tiling".into())),
        },
        Command::Concat { left, right, scales } => {
            let l: serde_json::Value = load_json(&left)?;
            let r: serde_json::Value = load_json(&right)?;
            if l.get("weights").is_some() && r.get("weights").is_some() {
                let w1 = as_weight(l)?;
                let w2 = as_weight(r)?;
                let (a, b) = match &scales {
                    Some(v) => (v[0], v[1]),
                    None => (1, 1),
                };
                let combined = max_weight(&w1, &w2, a, b)?;
                emit(&WeightTableFile::from_table(&combined))?;
                Ok(ExitCode::SUCCESS)
            } else if l.get("tile").is_some() && r.get("tile").is_some() {
                if scales.is_some() {
                    return Err(UsageError("--scales applies to weight inputs only".into()));
                }
                let t1 = as_tiling(l)?;
                let t2 = as_tiling(r)?;
                let combined = tscodes::tilings::concat_tiling(&t1, &t2)?;
                emit(&TilingFile::from_tiling(&combined))?;
                Ok(ExitCode::SUCCESS)
            } else {
                Err(UsageError(
                    "inputs must both be weight tables or both be tilings".into(),
                ))
            }
        }
        Command::Equiv { a, b } => {
            let wa = load_table(&a)?;
            let wb = load_table(&b)?;
            match decoding_equivalent(&wa, &wb)? {
                Equivalence::Equivalent => {
                    emit(&json!({ "status": "equivalent" }))?;
                    Ok(ExitCode::SUCCESS)
                }
                Equivalence::Inequivalent { u, v } => {
                    emit(&json!({
                        "status": "inequivalent",
                        "witness": { "u": u.to_string(), "v": v.to_string() },
                    }))?;
                    Ok(ExitCode::FAILURE)
                }
            }
        }
        Command::Metrize { table } => {
            let w = load_raw_table(&table)?;
            let out = metrize_by_rank(&w)?;
            emit(&WeightTableFile::from_table(&out))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { size, realize, opt_in_rank7, table } => {
            let records = classify_small_tiles(size)?;
            let mut dtos: Vec<ClassificationRecordDto> =
                records.iter().map(ClassificationRecordDto::from_record).collect();
            if let Some(kind) = realize {
                for (record, dto) in records.iter().zip(dtos.iter_mut()) {
                    dto.realizations.extend(search_realizations(
                        &record.tile,
                        kind,
                        opt_in_rank7,
                    )?);
                }
            }
            if table {
                print_classification_table(&dtos);
            } else {
                emit(&dtos)?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

impl WeightSource {
    fn load(&self) -> Result<WeightTable, UsageError> {
        if let Some(path) = &self.poset {
            let file: PosetFile = load_json(path)?;
            return Ok(file.to_poset()?.weight_table()?);
        }
        if let Some(path) = &self.covering {
            let file: CoveringFile = load_json(path)?;
            return Ok(file.to_covering()?.weight_table()?);
        }
        if let Some(path) = &self.table {
            return load_table(path);
        }
        Err(UsageError("one of --poset, --covering, --table is required".into()))
    }
}

fn load_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, UsageError> {
    let text = fs::read_to_string(path)
        .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn load_table(path: &PathBuf) -> Result<WeightTable, UsageError> {
    let file: WeightTableFile = load_json(path)?;
    Ok(file.to_valid_table()?)
}

/// Length-checked only; `metrize` accepts tables that fail the triangle axiom.
fn load_raw_table(path: &PathBuf) -> Result<WeightTable, UsageError> {
    let file: WeightTableFile = load_json(path)?;
    Ok(file.to_raw_table()?)
}

fn load_set(path: &PathBuf) -> Result<VectorSet, UsageError> {
    let file: VectorSetFile = load_json(path)?;
    Ok(file.to_set()?)
}

fn as_weight(v: serde_json::Value) -> Result<WeightTable, UsageError> {
    let file: WeightTableFile = serde_json::from_value(v)?;
    Ok(file.to_valid_table()?)
}

fn as_tiling(v: serde_json::Value) -> Result<tscodes::Tiling, UsageError> {
    let file: TilingFile = serde_json::from_value(v)?;
    Ok(file.to_tiling()?)
}

fn emit<T: Serialize>(value: &T) -> Result<(), UsageError> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn verdict_code(affirmative: bool) -> ExitCode {
    if affirmative {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn tiling_verdict_json(verdict: &TilingVerdict) -> serde_json::Value {
    match verdict {
        TilingVerdict::Valid => json!({ "status": "valid" }),
        TilingVerdict::CardinalityMismatch { tile, code } => json!({
            "status": "cardinality mismatch",
            "witness": { "tile_size": tile, "code_size": code },
        }),
        TilingVerdict::Uncovered { point } => json!({
            "status": "uncovered",
            "witness": { "point": point.to_string() },
        }),
        TilingVerdict::DoublyCovered { point, first, second } => json!({
            "status": "doubly covered",
            "witness": {
                "point": point.to_string(),
                "first": first.to_string(),
                "second": second.to_string(),
            },
        }),
    }
}

/// Search bounds keep the combinatorial scan tractable: blocks of at most
/// two coordinates, at most `rank` blocks. The poset scan is exhaustive up
/// to rank 6 (rank 7 by opt-in) and skipped above.
fn search_realizations(
    tile: &VectorSet,
    kind: RealizeKind,
    opt_in_rank7: bool,
) -> Result<Vec<RealizationDto>, UsageError> {
    let s = tile.dim();
    let mut out = Vec::new();
    match kind {
        RealizeKind::Poset => {
            if s > 6 && !(s == 7 && opt_in_rank7) {
                return Ok(out);
            }
            for (p, r) in realize_poset(tile, opt_in_rank7)? {
                out.push(RealizationDto::Poset { covers: p.cover_pairs(), radius: r });
            }
        }
        RealizeKind::Combinatorial => {
            if s > 6 {
                return Ok(out);
            }
            for (f, r) in realize_combinatorial(tile, s as usize, 2)? {
                out.push(RealizationDto::Combinatorial {
                    blocks: f.blocks_as_indices(),
                    radius: r,
                });
            }
        }
    }
    Ok(out)
}

fn print_classification_table(records: &[ClassificationRecordDto]) {
    println!(
        "{:<6} {:<5} {:<6} {:<8} {:<30}",
        "size", "rank", "tile?", "TS-ball", "witness"
    );
    for r in records {
        let witness = match r.realizations.first() {
            Some(RealizationDto::Poset { covers, radius }) => {
                format!("poset {covers:?} @ r={radius}")
            }
            Some(RealizationDto::Combinatorial { blocks, radius }) => {
                format!("covering {blocks:?} @ r={radius}")
            }
            None => String::from("-"),
        };
        println!(
            "{:<6} {:<5} {:<6} {:<8} {:<30}",
            r.size,
            r.rank,
            if r.is_tile { "yes" } else { "no" },
            r.ts.status,
            witness
        );
        println!("       tile: {}", r.tile.join(" "));
    }
}
