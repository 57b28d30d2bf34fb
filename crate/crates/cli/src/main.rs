//! Command-line interface over the tradeoff toolkit.
//!
//! Exit codes: 0 on success, 1 on contract violations (bad inputs, IO
//! failures, inconsistent results), 2 when an enumeration guard refuses
//! without `--force`.

use clap::{Parser, Subcommand};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use tradeoff_core::cacode::{self, CaError};
use tradeoff_core::harness::{self, BoundKind, OutputFormat};
use tradeoff_core::lattice::{abc_partition, Lattice, Region};
use tradeoff_core::stabilizer::{fact1_sweep, StabilizerCode, StabilizerError};
use tradeoff_core::surface::{planar_surface_code, toric_code};

/// Cap applied when `--force` lifts an enumeration guard.
const FORCED_GUARD: usize = 62;
/// Region-sweep refusal threshold for `fact1` without `--force`.
const SWEEP_LIMIT: usize = 2_000_000;

#[derive(Parser)]
#[command(
    name = "tradeoffs",
    about = "2D code constructions, correctability checks and tradeoff datasets",
    version
)]
struct Cli {
    /// Output path (stdout when omitted).
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Output format for tabular and report data.
    #[arg(long, global = true, default_value = "csv")]
    format: String,

    /// Worker threads (defaults to the available cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Override enumeration guards.
    #[arg(long, global = true)]
    force: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact automaton-code distance by exhaustive search.
    CaDistance {
        #[arg(long = "L")]
        l: usize,
    },
    /// Single-seed codeword weight d'.
    CaSeedWeight {
        #[arg(long = "L")]
        l: usize,
    },
    /// Scan odd sides, emitting d' (and exhaustive d up to a cutoff).
    CaScan {
        #[arg(long)]
        min: usize,
        #[arg(long)]
        max: usize,
        /// Largest side to enumerate exhaustively (0 disables).
        #[arg(long, default_value_t = 0)]
        exhaustive_up_to: usize,
    },
    /// Single-seed weight over 2^p rows, simulation vs closed form.
    Sierpinski {
        #[arg(long)]
        p: u32,
    },
    /// Scan the surface families into a tradeoff-point table.
    SurfaceScan {
        #[arg(long, default_value_t = 12)]
        d_max: usize,
        #[arg(long, default_value_t = 12)]
        l_max: usize,
    },
    /// Construct a surface code and emit its JSON description.
    Surface {
        /// planar | toric
        #[arg(long)]
        kind: String,
        #[arg(long)]
        size: usize,
        /// Brute-force the distance and compare with the nominal value.
        #[arg(long)]
        verify_distance: bool,
    },
    /// Exact entropies of a region of the maximally mixed encoded state.
    Entropy {
        #[arg(long)]
        code_file: PathBuf,
        #[arg(long)]
        region_file: PathBuf,
    },
    /// Check the entropic erasure condition over all small regions.
    Fact1 {
        #[arg(long)]
        code_file: PathBuf,
        #[arg(long)]
        max_region_size: usize,
    },
    /// Build the three-color block partition of an open square lattice.
    PartitionAbc {
        #[arg(long)]
        side: usize,
        #[arg(long = "R")]
        r: usize,
        #[arg(long)]
        w: usize,
    },
    /// Union-correctability check for two regions from a file.
    UnionCheck {
        #[arg(long)]
        code_file: PathBuf,
        /// JSON array holding exactly two regions.
        #[arg(long)]
        regions_file: PathBuf,
    },
    /// Bound-ratio report over a tradeoff-point file.
    Bounds {
        #[arg(long = "in")]
        input: PathBuf,
        /// quantum | classical
        #[arg(long)]
        which: String,
    },
}

enum CliError {
    Contract(String),
    Guard(String),
}

impl CliError {
    fn contract(e: impl std::fmt::Display) -> Self {
        CliError::Contract(e.to_string())
    }
}

fn from_ca(e: CaError) -> CliError {
    match e {
        CaError::EnumerationTooLarge { .. } => CliError::Guard(e.to_string()),
        other => CliError::Contract(other.to_string()),
    }
}

fn from_stab(e: StabilizerError) -> CliError {
    match e {
        StabilizerError::GuardExceeded { .. } => CliError::Guard(e.to_string()),
        other => CliError::Contract(other.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Contract(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Guard(msg)) => {
            eprintln!("refused: {msg} (use --force to override)");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let format = OutputFormat::from_str(&cli.format).map_err(CliError::Contract)?;
    match &cli.command {
        Command::CaDistance { l } => {
            let guard = if cli.force {
                FORCED_GUARD
            } else {
                cacode::DEFAULT_ENUMERATION_GUARD
            };
            let d = cacode::exhaustive_distance_with_guard(*l, guard).map_err(from_ca)?;
            deliver(cli, format, &json!({ "L": l, "d": d }))
        }
        Command::CaSeedWeight { l } => {
            let d_prime = cacode::single_seed_weight(*l).map_err(from_ca)?;
            deliver(cli, format, &json!({ "L": l, "d_prime": d_prime }))
        }
        Command::CaScan {
            min,
            max,
            exhaustive_up_to,
        } => {
            let rows = harness::scan_ca(*min, *max, *exhaustive_up_to).map_err(from_ca)?;
            write_out(cli, harness::emit_ca_rows(&rows, format))
        }
        Command::Sierpinski { p } => {
            let closed = cacode::sierpinski_weight_closed_form(*p);
            let mut body = json!({ "p": p, "closed_form": closed.to_string() });
            if *p <= 10 {
                let simulated = cacode::sierpinski_weight_simulated(*p);
                body["simulated"] = json!(simulated.to_string());
                body["agree"] = json!(simulated == closed);
            }
            deliver(cli, format, &body)
        }
        Command::SurfaceScan { d_max, l_max } => {
            if *d_max < 2 || *l_max < 2 {
                return Err(CliError::Contract("scan sizes start at 2".into()));
            }
            let points = harness::scan_surface(*d_max, *l_max);
            write_out(cli, harness::emit_points(&points, format))
        }
        Command::Surface {
            kind,
            size,
            verify_distance,
        } => {
            let code = match kind.as_str() {
                "planar" => planar_surface_code(*size).map_err(CliError::contract)?,
                "toric" => toric_code(*size).map_err(CliError::contract)?,
                other => {
                    return Err(CliError::Contract(format!(
                        "unknown surface kind {other:?} (expected planar or toric)"
                    )))
                }
            };
            if *verify_distance {
                let guard = if cli.force {
                    FORCED_GUARD
                } else {
                    tradeoff_core::stabilizer::DEFAULT_DISTANCE_GUARD
                };
                let d = code.min_distance_with_guard(guard).map_err(from_stab)?;
                let nominal = *size as u64;
                eprintln!("distance: {d} (nominal {nominal})");
                if d != nominal {
                    return Err(CliError::Contract(format!(
                        "brute-force distance {d} disagrees with nominal {nominal}"
                    )));
                }
            }
            write_out(cli, code.to_json() + "\n")
        }
        Command::Entropy {
            code_file,
            region_file,
        } => {
            let code = load_code(code_file)?;
            let region = load_region(region_file)?;
            let report = code.entropy_report(&region).map_err(from_stab)?;
            deliver(cli, format, &serde_json::to_value(&report).unwrap())
        }
        Command::Fact1 {
            code_file,
            max_region_size,
        } => {
            let code = load_code(code_file)?;
            let n = code.num_qubits();
            let regions: usize = (0..=*max_region_size.min(&n))
                .map(|s| binomial(n, s))
                .sum();
            if regions > SWEEP_LIMIT && !cli.force {
                return Err(CliError::Guard(format!(
                    "sweep over {regions} regions exceeds the limit of {SWEEP_LIMIT}"
                )));
            }
            let report = fact1_sweep(&code, *max_region_size);
            deliver(cli, format, &serde_json::to_value(&report).unwrap())
        }
        Command::PartitionAbc { side, r, w } => {
            let lat = Lattice::open(*side, *side);
            let partition = abc_partition(lat, *r, *w).map_err(CliError::contract)?;
            let window = partition.verify_window_property(*w);
            let body = json!({
                "block_size": r,
                "range": w,
                "a": partition.a,
                "b": partition.b,
                "c": partition.c,
                "c_sites": partition.c.len(),
                "window_property": window,
            });
            deliver(cli, format, &body)
        }
        Command::UnionCheck {
            code_file,
            regions_file,
        } => {
            let code = load_code(code_file)?;
            let text = read_file(regions_file)?;
            let regions: Vec<Region> = serde_json::from_str(&text)
                .map_err(|e| CliError::Contract(format!("{}: {e}", regions_file.display())))?;
            let [m1, m2] = regions.as_slice() else {
                return Err(CliError::Contract(format!(
                    "{}: expected exactly two regions, got {}",
                    regions_file.display(),
                    regions.len()
                )));
            };
            let report = code.union_lemma_check(m1, m2).map_err(from_stab)?;
            deliver(cli, format, &serde_json::to_value(&report).unwrap())
        }
        Command::Bounds { input, which } => {
            let which = BoundKind::from_str(which).map_err(CliError::Contract)?;
            let text = read_file(input)?;
            let points = harness::parse_points_any(&text, format).map_err(CliError::contract)?;
            if points.is_empty() {
                return Err(CliError::Contract("point file is empty".into()));
            }
            let report = harness::check_bound(&points, which);
            write_out(cli, harness::emit_bound_report(&report, format))
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

fn read_file(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Contract(format!("{}: {e}", path.display())))
}

fn load_code(path: &PathBuf) -> Result<StabilizerCode, CliError> {
    let text = read_file(path)?;
    StabilizerCode::from_json(&text)
        .map_err(|e| CliError::Contract(format!("{}: {e}", path.display())))
}

fn load_region(path: &PathBuf) -> Result<Region, CliError> {
    let text = read_file(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Contract(format!("{}: {e}", path.display())))
}

/// Renders a JSON value in the requested format: JSON verbatim, CSV as
/// flattened `field,value` lines.
fn deliver(cli: &Cli, format: OutputFormat, value: &serde_json::Value) -> Result<(), CliError> {
    let contents = match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(value).unwrap();
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut lines = String::from("field,value\n");
            flatten_json(value, "", &mut lines);
            lines
        }
    };
    write_out(cli, contents)
}

fn flatten_json(value: &serde_json::Value, prefix: &str, out: &mut String) {
    match value {
        serde_json::Value::Object(map) => {
            for (key, v) in map {
                let path = if prefix.is_empty() {
                    key.clone()
                } else {
                    format!("{prefix}.{key}")
                };
                flatten_json(v, &path, out);
            }
        }
        serde_json::Value::Array(items) => {
            if items.iter().all(|v| !v.is_object() && !v.is_array()) {
                let joined: Vec<String> = items.iter().map(scalar_to_string).collect();
                out.push_str(&format!("{prefix},{}\n", joined.join(";")));
            } else {
                for (i, v) in items.iter().enumerate() {
                    flatten_json(v, &format!("{prefix}.{i}"), out);
                }
            }
        }
        scalar => out.push_str(&format!("{prefix},{}\n", scalar_to_string(scalar))),
    }
}

fn scalar_to_string(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn write_out(cli: &Cli, contents: String) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => harness::write_file(path, &contents).map_err(CliError::contract),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}
