//! Command-line front end.
//!
//! Exit status: 0 on success, 1 on a domain error (invalid lattice, failed
//! verification, mismatched files), 2 on a usage error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::codemap::{build_map, single_qubit_images, verify_map, MapArtifact, MapConventions};
use crate::colex::{
    build_hexagonal_torus, build_square_octagon_rect, load_colex, parse_colex, save_colex, validate_colex,
    Colex, Color,
};
use crate::contraction::{contract, surface_dual_check};
use crate::decode::{extract_syndrome, MappedDecoder, MatchingStrategy, Syndrome};
use crate::error::{Error, Result};
use crate::report::ValidationReport;
use crate::simulate::{sweep, write_csv};
use crate::stabilizers::{code_params, color_code, surface_code, StabilizerCode};
use crate::symplectic::PauliOp;

#[derive(Parser, Debug)]
#[command(
    name = "color2surface",
    version = concat!(env!("CARGO_PKG_VERSION"), " (map format 1)"),
    about = "Map 2D color codes onto pairs of surface codes and decode through the map"
)]
struct Cli {
    /// Worker threads for verification and simulation (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate or validate lattice files.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Inspect the color code or the contracted surface code.
    #[command(subcommand)]
    Code(CodeCmd),
    /// Contract, build, verify, and apply maps.
    #[command(subcommand)]
    Map(MapCmd),
    /// Decode one syndrome or error through a map file; prints JSON.
    Decode(DecodeArgs),
    /// Monte Carlo logical error rates; writes CSV.
    Simulate(SimulateArgs),
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Family {
    /// Honeycomb (6.6.6) torus; rows and cols multiples of 3.
    Hex,
    /// Square-octagon (4.8.8) torus; rows and cols even.
    Sqoct,
}

#[derive(Copy, Clone, Debug, Default, ValueEnum, PartialEq)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, Default, ValueEnum)]
enum CodeKindArg {
    #[default]
    Color,
    Surface,
}

#[derive(Copy, Clone, Debug, Default, ValueEnum)]
enum MatchingArg {
    #[default]
    Exact,
    Greedy,
}

impl From<MatchingArg> for MatchingStrategy {
    fn from(m: MatchingArg) -> Self {
        match m {
            MatchingArg::Exact => MatchingStrategy::Exact,
            MatchingArg::Greedy => MatchingStrategy::Greedy,
        }
    }
}

#[derive(Subcommand, Debug)]
enum LatticeCmd {
    /// Write a periodic lattice as JSON.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        /// Output file (default: standard output).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a lattice file; exits 1 if any check fails.
    Validate {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
enum CodeCmd {
    /// Print n, k, and (for n ≤ 24) the distance d.
    Params {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        kind: CodeKindArg,
        /// Contraction color for `--kind surface`.
        #[arg(long, value_parser = parse_color, default_value = "r")]
        color: Color,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Dump the stabilizer generators as IXYZ strings.
    Stabilizers {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        kind: CodeKindArg,
        #[arg(long, value_parser = parse_color, default_value = "r")]
        color: Color,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
enum MapCmd {
    /// Write the contracted graph as JSON.
    Contract {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_parser = parse_color)]
        color: Color,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the map and write the binary map file.
    Build {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_parser = parse_color)]
        color: Color,
        /// Draw random conventions from this seed instead of the standard ones.
        #[arg(long)]
        conventions_seed: Option<u64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run every structural check on a map file; exits 1 if any fails.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        map: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        report: Format,
    },
    /// Print the image of a color-code Pauli on both surface copies.
    Image {
        #[arg(long)]
        map: PathBuf,
        /// IXYZ string over the color-code qubits; omit to print every single-qubit image.
        #[arg(long)]
        pauli: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct DecodeArgs {
    #[arg(long)]
    map: PathBuf,
    /// Lattice the map must belong to (checked by fingerprint).
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// File holding the color syndrome as 0/1 characters, one per generator.
    #[arg(long, conflicts_with = "error", required_unless_present = "error")]
    syndrome: Option<PathBuf>,
    /// Error as an IXYZ string; the outcome then reports success.
    #[arg(long)]
    error: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    matching: MatchingArg,
}

#[derive(Args, Debug)]
struct SimulateArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_parser = parse_color)]
    color: Color,
    /// Comma-separated physical error rates.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    p: Vec<f64>,
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Draw random conventions from this seed instead of the standard ones.
    #[arg(long)]
    conventions_seed: Option<u64>,
    #[arg(long, value_enum, default_value_t)]
    matching: MatchingArg,
    /// Fill the `seconds` column (makes output run-dependent).
    #[arg(long)]
    timing: bool,
    /// Output CSV (default: standard output).
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_color(s: &str) -> std::result::Result<Color, String> {
    Color::parse(s).ok_or_else(|| format!("expected r, g, or b, got {s:?}"))
}

/// Runs the command line `args` (including the program name) and returns the exit status.
pub fn main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: --threads must be at least 1");
            return 2;
        }
        // Fails only if a pool already exists (e.g. repeated calls in one process).
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(cli.command) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::Failed) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

enum Outcome {
    Ok,
    Failed,
}

fn read_colex(path: &Path) -> Result<Colex> {
    let text = fs::read_to_string(path)?;
    load_colex(&text).map_err(|e| match e {
        Error::Parse { path: at, message } => {
            Error::Parse { path: format!("{} {at}", path.display()), message }
        }
        other => other,
    })
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn print_report(report: &ValidationReport, format: Format) -> Result<Outcome> {
    match format {
        Format::Text => println!("{report}"),
        Format::Json => println!("{}", report.to_json()),
    }
    Ok(if report.all_passed() { Outcome::Ok } else { Outcome::Failed })
}

fn conventions(g: &Colex, color: Color, seed: Option<u64>) -> Result<MapConventions> {
    match seed {
        Some(s) => Ok(MapConventions::random(g, color, &mut ChaCha8Rng::seed_from_u64(s))),
        None => MapConventions::standard(g, color),
    }
}

fn select_code(g: &Colex, kind: CodeKindArg, color: Color) -> Result<StabilizerCode> {
    match kind {
        CodeKindArg::Color => color_code(g),
        CodeKindArg::Surface => surface_code(&contract(g, color)?),
    }
}

fn run(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Lattice(LatticeCmd::Gen { family, rows, cols, out }) => {
            let g = match family {
                Family::Hex => build_hexagonal_torus(rows, cols)?,
                Family::Sqoct => build_square_octagon_rect(rows, cols)?,
            };
            emit(out.as_deref(), &save_colex(&g))?;
            Ok(Outcome::Ok)
        }
        Command::Lattice(LatticeCmd::Validate { input, format }) => {
            let g = parse_colex(&fs::read_to_string(&input)?)?;
            print_report(&validate_colex(&g), format)
        }
        Command::Code(CodeCmd::Params { input, kind, color, format }) => {
            let g = read_colex(&input)?;
            let params = code_params(&select_code(&g, kind, color)?);
            match format {
                Format::Text => println!("n = {}\nk = {}\nd = {}", params.n, params.k, {
                    params.d.map_or("unknown".to_string(), |d| d.to_string())
                }),
                Format::Json => println!("{}", json!({"n": params.n, "k": params.k, "d": params.d})),
            }
            Ok(Outcome::Ok)
        }
        Command::Code(CodeCmd::Stabilizers { input, kind, color, format }) => {
            let g = read_colex(&input)?;
            let code = select_code(&g, kind, color)?;
            match format {
                Format::Text => {
                    let mut s = String::new();
                    for p in code.generators() {
                        s.push_str(&p.to_string());
                        s.push('\n');
                    }
                    emit(None, &s)?;
                }
                Format::Json => {
                    let gens: Vec<_> = code
                        .generators()
                        .iter()
                        .zip(code.provenance())
                        .map(|(p, prov)| json!({"pauli": p.to_string(), "source": prov.to_string()}))
                        .collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({"generators": gens})).expect("JSON value")
                    );
                }
            }
            Ok(Outcome::Ok)
        }
        Command::Map(MapCmd::Contract { input, color, out }) => {
            let g = read_colex(&input)?;
            let sg = contract(&g, color)?;
            let report = surface_dual_check(&sg);
            if !report.all_passed() {
                eprintln!("{report}");
                return Ok(Outcome::Failed);
            }
            emit(out.as_deref(), &sg.to_json())?;
            Ok(Outcome::Ok)
        }
        Command::Map(MapCmd::Build { input, color, conventions_seed, out }) => {
            let g = read_colex(&input)?;
            let conv = conventions(&g, color, conventions_seed)?;
            let artifact = MapArtifact::new(build_map(&g, &conv)?)?;
            artifact.write(&out)?;
            Ok(Outcome::Ok)
        }
        Command::Map(MapCmd::Verify { input, map, report }) => {
            let g = read_colex(&input)?;
            let artifact = MapArtifact::read(&map)?;
            artifact.check_lattice(&g)?;
            let cm = artifact.code_map();
            let mut r = ValidationReport::new();
            match build_map(&g, cm.conventions()) {
                Ok(rebuilt) => r.record(
                    "file/matches-conventions",
                    (rebuilt.map() != cm.map())
                        .then(|| "stored matrix differs from the one its conventions build".into()),
                ),
                Err(e) => r.fail("file/matches-conventions", e.to_string()),
            }
            r.record(
                "file/basis-change",
                match crate::codemap::basis_change(cm) {
                    Ok(b) if &b == artifact.basis_change() => None,
                    Ok(_) => Some("stored basis change is stale".into()),
                    Err(e) => Some(e.to_string()),
                },
            );
            r.checks.extend(verify_map(cm).checks);
            print_report(&r, report)
        }
        Command::Map(MapCmd::Image { map, pauli, format }) => {
            let artifact = MapArtifact::read(&map)?;
            let cm = artifact.code_map();
            let sg = cm.surface();
            let split = |img: &PauliOp| cm.map().split_image(img, [sg.space(), sg.space()]);
            match pauli {
                Some(text) => {
                    let p = PauliOp::parse(cm.map().domain(), &text)?;
                    let img = cm.apply(&p)?;
                    let [a, b] = split(&img)?;
                    match format {
                        Format::Text => println!("copy1 {a}\ncopy2 {b}"),
                        Format::Json => {
                            println!("{}", json!({"copy1": a.to_string(), "copy2": b.to_string()}))
                        }
                    }
                }
                None => {
                    let rows = single_qubit_images(cm);
                    let mut text = String::new();
                    let mut items = Vec::new();
                    for r in &rows {
                        let [a, b] = split(&r.image)?;
                        match format {
                            Format::Text => {
                                text.push_str(&format!("{}{}\t{a}\t{b}\n", r.pauli.letter(), r.vertex))
                            }
                            Format::Json => items.push(json!({
                                "vertex": r.vertex,
                                "pauli": r.pauli.letter().to_string(),
                                "copy1": a.to_string(),
                                "copy2": b.to_string(),
                            })),
                        }
                    }
                    match format {
                        Format::Text => emit(None, &text)?,
                        Format::Json => {
                            println!("{}", serde_json::to_string_pretty(&items).expect("JSON value"))
                        }
                    }
                }
            }
            Ok(Outcome::Ok)
        }
        Command::Decode(args) => {
            let artifact = MapArtifact::read(&args.map)?;
            if let Some(input) = &args.input {
                artifact.check_lattice(&read_colex(input)?)?;
            }
            let decoder = MappedDecoder::from_artifact(artifact, args.matching.into())?;
            let code = decoder.color_code();
            let out = match (&args.error, &args.syndrome) {
                (Some(text), _) => {
                    let e = PauliOp::parse(code.space(), text)?;
                    let outcome = decoder.decode_error(&e)?;
                    json!({
                        "correction": outcome.correction.to_string(),
                        "success": outcome.success,
                        "logicalClass": outcome.logical_class,
                    })
                }
                (None, Some(path)) => {
                    let syn = Syndrome::parse(code, &fs::read_to_string(path)?)?;
                    let correction = decoder.decode(&syn)?;
                    debug_assert_eq!(extract_syndrome(code, &correction)?, syn);
                    json!({
                        "correction": correction.to_string(),
                        "success": null,
                        "logicalClass": null,
                    })
                }
                (None, None) => unreachable!("clap requires one of --error or --syndrome"),
            };
            println!("{out}");
            Ok(Outcome::Ok)
        }
        Command::Simulate(args) => {
            let g = read_colex(&args.input)?;
            let conv = conventions(&g, args.color, args.conventions_seed)?;
            let decoder = crate::simulate::prepare_decoder(&g, &conv, args.matching.into())?;
            let rows = sweep(&decoder, &args.p, args.trials, args.seed)?;
            let mut buf = Vec::new();
            write_csv(&mut buf, &g, &decoder, &rows, args.timing)?;
            emit(args.out.as_deref(), &String::from_utf8(buf).expect("CSV is UTF-8"))?;
            Ok(Outcome::Ok)
        }
    }
}
