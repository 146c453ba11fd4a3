mod convert;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use elena::harness::verify_all;
use elena::render::{render_elena, render_path, render_tree};
use elena::{count, generate, Band, CountMethod, ElenaWord, FamilySpec, LatticePath, PlaneTree};

use crate::convert::{Kind, Object};

#[derive(Parser)]
#[command(
    name = "elena",
    version,
    about = "Height restricted lattice paths, Elenas and plane trees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the members of a family.
    Count {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Method::TransferMatrix)]
        method: Method,
    },
    /// Print every member of a family, one per line, in lexicographic order (U < D).
    Enumerate {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Convert objects between representations along bpath <-> elena <-> tree <-> apath.
    Convert {
        #[arg(long, value_enum)]
        from: Kind,
        #[arg(long, value_enum)]
        to: Kind,
        /// Read from this file instead of standard input.
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Run the exhaustive verification suite and print its report.
    Verify {
        #[arg(long, default_value_t = 20)]
        max_length: usize,
        /// Human-readable lines instead of JSON records.
        #[arg(long)]
        text: bool,
        /// Leave out the elapsed-time footer.
        #[arg(long)]
        no_timing: bool,
    },
    /// Draw paths as ASCII grids and trees or Elenas as outlines.
    Render {
        #[arg(long, value_enum)]
        kind: RenderKind,
        /// Band for paths; tried as A, then B, when omitted.
        #[arg(long, value_enum)]
        band: Option<Family>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    length: usize,
    #[arg(long, allow_negative_numbers = true)]
    end: i32,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
}

impl Family {
    fn band(self) -> Band {
        match self {
            Family::A => Band::A,
            Family::B => Band::B,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    BruteForce,
    TransferMatrix,
    Formula,
}

impl From<Method> for CountMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::BruteForce => CountMethod::BruteForce,
            Method::TransferMatrix => CountMethod::TransferMatrix,
            Method::Formula => CountMethod::Formula,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderKind {
    Path,
    Tree,
    Elena,
}

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn check(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_FAILURE,
            message: message.into(),
        }
    }

    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::check(e.to_string())
    }
}

fn read_input(path: &Option<PathBuf>) -> io::Result<String> {
    match path {
        Some(p) => fs::read_to_string(p),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

/// Object lines of the input. Comment lines start with `#`. A blank line is
/// the empty path for path kinds and is skipped otherwise.
fn object_lines(input: &str, keep_blank: bool) -> impl Iterator<Item = &str> {
    input
        .lines()
        .filter(move |l| !l.trim_start().starts_with('#') && (keep_blank || !l.trim().is_empty()))
}

fn family_spec(args: &FamilyArgs) -> Result<FamilySpec, Failure> {
    FamilySpec::new(args.family.band(), args.length, args.end)
        .map_err(|e| Failure::usage(e.to_string()))
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    match cli.command {
        Command::Count { family, method } => {
            let spec = family_spec(&family)?;
            let n = count(&spec, method.into()).map_err(|e| Failure::usage(e.to_string()))?;
            writeln!(out, "{n}")?;
        }
        Command::Enumerate { family } => {
            let spec = family_spec(&family)?;
            for p in generate(&spec) {
                writeln!(out, "{p}")?;
            }
        }
        Command::Convert { from, to, input } => {
            let text = read_input(&input)?;
            let paths = matches!(from, Kind::Bpath | Kind::Apath);
            for line in object_lines(&text, paths) {
                let converted = Object::parse(from, line)
                    .and_then(|o| o.convert(to))
                    .map_err(|e| Failure::check(format!("convert {line:?}: {e}")))?;
                writeln!(out, "{}", converted.render())?;
            }
        }
        Command::Verify {
            max_length,
            text,
            no_timing,
        } => {
            let start = Instant::now();
            let report = verify_all(max_length);
            for r in &report.records {
                if text {
                    writeln!(out, "{r}")?;
                } else {
                    writeln!(out, "{}", r.to_json())?;
                }
            }
            let failures = report.failures().count();
            writeln!(out, "# {} checks, {failures} failed", report.len())?;
            if !no_timing {
                writeln!(out, "# elapsed {:.3}s", start.elapsed().as_secs_f64())?;
            }
            if failures > 0 {
                return Err(Failure::check(format!("{failures} check(s) failed")));
            }
        }
        Command::Render { kind, band, input } => {
            let text = read_input(&input)?;
            let keep_blank = matches!(kind, RenderKind::Path);
            for line in object_lines(&text, keep_blank) {
                let picture = match kind {
                    RenderKind::Path => {
                        let path = match band {
                            Some(f) => LatticePath::parse(line, f.band()),
                            None => LatticePath::parse(line, Band::A)
                                .or_else(|_| LatticePath::parse(line, Band::B)),
                        };
                        path.map(|p| render_path(&p))
                    }
                    RenderKind::Tree => PlaneTree::parse(line).map(|t| render_tree(&t)),
                    RenderKind::Elena => {
                        ElenaWord::parse(line).map(|w| render_elena(&w.to_elena()))
                    }
                }
                .map_err(|e| Failure::check(format!("render {line:?}: {e}")))?;
                write!(out, "{picture}")?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match result.and(flushed.map_err(Failure::from)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("elena: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
