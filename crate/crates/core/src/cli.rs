//! The `designlink` command line.
//!
//! Exit codes: 0 success or valid, 1 invalid input or no object, 2 usage
//! error, 3 search budget exhausted.

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::design::{verify_design, verify_downlink, SpectrumMode, Verdict};
use crate::downlinks::downlink;
use crate::generators::{
    fixture_names, fixture_text, kite_cyclic_design, kite_degree2_design, p3_design, p4_pendant_design,
    star_design, steiner_triple_system, StarProfile,
};
use crate::graph::{GraphSpec, PatternKind};
use crate::io::{decode_design, encode_certificate, encode_design, encode_document, read_document, write_atomic, Document};
use crate::oracle::{exact_eta, search_decomposition, search_downlink, SearchOutcome, DEFAULT_BUDGET};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "designlink", version, about = "Graph designs and their down-links to P3-designs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Construct a design.
    Gen(GenArgs),
    /// Down-link a design to a P3-design.
    Downlink {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Aim for the least order the constructions reach.
        #[arg(long)]
        minimal: bool,
    },
    /// Check a design or certificate.
    Verify { file: PathBuf },
    /// Least reachable P3 order by exhaustive search.
    Spectrum {
        #[arg(long)]
        pattern: Pattern,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Mode::Some)]
        mode: Mode,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Exhaustive search for a single object.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Print a bundled fixture, or list them.
    Fixture {
        name: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// A design of the given pattern on K_order.
    Decompose {
        #[arg(long)]
        pattern: Pattern,
        #[arg(long)]
        order: u32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// A down-link from the design in INPUT to a P3-design of the given order.
    Downlink {
        input: PathBuf,
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    pattern: GenPattern,
    #[arg(long)]
    order: u32,
    /// Number of external vertices of a star.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum)]
    profile: Option<Profile>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GenPattern {
    P3,
    P4,
    Star,
    Kite,
    C3,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Profile {
    /// Kite design with a vertex of degree 2 in all its blocks.
    Degree2,
    /// Cyclic kite design.
    Cyclic,
    /// P4 design with a pendant vertex.
    Pendant,
    /// Star design, no constraint on the centres.
    Any,
    /// Star design with exactly one vertex centring no star.
    OneNonCenter,
    /// As one-non-center, plus a vertex centring exactly one star.
    OneSingle,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Some,
    Every,
}

/// A pattern on the command line: `p3`, `p5`, `c4`, `s4`, `k5` or `kite`.
#[derive(Clone, Copy, Debug)]
struct Pattern(PatternKind);

impl FromStr for Pattern {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.to_ascii_lowercase();
        if s == "kite" {
            return Ok(Pattern(PatternKind::Kite));
        }
        let (head, tail) = s.split_at(1.min(s.len()));
        let k: usize = tail.parse().map_err(|_| format!("unknown pattern {s:?}"))?;
        let kind = match head {
            "p" => PatternKind::Path(k),
            "c" => PatternKind::Cycle(k),
            "s" => PatternKind::Star(k),
            "k" => PatternKind::Complete(k),
            _ => return Err(format!("unknown pattern {s:?}")),
        };
        kind.validate().map_err(|e| e.to_string())?;
        Ok(Pattern(kind))
    }
}

/// A failure carrying its exit code.
struct Failure(i32, String);

impl<E: fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(EXIT_INVALID, e.to_string())
    }
}

/// Run the command line on `args` (program name first).
pub fn run_cli<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let stream: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(stream, "{}", e.render());
            return code;
        }
    };
    match run(cli.command, out) {
        Ok(code) => code,
        Err(Failure(code, message)) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

fn emit(text: &str, output: Option<&Path>, out: &mut dyn Write) -> Result<(), Failure> {
    match output {
        Some(path) => write_atomic(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Gen(args) => {
            let d = generate(&args)?;
            emit(&encode_design(&d), args.output.as_deref(), out)?;
            if args.output.is_some() {
                writeln!(out, "{} design of order {} with {} blocks", d.pattern, d.order(), d.blocks.len())?;
            }
            Ok(EXIT_OK)
        }
        Command::Downlink { input, output, minimal } => {
            let d = decode_design(&std::fs::read_to_string(&input)?)?;
            let c = downlink(&d, minimal)?;
            emit(&encode_certificate(&c), output.as_deref(), out)?;
            if output.is_some() {
                writeln!(out, "order {} -> order {}", c.source.order(), c.target_order())?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { file } => {
            let messages: Vec<String> = match read_document(&file)? {
                Document::Design(d) => verify_design(&d).violations.iter().map(|v| v.to_string()).collect(),
                Document::Certificate(c) => verify_downlink(&c).messages(),
            };
            if messages.is_empty() {
                writeln!(out, "valid")?;
                Ok(EXIT_OK)
            } else {
                for m in &messages {
                    writeln!(out, "{m}")?;
                }
                writeln!(out, "invalid: {} violation(s)", messages.len())?;
                Ok(EXIT_INVALID)
            }
        }
        Command::Spectrum { pattern, order, mode, budget } => {
            let mode = match mode {
                Mode::Some => SpectrumMode::Some,
                Mode::Every => SpectrumMode::Every,
            };
            let r = exact_eta(order, pattern.0, mode, budget);
            let verdicts: Vec<_> = r
                .verdicts
                .iter()
                .map(|(n, v)| {
                    let v = match v {
                        Verdict::Reachable => "reachable",
                        Verdict::Unreachable => "unreachable",
                        Verdict::Unknown => "unknown",
                    };
                    json!([n, v])
                })
                .collect();
            let report = json!({
                "v": r.v,
                "pattern": r.pattern.name(),
                "mode": r.mode.to_string(),
                "lower_bound": r.lower_bound,
                "verdicts": verdicts,
                "eta": r.eta,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            Ok(match r.eta {
                Some(_) => EXIT_OK,
                None if r.has_unknowns() => EXIT_UNKNOWN,
                None => EXIT_INVALID,
            })
        }
        Command::Oracle(OracleCommand::Decompose { pattern, order, budget, output }) => {
            match search_decomposition(&GraphSpec::complete(order), pattern.0, budget) {
                SearchOutcome::Found(d) => {
                    emit(&encode_design(&d), output.as_deref(), out)?;
                    Ok(EXIT_OK)
                }
                SearchOutcome::None => Err(Failure(EXIT_INVALID, format!("no {} design of order {order}", pattern.0))),
                SearchOutcome::Unknown => Err(Failure(EXIT_UNKNOWN, "search budget exhausted".into())),
            }
        }
        Command::Oracle(OracleCommand::Downlink { input, order, budget, output }) => {
            let d = decode_design(&std::fs::read_to_string(&input)?)?;
            match search_downlink(&d, order, budget) {
                SearchOutcome::Found(c) => {
                    emit(&encode_certificate(&c), output.as_deref(), out)?;
                    Ok(EXIT_OK)
                }
                SearchOutcome::None => Err(Failure(EXIT_INVALID, format!("no down-link to order {order}"))),
                SearchOutcome::Unknown => Err(Failure(EXIT_UNKNOWN, "search budget exhausted".into())),
            }
        }
        Command::Fixture { name: None, .. } => {
            for name in fixture_names() {
                writeln!(out, "{name}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Fixture { name: Some(name), output } => {
            let text = fixture_text(&name).ok_or_else(|| Failure(EXIT_INVALID, format!("unknown fixture {name:?}")))?;
            // re-encode so the output is in the same layout as every other document
            let doc = crate::io::decode_document(text)?;
            emit(&encode_document(&doc), output.as_deref(), out)?;
            Ok(EXIT_OK)
        }
    }
}

fn generate(args: &GenArgs) -> Result<crate::design::Design, Failure> {
    let v = args.order;
    let usage = |m: String| Failure(EXIT_USAGE, m);
    let d = match (args.pattern, args.profile) {
        (GenPattern::P3, None) => p3_design(v)?,
        (GenPattern::P4, None | Some(Profile::Pendant)) => p4_pendant_design(v)?,
        (GenPattern::C3, None) => steiner_triple_system(v)?,
        (GenPattern::Kite, None | Some(Profile::Degree2)) => kite_degree2_design(v)?,
        (GenPattern::Kite, Some(Profile::Cyclic)) => {
            if v % 8 != 1 {
                return Err(Failure(EXIT_INVALID, format!("cyclic kite designs need order 1 mod 8, got {v}")));
            }
            kite_cyclic_design((v - 1) / 8)?
        }
        (GenPattern::Star, profile) => {
            let k = args.k.ok_or_else(|| usage("--pattern star needs --k".into()))?;
            let profile = match profile {
                None | Some(Profile::Any) => StarProfile::Any,
                Some(Profile::OneNonCenter) => StarProfile::OneNonCenter,
                Some(Profile::OneSingle) => StarProfile::OneNonCenterOneSingle,
                Some(p) => return Err(usage(format!("profile {p:?} does not apply to stars"))),
            };
            star_design(v, k, profile)?
        }
        (pattern, Some(p)) => return Err(usage(format!("profile {p:?} does not apply to {pattern:?}"))),
    };
    Ok(d)
}
