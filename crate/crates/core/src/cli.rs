//! The `skewbrace` command line.
//!
//! Reports go to standard output as JSON, diagnostics to standard error.
//! Exit codes: 0 success or property holds, 1 property fails, 2 invalid
//! input, 3 a size bound or the closure cap was exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::brace::{SkewBrace, ValidationMode};
use crate::construct::{are_isomorphic, brace_automorphisms, semidirect_product};
use crate::enumerate::{enumerate_braces, fingerprint, AdditiveFilter};
use crate::error::Result;
use crate::group::catalog::{make_group, GroupKind};
use crate::ideal::{all_ideals, ideal_sets, is_simple};
use crate::io::{import_brace, ideal_report, read_group, read_spec, BraceJson, EnumerationJson};
use crate::primality::{is_prime, is_semiprime, is_strongly_prime, is_strongly_semiprime, Decision, Mode, StarChain};
use crate::scenario::{run_scenario, Status, SCENARIOS};
use crate::set::ElementSet;

#[derive(Debug, Parser)]
#[command(name = "skewbrace", version, about = "Finite skew left braces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a file holds a skew brace.
    Validate {
        brace: PathBuf,
        /// Check the brace law on every triple instead of on generators.
        #[arg(long)]
        exhaustive: bool,
    },
    /// List all ideals.
    Ideals { brace: PathBuf },
    /// Decide one property.
    Check {
        brace: PathBuf,
        #[arg(long, value_enum)]
        property: Property,
        /// Use the definitions over all ideals instead of minimal ideals.
        #[arg(long)]
        oracle: bool,
    },
    /// Build a semidirect product from a spec file.
    Semidirect { spec: PathBuf },
    /// List brace automorphisms.
    Aut { brace: PathBuf },
    /// Test two braces for isomorphism.
    Iso { a: PathBuf, b: PathBuf },
    /// Enumerate braces of one order up to isomorphism.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// `all`, `abelian`, a group tag such as `C2xC6`, or a group JSON file.
        #[arg(long, default_value = "all")]
        additive: String,
    },
    /// Run a named reproduction, or `all`.
    VerifyPaper {
        scenario: String,
        /// Directory holding `<scenario>.json` imports.
        #[arg(long)]
        import: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    Simple,
    Semiprime,
    Prime,
    StronglySemiprime,
    StronglyPrime,
}

#[derive(Serialize)]
struct ValidateReport {
    valid: bool,
    order: usize,
    fingerprint: String,
    abelian_type: bool,
    trivial: bool,
}

#[derive(Serialize)]
struct CheckReport {
    property: Property,
    mode: Mode,
    holds: bool,
    order: usize,
    fingerprint: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<StarChain>,
    /// Sizes of the ideals, for `simple`.
    #[serde(skip_serializing_if = "Option::is_none")]
    ideal_sizes: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct SemidirectReport {
    order: usize,
    fingerprint: String,
    b1_copy: ElementSet,
    b2_copy: ElementSet,
    kernel: Vec<usize>,
    ideal_sizes: Vec<usize>,
    brace: BraceJson,
}

#[derive(Serialize)]
struct AutReport {
    order: usize,
    fingerprint: String,
    count: usize,
    automorphisms: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct IsoReport {
    isomorphic: bool,
    fingerprints: [String; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    mapping: Option<Vec<usize>>,
}

/// Parses `args` (program name first) and runs the command, writing the
/// report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match dispatch(&cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn load(path: &Path) -> Result<SkewBrace> {
    Ok(import_brace(path)?.brace)
}

fn decide(b: &SkewBrace, property: Property, mode: Mode) -> Result<Decision> {
    Ok(match property {
        Property::Simple => unreachable!("simple is decided directly"),
        Property::Semiprime => is_semiprime(b, mode),
        Property::Prime => is_prime(b, mode),
        Property::StronglySemiprime => is_strongly_semiprime(b, mode)?,
        Property::StronglyPrime => is_strongly_prime(b, mode)?,
    })
}

/// Runs one parsed command.
pub fn dispatch(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Validate { brace, exhaustive } => {
            let b = load(brace)?;
            if *exhaustive {
                SkewBrace::with_mode(b.add_group().clone(), b.mul_group().clone(), ValidationMode::Exhaustive)?;
            }
            emit(
                out,
                &ValidateReport {
                    valid: true,
                    order: b.order(),
                    fingerprint: fingerprint(&b),
                    abelian_type: b.is_abelian_type(),
                    trivial: b.is_trivial(),
                },
            )?;
            Ok(0)
        }
        Command::Ideals { brace } => {
            let b = load(brace)?;
            emit(out, &ideal_report(&b, &all_ideals(&b)))?;
            Ok(0)
        }
        Command::Check { brace, property, oracle } => {
            let b = load(brace)?;
            let mode = if *oracle { Mode::Oracle } else { Mode::Fast };
            let mut report = CheckReport {
                property: *property,
                mode,
                holds: false,
                order: b.order(),
                fingerprint: fingerprint(&b),
                witness: None,
                ideal_sizes: None,
            };
            if *property == Property::Simple {
                report.holds = is_simple(&b);
                report.ideal_sizes = Some(ideal_sets(&b).iter().map(ElementSet::len).collect());
            } else {
                let d = decide(&b, *property, mode)?;
                report.holds = d.holds;
                report.witness = d.witness;
            }
            if !report.holds {
                writeln!(err, "{:?} does not hold", property)?;
            }
            emit(out, &report)?;
            Ok(if report.holds { 0 } else { 1 })
        }
        Command::Semidirect { spec } => {
            let spec = read_spec(spec)?;
            let p = semidirect_product(&spec)?;
            emit(
                out,
                &SemidirectReport {
                    order: p.brace.order(),
                    fingerprint: fingerprint(&p.brace),
                    b1_copy: p.b1_copy.clone(),
                    b2_copy: p.b2_copy.clone(),
                    kernel: spec.kernel().into_vec(),
                    ideal_sizes: ideal_sets(&p.brace).iter().map(ElementSet::len).collect(),
                    brace: BraceJson::from_brace(&p.brace),
                },
            )?;
            Ok(0)
        }
        Command::Aut { brace } => {
            let b = load(brace)?;
            let auts = brace_automorphisms(&b, b.order())?;
            emit(
                out,
                &AutReport {
                    order: b.order(),
                    fingerprint: fingerprint(&b),
                    count: auts.len(),
                    automorphisms: auts.into_iter().map(|m| m.into_mapping()).collect(),
                },
            )?;
            Ok(0)
        }
        Command::Iso { a, b } => {
            let (x, y) = (load(a)?, load(b)?);
            let found = are_isomorphic(&x, &y, x.order().max(y.order()))?;
            let report = IsoReport {
                isomorphic: found.is_some(),
                fingerprints: [fingerprint(&x), fingerprint(&y)],
                mapping: found.map(|m| m.into_mapping()),
            };
            emit(out, &report)?;
            Ok(if report.isomorphic { 0 } else { 1 })
        }
        Command::Enumerate { order, additive } => {
            let filter = match additive.as_str() {
                "all" => AdditiveFilter::All,
                "abelian" => AdditiveFilter::Abelian,
                tag if Path::new(tag).is_file() => AdditiveFilter::Group { name: tag.into(), group: read_group(Path::new(tag))? },
                tag => AdditiveFilter::Group { name: tag.into(), group: make_group(&GroupKind::parse(tag)?)? },
            };
            let r = enumerate_braces(*order, &filter)?;
            emit(out, &EnumerationJson::from_result(&r))?;
            Ok(0)
        }
        Command::VerifyPaper { scenario, import } => {
            let ids: Vec<&str> = if scenario == "all" {
                SCENARIOS.iter().map(|s| s.id).collect()
            } else {
                vec![scenario.as_str()]
            };
            let mut reports = Vec::new();
            for id in ids {
                let r = run_scenario(id, import.as_deref())?;
                writeln!(err, "{} {}", r.status, r.id)?;
                for c in r.checks.iter().filter(|c| !c.passed) {
                    writeln!(err, "  failed: {} ({})", c.name, c.detail)?;
                }
                reports.push(r);
            }
            let failed = reports.iter().any(|r| r.status == Status::Fail);
            if reports.len() == 1 {
                emit(out, &reports[0])?;
            } else {
                emit(out, &reports)?;
            }
            Ok(if failed { 1 } else { 0 })
        }
    }
}

/// Entry point for the binary.
pub fn main_with_env() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
