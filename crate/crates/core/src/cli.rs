//! The `reesgor` command line.
//!
//! Exit codes: 0 Gorenstein (or success for informational commands),
//! 1 not Gorenstein, 2 hypothesis not satisfied, 3 input error,
//! 4 resource limit exceeded, 5 internal inconsistency.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::corpus::{self, Instance, EXAMPLE_NAMES};
use crate::decide::{buchsbaum_criterion, decide_with, shimoda_check, DecideOptions, Outcome};
use crate::error::Error;
use crate::input::{parse_document, InputDocument, Mode};
use crate::invariants::{depth_and_type, multiplicity, DEFAULT_RMAX};
use crate::kernel::groebner::set_pair_cap;
use crate::kernel::{Field, PrimeField, Rationals};
use crate::rees::oracle;
use crate::report::{self, Report};
use crate::s2::analyze;

pub const EXIT_GORENSTEIN: i32 = 0;
pub const EXIT_NOT_GORENSTEIN: i32 = 1;
pub const EXIT_HYPOTHESIS: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;
pub const EXIT_INTERNAL: i32 = 5;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Criteria,
    Oracle,
    Both,
}

#[derive(Parser, Debug)]
#[command(name = "reesgor", version, about = "Decide whether the Rees algebra R(q^d) of a parameter ideal is Gorenstein")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Which path decides `check`; overrides the file's `mode` line.
    #[arg(long, global = true, value_enum)]
    mode: Option<ModeArg>,
    /// Characteristic of the coefficient field (0 for the rationals); overrides `char`.
    #[arg(long = "char", global = true)]
    characteristic: Option<u64>,
    /// Seed for the filter-regular pair search.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest reduction number searched.
    #[arg(long, global = true, default_value_t = DEFAULT_RMAX)]
    rmax: usize,
    /// Cap on S-pairs processed by any single Gröbner or syzygy computation.
    #[arg(long, global = true)]
    resolution_cap: Option<usize>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the decision procedure.
    Check { file: PathBuf },
    /// Resolve R(q^n) directly (n defaults to the file's `power`, then to d).
    Oracle {
        file: PathBuf,
        #[arg(long)]
        power: Option<u32>,
    },
    /// Shimoda's test for the parameters of a two-dimensional ring.
    Shimoda { file: PathBuf },
    /// The multiplicity-two criterion for Buchsbaum rings of depth one.
    Buchsbaum {
        file: PathBuf,
        /// Assert that the ring is Buchsbaum and check e_q(A) against the colon length.
        #[arg(long)]
        assert_buchsbaum: bool,
    },
    /// Dimension, depth, type, Betti numbers and multiplicities.
    Invariants { file: PathBuf },
    /// The hypothesis profile, conductor and S2-ification data.
    S2 { file: PathBuf },
    /// Print a corpus input file, or list the corpus when no name is given.
    Examples { name: Option<String> },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invocation {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::InvalidInput(_) | Error::TooManyVariables { .. } | Error::NonPositiveWeight(_) | Error::MixedRings | Error::OwnerMismatch => EXIT_INPUT,
        Error::HypothesisNotVerified(_)
        | Error::NotParameters { .. }
        | Error::DepthNotOne(_)
        | Error::WrongDimension { .. }
        | Error::NotApplicable(_)
        | Error::PairNotFound(_)
        | Error::NotArtinian
        | Error::NotFiniteLength
        | Error::NotContained
        | Error::NonConnected(_)
        | Error::DataError(_) => EXIT_HYPOTHESIS,
        Error::ResourceExceeded(_) | Error::NoStabilization(_) => EXIT_RESOURCE,
        Error::EquivalenceViolation(_) | Error::InternalInconsistency(_) | Error::NotAMember | Error::NotDivisible => EXIT_INTERNAL,
    }
}

fn verdict_code(g: bool) -> i32 {
    if g {
        EXIT_GORENSTEIN
    } else {
        EXIT_NOT_GORENSTEIN
    }
}

/// Parses arguments and runs one command, capturing output.
pub fn run<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let text = e.render().to_string();
            return if e.use_stderr() { Invocation { code, stdout: String::new(), stderr: text } } else { Invocation { code, stdout: text, stderr: String::new() } };
        }
    };
    if let Some(cap) = cli.resolution_cap {
        set_pair_cap(cap);
    }
    quiet_resource_unwinds();
    let (code, body) = match crate::error::contain(|| execute(&cli)) {
        Ok((code, text)) => (code, text),
        Err(e) => {
            let mut rep = Report::new();
            rep.push("status", "error");
            rep.push("error", &e);
            return Invocation { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n{rep}") };
        }
    };
    match &cli.out {
        Some(path) => match std::fs::write(path, &body) {
            Ok(()) => Invocation { code, stdout: String::new(), stderr: String::new() },
            Err(e) => Invocation { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: cannot write {}: {e}\n", path.display()) },
        },
        None => Invocation { code, stdout: body, stderr: String::new() },
    }
}

/// Unwinds carrying an [`Error`] are reported through the exit code, so the
/// default panic message is suppressed for them.
fn quiet_resource_unwinds() {
    static HOOK: std::sync::Once = std::sync::Once::new();
    HOOK.call_once(|| {
        let previous = std::panic::take_hook();
        std::panic::set_hook(Box::new(move |info| {
            if !info.payload().is::<Error>() {
                previous(info);
            }
        }));
    });
}

/// Entry point for the binary.
pub fn main_with_args() -> i32 {
    let inv = run(std::env::args_os());
    print!("{}", inv.stdout);
    eprint!("{}", inv.stderr);
    inv.code
}

fn execute(cli: &Cli) -> crate::Result<(i32, String)> {
    if let Command::Examples { name } = &cli.command {
        return examples(cli, name.as_deref());
    }
    let file = match &cli.command {
        Command::Check { file } | Command::Oracle { file, .. } | Command::Shimoda { file } | Command::Buchsbaum { file, .. } | Command::Invariants { file } | Command::S2 { file } => file,
        Command::Examples { .. } => unreachable!(),
    };
    let text = std::fs::read_to_string(file).map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", file.display())))?;
    let mut doc = parse_document(&text)?;
    if let Some(p) = cli.characteristic {
        doc.characteristic = p;
    }
    if let Some(m) = cli.mode {
        doc.mode = match m {
            ModeArg::Criteria => Mode::Criteria,
            ModeArg::Oracle => Mode::Oracle,
            ModeArg::Both => Mode::Both,
        };
    }
    match doc.characteristic {
        0 => run_document(cli, &doc, Rationals),
        p => {
            let p = u32::try_from(p).map_err(|_| Error::InvalidInput(format!("{p} is not a supported prime")))?;
            run_document(cli, &doc, PrimeField::new(p)?)
        }
    }
}

fn examples(cli: &Cli, name: Option<&str>) -> crate::Result<(i32, String)> {
    let Some(name) = name else {
        return Ok((0, EXAMPLE_NAMES.iter().map(|n| format!("{n}\n")).collect()));
    };
    let text = match cli.characteristic {
        Some(0) => corpus_document(name, Rationals)?,
        Some(p) => corpus_document(name, PrimeField::new(u32::try_from(p).map_err(|_| Error::InvalidInput(format!("{p} is not a supported prime")))?)?)?,
        None => corpus_document(name, PrimeField::default())?,
    };
    Ok((0, text))
}

/// The input file text for a corpus example.
pub fn corpus_document<F: Field>(name: &str, field: F) -> crate::Result<String> {
    let inst = corpus::by_name(name, field)?;
    Ok(InputDocument::from_instance(&inst)?.to_string())
}

fn run_document<F: Field>(cli: &Cli, doc: &InputDocument, field: F) -> crate::Result<(i32, String)> {
    let inst: Instance<F> = doc.instance(field)?;
    let r = inst.ring.ambient().clone();
    let mut rep = Report::new();
    rep.push("ring", inst.name());
    rep.push("char", doc.characteristic);
    rep.push("vars", doc.vars.iter().map(|v| format!("{}:{}", v.name, v.weight)).collect::<Vec<_>>().join(" "));
    rep.push("params", inst.params.iter().map(|p| r.format(p)).collect::<Vec<_>>().join(", "));
    let d = inst.dim();
    let code = match &cli.command {
        Command::Check { .. } => {
            rep.push("mode", doc.mode.name());
            if doc.mode.runs_criteria() {
                let opts = DecideOptions { seed: cli.seed, rmax: cli.rmax, run_oracle: doc.mode.runs_oracle() };
                let dec = decide_with(&inst.ring, &inst.params, &opts)?;
                report::decision_report(&mut rep, &dec);
                if doc.shimoda {
                    let s = shimoda_check(&inst.ring, &inst.params[0], &inst.params[1])?;
                    report::shimoda_report(&mut rep, &s);
                    if dec.h1_length > 0 && s.verdict != dec.verdict {
                        return Err(Error::EquivalenceViolation(format!("Shimoda's test gives {}, the criteria give {}", s.verdict, dec.verdict)));
                    }
                }
                if doc.buchsbaum {
                    let b = buchsbaum_criterion(&inst.ring, &inst.params, true, cli.rmax)?;
                    report::buchsbaum_report(&mut rep, &b);
                    if b.verdict != dec.verdict {
                        return Err(Error::EquivalenceViolation(format!("the Buchsbaum criterion gives {}, the criteria give {}", b.verdict, dec.verdict)));
                    }
                }
                match dec.outcome() {
                    Outcome::Gorenstein => EXIT_GORENSTEIN,
                    Outcome::NotGorenstein => EXIT_NOT_GORENSTEIN,
                    Outcome::HypothesisUnmet => EXIT_HYPOTHESIS,
                }
            } else {
                let n = doc.power.unwrap_or(d as u32);
                let v = oracle(&inst.ring, &inst.params, n)?;
                report::oracle_report(&mut rep, n, &v);
                rep.push("verdict", v.gorenstein);
                rep.push("outcome", if v.gorenstein { "gorenstein" } else { "not_gorenstein" });
                verdict_code(v.gorenstein)
            }
        }
        Command::Oracle { power, .. } => {
            let n = power.or(doc.power).unwrap_or(d as u32);
            let v = oracle(&inst.ring, &inst.params, n)?;
            report::oracle_report(&mut rep, n, &v);
            rep.push("verdict", v.gorenstein);
            verdict_code(v.gorenstein)
        }
        Command::Shimoda { .. } => {
            if inst.params.len() != 2 {
                return Err(Error::WrongDimension { expected: 2, got: d });
            }
            let s = shimoda_check(&inst.ring, &inst.params[0], &inst.params[1])?;
            report::shimoda_report(&mut rep, &s);
            rep.push("verdict", s.verdict);
            verdict_code(s.verdict)
        }
        Command::Buchsbaum { assert_buchsbaum, .. } => {
            let b = buchsbaum_criterion(&inst.ring, &inst.params, *assert_buchsbaum, cli.rmax)?;
            report::buchsbaum_report(&mut rep, &b);
            rep.push("verdict", b.verdict);
            verdict_code(b.verdict)
        }
        Command::Invariants { .. } => {
            let inv = depth_and_type(&inst.ring)?;
            report::invariants_report(&mut rep, &inv);
            if inv.dim > 0 {
                rep.push("e_m", multiplicity(&inst.ring.maximal_ideal())?);
                if inst.params.len() as i64 == d {
                    rep.push("e_q", multiplicity(&inst.q())?);
                }
            }
            0
        }
        Command::S2 { .. } => {
            let an = analyze(&inst.ring, &inst.params, cli.seed)?;
            report::s2_report(&mut rep, &r, &an);
            0
        }
        Command::Examples { .. } => unreachable!(),
    };
    Ok((code, rep.to_string()))
}
