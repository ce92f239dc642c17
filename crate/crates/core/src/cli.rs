//! Command-line front end.
//!
//! Exit codes: 0 success (and "equivalent" for `equiv`), 1 "not equivalent", 2 usage or input
//! errors, 3 cap or length errors, 4 validation errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::analysis::{blowup_experiment, size_report};
use crate::document::{load, LoadError, OrderDocument};
use crate::error::Error;
use crate::formula::{parse, DEFAULT_CAP};
use crate::orders::{classes_of, equivalent, Kind, LevelOrder, Order};
use crate::revision::{
    revise_level_lexicographically, revise_level_naturally, revise_lex_history,
    revise_natural_history,
};
use crate::translate::{normalization_problem, normalize_level, translate, TranslateOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_EQUIVALENT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_VALIDATION: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "doxastic",
    version,
    about = "Connected preorders over propositional models"
)]
struct Cli {
    /// Largest alphabet whose model space may be enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    max_vars: usize,

    /// Skip the preorder check on explicit orders.
    #[arg(long, global = true)]
    no_validate: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Explicit,
    Level,
    Lexicographic,
    Natural,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Explicit => Kind::Explicit,
            KindArg::Level => Kind::Level,
            KindArg::Lexicographic => Kind::Lexicographic,
            KindArg::Natural => Kind::Natural,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RevisionOp {
    Natural,
    Lex,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Load an order and print its sizes.
    Check { file: PathBuf },
    /// Translate an order into another representation.
    Translate {
        #[arg(long, value_enum)]
        to: KindArg,
        /// Drop inconsistent levels when translating lexicographic orders.
        #[arg(long)]
        prune: bool,
        /// Ignore natural-history formulae without models instead of failing.
        #[arg(long)]
        lenient: bool,
        file: PathBuf,
    },
    /// Exit 0 if the two orders are equivalent, 1 if not.
    Equiv { first: PathBuf, second: PathBuf },
    /// Print the equivalence classes, most plausible first.
    Classes { file: PathBuf },
    /// Print whether the first model is less than or equal to the second.
    Leq {
        file: PathBuf,
        first: String,
        second: String,
    },
    /// Revise an order by a formula.
    Revise {
        #[arg(long, value_enum)]
        op: RevisionOp,
        #[arg(long)]
        formula: String,
        /// Drop inconsistent levels after a lexicographic revision of a level order.
        #[arg(long)]
        prune: bool,
        file: PathBuf,
    },
    /// Class counts and level translation lengths of [x1, ..., xn].
    Blowup {
        #[arg(long)]
        max_n: usize,
        /// One JSON record per line.
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Usage(String),
    Order(Error),
    Output(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Order(e)
    }
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        match e {
            LoadError::Io(..) => Failure::Usage(e.to_string()),
            LoadError::Order(e) => Failure::Order(e),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Output(e)
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Syntax { .. }
        | Error::UndeclaredVariable(_)
        | Error::InvalidAlphabet(_)
        | Error::InvalidModel { .. }
        | Error::Document { .. } => EXIT_USAGE,
        Error::CapExceeded { .. } | Error::LengthCapExceeded { .. } => EXIT_CAP,
        Error::AlphabetMismatch { .. }
        | Error::NotPreorder(_)
        | Error::NotNormalized(_)
        | Error::InconsistentRevision(_)
        | Error::Invariant(_) => EXIT_VALIDATION,
    }
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(message)) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
        Err(Failure::Order(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(Failure::Output(e)) => {
            let _ = writeln!(err, "error: cannot write output: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let open = |path: &Path| load(path, cli.max_vars, !cli.no_validate);
    match &cli.command {
        Command::Check { file } => {
            let o = open(file)?;
            let report = size_report(&o)?;
            writeln!(out, "kind: {}", report.kind)?;
            writeln!(out, "vars: {}", o.alphabet())?;
            match &o {
                Order::Explicit(_) => writeln!(out, "pairs: {}", report.pairs)?,
                _ => {
                    writeln!(out, "formulae: {}", report.formulae)?;
                    writeln!(out, "nodes: {}", report.nodes)?;
                }
            }
            if let Order::Level(l) = &o {
                let normalized = normalization_problem(l)?.is_none();
                writeln!(out, "normalized: {}", if normalized { "yes" } else { "no" })?;
            }
            writeln!(out, "classes: {}", report.classes)?;
            Ok(EXIT_OK)
        }
        Command::Translate {
            to,
            prune,
            lenient,
            file,
        } => {
            let o = open(file)?;
            let options = TranslateOptions {
                prune: *prune,
                lenient: *lenient,
                length_cap: None,
            };
            let translated = translate(&o, (*to).into(), options)?;
            write!(
                out,
                "{}",
                OrderDocument::from_order(&translated).serialize()
            )?;
            Ok(EXIT_OK)
        }
        Command::Equiv { first, second } => {
            let (a, b) = (open(first)?, open(second)?);
            if equivalent(&a, &b)? {
                writeln!(out, "equivalent")?;
                Ok(EXIT_OK)
            } else {
                writeln!(out, "not equivalent")?;
                Ok(EXIT_NOT_EQUIVALENT)
            }
        }
        Command::Classes { file } => {
            let o = open(file)?;
            for class in classes_of(&o)?.to_strings() {
                writeln!(out, "{}", class.join(" "))?;
            }
            Ok(EXIT_OK)
        }
        Command::Leq {
            file,
            first,
            second,
        } => {
            let o = open(file)?;
            let i = o.alphabet().parse_model(first)?;
            let j = o.alphabet().parse_model(second)?;
            writeln!(out, "{}", o.leq(i, j)?)?;
            Ok(EXIT_OK)
        }
        Command::Revise {
            op,
            formula,
            prune,
            file,
        } => {
            let o = open(file)?;
            let f = parse(formula, o.alphabet())?;
            let revised: Order = match (op, &o) {
                (RevisionOp::Natural, Order::Natural(n)) => revise_natural_history(n, &f)?.into(),
                (RevisionOp::Lex, Order::Lexicographic(l)) => revise_lex_history(l, &f)?.into(),
                (op, other) => {
                    let level = as_partition(other)?;
                    match op {
                        RevisionOp::Natural => revise_level_naturally(&level, &f)?.into(),
                        RevisionOp::Lex => {
                            revise_level_lexicographically(&level, &f, *prune)?.into()
                        }
                    }
                }
            };
            write!(out, "{}", OrderDocument::from_order(&revised).serialize())?;
            Ok(EXIT_OK)
        }
        Command::Blowup { max_n, json } => {
            let rows = blowup_experiment(*max_n)?;
            if *json {
                for row in &rows {
                    let record =
                        serde_json::to_string(row).map_err(|e| Failure::Usage(e.to_string()))?;
                    writeln!(out, "{record}")?;
                }
            } else {
                writeln!(
                    out,
                    "{:>3} {:>9} {:>8} {:>10} {:>10}",
                    "n", "lex_size", "classes", "level_len", "millis"
                )?;
                for row in &rows {
                    writeln!(
                        out,
                        "{:>3} {:>9} {:>8} {:>10} {:>10.3}",
                        row.n, row.lex_size, row.classes, row.level_len, row.millis
                    )?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

/// Level form of any order, normalized so that it partitions the model space.
fn as_partition(o: &Order) -> Result<LevelOrder, Error> {
    let level = match translate(
        o,
        Kind::Level,
        TranslateOptions {
            prune: true,
            ..Default::default()
        },
    )? {
        Order::Level(l) => l,
        _ => unreachable!("translated to level"),
    };
    normalize_level(&level)
}
