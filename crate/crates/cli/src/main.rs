use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use liederive::biderive::BiderMode;
use liederive::chevalley::ClassicalType;
use liederive_cli::commands::{self, Task};
use liederive_cli::files::{AlgebraFile, FieldSpec};
use liederive_cli::report::ReportFile;
use liederive_cli::suite::{self, Suite, CRITERIA};
use liederive_cli::{thread_cap, CliError, Exit};

#[derive(Parser)]
#[command(
    name = "liederive",
    version,
    about = "Exact derivations, biderivations and post-Lie structures of Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a classical simple Lie algebra in a Chevalley basis.
    Build {
        /// Cartan type: A, B, C or D.
        type_letter: ClassicalType,
        rank: usize,
        /// rational, Q, prime:p or Fp.
        field: FieldSpec,
        /// Output file (stdout if omitted).
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Load an algebra file and check the Jacobi identity.
    Validate { path: PathBuf },
    /// Run one task on an algebra file.
    Solve {
        path: PathBuf,
        /// der, bider:full, bider:sym, bider:skew, radical or postlie.
        task: Task,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Omit the timing field.
        #[arg(long)]
        no_timing: bool,
    },
    /// Windowed biderivation problem on a truncated Witt algebra over Q.
    Witt {
        n_vars: usize,
        /// Degree cap N of the truncation.
        deg_cap: u32,
        /// Degree cap N_in of the arguments.
        inner_cap: u32,
        /// full, sym or skew.
        mode: BiderMode,
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long)]
        no_timing: bool,
    },
    /// Run the verification suite.
    Verify {
        /// classical, controls, machinery, postlie, witt, infrastructure or all.
        suite: Suite,
        #[arg(long, default_value_t = 2)]
        max_rank: usize,
        /// Comma-separated fields for the classical suite.
        #[arg(long, value_delimiter = ',', default_value = "Q,F5,F7")]
        fields: Vec<FieldSpec>,
        /// Rewrite the golden files instead of comparing against them.
        #[arg(long)]
        bless: bool,
        #[arg(long)]
        golden_dir: Option<PathBuf>,
        /// Write a JSON summary here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::io(path, e)),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::new(Exit::Io, e.to_string())),
    }
}

fn emit_report(mut report: ReportFile, out: Option<&PathBuf>, no_timing: bool) -> Result<(), CliError> {
    if no_timing {
        report.timing_ms = None;
    }
    emit(&report.to_text(), out)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Build {
            type_letter,
            rank,
            field,
            out,
        } => emit(&commands::build(type_letter, rank, field)?.to_text(), out.as_ref()),
        Command::Validate { path } => {
            let loaded = commands::load_valid(&AlgebraFile::read(&path)?)?;
            println!("{}", commands::describe(&loaded.algebra));
            Ok(())
        }
        Command::Solve {
            path,
            task,
            out,
            no_timing,
        } => {
            let loaded = commands::load_valid(&AlgebraFile::read(&path)?)?;
            emit_report(commands::solve(&loaded.algebra, task)?, out.as_ref(), no_timing)
        }
        Command::Witt {
            n_vars,
            deg_cap,
            inner_cap,
            mode,
            out,
            no_timing,
        } => emit_report(
            commands::witt(n_vars, deg_cap, inner_cap, mode)?,
            out.as_ref(),
            no_timing,
        ),
        Command::Verify {
            suite,
            max_rank,
            fields,
            bless,
            golden_dir,
            json,
        } => {
            let opts = suite::Options {
                max_rank,
                fields,
                golden_dir: golden_dir.unwrap_or_else(suite::default_golden_dir),
                bless,
                ..Default::default()
            };
            let report = suite::run(suite, &opts)?;
            for check in &report.checks {
                println!("{check}");
            }
            for s in &report.skipped {
                println!("SKIP {s}");
            }
            for (c, title) in CRITERIA {
                if let Some(ok) = report.criterion_passed(c) {
                    println!("criterion {c} {}: {title}", if ok { "PASS" } else { "FAIL" });
                }
            }
            if let Some(path) = json {
                let text = liederive_cli::to_json_text(&report);
                std::fs::write(&path, text).map_err(|e| CliError::io(&path, e))?;
            }
            if report.passed() {
                Ok(())
            } else {
                let failed = report.failures().map(|c| format!("[{}] {}", c.criterion, c.name));
                Err(CliError::new(
                    Exit::CheckFailed,
                    format!("failed checks: {}", failed.collect::<Vec<_>>().join("; ")),
                ))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                Exit::BadArgs as u8
            } else {
                Exit::Ok as u8
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = thread_cap() {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("liederive: cannot set thread count: {e}");
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("liederive: {}", e.message);
            ExitCode::from(e.exit as u8)
        }
    }
}
