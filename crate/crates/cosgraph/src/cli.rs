use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use cosgraph_core::catalog::ExampleId;

use crate::commands::{self, Caps};
use crate::error::{exit, CliError, Result};
use crate::format::{parse_edge_list, GeneratorFile};
use crate::report::{OutputMode, VerificationReport};

#[derive(Debug, Parser)]
#[command(
    name = "cosgraph",
    version,
    about = "Coset graphs, Cayley normality and the 13-valent catalog"
)]
pub struct CliConfig {
    /// Emit the report as JSON with sorted keys.
    #[arg(long, global = true)]
    pub json: bool,

    /// Largest group order any enumeration may reach.
    #[arg(long, global = true, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub enum_cap: u64,

    /// Largest coset index enumerated.
    #[arg(long, global = true, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_index: u64,

    /// Largest graph handed to the automorphism search.
    #[arg(long, global = true, default_value_t = 512, value_parser = clap::value_parser!(u64).range(1..))]
    pub vertex_cap: u64,

    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,

    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExampleTarget {
    A39,
    A117,
    A208,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Replay one bundled example, or all three.
    VerifyExample { target: ExampleTarget },
    /// Build and check every soluble vertex stabilizer.
    CheckStabTable,
    /// Check |T|/|K| = |Ω| for every row of the primitive groups table.
    CheckTable1,
    /// Build Cos(G, H, g) from a `coset` directive.
    Coset { file: PathBuf },
    /// Build Cay(R, S) from a `cayley` directive and test normality.
    Cayley { file: PathBuf },
    /// Form the normal quotient named by a `quotient` directive.
    Quotient { file: PathBuf },
    /// Scan G for feasible elements as named by a `search` directive.
    Search { file: PathBuf },
    /// Automorphism group of an edge-list graph.
    Aut { file: PathBuf },
}

impl CliConfig {
    pub fn caps(&self) -> Caps {
        Caps {
            enumeration: self.enum_cap,
            max_index: self.max_index,
            vertices: self.vertex_cap as usize,
        }
    }

    pub fn mode(&self) -> OutputMode {
        if self.json {
            OutputMode::Json
        } else {
            OutputMode::Human
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn generator_file(path: &Path) -> Result<GeneratorFile> {
    GeneratorFile::parse(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn execute(config: &CliConfig) -> Result<VerificationReport> {
    let caps = config.caps();
    match &config.command {
        Command::VerifyExample { target } => match target {
            ExampleTarget::A39 => commands::verify_example(ExampleId::A39, &caps),
            ExampleTarget::A117 => commands::verify_example(ExampleId::A117, &caps),
            ExampleTarget::A208 => commands::verify_example(ExampleId::A208, &caps),
            ExampleTarget::All => commands::verify_all(&caps),
        },
        Command::CheckStabTable => commands::check_stab_table(),
        Command::CheckTable1 => commands::check_table1(),
        Command::Coset { file } => commands::coset(&generator_file(file)?, &caps),
        Command::Cayley { file } => commands::cayley(&generator_file(file)?, &caps),
        Command::Quotient { file } => {
            let base = file.parent().unwrap_or(Path::new("."));
            commands::quotient(&generator_file(file)?, base, &caps)
        }
        Command::Search { file } => commands::search(&generator_file(file)?, &caps),
        Command::Aut { file } => {
            let graph =
                parse_edge_list(&read(file)?).map_err(|e| CliError::Input(format!("{}: {e}", file.display())))?;
            commands::aut(&graph, &caps)
        }
    }
}

/// Parses `args` (program name first), runs the command and writes the
/// report; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let config = match CliConfig::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::INPUT_ERROR } else { exit::PASS };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let echo = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    let start = Instant::now();
    let outcome = match config.workers {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n as usize).build() {
            Ok(pool) => pool.install(|| execute(&config)),
            Err(e) => Err(CliError::Input(format!("worker pool: {e}"))),
        },
        None => execute(&config),
    };
    match outcome {
        Ok(mut report) => {
            report.command = echo;
            if config.timing {
                report.timing_ms = Some(start.elapsed().as_millis() as u64);
            }
            let _ = out.write_all(report.render(config.mode()).as_bytes());
            if report.passed() {
                exit::PASS
            } else {
                exit::CHECK_FAILED
            }
        }
        Err(e) => {
            let code = e.exit_code();
            if config.json {
                let value = serde_json::json!({ "command": echo, "error": e.to_string(), "exit_code": code });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&value).unwrap());
            }
            let _ = writeln!(err, "error: {e}");
            code
        }
    }
}
