//! Command surface of the `groversim` binary.
//!
//! Exit codes: 0 success, 2 usage or validation error, 3 resource cap
//! exceeded (see `GROVERSIM_MAX_QUBITS`), 1 anything else (I/O).

pub mod format;

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::grover::{classical_baseline, run_grover, scan_probabilities, GroverConfig, Iterations};
use crate::oracle::Oracle;
use crate::reversible::ReversibleCircuit;

pub use format::{CircuitDocument, TraceDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "groversim",
    version,
    about = "Quantum search simulator and reversible-logic toolkit",
    after_help = "Exit codes: 0 success, 2 usage/validation, 3 resource cap.\n\
                  GROVERSIM_MAX_QUBITS overrides the qubit cap (default 24)."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run or scan the quantum search
    #[command(subcommand)]
    Grover(GroverCommand),
    /// Monte Carlo of the classical random-guessing search
    Classical(ClassicalArgs),
    /// Verify, run or invert a reversible circuit document
    #[command(subcommand)]
    Circuit(CircuitCommand),
}

#[derive(Debug, Subcommand)]
pub enum GroverCommand {
    /// Run the search, measure, and optionally dump a step trace
    Run(RunArgs),
    /// Exact success probability after each iteration count
    Scan(ScanArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IterationsArg {
    Fixed(u64),
    Auto,
}

impl FromStr for IterationsArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("auto") {
            return Ok(IterationsArg::Auto);
        }
        s.parse()
            .map(IterationsArg::Fixed)
            .map_err(|_| format!("expected a non-negative integer or 'auto', got '{s}'"))
    }
}

impl From<IterationsArg> for Iterations {
    fn from(a: IterationsArg) -> Self {
        match a {
            IterationsArg::Fixed(t) => Iterations::Fixed(t),
            IterationsArg::Auto => Iterations::Auto,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScanFormat {
    Csv,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Number of qubits n (N = 2^n states)
    #[arg(long)]
    pub qubits: u32,
    /// Marked states, comma separated
    #[arg(long, value_delimiter = ',', required = true)]
    pub marked: Vec<usize>,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[command(flatten)]
    pub search: SearchArgs,
    /// Iteration count, or 'auto' for the optimum
    #[arg(long, default_value = "auto")]
    pub iterations: IterationsArg,
    /// Measurement seed
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write every intermediate state to this JSON trace file
    #[arg(long)]
    pub trace: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub search: SearchArgs,
    /// Largest iteration count T; rows t = 0..=T
    #[arg(long)]
    pub max_iterations: u64,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: ScanFormat,
}

#[derive(Debug, Args)]
pub struct ClassicalArgs {
    /// Number of states N
    #[arg(long)]
    pub size: usize,
    /// Marked states, comma separated
    #[arg(long, value_delimiter = ',', required = true)]
    pub marked: Vec<usize>,
    /// Guesses per trial
    #[arg(long)]
    pub iterations: u64,
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum CircuitCommand {
    /// Exhaustively check that the circuit is a bijection
    Verify { path: PathBuf },
    /// Run the circuit on one input
    Run {
        path: PathBuf,
        /// Input bits, leftmost character is wire 0 (the top line)
        #[arg(long)]
        input: String,
    },
    /// Write the inverse circuit (gate list reversed)
    Invert {
        path: PathBuf,
        /// Output file; stdout when omitted
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

/// Failure of a command, already mapped to its exit code.
#[derive(Debug)]
pub struct CommandError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Resource(_) => EXIT_RESOURCE,
            Error::Internal(_) => EXIT_FAILURE,
            Error::Domain(_) | Error::State(_) | Error::Parse(_) => EXIT_USAGE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl CommandError {
    fn usage(msg: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: msg.into(),
        }
    }

    fn io(path: &Path, e: std::io::Error) -> Self {
        Self {
            code: EXIT_FAILURE,
            message: format!("{}: {e}", path.display()),
        }
    }
}

type CmdResult = Result<(), CommandError>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

pub fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match command {
        Command::Grover(GroverCommand::Run(a)) => grover_run(a, out, err),
        Command::Grover(GroverCommand::Scan(a)) => grover_scan(a, out),
        Command::Classical(a) => classical(a, out),
        Command::Circuit(c) => circuit(c, out),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> CmdResult {
    out.write_all(text.as_bytes()).map_err(|e| CommandError {
        code: EXIT_FAILURE,
        message: format!("writing output: {e}"),
    })
}

fn build_oracle(search: &SearchArgs) -> Result<Oracle, CommandError> {
    Ok(Oracle::from_marked(
        search.qubits,
        search.marked.iter().copied(),
    )?)
}

fn grover_run(a: RunArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let oracle = build_oracle(&a.search)?;
    let config = GroverConfig::new(a.search.qubits, oracle, a.iterations.into(), a.seed)
        .with_trace(a.trace.is_some());
    let trace = run_grover(&config)?;
    if trace.degenerate {
        let _ = writeln!(
            err,
            "warning: at least half of the states are marked; amplification may not help"
        );
    }
    if let Some(path) = &a.trace {
        let doc = TraceDocument::from_trace(&trace);
        fs::write(path, doc.to_json() + "\n").map_err(|e| CommandError::io(path, e))?;
    }
    let text = match a.format {
        OutputFormat::Text => format!(
            "outcome: {}\nsuccess_probability: {}\niterations: {}\noracle_evals: {}\n",
            trace.outcome, trace.success_probability, trace.eta, trace.oracle_evals
        ),
        OutputFormat::Json => {
            let v = serde_json::json!({
                "outcome": trace.outcome,
                "success_probability": trace.success_probability,
                "iterations": trace.eta,
                "oracle_evals": trace.oracle_evals,
                "degenerate": trace.degenerate,
                "rng": { "algorithm": trace.rng_algorithm, "seed": trace.seed },
            });
            format!("{v}\n")
        }
    };
    emit(out, &text)
}

fn grover_scan(a: ScanArgs, out: &mut dyn Write) -> CmdResult {
    if a.max_iterations == 0 {
        return Err(CommandError::usage("--max-iterations must be at least 1"));
    }
    let oracle = build_oracle(&a.search)?;
    let config = GroverConfig::new(a.search.qubits, oracle, Iterations::Fixed(0), 0);
    let series = scan_probabilities(&config, a.max_iterations)?;
    match a.format {
        ScanFormat::Csv => emit(out, &format::scan_to_csv(&series)),
    }
}

fn classical(a: ClassicalArgs, out: &mut dyn Write) -> CmdResult {
    let marked: BTreeSet<_> = a.marked.iter().copied().collect();
    let report = classical_baseline(a.size, &marked, a.iterations, a.trials, a.seed)?;
    emit(
        out,
        &format!(
            "empirical: {}\nanalytic: {}\nsuccesses: {}\ntrials: {}\n",
            report.empirical, report.analytic, report.successes, report.trials
        ),
    )
}

fn load_circuit(path: &Path) -> Result<ReversibleCircuit, CommandError> {
    let text = fs::read_to_string(path).map_err(|e| CommandError {
        code: EXIT_USAGE,
        message: format!("{}: {e}", path.display()),
    })?;
    format::parse_circuit(&text)
        .map_err(|e| CommandError::usage(format!("{}: {e}", path.display())))
}

/// `"110"` -> `[true, true, false]`, wire 0 first.
pub fn parse_bitstring(s: &str) -> Result<Vec<bool>, Error> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(Error::Domain(format!(
                "input must contain only 0 and 1, found '{other}'"
            ))),
        })
        .collect()
}

pub fn format_bitstring(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn circuit(c: CircuitCommand, out: &mut dyn Write) -> CmdResult {
    match c {
        CircuitCommand::Verify { path } => {
            let circuit = load_circuit(&path)?;
            let ok = circuit.is_reversible()?;
            emit(out, &format!("reversible: {ok}\n"))
        }
        CircuitCommand::Run { path, input } => {
            let circuit = load_circuit(&path)?;
            let bits = parse_bitstring(&input)?;
            let output = circuit.run(&bits)?;
            emit(out, &format!("{}\n", format_bitstring(&output)))
        }
        CircuitCommand::Invert { path, output } => {
            let circuit = load_circuit(&path)?;
            let doc = CircuitDocument::from_circuit(&circuit.inverse()).to_json() + "\n";
            match output {
                Some(dest) => fs::write(&dest, doc).map_err(|e| CommandError::io(&dest, e)),
                None => emit(out, &doc),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("groversim").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn iterations_arg() {
        assert_eq!(
            "auto".parse::<IterationsArg>().unwrap(),
            IterationsArg::Auto
        );
        assert_eq!(
            "3".parse::<IterationsArg>().unwrap(),
            IterationsArg::Fixed(3)
        );
        assert!("-1".parse::<IterationsArg>().is_err());
    }

    #[test]
    fn bitstrings() {
        assert_eq!(parse_bitstring("110").unwrap(), [true, true, false]);
        assert!(parse_bitstring("12").is_err());
        assert_eq!(format_bitstring(&[true, false, true]), "101");
    }

    #[test]
    fn run_text_output() {
        let (code, out, _) = call(&[
            "grover",
            "run",
            "--qubits",
            "2",
            "--marked",
            "2",
            "--iterations",
            "1",
        ]);
        assert_eq!(code, 0);
        assert!(out.starts_with("outcome: 2\n"), "{out}");
        assert!(out.contains("oracle_evals: 1"));
    }

    #[test]
    fn run_json_output() {
        let (code, out, _) = call(&[
            "grover", "run", "--qubits", "3", "--marked", "5", "--format", "json",
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["iterations"], 2);
        assert_eq!(v["rng"]["algorithm"], "ChaCha8Rng");
    }

    #[test]
    fn validation_errors_exit_two() {
        let (code, _, err) = call(&["grover", "run", "--qubits", "1", "--marked", "2"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("marked index out of range"), "{err}");

        let (code, _, _) = call(&[
            "grover",
            "scan",
            "--qubits",
            "2",
            "--marked",
            "2",
            "--max-iterations",
            "0",
        ]);
        assert_eq!(code, EXIT_USAGE);

        let (code, _, _) = call(&["grover", "run", "--qubits", "2"]);
        assert_eq!(code, EXIT_USAGE);

        let (code, _, _) = call(&["bogus"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn resource_cap_exits_three() {
        let (code, _, err) = call(&["grover", "run", "--qubits", "30", "--marked", "1"]);
        assert_eq!(code, EXIT_RESOURCE, "{err}");
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("GROVERSIM_MAX_QUBITS"));
    }

    #[test]
    fn classical_zero_iterations() {
        let (code, out, _) = call(&[
            "classical",
            "--size",
            "4",
            "--marked",
            "2",
            "--iterations",
            "0",
            "--trials",
            "10",
        ]);
        assert_eq!(code, 0);
        assert!(
            out.contains("empirical: 0\n") && out.contains("analytic: 0\n"),
            "{out}"
        );
    }
}
