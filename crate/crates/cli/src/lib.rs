//! Front end of the `wlstab` binary.

use std::ffi::OsString;
use std::io::{BufRead, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use wlstab_core::{
    benzene_stack, dynkin, moebius_ladder, preprocess_recolor, verify_coherent, ColorMatrix, Engine,
};

pub mod format;

pub use format::{emit_result, parse_input, write_input, ParsedInput};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Core(#[from] wlstab_core::Error),
}

#[derive(Parser, Debug)]
#[command(name = "wlstab", version, about = "Coherent closure of colored graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the stable coloring of a matrix.
    Close(CloseArgs),
    /// Write a family member in the input format.
    Gen(GenArgs),
    /// Check whether a matrix is already coherent.
    Verify(InputArgs),
    /// Close a range of family members and print CSV.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Input file; standard input when omitted.
    input: Option<std::path::PathBuf>,
}

#[derive(Args, Debug)]
struct CloseArgs {
    #[arg(long, value_enum, default_value_t = EngineArg::Stabil)]
    engine: EngineArg,
    /// Refine by valencies before closing.
    #[arg(long)]
    preprocess: bool,
    /// Print the structure constants.
    #[arg(long)]
    constants: bool,
    /// Check the coherence axioms on the result.
    #[arg(long)]
    verify: bool,
    #[command(flatten)]
    input: InputArgs,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// k for benzene and moebius, n for dynkin.
    #[arg(long)]
    param: usize,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Largest parameter.
    #[arg(long)]
    max: usize,
    /// Smallest parameter; defaults to the smallest valid one.
    #[arg(long)]
    min: Option<usize>,
    #[arg(long, value_enum, default_value_t = EngineArg::Stabil)]
    engine: EngineArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EngineArg {
    Stabil,
    Stabcol,
    Symbolic,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Stabil => Engine::Stabil,
            EngineArg::Stabcol => Engine::Stabcol,
            EngineArg::Symbolic => Engine::Symbolic,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Benzene,
    Moebius,
    Dynkin,
}

impl FamilyArg {
    fn min_param(self) -> usize {
        match self {
            FamilyArg::Benzene => 1,
            FamilyArg::Moebius => 3,
            FamilyArg::Dynkin => 4,
        }
    }

    fn generate(self, param: usize) -> wlstab_core::Result<ColorMatrix> {
        match self {
            FamilyArg::Benzene => benzene_stack(param),
            FamilyArg::Moebius => moebius_ladder(param),
            FamilyArg::Dynkin => dynkin(param),
        }
    }

    fn name(self) -> &'static str {
        match self {
            FamilyArg::Benzene => "benzene",
            FamilyArg::Moebius => "moebius",
            FamilyArg::Dynkin => "dynkin",
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn BufRead,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Io<'_> {
    fn read_input(&mut self, args: &InputArgs) -> Result<ParsedInput, CliError> {
        let text = match &args.input {
            Some(path) => std::fs::read_to_string(path)?,
            None => {
                let mut text = String::new();
                self.stdin.read_to_string(&mut text)?;
                text
            }
        };
        let parsed = parse_input(&text)?;
        if let Some(w) = parsed.warning() {
            writeln!(self.stderr, "warning: {w}")?;
        }
        Ok(parsed)
    }
}

/// Runs the command line `args` (without the program name) and returns the
/// exit status.
pub fn run_with_io<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("wlstab")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(stderr, "{text}")
            } else {
                write!(stdout, "{text}")
            };
            return e.exit_code();
        }
    };
    let mut io = Io {
        stdin,
        stdout,
        stderr,
    };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.stderr, "error: {e}");
            1
        }
    }
}

/// [`run_with_io`] on the process streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdin = std::io::stdin();
    let mut stdin = stdin.lock();
    let mut stdout = std::io::stdout().lock();
    let mut stderr = std::io::stderr().lock();
    run_with_io(args, &mut stdin, &mut stdout, &mut stderr)
}

fn dispatch(command: Command, io: &mut Io<'_>) -> Result<i32, CliError> {
    match command {
        Command::Close(args) => {
            let mut m = io.read_input(&args.input)?.matrix;
            if args.preprocess {
                m = preprocess_recolor(&m);
            }
            let res = Engine::from(args.engine).close(&m, args.constants);
            write!(io.stdout, "{}", emit_result(&res, args.constants))?;
            if args.verify {
                let report = verify_coherent(&res.stable);
                match report.violations.first() {
                    None => writeln!(io.stdout, "verify=ok")?,
                    Some(v) => {
                        writeln!(io.stdout, "verify=failed {v}")?;
                        return Ok(1);
                    }
                }
            }
            Ok(0)
        }
        Command::Gen(args) => {
            let m = args.family.generate(args.param)?;
            write!(io.stdout, "{}", write_input(&m))?;
            Ok(0)
        }
        Command::Verify(args) => {
            // colors are reported with the values used in the input
            let parsed = io.read_input(&args)?;
            let value = |c: u32| parsed.input_values[c as usize];
            let report = verify_coherent(&parsed.matrix);
            if report.is_ok() {
                writeln!(io.stdout, "verify=ok")?;
                for (a, b) in report.transpose_pairs() {
                    writeln!(io.stdout, "transpose {} {}", value(a), value(b))?;
                }
                Ok(0)
            } else {
                writeln!(io.stdout, "verify=failed")?;
                for v in &report.violations {
                    writeln!(
                        io.stdout,
                        "axiom {} fails for color {} at ({}, {})",
                        v.axiom,
                        value(v.color),
                        v.witness.0,
                        v.witness.1
                    )?;
                }
                Ok(1)
            }
        }
        Command::Bench(args) => {
            let min = args.min.unwrap_or(args.family.min_param());
            let engine = Engine::from(args.engine);
            writeln!(io.stdout, "family,param,n,cells,colors,iterations,millis")?;
            for param in min..=args.max {
                let m = args.family.generate(param)?;
                let start = Instant::now();
                let res = engine.close(&m, false);
                let millis = start.elapsed().as_secs_f64() * 1e3;
                writeln!(
                    io.stdout,
                    "{},{param},{},{},{},{},{millis:.3}",
                    args.family.name(),
                    m.n(),
                    res.cells,
                    res.rank,
                    res.iterations
                )?;
            }
            Ok(0)
        }
    }
}
