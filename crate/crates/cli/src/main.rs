use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use selfinv_cli::commands::{
    cmd_classify, cmd_convert, cmd_disc, cmd_hankel, cmd_powersums, cmd_roots, cmd_sample_w,
    cmd_sweep, Direction,
};
use selfinv_cli::{CliError, CliResult};

/// Exact discriminants of self-inversive binary forms and their real
/// counterparts. Forms travel as JSON on stdin/stdout; see the README for
/// the schemas.
#[derive(Parser)]
#[command(name = "selfinv", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    AToReal,
    RealToA,
    BToReal,
    RealToB,
}

impl From<DirectionArg> for Direction {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::AToReal => Direction::AToReal,
            DirectionArg::RealToA => Direction::RealToA,
            DirectionArg::BToReal => Direction::BToReal,
            DirectionArg::RealToB => Direction::RealToB,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Convert between self-inversive forms and real binary forms.
    Convert {
        #[arg(value_enum)]
        direction: DirectionArg,
    },
    /// Discriminant report for a monic form.
    Disc {
        /// Also run the independent resultant oracle and check the scale
        /// identity.
        #[arg(long)]
        oracle: bool,
        /// Strip (T - U) factors first when the real image has a zero
        /// leading coefficient.
        #[arg(long)]
        deflate: bool,
        /// Tolerance for the floating-point circle-root count.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Dump the power-sum matrix of a monic form.
    Hankel,
    /// Dump the power-sum table of a monic form.
    Powersums,
    /// Roots of the dehomogenized form (complex or real input).
    Roots {
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Circle-root count and the determinant sign law check.
    Classify {
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Evaluate the exact determinant over a coordinate grid into a CSV.
    Sweep {
        /// Destination path of the CSV grid.
        #[arg(long)]
        output: PathBuf,
    },
    /// Monic form with unit-circle roots at the given angles (JSON array).
    SampleW,
}

fn read_stdin() -> CliResult<String> {
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| CliError::Io(format!("cannot read stdin: {e}")))?;
    Ok(buf)
}

fn run(cli: Cli) -> CliResult<Option<String>> {
    let input = read_stdin()?;
    match cli.command {
        Command::Convert { direction } => cmd_convert(&input, direction.into()).map(Some),
        Command::Disc {
            oracle,
            deflate,
            tol,
        } => cmd_disc(&input, oracle, deflate, tol).map(Some),
        Command::Hankel => cmd_hankel(&input).map(Some),
        Command::Powersums => cmd_powersums(&input).map(Some),
        Command::Roots { tol } => cmd_roots(&input, tol).map(Some),
        Command::Classify { tol } => cmd_classify(&input, tol).map(Some),
        Command::Sweep { output } => cmd_sweep(&input, &output).map(|()| None),
        Command::SampleW => cmd_sample_w(&input).map(Some),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Some(output)) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("{err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
