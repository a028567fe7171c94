use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};

use tkk::run::{run, Command, Config, Target};
use tkk_core::algebra::Kind;
use tkk_core::uce::{Theorem, DEFAULT_MAX_WEDGE_DIM};

#[derive(Parser)]
#[command(name = "tkk", version, about = "Exact checks for TKK algebras and central extensions of sl_n(A)")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Built-in base name or path to a JSON spec file.
    #[arg(long, global = true)]
    base: Option<String>,
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Export file for `build`; report file for the other commands.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed the TKK relation space randomly before the full enumeration.
    #[arg(long, global = true)]
    fast: bool,
    /// Largest exterior square the UCE builder will form.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_WEDGE_DIM)]
    max_dim: usize,
    /// Validate the input under this kind instead of the declared one.
    #[arg(long, global = true, value_enum)]
    kind: Option<KindArg>,
    #[arg(long, global = true, default_value_t = 3)]
    d_max: usize,
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the identity checkers for the declared kind.
    Check,
    Build {
        #[arg(value_enum)]
        target: TargetArg,
    },
    /// Second homology of a Lie algebra, or of sl_n(A) for associative A.
    H2,
    /// First cyclic homology of a unital associative algebra.
    Hc1,
    Verify {
        #[arg(value_enum)]
        theorem: TheoremArg,
    },
    /// Elementary relations on the canonical lifts in uce(sl_n(A)).
    Steinberg,
    /// H2 of sl2 over truncated free algebras k<x,y>, degrees 1..=d-max.
    Growth,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Associative,
    Lie,
    Jordan,
    Untagged,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Sl,
    Plus,
    Matrix,
    Tkk,
    Uce,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    Thm32,
    Thm41,
}

fn config(cli: &Cli) -> Config {
    let command = match &cli.command {
        Cmd::Check => Command::Check,
        Cmd::Build { target } => Command::Build(match target {
            TargetArg::Sl => Target::Sl,
            TargetArg::Plus => Target::Plus,
            TargetArg::Matrix => Target::Matrix,
            TargetArg::Tkk => Target::Tkk,
            TargetArg::Uce => Target::Uce,
        }),
        Cmd::H2 => Command::H2,
        Cmd::Hc1 => Command::Hc1,
        Cmd::Verify { theorem } => Command::Verify(match theorem {
            TheoremArg::Thm32 => Theorem::Thm32,
            TheoremArg::Thm41 => Theorem::Thm41,
        }),
        Cmd::Steinberg => Command::Steinberg,
        Cmd::Growth => Command::Growth,
    };
    let mut cfg = Config::new(command);
    cfg.base = cli.base.clone();
    cfg.n = cli.n;
    cfg.out = cli.out.clone();
    cfg.fast = cli.fast;
    cfg.max_dim = cli.max_dim;
    cfg.kind = cli.kind.map(|k| match k {
        KindArg::Associative => Kind::Associative,
        KindArg::Lie => Kind::Lie,
        KindArg::Jordan => Kind::Jordan,
        KindArg::Untagged => Kind::Untagged,
    });
    cfg.d_max = cli.d_max;
    cfg
}

fn main_inner(cli: &Cli) -> Result<bool> {
    let cfg = config(cli);
    let report = run(&cfg)?;
    let text = match cli.format {
        Format::Text => report.text(),
        Format::Machine => report.machine(),
    };
    match (&cfg.command, &cli.out) {
        (Command::Build(_), _) | (_, None) => std::io::stdout().write_all(text.as_bytes())?,
        (_, Some(path)) => std::fs::write(path, text)?,
    }
    Ok(report.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    };
    env_logger::Builder::new().filter_level(level).format_timestamp(None).init();
    match main_inner(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
