use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cdmass::physics::DEFAULT_THETAS;
use cdmass::report::{
    cmd_dimension, cmd_inclusion, cmd_mass, cmd_props, cmd_spectrum, cmd_table, MassWhich, RunReport,
};
use cdmass::structure::InclusionMode;
use cdmass::Result;

#[derive(Parser)]
#[command(name = "cdmass", version, about = "Cayley-Dickson spectra and meson mass relations")]
struct Cli {
    /// Also write the JSON report to this file.
    #[arg(long, global = true)]
    json_out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Signed basis multiplication table.
    Table {
        #[arg(long, default_value_t = 3)]
        level: u32,
    },
    /// Identity ladder on random triples.
    Props {
        #[arg(long)]
        level: u32,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Shifted spectrum of one element.
    Spectrum {
        #[arg(long)]
        level: u32,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value = "alternative")]
        mode: InclusionMode,
        /// Cluster tolerance.
        #[arg(long, default_value_t = 1e-7)]
        tol: f64,
    },
    /// Spectral inclusion of both doubling entries.
    Inclusion {
        #[arg(long)]
        level: u32,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value = "alternative")]
        mode: InclusionMode,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 1e-7)]
        tol: f64,
    },
    /// Multiplet size against dim of the quotient by the octonions.
    Dimension {
        /// PLET:LEVEL pairs; the canonical cases when omitted.
        #[arg(long = "case", value_parser = parse_case)]
        cases: Vec<(usize, u32)>,
    },
    /// Meson mass relations.
    Mass {
        /// Meson data file; the shipped table when omitted.
        #[arg(long)]
        data: Option<PathBuf>,
        #[arg(long, default_value = "all")]
        which: MassWhich,
        #[arg(long, default_value_t = 2.0)]
        z: f64,
        /// Angles for the monotonicity check, comma separated.
        #[arg(long, value_delimiter = ',', num_args = 3)]
        thetas: Option<Vec<f64>>,
    },
}

fn parse_case(s: &str) -> std::result::Result<(usize, u32), String> {
    let (p, l) = s.split_once(':').ok_or("expected PLET:LEVEL")?;
    Ok((p.parse().map_err(|e| format!("{e}"))?, l.parse().map_err(|e| format!("{e}"))?))
}

fn run(command: Command) -> Result<RunReport> {
    match command {
        Command::Table { level } => cmd_table(level),
        Command::Props { level, seed, trials, tol } => cmd_props(level, trials, seed, tol),
        Command::Spectrum { level, seed, mode, tol } => cmd_spectrum(level, seed, mode, tol),
        Command::Inclusion { level, seed, mode, trials, tol } => cmd_inclusion(level, mode, trials, seed, tol),
        Command::Dimension { cases } => cmd_dimension(&cases),
        Command::Mass { data, which, z, thetas } => {
            let thetas = thetas.map_or(DEFAULT_THETAS, |t| [t[0], t[1], t[2]]);
            cmd_mass(data.as_deref(), which, z, thetas)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let json = report.to_json();
    print!("{json}");
    eprint!("{}", report.summary());
    if let Some(path) = cli.json_out {
        if let Err(e) = std::fs::write(&path, &json) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    ExitCode::from(report.exit_code() as u8)
}
