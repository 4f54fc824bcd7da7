//! Command-line front end for `sommerfeld-core`.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 domain error,
//! 3 `validate` found a discrepancy not on the known-errata list.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use sommerfeld_core::io::{
    render_orbit_svg, write_parameter_column, write_parameter_table, write_parameters_json,
    write_trajectory_csv, RenderOptions, TableFormat, TableRow,
};
use sommerfeld_core::{
    classify, errata_report, has_new_discrepancies, orbit_parameters, sample_trajectory,
    validate_all, Error, IonSpec, QuantumNumbers, Tolerances,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_DISCREPANCY: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "sommerfeld",
    version,
    about = "Relativistic Bohr-Sommerfeld orbits of hydrogen-like ions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Orbit parameters of one ion.
    Params {
        #[command(flatten)]
        ion: IonArgs,
        #[command(flatten)]
        format: FormatArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Parameter table over a range of charges, in ascending Z.
    Table {
        #[arg(long, default_value_t = 92)]
        z_from: u32,
        #[arg(long, default_value_t = 137)]
        z_to: u32,
        #[command(flatten)]
        qn: QnArgs,
        #[command(flatten)]
        format: FormatArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Sampled trajectory as CSV (theta,r,x,y).
    Orbit {
        #[command(flatten)]
        ion: IonArgs,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        revolutions: u32,
        #[arg(long, default_value_t = 1024, value_parser = samples_parser)]
        samples: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Rosette as a standalone SVG document.
    Render {
        #[command(flatten)]
        ion: IonArgs,
        /// Radial periods to draw; by default enough for the perihelion to turn once.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        revolutions: Option<u32>,
        #[arg(long, default_value_t = 1024, value_parser = samples_parser)]
        samples: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Field-strength tier of a transuranium charge (92..=137).
    Classify {
        #[arg(long)]
        z: u32,
    },
    /// Recompute every printed table cell and report errata.
    Validate {
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Debug, Args)]
struct QnArgs {
    #[arg(long = "nr", default_value_t = 1)]
    n_r: u32,
    #[arg(long = "ntheta", default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    n_theta: u32,
}

#[derive(Debug, Args)]
struct IonArgs {
    #[arg(long)]
    z: u32,
    #[command(flatten)]
    qn: QnArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct FormatArgs {
    #[arg(long, value_enum, default_value_t = FormatArg::Text, conflicts_with = "json")]
    format: FormatArg,
    /// Same as `--format json`.
    #[arg(long)]
    json: bool,
}

impl FormatArgs {
    fn resolve(&self) -> TableFormat {
        if self.json {
            return TableFormat::Json;
        }
        match self.format {
            FormatArg::Text => TableFormat::Text,
            FormatArg::Csv => TableFormat::Csv,
            FormatArg::Json => TableFormat::Json,
        }
    }
}

#[derive(Debug, Args)]
struct OutArgs {
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn samples_parser(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|e| format!("{e}"))?;
    if n < sommerfeld_core::geometry::MIN_SAMPLES_PER_REV {
        return Err(format!(
            "must be at least {}",
            sommerfeld_core::geometry::MIN_SAMPLES_PER_REV
        ));
    }
    Ok(n)
}

impl QnArgs {
    fn ion(&self, z: u32) -> Result<IonSpec, Error> {
        IonSpec::new(z, QuantumNumbers::new(self.n_r, self.n_theta)?)
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Domain(_) | Error::NotFound(_) | Error::Degenerate | Error::NonFinite(_) => {
            EXIT_DOMAIN
        }
        Error::Argument(_) | Error::Resolution { .. } | Error::Io(_) => EXIT_USAGE,
    }
}

/// Parses `argv` (program name first) and runs the command, writing results
/// to `out` unless `--out` redirects them, and diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn with_sink(
    target: &OutArgs,
    stdout: &mut dyn Write,
    body: impl FnOnce(&mut dyn Write) -> Result<(), Error>,
) -> Result<(), Error> {
    match &target.out {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            body(&mut file)?;
            file.flush()?;
            Ok(())
        }
        None => body(stdout),
    }
}

fn dispatch(command: Command, stdout: &mut dyn Write) -> Result<i32, Error> {
    match command {
        Command::Params { ion, format, out } => {
            let row = TableRow::new(orbit_parameters(ion.qn.ion(ion.z)?));
            with_sink(&out, stdout, |sink| match format.resolve() {
                TableFormat::Text => write_parameter_column(&row, sink),
                TableFormat::Json => write_parameters_json(&row, sink),
                TableFormat::Csv => write_parameter_table(&[row], TableFormat::Csv, sink),
            })?;
        }
        Command::Table {
            z_from,
            z_to,
            qn,
            format,
            out,
        } => {
            if z_from > z_to {
                return Err(Error::Argument(format!(
                    "--z-from {z_from} exceeds --z-to {z_to}"
                )));
            }
            let rows = (z_from..=z_to)
                .map(|z| Ok(TableRow::new(orbit_parameters(qn.ion(z)?))))
                .collect::<Result<Vec<_>, Error>>()?;
            with_sink(&out, stdout, |sink| {
                write_parameter_table(&rows, format.resolve(), sink)
            })?;
        }
        Command::Orbit {
            ion,
            revolutions,
            samples,
            out,
        } => {
            let params = orbit_parameters(ion.qn.ion(ion.z)?);
            let poly = sample_trajectory(&params, revolutions, samples)?;
            with_sink(&out, stdout, |sink| write_trajectory_csv(&poly, sink))?;
        }
        Command::Render {
            ion,
            revolutions,
            samples,
            out,
        } => {
            let params = orbit_parameters(ion.qn.ion(ion.z)?);
            let opts = RenderOptions {
                revolutions,
                ..RenderOptions::default()
            };
            with_sink(&out, stdout, |sink| {
                render_orbit_svg(&params, &opts, samples, sink)
            })?;
        }
        Command::Classify { z } => {
            let class = classify(z)?;
            writeln!(stdout, "{class}")?;
        }
        Command::Validate { out } => {
            let results = validate_all(&Tolerances::default());
            let report = errata_report(&results);
            with_sink(&out, stdout, |sink| Ok(sink.write_all(report.as_bytes())?))?;
            if has_new_discrepancies(&results) {
                return Ok(EXIT_DISCREPANCY);
            }
        }
    }
    stdout.flush()?;
    Ok(EXIT_OK)
}

/// Runs against the process's standard streams.
pub fn main_with_std_streams() -> i32 {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut err = io::stderr();
    let code = run(std::env::args_os(), &mut out, &mut err);
    if out.flush().is_err() {
        return EXIT_USAGE;
    }
    code
}
