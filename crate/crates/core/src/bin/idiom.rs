use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use idiom::assembly::{AssemblyFrame, DEFAULT_CAP};
use idiom::format::{emit_lattice, parse_lattice, parse_nucleus_spec, NucleusSpec};
use idiom::goldie::goldie_nucleus;
use idiom::quotient::QuotientIdiom;
use idiom::report::{Format, Report};
use idiom::{corpus, reproduce, Error, Lattice};

/// Nuclei, division sets and the Goldie nucleus on finite modular lattices.
///
/// FILE is a lattice file or `corpus:NAME` for a built-in lattice.
#[derive(Parser)]
#[command(name = "idiom", version)]
struct Cli {
    /// Largest lattice whose nuclei are enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the lattice and the modular, distributive and Boolean laws.
    Check { file: String },
    /// List every nucleus.
    Nuclei {
        file: String,
        #[arg(long)]
        count_only: bool,
    },
    /// Summarise the assembly N(A), or print it as a lattice file.
    Assembly {
        file: String,
        #[arg(long)]
        emit_lattice: bool,
    },
    /// The Goldie nucleus and its sets.
    Goldie {
        file: String,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
    },
    /// The quotient idiom of a nucleus given as `chi a b`, `xi a b`, `zeta`
    /// or a table `x↦y, ...`.
    Quotients {
        file: String,
        #[arg(long)]
        nucleus: String,
    },
    /// Compare a worked example with its published listings.
    Reproduce { name: String },
    /// Full report.
    Report {
        file: String,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Json,
    Dot,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Format {
        match f {
            OutFormat::Text => Format::Text,
            OutFormat::Json => Format::Json,
            OutFormat::Dot => Format::Dot,
        }
    }
}

/// Exit status for a failed command.
enum Failure {
    /// A law or a listing did not hold.
    Mismatch(String),
    /// Bad input or arguments.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

fn load(file: &str) -> Result<Lattice, Failure> {
    if let Some(name) = file.strip_prefix("corpus:") {
        return corpus::get(name).ok_or_else(|| {
            Failure::Usage(format!(
                "no corpus lattice `{name}`; available: {}",
                corpus::names().join(", ")
            ))
        });
    }
    let text = fs::read_to_string(file).map_err(|e| Failure::Usage(format!("{file}: {e}")))?;
    parse_lattice(&text).map_err(|e| Failure::Usage(format!("{file}: {e}")))
}

fn run(cli: Cli) -> Result<String, Failure> {
    let cap = cli.cap;
    let mut out = String::new();
    match cli.command {
        Command::Check { file } => {
            let l = load(&file)?;
            let r = l.validate_idiom();
            writeln!(out, "lattice: {} ({} elements)", l.name(), l.size()).unwrap();
            writeln!(out, "modular: {}", r.is_modular).unwrap();
            writeln!(out, "distributive: {}", r.is_distributive).unwrap();
            writeln!(out, "boolean: {}", r.is_boolean).unwrap();
            if let Some(v) = r.first_violation {
                writeln!(out, "first violation: {}", v.describe(&l)).unwrap();
            }
            if !r.is_modular {
                return Err(Failure::Mismatch(out));
            }
        }
        Command::Nuclei { file, count_only } => {
            let l = load(&file)?;
            let frame = AssemblyFrame::with_cap(&l, cap)?;
            if count_only {
                writeln!(out, "{}", frame.len()).unwrap();
            } else {
                for j in frame.nuclei() {
                    writeln!(out, "{}", j.display(&l)).unwrap();
                }
            }
        }
        Command::Assembly {
            file,
            emit_lattice: emit,
        } => {
            let l = load(&file)?;
            let frame = AssemblyFrame::with_cap(&l, cap)?;
            let n = frame.as_lattice();
            if emit {
                out.push_str(&emit_lattice(&n));
            } else {
                let r = n.validate_idiom();
                writeln!(out, "nuclei: {}", frame.len()).unwrap();
                writeln!(out, "distributive: {}", r.is_distributive).unwrap();
                writeln!(out, "boolean: {}", r.is_boolean).unwrap();
                if !r.is_distributive {
                    return Err(Failure::Mismatch(out));
                }
            }
        }
        Command::Goldie { file, format } | Command::Report { file, format } => {
            let l = load(&file)?;
            let r = Report::build(&l, cap)?;
            out.push_str(&r.render(&l, format.into())?);
        }
        Command::Quotients { file, nucleus } => {
            let l = load(&file)?;
            let spec = parse_nucleus_spec(&l, &nucleus)?;
            let j = match spec {
                NucleusSpec::Table(j) => j,
                other => {
                    let frame = AssemblyFrame::with_cap(&l, cap)?;
                    match other {
                        NucleusSpec::Chi(iv) => frame.chi_of(iv).clone(),
                        NucleusSpec::Xi(iv) => frame.xi_interval(iv.lo, iv.hi)?,
                        _ => goldie_nucleus(&frame)?.zeta,
                    }
                }
            };
            let q = QuotientIdiom::new(&l, &j);
            writeln!(out, "# {}", j.display(&l)).unwrap();
            out.push_str(&emit_lattice(q.lattice()));
            writeln!(out, "# interval  Q_j  Sat_j").unwrap();
            for iv in l.intervals().nontrivial() {
                let qi = q.interval_of_quotients(iv);
                let sat: Vec<&str> = q
                    .saturated_elements(iv)
                    .iter()
                    .map(|&x| l.label(x))
                    .collect();
                writeln!(
                    out,
                    "# {}  {}  {{{}}}",
                    iv.display(&l),
                    qi.display(q.lattice()),
                    sat.join(",")
                )
                .unwrap();
            }
        }
        Command::Reproduce { name } => {
            let r = reproduce::reproduce(&name)?;
            out.push_str(&r.render());
            if !r.passed() {
                return Err(Failure::Mismatch(out));
            }
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
