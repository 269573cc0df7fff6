use std::io::Write;
use std::process::ExitCode;

use axial_core::eigen::{check_fusion, check_primitivity, decompose};
use axial_core::quotient::{preset_6a2, preset_highwater};
use axial_core::verify::{self, IdentityReport};
use axial_core::{mul, DihedralMap, Element, Window};
use clap::{Parser, Subcommand, ValueEnum};

mod render;

use render::{Format, Renderer};

#[derive(Debug, Parser)]
#[command(
    name = "axial",
    version,
    about = "Exact computations in the axial algebra over GF(5)"
)]
struct Cli {
    /// Output format; check commands default to json, everything else to text.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Print coefficients in -2..=2 instead of 0..=4.
    #[arg(long, global = true)]
    signed: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Product of two elements.
    Mul {
        #[arg(value_parser = parse_element, allow_hyphen_values = true)]
        left: Element,
        #[arg(value_parser = parse_element, allow_hyphen_values = true)]
        right: Element,
    },
    /// Image of an element under a dihedral automorphism.
    Act {
        /// tau0, f, theta, sigma:<i> or tau:<j>.
        #[arg(long, value_parser = parse_map, allow_hyphen_values = true)]
        map: DihedralMap,
        #[arg(value_parser = parse_element, allow_hyphen_values = true)]
        element: Element,
    },
    /// Eigendecomposition with respect to a[0].
    Eig {
        #[arg(value_parser = parse_element, allow_hyphen_values = true)]
        element: Element,
    },
    /// Run a checker; exits with 1 if it fails.
    Check {
        #[command(subcommand)]
        check: Check,
    },
    /// Ideal closure of a quotient preset in a window.
    Quotient {
        #[arg(long, value_enum)]
        preset: Preset,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        window: u64,
    },
    /// Multiplication table of a range of axes and the sigma symbols their
    /// products produce.
    Table {
        /// Inclusive range `A..B`, for example `-2..3`.
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        axes: (i64, i64),
    },
}

#[derive(Debug, Subcommand)]
enum Check {
    Fusion {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        window: u64,
    },
    Identities {
        #[arg(long, value_enum, default_value = "all")]
        set: IdentitySet,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_index: u64,
    },
    Primitivity {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        window: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum IdentitySet {
    Transition,
    Useful,
    Uv,
    Section3,
    Generation,
    All,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Preset {
    Highwater,
    #[value(name = "6a2")]
    SixA2,
}

fn parse_element(s: &str) -> Result<Element, String> {
    s.parse().map_err(|e: axial_core::ParseError| e.to_string())
}

fn parse_map(s: &str) -> Result<DihedralMap, String> {
    s.parse().map_err(|e: axial_core::Error| e.to_string())
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got `{s}`"))?;
    let a: i64 = a
        .trim()
        .parse()
        .map_err(|_| format!("bad lower bound `{a}`"))?;
    let b: i64 = b
        .trim()
        .parse()
        .map_err(|_| format!("bad upper bound `{b}`"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

fn identity_reports(set: IdentitySet, n: u64) -> Vec<IdentityReport> {
    match set {
        IdentitySet::Transition => vec![verify::check_transition(n)],
        IdentitySet::Useful => vec![verify::check_usefulformula(n)],
        IdentitySet::Uv => vec![verify::check_products_uv(n)],
        IdentitySet::Section3 => vec![verify::check_section3(n)],
        IdentitySet::Generation => vec![verify::check_generation(n)],
        IdentitySet::All => verify::check_all(&verify::VerifyConfig::uniform(n)),
    }
}

/// Output text and whether every check passed.
fn run(cli: &Cli) -> Result<(String, bool), axial_core::Error> {
    let is_check = matches!(cli.command, Command::Check { .. });
    let default = if is_check { Format::Json } else { Format::Text };
    let r = Renderer::new(cli.format.unwrap_or(default), cli.signed);
    Ok(match &cli.command {
        Command::Mul { left, right } => (r.element(&mul(left, right)), true),
        Command::Act { map, element } => (r.element(&map.apply(element)), true),
        Command::Eig { element } => (r.decomposition(&decompose(element)), true),
        Command::Check { check } => match check {
            Check::Fusion { window } => {
                let report = check_fusion(*window);
                (r.fusion(&report), report.pass)
            }
            Check::Primitivity { window } => {
                let report = check_primitivity(*window);
                (r.primitivity(&report), report.pass)
            }
            Check::Identities { set, max_index } => {
                let reports = identity_reports(*set, *max_index);
                (r.identities(&reports), reports.iter().all(|x| x.pass))
            }
        },
        Command::Quotient { preset, window } => {
            let w = Window::new(*window)?;
            let (name, q) = match preset {
                Preset::Highwater => ("highwater", preset_highwater(w)?),
                Preset::SixA2 => ("6a2", preset_6a2(w)?),
            };
            (r.quotient(name, &q), true)
        }
        Command::Table { axes } => (r.table(axes.0, axes.1), true),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, pass)) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
