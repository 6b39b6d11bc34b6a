use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use legtwist_core::moves::{random_walk, OrientedFront, WalkBudget};
use legtwist_core::render::{render, Format};
use legtwist_core::report::{AtlasReport, ClassesReport, InvariantReport, RulingReport};
use legtwist_core::rulings::ruling_signature;
use legtwist_core::twist::{classes_at_max_tb, generate_front, DEFAULT_RADIUS};
use legtwist_core::{FrontDiagram, TwistWord};

#[derive(Parser)]
#[command(
    name = "legtwist",
    version,
    about = "Legendrian fronts, normal rulings and twist knots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants and rulings of a `.front` file.
    #[command(subcommand)]
    Front(FrontCmd),
    /// Twist-knot classification tables and fronts.
    #[command(subcommand)]
    Twist(TwistCmd),
    /// Random Legendrian isotopy moves.
    #[command(subcommand)]
    Moves(MovesCmd),
    /// Draw a front as ASCII art or SVG.
    Render {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "ascii")]
        format: RenderFormat,
        /// Output file; standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum FrontCmd {
    /// tb, rot, components, cusps and crossings as JSON.
    Info { file: PathBuf },
    /// ρ-graded normal rulings as JSON.
    Rulings {
        file: PathBuf,
        /// A grading ρ, or `all` for every ρ in the ruling signature.
        #[arg(long, default_value = "1", value_parser = parse_rho)]
        rho: Rho,
    },
}

#[derive(Subcommand)]
enum TwistCmd {
    /// Maximal classes, mountain range and transverse row for K_m.
    Atlas {
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, default_value_t = DEFAULT_RADIUS)]
        radius: usize,
        /// Print an aligned text table instead of JSON.
        #[arg(long)]
        table: bool,
    },
    /// Write the maximal front of K_m for a word.
    Front {
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        /// Letters `Z+ Z- S+ S- X`, space separated; defaults to the word of
        /// the first canonical class.
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Number of Legendrian classes after stabilizing a maximal class.
    Classes {
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, default_value_t = 0)]
        pos: usize,
        #[arg(long, default_value_t = 0)]
        neg: usize,
    },
}

#[derive(Subcommand)]
enum MovesCmd {
    /// Apply random isotopy moves; prints the new front and the move trace.
    Shuffle {
        file: PathBuf,
        #[arg(long, default_value_t = 100)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write the resulting front here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderFormat {
    Ascii,
    Svg,
}

#[derive(Clone, Copy)]
enum Rho {
    All,
    One(u64),
}

fn parse_rho(s: &str) -> Result<Rho, String> {
    if s == "all" {
        return Ok(Rho::All);
    }
    s.parse()
        .map(Rho::One)
        .map_err(|_| format!("expected a non-negative integer or `all`, got `{s}`"))
}

fn read_front(path: &Path) -> Result<FrontDiagram> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    FrontDiagram::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn print_json(v: &impl serde::Serialize) -> Result<()> {
    emit(&format!("{}\n", serde_json::to_string_pretty(v)?))
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Front(FrontCmd::Info { file }) => {
            let f = read_front(&file)?;
            print_json(&InvariantReport::of(&f))
        }
        Command::Front(FrontCmd::Rulings { file, rho }) => {
            let f = read_front(&file)?;
            f.require_knot()?;
            match rho {
                Rho::One(rho) => print_json(&RulingReport::of(&f, rho)?),
                Rho::All => {
                    let sig = ruling_signature(&f)?;
                    let reports = sig
                        .rhos()
                        .into_iter()
                        .map(|rho| RulingReport::of(&f, rho))
                        .collect::<Result<Vec<_>, _>>()?;
                    print_json(&json!({
                        "rot": f.rot_default()?,
                        "signature": sig.counts(),
                        "rulings": reports,
                    }))
                }
            }
        }
        Command::Twist(TwistCmd::Atlas { m, radius, table }) => {
            let a = AtlasReport::new(m, radius)?;
            if table {
                emit(&a.to_table())
            } else {
                print_json(&a)
            }
        }
        Command::Twist(TwistCmd::Front { m, word, out }) => {
            let w = match word {
                Some(text) => TwistWord::parse(m, &text)?,
                None => TwistWord::from_normal_form(&classes_at_max_tb(m)?.1[0]),
            };
            let f = generate_front(m, &w)?;
            let text = format!("# K_{m} word: {w}\n{f}\n");
            fs::write(&out, text).with_context(|| format!("writing {}", out.display()))?;
            print_json(&InvariantReport::of(&f))
        }
        Command::Twist(TwistCmd::Classes { m, pos, neg }) => {
            print_json(&ClassesReport::new(m, pos, neg)?)
        }
        Command::Moves(MovesCmd::Shuffle {
            file,
            steps,
            seed,
            out,
        }) => {
            let f = read_front(&file)?;
            let start = OrientedFront::new(f.clone())?;
            let (end, trace) = random_walk(&start, steps, seed, WalkBudget::around(&f));
            if let Some(out) = out {
                fs::write(&out, format!("{}\n", end.front()))
                    .with_context(|| format!("writing {}", out.display()))?;
            }
            print_json(&json!({
                "front": end.front().to_string(),
                "tb": end.tb(),
                "rot": end.rot(),
                "steps": steps,
                "seed": seed,
                "trace": trace,
            }))
        }
        Command::Render { file, format, out } => {
            let f = read_front(&file)?;
            let fmt = match format {
                RenderFormat::Ascii => Format::Ascii,
                RenderFormat::Svg => Format::Svg,
            };
            let pic = render(&f, fmt);
            match out {
                Some(out) => {
                    fs::write(&out, pic).with_context(|| format!("writing {}", out.display()))?
                }
                None => emit(&pic)?,
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
