//! Command-line front end: parse a presentation, run the polytope
//! pipelines, and emit text, JSON, or SVG reports.
//!
//! Exit codes: 0 success, 1 mathematical failure (nonexistent difference,
//! cross-check failure, …), 2 usage or parse error.

mod selftest;
mod svg;

use clap::{Parser, Subcommand, ValueEnum};
use thurston_fox::report::{BallReport, NormReport, SymmetryReport};
use thurston_fox::{
    check_conjecture, compute, Covector, Error, MarkedPolytope, Method, NormData, Presentation,
    Word,
};

#[derive(Parser)]
#[command(
    name = "thurston-fox",
    about = "Marked polytopes, Thurston norm and fibered classes of two-generator one-relator presentations",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum MethodArg {
    Walk,
    Fox,
    #[default]
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Walk => Method::Walk,
            MethodArg::Fox => Method::Fox,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute the marked polytope of a presentation.
    Polytope {
        /// Relator word, e.g. "xyXY" or "x^2yx^-1".
        relator: String,
        /// Construction to run; "both" cross-checks walk against Fox.
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        /// Emit the polytope as canonical JSON.
        #[arg(long)]
        json: bool,
        /// Write an SVG rendering to this path.
        #[arg(long, value_name = "PATH")]
        svg: Option<String>,
    },
    /// Evaluate the Thurston norm on covectors.
    Norm {
        relator: String,
        /// Covector as comma-separated integers matching the Betti number,
        /// e.g. "1,0"; repeatable.
        #[arg(long, required = true)]
        phi: Vec<String>,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        #[arg(long)]
        json: bool,
    },
    /// Decide fiberedness of cohomology classes.
    Fibered {
        relator: String,
        #[arg(long, required = true)]
        phi: Vec<String>,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        #[arg(long)]
        json: bool,
    },
    /// Compute the unit ball of the norm with fibered-face flags.
    Ball {
        relator: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        #[arg(long)]
        json: bool,
    },
    /// Check the component-duality identity at opposite vertex pairs.
    Symmetry {
        relator: String,
        /// Number of boundary tori (1 or 2) fixing the sign; both signs
        /// are tried when omitted.
        #[arg(long)]
        boundary: Option<u8>,
        /// Maximum number of relator substitutions in the search.
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run the bundled randomized self-test corpus.
    Selftest {
        /// RNG seed; defaults to the THURSTON_FOX_SEED environment
        /// variable, then to a fixed constant.
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::UnknownCharacter { .. }
        | Error::MalformedExponent { .. }
        | Error::ZeroExponent { .. }
        | Error::EmptyRelator
        | Error::RankMismatch { .. } => 2,
        _ => 1,
    }
}

fn parse_presentation(relator: &str) -> Result<Presentation, Error> {
    Presentation::new(Word::parse(relator)?)
}

fn parse_phi(text: &str, betti: u8) -> Result<Covector, Error> {
    let parts: Vec<&str> = text.split(',').collect();
    let mut values = Vec::with_capacity(parts.len());
    for part in &parts {
        values.push(part.trim().parse::<i64>().map_err(|_| Error::MalformedExponent {
            pos: 0,
        })?);
    }
    match (betti, values.as_slice()) {
        (1, [a]) => Ok(Covector::One(*a)),
        (2, [a, b]) => Ok(Covector::Two(*a, *b)),
        _ => Err(Error::RankMismatch { left: values.len() as u8, right: betti }),
    }
}

fn print_polytope(polytope: &MarkedPolytope) {
    println!("vertices:");
    for (i, (v, &m)) in polytope.vertices().iter().zip(polytope.marks()).enumerate() {
        println!("  {i}: {v}{}", if m { "  marked" } else { "" });
    }
}

fn print_data_header(data: &NormData) {
    println!("relator: {}", data.presentation.relator());
    println!("betti: {}", data.betti);
    println!("provenance: {}", data.provenance.as_str());
    if let Some((simple, moves)) = &data.nielsen {
        println!("simple relator: {} ({} Nielsen moves)", simple.relator(), moves.len());
    }
}

fn run() -> Result<(), Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Polytope { relator, method, json, svg } => {
            let p = parse_presentation(&relator)?;
            let data = compute(&p, method.into())?;
            if let Some(path) = svg {
                let rendered = svg::render(&data.polytope);
                if let Err(e) = std::fs::write(&path, rendered) {
                    eprintln!("error: cannot write {path}: {e}");
                    std::process::exit(2);
                }
            }
            if json {
                println!("{}", serde_json::to_string(&data.polytope).expect("serialize"));
            } else {
                print_data_header(&data);
                print_polytope(&data.polytope);
            }
        }
        Command::Norm { relator, phi, method, json } => {
            let p = parse_presentation(&relator)?;
            let data = compute(&p, method.into())?;
            let covectors = phi
                .iter()
                .map(|s| parse_phi(s, data.betti))
                .collect::<Result<Vec<_>, _>>()?;
            let report = NormReport::new(&data, &covectors)?;
            if json {
                println!("{}", serde_json::to_string(&report).expect("serialize"));
            } else {
                print_data_header(&data);
                for q in &report.queries {
                    let phi_text: Vec<String> = q.phi.iter().map(i64::to_string).collect();
                    let norm = if q.norm[1] == 1 {
                        q.norm[0].to_string()
                    } else {
                        format!("{}/{}", q.norm[0], q.norm[1])
                    };
                    println!("phi = ({}): norm = {norm}", phi_text.join(","));
                }
            }
        }
        Command::Fibered { relator, phi, method, json } => {
            let p = parse_presentation(&relator)?;
            let data = compute(&p, method.into())?;
            let covectors = phi
                .iter()
                .map(|s| parse_phi(s, data.betti))
                .collect::<Result<Vec<_>, _>>()?;
            let report = NormReport::new(&data, &covectors)?;
            if json {
                println!("{}", serde_json::to_string(&report).expect("serialize"));
            } else {
                print_data_header(&data);
                for q in &report.queries {
                    let phi_text: Vec<String> = q.phi.iter().map(i64::to_string).collect();
                    println!("phi = ({}): {}", phi_text.join(","), q.fibered);
                }
            }
        }
        Command::Ball { relator, method, json } => {
            let p = parse_presentation(&relator)?;
            let data = compute(&p, method.into())?;
            let ball = data.unit_ball()?;
            let report = BallReport::new(&p, data.betti, &ball);
            if json {
                println!("{}", serde_json::to_string(&report).expect("serialize"));
            } else {
                print_data_header(&data);
                println!("ball shape: {}", report.shape);
                if let Some(f) = report.fibered_everywhere {
                    println!("norm is identically zero; fibered everywhere: {f}");
                }
                for (i, facet) in report.facets.iter().enumerate() {
                    let c: Vec<String> = facet
                        .constraint
                        .iter()
                        .map(|[n, d]| if *d == 1 { n.to_string() } else { format!("{n}/{d}") })
                        .collect();
                    println!(
                        "  face {i}: <({}), phi> = 1{}",
                        c.join(", "),
                        if facet.fibered { "  fibered" } else { "" }
                    );
                }
            }
        }
        Command::Symmetry { relator, boundary, depth, json } => {
            if let Some(b) = boundary {
                if b != 1 && b != 2 {
                    return Err(Error::RankMismatch { left: b, right: 2 });
                }
            }
            let p = parse_presentation(&relator)?;
            let outcome = check_conjecture(&p, boundary, depth)?;
            let report = SymmetryReport::new(&p, boundary, depth, &outcome);
            if json {
                println!("{}", serde_json::to_string(&report).expect("serialize"));
            } else {
                println!("relator: {}", p.relator());
                println!(
                    "opposite pairing unique: cross {}, within {}",
                    report.cross_pairing_unique, report.within_pairing_unique
                );
                for check in &report.checks {
                    let fmt_pt = |v: &Vec<[i64; 2]>| {
                        let parts: Vec<String> = v
                            .iter()
                            .map(|[n, d]| if *d == 1 { n.to_string() } else { format!("{n}/{d}") })
                            .collect();
                        format!("({})", parts.join(", "))
                    };
                    println!(
                        "  [{}] v = {}, w = {}, sign {:+}: {}",
                        check.variant,
                        fmt_pt(&check.v),
                        fmt_pt(&check.w),
                        check.sign_tried,
                        check.verdict
                    );
                }
                println!(
                    "verified {} of {} checks",
                    outcome.verified_count(),
                    report.checks.len()
                );
            }
        }
        Command::Selftest { seed } => {
            let seed = seed
                .or_else(|| {
                    std::env::var("THURSTON_FOX_SEED")
                        .ok()
                        .and_then(|s| s.parse().ok())
                })
                .unwrap_or(0xF0C5);
            if !selftest::run(seed) {
                return Err(Error::PipelineDisagreement);
            }
        }
    }
    Ok(())
}

fn main() {
    match run() {
        Ok(()) => {}
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(exit_code(&err));
        }
    }
}
