//! `cga`: build a homogeneous geometric object from a point file and
//! report its 3D data, print the blade product table, or run the oracle
//! self-check.
//!
//! Exit codes: 0 success, 1 degenerate configuration or failed check,
//! 2 usage or parse error.

mod points;
mod report;
mod selfcheck;

use clap::{Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use cga::algebra::{null_blade_name, null_blade_order};
use cga::{extract_point, Circle, ConformalPoint, Line, Multivector, Plane, PointPair, Sphere,
    Tolerance, Vec3};
use report::Report;

#[derive(Parser)]
#[command(
    name = "cga",
    version,
    about = "Inspect conformal geometric objects built from point files"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct an object from a point file and report its 3D data
    Inspect {
        /// Object kind to construct
        #[arg(value_enum)]
        kind: Kind,
        /// Point file: one `x y z` line per point; `#` starts a comment
        #[arg(long)]
        points: PathBuf,
        /// Print the report as JSON
        #[arg(long)]
        json: bool,
        /// Relative tolerance for zero and degeneracy decisions
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Print the 32 x 32 blade product table in null-basis names
    Table,
    /// Run the oracle agreement suites
    Selfcheck {
        /// Seed for the reproducible random instances
        #[arg(long, default_value_t = 271828)]
        seed: u64,
        /// Instances per suite
        #[arg(long, default_value_t = 1000)]
        iters: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Point,
    Pair,
    Line,
    Circle,
    Plane,
    Sphere,
}

impl Kind {
    fn arity(self) -> usize {
        match self {
            Kind::Point => 1,
            Kind::Pair | Kind::Line => 2,
            Kind::Circle | Kind::Plane => 3,
            Kind::Sphere => 4,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Kind::Point => "point",
            Kind::Pair => "pair",
            Kind::Line => "line",
            Kind::Circle => "circle",
            Kind::Plane => "plane",
            Kind::Sphere => "sphere",
        }
    }
}

/// Failures mapped onto exit codes: usage/parse problems exit 2,
/// degenerate or imaginary configurations exit 1.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Degenerate(String),
}

impl From<cga::ObjectError> for Failure {
    fn from(err: cga::ObjectError) -> Self {
        Failure::Degenerate(err.to_string())
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Degenerate(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Inspect {
            kind,
            points,
            json,
            tol,
        } => inspect(kind, &points, json, tol),
        Command::Table => {
            print_table();
            Ok(())
        }
        Command::Selfcheck { seed, iters } => {
            if selfcheck::run(seed, iters) {
                Ok(())
            } else {
                Err(Failure::Degenerate("self-check failed".to_string()))
            }
        }
    }
}

fn inspect(kind: Kind, path: &Path, json: bool, tol: Option<f64>) -> Result<(), Failure> {
    let tol = match tol {
        None => Tolerance::default(),
        Some(rel) if rel > 0.0 && rel.is_finite() => Tolerance::new(rel),
        Some(rel) => {
            return Err(Failure::Usage(format!(
                "--tol must be a positive real, got {rel}"
            )))
        }
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let pts = points::parse_points(&text)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    if pts.len() != kind.arity() {
        return Err(Failure::Usage(format!(
            "a {} needs exactly {} points, the file has {}",
            kind.name(),
            kind.arity(),
            pts.len()
        )));
    }

    let report = build_report(kind, &pts, tol)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&report.json()).expect("serializable"));
    } else {
        print!("{}", report.plain());
    }
    Ok(())
}

fn build_report(kind: Kind, pts: &[Vec3], tol: Tolerance) -> Result<Report, Failure> {
    let embedded: Vec<ConformalPoint> = pts.iter().copied().map(ConformalPoint::embed).collect();
    let report = match kind {
        Kind::Point => {
            let position = extract_point(embedded[0].multivector(), tol)?;
            Report::new("point", embedded[0].multivector(), tol).vector("position", position)
        }
        Kind::Pair => {
            let pair = PointPair::through(&embedded[0], &embedded[1], tol)?;
            let (data, _) = pair.split(tol)?;
            Report::new("pair", pair.multivector(), tol)
                .vector("p1", data.p1)
                .vector("p2", data.p2)
        }
        Kind::Line => {
            let line = Line::through(&embedded[0], &embedded[1], tol)?;
            let data = line.data(tol)?;
            Report::new("line", line.multivector(), tol)
                .vector("direction", data.d)
                .bivector("moment", data.m, tol)
        }
        Kind::Circle => {
            let circle = Circle::through(&embedded[0], &embedded[1], &embedded[2], tol)?;
            let data = circle.data(tol)?;
            Report::new("circle", circle.multivector(), tol)
                .bivector("plane", data.ic, tol)
                .vector("center", data.c)
                .number("radius", data.r)
        }
        Kind::Plane => {
            let plane = Plane::through(&embedded[0], &embedded[1], &embedded[2], tol)?;
            let data = plane.data(tol)?;
            Report::new("plane", plane.multivector(), tol)
                .bivector("plane", data.ip, tol)
                .vector("location", data.d)
        }
        Kind::Sphere => {
            let sphere = Sphere::through(
                &embedded[0],
                &embedded[1],
                &embedded[2],
                &embedded[3],
                tol,
            )?;
            let data = sphere.data(tol)?;
            Report::new("sphere", sphere.multivector(), tol)
                .vector("center", data.c)
                .number("radius", data.r)
        }
    };
    Ok(report)
}

fn print_table() {
    use std::io::Write;
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let order = null_blade_order();
    for left in order {
        for right in order {
            let product = null_blade(left).geometric(&null_blade(right));
            let line = format!(
                "{} * {} = {}",
                null_blade_name(left),
                null_blade_name(right),
                product
            );
            // Stop quietly when the reader goes away (e.g. piped to head).
            if writeln!(out, "{line}").is_err() {
                return;
            }
        }
    }
    let _ = out.flush();
}

fn null_blade(mask: u8) -> Multivector {
    let mut coeffs = [0.0; 32];
    coeffs[mask as usize] = 1.0;
    Multivector::from_null_coeffs(&coeffs)
}
