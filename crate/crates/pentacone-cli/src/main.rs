use clap::{Args, Parser, Subcommand};
use pentacone_cli::commands::{self, PlaceConeFlags};
use pentacone_cli::doc::PointSetDocument;
use pentacone_cli::Failure;

/// Implicit conics on five points, quadrics on nine, and placement of five
/// coplanar points on a right circular cone.
#[derive(Parser)]
#[command(name = "pentacone", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArg {
    /// Point-set document (line format or JSON); '-' reads stdin.
    input: String,
    /// Write the result document here instead of stdout.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Conic through five plane points via the pencil of line pairs.
    Conic5 {
        #[command(flatten)]
        io: InputArg,
        /// Also run the six-sub-determinant oracle and report agreement.
        #[arg(long)]
        oracle: bool,
        /// Write an SVG plot of the conic and points.
        #[arg(long)]
        plot: Option<String>,
        /// Marching grid resolution for --plot.
        #[arg(long, default_value_t = 512)]
        resolution: usize,
    },
    /// Quadric through nine space points via complementary plane pairs.
    Quadric9 {
        #[command(flatten)]
        io: InputArg,
        /// Also run the ten-sub-determinant oracle and report agreement.
        #[arg(long)]
        oracle: bool,
        /// Four distinct pair indices (0..9), e.g. --pairing 3,7,8,2.
        #[arg(long, value_delimiter = ',')]
        pairing: Option<Vec<usize>>,
        /// Write an OBJ mesh of the quadric with point markers.
        #[arg(long)]
        mesh: Option<String>,
        /// Marching grid resolution for --mesh.
        #[arg(long, default_value_t = 64)]
        resolution: usize,
    },
    /// Place five coplanar points (first at the origin) on the cone
    /// x^2+y^2-z^2 = 0.
    PlaceCone {
        #[command(flatten)]
        io: InputArg,
        /// RNG seed for the multi-start solver.
        #[arg(long)]
        seed: Option<u64>,
        /// Start budget.
        #[arg(long)]
        max_starts: Option<usize>,
        /// Convergence tolerance on the residual max-norm.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Recover the congruent translated cone from points of the shared
    /// section.
    ConePair {
        #[command(flatten)]
        io: InputArg,
        /// Write an OBJ scene with both cones and the points.
        #[arg(long)]
        mesh: Option<String>,
        /// Marching grid resolution for --mesh.
        #[arg(long, default_value_t = 48)]
        resolution: usize,
    },
    /// Run the built-in fixture suite.
    Selfcheck,
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        use std::io::Read;
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::input(format!("cannot read stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::input(format!("cannot read '{path}': {e}")))
    }
}

fn emit(io: &InputArg, text: &str) -> Result<(), Failure> {
    match &io.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::input(format!("cannot write '{path}': {e}"))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Conic5 {
            io,
            oracle,
            plot,
            resolution,
        } => {
            let doc = PointSetDocument::parse(&read_input(&io.input)?)?;
            let text = commands::conic5(&doc, oracle, plot.as_deref(), resolution)?;
            emit(&io, &text)?;
            Ok(0)
        }
        Command::Quadric9 {
            io,
            oracle,
            pairing,
            mesh,
            resolution,
        } => {
            let doc = PointSetDocument::parse(&read_input(&io.input)?)?;
            let pairing = match pairing {
                Some(v) => Some(<[usize; 4]>::try_from(v).map_err(|_| {
                    Failure::input("--pairing needs exactly four indices".to_string())
                })?),
                None => None,
            };
            let text = commands::quadric9(&doc, oracle, pairing, mesh.as_deref(), resolution)?;
            emit(&io, &text)?;
            Ok(0)
        }
        Command::PlaceCone {
            io,
            seed,
            max_starts,
            tol,
        } => {
            let doc = PointSetDocument::parse(&read_input(&io.input)?)?;
            let flags = PlaceConeFlags {
                seed,
                max_starts,
                tol,
            };
            let (text, complete) = commands::place_cone(&doc, &flags)?;
            emit(&io, &text)?;
            if !complete {
                eprintln!("warning: start budget exhausted before the class count stabilized; results may be partial");
                return Ok(3);
            }
            Ok(0)
        }
        Command::ConePair {
            io,
            mesh,
            resolution,
        } => {
            let doc = PointSetDocument::parse(&read_input(&io.input)?)?;
            let text = commands::cone_pair(&doc, mesh.as_deref(), resolution)?;
            emit(&io, &text)?;
            Ok(0)
        }
        Command::Selfcheck => {
            let (text, ok) = commands::selfcheck();
            print!("{text}");
            Ok(if ok { 0 } else { 2 })
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(f) => {
            eprintln!("error: {f}");
            std::process::exit(f.code);
        }
    }
}
