use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cubegraph::cube::MetricName;
use cubegraph::gpg::EtaMode;
use cubegraph_cli::{
    analyze, check_graph, distance_array, parse_cube_size, render_check, render_distance_array,
    render_record, render_table, table1, CliError, CliResult, Format, Options, DEFAULT_BUDGET,
};

#[derive(Parser)]
#[command(name = "cubegraph", version, about = "Diameter bounds for Rubik's Cube Cayley graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Maximum BFS size, in coordinate slots or visited vertices.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u128,

    /// ε of the Bollobás–de la Vega upper bound.
    #[arg(long, global = true, default_value_t = 0.0)]
    epsilon: f64,

    /// Origin: a coordinate index for cube metrics, a vertex for graphs.
    #[arg(long, global = true, default_value_t = 0)]
    origin: u128,
}

#[derive(Subcommand)]
enum Command {
    /// Local parameters, bounds and (when enumerable) the diameter of one metric.
    Analyze {
        /// Cube edge length, 2 or 3.
        size: u32,
        metric: MetricName,
        #[arg(long)]
        skip_bfs: bool,
    },
    /// All five supported metrics.
    Table1 {
        #[arg(long)]
        skip_bfs: bool,
    },
    /// Shell counts from the origin.
    DistanceArray { size: u32, metric: MetricName },
    /// Check the lower bound against the diameter of an edge-list graph.
    CheckGraph {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "measured")]
        eta: EtaArg,
    },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum EtaArg {
    Measured,
    One,
}

/// Rendered output, plus the failure to report after writing it.
type Outcome = (String, Option<CliError>);

fn run(cli: Cli) -> CliResult<Outcome> {
    let mut opts = Options {
        budget: cli.budget,
        epsilon: cli.epsilon,
        origin: cli.origin,
        ..Options::default()
    };
    match cli.command {
        Command::Analyze { size, metric, skip_bfs } => {
            opts.skip_bfs = skip_bfs;
            let r = analyze(parse_cube_size(size)?, metric, &opts)?;
            Ok((render_record(&r, cli.format)?, None))
        }
        Command::Table1 { skip_bfs } => {
            opts.skip_bfs = skip_bfs;
            Ok((render_table(&table1(&opts)?, cli.format)?, None))
        }
        Command::DistanceArray { size, metric } => {
            let da = distance_array(parse_cube_size(size)?, metric, &opts)?;
            Ok((render_distance_array(&da, cli.format)?, None))
        }
        Command::CheckGraph { path, eta } => {
            let source = std::fs::read_to_string(&path)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            let origin = usize::try_from(cli.origin)
                .map_err(|_| CliError::Input(format!("origin {} out of range", cli.origin)))?;
            let mode = match eta {
                EtaArg::Measured => EtaMode::Measured,
                EtaArg::One => EtaMode::One,
            };
            let report = check_graph(&source, origin, mode)?;
            let text = render_check(&report, cli.format)?;
            let failure = (!report.pass).then(|| {
                CliError::BoundFailure(format!(
                    "d_min {} exceeds diameter {}",
                    report.d_min.map_or("inf".into(), |d| d.to_string()),
                    report.diameter
                ))
            });
            Ok((text, failure))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let out = cli.out.clone();
    let (text, failure) = match run(cli) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, text) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    match failure {
        Some(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
        None => ExitCode::SUCCESS,
    }
}
