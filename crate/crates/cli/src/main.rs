use std::process::ExitCode;

use circulant_mdd::io::json;
use circulant_mdd::io::{render, RenderFormat, RenderSpec};
use circulant_mdd::{
    build_coherent_mdd, build_family, coherent_fan, enumerate_mdds, is_coherent, network_stats,
    principal_hilbert_bases, verify_family, CirculantNetwork, DistanceTable, EnumMode, Error, HomogeneousLattice,
    Mdd, TiePolicy, WeightVector, DEFAULT_BRUTE_FORCE_LIMIT,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Minimum distance diagrams of circulant networks C_N(s_1, ..., s_r).
#[derive(Parser)]
#[command(name = "circulant-mdd", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Network queries.
    #[command(subcommand)]
    Net(NetCommand),
    /// Build, enumerate and check MDDs.
    #[command(subcommand)]
    Mdd(MddCommand),
    /// Homogeneous lattice queries.
    #[command(subcommand)]
    Lattice(LatticeCommand),
    /// Walls and coherent MDDs of a triple loop network.
    Fan(NetArgs),
    /// Networks C_{Nk}(t+k, t+qk, t+q²k) with N = 1+q+q².
    #[command(subcommand)]
    Family(FamilyCommand),
}

#[derive(Args)]
struct NetArgs {
    /// Number of vertices.
    n: u64,
    /// Comma-separated steps, e.g. 1,4,7.
    #[arg(allow_hyphen_values = true, value_parser = parse_steps)]
    steps: Steps,
}

#[derive(Clone)]
struct Steps(Vec<i64>);

fn parse_steps(s: &str) -> Result<Steps, String> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| format!("bad step {t:?}: {e}")))
        .collect::<Result<_, _>>()
        .map(Steps)
}

impl NetArgs {
    fn network(&self) -> Result<CirculantNetwork, Error> {
        CirculantNetwork::new(self.n, &self.steps.0)
    }
}

#[derive(Subcommand)]
enum NetCommand {
    /// Distances, diameter, average distance and routing counts.
    Info(NetArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Tie {
    Error,
    Lex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Svg,
    Json,
}

#[derive(Subcommand)]
enum MddCommand {
    /// The MDD picking the lightest minimal routing per vertex.
    Build {
        #[command(flatten)]
        net: NetArgs,
        /// Comma-separated rationals, e.g. 1,2,-1/3.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_enum, default_value = "error")]
        tie: Tie,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Every MDD of the network.
    Enumerate {
        #[command(flatten)]
        net: NetArgs,
        #[arg(long)]
        coherent_only: bool,
        /// Maximum number of search nodes.
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
    },
    /// Validate an MDD given as JSON and decide its coherence.
    Check { file: std::path::PathBuf },
}

#[derive(Subcommand)]
enum LatticeCommand {
    /// Hilbert bases of the octants (-,+,+), (+,-,+), (+,+,-).
    Hilbert(NetArgs),
}

#[derive(Subcommand)]
enum FamilyCommand {
    Build {
        q: u64,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        t: Option<u64>,
    },
    /// Compare Hilbert bases and MDD counts with their closed forms.
    Verify { q: u64 },
}

enum Failure {
    Domain(Error),
    Other(&'static str, String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Net(NetCommand::Info(args)) => {
            let table = DistanceTable::new(&args.network()?);
            Ok(json::encode_network_info(&table, &network_stats(&table)))
        }
        Command::Mdd(MddCommand::Build { net, weight, tie, format }) => {
            let table = DistanceTable::new(&net.network()?);
            let w: WeightVector = weight.parse()?;
            let tie = match tie {
                Tie::Error => TiePolicy::Error,
                Tie::Lex => TiePolicy::Lex,
            };
            let mdd = build_coherent_mdd(&table, &w, tie)?;
            let format = match format {
                Format::Ascii => RenderFormat::Ascii,
                Format::Svg => RenderFormat::Svg,
                Format::Json => RenderFormat::Json,
            };
            let out = render(&mdd, &RenderSpec::new(format))?;
            Ok(out.trim_end().to_string())
        }
        Command::Mdd(MddCommand::Enumerate { net, coherent_only, budget }) => {
            let net = net.network()?;
            let table = DistanceTable::new(&net);
            let mode = if coherent_only { EnumMode::CoherentOnly } else { EnumMode::All };
            let e = enumerate_mdds(&table, mode, Some(budget))?;
            Ok(json::encode_enumeration(&net, &e, coherent_only))
        }
        Command::Mdd(MddCommand::Check { file }) => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Failure::Other("Io", format!("{}: {e}", file.display())))?;
            let (net, cells) = json::decode_mdd_parts(&text)?;
            let table = DistanceTable::new(&net);
            let mdd = Mdd::validate(&table, cells)?;
            Ok(json::encode_check(&net, &is_coherent(&table, &mdd)?))
        }
        Command::Lattice(LatticeCommand::Hilbert(args)) => {
            let net = args.network()?;
            let bases = principal_hilbert_bases(&HomogeneousLattice::of(&net)?)?;
            Ok(json::encode_hilbert_bases(&net, &bases))
        }
        Command::Fan(args) => {
            let net = args.network()?;
            let fan = coherent_fan(&DistanceTable::new(&net))?;
            Ok(json::encode_fan(&net, &fan))
        }
        Command::Family(FamilyCommand::Build { q, k, t }) => {
            Ok(json::encode_family_network(&build_family(q, k, t)?))
        }
        Command::Family(FamilyCommand::Verify { q }) => {
            let report = verify_family(q, DEFAULT_BRUTE_FORCE_LIMIT)?;
            let text = json::encode_family_report(&report);
            if report.consistent() {
                Ok(text)
            } else {
                println!("{text}");
                Err(Failure::Other("Falsified", format!("family q = {q} disagrees with its prediction")))
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(e)) => {
            eprintln!("{}", json::encode_error(&e));
            ExitCode::from(1)
        }
        Err(Failure::Other(kind, message)) => {
            eprintln!("{}", serde_json::json!({ "error": kind, "message": message }));
            ExitCode::from(1)
        }
    }
}
