use clap::{Parser, Subcommand, ValueEnum};
use hopfforge::cli::{self, CliResult, JsonKind, Output};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "hopfforge", version, about = "Exact Hopf algebra computations over Q(ζ₈)")]
struct Args {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Highest degree explored by Nichols algebra runs.
    #[arg(long, default_value_t = 6, global = true)]
    max_degree: usize,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<String>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run every verification section.
    VerifyAll {
        #[arg(long)]
        section: Option<String>,
    },
    /// Structure constants of K.
    BuildK,
    /// The Drinfeld double D(K^cop) and its presentation.
    Double,
    /// The sixteen simple D-modules.
    Simples,
    /// Ext¹ between simples and the separation diagram.
    ExtQuiver,
    /// Decompositions of all tensor products of two-dimensional simples.
    CgTable,
    /// YD structure and braiding of registry objects.
    Yd {
        #[arg(long)]
        module: Option<String>,
    },
    /// Hilbert series of Nichols algebras.
    Nichols {
        #[arg(long)]
        module: Option<String>,
    },
    /// Bosonizations with K.
    Boson {
        #[arg(long)]
        module: Option<String>,
        #[arg(long)]
        dump: Option<String>,
    },
    /// The liftings 𝔄₃,₁(μ) and 𝔄₃,₃(μ).
    Lifting {
        #[arg(long, default_value = "3,1")]
        family: String,
        #[arg(long, default_value = "1/1")]
        mu: String,
        #[arg(long)]
        dump: Option<String>,
        #[arg(long)]
        certify: bool,
    },
    /// Parse a JSON file of the given kind and echo it.
    Load {
        #[arg(long)]
        kind: JsonKind,
        path: String,
    },
}

fn run(args: &Args) -> CliResult<Output> {
    match &args.cmd {
        Cmd::VerifyAll { section } => {
            let rep = cli::verify_all(section.as_deref(), args.max_degree)?;
            Ok(Output {
                text: rep.render_text(),
                json: serde_json::to_value(&rep)?,
                passed: rep.passed,
            })
        }
        Cmd::BuildK => cli::cmd_build_k(),
        Cmd::Double => cli::cmd_double(),
        Cmd::Simples => cli::cmd_simples(),
        Cmd::ExtQuiver => cli::cmd_ext_quiver(),
        Cmd::CgTable => cli::cmd_cg_table(),
        Cmd::Yd { module } => cli::cmd_yd(module.as_deref()),
        Cmd::Nichols { module } => cli::cmd_nichols(module.as_deref(), args.max_degree),
        Cmd::Boson { module, dump } => cli::cmd_boson(module.as_deref(), dump.as_deref()),
        Cmd::Lifting {
            family,
            mu,
            dump,
            certify,
        } => cli::cmd_lifting(cli::parse_family(family)?, &cli::parse_mu(mu)?, dump.as_deref(), *certify),
        Cmd::Load { kind, path } => {
            let src = std::fs::read_to_string(path)?;
            let (text, json) = cli::load_json(*kind, &src)?;
            Ok(Output {
                text: text + "\n",
                json,
                passed: true,
            })
        }
    }
}

fn main() -> ExitCode {
    hopfforge::par::init_threads();
    let args = Args::parse();
    let out = match run(&args) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let body = match args.format {
        Format::Text => out.text,
        Format::Json => serde_json::to_string_pretty(&out.json).expect("serializable") + "\n",
    };
    match &args.out {
        Some(p) => {
            if let Err(e) = std::fs::write(p, body) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        }
        None => print!("{body}"),
    }
    if out.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
