mod cache;
mod commands;
mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use stackwilf::stats::Statistic;
use stackwilf::TreeFamily;

use crate::cache::{Cache, CACHE_ENV};
use crate::config::RunConfig;
use crate::output::Format;

#[derive(Parser, Debug)]
#[command(name = "stackwilf", version, about = "Stack-sorting preimages, hook configurations and Wilf-equivalence checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,

    /// Worker threads for verification jobs.
    #[arg(long, default_value_t = 1, global = true)]
    workers: usize,

    /// Result cache location.
    #[arg(long, env = CACHE_ENV, global = true)]
    cache_dir: Option<PathBuf>,

    /// Neither read nor write the cache.
    #[arg(long, global = true)]
    no_cache: bool,

    /// Allow lengths above the hard cap of 10.
    #[arg(long = "unsafe", global = true)]
    allow_large: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Vhc,
    Brute,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Show {
    Compositions,
    Types,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Equivalence {
    Fertility,
    Strong,
    Postorder,
    Joint,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply the stack-sorting map, optionally several times.
    Sort {
        perm: String,
        #[arg(long, default_value_t = 1)]
        times: usize,
    },
    /// List every preimage under the stack-sorting map.
    Preimages { perm: String },
    /// Count preimages.
    Fertility {
        perm: String,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// List valid hook configurations with their compositions or types.
    Vhc {
        perm: String,
        #[arg(long, value_enum, default_value_t = Show::Compositions)]
        show: Show,
    },
    /// Decreasing plane trees with the given postorder reading.
    Postorder {
        perm: String,
        #[arg(long, default_value = "binary")]
        family: TreeFamily,
    },
    /// Slide up: Av(231) to Av(132).
    Swu {
        perm: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Slide left: Av(132) to Av(312).
    Swl {
        perm: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Class sizes, or preimage counts with --preimage, for n = 1..=n-max.
    Sequence {
        /// A basis such as `132,231`, or `C(24135)` for a containment class.
        #[arg(long)]
        class: String,
        #[arg(long)]
        preimage: bool,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
    /// Joint distribution of statistics over a class or its preimages.
    Distribution {
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "des,peak")]
        stats: String,
        #[arg(long)]
        preimage: bool,
    },
    /// Compare two classes under one of the equivalences.
    Compare {
        left: String,
        right: String,
        #[arg(long, value_enum, default_value_t = Equivalence::Fertility)]
        kind: Equivalence,
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        /// Tree families for postorder comparisons.
        #[arg(long, value_delimiter = ',', default_value = "binary")]
        families: Vec<TreeFamily>,
        /// Statistics for joint comparisons.
        #[arg(long, default_value = "des,peak")]
        stats: String,
    },
    /// Run registered claims.
    Verify {
        /// A claim id, or `all`.
        #[arg(long, default_value = "all")]
        claim: String,
        /// Override every claim's length bound.
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, default_value_t = 3)]
        m_max: usize,
        #[arg(long, default_value_t = 2)]
        max_subset: usize,
    },
    /// List registered claims.
    Claims,
    /// Look for bases that agree on binary skeletons but not on hook types.
    Explore {
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        #[arg(long, default_value_t = 2)]
        max_basis: usize,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
}

fn run(cli: Cli) -> anyhow::Result<(commands::Outcome, Format)> {
    let mut cfg = RunConfig {
        n_max: None,
        families: vec![TreeFamily::Binary],
        m_max: 3,
        max_subset: 2,
        stats: Vec::new(),
        format: cli.format,
        cache: (!cli.no_cache).then(|| Cache::new(RunConfig::cache_dir(cli.cache_dir))),
        workers: cli.workers,
        allow_large: cli.allow_large,
    };
    cfg.validate()?;
    let out = match cli.command {
        Command::Sort { perm, times } => commands::sort(&cfg, &perm, times),
        Command::Preimages { perm } => commands::preimages(&cfg, &perm),
        Command::Fertility { perm, method } => commands::fertility(&cfg, &perm, method),
        Command::Vhc { perm, show } => commands::vhc(&cfg, &perm, show),
        Command::Postorder { perm, family } => commands::postorder(&cfg, &perm, family),
        Command::Swu { perm, inverse } => commands::slide(&cfg, &perm, true, inverse),
        Command::Swl { perm, inverse } => commands::slide(&cfg, &perm, false, inverse),
        Command::Sequence { class, preimage, n_max } => {
            cfg.n_max = Some(n_max);
            commands::sequence(&cfg, &class, preimage)
        }
        Command::Distribution { class, n, stats, preimage } => {
            cfg.n_max = Some(n);
            cfg.stats = Statistic::parse_list(&stats)?;
            commands::distribution(&cfg, &class, preimage)
        }
        Command::Compare { left, right, kind, n_max, families, stats } => {
            cfg.n_max = Some(n_max);
            cfg.families = families;
            cfg.stats = Statistic::parse_list(&stats)?;
            commands::compare(&cfg, &left, &right, kind)
        }
        Command::Verify { claim, n_max, m_max, max_subset } => {
            cfg.n_max = n_max;
            cfg.m_max = m_max;
            cfg.max_subset = max_subset;
            commands::verify(&cfg, &claim)
        }
        Command::Claims => commands::claims(&cfg),
        Command::Explore { max_len, max_basis, n_max } => {
            cfg.n_max = Some(n_max);
            commands::explore(&cfg, max_len, max_basis)
        }
    }?;
    Ok((out, cfg.format))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((out, format)) => {
            match out.rendered.render(format) {
                Ok(text) => print!("{text}"),
                Err(e) => {
                    eprintln!("error: {e:#}");
                    return ExitCode::from(2);
                }
            }
            if let Some(note) = out.note {
                eprintln!("{note}");
            }
            match out.failed_claim {
                None => ExitCode::SUCCESS,
                Some(id) => {
                    eprintln!("failed claim: {id}");
                    ExitCode::from(1)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
