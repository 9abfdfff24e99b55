//! `coxring`: certify the isomorphism between the cohomology of the
//! dominant weight polytope's toric variety and the invariants of the
//! permutohedral one, for built-in or user-supplied finite Coxeter types.

mod cache;
mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coxring::coxeter::CoxeterMatrix;
use coxring::rootdata::{coxeter_catalog, is_crystallographic_label, AnyDatum, Mode};
use rayon::prelude::*;

use commands::{
    catalog_item, CliError, CliResult, Eulerian, GroupDump, Item, Poincare, PoincareRing,
    PresentationCmd, PresentationRing, Shared, Verify, CATALOG_LABELS,
};

#[derive(Parser, Debug)]
#[command(
    name = "coxring",
    version,
    about = "Cohomology rings of Coxeter toric varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Directory for cached group tables.
    #[arg(long, global = true, env = "COXRING_CACHE_DIR", value_name = "DIR")]
    cache_dir: Option<PathBuf>,

    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// Crystallographic when a Cartan matrix exists, else Coxeter.
    Auto,
    Crystallographic,
    Coxeter,
    /// Every mode the type supports.
    Both,
}

#[derive(Args, Debug)]
struct Selection {
    /// Type labels such as A3, B2, H3, I2(5), A1xA2 (repeatable or comma separated).
    #[arg(
        long = "type",
        value_name = "LABEL",
        value_delimiter = ',',
        required_unless_present = "coxeter_matrix"
    )]
    types: Vec<String>,

    /// JSON file `{"rank": r, "m": [[1, m12, ...], ...]}` with a custom Coxeter matrix.
    #[arg(long, value_name = "FILE", conflicts_with = "types")]
    coxeter_matrix: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
    mode: ModeArg,
}

#[derive(Args, Debug)]
struct RingFlags {
    /// Highest degree in which the quotient may be nonzero (default: the rank).
    #[arg(long, value_name = "D")]
    degree_cap: Option<usize>,

    /// Allow types whose rings take a long time to build (e.g. H4).
    #[arg(long)]
    allow_slow: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the built-in types.
    Catalog,
    /// Run the full isomorphism verification.
    Verify {
        #[command(flatten)]
        selection: Selection,
        #[command(flatten)]
        rings: RingFlags,
        /// Also compute invariant dimensions by fixed-subspace ranks.
        #[arg(long)]
        cross_check: bool,
        /// Include wall-clock timings (makes output nondeterministic).
        #[arg(long)]
        timings: bool,
    },
    /// Export the Danilov presentation of R(P) or R(WP).
    Presentation {
        #[command(flatten)]
        selection: Selection,
        #[command(flatten)]
        rings: RingFlags,
        #[arg(long, value_enum, default_value_t = PresentationRing::P)]
        ring: PresentationRing,
        /// Omit the linear relations (and graded dimensions).
        #[arg(long)]
        equivariant: bool,
    },
    /// Graded dimensions of R(P), R(WP) or the invariants of R(WP).
    Poincare {
        #[command(flatten)]
        selection: Selection,
        #[command(flatten)]
        rings: RingFlags,
        #[arg(long, value_enum, default_value_t = PoincareRing::P)]
        ring: PoincareRing,
        /// For invariants, also compute fixed-subspace ranks.
        #[arg(long)]
        cross_check: bool,
    },
    /// Number of group elements by number of descents.
    Eulerian {
        #[command(flatten)]
        selection: Selection,
    },
    /// Every group element with its reduced word and descent set.
    GroupDump {
        #[command(flatten)]
        selection: Selection,
    },
}

fn resolve(selection: &Selection) -> CliResult<Vec<AnyDatum>> {
    if let Some(path) = &selection.coxeter_matrix {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        let m = CoxeterMatrix::from_json(&text)?;
        if selection.mode == ModeArg::Crystallographic {
            return Err(CliError::Usage(
                "a custom Coxeter matrix has no Cartan matrix; use --mode coxeter".into(),
            ));
        }
        let label = path
            .file_stem()
            .map_or("custom".into(), |s| s.to_string_lossy().into_owned());
        return Ok(vec![AnyDatum::from_coxeter_matrix(&label, &m)?]);
    }
    let mut out = Vec::new();
    for label in &selection.types {
        coxeter_catalog(label)?;
        let crystallographic = is_crystallographic_label(label)?;
        let modes: &[Mode] = match (selection.mode, crystallographic) {
            (ModeArg::Crystallographic, false) => {
                return Err(CliError::Usage(format!(
                    "type `{label}` is not crystallographic; use --mode coxeter"
                )))
            }
            (ModeArg::Auto | ModeArg::Crystallographic, true) => &[Mode::Crystallographic],
            (ModeArg::Both, true) => &[Mode::Crystallographic, Mode::Coxeter],
            _ => &[Mode::Coxeter],
        };
        for &mode in modes {
            out.push(AnyDatum::from_label(label, mode)?);
        }
    }
    Ok(out)
}

fn run(cli: &Cli) -> CliResult<Vec<Item>> {
    let mut shared = Shared {
        cache_dir: cli.cache_dir.clone(),
        ..Shared::default()
    };
    if let Command::Catalog = cli.command {
        return CATALOG_LABELS
            .par_iter()
            .map(|l| catalog_item(l, &shared))
            .collect();
    }
    let (selection, rings) = match &cli.command {
        Command::Catalog => unreachable!(),
        Command::Verify {
            selection, rings, ..
        }
        | Command::Presentation {
            selection, rings, ..
        }
        | Command::Poincare {
            selection, rings, ..
        } => (selection, Some(rings)),
        Command::Eulerian { selection } | Command::GroupDump { selection } => (selection, None),
    };
    if let Some(r) = rings {
        shared.allow_slow = r.allow_slow;
        shared.degree_cap = r.degree_cap;
    }
    let data = resolve(selection)?;
    let shared = &shared;
    data.par_iter()
        .map(|datum| match &cli.command {
            Command::Verify {
                cross_check,
                timings,
                ..
            } => datum.visit(Verify {
                shared,
                cross_check: *cross_check,
                timings: *timings,
            }),
            Command::Presentation {
                ring, equivariant, ..
            } => datum.visit(PresentationCmd {
                shared,
                ring: *ring,
                equivariant: *equivariant,
            }),
            Command::Poincare {
                ring, cross_check, ..
            } => datum.visit(Poincare {
                shared,
                ring: *ring,
                cross_check: *cross_check,
            }),
            Command::Eulerian { .. } => datum.visit(Eulerian { shared }),
            Command::GroupDump { .. } => datum.visit(GroupDump { shared }),
            Command::Catalog => unreachable!(),
        })
        .collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    }
    match run(&cli) {
        Ok(items) => {
            let mut out = std::io::stdout().lock();
            // a closed pipe (e.g. `| head`) is not an error
            let _ = match cli.format {
                Format::Json => {
                    let values: Vec<_> = items.iter().map(|i| &i.json).collect();
                    writeln!(
                        out,
                        "{}",
                        serde_json::to_string_pretty(&values).expect("serializable")
                    )
                }
                Format::Text => items
                    .iter()
                    .try_for_each(|item| out.write_all(item.text.as_bytes())),
            };
            if items.iter().all(|i| i.pass) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
