use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use frlab::analyze::{analyze, load_source};
use frlab::caps::caps_from_env;
use frlab::catalog::{default_catalog, Tier};
use frlab::checks::{verify, VerifyOptions, CHECKS};
use frlab::classfile::Registry;
use frlab::rankfile::load_rank;
use frlab::report::CheckReport;
use frlab::search::search;
use frlab::{Error, Result};

#[derive(Parser)]
#[command(name = "frlab", version, about = "Chief-factor analysis and corpus checks for generalized-rank formations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args)]
struct Common {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Class configuration file with `class` and `flags:` lines.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Chief series, characteristic subgroups and class data of one group.
    Analyze {
        /// A `.grp` or `.grp-recipe` file, a catalog label, or a recipe.
        src: String,
        #[arg(long = "class")]
        classes: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Run verification checks over a catalog tier (`all` runs every check).
    Verify {
        #[arg(required = true)]
        checks: Vec<String>,
        #[arg(long, default_value = "small")]
        tier: String,
        #[arg(long = "class")]
        classes: Vec<String>,
        /// A rank-spec file or the name of a preset rank function.
        #[arg(long)]
        rank: Option<String>,
        /// Example item for `example1`.
        #[arg(long)]
        item: Option<u8>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Scan a tier and its extensions for witnesses.
    Search {
        predicate: String,
        #[arg(long, default_value = "small")]
        tier: String,
        #[arg(long = "class")]
        classes: Vec<String>,
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// List the catalog.
    Catalog {
        #[arg(long, default_value = "small")]
        tier: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn registry(common: &Common) -> Result<Registry> {
    let mut reg = Registry::default();
    if let Some(p) = &common.config {
        reg.load_config_file(p)?;
    }
    Ok(reg)
}

fn emit(text: String, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|source| Error::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render(reports: &[CheckReport], format: Format) -> String {
    match format {
        Format::Text => reports.iter().map(CheckReport::to_text).collect(),
        Format::Json if reports.len() == 1 => reports[0].to_json() + "\n",
        Format::Json => serde_json::to_string_pretty(reports).expect("reports serialize") + "\n",
    }
}

/// Exit status 0 on success, 1 when a check found a counterexample.
fn run(cli: Cli) -> Result<u8> {
    let caps = caps_from_env()?;
    match cli.command {
        Command::Analyze { src, classes, common } => {
            let reg = registry(&common)?;
            let g = load_source(&src, &caps)?;
            let classes = classes.iter().map(|c| reg.resolve(c)).collect::<Result<Vec<_>>>()?;
            let a = analyze(&g, &classes, &caps)?;
            let text = match common.format {
                Format::Text => a.to_text(),
                Format::Json => serde_json::to_string_pretty(&a).expect("analysis serializes") + "\n",
            };
            emit(text, None)?;
            Ok(0)
        }
        Command::Verify {
            checks,
            tier,
            classes,
            rank,
            item,
            jobs,
            out,
            common,
        } => {
            let mut opts = VerifyOptions::new(tier.parse::<Tier>()?);
            opts.registry = registry(&common)?;
            if let Some(r) = rank {
                let path = Path::new(&r);
                opts.rank = Some(if path.is_file() {
                    let spec = load_rank(path)?;
                    let id = spec.id.clone();
                    opts.registry.add_rank(spec);
                    id
                } else {
                    r
                });
            }
            opts.classes = classes;
            opts.item = item;
            opts.jobs = jobs;
            opts.caps = caps;
            let names: Vec<String> = if checks.iter().any(|c| c == "all") {
                CHECKS.iter().map(|c| c.to_string()).collect()
            } else {
                checks
            };
            let mut reports = Vec::new();
            for c in &names {
                reports.push(verify(c, &opts)?);
            }
            emit(render(&reports, common.format), out.as_deref())?;
            Ok(if reports.iter().all(CheckReport::succeeded) { 0 } else { 1 })
        }
        Command::Search {
            predicate,
            tier,
            classes,
            max_order,
            jobs,
            out,
            common,
        } => {
            let mut opts = VerifyOptions::new(tier.parse::<Tier>()?);
            opts.registry = registry(&common)?;
            opts.classes = classes;
            opts.max_order = max_order;
            opts.jobs = jobs;
            opts.caps = caps;
            let r = search(&predicate, &opts)?;
            emit(render(&[r], common.format), out.as_deref())?;
            Ok(0)
        }
        Command::Catalog { tier, format } => {
            let cat = default_catalog(tier.parse::<Tier>()?, &caps)?;
            let text = match format {
                Format::Text => {
                    let mut s = String::new();
                    for e in &cat.entries {
                        s += &format!("{:<14} {:>5}  {:<7} {}\n", e.label, e.table.order(), e.tier, e.recipe);
                    }
                    for (l, why) in &cat.skipped {
                        s += &format!("{l:<14} skipped: {why}\n");
                    }
                    s
                }
                Format::Json => {
                    let rows: Vec<_> = cat
                        .entries
                        .iter()
                        .map(|e| {
                            serde_json::json!({
                                "label": e.label,
                                "order": e.table.order(),
                                "tier": e.tier.to_string(),
                                "recipe": e.recipe.to_string(),
                            })
                        })
                        .collect();
                    serde_json::to_string_pretty(&rows).expect("catalog serializes") + "\n"
                }
            };
            emit(text, None)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
