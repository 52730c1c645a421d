mod cache;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context};
use burnside_core::modules::{self, DEFAULT_DEPTH};
use burnside_core::stablemaps::{self, CrosscheckStatus, DecompositionKind};
use burnside_core::{parse_group_bounded, pair_classes, BurnsideRing, FiniteGroup, SubgroupClassification};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const CACHE_ENV: &str = "BURNSIDE_CACHE_DIR";
const CROSSCHECK_RETRY_DEPTH: usize = 18;

#[derive(Parser)]
#[command(name = "burnside", version, about = "Burnside rings, completions and stable splittings of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Directory for cached subgroup classifications; BURNSIDE_CACHE_DIR takes precedence.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Refuse groups (and products G x K) larger than this.
    #[arg(long, default_value_t = burnside_core::DEFAULT_ORDER_BOUND, global = true)]
    max_order: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModuleKind {
    Regular,
    Bundle,
}

#[derive(Subcommand)]
enum Command {
    /// Table of marks.
    Marks {
        #[arg(long)]
        group: String,
    },
    /// The ideals phi^H(I(G)) and their expected shape.
    Ideals {
        #[arg(long)]
        group: String,
    },
    /// I(G)-adic completion: tower oracle against the closed form.
    Complete {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value_t = ModuleKind::Regular)]
        module: ModuleKind,
        /// Target group K for the bundle module A(G, K).
        #[arg(long)]
        target: Option<String>,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
    },
    /// Wedge decomposition of maps BG -> BK, or its p-local form.
    StableMaps {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Wedge decomposition of the stable dual of BG.
    Dual {
        #[arg(long)]
        group: String,
        #[arg(long)]
        prime: Option<u64>,
    },
    /// pi_0 of the decomposition against both completions of A(G, K).
    Crosscheck {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
    },
}

/// Result of a subcommand: the payload and whether its assertions held.
struct Report {
    value: Value,
    ok: bool,
}

struct Session {
    cache_dir: Option<PathBuf>,
    max_order: usize,
}

impl Session {
    fn group(&self, spec: &str) -> anyhow::Result<Arc<FiniteGroup>> {
        Ok(Arc::new(parse_group_bounded(spec, self.max_order)?))
    }

    fn classes(&self, spec: &str) -> anyhow::Result<Arc<SubgroupClassification>> {
        let g = self.group(spec)?;
        Ok(Arc::new(match &self.cache_dir {
            Some(dir) => cache::load_or_compute(dir, spec, g),
            None => SubgroupClassification::new(g),
        }))
    }

    fn ring(&self, spec: &str) -> anyhow::Result<Arc<BurnsideRing>> {
        Ok(BurnsideRing::new(self.classes(spec)?))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let ctx = Session {
        cache_dir: std::env::var_os(CACHE_ENV).map(PathBuf::from).or(cli.cache_dir.clone()),
        max_order: cli.max_order,
    };
    match run(&ctx, &cli.command) {
        Ok(report) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report.value).expect("serializable")),
                Format::Text => print!("{}", render::text(&report.value)),
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("burnside: check failed");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("burnside: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(ctx: &Session, command: &Command) -> anyhow::Result<Report> {
    match command {
        Command::Marks { group } => {
            let ring = ctx.ring(group)?;
            let tom = ring.table_of_marks();
            Ok(Report {
                value: json!({ "group": group, "labels": tom.labels, "marks": tom.marks }),
                ok: true,
            })
        }
        Command::Ideals { group } => {
            let report = ctx.ring(group)?.verify_trichotomy();
            let ok = report.passed();
            Ok(Report {
                value: json!({ "group": report.group, "passed": ok, "rows": report.rows }),
                ok,
            })
        }
        Command::Complete { group, module, target, depth } => {
            let ring = ctx.ring(group)?;
            let (m, target_name) = match (module, target) {
                (ModuleKind::Regular, None) => (modules::regular_module(&ring), None),
                (ModuleKind::Regular, Some(_)) => bail!("--target is only meaningful with --module bundle"),
                (ModuleKind::Bundle, None) => bail!("--module bundle needs --target"),
                (ModuleKind::Bundle, Some(k)) => {
                    let pairs = pair_classes(ring.classification(), &ctx.group(k)?, ctx.max_order)?;
                    (modules::bundle_module(&ring, &pairs)?, Some(k.clone()))
                }
            };
            let tower = modules::quotient_tower(&m, &ring.augmentation_ideal(), *depth)?;
            let tower_completion = modules::classify_completion(&tower)?;
            let closed = modules::closed_form_completion(&m)?;
            let agree = closed.same_shape(&tower_completion);
            let levels: Vec<Value> =
                tower.levels.iter().map(|l| json!({ "n": l.n, "quotient": l.structure.describe() })).collect();
            Ok(Report {
                value: json!({
                    "group": group,
                    "module": if target_name.is_some() { "bundle" } else { "regular" },
                    "target": target_name,
                    "rank": m.rank(),
                    "depth": depth,
                    "tower": levels,
                    "tower_completion": tower_completion,
                    "closed_form": closed,
                    "agree": agree,
                }),
                ok: agree,
            })
        }
        Command::StableMaps { source, target, prime } => {
            let pairs = pair_classes(&ctx.classes(source)?, &ctx.group(target)?, ctx.max_order)?;
            let d = match prime {
                Some(p) => stablemaps::p_local_decomposition(&pairs, *p)?,
                None => stablemaps::function_decomposition(&pairs)?,
            };
            decomposition_report(d)
        }
        Command::Dual { group, prime } => decomposition_report(stablemaps::dual_decomposition(&ctx.classes(group)?, *prime)?),
        Command::Crosscheck { source, target, depth } => {
            let ring = ctx.ring(source)?;
            let pairs = pair_classes(ring.classification(), &ctx.group(target)?, ctx.max_order)?;
            let report = stablemaps::crosscheck_escalating(&ring, &pairs, *depth, CROSSCHECK_RETRY_DEPTH.max(*depth))?;
            if report.status == CrosscheckStatus::Unresolved {
                eprintln!("burnside: tower unresolved at depth {}; try a larger --depth", report.depth);
            }
            Ok(Report {
                ok: report.passed(),
                value: serde_json::to_value(&report).context("serializing crosscheck report")?,
            })
        }
    }
}

fn decomposition_report(d: stablemaps::WedgeDecomposition) -> anyhow::Result<Report> {
    let pi0 = match d.kind {
        DecompositionKind::PLocal => Value::Null,
        _ => serde_json::to_value(stablemaps::pi0_descriptor(&d)?)?,
    };
    let mut value = serde_json::to_value(&d)?;
    value["pi0"] = pi0;
    Ok(Report { value, ok: true })
}
