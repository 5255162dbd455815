mod cache;

use std::fmt::Display;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fusionkit::affine_weyl::{kac_walton_fusion, racah_speiser_tensor, weight_multiplicities};
use fusionkit::combinatorics::{
    count_cylindric_tableaux, orbit_to_partition, partition_to_orbit, partition_to_weight,
    weight_to_partition, Content, Partition, SkewShape, Weight,
};
use fusionkit::duality::verify_rank_level_duality;
use fusionkit::fusion::{multiply, tensor_product, verify_fusion_axioms};
use fusionkit::orbit::{fixed_product, raw_orbit_product};
use fusionkit::parse::parse_orbit;
use fusionkit::{Expansion, FusionContext};

const EXPANSION_SCHEMA: &str = "fusionkit/expansion/v1";

#[derive(Parser)]
#[command(name = "fusionkit", version, about = "Fusion coefficients of type A at level k")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Directory for cached fusion tables.
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Level {
    #[arg(long = "N")]
    n: usize,
    #[arg(long)]
    k: usize,
}

impl Level {
    fn ctx(&self) -> Result<FusionContext, Failure> {
        FusionContext::new(self.n, self.k).map_err(usage)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Product of two basis elements of the fusion ring.
    Fuse {
        #[command(flatten)]
        level: Level,
        /// Partition `[2,1]` or weight `{1,1}`.
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        #[arg(long, value_enum, default_value_t = FuseMethod::JacobiTrudi)]
        method: FuseMethod,
    },
    /// Tensor product decomposition for sl_N.
    Tensor {
        #[arg(long = "N")]
        n: usize,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        #[arg(long, value_enum, default_value_t = TensorMethod::Pieri)]
        method: TensorMethod,
    },
    /// Product of two S_k-orbits of Z_N^k.
    OrbitProduct {
        #[command(flatten)]
        level: Level,
        /// Residue tuple `(2,1,0)` of length k.
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Raw (non-associative) orbit product.
        #[arg(long, conflicts_with = "fixed")]
        raw: bool,
        /// Fixed orbit product (the default).
        #[arg(long)]
        fixed: bool,
    },
    /// Fusion skew Kostka number.
    Kostka {
        #[command(flatten)]
        level: Level,
        #[arg(long)]
        outer: String,
        #[arg(long)]
        inner: String,
        #[arg(long)]
        content: String,
    },
    /// Weight multiplicities of an irreducible sl_N module.
    Weights {
        #[arg(long = "N")]
        n: usize,
        #[arg(long)]
        lambda: String,
    },
    /// Full fusion table, cached on disk.
    Table {
        #[command(flatten)]
        level: Level,
        /// Also write the table JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        verify_axioms: bool,
    },
    /// Rank-level duality check between (N,k) and (k,N).
    Duality {
        #[command(flatten)]
        level: Level,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FuseMethod {
    JacobiTrudi,
    Orbit,
    KacWalton,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TensorMethod {
    Pieri,
    RacahSpeiser,
}

enum Failure {
    Usage(String),
    /// A computation disagreed; the report is still printed.
    Mismatch(Output),
}

fn usage(e: impl Display) -> Failure {
    Failure::Usage(e.to_string())
}

struct Output {
    text: String,
    json: Value,
}

fn terms_json<K: Ord + Clone + Display>(e: &Expansion<K>) -> Value {
    Value::Array(
        e.iter()
            .map(|(label, mult)| json!({"label": label.to_string(), "mult": mult}))
            .collect(),
    )
}

fn expansion_output<K: Ord + Clone + Display>(e: &Expansion<K>) -> Output {
    Output {
        text: e.to_string(),
        json: json!({"schema": EXPANSION_SCHEMA, "terms": terms_json(e)}),
    }
}

/// A partition, or a weight converted to its partition.
fn parse_label(text: &str, n: usize) -> Result<Partition, Failure> {
    if text.trim_start().starts_with('{') {
        let w: Weight = text.parse().map_err(usage)?;
        w.check_rank(n).map_err(usage)?;
        Ok(weight_to_partition(&w))
    } else {
        let p: Partition = text.parse().map_err(usage)?;
        p.reduce_full_columns(n).map_err(usage)
    }
}

fn fuse(ctx: &FusionContext, lhs: &str, rhs: &str, method: FuseMethod) -> Result<Output, Failure> {
    let p = parse_label(lhs, ctx.n())?;
    let q = parse_label(rhs, ctx.n())?;
    let jacobi_trudi = || multiply(&p, &q, ctx);
    let orbit = || {
        let a = partition_to_orbit(&p, ctx)?;
        let b = partition_to_orbit(&q, ctx)?;
        fixed_product(&a, &b)?.map_keys(orbit_to_partition)
    };
    let kac_walton = || {
        let l = partition_to_weight(&p, ctx.n())?;
        let m = partition_to_weight(&q, ctx.n())?;
        kac_walton_fusion(&l, &m, ctx)?.map_keys(weight_to_partition)
    };
    let single = match method {
        FuseMethod::JacobiTrudi => Some(jacobi_trudi()),
        FuseMethod::Orbit => Some(orbit()),
        FuseMethod::KacWalton => Some(kac_walton()),
        FuseMethod::All => None,
    };
    if let Some(result) = single {
        return result.map(|e| expansion_output(&e)).map_err(usage);
    }

    let results = [
        ("jacobi-trudi", jacobi_trudi().map_err(usage)?),
        ("orbit", orbit().map_err(usage)?),
        ("kac-walton", kac_walton().map_err(usage)?),
    ];
    let agree = results.iter().all(|(_, e)| *e == results[0].1);
    let mut text = String::new();
    for (name, e) in &results {
        text.push_str(&format!("{name:<13}{e}\n"));
    }
    text.push_str(if agree { "all methods agree" } else { "METHODS DISAGREE" });
    let methods: serde_json::Map<String, Value> = results
        .iter()
        .map(|(name, e)| (name.to_string(), terms_json(e)))
        .collect();
    let json = json!({
        "schema": EXPANSION_SCHEMA,
        "terms": terms_json(&results[0].1),
        "methods": methods,
        "agree": agree,
    });
    let out = Output { text, json };
    if agree {
        Ok(out)
    } else {
        Err(Failure::Mismatch(out))
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Fuse {
            level,
            lhs,
            rhs,
            method,
        } => fuse(&level.ctx()?, lhs, rhs, *method),
        Command::Tensor { n, lhs, rhs, method } => {
            let p = parse_label(lhs, *n)?;
            let q = parse_label(rhs, *n)?;
            let e = match method {
                TensorMethod::Pieri => tensor_product(&p, &q, *n).map_err(usage)?,
                TensorMethod::RacahSpeiser => {
                    let l = partition_to_weight(&p, *n).map_err(usage)?;
                    let m = partition_to_weight(&q, *n).map_err(usage)?;
                    racah_speiser_tensor(&l, &m, *n)
                        .and_then(|e| e.map_keys(weight_to_partition))
                        .map_err(usage)?
                }
            };
            Ok(expansion_output(&e))
        }
        Command::OrbitProduct {
            level,
            a,
            b,
            raw,
            fixed: _,
        } => {
            let ctx = level.ctx()?;
            let a = parse_orbit(a, ctx.n()).map_err(usage)?;
            let b = parse_orbit(b, ctx.n()).map_err(usage)?;
            for o in [&a, &b] {
                if o.k() != ctx.k() {
                    return Err(Failure::Usage(format!(
                        "orbit {o} has length {}, expected k = {}",
                        o.k(),
                        ctx.k()
                    )));
                }
            }
            let e = if *raw {
                raw_orbit_product(&a, &b)
            } else {
                fixed_product(&a, &b)
            }
            .map_err(usage)?;
            Ok(expansion_output(&e))
        }
        Command::Kostka {
            level,
            outer,
            inner,
            content,
        } => {
            let ctx = level.ctx()?;
            let outer_p: Partition = outer.parse().map_err(usage)?;
            let inner_p: Partition = inner.parse().map_err(usage)?;
            let content_c: Content = content.parse().map_err(usage)?;
            let shape = SkewShape::new(outer_p, inner_p).map_err(usage)?;
            let value = count_cylindric_tableaux(&shape, &content_c, &ctx).map_err(usage)?;
            Ok(Output {
                text: value.to_string(),
                json: json!({
                    "N": ctx.n(),
                    "k": ctx.k(),
                    "outer": outer.trim(),
                    "inner": inner.trim(),
                    "content": content.trim(),
                    "value": value,
                }),
            })
        }
        Command::Weights { n, lambda } => {
            let p = parse_label(lambda, *n)?;
            let w = partition_to_weight(&p, *n).map_err(usage)?;
            let e: Expansion<_> = weight_multiplicities(&w, *n)
                .map_err(usage)?
                .into_iter()
                .map(|(mu, m)| (mu, m as i64))
                .collect();
            Ok(expansion_output(&e))
        }
        Command::Table {
            level,
            out,
            verify_axioms,
        } => {
            let ctx = level.ctx()?;
            let dir = cache::cache_dir(cli.cache_dir.as_deref());
            let (table, path) = cache::load_or_build(dir.as_deref(), &ctx).map_err(usage)?;
            let table_json = table.to_json().map_err(usage)?;
            if let Some(out) = out {
                fs::write(out, &table_json)
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", out.display())))?;
            }
            let mut text = format!("fusion table {ctx}: {} basis elements", table.size());
            if let Some(path) = &path {
                text.push_str(&format!("\ncache: {}", path.display()));
            }
            let mut json: Value = serde_json::from_str(&table_json).expect("table json");
            if !*verify_axioms {
                return Ok(Output { text, json });
            }
            let report = verify_fusion_axioms(&table.structure_constants());
            for check in &report.checks {
                let status = if check.passed { "ok" } else { "FAILED" };
                text.push_str(&format!("\n{:<42}{status}", check.axiom.name()));
                if let Some(w) = &check.witness {
                    text.push_str(&format!(" ({w})"));
                }
            }
            json["axioms"] = serde_json::to_value(&report).expect("report json");
            let out = Output { text, json };
            if report.all_passed() {
                Ok(out)
            } else {
                Err(Failure::Mismatch(out))
            }
        }
        Command::Duality { level } => {
            let report = verify_rank_level_duality(level.n, level.k).map_err(usage)?;
            let mut text = format!(
                "rank-level duality ({},{}) <-> ({},{}): {} classes, {}",
                level.n,
                level.k,
                level.k,
                level.n,
                report.classes,
                if report.isomorphic { "isomorphic" } else { "NOT isomorphic" }
            );
            if let Some(w) = &report.witness {
                text.push_str(&format!("\nwitness: {w}"));
            }
            let out = Output {
                text,
                json: serde_json::to_value(&report).expect("report json"),
            };
            if report.isomorphic {
                Ok(out)
            } else {
                Err(Failure::Mismatch(out))
            }
        }
    }
}

fn print(out: &Output, format: Format) {
    match format {
        Format::Text => println!("{}", out.text),
        Format::Json => println!("{}", out.json),
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
    match run(&cli) {
        Ok(out) => {
            print(&out, cli.format);
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch(out)) => {
            print(&out, cli.format);
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
