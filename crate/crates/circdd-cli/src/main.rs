//! Command-line front end: bound evaluation, family table queries, diameter
//! measurement, instance verification, lattice suites and extremal search,
//! with machine-readable reports.
//!
//! Exit codes: 0 all requested checks passed, 1 usage or parse error,
//! 2 verification failure, 3 budget exceeded.

use anyhow::{anyhow, Context, Result};
use circdd::bounds;
use circdd::circulant::{enumerate_primitive_gensets, make_graph};
use circdd::engine::{run_verify_suite, Budget, EnginePolicy, SuiteReport};
use circdd::families::{eval_genset, eval_order, load_tables, EngineKind, TableSource, Tables};
use circdd::lattice::{self, theorem, theorem_basis};
use circdd::search::{self, SearchConfig};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

const EXIT_OK: i32 = 0;
const EXIT_USAGE: i32 = 1;
const EXIT_VERIFY_FAILED: i32 = 2;
const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "circdd", version, about = "largest-known circulant graphs of degree 10 and 11: bounds, tables, verification, search", disable_help_subcommand = true)]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Append wall-clock timings under a separate "perf" key.
    #[arg(long, global = true)]
    perf: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Abelian-Cayley bound and conjectured coefficients for one (d, k).
    Bounds {
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        diameter: u64,
    },
    /// Family table queries.
    Family {
        #[command(subcommand)]
        action: FamilyAction,
    },
    /// Diameter of an explicit circulant graph by breadth-first search.
    Diameter {
        #[arg(long)]
        order: u64,
        /// comma-separated generators, e.g. 1,53,207,272,536
        #[arg(long, value_delimiter = ',')]
        gens: Vec<u64>,
        #[arg(long)]
        degree: u32,
    },
    /// Verify table instances for a degree up to a maximum diameter.
    Verify(VerifyArgs),
    /// Lattice construction checks.
    Lattice {
        #[command(subcommand)]
        action: LatticeAction,
    },
    /// Exhaustive extremal search at a (degree, diameter).
    Search(SearchArgs),
    /// Enumerate the primitive generating sets of a graph's class.
    Gensets {
        #[arg(long)]
        order: u64,
        #[arg(long, value_delimiter = ',')]
        gens: Vec<u64>,
    },
}

#[derive(Subcommand, Debug)]
enum FamilyAction {
    /// List every family with its set characterization.
    List,
    /// Evaluate a generating set.
    Gen {
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        class: String,
        #[arg(long)]
        set: u32,
        #[arg(long)]
        k: u64,
    },
    /// Evaluate an order polynomial.
    Order {
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        class: String,
        #[arg(long)]
        k: u64,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    degree: u32,
    #[arg(long = "k-max")]
    k_max: u64,
    /// bfs | lattice | multiplier | auto
    #[arg(long, default_value = "auto")]
    engine: String,
    /// Memory cap in bytes (about one byte per vertex).
    #[arg(long = "mem-cap", default_value_t = 200_000_000)]
    mem_cap: u64,
    /// Emit a table-shaped summary (diameter, order, class, generators).
    #[arg(long = "paper-tables")]
    paper_tables: bool,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long)]
    degree: u32,
    #[arg(long)]
    diameter: u64,
    #[arg(long = "n-max")]
    n_max: Option<u64>,
    #[arg(long = "n-min")]
    n_min: Option<u64>,
    /// Restrict the existence scan to primitive sets.
    #[arg(long = "fix-one", default_value_t = true, action = clap::ArgAction::Set)]
    fix_one: bool,
    /// Heuristic maximal-odd-girth filter (no completeness claim).
    #[arg(long = "girth-prune")]
    girth_prune: bool,
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Write a resumable checkpoint here when the budget expires.
    #[arg(long)]
    checkpoint: Option<std::path::PathBuf>,
    /// Wall-clock budget in seconds.
    #[arg(long = "budget-secs")]
    budget_secs: Option<f64>,
    /// Confirm extremality of a claimed order instead of searching downward.
    #[arg(long = "confirm")]
    confirm: Option<u64>,
}

#[derive(Serialize)]
struct RunReport {
    request: serde_json::Value,
    results: serde_json::Value,
    warnings: Vec<String>,
    status: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    perf: Option<serde_json::Value>,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version are not usage errors
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let started = std::time::Instant::now();
    match run(&cli) {
        Ok((request, results, warnings, status)) => {
            emit(&cli, request, results, warnings, status, started);
            std::process::exit(status);
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(EXIT_USAGE);
        }
    }
}

type Outcome = (serde_json::Value, serde_json::Value, Vec<String>, i32);

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Bounds { degree, diameter } => cmd_bounds(*degree, *diameter),
        Command::Family { action } => cmd_family(action),
        Command::Diameter { order, gens, degree } => cmd_diameter(*order, gens, *degree),
        Command::Verify(args) => cmd_verify(args),
        Command::Lattice { action } => cmd_lattice(action),
        Command::Search(args) => cmd_search(args),
        Command::Gensets { order, gens } => cmd_gensets(*order, gens),
    }
}

fn emit(
    cli: &Cli,
    request: serde_json::Value,
    results: serde_json::Value,
    warnings: Vec<String>,
    status: i32,
    started: std::time::Instant,
) {
    match cli.format {
        Format::Json => {
            let report = RunReport {
                request,
                results,
                warnings,
                status,
                perf: cli.perf.then(|| {
                    json!({ "elapsed_ms": started.elapsed().as_millis() as u64 })
                }),
            };
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable report"));
        }
        Format::Csv => print!("{}", to_csv(&results)),
        Format::Text => {
            print!("{}", to_text(&results));
            for w in &warnings {
                println!("warning: {w}");
            }
        }
    }
}

/// Flattens verification rows into the fixed column order; other payloads
/// fall back to a single-column dump.
fn to_csv(results: &serde_json::Value) -> String {
    let mut out = String::new();
    if let Some(rows) = results.get("reports").and_then(|r| r.as_array()) {
        out.push_str("degree,class,set,subset,k,n,diameter,engine,pass,ms\n");
        for r in rows {
            out.push_str(&format!(
                "{},{},{},{}/{},{},{},{},{},{},{}\n",
                r["degree"],
                r["class"].as_str().unwrap_or(""),
                r["set"],
                r["subset_residue"],
                r["subset_modulus"],
                r["k"],
                r["n_computed"],
                r["diameter_computed"],
                r["engine"].as_str().unwrap_or(""),
                r["pass"],
                r.get("ms").and_then(|v| v.as_u64()).unwrap_or(0),
            ));
        }
        return out;
    }
    format!("{results}\n")
}

fn to_text(results: &serde_json::Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(results).expect("serializable results"))
}

fn tables() -> Result<Tables> {
    Ok(load_tables(TableSource::BuiltIn)?)
}

fn cmd_bounds(degree: u32, diameter: u64) -> Result<Outcome> {
    let report = bounds::bound_report(degree, diameter)?;
    let request = json!({"command": "bounds", "degree": degree, "diameter": diameter});
    Ok((request, serde_json::to_value(&report)?, vec![], EXIT_OK))
}

fn cmd_family(action: &FamilyAction) -> Result<Outcome> {
    let t = tables()?;
    match action {
        FamilyAction::List => {
            let rows: Vec<_> = t
                .families
                .iter()
                .map(|f| {
                    json!({
                        "degree": f.degree,
                        "class": f.class_label,
                        "parity": f.parity,
                        "k_min": f.k_min,
                        "residue": f.residue,
                        "a_sub": f.a_sub,
                        "sets": f
                            .characterization()
                            .iter()
                            .map(|(c, m)| format!("{c}/{m}"))
                            .collect::<Vec<_>>(),
                        "instances": f.instances.len(),
                    })
                })
                .collect();
            Ok((
                json!({"command": "family list"}),
                json!({ "families": rows }),
                vec![],
                EXIT_OK,
            ))
        }
        FamilyAction::Gen { degree, class, set, k } => {
            let fam = t.family(*degree, class)?;
            let gs = eval_genset(fam, *set, *k)?;
            let request = json!({
                "command": "family gen", "degree": degree, "class": class, "set": set, "k": k
            });
            let results = json!({
                "order": gs.n(),
                "gens": gs.gens(),
                "involution": gs.has_involution().then(|| gs.n() / 2),
                "degree": gs.degree(),
            });
            Ok((request, results, vec![], EXIT_OK))
        }
        FamilyAction::Order { degree, class, k } => {
            let fam = t.family(*degree, class)?;
            let n = eval_order(fam, *k)?;
            let request =
                json!({"command": "family order", "degree": degree, "class": class, "k": k});
            Ok((request, json!({ "order": n }), vec![], EXIT_OK))
        }
    }
}

fn cmd_diameter(order: u64, gens: &[u64], degree: u32) -> Result<Outcome> {
    let graph = make_graph(order, gens, degree)?;
    let request = json!({
        "command": "diameter", "order": order, "gens": gens, "degree": degree
    });
    let mut warnings = Vec::new();
    // the word-parallel frontier gives diameter and ball sizes in one pass;
    // the odd-girth double cover is only worth its memory on smaller orders
    let ball_sizes = graph.ball_sizes();
    let odd_girth = if order <= 20_000_000 {
        graph.odd_girth()
    } else {
        warnings.push("odd girth skipped above 2*10^7 vertices".into());
        None
    };
    let results = json!({
        "diameter": ball_sizes.len() as u64 - 1,
        "odd_girth": odd_girth,
        "ball_sizes": ball_sizes,
    });
    Ok((request, results, warnings, EXIT_OK))
}

fn policy_of(name: &str) -> Result<EnginePolicy> {
    Ok(match name {
        "auto" => EnginePolicy::Auto,
        "bfs" => EnginePolicy::Fixed(EngineKind::Bfs),
        "lattice" => EnginePolicy::Fixed(EngineKind::Lattice),
        "multiplier" => EnginePolicy::Fixed(EngineKind::Multiplier),
        other => return Err(anyhow!("unknown engine '{other}'")),
    })
}

fn suite_json(suite: &SuiteReport) -> serde_json::Value {
    let reports: Vec<_> = suite
        .reports
        .iter()
        .map(|r| {
            let mut v = serde_json::to_value(r).expect("serializable report");
            v["ms"] = json!(r.elapsed.as_millis() as u64);
            v
        })
        .collect();
    json!({
        "reports": reports,
        "skips": suite.skips,
        "passed": suite.reports.iter().filter(|r| r.pass).count(),
        "failed": suite.reports.iter().filter(|r| !r.pass).count(),
        "skipped": suite.skips.len(),
    })
}

fn cmd_verify(args: &VerifyArgs) -> Result<Outcome> {
    let t = tables()?;
    let policy = policy_of(&args.engine)?;
    let budget = Budget {
        mem_bytes: args.mem_cap,
    };
    let suite = run_verify_suite(&t, args.degree, args.k_max, policy, budget);
    let mut warnings = Vec::new();
    if suite.reports.is_empty() && suite.skips.is_empty() {
        warnings.push(format!(
            "no table instances for degree {} up to k={}",
            args.degree, args.k_max
        ));
    }
    let mut results = suite_json(&suite);
    if args.paper_tables {
        results["paper_tables"] = paper_table(&t, args.degree, args.k_max)?;
    }
    let status = if !suite.all_pass() {
        EXIT_VERIFY_FAILED
    } else if !suite.skips.is_empty() {
        EXIT_BUDGET
    } else {
        EXIT_OK
    };
    let request = json!({
        "command": "verify", "degree": args.degree, "k_max": args.k_max,
        "engine": args.engine, "mem_cap": args.mem_cap,
    });
    Ok((request, results, warnings, status))
}

/// Largest-known-table-shaped summary: one row per published instance plus
/// the bound column.
fn paper_table(t: &Tables, degree: u32, k_max: u64) -> Result<serde_json::Value> {
    let mut rows = Vec::new();
    for se in t.small_extremal(degree) {
        if se.k > k_max {
            continue;
        }
        for gens in &se.gensets {
            rows.push(json!({
                "k": se.k,
                "order": se.order,
                "class": "-",
                "gens": gens,
                "checked_to": bounds::m_ac(degree, se.k)?,
            }));
        }
    }
    for fam in t.families_of_degree(degree) {
        for inst in &fam.instances {
            if inst.k > k_max {
                continue;
            }
            let class = match &inst.variant {
                Some(v) => format!("{}{}", fam.class_label, v),
                None => fam.class_label.clone(),
            };
            rows.push(json!({
                "k": inst.k,
                "order": inst.order,
                "class": class,
                "gens": inst.gens,
            }));
        }
    }
    rows.sort_by_key(|r| (r["k"].as_u64(), r["order"].as_u64().map(std::cmp::Reverse)));
    Ok(json!(rows))
}

#[derive(Subcommand, Debug)]
enum LatticeAction {
    /// Run construction checks for one theorem at one diameter.
    Check {
        #[arg(long)]
        theorem: u8,
        #[arg(long)]
        k: u64,
        /// combos | orthants | covering | all
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn cmd_lattice(action: &LatticeAction) -> Result<Outcome> {
    let LatticeAction::Check { theorem: id, k, suite } = action;
    let t = theorem(*id).ok_or_else(|| anyhow!("no theorem {id} (supported: 3..=9)"))?;
    let request = json!({"command": "lattice check", "theorem": id, "k": k, "suite": suite});
    let mut results = serde_json::Map::new();
    let mut status = EXIT_OK;
    let mut warnings = Vec::new();

    let basis = theorem_basis(t, *k).context("construct basis")?;
    let det = lattice::determinant(&basis)?;
    let smith = lattice::smith_diag(&basis)?;
    results.insert("class".into(), json!(t.class_label));
    results.insert("set".into(), json!(t.set_index));
    results.insert("determinant".into(), json!(det.unsigned_abs().to_string()));
    results.insert(
        "smith".into(),
        json!(smith.diag.iter().map(|d| d.to_string()).collect::<Vec<_>>()),
    );
    results.insert("cyclic".into(), json!(smith.is_cyclic()));
    results.insert(
        "expected_order".into(),
        json!(t.expected_det(*k)?.unsigned_abs().to_string()),
    );

    let run_combos = matches!(suite.as_str(), "combos" | "all");
    let run_orthants = matches!(suite.as_str(), "orthants" | "all");
    let run_covering = matches!(suite.as_str(), "covering" | "all");
    if !(run_combos || run_orthants || run_covering) {
        return Err(anyhow!("unknown suite '{suite}'"));
    }
    if run_combos {
        let ok = lattice::verify_combo_identities(t, *k).is_ok();
        results.insert("combos_pass".into(), json!(ok));
        if !ok {
            status = EXIT_VERIFY_FAILED;
        }
    }
    if run_orthants {
        match lattice::verify_orthant_suite(t, *k) {
            Ok(()) => {
                results.insert("orthants_pass".into(), json!(true));
            }
            Err(lattice::LatticeError::BelowProofThreshold { threshold, .. }) => {
                results.insert("orthants_pass".into(), json!(serde_json::Value::Null));
                warnings.push(format!(
                    "orthant suite needs k >= {threshold}; skipped at k={k}"
                ));
            }
            Err(e) => {
                results.insert("orthants_pass".into(), json!(false));
                warnings.push(e.to_string());
                status = EXIT_VERIFY_FAILED;
            }
        }
    }
    if run_covering {
        match lattice::covering_check(&basis, *k) {
            Ok(cov) => {
                results.insert("covering_pass".into(), json!(cov));
                if !cov {
                    status = EXIT_VERIFY_FAILED;
                }
            }
            Err(lattice::LatticeError::BudgetExceeded(need)) => {
                results.insert("covering_pass".into(), json!(serde_json::Value::Null));
                warnings.push(format!("covering check needs {need} cosets; over budget"));
                if status == EXIT_OK {
                    status = EXIT_BUDGET;
                }
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok((request, serde_json::Value::Object(results), warnings, status))
}

fn cmd_search(args: &SearchArgs) -> Result<Outcome> {
    if let Some(claimed) = args.confirm {
        let ok = search::confirm_extremality(args.degree, args.diameter, claimed, args.jobs)?;
        let request = json!({
            "command": "search confirm", "degree": args.degree,
            "diameter": args.diameter, "claimed": claimed,
        });
        let results = json!({
            "extremal_confirmed": ok,
            "scanned_to": bounds::m_ac(args.degree, args.diameter)?,
        });
        return Ok((request, results, vec![], if ok { EXIT_OK } else { EXIT_VERIFY_FAILED }));
    }
    let mut cfg = SearchConfig::new(args.degree, args.diameter)?;
    if let Some(n) = args.n_max {
        cfg.n_max = n.min(cfg.n_max);
    }
    if let Some(n) = args.n_min {
        cfg.n_min = n;
    }
    cfg.fix_one = args.fix_one;
    cfg.girth_prune = args.girth_prune;
    cfg.jobs = args.jobs;
    cfg.checkpoint = args.checkpoint.clone();
    cfg.budget = args.budget_secs.map(std::time::Duration::from_secs_f64);
    if let Some(path) = &cfg.checkpoint {
        if path.exists() {
            let cp = search::read_checkpoint(path)?;
            cfg.n_max = cp.next_n.min(cfg.n_max);
        }
    }
    let res = search::exhaustive_extremal(&cfg)?;
    let request = json!({
        "command": "search", "degree": args.degree, "diameter": args.diameter,
        "n_max": cfg.n_max, "fix_one": cfg.fix_one, "girth_prune": cfg.girth_prune,
    });
    let classes: Vec<_> = res
        .classes
        .iter()
        .map(|c| {
            json!({
                "representative": c.representative.gens(),
                "size": c.members.len(),
            })
        })
        .collect();
    let results = json!({
        "best_order": res.best_order,
        "witness_count": res.witnesses.len(),
        "classes": classes,
        "exhaustive": res.exhaustive,
        "frontier": res.frontier.as_ref().map(|f| json!({"next_n": f.next_n})),
    });
    let status = if res.frontier.is_some() { EXIT_BUDGET } else { EXIT_OK };
    Ok((request, results, vec![], status))
}

fn cmd_gensets(order: u64, gens: &[u64]) -> Result<Outcome> {
    let graph = make_graph(order, gens, 2 * gens.len() as u32)?;
    let sets = enumerate_primitive_gensets(&graph)?;
    let request = json!({"command": "gensets", "order": order, "gens": gens});
    let results = json!({
        "count": sets.len(),
        "gensets": sets.iter().map(|s| s.gens().to_vec()).collect::<Vec<_>>(),
    });
    Ok((request, results, vec![], EXIT_OK))
}
