use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use dchoose::coloring::{self, ListAssignment};
use dchoose::corpus::{self, CorpusGraph, ManifestEntry};
use dchoose::discharging;
use dchoose::format::{read_graph, read_lists, render_coloring, render_lists};
use dchoose::plane_graph::PlaneGraph;
use dchoose::reducibility::{self, oracle};
use dchoose::structure;

#[derive(Parser)]
#[command(
    name = "dchoose",
    version,
    about = "Defective list coloring of plane graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the faces of an embedded graph.
    Faces { graph: PathBuf },
    /// Length of a shortest cycle.
    Girth { graph: PathBuf },
    /// Degree and face statistics with light, soft, weak and bad vertices.
    Classify { graph: PathBuf },
    /// Whether some 4-cycle shares an edge with a 3-cycle or another 4-cycle.
    CheckClass { graph: PathBuf },
    /// Find an (L,d)*-coloring.
    Color {
        graph: PathBuf,
        /// List file with lines `v: c1 c2 c3`.
        #[arg(long, conflicts_with = "uniform")]
        lists: Option<PathBuf>,
        /// Give every vertex the list {1..k}.
        #[arg(long)]
        uniform: Option<u32>,
        #[arg(long, default_value_t = 1)]
        defect: usize,
        /// Color by peeling reducible configurations instead of search.
        #[arg(long)]
        recursive: bool,
    },
    /// Decide (k,d)*-choosability by exhaustive search.
    Choosable {
        graph: PathBuf,
        k: usize,
        d: usize,
        /// Maximum number of list systems to try.
        #[arg(long, default_value_t = coloring::DEFAULT_CHOOSABILITY_BUDGET)]
        budget: u128,
    },
    /// List every reducible configuration instance.
    FindConfig { graph: PathBuf },
    /// Run the discharging rules and audit the ledger.
    Discharge { graph: PathBuf },
    /// Check every extension procedure against its templates.
    VerifyLemmas {
        /// Templates with more cases than this are sampled.
        #[arg(long, default_value_t = oracle::OracleOptions::default().case_budget)]
        budget: u64,
        #[arg(long, default_value_t = oracle::OracleOptions::default().samples)]
        samples: u64,
        #[arg(long, default_value_t = oracle::OracleOptions::default().seed)]
        seed: u64,
    },
    /// Run the whole pipeline on every graph of a corpus directory.
    Scan {
        dir: PathBuf,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Random 3-list trials per class member.
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

fn load(path: &Path) -> Result<PlaneGraph> {
    read_graph(path).with_context(|| format!("reading {}", path.display()))
}

fn girth_value(g: &PlaneGraph) -> usize {
    structure::girth(g).unwrap_or(0)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Returns whether every assertion of the command held.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Faces { graph } => {
            let g = load(&graph)?;
            for (i, f) in g.faces().iter().enumerate() {
                let walk: Vec<String> = f
                    .vertices()
                    .iter()
                    .map(|&v| g.label(v).to_string())
                    .collect();
                println!("f{i} degree {}: {}", f.degree(), walk.join(" "));
            }
            Ok(true)
        }
        Command::Girth { graph } => {
            let g = load(&graph)?;
            match structure::girth(&g) {
                Ok(k) => println!("girth: {k}"),
                Err(_) => println!("girth: none (acyclic)"),
            }
            Ok(true)
        }
        Command::Classify { graph } => {
            let g = load(&graph)?;
            print!("{}", structure::classify(&g).render(&g));
            Ok(true)
        }
        Command::CheckClass { graph } => {
            let g = load(&graph)?;
            print!("{}", structure::in_class(&g).render(&g));
            Ok(true)
        }
        Command::Color {
            graph,
            lists,
            uniform,
            defect,
            recursive,
        } => {
            let g = load(&graph)?;
            let lists = match (lists, uniform) {
                (Some(path), _) => {
                    read_lists(&g, &path).with_context(|| format!("reading {}", path.display()))?
                }
                (None, Some(k)) => ListAssignment::uniform(g.vertex_count(), k),
                (None, None) => bail!("give --lists FILE or --uniform K"),
            };
            let colors = if recursive {
                if defect != 1 {
                    bail!("--recursive colors with defect 1 only");
                }
                let run = reducibility::recursive_color(&g, &lists)?;
                for a in &run.anomalies {
                    eprintln!("{}: {} vertices without a configuration", a.tag, a.vertices);
                }
                Some(run.coloring)
            } else {
                coloring::solve(&g, &lists, defect)
            };
            match colors {
                Some(c) => {
                    let ok = coloring::check_total(&g, Some(&lists), &c, defect).is_valid();
                    print!("{}", render_coloring(&g, &c));
                    println!("valid: {}", if ok { "yes" } else { "no" });
                    Ok(ok)
                }
                None => {
                    println!("no coloring");
                    Ok(false)
                }
            }
        }
        Command::Choosable {
            graph,
            k,
            d,
            budget,
        } => {
            let g = load(&graph)?;
            let r = coloring::is_choosable(&g, k, d, budget)?;
            println!("({k},{d})*-choosable: {}", r.choosable);
            println!("list systems checked: {}", r.assignments_checked);
            if let Some(w) = &r.witness {
                println!("witness:");
                print!("{}", render_lists(&g, w));
            }
            Ok(true)
        }
        Command::FindConfig { graph } => {
            let g = load(&graph)?;
            let all = reducibility::find_all(&g);
            for cfg in &all {
                println!("{}", cfg.render(&g));
            }
            println!("configurations: {}", all.len());
            Ok(true)
        }
        Command::Discharge { graph } => {
            let g = load(&graph)?;
            let (run, report) = discharging::audit(&g)?;
            print!("{}", discharging::render(&g, &run, &report));
            Ok(report.passes())
        }
        Command::VerifyLemmas {
            budget,
            samples,
            seed,
        } => {
            let opts = oracle::OracleOptions {
                case_budget: budget,
                samples,
                seed,
            };
            let mut ok = true;
            for r in oracle::verify_all(&opts) {
                println!("{} {}", if r.passed() { "pass" } else { "FAIL" }, r.line());
                if let Some(f) = &r.first_failure {
                    println!("  first failure: {f}");
                }
                ok &= r.passed();
            }
            Ok(ok)
        }
        Command::Scan { dir, seed, trials } => scan(&dir, seed, trials),
    }
}

struct ScanRow {
    name: String,
    line: String,
    failures: Vec<String>,
}

fn scan_one(c: &CorpusGraph, seed: u64, trials: usize) -> ScanRow {
    let g = &c.graph;
    let e = &c.entry;
    let mut failures = Vec::new();
    let class = structure::is_in_class(g);
    if class != e.in_class {
        failures.push(format!("in_class {class}, manifest says {}", e.in_class));
    }
    let girth = girth_value(g);
    if girth != e.girth {
        failures.push(format!("girth {girth}, manifest says {}", e.girth));
    }
    let report = structure::classify(g);
    let configs = reducibility::find_all(g);
    let mut audit = "-".to_string();
    let mut colored = "-".to_string();
    if class {
        match discharging::audit(g) {
            Ok((_, r)) => {
                audit = if r.passes() { "ok" } else { "FAIL" }.into();
                if !r.passes() {
                    failures.push("discharge audit failed".into());
                }
            }
            Err(err) => failures.push(format!("discharge: {err}")),
        }
        if configs.is_empty() && g.vertex_count() > 0 {
            failures.push("no reducible configuration in a class member".into());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut good = 0;
        for trial in 0..trials {
            let lists = ListAssignment::random(g.vertex_count(), 3, 9, &mut rng);
            match reducibility::recursive_color(g, &lists) {
                Ok(run) => {
                    let valid = coloring::check_total(g, Some(&lists), &run.coloring, 1).is_valid();
                    if !valid {
                        failures.push(format!("trial {trial}: invalid coloring"));
                    } else if !run.anomalies.is_empty() {
                        failures.push(format!("trial {trial}: {} anomalies", run.anomalies.len()));
                    } else {
                        good += 1;
                    }
                }
                Err(err) => failures.push(format!("trial {trial}: {err}")),
            }
        }
        colored = format!("{good}/{trials}");
    }
    ScanRow {
        name: e.name.clone(),
        line: format!(
            "{:<28} n={:<3} girth={:<2} class={:<3} 3-vertices={:<3} configs={:<4} discharge={:<4} colored={}",
            e.name,
            g.vertex_count(),
            girth,
            if class { "yes" } else { "no" },
            report.vertices.iter().filter(|v| v.degree == 3).count(),
            configs.len(),
            audit,
            colored
        ),
        failures,
    }
}

/// Graphs of `dir`: from its manifest when present, otherwise every `.rot`
/// file with expectations taken from the graph itself.
fn scan_inputs(dir: &Path) -> Result<Vec<CorpusGraph>> {
    if dir.join("manifest.toml").exists() {
        return Ok(corpus::load(dir)?);
    }
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .with_context(|| format!("reading {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "rot"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let graph = load(&p)?;
            let entry = ManifestEntry {
                name: p
                    .file_stem()
                    .unwrap_or_default()
                    .to_string_lossy()
                    .into_owned(),
                file: p.display().to_string(),
                description: String::new(),
                vertices: graph.vertex_count(),
                edges: graph.edges().len(),
                in_class: structure::is_in_class(&graph),
                girth: girth_value(&graph),
            };
            Ok(CorpusGraph { entry, graph })
        })
        .collect()
}

fn scan(dir: &Path, seed: u64, trials: usize) -> Result<bool> {
    let inputs = scan_inputs(dir)?;
    let rows: Vec<ScanRow> = inputs
        .par_iter()
        .map(|c| scan_one(c, seed, trials))
        .collect();
    let mut ok = true;
    for row in &rows {
        println!("{}", row.line);
        for f in &row.failures {
            println!("  FAIL {}: {f}", row.name);
        }
        ok &= row.failures.is_empty();
    }
    println!(
        "graphs: {}  failed: {}",
        rows.len(),
        rows.iter().filter(|r| !r.failures.is_empty()).count()
    );
    Ok(ok)
}
