//! `mdens`: densities, balance checks, constructions and the catalog of
//! critical densities from the command line.
//!
//! Exit codes: 0 success or a true verdict, 1 a false verdict, 2 usage
//! error, 3 search budget or size limit exceeded.

use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use minor_density::catalog::{enumerate_b, gap, membership, next_above, witness, Membership};
use minor_density::export::{write_catalog_csv, write_catalog_jsonl};
use minor_density::families::FamilySpec;
use minor_density::graph6::parse_graph6_lines;
use minor_density::minor::{balance_check_with, densest_minor_with, is_minor_with, BalanceMode, SearchConfig};
use minor_density::plants::{edge_plant_cover, plant_classify, plant_edge_bound, PlantResult};
use minor_density::searchlab::{crosscheck_report, scan_balanced, scan_graphs, ScanOptions, ScanReport};
use minor_density::verify::{run_all, run_criterion, VerifyOptions};
use minor_density::{emit_graph6, parse_graph6, t_density, Error, Graph, Rational};

#[derive(Parser)]
#[command(name = "mdens", version, about = "Exact densities of minor-closed graph classes")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Global {
    /// Emit JSON lines instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Maximum number of search states per minor search.
    #[arg(long, global = true, env = "MD_BUDGET")]
    budget: Option<u64>,
    /// Worker threads.
    #[arg(long, global = true, env = "MD_JOBS")]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Edges per vertex.
    Density { graph: Option<String> },
    /// (e - C(t,2)) / (v - t), or 0 when e <= C(t,2).
    Tdensity {
        #[arg(short)]
        t: usize,
        graph: Option<String>,
    },
    /// Is no minor denser (or, with --strict, every proper minor sparser)?
    Balanced {
        #[arg(long)]
        strict: bool,
        /// Compare t-densities instead of densities.
        #[arg(short)]
        t: Option<usize>,
        graph: Option<String>,
    },
    /// Classify a graph as a 2-plant, or run the edge cover test.
    Plant {
        /// Report, for each edge, whether it lies in a (k+1)-vertex tight
        /// plant or in some plant with surplus edges.
        #[arg(long, value_name = "K")]
        cover: Option<usize>,
        graph: Option<String>,
    },
    /// Build a family member, e.g. `gkm:2,3`, `bowtie-star:2`, `witness-25-11`.
    Construct { spec: String },
    #[command(subcommand)]
    Catalog(CatalogCmd),
    #[command(subcommand)]
    Minor(MinorCmd),
    /// Classify every graph up to an order (or a graph6 stream).
    Scan {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long)]
        strict: bool,
        #[arg(short)]
        t: Option<usize>,
        /// Permit orders 9 and 10.
        #[arg(long)]
        allow_large: bool,
        /// Read graph6 lines from this file (`-` for stdin) instead of enumerating.
        #[arg(long)]
        input: Option<String>,
        /// Print every hit, not just the totals.
        #[arg(long)]
        hits: bool,
    },
    /// Compare densities of minor-balanced graphs with the catalog.
    Crosscheck {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long)]
        allow_large: bool,
        #[arg(long)]
        input: Option<String>,
    },
    /// Run the reproduction checks.
    Verify {
        #[arg(long)]
        deep: bool,
        /// Run a single row, e.g. `5` or `S2`.
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// Members in [LO, HI).
    List {
        lo: Rational,
        hi: Rational,
        /// Keep values whose witness has at most this many vertices.
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long)]
        csv: bool,
    },
    Member { x: Rational },
    /// Distance from X to the next member above it.
    Gap { x: Rational },
    /// A graph6 witness for a member.
    Witness { x: Rational },
}

#[derive(Subcommand)]
enum MinorCmd {
    /// Is H a minor of G?
    Test { h: String, g: Option<String> },
    /// A densest minor.
    Densest { graph: Option<String> },
}

/// Failure of a command, carrying its exit code.
struct Fail {
    code: u8,
    msg: String,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded(_) | Error::SizeLimit { .. } | Error::Capacity(_) | Error::Overflow(_) => 3,
            _ => 2,
        };
        Fail { code, msg: e.to_string() }
    }
}

impl From<io::Error> for Fail {
    fn from(e: io::Error) -> Self {
        Fail { code: 2, msg: e.to_string() }
    }
}

type Outcome = Result<u8, Fail>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("mdens: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn verdict(v: bool) -> u8 {
    if v {
        0
    } else {
        1
    }
}

fn read_source(source: &str) -> io::Result<String> {
    if source == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(source)
    }
}

/// A graph from the argument, or the first non-blank stdin line when the
/// argument is absent or `-`.
fn input_graph(arg: Option<&str>) -> Result<Graph, Fail> {
    let text = match arg {
        Some(s) if s != "-" => s.to_string(),
        _ => read_source("-")?,
    };
    let line = text.lines().map(str::trim).find(|l| !l.is_empty()).ok_or(Fail { code: 2, msg: "no graph given".into() })?;
    Ok(parse_graph6(line)?)
}

fn search_config(g: &Global) -> SearchConfig {
    let mut cfg = SearchConfig::default();
    if let Some(b) = g.budget {
        cfg.budget = b;
    }
    cfg.jobs = g.jobs.unwrap_or(1).max(1);
    cfg
}

fn print_json(v: &impl serde::Serialize) -> Result<(), Fail> {
    println!("{}", serde_json::to_string(v).map_err(Error::from)?);
    Ok(())
}

fn run(cli: &Cli) -> Outcome {
    let g = &cli.global;
    match &cli.command {
        Command::Density { graph } => {
            let h = input_graph(graph.as_deref())?;
            let d = h.density()?;
            if g.json {
                print_json(&json!({ "graph6": emit_graph6(&h), "v": h.order(), "e": h.size(), "density": d }))?;
            } else {
                println!("{d}");
            }
            Ok(0)
        }
        Command::Tdensity { t, graph } => {
            let h = input_graph(graph.as_deref())?;
            let d = t_density(&h, *t);
            if g.json {
                print_json(&json!({ "graph6": emit_graph6(&h), "t": t, "value": d }))?;
            } else {
                println!("{d}");
            }
            Ok(0)
        }
        Command::Balanced { strict, t, graph } => {
            let h = input_graph(graph.as_deref())?;
            let mode = BalanceMode::from_parts(*t, *strict);
            let r = balance_check_with(&h, mode, &search_config(g))?;
            if g.json {
                print_json(&r)?;
            } else {
                println!("{}", r.verdict);
                if let Some(c) = &r.counterexample {
                    let ops: Vec<String> = c.ops.iter().map(|o| o.to_string()).collect();
                    eprintln!("counterexample {} with value {} (input {}): {}", emit_graph6(&c.minor), c.value, r.value, ops.join(", "));
                }
            }
            Ok(verdict(r.verdict))
        }
        Command::Plant { cover: None, graph } => {
            let h = input_graph(graph.as_deref())?;
            let r = plant_classify(&h);
            let name = match r {
                PlantResult::NotPlant => "not_plant",
                PlantResult::PlantEq(_) => "plant_eq",
                PlantResult::PlantPlus(_) => "plant_plus",
            };
            if g.json {
                print_json(&json!({ "graph6": emit_graph6(&h), "class": name, "certificate": r.certificate() }))?;
            } else if let Some(c) = r.certificate() {
                let order: Vec<String> = c.ordering.iter().map(|v| v.to_string()).collect();
                println!("{name} {}", order.join(","));
            } else {
                println!("{name}");
            }
            Ok(verdict(r.is_plant()))
        }
        Command::Plant { cover: Some(k), graph } => {
            let h = input_graph(graph.as_deref())?;
            let edges = edge_plant_cover(&h, *k)?;
            let all = edges.iter().all(|c| c.covered());
            let n = h.order();
            let t = (n - 1) % k;
            let bound = plant_edge_bound(n, *k, t)?;
            if g.json {
                print_json(&json!({ "k": k, "edges": edges, "covered": all, "e": h.size(), "bound": bound }))?;
            } else {
                for c in &edges {
                    println!("{}-{} tight={} plus={}", c.u, c.v, c.tight, c.plus);
                }
                println!("covered={all} e={} bound={bound}", h.size());
            }
            Ok(verdict(all))
        }
        Command::Construct { spec } => {
            let spec: FamilySpec = spec.parse()?;
            let h = spec.build()?;
            if g.json {
                print_json(&json!({ "spec": spec.to_string(), "graph6": emit_graph6(&h), "v": h.order(), "e": h.size() }))?;
            } else {
                println!("{}", emit_graph6(&h));
            }
            Ok(0)
        }
        Command::Catalog(c) => catalog(g, c),
        Command::Minor(MinorCmd::Test { h, g: host }) => {
            let small = parse_graph6(h)?;
            let big = input_graph(host.as_deref())?;
            let cert = is_minor_with(&small, &big, &search_config(g))?;
            if g.json {
                print_json(&json!({ "minor": cert.is_some(), "certificate": cert }))?;
            } else {
                println!("{}", cert.is_some());
            }
            Ok(verdict(cert.is_some()))
        }
        Command::Minor(MinorCmd::Densest { graph }) => {
            let h = input_graph(graph.as_deref())?;
            let d = densest_minor_with(&h, &search_config(g))?;
            if g.json {
                print_json(&json!({ "graph6": emit_graph6(&d.graph), "density": d.density, "ops": d.ops, "explored": d.explored }))?;
            } else {
                let ops: Vec<String> = d.ops.iter().map(|o| o.to_string()).collect();
                println!("{} {}", d.density, emit_graph6(&d.graph));
                if !ops.is_empty() {
                    eprintln!("{}", ops.join(", "));
                }
            }
            Ok(0)
        }
        Command::Scan { max_n, strict, t, allow_large, input, hits } => {
            let mode = BalanceMode::from_parts(*t, *strict);
            let report = scan(g, *max_n, mode, *allow_large, input.as_deref())?;
            if g.json {
                print_json(&report)?;
            } else {
                println!("{:>3} {:>8} {:>6} {:>8}", "n", "graphs", "hits", "flagged");
                for l in &report.totals {
                    println!("{:>3} {:>8} {:>6} {:>8}", l.n, l.graphs, l.hits, l.flagged);
                }
                if *hits {
                    for h in &report.hits {
                        println!("{} v={} e={} value={}", h.graph6, h.v, h.e, h.value);
                    }
                }
                eprintln!("{} in {:.2?}", report.mode, report.elapsed);
            }
            Ok(verdict(!report.partial))
        }
        Command::Crosscheck { max_n, allow_large, input } => {
            let report = scan(g, *max_n, BalanceMode::MinorBalanced, *allow_large, input.as_deref())?;
            let r = crosscheck_report(&report)?;
            if g.json {
                print_json(&r)?;
            } else {
                let show = |xs: &[Rational]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
                println!("max_n {}", r.max_n);
                println!("densities found below 2: {}", show(&r.densities_found));
                println!("catalog misses: {}", r.catalog_misses.len());
                println!("witness misses: {}", r.witness_misses.len());
                println!("flagged: {}", r.flagged.len());
                for x in r.catalog_misses.iter().chain(&r.witness_misses) {
                    println!("  miss {x}");
                }
                eprintln!("{:.2?}", r.elapsed);
            }
            Ok(verdict(r.passed()))
        }
        Command::Verify { deep, only } => {
            let opts = VerifyOptions {
                deep: *deep,
                jobs: g.jobs.unwrap_or(1).max(1),
                budget: g.budget.unwrap_or(VerifyOptions::default().budget),
            };
            let json = g.json;
            let show = |r: &minor_density::verify::CriterionResult| {
                if json {
                    println!("{}", serde_json::to_string(r).expect("plain struct"));
                } else {
                    let mark = if r.passed { "pass" } else { "FAIL" };
                    println!("[{mark}] {:>3} {:<36} {:>9.2?}  {}", r.id, r.title, r.elapsed, r.detail);
                }
            };
            let results = match only {
                Some(id) => {
                    let r = run_criterion(id, &opts).ok_or(Fail { code: 2, msg: format!("no check named `{id}`") })?;
                    show(&r);
                    vec![r]
                }
                None => run_all(&opts, show),
            };
            Ok(verdict(results.iter().all(|r| r.passed)))
        }
    }
}

fn scan(g: &Global, max_n: usize, mode: BalanceMode, allow_large: bool, input: Option<&str>) -> Result<ScanReport, Fail> {
    let opts = ScanOptions { search: search_config(g), jobs: g.jobs.unwrap_or(1).max(1), allow_large };
    Ok(match input {
        Some(src) => scan_graphs(&parse_graph6_lines(&read_source(src)?)?, mode, &opts)?,
        None => scan_balanced(max_n, mode, &opts)?,
    })
}

fn catalog(g: &Global, c: &CatalogCmd) -> Outcome {
    match c {
        CatalogCmd::List { lo, hi, max_order, csv } => {
            let entries = enumerate_b(*lo, *hi, *max_order)?;
            let out = io::stdout();
            let mut w = BufWriter::new(out.lock());
            if *csv {
                write_catalog_csv(&entries, &mut w)?;
            } else if g.json {
                write_catalog_jsonl(&entries, &mut w)?;
            } else {
                for e in &entries {
                    writeln!(w, "{} {} {}", e.beta, e.kind.name(), e.witness_spec)?;
                }
            }
            w.flush()?;
            Ok(0)
        }
        CatalogCmd::Member { x } => {
            let m = membership(*x);
            if g.json {
                print_json(&m)?;
            }
            Ok(match m {
                Membership::InB { entry } => {
                    if !g.json {
                        println!("in B: {} {}", entry.kind.name(), entry.witness_spec);
                    }
                    0
                }
                Membership::NotInB => {
                    if !g.json {
                        println!("not in B");
                    }
                    1
                }
                Membership::UnknownAbove2 { known_hit: Some(hit) } => {
                    if !g.json {
                        println!("in B: known member above 2 {:?}", hit.rules);
                    }
                    0
                }
                Membership::UnknownAbove2 { known_hit: None } => {
                    if !g.json {
                        println!("undecided above 2");
                    }
                    1
                }
            })
        }
        CatalogCmd::Gap { x } => {
            let next = next_above(*x)?;
            let d = gap(*x)?;
            if g.json {
                print_json(&json!({ "x": x, "next": next.beta, "gap": d }))?;
            } else {
                println!("{d} (next {})", next.beta);
            }
            Ok(0)
        }
        CatalogCmd::Witness { x } => match membership(*x) {
            Membership::InB { entry } => {
                let h = witness(&entry)?;
                if g.json {
                    print_json(&json!({ "beta": x, "spec": entry.witness_spec.to_string(), "graph6": emit_graph6(&h) }))?;
                } else {
                    println!("{}", emit_graph6(&h));
                }
                Ok(0)
            }
            _ => {
                eprintln!("not in B");
                Ok(1)
            }
        },
    }
}
