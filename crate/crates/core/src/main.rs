use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use planecount::bounds::{contradiction_report, edge_upper_bound, ky_lower_bound, BoundChain, ContradictionRegime};
use planecount::coloring::{BUDGET_ENV, DEFAULT_BUDGET};
use planecount::enumerate::{enumerate_embeddings, find_plane_embedding};
use planecount::io::{parse_planar_code, read_graph6_lines};
use planecount::report::{analyze, color_record, to_json_line, ErrorRecord, Strategy};
use planecount::verify::{verify_theorem2, verify_theorem4, verify_theorem6};
use planecount::{Error, Graph, PlaneGraph, RotationSystem};

const EXIT_VIOLATION: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(name = "planecount", version, about = "Plane-graph counting bounds, coloring and verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Format {
    Graph6,
    #[value(name = "planar_code", alias = "planar-code")]
    PlanarCode,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum EmbeddingMode {
    All,
    Given,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum StrategyArg {
    Peel,
    Exact,
    Auto,
}

#[derive(Subcommand)]
enum Command {
    /// Counts, structure scan, triangle-density verdict and bound checks per graph.
    Analyze {
        /// Input file, or `-` for standard input.
        input: String,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
        #[arg(long, value_enum, default_value = "given")]
        embedding: EmbeddingMode,
        #[arg(long, env = BUDGET_ENV, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Colors every graph of the input.
    Color {
        input: String,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, value_enum, default_value = "auto")]
        strategy: StrategyArg,
        #[arg(long, env = BUDGET_ENV, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Exhaustively checks one theorem over enumerated graphs.
    VerifyTheorems {
        #[arg(long, value_parser = ["2", "4", "6"])]
        theorem: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long, env = BUDGET_ENV, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Prints the exact bound table for a minimum face length and order.
    Bounds {
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long)]
        n: i64,
        /// Emit one JSON object instead of the table.
        #[arg(long)]
        json: bool,
    },
}

fn read_input(path: &str) -> io::Result<Vec<u8>> {
    if path == "-" {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read(path)
    }
}

/// An input item: its id, the abstract graph, and the embedding if the format carries one.
struct Item {
    id: String,
    graph: Graph,
    rotation: Option<RotationSystem>,
}

fn load(path: &str, format: Format) -> Result<Vec<Item>, String> {
    let bytes = read_input(path).map_err(|e| format!("{path}: {e}"))?;
    match format {
        Format::Graph6 => {
            let text = String::from_utf8(bytes).map_err(|e| format!("{path}: not UTF-8: {e}"))?;
            read_graph6_lines(&text)
                .into_iter()
                .map(|(line, g)| match g {
                    Ok(graph) => Ok(Item { id: line.to_string(), graph, rotation: None }),
                    Err(e) => Err(format!("{path}:{}: {e}", line + 1)),
                })
                .collect()
        }
        Format::PlanarCode => parse_planar_code(&bytes).map_err(|e| format!("{path}: {e}")).map(|rs| {
            rs.into_iter()
                .enumerate()
                .map(|(i, r)| Item { id: i.to_string(), graph: r.graph(), rotation: Some(r) })
                .collect()
        }),
    }
}

/// Splits an item into connected pieces; a given rotation restricts to each piece.
fn components(item: &Item) -> Vec<(String, Graph, Option<RotationSystem>)> {
    let comps = item.graph.components();
    if comps.len() <= 1 {
        return vec![(item.id.clone(), item.graph.clone(), item.rotation.clone())];
    }
    comps
        .iter()
        .enumerate()
        .map(|(c, verts)| {
            let sub = item.graph.induced_subgraph(verts);
            let rotation = item.rotation.as_ref().map(|r| {
                let mut index = vec![usize::MAX; item.graph.n()];
                for (i, &v) in verts.iter().enumerate() {
                    index[v] = i;
                }
                let rot = verts.iter().map(|&v| r.rotation(v).iter().map(|&u| index[u]).collect()).collect();
                RotationSystem::new(rot).expect("restriction of a valid rotation")
            });
            (format!("{}/c{c}", item.id), sub, rotation)
        })
        .collect()
}

fn analyze_item(item: &Item, mode: EmbeddingMode, budget: u64) -> Vec<String> {
    let mut lines = Vec::new();
    let emit_err = |id: &str, e: &Error| to_json_line(&ErrorRecord::new(id, e)).expect("serializable");
    for (id, graph, rotation) in components(item) {
        let rotations: Result<Vec<(String, RotationSystem)>, Error> = match (mode, rotation) {
            (EmbeddingMode::Given, Some(r)) => Ok(vec![(id.clone(), r)]),
            (EmbeddingMode::Given, None) => find_plane_embedding(&graph, budget)
                .and_then(|r| r.ok_or(Error::NotGenusZero(1)))
                .map(|r| vec![(id.clone(), r)]),
            (EmbeddingMode::All, _) => enumerate_embeddings(&graph, true, budget)
                .map(|rs| rs.into_iter().enumerate().map(|(k, r)| (format!("{id}:e{k}"), r)).collect()),
        };
        match rotations {
            Err(e) => lines.push(emit_err(&id, &e)),
            Ok(rs) => {
                for (eid, r) in rs {
                    match PlaneGraph::new(r) {
                        Ok(p) => lines.push(to_json_line(&analyze(eid, &p, budget)).expect("serializable")),
                        Err(e) => lines.push(emit_err(&eid, &e)),
                    }
                }
            }
        }
    }
    lines
}

fn print_lines(lines: &[String]) -> io::Result<()> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for l in lines {
        writeln!(out, "{l}")?;
    }
    out.flush()
}

fn regime_text(regime: ContradictionRegime) -> String {
    match regime {
        ContradictionRegime::Always => "always".into(),
        ContradictionRegime::UpTo(n) => format!("only for n <= {n}"),
        ContradictionRegime::From(n) => format!("only for n >= {n}"),
        ContradictionRegime::Never => "never".into(),
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Analyze { input, format, embedding, budget } => {
            let items = load(&input, format)?;
            let lines: Vec<String> = items.par_iter().map(|it| analyze_item(it, embedding, budget)).flatten().collect();
            print_lines(&lines).map_err(|e| e.to_string())?;
            eprintln!("analyzed {} input graphs, {} records", items.len(), lines.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Color { input, format, k, strategy, budget } => {
            let items = load(&input, format)?;
            let strategy = match strategy {
                StrategyArg::Peel => Strategy::Peel,
                StrategyArg::Exact => Strategy::Exact,
                StrategyArg::Auto => Strategy::Auto,
            };
            let lines: Vec<String> = items
                .par_iter()
                .map(|it| to_json_line(&color_record(&it.id, &it.graph, k, strategy, budget)).expect("serializable"))
                .collect();
            print_lines(&lines).map_err(|e| e.to_string())?;
            eprintln!("colored {} graphs", lines.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyTheorems { theorem, max_n, budget } => {
            let summary = match theorem.as_str() {
                "2" => verify_theorem2(max_n),
                "4" => verify_theorem4(max_n, budget),
                _ => verify_theorem6(max_n, budget, &[]),
            }
            .map_err(|e| e.to_string())?;
            print_lines(&[to_json_line(&summary).expect("serializable")]).map_err(|e| e.to_string())?;
            eprintln!("theorem {} up to n = {}", summary.theorem, summary.max_n);
            eprintln!("graphs checked: {}", summary.graphs_checked);
            eprintln!("instances checked: {}", summary.instances_checked);
            eprintln!("hypothesis instances: {}", summary.hypothesis_instances);
            eprintln!("violations: {}", summary.violations.len());
            Ok(if summary.passed() { ExitCode::SUCCESS } else { ExitCode::from(EXIT_VIOLATION) })
        }
        Command::Bounds { m, n, json } => {
            let chain = BoundChain::new(m).map_err(|e| e.to_string())?;
            let edge = edge_upper_bound(m, n).map_err(|e| e.to_string())?;
            let ky = ky_lower_bound(n).map_err(|e| e.to_string())?;
            let report = contradiction_report(m).map_err(|e| e.to_string())?;
            if json {
                let value = serde_json::json!({
                    "m": m,
                    "n": n,
                    "face_coefficient": chain.face_coefficient,
                    "edge_bound": edge,
                    "ky_bound": ky,
                    "contradiction": report,
                });
                println!("{value}");
            } else {
                println!("m = {m}, n = {n}");
                println!("face coefficient 6/(m+6): {}", chain.face_coefficient);
                println!("edge bound (m+6)(n-2)/m: {edge}");
                println!("KY bound (5n-2)/3: {ky}");
                println!("bounds contradict at n = {n}: {}", report.contradicts_at(n));
                println!("contradiction: {}", regime_text(report.regime));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
