use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use superflats::complement::{complement_rank_both_ways, converse_counterexample, rank_sum_report, rank_sum_sweep};
use superflats::enumerate::all_graphs_up_to;
use superflats::flats::{self, c_rank};
use superflats::geometry::{self, Peg};
use superflats::graph::io;
use superflats::lattice::{self, SetLattice};
use superflats::minors::{certificate_minor, cm_rank, forbidden_family, forbidden_family_from};
use superflats::verify::{resolve_graph, run_all, VerifyOptions};
use superflats::{limits, Error, Graph, VertexSet};

#[derive(Parser)]
#[command(name = "superflats", version, about = "Superboolean rank, lattices of flats and geometries of graphs")]
struct Cli {
    /// Output format for graphs embedded in reports.
    #[arg(long, value_enum, global = true, default_value_t = Format::Graph6)]
    format: Format,
    /// Write a DOT diagram to this file.
    #[arg(long, global = true)]
    dot: Option<PathBuf>,
    /// Compact single-line JSON instead of pretty-printed.
    #[arg(long, global = true)]
    json: bool,
    /// Size ceilings, as `key=value,...`; overrides the environment.
    #[arg(long, global = true)]
    limits: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edges,
    Graph6,
}

#[derive(Subcommand)]
enum Command {
    /// Metrics, c-rank, sobriety and structural class of a graph.
    Analyze { graph: String },
    /// The lattice of flats and its predicates.
    Flats { graph: String },
    /// c-rank, optionally by every route.
    Crank {
        graph: String,
        #[arg(long)]
        all_routes: bool,
    },
    /// c-independent sets.
    Independents {
        graph: String,
        /// Only report counts.
        #[arg(long)]
        count: bool,
    },
    /// The geometry of an SC3 graph.
    Geo { graph: String },
    /// Levi graph of a geometry (fano, desargues, k3, a `points N` file) or
    /// of a graph viewed as a geometry.
    Levi { input: String },
    /// cm-rank with its certificate.
    Cmrank { graph: String },
    /// c-rank of the complement and the rank-sum bounds.
    Complement { graph: String },
    /// Extremes of the rank sum over all graphs up to `--max-n` vertices.
    Sweep {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Runs the invariant suite.
    VerifyTheorems {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Graphs with at most 2m vertices and c-rank m+1.
    Forbidden {
        m: usize,
        /// Allow m = 4.
        #[arg(long)]
        long: bool,
        /// Take candidates from a graph6 file instead of generating them.
        #[arg(long)]
        from: Option<PathBuf>,
        /// Print one graph6 string per line instead of JSON.
        #[arg(long)]
        plain: bool,
    },
    /// Prints a graph in the chosen `--format`.
    Show { graph: String },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::UnknownGraph(_) | Error::Shape(_) | Error::InvalidVertex { .. } | Error::Loop(_) | Error::Axiom { .. } => 2,
        Error::SizeLimit { .. } | Error::Capacity(_) => 3,
        Error::Precondition(_) | Error::Quarantined { .. } | Error::InvalidMinorOp(_) => 4,
        Error::TheoremViolation(_) | Error::Fixture { .. } => 5,
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: exit_code(&e), message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: 1, message: e.to_string() }
    }
}

fn load_graph(input: &str) -> Result<Graph, Failure> {
    let p = Path::new(input);
    if p.is_file() {
        let text = fs::read_to_string(p)?;
        return Ok(io::parse_any(&text)?);
    }
    Ok(resolve_graph(input)?)
}

fn load_peg(input: &str) -> Result<Peg, Failure> {
    if let Ok(p) = geometry::peg_fixture(input) {
        return Ok(p);
    }
    let p = Path::new(input);
    if p.is_file() {
        let text = fs::read_to_string(p)?;
        if text.trim_start().starts_with("points") {
            return Ok(Peg::parse(&text)?);
        }
        return Ok(Peg::from_graph(&io::parse_any(&text)?)?);
    }
    Ok(Peg::from_graph(&resolve_graph(input)?)?)
}

fn emit_graph(g: &Graph, f: Format) -> Value {
    match f {
        Format::Graph6 => json!(io::to_graph6(g)),
        Format::Edges => json!(g.edges()),
    }
}

fn sets(v: &[VertexSet]) -> Value {
    json!(v.iter().map(|s| s.to_vec()).collect::<Vec<_>>())
}

fn lattice_json(l: &SetLattice) -> Value {
    let p = lattice::predicates(l);
    json!({
        "elements": sets(l.elements()),
        "covers": l.hasse_edges(),
        "height": l.height(),
        "shortest_maximal_chain": l.shortest_maximal_chain_length(),
        "predicates": p,
    })
}

fn write_dot(path: &Option<PathBuf>, text: impl FnOnce() -> String) -> Result<(), Failure> {
    if let Some(p) = path {
        fs::write(p, text())?;
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<Option<Value>, Failure> {
    let fmt = cli.format;
    let v = match &cli.command {
        Command::Analyze { graph } => {
            let g = load_graph(graph)?;
            write_dot(&cli.dot, || io::to_dot(&g, graph))?;
            let report = flats::classify_low_rank(&g)?;
            let fl = flats::flats(&g)?;
            json!({
                "graph": emit_graph(&g, fmt),
                "metrics": g.metrics(),
                "c_rank": report.c_rank,
                "class": report.class,
                "sober": g.is_sober(),
                "sc3": flats::is_sc3(&g)?,
                "closed_vertices": flats::closed_vertices(&g).to_vec(),
                "flats": fl.len(),
                "predicates": lattice::predicates(&fl),
            })
        }
        Command::Flats { graph } => {
            let g = load_graph(graph)?;
            let l = flats::flats(&g)?;
            write_dot(&cli.dot, || l.to_dot(graph, |s| s.to_string()))?;
            lattice_json(&l)
        }
        Command::Crank { graph, all_routes } => {
            let g = load_graph(graph)?;
            let c = c_rank(&g)?;
            if *all_routes {
                json!({
                    "c_rank": c,
                    "routes": {
                        "height": c,
                        "matrix": flats::c_rank_by_matrix(&g)?,
                        "recursive": flats::c_rank_recursive(&g)?,
                        "transversal": flats::c_rank_by_transversals(&g)?,
                    }
                })
            } else {
                json!({ "c_rank": c })
            }
        }
        Command::Independents { graph, count } => {
            let g = load_graph(graph)?;
            let fam = flats::all_c_independent_sets(&g)?;
            if *count {
                json!({ "count": fam.len(), "by_size": fam.by_size() })
            } else {
                json!({ "count": fam.len(), "by_size": fam.by_size(), "members": sets(fam.members()) })
            }
        }
        Command::Geo { graph } => {
            let g = load_graph(graph)?;
            let p = geometry::geo(&g)?;
            write_dot(&cli.dot, || io::to_dot(&geometry::levi(&p).expect("Levi graph of Geo"), graph))?;
            json!({
                "points": p.n_points(),
                "lines": sets(p.lines()),
                "signature": geometry::configuration_signature(&p),
                "connected": geometry::peg_connected(&p),
                "sober": geometry::peg_is_sober(&p),
            })
        }
        Command::Levi { input } => {
            let p = load_peg(input)?;
            let lg = geometry::levi(&p)?;
            write_dot(&cli.dot, || io::to_dot(&lg, input))?;
            let structure = if geometry::peg_is_sober(&p) && geometry::peg_connected(&p) && p.min_degree() >= 2 {
                json!(geometry::flats_of_levi_structure(&p)?)
            } else {
                Value::Null
            };
            json!({
                "geometry": { "points": p.n_points(), "lines": sets(p.lines()) },
                "signature": geometry::configuration_signature(&p),
                "levi": emit_graph(&lg, fmt),
                "vertices": lg.n(),
                "edges": lg.edge_count(),
                "girth": lg.girth(),
                "flats_structure": structure,
            })
        }
        Command::Cmrank { graph } => {
            let g = load_graph(graph)?;
            let c = cm_rank(&g)?;
            let minor = certificate_minor(&g, &c)?;
            json!({
                "cm_rank": c.cm_rank,
                "c_rank": c_rank(&g)?,
                "partition": sets(&c.partition.blocks),
                "witness": c.witness,
                "minor": emit_graph(&minor, fmt),
                "minor_c_rank": c_rank(&minor)?,
            })
        }
        Command::Complement { graph } => {
            let g = load_graph(graph)?;
            let r = rank_sum_report(&g)?;
            json!({
                "report": r,
                "complement_c_rank": complement_rank_both_ways(&g)?,
                "converse_counterexample": converse_counterexample(&g)?.map(|w| w.to_vec()),
            })
        }
        Command::Sweep { max_n } => json!({ "rows": rank_sum_sweep(&all_graphs_up_to(*max_n)?)? }),
        Command::VerifyTheorems { max_n, seed, samples } => {
            let results = run_all(&VerifyOptions { max_n: *max_n, seed: *seed, samples: *samples })?;
            let failed = results.iter().filter(|r| !r.passed).count();
            for r in &results {
                eprintln!("{} {}{}", if r.passed { "PASS" } else { "FAIL" }, r.name,
                    if r.detail.is_empty() { String::new() } else { format!(": {}", r.detail) });
            }
            let v = json!({ "checks": results, "passed": results.len() - failed, "failed": failed });
            if failed > 0 {
                print_json(&v, cli.json);
                return Err(Failure { code: 5, message: format!("{failed} checks failed") });
            }
            v
        }
        Command::Forbidden { m, long, from, plain } => {
            let fam = match from {
                Some(path) => forbidden_family_from(*m, io::parse_graph6_stream(&fs::read_to_string(path)?)?)?,
                None => forbidden_family(*m, *long)?,
            };
            if *plain {
                for g in &fam {
                    println!("{}", io::to_graph6(g));
                }
                return Ok(None);
            }
            let members: Vec<Value> = fam
                .iter()
                .map(|g| Ok(json!({ "n": g.n(), "c_rank": c_rank(g)?, "canonical": io::to_graph6(g) })))
                .collect::<Result<_, Error>>()?;
            json!({ "m": m, "count": fam.len(), "members": members })
        }
        Command::Show { graph } => {
            let g = load_graph(graph)?;
            match fmt {
                Format::Graph6 => println!("{}", io::to_graph6(&g)),
                Format::Edges => print!("{}", io::to_edge_list(&g)),
            }
            return Ok(None);
        }
    };
    Ok(Some(v))
}

fn print_json(v: &Value, compact: bool) {
    let mut v = v.clone();
    if let Value::Object(m) = &mut v {
        m.insert("schema".into(), json!(1));
    }
    let s = if compact { serde_json::to_string(&v) } else { serde_json::to_string_pretty(&v) };
    println!("{}", s.expect("JSON values serialize"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let parsed = match &cli.limits {
        Some(text) => limits::Limits::parse(text),
        None => limits::Limits::from_env(),
    };
    match parsed {
        Ok(l) => limits::set(l),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    }
    match run(&cli) {
        Ok(Some(v)) => {
            print_json(&v, cli.json);
            ExitCode::SUCCESS
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
