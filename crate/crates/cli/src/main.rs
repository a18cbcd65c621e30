//! `boxturan`: command-line front end.
//!
//! Every subcommand except `graph` and `sweep` prints one JSON report on
//! stdout and a one-line summary on stderr. Exit codes: 0 PASS, 1 FAIL,
//! 2 usage or input error, 3 SEARCH-FAILED.

use std::io::{Read as _, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use boxturan::acceptance::{self, Options};
use boxturan::extremal::{construct_extremal, decompose_certificate, verify_extremal};
use boxturan::geometry::{depth_with, find_induced_k2m, intersection_graph_with};
use boxturan::helly::{beta_asymptotic, beta_convergence, guaranteed_depth, helly_witness};
use boxturan::oracle::{exact_t_1d_with, search_t_with};
use boxturan::regularity::{erdos_stone_extract, partition_search_with};
use boxturan::turan::{self, FormulaTriple};
use boxturan::{parse_family, BoxFamily, Error, IntersectionGraph, Mode, Rational};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "boxturan", version, about = "Exact extremal numbers for box intersection graphs")]
struct Cli {
    /// Worker threads for data-parallel loops. 1 runs sequentially.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Triple {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    k: u64,
    #[arg(long)]
    d: u64,
}

#[derive(Args, Clone)]
struct Input {
    /// Family JSON or edge list; standard input when omitted.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args, Clone, Copy)]
struct Search {
    #[arg(long, default_value_t = 100_000)]
    budget: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate T(n, k, d) and report the branch used.
    Formula(Triple),
    /// Build the extremal family for (n, k, d).
    Construct(Triple),
    /// Build the extremal family and check its edge count and depth.
    Verify(Triple),
    /// Run the decomposition certificate on a family of depth at most k.
    Certify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: u64,
    },
    /// Print the intersection graph as an edge list.
    Graph {
        #[command(flatten)]
        input: Input,
        /// Emit a JSON report instead of the edge list.
        #[arg(long)]
        json: bool,
    },
    /// Maximum depth of a family with a witness point.
    Depth {
        #[command(flatten)]
        input: Input,
    },
    /// Look for an induced K_{2,m}: m non-adjacent pairs, all cross pairs adjacent.
    K2m {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        m: usize,
    },
    /// Exhaustive maximum over interval families.
    OracleExact {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Seeded local search for many intersecting pairs at bounded depth.
    OracleSearch {
        #[command(flatten)]
        triple: Triple,
        #[command(flatten)]
        search: Search,
    },
    /// Depth forced by a number of intersecting pairs.
    HellyGuarantee {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        edges: u64,
    },
    /// Asymptotic depth fraction with a convergence table.
    Beta {
        /// Pair density as P/Q.
        #[arg(long)]
        alpha: Rational,
        #[arg(long)]
        d: u64,
        /// Sizes for the convergence table.
        #[arg(long, value_delimiter = ',', default_value = "100,1000,10000")]
        ns: Vec<u64>,
        /// Print the convergence table as CSV instead of JSON.
        #[arg(long)]
        csv: bool,
    },
    /// Pair density and deepest point of a family.
    HellyWitness {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        alpha: Rational,
    },
    /// Search for a homogeneous equipartition.
    Regularity {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        classes: usize,
        #[arg(long)]
        epsilon: Rational,
        #[command(flatten)]
        search: Search,
    },
    /// Extract a complete (d + 1)-partite subgraph from a dense graph.
    ErdosStone {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        epsilon: Rational,
        #[command(flatten)]
        search: Search,
    },
    /// CSV table of formula and construction for d <= max-d, k <= n <= max-n.
    Sweep {
        #[arg(long, default_value_t = 12)]
        max_n: u64,
        #[arg(long, default_value_t = 3)]
        max_d: u64,
    },
    /// Run the acceptance suite.
    Selftest {
        /// Reduced ranges.
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Pass,
    Fail,
    SearchFailed,
}

impl Status {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::SearchFailed => "SEARCH-FAILED",
        }
    }

    fn code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::SearchFailed => 3,
        }
    }
}

/// What a subcommand hands back to be wrapped in the report.
struct Outcome {
    params: Value,
    results: Value,
    status: Status,
    seed: Option<u64>,
    summary: String,
}

enum Output {
    Report(Outcome),
    /// Printed verbatim.
    Text(String, Status),
}

type CmdResult = Result<Output, String>;

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn err(e: Error) -> String {
    e.to_string()
}

fn read_input(input: &Input) -> Result<String, String> {
    match &input.file {
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| format!("stdin: {e}"))?;
            Ok(text)
        }
    }
}

fn source(input: &Input) -> Value {
    match &input.file {
        Some(p) => json!(p.display().to_string()),
        None => json!("stdin"),
    }
}

fn read_family(input: &Input) -> Result<BoxFamily, String> {
    parse_family(&read_input(input)?).map_err(err)
}

/// A family (JSON object) or an edge list, told apart by the first character.
fn read_graph(input: &Input, mode: Mode) -> Result<IntersectionGraph, String> {
    let text = read_input(input)?;
    if text.trim_start().starts_with('{') {
        Ok(intersection_graph_with(&parse_family(&text).map_err(err)?, mode))
    } else {
        IntersectionGraph::parse_edge_list(&text).map_err(err)
    }
}

fn triple_params(t: Triple) -> Value {
    json!({ "n": t.n, "k": t.k, "d": t.d })
}

fn report(params: Value, results: Value, status: Status, summary: String) -> CmdResult {
    Ok(Output::Report(Outcome {
        params,
        results,
        status,
        seed: None,
        summary,
    }))
}

fn run(command: Command, mode: Mode) -> CmdResult {
    match command {
        Command::Formula(t) => {
            let e = turan::evaluate(t.n, t.k, t.d).map_err(err)?;
            let (psi, bounds, holds) = if t.k > t.d {
                let gap = turan::corollary_gap(t.n, t.k, t.d).map_err(err)?;
                let holds = gap.refined_holds && gap.strict_holds;
                (Some(turan::psi(t.n, t.k, t.d).map_err(err)?), Some(to_json(&gap)), holds)
            } else {
                (None, None, true)
            };
            let turan_nk = turan::turan_edges(t.n, t.k).map_err(err)?;
            report(
                triple_params(t),
                json!({ "T": e.value, "branch": e.branch, "psi": psi, "t": turan_nk, "bounds": bounds }),
                Status::from_bool(holds),
                format!("T({},{},{}) = {}", t.n, t.k, t.d, e.value),
            )
        }
        Command::Construct(t) => {
            let e = construct_extremal(t.n, t.k, t.d).map_err(err)?;
            let edges = intersection_graph_with(&e.family, mode).edge_count();
            report(
                triple_params(t),
                json!({ "edges": edges, "construction": to_json(&e) }),
                Status::Pass,
                format!("{} boxes, {edges} intersecting pairs", e.family.len()),
            )
        }
        Command::Verify(t) => {
            let r = verify_extremal(FormulaTriple::new(t.n, t.k, t.d)).map_err(err)?;
            report(
                triple_params(t),
                to_json(&r),
                Status::from_bool(r.pass),
                format!("edges {} (T = {}), depth {}", r.edges, r.formula, r.depth),
            )
        }
        Command::Certify { input, k } => {
            let f = read_family(&input)?;
            let trace = decompose_certificate(&f, k).map_err(err)?;
            report(
                json!({ "file": source(&input), "k": k }),
                to_json(&trace),
                Status::from_bool(trace.holds),
                format!(
                    "{} steps, {} edges, bound {}, formula {}",
                    trace.steps.len(),
                    trace.edges,
                    trace.total_bound,
                    trace.formula
                ),
            )
        }
        Command::Graph { input, json } => {
            let g = read_graph(&input, mode)?;
            if !json {
                return Ok(Output::Text(g.to_edge_list(), Status::Pass));
            }
            let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
            report(
                json!({ "file": source(&input) }),
                json!({ "vertices": g.vertex_count(), "edge_count": g.edge_count(), "edges": edges }),
                Status::Pass,
                format!("{} vertices, {} edges", g.vertex_count(), g.edge_count()),
            )
        }
        Command::Depth { input } => {
            let f = read_family(&input)?;
            let (depth, cert) = depth_with(&f, mode).map_err(err)?;
            report(
                json!({ "file": source(&input) }),
                json!({ "depth": depth, "certificate": to_json(&cert) }),
                Status::from_bool(cert.verify(&f)),
                format!("depth {depth} at {:?}", cert.point),
            )
        }
        Command::K2m { input, m } => {
            let g = read_graph(&input, mode)?;
            let w = find_induced_k2m(&g, m).map_err(err)?;
            let verdict = if w.is_some() { "FOUND" } else { "ABSENT" };
            let witness = w.map(|pairs| pairs.into_iter().map(|(a, b)| [a, b]).collect::<Vec<_>>());
            report(
                json!({ "file": source(&input), "m": m }),
                json!({ "verdict": verdict, "witness": witness }),
                Status::Pass,
                format!("induced K_(2,{m}) {verdict}"),
            )
        }
        Command::OracleExact { n, k } => {
            let r = exact_t_1d_with(n, k, mode).map_err(err)?;
            let expected = turan::interval_extremal(n, k).map_err(err)?;
            report(
                json!({ "n": n, "k": k }),
                json!({ "oracle": to_json(&r), "formula": expected }),
                Status::from_bool(r.best_edges == expected),
                format!("exhaustive maximum {} vs formula {expected}", r.best_edges),
            )
        }
        Command::OracleSearch { triple: t, search } => {
            let r = search_t_with(t.n, t.k, t.d, search.budget, search.seed, mode).map_err(err)?;
            let expected = turan::extremal_pairs(t.n, t.k, t.d).map_err(err)?;
            let status = match r.best_edges.cmp(&expected) {
                std::cmp::Ordering::Greater => Status::Fail,
                std::cmp::Ordering::Equal => Status::Pass,
                std::cmp::Ordering::Less => Status::SearchFailed,
            };
            let mut params = triple_params(t);
            params["budget"] = json!(search.budget);
            params["seed"] = json!(search.seed);
            Ok(Output::Report(Outcome {
                params,
                results: json!({ "oracle": to_json(&r), "formula": expected }),
                status,
                seed: Some(search.seed),
                summary: format!("best {} vs formula {expected}", r.best_edges),
            }))
        }
        Command::HellyGuarantee { n, d, edges } => {
            let g = guaranteed_depth(n, d, edges).map_err(err)?;
            report(
                json!({ "n": n, "d": d, "edges": edges }),
                to_json(&g),
                Status::Pass,
                format!("some point lies in {} boxes", g.guaranteed_depth),
            )
        }
        Command::Beta { alpha, d, ns, csv } => {
            let beta = beta_asymptotic(alpha, d).map_err(err)?;
            let rows = beta_convergence(alpha, d, &ns).map_err(err)?;
            if csv {
                let mut out = String::from("n,edges,guaranteed_depth,ratio,beta,error\n");
                for r in &rows {
                    out.push_str(&format!(
                        "{},{},{},{},{},{}\n",
                        r.n, r.edges, r.guaranteed_depth, r.ratio, r.beta, r.error
                    ));
                }
                return Ok(Output::Text(out, Status::Pass));
            }
            report(
                json!({ "alpha": alpha.to_string(), "d": d, "ns": ns }),
                json!({ "beta": beta, "convergence": to_json(&rows) }),
                Status::Pass,
                format!("beta = {beta:.6}"),
            )
        }
        Command::HellyWitness { input, alpha } => {
            let f = read_family(&input)?;
            let w = helly_witness(&f, alpha).map_err(err)?;
            report(
                json!({ "file": source(&input), "alpha": alpha.to_string() }),
                to_json(&w),
                Status::from_bool(w.sound && w.certificate.verify(&f)),
                format!(
                    "{} pairs (threshold {}), depth {} >= guarantee {}",
                    w.pairs,
                    w.threshold,
                    w.certificate.depth(),
                    w.guarantee.guaranteed_depth
                ),
            )
        }
        Command::Regularity {
            input,
            classes,
            epsilon,
            search,
        } => {
            let g = read_graph(&input, mode)?;
            let p = partition_search_with(&g, classes, epsilon, search.budget, search.seed, mode).map_err(err)?;
            Ok(Output::Report(Outcome {
                params: json!({
                    "file": source(&input),
                    "classes": classes,
                    "epsilon": epsilon.to_string(),
                    "budget": search.budget,
                    "seed": search.seed,
                }),
                status: if p.success { Status::Pass } else { Status::SearchFailed },
                summary: format!("irregular fraction {}", p.partition.irregular_fraction),
                results: to_json(&p),
                seed: Some(search.seed),
            }))
        }
        Command::ErdosStone {
            input,
            d,
            epsilon,
            search,
        } => {
            let g = read_graph(&input, mode)?;
            let o = erdos_stone_extract(&g, d, epsilon, search.budget, search.seed).map_err(err)?;
            Ok(Output::Report(Outcome {
                params: json!({
                    "file": source(&input),
                    "d": d,
                    "epsilon": epsilon.to_string(),
                    "budget": search.budget,
                    "seed": search.seed,
                }),
                status: if o.witness.is_some() { Status::Pass } else { Status::SearchFailed },
                summary: match &o.witness {
                    Some(w) => format!("complete {}-partite subgraph, parts {:?}", d + 1, w.part_sizes()),
                    None => "no witness found".into(),
                },
                results: to_json(&o),
                seed: Some(search.seed),
            }))
        }
        Command::Sweep { max_n, max_d } => sweep(max_n, max_d, mode),
        Command::Selftest { quick } => {
            let outcomes = acceptance::run_all(Options { mode, quick });
            for o in &outcomes {
                eprintln!("{o}");
            }
            let passed = outcomes.iter().filter(|o| o.passed).count();
            report(
                json!({ "quick": quick }),
                to_json(&outcomes),
                Status::from_bool(passed == outcomes.len()),
                format!("{passed} of {} criteria pass", outcomes.len()),
            )
        }
    }
}

fn sweep(max_n: u64, max_d: u64, mode: Mode) -> CmdResult {
    let mut out = String::from("n,k,d,T,psi,construct_edges,depth,status\n");
    let mut all = true;
    for d in 1..=max_d {
        for n in 1..=max_n {
            for k in 1..=n {
                let t = turan::extremal_pairs(n, k, d).map_err(err)?;
                let psi = if k > d {
                    turan::psi(n, k, d).map_err(err)?.to_string()
                } else {
                    String::new()
                };
                let e = construct_extremal(n, k, d).map_err(err)?;
                let edges = intersection_graph_with(&e.family, mode).edge_count();
                let (depth, _) = depth_with(&e.family, mode).map_err(err)?;
                let ok = edges as u64 == t && depth as u64 == k;
                all &= ok;
                out.push_str(&format!(
                    "{n},{k},{d},{t},{psi},{edges},{depth},{}\n",
                    Status::from_bool(ok).label()
                ));
            }
        }
    }
    Ok(Output::Text(out, Status::from_bool(all)))
}

fn configure(workers: usize) -> Result<Mode, String> {
    if workers == 0 {
        return Err("--workers must be at least 1".into());
    }
    if workers == 1 {
        return Ok(Mode::Sequential);
    }
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .map_err(|e| e.to_string())?;
        Ok(Mode::Parallel)
    }
    #[cfg(not(feature = "parallel"))]
    {
        eprintln!("built without the `parallel` feature; running sequentially");
        Ok(Mode::Sequential)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    let start = Instant::now();
    let result = configure(cli.workers).and_then(|mode| run(cli.command, mode));
    match result {
        Ok(Output::Text(text, status)) => {
            emit(&text);
            ExitCode::from(status.code())
        }
        Ok(Output::Report(o)) => {
            let mut doc = json!({
                "command": name,
                "params": o.params,
                "results": o.results,
                "status": o.status.label(),
                "elapsed_ms": start.elapsed().as_millis() as u64,
            });
            if let Some(seed) = o.seed {
                doc["seed"] = json!(seed);
            }
            emit(&format!("{}\n", serde_json::to_string_pretty(&doc).expect("valid JSON")));
            eprintln!("{name}: {} ({})", o.status.label(), o.summary);
            ExitCode::from(o.status.code())
        }
        Err(message) => {
            eprintln!("{name}: error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Formula(_) => "formula",
        Command::Construct(_) => "construct",
        Command::Verify(_) => "verify",
        Command::Certify { .. } => "certify",
        Command::Graph { .. } => "graph",
        Command::Depth { .. } => "depth",
        Command::K2m { .. } => "k2m",
        Command::OracleExact { .. } => "oracle-exact",
        Command::OracleSearch { .. } => "oracle-search",
        Command::HellyGuarantee { .. } => "helly-guarantee",
        Command::Beta { .. } => "beta",
        Command::HellyWitness { .. } => "helly-witness",
        Command::Regularity { .. } => "regularity",
        Command::ErdosStone { .. } => "erdos-stone",
        Command::Sweep { .. } => "sweep",
        Command::Selftest { .. } => "selftest",
    }
}
