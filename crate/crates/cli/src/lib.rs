//! Batch front end: one subcommand per invocation, JSON on stdout.
//!
//! Exit status is 0 on success, 1 on a domain error (reported as
//! `{"error": {"kind", "message"}}` on stdout) and 2 on a usage error.
//! `verify` and `sweep` report their verdicts as data and exit 0.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use parklab::classify::{
    construct_grid, graph_from_affine, is_invariant, sweep_classification, verify_equality, verify_equality_full,
    SweepConfig,
};
use parklab::graph::{match_shapes, parse_graph, to_canonical_text, Bipartition, Weight};
use parklab::lattice::{
    enumerate_upf, find_bounding_path, is_bounded_by, maximal_increasing_upf, maximal_upf, maximal_upf_sum_witness,
    parse_grid,
};
use parklab::orientations::{enumerate_orientations, orientation_to_mpf};
use parklab::parking::{enumerate_mpf, enumerate_pf, is_g_pf, is_maximal};
use parklab::{Error, LatticePath, Limits, PairSequence, ParkingVector, RootedWeightedGraph, WeightGrid};
use serde_json::{json, Value};

pub const MAX_SET_ENV: &str = "PARKLAB_MAX_SET";

#[derive(Parser, Debug)]
#[command(name = "parklab", version, about = "Parking functions on graphs and weight grids")]
struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    /// Largest set any enumeration may build; overrides PARKLAB_MAX_SET.
    #[arg(long, global = true, value_name = "INT")]
    max_set: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Every parking function of the graph.
    Pf(GraphArg),
    /// The maximal parking functions of the graph.
    Mpf(GraphArg),
    /// Membership and maximality of one vector.
    Check {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_name = "CSV", allow_hyphen_values = true)]
        vector: String,
    },
    /// Acyclic orientations with the root as only source, with their images.
    Orientations(GraphArg),
    /// Whether a pair is a U-parking function, with the first bounding path.
    Upf {
        #[command(flatten)]
        grid: GridArg,
        #[arg(long, value_name = "CSV;CSV", allow_hyphen_values = true)]
        pair: String,
        /// Test this path alone instead of searching.
        #[arg(long, value_name = "STEPS")]
        path: Option<String>,
    },
    /// The grid with its maximal elements and extreme path sums.
    Grid {
        #[command(flatten)]
        grid: GridArg,
        /// Also list every U-parking function.
        #[arg(long)]
        all: bool,
    },
    /// Block-permutation invariance and matching shapes.
    Classify(BipartitionedGraph),
    /// The weight grid prescribed for an invariant graph.
    ConstructU(BipartitionedGraph),
    /// The graph realizing an affine grid.
    ConstructGraph(GridArg),
    /// Whether PF(G) equals PF²(U).
    Verify {
        #[command(flatten)]
        graph: BipartitionedGraph,
        #[command(flatten)]
        grid: GridArg,
        /// Compare the full sets rather than the maximal elements.
        #[arg(long)]
        full: bool,
    },
    /// Exhaustive classification over small bipartitioned graphs.
    Sweep {
        /// Largest p + q.
        #[arg(long, default_value_t = 4, value_name = "INT")]
        max_n: usize,
        /// Largest edge weight.
        #[arg(long, default_value_t = 2, value_name = "INT")]
        max_w: Weight,
        /// Worker threads; 0 picks one per core.
        #[arg(long, default_value_t = 0, value_name = "INT")]
        jobs: usize,
    },
}

#[derive(Args, Debug)]
struct GraphArg {
    #[arg(long, value_name = "PATH")]
    graph: PathBuf,
    /// Reject graphs with more non-root vertices.
    #[arg(long, default_value_t = 24, value_name = "INT")]
    max_n: usize,
}

#[derive(Args, Debug)]
struct BipartitionedGraph {
    #[command(flatten)]
    graph: GraphArg,
    /// Vertices of block A; overrides the file header.
    #[arg(long = "A", value_name = "CSV", requires = "b")]
    a: Option<String>,
    /// Vertices of block B.
    #[arg(long = "B", value_name = "CSV", requires = "a")]
    b: Option<String>,
}

#[derive(Args, Debug)]
struct GridArg {
    #[arg(long, value_name = "PATH")]
    grid: PathBuf,
}

/// A failure reported as a JSON error object.
#[derive(Debug)]
struct Failure {
    kind: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { kind: e.kind(), message: e.to_string() }
    }
}

type Outcome = std::result::Result<Value, Failure>;

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure { kind: "Io", message: format!("cannot read {}: {e}", path.display()) })
}

fn load_graph(arg: &GraphArg) -> std::result::Result<RootedWeightedGraph, Failure> {
    let g = parse_graph(&read(&arg.graph)?)?;
    if g.n_nonroot() > arg.max_n {
        return Err(Error::TooLarge { what: "non-root vertex count", limit: arg.max_n }.into());
    }
    Ok(g)
}

fn parse_vertices(csv: &str) -> std::result::Result<Vec<usize>, Failure> {
    csv.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| Failure { kind: "Parse", message: format!("{s:?} is not a vertex") }))
        .collect()
}

/// The graph with the requested blocks, relabeled so A comes first, and the
/// original label of every new vertex.
fn load_bipartitioned(arg: &BipartitionedGraph) -> std::result::Result<(RootedWeightedGraph, Vec<usize>), Failure> {
    let g = load_graph(&arg.graph)?;
    let (Some(a), Some(b)) = (&arg.a, &arg.b) else {
        return Ok((g.clone(), (0..g.vertex_count()).collect()));
    };
    let (a, b) = (parse_vertices(a)?, parse_vertices(b)?);
    let n = g.n_nonroot();
    let mut order = vec![0];
    order.extend(a.iter().chain(&b));
    let mut sorted = order.clone();
    sorted.sort_unstable();
    if sorted != (0..=n).collect::<Vec<_>>() {
        return Err(Error::NotAPartition.into());
    }
    let mut perm = vec![0; n + 1];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    let relabeled = g.relabel(&perm, Some(Bipartition { p: a.len(), q: b.len() }));
    Ok((relabeled, order))
}

fn load_grid(arg: &GridArg) -> std::result::Result<(WeightGrid, Option<parklab::lattice::AffineParams>), Failure> {
    Ok(parse_grid(&read(&arg.grid)?)?)
}

fn vectors<'a>(it: impl IntoIterator<Item = &'a ParkingVector>) -> Vec<Value> {
    it.into_iter().map(|v| json!(v)).collect()
}

fn pair_json(p: &PairSequence) -> Value {
    json!([p.a, p.b])
}

fn relabel_note(order: &[usize]) -> Value {
    if order.iter().enumerate().all(|(k, &v)| k == v) {
        Value::Null
    } else {
        json!(order)
    }
}

fn limits(max_set: Option<usize>) -> std::result::Result<Limits, Failure> {
    let mut limits = Limits::default();
    let from_env = match std::env::var(MAX_SET_ENV) {
        Ok(s) => Some(s.trim().parse::<usize>().map_err(|_| Failure {
            kind: "Parse",
            message: format!("{MAX_SET_ENV}={s:?} is not a non-negative integer"),
        })?),
        Err(_) => None,
    };
    if let Some(m) = max_set.or(from_env) {
        limits.max_set = m;
    }
    Ok(limits)
}

fn execute(command: &Command, limits: &Limits) -> Outcome {
    match command {
        Command::Pf(arg) => {
            let g = load_graph(arg)?;
            let pf = enumerate_pf(&g, limits)?;
            Ok(json!({ "count": pf.len(), "vectors": vectors(&pf) }))
        }
        Command::Mpf(arg) => {
            let g = load_graph(arg)?;
            let mpf = enumerate_mpf(&g);
            Ok(json!({ "count": mpf.len(), "vectors": vectors(&mpf) }))
        }
        Command::Check { graph, vector } => {
            let g = load_graph(graph)?;
            let b: ParkingVector = vector.parse()?;
            let pf = is_g_pf(&g, &b)?;
            let maximal = pf && is_maximal(&g, &b)?;
            Ok(json!({ "parking_function": pf, "maximal": maximal }))
        }
        Command::Orientations(arg) => {
            let g = load_graph(arg)?;
            let mut rows: Vec<(ParkingVector, Vec<String>)> = enumerate_orientations(&g)
                .iter()
                .map(|o| Ok((orientation_to_mpf(o)?, o.tokens())))
                .collect::<parklab::Result<_>>()?;
            rows.sort();
            if rows.len() > limits.max_set {
                return Err(Error::TooLarge { what: "orientation list", limit: limits.max_set }.into());
            }
            let list: Vec<Value> = rows.iter().map(|(b, arcs)| json!({ "arcs": arcs, "mpf": b })).collect();
            Ok(json!({ "count": list.len(), "orientations": list }))
        }
        Command::Upf { grid, pair, path } => {
            let (grid, _) = load_grid(grid)?;
            let pair: PairSequence = pair.parse()?;
            match path {
                Some(p) => {
                    let p: LatticePath = p.parse()?;
                    Ok(json!({ "bounded": is_bounded_by(&pair, &p, &grid)?, "path": p }))
                }
                None => {
                    let witness = find_bounding_path(&pair, &grid)?;
                    Ok(json!({ "upf": witness.is_some(), "witness_path": witness }))
                }
            }
        }
        Command::Grid { grid, all } => {
            let (grid, affine) = load_grid(grid)?;
            let reps: Vec<Value> = maximal_increasing_upf(&grid).iter().map(pair_json).collect();
            let (east, north) = maximal_upf_sum_witness(&grid);
            let mut out = json!({
                "grid": grid,
                "affine": affine,
                "maximal_increasing": reps,
                "maximal_count": maximal_upf(&grid, limits)?.len(),
                "extreme_path_sums": { "east_first": east, "north_first": north },
            });
            if *all {
                let set = enumerate_upf(&grid, limits)?;
                out["count"] = json!(set.len());
                out["upf"] = Value::Array(set.iter().map(pair_json).collect());
            }
            Ok(out)
        }
        Command::Classify(arg) => {
            let (g, order) = load_bipartitioned(arg)?;
            let report = is_invariant(&g)?;
            let shapes = match_shapes(&g)?;
            Ok(json!({
                "invariant": report.invariant,
                "witness": report.witness,
                "family_matches": report.family_matches,
                "shapes": shapes.shapes,
                "swapped": shapes.swapped,
                "vertex_order": relabel_note(&order),
            }))
        }
        Command::ConstructU(arg) => {
            let (g, order) = load_bipartitioned(arg)?;
            let c = construct_grid(&g)?;
            Ok(json!({
                "shape": c.shape,
                "swapped": c.swapped,
                "grid": c.grid,
                "vertex_order": relabel_note(&order),
            }))
        }
        Command::ConstructGraph(arg) => {
            let (grid, affine) = load_grid(arg)?;
            let k = affine.ok_or_else(|| {
                Failure::from(Error::InvalidParameters("only affine grids have a graph construction".into()))
            })?;
            let g = graph_from_affine(grid.p(), grid.q(), &k)?;
            Ok(json!({
                "p": grid.p(),
                "q": grid.q(),
                "edges": g.edges(),
                "graph": to_canonical_text(&g),
            }))
        }
        Command::Verify { graph, grid, full } => {
            let (g, order) = load_bipartitioned(graph)?;
            let (grid, _) = load_grid(grid)?;
            let equal = if *full { verify_equality_full(&g, &grid, limits)? } else { verify_equality(&g, &grid)? };
            Ok(json!({
                "equal": equal,
                "route": if *full { "full-sets" } else { "maximal-elements" },
                "vertex_order": relabel_note(&order),
            }))
        }
        Command::Sweep { max_n, max_w, jobs } => {
            let report = sweep_classification(&SweepConfig { max_n: *max_n, max_w: *max_w, jobs: *jobs });
            Ok(json!(report))
        }
    }
}

fn emit(out: &mut dyn Write, value: &Value, pretty: bool) -> std::io::Result<()> {
    let text = if pretty { serde_json::to_string_pretty(value) } else { serde_json::to_string(value) };
    writeln!(out, "{}", text.expect("JSON values always serialize"))
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let result = limits(cli.max_set).and_then(|l| execute(&cli.command, &l));
    let (value, code) = match result {
        Ok(v) => (v, 0),
        Err(f) => (json!({ "error": { "kind": f.kind, "message": f.message } }), 1),
    };
    if emit(out, &value, cli.pretty).is_err() {
        let _ = writeln!(err, "failed to write output");
        return 1;
    }
    code
}
