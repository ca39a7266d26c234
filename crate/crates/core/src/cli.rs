//! Command-line front end. `run` does all the work and returns the exit
//! code plus captured output, so tests can drive it without a subprocess.
//!
//! Exit codes: 0 success, 1 bad input or configuration, 2 infeasible
//! instance, 3 a category check found a counterexample.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::category::{
    check_associativity, check_equivalence, check_functor_laws, EquivalenceFunctor, EquivalenceReport, LawReport,
    OrbitCategory, PathCategory, ProjectionFunctor, QuotientCategory, QuotientFunctor, DEFAULT_MORPHISM_BUDGET,
};
use crate::error::{Error, Result};
use crate::export::{fiber_dot, graph_dot, optimal_subgraph_dot, parse_solution, GraphScope, SolutionsReport};
use crate::model::{capacity, Flavor, HwPuzzle, HwState, Limits, McPuzzle, McState, Puzzle, DEFAULT_MAX_N};
use crate::path::Path;
use crate::solver::{
    collect_solutions, enumerate_lifts, lift_solution, shortest_solutions, McPath, StateGraph,
};
use crate::symmetry::{orbit, stabilizer, Permutation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USER: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "rivercross", version, about = "River-crossing puzzles: solve, count, lift and check")]
pub struct Cli {
    /// Worker threads for parallel enumeration (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,

    /// Largest n any command will enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N)]
    pub max_n: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Shortest solution length and the exact number of shortest solutions.
    Solve(SolveArgs),
    /// Is the goal reachable? Exit 0 if so, 2 if not.
    Feasible(Instance),
    /// Lift a counting solution to a labelled one.
    Lift(LiftArgs),
    /// Render a state graph, optimal subgraph, fiber lattice or solution set.
    Export(ExportArgs),
    /// List the relabelling orbit of a labelled state.
    Orbit(OrbitArgs),
    /// Check functor laws, associativity and the orbit equivalence up to a path bound.
    Catcheck(CatcheckArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FlavorArg {
    Hw,
    Mc,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Flavor {
        match f {
            FlavorArg::Hw => Flavor::Hw,
            FlavorArg::Mc => Flavor::Mc,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Args)]
pub struct Instance {
    #[arg(long, value_enum, default_value = "mc")]
    pub flavor: FlavorArg,

    /// Number of couples.
    #[arg(short = 'n', default_value_t = 3)]
    pub n: usize,

    /// Boat capacity; defaults to the smallest capacity that works for n.
    #[arg(short = 'b')]
    pub b: Option<usize>,
}

impl Instance {
    fn capacity(&self) -> Result<usize> {
        match self.b {
            Some(0) => Err(Error::InvalidCapacity(0)),
            Some(b) => Ok(b),
            None => capacity(self.n),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub instance: Instance,

    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,

    /// Also list the shortest solutions (text format).
    #[arg(long)]
    pub list: bool,

    /// Most solutions to list or export.
    #[arg(long, default_value_t = 1000)]
    pub max_solutions: usize,

    /// Count every repetition-free solution up to this length instead of
    /// only the shortest ones.
    #[arg(long)]
    pub max_len: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct LiftArgs {
    /// Counting solution: a JSON report, a JSON path array, or one state per line.
    pub file: PathBuf,

    /// Number of couples; read from the file when omitted.
    #[arg(short = 'n')]
    pub n: Option<usize>,

    #[arg(short = 'b')]
    pub b: Option<usize>,

    /// Also enumerate every labelled lift.
    #[arg(long)]
    pub fiber: bool,

    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct ExportArgs {
    #[command(flatten)]
    pub instance: Instance,

    /// Only the part reachable from the initial state.
    #[arg(long, conflicts_with_all = ["optimal", "fiber"])]
    pub component: bool,

    /// Union of all shortest solutions.
    #[arg(long, conflicts_with = "fiber")]
    pub optimal: bool,

    /// Fiber lattice over a counting solution (`--solution`, or the first shortest one).
    #[arg(long)]
    pub fiber: bool,

    #[arg(long)]
    pub solution: Option<PathBuf>,

    #[arg(long, value_enum, default_value = "dot")]
    pub format: Format,

    #[arg(long, default_value_t = 1000)]
    pub max_solutions: usize,

    /// Write here instead of standard output.
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct OrbitArgs {
    /// A labelled state such as `[w3 h1 h2 h3 | w1 w2 : R]`.
    pub state: String,

    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct CatcheckArgs {
    #[arg(short = 'n', default_value_t = 3)]
    pub n: usize,

    #[arg(short = 'b')]
    pub b: Option<usize>,

    /// Path-length bound.
    #[arg(short = 'L', default_value_t = 6)]
    pub bound: usize,

    /// Longest morphism used for exhaustive associativity.
    #[arg(long, default_value_t = 4)]
    pub assoc_len: usize,

    /// Sampled triples for the orbit category.
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Cap on morphisms materialised by one enumeration.
    #[arg(long, default_value_t = DEFAULT_MORPHISM_BUDGET)]
    pub budget: usize,

    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn with_code(code: i32, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }

    fn error(e: &Error) -> Self {
        Outcome { code: EXIT_USER, stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USER } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK { Outcome::ok(text) } else { Outcome { code, stdout: String::new(), stderr: text } };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build() {
        Ok(p) => p,
        Err(e) => return Outcome::error(&Error::Invalid(format!("thread pool: {e}"))),
    };
    let limits = Limits { max_n: cli.max_n };
    pool.install(|| dispatch(&cli.command, &limits)).unwrap_or_else(|e| Outcome::error(&e))
}

fn dispatch(cmd: &Command, limits: &Limits) -> Result<Outcome> {
    match cmd {
        Command::Solve(a) => match a.instance.flavor {
            FlavorArg::Hw => solve(HwPuzzle::new(a.instance.n, a.instance.capacity()?, limits)?, a),
            FlavorArg::Mc => solve(McPuzzle::new(a.instance.n, a.instance.capacity()?, limits)?, a),
        },
        Command::Feasible(i) => match i.flavor {
            FlavorArg::Hw => feasible(HwPuzzle::new(i.n, i.capacity()?, limits)?),
            FlavorArg::Mc => feasible(McPuzzle::new(i.n, i.capacity()?, limits)?),
        },
        Command::Lift(a) => lift(a, limits),
        Command::Export(a) => export(a, limits),
        Command::Orbit(a) => orbit_cmd(a),
        Command::Catcheck(a) => catcheck(a, limits),
    }
}

fn infeasible_line(component: usize) -> String {
    format!("unreachable; component={component}\n")
}

#[derive(Serialize)]
struct InfeasibleJson {
    n: usize,
    b: usize,
    flavor: Flavor,
    feasible: bool,
    component: usize,
}

fn solve<P: Puzzle>(puzzle: P, a: &SolveArgs) -> Result<Outcome> {
    let graph = StateGraph::build(puzzle);
    let p = graph.puzzle();
    if let Some(max_len) = a.max_len {
        let all = collect_solutions(&graph, max_len, a.max_solutions.max(1).saturating_mul(1000))?;
        let mut out = format!("max_len={max_len} count={}\n", all.len());
        if a.list {
            for s in all.iter().take(a.max_solutions) {
                let _ = writeln!(out, "{s}");
            }
        }
        return Ok(Outcome::ok(out));
    }
    let found = match shortest_solutions(&graph, a.max_solutions) {
        Ok(f) => f,
        Err(Error::Infeasible { component }) => {
            let out = match a.format {
                Format::Json => json_line(&InfeasibleJson {
                    n: p.n(),
                    b: p.b(),
                    flavor: P::FLAVOR,
                    feasible: false,
                    component,
                })?,
                _ => infeasible_line(component),
            };
            return Ok(Outcome::with_code(EXIT_INFEASIBLE, out));
        }
        Err(e) => return Err(e),
    };
    let out = match a.format {
        Format::Json => json_line(&SolutionsReport::from_shortest(p, &found))?,
        Format::Dot => optimal_subgraph_dot(&graph)?,
        Format::Text => {
            let mut out = format!("length={} count={}\n", found.length, found.count);
            if a.list {
                for s in &found.solutions {
                    let _ = writeln!(out, "{s}");
                }
                if found.truncated {
                    let _ = writeln!(out, "# listed {} of {}", found.solutions.len(), found.count);
                }
            }
            out
        }
    };
    Ok(Outcome::ok(out))
}

fn feasible<P: Puzzle>(puzzle: P) -> Result<Outcome> {
    let graph = StateGraph::build(puzzle);
    let reach = graph.reachable_indices();
    if graph.is_feasible() {
        let length = graph.distances_from(graph.initial())[graph.goal()].unwrap_or(0);
        Ok(Outcome::ok(format!("feasible; length={length} component={}\n", reach.len())))
    } else {
        Ok(Outcome::with_code(EXIT_INFEASIBLE, infeasible_line(reach.len())))
    }
}

fn json_line<T: Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| Error::Invalid(format!("json: {e}")))?;
    s.push('\n');
    Ok(s)
}

fn read_file(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Number of couples of the first state mentioned in a counting solution file.
fn infer_n(text: &str) -> Result<usize> {
    if let Ok(v) = serde_json::from_str::<serde_json::Value>(text) {
        if let Some(n) = v.get("n").and_then(serde_json::Value::as_u64) {
            return Ok(n as usize);
        }
        if let Some(first) = v.as_array().and_then(|a| a.first()) {
            let s: McState =
                serde_json::from_value(first.clone()).map_err(|e| Error::Parse(format!("first state: {e}")))?;
            return Ok(s.n());
        }
    }
    let line = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| l.starts_with('['))
        .ok_or_else(|| Error::Parse("no state found in solution file".into()))?;
    Ok(line.parse::<McState>()?.n())
}

fn load_mc_solution(file: &PathBuf, n: Option<usize>, b: Option<usize>, limits: &Limits) -> Result<(McPuzzle, McPath)> {
    let text = read_file(file)?;
    let n = match n {
        Some(n) => n,
        None => infer_n(&text)?,
    };
    let b = match b {
        Some(b) => b,
        None => capacity(n)?,
    };
    let mc = McPuzzle::new(n, b, limits)?;
    let path = parse_solution(&mc, &text)?;
    Ok((mc, path))
}

fn trace_label(p: &Permutation) -> String {
    if p.is_identity() {
        "e".to_string()
    } else {
        p.to_string()
    }
}

#[derive(Serialize)]
struct FiberJson {
    count: u128,
    layer_sizes: Vec<usize>,
}

#[derive(Serialize)]
struct LiftJson {
    n: usize,
    b: usize,
    solution: Vec<crate::path::PathItem<HwState, crate::model::HwMove>>,
    permutations: Vec<Permutation>,
    rotations_only: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    fiber: Option<FiberJson>,
}

fn lift(a: &LiftArgs, limits: &Limits) -> Result<Outcome> {
    let (mc, path) = load_mc_solution(&a.file, a.n, a.b, limits)?;
    let trace = lift_solution(&mc, &path)?;
    let lattice = if a.fiber || a.format == Format::Dot { Some(enumerate_lifts(&mc, &path)?) } else { None };
    let out = match a.format {
        Format::Dot => fiber_dot(lattice.as_ref().expect("built for dot"), Some(&trace.path)),
        Format::Json => json_line(&LiftJson {
            n: mc.n(),
            b: mc.b(),
            solution: trace.path.to_items(),
            permutations: trace.permutations.clone(),
            rotations_only: trace.uses_only_rotations(),
            fiber: lattice.as_ref().map(|l| FiberJson { count: l.count, layer_sizes: l.layer_sizes() }),
        })?,
        Format::Text => {
            let mut out = String::new();
            out.push_str(&path_lines(&trace.path));
            let labels: Vec<String> = trace.permutations.iter().map(trace_label).collect();
            let _ = writeln!(out, "trace={}", labels.join(","));
            let _ = writeln!(out, "rotations_only={}", trace.uses_only_rotations());
            if let Some(l) = &lattice {
                let sizes: Vec<String> = l.layer_sizes().iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "layers={}", sizes.join(","));
                let _ = writeln!(out, "fiber={}", l.count);
            }
            out
        }
    };
    Ok(Outcome::ok(out))
}

/// One state per line with the move that leads to the next one in between.
fn path_lines<S: std::fmt::Display, M: std::fmt::Display>(p: &Path<S, M>) -> String {
    let mut out = format!("{}\n", p.start);
    for (m, s) in &p.steps {
        let _ = writeln!(out, "  {m}");
        let _ = writeln!(out, "{s}");
    }
    out
}

fn emit(a: &ExportArgs, body: String) -> Result<Outcome> {
    match &a.output {
        Some(path) => {
            std::fs::write(path, body).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(body)),
    }
}

fn export(a: &ExportArgs, limits: &Limits) -> Result<Outcome> {
    let inst = &a.instance;
    let b = inst.capacity()?;
    if a.fiber {
        let mc = McPuzzle::new(inst.n, b, limits)?;
        let path = match &a.solution {
            Some(file) => parse_solution(&mc, &read_file(file)?)?,
            None => match shortest_solutions(&StateGraph::build(mc), 1) {
                Ok(found) => found.solutions.into_iter().next().expect("feasible instance has a solution"),
                Err(Error::Infeasible { component }) => {
                    return Ok(Outcome::with_code(EXIT_INFEASIBLE, infeasible_line(component)))
                }
                Err(e) => return Err(e),
            },
        };
        let lattice = enumerate_lifts(&mc, &path)?;
        let body = match a.format {
            Format::Json => json_line(&FiberJson { count: lattice.count, layer_sizes: lattice.layer_sizes() })?,
            _ => fiber_dot(&lattice, lift_solution(&mc, &path).ok().as_ref().map(|t| &t.path)),
        };
        return emit(a, body);
    }
    match inst.flavor {
        FlavorArg::Hw => export_graph(HwPuzzle::new(inst.n, b, limits)?, a),
        FlavorArg::Mc => export_graph(McPuzzle::new(inst.n, b, limits)?, a),
    }
}

fn export_graph<P: Puzzle>(puzzle: P, a: &ExportArgs) -> Result<Outcome> {
    let graph = StateGraph::build(puzzle);
    let needs_solution = a.optimal || a.format == Format::Json;
    if needs_solution && !graph.is_feasible() {
        return Ok(Outcome::with_code(EXIT_INFEASIBLE, infeasible_line(graph.reachable_indices().len())));
    }
    let body = if a.format == Format::Json {
        let found = shortest_solutions(&graph, a.max_solutions)?;
        json_line(&SolutionsReport::from_shortest(graph.puzzle(), &found))?
    } else if a.optimal {
        optimal_subgraph_dot(&graph)?
    } else {
        graph_dot(&graph, if a.component { GraphScope::Component } else { GraphScope::Full })
    };
    emit(a, body)
}

#[derive(Serialize)]
struct OrbitJson {
    representative: HwState,
    members: Vec<HwState>,
    stabilizer: usize,
}

fn orbit_cmd(a: &OrbitArgs) -> Result<Outcome> {
    let s: HwState = a.state.parse()?;
    let o = orbit(&s);
    let out = match a.format {
        Format::Json => json_line(&OrbitJson {
            representative: o.representative,
            stabilizer: stabilizer(&s).len(),
            members: o.members,
        })?,
        _ => o.members.iter().map(|m| format!("{m}\n")).collect(),
    };
    Ok(Outcome::ok(out))
}

#[derive(Serialize)]
struct CatcheckJson {
    #[serde(flatten)]
    equivalence: EquivalenceReport,
    seed: u64,
    laws: Vec<LawReport>,
}

/// What `catcheck` verifies and how hard it tries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatcheckConfig {
    pub n: usize,
    pub b: usize,
    /// Path-length bound of every category.
    pub bound: usize,
    /// Longest morphism cut for exhaustive associativity.
    pub assoc_len: usize,
    /// Sampled triples for the orbit category.
    pub samples: usize,
    pub seed: u64,
    pub budget: usize,
}

impl CatcheckConfig {
    pub fn new(n: usize, b: usize, bound: usize) -> Self {
        CatcheckConfig { n, b, bound, assoc_len: 4, samples: 10_000, seed: 0, budget: DEFAULT_MORPHISM_BUDGET }
    }
}

/// Every law and equivalence check used by `catcheck`, in report order.
pub fn catcheck_report(cfg: &CatcheckConfig, limits: &Limits) -> Result<(EquivalenceReport, Vec<LawReport>)> {
    let CatcheckConfig { n, b, bound, assoc_len, samples, seed, budget } = *cfg;
    let hw_graph = StateGraph::build(HwPuzzle::new(n, b, limits)?);
    let mc_graph = StateGraph::build(McPuzzle::new(n, b, limits)?);
    let hw = PathCategory::new(&hw_graph, bound).with_budget(budget);
    let mc = PathCategory::new(&mc_graph, bound).with_budget(budget);
    let hw_all = hw.all_morphisms()?;
    let mc_all = mc.all_morphisms()?;
    let quotient = QuotientCategory::build(&hw)?;
    let q_all = quotient.all_morphisms();

    let mut laws = Vec::new();
    let (id, comp) = check_functor_laws("quotient functor", &QuotientFunctor, hw_graph.vertices(), &hw_all);
    laws.extend([id, comp]);
    let (id, comp) = check_functor_laws("equivalence functor", &EquivalenceFunctor, quotient.objects(), &q_all);
    laws.extend([id, comp]);
    let (id, comp) = check_functor_laws("projection functor", &ProjectionFunctor, hw_graph.vertices(), &hw_all);
    laws.extend([id, comp]);
    let assoc_len = assoc_len.min(bound);
    laws.push(check_associativity("hw category", &hw_all, assoc_len, &|q, p| hw.compose(q, p)));
    laws.push(check_associativity("mc category", &mc_all, assoc_len, &|q, p| mc.compose(q, p)));
    laws.push(check_associativity("quotient category", &q_all, assoc_len, &|q, p| quotient.compose(q, p)));
    laws.extend(OrbitCategory::new(&hw).check_laws(samples, assoc_len, seed));

    let report = check_equivalence(&quotient, &mc, &EquivalenceFunctor)?;
    Ok((report, laws))
}

fn catcheck(a: &CatcheckArgs, limits: &Limits) -> Result<Outcome> {
    let b = match a.b {
        Some(0) => return Err(Error::InvalidCapacity(0)),
        Some(b) => b,
        None => capacity(a.n)?,
    };
    let cfg = CatcheckConfig {
        n: a.n,
        b,
        bound: a.bound,
        assoc_len: a.assoc_len,
        samples: a.samples,
        seed: a.seed,
        budget: a.budget,
    };
    let (report, laws) = catcheck_report(&cfg, limits)?;
    let ok = report.is_equivalence() && laws.iter().all(LawReport::holds);
    let out = match a.format {
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "n={} b={} L={} full={} faithful={} essentially_surjective={}",
                report.n, report.b, report.bound, report.full, report.faithful, report.essentially_surjective
            );
            for l in &laws {
                let _ = writeln!(out, "{}: checked={} failures={}", l.law, l.checked, l.failures);
            }
            for c in &report.counterexamples {
                let _ = writeln!(out, "counterexample ({}): {}", c.property, c.detail);
            }
            let _ = writeln!(out, "# {}", report.note);
            out
        }
        _ => json_line(&CatcheckJson { equivalence: report, seed: a.seed, laws })?,
    };
    Ok(Outcome::with_code(if ok { EXIT_OK } else { EXIT_CHECK_FAILED }, out))
}
