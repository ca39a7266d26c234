//! C ABI over `rivercross`.
//!
//! Every fallible call returns an [`RcStatus`] and writes results through
//! out-pointers. On failure the message is kept per thread and can be read
//! with [`rc_last_error`]. Strings handed out by this library must be
//! released with [`rc_string_free`]; graphs with [`rc_graph_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rivercross::cli::{catcheck_report, CatcheckConfig};
use rivercross::export::{graph_dot, parse_solution, GraphScope, SolutionsReport};
use rivercross::solver::{enumerate_lifts, lift_solution, shortest_solutions, StateGraph};
use rivercross::{capacity, Error, HwPuzzle, Limits, McPuzzle, Puzzle};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RcStatus {
    Ok = 0,
    /// A required pointer was null or a string was not UTF-8.
    NullOrUtf8 = 1,
    InvalidSize = 2,
    InvalidCapacity = 3,
    CapExceeded = 4,
    BudgetExceeded = 5,
    Parse = 6,
    InvalidStep = 7,
    /// The goal state is unreachable.
    Infeasible = 8,
    /// A count does not fit in 64 bits.
    Overflow = 9,
    Invalid = 10,
    /// A Rust panic was caught at the boundary.
    Panic = 11,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RcFlavor {
    /// Labelled couples.
    Hw = 0,
    /// Head counts.
    Mc = 1,
}

enum GraphInner {
    Hw(StateGraph<HwPuzzle>),
    Mc(StateGraph<McPuzzle>),
}

/// Opaque state graph.
pub struct RcGraph {
    inner: GraphInner,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> RcStatus {
    match e {
        Error::InvalidSize(_) => RcStatus::InvalidSize,
        Error::InvalidCapacity(_) => RcStatus::InvalidCapacity,
        Error::CapExceeded { .. } => RcStatus::CapExceeded,
        Error::BudgetExceeded { .. } => RcStatus::BudgetExceeded,
        Error::Parse(_) => RcStatus::Parse,
        Error::InvalidStep { .. } => RcStatus::InvalidStep,
        Error::Infeasible { .. } => RcStatus::Infeasible,
        Error::Unclassifiable(_) | Error::Invalid(_) => RcStatus::Invalid,
    }
}

struct Fail(RcStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null_arg(name: &str) -> Fail {
    Fail(RcStatus::NullOrUtf8, format!("`{name}` is null"))
}

/// Run `f`, turning errors and panics into a status and the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> RcStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RcStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside rivercross".into());
            RcStatus::Panic
        }
    }
}

unsafe fn out<'a, T>(p: *mut T, name: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| null_arg(name))
}

unsafe fn text<'a>(p: *const c_char, name: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null_arg(name));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(RcStatus::NullOrUtf8, format!("`{name}` is not UTF-8")))
}

fn give_string(s: String, dst: &mut *mut c_char) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(RcStatus::Invalid, "output contains a NUL byte".into()))?;
    *dst = c.into_raw();
    Ok(())
}

fn to_u64(v: u128) -> Result<u64, Fail> {
    u64::try_from(v).map_err(|_| Fail(RcStatus::Overflow, format!("count {v} does not fit in 64 bits")))
}

fn pick_capacity(n: usize, b: usize) -> Result<usize, Fail> {
    if b == 0 {
        Ok(capacity(n)?)
    } else {
        Ok(b)
    }
}

fn limits(max_n: usize) -> Limits {
    if max_n == 0 {
        Limits::default()
    } else {
        Limits { max_n }
    }
}

/// Message for the last failed call on this thread, or null. Owned by the
/// library and valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn rc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn rc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Smallest boat capacity that lets `n` couples cross.
///
/// # Safety
/// `out_b` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rc_capacity(n: usize, out_b: *mut usize) -> RcStatus {
    guard(|| {
        *out(out_b, "out_b")? = capacity(n)?;
        Ok(())
    })
}

/// Build the state graph for `n` couples and boat capacity `b` (`0` picks
/// the smallest working capacity). `max_n` caps the instance size (`0` for
/// the default cap).
///
/// # Safety
/// `out_graph` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rc_graph_new(
    flavor: RcFlavor,
    n: usize,
    b: usize,
    max_n: usize,
    out_graph: *mut *mut RcGraph,
) -> RcStatus {
    guard(|| {
        let dst = out(out_graph, "out_graph")?;
        let b = pick_capacity(n, b)?;
        let lim = limits(max_n);
        let inner = match flavor {
            RcFlavor::Hw => GraphInner::Hw(StateGraph::build(HwPuzzle::new(n, b, &lim)?)),
            RcFlavor::Mc => GraphInner::Mc(StateGraph::build(McPuzzle::new(n, b, &lim)?)),
        };
        *dst = Box::into_raw(Box::new(RcGraph { inner }));
        Ok(())
    })
}

/// # Safety
/// `graph` must come from [`rc_graph_new`] and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn rc_graph_free(graph: *mut RcGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

unsafe fn graph_ref<'a>(g: *const RcGraph) -> Result<&'a RcGraph, Fail> {
    g.as_ref().ok_or_else(|| null_arg("graph"))
}

macro_rules! with_graph {
    ($g:expr, |$x:ident| $body:expr) => {
        match &$g.inner {
            GraphInner::Hw($x) => $body,
            GraphInner::Mc($x) => $body,
        }
    };
}

/// Number of admissible states.
///
/// # Safety
/// `graph` must be a live handle; `out_count` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rc_graph_state_count(graph: *const RcGraph, out_count: *mut usize) -> RcStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        *out(out_count, "out_count")? = with_graph!(g, |x| x.len());
        Ok(())
    })
}

/// Number of directed edges (each trip and its return count separately).
///
/// # Safety
/// `graph` must be a live handle; `out_count` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rc_graph_edge_count(graph: *const RcGraph, out_count: *mut usize) -> RcStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        *out(out_count, "out_count")? = with_graph!(g, |x| x.edge_count());
        Ok(())
    })
}

/// Size of the component reachable from the initial state, and whether it contains the goal.
///
/// # Safety
/// `graph` must be a live handle; both out-pointers valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rc_graph_reachability(
    graph: *const RcGraph,
    out_component: *mut usize,
    out_feasible: *mut bool,
) -> RcStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        let (size, feasible) = with_graph!(g, |x| (x.reachable_indices().len(), x.is_feasible()));
        *out(out_component, "out_component")? = size;
        *out(out_feasible, "out_feasible")? = feasible;
        Ok(())
    })
}

/// Shortest solution length and the number of shortest solutions.
/// Returns `Infeasible` when the goal is unreachable and `Overflow` when
/// the count needs more than 64 bits.
///
/// # Safety
/// `graph` must be a live handle; both out-pointers valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rc_graph_shortest(
    graph: *const RcGraph,
    out_length: *mut usize,
    out_count: *mut u64,
) -> RcStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        let (length, count) = with_graph!(g, |x| {
            let found = shortest_solutions(x, 0)?;
            (found.length, found.count)
        });
        *out(out_length, "out_length")? = length;
        *out(out_count, "out_count")? = to_u64(count)?;
        Ok(())
    })
}

/// JSON report `{n, b, flavor, length, count, solutions}` listing at most `limit` solutions.
///
/// # Safety
/// `graph` must be a live handle; `out_json` valid for writes. Free the result with [`rc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn rc_graph_solutions_json(
    graph: *const RcGraph,
    limit: usize,
    out_json: *mut *mut c_char,
) -> RcStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        let dst = out(out_json, "out_json")?;
        let json = with_graph!(g, |x| {
            let found = shortest_solutions(x, limit)?;
            serde_json::to_string(&SolutionsReport::from_shortest(x.puzzle(), &found))
        })
        .map_err(|e| Fail(RcStatus::Invalid, e.to_string()))?;
        give_string(json, dst)
    })
}

/// Graphviz source for the whole graph, or only the reachable component.
///
/// # Safety
/// `graph` must be a live handle; `out_dot` valid for writes. Free the result with [`rc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn rc_graph_dot(graph: *const RcGraph, component_only: bool, out_dot: *mut *mut c_char) -> RcStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        let dst = out(out_dot, "out_dot")?;
        let scope = if component_only { GraphScope::Component } else { GraphScope::Full };
        give_string(with_graph!(g, |x| graph_dot(x, scope)), dst)
    })
}

unsafe fn load_mc(n: usize, b: usize, solution: *const c_char) -> Result<(McPuzzle, rivercross::solver::McPath), Fail> {
    let body = text(solution, "solution")?;
    let mc = McPuzzle::new(n, pick_capacity(n, b)?, &limits(n.max(1)))?;
    let path = parse_solution(&mc, body)?;
    Ok((mc, path))
}

/// Number of labelled solutions over a counting solution. `solution`
/// uses the solution-file formats of the command-line tool.
///
/// # Safety
/// `solution` must be a NUL-terminated string; `out_count` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rc_fiber_count(n: usize, b: usize, solution: *const c_char, out_count: *mut u64) -> RcStatus {
    guard(|| {
        let dst = out(out_count, "out_count")?;
        let (mc, path) = load_mc(n, b, solution)?;
        *dst = to_u64(enumerate_lifts(&mc, &path)?.count)?;
        Ok(())
    })
}

/// Lift a counting solution: JSON `{solution, permutations, rotations_only}`.
///
/// # Safety
/// `solution` must be a NUL-terminated string; `out_json` valid for writes.
/// Free the result with [`rc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn rc_lift_json(n: usize, b: usize, solution: *const c_char, out_json: *mut *mut c_char) -> RcStatus {
    guard(|| {
        let dst = out(out_json, "out_json")?;
        let (mc, path) = load_mc(n, b, solution)?;
        let trace = lift_solution(&mc, &path)?;
        let v = serde_json::json!({
            "n": mc.n(),
            "b": mc.b(),
            "solution": trace.path.to_items(),
            "permutations": trace.permutations,
            "rotations_only": trace.uses_only_rotations(),
        });
        give_string(v.to_string(), dst)
    })
}

/// Equivalence report for the labelled and counting categories with walks
/// of length `<= bound`. `out_ok` is true when every law and property holds.
///
/// # Safety
/// Both out-pointers must be valid for writes. Free the result with [`rc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn rc_catcheck_json(
    n: usize,
    b: usize,
    bound: usize,
    seed: u64,
    out_ok: *mut bool,
    out_json: *mut *mut c_char,
) -> RcStatus {
    guard(|| {
        let ok_dst = out(out_ok, "out_ok")?;
        let dst = out(out_json, "out_json")?;
        let b = pick_capacity(n, b)?;
        let cfg = CatcheckConfig { samples: 1_000, seed, ..CatcheckConfig::new(n, b, bound) };
        let (report, laws) = catcheck_report(&cfg, &Limits::default())?;
        *ok_dst = report.is_equivalence() && laws.iter().all(|l| l.holds());
        let v = serde_json::json!({ "report": report, "laws": laws });
        give_string(v.to_string(), dst)
    })
}
