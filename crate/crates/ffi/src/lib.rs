//! C ABI over `intgraph`.
//!
//! Graphs live behind the opaque `IgGraph` handle. Every call returns an
//! `IgStatus`; results come back through out-pointers, and JSON results are
//! heap strings the caller releases with `ig_string_free`. On any status
//! other than success or a negative verdict, `ig_last_error_message` describes
//! the failure for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use intgraph::gadgets::{aca_gadget, GadgetSpec};
use intgraph::json::{
    parse_edge_list, parse_graph_json, BuriedJson, BuriedReportJson, GadgetJson, GraphJson, ObstructionJson,
    RepresentationJson, VerdictJson,
};
use intgraph::oracle::enumerate_associated_orders;
use intgraph::{decide_unique, find_buried, recognize, Error, Graph, Recognition, WqGraph};

/// Status codes; the first four match the command-line exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IgStatus {
    /// Positive verdict, or plain success.
    Ok = 0,
    /// Negative verdict; the JSON output holds the certificate.
    Negative = 1,
    InputError = 2,
    Internal = 3,
    NullPointer = 4,
}

/// Opaque graph handle.
pub struct IgGraph {
    graph: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> IgStatus {
    set_error(e.to_string());
    match e {
        Error::Input(_) | Error::OracleBound { .. } => IgStatus::InputError,
        Error::NotInterval(_) => IgStatus::Negative,
        Error::Internal(_) => IgStatus::Internal,
    }
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<IgStatus, IgStatus>) -> IgStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) | Ok(Err(s)) => s,
        Err(_) => {
            set_error("panic inside intgraph");
            IgStatus::Internal
        }
    }
}

fn lift<T>(r: intgraph::Result<T>) -> Result<T, IgStatus> {
    r.map_err(|e| status_of(&e))
}

fn null() -> IgStatus {
    set_error("null pointer argument");
    IgStatus::NullPointer
}

/// # Safety
/// `p` is null or a valid nul-terminated string.
unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, IgStatus> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p).to_str().map_err(|e| {
        set_error(format!("input is not UTF-8: {e}"));
        IgStatus::InputError
    })
}

/// # Safety
/// `g` is null or a handle from this library that has not been freed.
unsafe fn graph<'a>(g: *const IgGraph) -> Result<&'a Graph, IgStatus> {
    g.as_ref().map(|h| &h.graph).ok_or_else(null)
}

/// Stores `value` as JSON in `*out` when `out` is not null.
///
/// # Safety
/// `out` is null or valid for a write.
unsafe fn emit<T: serde::Serialize + ?Sized>(out: *mut *mut c_char, value: &T) -> Result<(), IgStatus> {
    if out.is_null() {
        return Ok(());
    }
    let text = serde_json::to_string(value).map_err(|e| {
        set_error(format!("serialization: {e}"));
        IgStatus::Internal
    })?;
    *out = CString::new(text).expect("JSON has no nul bytes").into_raw();
    Ok(())
}

/// # Safety
/// `out` is valid for a write.
unsafe fn give_graph(out: *mut *mut IgGraph, g: Graph) -> IgStatus {
    *out = Box::into_raw(Box::new(IgGraph { graph: g }));
    IgStatus::Ok
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`2 * edge_count` entries).
///
/// # Safety
/// `edges` points to `2 * edge_count` readable values (may be null when
/// `edge_count` is 0); `out` is valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ig_graph_new(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut IgGraph,
) -> IgStatus {
    guard(|| {
        if out.is_null() || (edges.is_null() && edge_count > 0) {
            return Err(null());
        }
        let flat = if edge_count == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|c| (c[0], c[1])).collect();
        let g = lift(Graph::from_edges(n, &pairs))?;
        Ok(give_graph(out, g))
    })
}

/// Parses `{"n": .., "edges": [[u, v], ..], "labels": {..}}`.
///
/// # Safety
/// `json` is a nul-terminated string; `out` is valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ig_graph_from_json(json: *const c_char, out: *mut *mut IgGraph) -> IgStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let g = lift(parse_graph_json(read_str(json)?))?;
        Ok(give_graph(out, g))
    })
}

/// Parses the edge-list text format: vertex count, then one `u v` per line.
///
/// # Safety
/// `text` is a nul-terminated string; `out` is valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ig_graph_from_edge_list(text: *const c_char, out: *mut *mut IgGraph) -> IgStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let g = lift(parse_edge_list(read_str(text)?))?;
        Ok(give_graph(out, g))
    })
}

/// # Safety
/// `g` is null or a live handle; it must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ig_graph_free(g: *mut IgGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ig_graph_vertex_count(g: *const IgGraph) -> usize {
    g.as_ref().map_or(0, |h| h.graph.n())
}

/// The graph as JSON.
///
/// # Safety
/// `g` is a live handle; `out_json` is valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ig_graph_to_json(g: *const IgGraph, out_json: *mut *mut c_char) -> IgStatus {
    guard(|| {
        if out_json.is_null() {
            return Err(null());
        }
        emit(out_json, &GraphJson::from_graph(graph(g)?))?;
        Ok(IgStatus::Ok)
    })
}

/// `IG_STATUS_OK` with a representation, or `IG_STATUS_NEGATIVE` with an
/// obstruction certificate. `out_json` may be null.
///
/// # Safety
/// `g` is a live handle; `out_json` is null or valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ig_recognize(g: *const IgGraph, out_json: *mut *mut c_char) -> IgStatus {
    guard(|| {
        let g = graph(g)?;
        match lift(recognize(g))? {
            Recognition::Interval(r) => {
                emit(out_json, &RepresentationJson::from_representation(&r))?;
                Ok(IgStatus::Ok)
            }
            Recognition::NotInterval(o) => {
                emit(out_json, &ObstructionJson::from_obstruction(g, &o))?;
                Ok(IgStatus::Negative)
            }
        }
    })
}

/// Unique orderability. `IG_STATUS_OK` when unique, `IG_STATUS_NEGATIVE`
/// otherwise; the JSON is the verdict, or the obstruction when the graph is
/// not an interval graph. Either out-pointer may be null.
///
/// # Safety
/// `g` is a live handle; out-pointers are null or valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ig_decide_unique(
    g: *const IgGraph,
    out_unique: *mut bool,
    out_json: *mut *mut c_char,
) -> IgStatus {
    guard(|| {
        let g = graph(g)?;
        let verdict = match decide_unique(g) {
            Ok(v) => v,
            Err(Error::NotInterval(o)) => {
                set_error("not an interval graph");
                emit(out_json, &ObstructionJson::from_obstruction(g, &o))?;
                if !out_unique.is_null() {
                    *out_unique = false;
                }
                return Ok(IgStatus::Negative);
            }
            Err(e) => return Err(status_of(&e)),
        };
        if !out_unique.is_null() {
            *out_unique = verdict.unique;
        }
        emit(out_json, &VerdictJson::from_verdict(g, &verdict))?;
        Ok(if verdict.unique {
            IgStatus::Ok
        } else {
            IgStatus::Negative
        })
    })
}

/// `IG_STATUS_OK` when a buried subgraph exists, `IG_STATUS_NEGATIVE` when
/// none does. The graph must be a connected interval graph.
///
/// # Safety
/// `g` is a live handle; `out_json` is null or valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ig_find_buried(g: *const IgGraph, out_json: *mut *mut c_char) -> IgStatus {
    guard(|| {
        let g = graph(g)?;
        let found = lift(find_buried(g))?;
        let report = BuriedReportJson {
            buried: found.as_ref().map(|c| BuriedJson::from_certificate(g, c)),
            wq_components: WqGraph::build(g).component_count(),
        };
        emit(out_json, &report)?;
        Ok(if found.is_some() {
            IgStatus::Ok
        } else {
            IgStatus::Negative
        })
    })
}

/// Number of components of the pair graph.
///
/// # Safety
/// `g` is a live handle; `out` is valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ig_wq_component_count(g: *const IgGraph, out: *mut usize) -> IgStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        *out = WqGraph::build(graph(g)?).component_count();
        Ok(IgStatus::Ok)
    })
}

/// Counts associated orders by exhaustive search; refuses graphs with more
/// than `max_n` vertices.
///
/// # Safety
/// `g` is a live handle; out-pointers are null or valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ig_count_orders(
    g: *const IgGraph,
    max_n: usize,
    out_orders: *mut usize,
    out_dual_classes: *mut usize,
) -> IgStatus {
    guard(|| {
        let set = lift(enumerate_associated_orders(graph(g)?, max_n))?;
        if !out_orders.is_null() {
            *out_orders = set.orders.len();
        }
        if !out_dual_classes.is_null() {
            *out_dual_classes = set.dual_classes;
        }
        Ok(IgStatus::Ok)
    })
}

/// Coded gadget for the `len` values of `f` over `stages` stages, as JSON.
///
/// # Safety
/// `f` points to `len` readable values (may be null when `len` is 0);
/// `out_json` is valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ig_gadget(
    f: *const u64,
    len: usize,
    stages: usize,
    out_json: *mut *mut c_char,
) -> IgStatus {
    guard(|| {
        if out_json.is_null() || (f.is_null() && len > 0) {
            return Err(null());
        }
        let values = if len == 0 {
            Vec::new()
        } else {
            std::slice::from_raw_parts(f, len).to_vec()
        };
        let out = lift(GadgetSpec::new(values, stages).and_then(|s| aca_gadget(&s)))?;
        emit(out_json, &GadgetJson::from_output(&out))?;
        Ok(IgStatus::Ok)
    })
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` is null or a string from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn ig_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failure on this thread, or null. Valid until the
/// next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn ig_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn ig_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
