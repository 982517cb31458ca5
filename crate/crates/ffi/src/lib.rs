//! C interface to `pconn`.
//!
//! Graphs are passed around as opaque `PconnGraph` handles created by the
//! `pconn_graph_from_*` functions and released with `pconn_graph_free`.
//! Every fallible call returns a `PconnStatus`; on failure the message is
//! kept per thread and can be read with `pconn_last_error_message`.
//! Edge arrays and colorings follow the handle's edge order, which is the
//! lexicographic order of `(u, v)` with `u < v`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use pconn::coloring::is_proper_path_coloring;
use pconn::domination::min_connected_two_way_two_step_dominating;
use pconn::exact::pc_exact;
use pconn::io::decode_graph6;
use pconn::{Budget, EdgeColoring, Error, Graph};

/// Opaque graph handle.
pub struct PconnGraph {
    graph: Graph,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PconnStatus {
    Ok = 0,
    InvalidArgument = 1,
    Parse = 2,
    Disconnected = 3,
    Budget = 4,
    NullPointer = 5,
    BufferTooSmall = 6,
    Internal = 7,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: impl Into<String>) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.into());
}

fn status_of(e: &Error) -> PconnStatus {
    match e {
        Error::InvalidArgument(_) | Error::Io(_) => PconnStatus::InvalidArgument,
        Error::Parse { .. } => PconnStatus::Parse,
        Error::Disconnected => PconnStatus::Disconnected,
        Error::BudgetExceeded { .. } => PconnStatus::Budget,
    }
}

struct Fail(PconnStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(PconnStatus::NullPointer, format!("{what} is null"))
}

fn too_small(need: usize, have: usize) -> Fail {
    Fail(
        PconnStatus::BufferTooSmall,
        format!("buffer holds {have} entries, {need} needed"),
    )
}

/// Runs `f`, records its error message and turns panics into `Internal`.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> PconnStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            PconnStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            PconnStatus::Internal
        }
    }
}

unsafe fn graph_ref<'a>(g: *const PconnGraph) -> Result<&'a Graph, Fail> {
    g.as_ref().map(|h| &h.graph).ok_or_else(|| null("graph"))
}

fn budget(max_nodes: u64) -> Budget {
    if max_nodes == 0 {
        Budget::default()
    } else {
        Budget::with_nodes(max_nodes)
    }
}

unsafe fn store(out: *mut *mut PconnGraph, graph: Graph) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(PconnGraph { graph }));
    Ok(())
}

/// Parses one graph6 string (NUL-terminated, optional `>>graph6<<` header).
///
/// # Safety
/// `text` must be a valid C string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pconn_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut PconnGraph,
) -> PconnStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| Fail(PconnStatus::Parse, "text is not UTF-8".into()))?;
        let g = decode_graph6(s.trim())?;
        store(out, g)
    })
}

/// Builds a graph on `vertex_count` vertices from `edge_count` pairs stored
/// flat in `edges` (`2 * edge_count` entries).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or be null when
/// `edge_count` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pconn_graph_from_edges(
    vertex_count: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut PconnGraph,
) -> PconnStatus {
    guard(|| {
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let g = Graph::new(vertex_count, flat.chunks_exact(2).map(|p| (p[0], p[1])))?;
        store(out, g)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pconn_graph_free(g: *mut PconnGraph) {
    if !g.is_null() {
        let _ = catch_unwind(AssertUnwindSafe(|| drop(Box::from_raw(g))));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pconn_graph_vertex_count(g: *const PconnGraph) -> usize {
    g.as_ref().map_or(0, |h| h.graph.vertex_count())
}

/// Number of edges, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pconn_graph_edge_count(g: *const PconnGraph) -> usize {
    g.as_ref().map_or(0, |h| h.graph.edge_count())
}

/// Endpoints of edge `index`, with `*u < *v`.
///
/// # Safety
/// `g` must be a live handle; `u` and `v` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pconn_graph_edge(
    g: *const PconnGraph,
    index: usize,
    u: *mut usize,
    v: *mut usize,
) -> PconnStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if u.is_null() || v.is_null() {
            return Err(null("endpoint output"));
        }
        let &(a, b) = g.edges().get(index).ok_or_else(|| {
            Fail(
                PconnStatus::InvalidArgument,
                format!("edge index {index} out of range 0..{}", g.edge_count()),
            )
        })?;
        *u = a;
        *v = b;
        Ok(())
    })
}

/// Exact proper connection number. When `colors` is non-null, an optimal
/// coloring is written there (`colors_len` must be at least the edge count).
/// `max_nodes` of 0 selects the default search budget.
///
/// # Safety
/// `g` must be a live handle, `value` writable, and `colors` null or
/// writable for `colors_len` entries.
#[no_mangle]
pub unsafe extern "C" fn pconn_pc_exact(
    g: *const PconnGraph,
    max_nodes: u64,
    value: *mut u32,
    colors: *mut u32,
    colors_len: usize,
) -> PconnStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if value.is_null() {
            return Err(null("value"));
        }
        if !colors.is_null() && colors_len < g.edge_count() {
            return Err(too_small(g.edge_count(), colors_len));
        }
        let r = pc_exact(g, &budget(max_nodes))?;
        *value = r.value;
        if !colors.is_null() {
            ptr::copy_nonoverlapping(r.certificate.colors().as_ptr(), colors, g.edge_count());
        }
        Ok(())
    })
}

/// Whether `colors` (one positive color per edge) joins every pair of
/// vertices by a proper path.
///
/// # Safety
/// `g` must be a live handle, `colors` readable for `colors_len` entries
/// and `ok` writable.
#[no_mangle]
pub unsafe extern "C" fn pconn_check_coloring(
    g: *const PconnGraph,
    colors: *const u32,
    colors_len: usize,
    ok: *mut bool,
) -> PconnStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if ok.is_null() {
            return Err(null("ok"));
        }
        let raw: &[u32] = if colors_len == 0 {
            &[]
        } else if colors.is_null() {
            return Err(null("colors"));
        } else {
            std::slice::from_raw_parts(colors, colors_len)
        };
        let c = EdgeColoring::new(g, raw.to_vec())?;
        *ok = is_proper_path_coloring(g, &c)?.is_pass();
        Ok(())
    })
}

/// A minimum connected two-way two-step dominating set, written to `set`
/// in increasing order with its size in `size`. `*size` is 0 if none exists.
///
/// # Safety
/// `g` must be a live handle, `set` writable for `set_len` entries and
/// `size` writable.
#[no_mangle]
pub unsafe extern "C" fn pconn_min_two_step_dominating(
    g: *const PconnGraph,
    set: *mut usize,
    set_len: usize,
    size: *mut usize,
) -> PconnStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if size.is_null() {
            return Err(null("size"));
        }
        let found = min_connected_two_way_two_step_dominating(g)?;
        let ids = found.map(|d| d.set).unwrap_or_default();
        if ids.len() > set_len {
            *size = ids.len();
            return Err(too_small(ids.len(), set_len));
        }
        if !ids.is_empty() {
            if set.is_null() {
                return Err(null("set"));
            }
            ptr::copy_nonoverlapping(ids.as_ptr(), set, ids.len());
        }
        *size = ids.len();
        Ok(())
    })
}

/// Copies the calling thread's last error message into `buf` (truncated,
/// always NUL-terminated when `buf_len > 0`) and returns its full length
/// in bytes, excluding the terminator.
///
/// # Safety
/// `buf` must be null or writable for `buf_len` bytes.
#[no_mangle]
pub unsafe extern "C" fn pconn_last_error_message(buf: *mut c_char, buf_len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        let bytes = msg.as_bytes();
        if !buf.is_null() && buf_len > 0 {
            let n = bytes.len().min(buf_len - 1);
            ptr::copy_nonoverlapping(bytes.as_ptr().cast::<c_char>(), buf, n);
            *buf.add(n) = 0;
        }
        bytes.len()
    })
}
