//! C ABI over the `reconf` library.
//!
//! Graphs live behind an opaque [`RcGraph`] handle created by
//! [`rc_graph_new`] or [`rc_graph_parse`] and released by [`rc_graph_free`].
//! Every fallible call returns an [`RcStatus`]; on failure a description is
//! available from [`rc_last_error`] on the same thread. Strings handed out by
//! the library must be released with [`rc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use reconf::construct::{mtj_by_bistable, mtj_by_vertex_cover, mtj_forest, tar_by_fvs, tar_by_pathwidth};
use reconf::detect::{bistable_rank, pumpkin_number};
use reconf::reconfig::{mtj_threshold, tar_threshold, validate_mtj, validate_tar, Sequence};
use reconf::{Error, Graph, Limits, VertexSet};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RcStatus {
    Ok = 0,
    /// A sequence or bound was rejected.
    Semantic = 1,
    /// Malformed text, out-of-range vertex, or an unsupported request.
    Input = 2,
    /// The instance exceeds the size cap of an exact procedure.
    Resource = 3,
    /// A required pointer argument was null.
    NullPointer = 4,
    /// The library panicked; the handle involved should be discarded.
    Panic = 5,
}

/// Reconfiguration rule.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RcModel {
    /// Token jumping with jumps of up to k tokens.
    Mtj = 0,
    /// Token addition and removal with a buffer of up to k tokens.
    Tar = 1,
}

/// Constructive reconfiguration algorithm.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RcMethod {
    VertexCover = 0,
    Bistable = 1,
    Forest = 2,
    FeedbackVertexSet = 3,
    Pathwidth = 4,
}

/// Opaque graph handle.
pub struct RcGraph {
    graph: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: RcStatus, msg: impl Into<String>) -> RcStatus {
    set_last_error(msg.into());
    status
}

fn from_error(e: Error) -> RcStatus {
    let status = match e.exit_code() {
        1 => RcStatus::Semantic,
        3 => RcStatus::Resource,
        _ => RcStatus::Input,
    };
    fail(status, e.to_string())
}

/// Runs `f`, converting panics into [`RcStatus::Panic`] and clearing the
/// last error on success.
fn guard(f: impl FnOnce() -> Result<(), RcStatus>) -> RcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            RcStatus::Ok
        }
        Ok(Err(status)) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".to_string());
            fail(RcStatus::Panic, format!("panic: {msg}"))
        }
    }
}

fn null(what: &str) -> RcStatus {
    fail(RcStatus::NullPointer, format!("{what} is null"))
}

/// # Safety
/// `g` must be null or a live handle from this library.
unsafe fn graph_ref<'a>(g: *const RcGraph) -> Result<&'a Graph, RcStatus> {
    g.as_ref().map(|h| &h.graph).ok_or_else(|| null("graph handle"))
}

/// # Safety
/// `s` must be null or a NUL-terminated string.
unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, RcStatus> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(RcStatus::Input, format!("{what} is not valid UTF-8")))
}

/// # Safety
/// `ids` must be null with `len == 0`, or point to `len` readable values.
unsafe fn vertex_set(g: &Graph, ids: *const usize, len: usize, what: &str) -> Result<VertexSet, RcStatus> {
    let slice = if len == 0 {
        &[][..]
    } else if ids.is_null() {
        return Err(null(what));
    } else {
        std::slice::from_raw_parts(ids, len)
    };
    VertexSet::from_ids(g.n(), slice.iter().copied()).map_err(from_error)
}

/// # Safety
/// `out` must be null or writable.
unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), RcStatus> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

/// Message of the last failed call on this thread, or null after a success.
/// The pointer stays valid until the next library call on this thread.
#[no_mangle]
pub extern "C" fn rc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn rc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Creates an edgeless graph on `n` vertices.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_graph_new(n: usize, out: *mut *mut RcGraph) -> RcStatus {
    guard(|| {
        let handle = Box::into_raw(Box::new(RcGraph { graph: Graph::new(n) }));
        write(out, handle, "out").inspect_err(|_| drop(Box::from_raw(handle)))
    })
}

/// Parses the edge-list text format (`n m` header, then `m` lines `u v`).
///
/// # Safety
/// `text` must be NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rc_graph_parse(text_ptr: *const c_char, out: *mut *mut RcGraph) -> RcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let graph = Graph::parse(text(text_ptr, "text")?).map_err(from_error)?;
        out.write(Box::into_raw(Box::new(RcGraph { graph })));
        Ok(())
    })
}

/// Releases a graph handle. Null is ignored.
///
/// # Safety
/// `g` must be null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn rc_graph_free(g: *mut RcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Adds the edge `u v`.
///
/// # Safety
/// `g` must be a live handle not used concurrently.
#[no_mangle]
pub unsafe extern "C" fn rc_graph_add_edge(g: *mut RcGraph, u: usize, v: usize) -> RcStatus {
    guard(|| {
        let h = g.as_mut().ok_or_else(|| null("graph handle"))?;
        h.graph.add_edge(u, v).map_err(from_error)
    })
}

/// Writes the vertex and edge counts.
///
/// # Safety
/// `g` must be a live handle; `n` and `m` writable.
#[no_mangle]
pub unsafe extern "C" fn rc_graph_size(g: *const RcGraph, n: *mut usize, m: *mut usize) -> RcStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        write(n, graph.n(), "n")?;
        write(m, graph.m(), "m")
    })
}

/// Exact reconfiguration threshold over all set sizes, refused with
/// [`RcStatus::Resource`] when the graph has more than `cap` vertices.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rc_threshold(g: *const RcGraph, model: RcModel, cap: usize, out: *mut usize) -> RcStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        let report = match model {
            RcModel::Mtj => mtj_threshold(graph, cap),
            RcModel::Tar => tar_threshold(graph, cap),
        }
        .map_err(from_error)?;
        write(out, report.overall, "out")
    })
}

/// Largest rank of an induced bistable subgraph.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rc_bistable_rank(g: *const RcGraph, cap: usize, out: *mut usize) -> RcStatus {
    guard(|| {
        let report = bistable_rank(graph_ref(g)?, cap).map_err(from_error)?;
        write(out, report.rank, "out")
    })
}

/// Vertex count of a largest pumpkin subgraph (0 if none).
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rc_pumpkin_number(g: *const RcGraph, cap: usize, out: *mut usize) -> RcStatus {
    guard(|| {
        let (size, _) = pumpkin_number(graph_ref(g)?, cap).map_err(from_error)?;
        write(out, size, "out")
    })
}

/// Reconfigures the independent set `source` into `target` with `method`.
/// Jump-based methods can be rendered under either model; the feedback
/// vertex set and pathwidth methods only under [`RcModel::Tar`]. Writes the
/// sequence in text form (release with [`rc_string_free`]) and its largest
/// jump or buffer.
///
/// # Safety
/// `g` must be a live handle; `source`/`target` point to `source_len`/
/// `target_len` readable ids (or are null with length 0); `out_text` and
/// `out_cost` are writable.
#[no_mangle]
pub unsafe extern "C" fn rc_reconfigure(
    g: *const RcGraph,
    method: RcMethod,
    model: RcModel,
    source: *const usize,
    source_len: usize,
    target: *const usize,
    target_len: usize,
    out_text: *mut *mut c_char,
    out_cost: *mut usize,
) -> RcStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        if out_text.is_null() || out_cost.is_null() {
            return Err(null("output pointer"));
        }
        let i = vertex_set(graph, source, source_len, "source")?;
        let j = vertex_set(graph, target, target_len, "target")?;
        let limits = Limits::default();
        let jumps = match method {
            RcMethod::VertexCover => mtj_by_vertex_cover(graph, &i, &j),
            RcMethod::Bistable => mtj_by_bistable(graph, &i, &j),
            RcMethod::Forest => mtj_forest(graph, &i, &j),
            RcMethod::FeedbackVertexSet | RcMethod::Pathwidth if model == RcModel::Mtj => {
                return Err(fail(RcStatus::Input, "method builds addition/removal sequences only"));
            }
            RcMethod::FeedbackVertexSet => tar_by_fvs(graph, &i, &j, None, limits.exact),
            RcMethod::Pathwidth => tar_by_pathwidth(graph, &i, &j, None, limits.pathwidth).map(|r| r.sequence),
        }
        .map_err(from_error)?;
        let is_tar_method = matches!(method, RcMethod::FeedbackVertexSet | RcMethod::Pathwidth);
        let seq = if model == RcModel::Tar && !is_tar_method { jumps.jumps_to_unit_steps() } else { jumps };
        let cost = match model {
            RcModel::Mtj => validate_mtj(graph, &i, &j, &seq),
            RcModel::Tar => validate_tar(graph, &i, &j, &seq),
        }
        .map_err(|e| from_error(e.into()))?;
        let c = CString::new(seq.to_text()).map_err(|_| fail(RcStatus::Panic, "interior NUL"))?;
        out_text.write(c.into_raw());
        out_cost.write(cost);
        Ok(())
    })
}

/// Checks a sequence in text form (`t`, then `t` vertex-set lines) from the
/// set given by `source_text` to `target_text` (vertex-set lines). Writes the
/// largest jump or buffer; a rejected sequence returns [`RcStatus::Semantic`]
/// with the violation in [`rc_last_error`].
///
/// # Safety
/// `g` must be a live handle; the texts NUL-terminated; `out_cost` writable.
#[no_mangle]
pub unsafe extern "C" fn rc_verify_sequence(
    g: *const RcGraph,
    model: RcModel,
    source_text: *const c_char,
    target_text: *const c_char,
    sequence_text: *const c_char,
    out_cost: *mut usize,
) -> RcStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        let i = VertexSet::parse_text(graph.n(), text(source_text, "source")?).map_err(from_error)?;
        let j = VertexSet::parse_text(graph.n(), text(target_text, "target")?).map_err(from_error)?;
        let seq = Sequence::parse(graph.n(), text(sequence_text, "sequence")?).map_err(from_error)?;
        let cost = match model {
            RcModel::Mtj => validate_mtj(graph, &i, &j, &seq),
            RcModel::Tar => validate_tar(graph, &i, &j, &seq),
        }
        .map_err(|e| from_error(e.into()))?;
        write(out_cost, cost, "out_cost")
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn rc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
