//! C ABI over `at-lab`.
//!
//! Graphs and orientations are opaque heap handles created by `at_*`
//! constructors and released with the matching `*_free`. Every fallible call
//! returns an [`AtStatus`]; on failure `at_last_error_message` describes the
//! most recent error on the calling thread. Strings returned through `char**`
//! out-parameters are owned by the caller and released with
//! `at_string_free`. Exact solvers run with the default size limits.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use at_lab::circulation::{census_dp, census_enumerate};
use at_lab::graph::Graph;
use at_lab::invariants::{alon_tarsi_number, chromatic_number};
use at_lab::io::{eval_str, graph6_decode, graph6_encode};
use at_lab::orientation::{degree_profile, orient_thm21, Orientation};
use at_lab::{Error, Limits};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AtStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Expression syntax or evaluation error.
    Parse = 3,
    /// Input violates a precondition (bad family parameters, bad edits...).
    Precondition = 4,
    /// The instance exceeds a solver size limit.
    Resource = 5,
    /// Malformed graph6 or JSON input.
    Decode = 6,
    /// Internal error; the call was abandoned.
    Panic = 7,
}

/// Opaque simple graph.
pub struct AtGraph(Graph);

/// Opaque digraph with its annotations.
pub struct AtOrientation(Orientation);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("interior nuls removed"));
}

fn status_of(e: &Error) -> AtStatus {
    match e {
        Error::Parse(_) | Error::Eval { .. } => AtStatus::Parse,
        Error::Resource { .. } => AtStatus::Resource,
        Error::Decode { .. } | Error::Json(_) => AtStatus::Decode,
        _ => AtStatus::Precondition,
    }
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (AtStatus, String)>) -> AtStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            AtStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            AtStatus::Panic
        }
    }
}

fn lift(e: Error) -> (AtStatus, String) {
    (status_of(&e), e.to_string())
}

fn null() -> (AtStatus, String) {
    (AtStatus::NullPointer, "null pointer argument".into())
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, (AtStatus, String)> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| (AtStatus::InvalidUtf8, e.to_string()))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), (AtStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

/// Message for the last failed call on this thread ("" after a success).
/// Valid until the next `at_*` call on the same thread.
#[no_mangle]
pub extern "C" fn at_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn at_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from an `at_*` out-parameter and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn at_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Evaluates a graph expression such as `"C(5) x P(3)"`.
///
/// # Safety
/// `expr` must be a nul-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn at_graph_parse(expr: *const c_char, out: *mut *mut AtGraph) -> AtStatus {
    guard(|| {
        let g = eval_str(str_arg(expr)?).map_err(lift)?;
        put(out, Box::into_raw(Box::new(AtGraph(g))))
    })
}

/// Decodes one graph6 record of `len` bytes.
///
/// # Safety
/// `bytes` must point to `len` readable bytes; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn at_graph_from_graph6(bytes: *const u8, len: usize, out: *mut *mut AtGraph) -> AtStatus {
    guard(|| {
        if bytes.is_null() {
            return Err(null());
        }
        let g = graph6_decode(std::slice::from_raw_parts(bytes, len)).map_err(lift)?;
        put(out, Box::into_raw(Box::new(AtGraph(g))))
    })
}

/// # Safety
/// `g` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn at_graph_free(g: *mut AtGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count; 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn at_graph_vertex_count(g: *const AtGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// Edge count; 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn at_graph_edge_count(g: *const AtGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// JSON form `{"n", "labels", "edges"}`; free with `at_string_free`.
///
/// # Safety
/// `g` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn at_graph_to_json(g: *const AtGraph, out: *mut *mut c_char) -> AtStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(null)?;
        let s = serde_json::to_string(&g.0).map_err(|e| lift(e.into()))?;
        put(out, c_string(s))
    })
}

/// graph6 record without a trailing newline; free with `at_string_free`.
///
/// # Safety
/// `g` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn at_graph_to_graph6(g: *const AtGraph, out: *mut *mut c_char) -> AtStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(null)?;
        let s = String::from_utf8(graph6_encode(&g.0)).expect("graph6 is printable ascii");
        put(out, c_string(s))
    })
}

/// Chromatic number.
///
/// # Safety
/// `g` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn at_chromatic_number(g: *const AtGraph, out: *mut usize) -> AtStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(null)?;
        put(out, chromatic_number(&g.0))
    })
}

/// Exact Alon-Tarsi number; `AT_STATUS_RESOURCE` when the instance is too
/// large for the coefficient expansion.
///
/// # Safety
/// `g` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn at_alon_tarsi_number(g: *const AtGraph, out: *mut usize) -> AtStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(null)?;
        let at = alon_tarsi_number(&g.0, &Limits::default()).map_err(lift)?;
        put(out, at.value)
    })
}

/// The augmented orientation `D*` of `C(2k+1) x P(n)` (with `e*`).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn at_orient_thm21(k: usize, n: usize, out: *mut *mut AtOrientation) -> AtStatus {
    guard(|| {
        let (_, dstar) = orient_thm21(k, n).map_err(lift)?;
        put(out, Box::into_raw(Box::new(AtOrientation(dstar))))
    })
}

/// Parses the JSON orientation format `{"n", "arcs", ...}`.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn at_orientation_from_json(json: *const c_char, out: *mut *mut AtOrientation) -> AtStatus {
    guard(|| {
        let d: Orientation = serde_json::from_str(str_arg(json)?).map_err(|e| lift(e.into()))?;
        put(out, Box::into_raw(Box::new(AtOrientation(d))))
    })
}

/// # Safety
/// `d` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn at_orientation_free(d: *mut AtOrientation) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Arc count; 0 for a null handle.
///
/// # Safety
/// `d` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn at_orientation_arc_count(d: *const AtOrientation) -> usize {
    d.as_ref().map_or(0, |d| d.0.arc_count())
}

/// Largest indegree; 0 for a null handle.
///
/// # Safety
/// `d` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn at_orientation_max_indegree(d: *const AtOrientation) -> usize {
    d.as_ref().map_or(0, |d| degree_profile(&d.0).max_indegree)
}

/// JSON form of the orientation; free with `at_string_free`.
///
/// # Safety
/// `d` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn at_orientation_to_json(d: *const AtOrientation, out: *mut *mut c_char) -> AtStatus {
    guard(|| {
        let d = d.as_ref().ok_or_else(null)?;
        let s = serde_json::to_string(&d.0).map_err(|e| lift(e.into()))?;
        put(out, c_string(s))
    })
}

/// Even and odd circulation counts by exhaustive enumeration.
///
/// # Safety
/// `d` must be a live handle; `even` and `odd` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn at_census_enumerate(d: *const AtOrientation, even: *mut u64, odd: *mut u64) -> AtStatus {
    guard(|| {
        let d = d.as_ref().ok_or_else(null)?;
        if even.is_null() || odd.is_null() {
            return Err(null());
        }
        let c = census_enumerate(&d.0, &Limits::default()).map_err(lift)?;
        put(even, c.even)?;
        put(odd, c.odd)
    })
}

/// `|even - odd|` in decimal, from the frontier DP (no arc limit of its
/// own); free with `at_string_free`.
///
/// # Safety
/// `d` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn at_census_diff_magnitude(d: *const AtOrientation, out: *mut *mut c_char) -> AtStatus {
    guard(|| {
        let d = d.as_ref().ok_or_else(null)?;
        let diff = census_dp(&d.0, &Limits::default()).map_err(lift)?;
        put(out, c_string(diff.magnitude().to_string()))
    })
}
