//! C ABI over `graph_inertia`.
//!
//! Graphs are opaque `GiGraph` handles created by the `gi_graph_*` and
//! `gi_family` constructors and released with [`gi_graph_free`]. Every
//! fallible call returns a [`GiStatus`]; on failure a message is available
//! from [`gi_last_error_message`] on the same thread. Strings returned
//! through `char **` out-parameters are owned by the caller and must be
//! released with [`gi_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use graph_inertia::bounds::{self, ReportOptions};
use graph_inertia::canonical;
use graph_inertia::error::Error;
use graph_inertia::families;
use graph_inertia::graph6;
use graph_inertia::spectral;
use graph_inertia::tolerance::Tolerances;
use graph_inertia::Graph;
use libc::c_char;

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GiStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Format = 3,
    Domain = 4,
    Numeric = 5,
    Resource = 6,
    Internal = 7,
    BufferTooSmall = 8,
    Panic = 9,
}

impl From<&Error> for GiStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Format { .. } | Error::Input { .. } => GiStatus::Format,
            Error::Domain(_) => GiStatus::Domain,
            Error::Numeric { .. } => GiStatus::Numeric,
            Error::Resource(_) | Error::Io(_) => GiStatus::Resource,
            Error::Internal(_) => GiStatus::Internal,
        }
    }
}

/// Opaque graph handle.
pub struct GiGraph {
    inner: Graph,
}

/// Scalar spectral invariants of a graph.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct GiSummary {
    pub n: usize,
    pub m: usize,
    pub components: usize,
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
    pub s_plus: f64,
    pub s_minus: f64,
    pub energy: f64,
    pub spectral_radius: f64,
    pub tau: f64,
    pub b_value: f64,
    /// `min(s-, s+) - (n - components)`.
    pub slack: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: GiStatus, msg: &str) -> GiStatus {
    set_last_error(msg);
    status
}

fn guard(f: impl FnOnce() -> Result<(), GiStatus>) -> GiStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GiStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(GiStatus::Panic, "internal panic"),
    }
}

fn lib_err(e: Error) -> GiStatus {
    fail(GiStatus::from(&e), &e.to_string())
}

unsafe fn graph_ref<'a>(g: *const GiGraph) -> Result<&'a Graph, GiStatus> {
    // SAFETY: the caller passes a live handle from this library or NULL.
    unsafe { g.as_ref() }.map(|h| &h.inner).ok_or_else(|| fail(GiStatus::NullPointer, "graph handle is NULL"))
}

unsafe fn c_str<'a>(s: *const c_char) -> Result<&'a str, GiStatus> {
    if s.is_null() {
        return Err(fail(GiStatus::NullPointer, "string argument is NULL"));
    }
    // SAFETY: the caller passes a NUL-terminated string.
    unsafe { CStr::from_ptr(s) }.to_str().map_err(|_| fail(GiStatus::InvalidUtf8, "string is not UTF-8"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), GiStatus> {
    if out.is_null() {
        return Err(fail(GiStatus::NullPointer, "output pointer is NULL"));
    }
    // SAFETY: non-null, and the caller guarantees it is writable.
    unsafe { out.write(value) };
    Ok(())
}

unsafe fn write_handle(out: *mut *mut GiGraph, g: Graph) -> Result<(), GiStatus> {
    if out.is_null() {
        return Err(fail(GiStatus::NullPointer, "output pointer is NULL"));
    }
    let h = Box::into_raw(Box::new(GiGraph { inner: g }));
    // SAFETY: checked non-null above.
    unsafe { out.write(h) };
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), GiStatus> {
    let c = CString::new(s).map_err(|_| fail(GiStatus::Internal, "string contains NUL"))?;
    if out.is_null() {
        return Err(fail(GiStatus::NullPointer, "output pointer is NULL"));
    }
    // SAFETY: checked non-null above.
    unsafe { out.write(c.into_raw()) };
    Ok(())
}

/// Copies `values` into `buf` (capacity `len`); `*written` receives the
/// number of values, or the required capacity on `BufferTooSmall`.
unsafe fn write_slice<T: Copy>(values: &[T], buf: *mut T, len: usize, written: *mut usize) -> Result<(), GiStatus> {
    unsafe { write_out(written, values.len()) }?;
    if values.len() > len {
        return Err(fail(GiStatus::BufferTooSmall, &format!("buffer needs {} entries", values.len())));
    }
    if !values.is_empty() {
        if buf.is_null() {
            return Err(fail(GiStatus::NullPointer, "buffer is NULL"));
        }
        // SAFETY: the caller guarantees `len` writable entries at `buf`.
        unsafe { ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len()) };
    }
    Ok(())
}

/// Message of the last failed call on this thread, or NULL. Valid until the
/// next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn gi_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gi_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: allocated by `CString::into_raw` in this library.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// # Safety
/// `g` must be NULL or a live handle from this library; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn gi_graph_free(g: *mut GiGraph) {
    if !g.is_null() {
        // SAFETY: allocated by `Box::into_raw` in this library.
        drop(unsafe { Box::from_raw(g) });
    }
}

/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gi_graph_from_graph6(text: *const c_char, out: *mut *mut GiGraph) -> GiStatus {
    guard(|| {
        let g = graph6::decode(unsafe { c_str(text) }?.trim_end()).map_err(lib_err)?;
        unsafe { write_handle(out, g) }
    })
}

/// Graph on `n` vertices with edges `(edges[2i], edges[2i+1])` for
/// `i < edge_count`.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (may be NULL when
/// `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gi_graph_from_edges(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut GiGraph,
) -> GiStatus {
    guard(|| {
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(fail(GiStatus::NullPointer, "edge array is NULL"));
        } else {
            // SAFETY: the caller guarantees 2 * edge_count readable values.
            unsafe { std::slice::from_raw_parts(edges, 2 * edge_count) }
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        let g = Graph::from_edges(n, &pairs).map_err(lib_err)?;
        unsafe { write_handle(out, g) }
    })
}

/// Family member by name: `complete`, `cycle`, `path`, `star`, `barbell`
/// (one parameter), `complete-bipartite` (two), `complete-q-partite` (part
/// sizes), `circulant` (n then offsets), `petersen` (none).
///
/// # Safety
/// `name` must be a NUL-terminated string, `params` must point to `count`
/// readable values (may be NULL when `count` is 0), `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gi_family(
    name: *const c_char,
    params: *const usize,
    count: usize,
    out: *mut *mut GiGraph,
) -> GiStatus {
    guard(|| {
        let name = unsafe { c_str(name) }?;
        let p: &[usize] = if count == 0 {
            &[]
        } else if params.is_null() {
            return Err(fail(GiStatus::NullPointer, "parameter array is NULL"));
        } else {
            // SAFETY: the caller guarantees `count` readable values.
            unsafe { std::slice::from_raw_parts(params, count) }
        };
        let arity = |k: usize| {
            if p.len() == k {
                Ok(())
            } else {
                Err(fail(GiStatus::Domain, &format!("family {name} takes {k} parameter(s)")))
            }
        };
        let g = match name {
            "complete" => arity(1).and_then(|_| families::complete(p[0]).map_err(lib_err)),
            "cycle" => arity(1).and_then(|_| families::cycle(p[0]).map_err(lib_err)),
            "path" => arity(1).and_then(|_| families::path(p[0]).map_err(lib_err)),
            "star" => arity(1).and_then(|_| families::star(p[0]).map_err(lib_err)),
            "barbell" => arity(1).and_then(|_| families::barbell(p[0]).map_err(lib_err)),
            "complete-bipartite" => arity(2).and_then(|_| families::complete_bipartite(p[0], p[1]).map_err(lib_err)),
            "complete-q-partite" => families::complete_q_partite(p).map_err(lib_err),
            "circulant" if !p.is_empty() => families::circulant(p[0], &p[1..]).map_err(lib_err),
            "petersen" => arity(0).map(|_| families::petersen()),
            other => Err(fail(GiStatus::Domain, &format!("unknown family {other:?}"))),
        }?;
        unsafe { write_handle(out, g) }
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gi_graph_to_graph6(g: *const GiGraph, out: *mut *mut c_char) -> GiStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        unsafe { write_string(out, graph6::encode(g)) }
    })
}

/// Vertex count, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gi_graph_vertex_count(g: *const GiGraph) -> usize {
    unsafe { g.as_ref() }.map_or(0, |h| h.inner.n())
}

/// Edge count, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gi_graph_edge_count(g: *const GiGraph) -> usize {
    unsafe { g.as_ref() }.map_or(0, |h| h.inner.edge_count())
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gi_summarize(g: *const GiGraph, out: *mut GiSummary) -> GiStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        let s = spectral::summarize(g).map_err(lib_err)?;
        let summary = GiSummary {
            n: s.n,
            m: s.m,
            components: g.component_count(),
            positive: s.inertia.positive,
            negative: s.inertia.negative,
            zero: s.inertia.zero,
            s_plus: s.s_plus,
            s_minus: s.s_minus,
            energy: s.energy,
            spectral_radius: s.spectral_radius(),
            tau: s.tau,
            b_value: s.b_value,
            slack: bounds::conjecture_slack(g, &s),
        };
        unsafe { write_out(out, summary) }
    })
}

/// Eigenvalues in descending order into `buf` (capacity `len`). `*written`
/// receives `n`, also on `BufferTooSmall`.
///
/// # Safety
/// `g` must be a live handle, `buf` must have `len` writable entries,
/// `written` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gi_eigenvalues(g: *const GiGraph, buf: *mut f64, len: usize, written: *mut usize) -> GiStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        let values = spectral::summarize(g).map_err(lib_err)?.eigenvalues;
        unsafe { write_slice(&values, buf, len, written) }
    })
}

/// `min(s-, s+) - (n - components)`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gi_conjecture_slack(g: *const GiGraph, out: *mut f64) -> GiStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        let s = spectral::summarize(g).map_err(lib_err)?;
        unsafe { write_out(out, bounds::conjecture_slack(g, &s)) }
    })
}

/// Full bound report as JSON. `tol <= 0` selects the default tolerance.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gi_bounds_report_json(
    g: *const GiGraph,
    with_chi: bool,
    tol: f64,
    out: *mut *mut c_char,
) -> GiStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        let tolerances = if tol > 0.0 { Tolerances::with_compare(tol) } else { Tolerances::default() };
        let opts = ReportOptions { with_chi, tolerances, ..Default::default() };
        let report = bounds::full_report(g, &opts).map_err(lib_err)?;
        unsafe { write_string(out, report.to_json().to_string()) }
    })
}

/// Twin quotient as a new handle, with class sizes written to
/// `multiplicities` (capacity `len`). `*written` receives the quotient's
/// vertex count, also on `BufferTooSmall` (no handle is created then).
///
/// # Safety
/// `g` must be a live handle, `multiplicities` must have `len` writable
/// entries, `written` and `quotient` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gi_quotient(
    g: *const GiGraph,
    quotient: *mut *mut GiGraph,
    multiplicities: *mut usize,
    len: usize,
    written: *mut usize,
) -> GiStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        let d = canonical::canonical_graph(g);
        unsafe { write_slice(&d.multiplicities, multiplicities, len, written) }?;
        unsafe { write_handle(quotient, d.quotient) }
    })
}
