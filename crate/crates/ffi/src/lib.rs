//! C ABI over the planar-turan engine.
//!
//! Every fallible call returns a [`PtStatus`]; on failure a description is
//! available from [`pt_last_error_message`] on the same thread. Objects are
//! opaque handles owned by the caller and released with the matching
//! `*_free` function. Strings returned through out-parameters are released
//! with [`pt_string_free`].

#![deny(unsafe_op_in_unsafe_fn)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use planar_turan::bounds;
use planar_turan::constructions::{self, Family};
use planar_turan::doublestar::{contains_double_star, DoubleStarPattern, Witness};
use planar_turan::search::{exact_planar_turan, ExactResult, SearchConfig};
use planar_turan::{graph6, is_planar, Error, Graph};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PtStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    MalformedGraph6 = 3,
    OutOfRange = 4,
    UnsupportedPattern = 5,
    VerificationFailed = 6,
    Internal = 7,
}

/// Opaque graph handle.
pub struct PtGraph(Graph);

/// Opaque double star witness handle.
pub struct PtWitness(Witness);

/// Opaque exact search result handle.
pub struct PtExactResult(ExactResult);

/// Proven bounds at one order. Absent sides have `has_* = false`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PtBounds {
    pub has_lower: bool,
    pub lower: usize,
    pub has_upper: bool,
    pub upper: usize,
    /// Whether `n` is inside the proven range.
    pub valid: bool,
    /// Whether a negative lower formula was clamped to 0.
    pub clamped: bool,
}

/// Conjectured value as the fraction `numerator / denominator`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PtConjecture {
    pub numerator: i64,
    pub denominator: i64,
    /// Floor of the value.
    pub count: usize,
    /// Only the main term is conjectured.
    pub asymptotic: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> PtStatus {
    match e {
        Error::Graph6(_) => PtStatus::MalformedGraph6,
        Error::UnsupportedPattern { .. } => PtStatus::UnsupportedPattern,
        Error::Verification { .. } => PtStatus::VerificationFailed,
        Error::InvalidPattern(_) | Error::LoopEdge(_) | Error::NotAnEdge(..) | Error::NotInSet(_) => {
            PtStatus::InvalidArgument
        }
        _ => PtStatus::OutOfRange,
    }
}

struct Fail(PtStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(PtStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, converting errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> PtStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PtStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            PtStatus::Internal
        }
    }
}

/// # Safety
/// `p` must be null or valid for reads.
unsafe fn as_ref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    unsafe { p.as_ref() }.ok_or_else(|| null(what))
}

/// # Safety
/// `out` must be null or valid for writes.
unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    unsafe { out.write(value) };
    Ok(())
}

/// Boxes `value` into a new handle at `out`.
///
/// # Safety
/// `out` must be null or valid for writes.
unsafe fn emit<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    unsafe { out.write(Box::into_raw(Box::new(value))) };
    Ok(())
}

fn pattern(m: usize, k: usize) -> Result<DoubleStarPattern, Fail> {
    Ok(DoubleStarPattern::new(m, k)?)
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn pt_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the most recent failure on this thread. Valid until the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn pt_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses one graph6 line.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pt_graph_from_graph6(text: *const c_char, out: *mut *mut PtGraph) -> PtStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = unsafe { CStr::from_ptr(text) }.to_string_lossy();
        let g = graph6::decode(&s)?;
        unsafe { emit(out, PtGraph(g)) }
    })
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`2 * edge_count` entries).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or may be null when
/// `edge_count` is 0); `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pt_graph_from_edges(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut PtGraph,
) -> PtStatus {
    guard(|| {
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            let len = edge_count
                .checked_mul(2)
                .ok_or_else(|| Fail(PtStatus::OutOfRange, "edge_count overflows".into()))?;
            unsafe { std::slice::from_raw_parts(edges, len) }
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|c| (c[0], c[1])).collect();
        let g = Graph::from_edge_list(n, &pairs)?;
        unsafe { emit(out, PtGraph(g)) }
    })
}

/// # Safety
/// `g` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pt_graph_free(g: *mut PtGraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pt_graph_vertex_count(g: *const PtGraph) -> usize {
    unsafe { g.as_ref() }.map_or(0, |g| g.0.vertex_count())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pt_graph_edge_count(g: *const PtGraph) -> usize {
    unsafe { g.as_ref() }.map_or(0, |g| g.0.edge_count())
}

/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pt_graph_degree(g: *const PtGraph, v: usize, out: *mut usize) -> PtStatus {
    guard(|| {
        let g = unsafe { as_ref(g, "graph") }?;
        let d = g.0.degree(v)?;
        unsafe { write(out, d, "out") }
    })
}

/// Whether `uv` is an edge; false for out-of-range vertices.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pt_graph_has_edge(g: *const PtGraph, u: usize, v: usize) -> bool {
    unsafe { g.as_ref() }.is_some_and(|g| {
        let n = g.0.vertex_count();
        u < n && v < n && g.0.has_edge(u, v)
    })
}

/// graph6 encoding; release with [`pt_string_free`].
///
/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pt_graph_to_graph6(g: *const PtGraph, out: *mut *mut c_char) -> PtStatus {
    guard(|| {
        let g = unsafe { as_ref(g, "graph") }?;
        let s = graph6::encode(&g.0)?;
        let c = CString::new(s).expect("graph6 is printable ASCII");
        unsafe { write(out, c.into_raw(), "out") }
    })
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pt_is_planar(g: *const PtGraph, out: *mut bool) -> PtStatus {
    guard(|| {
        let g = unsafe { as_ref(g, "graph") }?;
        unsafe { write(out, is_planar(&g.0), "out") }
    })
}

/// Searches for S_{m,k}. Writes a witness handle, or null when the graph is
/// free of the pattern. The pattern is canonicalised so that `m <= k`.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pt_find_double_star(
    g: *const PtGraph,
    m: usize,
    k: usize,
    out: *mut *mut PtWitness,
) -> PtStatus {
    guard(|| {
        let g = unsafe { as_ref(g, "graph") }?;
        let p = pattern(m, k)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let w = contains_double_star(&g.0, p).map_or(ptr::null_mut(), |w| Box::into_raw(Box::new(PtWitness(w))));
        unsafe { write(out, w, "out") }
    })
}

/// # Safety
/// `w` must be a live handle; `x` and `y` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pt_witness_backbone(w: *const PtWitness, x: *mut usize, y: *mut usize) -> PtStatus {
    guard(|| {
        let w = unsafe { as_ref(w, "witness") }?;
        unsafe { write(x, w.0.backbone.0, "x") }?;
        unsafe { write(y, w.0.backbone.1, "y") }
    })
}

/// Copies the leaves of backbone end `side` (0 for x, 1 for y) into `buf`,
/// which holds `capacity` entries, and stores the leaf count in `len`. Fails
/// with `OutOfRange` when `capacity` is too small; `len` is still set.
///
/// # Safety
/// `w` must be a live handle; `buf` must hold `capacity` writable entries;
/// `len` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pt_witness_leaves(
    w: *const PtWitness,
    side: u32,
    buf: *mut usize,
    capacity: usize,
    len: *mut usize,
) -> PtStatus {
    guard(|| {
        let w = unsafe { as_ref(w, "witness") }?;
        let leaves = match side {
            0 => &w.0.leaves_x,
            1 => &w.0.leaves_y,
            _ => return Err(Fail(PtStatus::InvalidArgument, format!("side must be 0 or 1, got {side}"))),
        };
        unsafe { write(len, leaves.len(), "len") }?;
        if leaves.len() > capacity {
            return Err(Fail(PtStatus::OutOfRange, format!("buffer holds {capacity}, need {}", leaves.len())));
        }
        if !leaves.is_empty() {
            if buf.is_null() {
                return Err(null("buf"));
            }
            unsafe { ptr::copy_nonoverlapping(leaves.as_ptr(), buf, leaves.len()) };
        }
        Ok(())
    })
}

/// # Safety
/// `w` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pt_witness_free(w: *mut PtWitness) {
    if !w.is_null() {
        drop(unsafe { Box::from_raw(w) });
    }
}

/// Computes ex_P(n, S_{m,k}). `workers = 0` uses the available parallelism;
/// `node_budget = 0` means unlimited.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pt_exact(
    n: usize,
    m: usize,
    k: usize,
    workers: usize,
    node_budget: u64,
    out: *mut *mut PtExactResult,
) -> PtStatus {
    guard(|| {
        let p = pattern(m, k)?;
        let mut cfg = SearchConfig::default();
        if workers > 0 {
            cfg.worker_count = workers;
        }
        cfg.node_budget = (node_budget > 0).then_some(node_budget);
        let r = exact_planar_turan(n, p, &cfg)?;
        unsafe { emit(out, PtExactResult(r)) }
    })
}

/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pt_exact_result_value(r: *const PtExactResult) -> usize {
    unsafe { r.as_ref() }.map_or(0, |r| r.0.value)
}

/// Whether the search completed; false for a null handle.
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pt_exact_result_is_exact(r: *const PtExactResult) -> bool {
    unsafe { r.as_ref() }.is_some_and(|r| r.0.exact)
}

/// Number of extremal isomorphism classes, or -1 when unknown.
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pt_exact_result_extremal_classes(r: *const PtExactResult) -> i64 {
    unsafe { r.as_ref() }
        .and_then(|r| r.0.extremal_classes)
        .map_or(-1, |c| c as i64)
}

/// Number of stored extremal graphs.
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pt_exact_result_extremal_count(r: *const PtExactResult) -> usize {
    unsafe { r.as_ref() }.map_or(0, |r| r.0.extremal.len())
}

/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pt_exact_result_nodes(r: *const PtExactResult) -> u64 {
    unsafe { r.as_ref() }.map_or(0, |r| r.0.nodes_explored)
}

/// Copy of stored extremal graph `index` as a new graph handle.
///
/// # Safety
/// `r` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pt_exact_result_extremal(
    r: *const PtExactResult,
    index: usize,
    out: *mut *mut PtGraph,
) -> PtStatus {
    guard(|| {
        let r = unsafe { as_ref(r, "result") }?;
        let g = r.0.extremal.get(index).ok_or_else(|| {
            Fail(PtStatus::OutOfRange, format!("index {index} >= {}", r.0.extremal.len()))
        })?;
        unsafe { emit(out, PtGraph(g.clone())) }
    })
}

/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pt_exact_result_free(r: *mut PtExactResult) {
    if !r.is_null() {
        drop(unsafe { Box::from_raw(r) });
    }
}

/// Builds and certifies a construction by family name (`k2star`,
/// `double-wheel`, `tri7`, `icosa`, `s35`). `n = 0` means unset.
///
/// # Safety
/// `family` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pt_construct(
    family: *const c_char,
    n: usize,
    copies: usize,
    out: *mut *mut PtGraph,
) -> PtStatus {
    guard(|| {
        if family.is_null() {
            return Err(null("family"));
        }
        let name = unsafe { CStr::from_ptr(family) }.to_string_lossy();
        let family: Family = name.parse()?;
        let report = constructions::build(family, (n > 0).then_some(n), copies)?;
        unsafe { emit(out, PtGraph(report.graph)) }
    })
}

/// Proven bounds for S_{m,k} at order `n`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pt_theorem_bounds(m: usize, k: usize, n: usize, out: *mut PtBounds) -> PtStatus {
    guard(|| {
        let b = bounds::theorem_bounds(pattern(m, k)?, n)?;
        let value = PtBounds {
            has_lower: b.lower.is_some(),
            lower: b.lower.unwrap_or(0),
            has_upper: b.upper.is_some(),
            upper: b.upper.unwrap_or(0),
            valid: b.valid,
            clamped: b.clamped,
        };
        unsafe { write(out, value, "out") }
    })
}

/// Conjectured value of ex_P(n, S_{m,k}). `found` is false when no
/// conjecture covers the pattern at `n`.
///
/// # Safety
/// `out` and `found` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pt_conjectured_value(
    m: usize,
    k: usize,
    n: usize,
    out: *mut PtConjecture,
    found: *mut bool,
) -> PtStatus {
    guard(|| {
        let c = bounds::conjectured_value(pattern(m, k)?, n);
        unsafe { write(found, c.is_some(), "found") }?;
        let value = c.map_or_else(PtConjecture::default, |c| PtConjecture {
            numerator: *c.value.numer(),
            denominator: *c.value.denom(),
            count: c.count,
            asymptotic: c.asymptotic,
        });
        unsafe { write(out, value, "out") }
    })
}
