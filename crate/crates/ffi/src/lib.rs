//! C ABI over ptl-core. Graphs and plane graphs cross the boundary as opaque
//! handles; every call returns a [`PtlStatus`] and writes results through out
//! pointers. The message of the last failure on the calling thread is kept
//! for [`ptl_last_error`].

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ptl_core::decomposition::triangular_components;
use ptl_core::embedding::{embed, from_graph6, is_planar, to_graph6, PlaneGraph};
use ptl_core::error::SearchError;
use ptl_core::families::generate;
use ptl_core::graph::Graph;
use ptl_core::patterns::{is_free, PatternSpec};
use ptl_core::search::{exact_planar_turan, SearchConfig};

/// Result code of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PtlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    NonPlanar = 4,
    InvalidArgument = 5,
    CeilingExceeded = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

/// An abstract simple graph.
pub struct PtlGraph(Graph);

/// A graph with a fixed embedding and outer face.
pub struct PtlPlaneGraph(PlaneGraph);

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn fail(status: PtlStatus, msg: impl Into<String>) -> PtlStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.into());
    status
}

fn guard(f: impl FnOnce() -> PtlStatus) -> PtlStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(PtlStatus::Panic, "internal panic"))
}

unsafe fn str_arg<'a>(s: *const c_char) -> Result<&'a str, PtlStatus> {
    if s.is_null() {
        return Err(fail(PtlStatus::NullPointer, "string argument is null"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(PtlStatus::InvalidUtf8, "string argument is not UTF-8"))
}

/// Copies `s` and a terminating NUL into `buf`. `needed` receives the
/// buffer size required, including the NUL.
unsafe fn write_str(s: &str, buf: *mut c_char, cap: usize, needed: *mut usize) -> PtlStatus {
    if !needed.is_null() {
        *needed = s.len() + 1;
    }
    if buf.is_null() || cap < s.len() + 1 {
        return fail(PtlStatus::BufferTooSmall, format!("need {} bytes", s.len() + 1));
    }
    ptr::copy_nonoverlapping(s.as_ptr(), buf.cast::<u8>(), s.len());
    *buf.add(s.len()) = 0;
    PtlStatus::Ok
}

/// Human-readable name of a status code. The string is static.
#[no_mangle]
pub extern "C" fn ptl_status_name(status: PtlStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        PtlStatus::Ok => b"ok\0",
        PtlStatus::NullPointer => b"null pointer\0",
        PtlStatus::InvalidUtf8 => b"invalid UTF-8\0",
        PtlStatus::ParseError => b"parse error\0",
        PtlStatus::NonPlanar => b"graph is not planar\0",
        PtlStatus::InvalidArgument => b"invalid argument\0",
        PtlStatus::CeilingExceeded => b"order exceeds the search ceiling\0",
        PtlStatus::BufferTooSmall => b"buffer too small\0",
        PtlStatus::Panic => b"internal panic\0",
    };
    s.as_ptr().cast()
}

/// Copies the message of the last failure on this thread into `buf`.
///
/// # Safety
/// `buf` must point to `cap` writable bytes or be null; `needed` must be
/// null or writable.
#[no_mangle]
pub unsafe extern "C" fn ptl_last_error(buf: *mut c_char, cap: usize, needed: *mut usize) -> PtlStatus {
    let msg = LAST_ERROR.with(|e| e.borrow().clone());
    write_str(&msg, buf, cap, needed)
}

/// Parses a graph6 string.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ptl_graph_from_graph6(text: *const c_char, out: *mut *mut PtlGraph) -> PtlStatus {
    guard(|| {
        if out.is_null() {
            return fail(PtlStatus::NullPointer, "out is null");
        }
        let s = match str_arg(text) {
            Ok(s) => s,
            Err(e) => return e,
        };
        match from_graph6(s.trim()) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(PtlGraph(g)));
                PtlStatus::Ok
            }
            Err(e) => fail(PtlStatus::ParseError, e.to_string()),
        }
    })
}

/// Builds a graph on `n` vertices from `m` edges given as `2m` endpoints.
///
/// # Safety
/// `endpoints` must point to `2 * m` values (or be null when `m` is 0);
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ptl_graph_from_edges(
    n: usize,
    endpoints: *const u32,
    m: usize,
    out: *mut *mut PtlGraph,
) -> PtlStatus {
    guard(|| {
        if out.is_null() || (endpoints.is_null() && m > 0) {
            return fail(PtlStatus::NullPointer, "null argument");
        }
        let flat: &[u32] = if m == 0 { &[] } else { std::slice::from_raw_parts(endpoints, 2 * m) };
        let edges: Vec<(usize, usize)> = flat.chunks(2).map(|p| (p[0] as usize, p[1] as usize)).collect();
        match Graph::from_edges(n, &edges) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(PtlGraph(g)));
                PtlStatus::Ok
            }
            Err(e) => fail(PtlStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// The graph `name` (for example "H5", "C3+Theta4", "W6").
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ptl_pattern_graph(name: *const c_char, out: *mut *mut PtlGraph) -> PtlStatus {
    guard(|| {
        if out.is_null() {
            return fail(PtlStatus::NullPointer, "out is null");
        }
        let s = match str_arg(name) {
            Ok(s) => s,
            Err(e) => return e,
        };
        match s.parse::<PatternSpec>().and_then(|p| p.build()) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(PtlGraph(g)));
                PtlStatus::Ok
            }
            Err(e) => fail(PtlStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ptl_graph_free(g: *mut PtlGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Order and size of a graph.
///
/// # Safety
/// `g` must be a live handle; `order` and `size` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ptl_graph_counts(g: *const PtlGraph, order: *mut usize, size: *mut usize) -> PtlStatus {
    if g.is_null() || order.is_null() || size.is_null() {
        return fail(PtlStatus::NullPointer, "null argument");
    }
    *order = (*g).0.order();
    *size = (*g).0.size();
    PtlStatus::Ok
}

/// Writes the graph6 encoding of `g` into `buf`.
///
/// # Safety
/// `g` must be a live handle; `buf` must point to `cap` writable bytes or be
/// null; `needed` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn ptl_graph_to_graph6(
    g: *const PtlGraph,
    buf: *mut c_char,
    cap: usize,
    needed: *mut usize,
) -> PtlStatus {
    if g.is_null() {
        return fail(PtlStatus::NullPointer, "graph is null");
    }
    guard(|| write_str(&to_graph6(&(*g).0), buf, cap, needed))
}

/// Whether `g` is planar.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ptl_is_planar(g: *const PtlGraph, out: *mut bool) -> PtlStatus {
    if g.is_null() || out.is_null() {
        return fail(PtlStatus::NullPointer, "null argument");
    }
    guard(|| {
        *out = is_planar(&(*g).0);
        PtlStatus::Ok
    })
}

/// Whether `g` has no subgraph isomorphic to `h`.
///
/// # Safety
/// `g` and `h` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ptl_is_free(g: *const PtlGraph, h: *const PtlGraph, out: *mut bool) -> PtlStatus {
    if g.is_null() || h.is_null() || out.is_null() {
        return fail(PtlStatus::NullPointer, "null argument");
    }
    guard(|| {
        *out = is_free(&(*g).0, &(*h).0);
        PtlStatus::Ok
    })
}

/// A plane embedding of a connected planar graph.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ptl_embed(g: *const PtlGraph, out: *mut *mut PtlPlaneGraph) -> PtlStatus {
    if g.is_null() || out.is_null() {
        return fail(PtlStatus::NullPointer, "null argument");
    }
    guard(|| match embed(&(*g).0) {
        Ok(pg) => {
            *out = Box::into_raw(Box::new(PtlPlaneGraph(pg)));
            PtlStatus::Ok
        }
        Err(w) => fail(PtlStatus::NonPlanar, format!("{:?} subdivision found", w.kind)),
    })
}

/// Builds a named family member (see `ptl family gen`). `params` is a
/// comma-separated list such as "k=4" or "x=2,y=1"; it may be null or empty.
///
/// # Safety
/// `name` must be a NUL-terminated string, `params` NUL-terminated or null;
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ptl_family_generate(
    name: *const c_char,
    params: *const c_char,
    out: *mut *mut PtlPlaneGraph,
) -> PtlStatus {
    guard(|| {
        if out.is_null() {
            return fail(PtlStatus::NullPointer, "out is null");
        }
        let name = match str_arg(name) {
            Ok(s) => s,
            Err(e) => return e,
        };
        let raw = if params.is_null() {
            ""
        } else {
            match str_arg(params) {
                Ok(s) => s,
                Err(e) => return e,
            }
        };
        let mut map = BTreeMap::new();
        for item in raw.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let parsed = item.split_once('=').and_then(|(k, v)| Some((k.trim(), v.trim().parse::<usize>().ok()?)));
            match parsed {
                Some((k, v)) => {
                    map.insert(k.to_string(), v);
                }
                None => return fail(PtlStatus::ParseError, format!("bad parameter `{item}`")),
            }
        }
        match generate(name, &map) {
            Ok(inst) => {
                *out = Box::into_raw(Box::new(PtlPlaneGraph(inst.plane)));
                PtlStatus::Ok
            }
            Err(e) => fail(PtlStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Releases a plane graph. Null is ignored.
///
/// # Safety
/// `pg` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ptl_plane_free(pg: *mut PtlPlaneGraph) {
    if !pg.is_null() {
        drop(Box::from_raw(pg));
    }
}

/// Copies the underlying graph of a plane graph into a new handle.
///
/// # Safety
/// `pg` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ptl_plane_graph(pg: *const PtlPlaneGraph, out: *mut *mut PtlGraph) -> PtlStatus {
    if pg.is_null() || out.is_null() {
        return fail(PtlStatus::NullPointer, "null argument");
    }
    *out = Box::into_raw(Box::new(PtlGraph((*pg).0.graph().clone())));
    PtlStatus::Ok
}

/// Number of faces and of 3-faces (the outer face included).
///
/// # Safety
/// `pg` must be a live handle; `faces` and `triangles` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ptl_plane_face_counts(
    pg: *const PtlPlaneGraph,
    faces: *mut usize,
    triangles: *mut usize,
) -> PtlStatus {
    if pg.is_null() || faces.is_null() || triangles.is_null() {
        return fail(PtlStatus::NullPointer, "null argument");
    }
    guard(|| match (*pg).0.faces() {
        Ok(f) => {
            *faces = f.len();
            *triangles = f.count_of_length(3);
            PtlStatus::Ok
        }
        Err(e) => fail(PtlStatus::InvalidArgument, e.to_string()),
    })
}

/// Largest triangle density over the triangular components, as a reduced
/// fraction. A graph without 3-faces gives 0/1.
///
/// # Safety
/// `pg` must be a live handle; `num` and `den` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ptl_plane_max_density(pg: *const PtlPlaneGraph, num: *mut i64, den: *mut i64) -> PtlStatus {
    if pg.is_null() || num.is_null() || den.is_null() {
        return fail(PtlStatus::NullPointer, "null argument");
    }
    guard(|| match triangular_components(&(*pg).0) {
        Ok(cs) => {
            let best = cs.iter().map(|c| c.density()).max().unwrap_or_default();
            *num = *best.numer();
            *den = *best.denom();
            PtlStatus::Ok
        }
        Err(e) => fail(PtlStatus::InvalidArgument, e.to_string()),
    })
}

/// Exact planar Turán number ex_P(n, pattern). `workers` of 0 uses every
/// available core.
///
/// # Safety
/// `pattern` must be a NUL-terminated string; `ex` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ptl_exact_turan(
    n: usize,
    pattern: *const c_char,
    ceiling: usize,
    workers: usize,
    ex: *mut usize,
) -> PtlStatus {
    guard(|| {
        if ex.is_null() {
            return fail(PtlStatus::NullPointer, "ex is null");
        }
        let p = match str_arg(pattern).map(str::parse::<PatternSpec>) {
            Ok(Ok(p)) => p,
            Ok(Err(e)) => return fail(PtlStatus::InvalidArgument, e.to_string()),
            Err(e) => return e,
        };
        let mut cfg = SearchConfig {
            ceiling,
            ..SearchConfig::default()
        };
        if workers > 0 {
            cfg.workers = workers;
        }
        match exact_planar_turan(n, &p, &cfg) {
            Ok(r) => {
                *ex = r.ex;
                PtlStatus::Ok
            }
            Err(e @ SearchError::CeilingExceeded { .. }) => fail(PtlStatus::CeilingExceeded, e.to_string()),
            Err(e) => fail(PtlStatus::InvalidArgument, e.to_string()),
        }
    })
}
