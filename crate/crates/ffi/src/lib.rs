//! C ABI over the core distance routines: opaque ccdh handles, status-code
//! returns, out-parameters for values. The matching header lives in
//! `include/rhdist.h` and is regenerated by the build script.

use std::ffi::{c_char, CStr};
use std::path::Path;
use std::ptr;

use rhdist::ccdh::Ccdh;
use rhdist::error::RhError;
use rhdist::{families, graph, rh};

/// Opaque handle to a complementary cumulative degree histogram.
pub struct RhCcdh(Ccdh);

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RhStatus {
    RhOk = 0,
    RhNullPointer = 1,
    RhInvalidArgument = 2,
    RhParseError = 3,
    RhEmptyGraph = 4,
    RhIoError = 5,
}

impl From<&RhError> for RhStatus {
    fn from(e: &RhError) -> Self {
        match e {
            RhError::EmptyGraph | RhError::EmptyResult => RhStatus::RhEmptyGraph,
            RhError::Parse { .. } | RhError::Format(_) => RhStatus::RhParseError,
            RhError::Io(_) => RhStatus::RhIoError,
            _ => RhStatus::RhInvalidArgument,
        }
    }
}

/// Short static description of a status code.
#[no_mangle]
pub extern "C" fn rh_status_name(status: RhStatus) -> *const c_char {
    let name: &'static CStr = match status {
        RhStatus::RhOk => c"ok",
        RhStatus::RhNullPointer => c"null pointer",
        RhStatus::RhInvalidArgument => c"invalid argument",
        RhStatus::RhParseError => c"parse error",
        RhStatus::RhEmptyGraph => c"empty graph",
        RhStatus::RhIoError => c"i/o error",
    };
    name.as_ptr()
}

fn emit(out: *mut *mut RhCcdh, c: Result<Ccdh, RhError>) -> RhStatus {
    match c {
        Ok(c) => {
            unsafe { *out = Box::into_raw(Box::new(RhCcdh(c))) };
            RhStatus::RhOk
        }
        Err(e) => {
            unsafe { *out = ptr::null_mut() };
            RhStatus::from(&e)
        }
    }
}

/// Builds a ccdh from the dense value sequence `N(1), ..., N(len)`.
///
/// # Safety
/// `values` must point to `len` readable u64s and `out` must be a valid
/// location to store the handle.
#[no_mangle]
pub unsafe extern "C" fn rh_ccdh_from_values(
    values: *const u64,
    len: usize,
    out: *mut *mut RhCcdh,
) -> RhStatus {
    if values.is_null() || out.is_null() {
        return RhStatus::RhNullPointer;
    }
    let slice = std::slice::from_raw_parts(values, len);
    emit(out, Ccdh::from_values(slice.to_vec()))
}

/// Builds a ccdh from a multiset of positive vertex degrees.
///
/// # Safety
/// `degrees` must point to `len` readable u64s and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn rh_ccdh_from_degrees(
    degrees: *const u64,
    len: usize,
    out: *mut *mut RhCcdh,
) -> RhStatus {
    if degrees.is_null() || out.is_null() {
        return RhStatus::RhNullPointer;
    }
    let slice = std::slice::from_raw_parts(degrees, len);
    let c = rhdist::ccdh::DegreeHistogram::from_degrees(slice.iter().copied())
        .map(|h| Ccdh::from_histogram(&h));
    emit(out, c)
}

/// Parses an edge-list file (SNAP-style text) and takes its ccdh.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn rh_ccdh_from_edge_list_path(
    path: *const c_char,
    out: *mut *mut RhCcdh,
) -> RhStatus {
    if path.is_null() || out.is_null() {
        return RhStatus::RhNullPointer;
    }
    let Ok(path) = CStr::from_ptr(path).to_str() else {
        return RhStatus::RhInvalidArgument;
    };
    let c = graph::load_edge_list(Path::new(path)).map(|g| g.ccdh());
    emit(out, c)
}

/// Releases a handle returned by any of the constructors. Null is a no-op.
///
/// # Safety
/// `h` must be a handle from this library that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn rh_ccdh_free(h: *mut RhCcdh) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Maximum degree of the curve.
///
/// # Safety
/// `h` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn rh_ccdh_delta(h: *const RhCcdh) -> u64 {
    (*h).0.delta()
}

/// `N(k)`; 0 past the maximum degree. `k` must be >= 1.
///
/// # Safety
/// `h` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn rh_ccdh_value(h: *const RhCcdh, k: u64) -> u64 {
    if k == 0 {
        return 0;
    }
    (*h).0.value(k)
}

/// Piecewise-linear ccdh value at `x >= 1` (0 past the curve).
///
/// # Safety
/// `h` must be a live handle and `out` a valid location.
#[no_mangle]
pub unsafe extern "C" fn rh_ccdh_smooth_eval(h: *const RhCcdh, x: f64, out: *mut f64) -> RhStatus {
    if h.is_null() || out.is_null() {
        return RhStatus::RhNullPointer;
    }
    match (*h).0.smooth_eval(x) {
        Ok(v) => {
            *out = v;
            RhStatus::RhOk
        }
        Err(e) => RhStatus::from(&e),
    }
}

/// Directional distances plus their maximum.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RhDistance {
    pub forward: f64,
    pub backward: f64,
    pub distance: f64,
}

/// Smooth relative Hausdorff distance between two curves.
///
/// # Safety
/// `f` and `g` must be live handles, `out` a valid location.
#[no_mangle]
pub unsafe extern "C" fn rh_smooth_distance(
    f: *const RhCcdh,
    g: *const RhCcdh,
    out: *mut RhDistance,
) -> RhStatus {
    if f.is_null() || g.is_null() || out.is_null() {
        return RhStatus::RhNullPointer;
    }
    let r = rh::smooth_rh(&(*f).0, &(*g).0);
    *out = RhDistance {
        forward: r.forward,
        backward: r.backward,
        distance: r.distance,
    };
    RhStatus::RhOk
}

/// Discrete relative Hausdorff distance between two curves.
///
/// # Safety
/// `f` and `g` must be live handles, `out` a valid location.
#[no_mangle]
pub unsafe extern "C" fn rh_discrete_distance(
    f: *const RhCcdh,
    g: *const RhCcdh,
    out: *mut RhDistance,
) -> RhStatus {
    if f.is_null() || g.is_null() || out.is_null() {
        return RhStatus::RhNullPointer;
    }
    let r = rh::discrete_rh(&(*f).0, &(*g).0);
    *out = RhDistance {
        forward: r.forward,
        backward: r.backward,
        distance: r.distance,
    };
    RhStatus::RhOk
}

/// Smooth distance divided by the maximum attainable at the two vertex
/// counts (both graphs need at least 3 vertices).
///
/// # Safety
/// `f` and `g` must be live handles, `out` a valid location.
#[no_mangle]
pub unsafe extern "C" fn rh_normalized_ratio(
    f: *const RhCcdh,
    g: *const RhCcdh,
    out: *mut f64,
) -> RhStatus {
    if f.is_null() || g.is_null() || out.is_null() {
        return RhStatus::RhNullPointer;
    }
    match families::normalized_ratio(&(*f).0, &(*g).0) {
        Ok(v) => {
            *out = v;
            RhStatus::RhOk
        }
        Err(e) => RhStatus::from(&e),
    }
}
