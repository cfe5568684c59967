//! C ABI for `branchpair`.
//!
//! Digraphs cross the boundary as opaque `BpDigraph` handles that the caller
//! releases with `bp_digraph_free`. Every fallible function returns a
//! `BpStatus`; on failure `bp_last_error` describes the problem until the
//! next call on the same thread. Strings returned by the library are freed
//! with `bp_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use branchpair::branchings::{find_good_pair, find_strong_arc_decomposition, good_pair_matrix};
use branchpair::catalog::{self, CatalogKey};
use branchpair::connectivity::arc_strong_connectivity;
use branchpair::digraph::{parse_digraph, Digraph, VertexId};
use branchpair::verify::{exhaustive_report, ReportOptions};
use branchpair::Error;

/// Opaque digraph handle.
pub struct BpDigraph(Digraph);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Validation = 4,
    Argument = 5,
    ResourceLimit = 6,
    ConstructionGap = 7,
    BufferTooSmall = 8,
    Panic = 9,
}

impl From<&Error> for BpStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Parse { .. } => BpStatus::Parse,
            Error::Validation(_) => BpStatus::Validation,
            Error::Argument(_) => BpStatus::Argument,
            Error::ResourceLimit { .. } => BpStatus::ResourceLimit,
            Error::ConstructionGap { .. } => BpStatus::ConstructionGap,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = CString::new(message.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

struct Failure(BpStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(BpStatus::from(&e), e.to_string())
    }
}

/// Runs `body`, translating errors and panics into a status code.
fn guard<F: FnOnce() -> Result<(), Failure>>(body: F) -> BpStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => BpStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            BpStatus::Panic
        }
    }
}

unsafe fn digraph<'a>(handle: *const BpDigraph) -> Result<&'a Digraph, Failure> {
    handle
        .as_ref()
        .map(|h| &h.0)
        .ok_or_else(|| Failure(BpStatus::NullPointer, "null digraph handle".into()))
}

unsafe fn out_ref<'a, T>(p: *mut T) -> Result<&'a mut T, Failure> {
    p.as_mut()
        .ok_or_else(|| Failure(BpStatus::NullPointer, "null output pointer".into()))
}

unsafe fn c_str<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(BpStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(BpStatus::InvalidUtf8, "string is not UTF-8".into()))
}

fn vertex(d: &Digraph, index: usize) -> Result<VertexId, Failure> {
    if index < d.n() {
        Ok(VertexId(index))
    } else {
        Err(Failure(
            BpStatus::Argument,
            format!("vertex {index} out of range for {} vertices", d.n()),
        ))
    }
}

/// Message for the last failed call on this thread, or NULL. Valid until
/// the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn bp_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses an arc-list document.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bp_digraph_parse(text: *const c_char, out: *mut *mut BpDigraph) -> BpStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = ptr::null_mut();
        let d = parse_digraph(c_str(text)?)?;
        *out = Box::into_raw(Box::new(BpDigraph(d)));
        Ok(())
    })
}

/// Builds a catalog digraph by name (`s4`, `combo_iv_ii_dashed`, ...).
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bp_catalog_build(name: *const c_char, out: *mut *mut BpDigraph) -> BpStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = ptr::null_mut();
        let name = c_str(name)?;
        let key = CatalogKey::from_slug(name)
            .ok_or_else(|| Failure(BpStatus::Argument, format!("no catalog digraph named {name:?}")))?;
        *out = Box::into_raw(Box::new(BpDigraph(catalog::build(key)?)));
        Ok(())
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `handle` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn bp_digraph_free(handle: *mut BpDigraph) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// # Safety
/// `handle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bp_digraph_vertex_count(handle: *const BpDigraph, out: *mut usize) -> BpStatus {
    guard(|| {
        *out_ref(out)? = digraph(handle)?.n();
        Ok(())
    })
}

/// # Safety
/// `handle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bp_digraph_arc_count(handle: *const BpDigraph, out: *mut usize) -> BpStatus {
    guard(|| {
        *out_ref(out)? = digraph(handle)?.arc_count();
        Ok(())
    })
}

/// # Safety
/// `handle` must be a live handle and `k` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bp_arc_strong_connectivity(handle: *const BpDigraph, k: *mut u32) -> BpStatus {
    guard(|| {
        *out_ref(k)? = arc_strong_connectivity(digraph(handle)?).k;
        Ok(())
    })
}

/// Decides whether a good `(u, v)`-pair exists (vertex indices). When it
/// does and the buffers are non-NULL, the arc ids of the out- and
/// in-branching are written to `out_arcs` / `in_arcs`, each of which must
/// hold `vertex_count - 1` entries.
///
/// # Safety
/// `handle` must be live, `found` valid, and non-NULL buffers large enough.
#[no_mangle]
pub unsafe extern "C" fn bp_find_good_pair(
    handle: *const BpDigraph,
    u: usize,
    v: usize,
    found: *mut bool,
    out_arcs: *mut usize,
    in_arcs: *mut usize,
) -> BpStatus {
    guard(|| {
        let d = digraph(handle)?;
        let found = out_ref(found)?;
        *found = false;
        let Some(pair) = find_good_pair(d, vertex(d, u)?, vertex(d, v)?)? else {
            return Ok(());
        };
        *found = true;
        for (buffer, branching) in [(out_arcs, &pair.out_branching), (in_arcs, &pair.in_branching)] {
            if !buffer.is_null() {
                for (i, a) in branching.arcs.iter().enumerate() {
                    *buffer.add(i) = a.0;
                }
            }
        }
        Ok(())
    })
}

/// Writes the good-pair matrix row-major into `cells` (row = out-root,
/// column = in-root); `len` must be at least `vertex_count^2`.
///
/// # Safety
/// `handle` must be live and `cells` point to `len` writable booleans.
#[no_mangle]
pub unsafe extern "C" fn bp_good_pair_matrix(handle: *const BpDigraph, cells: *mut bool, len: usize) -> BpStatus {
    guard(|| {
        let d = digraph(handle)?;
        if cells.is_null() {
            return Err(Failure(BpStatus::NullPointer, "null matrix buffer".into()));
        }
        let n = d.n();
        if len < n * n {
            return Err(Failure(
                BpStatus::BufferTooSmall,
                format!("need {} cells, got {len}", n * n),
            ));
        }
        for (i, cell) in good_pair_matrix(d).to_bools().into_iter().flatten().enumerate() {
            *cells.add(i) = cell;
        }
        Ok(())
    })
}

/// Exhaustive strong arc decomposition search; fails with
/// `ResourceLimit` beyond `BRANCHPAIR_LIMIT` bipartitions.
///
/// # Safety
/// `handle` must be live and `found` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bp_has_strong_arc_decomposition(handle: *const BpDigraph, found: *mut bool) -> BpStatus {
    guard(|| {
        let found = out_ref(found)?;
        *found = find_strong_arc_decomposition(digraph(handle)?)?.is_some();
        Ok(())
    })
}

/// Exhaustive verification report as JSON, certificates included. Free the
/// string with `bp_string_free`.
///
/// # Safety
/// `handle` must be live and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bp_report_json(handle: *const BpDigraph, out: *mut *mut c_char) -> BpStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = ptr::null_mut();
        let options = ReportOptions {
            certificates: true,
            decomposition: false,
        };
        let report = exhaustive_report("user", digraph(handle)?, options)?;
        let json = serde_json::to_string(&report).map_err(|e| Failure(BpStatus::Argument, e.to_string()))?;
        *out = CString::new(json).expect("JSON has no NUL").into_raw();
        Ok(())
    })
}

/// Releases a string returned by the library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn bp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
