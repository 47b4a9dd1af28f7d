//! C interface to `ldt-core`.
//!
//! Graphs and groups are opaque handles created by the `*_parse` /
//! constructor functions and released with the matching `*_free`. Every
//! fallible function returns an [`LdtStatus`]; on failure a description is
//! available from [`ldt_last_error_message`] on the same thread. Strings
//! returned through `char **` out-parameters are owned by the caller and
//! must be released with [`ldt_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ldt_core::arrays::ArrayError;
use ldt_core::cli::CliError;
use ldt_core::graphcore::{automorphism_group, parse_graph, Graph, GraphError};
use ldt_core::permgroup::{parse_group, PermError, PermGroup};
use ldt_core::report::{arrays_report, emit_report, Format, Report};
use ldt_core::symmetry::{basic_type, classify, f_s_membership, reduce_to_basic, AnalysisConfig, SymmetryError};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LdtStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed graph or group text.
    Parse = 3,
    /// A precondition of the analysis does not hold (not automorphisms, not
    /// in F(s), not case (c), ...).
    Contract = 4,
    /// An enumeration or search cap was exceeded.
    CapExceeded = 5,
    /// A panic or failed internal consistency check.
    Internal = 6,
}

/// Opaque graph handle.
pub struct LdtGraph(Graph);

/// Opaque permutation-group handle.
pub struct LdtGroup(PermGroup);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', "?")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Failure(LdtStatus, String);

impl From<CliError> for Failure {
    fn from(e: CliError) -> Self {
        let status = match e.code() {
            "parse_error" => LdtStatus::Parse,
            "cap_exceeded" => LdtStatus::CapExceeded,
            "invariant_violation" => LdtStatus::Internal,
            _ => LdtStatus::Contract,
        };
        Failure(status, e.to_string())
    }
}

macro_rules! via_cli_error {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                CliError::from(e).into()
            }
        }
    )*};
}

via_cli_error!(GraphError, SymmetryError, ArrayError);

impl From<PermError> for Failure {
    fn from(e: PermError) -> Self {
        CliError::from(SymmetryError::from(e)).into()
    }
}

/// Runs `body`, recording any failure or panic in the thread's last error.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> LdtStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => LdtStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(&message);
            status
        }
        Err(panic) => {
            let message = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(&format!("internal error: {message}"));
            LdtStatus::Internal
        }
    }
}

fn null() -> Failure {
    Failure(LdtStatus::NullPointer, "null pointer argument".into())
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(LdtStatus::InvalidUtf8, format!("input is not UTF-8: {e}")))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(null)
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(LdtStatus::Internal, "NUL in output".into()))?;
    put(out, c.into_raw())
}

/// Parses a graph file (text `n m` + edges, or JSON) into `*out`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ldt_graph_parse(text: *const c_char, out: *mut *mut LdtGraph) -> LdtStatus {
    guard(|| {
        let graph = parse_graph(read_str(text)?)?;
        put(out, Box::into_raw(Box::new(LdtGraph(graph))))
    })
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored
/// consecutively in `edges` (`2 * edge_count` entries).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (it may be null
/// when `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ldt_graph_from_edges(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut LdtGraph,
) -> LdtStatus {
    guard(|| {
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null());
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|c| (c[0], c[1])).collect();
        let graph = Graph::new(n, &pairs)?;
        put(out, Box::into_raw(Box::new(LdtGraph(graph))))
    })
}

/// Number of vertices of a graph.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ldt_graph_vertex_count(graph: *const LdtGraph, out: *mut usize) -> LdtStatus {
    guard(|| put(out, handle(graph)?.0.n()))
}

/// Releases a graph handle; null is ignored.
///
/// # Safety
/// `graph` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ldt_graph_free(graph: *mut LdtGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Parses a group file (one generator per line, cycle or image notation).
/// `degree` 0 means "infer from the file".
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ldt_group_parse(text: *const c_char, degree: usize, out: *mut *mut LdtGroup) -> LdtStatus {
    guard(|| {
        let expected = (degree > 0).then_some(degree);
        let group = parse_group(read_str(text)?, expected)?;
        put(out, Box::into_raw(Box::new(LdtGroup(group))))
    })
}

/// The full automorphism group of a graph with at most `bound` vertices
/// (0 selects the library default).
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ldt_group_automorphisms(
    graph: *const LdtGraph,
    bound: usize,
    out: *mut *mut LdtGroup,
) -> LdtStatus {
    guard(|| {
        let bound = if bound == 0 {
            ldt_core::graphcore::DEFAULT_AUT_BOUND
        } else {
            bound
        };
        let group = automorphism_group(&handle(graph)?.0, bound)?;
        put(out, Box::into_raw(Box::new(LdtGroup(group))))
    })
}

/// The order of a group; `CapExceeded` if it does not fit in 64 bits.
///
/// # Safety
/// `group` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ldt_group_order(group: *const LdtGroup, out: *mut u64) -> LdtStatus {
    guard(|| {
        let order = handle(group)?.0.order();
        let order = u64::try_from(order)
            .map_err(|_| Failure(LdtStatus::CapExceeded, format!("group order {order} exceeds 64 bits")))?;
        put(out, order)
    })
}

/// Releases a group handle; null is ignored.
///
/// # Safety
/// `group` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ldt_group_free(group: *mut LdtGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// Membership in F(s): writes the verdict and `s' = min(s, diam)`.
/// `s_effective` may be null.
///
/// # Safety
/// Handles must be live; `member` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ldt_fs_membership(
    graph: *const LdtGraph,
    group: *const LdtGroup,
    s: usize,
    member: *mut bool,
    s_effective: *mut usize,
) -> LdtStatus {
    guard(|| {
        let v = f_s_membership(&handle(graph)?.0, &handle(group)?.0, s)?;
        put(member, v.member)?;
        if !s_effective.is_null() {
            s_effective.write(v.s_effective);
        }
        Ok(())
    })
}

fn config() -> AnalysisConfig {
    AnalysisConfig::default()
}

unsafe fn json_report(
    graph: *const LdtGraph,
    group: *const LdtGroup,
    out: *mut *mut c_char,
    build: impl FnOnce(&Graph, &PermGroup) -> Result<Report, Failure>,
) -> LdtStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        out.write(ptr::null_mut());
        let report = build(&handle(graph)?.0, &handle(group)?.0)?;
        put_string(out, emit_report(&report, Format::Json))
    })
}

/// The classification report as JSON.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ldt_classify_json(
    graph: *const LdtGraph,
    group: *const LdtGroup,
    s: usize,
    out: *mut *mut c_char,
) -> LdtStatus {
    json_report(graph, group, out, |g, h| {
        Ok(Report::Classification(classify(g, h, s, &config())?))
    })
}

/// The reduction chain of a case (c) pair as JSON.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ldt_reduce_json(
    graph: *const LdtGraph,
    group: *const LdtGroup,
    s: usize,
    out: *mut *mut c_char,
) -> LdtStatus {
    json_report(graph, group, out, |g, h| {
        Ok(Report::Reduction(reduce_to_basic(g, h, s, &config())?))
    })
}

/// The type of a basic pair as JSON.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ldt_basic_type_json(
    graph: *const LdtGraph,
    group: *const LdtGroup,
    s: usize,
    out: *mut *mut c_char,
) -> LdtStatus {
    json_report(graph, group, out, |g, h| {
        Ok(Report::BasicType(basic_type(g, h, s, &config())?))
    })
}

/// Regularity verdict, arrays, identity checks and duals as JSON.
///
/// # Safety
/// `graph` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ldt_arrays_json(graph: *const LdtGraph, s: usize, out: *mut *mut c_char) -> LdtStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        out.write(ptr::null_mut());
        let report = arrays_report(&handle(graph)?.0, s)?;
        put_string(out, emit_report(&Report::Arrays(report), Format::Json))
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ldt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The message for the last failure on this thread, or null. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn ldt_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
