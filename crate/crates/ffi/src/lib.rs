//! C ABI for `sparse-duals`.
//!
//! Objects cross the boundary as opaque handles created by `*_new` and
//! released by the matching `*_free`. Fallible calls return an
//! [`SdStatus`]; the message of the last failure on the calling thread is
//! available from [`sd_last_error`]. Array results are copied into
//! caller-provided buffers: the required length is always written to
//! `out_len`, and `SD_STATUS_BUFFER_TOO_SMALL` is returned when `cap` is
//! short. Strings returned by the library must be released with
//! [`sd_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sparse_duals::hermitian::{CodeSequence, HermitianCurve};
use sparse_duals::puncturing::{build_hierarchy, qualifying_subsets, HierarchyGraph};
use sparse_duals::sparse_ideals::{
    gap_pair_count, inclusion_report, leader_set, maximum_sparse_from_leader,
};
use sparse_duals::{Error, NumericalSemigroup};

/// Result code of a fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    GcdNotOne = 3,
    NotInSemigroup = 4,
    NotALeader = 5,
    FieldTooLarge = 6,
    NotPrimePower = 7,
    DuplicatePoints = 8,
    PointOutOfRange = 9,
    SearchSpaceTooLarge = 10,
    TooManySubsets = 11,
    BufferTooSmall = 12,
    Panic = 13,
}

/// Opaque numerical semigroup.
pub struct SdSemigroup(NumericalSemigroup);

/// Opaque Hermitian curve over `GF(q²)`.
pub struct SdCurve(HermitianCurve);

/// Opaque code sequence at a set of curve points.
pub struct SdCodeSequence(CodeSequence);

/// Opaque inclusion hierarchy of qualifying point sets.
pub struct SdHierarchy(HierarchyGraph);

/// The four inclusion conditions between two maximum sparse ideals.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SdInclusionReport {
    pub ideal_inclusion: bool,
    pub leader_difference_in_s: bool,
    pub complement_inclusion: bool,
    pub cardinality_difference_in_s: bool,
    pub all_agree: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> SdStatus {
    match e {
        Error::GcdNotOne(_) => SdStatus::GcdNotOne,
        Error::NotInSemigroup(_) => SdStatus::NotInSemigroup,
        Error::NotALeader { .. } => SdStatus::NotALeader,
        Error::FieldTooLarge(_) => SdStatus::FieldTooLarge,
        Error::NotPrime(_) | Error::NotPrimePower(_) => SdStatus::NotPrimePower,
        Error::DuplicatePoints => SdStatus::DuplicatePoints,
        Error::PointIndexOutOfRange(_) => SdStatus::PointOutOfRange,
        Error::SearchSpaceTooLarge(_) => SdStatus::SearchSpaceTooLarge,
        Error::TooManySubsets { .. } => SdStatus::TooManySubsets,
        _ => SdStatus::InvalidArgument,
    }
}

fn fail(e: Error) -> SdStatus {
    let s = status_of(&e);
    set_error(e.to_string());
    s
}

fn guard(f: impl FnOnce() -> SdStatus) -> SdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("panic inside sparse-duals".into());
            SdStatus::Panic
        }
    }
}

fn null() -> SdStatus {
    set_error("null pointer argument".into());
    SdStatus::NullPointer
}

/// # Safety
/// `ptr` must be null or point to `len` readable values.
unsafe fn slice<'a, T>(ptr: *const T, len: usize) -> Option<&'a [T]> {
    if len == 0 {
        Some(&[])
    } else if ptr.is_null() {
        None
    } else {
        Some(std::slice::from_raw_parts(ptr, len))
    }
}

/// # Safety
/// `buf` must be null or writable for `cap` values; `out_len` must be valid.
unsafe fn copy_out<T: Copy>(values: &[T], buf: *mut T, cap: usize, out_len: *mut usize) -> SdStatus {
    if out_len.is_null() {
        return null();
    }
    *out_len = values.len();
    if values.len() > cap {
        set_error(format!("buffer holds {cap} values, {} needed", values.len()));
        return SdStatus::BufferTooSmall;
    }
    if !values.is_empty() {
        if buf.is_null() {
            return null();
        }
        ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len());
    }
    SdStatus::Ok
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// Semigroups

/// # Safety
/// `generators` must point to `len` values; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sd_semigroup_new(
    generators: *const u64,
    len: usize,
    out: *mut *mut SdSemigroup,
) -> SdStatus {
    guard(|| {
        let (Some(gens), false) = (slice(generators, len), out.is_null()) else {
            return null();
        };
        match NumericalSemigroup::from_generators(gens) {
            Ok(s) => {
                *out = Box::into_raw(Box::new(SdSemigroup(s)));
                SdStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `s` must be null or a handle from [`sd_semigroup_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sd_semigroup_free(s: *mut SdSemigroup) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// # Safety
/// `s` must be a live semigroup handle.
#[no_mangle]
pub unsafe extern "C" fn sd_semigroup_genus(s: *const SdSemigroup) -> u64 {
    (*s).0.genus() as u64
}

/// # Safety
/// `s` must be a live semigroup handle.
#[no_mangle]
pub unsafe extern "C" fn sd_semigroup_conductor(s: *const SdSemigroup) -> u64 {
    (*s).0.conductor()
}

/// Membership; negative `n` is never a member.
///
/// # Safety
/// `s` must be a live semigroup handle.
#[no_mangle]
pub unsafe extern "C" fn sd_semigroup_contains(s: *const SdSemigroup, n: i64) -> bool {
    (*s).0.contains(n)
}

/// The `i`-th smallest element.
///
/// # Safety
/// `s` must be a live semigroup handle.
#[no_mangle]
pub unsafe extern "C" fn sd_semigroup_lambda(s: *const SdSemigroup, i: usize) -> u64 {
    (*s).0.lambda(i)
}

/// # Safety
/// `s` must be a live handle; `buf`/`out_len` as described in the crate docs.
#[no_mangle]
pub unsafe extern "C" fn sd_semigroup_gaps(
    s: *const SdSemigroup,
    buf: *mut u64,
    cap: usize,
    out_len: *mut usize,
) -> SdStatus {
    if s.is_null() {
        return null();
    }
    guard(|| copy_out((*s).0.gaps(), buf, cap, out_len))
}

/// Unordered gap pairs summing to `λ_i`.
///
/// # Safety
/// `s` must be a live semigroup handle.
#[no_mangle]
pub unsafe extern "C" fn sd_gap_pair_count(s: *const SdSemigroup, i: usize) -> usize {
    gap_pair_count(&(*s).0, i)
}

/// Leaders of maximum sparse ideals up to `bound`.
///
/// # Safety
/// `s` must be a live handle; `buf`/`out_len` as described in the crate docs.
#[no_mangle]
pub unsafe extern "C" fn sd_leader_set(
    s: *const SdSemigroup,
    bound: u64,
    buf: *mut u64,
    cap: usize,
    out_len: *mut usize,
) -> SdStatus {
    if s.is_null() {
        return null();
    }
    guard(|| copy_out(&leader_set(&(*s).0, bound), buf, cap, out_len))
}

/// Complement `D(i)` of the maximum sparse ideal led by the value `leader`.
///
/// # Safety
/// `s` must be a live handle; `buf`/`out_len` as described in the crate docs.
#[no_mangle]
pub unsafe extern "C" fn sd_maximum_sparse_complement(
    s: *const SdSemigroup,
    leader: u64,
    buf: *mut u64,
    cap: usize,
    out_len: *mut usize,
) -> SdStatus {
    if s.is_null() {
        return null();
    }
    guard(|| {
        let s = &(*s).0;
        let ideal = s.require_index(leader).and_then(|i| maximum_sparse_from_leader(s, i));
        match ideal {
            Ok(ideal) => copy_out(ideal.complement(), buf, cap, out_len),
            Err(e) => fail(e),
        }
    })
}

/// Inclusion conditions between the ideals led by `leader` and `other`.
///
/// # Safety
/// `s` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sd_inclusion_report(
    s: *const SdSemigroup,
    leader: u64,
    other: u64,
    out: *mut SdInclusionReport,
) -> SdStatus {
    if s.is_null() || out.is_null() {
        return null();
    }
    guard(|| {
        let s = &(*s).0;
        let ideal = |v: u64| s.require_index(v).and_then(|i| maximum_sparse_from_leader(s, i));
        let report = ideal(leader).and_then(|a| inclusion_report(&a, &ideal(other)?));
        match report {
            Ok(r) => {
                *out = SdInclusionReport {
                    ideal_inclusion: r.ideal_inclusion,
                    leader_difference_in_s: r.leader_difference_in_s,
                    complement_inclusion: r.complement_inclusion,
                    cardinality_difference_in_s: r.cardinality_difference_in_s,
                    all_agree: r.all_agree(),
                };
                SdStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

// Hermitian curves and code sequences

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sd_curve_new(q: u64, out: *mut *mut SdCurve) -> SdStatus {
    if out.is_null() {
        return null();
    }
    guard(|| match HermitianCurve::new(q) {
        Ok(c) => {
            *out = Box::into_raw(Box::new(SdCurve(c)));
            SdStatus::Ok
        }
        Err(e) => fail(e),
    })
}

/// # Safety
/// `c` must be null or a handle from [`sd_curve_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sd_curve_free(c: *mut SdCurve) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// # Safety
/// `c` must be a live curve handle.
#[no_mangle]
pub unsafe extern "C" fn sd_curve_point_count(c: *const SdCurve) -> usize {
    (*c).0.points().len()
}

/// # Safety
/// `c` must be a live curve handle.
#[no_mangle]
pub unsafe extern "C" fn sd_curve_genus(c: *const SdCurve) -> usize {
    (*c).0.genus()
}

/// Code sequence at the points with the given 1-based indices.
///
/// # Safety
/// `c` must be a live curve handle, `indices` readable for `len` values and
/// `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sd_code_sequence_new(
    c: *const SdCurve,
    indices: *const usize,
    len: usize,
    out: *mut *mut SdCodeSequence,
) -> SdStatus {
    guard(|| {
        let (false, Some(idx), false) = (c.is_null(), slice(indices, len), out.is_null()) else {
            return null();
        };
        match (*c).0.code_sequence(idx) {
            Ok(cs) => {
                *out = Box::into_raw(Box::new(SdCodeSequence(cs)));
                SdStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `cs` must be null or a handle from [`sd_code_sequence_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sd_code_sequence_free(cs: *mut SdCodeSequence) {
    if !cs.is_null() {
        drop(Box::from_raw(cs));
    }
}

/// `W*`, increasing; always `n` values.
///
/// # Safety
/// `cs` must be a live handle; `buf`/`out_len` as described in the crate docs.
#[no_mangle]
pub unsafe extern "C" fn sd_code_sequence_wstar(
    cs: *const SdCodeSequence,
    buf: *mut u64,
    cap: usize,
    out_len: *mut usize,
) -> SdStatus {
    if cs.is_null() {
        return null();
    }
    guard(|| copy_out(&(*cs).0.wstar(), buf, cap, out_len))
}

/// `n + 2g − 1 ∈ W*`.
///
/// # Safety
/// `cs` must be a live code sequence handle.
#[no_mangle]
pub unsafe extern "C" fn sd_code_sequence_criterion(cs: *const SdCodeSequence) -> bool {
    (*cs).0.isometry_dual_criterion()
}

/// Exhaustive isometry-vector search. On success `*found` tells whether a
/// vector exists; if so its `n` element encodings are written to `buf`.
///
/// # Safety
/// `cs` must be a live handle, `found` valid for writes, and
/// `buf`/`out_len` as described in the crate docs.
#[no_mangle]
pub unsafe extern "C" fn sd_code_sequence_isometry_vector(
    cs: *const SdCodeSequence,
    buf: *mut u8,
    cap: usize,
    out_len: *mut usize,
    found: *mut bool,
) -> SdStatus {
    if cs.is_null() || found.is_null() {
        return null();
    }
    guard(|| match (*cs).0.find_isometry_vector() {
        Ok(Some(x)) => {
            *found = true;
            let raw: Vec<u8> = x.iter().map(|e| e.value()).collect();
            copy_out(&raw, buf, cap, out_len)
        }
        Ok(None) => {
            *found = false;
            copy_out::<u8>(&[], buf, cap, out_len)
        }
        Err(e) => fail(e),
    })
}

/// Code sequence summary as a JSON string; free with [`sd_string_free`].
///
/// # Safety
/// `cs` must be a live code sequence handle.
#[no_mangle]
pub unsafe extern "C" fn sd_code_sequence_json(cs: *const SdCodeSequence) -> *mut c_char {
    if cs.is_null() {
        null();
        return ptr::null_mut();
    }
    match serde_json::to_string(&(*cs).0.record()) {
        Ok(s) => into_c_string(s),
        Err(e) => {
            set_error(e.to_string());
            ptr::null_mut()
        }
    }
}

// Hierarchies

/// Exhaustive hierarchy of qualifying point sets with at least `min_size`
/// points.
///
/// # Safety
/// `c` must be a live curve handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sd_hierarchy_new(
    c: *const SdCurve,
    min_size: usize,
    out: *mut *mut SdHierarchy,
) -> SdStatus {
    if c.is_null() || out.is_null() {
        return null();
    }
    guard(|| {
        let curve = &(*c).0;
        match qualifying_subsets(curve, min_size) {
            Ok(sets) => {
                let graph = build_hierarchy(sets, 2 * curve.genus() + 2);
                *out = Box::into_raw(Box::new(SdHierarchy(graph)));
                SdStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `h` must be null or a handle from [`sd_hierarchy_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sd_hierarchy_free(h: *mut SdHierarchy) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live hierarchy handle.
#[no_mangle]
pub unsafe extern "C" fn sd_hierarchy_node_count(h: *const SdHierarchy) -> usize {
    (*h).0.nodes().len()
}

/// # Safety
/// `h` must be a live hierarchy handle.
#[no_mangle]
pub unsafe extern "C" fn sd_hierarchy_edge_count(h: *const SdHierarchy) -> usize {
    (*h).0.edges().len()
}

/// Graphviz text; free with [`sd_string_free`].
///
/// # Safety
/// `h` must be a live hierarchy handle.
#[no_mangle]
pub unsafe extern "C" fn sd_hierarchy_dot(h: *const SdHierarchy) -> *mut c_char {
    if h.is_null() {
        null();
        return ptr::null_mut();
    }
    into_c_string((*h).0.export_dot())
}

/// `{"nodes":[...],"edges":[...]}`; free with [`sd_string_free`].
///
/// # Safety
/// `h` must be a live hierarchy handle.
#[no_mangle]
pub unsafe extern "C" fn sd_hierarchy_json(h: *const SdHierarchy) -> *mut c_char {
    if h.is_null() {
        null();
        return ptr::null_mut();
    }
    into_c_string((*h).0.to_json().to_string())
}
