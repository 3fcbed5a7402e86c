//! C ABI over `deltanu`.
//!
//! A `DeltanuSemigroup` is an opaque handle created by `deltanu_semigroup_new`
//! and released by `deltanu_semigroup_free`. Every fallible call returns a
//! `DeltanuStatus`; on failure `deltanu_last_error` describes the error on the
//! calling thread. Strings returned through `char **` are owned by the caller
//! and released with `deltanu_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use deltanu::{
    compute_bounds, minimal_period_report_with, w_set, Error, Evaluator, NumericalSemigroup,
    PeriodOptions,
};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeltanuStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidGenerators = 2,
    EmbeddingDimensionTooSmall = 3,
    BufferTooSmall = 4,
    WindowTooSmall = 5,
    NoPeriod = 6,
    Mismatch = 7,
    NegativeWindow = 8,
    Overflow = 9,
    Internal = 10,
    Panic = 11,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeltanuMethod {
    /// Fast path from N0 on, naive below.
    Auto = 0,
    Naive = 1,
    /// Same routing as `Auto`, but fails without a fast path.
    Fast = 2,
    /// Both routes; `Mismatch` if they disagree.
    Check = 3,
}

/// Integer part of the bound profile. `low_width` is the ceiling of lambda1,
/// `high_width` the floor of lambda2.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DeltanuBounds {
    pub d: u64,
    pub ns: u64,
    pub n0: u64,
    pub low_width: u64,
    pub high_width: u64,
    pub delta: u64,
}

pub struct DeltanuSemigroup {
    ev: Evaluator,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(err: &Error) -> DeltanuStatus {
    match err {
        Error::Empty
        | Error::ZeroGenerator
        | Error::NotPrimitive(_)
        | Error::Degenerate
        | Error::Parse(_) => DeltanuStatus::InvalidGenerators,
        Error::EmbeddingDimensionTooSmall(_) => DeltanuStatus::EmbeddingDimensionTooSmall,
        Error::WindowTooSmall { .. } => DeltanuStatus::WindowTooSmall,
        Error::NoPeriod { .. } => DeltanuStatus::NoPeriod,
        Error::Mismatch { .. } => DeltanuStatus::Mismatch,
        Error::NegativeWindow => DeltanuStatus::NegativeWindow,
        Error::Overflow => DeltanuStatus::Overflow,
        _ => DeltanuStatus::Internal,
    }
}

// Runs `f`, turning errors and panics into a status plus a thread-local message.
fn guard(f: impl FnOnce() -> Result<(), (DeltanuStatus, String)>) -> DeltanuStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            DeltanuStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("panic inside deltanu");
            DeltanuStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (DeltanuStatus, String) {
    (status_of(&e), e.to_string())
}

fn null() -> (DeltanuStatus, String) {
    (DeltanuStatus::NullPointer, "null pointer argument".into())
}

unsafe fn handle<'a>(
    h: *const DeltanuSemigroup,
) -> Result<&'a DeltanuSemigroup, (DeltanuStatus, String)> {
    h.as_ref().ok_or_else(null)
}

// Copies `src` into `buf[..cap]` and stores the full length in `*len`.
unsafe fn write_slice(
    src: &[u64],
    buf: *mut u64,
    cap: usize,
    len: *mut usize,
) -> Result<(), (DeltanuStatus, String)> {
    if len.is_null() || (buf.is_null() && cap > 0) {
        return Err(null());
    }
    *len = src.len();
    if src.len() > cap {
        return Err((
            DeltanuStatus::BufferTooSmall,
            format!("{} values do not fit in a buffer of {cap}", src.len()),
        ));
    }
    if !src.is_empty() {
        ptr::copy_nonoverlapping(src.as_ptr(), buf, src.len());
    }
    Ok(())
}

/// Creates a semigroup from `len` generators. The list is reduced to its
/// minimal generating system.
///
/// # Safety
/// `generators` must point to `len` readable values and `out` must be valid
/// for writes.
#[no_mangle]
pub unsafe extern "C" fn deltanu_semigroup_new(
    generators: *const u64,
    len: usize,
    out: *mut *mut DeltanuSemigroup,
) -> DeltanuStatus {
    guard(|| {
        if out.is_null() || (generators.is_null() && len > 0) {
            return Err(null());
        }
        let raw = if len == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(generators, len)
        };
        let sg = NumericalSemigroup::new(raw).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(DeltanuSemigroup {
            ev: Evaluator::new(&sg),
        }));
        Ok(())
    })
}

/// # Safety
/// `h` must be null or a handle from `deltanu_semigroup_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn deltanu_semigroup_free(h: *mut DeltanuSemigroup) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Minimal generators. `*len` always receives their number.
///
/// # Safety
/// `h` must be a live handle; `buf` must hold `cap` values.
#[no_mangle]
pub unsafe extern "C" fn deltanu_semigroup_generators(
    h: *const DeltanuSemigroup,
    buf: *mut u64,
    cap: usize,
    len: *mut usize,
) -> DeltanuStatus {
    guard(|| write_slice(handle(h)?.ev.semigroup().generators(), buf, cap, len))
}

/// # Safety
/// `h` must be a live handle; `frobenius` and `genus` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn deltanu_semigroup_invariants(
    h: *const DeltanuSemigroup,
    frobenius: *mut i64,
    genus: *mut u64,
) -> DeltanuStatus {
    guard(|| {
        let sg = handle(h)?.ev.semigroup();
        if frobenius.is_null() || genus.is_null() {
            return Err(null());
        }
        *frobenius = sg.frobenius_number();
        *genus = sg.genus();
        Ok(())
    })
}

/// # Safety
/// `h` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn deltanu_bounds(
    h: *const DeltanuSemigroup,
    out: *mut DeltanuBounds,
) -> DeltanuStatus {
    guard(|| {
        let sg = handle(h)?.ev.semigroup();
        let out = out.as_mut().ok_or_else(null)?;
        let b = compute_bounds(sg).map_err(lib_err)?;
        *out = DeltanuBounds {
            d: b.d,
            ns: b.ns,
            n0: b.n0,
            low_width: b.low_width(),
            high_width: b.high_width(),
            delta: deltanu::lcm_period(sg),
        };
        Ok(())
    })
}

/// `delta_nu(n)` into `buf`. `*len` always receives the set size; when it
/// exceeds `cap` the call fails with `BUFFER_TOO_SMALL`. `evaluated` may be
/// null; otherwise it receives the number of elements whose length sets were
/// visited.
///
/// # Safety
/// `h` must be a live handle; `buf` must hold `cap` values; `len` must be
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn deltanu_delta_nu(
    h: *const DeltanuSemigroup,
    n: u64,
    method: DeltanuMethod,
    buf: *mut u64,
    cap: usize,
    len: *mut usize,
    evaluated: *mut u64,
) -> DeltanuStatus {
    guard(|| {
        let ev = &handle(h)?.ev;
        let sized;
        let naive_ev = if n > ev.naive_capacity() {
            sized = Evaluator::with_naive_capacity(ev.semigroup(), n);
            &sized
        } else {
            ev
        };
        let rec = match method {
            DeltanuMethod::Naive => naive_ev.naive(n),
            DeltanuMethod::Auto => match ev.bounds() {
                Some(b) if n >= b.n0 => ev.fast(n),
                _ => naive_ev.naive(n),
            },
            DeltanuMethod::Fast => match ev.bounds() {
                Some(b) if n >= b.n0 => ev.fast(n),
                Some(_) => naive_ev.naive(n),
                None => Err(Error::EmbeddingDimensionTooSmall(
                    ev.semigroup().embedding_dimension(),
                )),
            },
            DeltanuMethod::Check => {
                let naive = naive_ev.naive(n).map_err(lib_err)?;
                match ev.bounds() {
                    Some(b) if n >= b.n0 => {
                        let fast = ev.fast(n).map_err(lib_err)?;
                        if fast.delta_nu != naive.delta_nu {
                            return Err(lib_err(Error::Mismatch {
                                n,
                                fast: fast.delta_nu.into_vec(),
                                naive: naive.delta_nu.into_vec(),
                            }));
                        }
                        Ok(fast)
                    }
                    _ => Ok(naive),
                }
            }
        }
        .map_err(lib_err)?;
        write_slice(rec.delta_nu.as_slice(), buf, cap, len)?;
        if !evaluated.is_null() {
            *evaluated = rec.evaluated_elements;
        }
        Ok(())
    })
}

/// Number of elements of `W(n)`.
///
/// # Safety
/// `h` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn deltanu_w_set_count(
    h: *const DeltanuSemigroup,
    n: u64,
    out: *mut u64,
) -> DeltanuStatus {
    guard(|| {
        let sg = handle(h)?.ev.semigroup();
        let out = out.as_mut().ok_or_else(null)?;
        *out = w_set(sg, n).len() as u64;
        Ok(())
    })
}

/// Period report over `0..=n_max` as a JSON object. `jobs` = 0 uses every
/// core. Release `*json` with `deltanu_string_free`.
///
/// # Safety
/// `h` must be a live handle; `json` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn deltanu_period_report_json(
    h: *const DeltanuSemigroup,
    n_max: u64,
    jobs: usize,
    json: *mut *mut c_char,
) -> DeltanuStatus {
    guard(|| {
        let sg = handle(h)?.ev.semigroup();
        if json.is_null() {
            return Err(null());
        }
        let opts = PeriodOptions {
            jobs,
            ..PeriodOptions::default()
        };
        let report = minimal_period_report_with(sg, n_max, opts).map_err(lib_err)?;
        let text =
            serde_json::to_string(&report).map_err(|e| (DeltanuStatus::Internal, e.to_string()))?;
        *json = CString::new(text)
            .map_err(|e| (DeltanuStatus::Internal, e.to_string()))?
            .into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn deltanu_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, empty after a success.
/// Valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn deltanu_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn deltanu_status_name(status: DeltanuStatus) -> *const c_char {
    let s: &'static CStr = match status {
        DeltanuStatus::Ok => c"ok",
        DeltanuStatus::NullPointer => c"null pointer",
        DeltanuStatus::InvalidGenerators => c"invalid generators",
        DeltanuStatus::EmbeddingDimensionTooSmall => c"embedding dimension too small",
        DeltanuStatus::BufferTooSmall => c"buffer too small",
        DeltanuStatus::WindowTooSmall => c"window too small",
        DeltanuStatus::NoPeriod => c"no period",
        DeltanuStatus::Mismatch => c"fast and naive results differ",
        DeltanuStatus::NegativeWindow => c"negative window",
        DeltanuStatus::Overflow => c"overflow",
        DeltanuStatus::Internal => c"internal error",
        DeltanuStatus::Panic => c"panic",
    };
    s.as_ptr()
}
