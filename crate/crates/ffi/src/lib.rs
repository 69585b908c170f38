//! C ABI over `fdmatroid`.
//!
//! Objects are opaque handles created by `*_parse` and released by
//! `*_free`. Every fallible call returns an [`FdmStatus`]; on failure
//! [`fdm_last_error`] describes the error for the calling thread. Strings
//! returned through `char **` out-parameters are owned by the caller and
//! released with [`fdm_string_free`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use fdmatroid::audit::{audit_instance, AuditSummary, Claim, Instance};
use fdmatroid::cli::parse::{parse_facets_file, parse_fd_file};
use fdmatroid::cli::render::{render_fd_file, render_set};
use fdmatroid::{
    directly_determines, enumerate_bases, fast_closure, is_closed, keys_of, materialize_mu,
    nonredundant_cover, Error, FdFunction, FlatClosure, HereditaryCollection, Universe,
};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FdmStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Malformed input file.
    Parse = 3,
    /// An attribute name not declared in the header.
    UnknownAttribute = 4,
    /// The input exceeds a size limit.
    CapExceeded = 5,
    /// A precondition of the operation does not hold.
    InvalidArgument = 6,
    /// An internal failure.
    Internal = 7,
}

/// A universe and a canonical dependency function.
pub struct FdmSystem {
    universe: Universe,
    function: FdFunction,
}

/// A hereditary collection with its flat closure.
pub struct FdmFlats {
    collection: HereditaryCollection,
    closure: FlatClosure,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> FdmStatus {
    match e {
        Error::UnknownAttribute { .. } => FdmStatus::UnknownAttribute,
        Error::SyntaxError { .. }
        | Error::MissingHeader
        | Error::DuplicateAttribute(_)
        | Error::EmptyName
        | Error::EmptyUniverse => FdmStatus::Parse,
        Error::CapExceeded { .. } => FdmStatus::CapExceeded,
        Error::Invariant(_) => FdmStatus::Internal,
        _ => FdmStatus::InvalidArgument,
    }
}

struct Fail(FdmStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard<F: FnOnce() -> Result<(), Fail>>(f: F) -> FdmStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => FdmStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            FdmStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(FdmStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(FdmStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail(FdmStatus::NullArgument, format!("{what} is null")))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(
            FdmStatus::NullArgument,
            "output pointer is null".into(),
        ));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(FdmStatus::Internal, "interior nul".into()))?;
    put(out, c.into_raw())
}

/// Message for the last failed call on this thread. Valid until the next
/// failing call on the same thread; never null.
#[no_mangle]
pub extern "C" fn fdm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn fdm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn fdm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a dependency file and canonicalizes it.
#[no_mangle]
pub unsafe extern "C" fn fdm_system_parse(
    source: *const c_char,
    out: *mut *mut FdmSystem,
) -> FdmStatus {
    guard(|| {
        let (universe, function) = parse_fd_file(text(source, "source")?)?;
        put(
            out,
            Box::into_raw(Box::new(FdmSystem { universe, function })),
        )
    })
}

/// Releases a system. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn fdm_system_free(system: *mut FdmSystem) {
    if !system.is_null() {
        drop(Box::from_raw(system));
    }
}

/// Number of declared attributes.
#[no_mangle]
pub unsafe extern "C" fn fdm_system_attribute_count(
    system: *const FdmSystem,
    out: *mut usize,
) -> FdmStatus {
    guard(|| put(out, handle(system, "system")?.universe.len()))
}

/// Number of pairs of the canonical function.
#[no_mangle]
pub unsafe extern "C" fn fdm_system_pair_count(
    system: *const FdmSystem,
    out: *mut usize,
) -> FdmStatus {
    guard(|| put(out, handle(system, "system")?.function.len()))
}

/// The canonical function in dependency-file form.
#[no_mangle]
pub unsafe extern "C" fn fdm_system_canonical(
    system: *const FdmSystem,
    out: *mut *mut c_char,
) -> FdmStatus {
    guard(|| put_string(out, render_fd_file(&handle(system, "system")?.function)))
}

/// Closure of a space-separated attribute list.
#[no_mangle]
pub unsafe extern "C" fn fdm_closure(
    system: *const FdmSystem,
    set: *const c_char,
    out: *mut *mut c_char,
) -> FdmStatus {
    guard(|| {
        let s = handle(system, "system")?;
        let x = s.universe.parse_set(text(set, "set")?)?;
        let c = fast_closure(&s.function, &x)?;
        put_string(out, s.universe.render(&c))
    })
}

/// Whether a set is closed.
#[no_mangle]
pub unsafe extern "C" fn fdm_is_closed(
    system: *const FdmSystem,
    set: *const c_char,
    out: *mut bool,
) -> FdmStatus {
    guard(|| {
        let s = handle(system, "system")?;
        let x = s.universe.parse_set(text(set, "set")?)?;
        put(out, is_closed(&s.function, &x)?)
    })
}

/// Keys of a closed set, one per line; an empty key prints as `{}`.
#[no_mangle]
pub unsafe extern "C" fn fdm_keys_of(
    system: *const FdmSystem,
    closed: *const c_char,
    out: *mut *mut c_char,
) -> FdmStatus {
    guard(|| {
        let s = handle(system, "system")?;
        let c = s.universe.parse_set(text(closed, "closed set")?)?;
        let keys = keys_of(&s.function, &c)?;
        let lines: String = keys
            .iter()
            .map(|k| format!("{}\n", render_set(&s.universe, k)))
            .collect();
        put_string(out, lines)
    })
}

/// A nonredundant cover in dependency-file form.
#[no_mangle]
pub unsafe extern "C" fn fdm_nonredundant_cover(
    system: *const FdmSystem,
    out: *mut *mut c_char,
) -> FdmStatus {
    guard(|| {
        let s = handle(system, "system")?;
        put_string(out, render_fd_file(&nonredundant_cover(&s.function)))
    })
}

/// Number of nonredundant covers; fails with `CapExceeded` above `cap`.
#[no_mangle]
pub unsafe extern "C" fn fdm_basis_count(
    system: *const FdmSystem,
    cap: usize,
    out: *mut usize,
) -> FdmStatus {
    guard(|| {
        let s = handle(system, "system")?;
        let bases = enumerate_bases(&materialize_mu(&s.function)?, cap)?;
        put(out, bases.len())
    })
}

/// Whether `from` directly determines `to`.
#[no_mangle]
pub unsafe extern "C" fn fdm_directly_determines(
    system: *const FdmSystem,
    from: *const c_char,
    to: *const c_char,
    out: *mut bool,
) -> FdmStatus {
    guard(|| {
        let s = handle(system, "system")?;
        let x = s.universe.parse_set(text(from, "from")?)?;
        let y = s.universe.parse_set(text(to, "to")?)?;
        let cover = nonredundant_cover(&s.function);
        put(out, directly_determines(&cover, &x, &y)?.0)
    })
}

/// Parses a facet file.
#[no_mangle]
pub unsafe extern "C" fn fdm_flats_parse(
    source: *const c_char,
    out: *mut *mut FdmFlats,
) -> FdmStatus {
    guard(|| {
        let collection = parse_facets_file(text(source, "source")?)?;
        let closure = FlatClosure::new(&collection);
        put(
            out,
            Box::into_raw(Box::new(FdmFlats {
                collection,
                closure,
            })),
        )
    })
}

/// Releases a collection. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn fdm_flats_free(flats: *mut FdmFlats) {
    if !flats.is_null() {
        drop(Box::from_raw(flats));
    }
}

/// Number of members of the collection.
#[no_mangle]
pub unsafe extern "C" fn fdm_flats_member_count(
    flats: *const FdmFlats,
    out: *mut usize,
) -> FdmStatus {
    guard(|| put(out, handle(flats, "flats")?.collection.len()))
}

/// Top-down and bottom-up flat closure of a set.
#[no_mangle]
pub unsafe extern "C" fn fdm_flats_closure(
    flats: *const FdmFlats,
    set: *const c_char,
    topdown: *mut *mut c_char,
    bottomup: *mut *mut c_char,
) -> FdmStatus {
    guard(|| {
        let h = handle(flats, "flats")?;
        let u = h.collection.universe();
        let x = u.parse_set(text(set, "set")?)?;
        if topdown.is_null() || bottomup.is_null() {
            return Err(Fail(
                FdmStatus::NullArgument,
                "output pointer is null".into(),
            ));
        }
        let top = u.set_from_mask(h.closure.topdown_mask(x.to_mask()));
        let bottom = h.closure.kernel().closure(&x)?;
        put_string(topdown, u.render(&top))?;
        put_string(bottomup, u.render(&bottom))
    })
}

/// Audits every claim on one input and writes the JSON report.
/// `is_facets` selects the facet grammar. `must_pass_failures` may be null.
#[no_mangle]
pub unsafe extern "C" fn fdm_audit(
    source: *const c_char,
    is_facets: bool,
    report: *mut *mut c_char,
    must_pass_failures: *mut usize,
) -> FdmStatus {
    guard(|| {
        let src = text(source, "source")?;
        let instance = if is_facets {
            Instance::hereditary("input", parse_facets_file(src)?)
        } else {
            Instance::fd("input", parse_fd_file(src)?.1)
        };
        let summary = AuditSummary::from_reports(vec![audit_instance(&instance, Claim::ALL, true)]);
        if !must_pass_failures.is_null() {
            must_pass_failures.write(summary.must_pass_failures());
        }
        put_string(report, summary.to_json())
    })
}
