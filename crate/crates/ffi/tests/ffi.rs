use std::ffi::{c_char, CStr, CString};
use std::ptr;

use fdmatroid_ffi::*;

const E1: &str = "attrs: a b c d\na -> b\nb -> a\na c -> d\n";
const E4: &str = "attrs: a b c\na b\nc\n";

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(fdm_last_error()) }
        .to_str()
        .unwrap()
        .to_string()
}

unsafe fn take(p: *mut c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    fdm_string_free(p);
    s
}

struct System(*mut FdmSystem);

impl System {
    fn parse(src: &str) -> Self {
        let mut h = ptr::null_mut();
        let st = unsafe { fdm_system_parse(c(src).as_ptr(), &mut h) };
        assert_eq!(st, FdmStatus::Ok, "{}", last_error());
        assert!(!h.is_null());
        System(h)
    }
}

impl Drop for System {
    fn drop(&mut self) {
        unsafe { fdm_system_free(self.0) }
    }
}

fn closure(s: &System, set: &str) -> String {
    let mut out = ptr::null_mut();
    let st = unsafe { fdm_closure(s.0, c(set).as_ptr(), &mut out) };
    assert_eq!(st, FdmStatus::Ok, "{}", last_error());
    unsafe { take(out) }
}

#[test]
fn system_queries_match_the_library() {
    let s = System::parse(E1);
    let mut n = 0usize;
    unsafe {
        assert_eq!(fdm_system_attribute_count(s.0, &mut n), FdmStatus::Ok);
        assert_eq!(n, 4);
        assert_eq!(fdm_system_pair_count(s.0, &mut n), FdmStatus::Ok);
        assert_eq!(n, 3);
    }
    assert_eq!(closure(&s, "b c"), "a b c d");
    assert_eq!(closure(&s, ""), "");

    let mut closed = false;
    unsafe {
        assert_eq!(
            fdm_is_closed(s.0, c("a b").as_ptr(), &mut closed),
            FdmStatus::Ok
        );
        assert!(closed);
        assert_eq!(
            fdm_is_closed(s.0, c("a").as_ptr(), &mut closed),
            FdmStatus::Ok
        );
        assert!(!closed);
    }

    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(
            fdm_keys_of(s.0, c("a b c d").as_ptr(), &mut out),
            FdmStatus::Ok
        );
        assert_eq!(take(out), "a c\nb c\n");
        assert_eq!(fdm_keys_of(s.0, c("").as_ptr(), &mut out), FdmStatus::Ok);
        assert_eq!(take(out), "{}\n");
    }
}

#[test]
fn canonical_form_and_cover_are_dependency_files() {
    let s = System::parse(E1);
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(fdm_system_canonical(s.0, &mut out), FdmStatus::Ok);
        let canon = take(out);
        assert!(canon.starts_with("attrs: a b c d\n"));
        assert_eq!(canon, take_canonical(&System::parse(&canon)));

        assert_eq!(fdm_nonredundant_cover(s.0, &mut out), FdmStatus::Ok);
        let cover = take(out);
        assert_eq!(cover.lines().count(), 4);
    }
}

unsafe fn take_canonical(s: &System) -> String {
    let mut out = ptr::null_mut();
    assert_eq!(fdm_system_canonical(s.0, &mut out), FdmStatus::Ok);
    take(out)
}

#[test]
fn bases_and_direct_determination() {
    let s = System::parse(E1);
    let mut n = 0usize;
    let mut yes = false;
    unsafe {
        assert_eq!(fdm_basis_count(s.0, 256, &mut n), FdmStatus::Ok);
        assert_eq!(n, 3);
        assert_eq!(fdm_basis_count(s.0, 2, &mut n), FdmStatus::CapExceeded);
        assert!(last_error().contains("cap"));

        let (x, y) = (c("a c"), c("b c"));
        assert_eq!(
            fdm_directly_determines(s.0, x.as_ptr(), y.as_ptr(), &mut yes),
            FdmStatus::Ok
        );
        assert!(yes);
        let (x, y) = (c("a"), c("b"));
        assert_eq!(
            fdm_directly_determines(s.0, x.as_ptr(), y.as_ptr(), &mut yes),
            FdmStatus::Ok
        );
        assert!(!yes);
        let (x, y) = (c("c"), c("b c"));
        assert_eq!(
            fdm_directly_determines(s.0, x.as_ptr(), y.as_ptr(), &mut yes),
            FdmStatus::InvalidArgument
        );
    }
}

#[test]
fn flats_report_both_closures() {
    let mut h = ptr::null_mut();
    unsafe {
        assert_eq!(fdm_flats_parse(c(E4).as_ptr(), &mut h), FdmStatus::Ok);
        let mut n = 0usize;
        assert_eq!(fdm_flats_member_count(h, &mut n), FdmStatus::Ok);
        assert_eq!(n, 5);
        let (mut top, mut bottom) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(
            fdm_flats_closure(h, c("c").as_ptr(), &mut top, &mut bottom),
            FdmStatus::Ok
        );
        assert_eq!(take(top), "c");
        assert_eq!(take(bottom), "a b c");
        assert_eq!(
            fdm_flats_closure(h, c("c").as_ptr(), ptr::null_mut(), &mut bottom),
            FdmStatus::NullArgument
        );
        fdm_flats_free(h);
    }
}

#[test]
fn audit_returns_a_json_report() {
    let mut report = ptr::null_mut();
    let mut failures = usize::MAX;
    unsafe {
        assert_eq!(
            fdm_audit(c(E1).as_ptr(), false, &mut report, &mut failures),
            FdmStatus::Ok
        );
        assert_eq!(failures, 0);
        let json = take(report);
        assert!(json.contains("\"MAT12\""));
        assert!(json.contains("\"must_pass_failures\": 0"));

        assert_eq!(
            fdm_audit(c(E4).as_ptr(), true, &mut report, ptr::null_mut()),
            FdmStatus::Ok
        );
        assert!(take(report).contains("\"FL5\""));
    }
}

#[test]
fn errors_map_to_status_codes() {
    let mut h = ptr::null_mut();
    unsafe {
        assert_eq!(
            fdm_system_parse(ptr::null(), &mut h),
            FdmStatus::NullArgument
        );
        assert!(last_error().contains("source"));
        assert_eq!(
            fdm_system_parse(c(E1).as_ptr(), ptr::null_mut()),
            FdmStatus::NullArgument
        );
        assert_eq!(
            fdm_system_parse(c("a -> b\n").as_ptr(), &mut h),
            FdmStatus::Parse
        );
        assert!(last_error().contains("attrs"));
        assert_eq!(
            fdm_system_parse(c("attrs: a\na -> z\n").as_ptr(), &mut h),
            FdmStatus::UnknownAttribute
        );
        assert!(last_error().contains("line 2"));
        let bad = [0xffu8, 0];
        assert_eq!(
            fdm_system_parse(bad.as_ptr().cast(), &mut h),
            FdmStatus::InvalidUtf8
        );
        assert!(h.is_null());

        let mut n = 0usize;
        assert_eq!(
            fdm_system_pair_count(ptr::null(), &mut n),
            FdmStatus::NullArgument
        );
        assert_eq!(
            fdm_flats_parse(c("attrs: a b\na\na b\n").as_ptr(), &mut ptr::null_mut()),
            FdmStatus::Parse
        );
    }
    let s = System::parse(E1);
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(
            fdm_closure(s.0, c("a z").as_ptr(), &mut out),
            FdmStatus::UnknownAttribute
        );
        assert_eq!(
            fdm_keys_of(s.0, c("a").as_ptr(), &mut out),
            FdmStatus::InvalidArgument
        );
        assert!(last_error().contains("not closed"));
    }
}

#[test]
fn last_error_is_per_thread() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(
            fdm_system_parse(ptr::null(), &mut h),
            FdmStatus::NullArgument
        );
    }
    let other = std::thread::spawn(last_error).join().unwrap();
    assert_eq!(other, "");
    assert!(!last_error().is_empty());
}

#[test]
fn free_functions_accept_null_and_version_is_set() {
    unsafe {
        fdm_system_free(ptr::null_mut());
        fdm_flats_free(ptr::null_mut());
        fdm_string_free(ptr::null_mut());
        let v = CStr::from_ptr(fdm_version()).to_str().unwrap();
        assert_eq!(v, env!("CARGO_PKG_VERSION"));
    }
}

#[test]
fn header_declares_every_export() {
    let header =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/fdmatroid.h"))
            .unwrap();
    let src = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/src/lib.rs")).unwrap();
    let exports: Vec<&str> = src
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert_eq!(exports.len(), 19);
    for name in exports {
        assert!(
            header.contains(&format!("{name}(")),
            "{name} missing from header"
        );
    }
    assert!(header.contains("#ifndef FDMATROID_H"));
    assert!(header.contains("typedef struct FdmSystem FdmSystem;"));
    assert!(header.contains("FDM_STATUS_CAP_EXCEEDED = 5"));
}
