use std::ffi::{c_char, c_int, CStr, CString};
use std::ptr;

use strathom_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = strathom_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn fixture_handle(name: &str) -> *mut StrathomAlgebra {
    let mut a = ptr::null_mut();
    let s = unsafe { strathom_algebra_fixture(c(name).as_ptr(), ptr::null(), &mut a) };
    assert_eq!(s, StrathomStatus::Ok);
    a
}

fn module(a: *const StrathomAlgebra, expr: &str) -> *mut StrathomModule {
    let mut m = ptr::null_mut();
    let s = unsafe { strathom_module_from_expr(a, c(expr).as_ptr(), &mut m) };
    assert_eq!(s, StrathomStatus::Ok, "{expr}");
    m
}

#[test]
fn algebra_handles() {
    let a = fixture_handle("FX-42");
    let (mut dim, mut n) = (0, 0);
    assert_eq!(unsafe { strathom_algebra_dim(a, &mut dim, &mut n) }, StrathomStatus::Ok);
    assert_eq!((dim, n), (7, 2));
    let (mut kind, mut value) = (StrathomDimensionKind::Unknown, 0);
    assert_eq!(unsafe { strathom_global_dim(a, 20, &mut kind, &mut value) }, StrathomStatus::Ok);
    assert_eq!(kind, StrathomDimensionKind::Infinite);
    unsafe { strathom_algebra_free(a) };

    let a = fixture_handle("FX-43");
    unsafe { strathom_global_dim(a, 20, &mut kind, &mut value) };
    assert_eq!((kind, value), (StrathomDimensionKind::Finite, 2));
    unsafe { strathom_algebra_free(a) };
    unsafe { strathom_algebra_free(ptr::null_mut()) };
}

#[test]
fn modules_and_ext() {
    let a = fixture_handle("FX-A2");
    let (s1, s2) = (module(a, "S1"), module(a, "S2"));
    let mut e = 9;
    assert_eq!(unsafe { strathom_ext_dim(s1, s2, 1, &mut e) }, StrathomStatus::Ok);
    assert_eq!(e, 1);
    unsafe { strathom_ext_dim(s2, s1, 1, &mut e) };
    assert_eq!(e, 0);

    let (mut kind, mut value) = (StrathomDimensionKind::Unknown, 0);
    unsafe { strathom_proj_dim(s1, 20, &mut kind, &mut value) };
    assert_eq!((kind, value), (StrathomDimensionKind::Finite, 1));

    let p = module(a, "P1+S2");
    let mut dims = [0usize; 4];
    let mut written = 0;
    assert_eq!(
        unsafe { strathom_module_dims(p, dims.as_mut_ptr(), dims.len(), &mut written) },
        StrathomStatus::Ok
    );
    assert_eq!((written, &dims[..2]), (2, &[1, 2][..]));

    let b = fixture_handle("FX-A2");
    let other = module(b, "S1");
    assert_eq!(unsafe { strathom_ext_dim(s1, other, 1, &mut e) }, StrathomStatus::InvalidInput);
    for m in [s1, s2, p, other] {
        unsafe { strathom_module_free(m) };
    }
    unsafe { strathom_algebra_free(a) };
    unsafe { strathom_algebra_free(b) };
}

#[test]
fn error_codes() {
    let mut a = ptr::null_mut();
    let s = unsafe { strathom_algebra_fixture(ptr::null(), ptr::null(), &mut a) };
    assert_eq!(s, StrathomStatus::NullPointer);
    assert!(last_error().contains("name"));

    let s = unsafe { strathom_algebra_fixture(c("FX-99").as_ptr(), ptr::null(), &mut a) };
    assert_eq!(s, StrathomStatus::InvalidInput);
    assert!(last_error().contains("FX-99"));

    let s = unsafe { strathom_algebra_fixture(c("FX-43").as_ptr(), c("Fp:9").as_ptr(), &mut a) };
    assert_eq!(s, StrathomStatus::InvalidInput);

    let s = unsafe { strathom_algebra_from_json(c("{\n  oops").as_ptr(), ptr::null(), &mut a) };
    assert_eq!(s, StrathomStatus::Syntax);
    assert!(last_error().contains("line 2"));

    let bad = r#"{"format_version": "1", "field": "Q",
      "quiver": {"vertices": ["1", "2", "3"], "arrows": [
        {"id": "a", "source": "1", "target": "2"}, {"id": "b", "source": "1", "target": "3"}]},
      "relations": [[{"coeff": "1", "path": ["a"]}, {"coeff": "1", "path": ["b"]}]]}"#;
    let s = unsafe { strathom_algebra_from_json(c(bad).as_ptr(), ptr::null(), &mut a) };
    assert_eq!(s, StrathomStatus::MalformedRelation);

    let loop_free = r#"{"format_version": "1", "field": "Q",
      "quiver": {"vertices": ["1"], "arrows": [{"id": "x", "source": "1", "target": "1"}]}}"#;
    let s = unsafe { strathom_algebra_from_json(c(loop_free).as_ptr(), ptr::null(), &mut a) };
    assert_eq!(s, StrathomStatus::NotFiniteDimensional);
    assert!(a.is_null());

    let alg = fixture_handle("FX-43");
    let mut m = ptr::null_mut();
    let s = unsafe { strathom_module_from_expr(alg, c("P1 +").as_ptr(), &mut m) };
    assert_eq!(s, StrathomStatus::Syntax);
    let invalid = [0xffu8, 0];
    let s = unsafe { strathom_module_from_expr(alg, invalid.as_ptr() as *const c_char, &mut m) };
    assert_eq!(s, StrathomStatus::InvalidUtf8);
    let s = unsafe { strathom_algebra_dim(alg, ptr::null_mut(), ptr::null_mut()) };
    assert_eq!(s, StrathomStatus::NullPointer);
    unsafe { strathom_algebra_free(alg) };
}

#[test]
fn json_documents() {
    let doc = r#"{"format_version": "1", "field": "Q",
      "quiver": {"vertices": ["1", "2"], "arrows": [
        {"id": "alpha", "source": "2", "target": "1"}, {"id": "beta", "source": "1", "target": "2"}]},
      "relations": [[{"coeff": "1", "path": ["alpha", "beta", "alpha"]}]]}"#;
    let mut a = ptr::null_mut();
    let s = unsafe { strathom_algebra_from_json(c(doc).as_ptr(), c("Fp:2").as_ptr(), &mut a) };
    assert_eq!(s, StrathomStatus::Ok);
    let (mut dim, mut n) = (0, 0);
    unsafe { strathom_algebra_dim(a, &mut dim, &mut n) };
    assert_eq!(dim, 7);
    unsafe { strathom_algebra_free(a) };
}

#[test]
fn command_lines() {
    let args = [c("recollement"), c("FX-43"), c("--tilting"), c("P2+S2"), c("--json")];
    let argv: Vec<*const c_char> = args.iter().map(|s| s.as_ptr()).collect();
    let mut out = ptr::null_mut();
    let mut code: c_int = -1;
    let s = unsafe { strathom_run(argv.len(), argv.as_ptr(), &mut out, &mut code) };
    assert_eq!((s, code), (StrathomStatus::Ok, 0));
    let text = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_owned();
    unsafe { strathom_string_free(out) };
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["result"]["outcome"], "success");

    let args = [c("pd"), c("FX-43"), c("--module"), c("P7")];
    let argv: Vec<*const c_char> = args.iter().map(|s| s.as_ptr()).collect();
    unsafe { strathom_run(argv.len(), argv.as_ptr(), &mut out, &mut code) };
    assert_eq!(code, 1);
    assert!(unsafe { CStr::from_ptr(out) }.to_str().unwrap().contains("unknown vertex '7'"));
    unsafe { strathom_string_free(out) };
    unsafe { strathom_string_free(ptr::null_mut()) };
}
