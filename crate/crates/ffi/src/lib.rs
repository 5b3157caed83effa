//! C ABI over `strathom`.
//!
//! Objects are opaque handles released with the matching `*_free`. Every fallible
//! call returns a [`StrathomStatus`]; on failure `strathom_last_error` describes it.
//! Strings handed out by the library are released with `strathom_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use strathom::algebra::{build_algebra, fixture, Algebra, DEFAULT_PATH_CAP};
use strathom::homology::{ext_dim, global_dim, proj_dim, Dimension};
use strathom::io::{module_from_expr, parse_field, AlgebraDocument};
use strathom::module::Module;
use strathom::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrathomStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    Syntax = 4,
    MalformedRelation = 5,
    NotFiniteDimensional = 6,
    InvalidModule = 7,
    Computation = 8,
    Panic = 9,
}

/// Outcome of a dimension query.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrathomDimensionKind {
    Finite = 0,
    Infinite = 1,
    Unknown = 2,
}

/// A finite-dimensional algebra.
pub struct StrathomAlgebra {
    inner: Arc<Algebra>,
}

/// A right module over a [`StrathomAlgebra`].
pub struct StrathomModule {
    inner: Module,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> StrathomStatus {
    match e {
        Error::Syntax { .. } => StrathomStatus::Syntax,
        Error::MalformedRelation(_) => StrathomStatus::MalformedRelation,
        Error::NotFiniteDimensional { .. } => StrathomStatus::NotFiniteDimensional,
        Error::InvalidModule(_) => StrathomStatus::InvalidModule,
        Error::Input(_) | Error::Shape(_) => StrathomStatus::InvalidInput,
        _ => StrathomStatus::Computation,
    }
}

struct Fail(StrathomStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> StrathomStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => StrathomStatus::Ok,
        Ok(Err(Fail(s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic".into());
            StrathomStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(StrathomStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(StrathomStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn get<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail(StrathomStatus::NullPointer, format!("{what} is null")))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(StrathomStatus::NullPointer, format!("{what} is null")));
    }
    out.write(value);
    Ok(())
}

unsafe fn field_arg(p: *const c_char) -> Result<Option<strathom::linalg::Field>, Fail> {
    if p.is_null() {
        return Ok(None);
    }
    Ok(Some(parse_field(text(p, "field")?)?))
}

fn dimension_parts(d: Dimension) -> (StrathomDimensionKind, usize) {
    match d {
        Dimension::Finite(n) => (StrathomDimensionKind::Finite, n),
        Dimension::Infinite => (StrathomDimensionKind::Infinite, 0),
        Dimension::Unknown => (StrathomDimensionKind::Unknown, 0),
    }
}

/// Message of the last failure on this thread, or null. Valid until the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn strathom_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds a bundled fixture such as `"FX-43"`. `field` may be null for Q.
///
/// # Safety
/// `name` and `field` must be null or NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn strathom_algebra_fixture(
    name: *const c_char,
    field: *const c_char,
    out: *mut *mut StrathomAlgebra,
) -> StrathomStatus {
    guard(|| {
        let name = text(name, "name")?;
        let f = field_arg(field)?.unwrap_or(strathom::linalg::Field::Rationals);
        let a = build_algebra(&fixture(name, f)?, DEFAULT_PATH_CAP)?;
        put(out, Box::into_raw(Box::new(StrathomAlgebra { inner: Arc::new(a) })), "out")
    })
}

/// Builds an algebra from a JSON algebra document. A non-null `field`
/// overrides the document's field.
///
/// # Safety
/// `json` and `field` must be null or NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn strathom_algebra_from_json(
    json: *const c_char,
    field: *const c_char,
    out: *mut *mut StrathomAlgebra,
) -> StrathomStatus {
    guard(|| {
        let doc = AlgebraDocument::parse(text(json, "json")?)?;
        let p = doc.to_presentation(field_arg(field)?)?;
        let a = build_algebra(&p, DEFAULT_PATH_CAP)?;
        put(out, Box::into_raw(Box::new(StrathomAlgebra { inner: Arc::new(a) })), "out")
    })
}

/// # Safety
/// `a` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn strathom_algebra_free(a: *mut StrathomAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// # Safety
/// `a` must be a live handle and `dim`, `vertices` writable.
#[no_mangle]
pub unsafe extern "C" fn strathom_algebra_dim(
    a: *const StrathomAlgebra,
    dim: *mut usize,
    vertices: *mut usize,
) -> StrathomStatus {
    guard(|| {
        let a = get(a, "algebra")?;
        put(dim, a.inner.dim(), "dim")?;
        put(vertices, a.inner.num_vertices(), "vertices")
    })
}

/// Global dimension, resolving simples up to `cap` steps. `value` is only
/// meaningful for a finite result.
///
/// # Safety
/// `a` must be a live handle and `kind`, `value` writable.
#[no_mangle]
pub unsafe extern "C" fn strathom_global_dim(
    a: *const StrathomAlgebra,
    cap: usize,
    kind: *mut StrathomDimensionKind,
    value: *mut usize,
) -> StrathomStatus {
    guard(|| {
        let (k, v) = dimension_parts(global_dim(&get(a, "algebra")?.inner, cap));
        put(kind, k, "kind")?;
        put(value, v, "value")
    })
}

/// Evaluates a module expression such as `"P2+S2"` or `"P1/P2"`.
///
/// # Safety
/// `a` must be a live handle, `expr` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn strathom_module_from_expr(
    a: *const StrathomAlgebra,
    expr: *const c_char,
    out: *mut *mut StrathomModule,
) -> StrathomStatus {
    guard(|| {
        let a = get(a, "algebra")?;
        let m = module_from_expr(text(expr, "expr")?, &a.inner)?;
        put(out, Box::into_raw(Box::new(StrathomModule { inner: m })), "out")
    })
}

/// # Safety
/// `m` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn strathom_module_free(m: *mut StrathomModule) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Dimension vector of a module. Writes at most `len` entries and stores the
/// number of vertices in `written`.
///
/// # Safety
/// `m` must be a live handle, `dims` valid for `len` writes, `written` writable.
#[no_mangle]
pub unsafe extern "C" fn strathom_module_dims(
    m: *const StrathomModule,
    dims: *mut usize,
    len: usize,
    written: *mut usize,
) -> StrathomStatus {
    guard(|| {
        let d = get(m, "module")?.inner.dims();
        if !d.is_empty() && len > 0 && dims.is_null() {
            return Err(Fail(StrathomStatus::NullPointer, "dims is null".into()));
        }
        for (i, x) in d.iter().take(len).enumerate() {
            dims.add(i).write(*x);
        }
        put(written, d.len(), "written")
    })
}

/// # Safety
/// `m` must be a live handle and `kind`, `value` writable.
#[no_mangle]
pub unsafe extern "C" fn strathom_proj_dim(
    m: *const StrathomModule,
    cap: usize,
    kind: *mut StrathomDimensionKind,
    value: *mut usize,
) -> StrathomStatus {
    guard(|| {
        let (k, v) = dimension_parts(proj_dim(&get(m, "module")?.inner, cap));
        put(kind, k, "kind")?;
        put(value, v, "value")
    })
}

/// Dimension of `Ext^k(m, n)`; both modules must be over the same algebra.
///
/// # Safety
/// `m`, `n` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn strathom_ext_dim(
    m: *const StrathomModule,
    n: *const StrathomModule,
    k: usize,
    out: *mut usize,
) -> StrathomStatus {
    guard(|| {
        let (m, n) = (&get(m, "m")?.inner, &get(n, "n")?.inner);
        if !Arc::ptr_eq(m.algebra(), n.algebra()) {
            return Err(Fail(StrathomStatus::InvalidInput, "modules over different algebras".into()));
        }
        put(out, ext_dim(m, n, k), "out")
    })
}

/// Runs a command line (without the program name) and returns its standard
/// output in `out` and its exit code in `exit_code`. Errors of the command
/// itself are reported through the exit code, with the message in `out`.
///
/// # Safety
/// `argv` must point to `argc` NUL-terminated strings; `out`, `exit_code` writable.
#[no_mangle]
pub unsafe extern "C" fn strathom_run(
    argc: usize,
    argv: *const *const c_char,
    out: *mut *mut c_char,
    exit_code: *mut c_int,
) -> StrathomStatus {
    guard(|| {
        if argc > 0 && argv.is_null() {
            return Err(Fail(StrathomStatus::NullPointer, "argv is null".into()));
        }
        let mut args = vec!["strathom".to_string()];
        for i in 0..argc {
            args.push(text(*argv.add(i), "argument")?.to_string());
        }
        let o = strathom::cli::run(args);
        let body = if o.stdout.is_empty() { o.stderr } else { o.stdout };
        let c = CString::new(body.replace('\0', " ")).expect("no interior nul");
        put(out, c.into_raw(), "out")?;
        put(exit_code, o.code, "exit_code")
    })
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a string from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn strathom_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
