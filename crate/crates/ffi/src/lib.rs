//! C interface to the trace zero codec.
//!
//! Every function returns a [`TzStatus`]; on failure a message is kept per
//! thread and read with [`tz_last_error`]. Strings handed out by the library
//! are freed with [`tz_string_free`], contexts with [`tz_context_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use trace_zero::tz_codec::encoding;
use trace_zero::{Error, Field, ParamFile, TzParams, Variant};

#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum TzStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidParams = 3,
    InvalidInput = 4,
    NotOnCurve = 5,
    NotTraceZero = 6,
    Identity = 7,
    Degenerate = 8,
    BufferTooSmall = 9,
    Internal = 10,
    Panic = 11,
}

#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum TzVariant {
    S = 0,
    T = 1,
}

impl From<TzVariant> for Variant {
    fn from(v: TzVariant) -> Self {
        match v {
            TzVariant::S => Variant::S,
            TzVariant::T => Variant::T,
        }
    }
}

/// Opaque handle holding validated parameters and precomputed equations.
pub struct TzContext {
    params: ParamFile,
    tz: TzParams,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> TzStatus {
    match e {
        Error::InvalidParams(_) | Error::InvalidCurve => TzStatus::InvalidParams,
        Error::InvalidInput(_) | Error::Parse(_) | Error::DivisionByZero | Error::NotSymmetric => TzStatus::InvalidInput,
        Error::NotOnCurve => TzStatus::NotOnCurve,
        Error::NotTraceZero => TzStatus::NotTraceZero,
        Error::CannotCompressIdentity => TzStatus::Identity,
        Error::DegenerateInput => TzStatus::Degenerate,
        Error::Internal(_) => TzStatus::Internal,
    }
}

struct Fail(TzStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> TzStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            TzStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside trace_zero".into());
            TzStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(TzStatus::NullPointer, format!("{name} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(TzStatus::InvalidUtf8, format!("{name} is not UTF-8")))
}

unsafe fn ctx_arg<'a>(ctx: *const TzContext) -> Result<&'a TzContext, Fail> {
    ctx.as_ref().ok_or_else(|| Fail(TzStatus::NullPointer, "context is null".into()))
}

fn out_arg<T>(p: *mut T, name: &str) -> Result<(), Fail> {
    if p.is_null() {
        Err(Fail(TzStatus::NullPointer, format!("{name} is null")))
    } else {
        Ok(())
    }
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("library output has no NUL").into_raw()
}

/// Message for the last failed call on this thread, or NULL. Valid until the
/// next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn tz_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses and validates a JSON parameter file and builds a context.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tz_context_new(json: *const c_char, out: *mut *mut TzContext) -> TzStatus {
    guard(|| {
        out_arg(out, "out")?;
        *out = ptr::null_mut();
        let params = ParamFile::from_json(str_arg(json, "json")?)?;
        if !matches!(params.n, 3 | 5) {
            return Err(Fail(TzStatus::InvalidParams, format!("compression needs n = 3 or 5, got {}", params.n)));
        }
        let tz = params.tz_params()?;
        *out = Box::into_raw(Box::new(TzContext { params, tz }));
        Ok(())
    })
}

/// # Safety
/// `ctx` must come from [`tz_context_new`] and not be used afterwards. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn tz_context_free(ctx: *mut TzContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Extension degree n, or 0 for a NULL context.
///
/// # Safety
/// `ctx` must be NULL or a live context.
#[no_mangle]
pub unsafe extern "C" fn tz_context_degree(ctx: *const TzContext) -> usize {
    ctx.as_ref().map_or(0, |c| c.params.n)
}

/// Length in bytes of the binary encoding of a compressed point.
///
/// # Safety
/// `ctx` must be NULL or a live context.
#[no_mangle]
pub unsafe extern "C" fn tz_compressed_len(ctx: *const TzContext) -> usize {
    ctx.as_ref().map_or(0, |c| {
        let k = *c.tz.curve().base();
        let zero = trace_zero::CompressedPoint::new(Variant::S, &vec![k.zero(); c.params.n - 1]).expect("n - 1 coordinates");
        encoding::to_bytes(&k, &zero).len()
    })
}

/// A pseudo-random point of T_n in text form, drawn from `seed`.
///
/// # Safety
/// `ctx` must be a live context and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tz_random_point(ctx: *const TzContext, seed: u64, out: *mut *mut c_char) -> TzStatus {
    guard(|| {
        out_arg(out, "out")?;
        let c = ctx_arg(ctx)?;
        let p = c.tz.random_point(&mut ChaCha8Rng::seed_from_u64(seed));
        *out = into_c_string(c.tz.curve().format_point(&p));
        Ok(())
    })
}

/// Compresses a point given as `([x0, …], [y0, …])` into `buf`, writing the
/// number of bytes used to `written`. With a short buffer the call fails with
/// `BUFFER_TOO_SMALL` and `written` holds the required size.
///
/// # Safety
/// `point` must be NUL-terminated, `buf` valid for `buf_len` bytes and
/// `written` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tz_compress(
    ctx: *const TzContext,
    point: *const c_char,
    variant: TzVariant,
    buf: *mut u8,
    buf_len: usize,
    written: *mut usize,
) -> TzStatus {
    guard(|| {
        out_arg(written, "written")?;
        *written = 0;
        let c = ctx_arg(ctx)?;
        let curve = c.tz.curve();
        let p = curve.parse_point(str_arg(point, "point")?)?;
        let bytes = encoding::to_bytes(curve.base(), &c.tz.compress(&p, variant.into())?);
        *written = bytes.len();
        if bytes.len() > buf_len {
            return Err(Fail(TzStatus::BufferTooSmall, format!("need {} bytes, have {buf_len}", bytes.len())));
        }
        out_arg(buf, "buf")?;
        ptr::copy_nonoverlapping(bytes.as_ptr(), buf, bytes.len());
        Ok(())
    })
}

/// Decompresses a binary compressed point. On success `out` receives one
/// representative per class, one point per line.
///
/// # Safety
/// `data` must be valid for `len` bytes and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tz_decompress(ctx: *const TzContext, data: *const u8, len: usize, out: *mut *mut c_char) -> TzStatus {
    guard(|| {
        out_arg(out, "out")?;
        *out = ptr::null_mut();
        let c = ctx_arg(ctx)?;
        if data.is_null() && len > 0 {
            return Err(Fail(TzStatus::NullPointer, "data is null".into()));
        }
        let bytes = if len == 0 { &[][..] } else { std::slice::from_raw_parts(data, len) };
        let cp = encoding::from_bytes(c.tz.curve().base(), bytes)?;
        if cp.n() != c.params.n {
            return Err(Fail(TzStatus::InvalidInput, format!("input is for n = {}, context has n = {}", cp.n(), c.params.n)));
        }
        let lines: Vec<String> = c.tz.decompress(&cp)?.iter().map(|cl| c.tz.curve().format_point(&cl.canonical())).collect();
        *out = into_c_string(lines.join("\n"));
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn tz_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_codes_are_stable() {
        assert_eq!(TzStatus::Ok as i32, 0);
        assert_eq!(TzStatus::Panic as i32, 11);
        assert_eq!(status_of(&Error::NotTraceZero), TzStatus::NotTraceZero);
        assert_eq!(status_of(&Error::Internal("x".into())), TzStatus::Internal);
    }

    #[test]
    fn null_arguments_are_rejected() {
        let mut ctx = ptr::null_mut();
        assert_eq!(unsafe { tz_context_new(ptr::null(), &mut ctx) }, TzStatus::NullPointer);
        assert!(ctx.is_null());
        assert!(!tz_last_error().is_null());
        assert_eq!(unsafe { tz_context_degree(ptr::null()) }, 0);
    }
}
