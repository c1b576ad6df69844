//! C ABI over the `qtoep` library.
//!
//! Every function returns a [`QtoepStatus`]. On failure a message is stored
//! per thread and can be read with [`qtoep_last_error_message`]. Handles are
//! created by the library and released with the matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qtoep::circulant::FiberFault;
use qtoep::distribution::{self, Mode, ReportOptions};
use qtoep::symbol::{builtin, json, KernelPartition, SymbolSpec};
use qtoep::{selftest, toeplitz, Error, QMatrix};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QtoepStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    UnknownBuiltin = 3,
    ParseError = 4,
    NumericalError = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

/// Spectral quantity compared by [`qtoep_quantile_distance`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QtoepMode {
    Eig = 0,
    Sv = 1,
}

/// A generating function together with its kernel partition.
pub struct QtoepSymbol {
    spec: SymbolSpec,
}

/// A dense quaternion matrix.
pub struct QtoepMatrix {
    matrix: QMatrix,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

struct Failure(QtoepStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::UnknownBuiltin(_) => QtoepStatus::UnknownBuiltin,
            Error::Json(_) | Error::SymbolFormat(_) | Error::Toml(_) => QtoepStatus::ParseError,
            Error::NoConvergence { .. }
            | Error::PairingFailure { .. }
            | Error::Reconstruction { .. }
            | Error::NotInRange { .. } => QtoepStatus::NumericalError,
            _ => QtoepStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(QtoepStatus::NullPointer, format!("`{what}` is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> QtoepStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error(String::new());
            QtoepStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            QtoepStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(QtoepStatus::InvalidArgument, format!("`{what}` is not UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn out_arg<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn nvec_arg(nvec: *const usize, levels: usize) -> Result<Vec<usize>, Failure> {
    if levels == 0 {
        return Ok(Vec::new());
    }
    if nvec.is_null() {
        return Err(null("nvec"));
    }
    Ok(std::slice::from_raw_parts(nvec, levels).to_vec())
}

/// Copies the last error message of this thread into `buf` (NUL-terminated,
/// truncated to `cap` bytes) and returns the full message length in bytes.
///
/// # Safety
/// `buf` must be null or valid for `cap` bytes.
#[no_mangle]
pub unsafe extern "C" fn qtoep_last_error_message(buf: *mut c_char, cap: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && cap > 0 {
            let n = msg.len().min(cap - 1);
            ptr::copy_nonoverlapping(msg.as_ptr(), buf.cast::<u8>(), n);
            *buf.add(n) = 0;
        }
        msg.len()
    })
}

/// Looks up a built-in symbol by name.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qtoep_symbol_from_builtin(
    name: *const c_char,
    out: *mut *mut QtoepSymbol,
) -> QtoepStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let spec = builtin::builtin(str_arg(name, "name")?)?;
        *out = Box::into_raw(Box::new(QtoepSymbol { spec }));
        Ok(())
    })
}

/// Parses a symbol from its JSON description.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qtoep_symbol_from_json(
    text: *const c_char,
    out: *mut *mut QtoepSymbol,
) -> QtoepStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let spec = json::from_json(str_arg(text, "text")?)?;
        *out = Box::into_raw(Box::new(QtoepSymbol { spec }));
        Ok(())
    })
}

/// Replaces the kernel partition with the one named by `label`
/// (`L`, `R`, `S12`, `S21` or `S<left>_<right>`, 1-based).
///
/// # Safety
/// `symbol` must come from this library; `label` must be NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn qtoep_symbol_set_kernel(
    symbol: *mut QtoepSymbol,
    label: *const c_char,
) -> QtoepStatus {
    guard(|| {
        let symbol = out_arg(symbol, "symbol")?;
        let kernel = KernelPartition::parse(str_arg(label, "label")?, symbol.spec.d())?;
        symbol.spec = symbol.spec.with_kernel(kernel)?;
        Ok(())
    })
}

/// Number of variables and block shape.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn qtoep_symbol_dims(
    symbol: *const QtoepSymbol,
    d: *mut usize,
    s: *mut usize,
    t: *mut usize,
) -> QtoepStatus {
    guard(|| {
        let sym = &ref_arg(symbol, "symbol")?.spec;
        *out_arg(d, "d")? = sym.d();
        *out_arg(s, "s")? = sym.s();
        *out_arg(t, "t")? = sym.t();
        Ok(())
    })
}

/// Writes 1 to `hermitian` when the symbol satisfies the Hermitian criterion, else 0.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn qtoep_symbol_is_hermitian(
    symbol: *const QtoepSymbol,
    hermitian: *mut i32,
) -> QtoepStatus {
    guard(|| {
        let sym = &ref_arg(symbol, "symbol")?.spec;
        let out = out_arg(hermitian, "hermitian")?;
        *out = i32::from(sym.hermitian_criterion()?.hermitian);
        Ok(())
    })
}

/// Releases a symbol. Null is ignored.
///
/// # Safety
/// `symbol` must be null or come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn qtoep_symbol_free(symbol: *mut QtoepSymbol) {
    if !symbol.is_null() {
        drop(Box::from_raw(symbol));
    }
}

/// Assembles the block multilevel Toeplitz matrix of size `nvec[0..levels]`.
///
/// # Safety
/// `symbol` must come from this library, `nvec` must hold `levels` entries.
#[no_mangle]
pub unsafe extern "C" fn qtoep_assemble(
    symbol: *const QtoepSymbol,
    nvec: *const usize,
    levels: usize,
    out: *mut *mut QtoepMatrix,
) -> QtoepStatus {
    guard(|| {
        let sym = &ref_arg(symbol, "symbol")?.spec;
        let out = out_arg(out, "out")?;
        let matrix = toeplitz::assemble(sym, &nvec_arg(nvec, levels)?)?;
        *out = Box::into_raw(Box::new(QtoepMatrix { matrix }));
        Ok(())
    })
}

/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn qtoep_matrix_dims(
    matrix: *const QtoepMatrix,
    rows: *mut usize,
    cols: *mut usize,
) -> QtoepStatus {
    guard(|| {
        let m = &ref_arg(matrix, "matrix")?.matrix;
        *out_arg(rows, "rows")? = m.rows();
        *out_arg(cols, "cols")? = m.cols();
        Ok(())
    })
}

/// Entry `(i, j)` as `[q0, q1, q2, q3]` for `q0 + q1 i + q2 j + q3 k`.
///
/// # Safety
/// `matrix` must come from this library and `out` hold four doubles.
#[no_mangle]
pub unsafe extern "C" fn qtoep_matrix_get(
    matrix: *const QtoepMatrix,
    i: usize,
    j: usize,
    out: *mut f64,
) -> QtoepStatus {
    guard(|| {
        let m = &ref_arg(matrix, "matrix")?.matrix;
        if out.is_null() {
            return Err(null("out"));
        }
        if i >= m.rows() || j >= m.cols() {
            return Err(Failure(
                QtoepStatus::InvalidArgument,
                format!("index ({i}, {j}) outside {}x{}", m.rows(), m.cols()),
            ));
        }
        let q = m[(i, j)];
        std::slice::from_raw_parts_mut(out, 4).copy_from_slice(&[q.q0, q.q1, q.q2, q.q3]);
        Ok(())
    })
}

fn check_capacity(needed: usize, cap: usize) -> Result<(), Failure> {
    if cap < needed {
        Err(Failure(
            QtoepStatus::BufferTooSmall,
            format!("buffer holds {cap}, {needed} needed"),
        ))
    } else {
        Ok(())
    }
}

/// Singular values in nonincreasing order. `len` receives the count
/// `min(rows, cols)`; with a short buffer nothing is written except `len`.
///
/// # Safety
/// `buf` must be valid for `cap` doubles (or null with `cap = 0`).
#[no_mangle]
pub unsafe extern "C" fn qtoep_matrix_singular_values(
    matrix: *const QtoepMatrix,
    buf: *mut f64,
    cap: usize,
    len: *mut usize,
) -> QtoepStatus {
    guard(|| {
        let m = &ref_arg(matrix, "matrix")?.matrix;
        let len = out_arg(len, "len")?;
        *len = m.rows().min(m.cols());
        check_capacity(*len, cap)?;
        let sv = m.singular_values()?;
        if !sv.is_empty() {
            if buf.is_null() {
                return Err(null("buf"));
            }
            std::slice::from_raw_parts_mut(buf, sv.len()).copy_from_slice(&sv);
        }
        Ok(())
    })
}

/// Canonical eigenvalues of a square matrix as interleaved `(re, im)` pairs
/// with `im >= 0`. `len` receives the number of eigenvalues; `cap` counts doubles.
///
/// # Safety
/// `buf` must be valid for `cap` doubles (or null with `cap = 0`).
#[no_mangle]
pub unsafe extern "C" fn qtoep_matrix_canonical_eigenvalues(
    matrix: *const QtoepMatrix,
    buf: *mut f64,
    cap: usize,
    len: *mut usize,
) -> QtoepStatus {
    guard(|| {
        let m = &ref_arg(matrix, "matrix")?.matrix;
        let len = out_arg(len, "len")?;
        if !m.is_square() {
            return Err(Failure(
                QtoepStatus::InvalidArgument,
                format!("matrix is {}x{}, not square", m.rows(), m.cols()),
            ));
        }
        *len = m.rows();
        check_capacity(2 * *len, cap)?;
        let ev = m.canonical_eigenvalues()?;
        if !ev.is_empty() {
            if buf.is_null() {
                return Err(null("buf"));
            }
            let out = std::slice::from_raw_parts_mut(buf, 2 * ev.len());
            for (slot, z) in out.chunks_mut(2).zip(&ev) {
                slot[0] = z.re;
                slot[1] = z.im;
            }
        }
        Ok(())
    })
}

/// # Safety
/// `matrix` must be null or come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn qtoep_matrix_free(matrix: *mut QtoepMatrix) {
    if !matrix.is_null() {
        drop(Box::from_raw(matrix));
    }
}

/// Mean absolute difference between the sorted spectrum of the Toeplitz
/// matrix of size `nvec` and the symbol quantiles, using the symbol's own
/// kernel and the default sampling grid.
///
/// # Safety
/// `symbol` must come from this library, `nvec` hold `levels` entries.
#[no_mangle]
pub unsafe extern "C" fn qtoep_quantile_distance(
    symbol: *const QtoepSymbol,
    nvec: *const usize,
    levels: usize,
    mode: QtoepMode,
    out: *mut f64,
) -> QtoepStatus {
    guard(|| {
        let sym = &ref_arg(symbol, "symbol")?.spec;
        let out = out_arg(out, "out")?;
        let mode = match mode {
            QtoepMode::Eig => Mode::Eig,
            QtoepMode::Sv => Mode::Sv,
        };
        let report = distribution::distribution_report(
            sym,
            sym.kernel(),
            &nvec_arg(nvec, levels)?,
            mode,
            ReportOptions::for_dimension(sym.d()),
        )?;
        *out = report.l1_quantile_distance;
        Ok(())
    })
}

/// Runs the invariant suites; `passed` receives 1 when every suite passes.
/// `failed_suites`, if non-null, receives the number of failing suites.
///
/// # Safety
/// Pointers must be valid or null where allowed.
#[no_mangle]
pub unsafe extern "C" fn qtoep_selftest(
    seed: u64,
    passed: *mut i32,
    failed_suites: *mut usize,
) -> QtoepStatus {
    guard(|| {
        let passed = out_arg(passed, "passed")?;
        let results = selftest::run_all(seed, FiberFault::None);
        let failed = results.iter().filter(|r| !r.passed()).count();
        *passed = i32::from(failed == 0);
        if let Some(f) = failed_suites.as_mut() {
            *f = failed;
        }
        Ok(())
    })
}
