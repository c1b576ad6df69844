//! Empirical eigenvalue and singular-value distributions of Toeplitz
//! matrices compared against quantiles of the embedded symbol.
//!
//! Both sides use the embedded (duplicated) normalization: a quaternion
//! matrix with `r` singular values contributes `2r` sorted values, and the
//! symbol contributes the pointwise spectra of `G_tau` over a uniform grid.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use crate::cla::{self, CMatrix};
use crate::embed;
use crate::error::{Error, Result};
use crate::qmat::QMatrix;
use crate::quat::C64;
use crate::symbol::{EmbeddedSymbol, KernelPartition, SpectralBounds, SymbolSpec};
use crate::toeplitz;

/// Hermitian tolerance for eigenvalue-mode input, relative to the Frobenius norm.
pub const EIG_HERMITIAN_TOL: f64 = 1e-8;
/// Base tolerance of the localization check, added to the grid slack.
pub const LOCALIZATION_EPS: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Eig,
    Sv,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Eig => "eig",
            Mode::Sv => "sv",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "eig" => Ok(Mode::Eig),
            "sv" => Ok(Mode::Sv),
            other => Err(Error::InvalidArgument(format!(
                "unknown mode `{other}` (expected eig or sv)"
            ))),
        }
    }
}

/// Symbol sampling resolution per dimension: 4096 for one variable, 128 for two, 16 beyond.
pub fn default_symbol_grid(d: usize) -> usize {
    match d {
        0 | 1 => 4096,
        2 => 128,
        _ => 16,
    }
}

/// Sorted embedded-side spectrum of `a`: singular values or (real) eigenvalues,
/// each quaternion value appearing twice.
pub fn empirical_spectrum(a: &QMatrix, mode: Mode) -> Result<Vec<f64>> {
    let mut out = match mode {
        Mode::Sv => a
            .singular_values()?
            .into_iter()
            .flat_map(|s| [s, s])
            .collect::<Vec<f64>>(),
        Mode::Eig => {
            if !a.is_square() {
                return Err(Error::NotSquare {
                    rows: a.rows(),
                    cols: a.cols(),
                });
            }
            let scale = a.frob_norm().max(f64::MIN_POSITIVE);
            let defect = a.hermitian_defect();
            if defect > EIG_HERMITIAN_TOL * scale {
                return Err(Error::NotHermitian {
                    what: "matrix",
                    residual: defect / scale,
                });
            }
            let phi = embed::phi_blocked(a).matrix;
            cla::herm_eig(&phi.add(&phi.adjoint())?.scale(C64::new(0.5, 0.0)))?
        }
    };
    out.sort_by(f64::total_cmp);
    Ok(out)
}

/// Quantile function of sorted `values` at `p`, by linear interpolation with
/// `values[i]` placed at position `(i + 1/2) / len`.
pub fn quantile(values: &[f64], p: f64) -> f64 {
    let len = values.len();
    let x = (p * len as f64 - 0.5).clamp(0.0, (len - 1) as f64);
    let lo = x.floor() as usize;
    let hi = (lo + 1).min(len - 1);
    let frac = x - lo as f64;
    values[lo] + frac * (values[hi] - values[lo])
}

/// `count` quantiles of `values` (sorted ascending) at `p_i = (i - 1/2) / count`.
pub fn resample(values: &[f64], count: usize) -> Vec<f64> {
    (1..=count)
        .map(|i| quantile(values, (i as f64 - 0.5) / count as f64))
        .collect()
}

/// Monotone rearrangement of the pointwise spectra of `g` on a uniform grid
/// with `grid` points per dimension, resampled to `count` values. In eig mode
/// `G_tau` must be Hermitian at every grid point.
pub fn symbol_quantiles(
    g: &EmbeddedSymbol,
    mode: Mode,
    grid: usize,
    count: usize,
) -> Result<Vec<f64>> {
    if grid < 8 {
        return Err(Error::InvalidArgument(format!(
            "symbol grid must have at least 8 points, got {grid}"
        )));
    }
    if count == 0 {
        return Err(Error::InvalidArgument(
            "quantile count must be positive".into(),
        ));
    }
    let tg = g.symbol().evaluation_grid(grid);
    let mut values = Vec::with_capacity(tg.len() * g.dims().0);
    for f in 0..tg.len() {
        let theta = tg.point(f);
        match mode {
            Mode::Eig => values.extend(g.hermitian_eigs_at(&theta)?),
            Mode::Sv => values.extend(cla::complex_svd_values(&g.eval(&theta))?),
        }
    }
    values.sort_by(f64::total_cmp);
    Ok(resample(&values, count))
}

fn check_sorted(v: &[f64], what: &str) -> Result<()> {
    if v.windows(2).any(|w| !(w[0] <= w[1])) {
        return Err(Error::InvalidArgument(format!(
            "{what} is not nondecreasing"
        )));
    }
    Ok(())
}

/// Mean absolute difference of two nondecreasing lists of equal length.
pub fn quantile_distance(empirical: &[f64], symbol_quantiles: &[f64]) -> Result<f64> {
    if empirical.len() != symbol_quantiles.len() || empirical.is_empty() {
        return Err(Error::DimensionMismatch {
            op: "quantile distance",
            left: (empirical.len(), 1),
            right: (symbol_quantiles.len(), 1),
        });
    }
    check_sorted(empirical, "empirical spectrum")?;
    check_sorted(symbol_quantiles, "symbol quantiles")?;
    let total: f64 = empirical
        .iter()
        .zip(symbol_quantiles)
        .map(|(a, b)| (a - b).abs())
        .sum();
    Ok(total / empirical.len() as f64)
}

#[derive(Clone, Debug, PartialEq)]
pub struct DistributionReport {
    pub mode: Mode,
    pub kernel: KernelPartition,
    pub nvec: Vec<usize>,
    pub empirical: Vec<f64>,
    pub symbol_quantiles: Vec<f64>,
    pub l1_quantile_distance: f64,
    pub bounds: Option<SpectralBounds>,
    pub scatter: Option<Vec<C64>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReportOptions {
    /// Symbol sampling points per dimension.
    pub grid: usize,
    /// Attach canonical eigenvalues of the (square) matrix.
    pub scatter: bool,
}

impl ReportOptions {
    pub fn for_dimension(d: usize) -> Self {
        ReportOptions {
            grid: default_symbol_grid(d),
            scatter: false,
        }
    }
}

/// Assembles `T_n(F)` for `kernel` and compares its spectrum with the symbol.
/// Eig mode also attaches the localization bounds of the symbol.
pub fn distribution_report(
    f: &SymbolSpec,
    kernel: &KernelPartition,
    nvec: &[usize],
    mode: Mode,
    opts: ReportOptions,
) -> Result<DistributionReport> {
    let a = toeplitz::assemble(&f.with_kernel(kernel.clone())?, nvec)?;
    report_for_matrix(f, kernel, &a, mode, opts)
}

/// As [`distribution_report`] for an already assembled `a`.
pub fn report_for_matrix(
    f: &SymbolSpec,
    kernel: &KernelPartition,
    a: &QMatrix,
    mode: Mode,
    opts: ReportOptions,
) -> Result<DistributionReport> {
    let empirical = empirical_spectrum(a, mode)?;
    let g = f.embedded(kernel)?;
    let symbol_quantiles = symbol_quantiles(&g, mode, opts.grid, empirical.len())?;
    let l1_quantile_distance = quantile_distance(&empirical, &symbol_quantiles)?;
    let bounds = match mode {
        Mode::Eig => Some(f.spectral_range_bounds_on(kernel, opts.grid)?),
        Mode::Sv => None,
    };
    let scatter = if opts.scatter && a.is_square() {
        Some(scatter_canonical(a)?)
    } else {
        None
    };
    let nvec = a.block_shape().map(|b| b.nvec.clone()).unwrap_or_default();
    Ok(DistributionReport {
        mode,
        kernel: kernel.clone(),
        nvec,
        empirical,
        symbol_quantiles,
        l1_quantile_distance,
        bounds,
        scatter,
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Localization {
    pub holds: bool,
    /// Largest distance of an eigenvalue outside `[lower, upper]` (0 if none).
    pub violation: f64,
    /// Allowed violation: [`LOCALIZATION_EPS`] plus the grid slack of the bounds.
    pub tolerance: f64,
}

/// Whether every eigenvalue of an eig-mode report lies in the symbol bounds.
pub fn localization_check(report: &DistributionReport) -> Result<Localization> {
    let bounds = match (report.mode, &report.bounds) {
        (Mode::Eig, Some(b)) => b,
        _ => {
            return Err(Error::InvalidArgument(
                "localization needs an eig-mode report with bounds".into(),
            ))
        }
    };
    Ok(localize(&report.empirical, bounds))
}

/// Localization of sorted `values` in `bounds`.
pub fn localize(values: &[f64], bounds: &SpectralBounds) -> Localization {
    let lo = values.first().copied().unwrap_or(bounds.lower);
    let hi = values.last().copied().unwrap_or(bounds.upper);
    let violation = (bounds.lower - lo).max(hi - bounds.upper).max(0.0);
    let tolerance = LOCALIZATION_EPS + bounds.slack;
    Localization {
        holds: violation <= tolerance,
        violation,
        tolerance,
    }
}

/// Canonical eigenvalues as points of the closed upper half plane.
pub fn scatter_canonical(a: &QMatrix) -> Result<Vec<C64>> {
    a.canonical_eigenvalues()
}

/// CSV with header `quantile_position,empirical_value,symbol_value`.
pub fn write_report_csv<W: Write>(report: &DistributionReport, mut out: W) -> io::Result<()> {
    writeln!(out, "quantile_position,empirical_value,symbol_value")?;
    let k = report.empirical.len();
    for (i, (e, s)) in report
        .empirical
        .iter()
        .zip(&report.symbol_quantiles)
        .enumerate()
    {
        writeln!(out, "{},{},{}", (i as f64 + 0.5) / k as f64, e, s)?;
    }
    Ok(())
}

/// CSV with header `re,im`.
pub fn write_scatter_csv<W: Write>(points: &[C64], mut out: W) -> io::Result<()> {
    writeln!(out, "re,im")?;
    for z in points {
        writeln!(out, "{},{}", z.re, z.im)?;
    }
    Ok(())
}

/// Average of `psi` over the singular values of `a` (quaternion side) and over
/// those of its embedding (complex side).
pub fn sv_test_function_averages(a: &QMatrix, psi: impl Fn(f64) -> f64) -> Result<(f64, f64)> {
    let q = a.singular_values()?;
    let c = cla::complex_svd_values(&embed::phi_blocked(a).matrix)?;
    let qa = q.iter().map(|&s| psi(s)).sum::<f64>() / q.len() as f64;
    let ca = c.iter().map(|&s| psi(s)).sum::<f64>() / c.len() as f64;
    Ok((qa, ca))
}

/// Embedded complex matrix, exposed for cross-checks.
pub fn embedded_matrix(a: &QMatrix) -> CMatrix {
    embed::phi_blocked(a).matrix
}
