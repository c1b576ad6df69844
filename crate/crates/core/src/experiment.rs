//! Config-driven experiments: distribution reports, plots and check suites
//! over a grid of sizes and kernel partitions.
//!
//! Config schema (TOML):
//!
//! ```toml
//! symbol = "herm_cont_2x2"          # builtin name, or path to a symbol JSON file
//! kernels = ["L", "S12", "S21", "R"] # optional; also {left = [1], right = [2]} (1-based)
//! sizes = [[2, 2], [8, 8]]           # one entry per level
//! mode = "eig"                        # eig | sv | both
//! grid = 128                          # optional symbol samples per dimension, >= 8
//! output = "out/herm_cont"            # optional; relative to QTOEP_OUT_DIR or the cwd
//! checks = ["embedding", "localization"]
//! ```

use std::collections::BTreeSet;
use std::fmt;
use std::fs;
use std::io::BufWriter;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Deserialize;

use crate::circulant::{self, SPECTRUM_TOL};
use crate::distribution::{self, DistributionReport, Mode, ReportOptions};
use crate::error::{Error, Result};
use crate::qmat::{schatten_of, QMatrix};
use crate::svg;
use crate::symbol::{builtin, json, KernelPartition, SymbolBody, SymbolSpec};
use crate::toeplitz;

/// Environment variable naming the root for relative output directories.
pub const OUT_DIR_ENV: &str = "QTOEP_OUT_DIR";

/// Largest `N max(s, t)` for the embedding and adjoint checks.
pub const IDENTITY_CAP: usize = 512;
/// Largest `N min(s, t)` for the a.c.s. check.
pub const ACS_CAP: usize = 512;
/// Largest `N max(s, t)` for the fiber check.
pub const FIBER_CAP: usize = 256;
/// Largest `N max(s, t)` for an extra singular value computation in the Schatten check.
pub const SCHATTEN_CAP: usize = 512;
/// Largest matrix row count for which a scatter of canonical eigenvalues is written.
pub const SCATTER_CAP: usize = 512;

pub const EMBEDDING_TOL_POLY: f64 = 1e-10;
pub const EMBEDDING_TOL_SAMPLED: f64 = 1e-6;
pub const HERMITIAN_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Check {
    Embedding,
    Adjoint,
    Hermitian,
    Schatten,
    Localization,
    Acs,
    Fibers,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Embedding,
        Check::Adjoint,
        Check::Hermitian,
        Check::Schatten,
        Check::Localization,
        Check::Acs,
        Check::Fibers,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Embedding => "embedding",
            Check::Adjoint => "adjoint",
            Check::Hermitian => "hermitian",
            Check::Schatten => "schatten",
            Check::Localization => "localization",
            Check::Acs => "acs",
            Check::Fibers => "fibers",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::config("checks", format!("unknown check `{s}`")))
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    symbol: String,
    kernels: Option<Vec<RawKernel>>,
    sizes: Vec<Vec<usize>>,
    mode: String,
    grid: Option<usize>,
    output: Option<PathBuf>,
    #[serde(default)]
    checks: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawKernel {
    Label(String),
    Sets { left: Vec<usize>, right: Vec<usize> },
}

/// A validated experiment.
#[derive(Clone, Debug)]
pub struct ExperimentConfig {
    /// Builtin name or the file stem of the symbol document.
    pub symbol_name: String,
    pub symbol: SymbolSpec,
    pub kernels: Vec<KernelPartition>,
    pub sizes: Vec<Vec<usize>>,
    pub modes: Vec<Mode>,
    pub grid: usize,
    pub output: PathBuf,
    pub checks: BTreeSet<Check>,
}

impl ExperimentConfig {
    /// Reads and validates a config file. Symbol paths resolve against the
    /// config's directory, relative outputs against [`OUT_DIR_ENV`] or the cwd.
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        let base = path.parent().unwrap_or(Path::new("."));
        let out_root = match std::env::var_os(OUT_DIR_ENV) {
            Some(v) => PathBuf::from(v),
            None => std::env::current_dir()?,
        };
        Self::parse(&text, base, &out_root)
    }

    pub fn parse(text: &str, base: &Path, out_root: &Path) -> Result<Self> {
        let raw: RawConfig = toml::from_str(text)?;

        let (symbol_name, symbol) = match builtin::builtin(&raw.symbol) {
            Ok(spec) => (raw.symbol.clone(), spec),
            Err(Error::UnknownBuiltin(_)) if raw.symbol.ends_with(".json") => {
                let path = base.join(&raw.symbol);
                let text = fs::read_to_string(&path).map_err(|e| {
                    Error::config("symbol", format!("cannot read {}: {e}", path.display()))
                })?;
                let spec = json::from_json(&text).map_err(|e| {
                    Error::config("symbol", format!("{}: {e}", path.display()))
                })?;
                let stem = path
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| "symbol".into());
                (stem, spec)
            }
            Err(_) => {
                return Err(Error::config(
                    "symbol",
                    format!("`{}` is neither a builtin nor a .json path", raw.symbol),
                ))
            }
        };
        let d = symbol.d();

        let kernels = match &raw.kernels {
            None => KernelPartition::standard_classes(d),
            Some(list) if list.is_empty() => {
                return Err(Error::config("kernels", "list is empty"))
            }
            Some(list) => {
                let mut out: Vec<KernelPartition> = Vec::new();
                for k in list {
                    let part = match k {
                        RawKernel::Label(l) => KernelPartition::parse(l, d),
                        RawKernel::Sets { left, right } => {
                            let zero = |v: &[usize]| -> Result<Vec<usize>> {
                                v.iter()
                                    .map(|&l| {
                                        l.checked_sub(1).ok_or_else(|| {
                                            Error::config("kernels", "indices are 1-based")
                                        })
                                    })
                                    .collect()
                            };
                            KernelPartition::new(d, &zero(left)?, &zero(right)?)
                        }
                    }
                    .map_err(|e| Error::config("kernels", e.to_string()))?;
                    if !out.contains(&part) {
                        out.push(part);
                    }
                }
                out
            }
        };

        if raw.sizes.is_empty() {
            return Err(Error::config("sizes", "at least one size is required"));
        }
        for n in &raw.sizes {
            if n.len() != d {
                return Err(Error::config(
                    "sizes",
                    format!("{n:?} has {} levels, the symbol has {d} variables", n.len()),
                ));
            }
            if n.contains(&0) {
                return Err(Error::config("sizes", format!("{n:?} has a zero level")));
            }
        }

        let modes = match raw.mode.as_str() {
            "eig" => vec![Mode::Eig],
            "sv" => vec![Mode::Sv],
            "both" => vec![Mode::Eig, Mode::Sv],
            other => {
                return Err(Error::config(
                    "mode",
                    format!("`{other}` is not one of eig, sv, both"),
                ))
            }
        };
        let hermitian = if symbol.s() == symbol.t() {
            symbol.hermitian_criterion()?.hermitian
        } else {
            false
        };
        if modes.contains(&Mode::Eig) {
            if symbol.s() != symbol.t() {
                return Err(Error::config(
                    "mode",
                    format!("eig needs square blocks, symbol is {}x{}", symbol.s(), symbol.t()),
                ));
            }
            if !hermitian {
                return Err(Error::config(
                    "mode",
                    format!("eig needs a symbol satisfying the Hermitian criterion; `{symbol_name}` does not"),
                ));
            }
        }

        let grid = raw
            .grid
            .unwrap_or_else(|| ReportOptions::for_dimension(d).grid);
        if grid < 8 {
            return Err(Error::config("grid", format!("{grid} is below the minimum 8")));
        }

        let output = raw
            .output
            .clone()
            .unwrap_or_else(|| PathBuf::from(format!("out/{symbol_name}")));
        let output = if output.is_absolute() {
            output
        } else {
            out_root.join(output)
        };

        let mut checks = BTreeSet::new();
        for c in &raw.checks {
            checks.insert(c.parse::<Check>()?);
        }
        if checks.contains(&Check::Localization) {
            if !modes.contains(&Mode::Eig) {
                return Err(Error::config("checks", "localization needs mode eig or both"));
            }
            if !hermitian {
                return Err(Error::config(
                    "checks",
                    "localization needs a symbol satisfying the Hermitian criterion",
                ));
            }
        }

        Ok(ExperimentConfig {
            symbol_name,
            symbol,
            kernels,
            sizes: raw.sizes,
            modes,
            grid,
            output,
            checks,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckOutcome {
    pub check: Check,
    /// Kernel and size the outcome refers to.
    pub label: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CellSummary {
    pub mode: Mode,
    pub kernel: String,
    pub nvec: Vec<usize>,
    pub distance: f64,
    pub files: Vec<PathBuf>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct RunSummary {
    pub cells: Vec<CellSummary>,
    pub checks: Vec<CheckOutcome>,
}

impl RunSummary {
    /// Check suites with at least one failure, in check order.
    pub fn failed_suites(&self) -> Vec<Check> {
        let set: BTreeSet<Check> = self
            .checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .map(|c| c.check)
            .collect();
        set.into_iter().collect()
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for c in &self.cells {
            s.push_str(&format!(
                "report {} {} {} quantile_distance={:e}\n",
                c.mode,
                c.kernel,
                size_tag(&c.nvec),
                c.distance
            ));
        }
        for c in &self.checks {
            s.push_str(&format!("check {} {} {} {}\n", c.check, c.label, c.status, c.detail));
        }
        s
    }
}

pub fn size_tag(nvec: &[usize]) -> String {
    nvec.iter()
        .map(|n| n.to_string())
        .collect::<Vec<_>>()
        .join("x")
}

fn blocks(nvec: &[usize]) -> usize {
    nvec.iter().product()
}

struct Outcomes<'a> {
    list: &'a mut Vec<CheckOutcome>,
}

impl Outcomes<'_> {
    fn push(&mut self, check: Check, label: &str, status: Status, detail: impl Into<String>) {
        let detail = detail.into();
        match status {
            Status::Fail => log::warn!("{check} {label}: {detail}"),
            _ => log::debug!("{check} {label} {status}: {detail}"),
        }
        self.list.push(CheckOutcome {
            check,
            label: label.to_string(),
            status,
            detail,
        });
    }

    fn result(&mut self, check: Check, label: &str, r: Result<(bool, String)>) {
        match r {
            Ok((ok, detail)) => {
                let status = if ok { Status::Pass } else { Status::Fail };
                self.push(check, label, status, detail)
            }
            Err(e) => self.push(check, label, Status::Fail, format!("error: {e}")),
        }
    }
}

/// Runs the experiment, writing report CSVs, SVG plots, scatter CSVs and
/// `summary.txt` into the output directory. Cells run serially in a fixed
/// order so that repeated runs produce identical files.
pub fn run(cfg: &ExperimentConfig) -> Result<RunSummary> {
    fs::create_dir_all(&cfg.output)?;
    let f = &cfg.symbol;
    let (s, t) = (f.s(), f.t());
    let mut summary = RunSummary::default();
    let hermitian_symbol = s == t && f.hermitian_criterion()?.hermitian;

    for kernel in &cfg.kernels {
        let fk = f.with_kernel(kernel.clone())?;
        let klabel = kernel.label();
        let mut hermitian_sizes: Vec<(Vec<usize>, bool)> = Vec::new();

        for nvec in &cfg.sizes {
            let label = format!("{klabel} {}", size_tag(nvec));
            let n = blocks(nvec);
            log::info!("assembling {} for kernel {klabel} at {}", cfg.symbol_name, size_tag(nvec));
            let a = toeplitz::assemble(&fk, nvec)?;
            if s == t {
                hermitian_sizes.push((nvec.clone(), a.is_hermitian(HERMITIAN_TOL)));
            }

            let mut sv: Option<Vec<f64>> = None;
            for &mode in &cfg.modes {
                let scatter = mode == Mode::Sv
                    && a.is_square()
                    && !hermitian_symbol
                    && a.rows() <= SCATTER_CAP;
                let opts = ReportOptions {
                    grid: cfg.grid,
                    scatter,
                };
                let report = distribution::report_for_matrix(f, kernel, &a, mode, opts)?;
                let files = write_cell(cfg, &report)?;
                if mode == Mode::Sv {
                    sv = Some(report.empirical.iter().rev().step_by(2).copied().collect());
                }
                if mode == Mode::Eig && cfg.checks.contains(&Check::Localization) {
                    let mut out = Outcomes { list: &mut summary.checks };
                    out.result(
                        Check::Localization,
                        &label,
                        distribution::localization_check(&report).map(|l| {
                            (l.holds, format!("violation={:e} tolerance={:e}", l.violation, l.tolerance))
                        }),
                    );
                }
                summary.cells.push(CellSummary {
                    mode,
                    kernel: klabel.clone(),
                    nvec: nvec.clone(),
                    distance: report.l1_quantile_distance,
                    files,
                });
            }

            let mut out = Outcomes { list: &mut summary.checks };
            if cfg.checks.contains(&Check::Embedding) {
                if n * s.max(t) > IDENTITY_CAP {
                    out.push(Check::Embedding, &label, Status::Skip, "size above cap");
                } else {
                    let tol = match f.body() {
                        SymbolBody::TrigPoly(_) => EMBEDDING_TOL_POLY,
                        SymbolBody::Sampled(_) => EMBEDDING_TOL_SAMPLED,
                    };
                    out.result(
                        Check::Embedding,
                        &label,
                        toeplitz::embedding_identity_check(f, kernel, nvec)
                            .map(|r| (r < tol, format!("residual={r:e} tolerance={tol:e}"))),
                    );
                }
            }
            if cfg.checks.contains(&Check::Adjoint) {
                if n * s.max(t) > IDENTITY_CAP {
                    out.push(Check::Adjoint, &label, Status::Skip, "size above cap");
                } else {
                    out.result(
                        Check::Adjoint,
                        &label,
                        toeplitz::adjoint_identity_check(&fk, nvec).map(|r| {
                            (
                                r.holds,
                                format!("left={:e} right={:e} sandwich={:e}", r.left, r.right, r.sandwich),
                            )
                        }),
                    );
                }
            }
            if cfg.checks.contains(&Check::Schatten) {
                if sv.is_none() && n * s.max(t) > SCHATTEN_CAP {
                    out.push(Check::Schatten, &label, Status::Skip, "size above cap");
                } else {
                    out.result(Check::Schatten, &label, schatten_outcome(f, &a, nvec, sv.take()));
                }
            }
            if cfg.checks.contains(&Check::Acs) {
                if nvec.iter().any(|&x| x < 3) {
                    out.push(Check::Acs, &label, Status::Skip, "needs every level >= 3");
                } else if n * s.min(t) > ACS_CAP {
                    out.push(Check::Acs, &label, Status::Skip, "size above cap");
                } else {
                    out.result(
                        Check::Acs,
                        &label,
                        circulant::acs_witness(&fk, nvec, 1).map(|w| {
                            (
                                w.within_bound,
                                format!(
                                    "rank_part={:e} rank_bound={:e} norm_part={:e}",
                                    w.rank_part, w.rank_bound, w.norm_part
                                ),
                            )
                        }),
                    );
                }
            }
            if cfg.checks.contains(&Check::Fibers) {
                if nvec.iter().any(|&x| x < 3) {
                    out.push(Check::Fibers, &label, Status::Skip, "needs every level >= 3");
                } else if n * s.max(t) > FIBER_CAP {
                    out.push(Check::Fibers, &label, Status::Skip, "size above cap");
                } else {
                    out.result(Check::Fibers, &label, fiber_outcome(&fk, nvec));
                }
            }
        }

        if cfg.checks.contains(&Check::Hermitian) {
            let mut out = Outcomes { list: &mut summary.checks };
            if s != t {
                out.push(Check::Hermitian, &klabel, Status::Skip, "rectangular blocks");
            } else {
                let all = hermitian_sizes.iter().all(|(_, h)| *h);
                let non: Vec<String> = hermitian_sizes
                    .iter()
                    .filter(|(_, h)| !h)
                    .map(|(n, _)| size_tag(n))
                    .collect();
                let ok = if hermitian_symbol { all } else { !all };
                let detail = format!(
                    "criterion={} non_hermitian_sizes=[{}]",
                    hermitian_symbol,
                    non.join(",")
                );
                out.push(
                    Check::Hermitian,
                    &klabel,
                    if ok { Status::Pass } else { Status::Fail },
                    detail,
                );
            }
        }
    }

    fs::write(cfg.output.join("summary.txt"), summary.render())?;
    Ok(summary)
}

fn write_cell(cfg: &ExperimentConfig, report: &DistributionReport) -> Result<Vec<PathBuf>> {
    let stem = format!(
        "{}_{}_{}",
        report.mode,
        report.kernel.label(),
        size_tag(&report.nvec)
    );
    let csv = cfg.output.join(format!("{stem}.csv"));
    distribution::write_report_csv(report, BufWriter::new(fs::File::create(&csv)?))?;
    let svg_path = cfg.output.join(format!("{stem}.svg"));
    let title = format!(
        "{} {} kernel {} n={}",
        cfg.symbol_name,
        report.mode,
        report.kernel.label(),
        size_tag(&report.nvec)
    );
    fs::write(&svg_path, svg::quantile_plot(report, &title))?;
    let mut files = vec![csv, svg_path];
    if let Some(points) = &report.scatter {
        let path = cfg.output.join(format!(
            "scatter_{}_{}.csv",
            report.kernel.label(),
            size_tag(&report.nvec)
        ));
        distribution::write_scatter_csv(points, BufWriter::new(fs::File::create(&path)?))?;
        files.push(path);
    }
    Ok(files)
}

fn schatten_outcome(
    f: &SymbolSpec,
    a: &QMatrix,
    nvec: &[usize],
    sv: Option<Vec<f64>>,
) -> Result<(bool, String)> {
    let sv = match sv {
        Some(v) => v,
        None => a.singular_values()?,
    };
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, p) in [("1", 1.0), ("2", 2.0), ("inf", f64::INFINITY)] {
        let lhs = schatten_of(&sv, p);
        let rhs = toeplitz::schatten_bound_rhs(f, nvec, p)?;
        ok &= lhs <= rhs;
        detail.push(format!("p={name}:{lhs:e}<={rhs:e}"));
    }
    Ok((ok, detail.join(" ")))
}

fn fiber_outcome(fk: &SymbolSpec, nvec: &[usize]) -> Result<(bool, String)> {
    let spec = circulant::acs_truncate(fk, nvec, 1)?;
    let form = circulant::canonical_x_form(&spec)?;
    let (sv_dev, eig_dev) = circulant::fiber_spectrum_check(&spec)?;
    let ok = sv_dev <= SPECTRUM_TOL && eig_dev <= SPECTRUM_TOL;
    Ok((
        ok,
        format!(
            "reconstruction={:e} sv_deviation={sv_dev:e} eig_deviation={eig_dev:e}",
            form.residual
        ),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<ExperimentConfig> {
        ExperimentConfig::parse(text, Path::new("."), Path::new("/tmp/qtoep-cfg"))
    }

    fn field_of(e: Error) -> String {
        match e {
            Error::Config { field, .. } => field,
            other => panic!("expected a config error, got {other}"),
        }
    }

    #[test]
    fn defaults_fill_kernels_grid_and_output() {
        let c = parse("symbol = \"herm_cont_2x2\"\nsizes = [[2, 2]]\nmode = \"eig\"\n").unwrap();
        assert_eq!(c.kernels.len(), 4);
        assert_eq!(c.grid, 128);
        assert_eq!(c.output, PathBuf::from("/tmp/qtoep-cfg/out/herm_cont_2x2"));
        assert!(c.checks.is_empty());
    }

    #[test]
    fn kernel_forms() {
        let c = parse(
            "symbol = \"herm_cont_2x2\"\nsizes = [[2, 2]]\nmode = \"sv\"\nkernels = [\"S21\", { left = [1], right = [2] }, \"S1_2\"]\n",
        )
        .unwrap();
        let labels: Vec<String> = c.kernels.iter().map(|k| k.label()).collect();
        assert_eq!(labels, vec!["S21", "S12"]);
    }

    #[test]
    fn errors_name_the_field() {
        let cases = [
            ("symbol = \"nope\"\nsizes = [[2]]\nmode = \"sv\"\n", "symbol"),
            ("symbol = \"herm_1d\"\nsizes = []\nmode = \"sv\"\n", "sizes"),
            ("symbol = \"herm_1d\"\nsizes = [[2, 2]]\nmode = \"sv\"\n", "sizes"),
            ("symbol = \"herm_1d\"\nsizes = [[0]]\nmode = \"sv\"\n", "sizes"),
            ("symbol = \"herm_1d\"\nsizes = [[2]]\nmode = \"all\"\n", "mode"),
            ("symbol = \"nonherm_1d\"\nsizes = [[2]]\nmode = \"eig\"\n", "mode"),
            ("symbol = \"nonherm_cont_2x2\"\nsizes = [[2, 2]]\nmode = \"both\"\n", "mode"),
            ("symbol = \"herm_1d\"\nsizes = [[2]]\nmode = \"sv\"\ngrid = 4\n", "grid"),
            ("symbol = \"herm_1d\"\nsizes = [[2]]\nmode = \"sv\"\nkernels = [\"Q\"]\n", "kernels"),
            ("symbol = \"herm_1d\"\nsizes = [[2]]\nmode = \"sv\"\nchecks = [\"speed\"]\n", "checks"),
            ("symbol = \"herm_1d\"\nsizes = [[2]]\nmode = \"sv\"\nchecks = [\"localization\"]\n", "checks"),
        ];
        for (text, field) in cases {
            assert_eq!(field_of(parse(text).unwrap_err()), field, "{text}");
        }
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let e = parse("symbol = \"herm_1d\"\nsizes = [[2]]\nmode = \"sv\"\ncolour = 1\n").unwrap_err();
        assert!(matches!(e, Error::Toml(_)));
    }

    #[test]
    fn json_symbol_resolves_against_config_dir() {
        let dir = std::env::temp_dir().join(format!("qtoep-json-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let spec = builtin::builtin("herm_1d").unwrap();
        fs::write(dir.join("poly.json"), json::to_json(&spec).unwrap()).unwrap();
        let c = ExperimentConfig::parse(
            "symbol = \"poly.json\"\nsizes = [[4]]\nmode = \"eig\"\n",
            &dir,
            &dir,
        )
        .unwrap();
        assert_eq!(c.symbol_name, "poly");
        assert!(c.symbol.as_trig_poly().is_some());
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn small_run_writes_files_and_passes() {
        let dir = std::env::temp_dir().join(format!("qtoep-run-{}", std::process::id()));
        let text = format!(
            "symbol = \"herm_1d\"\nsizes = [[4], [8]]\nmode = \"both\"\noutput = \"{}\"\nchecks = [\"embedding\", \"adjoint\", \"hermitian\", \"schatten\", \"localization\", \"acs\", \"fibers\"]\n",
            dir.display()
        );
        let cfg = parse(&text).unwrap();
        let summary = run(&cfg).unwrap();
        assert!(summary.failed_suites().is_empty(), "{}", summary.render());
        assert_eq!(summary.cells.len(), 8);
        assert!(dir.join("eig_R_8.csv").exists());
        assert!(dir.join("sv_L_4.svg").exists());
        let first = fs::read_to_string(dir.join("eig_R_8.csv")).unwrap();
        run(&cfg).unwrap();
        assert_eq!(first, fs::read_to_string(dir.join("eig_R_8.csv")).unwrap());
        fs::remove_dir_all(&dir).unwrap();
    }
}
