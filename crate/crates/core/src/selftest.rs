//! Seeded invariant suites over every module at small sizes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circulant::{self, CirculantSpec, FiberFault, RECONSTRUCTION_TOL, SPECTRUM_TOL};
use crate::cla::{self, CMatrix};
use crate::distribution::{self, Mode, ReportOptions};
use crate::embed;
use crate::error::Result;
use crate::qmat::{schatten_of, QMatrix};
use crate::quat::{Quaternion, C64};
use crate::random;
use crate::symbol::{builtin, KernelPartition, SymbolSpec};
use crate::toeplitz;

pub const DEFAULT_SEED: u64 = 20_240_601;

const TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Suite {
    name: &'static str,
    cases: usize,
    failures: Vec<String>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn small(&mut self, value: f64, tol: f64, what: &str) {
        self.expect(value.is_finite() && value <= tol, || format!("{what}: {value:e} > {tol:e}"));
    }

    fn run(mut self, body: impl FnOnce(&mut Suite) -> Result<()>) -> SuiteResult {
        if let Err(e) = body(&mut self) {
            self.cases += 1;
            self.failures.push(format!("error: {e}"));
        }
        SuiteResult {
            name: self.name,
            cases: self.cases,
            failures: self.failures,
        }
    }
}

/// Runs every suite with generators seeded from `seed`. `fault` is passed to
/// the fiber computation.
pub fn run_all(seed: u64, fault: FiberFault) -> Vec<SuiteResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    vec![
        Suite::new("quat").run(|s| quat_suite(s, &mut rng)),
        Suite::new("embed").run(|s| embed_suite(s, &mut rng)),
        Suite::new("cla").run(|s| cla_suite(s, &mut rng)),
        Suite::new("symbol").run(|s| symbol_suite(s, &mut rng)),
        Suite::new("toeplitz").run(|s| toeplitz_suite(s, &mut rng)),
        Suite::new("fibers").run(|s| fiber_suite(s, &mut rng, fault)),
        Suite::new("distribution").run(distribution_suite),
    ]
}

fn quat_suite(s: &mut Suite, rng: &mut ChaCha8Rng) -> Result<()> {
    for _ in 0..200 {
        let (p, q, r) = (
            random::quaternion(rng),
            random::quaternion(rng),
            random::quaternion(rng),
        );
        s.small(((p * q) * r - p * (q * r)).norm(), 1e-14, "associativity");
        s.small(((p * q).norm() - p.norm() * q.norm()).abs(), 1e-14, "norm multiplicativity");
        s.small(((p * q).conj() - q.conj() * p.conj()).norm(), 1e-14, "conjugate reverses products");
        s.small((p.split().join() - p).norm(), 0.0, "slice round trip");
        let z = random::complex(rng);
        let jz = Quaternion::J * Quaternion::from_complex(z);
        let zbar_j = Quaternion::from_complex(z.conj()) * Quaternion::J;
        s.small((jz - zbar_j).norm(), 1e-15, "j z = conj(z) j");
    }
    Ok(())
}

fn embed_suite(s: &mut Suite, rng: &mut ChaCha8Rng) -> Result<()> {
    for _ in 0..40 {
        let (m, k, n) = (rng.gen_range(1..=5), rng.gen_range(1..=5), rng.gen_range(1..=5));
        let a = random::qmatrix(rng, m, k);
        let b = random::qmatrix(rng, k, n);
        let phi = |x: &QMatrix| embed::phi_blocked(x).matrix;
        let lhs = phi(&a.matmul(&b)?);
        let rhs = phi(&a).matmul(&phi(&b))?;
        s.small(lhs.sub(&rhs)?.max_abs(), TOL, "multiplicativity");
        s.small(phi(&a.adjoint()).sub(&phi(&a).adjoint())?.max_abs(), 0.0, "adjoints");
        let back = embed::phi_pullback(&embed::phi_blocked(&a))?;
        s.small(back.max_abs_diff(&a)?, 0.0, "pullback");
        s.small(embed::range_residual(&phi(&a))?, TOL, "range residual");

        let sv = a.singular_values()?;
        let sv_c = cla::complex_svd_values(&phi(&a))?;
        let dev = sv
            .iter()
            .flat_map(|&v| [v, v])
            .zip(&sv_c)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
        s.small(dev, TOL, "singular value duplication");
        let r = rng.gen_range(0..=m.min(n));
        let low = random::qmatrix_of_rank(rng, m, n, r);
        let sv_low = cla::complex_svd_values(&phi(&low))?;
        let cutoff = (2 * m.max(n)) as f64 * sv_low.first().copied().unwrap_or(0.0) * 1e-12;
        let rank_c = sv_low.iter().filter(|&&v| v > cutoff).count();
        s.expect(rank_c == 2 * low.rank_h()? && low.rank_h()? == r, || {
            format!("rank doubling: complex {rank_c}, quaternion rank {r}")
        });
    }
    Ok(())
}

fn cla_suite(s: &mut Suite, rng: &mut ChaCha8Rng) -> Result<()> {
    for _ in 0..30 {
        let n = rng.gen_range(1..=12);
        let x = random::cmatrix(rng, n, n);
        let h = x.add(&x.adjoint())?;
        let eig = cla::herm_eig(&h)?;
        let trace: f64 = eig.iter().sum();
        s.small((trace - h.trace().re).abs(), 1e-10, "eigenvalue sum equals trace");
        let sq: f64 = eig.iter().map(|v| v * v).sum();
        s.small((sq - h.frob_norm().powi(2)).abs() / sq.max(1.0), 1e-10, "eigenvalue squares");
        s.expect(eig.windows(2).all(|w| w[0] <= w[1]), || "eigenvalues not sorted".into());

        let (r, c) = (rng.gen_range(1..=10), rng.gen_range(1..=10));
        let a = random::cmatrix(rng, r, c);
        let sv = cla::complex_svd_values(&a)?;
        let sq: f64 = sv.iter().map(|v| v * v).sum();
        s.small((sq - a.frob_norm().powi(2)).abs() / sq.max(1.0), 1e-10, "singular value squares");
        s.expect(sv.len() == r.min(c), || "singular value count".into());

        let ev = cla::general_eig(&x)?;
        let sum: C64 = ev.iter().sum();
        s.small((sum - x.trace()).norm(), 1e-9, "general eigenvalue sum");
    }
    Ok(())
}

fn symbol_suite(s: &mut Suite, rng: &mut ChaCha8Rng) -> Result<()> {
    for case in 0..8 {
        let d = 1 + case % 2;
        let (bs, bt) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
        let p = random::trig_poly(rng, d, bs, bt, 2);
        let nvec = vec![3; d];
        for kernel in KernelPartition::standard_classes(d) {
            let f = SymbolSpec::trig_poly(p.clone(), kernel.clone())?;
            let a = toeplitz::assemble(&f, &nvec)?;
            let b = toeplitz::assemble(&f.reduce_to_right(), &nvec)?;
            s.small(a.max_abs_diff(&b)?, 0.0, "kernel reduction");
        }

        let h = random::hermitian_trig_poly(rng, d, 2, 2);
        let f = SymbolSpec::trig_poly(h, KernelPartition::right(d))?;
        s.expect(f.hermitian_criterion()?.hermitian, || "constructed Hermitian symbol".into());
        for kernel in KernelPartition::standard_classes(d) {
            let a = toeplitz::assemble(&f.with_kernel(kernel.clone())?, &nvec)?;
            s.expect(a.is_hermitian(TOL), || format!("Hermitian symbol, kernel {kernel}"));
        }
    }
    let herm = builtin::builtin("herm_cont_2x2")?;
    let non = builtin::builtin("nonherm_cont_2x2")?;
    s.expect(herm.hermitian_criterion()?.hermitian, || "herm_cont_2x2 criterion".into());
    s.expect(!non.hermitian_criterion()?.hermitian, || "nonherm_cont_2x2 criterion".into());
    Ok(())
}

fn toeplitz_suite(s: &mut Suite, rng: &mut ChaCha8Rng) -> Result<()> {
    for case in 0..6 {
        let d = 1 + case % 2;
        let (bs, bt) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
        let p = random::trig_poly(rng, d, bs, bt, 2);
        let nvec: Vec<usize> = (0..d).map(|_| rng.gen_range(1..=4)).collect();
        let f = SymbolSpec::trig_poly(p.clone(), KernelPartition::right(d))?;
        for kernel in KernelPartition::standard_classes(d) {
            let r = toeplitz::embedding_identity_check(&f, &kernel, &nvec)?;
            s.small(r, TOL, "embedding identity");
            let fk = f.with_kernel(kernel.clone())?;
            s.expect(toeplitz::adjoint_identity_check(&fk, &nvec)?.holds, || {
                format!("adjoint identities, kernel {kernel}")
            });
            let sv = toeplitz::assemble(&fk, &nvec)?.singular_values()?;
            for q in [1.0, 2.0, f64::INFINITY] {
                let rhs = toeplitz::schatten_bound_rhs(&f, &nvec, q)?;
                let lhs = schatten_of(&sv, q);
                s.expect(lhs <= rhs, || format!("Schatten p={q}: {lhs} > {rhs}"));
            }
        }
        let even = toeplitz::w_even_on_differences(&p, &nvec)?;
        let left = toeplitz::assemble(&f.with_kernel(KernelPartition::left(d))?, &nvec)?;
        let right = toeplitz::assemble(&f, &nvec)?;
        s.expect(even == (left == right), || "evenness criterion".into());
    }
    Ok(())
}

fn random_circulant(rng: &mut ChaCha8Rng, nvec: &[usize], bs: usize, bt: usize) -> Result<CirculantSpec> {
    let set = toeplitz::MultiIndexSet::new(nvec)?;
    let entries: Vec<_> = set
        .iter()
        .filter(|_| rng.gen_bool(0.6))
        .map(|k| k.into_iter().map(|v| v as i64).collect::<Vec<_>>())
        .collect();
    let entries: Vec<_> = entries
        .into_iter()
        .map(|k| (k, random::qmatrix(rng, bs, bt)))
        .collect();
    CirculantSpec::new(nvec, bs, bt, entries)
}

fn fiber_suite(s: &mut Suite, rng: &mut ChaCha8Rng, fault: FiberFault) -> Result<()> {
    for n in 1..=8 {
        let f = QMatrix::from_complex(&circulant::qdft_matrix(n));
        let j = QMatrix::identity(n).map(|q| q * Quaternion::J);
        let lhs = f.matmul(&j)?.matmul(&f.adjoint())?;
        let rhs = QMatrix::from_complex(&circulant::reversal(n)).matmul(&j)?;
        s.small(lhs.max_abs_diff(&rhs)?, 1e-12, "QDFT flip");
    }
    let shapes: [&[usize]; 5] = [&[3], &[4], &[5], &[2, 3], &[4, 4]];
    for nvec in shapes {
        let order = circulant::fix_pair_order(nvec)?;
        let p = order.permutation();
        let pap = p
            .matmul(&circulant::reversal_multilevel(nvec))?
            .matmul(&p.adjoint())?;
        let mut want = CMatrix::identity(order.fixed.len());
        for _ in &order.pairs {
            let swap = CMatrix::from_fn(2, 2, |i, j| C64::new((i != j) as u8 as f64, 0.0));
            want = direct_sum(&want, &swap);
        }
        s.expect(pap == want, || format!("exchange permutation at {nvec:?}"));

        let (bs, bt) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
        let spec = random_circulant(rng, nvec, bs, bt)?;
        match circulant::canonical_x_form_with(&spec, fault) {
            Ok(form) => s.small(form.residual, RECONSTRUCTION_TOL, "fiber reconstruction"),
            Err(e) => s.expect(false, || format!("fibers at {nvec:?}: {e}")),
        }
        let square = random_circulant(rng, nvec, bs, bs)?;
        let (sv_dev, eig_dev) = circulant::fiber_spectrum_check(&square)?;
        s.small(sv_dev, SPECTRUM_TOL, "fiber singular values");
        s.small(eig_dev, SPECTRUM_TOL, "fiber eigenvalues");
    }
    Ok(())
}

fn direct_sum(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let mut out = CMatrix::zeros(a.rows() + b.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), a.cols(), b);
    out
}

fn distribution_suite(s: &mut Suite) -> Result<()> {
    let f = builtin::builtin("herm_1d")?;
    let kernel = KernelPartition::right(1);
    let opts = ReportOptions::for_dimension(1);
    let coarse = distribution::distribution_report(&f, &kernel, &[8], Mode::Eig, opts)?;
    let fine = distribution::distribution_report(&f, &kernel, &[32], Mode::Eig, opts)?;
    s.expect(fine.l1_quantile_distance < coarse.l1_quantile_distance, || {
        format!(
            "quantile distance did not shrink: {} at 8, {} at 32",
            coarse.l1_quantile_distance, fine.l1_quantile_distance
        )
    });
    let loc = distribution::localization_check(&fine)?;
    s.expect(loc.holds, || format!("localization violation {:e}", loc.violation));
    let sv = distribution::distribution_report(&f, &kernel, &[32], Mode::Sv, opts)?;
    s.expect(sv.empirical.chunks(2).all(|p| p[0] == p[1]), || "sv duplication".into());
    Ok(())
}
