//! Seeded random quaternion data for property suites.

use rand::Rng;

use crate::cla::CMatrix;
use crate::qmat::QMatrix;
use crate::quat::{Quaternion, C64};
use crate::symbol::{MultiIndex, TrigPoly};

/// Components uniform in `[-1, 1)`.
pub fn quaternion<R: Rng + ?Sized>(rng: &mut R) -> Quaternion {
    Quaternion::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

pub fn complex<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

pub fn qmatrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> QMatrix {
    QMatrix::from_fn(rows, cols, |_, _| quaternion(rng))
}

pub fn cmatrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| complex(rng))
}

/// Quaternion matrix of the given rank (almost surely), as a product of
/// `rows x rank` and `rank x cols` random factors.
pub fn qmatrix_of_rank<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize, rank: usize) -> QMatrix {
    let a = qmatrix(rng, rows, rank);
    let b = qmatrix(rng, rank, cols);
    a.matmul(&b).expect("inner dimensions agree")
}

/// Polynomial with each slice coefficient in `[-degree, degree]^d` present with
/// probability one half. Both slice tables get at least one term.
pub fn trig_poly<R: Rng + ?Sized>(rng: &mut R, d: usize, s: usize, t: usize, degree: usize) -> TrigPoly {
    let side = 2 * degree + 1;
    let all: Vec<MultiIndex> = (0..side.pow(d as u32))
        .map(|mut f| {
            let mut m = vec![0i64; d];
            for slot in m.iter_mut().rev() {
                *slot = (f % side) as i64 - degree as i64;
                f /= side;
            }
            m
        })
        .collect();
    let pick = |rng: &mut R| {
        let mut terms: Vec<(MultiIndex, CMatrix)> = Vec::new();
        for m in &all {
            if rng.gen_bool(0.5) {
                terms.push((m.clone(), cmatrix(rng, s, t)));
            }
        }
        if terms.is_empty() {
            let m = all[rng.gen_range(0..all.len())].clone();
            terms.push((m, cmatrix(rng, s, t)));
        }
        terms
    };
    let z = pick(rng);
    let w = pick(rng);
    TrigPoly::from_slice_coeffs(d, s, t, z, w).expect("consistent shapes")
}

/// Polynomial satisfying the Hermitian criterion: `Zhat(-m) = Zhat(m)*` and
/// `What(-m) = -What(m)^T`.
pub fn hermitian_trig_poly<R: Rng + ?Sized>(rng: &mut R, d: usize, s: usize, degree: usize) -> TrigPoly {
    let p = trig_poly(rng, d, s, s, degree);
    let half = C64::new(0.5, 0.0);
    let neg = |m: &MultiIndex| m.iter().map(|v| -v).collect::<MultiIndex>();
    let mut z = Vec::new();
    for (m, c) in p.z_coeffs() {
        z.push((m.clone(), c.scale(half)));
        z.push((neg(m), c.adjoint().scale(half)));
    }
    let mut w = Vec::new();
    for (m, c) in p.w_coeffs() {
        w.push((m.clone(), c.scale(half)));
        w.push((neg(m), c.transpose().scale(-half)));
    }
    TrigPoly::from_slice_coeffs(d, s, s, z, w).expect("consistent shapes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::{KernelPartition, SymbolSpec};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn hermitian_polynomials_pass_the_criterion() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for d in 1..=2 {
            let p = hermitian_trig_poly(&mut rng, d, 2, 2);
            let f = SymbolSpec::trig_poly(p, KernelPartition::right(d)).unwrap();
            assert!(f.hermitian_criterion().unwrap().hermitian);
        }
    }

    #[test]
    fn low_rank_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let a = qmatrix_of_rank(&mut rng, 5, 4, 2);
        assert_eq!(a.rank_h().unwrap(), 2);
    }
}
