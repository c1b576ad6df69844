//! Dense complex kernels checked against nalgebra.

use nalgebra::{Complex, DMatrix};
use proptest::prelude::*;
use qtoep::cla::{self, CMatrix};
use qtoep::circulant::matching_distance;
use qtoep::C64;

fn to_na(a: &CMatrix) -> DMatrix<Complex<f64>> {
    DMatrix::from_fn(a.rows(), a.cols(), |i, j| a[(i, j)])
}

fn cmatrix(max: usize) -> impl Strategy<Value = CMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), r * c).prop_map(move |v| {
            CMatrix::from_vec(r, c, v.into_iter().map(|(a, b)| C64::new(a, b)).collect()).unwrap()
        })
    })
}

fn square(max: usize) -> impl Strategy<Value = CMatrix> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n * n).prop_map(move |v| {
            CMatrix::from_vec(n, n, v.into_iter().map(|(a, b)| C64::new(a, b)).collect()).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hermitian_eigenvalues_match(x in square(12)) {
        let h = x.add(&x.adjoint()).unwrap();
        let ours = cla::herm_eig(&h).unwrap();
        let mut theirs: Vec<f64> = to_na(&h).symmetric_eigenvalues().iter().copied().collect();
        theirs.sort_by(f64::total_cmp);
        for (a, b) in ours.iter().zip(&theirs) {
            prop_assert!((a - b).abs() < 1e-10, "{a} vs {b}");
        }
    }

    #[test]
    fn singular_values_match(a in cmatrix(10)) {
        let ours = cla::complex_svd_values(&a).unwrap();
        let mut theirs: Vec<f64> = to_na(&a).singular_values().iter().copied().collect();
        theirs.sort_by(|x, y| y.total_cmp(x));
        prop_assert_eq!(ours.len(), theirs.len());
        for (x, y) in ours.iter().zip(&theirs) {
            prop_assert!((x - y).abs() < 1e-10, "{x} vs {y}");
        }
    }

    #[test]
    fn general_eigenvalues_match(a in square(10)) {
        let ours = cla::general_eig(&a).unwrap();
        let theirs: Vec<C64> = to_na(&a).schur().eigenvalues().expect("triangular Schur form").iter().copied().collect();
        prop_assert!(matching_distance(&ours, &theirs) < 1e-8);
    }
}

#[test]
fn diagonal_and_defective_inputs() {
    let d = CMatrix::diag(&[C64::new(3.0, 0.0), C64::new(-1.0, 0.0), C64::new(0.0, 0.0)]);
    assert_eq!(cla::herm_eig(&d).unwrap(), vec![-1.0, 0.0, 3.0]);
    let jordan = CMatrix::from_fn(3, 3, |i, j| {
        if i == j {
            C64::new(2.0, 0.0)
        } else if j == i + 1 {
            C64::new(1.0, 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    });
    for z in cla::general_eig(&jordan).unwrap() {
        assert!((z - C64::new(2.0, 0.0)).norm() < 1e-4);
    }
    assert!(cla::complex_svd_values(&CMatrix::zeros(3, 2))
        .unwrap()
        .iter()
        .all(|&s| s == 0.0));
}
