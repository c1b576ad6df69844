//! Built-in generating functions. The four 2x2 symbols on the two-torus are
//! sampled; the one-variable demos are polynomials. All use the right kernel
//! by default.

use crate::cla::CMatrix;
use crate::error::{Error, Result};
use crate::qmat::QMatrix;
use crate::quat::{Quaternion, C64};

use super::{KernelPartition, SymbolSpec, TrigPoly, DEFAULT_QUADRATURE};

pub const BUILTIN_NAMES: [&str; 6] = [
    "herm_cont_2x2",
    "nonherm_cont_2x2",
    "herm_l1_2x2",
    "nonherm_l1_2x2",
    "herm_1d",
    "nonherm_1d",
];

/// Sign function with `sgn(0) = 0`.
pub fn sgn(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// `e^{u s pi/2}` for `s` in `{-1, 0, 1}`: `u s`, or 1 when `s = 0`.
fn quarter_turn(u: Quaternion, s: f64) -> Quaternion {
    if s == 0.0 {
        Quaternion::ONE
    } else {
        u.scale(s)
    }
}

fn block(entries: [Quaternion; 4]) -> QMatrix {
    QMatrix::from_vec(2, 2, entries.to_vec()).expect("2x2")
}

fn herm_cont(th: &[f64]) -> QMatrix {
    let (s1, c1, s2, c2) = (th[0].sin(), th[0].cos(), th[1].sin(), th[1].cos());
    let s12 = (th[0] - th[1]).sin();
    let diag = Quaternion::real(2.0 + c1 + c2);
    block([
        diag,
        Quaternion::new(0.0, 0.5 * s1, 0.5 * s2, 0.25 * s12),
        Quaternion::new(0.0, -0.5 * s1, 0.5 * s2, 0.25 * s12),
        diag,
    ])
}

fn nonherm_cont(th: &[f64]) -> QMatrix {
    let (s1, c1, s2, c2) = (th[0].sin(), th[0].cos(), th[1].sin(), th[1].cos());
    block([
        Quaternion::exp_axis(Quaternion::I, th[0]) + Quaternion::exp_axis(Quaternion::J, th[1]),
        Quaternion::K.scale(c2 + s1),
        Quaternion::I.scale(c1 - s2),
        Quaternion::ONE
            + (Quaternion::exp_axis(Quaternion::J, th[0])
                - Quaternion::exp_axis(Quaternion::K, th[1]))
            .scale(0.5),
    ])
}

fn herm_l1(th: &[f64]) -> QMatrix {
    let (g1, g2) = (sgn(th[0]), sgn(th[1]));
    block([
        Quaternion::real(2.0),
        Quaternion::new(0.0, g1, g2, g2),
        Quaternion::new(0.0, -g1, g2, g2),
        Quaternion::real(2.0),
    ])
}

fn nonherm_l1(th: &[f64]) -> QMatrix {
    let (g1, g2) = (sgn(th[0]), sgn(th[1]));
    let a = sgn(th[0].sin() + 0.25 * th[1].cos());
    let b = sgn(th[0].cos() - th[1].sin());
    block([
        Quaternion::exp_axis(Quaternion::I, th[0]) + Quaternion::real(g1) + Quaternion::J.scale(g2),
        Quaternion::K.scale(a),
        Quaternion::I.scale(b),
        Quaternion::ONE
            + (quarter_turn(Quaternion::J, g1) - quarter_turn(Quaternion::K, g2)).scale(0.25),
    ])
}

fn scalar(re: f64, im: f64) -> CMatrix {
    CMatrix::from_vec(1, 1, vec![C64::new(re, im)]).expect("1x1")
}

/// `2 + cos(theta) + w(theta) j` with `w = sin` (Hermitian class) or `w = cos`.
fn one_variable(odd: bool) -> TrigPoly {
    let z = [
        (vec![0], scalar(2.0, 0.0)),
        (vec![1], scalar(0.5, 0.0)),
        (vec![-1], scalar(0.5, 0.0)),
    ];
    let w = if odd {
        [(vec![1], scalar(0.0, -0.5)), (vec![-1], scalar(0.0, 0.5))]
    } else {
        [(vec![1], scalar(0.5, 0.0)), (vec![-1], scalar(0.5, 0.0))]
    };
    TrigPoly::from_slice_coeffs(1, 1, 1, z, w).expect("valid")
}

/// Looks up a built-in symbol by name.
pub fn builtin(name: &str) -> Result<SymbolSpec> {
    let r2 = KernelPartition::right(2);
    match name {
        "herm_cont_2x2" => SymbolSpec::sampled(name, 2, 2, 2, DEFAULT_QUADRATURE, r2, herm_cont),
        "nonherm_cont_2x2" => {
            SymbolSpec::sampled(name, 2, 2, 2, DEFAULT_QUADRATURE, r2, nonherm_cont)
        }
        "herm_l1_2x2" => SymbolSpec::sampled(name, 2, 2, 2, DEFAULT_QUADRATURE, r2, herm_l1),
        "nonherm_l1_2x2" => SymbolSpec::sampled(name, 2, 2, 2, DEFAULT_QUADRATURE, r2, nonherm_l1),
        "herm_1d" => SymbolSpec::trig_poly(one_variable(true), KernelPartition::right(1)),
        "nonherm_1d" => SymbolSpec::trig_poly(one_variable(false), KernelPartition::right(1)),
        _ => Err(Error::UnknownBuiltin(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn values_at_origin() {
        let h = builtin("herm_cont_2x2").unwrap().eval(&[0.0, 0.0]);
        assert_eq!(
            h,
            block([
                Quaternion::real(4.0),
                Quaternion::ZERO,
                Quaternion::ZERO,
                Quaternion::real(4.0)
            ])
        );
        let l = builtin("herm_l1_2x2").unwrap().eval(&[0.0, 0.0]);
        assert_eq!(
            l,
            block([
                Quaternion::real(2.0),
                Quaternion::ZERO,
                Quaternion::ZERO,
                Quaternion::real(2.0)
            ])
        );
    }

    #[test]
    fn hermitian_builtins_pass_the_criterion() {
        for name in ["herm_cont_2x2", "herm_l1_2x2", "herm_1d"] {
            assert!(
                builtin(name)
                    .unwrap()
                    .hermitian_criterion()
                    .unwrap()
                    .hermitian,
                "{name}"
            );
        }
        for name in ["nonherm_cont_2x2", "nonherm_l1_2x2", "nonherm_1d"] {
            assert!(
                !builtin(name)
                    .unwrap()
                    .hermitian_criterion()
                    .unwrap()
                    .hermitian,
                "{name}"
            );
        }
    }

    #[test]
    fn nonherm_l1_corner_entry() {
        let f = builtin("nonherm_l1_2x2").unwrap();
        let v = f.eval(&[0.5, 0.5])[(1, 1)];
        assert_eq!(v, Quaternion::new(1.0, 0.0, 0.25, -0.25));
        let v = f.eval(&[0.0, 0.5])[(1, 1)];
        assert_eq!(v, Quaternion::new(1.25, 0.0, 0.0, -0.25));
        let v = f.eval(&[0.0, 0.0])[(1, 1)];
        assert_eq!(v, Quaternion::ONE);
    }

    #[test]
    fn nonherm_cont_matches_exponentials() {
        let f = builtin("nonherm_cont_2x2").unwrap();
        let v = f.eval(&[PI / 2.0, 0.0]);
        assert!((v[(0, 0)] - Quaternion::new(1.0, 1.0, 0.0, 0.0)).norm() < 1e-15);
        assert!((v[(1, 1)] - Quaternion::new(1.0 - 0.5, 0.0, 0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(builtin("nope"), Err(Error::UnknownBuiltin(_))));
    }
}
