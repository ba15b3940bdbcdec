//! Canonical desk-scale models used throughout the tests, the acceptance
//! suite, and the shipped example files. All constants are frozen
//! literals or simple closed-form tables; nothing here is random.

use super::pcmodel::{amplitude_modulated, PcFieldModel};
use super::periodic::{PeriodicField, PeriodicScalar, SupportSpec};
use super::unitary::{Atom, UnitaryRep};
use crate::lattice::{Frequency, QuotientStructure, TAU};
use crate::linalg::{CMatrix, CVector};
use num_complex::Complex64;
use std::collections::BTreeMap;

/// Stationary model on `Z^2`: three separated atoms, constant periodic
/// part, `K = Z^2`, `Λ_K = {0}`.
pub fn stationary_z2() -> PcFieldModel {
    let rep = UnitaryRep::diagonal(vec![
        Frequency::new(vec![0.0, 0.0]),
        Frequency::new(vec![1.1, 2.3]),
        Frequency::new(vec![0.8 * std::f64::consts::PI, 0.7]),
    ]);
    let p = CVector::from_vec(vec![
        Complex64::new(1.0, 0.0),
        Complex64::new(0.8, -0.3),
        Complex64::new(0.45, 0.2),
    ]);
    PcFieldModel::stationary(rep, p).unwrap()
}

/// Strongly PC model with `K = 2Z × 3Z` (quotient of order 6) on `C^5`.
/// One atom carries a two-dimensional eigenspace so decomposition code
/// sees a degenerate joint phase.
pub fn strong_pc_2x3() -> PcFieldModel {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut b_deg = CMatrix::zeros(5, 2);
    b_deg[(1, 0)] = Complex64::new(s, 0.0);
    b_deg[(2, 0)] = Complex64::new(0.0, s);
    b_deg[(1, 1)] = Complex64::new(s, 0.0);
    b_deg[(2, 1)] = Complex64::new(0.0, -s);
    let basis_at = |i: usize| {
        let mut b = CMatrix::zeros(5, 1);
        b[(i, 0)] = Complex64::new(1.0, 0.0);
        b
    };
    let rep = UnitaryRep::new(
        5,
        vec![
            Atom {
                freq: Frequency::new(vec![0.0, 0.0]),
                basis: basis_at(0),
            },
            Atom {
                freq: Frequency::new(vec![std::f64::consts::FRAC_PI_2, 1.3]),
                basis: b_deg,
            },
            Atom {
                freq: Frequency::new(vec![2.2, 0.4]),
                basis: basis_at(3),
            },
            Atom {
                freq: Frequency::new(vec![1.0, 5.0]),
                basis: basis_at(4),
            },
        ],
    )
    .unwrap();
    let q = QuotientStructure::from_generators(2, vec![vec![2, 0], vec![0, 3]]).unwrap();
    let mut values = BTreeMap::new();
    for x in q.enumerate().unwrap() {
        let r = x.torsion[0] as f64;
        let v = CVector::from_vec(
            (0..5)
                .map(|i| {
                    let a = 0.4 + 0.13 * i as f64 + 0.21 * r;
                    let ph = 0.9 * i as f64 - 0.37 * r;
                    Complex64::from_polar(a.sin().abs() + 0.2, ph)
                })
                .collect(),
        );
        values.insert(x, v);
    }
    let periodic = PeriodicField::new(q, 5, values, SupportSpec::Finite).unwrap();
    PcFieldModel::new(rep, periodic).unwrap()
}

fn weak_pc_values(q: &QuotientStructure) -> BTreeMap<crate::lattice::QuotientCoord, CVector> {
    let mut values = BTreeMap::new();
    for x in crate::model::periodic::coords_within(q, 2).unwrap() {
        let alpha = x.torsion[0] as f64;
        let beta = x.free[0];
        let decay = 0.5f64.powi(beta.abs() as i32);
        let v = CVector::from_vec(
            (0..4)
                .map(|i| {
                    let a = decay * (0.25 + 0.05 * alpha + 0.03 * i as f64);
                    let ph = 0.4 * alpha - 0.3 * beta as f64 + 0.2 * i as f64;
                    Complex64::from_polar(a, ph)
                })
                .collect(),
        );
        values.insert(x, v);
    }
    values
}

fn weak_pc_rep() -> UnitaryRep {
    UnitaryRep::diagonal(vec![
        Frequency::new(vec![0.6, 1.9]),
        Frequency::new(vec![2.8, 0.35]),
        Frequency::new(vec![4.4, 3.1]),
        Frequency::new(vec![5.9, 2.2]),
    ])
}

/// Weakly PC model with `K = {k(12,9)}` on `C^4`: torsion `[3]`, free
/// rank 1, periodic part supported on `|l| ≤ 2` and exactly zero beyond
/// (sharp spectral identities, zero tails).
pub fn weak_pc_12_9() -> PcFieldModel {
    let q = QuotientStructure::from_generators(2, vec![vec![12, 9]]).unwrap();
    let values = weak_pc_values(&q);
    let periodic = PeriodicField::new(q, 4, values, SupportSpec::Finite).unwrap();
    PcFieldModel::new(weak_pc_rep(), periodic).unwrap()
}

/// Same table as [`weak_pc_12_9`] but declared through a geometric
/// envelope `‖P_K(α,l)‖ ≤ 1.5 · 0.5^{|l|}`, so truncated sums report
/// nonzero certified tails.
pub fn weak_pc_12_9_enveloped() -> PcFieldModel {
    let q = QuotientStructure::from_generators(2, vec![vec![12, 9]]).unwrap();
    let values = weak_pc_values(&q);
    let periodic = PeriodicField::new(
        q,
        4,
        values,
        SupportSpec::Envelope {
            constant: 1.5,
            rho: 0.5,
        },
    )
    .unwrap();
    PcFieldModel::new(weak_pc_rep(), periodic).unwrap()
}

/// Stationary sequence on `Z` that is exactly white inside any window
/// shorter than `dim`: atoms at `2πj/dim` with equal weights, so
/// `R(t) = 1` at `t ≡ 0 (mod dim)` and `0` otherwise.
pub fn white_on_atoms(dim: usize) -> PcFieldModel {
    let rep = UnitaryRep::diagonal(
        (0..dim)
            .map(|j| Frequency::new(vec![TAU * j as f64 / dim as f64]))
            .collect(),
    );
    let w = 1.0 / (dim as f64).sqrt();
    let p = CVector::from_element(dim, Complex64::new(w, 0.0));
    PcFieldModel::stationary(rep, p).unwrap()
}

/// 2-PC sequence on `Z`: unit white base, amplitude `f = (1, 2)`
/// repeating, `K = 2Z`. Its spectral covariances at lag 0 are
/// `a_0(0) = 5/2` and `a_π(0) = −3/2`.
pub fn two_pc_amplitude() -> PcFieldModel {
    let y = white_on_atoms(8);
    let q = QuotientStructure::from_generators(1, vec![vec![2]]).unwrap();
    let window: Vec<Vec<i64>> = (-16..=16).map(|t| vec![t]).collect();
    let f = PeriodicScalar::from_fn_checked(
        q,
        0,
        |t| Complex64::new(if t[0].rem_euclid(2) == 0 { 1.0 } else { 2.0 }, 0.0),
        &window,
    )
    .unwrap();
    amplitude_modulated(&f, &y).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_validate() {
        assert_eq!(stationary_z2().dim(), 3);
        assert_eq!(strong_pc_2x3().dim(), 5);
        assert_eq!(weak_pc_12_9().dim(), 4);
        assert_eq!(two_pc_amplitude().dim(), 8);
        assert_eq!(weak_pc_12_9_enveloped().dim(), 4);
    }

    #[test]
    fn white_on_atoms_is_white_in_window() {
        let y = white_on_atoms(8);
        for t in -7..=7i64 {
            let r = y.kernel(&[t], &[0]).unwrap();
            let want = if t == 0 { 1.0 } else { 0.0 };
            assert!(
                (r - Complex64::new(want, 0.0)).norm() < 1e-12,
                "R({t}) = {r}"
            );
        }
    }

    #[test]
    fn strong_model_spans_full_space() {
        let m = strong_pc_2x3();
        let window: Vec<Vec<i64>> = (0..=8)
            .flat_map(|a| (0..=8).map(move |b| vec![a, b]))
            .collect();
        let mut gram = CMatrix::zeros(window.len(), window.len());
        for (i, t) in window.iter().enumerate() {
            for (j, s) in window.iter().enumerate() {
                gram[(i, j)] = m.kernel(t, s).unwrap();
            }
        }
        let (vals, _) = crate::linalg::hermitian_eig(&gram);
        let rank = vals.iter().filter(|&&v| v > 1e-9 * vals[0]).count();
        assert_eq!(rank, 5);
    }
}
