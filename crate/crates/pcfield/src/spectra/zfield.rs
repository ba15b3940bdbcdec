use super::cyclic::spectral_covariance;
use crate::lattice::{annihilates, Frequency, QuotientCoord};
use crate::linalg::{ip, CVector};
use crate::model::{PcFieldModel, SupportSpec};
use crate::{Error, Result};
use num_complex::Complex64;
use std::collections::BTreeMap;

/// An element of `L²(G/K; C^D)`: the table `x ↦ ⟨λ, ı(t)+x⟩ X(t+ξ(x))`,
/// stored on the coordinates where it is nonzero.
#[derive(Debug, Clone)]
pub struct ZVector {
    pub entries: BTreeMap<QuotientCoord, CVector>,
    haar_weight: f64,
}

/// `Z^λ(t)` for the fixed canonical cross-section `ξ`.
pub fn z_field(model: &PcFieldModel, lambda: &Frequency, t: &[i64]) -> Result<ZVector> {
    if !annihilates(lambda, model.subgroup()) {
        return Err(Error::FrequencyNotInAnnihilator(lambda.to_string()));
    }
    model.require_square_integrable()?;
    let q = model.quotient();
    let coords: Vec<QuotientCoord> = if q.is_finite() {
        q.enumerate()?
    } else {
        // X(t+ξ(x)) = U^{t+ξ(x)} P_K(ı(t)+x): nonzero only when the
        // shifted coordinate is in the stored support
        let shift = q.to_quotient(t)?;
        model
            .periodic()
            .stored()
            .keys()
            .map(|y| q.coord_sub(y, &shift))
            .collect::<Result<Vec<_>>>()?
    };
    let mut entries = BTreeMap::new();
    for x in coords {
        let xi = q.section(&x)?;
        let point: Vec<i64> = t.iter().zip(&xi).map(|(a, b)| a + b).collect();
        // ⟨λ, ı(t)+x⟩ = e^{-i λ·(t+ξ(x))} since λ annihilates K
        let phase = lambda.character(&point);
        let val = model.eval(&point)? * phase;
        if val.norm() > 0.0 {
            entries.insert(x, val);
        }
    }
    Ok(ZVector {
        entries,
        haar_weight: q.haar_weight(),
    })
}

/// Inner product in `L²(G/K; C^D)` under the quotient Haar measure.
pub fn z_inner(a: &ZVector, b: &ZVector) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for (x, va) in &a.entries {
        if let Some(vb) = b.entries.get(x) {
            acc += ip(va, vb);
        }
    }
    acc * a.haar_weight
}

impl ZVector {
    pub fn norm_sq(&self) -> f64 {
        z_inner(self, self).re
    }
}

/// Both sides of the stationarity identity
/// `(Z^λ(t), Z^μ(s)) = ⟨λ, t−s⟩ a_{λ−μ}(t−s)`, with a certified bound on
/// the truncation gap for enveloped supports.
#[derive(Debug, Clone, Copy)]
pub struct ScorrCheck {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub tail_bound: f64,
}

pub fn scorr_check(
    model: &PcFieldModel,
    lambda: &Frequency,
    mu: &Frequency,
    t: &[i64],
    s: &[i64],
) -> Result<ScorrCheck> {
    let za = z_field(model, lambda, t)?;
    let zb = z_field(model, mu, s)?;
    let lhs = z_inner(&za, &zb);
    let nu = lambda.sub(mu);
    let diff: Vec<i64> = t.iter().zip(s).map(|(a, b)| a - b).collect();
    let a = spectral_covariance(model, &nu, &diff)?;
    let rhs = lambda.character(&diff) * a.value;
    let q = model.quotient();
    let lhs_tail = match model.periodic().support() {
        SupportSpec::Finite => 0.0,
        _ => {
            let ft = q.to_quotient(t)?.free;
            let fs = q.to_quotient(s)?.free;
            let fs_norm: i64 = fs.iter().map(|v| v.abs()).sum();
            let shift: Vec<i64> = ft.iter().zip(&fs).map(|(a, b)| a - b).collect();
            let radius = model.periodic().free_radius();
            2.0 * model
                .periodic()
                .pair_tail_bound((radius - fs_norm).max(0), &shift)
        }
    };
    Ok(ScorrCheck {
        lhs,
        rhs,
        tail_bound: a.tail_bound + lhs_tail,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Annihilator;
    use crate::model::presets;
    use std::f64::consts::PI;

    #[test]
    fn z_zero_at_origin_is_section_field() {
        let m = presets::two_pc_amplitude();
        let z = z_field(&m, &Frequency::zero(1), &[0]).unwrap();
        let q = m.quotient();
        for (x, v) in &z.entries {
            let xi = q.section(x).unwrap();
            let want = m.eval(&xi).unwrap();
            assert!((v - want).norm() < 1e-12);
        }
    }

    #[test]
    fn z_norm_equals_a0_for_all_lambda_t() {
        let m = presets::two_pc_amplitude();
        let a0 = spectral_covariance(&m, &Frequency::zero(1), &[0])
            .unwrap()
            .value
            .re;
        for lam in [Frequency::zero(1), Frequency::new(vec![PI])] {
            for t in [[0i64], [3], [-5]] {
                let z = z_field(&m, &lam, &t).unwrap();
                assert!(
                    (z.norm_sq() - a0).abs() < 1e-12 * a0.abs().max(1.0),
                    "‖Z‖² = {} vs a_0(0) = {a0}",
                    z.norm_sq()
                );
            }
        }
    }

    #[test]
    fn z_inner_matches_direct_sum() {
        // direct summation oracle on the 2-PC model
        let m = presets::two_pc_amplitude();
        let lam = Frequency::new(vec![PI]);
        let mu = Frequency::zero(1);
        let (t, s) = ([2i64], [-1i64]);
        let za = z_field(&m, &lam, &t).unwrap();
        let zb = z_field(&m, &mu, &s).unwrap();
        let got = z_inner(&za, &zb);
        // by hand: (1/2) Σ_{x∈{0,1}} ⟨λ,ı(t)+x⟩ conj⟨μ,ı(s)+x⟩ 𝔎(t+ξ(x), s+ξ(x))
        let q = m.quotient();
        let mut want = Complex64::new(0.0, 0.0);
        for xv in 0..2i64 {
            let x = q.to_quotient(&[xv]).unwrap();
            let xi = q.section(&x).unwrap();
            let tp = [t[0] + xi[0]];
            let sp = [s[0] + xi[0]];
            want += lam.character(&tp)
                * mu.character(&sp).conj()
                * m.kernel(&tp, &sp).unwrap();
        }
        want *= 0.5;
        assert!((got - want).norm() < 1e-12);
    }

    #[test]
    fn scorr_identity_on_models() {
        let strong = presets::strong_pc_2x3();
        let ann = Annihilator::compute(strong.quotient()).unwrap();
        let freqs = ann.frequencies().unwrap();
        for (li, mi, t, s) in [
            (0usize, 0usize, [0i64, 0i64], [0i64, 0i64]),
            (1, 4, [2, -1], [0, 3]),
            (5, 2, [-3, 2], [4, 4]),
            (3, 3, [1, 1], [-2, 5]),
        ] {
            let c = scorr_check(&strong, &freqs[li], &freqs[mi], &t, &s).unwrap();
            let scale = c.lhs.norm().max(1.0);
            assert!(
                (c.lhs - c.rhs).norm() <= 1e-9 * scale,
                "scorr mismatch {} vs {}",
                c.lhs,
                c.rhs
            );
        }
        // λ=μ, t=s gives a_0(0)
        let c = scorr_check(&strong, &freqs[2], &freqs[2], &[1, 2], &[1, 2]).unwrap();
        let a0 = spectral_covariance(&strong, &freqs[0], &[0, 0]).unwrap();
        assert!((c.lhs - a0.value).norm() < 1e-10);
        assert!((c.rhs - a0.value).norm() < 1e-10);
    }

    #[test]
    fn scorr_identity_weak_model() {
        let m = presets::weak_pc_12_9();
        let ann = Annihilator::compute(m.quotient()).unwrap();
        let l = ann.families()[1].sample(&[0.81]);
        let mu = ann.families()[2].sample(&[4.0]);
        let c = scorr_check(&m, &l, &mu, &[5, -2], &[-1, 3]).unwrap();
        assert_eq!(c.tail_bound, 0.0);
        assert!((c.lhs - c.rhs).norm() < 1e-10 * c.lhs.norm().max(1.0));
    }
}
