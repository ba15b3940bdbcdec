use crate::lattice::{annihilates, Annihilator, Frequency, EPS_FREQ};
use crate::linalg::CVector;
use crate::model::PcFieldModel;
use crate::{Error, Result};
use num_complex::Complex64;

/// A complex atomic measure on the torus `[0,2π)^n`. Atoms closer than
/// `EPS_FREQ` merge on insertion.
#[derive(Debug, Clone, Default)]
pub struct AtomicMeasure {
    pub atoms: Vec<(Frequency, Complex64)>,
}

impl AtomicMeasure {
    pub fn push(&mut self, loc: Frequency, weight: Complex64) {
        for (f, w) in &mut self.atoms {
            if f.torus_dist(&loc) <= EPS_FREQ {
                *w += weight;
                return;
            }
        }
        self.atoms.push((loc, weight));
    }

    pub fn total_variation(&self) -> f64 {
        self.atoms.iter().map(|(_, w)| w.norm()).sum()
    }

    pub fn total_mass(&self) -> Complex64 {
        self.atoms.iter().map(|(_, w)| w).sum()
    }

    pub fn weight_at(&self, loc: &Frequency) -> Complex64 {
        self.atoms
            .iter()
            .find(|(f, _)| f.torus_dist(loc) <= EPS_FREQ)
            .map(|(_, w)| *w)
            .unwrap_or_else(|| Complex64::new(0.0, 0.0))
    }

    /// Drop atoms with negligible weight relative to the total variation.
    pub fn prune(&mut self, rel_tol: f64) {
        let tv = self.total_variation();
        self.atoms.retain(|(_, w)| w.norm() > rel_tol * tv);
    }

    /// `∫ conj⟨χ,t⟩ dμ(χ) = Σ_atoms e^{+i χ·t} w`.
    pub fn inverse_fourier(&self, t: &[i64]) -> Complex64 {
        self.atoms
            .iter()
            .map(|(f, w)| f.character(t).conj() * w)
            .sum()
    }
}

/// Fourier coefficient of the periodic part over the finite quotient:
/// `P̂_K(λ) = (1/|G/K|) Σ_x ⟨λ,x⟩ P_K(x)`.
pub fn p_hat(model: &PcFieldModel, lambda: &Frequency) -> Result<CVector> {
    let q = model.quotient();
    if !q.is_finite() {
        return Err(Error::Unsupported(
            "P̂_K over a continuum Λ_K is not tabulated; finite quotients only".into(),
        ));
    }
    let w = q.haar_weight();
    let mut acc = CVector::zeros(model.dim());
    for x in q.enumerate()? {
        let xi = q.section(&x)?;
        acc += model.periodic().value(&x)? * lambda.character(&xi);
    }
    Ok(acc * Complex64::new(w, 0.0))
}

/// The measure `Γ^{λ,μ}(Δ) = (E(Δ) Z^λ(0), Z^μ(0))` of the shift group on
/// `L²(G/K; H_X)`, computed structurally from the model: its atoms sit at
/// `[χ_j + ν]`, `ν ∈ Λ_K`, with weights
/// `(Proj_j P̂_K(ν+λ), Proj_j P̂_K(ν+μ))`.
pub fn gamma_pair(
    model: &PcFieldModel,
    lambda: &Frequency,
    mu: &Frequency,
) -> Result<AtomicMeasure> {
    let q = model.quotient();
    if !q.is_finite() {
        return Err(Error::Unsupported(
            "spectral measures are atomic only over finite quotients; \
             the weakly PC spectrum lives on lines"
                .into(),
        ));
    }
    for f in [lambda, mu] {
        if !annihilates(f, model.subgroup()) {
            return Err(Error::FrequencyNotInAnnihilator(f.to_string()));
        }
    }
    let ann = Annihilator::compute(q)?;
    let freqs = ann.frequencies()?;
    let hats: Vec<CVector> = freqs
        .iter()
        .map(|f| p_hat(model, f))
        .collect::<Result<Vec<_>>>()?;
    let lookup = |f: &Frequency| -> Result<usize> {
        ann.position(f)
            .ok_or_else(|| Error::FrequencyNotInAnnihilator(f.to_string()))
    };
    let mut out = AtomicMeasure::default();
    for (nu_idx, nu) in freqs.iter().enumerate() {
        let il = lookup(&freqs[nu_idx].add(lambda))?;
        let im = lookup(&nu.add(mu))?;
        for (j, atom) in model.rep().atoms().iter().enumerate() {
            let _ = j;
            let ca = atom.basis.adjoint() * &hats[il];
            let cb = atom.basis.adjoint() * &hats[im];
            let weight = crate::linalg::ip(&ca, &cb);
            if weight.norm() > 0.0 {
                out.push(atom.freq.add(nu), weight);
            }
        }
    }
    Ok(out)
}

/// The SO-spectral measure `γ_λ = Γ^{0,−λ}`, satisfying
/// `a_λ(t) = Σ_atoms e^{+i χ·t} · weight`.
pub fn gamma_lambda(model: &PcFieldModel, lambda: &Frequency) -> Result<AtomicMeasure> {
    gamma_pair(model, &Frequency::zero(lambda.dim()), &lambda.neg())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::TAU;
    use crate::model::presets;
    use crate::spectra::spectral_covariance;
    use std::f64::consts::PI;

    #[test]
    fn stationary_gamma_zero_is_spectral_measure() {
        let m = presets::stationary_z2();
        let g0 = gamma_lambda(&m, &Frequency::zero(2)).unwrap();
        // γ_0 = Σ_j ‖Proj_j p‖² δ_{χ_j}: check against R via inversion
        for t in [[0i64, 0i64], [1, -2], [4, 3]] {
            let r = m.kernel(&t, &[0, 0]).unwrap();
            let rec = g0.inverse_fourier(&t);
            assert!((r - rec).norm() < 1e-12);
        }
        // weights are the projected masses
        let p = m.periodic().value(&m.quotient().coord_zero()).unwrap();
        for (j, atom) in m.rep().atoms().iter().enumerate() {
            let w = g0.weight_at(&atom.freq);
            let mass = m.rep().project(j, &p).norm_squared();
            assert!((w - Complex64::new(mass, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn gamma_recovers_a_lambda_via_fourier() {
        let m = presets::strong_pc_2x3();
        let ann = Annihilator::compute(m.quotient()).unwrap();
        for lam in ann.frequencies().unwrap() {
            let g = gamma_lambda(&m, &lam).unwrap();
            for t in [[0i64, 0i64], [1, 0], [3, -2], [-4, 5]] {
                let a = spectral_covariance(&m, &lam, &t).unwrap().value;
                let rec = g.inverse_fourier(&t);
                assert!(
                    (a - rec).norm() < 1e-10 * (1.0 + a.norm()),
                    "λ={lam}: a={a} rec={rec}"
                );
            }
        }
    }

    #[test]
    fn dft_oracle_recovers_atoms_on_grid() {
        // the 2-PC amplitude model has all atoms on the 2π/8 grid, so an
        // 8-point DFT over lags inverts the atomic measure exactly
        let m = presets::two_pc_amplitude();
        let lam = Frequency::new(vec![PI]);
        let g = gamma_lambda(&m, &lam).unwrap();
        let n = 8usize;
        for k in 0..n {
            let loc = Frequency::new(vec![TAU * k as f64 / n as f64]);
            let mut dft = Complex64::new(0.0, 0.0);
            for t in 0..n {
                let a = spectral_covariance(&m, &lam, &[t as i64]).unwrap().value;
                dft += a * Frequency::new(vec![loc.theta()[0]]).character(&[t as i64]);
            }
            dft /= n as f64;
            let w = g.weight_at(&loc);
            assert!(
                (dft - w).norm() < 1e-10,
                "atom at 2π·{k}/8: dft {dft} vs structural {w}"
            );
        }
    }

    #[test]
    fn two_pc_gamma_values() {
        let m = presets::two_pc_amplitude();
        let g0 = gamma_lambda(&m, &Frequency::zero(1)).unwrap();
        let gpi = gamma_lambda(&m, &Frequency::new(vec![PI])).unwrap();
        // per-atom masses: γ_0 = 2.5/8 at each of the 8 grid points,
        // γ_π = −3/16 at each
        for k in 0..8 {
            let loc = Frequency::new(vec![TAU * k as f64 / 8.0]);
            assert!((g0.weight_at(&loc) - Complex64::new(2.5 / 8.0, 0.0)).norm() < 1e-12);
            assert!((gpi.weight_at(&loc) - Complex64::new(-3.0 / 16.0, 0.0)).norm() < 1e-12);
        }
        assert!((g0.total_mass() - Complex64::new(2.5, 0.0)).norm() < 1e-12);
        assert!((gpi.total_mass() - Complex64::new(-1.5, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn gamma_supported_on_gamma0() {
        let m = presets::strong_pc_2x3();
        let ann = Annihilator::compute(m.quotient()).unwrap();
        let mut g0 = gamma_lambda(&m, &Frequency::zero(2)).unwrap();
        g0.prune(1e-14);
        for lam in ann.frequencies().unwrap() {
            let mut g = gamma_lambda(&m, &lam).unwrap();
            g.prune(1e-14);
            for (loc, w) in &g.atoms {
                if w.norm() > 1e-12 * g.total_variation() {
                    assert!(
                        g0.weight_at(loc).norm() > 0.0,
                        "γ_λ atom at {loc} missing from γ_0"
                    );
                }
            }
        }
    }

    #[test]
    fn gamma_pair_variations_all_equal() {
        let m = presets::strong_pc_2x3();
        let ann = Annihilator::compute(m.quotient()).unwrap();
        let freqs = ann.frequencies().unwrap();
        let baseline = gamma_pair(&m, &freqs[0], &freqs[0])
            .unwrap()
            .total_variation();
        for lam in &freqs {
            let v = gamma_pair(&m, lam, lam).unwrap().total_variation();
            assert!((v - baseline).abs() < 1e-10 * baseline);
        }
    }

    #[test]
    fn infinite_quotient_rejected() {
        let m = presets::weak_pc_12_9();
        assert!(matches!(
            gamma_lambda(&m, &Frequency::zero(2)),
            Err(Error::Unsupported(_))
        ));
    }
}
