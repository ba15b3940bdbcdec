use super::periodic::{PeriodicDeformation, PeriodicField, PeriodicScalar, SupportSpec};
use super::unitary::UnitaryRep;
use crate::lattice::{LatticeSubgroup, QuotientCoord, QuotientStructure};
use crate::linalg::{ip, CVector};
use crate::{Error, Result};
use num_complex::Complex64;
use std::collections::BTreeMap;

/// Result of the `G/K`-square-integrability check: the counting-measure
/// total `Σ_x B_X(0;x)` over the stored support plus a certified tail
/// bound from the declared envelope.
#[derive(Debug, Clone, Copy)]
pub struct SquareIntegrability {
    pub integrable: bool,
    pub value: f64,
    pub tail_bound: f64,
}

/// A PC field model `X(t) = U^t P(t)` with covariance kernel
/// `𝔎_X(t,s) = (X(t), X(s)) = Σ_j e^{i χ_j (t−s)} (Proj_j P(t), Proj_j P(s))`.
/// The kernel is `K`-PC by construction.
#[derive(Debug, Clone)]
pub struct PcFieldModel {
    rep: UnitaryRep,
    periodic: PeriodicField,
}

impl PcFieldModel {
    pub fn new(rep: UnitaryRep, periodic: PeriodicField) -> Result<Self> {
        if rep.dim() != periodic.dim() {
            return Err(Error::DimensionMismatch(format!(
                "unitary dimension {} != periodic dimension {}",
                rep.dim(),
                periodic.dim()
            )));
        }
        if rep.freq_dim() != periodic.quotient().ambient_dim() {
            return Err(Error::DimensionMismatch(format!(
                "atom frequencies live on [0,2π)^{} but the lattice is Z^{}",
                rep.freq_dim(),
                periodic.quotient().ambient_dim()
            )));
        }
        Ok(PcFieldModel { rep, periodic })
    }

    /// Stationary model: `K = Z^n`, constant periodic part.
    pub fn stationary(rep: UnitaryRep, p: CVector) -> Result<Self> {
        let n = rep.freq_dim();
        let q = QuotientStructure::new(LatticeSubgroup::full(n))?;
        let periodic = PeriodicField::constant(q, p)?;
        Self::new(rep, periodic)
    }

    pub fn rep(&self) -> &UnitaryRep {
        &self.rep
    }

    pub fn periodic(&self) -> &PeriodicField {
        &self.periodic
    }

    pub fn quotient(&self) -> &QuotientStructure {
        self.periodic.quotient()
    }

    pub fn subgroup(&self) -> &LatticeSubgroup {
        self.quotient().subgroup()
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.quotient().ambient_dim()
    }

    pub fn is_stationary(&self) -> bool {
        self.quotient().order() == Some(1)
    }

    /// `X(t) = U^t P(t)`.
    pub fn eval(&self, t: &[i64]) -> Result<CVector> {
        let p = self.periodic.eval(t)?;
        Ok(self.rep.apply(t, &p))
    }

    /// `𝔎_X(t,s) = (X(t), X(s))`.
    pub fn kernel(&self, t: &[i64], s: &[i64]) -> Result<Complex64> {
        Ok(ip(&self.eval(t)?, &self.eval(s)?))
    }

    /// `b_X(t,s;x) = 𝔎_X(t+ξ(x), s+ξ(x))`, the coset-indexed kernel.
    pub fn b(&self, t: &[i64], s: &[i64], x: &QuotientCoord) -> Result<Complex64> {
        let xi = self.quotient().section(x)?;
        let tp: Vec<i64> = t.iter().zip(&xi).map(|(a, b)| a + b).collect();
        let sp: Vec<i64> = s.iter().zip(&xi).map(|(a, b)| a + b).collect();
        self.kernel(&tp, &sp)
    }

    /// `B_X(t;x) = b_X(t,0;x)`.
    pub fn big_b(&self, t: &[i64], x: &QuotientCoord) -> Result<Complex64> {
        let zero = vec![0i64; self.ambient_dim()];
        self.b(t, &zero, x)
    }

    /// Max violation of `𝔎(t+k, s+k) = 𝔎(t,s)` over window pairs and
    /// subgroup generators. For models this is a float-noise check; its
    /// real use is on foreign kernels.
    pub fn kpc_violation(&self, window: &[Vec<i64>]) -> Result<f64> {
        let mut max = 0.0f64;
        for g in self.subgroup().generator_rows() {
            for t in window {
                for s in window {
                    let base = self.kernel(t, s)?;
                    let tk: Vec<i64> = t.iter().zip(&g).map(|(a, b)| a + b).collect();
                    let sk: Vec<i64> = s.iter().zip(&g).map(|(a, b)| a + b).collect();
                    let shifted = self.kernel(&tk, &sk)?;
                    max = max.max((base - shifted).norm());
                }
            }
        }
        Ok(max)
    }

    /// `sup_t ‖X(t)‖²` over a window, the natural tolerance scale.
    pub fn scale_on(&self, window: &[Vec<i64>]) -> Result<f64> {
        let mut s = 0.0f64;
        for t in window {
            s = s.max(self.eval(t)?.norm_squared());
        }
        Ok(s.max(1e-300))
    }

    /// Counting-measure total of `B_X(0;·)` over the quotient, with the
    /// envelope-certified tail. `‖X(ξ(x))‖ = ‖P_K(x)‖`, so the stored part
    /// is exact.
    pub fn square_integrability(&self) -> Result<SquareIntegrability> {
        let value = self.periodic.counting_norm_sq();
        match self.periodic.support() {
            SupportSpec::Finite => Ok(SquareIntegrability {
                integrable: true,
                value,
                tail_bound: 0.0,
            }),
            SupportSpec::Envelope { rho, .. } => {
                if *rho >= 1.0 {
                    return Ok(SquareIntegrability {
                        integrable: false,
                        value,
                        tail_bound: f64::INFINITY,
                    });
                }
                let radius = self.periodic.free_radius();
                let shift = vec![0i64; self.quotient().free_rank()];
                let tail = self.periodic.pair_tail_bound(radius, &shift)
                    * self.quotient().torsion_order() as f64;
                Ok(SquareIntegrability {
                    integrable: true,
                    value,
                    tail_bound: tail,
                })
            }
            SupportSpec::Undeclared => {
                if self.quotient().is_finite() {
                    Ok(SquareIntegrability {
                        integrable: true,
                        value,
                        tail_bound: 0.0,
                    })
                } else {
                    Err(Error::Undecidable(
                        "infinite quotient with undeclared support".into(),
                    ))
                }
            }
        }
    }

    /// Require square integrability before spectral sums.
    pub fn require_square_integrable(&self) -> Result<SquareIntegrability> {
        let si = self.square_integrability()?;
        if !si.integrable {
            return Err(Error::NotSquareIntegrable(format!(
                "counting total {} with divergent tail",
                si.value
            )));
        }
        Ok(si)
    }
}

/// Periodic amplitude modulation `X(t) = f(t) Y(t)` of a stationary model:
/// realized as `(U_Y, P(t) = f(t) p_Y)`, so the kernel is
/// `f(t) conj(f(s)) 𝔎_Y(t,s)` and `X` is `K`-PC for the period of `f`.
pub fn amplitude_modulated(f: &PeriodicScalar, y: &PcFieldModel) -> Result<PcFieldModel> {
    if !y.is_stationary() {
        return Err(Error::InvalidSubgroup(
            "amplitude modulation expects a stationary base model".into(),
        ));
    }
    if f.quotient().ambient_dim() != y.ambient_dim() {
        return Err(Error::DimensionMismatch(
            "modulation lattice dimension differs from the base model".into(),
        ));
    }
    let p = y.periodic().value(&y.quotient().coord_zero())?;
    let mut values = BTreeMap::new();
    for (x, &c) in f.stored() {
        values.insert(x.clone(), &p * c);
    }
    let periodic = PeriodicField::new(
        f.quotient().clone(),
        y.dim(),
        values,
        f.support().clone(),
    )?;
    PcFieldModel::new(y.rep().clone(), periodic)
}

/// Periodic time deformation `X(t) = Y(t + f(t))` of a stationary model:
/// realized as `(U_Y, P(t) = U_Y^{f(t)} p_Y)`, with kernel
/// `R_Y(t + f(t) − s − f(s))`.
pub fn time_deformed(f: &PeriodicDeformation, y: &PcFieldModel) -> Result<PcFieldModel> {
    if !y.is_stationary() {
        return Err(Error::InvalidSubgroup(
            "time deformation expects a stationary base model".into(),
        ));
    }
    if f.quotient().ambient_dim() != y.ambient_dim() {
        return Err(Error::DimensionMismatch(
            "deformation lattice dimension differs from the base model".into(),
        ));
    }
    let p = y.periodic().value(&y.quotient().coord_zero())?;
    let mut values = BTreeMap::new();
    for (x, shift) in f.stored() {
        values.insert(x.clone(), y.rep().apply(shift, &p));
    }
    let support = if f.quotient().is_finite() {
        SupportSpec::Finite
    } else {
        // the deformed field has full norm everywhere; beyond the stored
        // table nothing is known
        SupportSpec::Undeclared
    };
    let periodic = PeriodicField::new(f.quotient().clone(), y.dim(), values, support)?;
    PcFieldModel::new(y.rep().clone(), periodic)
}
