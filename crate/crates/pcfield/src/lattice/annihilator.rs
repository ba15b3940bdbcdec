use super::frequency::{Frequency, EPS_FREQ, TAU};
use super::quotient::{QuotientCoord, QuotientStructure};
use super::subgroup::LatticeSubgroup;
use crate::{Error, Result};

/// One connected component of `Λ_K` when the quotient has free rank
/// `f > 0`: the affine family `τ ↦ offset + Σ_j τ_j · dir_j (mod 2π)`,
/// `τ ∈ [0,2π)^f`, with integer direction vectors.
#[derive(Debug, Clone)]
pub struct AffineFamily {
    /// Residue indices of the torsion characters selecting this component.
    pub torsion_index: Vec<i64>,
    pub offset: Frequency,
    pub directions: Vec<Vec<i64>>,
}

impl AffineFamily {
    pub fn sample(&self, taus: &[f64]) -> Frequency {
        assert_eq!(taus.len(), self.directions.len());
        let mut theta = self.offset.theta().to_vec();
        for (tau, dir) in taus.iter().zip(&self.directions) {
            for (t, &d) in theta.iter_mut().zip(dir) {
                *t += tau * d as f64;
            }
        }
        Frequency::new(theta)
    }
}

/// The annihilator `Λ_K = { λ : ⟨λ, k⟩ = 1 for all k ∈ K }`, realized as
/// `∏ d_i` points of the torus when `G/K` is finite, and as `∏ d_i`
/// affine families (lines, planes, …) otherwise.
#[derive(Debug, Clone)]
pub enum Annihilator {
    Finite(Vec<LambdaPoint>),
    Families(Vec<AffineFamily>),
}

/// A frequency of a finite `Λ_K` together with its quotient-dual residue
/// index, so characters on quotient coordinates can be evaluated without
/// choosing a section.
#[derive(Debug, Clone)]
pub struct LambdaPoint {
    pub torsion_index: Vec<i64>,
    pub freq: Frequency,
}

impl Annihilator {
    pub fn compute(q: &QuotientStructure) -> Result<Self> {
        let n = q.ambient_dim();
        let v = &q.snf().v;
        let torsion = q.torsion().to_vec();
        let t_pos = q.torsion_positions().to_vec();
        let f_pos = q.free_positions().to_vec();

        let offsets = enumerate_mixed_radix(&torsion);
        let make_offset = |idx: &[i64]| -> Frequency {
            let mut theta = vec![0.0; n];
            for ((&j, &d), &p) in idx.iter().zip(&torsion).zip(&t_pos) {
                let nu = TAU * j as f64 / d as f64;
                for (row, th) in theta.iter_mut().enumerate() {
                    *th += nu * v[(row, p)] as f64;
                }
            }
            Frequency::new(theta)
        };

        if f_pos.is_empty() {
            let pts = offsets
                .iter()
                .map(|idx| LambdaPoint {
                    torsion_index: idx.clone(),
                    freq: make_offset(idx),
                })
                .collect();
            Ok(Annihilator::Finite(pts))
        } else {
            let directions: Vec<Vec<i64>> =
                f_pos.iter().map(|&p| v.col(p)).collect();
            let fams = offsets
                .iter()
                .map(|idx| AffineFamily {
                    torsion_index: idx.clone(),
                    offset: make_offset(idx),
                    directions: directions.clone(),
                })
                .collect();
            Ok(Annihilator::Families(fams))
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Annihilator::Finite(_))
    }

    /// Frequencies of a finite annihilator, in enumeration order. The
    /// first entry is always `λ = 0`.
    pub fn frequencies(&self) -> Result<Vec<Frequency>> {
        match self {
            Annihilator::Finite(pts) => Ok(pts.iter().map(|p| p.freq.clone()).collect()),
            Annihilator::Families(_) => Err(Error::Unsupported(
                "annihilator has free parameters; enumerate via families".into(),
            )),
        }
    }

    pub fn families(&self) -> &[AffineFamily] {
        match self {
            Annihilator::Finite(_) => &[],
            Annihilator::Families(f) => f,
        }
    }

    /// Index of `freq` within a finite annihilator, within `EPS_FREQ`.
    pub fn position(&self, freq: &Frequency) -> Option<usize> {
        match self {
            Annihilator::Finite(pts) => pts.iter().position(|p| p.freq.approx_eq(freq)),
            Annihilator::Families(_) => None,
        }
    }
}

/// Membership test: `λ ∈ Λ_K` iff every generator is annihilated,
/// `|⟨λ, k⟩ − 1| ≤ EPS_FREQ` per generator row.
pub fn annihilates(freq: &Frequency, k: &LatticeSubgroup) -> bool {
    k.generator_rows().iter().all(|g| {
        let z = freq.character(g);
        (z.re - 1.0).hypot(z.im) <= EPS_FREQ
    })
}

/// Character value `⟨λ, x⟩` for `λ ∈ Λ_K` and a quotient coordinate `x`,
/// evaluated through the canonical section (the value is the same for any
/// section since `λ` annihilates `K`).
pub fn character_on_coord(
    q: &QuotientStructure,
    freq: &Frequency,
    x: &QuotientCoord,
) -> Result<num_complex::Complex64> {
    Ok(freq.character(&q.section(x)?))
}

fn enumerate_mixed_radix(radii: &[i64]) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let k = radii.len();
    let mut idx = vec![0i64; k];
    loop {
        out.push(idx.clone());
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if idx[pos] + 1 < radii[pos] {
                idx[pos] += 1;
                for x in idx.iter_mut().skip(pos + 1) {
                    *x = 0;
                }
                break;
            }
        }
    }
}
