use crate::lattice::Frequency;
use crate::linalg::{max_abs, CMatrix, CVector};
use crate::{Error, Result};
use num_complex::Complex64;

const ORTHO_TOL: f64 = 1e-10;

/// One spectral atom of a unitary representation: a torus frequency and an
/// orthonormal basis (columns) of its eigenspace.
#[derive(Debug, Clone)]
pub struct Atom {
    pub freq: Frequency,
    pub basis: CMatrix,
}

impl Atom {
    pub fn multiplicity(&self) -> usize {
        self.basis.ncols()
    }
}

/// An atomic unitary representation of `Z^n` on `C^D`:
/// `U^t = Σ_j e^{+i χ_j · t} Proj_j`, the conjugate-character convention,
/// so that `U^{t+s} = U^t U^s` and each `U^t` is unitary.
#[derive(Debug, Clone)]
pub struct UnitaryRep {
    dim: usize,
    atoms: Vec<Atom>,
}

impl UnitaryRep {
    /// Validates that the eigenspaces are orthonormal and resolve the
    /// identity: `Σ_j B_j B_j^* = I` and `B_j^* B_j = I`, within 1e-10.
    pub fn new(dim: usize, atoms: Vec<Atom>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::NonOrthonormalBasis("no atoms given".into()));
        }
        let n = atoms[0].freq.dim();
        let mut sum = CMatrix::zeros(dim, dim);
        for (j, atom) in atoms.iter().enumerate() {
            if atom.freq.dim() != n {
                return Err(Error::DimensionMismatch(format!(
                    "atom {j} frequency dimension {} != {n}",
                    atom.freq.dim()
                )));
            }
            if atom.basis.nrows() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "atom {j} basis has {} rows, expected {dim}",
                    atom.basis.nrows()
                )));
            }
            let gram = atom.basis.adjoint() * &atom.basis;
            let eye = CMatrix::identity(gram.nrows(), gram.ncols());
            let defect = max_abs(&(gram - eye));
            if defect > ORTHO_TOL {
                return Err(Error::NonOrthonormalBasis(format!(
                    "atom {j} basis defect {defect:.3e}"
                )));
            }
            sum += &atom.basis * atom.basis.adjoint();
        }
        let defect = max_abs(&(sum - CMatrix::identity(dim, dim)));
        if defect > ORTHO_TOL {
            return Err(Error::NonOrthonormalBasis(format!(
                "projections do not resolve the identity, defect {defect:.3e}"
            )));
        }
        Ok(UnitaryRep { dim, atoms })
    }

    /// Diagonal representation: one 1-dimensional atom per coordinate.
    pub fn diagonal(freqs: Vec<Frequency>) -> Self {
        let dim = freqs.len();
        let atoms = freqs
            .into_iter()
            .enumerate()
            .map(|(i, freq)| {
                let mut basis = CMatrix::zeros(dim, 1);
                basis[(i, 0)] = Complex64::new(1.0, 0.0);
                Atom { freq, basis }
            })
            .collect();
        UnitaryRep { dim, atoms }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn freq_dim(&self) -> usize {
        self.atoms[0].freq.dim()
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// Phase of atom `j` at lattice point `t`: `e^{+i χ_j · t}`.
    pub fn phase(&self, j: usize, t: &[i64]) -> Complex64 {
        self.atoms[j].freq.character(t).conj()
    }

    /// `U^t v`.
    pub fn apply(&self, t: &[i64], v: &CVector) -> CVector {
        let mut out = CVector::zeros(self.dim);
        for j in 0..self.atoms.len() {
            let coeffs = self.atoms[j].basis.adjoint() * v;
            out += (&self.atoms[j].basis * coeffs) * self.phase(j, t);
        }
        out
    }

    /// `U^t` as a dense matrix.
    pub fn matrix(&self, t: &[i64]) -> CMatrix {
        let mut out = CMatrix::zeros(self.dim, self.dim);
        for j in 0..self.atoms.len() {
            let proj = &self.atoms[j].basis * self.atoms[j].basis.adjoint();
            out += proj * self.phase(j, t);
        }
        out
    }

    /// Projection of `v` onto the eigenspace of atom `j`.
    pub fn project(&self, j: usize, v: &CVector) -> CVector {
        let coeffs = self.atoms[j].basis.adjoint() * v;
        &self.atoms[j].basis * coeffs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ip;

    fn sample_rep() -> UnitaryRep {
        // 3-dim with a 2-dim atom spanned by rotated vectors
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let mut b0 = CMatrix::zeros(3, 2);
        b0[(0, 0)] = Complex64::new(s, 0.0);
        b0[(1, 0)] = Complex64::new(0.0, s);
        b0[(0, 1)] = Complex64::new(s, 0.0);
        b0[(1, 1)] = Complex64::new(0.0, -s);
        let mut b1 = CMatrix::zeros(3, 1);
        b1[(2, 0)] = Complex64::new(1.0, 0.0);
        UnitaryRep::new(
            3,
            vec![
                Atom {
                    freq: Frequency::new(vec![0.7, 1.1]),
                    basis: b0,
                },
                Atom {
                    freq: Frequency::new(vec![2.9, 0.3]),
                    basis: b1,
                },
            ],
        )
        .unwrap()
    }

    #[test]
    fn group_law_and_isometry() {
        let u = sample_rep();
        let v = CVector::from_vec(vec![
            Complex64::new(0.3, -0.2),
            Complex64::new(1.1, 0.4),
            Complex64::new(-0.5, 0.9),
        ]);
        for (t, s) in [([1, 2], [3, -1]), ([-4, 0], [2, 5]), ([7, -3], [-7, 3])] {
            let ts: Vec<i64> = t.iter().zip(&s).map(|(a, b)| a + b).collect();
            let lhs = u.apply(&ts, &v);
            let rhs = u.apply(&t, &u.apply(&s, &v));
            assert!((lhs - rhs).norm() < 1e-10 * v.norm());
            assert!((u.apply(&t, &v).norm() - v.norm()).abs() < 1e-10 * v.norm());
        }
        // U^0 = I
        let id_err = (u.apply(&[0, 0], &v) - &v).norm();
        assert!(id_err < 1e-12);
    }

    #[test]
    fn rejects_non_orthonormal() {
        let mut b = CMatrix::zeros(2, 2);
        b[(0, 0)] = Complex64::new(1.0, 0.0);
        b[(1, 1)] = Complex64::new(0.5, 0.0); // not unit
        let r = UnitaryRep::new(
            2,
            vec![Atom {
                freq: Frequency::zero(1),
                basis: b,
            }],
        );
        assert!(matches!(r, Err(Error::NonOrthonormalBasis(_))));
    }

    #[test]
    fn projections_are_orthogonal() {
        let u = sample_rep();
        let v = CVector::from_vec(vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(0.7, 0.7),
        ]);
        let p0 = u.project(0, &v);
        let p1 = u.project(1, &v);
        assert!(ip(&p0, &p1).norm() < 1e-12);
        assert!(((&p0 + &p1) - &v).norm() < 1e-12);
    }
}
