//! Small complex linear-algebra helpers shared across modules.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

/// Inner product with the convention `(u, v) = Σ_i u_i conj(v_i)`,
/// linear in the first argument.
pub fn ip(u: &CVector, v: &CVector) -> Complex64 {
    debug_assert_eq!(u.len(), v.len());
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..u.len() {
        acc += u[i] * v[i].conj();
    }
    acc
}

pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn max_abs_vec(v: &CVector) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Eigendecomposition of a Hermitian matrix, eigenvalues descending.
/// The input is symmetrized first; the asymmetry is the caller's
/// responsibility to bound.
pub fn hermitian_eig(m: &CMatrix) -> (Vec<f64>, CMatrix) {
    let h = m.clone().hermitian_part();
    let se = nalgebra::SymmetricEigen::new(h);
    let n = se.eigenvalues.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| se.eigenvalues[b].partial_cmp(&se.eigenvalues[a]).unwrap());
    let vals: Vec<f64> = order.iter().map(|&i| se.eigenvalues[i]).collect();
    let mut vecs = CMatrix::zeros(se.eigenvectors.nrows(), n);
    for (dst, &src) in order.iter().enumerate() {
        vecs.set_column(dst, &se.eigenvectors.column(src));
    }
    (vals, vecs)
}

/// Factor a Hermitian PSD matrix `g` as rows of `L` with `L L^* = g`,
/// flooring eigenvalues at zero and dropping numerically null directions.
/// Fails when the most negative eigenvalue is below `-tol`.
pub fn psd_factor(g: &CMatrix, tol: f64) -> crate::Result<CMatrix> {
    let (vals, vecs) = hermitian_eig(g);
    let min_eig = vals.last().copied().unwrap_or(0.0);
    if min_eig < -tol {
        let scale = vals.first().copied().unwrap_or(0.0).max(1e-300);
        return Err(crate::Error::NonPsdKernel { min_eig, scale });
    }
    let max_eig = vals.first().copied().unwrap_or(0.0).max(0.0);
    let cutoff = max_eig * 1e-13;
    let rank = vals.iter().take_while(|&&v| v > cutoff).count();
    let n = g.nrows();
    let mut l = CMatrix::zeros(n, rank);
    for j in 0..rank {
        let s = vals[j].max(0.0).sqrt();
        for i in 0..n {
            l[(i, j)] = vecs[(i, j)] * s;
        }
    }
    Ok(l)
}

/// Extend the orthonormal columns of `basis` to a full orthonormal basis of
/// `C^dim` by Gram–Schmidt over the canonical basis vectors, in order.
pub fn orthonormal_complement(basis: &CMatrix, dim: usize) -> CMatrix {
    let mut cols: Vec<CVector> = basis.column_iter().map(|c| c.into_owned()).collect();
    let existing = cols.len();
    for k in 0..dim {
        if cols.len() == dim {
            break;
        }
        let mut v = CVector::zeros(dim);
        v[k] = Complex64::new(1.0, 0.0);
        for q in &cols {
            let c = ip(&v, q);
            v -= q * c;
        }
        let n = v.norm();
        if n > 1e-6 {
            cols.push(v / Complex64::new(n, 0.0));
        }
    }
    assert_eq!(cols.len(), dim, "orthonormal completion failed");
    let mut out = CMatrix::zeros(dim, dim - existing);
    for (j, c) in cols[existing..].iter().enumerate() {
        out.set_column(j, c);
    }
    out
}

/// Multiply each column by a unit phase so its first coordinate of
/// significant magnitude is real and positive. Canonicalizes gauge.
pub fn phase_fix_columns(m: &mut CMatrix) {
    let rows = m.nrows();
    for j in 0..m.ncols() {
        let col_norm = m.column(j).norm();
        let mut pivot = None;
        for i in 0..rows {
            if m[(i, j)].norm() > 1e-9 * col_norm.max(1e-300) {
                pivot = Some(i);
                break;
            }
        }
        if let Some(i) = pivot {
            let z = m[(i, j)];
            let phase = z / Complex64::new(z.norm(), 0.0);
            let corr = phase.conj();
            for i in 0..rows {
                m[(i, j)] *= corr;
            }
        }
    }
}

/// Max deviation of `m` from unitarity, `max |m^* m - I|`.
pub fn unitarity_defect(m: &CMatrix) -> f64 {
    let n = m.ncols();
    let prod = m.adjoint() * m;
    let eye = CMatrix::identity(n, n);
    max_abs(&(prod - eye))
}
