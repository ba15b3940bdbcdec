use crate::{Error, Result};

/// Dense integer matrix with checked arithmetic. Overflow beyond `i64`
/// surfaces as [`Error::ArithmeticOverflow`] rather than wrapping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        if rows.is_empty() {
            return Ok(Self::zeros(0, 0));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(
                "generator rows have unequal lengths".into(),
            ));
        }
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            data.extend_from_slice(r);
        }
        Ok(IntMat {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            self[(i, j)] = -self[(i, j)];
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            self[(i, j)] = -self[(i, j)];
        }
    }

    /// `row_a += q * row_b`, checked.
    pub fn add_row_multiple(&mut self, a: usize, b: usize, q: i64) -> Result<()> {
        for j in 0..self.cols {
            let t = mul(q, self[(b, j)])?;
            self[(a, j)] = add(self[(a, j)], t)?;
        }
        Ok(())
    }

    /// `col_a += q * col_b`, checked.
    pub fn add_col_multiple(&mut self, a: usize, b: usize, q: i64) -> Result<()> {
        for i in 0..self.rows {
            let t = mul(q, self[(i, b)])?;
            self[(i, a)] = add(self[(i, a)], t)?;
        }
        Ok(())
    }

    pub fn mul_mat(&self, other: &IntMat) -> Result<IntMat> {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc: i64 = 0;
                for k in 0..self.cols {
                    acc = add(acc, mul(self[(i, k)], other[(k, j)])?)?;
                }
                out[(i, j)] = acc;
            }
        }
        Ok(out)
    }

    /// `v * self` for a row vector `v`, checked.
    pub fn row_vec_mul(&self, v: &[i64]) -> Result<Vec<i64>> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![0i64; self.cols];
        for (j, o) in out.iter_mut().enumerate() {
            let mut acc: i64 = 0;
            for (k, &vk) in v.iter().enumerate() {
                acc = add(acc, mul(vk, self[(k, j)])?)?;
            }
            *o = acc;
        }
        Ok(out)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination in `i128`.
    pub fn det(&self) -> Result<i64> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return Ok(1);
        }
        let mut m: Vec<Vec<i128>> = (0..n)
            .map(|i| self.row(i).iter().map(|&x| x as i128).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if m[k][k] == 0 {
                let piv = (k + 1..n).find(|&i| m[i][k] != 0);
                match piv {
                    Some(i) => {
                        m.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(0),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[k][k]
                        .checked_mul(m[i][j])
                        .and_then(|a| m[i][k].checked_mul(m[k][j]).map(|b| (a, b)))
                        .and_then(|(a, b)| a.checked_sub(b))
                        .ok_or(Error::ArithmeticOverflow("determinant"))?;
                    m[i][j] = num / prev;
                }
                m[i][k] = 0;
            }
            prev = m[k][k];
        }
        let d = sign * m[n - 1][n - 1];
        i64::try_from(d).map_err(|_| Error::ArithmeticOverflow("determinant"))
    }

    pub fn is_diagonal(&self) -> bool {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i != j && self[(i, j)] != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Inverse of a unimodular matrix (|det| = 1), exact.
    pub fn unimodular_inverse(&self) -> Result<IntMat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        // Adjugate via cofactors would overflow sooner; instead run
        // integer Gauss-Jordan, which stays unimodular throughout.
        let mut a = self.clone();
        let mut inv = IntMat::identity(n);
        for k in 0..n {
            // gcd descent: bring the column-k gcd (over rows >= k) to the
            // pivot position, zeroing the entries below it.
            loop {
                let mut piv: Option<usize> = None;
                for i in k..n {
                    if a[(i, k)] != 0
                        && piv.map_or(true, |p: usize| a[(i, k)].abs() < a[(p, k)].abs())
                    {
                        piv = Some(i);
                    }
                }
                let p =
                    piv.ok_or_else(|| Error::InvalidSubgroup("matrix is singular".into()))?;
                a.swap_rows(p, k);
                inv.swap_rows(p, k);
                let mut clean = true;
                for i in k + 1..n {
                    if a[(i, k)] != 0 {
                        let q = a[(i, k)].div_euclid(a[(k, k)]);
                        a.add_row_multiple(i, k, -q)?;
                        inv.add_row_multiple(i, k, -q)?;
                        if a[(i, k)] != 0 {
                            clean = false;
                        }
                    }
                }
                if clean {
                    break;
                }
            }
            if a[(k, k)] < 0 {
                a.negate_row(k);
                inv.negate_row(k);
            }
            if a[(k, k)] != 1 {
                return Err(Error::InvalidSubgroup(
                    "matrix is not unimodular".into(),
                ));
            }
            for i in 0..n {
                if i != k && a[(i, k)] != 0 {
                    let q = a[(i, k)];
                    a.add_row_multiple(i, k, -q)?;
                    inv.add_row_multiple(i, k, -q)?;
                }
            }
        }
        Ok(inv)
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b)
        .ok_or(Error::ArithmeticOverflow("integer addition"))
}

pub(crate) fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b)
        .ok_or(Error::ArithmeticOverflow("integer multiplication"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_small() {
        let m = IntMat::from_rows(&[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(m.det().unwrap(), -2);
        let m = IntMat::from_rows(&[vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 5]]).unwrap();
        assert_eq!(m.det().unwrap(), 30);
    }

    #[test]
    fn unimodular_inverse_roundtrip() {
        let m = IntMat::from_rows(&[vec![1, -3], vec![-1, 4]]).unwrap();
        let inv = m.unimodular_inverse().unwrap();
        assert_eq!(m.mul_mat(&inv).unwrap(), IntMat::identity(2));
        assert_eq!(inv.mul_mat(&m).unwrap(), IntMat::identity(2));
    }

    #[test]
    fn overflow_reported() {
        let m = IntMat::from_rows(&[vec![i64::MAX, 1], vec![1, i64::MAX]]).unwrap();
        assert!(matches!(
            m.mul_mat(&m),
            Err(Error::ArithmeticOverflow(_))
        ));
    }
}
