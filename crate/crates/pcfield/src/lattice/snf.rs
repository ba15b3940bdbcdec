use super::intmat::IntMat;
use crate::Result;

/// Smith decomposition `U * A * V = S` with `U`, `V` unimodular and `S`
/// diagonal with non-negative entries satisfying `d_i | d_{i+1}`.
#[derive(Debug, Clone)]
pub struct SmithNormalForm {
    pub u: IntMat,
    pub s: IntMat,
    pub v: IntMat,
}

impl SmithNormalForm {
    /// Diagonal of `S`, including zeros.
    pub fn diagonal(&self) -> Vec<i64> {
        let n = self.s.nrows().min(self.s.ncols());
        (0..n).map(|i| self.s[(i, i)]).collect()
    }
}

/// Smith normal form over `Z` with transform tracking. Exact; overflow is
/// an error.
pub fn smith_normal_form(a: &IntMat) -> Result<SmithNormalForm> {
    let m = a.nrows();
    let n = a.ncols();
    let mut s = a.clone();
    let mut u = IntMat::identity(m);
    let mut v = IntMat::identity(n);

    let mut k = 0;
    while k < m.min(n) {
        // Locate the entry of least absolute value in the trailing block.
        let mut piv: Option<(usize, usize)> = None;
        for i in k..m {
            for j in k..n {
                if s[(i, j)] != 0
                    && piv.map_or(true, |(pi, pj)| s[(i, j)].abs() < s[(pi, pj)].abs())
                {
                    piv = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = piv else { break };
        s.swap_rows(pi, k);
        u.swap_rows(pi, k);
        s.swap_cols(pj, k);
        v.swap_cols(pj, k);

        // Reduce row and column k until the pivot is alone, then make the
        // pivot divide the whole trailing block. Each pass strictly
        // shrinks |pivot|, so this terminates.
        'outer: loop {
            let mut dirty = false;
            for i in k + 1..m {
                if s[(i, k)] != 0 {
                    let q = s[(i, k)].div_euclid(s[(k, k)]);
                    s.add_row_multiple(i, k, -q)?;
                    u.add_row_multiple(i, k, -q)?;
                    if s[(i, k)] != 0 {
                        s.swap_rows(i, k);
                        u.swap_rows(i, k);
                        dirty = true;
                    }
                }
            }
            for j in k + 1..n {
                if s[(k, j)] != 0 {
                    let q = s[(k, j)].div_euclid(s[(k, k)]);
                    s.add_col_multiple(j, k, -q)?;
                    v.add_col_multiple(j, k, -q)?;
                    if s[(k, j)] != 0 {
                        s.swap_cols(j, k);
                        v.swap_cols(j, k);
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // Row and column are clean; enforce pivot | trailing block.
            for i in k + 1..m {
                for j in k + 1..n {
                    if s[(i, j)] % s[(k, k)] != 0 {
                        s.add_row_multiple(k, i, 1)?;
                        u.add_row_multiple(k, i, 1)?;
                        continue 'outer;
                    }
                }
            }
            break;
        }
        if s[(k, k)] < 0 {
            s.negate_row(k);
            u.negate_row(k);
        }
        k += 1;
    }
    Ok(SmithNormalForm { u, s, v })
}
