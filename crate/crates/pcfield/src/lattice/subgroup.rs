use super::intmat::IntMat;
use crate::{Error, Result};

/// A subgroup `K` of `Z^n`, presented by generator rows. Generators may be
/// redundant; zero rows are rejected. The empty presentation is the
/// trivial subgroup `{0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeSubgroup {
    n: usize,
    generators: IntMat,
    /// Row-echelon basis of the row span (positive pivots, pivot columns
    /// strictly increasing). Used for membership tests and canonical coset
    /// representatives.
    echelon: IntMat,
    pivots: Vec<usize>,
}

impl LatticeSubgroup {
    pub fn new(n: usize, generators: Vec<Vec<i64>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSubgroup("ambient dimension must be positive".into()));
        }
        for g in &generators {
            if g.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "generator {g:?} has length {} in Z^{n}",
                    g.len()
                )));
            }
            if g.iter().all(|&x| x == 0) {
                return Err(Error::InvalidSubgroup("zero generator row".into()));
            }
        }
        let generators = if generators.is_empty() {
            IntMat::zeros(0, n)
        } else {
            IntMat::from_rows(&generators)?
        };
        let (echelon, pivots) = row_echelon(&generators, n)?;
        Ok(LatticeSubgroup {
            n,
            generators,
            echelon,
            pivots,
        })
    }

    /// Full group `K = Z^n`.
    pub fn full(n: usize) -> Self {
        let gens = (0..n)
            .map(|i| {
                let mut row = vec![0i64; n];
                row[i] = 1;
                row
            })
            .collect();
        Self::new(n, gens).unwrap()
    }

    /// Parse `"12,9"` or `"2,0;0,3"` into generator rows.
    pub fn parse(text: &str) -> Result<Self> {
        let rows: Vec<Vec<i64>> = text
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|tok| {
                        tok.trim()
                            .parse::<i64>()
                            .map_err(|_| Error::Parse(format!("bad integer `{}`", tok.trim())))
                    })
                    .collect::<Result<Vec<i64>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::Parse("empty generator matrix".into()));
        }
        let n = rows[0].len();
        Self::new(n, rows)
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &IntMat {
        &self.generators
    }

    pub fn generator_rows(&self) -> Vec<Vec<i64>> {
        self.generators.rows_vec()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Exact membership test `t ∈ K`.
    pub fn contains(&self, t: &[i64]) -> Result<bool> {
        Ok(self.reduce(t)?.iter().all(|&x| x == 0))
    }

    /// Canonical coset representative: greedy reduction of `t` by the
    /// echelon basis, leaving each pivot coordinate in `[0, pivot)`.
    /// Representatives are unique per coset and `reduce(0) = 0`.
    pub fn reduce(&self, t: &[i64]) -> Result<Vec<i64>> {
        assert_eq!(t.len(), self.n);
        let mut out = t.to_vec();
        for (row, &pc) in self.pivots.iter().enumerate() {
            let p = self.echelon[(row, pc)];
            let q = out[pc].div_euclid(p);
            if q != 0 {
                for j in 0..self.n {
                    out[j] = super::intmat::add(
                        out[j],
                        super::intmat::mul(-q, self.echelon[(row, j)])?,
                    )?;
                }
            }
        }
        Ok(out)
    }

    /// Enumerate the elements of `K` lying in the inclusive box
    /// `[lo_i, hi_i]` per axis. Desk-scale brute force over the box.
    pub fn elements_in_box(&self, lo: &[i64], hi: &[i64]) -> Result<Vec<Vec<i64>>> {
        assert_eq!(lo.len(), self.n);
        assert_eq!(hi.len(), self.n);
        let mut out = Vec::new();
        let mut point = lo.to_vec();
        loop {
            if self.contains(&point)? {
                out.push(point.clone());
            }
            // odometer
            let mut axis = self.n;
            loop {
                if axis == 0 {
                    return Ok(out);
                }
                axis -= 1;
                if point[axis] < hi[axis] {
                    point[axis] += 1;
                    for (a, p) in point.iter_mut().enumerate().skip(axis + 1) {
                        *p = lo[a];
                    }
                    break;
                }
            }
        }
    }
}

/// Integer row echelon form of the row span: unimodular row operations
/// only, pivots positive, pivot columns strictly increasing, zero rows
/// dropped.
fn row_echelon(a: &IntMat, n: usize) -> Result<(IntMat, Vec<usize>)> {
    let m = a.nrows();
    let mut w = a.clone();
    let mut row = 0usize;
    let mut pivots = Vec::new();
    for col in 0..n {
        // gcd descent within this column, rows >= row
        loop {
            let mut piv: Option<usize> = None;
            for i in row..m {
                if w[(i, col)] != 0
                    && piv.map_or(true, |p: usize| w[(i, col)].abs() < w[(p, col)].abs())
                {
                    piv = Some(i);
                }
            }
            let Some(p) = piv else { break };
            w.swap_rows(p, row);
            let mut clean = true;
            for i in row + 1..m {
                if w[(i, col)] != 0 {
                    let q = w[(i, col)].div_euclid(w[(row, col)]);
                    w.add_row_multiple(i, row, -q)?;
                    if w[(i, col)] != 0 {
                        clean = false;
                    }
                }
            }
            if clean {
                if w[(row, col)] < 0 {
                    w.negate_row(row);
                }
                pivots.push(col);
                row += 1;
                break;
            }
        }
        if row == m {
            break;
        }
    }
    let rows: Vec<Vec<i64>> = (0..row).map(|i| w.row(i).to_vec()).collect();
    Ok((IntMat::from_rows(&rows)?, pivots))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_diag() {
        let k = LatticeSubgroup::new(2, vec![vec![2, 0], vec![0, 3]]).unwrap();
        assert!(k.contains(&[2, 3]).unwrap());
        assert!(k.contains(&[-4, 9]).unwrap());
        assert!(!k.contains(&[1, 3]).unwrap());
        assert!(!k.contains(&[2, 2]).unwrap());
        assert_eq!(k.rank(), 2);
    }

    #[test]
    fn membership_line() {
        let k = LatticeSubgroup::new(2, vec![vec![12, 9]]).unwrap();
        assert!(k.contains(&[0, 0]).unwrap());
        assert!(k.contains(&[12, 9]).unwrap());
        assert!(k.contains(&[-24, -18]).unwrap());
        assert!(!k.contains(&[12, 8]).unwrap());
        assert!(!k.contains(&[4, 3]).unwrap());
        assert_eq!(k.rank(), 1);
    }

    #[test]
    fn zero_rows_rejected() {
        assert!(LatticeSubgroup::new(2, vec![vec![0, 0]]).is_err());
    }

    #[test]
    fn reduce_is_coset_invariant() {
        let k = LatticeSubgroup::new(2, vec![vec![12, 9]]).unwrap();
        let r1 = k.reduce(&[5, 7]).unwrap();
        let r2 = k.reduce(&[5 + 24, 7 + 18]).unwrap();
        assert_eq!(r1, r2);
        let diff: Vec<i64> = r1.iter().zip(&[5i64, 7]).map(|(a, b)| a - b).collect();
        assert!(k.contains(&diff).unwrap());
    }

    #[test]
    fn parse_forms() {
        let k = LatticeSubgroup::parse("2,0;0,3").unwrap();
        assert_eq!(k.ambient_dim(), 2);
        assert_eq!(k.generators().nrows(), 2);
        let k = LatticeSubgroup::parse("12,9").unwrap();
        assert_eq!(k.generators().nrows(), 1);
        assert!(LatticeSubgroup::parse("").is_err());
        assert!(LatticeSubgroup::parse("1,x").is_err());
    }

    #[test]
    fn box_enumeration_matches_membership() {
        let k = LatticeSubgroup::new(2, vec![vec![2, 0], vec![0, 3]]).unwrap();
        let els = k.elements_in_box(&[-4, -4], &[4, 4]).unwrap();
        assert!(els.contains(&vec![0, 0]));
        assert!(els.contains(&vec![2, -3]));
        assert_eq!(els.len(), 5 * 3); // m in {-4,-2,0,2,4}, n in {-3,0,3}
    }
}
