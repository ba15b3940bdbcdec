use super::quotient::QuotientStructure;
use crate::Result;
use num_complex::Complex64;
use std::collections::BTreeMap;

/// Weil's summation identity for a finitely supported `f` on `Z^n`:
/// the coset-by-coset double sum on the left must equal the plain sum
/// over the group on the right. Both sides are returned for the caller's
/// equality assertion; with counting Haar on `G` and `K` the identity is
/// exact.
///
/// The left side enumerates `K` inside the support's bounding box shifted
/// by each coset representative, which is exhaustive because `f` vanishes
/// outside the box.
pub fn weil_check(
    f: &BTreeMap<Vec<i64>, Complex64>,
    q: &QuotientStructure,
) -> Result<(Complex64, Complex64)> {
    let rhs: Complex64 = f.values().sum();
    if f.is_empty() {
        return Ok((Complex64::new(0.0, 0.0), rhs));
    }
    let n = q.ambient_dim();
    let mut lo = vec![i64::MAX; n];
    let mut hi = vec![i64::MIN; n];
    for t in f.keys() {
        for i in 0..n {
            lo[i] = lo[i].min(t[i]);
            hi[i] = hi[i].max(t[i]);
        }
    }
    // distinct cosets meeting the support, by canonical representative
    let mut reps: Vec<Vec<i64>> = Vec::new();
    for t in f.keys() {
        let r = q.canonical_rep(t)?;
        if !reps.contains(&r) {
            reps.push(r);
        }
    }
    let mut lhs = Complex64::new(0.0, 0.0);
    for s in &reps {
        // k ∈ K with k + s inside the bounding box
        let k_lo: Vec<i64> = lo.iter().zip(s).map(|(a, b)| a - b).collect();
        let k_hi: Vec<i64> = hi.iter().zip(s).map(|(a, b)| a - b).collect();
        for k in q.subgroup().elements_in_box(&k_lo, &k_hi)? {
            let point: Vec<i64> = k.iter().zip(s).map(|(a, b)| a + b).collect();
            if let Some(v) = f.get(&point) {
                lhs += v;
            }
        }
    }
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quotient_2x3() -> QuotientStructure {
        QuotientStructure::from_generators(2, vec![vec![2, 0], vec![0, 3]]).unwrap()
    }

    #[test]
    fn indicator_of_origin() {
        let q = quotient_2x3();
        let mut f = BTreeMap::new();
        f.insert(vec![0, 0], Complex64::new(1.0, 0.0));
        let (lhs, rhs) = weil_check(&f, &q).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(rhs, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn ones_on_box() {
        // direct double count oracle: 36 points, 6 cosets × 6 lattice hits
        let q = quotient_2x3();
        let mut f = BTreeMap::new();
        for a in 0..=5 {
            for b in 0..=5 {
                f.insert(vec![a, b], Complex64::new(1.0, 0.0));
            }
        }
        let (lhs, rhs) = weil_check(&f, &q).unwrap();
        assert_eq!(rhs, Complex64::new(36.0, 0.0));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn infinite_quotient_support() {
        let q = QuotientStructure::from_generators(2, vec![vec![12, 9]]).unwrap();
        let mut f = BTreeMap::new();
        for (i, t) in [
            vec![0, 0],
            vec![1, -4],
            vec![12, 9],
            vec![13, 5],
            vec![-11, -13],
            vec![24, 18],
        ]
        .into_iter()
        .enumerate()
        {
            f.insert(t, Complex64::new(1.0 + i as f64, (i as f64) - 2.0));
        }
        let (lhs, rhs) = weil_check(&f, &q).unwrap();
        assert!((lhs - rhs).norm() < 1e-12);
    }
}
