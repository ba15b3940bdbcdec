use super::pcmodel::PcFieldModel;
use crate::linalg::{psd_factor, CMatrix, CVector};
use crate::{Error, Result};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rand_distr::{Distribution, StandardNormal};

/// Axis-aligned inclusive window `a..b` per axis on `Z^n`, enumerated in
/// row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    pub ranges: Vec<(i64, i64)>,
}

impl Window {
    pub fn new(ranges: Vec<(i64, i64)>) -> Result<Self> {
        if ranges.is_empty() || ranges.iter().any(|&(a, b)| a > b) {
            return Err(Error::Parse("empty or inverted window range".into()));
        }
        Ok(Window { ranges })
    }

    /// Parse `"0..8,0..8"` (inclusive on both ends).
    pub fn parse(text: &str) -> Result<Self> {
        let ranges = text
            .split(',')
            .map(|part| {
                let (a, b) = part
                    .split_once("..")
                    .ok_or_else(|| Error::Parse(format!("bad range `{part}`, want a..b")))?;
                let a = a
                    .trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad integer `{a}`")))?;
                let b = b
                    .trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad integer `{b}`")))?;
                Ok((a, b))
            })
            .collect::<Result<Vec<_>>>()?;
        Window::new(ranges)
    }

    pub fn dim(&self) -> usize {
        self.ranges.len()
    }

    pub fn len(&self) -> usize {
        self.ranges
            .iter()
            .map(|&(a, b)| (b - a + 1) as usize)
            .product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, t: &[i64]) -> bool {
        t.len() == self.ranges.len()
            && t.iter()
                .zip(&self.ranges)
                .all(|(&x, &(a, b))| a <= x && x <= b)
    }

    pub fn points(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::with_capacity(self.len());
        let n = self.dim();
        let mut p: Vec<i64> = self.ranges.iter().map(|&(a, _)| a).collect();
        loop {
            out.push(p.clone());
            let mut axis = n;
            loop {
                if axis == 0 {
                    return out;
                }
                axis -= 1;
                if p[axis] < self.ranges[axis].1 {
                    p[axis] += 1;
                    for (a, x) in p.iter_mut().enumerate().skip(axis + 1) {
                        *x = self.ranges[a].0;
                    }
                    break;
                }
            }
        }
    }
}

impl std::fmt::Display for Window {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, (a, b)) in self.ranges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}..{b}")?;
        }
        Ok(())
    }
}

/// Zero-mean complex Gaussian realizations of a model on a window.
#[derive(Debug, Clone)]
pub struct SamplePaths {
    pub points: Vec<Vec<i64>>,
    /// `count × len(points)`, one realization per row.
    pub data: CMatrix,
    pub seed: u64,
}

impl SamplePaths {
    pub fn count(&self) -> usize {
        self.data.nrows()
    }

    pub fn point_index(&self, t: &[i64]) -> Option<usize> {
        self.points.iter().position(|p| p == t)
    }

    /// Empirical covariance entry `(1/count) Σ_p X_p(t_i) conj(X_p(t_j))`.
    pub fn empirical_cov(&self, i: usize, j: usize) -> Complex64 {
        let n = self.count();
        let mut acc = Complex64::new(0.0, 0.0);
        for p in 0..n {
            acc += self.data[(p, i)] * self.data[(p, j)].conj();
        }
        acc / n as f64
    }
}

/// Draw `count` zero-mean circular complex Gaussian paths whose covariance
/// is the model kernel restricted to the window. The Gram matrix is
/// factored through a Hermitian eigendecomposition with eigenvalue floor
/// zero; kernels below `-1e-9·scale` are rejected. Deterministic per seed.
pub fn sample_paths(
    model: &PcFieldModel,
    window: &Window,
    count: usize,
    seed: u64,
) -> Result<SamplePaths> {
    let points = window.points();
    sample_paths_at(model, points, count, seed)
}

pub fn sample_paths_at(
    model: &PcFieldModel,
    points: Vec<Vec<i64>>,
    count: usize,
    seed: u64,
) -> Result<SamplePaths> {
    let n = points.len();
    let mut gram = CMatrix::zeros(n, n);
    let mut scale = 0.0f64;
    for i in 0..n {
        for j in 0..=i {
            let k = model.kernel(&points[i], &points[j])?;
            gram[(i, j)] = k;
            gram[(j, i)] = k.conj();
        }
        scale = scale.max(gram[(i, i)].re);
    }
    let l = psd_factor(&gram, 1e-9 * scale.max(1e-300))?;
    let r = l.ncols();
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let half = std::f64::consts::FRAC_1_SQRT_2;
    let mut data = CMatrix::zeros(count, n);
    let mut z = CVector::zeros(r);
    for p in 0..count {
        for k in 0..r {
            let re: f64 = StandardNormal.sample(&mut rng);
            let im: f64 = StandardNormal.sample(&mut rng);
            z[k] = Complex64::new(re * half, im * half);
        }
        let path = &l * &z;
        for i in 0..n {
            data[(p, i)] = path[i];
        }
    }
    Ok(SamplePaths {
        points,
        data,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::presets;

    #[test]
    fn window_enumeration() {
        let w = Window::parse("0..2,-1..0").unwrap();
        assert_eq!(w.len(), 6);
        let pts = w.points();
        assert_eq!(pts[0], vec![0, -1]);
        assert_eq!(pts[5], vec![2, 0]);
        assert!(w.contains(&[1, 0]));
        assert!(!w.contains(&[3, 0]));
        assert!(Window::parse("3..1").is_err());
    }

    #[test]
    fn deterministic_under_seed() {
        let m = presets::two_pc_amplitude();
        let w = Window::parse("0..5").unwrap();
        let a = sample_paths(&m, &w, 17, 42).unwrap();
        let b = sample_paths(&m, &w, 17, 42).unwrap();
        assert_eq!(a.data, b.data);
        let c = sample_paths(&m, &w, 17, 43).unwrap();
        assert_ne!(a.data, c.data);
    }

    #[test]
    fn zero_field_gives_zero_paths() {
        let m = {
            use crate::lattice::{Frequency, QuotientStructure};
            use crate::model::{PcFieldModel, PeriodicField, SupportSpec, UnitaryRep};
            let rep = UnitaryRep::diagonal(vec![Frequency::new(vec![1.0])]);
            let q = QuotientStructure::from_generators(1, vec![vec![2]]).unwrap();
            let periodic =
                PeriodicField::new(q, 1, Default::default(), SupportSpec::Finite).unwrap();
            PcFieldModel::new(rep, periodic).unwrap()
        };
        let w = Window::parse("0..4").unwrap();
        let s = sample_paths(&m, &w, 3, 7).unwrap();
        assert!(s.data.iter().all(|z| z.norm() == 0.0));
    }

    #[test]
    fn empirical_covariance_converges() {
        // Monte Carlo oracle: max entry error ≤ 5·scale/√count
        let m = presets::two_pc_amplitude();
        let w = Window::parse("0..5").unwrap();
        let count = 20_000;
        let s = sample_paths(&m, &w, count, 1).unwrap();
        let scale = m.scale_on(&w.points()).unwrap();
        let bound = 5.0 * scale / (count as f64).sqrt();
        let mut worst = 0.0f64;
        for i in 0..s.points.len() {
            for j in 0..s.points.len() {
                let emp = s.empirical_cov(i, j);
                let truth = m.kernel(&s.points[i], &s.points[j]).unwrap();
                worst = worst.max((emp - truth).norm());
            }
        }
        assert!(worst <= bound, "worst {worst} > bound {bound}");
    }
}
