use num_complex::Complex64;
use std::f64::consts::PI;

/// Full turn.
pub const TAU: f64 = 2.0 * PI;

/// Comparison tolerance for angles on the torus, in radians.
pub const EPS_FREQ: f64 = 1e-9;

/// A point of the torus `[0, 2π)^n`. Angles are stored canonically in
/// `[0, 2π)`; values within [`EPS_FREQ`] of `2π` fold to `0`.
#[derive(Debug, Clone, PartialEq)]
pub struct Frequency {
    theta: Vec<f64>,
}

fn canon(x: f64) -> f64 {
    let mut r = x.rem_euclid(TAU);
    if TAU - r < EPS_FREQ {
        r = 0.0;
    }
    r
}

impl Frequency {
    pub fn new(theta: Vec<f64>) -> Self {
        Frequency {
            theta: theta.into_iter().map(canon).collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        Frequency {
            theta: vec![0.0; n],
        }
    }

    pub fn dim(&self) -> usize {
        self.theta.len()
    }

    pub fn theta(&self) -> &[f64] {
        &self.theta
    }

    /// `λ · t` as a plain real number (not reduced mod 2π).
    pub fn dot(&self, t: &[i64]) -> f64 {
        debug_assert_eq!(t.len(), self.theta.len());
        self.theta
            .iter()
            .zip(t)
            .map(|(&a, &k)| a * k as f64)
            .sum()
    }

    /// Character value `⟨λ, t⟩ = e^{-i λ·t}`; unit modulus by construction.
    pub fn character(&self, t: &[i64]) -> Complex64 {
        Complex64::from_polar(1.0, -self.dot(t))
    }

    /// Per-coordinate circular distance, max over coordinates.
    pub fn torus_dist(&self, other: &Frequency) -> f64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.theta
            .iter()
            .zip(&other.theta)
            .map(|(&a, &b)| {
                let d = (a - b).rem_euclid(TAU);
                d.min(TAU - d)
            })
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Frequency) -> bool {
        self.torus_dist(other) <= EPS_FREQ
    }

    pub fn add(&self, other: &Frequency) -> Frequency {
        Frequency::new(
            self.theta
                .iter()
                .zip(&other.theta)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Frequency) -> Frequency {
        Frequency::new(
            self.theta
                .iter()
                .zip(&other.theta)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> Frequency {
        Frequency::new(self.theta.iter().map(|a| -a).collect())
    }

    /// Lexicographic comparison with tolerance `EPS_FREQ` per coordinate.
    pub fn lex_cmp(&self, other: &Frequency) -> std::cmp::Ordering {
        for (a, b) in self.theta.iter().zip(&other.theta) {
            // compare circularly so 2π-ε and 0 tie
            let d = (a - b).rem_euclid(TAU);
            let circ = d.min(TAU - d);
            if circ <= EPS_FREQ {
                continue;
            }
            return a.partial_cmp(b).unwrap();
        }
        std::cmp::Ordering::Equal
    }
}

impl std::fmt::Display for Frequency {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, t) in self.theta.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t:.12}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn character_example() {
        // λ=(π, 2π/3), t=(1,1) -> e^{-i 5π/3} = 1/2 + i √3/2
        let lam = Frequency::new(vec![PI, 2.0 * PI / 3.0]);
        let z = lam.character(&[1, 1]);
        assert!((z.re - 0.5).abs() < 1e-12);
        assert!((z.im - 3f64.sqrt() / 2.0).abs() < 1e-12);
        assert!((z.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn character_at_zero_is_one() {
        let lam = Frequency::new(vec![0.37, 5.1, 2.9]);
        let z = lam.character(&[0, 0, 0]);
        assert!((z - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn canonicalization_wraps() {
        let lam = Frequency::new(vec![-0.5, TAU + 0.25, TAU - 1e-12]);
        assert!((lam.theta()[0] - (TAU - 0.5)).abs() < 1e-12);
        assert!((lam.theta()[1] - 0.25).abs() < 1e-12);
        assert_eq!(lam.theta()[2], 0.0);
    }

    #[test]
    fn torus_distance_wraps() {
        let a = Frequency::new(vec![1e-10]);
        let b = Frequency::new(vec![TAU - 1e-10]);
        assert!(a.torus_dist(&b) < 1e-9);
        assert!(a.approx_eq(&b));
    }
}
