use crate::{Error, Result};

/// Bezout data for a one-generator subgroup `K = {k(T,S)}` of `Z^2`:
/// `d = gcd(T,S)`, `(T,S) = d(T1,S1)`, and integers `p, q` with
/// `T1 q − S1 p = 1`, so `Φ = [[T1, p], [S1, q]]` is unimodular with
/// `φ(d, 0) = (T, S)` for `φ(m,n) = (m,n)Φ'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BezoutPhi {
    pub d: i64,
    pub t1: i64,
    pub s1: i64,
    pub p: i64,
    pub q: i64,
}

impl BezoutPhi {
    /// `Φ` as rows.
    pub fn phi(&self) -> [[i64; 2]; 2] {
        [[self.t1, self.p], [self.s1, self.q]]
    }

    /// `Φ^{-1}` as rows (determinant is one).
    pub fn phi_inv(&self) -> [[i64; 2]; 2] {
        [[self.q, -self.p], [-self.s1, self.t1]]
    }

    /// `φ(m, n) = (m, n) Φ' = (m T1 + n p, m S1 + n q)`.
    pub fn apply(&self, m: i64, n: i64) -> (i64, i64) {
        (m * self.t1 + n * self.p, m * self.s1 + n * self.q)
    }

    /// Inverse index map `(m, n) ↦ (m, n)(Φ')^{-1}`.
    pub fn apply_inv(&self, m: i64, n: i64) -> (i64, i64) {
        (m * self.q - n * self.p, -m * self.s1 + n * self.t1)
    }
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    // returns (g, x, y) with a x + b y = g, g >= 0
    if b == 0 {
        if a >= 0 {
            (a, 1, 0)
        } else {
            (-a, -1, 0)
        }
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// Deterministic Bezout pair for the period vector `(T, S)`: extended
/// Euclid, then `p` shifted into `[0, |T1|)` along the solution family
/// `(p + k T1, q + k S1)`.
pub fn bezout_phi(t: i64, s: i64) -> Result<BezoutPhi> {
    if t == 0 && s == 0 {
        return Err(Error::InvalidSubgroup(
            "period (0,0) does not generate a subgroup".into(),
        ));
    }
    if t <= 0 && s <= 0 {
        return Err(Error::InvalidSubgroup(
            "at least one of T, S must be positive".into(),
        ));
    }
    let (d, _, _) = ext_gcd(t, s);
    let t1 = t / d;
    let s1 = s / d;
    // T1 q - S1 p = 1  <=>  T1 q + S1 (-p) = 1
    let (g, x, y) = ext_gcd(t1, s1);
    debug_assert_eq!(g, 1);
    let mut q = x;
    let mut p = -y;
    if t1 != 0 {
        // canonicalize p into [0, |T1|)
        let k = -p.div_euclid(t1.abs()) * t1.signum();
        p += k * t1;
        q += k * s1;
    } else {
        // T1 = 0 forces S1 = ±1 and p = -S1; canonicalize q to 0
        let k = -q.div_euclid(s1.abs()) * s1.signum();
        p += k * t1;
        q += k * s1;
    }
    debug_assert_eq!(t1 * q - s1 * p, 1);
    Ok(BezoutPhi { d, t1, s1, p, q })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_12_9() {
        let b = bezout_phi(12, 9).unwrap();
        assert_eq!((b.d, b.t1, b.s1, b.p, b.q), (3, 4, 3, 1, 1));
        assert_eq!(b.t1 * b.q - b.s1 * b.p, 1);
    }

    #[test]
    fn example_1_0() {
        let b = bezout_phi(1, 0).unwrap();
        assert_eq!((b.d, b.t1, b.s1, b.p, b.q), (1, 1, 0, 0, 1));
    }

    #[test]
    fn example_5_3() {
        // extended-Euclid oracle: 5*2 - 3*3 = 1
        let b = bezout_phi(5, 3).unwrap();
        assert_eq!((b.p, b.q), (3, 2));
        assert_eq!(5 * b.q - 3 * b.p, 1);
    }

    #[test]
    fn zero_rejected() {
        assert!(bezout_phi(0, 0).is_err());
    }

    #[test]
    fn phi_is_unimodular_and_maps_d0() {
        for (t, s) in [(12, 9), (1, 0), (0, 1), (5, 3), (2, 2), (4, 14), (-4, 6), (7, -3)] {
            let b = bezout_phi(t, s).unwrap();
            let det = b.t1 * b.q - b.s1 * b.p;
            assert_eq!(det, 1, "det Φ != 1 for ({t},{s})");
            // Φ maps (d,0) to (T,S)
            assert_eq!(b.apply(b.d, 0), (t, s));
            // p canonical
            if b.t1 != 0 {
                assert!(0 <= b.p && b.p < b.t1.abs(), "p out of range for ({t},{s})");
            }
            // inverse index map round-trips
            for (m, n) in [(0, 0), (3, -2), (-7, 5)] {
                let (a, c) = b.apply(m, n);
                assert_eq!(b.apply_inv(a, c), (m, n));
            }
        }
    }
}
