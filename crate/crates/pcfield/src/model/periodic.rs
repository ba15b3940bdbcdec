use crate::lattice::{QuotientCoord, QuotientStructure};
use crate::linalg::CVector;
use crate::{Error, Result};
use num_complex::Complex64;
use std::collections::BTreeMap;

/// What the stored table of a periodic field means beyond its finite
/// support, on an infinite quotient.
#[derive(Debug, Clone, PartialEq)]
pub enum SupportSpec {
    /// Values outside the table are exactly zero.
    Finite,
    /// The field obeys `‖P_K(x)‖ ≤ constant · rho^{|free(x)|_1}`; sums
    /// beyond the table carry certified geometric tail bounds.
    Envelope { constant: f64, rho: f64 },
    /// Nothing is known outside the table; evaluating there is an error
    /// and integrability questions are undecidable.
    Undeclared,
}

/// A `K`-periodic field on `Z^n` presented through the quotient: a table
/// of vectors over quotient coordinates. `P(t)` depends on `t` only
/// through `ı(t)` by construction.
#[derive(Debug, Clone)]
pub struct PeriodicField {
    quotient: QuotientStructure,
    dim: usize,
    values: BTreeMap<QuotientCoord, CVector>,
    support: SupportSpec,
}

impl PeriodicField {
    pub fn new(
        quotient: QuotientStructure,
        dim: usize,
        values: BTreeMap<QuotientCoord, CVector>,
        support: SupportSpec,
    ) -> Result<Self> {
        for (x, v) in &values {
            validate_coord(&quotient, x)?;
            if v.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "periodic value at {} has length {}, expected {dim}",
                    x.key(),
                    v.len()
                )));
            }
        }
        let support = if quotient.is_finite() {
            SupportSpec::Finite
        } else {
            support
        };
        if let SupportSpec::Envelope { constant, rho } = &support {
            if !(*rho > 0.0) || !(*constant >= 0.0) {
                return Err(Error::Parse(format!(
                    "invalid envelope: constant {constant}, rho {rho}"
                )));
            }
            for (x, v) in &values {
                let bound = constant * rho.powi(free_norm(x) as i32);
                if v.norm() > bound + 1e-12 * (1.0 + bound) {
                    return Err(Error::Parse(format!(
                        "stored value at {} exceeds its envelope: {} > {bound}",
                        x.key(),
                        v.norm()
                    )));
                }
            }
        }
        Ok(PeriodicField {
            quotient,
            dim,
            values,
            support,
        })
    }

    /// Constant field `P ≡ p` on the trivial quotient of `K = Z^n`.
    pub fn constant(quotient: QuotientStructure, p: CVector) -> Result<Self> {
        if quotient.order() != Some(1) {
            return Err(Error::InvalidSubgroup(
                "constant periodic field expects the full subgroup K = Z^n".into(),
            ));
        }
        let dim = p.len();
        let mut values = BTreeMap::new();
        values.insert(quotient.coord_zero(), p);
        Self::new(quotient, dim, values, SupportSpec::Finite)
    }

    pub fn quotient(&self) -> &QuotientStructure {
        &self.quotient
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn support(&self) -> &SupportSpec {
        &self.support
    }

    pub fn stored(&self) -> &BTreeMap<QuotientCoord, CVector> {
        &self.values
    }

    /// Value at a quotient coordinate. Outside the table this is zero for
    /// declared supports and an error for [`SupportSpec::Undeclared`].
    pub fn value(&self, x: &QuotientCoord) -> Result<CVector> {
        if let Some(v) = self.values.get(x) {
            return Ok(v.clone());
        }
        match self.support {
            SupportSpec::Undeclared => Err(Error::MissingPeriodicValue(x.key())),
            _ => Ok(CVector::zeros(self.dim)),
        }
    }

    pub fn eval(&self, t: &[i64]) -> Result<CVector> {
        let x = self.quotient.to_quotient(t)?;
        self.value(&x)
    }

    /// Largest `|free|_1` over the stored table.
    pub fn free_radius(&self) -> i64 {
        self.values.keys().map(free_norm).max().unwrap_or(0)
    }

    /// `Σ_x ‖P_K(x)‖²` over the stored table (counting measure).
    pub fn counting_norm_sq(&self) -> f64 {
        self.values.values().map(|v| v.norm_squared()).sum()
    }

    /// Certified bound on `Σ C ρ^{|l|} · C ρ^{|l+shift|}` over free parts
    /// `l` with `|l|_1 > radius`; zero for finite support.
    pub fn pair_tail_bound(&self, radius: i64, shift: &[i64]) -> f64 {
        match &self.support {
            SupportSpec::Finite => 0.0,
            SupportSpec::Undeclared => f64::INFINITY,
            SupportSpec::Envelope { constant, rho } => {
                if *rho >= 1.0 {
                    return f64::INFINITY;
                }
                let f = self.quotient.free_rank();
                let shift_norm: i64 = shift.iter().map(|x| x.abs()).sum();
                let c2 = constant * constant * rho.powi(-(shift_norm as i32));
                c2 * geometric_shell_tail(f, *rho * *rho, radius)
            }
        }
    }
}

fn free_norm(x: &QuotientCoord) -> i64 {
    x.free.iter().map(|v| v.abs()).sum()
}

/// `Σ_{m > radius} #{l ∈ Z^f : |l|_1 = m} · r^m`, summed numerically
/// (converges geometrically for `r < 1`).
fn geometric_shell_tail(f: usize, r: f64, radius: i64) -> f64 {
    if f == 0 {
        return 0.0;
    }
    let mut total = 0.0;
    let mut m = radius + 1;
    loop {
        let count = shell_count(f, m);
        let term = count * r.powi(m as i32);
        total += term;
        if term < 1e-300 * total.max(1.0) || m > radius + 20_000 {
            break;
        }
        m += 1;
    }
    total
}

fn shell_count(f: usize, m: i64) -> f64 {
    // number of integer points with |l|_1 = m in Z^f; crude closed forms
    // suffice for the bound
    match f {
        1 => {
            if m == 0 {
                1.0
            } else {
                2.0
            }
        }
        _ => {
            // upper bound 2^f · C(m+f-1, f-1)
            let mut c = 1.0f64;
            for i in 0..f - 1 {
                c *= (m + 1 + i as i64) as f64 / (i as f64 + 1.0);
            }
            (1 << f) as f64 * c
        }
    }
}

fn validate_coord(q: &QuotientStructure, x: &QuotientCoord) -> Result<()> {
    if x.torsion.len() != q.torsion().len() || x.free.len() != q.free_rank() {
        return Err(Error::DimensionMismatch(format!(
            "coordinate {} does not match quotient shape",
            x.key()
        )));
    }
    for (&r, &d) in x.torsion.iter().zip(q.torsion()) {
        if r < 0 || r >= d {
            return Err(Error::Parse(format!(
                "torsion residue {r} out of range [0,{d}) in {}",
                x.key()
            )));
        }
    }
    Ok(())
}

/// A scalar `K`-periodic function, tabulated over quotient coordinates.
#[derive(Debug, Clone)]
pub struct PeriodicScalar {
    quotient: QuotientStructure,
    values: BTreeMap<QuotientCoord, Complex64>,
    support: SupportSpec,
}

impl PeriodicScalar {
    pub fn new(
        quotient: QuotientStructure,
        values: BTreeMap<QuotientCoord, Complex64>,
        support: SupportSpec,
    ) -> Result<Self> {
        for x in values.keys() {
            validate_coord(&quotient, x)?;
        }
        let support = if quotient.is_finite() {
            SupportSpec::Finite
        } else {
            support
        };
        Ok(PeriodicScalar {
            quotient,
            values,
            support,
        })
    }

    /// Tabulate `g` over the quotient through the canonical section, out
    /// to `|free|_1 ≤ radius`, then verify `g(t) = g_K(ı(t))` on the given
    /// window; failure means `g` is not `K`-periodic.
    pub fn from_fn_checked(
        quotient: QuotientStructure,
        radius: i64,
        g: impl Fn(&[i64]) -> Complex64,
        window: &[Vec<i64>],
    ) -> Result<Self> {
        let mut values = BTreeMap::new();
        for x in coords_within(&quotient, radius)? {
            let xi = quotient.section(&x)?;
            values.insert(x, g(&xi));
        }
        let table = PeriodicScalar::new(quotient, values, SupportSpec::Finite)?;
        let mut max_violation = 0.0f64;
        let mut worst = String::new();
        for t in window {
            let x = table.quotient.to_quotient(t)?;
            if let Some(v) = table.values.get(&x) {
                let d = (g(t) - v).norm();
                if d > max_violation {
                    max_violation = d;
                    worst = format!("{t:?}");
                }
            }
        }
        if max_violation > 1e-10 {
            return Err(Error::NotKPeriodic {
                max_violation,
                at: worst,
            });
        }
        Ok(table)
    }

    pub fn quotient(&self) -> &QuotientStructure {
        &self.quotient
    }

    pub fn support(&self) -> &SupportSpec {
        &self.support
    }

    pub fn stored(&self) -> &BTreeMap<QuotientCoord, Complex64> {
        &self.values
    }

    pub fn value(&self, x: &QuotientCoord) -> Result<Complex64> {
        if let Some(v) = self.values.get(x) {
            return Ok(*v);
        }
        match self.support {
            SupportSpec::Undeclared => Err(Error::MissingPeriodicValue(x.key())),
            _ => Ok(Complex64::new(0.0, 0.0)),
        }
    }
}

/// An integer-vector-valued `K`-periodic time deformation.
#[derive(Debug, Clone)]
pub struct PeriodicDeformation {
    quotient: QuotientStructure,
    values: BTreeMap<QuotientCoord, Vec<i64>>,
}

impl PeriodicDeformation {
    pub fn from_fn_checked(
        quotient: QuotientStructure,
        radius: i64,
        g: impl Fn(&[i64]) -> Vec<i64>,
        window: &[Vec<i64>],
    ) -> Result<Self> {
        let n = quotient.ambient_dim();
        let mut values = BTreeMap::new();
        for x in coords_within(&quotient, radius)? {
            let xi = quotient.section(&x)?;
            let v = g(&xi);
            if v.len() != n {
                return Err(Error::DimensionMismatch(
                    "deformation value has wrong dimension".into(),
                ));
            }
            values.insert(x, v);
        }
        for t in window {
            let x = quotient.to_quotient(t)?;
            if let Some(v) = values.get(&x) {
                if &g(t) != v {
                    return Err(Error::NotKPeriodic {
                        max_violation: 1.0,
                        at: format!("{t:?}"),
                    });
                }
            }
        }
        Ok(PeriodicDeformation { quotient, values })
    }

    pub fn quotient(&self) -> &QuotientStructure {
        &self.quotient
    }

    pub fn stored(&self) -> &BTreeMap<QuotientCoord, Vec<i64>> {
        &self.values
    }

    pub fn value(&self, x: &QuotientCoord) -> Result<&Vec<i64>> {
        self.values
            .get(x)
            .ok_or_else(|| Error::MissingPeriodicValue(x.key()))
    }
}

/// All quotient coordinates with `|free|_1 ≤ radius` (all of them when the
/// quotient is finite).
pub(crate) fn coords_within(q: &QuotientStructure, radius: i64) -> Result<Vec<QuotientCoord>> {
    if q.is_finite() {
        return q.enumerate();
    }
    let f = q.free_rank();
    let mut free_parts: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..f {
        let mut next = Vec::new();
        for part in &free_parts {
            let used: i64 = part.iter().map(|x| x.abs()).sum();
            for v in -(radius - used)..=(radius - used) {
                let mut p = part.clone();
                p.push(v);
                next.push(p);
            }
        }
        free_parts = next;
    }
    free_parts.retain(|p| p.iter().map(|x| x.abs()).sum::<i64>() <= radius);
    let mut torsion_combos: Vec<Vec<i64>> = vec![vec![]];
    for &d in q.torsion() {
        let mut next = Vec::new();
        for c in &torsion_combos {
            for r in 0..d {
                let mut c2 = c.clone();
                c2.push(r);
                next.push(c2);
            }
        }
        torsion_combos = next;
    }
    let mut out = Vec::new();
    for t in &torsion_combos {
        for fr in &free_parts {
            out.push(QuotientCoord {
                torsion: t.clone(),
                free: fr.clone(),
            });
        }
    }
    Ok(out)
}
