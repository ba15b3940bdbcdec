use super::intmat::{add, mul, IntMat};
use super::snf::{smith_normal_form, SmithNormalForm};
use super::subgroup::LatticeSubgroup;
use crate::{Error, Result};

/// Coordinates of a point of `G/K`: residues modulo the invariant factors
/// plus free integer coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuotientCoord {
    pub torsion: Vec<i64>,
    pub free: Vec<i64>,
}

impl QuotientCoord {
    pub fn is_zero(&self) -> bool {
        self.torsion.iter().all(|&x| x == 0) && self.free.iter().all(|&x| x == 0)
    }

    /// Stable string key, `"t1,t2|f1,f2"` with the bar omitted when either
    /// part is empty.
    pub fn key(&self) -> String {
        let t: Vec<String> = self.torsion.iter().map(|x| x.to_string()).collect();
        let f: Vec<String> = self.free.iter().map(|x| x.to_string()).collect();
        match (t.is_empty(), f.is_empty()) {
            (true, true) => "0".into(),
            (false, true) => t.join(","),
            (true, false) => f.join(","),
            (false, false) => format!("{}|{}", t.join(","), f.join(",")),
        }
    }

    pub fn parse(key: &str, torsion_len: usize, free_len: usize) -> Result<Self> {
        if torsion_len == 0 && free_len == 0 {
            return Ok(QuotientCoord {
                torsion: vec![],
                free: vec![],
            });
        }
        let (t_part, f_part) = match key.split_once('|') {
            Some((a, b)) => (a, b),
            None if torsion_len == 0 => ("", key),
            None => (key, ""),
        };
        let parse_list = |s: &str| -> Result<Vec<i64>> {
            if s.is_empty() {
                return Ok(vec![]);
            }
            s.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad coordinate `{tok}`")))
                })
                .collect()
        };
        let torsion = parse_list(t_part)?;
        let free = parse_list(f_part)?;
        if torsion.len() != torsion_len || free.len() != free_len {
            return Err(Error::Parse(format!(
                "coordinate `{key}` does not match quotient shape ({torsion_len} torsion, {free_len} free)"
            )));
        }
        Ok(QuotientCoord { torsion, free })
    }
}

/// The quotient `Z^n / K` presented through the Smith normal form of the
/// generator matrix: invariant factors (torsion), free rank, a unimodular
/// change of coordinates, and a canonical cross-section.
#[derive(Debug, Clone)]
pub struct QuotientStructure {
    subgroup: LatticeSubgroup,
    snf: SmithNormalForm,
    v_inv: IntMat,
    torsion: Vec<i64>,
    /// positions in Smith coordinates carrying each torsion factor
    torsion_pos: Vec<usize>,
    free_pos: Vec<usize>,
    per_axis: Option<Vec<i64>>,
}

impl QuotientStructure {
    pub fn new(subgroup: LatticeSubgroup) -> Result<Self> {
        let n = subgroup.ambient_dim();
        let snf = smith_normal_form(subgroup.generators())?;
        let v_inv = snf.v.unimodular_inverse()?;
        let diag = snf.diagonal();
        let mut torsion = Vec::new();
        let mut torsion_pos = Vec::new();
        let mut free_pos = Vec::new();
        for j in 0..n {
            let s = if j < diag.len() { diag[j] } else { 0 };
            match s {
                0 => free_pos.push(j),
                1 => {}
                d => {
                    torsion.push(d);
                    torsion_pos.push(j);
                }
            }
        }
        let g = subgroup.generators();
        let per_axis = if g.nrows() == n && g.is_diagonal() && (0..n).all(|i| g[(i, i)] != 0) {
            Some((0..n).map(|i| g[(i, i)].abs()).collect())
        } else {
            None
        };
        Ok(QuotientStructure {
            subgroup,
            snf,
            v_inv,
            torsion,
            torsion_pos,
            free_pos,
            per_axis,
        })
    }

    pub fn from_generators(n: usize, generators: Vec<Vec<i64>>) -> Result<Self> {
        Self::new(LatticeSubgroup::new(n, generators)?)
    }

    pub fn subgroup(&self) -> &LatticeSubgroup {
        &self.subgroup
    }

    pub fn ambient_dim(&self) -> usize {
        self.subgroup.ambient_dim()
    }

    /// Invariant factors `d_1 | d_2 | …`, each at least 2.
    pub fn torsion(&self) -> &[i64] {
        &self.torsion
    }

    /// Per-axis residues when the generator matrix is diagonal; the Smith
    /// invariant factors remain the canonical form.
    pub fn per_axis(&self) -> Option<&[i64]> {
        self.per_axis.as_deref()
    }

    pub fn free_rank(&self) -> usize {
        self.free_pos.len()
    }

    pub fn is_finite(&self) -> bool {
        self.free_pos.is_empty()
    }

    /// Size of the torsion part `∏ d_i` (the full quotient order when the
    /// free rank is zero).
    pub fn torsion_order(&self) -> i64 {
        self.torsion.iter().product()
    }

    pub fn order(&self) -> Option<i64> {
        self.is_finite().then(|| self.torsion_order())
    }

    pub(crate) fn snf(&self) -> &SmithNormalForm {
        &self.snf
    }

    pub(crate) fn torsion_positions(&self) -> &[usize] {
        &self.torsion_pos
    }

    pub(crate) fn free_positions(&self) -> &[usize] {
        &self.free_pos
    }

    /// Natural homomorphism `ı : Z^n -> G/K` in quotient coordinates.
    pub fn to_quotient(&self, t: &[i64]) -> Result<QuotientCoord> {
        let y = self.snf.v.row_vec_mul(t)?; // y = t · V
        let torsion = self
            .torsion_pos
            .iter()
            .zip(&self.torsion)
            .map(|(&p, &d)| y[p].rem_euclid(d))
            .collect();
        let free = self.free_pos.iter().map(|&p| y[p]).collect();
        Ok(QuotientCoord { torsion, free })
    }

    /// Canonical cross-section `ξ : G/K -> Z^n` — the unique
    /// echelon-reduced representative of the coset. Satisfies
    /// `ξ(0) = 0` and `ı ∘ ξ = id`.
    pub fn section(&self, x: &QuotientCoord) -> Result<Vec<i64>> {
        let n = self.ambient_dim();
        let mut y = vec![0i64; n];
        for (&p, &r) in self.torsion_pos.iter().zip(&x.torsion) {
            y[p] = r;
        }
        for (&p, &f) in self.free_pos.iter().zip(&x.free) {
            y[p] = f;
        }
        let raw = self.v_inv.row_vec_mul(&y)?; // t = y · V^{-1}
        self.subgroup.reduce(&raw)
    }

    /// Canonical representative of the coset of `t`, equal to
    /// `section(to_quotient(t))`.
    pub fn canonical_rep(&self, t: &[i64]) -> Result<Vec<i64>> {
        self.subgroup.reduce(t)
    }

    pub fn coord_zero(&self) -> QuotientCoord {
        QuotientCoord {
            torsion: vec![0; self.torsion.len()],
            free: vec![0; self.free_pos.len()],
        }
    }

    pub fn coord_add(&self, a: &QuotientCoord, b: &QuotientCoord) -> Result<QuotientCoord> {
        let torsion = a
            .torsion
            .iter()
            .zip(&b.torsion)
            .zip(&self.torsion)
            .map(|((&x, &y), &d)| Ok(add(x, y)?.rem_euclid(d)))
            .collect::<Result<Vec<i64>>>()?;
        let free = a
            .free
            .iter()
            .zip(&b.free)
            .map(|(&x, &y)| add(x, y))
            .collect::<Result<Vec<i64>>>()?;
        Ok(QuotientCoord { torsion, free })
    }

    pub fn coord_neg(&self, a: &QuotientCoord) -> Result<QuotientCoord> {
        let torsion = a
            .torsion
            .iter()
            .zip(&self.torsion)
            .map(|(&x, &d)| Ok(mul(x, -1)?.rem_euclid(d)))
            .collect::<Result<Vec<i64>>>()?;
        let free = a.free.iter().map(|&x| mul(x, -1)).collect::<Result<Vec<i64>>>()?;
        Ok(QuotientCoord { torsion, free })
    }

    pub fn coord_sub(&self, a: &QuotientCoord, b: &QuotientCoord) -> Result<QuotientCoord> {
        let nb = self.coord_neg(b)?;
        self.coord_add(a, &nb)
    }

    /// All coordinates of a finite quotient, mixed-radix order.
    pub fn enumerate(&self) -> Result<Vec<QuotientCoord>> {
        if !self.is_finite() {
            return Err(Error::Unsupported(
                "cannot enumerate an infinite quotient".into(),
            ));
        }
        let k = self.torsion.len();
        let mut out = Vec::with_capacity(self.torsion_order() as usize);
        let mut idx = vec![0i64; k];
        loop {
            out.push(QuotientCoord {
                torsion: idx.clone(),
                free: vec![],
            });
            let mut pos = k;
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                if idx[pos] + 1 < self.torsion[pos] {
                    idx[pos] += 1;
                    for x in idx.iter_mut().skip(pos + 1) {
                        *x = 0;
                    }
                    break;
                }
            }
        }
    }

    /// Haar weight of a single point of the discrete quotient under the
    /// paper normalization: compact (finite) factors carry total mass 1,
    /// infinite discrete factors carry counting measure. Concretely
    /// `1 / ∏ d_i`.
    pub fn haar_weight(&self) -> f64 {
        1.0 / self.torsion_order() as f64
    }
}
