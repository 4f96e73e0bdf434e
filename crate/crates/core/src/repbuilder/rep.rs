use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::freealg::{FreePoly, SklyaninParams};
use crate::linalg::{certified_rank, CMat, Numeric, ScalarText};

use super::orbit::{CPoint, OrbitData};
use crate::hesse::ProjPoint;

/// Residual above which an orientation is rejected.
pub const ORIENTATION_TOL: f64 = 1e-6;

/// Which traversal of the orbit fills the subdiagonals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientation {
    /// Row `i+1` carries `r + [i]p`.
    Forward,
    /// Row `i+1` carries `r − [i]p`.
    Reverse,
}

/// Images of `x, y, z` under a cyclic representation.
#[derive(Debug, Clone)]
pub struct MatRep {
    pub n: usize,
    pub t: Complex64,
    pub orientation: Orientation,
    /// The orbit in the order used for the subdiagonals.
    pub points: Vec<CPoint>,
    pub mats: [CMat; 3],
}

/// Subdiagonal entries `M[i+1][i]` are the `k`-th coordinates of the points,
/// and the corner `M[0][n−1]` is the last point's coordinate times `t`.
pub fn cyclic_matrices(points: &[CPoint], t: Complex64) -> [CMat; 3] {
    let n = points.len();
    std::array::from_fn(|k| {
        let mut m = CMat::zeros(n, n);
        for i in 0..n.saturating_sub(1) {
            m[(i + 1, i)] = points[i].0[k];
        }
        m[(0, n - 1)] += points[n - 1].0[k] * t;
        m
    })
}

fn max_abs(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `max‖a·M₁M₂ + b·M₂M₁ + c·M₃²‖`, scaled by the largest entry squared and
/// the largest parameter.
pub fn matrices_residual(mats: &[CMat; 3], params: &SklyaninParams<Complex64>) -> f64 {
    let [k, l, m] = mats;
    let scale = mats.iter().map(max_abs).fold(0.0, f64::max).powi(2)
        * params.a.norm().max(params.b.norm()).max(params.c.norm());
    if scale == 0.0 {
        return 0.0;
    }
    let SklyaninParams { a, b, c } = *params;
    let rels = [
        l * m * a + m * l * b + k * k * c,
        m * k * a + k * m * b + l * l * c,
        k * l * a + l * k * b + m * m * c,
    ];
    rels.iter().map(max_abs).fold(0.0, f64::max) / scale
}

/// Builds the representation, choosing the orbit traversal whose matrices
/// satisfy the relations.
pub fn build_cyclic_rep(o: &OrbitData, t: Complex64) -> Result<MatRep> {
    let params = o.params();
    let rev = o.reversed();
    let fwd_mats = cyclic_matrices(&o.points, t);
    let rev_mats = cyclic_matrices(&rev.points, t);
    let forward = matrices_residual(&fwd_mats, &params);
    let reverse = matrices_residual(&rev_mats, &params);
    let (orientation, points, mats, best) = if forward <= reverse {
        (Orientation::Forward, o.points.clone(), fwd_mats, forward)
    } else {
        (Orientation::Reverse, rev.points, rev_mats, reverse)
    };
    if best.is_nan() || best > ORIENTATION_TOL {
        return Err(Error::OrientationAmbiguous { forward, reverse });
    }
    Ok(MatRep {
        n: o.n(),
        t,
        orientation,
        points,
        mats,
    })
}

impl MatRep {
    /// Same pattern with the orientation fixed, e.g. for `t = 0`.
    pub fn with_orientation(o: &OrbitData, orientation: Orientation, t: Complex64) -> MatRep {
        let points = match orientation {
            Orientation::Forward => o.points.clone(),
            Orientation::Reverse => o.reversed().points,
        };
        MatRep {
            n: o.n(),
            t,
            orientation,
            mats: cyclic_matrices(&points, t),
            points,
        }
    }

    pub fn relation_residual(&self, params: &SklyaninParams<Complex64>) -> f64 {
        matrices_residual(&self.mats, params)
    }

    pub fn determinants(&self) -> [Complex64; 3] {
        std::array::from_fn(|k| self.mats[k].determinant())
    }

    /// Dimension of the span of all words of length `≤ length_bound`,
    /// including the empty word.
    pub fn simplicity_dim(&self, length_bound: usize) -> Result<usize> {
        span_dim(&self.mats, length_bound)
    }

    /// Substitutes the matrices for the letters `x, y, z`.
    pub fn eval_element<T: Numeric>(&self, f: &FreePoly<T>) -> CMat {
        let mut out = CMat::zeros(self.n, self.n);
        for (w, c) in f.terms() {
            let mut m = CMat::identity(self.n, self.n);
            for &l in &w.0 {
                m *= &self.mats[l as usize];
            }
            out += m * c.to_c64();
        }
        out
    }

    /// `[det M_x : det M_y : det M_z]`.
    pub fn norm_point(&self) -> Result<CPoint> {
        let d = self.determinants();
        let scale = self
            .mats
            .iter()
            .map(max_abs)
            .fold(0.0, f64::max)
            .powi(self.n as i32);
        if d.iter().all(|z| z.norm() <= 1e-12 * scale) {
            return Err(Error::AllZeroDets);
        }
        Ok(ProjPoint(d).normalized())
    }

    /// Max deviation of `g·M·g⁻¹` from `ζ·M` with `g = diag(1, ζ, …, ζⁿ⁻¹)`,
    /// `ζ = e^{2πi/n}`, relative to the largest entry.
    pub fn stabilizer_residual(&self) -> f64 {
        stabilizer_residual(&self.mats)
    }

    pub fn to_json(&self, params: &SklyaninParams<Complex64>) -> Value {
        let mats: Vec<Vec<Vec<String>>> = self
            .mats
            .iter()
            .map(|m| {
                (0..self.n)
                    .map(|i| (0..self.n).map(|j| m[(i, j)].to_text()).collect())
                    .collect()
            })
            .collect();
        json!({
            "n": self.n,
            "t": self.t.to_text(),
            "orientation": self.orientation,
            "orbit": self.points.iter().map(|p| p.to_text()).collect::<Vec<_>>(),
            "matrices": { "x": mats[0], "y": mats[1], "z": mats[2] },
            "determinants": self.determinants().iter().map(ScalarText::to_text).collect::<Vec<_>>(),
            "relation_residual": self.relation_residual(params),
        })
    }
}

pub fn stabilizer_residual(mats: &[CMat; 3]) -> f64 {
    let n = mats[0].nrows();
    let zeta = Complex64::from_polar(1.0, std::f64::consts::TAU / n as f64);
    let scale = mats.iter().map(max_abs).fold(0.0, f64::max);
    if scale == 0.0 {
        return 0.0;
    }
    let mut worst: f64 = 0.0;
    for m in mats {
        for i in 0..n {
            for j in 0..n {
                let conj = m[(i, j)] * zeta.powi(i as i32 - j as i32);
                worst = worst.max((conj - zeta * m[(i, j)]).norm());
            }
        }
    }
    worst / scale
}

/// Gram–Schmidt growth of the word span: the span of words of length `≤ k`
/// is spanned by a basis of length `≤ k−1` times the generators.
fn span_dim(gens: &[CMat; 3], length_bound: usize) -> Result<usize> {
    let n = gens[0].nrows();
    let mut basis: Vec<CMat> = Vec::new();
    let mut found: Vec<CMat> = Vec::new();
    let push = |m: CMat, basis: &mut Vec<CMat>| -> Option<CMat> {
        let norm0 = m.norm();
        if norm0 == 0.0 {
            return None;
        }
        let mut v = m.clone();
        for b in basis.iter() {
            let proj = b.dotc(&v);
            v -= b * proj;
        }
        let nv = v.norm();
        (nv > 1e-10 * norm0).then(|| {
            basis.push(v / Complex64::new(nv, 0.0));
            m
        })
    };
    let id = CMat::identity(n, n);
    let mut frontier: Vec<CMat> = push(id, &mut basis).into_iter().collect();
    found.extend(frontier.iter().cloned());
    for _ in 0..length_bound {
        let mut next = Vec::new();
        for f in &frontier {
            for g in gens {
                if let Some(m) = push(f * g, &mut basis) {
                    next.push(m);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        found.extend(next.iter().cloned());
        frontier = next;
    }
    // certify the greedy count on the collected words
    let mut stacked = CMat::zeros(found.len(), n * n);
    for (r, m) in found.iter().enumerate() {
        let scale = m.norm();
        for (c, z) in m.iter().enumerate() {
            stacked[(r, c)] = z / scale;
        }
    }
    Ok(certified_rank(&stacked, 1e-9)?.rank)
}
