use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::freealg::SklyaninParams;
use crate::hesse::{HesseCurve, ProjPoint};

pub type CPoint = ProjPoint<Complex64>;

/// Chordal tolerance for cyclic closure of an orbit.
pub const CLOSURE_TOL: f64 = 1e-8;

/// The translates `r + [i]p`, `i = 0..n−1`, of a point by a torsion point.
#[derive(Debug, Clone)]
pub struct OrbitData {
    pub curve: HesseCurve<Complex64>,
    pub r: CPoint,
    pub p: CPoint,
    pub points: Vec<CPoint>,
    /// Chordal distance from `points[n−1] + p` back to `r`.
    pub closure_residual: f64,
}

pub fn orbit(e: &HesseCurve<Complex64>, r: &CPoint, p: &CPoint, n: usize) -> Result<OrbitData> {
    if n == 0 {
        return Err(Error::Usage("orbit length must be positive".into()));
    }
    let mut points = vec![r.normalized()];
    for _ in 1..n {
        let next = e.add(points.last().expect("nonempty"), p)?;
        points.push(next);
    }
    let closure_residual = e.add(&points[n - 1], p)?.chordal(r);
    if closure_residual.is_nan() || closure_residual >= CLOSURE_TOL {
        return Err(Error::NotTorsion(closure_residual));
    }
    for i in 0..n {
        for j in 0..i {
            if points[i].chordal(&points[j]) < CLOSURE_TOL {
                return Err(Error::Degenerate(format!(
                    "orbit points {j} and {i} coincide"
                )));
            }
        }
    }
    Ok(OrbitData {
        curve: e.clone(),
        r: r.normalized(),
        p: p.normalized(),
        points,
        closure_residual,
    })
}

impl OrbitData {
    pub fn n(&self) -> usize {
        self.points.len()
    }

    /// The same orbit traversed by `−p`.
    pub fn reversed(&self) -> OrbitData {
        let mut points = vec![self.points[0].clone()];
        points.extend(self.points[1..].iter().rev().cloned());
        OrbitData {
            p: self.p.neg(),
            points,
            ..self.clone()
        }
    }

    /// Sklyanin parameters of the pair `(E, p)`.
    pub fn params(&self) -> SklyaninParams<Complex64> {
        let [a, b, c] = self.p.0;
        SklyaninParams::new(a, b, c)
    }
}

fn scaled(p: &CPoint) -> [Complex64; 3] {
    let m = p.0.iter().map(|c| c.norm()).fold(0.0, f64::max);
    p.0.map(|c| c / m)
}

/// The three bilinear forms `a·u₁v₂ + b·v₁u₂ + c·w₁w₂` obtained from the
/// relations by feeding `P` into the left and `Q` into the right slot.
/// Their common zeros are the pairs with `Q = P + p`.
pub fn graph_pair_residual(pt: &CPoint, q: &CPoint, params: &SklyaninParams<Complex64>) -> f64 {
    let s = params.a.norm().max(params.b.norm()).max(params.c.norm());
    let (a, b, c) = (params.a / s, params.b / s, params.c / s);
    let u = scaled(pt);
    let v = scaled(q);
    // (first letter, second letter, square letter) for ∂x, ∂y, ∂z
    [(1, 2, 0), (2, 0, 1), (0, 1, 2)]
        .iter()
        .map(|&(i, j, k)| (a * u[i] * v[j] + b * u[j] * v[i] + c * u[k] * v[k]).norm())
        .fold(0.0, f64::max)
}
