use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{complex_nullspace, CMat, RankCertificate, ScalarText};

use super::orbit::CPoint;

/// Exponents of the ternary cubic monomials, lexicographic in `(X, Y, Z)`.
pub const CUBIC_MONOMIALS: [[u32; 3]; 10] = [
    [3, 0, 0],
    [2, 1, 0],
    [2, 0, 1],
    [1, 2, 0],
    [1, 1, 1],
    [1, 0, 2],
    [0, 3, 0],
    [0, 2, 1],
    [0, 1, 2],
    [0, 0, 3],
];

/// A ternary cubic through given points, unique up to scale.
#[derive(Debug, Clone, Serialize)]
pub struct CubicFit {
    /// Unit-norm coefficients on [`CUBIC_MONOMIALS`].
    #[serde(serialize_with = "complex_list")]
    pub coefficients: Vec<Complex64>,
    pub certificate: RankCertificate,
    pub fit_points: usize,
    /// Largest normalized value on the points that were not used for the fit.
    pub held_out_residual: f64,
}

fn complex_list<S: serde::Serializer>(
    v: &[Complex64],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ScalarText::to_text))
}

fn unit(p: &CPoint) -> [Complex64; 3] {
    let n = p.0.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    p.0.map(|c| c / n)
}

fn monomials(p: &CPoint) -> [Complex64; 10] {
    let u = unit(p);
    CUBIC_MONOMIALS.map(|e| u[0].powu(e[0]) * u[1].powu(e[1]) * u[2].powu(e[2]))
}

/// Value of a cubic at a point, both scaled to unit norm.
pub fn cubic_residual(coefficients: &[Complex64], p: &CPoint) -> f64 {
    let norm = coefficients
        .iter()
        .map(|c| c.norm_sqr())
        .sum::<f64>()
        .sqrt();
    let v: Complex64 = monomials(p)
        .iter()
        .zip(coefficients)
        .map(|(m, c)| m * c)
        .sum();
    v.norm() / norm
}

/// Fits a cubic to the first ten points and evaluates it on the rest.
pub fn fit_cubic(points: &[CPoint], tol: f64) -> Result<CubicFit> {
    if points.len() < 10 {
        return Err(Error::Usage(format!(
            "a cubic fit needs 10 points, got {}",
            points.len()
        )));
    }
    let (fit, held) = points.split_at(10);
    let m = CMat::from_fn(10, 10, |i, j| monomials(&fit[i])[j]);
    let (null, certificate) = complex_nullspace(&m, tol)?;
    if null.ncols() != 1 {
        return Err(Error::NoUniqueCubic(null.ncols()));
    }
    let coefficients: Vec<Complex64> = null.column(0).iter().copied().collect();
    let held_out_residual = held
        .iter()
        .map(|p| cubic_residual(&coefficients, p))
        .fold(0.0, f64::max);
    Ok(CubicFit {
        coefficients,
        certificate,
        fit_points: 10,
        held_out_residual,
    })
}
