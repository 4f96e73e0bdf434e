use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{complex_nullspace, CMat};

use super::linearize::{from_blocks, tangent_space, to_blocks, BlowupRep, Variant};

/// Eigenvalues must lie this close to an exact root of unity.
pub const ROOT_TOL: f64 = 1e-6;

/// Multiset of `μ_n` weights, as residues mod `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightDecomposition {
    pub n: usize,
    /// Residue → multiplicity.
    pub multiplicities: BTreeMap<usize, usize>,
}

impl WeightDecomposition {
    pub fn from_residues(n: usize, residues: impl IntoIterator<Item = usize>) -> Self {
        let mut multiplicities = BTreeMap::new();
        for r in residues {
            *multiplicities.entry(r % n).or_insert(0) += 1;
        }
        WeightDecomposition { n, multiplicities }
    }

    pub fn total(&self) -> usize {
        self.multiplicities.values().sum()
    }

    /// Sorted residues with repetition.
    pub fn residues(&self) -> Vec<usize> {
        self.multiplicities
            .iter()
            .flat_map(|(&r, &m)| std::iter::repeat_n(r, m))
            .collect()
    }

    /// The opposite convention `ζ ↦ ζ⁻¹`.
    pub fn negated(&self) -> Self {
        WeightDecomposition::from_residues(
            self.n,
            self.residues().into_iter().map(|r| (self.n - r) % self.n),
        )
    }

    /// Expected weights `{0, 0, 3}` for A and `{0, 0, 3, −1}` for B, mod `n`.
    pub fn expected(n: usize, variant: Variant) -> Self {
        let mut r = vec![0, 0, 3 % n];
        if variant == Variant::B {
            r.push(n - 1);
        }
        WeightDecomposition::from_residues(n, r)
    }
}

/// The normal space `N(φ)` with the stabilizer action and its weights.
#[derive(Debug, Clone)]
pub struct NormalSpace {
    pub variant: Variant,
    pub tangent_dim: usize,
    pub orbit_dim: usize,
    /// Relative size of the orbit directions outside the tangent space.
    pub orbit_defect: f64,
    /// Orthonormal basis of the complement of the orbit directions in the tangent space.
    pub basis: CMat,
    /// Matrix of the stabilizer generator on `basis`.
    pub action: CMat,
    pub weights: WeightDecomposition,
    /// Largest distance of an eigenvalue from its nearest root of unity.
    pub root_defect: f64,
}

fn zeta(n: usize) -> Complex64 {
    Complex64::from_polar(1.0, std::f64::consts::TAU / n as f64)
}

/// The generator `(g_ζ, ζ)` on a tangent vector: each block `B` of grading
/// degree `d` goes to `ζ^d · g⁻¹ B g`, with `g = diag(1, ζ, …, ζⁿ⁻¹)`.
pub fn stabilizer_action(v: &[Complex64], n: usize, variant: Variant) -> Vec<Complex64> {
    let z = zeta(n);
    let blocks = to_blocks(v, n);
    let out: Vec<CMat> = blocks
        .iter()
        .zip(variant.block_degrees())
        .map(|(b, d)| {
            CMat::from_fn(n, n, |i, j| {
                b[(i, j)] * z.powi(j as i32 - i as i32) * z.powu(d)
            })
        })
        .collect();
    from_blocks(&out)
}

fn apply_to_columns(m: &CMat, n: usize, variant: Variant) -> CMat {
    let mut out = CMat::zeros(m.nrows(), m.ncols());
    for k in 0..m.ncols() {
        let col: Vec<Complex64> = m.column(k).iter().copied().collect();
        out.set_column(
            k,
            &nalgebra::DVector::from_vec(stabilizer_action(&col, n, variant)),
        );
    }
    out
}

/// Nearest exponent `k` with `λ ≈ ζᵏ`, and the distance.
fn nearest_root(lambda: Complex64, n: usize) -> (usize, f64) {
    let step = std::f64::consts::TAU / n as f64;
    let k = (lambda.arg() / step).round().rem_euclid(n as f64) as usize;
    (k, (lambda - zeta(n).powu(k as u32)).norm())
}

pub fn normal_space(phi: &BlowupRep, variant: Variant, tol: f64) -> Result<NormalSpace> {
    let n = phi.n;
    let (tangent, _) = tangent_space(phi, variant, tol)?;
    // orbit directions in tangent coordinates; the normal space is their
    // orthogonal complement there
    let raw = super::linearize::orbit_tangent(phi, variant);
    let orbit = tangent.adjoint() * &raw;
    let orbit_defect = (&raw - &tangent * &orbit).norm() / raw.norm();
    let (complement, cert) = complex_nullspace(&orbit.adjoint(), tol)?;
    let orbit_dim = cert.rank;
    let basis = &tangent * complement;
    let image = apply_to_columns(&basis, n, variant);
    let action = basis.adjoint() * &image;
    let leak = (&image - &basis * &action).norm();
    let unitary =
        (action.adjoint() * &action - CMat::identity(action.nrows(), action.ncols())).norm();
    if leak > ROOT_TOL || unitary > ROOT_TOL {
        return Err(Error::NonDiagonalizable(format!(
            "stabilizer action leaves the normal space by {leak:.2e}, unitarity defect {unitary:.2e}"
        )));
    }
    let eigen =
        action.clone().schur().eigenvalues().ok_or_else(|| {
            Error::NonDiagonalizable("Schur decomposition did not converge".into())
        })?;
    let mut residues = Vec::new();
    let mut root_defect: f64 = 0.0;
    for lambda in eigen.iter() {
        let (k, d) = nearest_root(*lambda, n);
        root_defect = root_defect.max(d);
        residues.push(k);
    }
    if root_defect > ROOT_TOL {
        return Err(Error::NonDiagonalizable(format!(
            "eigenvalue {root_defect:.2e} away from the nearest root of unity"
        )));
    }
    Ok(NormalSpace {
        variant,
        tangent_dim: tangent.ncols(),
        orbit_dim,
        orbit_defect,
        basis,
        action,
        weights: WeightDecomposition::from_residues(n, residues),
        root_defect,
    })
}

impl NormalSpace {
    /// Projection of a tangent vector onto the normal basis, as coordinates.
    pub fn coordinates(&self, v: &[Complex64]) -> Vec<Complex64> {
        let v = nalgebra::DVector::from_vec(v.to_vec());
        (self.basis.adjoint() * v).iter().copied().collect()
    }
}
