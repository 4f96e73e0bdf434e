use num_complex::Complex64;

use super::orbit::CPoint;

/// A matrix entry `coef·t^deg` of a representation over `ℂ[t]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TMonomial {
    pub coef: Complex64,
    pub deg: u32,
}

/// Sparse `n×n` matrix of `t`-monomials.
pub type SymbolicMat = Vec<Vec<Option<TMonomial>>>;

/// The cyclic pattern with `t` kept symbolic.
pub fn symbolic_cyclic_matrices(points: &[CPoint]) -> [SymbolicMat; 3] {
    let n = points.len();
    std::array::from_fn(|k| {
        let mut m = vec![vec![None; n]; n];
        for i in 0..n.saturating_sub(1) {
            m[i + 1][i] = Some(TMonomial {
                coef: points[i].0[k],
                deg: 0,
            });
        }
        m[0][n - 1] = Some(TMonomial {
            coef: points[n - 1].0[k],
            deg: 1,
        });
        m
    })
}

/// Whether every nonzero entry `(i, j)` of degree `d` satisfies
/// `d·deg_t + shift_i − shift_j = 1`, i.e. the matrices are homogeneous of
/// degree one in `M_n(ℂ[t, t⁻¹])(shifts)`.
pub fn graded_homogeneity_check(mats: &[SymbolicMat], shifts: &[i64], deg_t: i64) -> bool {
    mats.iter().all(|m| {
        m.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, e)| match e {
                Some(e) if e.coef != Complex64::new(0.0, 0.0) => {
                    e.deg as i64 * deg_t + shifts[i] - shifts[j] == 1
                }
                _ => true,
            })
        })
    })
}
