use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMat = DMatrix<Complex64>;

/// Minimum ratio between the last retained and first discarded singular value.
pub const GAP_RATIO: f64 = 1e3;

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct RankCertificate {
    pub rank: usize,
    pub sigma_max: f64,
    /// `σ_rank / σ_rank+1`; infinite when nothing is discarded or the next value is zero.
    pub gap_ratio: f64,
}

/// Singular values in descending order.
pub fn singular_values(m: &CMat) -> Vec<f64> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Vec::new();
    }
    let mut s: Vec<f64> = m
        .clone()
        .svd(false, false)
        .singular_values
        .iter()
        .copied()
        .collect();
    s.sort_by(|a, b| b.partial_cmp(a).unwrap());
    s
}

fn certify(sigma: &[f64], tol: f64) -> Result<RankCertificate> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Usage(format!(
            "complex rank needs a positive tolerance, got {tol}"
        )));
    }
    let sigma_max = sigma.first().copied().unwrap_or(0.0);
    if sigma_max == 0.0 {
        return Ok(RankCertificate {
            rank: 0,
            sigma_max,
            gap_ratio: f64::INFINITY,
        });
    }
    let rank = sigma.iter().take_while(|&&s| s > tol * sigma_max).count();
    let gap_ratio = match sigma.get(rank) {
        None => f64::INFINITY,
        Some(&0.0) => f64::INFINITY,
        Some(&next) => sigma[rank - 1] / next,
    };
    if gap_ratio < GAP_RATIO {
        return Err(Error::IllConditioned {
            ratio: gap_ratio,
            required: GAP_RATIO,
        });
    }
    Ok(RankCertificate {
        rank,
        sigma_max,
        gap_ratio,
    })
}

/// Numerical rank: singular values above `tol·σ_max`, with a certified gap.
pub fn certified_rank(m: &CMat, tol: f64) -> Result<RankCertificate> {
    certify(&singular_values(m), tol)
}

/// Orthonormal basis of the right kernel, one column per null direction.
pub fn nullspace(m: &CMat, tol: f64) -> Result<(CMat, RankCertificate)> {
    let (rows, cols) = m.shape();
    if cols == 0 {
        return Ok((
            CMat::zeros(0, 0),
            RankCertificate {
                rank: 0,
                sigma_max: 0.0,
                gap_ratio: f64::INFINITY,
            },
        ));
    }
    // Pad with zero rows so the SVD returns a full set of right singular vectors.
    let padded = if rows < cols {
        let mut p = CMat::zeros(cols, cols);
        p.view_mut((0, 0), (rows, cols)).copy_from(m);
        p
    } else {
        m.clone()
    };
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("requested V^H");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&a, &b| {
        svd.singular_values[b]
            .partial_cmp(&svd.singular_values[a])
            .unwrap()
    });
    let sigma: Vec<f64> = order.iter().map(|&i| svd.singular_values[i]).collect();
    let cert = certify(&sigma, tol)?;
    let null_idx = &order[cert.rank..];
    let mut out = CMat::zeros(cols, null_idx.len());
    for (k, &i) in null_idx.iter().enumerate() {
        for j in 0..cols {
            out[(j, k)] = v_t[(i, j)].conj();
        }
    }
    Ok((out, cert))
}

/// Orthonormal basis of the column space.
pub fn orthonormal_column_basis(m: &CMat, tol: f64) -> Result<CMat> {
    let (rows, cols) = m.shape();
    if rows == 0 || cols == 0 {
        return Ok(CMat::zeros(rows, 0));
    }
    let svd = m.clone().svd(true, false);
    let u = svd.u.expect("requested U");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&a, &b| {
        svd.singular_values[b]
            .partial_cmp(&svd.singular_values[a])
            .unwrap()
    });
    let sigma: Vec<f64> = order.iter().map(|&i| svd.singular_values[i]).collect();
    let cert = certify(&sigma, tol)?;
    let mut out = CMat::zeros(rows, cert.rank);
    for (k, &i) in order[..cert.rank].iter().enumerate() {
        out.set_column(k, &u.column(i));
    }
    Ok(out)
}
