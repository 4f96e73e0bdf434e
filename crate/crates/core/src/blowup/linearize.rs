use num_complex::Complex64;
use serde::Serialize;

use crate::error::Result;
use crate::freealg::{sklyanin_relations, FreePoly, SklyaninParams, Word, BIG_X};
use crate::linalg::{complex_nullspace, CMat, Field, RankCertificate};
use crate::repbuilder::MatRep;

/// The 15 defining relations of the blow-up algebra: the Sklyanin relations
/// in `x, y, z`, the same in `X, Y, Z`, and `Xᵢxⱼ − xᵢXⱼ` for all `i, j`.
pub fn blowup_relations<T: Field>(params: &SklyaninParams<T>) -> Result<Vec<FreePoly<T>>> {
    let lower = sklyanin_relations(params)?;
    let mut out: Vec<FreePoly<T>> = lower.to_vec();
    out.extend(lower.iter().map(|r| r.map_letters(|l| l + BIG_X)));
    let one = params.a.one_like();
    for i in 0..3u8 {
        for j in 0..3u8 {
            out.push(FreePoly::from_terms(
                &one.zero_like(),
                [
                    (Word(vec![BIG_X + i, j]), one.clone()),
                    (Word(vec![i, BIG_X + j]), -one.clone()),
                ],
            ));
        }
    }
    Ok(out)
}

/// Which representation scheme is linearized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// `rep_n A` at `(K, L, M)`; unknowns `(R, S, T)`.
    A,
    /// `rep_n B` at `x, y, z ↦ 0`, `X, Y, Z ↦ K, L, M`; unknowns `(U, V, W, R, S, T)`.
    B,
}

impl Variant {
    pub fn blocks(self) -> usize {
        match self {
            Variant::A => 3,
            Variant::B => 6,
        }
    }

    /// Grading degree of each unknown block: lowercase images have degree 0.
    pub fn block_degrees(self) -> Vec<u32> {
        match self {
            Variant::A => vec![1, 1, 1],
            Variant::B => vec![0, 0, 0, 1, 1, 1],
        }
    }
}

/// A point `φ` of `rep_n B` with vanishing lowercase images.
#[derive(Debug, Clone)]
pub struct BlowupRep {
    pub n: usize,
    pub klm: [CMat; 3],
    pub params: SklyaninParams<Complex64>,
}

impl BlowupRep {
    pub fn from_rep(rep: &MatRep, params: &SklyaninParams<Complex64>) -> Self {
        BlowupRep {
            n: rep.n,
            klm: rep.mats.clone(),
            params: params.clone(),
        }
    }
}

/// First-order conditions on a tangent vector, one column per unknown
/// entry. Unknowns are stacked block by block, each block row-major.
#[derive(Debug, Clone)]
pub struct LinearizedSystem {
    pub variant: Variant,
    pub n: usize,
    pub matrix: CMat,
    /// Source relation of each `n×n` block of rows.
    pub row_labels: Vec<String>,
}

fn uppercase_linearization(
    klm: &[CMat; 3],
    rst: &[CMat],
    p: &SklyaninParams<Complex64>,
) -> [CMat; 3] {
    let [k, l, m] = klm;
    let (r, s, t) = (&rst[0], &rst[1], &rst[2]);
    let SklyaninParams { a, b, c } = *p;
    [
        (l * t + s * m) * a + (m * s + t * l) * b + (k * r + r * k) * c,
        (m * r + t * k) * a + (k * t + r * m) * b + (l * s + s * l) * c,
        (k * s + r * l) * a + (l * r + s * k) * b + (m * t + t * m) * c,
    ]
}

/// Applies the linearized relations to one tangent vector given as blocks.
pub fn apply_linearization(phi: &BlowupRep, variant: Variant, blocks: &[CMat]) -> Vec<CMat> {
    let (lower, upper) = match variant {
        Variant::A => (None, blocks),
        Variant::B => (Some(&blocks[..3]), &blocks[3..]),
    };
    let mut out = uppercase_linearization(&phi.klm, upper, &phi.params).to_vec();
    if let Some(uvw) = lower {
        // Xᵢxⱼ − xᵢXⱼ  ↦  Kᵢ·Uⱼ − Uᵢ·Kⱼ
        for i in 0..3 {
            for j in 0..3 {
                out.push(&phi.klm[i] * &uvw[j] - &uvw[i] * &phi.klm[j]);
            }
        }
    }
    out
}

pub fn row_labels(variant: Variant) -> Vec<String> {
    let mut labels: Vec<String> = ["∂X", "∂Y", "∂Z"]
        .iter()
        .map(|d| format!("uppercase Sklyanin {d}"))
        .collect();
    if variant == Variant::B {
        for i in "XYZ".chars() {
            for j in "xyz".chars() {
                let (li, uj) = (i.to_ascii_lowercase(), j.to_ascii_uppercase());
                labels.push(format!("{i}{j} = {li}{uj}"));
            }
        }
    }
    labels
}

pub fn to_blocks(v: &[Complex64], n: usize) -> Vec<CMat> {
    v.chunks(n * n)
        .map(|c| CMat::from_row_slice(n, n, c))
        .collect()
}

pub fn from_blocks(blocks: &[CMat]) -> Vec<Complex64> {
    blocks
        .iter()
        .flat_map(|b| b.transpose().iter().copied().collect::<Vec<_>>())
        .collect()
}

pub fn build_linearization(phi: &BlowupRep, variant: Variant) -> LinearizedSystem {
    let n = phi.n;
    let cols = variant.blocks() * n * n;
    let labels = row_labels(variant);
    let mut matrix = CMat::zeros(labels.len() * n * n, cols);
    let mut unit = vec![Complex64::new(0.0, 0.0); cols];
    for col in 0..cols {
        unit[col] = Complex64::new(1.0, 0.0);
        let image = from_blocks(&apply_linearization(phi, variant, &to_blocks(&unit, n)));
        for (row, z) in image.into_iter().enumerate() {
            matrix[(row, col)] = z;
        }
        unit[col] = Complex64::new(0.0, 0.0);
    }
    LinearizedSystem {
        variant,
        n,
        matrix,
        row_labels: labels,
    }
}

/// Orthonormal tangent space and its rank certificate.
pub fn tangent_space(
    phi: &BlowupRep,
    variant: Variant,
    tol: f64,
) -> Result<(CMat, RankCertificate)> {
    let sys = build_linearization(phi, variant);
    complex_nullspace(&sys.matrix, tol)
}

pub fn tangent_dim(phi: &BlowupRep, variant: Variant, tol: f64) -> Result<usize> {
    Ok(tangent_space(phi, variant, tol)?.0.ncols())
}

/// Infinitesimal conjugations `h ↦ [h, φ]` for the matrix units `h`, as columns.
pub fn orbit_tangent(phi: &BlowupRep, variant: Variant) -> CMat {
    let n = phi.n;
    let rows = variant.blocks() * n * n;
    let mut out = CMat::zeros(rows, n * n);
    for i in 0..n {
        for j in 0..n {
            let mut h = CMat::zeros(n, n);
            h[(i, j)] = Complex64::new(1.0, 0.0);
            let mut blocks = Vec::new();
            if variant == Variant::B {
                blocks.extend((0..3).map(|_| CMat::zeros(n, n)));
            }
            blocks.extend(phi.klm.iter().map(|k| &h * k - k * &h));
            out.set_column(
                i * n + j,
                &nalgebra::DVector::from_vec(from_blocks(&blocks)),
            );
        }
    }
    out
}
