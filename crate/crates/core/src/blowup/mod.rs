//! Local structure of `rep_n A` and of the blow-up algebra `B` at the cyclic
//! representations. Tangent spaces give the stabilizer weights on the normal
//! space, which in turn predict an invariant ring.

mod invariants;
mod linearize;
mod weights;

pub use invariants::{
    compare_subring, invariant_ring, is_invariant, molien_counts, Exp, InvariantPresentation,
    Relation, SubringComparison,
};
pub use linearize::{
    apply_linearization, blowup_relations, build_linearization, from_blocks, orbit_tangent,
    row_labels, tangent_dim, tangent_space, to_blocks, BlowupRep, LinearizedSystem, Variant,
};
pub use weights::{normal_space, stabilizer_action, NormalSpace, WeightDecomposition, ROOT_TOL};

use serde::Serialize;

use crate::error::{Error, Result};

/// Per-`n` comparison of the computed local structure with the stated
/// singularity type.
#[derive(Debug, Clone, Serialize)]
pub struct Theorem3Report {
    pub n: usize,
    pub tangent_dim_b: usize,
    pub normal_dim: usize,
    pub weights: Vec<usize>,
    /// Weights under the opposite `ζ ↦ ζ⁻¹` convention.
    pub weights_negated: Vec<usize>,
    /// The two weights left after removing the two trivial ones.
    pub nontrivial_pair: (i64, i64),
    pub subring_match: bool,
    pub full_generators: Vec<Exp>,
    pub relations: Vec<Relation>,
    pub molien_ok: bool,
    pub subring: SubringComparison,
    pub degree_bound: u32,
}

/// Bundles the B-variant normal weights with the invariant ring of their
/// nontrivial part, up to total degree `4n`.
pub fn theorem3_report(phi: &BlowupRep, tol: f64) -> Result<Theorem3Report> {
    let n = phi.n;
    let normal = normal_space(phi, Variant::B, tol)?;
    let mut rest = normal.weights.residues();
    for _ in 0..2 {
        match rest.iter().position(|&r| r == 0) {
            Some(i) => {
                rest.remove(i);
            }
            None => {
                return Err(Error::Degenerate(
                    "fewer than two trivial normal weights".into(),
                ))
            }
        }
    }
    if rest.len() != 2 {
        return Err(Error::Degenerate(format!(
            "expected a 2-dimensional nontrivial part, got {}",
            rest.len()
        )));
    }
    // prefer the ordering (3, −1) when it applies
    let pair = if rest[1] == 3 % n && rest[0] == n - 1 {
        (rest[1], rest[0])
    } else {
        (rest[0], rest[1])
    };
    let pair = (pair.0 as i64, pair.1 as i64);
    let degree_bound = 4 * n as u32;
    let ring = invariant_ring(pair, n as u32, degree_bound);
    let subring = compare_subring(&ring);
    Ok(Theorem3Report {
        n,
        tangent_dim_b: normal.tangent_dim,
        normal_dim: normal.basis.ncols(),
        weights: normal.weights.residues(),
        weights_negated: normal.weights.negated().residues(),
        nontrivial_pair: pair,
        subring_match: subring.matches,
        full_generators: ring.generators.clone(),
        relations: ring.relations.clone(),
        molien_ok: ring.molien_ok(),
        subring,
        degree_bound,
    })
}
