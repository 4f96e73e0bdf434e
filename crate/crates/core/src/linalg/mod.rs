//! Scalar and matrix kernel.
//!
//! Exact work happens over [`Rational`] (lowest terms, positive denominator by
//! construction of `num_rational`) and over word-sized prime fields [`Fp`].
//! Floating work happens over [`Complex64`] or the software-float
//! [`HpComplex`]; ranks of complex matrices come from singular values and are
//! only reported when the spectrum has a clear gap.

mod complex;
mod exact;
mod field;
mod hp;
mod modular;

pub use complex::{
    certified_rank, nullspace as complex_nullspace, orthonormal_column_basis, singular_values,
    CMat, RankCertificate, GAP_RATIO,
};
pub use exact::{nullspace, rank, row_reduce, Mat, RowEchelon};
pub use field::{Field, Fp, Numeric, Rational, ScalarText};
pub use hp::{HpComplex, HpFloat};
pub use modular::{is_prime, kernel_dim_mod_p, random_prime, solve_homogeneous_over_random_prime};
pub use num_complex::Complex64;

/// Which scalar kernel a computation runs in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Exact,
    PrimeField,
    Complex,
}
