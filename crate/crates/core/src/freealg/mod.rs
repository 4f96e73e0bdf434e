//! Noncommutative polynomials and the graded Sklyanin quotient.

mod poly;
mod quotient;
mod sklyanin;
mod word;

pub use poly::FreePoly;
pub use quotient::{ideal_component, numeric_is_zero_in_a, GradedQuotient};
pub use sklyanin::{
    central_element, cyclic_derivative, dual_parameters, sklyanin_relations, superpotential,
    CentralForm, SklyaninParams, Superpotential,
};
pub use word::{Word, BIG_X, BIG_Y, BIG_Z, LETTERS, X, Y, Z};
