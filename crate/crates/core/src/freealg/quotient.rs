use std::cell::OnceCell;

use num_complex::Complex64;

use super::poly::FreePoly;
use super::sklyanin::{sklyanin_relations, SklyaninParams};
use super::word::{Word, X, Y, Z};
use crate::error::{Error, Result};
use crate::linalg::{certified_rank, row_reduce, CMat, Field, Mat, RowEchelon};

/// Rows are the coordinate vectors of `m·r·m'` for every relation `r` and
/// every pair of words with `|m| + 2 + |m'| = d`.
pub fn ideal_component<T: Field>(relations: &[FreePoly<T>], d: usize) -> Mat<T> {
    let zero = relations
        .first()
        .expect("at least one relation")
        .zero_elem()
        .clone();
    let cols = 3usize.pow(d as u32);
    let mut m = Mat::zeros(0, cols, zero);
    if d < 2 {
        return m;
    }
    for r in relations {
        debug_assert_eq!(r.homogeneous_degree(), Some(2));
        for k in 0..=d - 2 {
            for left in Word::all_of_degree(k) {
                for right in Word::all_of_degree(d - 2 - k) {
                    let f = r.left_mul_word(&left).right_mul_word(&right);
                    m.push_row(f.coordinates(d));
                }
            }
        }
    }
    m
}

/// Per-degree normal forms for the quotient of the free algebra by the
/// Sklyanin relations, over an exact field.
pub struct GradedQuotient<T> {
    params: SklyaninParams<T>,
    relations: [FreePoly<T>; 3],
    components: Vec<OnceCell<RowEchelon<T>>>,
}

impl<T: Field> GradedQuotient<T> {
    /// Degrees up to `max_degree` can be queried; each is eliminated on first use.
    pub fn new(params: SklyaninParams<T>, max_degree: usize) -> Result<Self> {
        let relations = sklyanin_relations(&params)?;
        Ok(GradedQuotient {
            params,
            relations,
            components: (0..=max_degree).map(|_| OnceCell::new()).collect(),
        })
    }

    pub fn params(&self) -> &SklyaninParams<T> {
        &self.params
    }

    pub fn relations(&self) -> &[FreePoly<T>; 3] {
        &self.relations
    }

    pub fn max_degree(&self) -> usize {
        self.components.len() - 1
    }

    fn component(&self, d: usize) -> Result<&RowEchelon<T>> {
        let cell = self.components.get(d).ok_or_else(|| {
            Error::Usage(format!(
                "degree {d} exceeds the quotient's bound {}",
                self.max_degree()
            ))
        })?;
        Ok(cell.get_or_init(|| row_reduce(&ideal_component(&self.relations, d))))
    }

    pub fn ideal_dim(&self, d: usize) -> Result<usize> {
        Ok(self.component(d)?.rank())
    }

    /// `dim A_d = 3^d − dim I_d`.
    pub fn quotient_dim(&self, d: usize) -> Result<usize> {
        Ok(3usize.pow(d as u32) - self.ideal_dim(d)?)
    }

    /// Whether a homogeneous `f` vanishes in the quotient. The zero
    /// polynomial vanishes in every degree.
    pub fn is_zero(&self, f: &FreePoly<T>) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        let d = f
            .homogeneous_degree()
            .ok_or_else(|| Error::Usage("membership test needs a homogeneous polynomial".into()))?;
        let comp = self.component(d)?;
        Ok(comp.contains(&f.coordinates(d)))
    }

    /// Normal form of `f` in the quotient, as coordinates on the degree-`d` word basis.
    pub fn normal_form(&self, f: &FreePoly<T>, d: usize) -> Result<Vec<T>> {
        Ok(self.component(d)?.reduce(&f.coordinates(d)))
    }

    /// `[f, g] = 0` in the quotient for `g` = x, y, z.
    pub fn centrality_check(&self, f: &FreePoly<T>) -> Result<[bool; 3]> {
        let one = f.zero_elem().one_like();
        let mut out = [false; 3];
        for (slot, g) in out.iter_mut().zip([X, Y, Z]) {
            let gw = FreePoly::monomial(one.clone(), Word::letter(g));
            *slot = self.is_zero(&f.mul(&gw).sub(&gw.mul(f)))?;
        }
        Ok(out)
    }
}

/// Membership test over complex parameters, decided by certified ranks.
pub fn numeric_is_zero_in_a(
    params: &SklyaninParams<Complex64>,
    f: &FreePoly<Complex64>,
    tol: f64,
) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let d = f
        .homogeneous_degree()
        .ok_or_else(|| Error::Usage("membership test needs a homogeneous polynomial".into()))?;
    let rel = sklyanin_relations(params)?;
    let ideal = ideal_component(&rel, d);
    let to_c = |m: &Mat<Complex64>| CMat::from_fn(m.rows(), m.cols(), |i, j| m[(i, j)]);
    let base = to_c(&ideal);
    let mut stacked = ideal.clone();
    stacked.push_row(f.coordinates(d));
    let r0 = certified_rank(&base, tol)?.rank;
    let r1 = certified_rank(&to_c(&stacked), tol)?.rank;
    Ok(r0 == r1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::sklyanin::{central_element, CentralForm};
    use crate::linalg::{Fp, Rational};
    use num_bigint::BigInt;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    #[test]
    fn degree_two_component() {
        let p = SklyaninParams::from_ints(1, 2, 3);
        let m = ideal_component(&sklyanin_relations(&p).unwrap(), 2);
        assert_eq!((m.rows(), m.cols()), (3, 9));
        assert_eq!(crate::linalg::rank(&m), 3);
        let comm = GradedQuotient::new(SklyaninParams::from_ints(1, -1, 0), 3).unwrap();
        assert_eq!(comm.quotient_dim(2).unwrap(), 6);
    }

    #[test]
    fn low_degrees() {
        let a = GradedQuotient::new(SklyaninParams::from_ints(1, 2, 3), 3).unwrap();
        assert_eq!(a.quotient_dim(0).unwrap(), 1);
        assert_eq!(a.quotient_dim(1).unwrap(), 3);
        assert_eq!(a.ideal_dim(3).unwrap(), 17);
        assert_eq!(a.quotient_dim(3).unwrap(), 10);
        assert!(a.quotient_dim(4).is_err());
    }

    #[test]
    fn relations_and_their_multiples_vanish() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let p = SklyaninParams::random(&mut rng);
        let a = GradedQuotient::new(p, 3).unwrap();
        for r in a.relations() {
            assert!(a.is_zero(r).unwrap());
        }
        let x = FreePoly::monomial(q(1), Word::letter(X));
        let r = &a.relations()[0];
        assert!(a.is_zero(&x.mul(r).sub(&r.mul(&x))).unwrap());
        assert!(!a.is_zero(&x.mul(&x).mul(&x)).unwrap());
    }

    #[test]
    fn c3_identity_and_centrality_small_sample() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..3 {
            let p = SklyaninParams::random(&mut rng);
            let a = GradedQuotient::new(p.clone(), 4).unwrap();
            let as_form = central_element(&p, CentralForm::As);
            let sym = central_element(&p, CentralForm::Symmetrized);
            assert!(a.is_zero(&as_form.scale(&q(3)).sub(&sym)).unwrap());
            assert_eq!(a.centrality_check(&as_form).unwrap(), [true; 3]);
            assert_eq!(a.centrality_check(&sym).unwrap(), [true; 3]);
            let x = FreePoly::monomial(q(1), Word::letter(X));
            assert!(a.centrality_check(&x).unwrap().contains(&false));
        }
    }

    #[test]
    fn commutative_case_is_central() {
        let p = SklyaninParams::from_ints(1, -1, 0);
        let a = GradedQuotient::new(p.clone(), 4).unwrap();
        assert_eq!(
            a.centrality_check(&central_element(&p, CentralForm::As))
                .unwrap(),
            [true; 3]
        );
    }

    #[test]
    fn prime_field_hilbert_dims_to_degree_five() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let p = SklyaninParams::random(&mut rng);
        let prime = 2_305_843_009_213_693_951u64;
        let pp = p.map(|x| Fp::from_rational(x, prime).unwrap());
        let a = GradedQuotient::new(pp, 5).unwrap();
        let dims: Vec<usize> = (0..=5).map(|d| a.quotient_dim(d).unwrap()).collect();
        assert_eq!(dims, [1, 3, 6, 10, 15, 21]);
    }

    #[test]
    fn numeric_membership_agrees_with_exact() {
        let p = SklyaninParams::from_ints(1, 2, 3);
        let pc = p.map(|x| Complex64::new(num_traits::ToPrimitive::to_f64(x).unwrap(), 0.0));
        let sym = central_element(&pc, CentralForm::Symmetrized);
        let as_form = central_element(&pc, CentralForm::As);
        let diff = as_form.scale(&Complex64::new(3.0, 0.0)).sub(&sym);
        assert!(numeric_is_zero_in_a(&pc, &diff, 1e-9).unwrap());
        assert!(!numeric_is_zero_in_a(&pc, &sym, 1e-9).unwrap());
    }
}
