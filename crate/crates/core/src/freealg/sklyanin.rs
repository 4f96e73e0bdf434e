use num_bigint::BigInt;
use rand::Rng;

use super::poly::FreePoly;
use super::word::Word;
use crate::error::{Error, Result};
use crate::linalg::{Field, Rational};

/// The point `[a:b:c]` defining a Sklyanin algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct SklyaninParams<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: Field> SklyaninParams<T> {
    pub fn new(a: T, b: T, c: T) -> Self {
        SklyaninParams { a, b, c }
    }

    pub fn validate(&self) -> Result<()> {
        if self.a.is_zero() && self.b.is_zero() && self.c.is_zero() {
            return Err(Error::DegenerateParams("(a,b,c) = (0,0,0)".into()));
        }
        Ok(())
    }

    /// `abc · ((a³+b³+c³)³ − 27a³b³c³)`; nonzero iff the Hesse curve through
    /// `[a:b:c]` is smooth and not one of the pencil's degenerate members.
    pub fn hesse_discriminant(&self) -> T {
        let abc = self.a.clone() * self.b.clone() * self.c.clone();
        let s = self.a.pow(3) + self.b.pow(3) + self.c.pow(3);
        abc.clone() * (s.pow(3) - self.a.from_i64_like(27) * abc.pow(3))
    }

    pub fn triple(&self) -> [T; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> SklyaninParams<U> {
        SklyaninParams {
            a: f(&self.a),
            b: f(&self.b),
            c: f(&self.c),
        }
    }
}

impl SklyaninParams<Rational> {
    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        let q = |v| Rational::from_integer(BigInt::from(v));
        SklyaninParams::new(q(a), q(b), q(c))
    }

    /// A random triple with small rationals, rejecting degenerate curves.
    pub fn random<R: Rng>(rng: &mut R) -> Self {
        loop {
            let mut draw = || {
                let n: i64 = rng.gen_range(1..10) * if rng.gen_bool(0.5) { 1 } else { -1 };
                let d: i64 = rng.gen_range(1..6);
                Rational::new(BigInt::from(n), BigInt::from(d))
            };
            let p = SklyaninParams::new(draw(), draw(), draw());
            if !p.hesse_discriminant().is_zero() {
                return p;
            }
        }
    }
}

fn word(s: &str) -> Word {
    s.parse().expect("valid literal")
}

/// `{a·yz+b·zy+c·x², a·zx+b·xz+c·y², a·xy+b·yx+c·z²}`, in the order of the
/// cyclic derivatives with respect to x, y, z.
pub fn sklyanin_relations<T: Field>(params: &SklyaninParams<T>) -> Result<[FreePoly<T>; 3]> {
    params.validate()?;
    let SklyaninParams { a, b, c } = params;
    let rel = |p: &str, q: &str, r: &str| {
        FreePoly::from_terms(
            a,
            [
                (word(p), a.clone()),
                (word(q), b.clone()),
                (word(r), c.clone()),
            ],
        )
    };
    Ok([
        rel("yz", "zy", "xx"),
        rel("zx", "xz", "yy"),
        rel("xy", "yx", "zz"),
    ])
}

/// Rotates each occurrence of `v` to the front of its word and deletes it.
pub fn cyclic_derivative<T: Field>(w: &FreePoly<T>, v: u8) -> FreePoly<T> {
    let mut out = FreePoly::zero(w.zero_elem());
    for (word, coef) in w.terms() {
        for (i, &l) in word.0.iter().enumerate() {
            if l == v {
                let mut rotated = word.0[i + 1..].to_vec();
                rotated.extend_from_slice(&word.0[..i]);
                out.add_term(Word(rotated), coef.clone());
            }
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct Superpotential<T> {
    /// `a·xyz + b·yxz + (c/3)(x³+y³+z³)`
    pub short: FreePoly<T>,
    /// `a(xyz+yzx+zxy) + b(yxz+xzy+zyx) + c(x³+y³+z³)`, equal to three times `short` cyclically.
    pub symmetric: FreePoly<T>,
}

fn symmetric_cubic<T: Field>(p: &T, q: &T, r: &T) -> FreePoly<T> {
    let mut f = FreePoly::zero(p);
    for w in ["xyz", "yzx", "zxy"] {
        f.add_term(word(w), p.clone());
    }
    for w in ["yxz", "xzy", "zyx"] {
        f.add_term(word(w), q.clone());
    }
    for w in ["xxx", "yyy", "zzz"] {
        f.add_term(word(w), r.clone());
    }
    f
}

pub fn superpotential<T: Field>(params: &SklyaninParams<T>) -> Superpotential<T> {
    let SklyaninParams { a, b, c } = params;
    let third = c.clone() / c.from_i64_like(3);
    let short = FreePoly::from_terms(
        a,
        [
            (word("xyz"), a.clone()),
            (word("yxz"), b.clone()),
            (word("xxx"), third.clone()),
            (word("yyy"), third.clone()),
            (word("zzz"), third),
        ],
    );
    Superpotential {
        short,
        symmetric: symmetric_cubic(a, b, c),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CentralForm {
    /// `c(a³−c³)x³ + a(b³−c³)xyz + b(c³−a³)yxz + c(c³−b³)y³`
    As,
    /// `a(b³−c³)(xyz+yzx+zxy) + b(c³−a³)(yxz+xzy+zyx) + c(a³−b³)(x³+y³+z³)`,
    /// which represents three times the `As` form in the quotient.
    Symmetrized,
    /// The same cyclic shape with first coefficient `c(a³−b³)`. This variant
    /// circulates as a closed form; checks report on it without asserting.
    Alternate,
}

/// The Hesse-curve point `[a(b³−c³) : b(c³−a³) : c(a³−b³)]`.
pub fn dual_parameters<T: Field>(params: &SklyaninParams<T>) -> SklyaninParams<T> {
    let SklyaninParams { a, b, c } = params;
    let (a3, b3, c3) = (a.pow(3), b.pow(3), c.pow(3));
    SklyaninParams::new(
        a.clone() * (b3.clone() - c3.clone()),
        b.clone() * (c3 - a3.clone()),
        c.clone() * (a3 - b3),
    )
}

pub fn central_element<T: Field>(params: &SklyaninParams<T>, form: CentralForm) -> FreePoly<T> {
    let SklyaninParams { a, b, c } = params;
    let (a3, b3, c3) = (a.pow(3), b.pow(3), c.pow(3));
    match form {
        CentralForm::As => FreePoly::from_terms(
            a,
            [
                (word("xxx"), c.clone() * (a3.clone() - c3.clone())),
                (word("xyz"), a.clone() * (b3.clone() - c3.clone())),
                (word("yxz"), b.clone() * (c3.clone() - a3)),
                (word("yyy"), c.clone() * (c3 - b3)),
            ],
        ),
        CentralForm::Symmetrized => {
            let d = dual_parameters(params);
            symmetric_cubic(&d.a, &d.b, &d.c)
        }
        CentralForm::Alternate => {
            let d = dual_parameters(params);
            symmetric_cubic(&d.c, &d.b, &d.c)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::word::{X, Y, Z};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    #[test]
    fn commutative_point_gives_commutators() {
        let r = sklyanin_relations(&SklyaninParams::from_ints(1, -1, 0)).unwrap();
        let z = q(0);
        assert_eq!(
            r[0],
            FreePoly::from_pairs(&z, &[("yz", q(1)), ("zy", q(-1))])
        );
        assert_eq!(
            r[1],
            FreePoly::from_pairs(&z, &[("zx", q(1)), ("xz", q(-1))])
        );
        assert_eq!(
            r[2],
            FreePoly::from_pairs(&z, &[("xy", q(1)), ("yx", q(-1))])
        );
    }

    #[test]
    fn generic_relations_have_nine_terms() {
        let r = sklyanin_relations(&SklyaninParams::from_ints(1, 2, 3)).unwrap();
        assert_eq!(r.iter().map(FreePoly::len).sum::<usize>(), 9);
        assert_eq!(r[0].coefficient(&word("zy")), q(2));
        assert_eq!(r[0].coefficient(&word("xx")), q(3));
    }

    #[test]
    fn squares_only() {
        let r = sklyanin_relations(&SklyaninParams::from_ints(0, 0, 1)).unwrap();
        assert_eq!(r[0], FreePoly::from_pairs(&q(0), &[("xx", q(1))]));
        assert_eq!(r[1], FreePoly::from_pairs(&q(0), &[("yy", q(1))]));
        assert_eq!(r[2], FreePoly::from_pairs(&q(0), &[("zz", q(1))]));
    }

    #[test]
    fn zero_params_rejected() {
        assert!(matches!(
            sklyanin_relations(&SklyaninParams::from_ints(0, 0, 0)),
            Err(Error::DegenerateParams(_))
        ));
    }

    #[test]
    fn cyclic_derivative_examples() {
        let z = q(0);
        let xyz = FreePoly::from_pairs(&z, &[("xyz", q(1))]);
        assert_eq!(
            cyclic_derivative(&xyz, X),
            FreePoly::from_pairs(&z, &[("yz", q(1))])
        );
        let x3 = FreePoly::from_pairs(&z, &[("xxx", q(1))]);
        assert!(cyclic_derivative(&x3, Y).is_zero());
        assert_eq!(
            cyclic_derivative(&x3, X),
            FreePoly::from_pairs(&z, &[("xx", q(3))])
        );
    }

    #[test]
    fn short_superpotential_derivatives_are_relations() {
        let p = SklyaninParams::from_ints(1, 2, 3);
        let w = superpotential(&p);
        let rel = sklyanin_relations(&p).unwrap();
        assert_eq!(cyclic_derivative(&w.short, X), rel[0]);
    }

    #[test]
    fn symmetric_superpotential_gives_three_times_relations() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let p = SklyaninParams::random(&mut rng);
            let w = superpotential(&p);
            let rel = sklyanin_relations(&p).unwrap();
            for (v, r) in [X, Y, Z].into_iter().zip(&rel) {
                assert_eq!(cyclic_derivative(&w.symmetric, v), r.scale(&q(3)));
                assert_eq!(cyclic_derivative(&w.short, v), *r);
            }
        }
    }

    #[test]
    fn special_superpotentials() {
        let w = superpotential(&SklyaninParams::from_ints(1, -1, 0));
        let expected = FreePoly::from_pairs(
            &q(0),
            &[
                ("xyz", q(1)),
                ("yzx", q(1)),
                ("zxy", q(1)),
                ("yxz", q(-1)),
                ("xzy", q(-1)),
                ("zyx", q(-1)),
            ],
        );
        assert_eq!(w.symmetric, expected);
        let w = superpotential(&SklyaninParams::from_ints(0, 0, 3));
        assert_eq!(
            w.short,
            FreePoly::from_pairs(&q(0), &[("xxx", q(1)), ("yyy", q(1)), ("zzz", q(1))])
        );
    }

    #[test]
    fn central_element_coefficients() {
        let sym = central_element(
            &SklyaninParams::from_ints(1, -1, 0),
            CentralForm::Symmetrized,
        );
        // a(b³−c³) = −1, b(c³−a³) = 1, c(a³−b³) = 0
        assert_eq!(sym.coefficient(&word("xyz")), q(-1));
        assert_eq!(sym.coefficient(&word("zyx")), q(1));
        assert_eq!(sym.len(), 6);
        let as_form = central_element(&SklyaninParams::from_ints(1, 2, 3), CentralForm::As);
        assert_eq!(as_form.coefficient(&word("xxx")), q(-78));
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..5 {
            let p = SklyaninParams::random(&mut rng);
            assert!(central_element(&p, CentralForm::Symmetrized).len() <= 21);
        }
    }

    #[test]
    fn dual_parameters_of_one_two_three() {
        let d = dual_parameters(&SklyaninParams::from_ints(1, 2, 3));
        assert_eq!(d, SklyaninParams::from_ints(-19, 52, -21));
    }
}
