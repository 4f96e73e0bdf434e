use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{Field, Numeric, Rational, ScalarText};

/// Projective point `[X:Y:Z]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjPoint<T>(pub [T; 3]);

impl<T: Field> ProjPoint<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        ProjPoint([x, y, z])
    }

    /// `O = [1:−1:0]`, the identity of every Hesse curve.
    pub fn origin(like: &T) -> Self {
        ProjPoint([like.one_like(), -like.one_like(), like.zero_like()])
    }

    pub fn coords(&self) -> &[T; 3] {
        &self.0
    }

    pub fn normalized(&self) -> Self {
        ProjPoint(T::normalize_triple(self.0.clone()))
    }

    pub fn is_zero_vector(&self) -> bool {
        self.0.iter().all(Field::is_zero)
    }

    /// `[X:Y:Z] ↦ [Y:X:Z]`.
    pub fn neg(&self) -> Self {
        let [x, y, z] = self.0.clone();
        ProjPoint([y, x, z])
    }

    pub fn cross(&self, other: &Self) -> [T; 3] {
        let [a, b, c] = &self.0;
        let [d, e, f] = &other.0;
        [
            b.clone() * f.clone() - c.clone() * e.clone(),
            c.clone() * d.clone() - a.clone() * f.clone(),
            a.clone() * e.clone() - b.clone() * d.clone(),
        ]
    }

    /// Exact projective equality: proportional coordinate vectors.
    pub fn proj_eq(&self, other: &Self) -> bool {
        self.cross(other).iter().all(Field::is_zero)
    }
}

impl<T: Numeric> ProjPoint<T> {
    pub fn to_c64(&self) -> ProjPoint<Complex64> {
        ProjPoint(self.0.clone().map(|c| c.to_c64()))
    }

    /// Chordal distance `|P×Q| / (|P|·|Q|)`, in `[0, 1]`.
    pub fn chordal(&self, other: &Self) -> f64 {
        let p = self.to_c64();
        let q = other.to_c64();
        let norm = |v: &[Complex64; 3]| v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        let np = norm(&p.0);
        let nq = norm(&q.0);
        if np == 0.0 || nq == 0.0 {
            return 1.0;
        }
        norm(&p.cross(&q)) / (np * nq)
    }
}

impl<T: Field + ScalarText> ProjPoint<T> {
    /// Coordinates as report strings.
    pub fn to_text(&self) -> [String; 3] {
        [0, 1, 2].map(|i| self.0[i].to_text())
    }
}

/// Hesse cubic `μ·XYZ = ν·(X³+Y³+Z³)`, stored projectively as `[ν:μ]`.
#[derive(Debug, Clone, PartialEq)]
pub struct HesseCurve<T> {
    pub nu: T,
    pub mu: T,
}

impl<T: Field> HesseCurve<T> {
    /// Rejects the singular members `ν = 0` and `μ³ = 27ν³`.
    pub fn new(nu: T, mu: T) -> Result<Self> {
        let c = HesseCurve { nu, mu };
        if c.nu.is_zero() {
            return Err(Error::Degenerate(
                "ν = 0: the curve is the triangle XYZ = 0".into(),
            ));
        }
        if c.singularity_defect().is_zero() {
            return Err(Error::Degenerate("μ³ = 27ν³: the curve is singular".into()));
        }
        Ok(c)
    }

    /// `μ³ − 27ν³`.
    pub fn singularity_defect(&self) -> T {
        self.mu.pow(3) - self.nu.from_i64_like(27) * self.nu.pow(3)
    }

    /// The curve written as `α(X³+Y³+Z³) − β·XYZ`, i.e. `[ν:μ] = [α:β]`.
    pub fn from_alpha_beta(alpha: T, beta: T) -> Result<Self> {
        HesseCurve::new(alpha, beta)
    }

    /// The unique pencil member through `p`: `[ν:μ] = [abc : a³+b³+c³]`.
    pub fn through(p: &ProjPoint<T>) -> Result<Self> {
        let [a, b, c] = p.0.clone();
        let nu = a.clone() * b.clone() * c.clone();
        let mu = a.pow(3) + b.pow(3) + c.pow(3);
        HesseCurve::new(nu, mu)
    }

    /// `μ·XYZ − ν·(X³+Y³+Z³)`.
    pub fn eval(&self, p: &ProjPoint<T>) -> T {
        let [x, y, z] = p.0.clone();
        self.mu.clone() * x.clone() * y.clone() * z.clone()
            - self.nu.clone() * (x.pow(3) + y.pow(3) + z.pow(3))
    }

    pub fn gradient(&self, p: &ProjPoint<T>) -> [T; 3] {
        let [x, y, z] = p.0.clone();
        let three = self.nu.from_i64_like(3);
        [
            self.mu.clone() * y.clone() * z.clone() - three.clone() * self.nu.clone() * x.pow(2),
            self.mu.clone() * x.clone() * z.clone() - three.clone() * self.nu.clone() * y.pow(2),
            self.mu.clone() * x * y - three * self.nu.clone() * z.pow(2),
        ]
    }

    /// Same projective curve: `[ν:μ] = [ν':μ']`.
    pub fn same_curve(&self, other: &Self) -> bool {
        (self.nu.clone() * other.mu.clone() - self.mu.clone() * other.nu.clone()).is_zero()
    }

    pub fn contains_exact(&self, p: &ProjPoint<T>) -> bool {
        self.eval(p).is_zero()
    }

    /// `|F(P)|` with the point scaled to unit max-coordinate and the
    /// coefficients to unit max-modulus. Zero for exact members.
    pub fn residual(&self, p: &ProjPoint<T>) -> f64 {
        let scale = self.nu.magnitude().max(self.mu.magnitude());
        let q = ProjPoint(p.0.clone());
        let m = q.0.iter().map(Field::magnitude).fold(0.0, f64::max);
        if m == 0.0 || scale == 0.0 {
            return f64::INFINITY;
        }
        self.eval(&q).magnitude() / (scale * m.powi(3))
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> HesseCurve<U> {
        HesseCurve {
            nu: f(&self.nu),
            mu: f(&self.mu),
        }
    }
}

impl<T: Numeric> HesseCurve<T> {
    /// Chordal distance between `[ν:μ]` pairs.
    pub fn curve_distance(&self, other: &Self) -> f64 {
        let a = [self.nu.to_c64(), self.mu.to_c64()];
        let b = [other.nu.to_c64(), other.mu.to_c64()];
        let det = (a[0] * b[1] - a[1] * b[0]).norm();
        let na = (a[0].norm_sqr() + a[1].norm_sqr()).sqrt();
        let nb = (b[0].norm_sqr() + b[1].norm_sqr()).sqrt();
        det / (na * nb)
    }
}

impl HesseCurve<Rational> {
    pub fn to_c64(&self) -> HesseCurve<Complex64> {
        self.map(Numeric::to_c64)
    }
}

impl HesseCurve<Complex64> {
    /// A point on the curve from a random line through `O`.
    pub fn random_point<R: Rng>(&self, rng: &mut R) -> ProjPoint<Complex64> {
        loop {
            let mut draw = || Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let dir = ProjPoint([draw(), draw(), draw()]);
            let o = ProjPoint::origin(&dir.0[0]);
            // F(O + sD) = s·(c1 + c2·s + c3·s²)
            let c1 = dot(&self.gradient(&o), &dir.0);
            let c2 = dot(&self.gradient(&dir), &o.0);
            let c3 = self.eval(&dir);
            if c3.norm() < 1e-6 {
                continue;
            }
            let disc = (c2 * c2 - 4.0 * c3 * c1).sqrt();
            let s = (-c2 + disc) / (2.0 * c3);
            if s.norm() < 1e-3 || s.norm() > 1e3 {
                continue;
            }
            let p = ProjPoint([o.0[0] + s * dir.0[0], o.0[1] + s * dir.0[1], s * dir.0[2]]);
            return p.normalized();
        }
    }
}

pub(crate) fn dot<T: Field>(a: &[T; 3], b: &[T; 3]) -> T {
    a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone() + a[2].clone() * b[2].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn pt(a: i64, b: i64, c: i64) -> ProjPoint<Rational> {
        ProjPoint::new(q(a), q(b), q(c))
    }

    #[test]
    fn curve_through_one_two_three() {
        let e = HesseCurve::through(&pt(1, 2, 3)).unwrap();
        assert!(e.same_curve(&HesseCurve::new(q(1), q(6)).unwrap()));
        assert_eq!((e.nu.clone(), e.mu.clone()), (q(6), q(36)));
        assert!(e.contains_exact(&pt(1, 2, 3)));
        assert_eq!(e.residual(&pt(1, 2, 3)), 0.0);
    }

    #[test]
    fn degenerate_curves() {
        assert!(matches!(
            HesseCurve::through(&pt(1, -1, 0)),
            Err(Error::Degenerate(_))
        ));
        assert!(matches!(
            HesseCurve::through(&pt(1, 1, 1)),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn membership() {
        let e = HesseCurve::new(q(1), q(6)).unwrap();
        assert!(e.contains_exact(&pt(1, -1, 0)));
        // [1:1:0]: 0 − (1 + 1 + 0) = −2
        assert_eq!(e.eval(&pt(1, 1, 0)), q(-2));
        assert!(e.residual(&pt(1, 1, 0)) > 0.0);
        // alternative spelling of the same curve
        let alt = HesseCurve::from_alpha_beta(q(2), q(12)).unwrap();
        assert!(alt.same_curve(&e));
    }

    #[test]
    fn text_form() {
        assert_eq!(pt(1, -2, 3).to_text(), ["1", "-2", "3"]);
        let c = ProjPoint::new(
            Complex64::new(0.5, -1.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 2.0),
        );
        assert_eq!(c.to_text(), ["0.5-1.0i", "1.0+0.0i", "0.0+2.0i"]);
    }

    #[test]
    fn negation() {
        let o = ProjPoint::origin(&q(0));
        assert!(o.neg().proj_eq(&o));
        assert_eq!(pt(1, 2, 3).neg(), pt(2, 1, 3));
        assert_eq!(pt(1, 2, 3).neg().neg(), pt(1, 2, 3));
    }

    #[test]
    fn random_points_lie_on_curve() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        let e = HesseCurve::new(Complex64::new(1.0, 0.0), Complex64::new(5.0, 0.3)).unwrap();
        for _ in 0..20 {
            let p = e.random_point(&mut rng);
            assert!(e.residual(&p) < 1e-12);
        }
    }
}
