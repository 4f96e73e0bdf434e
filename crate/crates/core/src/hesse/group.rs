use crate::error::{Error, Result};
use crate::linalg::Field;

use super::curve::{dot, HesseCurve, ProjPoint};

fn max_mag<T: Field>(v: &[T; 3]) -> f64 {
    v.iter().map(Field::magnitude).fold(0.0, f64::max)
}

/// True if `v` is zero up to the rounding noise expected at magnitude `scale`.
/// Exact fields demand literal zero.
fn negligible<T: Field>(v: &[T; 3], scale: f64) -> bool {
    if v.iter().all(Field::is_zero) {
        return true;
    }
    let eps = v[0].unit_roundoff();
    eps > 0.0 && max_mag(v) <= eps.sqrt() * scale
}

fn lin<T: Field>(s: T, p: &[T; 3], t: T, q: &[T; 3]) -> [T; 3] {
    [0, 1, 2].map(|i| s.clone() * p[i].clone() + t.clone() * q[i].clone())
}

/// Coefficients of the tangent line at `p` on the pencil member through `p`:
/// `(2a³bc − b⁴c − bc⁴, 2ab³c − a⁴c − ac⁴, 2abc³ − a⁴b − ab⁴)`.
///
/// They vanish at the nine base points of the pencil.
pub fn pencil_tangent<T: Field>(p: &ProjPoint<T>) -> [T; 3] {
    let [a, b, c] = p.0.clone();
    let two = a.from_i64_like(2);
    let abc = a.clone() * b.clone() * c.clone();
    [
        two.clone() * abc.clone() * a.pow(2) - b.clone() * c.clone() * (b.pow(3) + c.pow(3)),
        two.clone() * abc.clone() * b.pow(2) - a.clone() * c.clone() * (a.pow(3) + c.pow(3)),
        two * abc * c.pow(2) - a.clone() * b.clone() * (a.pow(3) + b.pow(3)),
    ]
}

impl<T: Field> HesseCurve<T> {
    fn coef_scale(&self) -> f64 {
        self.nu.magnitude().max(self.mu.magnitude())
    }

    /// Tangent line at `p ∈ E`, from the pencil display, falling back to the
    /// gradient of `E` at base points where the display degenerates.
    pub fn tangent_line(&self, p: &ProjPoint<T>) -> [T; 3] {
        let l = pencil_tangent(p);
        if !negligible(&l, max_mag(&p.0).powi(6)) {
            return l;
        }
        self.gradient(p)
    }

    /// Third point of `E` on the chord `PQ`, or on the tangent at `P` when
    /// the points coincide.
    pub fn third_intersection(&self, p: &ProjPoint<T>, q: &ProjPoint<T>) -> Result<ProjPoint<T>> {
        let scale = self.coef_scale() * max_mag(&p.0).powi(2) * max_mag(&q.0).powi(2);
        if !p.proj_eq(q) {
            // F(P + sQ) = s·(∇F(P)·Q) + s²·(∇F(Q)·P) on E
            let alpha = dot(&self.gradient(q), &p.0);
            let beta = dot(&self.gradient(p), &q.0);
            let r = lin(alpha, &p.0, -beta, &q.0);
            if !negligible(&r, scale) {
                return Ok(ProjPoint(r).normalized());
            }
        }
        self.tangent_third(p)
    }

    fn tangent_third(&self, p: &ProjPoint<T>) -> Result<ProjPoint<T>> {
        let l = self.tangent_line(p);
        let k = (0..3)
            .max_by(|&i, &j| p.0[i].magnitude().total_cmp(&p.0[j].magnitude()))
            .unwrap_or(0);
        let mut e = [l[0].zero_like(), l[0].zero_like(), l[0].zero_like()];
        e[k] = l[0].one_like();
        // T is where the tangent meets X_k = 0, so T ≠ P.
        let t = ProjPoint(l).cross(&ProjPoint(e));
        let t = ProjPoint(t).normalized();
        let ft = self.eval(&t);
        let g = dot(&self.gradient(&t), &p.0);
        let r = lin(ft, &p.0, -g, &t.0);
        let scale = self.coef_scale() * max_mag(&p.0) * max_mag(&t.0).powi(3);
        if negligible(&r, scale) {
            return Err(Error::NumericFailure(
                "tangent third intersection vanished at working precision".into(),
            ));
        }
        Ok(ProjPoint(r).normalized())
    }

    pub fn add(&self, p: &ProjPoint<T>, q: &ProjPoint<T>) -> Result<ProjPoint<T>> {
        Ok(self.third_intersection(p, q)?.neg())
    }

    pub fn double(&self, p: &ProjPoint<T>) -> Result<ProjPoint<T>> {
        Ok(self.tangent_third(p)?.neg())
    }

    /// `[k]P` by double-and-add; negative `k` negates.
    pub fn scalar_mul(&self, k: i64, p: &ProjPoint<T>) -> Result<ProjPoint<T>> {
        let mut acc = ProjPoint::origin(&p.0[0]);
        let m = k.unsigned_abs();
        for bit in (0..64 - m.leading_zeros()).rev() {
            acc = self.double(&acc)?;
            if (m >> bit) & 1 == 1 {
                acc = self.add(&acc, p)?;
            }
        }
        Ok(if k < 0 { acc.neg() } else { acc })
    }

    /// The multiples `[0]P, [1]P, …, [k]P`, built by repeated addition.
    pub fn multiples(&self, k: usize, p: &ProjPoint<T>) -> Result<Vec<ProjPoint<T>>> {
        let mut out = vec![ProjPoint::origin(&p.0[0])];
        for _ in 0..k {
            let next = self.add(out.last().expect("nonempty"), p)?;
            out.push(next);
        }
        Ok(out)
    }
}

/// `[a(b³−c³) : b(c³−a³) : c(a³−b³)]`, the third point of the tangent at
/// `p = [a:b:c]` on the pencil member through `p`.
pub fn minus2p<T: Field>(p: &ProjPoint<T>) -> ProjPoint<T> {
    let [a, b, c] = p.0.clone();
    let (a3, b3, c3) = (a.pow(3), b.pow(3), c.pow(3));
    ProjPoint([
        a * (b3.clone() - c3.clone()),
        b * (c3 - a3.clone()),
        c * (a3 - b3),
    ])
    .normalized()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{Complex64, Rational};
    use num_bigint::BigInt;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn pt(a: i64, b: i64, c: i64) -> ProjPoint<Rational> {
        ProjPoint::new(q(a), q(b), q(c))
    }

    fn curve() -> HesseCurve<Complex64> {
        HesseCurve::new(Complex64::new(1.0, 0.0), Complex64::new(5.0, 0.7)).unwrap()
    }

    #[test]
    fn worked_instance() {
        let p = pt(1, 2, 3);
        let e = HesseCurve::through(&p).unwrap();
        let m = minus2p(&p);
        assert_eq!(m, pt(-19, 52, -21));
        // both sides of X³+Y³+Z³ = 6XYZ
        let lhs = q(-19).pow(3) + q(52).pow(3) + q(-21).pow(3);
        assert_eq!(lhs, q(124488));
        assert_eq!(q(6) * q(-19) * q(52) * q(-21), q(124488));
        assert!(e.contains_exact(&m));
        assert_eq!(e.third_intersection(&p, &p).unwrap(), m);
        assert!(e.double(&p).unwrap().proj_eq(&pt(52, -19, -21)));
    }

    #[test]
    fn pencil_tangent_is_gradient_up_to_sign() {
        let p = pt(1, 2, 3);
        let e = HesseCurve::through(&p).unwrap();
        let l = pencil_tangent(&p);
        assert!(ProjPoint(l).proj_eq(&ProjPoint(e.gradient(&p))));
    }

    #[test]
    fn equal_coordinates_kill_first_entry() {
        let m = minus2p(&pt(1, 2, 2));
        assert!(m.0[0] == q(0));
    }

    #[test]
    fn base_point_tangent_uses_gradient() {
        let e = HesseCurve::new(q(1), q(6)).unwrap();
        let o = ProjPoint::origin(&q(0));
        // O is a flex, so 2O = O
        assert!(e.double(&o).unwrap().proj_eq(&o));
        let p = pt(1, 2, 3);
        assert!(e.add(&p, &o).unwrap().proj_eq(&p));
        assert!(e.add(&p, &p.neg()).unwrap().proj_eq(&o));
    }

    #[test]
    fn exact_group_law_stays_on_curve() {
        let p = pt(1, 2, 3);
        let e = HesseCurve::through(&p).unwrap();
        let p2 = e.double(&p).unwrap();
        let p3 = e.add(&p2, &p).unwrap();
        assert!(e.contains_exact(&p3));
        assert!(e.scalar_mul(3, &p).unwrap().proj_eq(&p3));
        assert!(e.scalar_mul(-3, &p).unwrap().proj_eq(&p3.neg()));
    }

    #[test]
    fn group_axioms_numerically() {
        let e = curve();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let p = e.random_point(&mut rng);
            let q = e.random_point(&mut rng);
            let r = e.random_point(&mut rng);
            let o = ProjPoint::origin(&p.0[0]);
            assert!(e.add(&p, &o).unwrap().chordal(&p) < 1e-9);
            assert!(e.add(&p, &p.neg()).unwrap().chordal(&o) < 1e-9);
            assert!(e.add(&p, &q).unwrap().chordal(&e.add(&q, &p).unwrap()) < 1e-9);
            let lhs = e.add(&e.add(&p, &q).unwrap(), &r).unwrap();
            let rhs = e.add(&p, &e.add(&q, &r).unwrap()).unwrap();
            assert!(lhs.chordal(&rhs) < 1e-9, "{}", lhs.chordal(&rhs));
            assert!(e.residual(&lhs) < 1e-9);
        }
    }

    #[test]
    fn closed_form_matches_chord_tangent() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let e = curve();
        for _ in 0..50 {
            let p = e.random_point(&mut rng);
            let through = HesseCurve::through(&p).unwrap();
            assert!(through.curve_distance(&e) < 1e-9);
            let m = minus2p(&p);
            assert!(m.chordal(&e.double(&p).unwrap().neg()) < 1e-9);
            assert!(HesseCurve::through(&m).unwrap().curve_distance(&through) < 1e-9);
        }
    }

    #[test]
    fn scalar_mul_agrees_with_repeated_addition() {
        let e = curve();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let p = e.random_point(&mut rng);
        let m = e.multiples(7, &p).unwrap();
        for (k, pk) in m.iter().enumerate() {
            assert!(e.scalar_mul(k as i64, &p).unwrap().chordal(pk) < 1e-9);
        }
    }
}
