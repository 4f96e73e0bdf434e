use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{Field, HpComplex, Numeric};

use super::curve::{HesseCurve, ProjPoint};
use super::dual::Dual;

/// Tuning for [`find_torsion`].
#[derive(Debug, Clone, PartialEq)]
pub struct TorsionOptions {
    pub max_starts: usize,
    pub newton_iters: usize,
    /// Working precision for the final polish; 53 means hardware doubles.
    pub precision_bits: usize,
    /// Bound on the chordal distance `[n]p ↔ O`.
    pub tol: f64,
    /// Lower bound on the chordal distance `[d]p ↔ O` for proper divisors `d`.
    pub margin: f64,
}

impl Default for TorsionOptions {
    fn default() -> Self {
        TorsionOptions {
            max_starts: 500,
            newton_iters: 80,
            precision_bits: 53,
            tol: 1e-8,
            margin: 1e-3,
        }
    }
}

/// A certified point of exact order `n`.
#[derive(Debug, Clone)]
pub struct TorsionPoint {
    pub n: u32,
    pub point: ProjPoint<Complex64>,
    /// The polished point when `precision_bits > 53`.
    pub refined: Option<ProjPoint<HpComplex>>,
    /// Index of the multistart seed that converged.
    pub start: usize,
    /// Chordal distance from `[n]p` to `O`.
    pub residual: f64,
    /// Smallest chordal distance from `[d]p` to `O` over proper divisors `d`.
    pub divisor_margin: f64,
}

/// Chordal distances of `[n]p` and of the nearest proper-divisor multiple to `O`.
pub fn order_certificate<T: Numeric>(
    e: &HesseCurve<T>,
    p: &ProjPoint<T>,
    n: u32,
) -> Result<(f64, f64)> {
    let mult = e.multiples(n as usize, p)?;
    let o = ProjPoint::origin(&p.0[0]);
    let residual = mult[n as usize].chordal(&o);
    let margin = (1..n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|d| mult[d as usize].chordal(&o))
        .fold(f64::INFINITY, f64::min);
    Ok((residual, margin))
}

/// Least `1 ≤ k ≤ bound` with `[k]P = O` to chordal tolerance `tol`.
pub fn point_order<T: Numeric>(
    e: &HesseCurve<T>,
    p: &ProjPoint<T>,
    bound: u32,
    tol: f64,
) -> Option<u32> {
    let o = ProjPoint::origin(&p.0[0]);
    let mut acc = p.clone();
    for k in 1..=bound {
        if acc.chordal(&o) < tol {
            return Some(k);
        }
        acc = e.add(&acc, p).ok()?;
    }
    None
}

/// Residuals `[F(P), Q_Z/(Q_X−Q_Y), (Q_X+Q_Y)/(Q_X−Q_Y)]` with `P = [X:Y:1]`
/// and `Q = [n]P`; the last two are the cross product `Q × O` rescaled.
fn system<T: Field>(e: &HesseCurve<T>, n: u32, x: T, y: T) -> Result<[T; 3]> {
    let p = ProjPoint([x.clone(), y, x.one_like()]);
    let f = e.eval(&p);
    let [qx, qy, qz] = e.scalar_mul(n as i64, &p)?.0;
    let den = qx.clone() - qy.clone();
    if den.is_zero() {
        return Err(Error::NumericFailure("[n]P hit the line X = Y".into()));
    }
    Ok([f, qz / den.clone(), (qx + qy) / den])
}

fn lift<T: Field>(e: &HesseCurve<T>) -> HesseCurve<Dual<T>> {
    e.map(|c| Dual::constant(c.clone()))
}

/// One Gauss–Newton step on the overdetermined 3×2 system.
fn newton_step<T: Numeric>(e: &HesseCurve<Dual<T>>, n: u32, v: &[T; 2]) -> Result<([T; 2], f64)> {
    let gx = system(
        e,
        n,
        Dual::variable(v[0].clone()),
        Dual::constant(v[1].clone()),
    )?;
    let gy = system(
        e,
        n,
        Dual::constant(v[0].clone()),
        Dual::variable(v[1].clone()),
    )?;
    let g: Vec<T> = gx.iter().map(|d| d.v.clone()).collect();
    let jx: Vec<T> = gx.iter().map(|d| d.d.clone()).collect();
    let jy: Vec<T> = gy.iter().map(|d| d.d.clone()).collect();
    // normal equations (JᴴJ) δ = −Jᴴg
    let zero = v[0].zero_like();
    let ip = |a: &[T], b: &[T]| {
        a.iter()
            .zip(b)
            .fold(zero.clone(), |s, (x, y)| s + x.conj() * y.clone())
    };
    let (a11, a12, a21, a22) = (ip(&jx, &jx), ip(&jx, &jy), ip(&jy, &jx), ip(&jy, &jy));
    let (b1, b2) = (-ip(&jx, &g), -ip(&jy, &g));
    let det = a11.clone() * a22.clone() - a12.clone() * a21.clone();
    if det.is_zero() {
        return Err(Error::NumericFailure("singular Newton system".into()));
    }
    let dx = (a22 * b1.clone() - a12 * b2.clone()) / det.clone();
    let dy = (a11 * b2 - a21 * b1) / det;
    let step = dx.magnitude().max(dy.magnitude());
    let res = g.iter().map(Field::magnitude).fold(0.0, f64::max);
    if !step.is_finite() || !res.is_finite() {
        return Err(Error::NumericFailure("Newton diverged".into()));
    }
    Ok(([v[0].clone() + dx, v[1].clone() + dy], step))
}

fn newton<T: Numeric>(
    e: &HesseCurve<T>,
    n: u32,
    mut v: [T; 2],
    iters: usize,
    stop: f64,
) -> Result<[T; 2]> {
    let de = lift(e);
    for _ in 0..iters {
        let (next, step) = newton_step(&de, n, &v)?;
        v = next;
        let size = v[0].magnitude().max(v[1].magnitude());
        if size > 1e8 {
            return Err(Error::NumericFailure("Newton iterate escaped".into()));
        }
        if step <= stop * (1.0 + size) {
            return Ok(v);
        }
    }
    Ok(v)
}

fn attempt(
    e: &HesseCurve<Complex64>,
    n: u32,
    seed: u64,
    start: usize,
    opts: &TorsionOptions,
) -> Option<TorsionPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(start as u64);
    let mut draw = || Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
    let v0 = [draw(), draw()];
    let v = newton(e, n, v0, opts.newton_iters, 1e-14).ok()?;
    let point = ProjPoint([v[0], v[1], Complex64::new(1.0, 0.0)]).normalized();
    let (refined, residual, divisor_margin) = if opts.precision_bits > 53 {
        let bits = opts.precision_bits;
        let hp = e.map(|c| HpComplex::from_c64(*c, bits));
        let start_hp = [
            HpComplex::from_c64(v[0], bits),
            HpComplex::from_c64(v[1], bits),
        ];
        let stop = (-(bits as f64)).exp2() * 1e3;
        let w = newton(&hp, n, start_hp, 20, stop).ok()?;
        let one = w[0].one_like();
        let p = ProjPoint([w[0].clone(), w[1].clone(), one]).normalized();
        let (r, m) = order_certificate(&hp, &p, n).ok()?;
        (Some(p), r, m)
    } else {
        let (r, m) = order_certificate(e, &point, n).ok()?;
        (None, r, m)
    };
    let point = refined.as_ref().map(ProjPoint::to_c64).unwrap_or(point);
    let on_curve = e.residual(&point) < opts.tol;
    (on_curve && residual < opts.tol && divisor_margin > opts.margin).then_some(TorsionPoint {
        n,
        point,
        refined,
        start,
        residual,
        divisor_margin,
    })
}

/// A point of exact order `n` on `E`, by seeded multistart Newton.
///
/// Start `i` draws from the ChaCha stream `i` of `seed`, and the lowest
/// successful index wins, so the result does not depend on thread count.
pub fn find_torsion(
    e: &HesseCurve<Complex64>,
    n: u32,
    seed: u64,
    opts: &TorsionOptions,
) -> Result<TorsionPoint> {
    if n == 0 {
        return Err(Error::Usage("torsion order must be positive".into()));
    }
    if n == 1 {
        let o = ProjPoint::origin(&e.nu);
        return Ok(TorsionPoint {
            n,
            point: o,
            refined: None,
            start: 0,
            residual: 0.0,
            divisor_margin: f64::INFINITY,
        });
    }
    (0..opts.max_starts)
        .into_par_iter()
        .find_map_first(|s| attempt(e, n, seed, s, opts))
        .ok_or(Error::SearchExhausted {
            n,
            starts: opts.max_starts,
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve() -> HesseCurve<Complex64> {
        HesseCurve::new(Complex64::new(1.0, 0.0), Complex64::new(6.0, 0.0)).unwrap()
    }

    #[test]
    fn order_one_is_origin() {
        let t = find_torsion(&curve(), 1, 0, &TorsionOptions::default()).unwrap();
        assert_eq!(point_order(&curve(), &t.point, 5, 1e-8), Some(1));
    }

    #[test]
    fn two_torsion() {
        let e = curve();
        let t = find_torsion(&e, 2, 7, &TorsionOptions::default()).unwrap();
        assert!(t.residual < 1e-8);
        let twice = e.double(&t.point).unwrap();
        assert!(twice.chordal(&ProjPoint::origin(&e.nu)) < 1e-8);
        assert_eq!(point_order(&e, &t.point, 12, 1e-8), Some(2));
    }

    #[test]
    fn four_and_five_torsion() {
        let e = curve();
        for n in [4, 5] {
            let t = find_torsion(&e, n, 1, &TorsionOptions::default()).unwrap();
            assert!(t.divisor_margin > 1e-3);
            assert_eq!(point_order(&e, &t.point, 12, 1e-8), Some(n));
        }
    }

    #[test]
    fn deterministic_under_seed() {
        let e = curve();
        let a = find_torsion(&e, 4, 9, &TorsionOptions::default()).unwrap();
        let b = find_torsion(&e, 4, 9, &TorsionOptions::default()).unwrap();
        assert_eq!(a.point, b.point);
        assert_eq!(a.start, b.start);
    }

    #[test]
    fn high_precision_polish() {
        let e = curve();
        let opts = TorsionOptions {
            precision_bits: 128,
            ..TorsionOptions::default()
        };
        let t = find_torsion(&e, 5, 2, &opts).unwrap();
        let hp = t.refined.expect("refined point");
        assert_eq!(hp.0[0].precision_bits(), 128);
        assert!(t.residual < 1e-15, "{}", t.residual);
    }

    #[test]
    fn generic_point_has_no_small_order() {
        use rand::SeedableRng;
        let e = curve();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let p = e.random_point(&mut rng);
        assert_eq!(point_order(&e, &p, 12, 1e-8), None);
    }

    #[test]
    fn exhaustion_is_reported() {
        let opts = TorsionOptions {
            max_starts: 0,
            ..TorsionOptions::default()
        };
        assert!(matches!(
            find_torsion(&curve(), 4, 0, &opts),
            Err(Error::SearchExhausted { n: 4, starts: 0 })
        ));
    }
}
