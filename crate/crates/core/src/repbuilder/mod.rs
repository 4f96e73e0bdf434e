//! Cyclic `n`-dimensional representations built from a torsion orbit.
//!
//! For `p` of order `n` and `r` on `E`, the orbit `r + [i]p` fills the
//! subdiagonals of three `n×n` matrices with one corner entry scaled by `t`.
//! The checks here certify that these matrices give simple representations
//! lying over the isogenous curve `E/⟨p⟩`.

mod cubic;
mod graded;
mod orbit;
mod rep;

pub use cubic::{cubic_residual, fit_cubic, CubicFit, CUBIC_MONOMIALS};
pub use graded::{graded_homogeneity_check, symbolic_cyclic_matrices, SymbolicMat, TMonomial};
pub use orbit::{graph_pair_residual, orbit, CPoint, OrbitData, CLOSURE_TOL};
pub use rep::{
    build_cyclic_rep, cyclic_matrices, matrices_residual, stabilizer_residual, MatRep, Orientation,
    ORIENTATION_TOL,
};

use num_complex::Complex64;

use crate::linalg::CMat;

/// `λ = tr M / n` and the largest entry of `M − λI`.
pub fn scalar_part(m: &CMat) -> (Complex64, f64) {
    let n = m.nrows();
    let lambda = m.trace() / n as f64;
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let target = if i == j {
                lambda
            } else {
                Complex64::new(0.0, 0.0)
            };
            worst = worst.max((m[(i, j)] - target).norm());
        }
    }
    (lambda, worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{central_element, sklyanin_relations, CentralForm};
    use crate::hesse::{find_torsion, HesseCurve, ProjPoint, TorsionOptions};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn setup(n: u32) -> (HesseCurve<Complex64>, CPoint) {
        let e = HesseCurve::new(c(1.0), c(5.0)).unwrap();
        let p = find_torsion(&e, n, 3, &TorsionOptions::default())
            .unwrap()
            .point;
        (e, p)
    }

    fn rep_for(n: u32, seed: u64) -> (OrbitData, MatRep) {
        let (e, p) = setup(n);
        let r = e.random_point(&mut ChaCha8Rng::seed_from_u64(seed));
        let o = orbit(&e, &r, &p, n as usize).unwrap();
        let rep = build_cyclic_rep(&o, c(1.0)).unwrap();
        (o, rep)
    }

    #[test]
    fn orbit_of_origin() {
        let (e, p) = setup(2);
        let o = orbit(&e, &ProjPoint::origin(&c(0.0)), &p, 2).unwrap();
        assert!(o.points[0].chordal(&ProjPoint::origin(&c(0.0))) < 1e-12);
        assert!(o.points[1].chordal(&p) < 1e-12);
    }

    #[test]
    fn non_torsion_orbit_is_rejected() {
        let (e, _) = setup(2);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let r = e.random_point(&mut rng);
        let q = e.random_point(&mut rng);
        assert!(matches!(
            orbit(&e, &r, &q, 4),
            Err(crate::Error::NotTorsion(_))
        ));
    }

    #[test]
    fn graph_residual_detects_translation() {
        let (o, _) = rep_for(4, 1);
        let params = o.params();
        for i in 0..4 {
            let (a, b) = (&o.points[i], &o.points[(i + 1) % 4]);
            assert!(graph_pair_residual(a, b, &params) < 1e-8);
            assert!(graph_pair_residual(b, a, &params) > 1e-3);
            assert!(graph_pair_residual(a, a, &params) > 1e-3);
        }
    }

    #[test]
    fn built_reps_satisfy_relations() {
        for n in [2, 4, 5] {
            let (o, rep) = rep_for(n, 7);
            let params = o.params();
            let res = rep.relation_residual(&params);
            assert!(res < 1e-8, "n={n}: {res}");
            if n > 2 {
                assert_eq!(rep.orientation, Orientation::Reverse);
            }
            assert_eq!(
                rep.simplicity_dim(2 * n as usize).unwrap(),
                (n * n) as usize
            );
            assert!(rep.stabilizer_residual() < 1e-9);
            for r in sklyanin_relations(&params).unwrap() {
                assert!(scalar_part(&rep.eval_element(&r)).1 < 1e-8);
            }
            let c3 = rep.eval_element(&central_element(&params, CentralForm::As));
            let (lambda, off) = scalar_part(&c3);
            assert!(lambda.norm() < 1e-8 && off < 1e-8);
        }
    }

    #[test]
    fn two_dimensional_pattern() {
        let (o, rep) = rep_for(2, 4);
        let q = &rep.points;
        assert_eq!(rep.mats[0][(1, 0)], q[0].0[0]);
        assert_eq!(rep.mats[0][(0, 1)], q[1].0[0]);
        assert_eq!(rep.mats[0][(0, 0)], c(0.0));
        // ζ = −1 flips the off-diagonal entries
        let g = CMat::from_diagonal(&nalgebra::DVector::from_vec(vec![c(1.0), c(-1.0)]));
        let conj = &g * &rep.mats[1] * &g;
        assert!((conj + &rep.mats[1]).norm() < 1e-14);
        let _ = o;
    }

    #[test]
    fn degenerate_inputs() {
        let (o, rep) = rep_for(4, 9);
        let nil = MatRep::with_orientation(&o, rep.orientation, c(0.0));
        assert!(nil.mats.iter().all(|m| m.pow(4).norm() < 1e-14));
        assert!(nil.simplicity_dim(8).unwrap() < 16);
        let x = rep.eval_element(&crate::freealg::FreePoly::from_pairs(
            &c(0.0),
            &[("x", c(1.0))],
        ));
        assert!(scalar_part(&x).1 > 1e-3);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        use rand::Rng;
        let dense: [CMat; 3] =
            std::array::from_fn(|_| CMat::from_fn(4, 4, |_, _| c(rng.gen_range(-1.0..1.0))));
        assert!(matrices_residual(&dense, &o.params()) > 1e-2);
        assert!(stabilizer_residual(&dense) > 1e-2);
    }

    #[test]
    fn perturbation_is_first_order() {
        let (o, rep) = rep_for(4, 12);
        let mut pts = rep.points.clone();
        pts[1].0[0] += c(1e-4);
        let res = matrices_residual(&cyclic_matrices(&pts, c(1.0)), &o.params());
        assert!(res > 1e-6 && res < 1e-3, "{res}");
    }

    #[test]
    fn norm_points_lie_on_a_cubic() {
        let (e, p) = setup(4);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut norms = Vec::new();
        for _ in 0..12 {
            let r = e.random_point(&mut rng);
            let o = orbit(&e, &r, &p, 4).unwrap();
            let rep = build_cyclic_rep(&o, c(1.0)).unwrap();
            let shifted = orbit(&e, &o.points[1], &p, 4).unwrap();
            let rep2 = build_cyclic_rep(&shifted, c(1.0)).unwrap();
            let np = rep.norm_point().unwrap();
            assert!(np.chordal(&rep2.norm_point().unwrap()) < 1e-8);
            norms.push(np);
        }
        let fit = fit_cubic(&norms, 1e-9).unwrap();
        assert!(fit.held_out_residual < 1e-7, "{}", fit.held_out_residual);
    }

    #[test]
    fn cubic_fit_recovers_hesse_curve() {
        let e = HesseCurve::new(c(1.0), c(6.0)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let pts: Vec<CPoint> = (0..12).map(|_| e.random_point(&mut rng)).collect();
        let fit = fit_cubic(&pts, 1e-9).unwrap();
        // −(X³+Y³+Z³) + 6XYZ up to scale
        let k = fit.coefficients[4] / c(6.0);
        for (i, m) in CUBIC_MONOMIALS.iter().enumerate() {
            let expect = if m.contains(&3) {
                c(-1.0)
            } else if i == 4 {
                c(6.0)
            } else {
                c(0.0)
            };
            assert!((fit.coefficients[i] - expect * k).norm() < 1e-9);
        }
    }

    #[test]
    fn generic_points_have_no_cubic() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        use rand::Rng;
        let pts: Vec<CPoint> = (0..12)
            .map(|_| {
                ProjPoint::new(
                    c(rng.gen_range(-1.0..1.0)),
                    c(rng.gen_range(-1.0..1.0)),
                    c(1.0),
                )
            })
            .collect();
        match fit_cubic(&pts, 1e-9) {
            Err(_) => {}
            Ok(fit) => assert!(fit.held_out_residual > 1e-7),
        }
    }

    #[test]
    fn rotation_is_a_cyclic_conjugation() {
        let (e, p) = setup(5);
        let r = e.random_point(&mut ChaCha8Rng::seed_from_u64(3));
        let o1 = orbit(&e, &r, &p, 5).unwrap();
        let rep1 = build_cyclic_rep(&o1, c(1.0)).unwrap();
        let o2 = orbit(&e, &o1.points[1], &p, 5).unwrap();
        let rep2 = build_cyclic_rep(&o2, c(1.0)).unwrap();
        // with t = 1 every cycle entry is alike, so the shift permutation conjugates exactly
        let n = 5;
        let best = (0..n)
            .map(|s| {
                let perm =
                    CMat::from_fn(n, n, |i, j| if i == (j + s) % n { c(1.0) } else { c(0.0) });
                (0..3)
                    .map(|k| (perm.transpose() * &rep2.mats[k] * &perm - &rep1.mats[k]).norm())
                    .fold(0.0, f64::max)
            })
            .fold(f64::INFINITY, f64::min);
        assert!(best < 1e-8, "{best}");
    }

    #[test]
    fn graded_structure() {
        let (_, rep) = rep_for(4, 2);
        let shifts: Vec<i64> = (0..4).collect();
        let sym = symbolic_cyclic_matrices(&rep.points);
        assert!(graded_homogeneity_check(&sym, &shifts, 4));
        let mut moved = sym.clone();
        let corner = moved[0][0][3].take();
        moved[0][1][3] = corner;
        assert!(!graded_homogeneity_check(&moved, &shifts, 4));
        let (_, rep1) = rep_for(2, 2);
        let one = symbolic_cyclic_matrices(&rep1.points[..1]);
        assert!(graded_homogeneity_check(&one, &[0], 1));
    }
}
