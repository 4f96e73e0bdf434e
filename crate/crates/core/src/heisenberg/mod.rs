//! The Heisenberg group of order 27 acting on `V = ℂx + ℂy + ℂz`.
//!
//! Matrices act on coordinate columns: the image of the `j`-th letter is the
//! `j`-th column. All arithmetic is exact over `ℚ(ρ)`.

mod cyclo;

use serde::Serialize;

use crate::error::Result;
use crate::freealg::{
    central_element, sklyanin_relations, CentralForm, FreePoly, GradedQuotient, SklyaninParams,
    Word,
};
use crate::linalg::{rank, row_reduce, Field, Mat, Rational};

pub use cyclo::CycloQ;

type M3 = [[CycloQ; 3]; 3];

/// An element `u^i v^j w^k` with its matrix on `V`.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupElement {
    pub label: String,
    pub matrix: M3,
}

fn mat_mul(a: &M3, b: &M3) -> M3 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (0..3).fold(CycloQ::int(0), |s, k| s + a[i][k].clone() * b[k][j].clone())
        })
    })
}

fn diag(d: [CycloQ; 3]) -> M3 {
    let [a, b, c] = d;
    let z = || CycloQ::int(0);
    [[a, z(), z()], [z(), b, z()], [z(), z(), c]]
}

fn identity() -> M3 {
    diag([CycloQ::int(1), CycloQ::int(1), CycloQ::int(1)])
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement {
            label: "1".into(),
            matrix: identity(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        GroupElement {
            label: format!("{}·{}", self.label, other.label),
            matrix: mat_mul(&self.matrix, &other.matrix),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut m = identity();
        for _ in 0..k {
            m = mat_mul(&m, &self.matrix);
        }
        GroupElement {
            label: format!("({})^{k}", self.label),
            matrix: m,
        }
    }

    /// The group has exponent 3, so `g⁻¹ = g²`.
    pub fn inverse(&self) -> Self {
        let mut g = self.pow(2);
        g.label = format!("({})⁻¹", self.label);
        g
    }

    pub fn trace(&self) -> CycloQ {
        (0..3).fold(CycloQ::int(0), |s, i| s + self.matrix[i][i].clone())
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == identity()
    }
}

/// The displayed generators `u`, `v`, `w`.
pub fn generators() -> (GroupElement, GroupElement, GroupElement) {
    let o = || CycloQ::int(1);
    let z = || CycloQ::int(0);
    let rho = CycloQ::rho();
    let u = [[z(), o(), z()], [z(), z(), o()], [o(), z(), z()]];
    let v = diag([o(), rho.clone(), rho.pow(2)]);
    let w = diag([rho.clone(), rho.clone(), rho]);
    (
        GroupElement {
            label: "u".into(),
            matrix: u,
        },
        GroupElement {
            label: "v".into(),
            matrix: v,
        },
        GroupElement {
            label: "w".into(),
            matrix: w,
        },
    )
}

/// All 27 elements `u^i v^j w^k`.
pub fn elements() -> Vec<GroupElement> {
    let (u, v, w) = generators();
    let mut out = Vec::with_capacity(27);
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let mut g = u.pow(i).mul(&v.pow(j)).mul(&w.pow(k));
                g.label = format!("u^{i} v^{j} w^{k}");
                out.push(g);
            }
        }
    }
    out
}

/// Exact checks of the presentation `[u,v] = w`, `w` central, `u³ = v³ = w³ = 1`.
#[derive(Debug, Clone, Serialize)]
pub struct PresentationCheck {
    pub commutator_is_w: bool,
    pub w_central: bool,
    pub cubes_trivial: bool,
    pub distinct_elements: usize,
}

impl PresentationCheck {
    pub fn holds(&self) -> bool {
        self.commutator_is_w && self.w_central && self.cubes_trivial && self.distinct_elements == 27
    }
}

pub fn check_presentation() -> PresentationCheck {
    let (u, v, w) = generators();
    let comm = u.mul(&v).mul(&u.inverse()).mul(&v.inverse());
    let w_central = u.mul(&w).matrix == w.mul(&u).matrix && v.mul(&w).matrix == w.mul(&v).matrix;
    let cubes_trivial = [&u, &v, &w].iter().all(|g| g.pow(3).is_identity());
    let all = elements();
    let distinct = all
        .iter()
        .enumerate()
        .filter(|(i, g)| all[..*i].iter().all(|h| h.matrix != g.matrix))
        .count();
    PresentationCheck {
        commutator_is_w: comm.matrix == w.matrix,
        w_central,
        cubes_trivial,
        distinct_elements: distinct,
    }
}

/// Applies `g` letterwise to a polynomial in `x, y, z`.
pub fn act(g: &GroupElement, f: &FreePoly<CycloQ>) -> FreePoly<CycloQ> {
    let zero = CycloQ::int(0);
    let images: Vec<FreePoly<CycloQ>> = (0..3u8)
        .map(|j| {
            FreePoly::from_terms(
                &zero,
                (0..3u8).map(|i| (Word::letter(i), g.matrix[i as usize][j as usize].clone())),
            )
        })
        .collect();
    let mut out = FreePoly::zero(&zero);
    for (w, c) in f.terms() {
        let mut term = FreePoly::monomial(c.clone(), Word::empty());
        for &l in &w.0 {
            term = term.mul(&images[l as usize]);
        }
        out = out.add(&term);
    }
    out
}

pub fn to_cyclo(f: &FreePoly<Rational>) -> FreePoly<CycloQ> {
    f.map_coefficients(&CycloQ::int(0), |q| CycloQ::rational(q.clone()))
}

/// The rational polynomial, if every coefficient lies in `ℚ`.
pub fn to_rational(f: &FreePoly<CycloQ>) -> Option<FreePoly<Rational>> {
    let zero = Rational::from_integer(0.into());
    let terms: Option<Vec<_>> = f
        .terms()
        .map(|(w, c)| c.as_rational().map(|q| (w.clone(), q)))
        .collect();
    Some(FreePoly::from_terms(&zero, terms?))
}

/// A subspace of `V⊗V` given by a spanning list of quadratic polynomials.
#[derive(Debug, Clone)]
pub struct TensorSubspace {
    pub name: String,
    pub basis: Vec<FreePoly<CycloQ>>,
}

impl TensorSubspace {
    fn from_rational(name: &str, basis: Vec<FreePoly<Rational>>) -> Self {
        TensorSubspace {
            name: name.into(),
            basis: basis.iter().map(to_cyclo).collect(),
        }
    }

    fn matrix(&self) -> Mat<CycloQ> {
        let rows = self.basis.iter().map(|f| f.coordinates(2)).collect();
        Mat::from_rows(rows, 9, CycloQ::int(0))
    }

    pub fn dim(&self) -> usize {
        rank(&self.matrix())
    }
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn cyclic_triple(f: impl Fn(&str, &str, &str) -> FreePoly<Rational>) -> Vec<FreePoly<Rational>> {
    vec![
        f("yz", "zy", "xx"),
        f("zx", "xz", "yy"),
        f("xy", "yx", "zz"),
    ]
}

/// `A(yz−zy) + B(yz+zy) + C·x²` and its cyclic companions.
pub fn relation_space(a: &Rational, b: &Rational, c: &Rational) -> TensorSubspace {
    let zero = q(0);
    let basis = cyclic_triple(|p, r, s| {
        FreePoly::from_pairs(&zero, &[(p, a + b), (r, b - a), (s, c.clone())])
    });
    TensorSubspace::from_rational(&format!("relation_space({a},{b},{c})"), basis)
}

/// `∧²V`.
pub fn v1() -> TensorSubspace {
    let mut s = relation_space(&q(1), &q(0), &q(0));
    s.name = "V1".into();
    s
}

/// The off-diagonal part of `S²V`.
pub fn v2() -> TensorSubspace {
    let mut s = relation_space(&q(0), &q(1), &q(0));
    s.name = "V2".into();
    s
}

/// `ℂx² + ℂy² + ℂz²`.
pub fn v3() -> TensorSubspace {
    let mut s = relation_space(&q(0), &q(0), &q(1));
    s.name = "V3".into();
    s
}

/// Whether `relation_space(A,B,C)` equals the span of the Sklyanin relations
/// at `a = A+B`, `b = B−A`, `c = C`.
pub fn matches_sklyanin_span(a: &Rational, b: &Rational, c: &Rational) -> Result<bool> {
    let s = relation_space(a, b, c);
    let params = SklyaninParams::new(a + b, b - a, c.clone());
    let rel = sklyanin_relations(&params)?;
    let mut m = s.matrix();
    for r in rel.iter().map(to_cyclo) {
        m.push_row(r.coordinates(2));
    }
    Ok(rank(&m) == 3 && s.dim() == 3)
}

#[derive(Debug, Clone, Serialize)]
pub struct IsotypicReport {
    pub dim: usize,
    pub stable: bool,
    pub character_matches_dual: bool,
}

impl IsotypicReport {
    pub fn holds(&self) -> bool {
        self.dim == 3 && self.stable && self.character_matches_dual
    }
}

/// Stability under the group, and whether each element's trace on `S`
/// equals the conjugate of its trace on `V`.
pub fn isotypic_report(s: &TensorSubspace) -> IsotypicReport {
    let ech = row_reduce(&s.matrix());
    let zero = CycloQ::int(0);
    // rows of the reduced echelon form are a basis whose coordinates are read at the pivots
    let basis: Vec<FreePoly<CycloQ>> = ech
        .basis()
        .iter()
        .map(|row| {
            FreePoly::from_terms(
                &zero,
                row.iter()
                    .enumerate()
                    .map(|(i, c)| (Word::from_index(i, 2), c.clone())),
            )
        })
        .collect();
    let elems = elements();
    let stable = elems.iter().all(|g| {
        basis
            .iter()
            .all(|b| ech.contains(&act(g, b).coordinates(2)))
    });
    let character_matches_dual = stable
        && elems.iter().all(|g| {
            let tr = basis
                .iter()
                .zip(ech.pivots())
                .fold(zero.clone(), |s, (b, &p)| {
                    s + act(g, b).coordinates(2)[p].clone()
                });
            tr == g.trace().galois()
        });
    IsotypicReport {
        dim: ech.rank(),
        stable,
        character_matches_dual,
    }
}

pub fn isotypic_check(s: &TensorSubspace) -> bool {
    isotypic_report(s).holds()
}

/// Whether `V⊗V = V₁ ⊕ V₂ ⊕ V₃`: each piece has dimension 3 and together they span 9.
pub fn decomposition_is_direct() -> bool {
    let parts = [v1(), v2(), v3()];
    let mut m = Mat::zeros(0, 9, CycloQ::int(0));
    for s in &parts {
        for b in &s.basis {
            m.push_row(b.coordinates(2));
        }
    }
    parts.iter().all(|s| s.dim() == 3) && rank(&m) == 9
}

/// Fixedness of `c₃` under `u` and `v`.
#[derive(Debug, Clone, Serialize)]
pub struct InvarianceReport {
    pub symmetrized_v_fixed: bool,
    pub symmetrized_u_fixed: bool,
    pub as_v_fixed: bool,
    /// `u·c₃ − c₃` vanishes in `A₃`.
    pub as_u_fixed_mod_ideal: bool,
    /// `u·c₃ = c₃` already in the free algebra; informational.
    pub as_u_fixed_exactly: bool,
}

impl InvarianceReport {
    pub fn holds(&self) -> bool {
        self.symmetrized_v_fixed
            && self.symmetrized_u_fixed
            && self.as_v_fixed
            && self.as_u_fixed_mod_ideal
    }
}

pub fn invariance_report(params: &SklyaninParams<Rational>) -> Result<InvarianceReport> {
    let (u, v, _) = generators();
    let sym = to_cyclo(&central_element(params, CentralForm::Symmetrized));
    let as_form = to_cyclo(&central_element(params, CentralForm::As));
    let u_as = act(&u, &as_form);
    let diff = to_rational(&u_as.sub(&as_form)).expect("u is a rational matrix");
    let quotient = GradedQuotient::new(params.clone(), 3)?;
    Ok(InvarianceReport {
        symmetrized_v_fixed: act(&v, &sym) == sym,
        symmetrized_u_fixed: act(&u, &sym) == sym,
        as_v_fixed: act(&v, &as_form) == as_form,
        as_u_fixed_mod_ideal: quotient.is_zero(&diff)?,
        as_u_fixed_exactly: u_as == as_form,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn letter(l: u8) -> FreePoly<CycloQ> {
        FreePoly::monomial(CycloQ::int(1), Word::letter(l))
    }

    #[test]
    fn presentation() {
        let c = check_presentation();
        assert!(c.holds(), "{c:?}");
        let (u, _, _) = generators();
        assert_eq!(u.trace(), CycloQ::int(0));
    }

    #[test]
    fn action_direction_is_pinned() {
        let (u, v, w) = generators();
        assert_eq!(act(&v, &letter(0)), letter(0));
        assert_eq!(act(&v, &letter(1)), letter(1).scale(&CycloQ::rho()));
        // u sends x to z, y to x, z to y
        assert_eq!(act(&u, &letter(0)), letter(2));
        assert_eq!(act(&u, &letter(1)), letter(0));
        let xy = letter(0).mul(&letter(1));
        assert_eq!(act(&u, &xy), letter(2).mul(&letter(0)));
        let f = xy.add(&letter(2).mul(&letter(2)));
        assert_eq!(act(&w, &f), f.scale(&CycloQ::rho().pow(2)));
    }

    #[test]
    fn copies_of_the_dual() {
        for s in [v1(), v2(), v3(), relation_space(&q(1), &q(2), &q(3))] {
            assert!(isotypic_check(&s), "{}", s.name);
        }
        assert!(decomposition_is_direct());
    }

    #[test]
    fn unstable_subspace() {
        let zero = q(0);
        let s = TensorSubspace::from_rational(
            "xx,xy,yx",
            ["xx", "xy", "yx"]
                .iter()
                .map(|w| FreePoly::from_pairs(&zero, &[(w, q(1))]))
                .collect(),
        );
        let r = isotypic_report(&s);
        assert!(!r.stable);
        assert!(!isotypic_check(&s));
    }

    #[test]
    fn relation_space_is_sklyanin_span() {
        assert!(matches_sklyanin_span(&q(1), &q(2), &q(3)).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..20 {
            let p = SklyaninParams::random(&mut rng);
            let s = relation_space(&p.a, &p.b, &p.c);
            assert!(isotypic_check(&s));
        }
    }

    #[test]
    fn central_element_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..5 {
            let r = invariance_report(&SklyaninParams::random(&mut rng)).unwrap();
            assert!(r.holds(), "{r:?}");
        }
    }
}
