use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::Serialize;

/// Exponent pair `(i, j)` of `sⁱtʲ`.
pub type Exp = (u32, u32);

/// A binomial relation `∏ uₖ^{aₖ} = ∏ uₖ^{bₖ}` among the generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub lhs: Vec<u32>,
    pub rhs: Vec<u32>,
    /// The common monomial `sⁱtʲ`.
    pub monomial: Exp,
}

/// The invariant ring of `ℤ/n` acting on `ℂ[s, t]` with weights `(w₁, w₂)`,
/// up to a degree bound.
#[derive(Debug, Clone, Serialize)]
pub struct InvariantPresentation {
    pub weights: (i64, i64),
    pub n: u32,
    pub degree_bound: u32,
    /// Minimal monomial generators, by increasing degree.
    pub generators: Vec<Exp>,
    /// Minimal binomial relations up to the bound.
    pub relations: Vec<Relation>,
    /// Invariant monomials per degree `0..=degree_bound`, by enumeration.
    pub counts: Vec<usize>,
    /// The same counts from the Molien series.
    pub molien: Vec<usize>,
}

impl InvariantPresentation {
    pub fn molien_ok(&self) -> bool {
        self.counts == self.molien
    }
}

pub fn is_invariant(e: Exp, w: (i64, i64), n: u32) -> bool {
    (w.0 * e.0 as i64 + w.1 * e.1 as i64).rem_euclid(n as i64) == 0
}

fn divides(a: Exp, b: Exp) -> bool {
    a.0 <= b.0 && a.1 <= b.1
}

/// Per-degree coefficients of `(1/n) Σₖ 1/((1 − ζ^{k w₁} s)(1 − ζ^{k w₂} s))`.
pub fn molien_counts(w: (i64, i64), n: u32, degree_bound: u32) -> Vec<usize> {
    let len = degree_bound as usize + 1;
    let mut total = vec![Complex64::new(0.0, 0.0); len];
    for k in 0..n as i64 {
        let root = |wt: i64| {
            Complex64::from_polar(1.0, std::f64::consts::TAU * (k * wt) as f64 / n as f64)
        };
        let (r1, r2) = (root(w.0), root(w.1));
        // Cauchy product of the two geometric series
        let g1: Vec<Complex64> = (0..len).map(|d| r1.powu(d as u32)).collect();
        let g2: Vec<Complex64> = (0..len).map(|d| r2.powu(d as u32)).collect();
        for d in 0..len {
            total[d] += (0..=d).map(|i| g1[i] * g2[d - i]).sum::<Complex64>();
        }
    }
    total
        .iter()
        .map(|z| (z.re / n as f64).round() as usize)
        .collect()
}

/// Exponent vectors `a` with `Σ aₖ·gₖ = target`.
fn fibre(gens: &[Exp], target: Exp) -> Vec<Vec<u32>> {
    fn go(gens: &[Exp], k: usize, rest: Exp, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == gens.len() {
            if rest == (0, 0) {
                out.push(cur.clone());
            }
            return;
        }
        let g = gens[k];
        let mut m = 0;
        let mut r = rest;
        loop {
            cur.push(m);
            go(gens, k + 1, r, cur, out);
            cur.pop();
            if !divides(g, r) || g == (0, 0) {
                break;
            }
            r = (r.0 - g.0, r.1 - g.1);
            m += 1;
        }
    }
    let mut out = Vec::new();
    go(gens, 0, target, &mut Vec::new(), &mut out);
    out
}

/// Monomials in a fibre that share a generator are linked by a lower-degree
/// relation times that generator; each further connected component needs
/// one new minimal relation.
fn fibre_relations(gens: &[Exp], target: Exp) -> Vec<Relation> {
    let f = fibre(gens, target);
    let mut comp: Vec<usize> = (0..f.len()).collect();
    fn find(c: &mut [usize], i: usize) -> usize {
        if c[i] != i {
            let r = find(c, c[i]);
            c[i] = r;
        }
        c[i]
    }
    for i in 0..f.len() {
        for j in 0..i {
            if f[i].iter().zip(&f[j]).any(|(a, b)| *a > 0 && *b > 0) {
                let (ri, rj) = (find(&mut comp, i), find(&mut comp, j));
                comp[ri] = rj;
            }
        }
    }
    let mut reps: BTreeMap<usize, usize> = BTreeMap::new();
    for i in 0..f.len() {
        let r = find(&mut comp, i);
        reps.entry(r).or_insert(i);
    }
    let firsts: Vec<usize> = reps.values().copied().collect();
    firsts
        .iter()
        .skip(1)
        .map(|&i| Relation {
            lhs: f[firsts[0]].clone(),
            rhs: f[i].clone(),
            monomial: target,
        })
        .collect()
}

pub fn invariant_ring(w: (i64, i64), n: u32, degree_bound: u32) -> InvariantPresentation {
    let mut generators: Vec<Exp> = Vec::new();
    let mut counts = Vec::new();
    for d in 0..=degree_bound {
        let inv: Vec<Exp> = (0..=d)
            .map(|i| (d - i, i))
            .filter(|&e| is_invariant(e, w, n))
            .collect();
        counts.push(inv.len());
        if d == 0 {
            continue;
        }
        for e in inv {
            if !generators.iter().any(|&g| divides(g, e)) {
                generators.push(e);
            }
        }
    }
    let mut relations = Vec::new();
    for d in 1..=degree_bound {
        for i in 0..=d {
            let e = (d - i, i);
            if is_invariant(e, w, n) {
                relations.extend(fibre_relations(&generators, e));
            }
        }
    }
    InvariantPresentation {
        weights: w,
        n,
        degree_bound,
        generators,
        relations,
        counts,
        molien: molien_counts(w, n, degree_bound),
    }
}

/// The subring generated by `u = sⁿ`, `v = tⁿ`, `w = s·t³`.
#[derive(Debug, Clone, Serialize)]
pub struct SubringComparison {
    pub subring_generators: Vec<Exp>,
    /// `wⁿ = u·v³` as exponent arithmetic.
    pub relation_holds: bool,
    /// All three proposed generators are invariant.
    pub generators_invariant: bool,
    /// Full-ring generators outside the subring.
    pub missing: Vec<Exp>,
    pub matches: bool,
}

fn in_monoid(e: Exp, gens: &[Exp]) -> bool {
    !fibre(gens, e).is_empty()
}

pub fn compare_subring(full: &InvariantPresentation) -> SubringComparison {
    let n = full.n;
    let sub = vec![(n, 0), (0, n), (1, 3)];
    let (u, v, w) = (sub[0], sub[1], sub[2]);
    let relation_holds = (w.0 * n, w.1 * n) == (u.0 + 3 * v.0, u.1 + 3 * v.1);
    let generators_invariant = sub.iter().all(|&e| is_invariant(e, full.weights, n));
    let missing: Vec<Exp> = full
        .generators
        .iter()
        .copied()
        .filter(|&g| !in_monoid(g, &sub))
        .collect();
    let matches = generators_invariant && missing.is_empty();
    SubringComparison {
        subring_generators: sub,
        relation_holds,
        generators_invariant,
        missing,
        matches,
    }
}
