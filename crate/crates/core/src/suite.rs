//! Verification suites behind the command-line driver.
//!
//! Every suite is a pure function of [`SuiteConfig`]. Random draws come from
//! ChaCha streams of the configured seed and parallel results are collected
//! in a fixed order. Wall-clock time is reported only on request, so identical
//! configurations give byte-identical reports.

use std::time::Instant;

use num_bigint::BigInt;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::blowup::{
    compare_subring, invariant_ring, normal_space, tangent_space, theorem3_report, BlowupRep,
    Variant, WeightDecomposition,
};
use crate::error::{Error, Result};
use crate::freealg::{
    central_element, cyclic_derivative, numeric_is_zero_in_a, sklyanin_relations, superpotential,
    CentralForm, GradedQuotient, SklyaninParams, Word, X, Y, Z,
};
use crate::heisenberg::{
    check_presentation, decomposition_is_direct, invariance_report, isotypic_report,
    matches_sklyanin_span, relation_space, v1, v2, v3,
};
use crate::hesse::{
    find_torsion, minus2p, point_order, HesseCurve, ProjPoint, TorsionOptions, TorsionPoint,
};
use crate::linalg::{random_prime, Fp, Rational, ScalarText};
use crate::repbuilder::{
    build_cyclic_rep, fit_cubic, graded_homogeneity_check, orbit, scalar_part,
    symbolic_cyclic_matrices, CPoint, MatRep, OrbitData, CLOSURE_TOL,
};

/// Hilbert function of a polynomial ring in three variables, degrees `0..=6`.
pub const EXPECTED_HILBERT: [usize; 7] = [1, 3, 6, 10, 15, 21, 28];
/// Orders at which the invariant-ring oracle runs regardless of `--n`.
pub const INVARIANT_ORACLE_ORDERS: [u32; 5] = [2, 3, 4, 5, 7];
/// The Hesse curve `μ·XYZ = ν(X³+Y³+Z³)` hosting torsion and orbits.
pub const HOST_CURVE: (f64, f64) = (1.0, 5.0);
/// Torsion searches below this precision escalate to it on failure.
pub const ESCALATION_BITS: usize = 128;

const HILBERT_TRIPLES: usize = 5;
const CURVE_SAMPLES: usize = 50;
const NORM_ORBITS: usize = 12;
const NUMERIC_TRIPLES: usize = 5;
const CUBIC_GAP: f64 = 1e3;

/// Everything that determines a report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub trials: usize,
    pub n: Vec<u32>,
    pub tol_membership: f64,
    pub tol_rank: f64,
    pub precision_bits: usize,
    /// Negative control: perturbs `c₃` before the identity check.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub corrupt_c3: bool,
    /// Report wall-clock time; off by default so reports are reproducible.
    #[serde(skip)]
    pub timing: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 1,
            trials: 20,
            n: vec![2, 4, 5],
            tol_membership: 1e-9,
            tol_rank: 1e-9,
            precision_bits: 53,
            corrupt_c3: false,
            timing: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Theorem1,
    Curve,
    Torsion,
    Reps,
    Blowup,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem1 => "theorem1",
            Suite::Curve => "curve",
            Suite::Torsion => "torsion",
            Suite::Reps => "reps",
            Suite::Blowup => "blowup",
            Suite::All => "all",
        }
    }

    fn needs_coprime_orders(self) -> bool {
        matches!(self, Suite::Reps | Suite::Blowup | Suite::All)
    }
}

/// `mismatch` marks a stated claim that the computation contradicts; it is
/// recorded without failing the suite. `info` carries unasserted data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Mismatch,
    Info,
}

impl Status {
    fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    /// Short description of the claim being checked.
    pub paper_ref: &'static str,
    pub status: Status,
    pub data: Value,
}

impl Check {
    fn new(name: impl Into<String>, paper_ref: &'static str, status: Status, data: Value) -> Check {
        Check {
            name: name.into(),
            paper_ref,
            status,
            data,
        }
    }

    fn error(name: impl Into<String>, paper_ref: &'static str, err: &Error) -> Check {
        Check::new(
            name,
            paper_ref,
            Status::Fail,
            json!({ "error": err.to_string() }),
        )
    }

    /// Runs `f`, turning an error into a failed check.
    fn guarded(
        name: impl Into<String>,
        paper_ref: &'static str,
        f: impl FnOnce() -> Result<(Status, Value)>,
    ) -> Check {
        let name = name.into();
        match f() {
            Ok((status, data)) => Check::new(name, paper_ref, status, data),
            Err(e) => Check::error(name, paper_ref, &e),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: &'static str,
    pub config: SuiteConfig,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Rejects configurations no suite can run.
pub fn validate(suite: Suite, cfg: &SuiteConfig) -> Result<()> {
    if cfg.trials == 0 {
        return Err(Error::Usage("--trials must be at least 1".into()));
    }
    for (name, tol) in [
        ("--tol-membership", cfg.tol_membership),
        ("--tol-rank", cfg.tol_rank),
    ] {
        if !(tol > 0.0 && tol < 1.0) {
            return Err(Error::Usage(format!(
                "{name} must lie in (0, 1), got {tol}"
            )));
        }
    }
    if cfg.precision_bits < 53 {
        return Err(Error::Usage(format!(
            "--precision-bits must be at least 53, got {}",
            cfg.precision_bits
        )));
    }
    if cfg.n.is_empty() {
        return Err(Error::Usage("--n needs at least one order".into()));
    }
    for &n in &cfg.n {
        if n < 2 {
            return Err(Error::Usage(format!("order n = {n} must be at least 2")));
        }
        if suite.needs_coprime_orders() && n % 3 == 0 {
            return Err(Error::Usage(format!(
                "order n = {n} is divisible by 3; gcd(n, 3) = 1 is required"
            )));
        }
    }
    Ok(())
}

/// Validates and runs a suite.
pub fn run(suite: Suite, cfg: &SuiteConfig) -> Result<Report> {
    validate(suite, cfg)?;
    let start = Instant::now();
    let checks = match suite {
        Suite::Theorem1 => theorem1_checks(cfg),
        Suite::Curve => curve_checks(cfg),
        Suite::Torsion => torsion_checks(cfg),
        Suite::Reps => reps_checks(cfg),
        Suite::Blowup => blowup_checks(cfg),
        Suite::All => {
            let mut all = theorem1_checks(cfg);
            all.extend(curve_checks(cfg));
            all.extend(torsion_checks(cfg));
            all.extend(reps_checks(cfg));
            all.extend(blowup_checks(cfg));
            all
        }
    };
    let elapsed_ms = if cfg.timing {
        start.elapsed().as_millis() as u64
    } else {
        0
    };
    Ok(Report {
        suite: suite.name(),
        config: cfg.clone(),
        checks,
        elapsed_ms,
    })
}

/// Stream `stream` of the configured seed; each consumer owns one stream.
fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

const STREAM_TRIPLES: u64 = 1;
const STREAM_HILBERT: u64 = 2;
const STREAM_NUMERIC: u64 = 3;
const STREAM_CURVE: u64 = 4;
const STREAM_RATIONAL_POINTS: u64 = 5;
const STREAM_ORBITS: u64 = 100;

fn q(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn params_text(p: &SklyaninParams<Rational>) -> [String; 3] {
    p.triple().map(|c| c.to_string())
}

fn random_c64<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

// ---------------------------------------------------------------- theorem1

const REF_SUPERPOTENTIAL: &str = "cyclic derivatives of the superpotential give the relations";
const REF_C3_IDENTITY: &str = "the central element is the superpotential of the dual point";
const REF_CENTRALITY: &str = "c3 is central in A";
const REF_PRINTED_VARIANT: &str = "printed closed form of the central element";
const REF_HEISENBERG: &str = "Heisenberg group of order 27 acting on V";
const REF_DECOMPOSITION: &str = "V tensor V splits into three isotypic 3-dimensional pieces";
const REF_INVARIANCE: &str = "c3 is fixed by the Heisenberg group";
const REF_HILBERT: &str = "A has the Hilbert series of a polynomial ring in three variables";
const REF_MINUS2P: &str = "[-2]p in closed form";
const REF_SAME_CURVE: &str = "p and [-2]p lie on the same Hesse curve";

struct TripleOutcome {
    params: [String; 3],
    derivatives: bool,
    identity: bool,
    alternate: bool,
    central_as: [bool; 3],
    central_sym: [bool; 3],
    invariance: crate::heisenberg::InvarianceReport,
    span_matches: bool,
}

fn triple_outcome(p: &SklyaninParams<Rational>, corrupt: bool) -> Result<TripleOutcome> {
    let rel = sklyanin_relations(p)?;
    let w = superpotential(p);
    let derivatives = [X, Y, Z].into_iter().zip(&rel).all(|(v, r)| {
        cyclic_derivative(&w.symmetric, v) == r.scale(&q(3)) && cyclic_derivative(&w.short, v) == *r
    });
    let quotient = GradedQuotient::new(p.clone(), 4)?;
    let mut as_form = central_element(p, CentralForm::As);
    if corrupt {
        as_form.add_term(
            Word::letter(X)
                .concat(&Word::letter(X))
                .concat(&Word::letter(X)),
            q(1),
        );
    }
    let sym = central_element(p, CentralForm::Symmetrized);
    let alt = central_element(p, CentralForm::Alternate);
    let three_as = as_form.scale(&q(3));
    Ok(TripleOutcome {
        params: params_text(p),
        derivatives,
        identity: quotient.is_zero(&three_as.sub(&sym))?,
        alternate: quotient.is_zero(&three_as.sub(&alt))?,
        central_as: quotient.centrality_check(&as_form)?,
        central_sym: quotient.centrality_check(&sym)?,
        invariance: invariance_report(p)?,
        span_matches: matches_sklyanin_span(&p.a, &p.b, &p.c)?,
    })
}

fn theorem1_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let mut r = rng(cfg.seed, STREAM_TRIPLES);
    let triples: Vec<SklyaninParams<Rational>> = (0..cfg.trials)
        .map(|_| SklyaninParams::random(&mut r))
        .collect();
    let outcomes: Vec<Result<TripleOutcome>> = triples
        .par_iter()
        .map(|p| triple_outcome(p, cfg.corrupt_c3))
        .collect();
    let mut checks = Vec::new();
    let outcomes: Vec<TripleOutcome> = match outcomes.into_iter().collect::<Result<_>>() {
        Ok(v) => v,
        Err(e) => {
            checks.push(Check::error("c3-identity", REF_C3_IDENTITY, &e));
            return checks;
        }
    };
    let per =
        |f: &dyn Fn(&TripleOutcome) -> Value| -> Vec<Value> { outcomes.iter().map(f).collect() };

    checks.push(Check::new(
        "superpotential-derivatives",
        REF_SUPERPOTENTIAL,
        Status::from_bool(outcomes.iter().all(|o| o.derivatives)),
        json!({ "triples": per(&|o| json!({ "params": o.params, "holds": o.derivatives })) }),
    ));
    checks.push(Check::new(
        "c3-identity",
        REF_C3_IDENTITY,
        Status::from_bool(outcomes.iter().all(|o| o.identity)),
        json!({
            "statement": "3*c3 - symmetrized form lies in I_3",
            "arithmetic": "exact rational",
            "corrupted": cfg.corrupt_c3,
            "triples": per(&|o| json!({ "params": o.params, "holds": o.identity })),
        }),
    ));
    checks.push(Check::new(
        "c3-centrality",
        REF_CENTRALITY,
        Status::from_bool(outcomes.iter().all(|o| o.central_as == [true; 3] && o.central_sym == [true; 3])),
        json!({
            "statement": "[c3, g] lies in I_4 for g = x, y, z",
            "triples": per(&|o| json!({ "params": o.params, "as_form": o.central_as, "symmetrized": o.central_sym })),
        }),
    ));
    let alt_holds = outcomes.iter().filter(|o| o.alternate).count();
    checks.push(Check::new(
        "c3-printed-variant",
        REF_PRINTED_VARIANT,
        Status::Info,
        json!({
            "statement": "variant with first coefficient c(a^3-b^3) agrees with 3*c3 in A_3",
            "holds": alt_holds,
            "of": outcomes.len(),
        }),
    ));
    checks.push(numeric_identity_check(cfg));

    let pres = check_presentation();
    checks.push(Check::new(
        "heisenberg-presentation",
        REF_HEISENBERG,
        Status::from_bool(pres.holds()),
        json!(pres),
    ));
    let first = &triples[0];
    let pieces = [
        ("V1", v1()),
        ("V2", v2()),
        ("V3", v3()),
        ("R", relation_space(&first.a, &first.b, &first.c)),
    ];
    let reports: Vec<Value> = pieces
        .iter()
        .map(|(name, s)| {
            let r = isotypic_report(s);
            json!({ "subspace": name, "holds": r.holds(), "report": r })
        })
        .collect();
    let direct = decomposition_is_direct();
    let isotypic = reports.iter().all(|r| r["holds"] == json!(true));
    let spans = outcomes.iter().all(|o| o.span_matches);
    checks.push(Check::new(
        "heisenberg-decomposition",
        REF_DECOMPOSITION,
        Status::from_bool(direct && isotypic && spans),
        json!({ "direct_sum": direct, "isotypic": reports, "relation_span_matches": spans }),
    ));
    checks.push(Check::new(
        "c3-heisenberg-invariance",
        REF_INVARIANCE,
        Status::from_bool(outcomes.iter().all(|o| o.invariance.holds())),
        json!({ "triples": per(&|o| json!({ "params": o.params, "report": o.invariance })) }),
    ));
    checks.push(hilbert_check(cfg));
    checks.push(minus2p_check(cfg));
    checks.push(same_curve_check(cfg));
    checks
}

/// `3·c₃ − symmetrized` at complex parameters, decided by certified ranks.
fn numeric_identity_check(cfg: &SuiteConfig) -> Check {
    Check::guarded("c3-identity-numeric", REF_C3_IDENTITY, || {
        let mut r = rng(cfg.seed, STREAM_NUMERIC);
        let mut rows = Vec::new();
        let mut ok = true;
        for _ in 0..NUMERIC_TRIPLES.min(cfg.trials) {
            let p = SklyaninParams::new(random_c64(&mut r), random_c64(&mut r), random_c64(&mut r));
            let mut as_form = central_element(&p, CentralForm::As);
            if cfg.corrupt_c3 {
                as_form.add_term("xxx".parse().expect("word"), Complex64::new(1.0, 0.0));
            }
            let diff = as_form
                .scale(&Complex64::new(3.0, 0.0))
                .sub(&central_element(&p, CentralForm::Symmetrized));
            let holds = numeric_is_zero_in_a(&p, &diff, cfg.tol_membership)?;
            ok &= holds;
            rows.push(json!({ "params": p.triple().map(|c| c.to_text()), "holds": holds }));
        }
        Ok((
            Status::from_bool(ok),
            json!({ "tolerance": cfg.tol_membership, "triples": rows }),
        ))
    })
}

fn hilbert_check(cfg: &SuiteConfig) -> Check {
    let mut r = rng(cfg.seed, STREAM_HILBERT);
    let jobs: Vec<(SklyaninParams<Rational>, u64)> = (0..HILBERT_TRIPLES)
        .flat_map(|_| {
            let p = SklyaninParams::random(&mut r);
            let primes = [random_prime(&mut r), random_prime(&mut r)];
            primes.map(|prime| (p.clone(), prime))
        })
        .collect();
    let results: Vec<Result<Vec<usize>>> = jobs
        .par_iter()
        .map(|(p, prime)| {
            let pp = p.map(|x| Fp::from_rational(x, *prime).expect("denominators are tiny"));
            let a = GradedQuotient::new(pp, 6)?;
            (0..=6).map(|d| a.quotient_dim(d)).collect()
        })
        .collect();
    let mut ok = true;
    let mut rows = Vec::new();
    for ((p, prime), dims) in jobs.iter().zip(results) {
        match dims {
            Ok(d) => {
                ok &= d == EXPECTED_HILBERT;
                rows.push(json!({ "params": params_text(p), "prime": prime, "dims": d }));
            }
            Err(e) => {
                ok = false;
                rows.push(
                    json!({ "params": params_text(p), "prime": prime, "error": e.to_string() }),
                );
            }
        }
    }
    Check::new(
        "hilbert-dims",
        REF_HILBERT,
        Status::from_bool(ok),
        json!({ "expected": EXPECTED_HILBERT, "runs": rows }),
    )
}

/// Worked instance plus closed form vs chord-tangent at random points.
fn minus2p_check(cfg: &SuiteConfig) -> Check {
    Check::guarded("minus2p-agreement", REF_MINUS2P, || {
        let p = ProjPoint::new(q(1), q(2), q(3));
        let m = minus2p(&p);
        let e = HesseCurve::through(&p)?;
        let (lhs, rhs) = cubic_sides(&e, &m);
        let worked_ok = m.proj_eq(&ProjPoint::new(q(-19), q(52), q(-21)))
            && e.contains_exact(&m)
            && lhs == rhs
            && e.double(&p)?.neg().proj_eq(&m);

        let mut r = rng(cfg.seed, STREAM_CURVE);
        let mut worst: f64 = 0.0;
        for _ in 0..CURVE_SAMPLES {
            let p = ProjPoint([random_c64(&mut r), random_c64(&mut r), random_c64(&mut r)])
                .normalized();
            let e = HesseCurve::through(&p)?;
            worst = worst.max(minus2p(&p).chordal(&e.double(&p)?.neg()));
        }
        let ok = worked_ok && worst < cfg.tol_membership;
        Ok((
            Status::from_bool(ok),
            json!({
                "worked_instance": {
                    "p": ["1", "2", "3"],
                    "minus2p": m.to_text(),
                    "curve": [e.nu.to_string(), e.mu.to_string()],
                    "cubic_sides": [lhs.to_string(), rhs.to_string()],
                    "holds": worked_ok,
                },
                "samples": CURVE_SAMPLES,
                "max_chordal": worst,
                "tolerance": cfg.tol_membership,
            }),
        ))
    })
}

/// `(μ/ν)·XYZ` and `X³+Y³+Z³` at a point.
fn cubic_sides(e: &HesseCurve<Rational>, p: &ProjPoint<Rational>) -> (Rational, Rational) {
    let [x, y, z] = p.coords().clone();
    let lhs = e.mu.clone() / e.nu.clone() * x.clone() * y.clone() * z.clone();
    (lhs, x.pow(3) + y.pow(3) + z.pow(3))
}

fn same_curve_check(cfg: &SuiteConfig) -> Check {
    Check::guarded("same-curve", REF_SAME_CURVE, || {
        let mut r = rng(cfg.seed, STREAM_RATIONAL_POINTS);
        let mut rows = Vec::new();
        let mut ok = true;
        let mut tested = 0;
        while tested < cfg.trials {
            let p = SklyaninParams::random(&mut r);
            let pt = ProjPoint(p.triple());
            let Ok(e) = HesseCurve::through(&pt) else {
                continue;
            };
            tested += 1;
            let m = minus2p(&pt);
            // a base point of the pencil lies on every member, so only membership is testable
            let base_point = HesseCurve::through(&m).is_err();
            let same =
                e.contains_exact(&m) && (base_point || e.same_curve(&HesseCurve::through(&m)?));
            let chord = e.double(&pt)?.neg().proj_eq(&m);
            ok &= same && chord;
            rows.push(json!({
                "p": params_text(&p),
                "minus2p": m.to_text(),
                "base_point": base_point,
                "same_curve": same,
                "matches_group_law": chord,
            }));
        }
        Ok((
            Status::from_bool(ok),
            json!({ "arithmetic": "exact rational", "points": rows }),
        ))
    })
}

// ---------------------------------------------------------------- curve

const REF_GROUP_LAW: &str = "group law on the Hesse cubic with origin [1:-1:0]";
const REF_DEGENERATE: &str = "the Hesse cubic is smooth away from the four singular members";

fn curve_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let mut checks = vec![Check::guarded(
        "hesse-degenerate-members",
        REF_DEGENERATE,
        || {
            let cases = [(1, -1, 0), (1, 1, 1), (0, 0, 1)];
            let rows: Vec<Value> = cases
                .iter()
                .map(|&(a, b, c)| {
                    let rejected = HesseCurve::through(&ProjPoint::new(q(a), q(b), q(c))).is_err();
                    json!({ "p": [a, b, c], "rejected": rejected })
                })
                .collect();
            let ok = rows.iter().all(|r| r["rejected"] == json!(true));
            let e = HesseCurve::through(&ProjPoint::new(q(1), q(2), q(3)))?;
            let same = e.same_curve(&HesseCurve::new(q(1), q(6))?);
            Ok((
                Status::from_bool(ok && same),
                json!({ "degenerate": rows, "curve_of_1_2_3_is_1_6": same }),
            ))
        },
    )];
    checks.push(Check::guarded("hesse-group-axioms", REF_GROUP_LAW, || {
        let mut r = rng(cfg.seed, STREAM_CURVE + 10);
        let e = HesseCurve::through(&ProjPoint([
            random_c64(&mut r),
            random_c64(&mut r),
            random_c64(&mut r),
        ]))?;
        let o = ProjPoint::origin(&e.nu);
        let mut worst = [0.0f64; 5];
        for _ in 0..CURVE_SAMPLES {
            let [p, s, t] = std::array::from_fn(|_| e.random_point(&mut r));
            let d = [
                e.residual(&e.add(&p, &s)?),
                e.add(&p, &s)?.chordal(&e.add(&s, &p)?),
                e.add(&e.add(&p, &s)?, &t)?
                    .chordal(&e.add(&p, &e.add(&s, &t)?)?),
                e.add(&p, &o)?.chordal(&p),
                e.add(&p, &p.neg())?.chordal(&o),
            ];
            for (w, v) in worst.iter_mut().zip(d) {
                *w = w.max(v);
            }
        }
        let ok = worst.iter().all(|&w| w < cfg.tol_membership);
        Ok((
            Status::from_bool(ok),
            json!({
                "curve": [e.nu.to_text(), e.mu.to_text()],
                "samples": CURVE_SAMPLES,
                "max_membership_residual": worst[0],
                "max_commutativity": worst[1],
                "max_associativity": worst[2],
                "max_identity": worst[3],
                "max_inverse": worst[4],
                "tolerance": cfg.tol_membership,
            }),
        ))
    }));
    checks.push(minus2p_check(cfg));
    checks.push(same_curve_check(cfg));
    checks
}

// ---------------------------------------------------------------- torsion

const REF_TORSION: &str = "points of exact order n on E";

fn host_curve() -> HesseCurve<Complex64> {
    HesseCurve::new(
        Complex64::new(HOST_CURVE.0, 0.0),
        Complex64::new(HOST_CURVE.1, 0.0),
    )
    .expect("the host curve is smooth")
}

/// Torsion search at the configured precision, escalating once on failure.
fn torsion_with_escalation(
    e: &HesseCurve<Complex64>,
    n: u32,
    cfg: &SuiteConfig,
) -> (Result<TorsionPoint>, usize) {
    let opts = TorsionOptions {
        precision_bits: cfg.precision_bits,
        ..TorsionOptions::default()
    };
    let first = find_torsion(e, n, cfg.seed, &opts);
    if first.is_ok() || cfg.precision_bits >= ESCALATION_BITS {
        return (first, cfg.precision_bits);
    }
    let opts = TorsionOptions {
        precision_bits: ESCALATION_BITS,
        ..opts
    };
    (find_torsion(e, n, cfg.seed, &opts), ESCALATION_BITS)
}

fn torsion_json(t: &TorsionPoint, bits: usize) -> Value {
    json!({
        "point": t.point.to_text(),
        "refined": t.refined.as_ref().map(|p| p.to_text()),
        "start": t.start,
        "residual": t.residual,
        "divisor_margin": t.divisor_margin,
        "precision_bits": bits,
    })
}

fn torsion_certified(t: &TorsionPoint) -> bool {
    let d = TorsionOptions::default();
    t.residual < d.tol && t.divisor_margin > d.margin
}

fn torsion_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let e = host_curve();
    cfg.n
        .par_iter()
        .map(|&n| {
            let (found, bits) = torsion_with_escalation(&e, n, cfg);
            match found {
                Ok(t) => {
                    let order = point_order(&e, &t.point, 2 * n, TorsionOptions::default().tol);
                    let mut data = torsion_json(&t, bits);
                    data["order"] = json!(order);
                    let ok = torsion_certified(&t) && order == Some(n);
                    Check::new(
                        format!("torsion-point (n={n})"),
                        REF_TORSION,
                        Status::from_bool(ok),
                        data,
                    )
                }
                Err(err) => Check::error(format!("torsion-point (n={n})"), REF_TORSION, &err),
            }
        })
        .collect()
}

// ---------------------------------------------------------------- reps

const REF_ORBIT: &str = "the orbit r + [i]p closes after n steps";
const REF_RELATIONS: &str = "the cyclic matrices satisfy the defining relations";
const REF_SIMPLE: &str = "the cyclic representations are simple";
const REF_CENTRAL_VALUE: &str = "c3 acts by a scalar on a simple representation";
const REF_STABILIZER: &str = "the stabilizer of a cyclic representation is cyclic of order n";
const REF_GRADED: &str = "the cyclic matrices are homogeneous of degree one over C[t]";
const REF_NORM: &str = "the determinant point of a simple representation lies on E/<p>";

/// A representation from the host curve and a torsion point, plus provenance.
struct Built {
    torsion: TorsionPoint,
    bits: usize,
    orbit: OrbitData,
    rep: MatRep,
    params: SklyaninParams<Complex64>,
}

fn build_for(e: &HesseCurve<Complex64>, n: u32, r: &CPoint, cfg: &SuiteConfig) -> Result<Built> {
    let (found, bits) = torsion_with_escalation(e, n, cfg);
    let torsion = found?;
    let orbit = orbit(e, r, &torsion.point, n as usize)?;
    let rep = build_cyclic_rep(&orbit, Complex64::new(1.0, 0.0))?;
    let params = orbit.params();
    Ok(Built {
        torsion,
        bits,
        orbit,
        rep,
        params,
    })
}

fn reps_checks(cfg: &SuiteConfig) -> Vec<Check> {
    cfg.n
        .par_iter()
        .map(|&n| reps_for(n, cfg))
        .collect::<Vec<_>>()
        .concat()
}

fn reps_for(n: u32, cfg: &SuiteConfig) -> Vec<Check> {
    let e = host_curve();
    let mut r = rng(cfg.seed, STREAM_ORBITS + n as u64);
    let start = e.random_point(&mut r);
    let tag = |name: &str| format!("{name} (n={n})");
    let b = match build_for(&e, n, &start, cfg) {
        Ok(b) => b,
        Err(err) => return vec![Check::error(tag("representation"), REF_RELATIONS, &err)],
    };
    let nn = n as usize;
    let mut checks = vec![Check::new(
        tag("torsion-point"),
        REF_TORSION,
        Status::from_bool(torsion_certified(&b.torsion)),
        torsion_json(&b.torsion, b.bits),
    )];
    checks.push(Check::new(
        tag("orbit-closure"),
        REF_ORBIT,
        Status::from_bool(b.orbit.closure_residual < CLOSURE_TOL),
        json!({ "closure_residual": b.orbit.closure_residual, "tolerance": CLOSURE_TOL }),
    ));
    let residual = b.rep.relation_residual(&b.params);
    checks.push(Check::new(
        tag("relations"),
        REF_RELATIONS,
        Status::from_bool(residual < 1e-8),
        json!({ "relation_residual": residual, "tolerance": 1e-8, "rep": b.rep.to_json(&b.params) }),
    ));
    checks.push(Check::guarded(tag("simplicity"), REF_SIMPLE, || {
        let dim = b.rep.simplicity_dim(2 * nn)?;
        Ok((
            Status::from_bool(dim == nn * nn),
            json!({ "word_span": dim, "expected": nn * nn }),
        ))
    }));
    let c3 = b
        .rep
        .eval_element(&central_element(&b.params, CentralForm::As));
    let (lambda, off) = scalar_part(&c3);
    checks.push(Check::new(
        tag("central-value"),
        REF_CENTRAL_VALUE,
        Status::from_bool(lambda.norm() < 1e-8 && off < 1e-8),
        json!({ "scalar": lambda.to_text(), "off_scalar": off, "tolerance": 1e-8 }),
    ));
    let stab = b.rep.stabilizer_residual();
    checks.push(Check::new(
        tag("stabilizer"),
        REF_STABILIZER,
        Status::from_bool(stab < 1e-9),
        json!({ "residual": stab, "tolerance": 1e-9 }),
    ));
    let shifts: Vec<i64> = (0..n as i64).collect();
    let graded =
        graded_homogeneity_check(&symbolic_cyclic_matrices(&b.rep.points), &shifts, n as i64);
    checks.push(Check::new(
        tag("graded-homogeneity"),
        REF_GRADED,
        Status::from_bool(graded),
        json!({ "deg_t": n, "shifts": shifts }),
    ));
    checks.push(Check::guarded(tag("norm-points"), REF_NORM, || {
        norm_point_data(&e, &b, &mut r, cfg)
    }));
    checks
}

/// Norm points of orbits through random starts: invariance under `r ↦ r+p`
/// and a unique cubic through them.
fn norm_point_data(
    e: &HesseCurve<Complex64>,
    b: &Built,
    r: &mut ChaCha8Rng,
    cfg: &SuiteConfig,
) -> Result<(Status, Value)> {
    let n = b.orbit.n();
    let p = &b.torsion.point;
    let mut norms = Vec::with_capacity(NORM_ORBITS);
    let mut worst_shift: f64 = 0.0;
    for _ in 0..NORM_ORBITS {
        let start = e.random_point(r);
        let o = orbit(e, &start, p, n)?;
        let shifted = orbit(e, &o.points[1], p, n)?;
        let np = build_cyclic_rep(&o, Complex64::new(1.0, 0.0))?.norm_point()?;
        let np2 = build_cyclic_rep(&shifted, Complex64::new(1.0, 0.0))?.norm_point()?;
        worst_shift = worst_shift.max(np.chordal(&np2));
        norms.push(np);
    }
    let fit = fit_cubic(&norms, cfg.tol_rank)?;
    let ok = worst_shift < 1e-8
        && fit.certificate.gap_ratio >= CUBIC_GAP
        && fit.held_out_residual < 1e-7;
    Ok((
        Status::from_bool(ok),
        json!({
            "orbits": NORM_ORBITS,
            "max_shift_chordal": worst_shift,
            "norm_points": norms.iter().map(|p| p.to_text()).collect::<Vec<_>>(),
            "cubic": fit,
            "monomials": "X^3 X^2Y X^2Z XY^2 XYZ XZ^2 Y^3 Y^2Z YZ^2 Z^3",
            "required_gap": CUBIC_GAP,
        }),
    ))
}

// ---------------------------------------------------------------- blowup

const REF_TANGENT: &str = "rep_n of A and of B are smooth at the cyclic representations";
const REF_WEIGHTS: &str = "stabilizer weights on the normal space";
const REF_THEOREM3: &str = "the singularity of the blow-up is cyclic of the stated type";
const REF_INVARIANTS: &str = "invariant ring of the weight-(3,-1) action of Z/n";
const REF_SUBRING: &str = "the invariant ring is C[u,v,w]/(w^n - u v^3)";

fn blowup_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let mut checks: Vec<Check> = cfg
        .n
        .par_iter()
        .map(|&n| blowup_for(n, cfg))
        .collect::<Vec<_>>()
        .concat();
    checks.extend(invariant_oracle_checks());
    checks
}

fn blowup_for(n: u32, cfg: &SuiteConfig) -> Vec<Check> {
    let e = host_curve();
    let mut r = rng(cfg.seed, STREAM_ORBITS + n as u64);
    let start = e.random_point(&mut r);
    let tag = |name: &str| format!("{name} (n={n})");
    let b = match build_for(&e, n, &start, cfg) {
        Ok(b) => b,
        Err(err) => return vec![Check::error(tag("representation"), REF_TANGENT, &err)],
    };
    let phi = BlowupRep::from_rep(&b.rep, &b.params);
    let nn = n as usize;
    let mut checks = Vec::new();
    for (variant, expected) in [(Variant::A, nn * nn + 2), (Variant::B, nn * nn + 3)] {
        checks.push(Check::guarded(
            tag(&format!("tangent-dim-{variant:?}")),
            REF_TANGENT,
            || {
                let (basis, cert) = tangent_space(&phi, variant, cfg.tol_rank)?;
                let dim = basis.ncols();
                Ok((
                    Status::from_bool(dim == expected),
                    json!({ "dim": dim, "expected": expected, "certificate": cert }),
                ))
            },
        ));
    }
    for variant in [Variant::A, Variant::B] {
        checks.push(Check::guarded(
            tag(&format!("normal-weights-{variant:?}")),
            REF_WEIGHTS,
            || {
                let ns = normal_space(&phi, variant, cfg.tol_rank)?;
                let expected = WeightDecomposition::expected(nn, variant);
                Ok((
                    Status::from_bool(ns.weights == expected),
                    json!({
                        "weights": ns.weights,
                        "weights_negated": ns.weights.negated(),
                        "expected": expected,
                        "tangent_dim": ns.tangent_dim,
                        "orbit_dim": ns.orbit_dim,
                        "normal_dim": ns.basis.ncols(),
                        "root_defect": ns.root_defect,
                        "orbit_defect": ns.orbit_defect,
                    }),
                ))
            },
        ));
    }
    checks.push(Check::guarded(tag("theorem3-report"), REF_THEOREM3, || {
        let report = theorem3_report(&phi, cfg.tol_rank)?;
        let ok = report.tangent_dim_b == nn * nn + 3
            && report.weights == WeightDecomposition::expected(nn, Variant::B).residues()
            && report.molien_ok
            && report.subring.relation_holds
            && report.subring.generators_invariant;
        let status = match (ok, report.subring_match) {
            (false, _) => Status::Fail,
            (true, true) => Status::Pass,
            (true, false) => Status::Mismatch,
        };
        Ok((status, json!(report)))
    }));
    checks
}

/// Brute-force invariant counts against the character average, and the
/// stated subring compared with the computed ring.
fn invariant_oracle_checks() -> Vec<Check> {
    INVARIANT_ORACLE_ORDERS
        .par_iter()
        .map(|&n| {
            let ring = invariant_ring((3, -1), n, 4 * n);
            let cmp = compare_subring(&ring);
            let oracle = Check::new(
                format!("invariant-ring-oracle (n={n})"),
                REF_INVARIANTS,
                Status::from_bool(
                    ring.molien_ok() && cmp.relation_holds && cmp.generators_invariant,
                ),
                json!({
                    "degree_bound": ring.degree_bound,
                    "counts": ring.counts,
                    "molien": ring.molien,
                    "generators": ring.generators,
                    "relations": ring.relations,
                    "subring_relation_holds": cmp.relation_holds,
                }),
            );
            let status = if cmp.matches {
                Status::Pass
            } else {
                Status::Mismatch
            };
            let subring = Check::new(
                format!("subring-comparison (n={n})"),
                REF_SUBRING,
                status,
                json!(cmp),
            );
            [oracle, subring]
        })
        .collect::<Vec<_>>()
        .concat()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteConfig {
        SuiteConfig {
            trials: 2,
            n: vec![2],
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn usage_errors() {
        let bad = SuiteConfig {
            trials: 0,
            ..SuiteConfig::default()
        };
        assert!(matches!(run(Suite::Theorem1, &bad), Err(Error::Usage(_))));
        let three = SuiteConfig {
            n: vec![3],
            ..SuiteConfig::default()
        };
        assert!(matches!(
            validate(Suite::Reps, &three),
            Err(Error::Usage(_))
        ));
        assert!(validate(Suite::Torsion, &three).is_ok());
        let tol = SuiteConfig {
            tol_rank: 0.0,
            ..SuiteConfig::default()
        };
        assert!(validate(Suite::Curve, &tol).is_err());
    }

    #[test]
    fn curve_suite_passes_and_is_reproducible() {
        let a = run(Suite::Curve, &small()).unwrap();
        assert!(a.passed(), "{}", a.to_json());
        assert_eq!(a.to_json(), run(Suite::Curve, &small()).unwrap().to_json());
        assert_eq!(a.elapsed_ms, 0);
    }

    #[test]
    fn reps_suite_for_n_two() {
        let rep = run(Suite::Reps, &small()).unwrap();
        assert!(rep.passed(), "{}", rep.to_json());
        assert!(rep.checks.iter().any(|c| c.name == "norm-points (n=2)"));
    }

    #[test]
    fn corrupted_central_element_fails() {
        let cfg = SuiteConfig {
            corrupt_c3: true,
            ..small()
        };
        let rep = run(Suite::Theorem1, &cfg).unwrap();
        let names: Vec<&str> = rep.failures().map(|c| c.name.as_str()).collect();
        assert!(names.contains(&"c3-identity"), "{names:?}");
    }
}
