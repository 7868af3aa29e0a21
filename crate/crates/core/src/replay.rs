//! Mechanical replay, in a fixed dimension `n`, of the identity chain showing
//! that no irreducible cubic satisfies the CMC divisibility condition.
//!
//! Everything lives in the ring with geometric variables `x = x1`,
//! `y_i = x_{i+1}` and parameters `Ht, k0, k1, a_ij, r_i, s_i`. Every step is
//! an exact polynomial identity; there are no tolerances.
//!
//! The cascade `p9..p6` is obtained by exact division by `f3` rather than
//! from closed forms, and the intermediate coefficients `L_i` are never
//! materialized: their content is the `x`-adic valuation bound checked in
//! the valuation step.

use std::fmt;

use num_traits::Zero;

use crate::calculus::{delta1_parts, HT};
use crate::cubic::{generic_cubic, quad_form_to_matrix, GenericCubicSpec};
use crate::divide::{divide, divide_monic_in_x, DivisionResult};
use crate::ring::{integer, Binding, Coefficient, MonomialOrder, Polynomial, RingError, Valuation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReplayError {
    #[error("replay needs n >= 3, got {0}")]
    DimensionTooSmall(usize),
    #[error("step `{step}`: {source}")]
    Step { step: &'static str, source: RingError },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

#[derive(Debug, Clone)]
pub struct StepResult {
    pub name: &'static str,
    pub status: Status,
    /// Nonzero whenever the step fails.
    pub residual: Option<Polynomial>,
    pub witness: Option<Polynomial>,
    pub detail: String,
}

impl StepResult {
    fn check(name: &'static str, residual: Polynomial, witness: Option<Polynomial>, detail: impl Into<String>) -> Self {
        let status = if residual.is_zero() { Status::Pass } else { Status::Fail };
        StepResult { name, status, residual: (!residual.is_zero()).then_some(residual), witness, detail: detail.into() }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Comparison of the engine's `Δ_1 f` with the printed expansion. Reported,
/// never part of the overall verdict.
#[derive(Debug, Clone)]
pub struct ExpansionCheck {
    pub matches: bool,
    /// `printed - computed` when they differ.
    pub residual: Option<Polynomial>,
}

/// The four cascade quotients.
#[derive(Debug, Clone)]
pub struct Cascade {
    pub p9: Polynomial,
    pub p8: Polynomial,
    pub p7: Polynomial,
    pub p6: Polynomial,
}

#[derive(Debug, Clone)]
pub struct ReplayReport {
    pub n: usize,
    pub steps: Vec<StepResult>,
    pub printed_delta1: ExpansionCheck,
    pub cascade: Option<Cascade>,
    pub overall: Status,
}

impl ReplayReport {
    pub fn step(&self, name: &str) -> Option<&StepResult> {
        self.steps.iter().find(|s| s.name == name)
    }

    pub fn first_failure(&self) -> Option<&StepResult> {
        self.steps.iter().find(|s| !s.passed())
    }
}

/// Deliberate corruptions used as negative controls.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mutation {
    #[default]
    None,
    /// Replace `f3 = x^3` by `x^2 y1`.
    CubicTerm,
    /// Use `Ht^2 |∇f|^6 + (Δ_1 f)^2` as the defect.
    DefectSign,
}

pub const STEP_NAMES: [&str; 9] = [
    "h-decomposition",
    "delta1-congruence",
    "fourth-power-congruence",
    "squared-congruence",
    "defect-valuations",
    "cascade",
    "vanishing-at-x0",
    "obstruction-identity",
    "conclusion",
];

fn at(step: &'static str) -> impl Fn(RingError) -> ReplayError {
    move |source| ReplayError::Step { step, source }
}

/// `x^k` scaled.
fn x_pow(spec: &GenericCubicSpec, k: u32, c: i64) -> Polynomial {
    spec.x().pow(k).expect("small exponent").scale(&integer(c))
}

fn dot(a: &[Polynomial], b: &[Polynomial]) -> Polynomial {
    a.iter().zip(b).fold(Polynomial::zero(a[0].ring()), |acc, (u, v)| &acc + &(u * v))
}

fn mat_vec(spec: &GenericCubicSpec, v: &[Polynomial]) -> Vec<Polynomial> {
    (0..spec.m())
        .map(|i| (0..spec.m()).fold(Polynomial::zero(spec.ring()), |acc, j| &acc + &(&spec.a(i, j) * &v[j])))
        .collect()
}

struct Vectors {
    y: Vec<Polynomial>,
    r: Vec<Polynomial>,
    s: Vec<Polynomial>,
    ay: Vec<Polynomial>,
}

impl Vectors {
    fn new(spec: &GenericCubicSpec) -> Self {
        let y: Vec<_> = (0..spec.m()).map(|i| spec.y(i)).collect();
        let r = (0..spec.m()).map(|i| spec.r(i)).collect();
        let s = (0..spec.m()).map(|i| spec.s(i)).collect();
        let ay = mat_vec(spec, &y);
        Vectors { y, r, s, ay }
    }
}

fn expected_h_in(spec: &GenericCubicSpec) -> Vec<Polynomial> {
    let v = Vectors::new(spec);
    let c = |k: i64| integer(k);
    let (x, k0, k1) = (spec.x(), spec.k0(), spec.k1());
    let x2 = &x * &x;
    let ry = dot(&v.r, &v.y);
    let h0 = &(&k1 * &k1) + &dot(&v.s, &v.s);
    let h1 = [
        dot(&v.s, &v.ay).scale(&c(4)),
        (&(&k0 * &k1) * &x).scale(&c(4)),
        (&k1 * &ry).scale(&c(2)),
        (&x * &dot(&v.r, &v.s)).scale(&c(2)),
    ];
    let h2 = [
        (&x * &dot(&v.r, &v.ay)).scale(&c(4)),
        dot(&v.ay, &v.ay).scale(&c(4)),
        (&(&k0 * &x) * &ry).scale(&c(4)),
        &ry * &ry,
        &x2 * &(&(&(&k0 * &k0).scale(&c(4)) + &k1.scale(&c(6))) + &dot(&v.r, &v.r)),
    ];
    let h3 = &(&k0 * &x_pow(spec, 3, 12)) + &(&x2 * &ry).scale(&c(6));
    let h4 = x_pow(spec, 4, 9);
    let sum = |parts: &[Polynomial]| parts.iter().fold(Polynomial::zero(spec.ring()), |acc, p| &acc + p);
    vec![h0, sum(&h1), sum(&h2), h3, h4]
}

/// The printed homogeneous parts `h0..h4` of `|∇f|^2` for the generic cubic,
/// with `h4 = 9x^4`.
pub fn expected_h_formulas(n: usize) -> Result<Vec<Polynomial>, ReplayError> {
    let (_, spec) = generic_cubic(n).map_err(|_| ReplayError::DimensionTooSmall(n))?;
    Ok(expected_h_in(&spec))
}

fn delta1_expected_in(spec: &GenericCubicSpec) -> Polynomial {
    let v = Vectors::new(spec);
    let c = |k: i64| integer(k);
    let (x, k0, k1) = (spec.x(), spec.k0(), spec.k1());
    let x2 = &x * &x;
    let tr = spec.trace_a();
    let norm_sq = expected_h_in(spec).iter().fold(Polynomial::zero(spec.ring()), |acc, h| &acc + h);
    let ry = dot(&v.r, &v.y);
    let ar = mat_vec(spec, &v.r);
    let a_s = mat_vec(spec, &v.s);
    let a2y = mat_vec(spec, &v.ay);
    let k0_3x = &k0 + &x.scale(&c(3));
    let bracket = &(&k1 + &ry) - &x2.scale(&c(3));
    let terms = [
        (&norm_sq * &tr).scale(&c(4)),
        (&k0_3x * &(&dot(&v.s, &v.ay) + &dot(&v.ay, &v.ay))).scale(&c(16)),
        (&dot(&v.r, &v.ay) * &bracket).scale(&c(-8)),
        (&x * &dot(&v.s, &ar)).scale(&c(-8)),
        (&x2 * &dot(&v.r, &ar)).scale(&c(-4)),
        (&x * &dot(&ar, &v.ay)).scale(&c(-16)),
        dot(&a_s, &v.ay).scale(&c(-16)),
        dot(&v.s, &a_s).scale(&c(-4)),
        dot(&v.ay, &a2y).scale(&c(-16)),
        (&(&x * &(&(&(&k0 * &x) + &k1) + &ry)) * &dot(&v.r, &v.r)).scale(&c(-4)),
        (&k0_3x * &dot(&v.s, &v.s)).scale(&c(4)),
        (&dot(&v.r, &v.s) * &bracket).scale(&c(-4)),
    ];
    terms.iter().fold(Polynomial::zero(spec.ring()), |acc, t| &acc + t)
}

/// The printed multi-line expansion of `Δ_1 f` for the generic cubic.
pub fn delta1_expected(n: usize) -> Result<Polynomial, ReplayError> {
    let (_, spec) = generic_cubic(n).map_err(|_| ReplayError::DimensionTooSmall(n))?;
    Ok(delta1_expected_in(&spec))
}

/// Divides `num` by the cubic part, by the univariate view when it is monic
/// in `x` and by general lexicographic division otherwise.
fn divide_by_cubic(num: &Polynomial, f3: &Polynomial) -> Result<DivisionResult, RingError> {
    let x = f3.ring().name(0).to_string();
    let res = match divide_monic_in_x(num, f3, &x) {
        Ok(res) => Ok(res),
        Err(_) => divide(num, f3, MonomialOrder::Lex),
    };
    res.map_err(|e| match e {
        crate::divide::DivideError::Ring(r) => r,
        _ => RingError::ContextMismatch,
    })
}

pub fn replay(n: usize) -> Result<ReplayReport, ReplayError> {
    replay_with(n, Mutation::None)
}

pub fn replay_with(n: usize, mutation: Mutation) -> Result<ReplayReport, ReplayError> {
    let (f, spec) = generic_cubic(n).map_err(|_| ReplayError::DimensionTooSmall(n))?;
    let f = match mutation {
        Mutation::CubicTerm => &(&f - &spec.f3()) + &(&(&spec.x() * &spec.x()) * &spec.y(0)),
        _ => f,
    };
    let ring = spec.ring().clone();
    let xvar = 0;
    let ht_sq = spec.ht().pow(2).expect("small exponent");
    let tr = spec.trace_a();

    // shared quantities
    let parts = delta1_parts(&f).map_err(at("h-decomposition"))?;
    let norm_sq = parts.grad_norm_sq;
    let delta1 = parts.delta1;
    let norm4 = norm_sq.pow(2).map_err(at("fourth-power-congruence"))?;
    let (norm6, delta1_sq) = rayon::join(|| norm4.checked_mul(&norm_sq), || delta1.pow(2));
    let norm6 = norm6.map_err(at("defect-valuations"))?;
    let delta1_sq = delta1_sq.map_err(at("squared-congruence"))?;
    let weighted = ht_sq.checked_mul(&norm6).map_err(at("defect-valuations"))?;
    let defect = match mutation {
        Mutation::DefectSign => weighted.checked_add(&delta1_sq),
        _ => weighted.checked_sub(&delta1_sq),
    }
    .map_err(at("defect-valuations"))?;

    let mut steps = Vec::with_capacity(9);

    // 1. |∇f|^2 = h0 + ... + h4 with each part as printed
    let expected = expected_h_in(&spec);
    let mismatched: Vec<usize> = (0..5).filter(|&k| norm_sq.homogeneous_part(k as u32) != expected[k]).collect();
    let total = expected.iter().fold(Polynomial::zero(&ring), |acc, h| &acc + h);
    steps.push(StepResult::check(
        STEP_NAMES[0],
        &norm_sq - &total,
        Some(expected[4].clone()),
        if mismatched.is_empty() { "h0..h4 match".to_string() } else { format!("mismatch in h{mismatched:?}") },
    ));

    // 2. Δ_1 f ≡ 4 tr(A) |∇f|^2 mod Pol_3
    let four_tr_norm = (&tr * &norm_sq).scale(&integer(4));
    steps.push(StepResult::check(STEP_NAMES[1], (&delta1 - &four_tr_norm).high_part(3), None, "mod Pol_3"));

    // 3. |∇f|^4 ≡ 81 x^8 mod Pol_7
    steps.push(StepResult::check(STEP_NAMES[2], (&norm4 - &x_pow(&spec, 8, 81)).high_part(7), None, "mod Pol_7"));

    // 4. (Δ_1 f)^2 ≡ 6^4 tr(A)^2 x^8 mod Pol_7
    let six4_tr2_x8 = (&(&tr * &tr) * &x_pow(&spec, 8, 1)).scale(&integer(1296));
    steps.push(StepResult::check(STEP_NAMES[3], (&delta1_sq - &six4_tr2_x8).high_part(7), None, "mod Pol_7"));

    // 5. D ≡ Ht^2|∇f|^6 - 6^4 tr(A)^2 x^8 mod Pol_7, and val_x(D_k) >= 2k - 12
    let reduced = &weighted - &six4_tr2_x8;
    let mut residual5 = (&defect - &reduced).high_part(7);
    let mut low = Vec::new();
    for k in 8..=12u32 {
        let part = defect.homogeneous_part(k);
        let bound = 2 * k - 12;
        if part.valuation(xvar) < Valuation::Finite(bound) {
            low.push(k);
            let offending = Polynomial::from_terms(
                &ring,
                part.terms().iter().filter(|(m, _)| (m.exponent(xvar) as u32) < bound).cloned(),
            )
            .map_err(at("defect-valuations"))?;
            residual5 = &residual5 + &offending;
        }
    }
    steps.push(StepResult::check(
        STEP_NAMES[4],
        residual5,
        None,
        if low.is_empty() {
            "valuations hold for k = 8..12".to_string()
        } else {
            format!("valuation too low for D_k, k in {low:?}")
        },
    ));

    // 6. the cascade, each quotient by exact division by f3
    let f3 = f.homogeneous_part(3);
    let f2 = f.homogeneous_part(2);
    let f1 = f.homogeneous_part(1);
    let d = |k| defect.homogeneous_part(k);
    let mut residual6 = Polynomial::zero(&ring);
    let mut inexact = Vec::new();
    let mut solve = |label: &'static str, num: Polynomial| -> Result<Polynomial, ReplayError> {
        let res = divide_by_cubic(&num, &f3).map_err(at("cascade"))?;
        let back = res.quotient.checked_mul(&f3).map_err(at("cascade"))?;
        if !res.remainder.is_zero() || back != num {
            inexact.push(label);
            residual6 = &residual6 + &(&num - &back);
        }
        Ok(res.quotient)
    };
    let p9 = solve("p9", d(12))?;
    let p8 = solve("p8", &d(11) - &(&p9 * &f2))?;
    let p7 = solve("p7", &(&d(10) - &(&p8 * &f2)) - &(&p9 * &f1))?;
    let p6 = solve("p6", &(&d(9) - &(&p7 * &f2)) - &(&p8 * &f1))?;
    let l0_x9 = &ht_sq * &x_pow(&spec, 9, 729);
    let p9_gap = &p9 - &l0_x9;
    let detail6 = match (inexact.is_empty(), p9_gap.is_zero()) {
        (true, true) => "p9..p6 exact; p9 = 729*Ht^2*x^9".to_string(),
        (false, _) => format!("inexact division for {inexact:?}"),
        (true, false) => "p9 differs from 729*Ht^2*x^9".to_string(),
    };
    steps.push(StepResult::check(STEP_NAMES[5], &residual6 + &p9_gap, Some(p9.clone()), detail6));

    // 7. p7(0) = 0 and D8(0) = 0
    let x0 = |p: &Polynomial| p.substitute(&[(ring.name(xvar), Binding::Constant(Coefficient::zero()))]);
    let p7_0 = x0(&p7).map_err(at("vanishing-at-x0"))?;
    let d8_0 = x0(&d(8)).map_err(at("vanishing-at-x0"))?;
    let (residual7, detail7) = match (p7_0.is_zero(), d8_0.is_zero()) {
        (true, true) => (Polynomial::zero(&ring), "p7(0) = 0 and D8(0) = 0"),
        (false, _) => (p7_0, "p7(0) != 0"),
        (true, false) => (d8_0, "D8(0) != 0"),
    };
    steps.push(StepResult::check(STEP_NAMES[6], residual7, None, detail7));

    // 8. p6(0, y) f2(0, y) = -729 Ht^2 (y'Ay)^4
    let p6_0 = x0(&p6).map_err(at("obstruction-identity"))?;
    let f2_0 = x0(&f2).map_err(at("obstruction-identity"))?;
    let lhs = p6_0.checked_mul(&f2_0).map_err(at("obstruction-identity"))?;
    let q = spec.quad_form();
    let rhs = (&ht_sq * &q.pow(4).map_err(at("obstruction-identity"))?).scale(&integer(-729));
    steps.push(StepResult::check(STEP_NAMES[7], &lhs - &rhs, Some(p6_0), "p6(0)*f2(0) = -729*Ht^2*(y'Ay)^4"));

    // 9. y'Ay determines A: extraction recovers the independent a_ij
    let yvars: Vec<usize> = (1..spec.n).collect();
    let step9 = match quad_form_to_matrix(&f2_0, &yvars) {
        Err(e) => StepResult::check(STEP_NAMES[8], nonzero_or(&f2_0, &ring), None, format!("extraction failed: {e}")),
        Ok(matrix) => {
            let mut residual = Polynomial::zero(&ring);
            for i in 0..spec.m() {
                for j in 0..spec.m() {
                    residual = &residual + &(matrix.get(i, j) - &spec.a(i, j));
                }
            }
            match matrix.to_form(&ring, &yvars) {
                Ok(back) => residual = &residual + &(&back - &f2_0),
                Err(_) => residual = &residual + &nonzero_or(&f2_0, &ring),
            }
            StepResult::check(
                STEP_NAMES[8],
                residual,
                Some(f2_0.clone()),
                "f2(0) = y'Ay with A symmetric; vanishing of the obstruction forces A = 0",
            )
        }
    };
    steps.push(step9);

    let printed = delta1_expected_in(&spec);
    let gap = &printed - &delta1;
    let printed_delta1 = ExpansionCheck { matches: gap.is_zero(), residual: (!gap.is_zero()).then_some(gap) };

    let overall = if steps.iter().all(StepResult::passed) { Status::Pass } else { Status::Fail };
    Ok(ReplayReport { n, steps, printed_delta1, cascade: Some(Cascade { p9, p8, p7, p6 }), overall })
}

fn nonzero_or(p: &Polynomial, ring: &crate::ring::Ring) -> Polynomial {
    if p.is_zero() {
        Polynomial::one(ring)
    } else {
        p.clone()
    }
}

/// Sets every parameter except `Ht` to the given values (in parameter order
/// after `Ht`), handy for specialization checks.
pub fn specialize(
    p: &Polynomial,
    spec: &GenericCubicSpec,
    ht: &Coefficient,
    others: &[Coefficient],
) -> Result<Polynomial, RingError> {
    let names = spec.parameter_names();
    let mut bindings: Vec<(&str, Binding)> = vec![(HT, Binding::Constant(ht.clone()))];
    for (name, value) in names.iter().filter(|n| n.as_str() != HT).zip(others) {
        bindings.push((name.as_str(), Binding::Constant(value.clone())));
    }
    p.substitute(&bindings)
}
