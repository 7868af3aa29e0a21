//! The algebraic CMC condition: `f` divides
//! `4(n-1)^2 H^2 |∇f|^6 - (Δ_1 f)^2` for some `H != 0`.

use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::calculus::{cmc_defect, delta1_parts, CalculusError};
use crate::divide::{divide, divides, DivideError, Divisibility};
use crate::ring::{integer, Coefficient, Degree, Monomial, Polynomial, RingContext, RingError};

pub const IRREDUCIBILITY_WARNING: &str = "irreducibility not verified";
pub const SINGULAR_WARNING: &str = "regular-point condition not checked: the zero set may have singular points";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CmcError {
    #[error("input is constant in the geometric variables")]
    ConstantInput,
    #[error("H^2 must be positive (the mean curvature is assumed nonzero)")]
    NonPositiveHsq,
    #[error("R^2 must be positive")]
    NonPositiveRadius,
    #[error("dimension {n} is below the minimum of {min}")]
    DimensionTooSmall { n: usize, min: usize },
    #[error("{0} must be at least 1")]
    EmptyRange(&'static str),
    #[error("certificate failed re-verification")]
    CertificateMismatch,
    #[error(transparent)]
    Calculus(#[from] CalculusError),
    #[error(transparent)]
    Divide(#[from] DivideError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Outcome of one divisibility check.
#[derive(Debug, Clone)]
pub struct CmcReport {
    pub input: Polynomial,
    pub hsq: Coefficient,
    pub defect: Polynomial,
    pub divisible: bool,
    /// `p` with `defect = p · input`.
    pub certificate: Option<Polynomial>,
    pub witness_remainder: Option<Polynomial>,
    pub warnings: Vec<String>,
}

fn warnings_for(f: &Polynomial) -> Vec<String> {
    let mut out = Vec::new();
    if f.total_degree() > Degree::Finite(1) {
        out.push(IRREDUCIBILITY_WARNING.to_string());
    }
    out.push(SINGULAR_WARNING.to_string());
    out
}

fn require_nonconstant(f: &Polynomial) -> Result<(), CmcError> {
    match f.total_degree() {
        Degree::Finite(d) if d >= 1 => Ok(()),
        _ => Err(CmcError::ConstantInput),
    }
}

pub fn check_cmc(f: &Polynomial, hsq: &Coefficient) -> Result<CmcReport, CmcError> {
    require_nonconstant(f)?;
    if !hsq.is_positive() {
        return Err(CmcError::NonPositiveHsq);
    }
    let defect = cmc_defect(f, hsq)?;
    let (divisible, certificate, witness_remainder) = match divides(f, &defect)? {
        Divisibility::Divides { quotient } => (true, Some(quotient), None),
        Divisibility::DoesNotDivide { remainder } => (false, None, Some(remainder)),
    };
    if let Some(p) = &certificate {
        if p.checked_mul(f)? != defect {
            return Err(CmcError::CertificateMismatch);
        }
    }
    Ok(CmcReport {
        input: f.clone(),
        hsq: hsq.clone(),
        defect,
        divisible,
        certificate,
        witness_remainder,
        warnings: warnings_for(f),
    })
}

/// Normal forms of `|∇f|^6` and `(Δ_1 f)^2` modulo `f`, and the admissible
/// `H^2` they determine.
#[derive(Debug, Clone)]
pub struct HsqSolution {
    pub grad6_remainder: Polynomial,
    pub delta1_sq_remainder: Polynomial,
    pub hsq: Option<Coefficient>,
}

/// Solves for the `H^2 > 0` making the defect divisible by `f`.
///
/// The remainder map modulo one divisor is linear, so with `r1 = |∇f|^6 mod f`
/// and `r2 = (Δ_1 f)^2 mod f` the defect is divisible exactly when
/// `c·r1 = r2` for `c = 4(n-1)^2 H^2`.
pub fn solve_hsq_detail(f: &Polynomial) -> Result<HsqSolution, CmcError> {
    require_nonconstant(f)?;
    let n = f.ring().geometric_count();
    if n < 2 {
        return Err(CalculusError::TooFewVariables(n).into());
    }
    let parts = delta1_parts(f)?;
    let order = f.ring().order();
    let six = parts.grad_norm_sq.pow(3)?;
    let dsq = parts.delta1.pow(2)?;
    let r1 = divide(&six, f, order)?.remainder;
    let r2 = divide(&dsq, f, order)?.remainder;
    let hsq = match r1.leading_term() {
        // f | |∇f|^6: then any H works iff f | (Δ_1 f)^2 as well
        None => r2.is_zero().then(Coefficient::one),
        Some((m, c1)) => {
            let ratio = r2.coefficient_of(m) / c1;
            let scale = integer(4 * (n as i64 - 1).pow(2));
            (ratio.is_positive() && r1.scale(&ratio) == r2).then(|| ratio / scale)
        }
    };
    Ok(HsqSolution { grad6_remainder: r1, delta1_sq_remainder: r2, hsq })
}

pub fn solve_hsq(f: &Polynomial) -> Result<Option<Coefficient>, CmcError> {
    Ok(solve_hsq_detail(f)?.hsq)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SurfaceKind {
    Sphere,
    Cylinder,
    Plane,
}

/// A classical surface with its known CMC data.
#[derive(Debug, Clone)]
pub struct Surface {
    pub kind: SurfaceKind,
    pub polynomial: Polynomial,
    pub expected_hsq: Option<Coefficient>,
    pub expected_certificate: Option<Polynomial>,
}

/// Sphere `|x|^2 - R^2`, cylinder `x1^2 + x2^2 - R^2` or plane `x1` in
/// `R^n`. For the plane `rsq` is ignored.
pub fn make_surface(kind: SurfaceKind, n: usize, rsq: &Coefficient) -> Result<Surface, CmcError> {
    if n < 2 {
        return Err(CmcError::DimensionTooSmall { n, min: 2 });
    }
    if kind != SurfaceKind::Plane && !rsq.is_positive() {
        return Err(CmcError::NonPositiveRadius);
    }
    let ring = RingContext::euclidean(n);
    let sum_sq = |k: usize| {
        (0..k).fold(Polynomial::zero(&ring), |acc, i| {
            let x = Polynomial::variable(&ring, i);
            &acc + &(&x * &x)
        })
    };
    let nm1_sq = integer((n as i64 - 1).pow(2));
    let surface = match kind {
        SurfaceKind::Sphere => {
            let rho = sum_sq(n);
            Surface {
                kind,
                polynomial: &rho - &Polynomial::constant(&ring, rsq.clone()),
                expected_hsq: Some(Coefficient::one() / rsq),
                expected_certificate: Some(rho.pow(2)?.scale(&(integer(256) * &nm1_sq / rsq))),
            }
        }
        SurfaceKind::Cylinder => {
            let rho = sum_sq(2);
            Surface {
                kind,
                polynomial: &rho - &Polynomial::constant(&ring, rsq.clone()),
                expected_hsq: Some(Coefficient::one() / (nm1_sq * rsq)),
                expected_certificate: Some(rho.pow(2)?.scale(&(integer(256) / rsq))),
            }
        }
        SurfaceKind::Plane => {
            Surface { kind, polynomial: Polynomial::variable(&ring, 0), expected_hsq: None, expected_certificate: None }
        }
    };
    Ok(surface)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepKind {
    /// Random cubics with nonzero cubic part.
    Cubic,
    /// Random spheres `a|x|^2 - b`, all of which are admissible.
    SphereControl,
}

#[derive(Debug, Clone)]
pub struct SweepSummary {
    pub kind: SweepKind,
    pub n: usize,
    pub count: usize,
    pub coeff_bound: u32,
    pub seed: u64,
    pub admissible: usize,
    /// Every input that admitted an `H^2`, with that value.
    pub candidates: Vec<(Polynomial, Coefficient)>,
}

fn monomials_up_to(n: usize, max_degree: u16) -> Vec<Monomial> {
    fn rec(prefix: &mut Vec<u16>, n: usize, left: u16, out: &mut Vec<Monomial>) {
        if prefix.len() == n {
            out.push(Monomial::from_exponents(prefix.clone()));
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            rec(prefix, n, left - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), n, max_degree, &mut out);
    out
}

/// The inputs a sweep would test, in order. Reproducible for a seed.
pub fn sweep_inputs(kind: SweepKind, n: usize, count: usize, coeff_bound: u32, seed: u64) -> Vec<Polynomial> {
    let ring = RingContext::euclidean(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = coeff_bound as i64;
    match kind {
        SweepKind::Cubic => {
            let monos = monomials_up_to(n, 3);
            (0..count)
                .map(|_| loop {
                    let terms = monos.iter().map(|m| (m.clone(), integer(rng.gen_range(-bound..=bound))));
                    let f = Polynomial::from_terms(&ring, terms).expect("degree-3 monomials");
                    if f.total_degree() == Degree::Finite(3) {
                        break f;
                    }
                })
                .collect()
        }
        SweepKind::SphereControl => {
            let rho = (0..n).fold(Polynomial::zero(&ring), |acc, i| {
                let x = Polynomial::variable(&ring, i);
                &acc + &(&x * &x)
            });
            (0..count)
                .map(|_| {
                    let a = integer(rng.gen_range(1..=bound));
                    let b = integer(rng.gen_range(1..=bound));
                    &rho.scale(&a) - &Polynomial::constant(&ring, b)
                })
                .collect()
        }
    }
}

fn run_sweep(kind: SweepKind, n: usize, count: usize, coeff_bound: u32, seed: u64) -> Result<SweepSummary, CmcError> {
    if count == 0 {
        return Err(CmcError::EmptyRange("count"));
    }
    if coeff_bound == 0 {
        return Err(CmcError::EmptyRange("coefficient bound"));
    }
    let inputs = sweep_inputs(kind, n, count, coeff_bound, seed);
    let solved: Vec<Option<Coefficient>> = inputs.par_iter().map(solve_hsq).collect::<Result<_, _>>()?;
    let candidates: Vec<(Polynomial, Coefficient)> =
        inputs.into_iter().zip(solved).filter_map(|(f, h)| h.map(|h| (f, h))).collect();
    Ok(SweepSummary { kind, n, count, coeff_bound, seed, admissible: candidates.len(), candidates })
}

/// Runs [`solve_hsq`] on `count` seeded random cubics in `R^n`. Inputs are not
/// filtered for irreducibility; every admissible hit is listed.
pub fn refutation_sweep(n: usize, count: usize, coeff_bound: u32, seed: u64) -> Result<SweepSummary, CmcError> {
    if n < 3 {
        return Err(CmcError::DimensionTooSmall { n, min: 3 });
    }
    run_sweep(SweepKind::Cubic, n, count, coeff_bound, seed)
}

/// Degree-two control: seeded random spheres, all of which must solve.
pub fn control_sweep(n: usize, count: usize, coeff_bound: u32, seed: u64) -> Result<SweepSummary, CmcError> {
    if n < 2 {
        return Err(CmcError::DimensionTooSmall { n, min: 2 });
    }
    run_sweep(SweepKind::SphereControl, n, count, coeff_bound, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;
    use crate::ring::rational;

    fn p(src: &str, n: usize) -> Polynomial {
        parse(src, &RingContext::euclidean(n)).unwrap()
    }

    #[test]
    fn unit_sphere() {
        let f = p("x1^2 + x2^2 + x3^2 - 1", 3);
        let rep = check_cmc(&f, &integer(1)).unwrap();
        assert!(rep.divisible);
        assert_eq!(rep.certificate.unwrap(), p("1024*(x1^2 + x2^2 + x3^2)^2", 3));
        assert!(rep.warnings.iter().any(|w| w == IRREDUCIBILITY_WARNING));
    }

    #[test]
    fn sphere_wrong_curvature() {
        let f = p("x1^2 + x2^2 + x3^2 - 1", 3);
        let rep = check_cmc(&f, &integer(2)).unwrap();
        assert!(!rep.divisible);
        assert!(!rep.witness_remainder.unwrap().is_zero());
        assert!(rep.certificate.is_none());
    }

    #[test]
    fn cubic_is_not_cmc() {
        let f = p("x1^3 + x2^2 + x3", 3);
        let rep = check_cmc(&f, &integer(1)).unwrap();
        assert!(!rep.divisible);
        assert_eq!(solve_hsq(&f).unwrap(), None);
    }

    #[test]
    fn solving() {
        assert_eq!(solve_hsq(&p("x1^2 + x2^2 + x3^2 - 1", 3)).unwrap(), Some(integer(1)));
        assert_eq!(solve_hsq(&p("x1^2 + x2^2 + x3^2 - 4", 3)).unwrap(), Some(rational(1, 4)));
        assert_eq!(solve_hsq(&p("x1^2 + x2^2 - 1", 3)).unwrap(), Some(rational(1, 4)));
        assert_eq!(solve_hsq(&p("x1 - 5", 3)).unwrap(), None);
    }

    #[test]
    fn preconditions() {
        assert_eq!(check_cmc(&p("7", 3), &integer(1)).unwrap_err(), CmcError::ConstantInput);
        assert_eq!(check_cmc(&p("x1", 3), &integer(0)).unwrap_err(), CmcError::NonPositiveHsq);
        assert_eq!(solve_hsq(&p("3", 3)).unwrap_err(), CmcError::ConstantInput);
    }

    #[test]
    fn linear_input_has_no_irreducibility_warning() {
        let rep = check_cmc(&p("x1 - 5", 3), &integer(1)).unwrap();
        assert!(!rep.warnings.iter().any(|w| w == IRREDUCIBILITY_WARNING));
        assert!(!rep.divisible);
        assert_eq!(rep.defect, p("16", 3));
    }

    #[test]
    fn surfaces() {
        let s = make_surface(SurfaceKind::Sphere, 4, &integer(1)).unwrap();
        assert_eq!(s.expected_hsq, Some(integer(1)));
        assert_eq!(s.expected_certificate.unwrap(), p("2304*(x1^2 + x2^2 + x3^2 + x4^2)^2", 4));
        let c = make_surface(SurfaceKind::Cylinder, 3, &integer(1)).unwrap();
        assert_eq!(c.expected_hsq, Some(rational(1, 4)));
        let pl = make_surface(SurfaceKind::Plane, 3, &integer(1)).unwrap();
        assert_eq!(pl.expected_hsq, None);
        assert_eq!(make_surface(SurfaceKind::Sphere, 3, &integer(0)).unwrap_err(), CmcError::NonPositiveRadius);
        assert!(make_surface(SurfaceKind::Sphere, 1, &integer(1)).is_err());
    }

    #[test]
    fn sweep_is_seed_deterministic() {
        let a = sweep_inputs(SweepKind::Cubic, 3, 5, 5, 7);
        let b = sweep_inputs(SweepKind::Cubic, 3, 5, 5, 7);
        assert_eq!(a, b);
        assert!(a.iter().all(|f| f.total_degree() == Degree::Finite(3)));
        assert_ne!(a, sweep_inputs(SweepKind::Cubic, 3, 5, 5, 8));
    }

    #[test]
    fn sweep_preconditions() {
        assert_eq!(refutation_sweep(3, 0, 5, 1).unwrap_err(), CmcError::EmptyRange("count"));
        assert!(matches!(refutation_sweep(2, 10, 5, 1), Err(CmcError::DimensionTooSmall { .. })));
        assert_eq!(refutation_sweep(3, 3, 0, 1).unwrap_err(), CmcError::EmptyRange("coefficient bound"));
    }

    #[test]
    fn small_sweeps() {
        let s = refutation_sweep(3, 10, 5, 42).unwrap();
        assert_eq!(s.admissible, 0);
        let c = control_sweep(3, 10, 5, 42).unwrap();
        assert_eq!(c.admissible, 10);
    }
}
