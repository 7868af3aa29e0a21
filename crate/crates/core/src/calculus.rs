//! Differential operators in the geometric variables.
//!
//! Parameters are constants for every operator here. The dimension `n` is
//! always the ring's geometric variable count.

use num_traits::{One, Signed, Zero};

use crate::ring::{integer, Coefficient, Monomial, Polynomial, RingError};

/// Name of the formal parameter standing for `2(n-1)H`.
pub const HT: &str = "Ht";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CalculusError {
    #[error("H^2 must be positive (the mean curvature is assumed nonzero)")]
    NonPositiveHsq,
    #[error("the defect needs at least 2 geometric variables, ring has {0}")]
    TooFewVariables(usize),
    #[error("ring has no `{HT}` parameter")]
    MissingHt,
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// One polynomial per geometric variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyVector(Vec<Polynomial>);

impl PolyVector {
    pub fn components(&self) -> &[Polynomial] {
        &self.0
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.0
    }

    pub fn dot(&self, other: &PolyVector) -> Result<Polynomial, RingError> {
        let mut acc = Polynomial::zero(self.0[0].ring());
        for (a, b) in self.0.iter().zip(&other.0) {
            acc = acc.checked_add(&a.checked_mul(b)?)?;
        }
        Ok(acc)
    }
}

/// Partial derivative with respect to the variable at roster position `var`.
pub fn partial(f: &Polynomial, var: usize) -> Polynomial {
    let terms = f.terms().iter().filter(|(m, _)| m.exponent(var) > 0).map(|(m, c)| {
        let e = m.exponent(var);
        (m.with_exponent(var, e - 1), c * integer(e as i64))
    });
    Polynomial::from_terms(f.ring(), terms).expect("derivative lowers exponents")
}

pub fn gradient(f: &Polynomial) -> PolyVector {
    PolyVector((0..f.ring().geometric_count()).map(|i| partial(f, i)).collect())
}

pub fn laplacian(f: &Polynomial) -> Polynomial {
    let mut acc = Polynomial::zero(f.ring());
    for i in 0..f.ring().geometric_count() {
        acc = &acc + &partial(&partial(f, i), i);
    }
    acc
}

/// `|∇f|^2`
pub fn grad_norm_sq(f: &Polynomial) -> Result<Polynomial, RingError> {
    let g = gradient(f);
    g.dot(&g)
}

/// `∇f · ∇|∇f|^2`, given `|∇f|^2`.
fn gradient_pairing(f: &Polynomial, norm_sq: &Polynomial) -> Result<Polynomial, RingError> {
    gradient(f).dot(&gradient(norm_sq))
}

/// `Δ_p f = |∇f|^2 Δf + ((p-2)/2) ∇f·∇|∇f|^2`
pub fn p_laplacian(f: &Polynomial, p: &Coefficient) -> Result<Polynomial, RingError> {
    let norm_sq = grad_norm_sq(f)?;
    let main = norm_sq.checked_mul(&laplacian(f))?;
    let weight = (p - integer(2)) / integer(2);
    if weight.is_zero() {
        return Ok(main);
    }
    main.checked_add(&gradient_pairing(f, &norm_sq)?.scale(&weight))
}

/// `|∇f|^2` together with `Δ_1 f = 2|∇f|^2 Δf - ∇f·∇|∇f|^2`.
#[derive(Debug, Clone)]
pub struct Delta1Parts {
    pub grad_norm_sq: Polynomial,
    pub delta1: Polynomial,
}

pub fn delta1_parts(f: &Polynomial) -> Result<Delta1Parts, RingError> {
    let norm_sq = grad_norm_sq(f)?;
    let delta1 = norm_sq.checked_mul(&laplacian(f))?.scale(&integer(2)).checked_sub(&gradient_pairing(f, &norm_sq)?)?;
    Ok(Delta1Parts { grad_norm_sq: norm_sq, delta1 })
}

pub fn delta1(f: &Polynomial) -> Result<Polynomial, RingError> {
    Ok(delta1_parts(f)?.delta1)
}

/// `c·|∇f|^6 - (Δ_1 f)^2` where `c` is either a rational or a polynomial
/// (the square of the formal `Ht`).
fn defect_with(parts: &Delta1Parts, weight: &Polynomial) -> Result<Polynomial, RingError> {
    let (six, delta_sq) = rayon::join(|| parts.grad_norm_sq.pow(3), || parts.delta1.pow(2));
    weight.checked_mul(&six?)?.checked_sub(&delta_sq?)
}

/// The CMC defect `4(n-1)^2 H^2 |∇f|^6 - (Δ_1 f)^2` for `H^2 = hsq`.
pub fn cmc_defect(f: &Polynomial, hsq: &Coefficient) -> Result<Polynomial, CalculusError> {
    if !hsq.is_positive() {
        return Err(CalculusError::NonPositiveHsq);
    }
    let n = f.ring().geometric_count();
    if n < 2 {
        return Err(CalculusError::TooFewVariables(n));
    }
    let parts = delta1_parts(f)?;
    let c = integer(4 * (n as i64 - 1).pow(2)) * hsq;
    Ok(defect_with(&parts, &Polynomial::constant(f.ring(), c))?)
}

/// `Ht^2 |∇f|^6 - (Δ_1 f)^2` with `Ht` a formal parameter of the ring.
pub fn symbolic_defect(f: &Polynomial) -> Result<Polynomial, CalculusError> {
    let parts = delta1_parts(f)?;
    symbolic_defect_from(&parts)
}

pub fn symbolic_defect_from(parts: &Delta1Parts) -> Result<Polynomial, CalculusError> {
    let ring = parts.grad_norm_sq.ring();
    let ht = ring.index_of(HT).ok_or(CalculusError::MissingHt)?;
    let mut exps = vec![0u16; ring.variable_count()];
    exps[ht] = 2;
    let ht_sq = Polynomial::from_terms(ring, [(Monomial::from_exponents(exps), Coefficient::one())])?;
    Ok(defect_with(parts, &ht_sq)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;
    use crate::ring::{rational, Binding, Degree, RingContext};

    fn p(src: &str, n: usize) -> Polynomial {
        parse(src, &RingContext::euclidean(n)).unwrap()
    }

    #[test]
    fn gradients() {
        let g = gradient(&p("x1^3", 3));
        assert_eq!(g.components()[0], p("3*x1^2", 3));
        assert!(g.components()[1].is_zero() && g.components()[2].is_zero());
        let g = gradient(&p("x1^2 + x2^2 + x3^2 - 4", 3));
        for (i, c) in g.components().iter().enumerate() {
            assert_eq!(c, &p(&format!("2*x{}", i + 1), 3));
        }
    }

    #[test]
    fn laplacians() {
        assert_eq!(laplacian(&p("x1^2 + x2^2 + x3^2 + x4^2", 4)), p("8", 4));
        assert_eq!(laplacian(&p("x1^3", 3)), p("6*x1", 3));
        assert_eq!(laplacian(&p("x1^2 + x2^2 - 9", 5)), p("4", 5));
    }

    #[test]
    fn sphere_quantities() {
        let f = p("x1^2 + x2^2 + x3^2 - 1", 3);
        assert_eq!(grad_norm_sq(&f).unwrap(), p("4*x1^2 + 4*x2^2 + 4*x3^2", 3));
        // 16(n-1)|x|^2
        assert_eq!(delta1(&f).unwrap(), p("32*(x1^2 + x2^2 + x3^2)", 3));
        let f4 = p("x1^2 + x2^2 + x3^2 + x4^2 - 2", 4);
        assert_eq!(delta1(&f4).unwrap(), p("48*(x1^2 + x2^2 + x3^2 + x4^2)", 4));
    }

    #[test]
    fn cylinder_delta1() {
        let f = p("x1^2 + x2^2 - 3", 4);
        assert_eq!(delta1(&f).unwrap(), p("16*(x1^2 + x2^2)", 4));
    }

    #[test]
    fn linear_delta1_vanishes() {
        assert!(delta1(&p("x1", 3)).unwrap().is_zero());
    }

    #[test]
    fn p_laplacian_cases() {
        let f = p("x1^3 + x1*x2^2 + x3", 3);
        let two = p_laplacian(&f, &integer(2)).unwrap();
        assert_eq!(two, &grad_norm_sq(&f).unwrap() * &laplacian(&f));
        let harmonic = p("x1^2 - x2^2", 3);
        assert!(p_laplacian(&harmonic, &integer(2)).unwrap().is_zero());
        assert_eq!(delta1(&f).unwrap(), p_laplacian(&f, &integer(1)).unwrap().scale(&integer(2)));
    }

    #[test]
    fn sphere_defect() {
        // (256(n-1)^2/R^2)|x|^4(|x|^2 - R^2) with n = 3, R^2 = 4
        let f = p("x1^2 + x2^2 + x3^2 - 4", 3);
        let d = cmc_defect(&f, &rational(1, 4)).unwrap();
        assert_eq!(d, p("256*(x1^2 + x2^2 + x3^2)^2*(x1^2 + x2^2 + x3^2 - 4)", 3));
    }

    #[test]
    fn plane_defect_is_constant() {
        let d = cmc_defect(&p("x1 - 5", 3), &rational(3, 7)).unwrap();
        assert_eq!(d, p("48/7", 3));
    }

    #[test]
    fn defect_preconditions() {
        let f = p("x1^2 - 1", 3);
        assert_eq!(cmc_defect(&f, &integer(0)), Err(CalculusError::NonPositiveHsq));
        assert_eq!(cmc_defect(&f, &integer(-1)), Err(CalculusError::NonPositiveHsq));
        assert_eq!(cmc_defect(&p("x1^2 - 1", 1), &integer(1)), Err(CalculusError::TooFewVariables(1)));
        assert_eq!(symbolic_defect(&f), Err(CalculusError::MissingHt));
    }

    fn ht_ring() -> crate::ring::Ring {
        RingContext::builder().geometric(["x1", "x2", "x3"]).parameters([HT]).build().unwrap()
    }

    #[test]
    fn symbolic_defect_of_pure_cube() {
        let ring = ht_ring();
        let f = parse("x1^3", &ring).unwrap();
        // |∇f|^2 = 9x^4, Δ_1 = 2·9x^4·6x - 3x^2·36x^3 = 0
        let d = symbolic_defect(&f).unwrap();
        assert_eq!(d, parse("729*Ht^2*x1^12", &ring).unwrap());
    }

    #[test]
    fn symbolic_defect_at_zero_ht() {
        let ring = ht_ring();
        let f = parse("x1^3 + x2^2 - x1*x3 + 2", &ring).unwrap();
        let d = symbolic_defect(&f).unwrap();
        let at_zero = d.substitute(&[(HT, Binding::Constant(integer(0)))]).unwrap();
        assert_eq!(at_zero, -delta1(&f).unwrap().pow(2).unwrap());
        assert_eq!(d.total_degree(), Degree::Finite(12));
    }
}
