//! Single-divisor division with remainder and divisibility certificates.
//!
//! For one divisor the remainder of the division algorithm is unique for a
//! fixed monomial order, so a zero remainder decides divisibility.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::Zero;

use crate::ring::{Coefficient, Monomial, MonomialOrder, Polynomial, RingError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DivideError {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("leading coefficient in `{0}` is not a nonzero rational constant")]
    NotMonic(String),
    #[error("certificate failed re-verification")]
    CertificateMismatch,
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionResult {
    pub quotient: Polynomial,
    pub remainder: Polynomial,
    /// For [`divide_monic_in_x`] this is `Lex` with the division variable
    /// distinguished.
    pub order_used: MonomialOrder,
}

/// Outcome of [`divides`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Divisibility {
    /// `g = quotient · f`, re-checked by multiplication.
    Divides { quotient: Polynomial },
    /// The nonzero normal form of `g` modulo `f`.
    DoesNotDivide { remainder: Polynomial },
}

impl Divisibility {
    pub fn is_divisible(&self) -> bool {
        matches!(self, Divisibility::Divides { .. })
    }
}

/// Key wrapper so a `BTreeMap` sorts monomials under an arbitrary order.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Keyed(Monomial, MonomialOrder);

impl Ord for Keyed {
    fn cmp(&self, other: &Self) -> Ordering {
        self.1.compare(&self.0, &other.0)
    }
}

impl PartialOrd for Keyed {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn leading_under(f: &Polynomial, order: MonomialOrder) -> Option<(Monomial, Coefficient)> {
    if order == f.ring().order() {
        return f.leading_term().cloned();
    }
    f.terms().iter().max_by(|a, b| order.compare(&a.0, &b.0)).cloned()
}

/// Divides `g` by `f` under `order`.
pub fn divide(g: &Polynomial, f: &Polynomial, order: MonomialOrder) -> Result<DivisionResult, DivideError> {
    if f.is_zero() {
        return Err(DivideError::ZeroDivisor);
    }
    if !g.ring().same_as(f.ring()) {
        return Err(RingError::ContextMismatch.into());
    }
    let ring = g.ring();
    let limit = ring.exponent_limit();
    let (lead_m, lead_c) = leading_under(f, order).expect("nonzero divisor");
    let tail: Vec<(Monomial, Coefficient)> = f.terms().iter().filter(|(m, _)| *m != lead_m).cloned().collect();

    let mut work: BTreeMap<Keyed, Coefficient> =
        g.terms().iter().map(|(m, c)| (Keyed(m.clone(), order), c.clone())).collect();
    let mut quotient = Vec::new();
    let mut remainder = Vec::new();

    while let Some((Keyed(m, _), c)) = work.pop_last() {
        let Some(q_m) = lead_m.quotient_of(&m) else {
            remainder.push((m, c));
            continue;
        };
        let q_c = &c / &lead_c;
        // subtract q·(f - LT(f)); the leading term cancels by construction
        for (t, k) in &tail {
            let prod = t
                .checked_mul(&q_m, limit)
                .map_err(|var| RingError::ExponentOverflow { variable: ring.name(var).to_string(), limit })?;
            let key = Keyed(prod, order);
            let delta = &q_c * k;
            match work.get_mut(&key) {
                Some(slot) => {
                    *slot -= delta;
                    if slot.is_zero() {
                        work.remove(&key);
                    }
                }
                None => {
                    work.insert(key, -delta);
                }
            }
        }
        quotient.push((q_m, q_c));
    }
    Ok(DivisionResult {
        quotient: Polynomial::from_terms(ring, quotient)?,
        remainder: Polynomial::from_terms(ring, remainder)?,
        order_used: order,
    })
}

/// Whether `f` divides `g`, using the ring's own order. A positive answer
/// carries a quotient that has been re-verified by one multiplication.
pub fn divides(f: &Polynomial, g: &Polynomial) -> Result<Divisibility, DivideError> {
    let res = divide(g, f, f.ring().order())?;
    if !res.remainder.is_zero() {
        return Ok(Divisibility::DoesNotDivide { remainder: res.remainder });
    }
    if &res.quotient.checked_mul(f)? != g {
        return Err(DivideError::CertificateMismatch);
    }
    Ok(Divisibility::Divides { quotient: res.quotient })
}

/// Division viewing both polynomials as univariate in `var` over the ring of
/// the remaining variables. The top `var`-coefficient of `f` must be a
/// nonzero rational constant; the remainder then has `var`-degree below that
/// of `f`.
pub fn divide_monic_in_x(g: &Polynomial, f: &Polynomial, var: &str) -> Result<DivisionResult, DivideError> {
    if f.is_zero() {
        return Err(DivideError::ZeroDivisor);
    }
    if !g.ring().same_as(f.ring()) {
        return Err(RingError::ContextMismatch.into());
    }
    let ring = g.ring();
    let x = ring.require(var)?;
    let f_coeffs = f.coefficients_in(x);
    let d = f_coeffs.len() - 1;
    let lead =
        f_coeffs[d].constant_value().filter(|c| !c.is_zero()).ok_or_else(|| DivideError::NotMonic(var.to_string()))?;

    let mut g_coeffs = g.coefficients_in(x);
    let x_pow = |j: usize| {
        let mut exps = vec![0u16; ring.variable_count()];
        exps[x] = j as u16;
        Monomial::from_exponents(exps)
    };
    let mut quotient = Polynomial::zero(ring);
    if g_coeffs.len() > d {
        for j in (d..g_coeffs.len()).rev() {
            if g_coeffs[j].is_zero() {
                continue;
            }
            let q = g_coeffs[j].scale(&(Coefficient::from_integer(1.into()) / &lead));
            for (i, fc) in f_coeffs.iter().enumerate() {
                if fc.is_zero() {
                    continue;
                }
                let slot = j - d + i;
                g_coeffs[slot] = g_coeffs[slot].checked_sub(&q.checked_mul(fc)?)?;
            }
            quotient = quotient.checked_add(&q.mul_term(&x_pow(j - d), &Coefficient::from_integer(1.into()))?)?;
        }
    }
    let mut remainder = Polynomial::zero(ring);
    for (j, c) in g_coeffs.iter().enumerate().take(d) {
        if !c.is_zero() {
            remainder = remainder.checked_add(&c.mul_term(&x_pow(j), &Coefficient::from_integer(1.into()))?)?;
        }
    }
    Ok(DivisionResult { quotient, remainder, order_used: MonomialOrder::Lex })
}
