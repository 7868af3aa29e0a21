//! Exact rational scalars.
//!
//! `BigRational` already keeps every value in lowest terms with a positive
//! denominator, and zero is stored as `0/1`. The helpers here cover the few
//! operations the engine needs beyond field arithmetic.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational coefficient.
pub type Coefficient = BigRational;

pub fn integer(n: i64) -> Coefficient {
    BigRational::from_integer(BigInt::from(n))
}

/// `num/den` in lowest terms. Panics on a zero denominator.
pub fn rational(num: i64, den: i64) -> Coefficient {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact cube root over the rationals, if one exists.
pub fn cube_root(c: &Coefficient) -> Option<Coefficient> {
    if c.is_zero() {
        return Some(Coefficient::zero());
    }
    let num = int_cube_root(c.numer())?;
    let den = int_cube_root(c.denom())?;
    Some(BigRational::new(num, den))
}

fn int_cube_root(n: &BigInt) -> Option<BigInt> {
    let root = n.abs().cbrt();
    if &root * &root * &root != n.abs() {
        return None;
    }
    Some(if n.sign() == Sign::Minus { -root } else { root })
}

pub fn is_one(c: &Coefficient) -> bool {
    c.is_one()
}

/// Renders `3`, `-7`, `3/2`, `-1/3`.
pub fn format_coefficient(c: &Coefficient) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        let c = rational(6, -4);
        assert_eq!(c.numer(), &BigInt::from(-3));
        assert_eq!(c.denom(), &BigInt::from(2));
        assert_eq!(rational(0, 5), Coefficient::zero());
        assert_eq!(rational(0, 5).denom(), &BigInt::from(1));
    }

    #[test]
    fn cube_roots() {
        assert_eq!(cube_root(&rational(-27, 8)), Some(rational(-3, 2)));
        assert_eq!(cube_root(&integer(729)), Some(integer(9)));
        assert_eq!(cube_root(&integer(2)), None);
        assert_eq!(cube_root(&rational(1, 4)), None);
        assert_eq!(cube_root(&integer(0)), Some(integer(0)));
    }

    #[test]
    fn formatting() {
        assert_eq!(format_coefficient(&rational(-1, 3)), "-1/3");
        assert_eq!(format_coefficient(&integer(12)), "12");
    }
}
