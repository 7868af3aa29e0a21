use std::borrow::Borrow;
use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

/// Exponent vector, one entry per variable of the owning ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Box<[u16]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into_boxed_slice())
    }

    pub fn from_exponents(exponents: Vec<u16>) -> Self {
        Monomial(exponents.into_boxed_slice())
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn exponent(&self, var: usize) -> u16 {
        self.0[var]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Degree counting only the first `count` variables.
    pub fn leading_degree(&self, count: usize) -> u32 {
        self.0[..count].iter().map(|&e| e as u32).sum()
    }

    /// Product, or the index of the first variable whose exponent would
    /// exceed `limit`.
    pub fn checked_mul(&self, other: &Monomial, limit: u16) -> Result<Monomial, usize> {
        let mut out = vec![0u16; self.0.len()];
        mul_into(&self.0, &other.0, limit, &mut out)?;
        Ok(Monomial::from_exponents(out))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial::from_exponents(other.0.iter().zip(self.0.iter()).map(|(b, a)| b - a).collect()))
    }

    pub fn with_exponent(&self, var: usize, exp: u16) -> Monomial {
        let mut out = self.0.to_vec();
        out[var] = exp;
        Monomial::from_exponents(out)
    }
}

impl Borrow<[u16]> for Monomial {
    fn borrow(&self) -> &[u16] {
        &self.0
    }
}

/// Writes `a + b` into `out`; on overflow returns the offending position.
pub(crate) fn mul_into(a: &[u16], b: &[u16], limit: u16, out: &mut [u16]) -> Result<(), usize> {
    for (i, ((x, y), o)) in a.iter().zip(b.iter()).zip(out.iter_mut()).enumerate() {
        let sum = *x as u32 + *y as u32;
        if sum > limit as u32 {
            return Err(i);
        }
        *o = sum as u16;
    }
    Ok(())
}

/// Monomial order tag of a ring context.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonomialOrder {
    /// Graded reverse lexicographic over all variables.
    Grevlex,
    /// Lexicographic in roster order; the first variable is the
    /// distinguished one.
    Lex,
}

impl MonomialOrder {
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::Grevlex => a.total_degree().cmp(&b.total_degree()).then_with(|| {
                for (x, y) in a.0.iter().zip(b.0.iter()).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::Grevlex;
        // x^2 > xy > y^2 > xz > yz > z^2 in three variables
        let chain = [m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[1, 0, 1]), m(&[0, 1, 1]), m(&[0, 0, 2])];
        for w in chain.windows(2) {
            assert_eq!(o.compare(&w[0], &w[1]), Ordering::Greater);
        }
        assert_eq!(o.compare(&m(&[0, 0, 3]), &m(&[2, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_examples() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.compare(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 2, 0]), &m(&[1, 1, 9])), Ordering::Greater);
    }

    #[test]
    fn guard() {
        assert_eq!(m(&[3, 1]).checked_mul(&m(&[2, 1]), 4), Err(0));
        assert_eq!(m(&[3, 1]).checked_mul(&m(&[1, 1]), 4), Ok(m(&[4, 2])));
    }

    #[test]
    fn division() {
        assert_eq!(m(&[1, 1]).quotient_of(&m(&[3, 1])), Some(m(&[2, 0])));
        assert_eq!(m(&[1, 2]).quotient_of(&m(&[3, 1])), None);
    }
}
