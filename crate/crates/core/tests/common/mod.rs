#![allow(dead_code)]

use cmc_core::ring::{rational, Coefficient, Monomial, MonomialOrder, Polynomial, Ring, RingContext};
use proptest::prelude::*;

pub const CASES: u32 = 256;

pub fn config() -> ProptestConfig {
    ProptestConfig { cases: CASES, ..ProptestConfig::default() }
}

/// Raw term data: exponents, numerator, denominator.
pub type RawTerm = (Vec<u16>, i64, i64);

pub fn raw_terms(nvars: usize, max_exp: u16, max_terms: usize) -> impl Strategy<Value = Vec<RawTerm>> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, nvars), -9i64..=9, 1i64..=4), 0..=max_terms)
}

pub fn build(ring: &Ring, raw: &[RawTerm]) -> Polynomial {
    Polynomial::from_terms(ring, raw.iter().map(|(e, n, d)| (Monomial::from_exponents(e.clone()), rational(*n, *d))))
        .unwrap()
}

pub fn ring(n: usize) -> Ring {
    RingContext::euclidean(n)
}

pub fn lex_ring(n: usize) -> Ring {
    RingContext::builder().geometric((1..=n).map(|i| format!("x{i}"))).order(MonomialOrder::Lex).build().unwrap()
}

pub fn point(n: usize) -> impl Strategy<Value = Vec<Coefficient>> {
    prop::collection::vec((-20i64..=20, 1i64..=5).prop_map(|(a, b)| rational(a, b)), n)
}

pub fn small_rational() -> impl Strategy<Value = Coefficient> {
    (-9i64..=9, 1i64..=4).prop_map(|(a, b)| rational(a, b))
}
