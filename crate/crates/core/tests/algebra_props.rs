mod common;

use cmc_core::calculus::partial;
use cmc_core::divide::{divide, divide_monic_in_x, divides};
use cmc_core::parse::{parse, print};
use cmc_core::ring::{integer, Monomial, MonomialOrder, Polynomial};
use common::*;
use proptest::prelude::*;

const ORDERS: [MonomialOrder; 2] = [MonomialOrder::Grevlex, MonomialOrder::Lex];

fn leading_monomial(f: &Polynomial, order: MonomialOrder) -> Monomial {
    f.terms().iter().map(|(m, _)| m).max_by(|a, b| order.compare(a, b)).unwrap().clone()
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn ring_axioms(a in raw_terms(3, 3, 6), b in raw_terms(3, 3, 6), c in raw_terms(3, 3, 6)) {
        let r = ring(3);
        let (a, b, c) = (build(&r, &a), build(&r, &b), build(&r, &c));
        let zero = Polynomial::zero(&r);
        let one = Polynomial::one(&r);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &zero, a.clone());
        prop_assert_eq!(&a * &one, a.clone());
        prop_assert!((&a - &a.clone()).is_zero());
        prop_assert_eq!(&a + &(-&a), zero);
    }

    #[test]
    fn degree_is_additive(a in raw_terms(3, 3, 6), b in raw_terms(3, 3, 6)) {
        let r = ring(3);
        let (a, b) = (build(&r, &a), build(&r, &b));
        prop_assume!(!a.is_zero() && !b.is_zero());
        let d = |p: &Polynomial| p.total_degree().finite().unwrap();
        prop_assert_eq!(d(&(&a * &b)), d(&a) + d(&b));
    }

    #[test]
    fn homogeneous_parts_project_and_sum(a in raw_terms(3, 4, 8)) {
        let r = ring(3);
        let f = build(&r, &a);
        let mut sum = Polynomial::zero(&r);
        for (k, part) in f.homogeneous_parts() {
            prop_assert!(part.is_homogeneous(k));
            prop_assert_eq!(part.homogeneous_part(k), part.clone());
            prop_assert_eq!(f.homogeneous_part(k), part.clone());
            sum = &sum + &part;
        }
        prop_assert_eq!(sum, f);
    }

    #[test]
    fn euler_identity(a in raw_terms(3, 4, 8)) {
        let r = ring(3);
        let f = build(&r, &a);
        for (k, h) in f.homogeneous_parts() {
            let mut euler = Polynomial::zero(&r);
            for i in 0..3 {
                euler = &euler + &(&Polynomial::variable(&r, i) * &partial(&h, i));
            }
            prop_assert_eq!(euler, h.scale(&integer(k as i64)));
        }
    }

    #[test]
    fn parse_print_round_trip(a in raw_terms(3, 4, 8)) {
        let r = ring(3);
        let f = build(&r, &a);
        prop_assert_eq!(parse(&print(&f), &r).unwrap(), f);
    }

    #[test]
    fn division_identity_and_remainder_condition(g in raw_terms(3, 4, 8), f in raw_terms(3, 2, 4)) {
        let r = ring(3);
        let (g, f) = (build(&r, &g), build(&r, &f));
        prop_assume!(!f.is_zero());
        for order in ORDERS {
            let res = divide(&g, &f, order).unwrap();
            prop_assert_eq!(&(&res.quotient * &f) + &res.remainder, g.clone());
            let lm = leading_monomial(&f, order);
            for (m, _) in res.remainder.terms() {
                prop_assert!(!lm.divides(m), "remainder term divisible by LM(f)");
            }
        }
    }

    #[test]
    fn remainder_is_unique(g in raw_terms(3, 3, 6), f in raw_terms(3, 2, 4), h in raw_terms(3, 2, 4)) {
        let r = ring(3);
        let (g, f, h) = (build(&r, &g), build(&r, &f), build(&r, &h));
        prop_assume!(!f.is_zero());
        let shifted = &g + &(&h * &f);
        for order in ORDERS {
            prop_assert_eq!(divide(&g, &f, order).unwrap().remainder, divide(&shifted, &f, order).unwrap().remainder);
        }
    }

    #[test]
    fn divides_agrees_with_monic_division(
        lower in raw_terms(3, 2, 5),
        k in 1u16..=3,
        h in raw_terms(3, 2, 4),
        noise in raw_terms(3, 3, 3),
        add_noise in any::<bool>(),
    ) {
        let r = ring(3);
        let lower: Vec<RawTerm> = lower.into_iter().filter(|t| t.0[0] < k).collect();
        let f = &Polynomial::variable(&r, 0).pow(k as u32).unwrap() + &build(&r, &lower);
        let h = build(&r, &h);
        let mut g = &h * &f;
        if add_noise {
            g = &g + &build(&r, &noise);
        }
        let monic = divide_monic_in_x(&g, &f, "x1").unwrap();
        prop_assert_eq!(&(&monic.quotient * &f) + &monic.remainder, g.clone());
        prop_assert!(monic.remainder.degree_in(0).is_none_or(|d| d < k as u32));
        prop_assert_eq!(divides(&f, &g).unwrap().is_divisible(), monic.remainder.is_zero());
        if !add_noise {
            prop_assert!(monic.remainder.is_zero());
        }
    }
}
