#![allow(clippy::needless_range_loop)]

mod common;

use cmc_core::cmc::{check_cmc, solve_hsq};
use cmc_core::cubic::{cube_root_cubic_form, quad_form_to_matrix, SymMatrix};
use cmc_core::ring::{integer, rational, Coefficient, Polynomial};
use common::*;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn linear(ring: &cmc_core::ring::Ring, coeffs: &[Coefficient]) -> Polynomial {
    coeffs.iter().enumerate().fold(Polynomial::zero(ring), |acc, (i, c)| &acc + &Polynomial::variable(ring, i).scale(c))
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn cube_root_is_sound(a in raw_terms(3, 3, 6)) {
        let r = ring(3);
        let c = build(&r, &a).homogeneous_part(3);
        if let Some(l) = cube_root_cubic_form(&c).unwrap() {
            prop_assert_eq!(l.pow(3).unwrap(), c);
        }
    }

    #[test]
    fn cube_root_is_complete(coeffs in prop::collection::vec(small_rational(), 3)) {
        let r = ring(3);
        let l = linear(&r, &coeffs);
        let root = cube_root_cubic_form(&l.pow(3).unwrap()).unwrap();
        prop_assert_eq!(root, Some(l));
    }

    #[test]
    fn perturbed_cube_is_rejected(coeffs in prop::collection::vec(small_rational(), 3), eps in small_rational()) {
        prop_assume!(!eps.is_zero() && !coeffs[0].is_zero());
        let r = ring(3);
        let l = linear(&r, &coeffs);
        // l^3 + eps*x1*x2*x3 is never a cube when l depends on x1
        let bump = (&(&Polynomial::variable(&r, 0) * &Polynomial::variable(&r, 1)) * &Polynomial::variable(&r, 2)).scale(&eps);
        prop_assert_eq!(cube_root_cubic_form(&(&l.pow(3).unwrap() + &bump)).unwrap(), None);
    }

    #[test]
    fn quadratic_forms_match_symmetric_matrices(upper in prop::collection::vec(small_rational(), 6)) {
        let r = ring(3);
        let mut rows = vec![vec![Polynomial::zero(&r); 3]; 3];
        let mut k = 0;
        for i in 0..3 {
            for j in i..3 {
                rows[i][j] = Polynomial::constant(&r, upper[k].clone());
                rows[j][i] = rows[i][j].clone();
                k += 1;
            }
        }
        let m = SymMatrix::from_rows(rows).unwrap();
        let form = m.to_form(&r, &[0, 1, 2]).unwrap();
        prop_assert!(form.is_zero() || form.is_homogeneous(2));
        let back = quad_form_to_matrix(&form, &[0, 1, 2]).unwrap();
        prop_assert_eq!(&back, &m);
        prop_assert_eq!(back.to_form(&r, &[0, 1, 2]).unwrap(), form);
    }

    #[test]
    fn solve_hsq_agrees_with_check(a in raw_terms(3, 2, 5), probe in small_rational()) {
        let f = build(&ring(3), &a);
        prop_assume!(f.total_degree().finite().is_some_and(|d| d >= 1));
        match solve_hsq(&f).unwrap() {
            Some(h) => {
                prop_assert!(h.is_positive());
                prop_assert!(check_cmc(&f, &h).unwrap().divisible);
            }
            None => {
                let probe = probe.abs() + rational(1, 7);
                prop_assert!(!check_cmc(&f, &probe).unwrap().divisible);
                prop_assert!(!check_cmc(&f, &integer(1)).unwrap().divisible);
            }
        }
    }

    #[test]
    fn solve_hsq_recovers_round_spheres(a in 1i64..=9, c in 1i64..=9, shift in prop::collection::vec(small_rational(), 3)) {
        let r = ring(3);
        let mut f = Polynomial::from_integer(&r, -c);
        for i in 0..3 {
            let xi = &Polynomial::variable(&r, i) - &Polynomial::constant(&r, shift[i].clone());
            f = &f + &xi.pow(2).unwrap().scale(&integer(a));
        }
        prop_assert_eq!(solve_hsq(&f).unwrap(), Some(rational(a, c)));
    }
}
