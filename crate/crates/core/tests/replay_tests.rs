use cmc_core::calculus::{cmc_defect, symbolic_defect};
use cmc_core::cubic::generic_cubic;
use cmc_core::divide::divides;
use cmc_core::replay::{replay, replay_with, specialize, Mutation, ReplayError, Status, STEP_NAMES};
use cmc_core::ring::{rational, Coefficient, RingContext};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn every_step_passes_in_dimensions_three_to_five() {
    for n in 3..=5 {
        let rep = replay(n).unwrap();
        let names: Vec<_> = rep.steps.iter().map(|s| s.name).collect();
        assert_eq!(names, STEP_NAMES);
        assert_eq!(rep.overall, Status::Pass, "n = {n}: {:?}", rep.first_failure());
        assert!(rep.steps.iter().all(|s| s.residual.is_none()));
    }
}

#[test]
fn replay_needs_three_dimensions() {
    assert_eq!(replay(2).unwrap_err(), ReplayError::DimensionTooSmall(2));
}

#[test]
fn mutations_fail_at_the_corrupted_step() {
    let rep = replay_with(3, Mutation::CubicTerm).unwrap();
    let first = rep.first_failure().unwrap();
    assert_eq!(first.name, "h-decomposition");
    assert!(first.residual.as_ref().is_some_and(|r| !r.is_zero()));
    let rep = replay_with(3, Mutation::DefectSign).unwrap();
    assert!(matches!(rep.first_failure().unwrap().name, "defect-valuations" | "cascade"));
    assert_eq!(rep.overall, Status::Fail);
}

#[test]
fn specializations_are_never_divisible() {
    let n = 3;
    let (f, spec) = generic_cubic(n).unwrap();
    let defect = symbolic_defect(&f).unwrap();
    let euclid = RingContext::euclidean(n);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let draw = |rng: &mut ChaCha8Rng| rational(rng.gen_range(-6..=6), rng.gen_range(1..=3));
    let a_slots = (n - 1) * n / 2;
    for _ in 0..20 {
        let ht = loop {
            let v = draw(&mut rng);
            if !v.is_zero() {
                break v;
            }
        };
        let mut others: Vec<Coefficient> = (0..spec.parameter_count() - 1).map(|_| draw(&mut rng)).collect();
        // parameters after Ht are k0, k1, then the entries of A
        if others[2..2 + a_slots].iter().all(Zero::is_zero) {
            others[2] = rational(1, 1);
        }
        let fs = specialize(&f, &spec, &ht, &others).unwrap();
        let ds = specialize(&defect, &spec, &ht, &others).unwrap();
        assert!(!divides(&fs, &ds).unwrap().is_divisible());
        // the specialized symbolic defect is the numeric defect at H^2 = Ht^2 / (4(n-1)^2)
        let hsq = &ht * &ht / rational(4 * (n as i64 - 1).pow(2), 1);
        let numeric = cmc_defect(&fs.embed(&euclid).unwrap(), &hsq).unwrap();
        assert_eq!(ds.embed(&euclid).unwrap(), numeric);
    }
}
