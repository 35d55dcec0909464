mod common;

use std::cmp::Ordering;

use common::*;
use fga::engine::{exposure_and_groebner, orbit_reduction, BasisResult};
use fga::oracle::{OracleSpace, Verdict, DEFAULT_COLUMN_CAP};
use fga::orders::{Order, WordOrder};
use fga::rsystem::{check_crs, divide_with_remainder, is_member, reduce_mod_transversal, transversal_neighbors};
use fga::scalars::Field;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn structure_holds(r: &BasisResult, ord: &Order) {
    if r.improper {
        assert_eq!(r.groebner_basis().len(), 1);
        assert!(r.groebner_basis()[0].is_scalar());
        return;
    }
    let sys = r.reduction_system(ord).unwrap().unwrap();
    assert_eq!(check_crs(&sys, ord), Ok(()));
    assert_eq!(r.groebner_basis().len(), 2 * r.rank());
    assert_eq!(transversal_neighbors(&sys, ord).len(), 2 * r.rank());
    let heads: Vec<_> = r.exposure_basis.iter().map(|f| f.head_term(ord).unwrap().clone()).collect();
    for pair in heads.windows(2) {
        assert_eq!(ord.compare(&pair[0], &pair[1]), Ordering::Less);
    }
    for (f, s) in r.exposure_basis.iter().zip(&r.seconds) {
        assert!(f.is_monic(ord) && s.is_monic(ord));
        assert_eq!(s.head_term_tail(ord).unwrap(), f.head_term_tail(ord).unwrap().inverse());
        assert_eq!(ord.compare(s.head_term(ord).unwrap(), f.head_term(ord).unwrap()), Ordering::Greater);
        // a first is its head term minus the head term's normal form
        let ht = f.head_term(ord).unwrap().clone();
        let mono = fga::algebra::AlgebraElement::monomial(ht, f.field().one(), f.field(), f.alphabet().clone());
        assert_eq!(reduce_mod_transversal(&mono, &sys, ord), &mono - f);
    }
}

#[test]
fn random_bases_are_reducing_systems() {
    let mut rng = StdRng::seed_from_u64(11);
    for field in [Field::Rational, Field::Prime(5)] {
        for _ in 0..40 {
            let gens = random_ideal(&mut rng, field, 4);
            for (_, ord) in three_orders() {
                let r = exposure_and_groebner(&gens, &ord);
                structure_holds(&r, &ord);
                for g in &gens {
                    assert!(r.contains(g, &ord));
                }
            }
        }
    }
}

#[test]
fn rank_does_not_depend_on_the_order() {
    let mut rng = StdRng::seed_from_u64(12);
    for field in [Field::Rational, Field::Prime(5)] {
        for _ in 0..40 {
            let gens = random_ideal(&mut rng, field, 4);
            let ranks: Vec<(usize, bool)> = three_orders()
                .iter()
                .map(|(_, o)| {
                    let r = exposure_and_groebner(&gens, o);
                    (r.rank(), r.improper)
                })
                .collect();
            assert!(ranks.windows(2).all(|p| p[0] == p[1]), "{ranks:?} for {gens:?}");
        }
    }
}

#[test]
fn outputs_lie_in_the_input_ideal() {
    let mut rng = StdRng::seed_from_u64(13);
    for _ in 0..30 {
        let gens = random_ideal(&mut rng, Field::Prime(5), 4);
        let space = OracleSpace::new(&gens, 2, 6, DEFAULT_COLUMN_CAP).unwrap();
        let ord = Order::Shortlex(standard());
        let r = exposure_and_groebner(&gens, &ord);
        let sys = r.reduction_system(&ord);
        for f in r.groebner_basis() {
            assert_eq!(space.verdict(&f).unwrap(), Verdict::Yes, "{f} from {gens:?}");
            if let Some(sys) = &sys {
                assert!(divide_with_remainder(&f, sys.as_ref().unwrap(), &ord).remainder.is_zero());
            }
        }
    }
}

#[test]
fn membership_agrees_across_orders_and_with_the_oracle() {
    let mut rng = StdRng::seed_from_u64(14);
    for _ in 0..12 {
        let gens = random_ideal(&mut rng, Field::Prime(5), 3);
        let space = OracleSpace::new(&gens, 2, 5, DEFAULT_COLUMN_CAP).unwrap();
        let bases: Vec<_> = three_orders().into_iter().map(|(_, o)| (exposure_and_groebner(&gens, &o), o)).collect();
        for k in 0..30 {
            let probe = if k % 2 == 0 { random_member(&mut rng, &gens, 2) } else { random_element(&mut rng, Field::Prime(5), 3, 3) };
            let verdicts: Vec<bool> = bases.iter().map(|(r, o)| r.contains(&probe, o)).collect();
            assert!(verdicts.windows(2).all(|p| p[0] == p[1]));
            if space.verdict(&probe).unwrap() == Verdict::Yes {
                assert!(verdicts[0], "oracle member rejected: {probe}");
            }
            if k % 2 == 0 {
                assert!(verdicts[0]);
                assert_eq!(space.verdict(&probe).unwrap(), Verdict::Yes);
            }
        }
    }
}

#[test]
fn orbit_reduction_matches_the_general_algorithm() {
    let mut rng = StdRng::seed_from_u64(15);
    for field in [Field::Rational, Field::Prime(5)] {
        for _ in 0..60 {
            let h = random_element(&mut rng, field, 3, 4);
            for (_, ord) in three_orders() {
                let a = orbit_reduction(&h, &ord);
                let b = exposure_and_groebner(&[h.clone()], &ord);
                assert_eq!((&a.exposure_basis, &a.seconds, a.improper), (&b.exposure_basis, &b.seconds, b.improper));
                // right multiplication by a unit keeps the support size
                if !a.improper && !h.is_zero() {
                    assert_eq!(a.exposure_basis[0].len(), h.len());
                    assert_eq!(a.seconds[0].len(), h.len());
                }
            }
        }
    }
}

#[test]
fn principal_ideals_have_rank_one() {
    let mut rng = StdRng::seed_from_u64(16);
    for _ in 0..40 {
        let h = random_element(&mut rng, Field::Rational, 3, 4);
        let ord = Order::Shortlex(standard());
        let r = exposure_and_groebner(&[h.clone()], &ord);
        match h.len() {
            0 => assert_eq!(r.rank(), 0),
            1 => assert!(r.improper),
            _ => {
                assert_eq!(r.rank(), 1);
                let sys = r.reduction_system(&ord).unwrap().unwrap();
                assert!(is_member(&h, &sys, &ord));
            }
        }
    }
}
