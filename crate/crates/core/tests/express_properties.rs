mod common;

use common::*;
use fga::algebra::AlgebraElement;
use fga::engine::exposure_and_groebner;
use fga::express::{compute_matrix_c, express, ExpressError};
use fga::scalars::Field;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn combine(basis: &[AlgebraElement], p: &[AlgebraElement]) -> AlgebraElement {
    basis.iter().zip(p).fold(AlgebraElement::zero(basis[0].field(), xy()), |acc, (f, g)| &acc + &(f * g))
}

#[test]
fn coordinates_reconstruct_and_are_unique() {
    let mut rng = StdRng::seed_from_u64(21);
    for field in [Field::Rational, Field::Prime(5)] {
        for _ in 0..25 {
            let gens = random_ideal(&mut rng, field, 4);
            for (_, ord) in three_orders() {
                let r = exposure_and_groebner(&gens, &ord);
                if r.improper {
                    continue;
                }
                let basis = &r.exposure_basis;
                let (c, seconds) = compute_matrix_c(basis, &ord).unwrap();
                assert_eq!(seconds, r.seconds);
                assert_eq!(c.left_apply(basis), seconds);
                assert!(c.is_upper_triangular());

                for (i, f) in basis.iter().enumerate() {
                    let p = express(f, basis, &c, &ord).unwrap();
                    for (j, pj) in p.iter().enumerate() {
                        assert_eq!(pj.is_zero(), i != j);
                        if i == j {
                            assert_eq!(pj, &AlgebraElement::one(field, xy()));
                        }
                    }
                }
                for _ in 0..4 {
                    let p: Vec<_> = basis
                        .iter()
                        .map(|_| {
                            let terms = rng.gen_range(0..3);
                            random_element(&mut rng, field, terms, 3)
                        })
                        .collect();
                    let h = combine(basis, &p);
                    assert_eq!(express(&h, basis, &c, &ord).unwrap(), p);
                }
            }
        }
    }
}

#[test]
fn non_members_carry_their_remainder() {
    let ord = standard();
    let basis = [el("x - 1", Field::Rational)];
    let (c, _) = compute_matrix_c(&basis, &ord).unwrap();
    match express(&el("x*y", Field::Rational), &basis, &c, &ord) {
        Err(ExpressError::NotMember { remainder }) => assert_eq!(remainder, el("y", Field::Rational)),
        other => panic!("{other:?}"),
    }
}

#[test]
fn seconds_also_generate() {
    let mut rng = StdRng::seed_from_u64(22);
    for _ in 0..30 {
        let gens = random_ideal(&mut rng, Field::Prime(5), 4);
        for (_, ord) in three_orders() {
            let r = exposure_and_groebner(&gens, &ord);
            if r.improper {
                continue;
            }
            let from_seconds = exposure_and_groebner(&r.seconds, &ord);
            assert_eq!(from_seconds.rank(), r.rank());
            for f in &r.exposure_basis {
                assert!(from_seconds.contains(f, &ord));
            }
        }
    }
}
