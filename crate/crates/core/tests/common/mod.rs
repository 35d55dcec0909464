#![allow(dead_code)]

use std::sync::Arc;

use fga::algebra::AlgebraElement;
use fga::orders::{Order, PrefixTree, Shortlex};
use fga::scalars::Field;
use fga::words::{Alphabet, Letter, Word};
use rand::rngs::StdRng;
use rand::Rng;

pub fn xy() -> Arc<Alphabet> {
    Arc::new(Alphabet::new(["x", "y"]).unwrap())
}

pub fn word(s: &str) -> Word {
    xy().parse_word(s).unwrap()
}

pub fn el(s: &str, field: Field) -> AlgebraElement {
    AlgebraElement::parse(s, field, xy()).unwrap()
}

pub fn shortlex(ranking: &[&str]) -> Shortlex {
    let a = xy();
    let r: Vec<Letter> = ranking.iter().map(|l| a.parse_letter(l).unwrap()).collect();
    Shortlex::new(&r, 2).unwrap()
}

pub fn standard() -> Shortlex {
    shortlex(&["x", "y", "x^-1", "y^-1"])
}

pub fn inverses_first() -> Shortlex {
    shortlex(&["y^-1", "x^-1", "x", "y"])
}

/// Shortlex, a weighted order and a tree sum, all exposure orders.
pub fn three_orders() -> Vec<(&'static str, Order)> {
    let weighted = Order::weighted_shortlex(vec![vec![1], vec![2], vec![3], vec![1]], standard()).unwrap();
    let tree = PrefixTree::around_finite(&[word("x*y"), word("y^-1*x")], &xy()).unwrap();
    let tree_sum = Order::tree_sum(Order::Shortlex(inverses_first()), tree);
    vec![("shortlex", Order::Shortlex(standard())), ("weighted", weighted), ("tree_sum", tree_sum)]
}

pub fn random_word(rng: &mut StdRng, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_letters((0..len).map(|_| Letter::from_code(rng.gen_range(0..4))))
}

pub fn random_scalar(rng: &mut StdRng, field: Field) -> fga::scalars::Scalar {
    loop {
        let c = field.from_i64(rng.gen_range(-3..=3));
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn random_element(rng: &mut StdRng, field: Field, terms: usize, max_len: usize) -> AlgebraElement {
    AlgebraElement::from_terms(
        (0..terms).map(|_| (random_word(rng, max_len), random_scalar(rng, field))),
        field,
        xy(),
    )
}

/// One to three generators, each with at least two support words.
pub fn random_ideal(rng: &mut StdRng, field: Field, max_len: usize) -> Vec<AlgebraElement> {
    let n = rng.gen_range(1..=3);
    (0..n)
        .map(|_| loop {
            let terms = rng.gen_range(2..=3);
            let g = random_element(rng, field, terms, max_len);
            if g.len() >= 2 {
                break g;
            }
        })
        .collect()
}

/// `Σ gᵢ·pᵢ` with random short `pᵢ`.
pub fn random_member(rng: &mut StdRng, gens: &[AlgebraElement], max_len: usize) -> AlgebraElement {
    let field = gens[0].field();
    let mut acc = AlgebraElement::zero(field, xy());
    for g in gens {
        let terms = rng.gen_range(0..=2);
        let p = random_element(rng, field, terms, max_len);
        acc = &acc + &(g * &p);
    }
    acc
}
