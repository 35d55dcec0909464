//! Exposure orders on the free group and the induced orders on finite
//! subsets.
//!
//! An exposure order is a well-order on `F` in which every word is larger
//! than its proper prefixes. The algorithms downstream treat orders as
//! comparison oracles via [`WordOrder`]; validity is the caller's
//! obligation, and [`validate_order`] checks it exhaustively on a ball.

use std::cmp::Ordering;
use std::collections::HashSet;

use thiserror::Error;

use crate::words::{ball, Alphabet, Letter, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("ranking must list each of the {expected} letters exactly once")]
    IncompleteRanking { expected: usize },
    #[error("weight for letter {0} must be nonzero with a positive leading entry")]
    NonPositiveWeight(usize),
    #[error("weight vectors must all have dimension {0}")]
    WeightDimension(usize),
    #[error("expected one weight vector per letter ({0})")]
    WeightCount(usize),
    #[error("forbidden prefixes must be nonempty words")]
    EmptyForbidden,
    #[error("forbidden prefixes are nested: {0} is a prefix of {1}")]
    NestedForbidden(String, String),
    #[error("malformed order spec `{0}`")]
    Spec(String),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// A total order on reduced words.
pub trait WordOrder {
    fn compare(&self, a: &[Letter], b: &[Letter]) -> Ordering;

    fn less(&self, a: &[Letter], b: &[Letter]) -> bool {
        self.compare(a, b) == Ordering::Less
    }

    /// The largest word in `words`, or `None` if empty.
    fn max_of<'a, I>(&self, words: I) -> Option<&'a Word>
    where
        I: IntoIterator<Item = &'a Word>,
        Self: Sized,
    {
        words.into_iter().reduce(|best, w| if self.less(best, w) { w } else { best })
    }
}

impl<O: WordOrder + ?Sized> WordOrder for &O {
    fn compare(&self, a: &[Letter], b: &[Letter]) -> Ordering {
        (**self).compare(a, b)
    }
}

/// Length first, then lexicographic in a fixed ranking of the letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shortlex {
    /// position of each letter code in the ranking
    rank_of: Vec<u32>,
}

impl Shortlex {
    /// `ranking` lists every letter once, smallest first.
    pub fn new(ranking: &[Letter], rank: usize) -> Result<Self, OrderError> {
        let n = 2 * rank;
        let mut rank_of = vec![u32::MAX; n];
        if ranking.len() != n {
            return Err(OrderError::IncompleteRanking { expected: n });
        }
        for (pos, l) in ranking.iter().enumerate() {
            if l.code() >= n || rank_of[l.code()] != u32::MAX {
                return Err(OrderError::IncompleteRanking { expected: n });
            }
            rank_of[l.code()] = pos as u32;
        }
        Ok(Shortlex { rank_of })
    }

    /// Ranking `x < x⁻¹ < y < y⁻¹ < …` (letter code order).
    pub fn natural(rank: usize) -> Self {
        Shortlex { rank_of: (0..2 * rank as u32).collect() }
    }

    pub fn rank(&self) -> usize {
        self.rank_of.len() / 2
    }

    pub fn ranking(&self) -> Vec<Letter> {
        let mut out = vec![Letter::from_code(0); self.rank_of.len()];
        for (code, &pos) in self.rank_of.iter().enumerate() {
            out[pos as usize] = Letter::from_code(code);
        }
        out
    }
}

impl WordOrder for Shortlex {
    fn compare(&self, a: &[Letter], b: &[Letter]) -> Ordering {
        a.len().cmp(&b.len()).then_with(|| {
            a.iter()
                .zip(b)
                .map(|(x, y)| self.rank_of[x.code()].cmp(&self.rank_of[y.code()]))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

/// Orders words by the lexicographic sum of per-letter weight vectors in
/// `ℤᵈ`, breaking ties with a shortlex order. Suffix-invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedShortlex {
    weights: Vec<Vec<i64>>,
    tie: Shortlex,
}

impl WeightedShortlex {
    /// `weights[code]` is the vector of the letter with that code.
    pub fn new(weights: Vec<Vec<i64>>, tie: Shortlex) -> Result<Self, OrderError> {
        let n = tie.rank_of.len();
        if weights.len() != n {
            return Err(OrderError::WeightCount(n));
        }
        let d = weights[0].len();
        for (code, w) in weights.iter().enumerate() {
            if w.len() != d {
                return Err(OrderError::WeightDimension(d));
            }
            match w.iter().find(|x| **x != 0) {
                Some(x) if *x > 0 => {}
                _ => return Err(OrderError::NonPositiveWeight(code)),
            }
        }
        Ok(WeightedShortlex { weights, tie })
    }

    pub fn weight(&self, w: &[Letter]) -> Vec<i64> {
        let mut acc = vec![0i64; self.weights[0].len()];
        for l in w {
            for (a, x) in acc.iter_mut().zip(&self.weights[l.code()]) {
                *a += x;
            }
        }
        acc
    }
}

impl WordOrder for WeightedShortlex {
    fn compare(&self, a: &[Letter], b: &[Letter]) -> Ordering {
        self.weight(a).cmp(&self.weight(b)).then_with(|| self.tie.compare(a, b))
    }
}

/// A prefix-closed set `T` described by its finitely many forbidden
/// prefixes: `T = { w : no forbidden word is a prefix of w }`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PrefixTree {
    forbidden: Vec<Word>,
}

impl PrefixTree {
    /// Forbidden words must be nonempty and pairwise prefix-incomparable,
    /// in which case they are exactly the prefix-neighbors of `T`.
    pub fn new(forbidden: Vec<Word>, alphabet: &Alphabet) -> Result<Self, OrderError> {
        for (i, a) in forbidden.iter().enumerate() {
            alphabet.check_word(a)?;
            if a.is_identity() {
                return Err(OrderError::EmptyForbidden);
            }
            for (j, b) in forbidden.iter().enumerate() {
                if i != j && a.is_prefix_of(b) {
                    return Err(OrderError::NestedForbidden(
                        alphabet.format_word(a),
                        alphabet.format_word(b),
                    ));
                }
            }
        }
        Ok(PrefixTree { forbidden })
    }

    /// The tree with prefix-neighbors equal to the boundary of the finite
    /// prefix-closed set `subtree` (missing prefixes are added).
    pub fn around_finite(subtree: &[Word], alphabet: &Alphabet) -> Result<Self, OrderError> {
        let mut inside: HashSet<Word> = HashSet::new();
        inside.insert(Word::identity());
        for w in subtree {
            alphabet.check_word(w)?;
            for k in 0..=w.len() {
                inside.insert(Word::from_letters(w[..k].iter().copied()));
            }
        }
        let mut forbidden: Vec<Word> = Vec::new();
        for w in &inside {
            for l in alphabet.letters() {
                if w.last() != Some(&l.inverse()) {
                    let child = w.concat(&[l]);
                    if !inside.contains(&child) {
                        forbidden.push(child);
                    }
                }
            }
        }
        forbidden.sort_by(|a, b| Shortlex::natural(alphabet.rank()).compare(a, b));
        PrefixTree::new(forbidden, alphabet)
    }

    pub fn forbidden(&self) -> &[Word] {
        &self.forbidden
    }

    pub fn contains(&self, w: &[Letter]) -> bool {
        !self.forbidden.iter().any(|f| f.is_prefix_of(w))
    }
}

pub fn prefix_tree_membership(w: &[Letter], tree: &PrefixTree) -> bool {
    tree.contains(w)
}

/// `T` followed by its complement, each ordered by `base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeSum {
    base: Box<Order>,
    tree: PrefixTree,
}

impl TreeSum {
    pub fn new(base: Order, tree: PrefixTree) -> Self {
        TreeSum { base: Box::new(base), tree }
    }

    pub fn tree(&self) -> &PrefixTree {
        &self.tree
    }
}

impl WordOrder for TreeSum {
    fn compare(&self, a: &[Letter], b: &[Letter]) -> Ordering {
        // members of T sort first
        let (ia, ib) = (self.tree.contains(a), self.tree.contains(b));
        ib.cmp(&ia).then_with(|| self.base.compare(a, b))
    }
}

/// Three bands: `T`, then the prefix-neighbors of `T` ending in a positive
/// letter, then everything else; `base` within each band. Equivalent to
/// the tree sum over `T` of the tree sum over `T ∪ ∂₊T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lewin {
    base: Box<Order>,
    tree: PrefixTree,
}

impl Lewin {
    pub fn new(base: Order, tree: PrefixTree) -> Self {
        Lewin { base: Box::new(base), tree }
    }

    fn band(&self, w: &[Letter]) -> u8 {
        match self.tree.forbidden.iter().find(|f| f.is_prefix_of(w)) {
            None => 0,
            Some(f) if f.len() == w.len() && !f.last().unwrap().is_inverse() => 1,
            Some(_) => 2,
        }
    }
}

impl WordOrder for Lewin {
    fn compare(&self, a: &[Letter], b: &[Letter]) -> Ordering {
        self.band(a).cmp(&self.band(b)).then_with(|| self.base.compare(a, b))
    }
}

/// The exposure orders this crate can construct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Order {
    Shortlex(Shortlex),
    Weighted(WeightedShortlex),
    TreeSum(TreeSum),
    Lewin(Lewin),
}

impl Order {
    pub fn shortlex(ranking: &[Letter], rank: usize) -> Result<Order, OrderError> {
        Shortlex::new(ranking, rank).map(Order::Shortlex)
    }

    pub fn weighted_shortlex(weights: Vec<Vec<i64>>, tie: Shortlex) -> Result<Order, OrderError> {
        WeightedShortlex::new(weights, tie).map(Order::Weighted)
    }

    pub fn tree_sum(base: Order, tree: PrefixTree) -> Order {
        Order::TreeSum(TreeSum::new(base, tree))
    }

    pub fn lewin(base: Order, tree: PrefixTree) -> Order {
        Order::Lewin(Lewin::new(base, tree))
    }

    /// True for the constructions known to be suffix-invariant.
    pub fn is_suffix_invariant(&self) -> bool {
        matches!(self, Order::Shortlex(_) | Order::Weighted(_))
    }
}

impl WordOrder for Order {
    fn compare(&self, a: &[Letter], b: &[Letter]) -> Ordering {
        match self {
            Order::Shortlex(o) => o.compare(a, b),
            Order::Weighted(o) => o.compare(a, b),
            Order::TreeSum(o) => o.compare(a, b),
            Order::Lewin(o) => o.compare(a, b),
        }
    }
}

/// `A ≺max B` iff the largest element of `A △ B` lies in `B`.
pub fn max_compare<O: WordOrder>(a: &[Word], b: &[Word], ord: &O) -> Ordering {
    let sa: HashSet<&Word> = a.iter().collect();
    let sb: HashSet<&Word> = b.iter().collect();
    let diff = sa.symmetric_difference(&sb).copied();
    match ord.max_of(diff) {
        None => Ordering::Equal,
        Some(m) if sb.contains(m) => Ordering::Less,
        Some(_) => Ordering::Greater,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderViolation {
    NotAntisymmetric(Word, Word),
    NotReflexive(Word),
    NotTransitive(Word, Word, Word),
    PrefixCondition { prefix: Word, word: Word },
}

/// Exhaustively checks totality, antisymmetry, transitivity and the prefix
/// condition on all words of length `≤ max_len`.
pub fn validate_order<O: WordOrder>(
    ord: &O,
    rank: usize,
    max_len: usize,
) -> Result<(), OrderViolation> {
    let words = ball(rank, max_len);
    for u in &words {
        if ord.compare(u, u) != Ordering::Equal {
            return Err(OrderViolation::NotReflexive(u.clone()));
        }
        for k in 0..u.len() {
            if !ord.less(&u[..k], u) {
                return Err(OrderViolation::PrefixCondition {
                    prefix: Word::from_letters(u[..k].iter().copied()),
                    word: u.clone(),
                });
            }
        }
    }
    for (i, u) in words.iter().enumerate() {
        for v in &words[i + 1..] {
            let uv = ord.compare(u, v);
            if uv == Ordering::Equal || uv != ord.compare(v, u).reverse() {
                return Err(OrderViolation::NotAntisymmetric(u.clone(), v.clone()));
            }
        }
    }
    // a total relation is transitive on the ball iff some arrangement of the
    // ball has every earlier word below every later one
    let mut sorted: Vec<&Word> = Vec::with_capacity(words.len());
    for w in &words {
        let at = sorted.iter().position(|v| ord.less(w, v)).unwrap_or(sorted.len());
        sorted.insert(at, w);
    }
    for (i, a) in sorted.iter().enumerate() {
        for (j, b) in sorted.iter().enumerate().skip(i + 1) {
            if !ord.less(a, b) {
                // `a` was inserted after `b`, just before some larger word;
                // walking such words towards `b` closes a three-cycle
                let mut k = i;
                loop {
                    let next = (k + 1..j)
                        .find(|&m| ord.less(sorted[k], sorted[m]))
                        .expect("insertion places each word below its successor");
                    if ord.less(sorted[next], b) {
                        return Err(OrderViolation::NotTransitive(
                            sorted[k].clone(),
                            sorted[next].clone(),
                            (*b).clone(),
                        ));
                    }
                    k = next;
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn xy() -> Alphabet {
        Alphabet::new(["x", "y"]).unwrap()
    }

    fn w(s: &str) -> Word {
        xy().parse_word(s).unwrap()
    }

    fn letters(s: &[&str]) -> Vec<Letter> {
        s.iter().map(|l| xy().parse_letter(l).unwrap()).collect()
    }

    fn inverses_first() -> Shortlex {
        Shortlex::new(&letters(&["y^-1", "x^-1", "x", "y"]), 2).unwrap()
    }

    fn tree(forbidden: &[&str]) -> PrefixTree {
        PrefixTree::new(forbidden.iter().map(|s| w(s)).collect(), &xy()).unwrap()
    }

    #[test]
    fn shortlex_examples() {
        let o = inverses_first();
        assert_eq!(o.compare(&w("e"), &w("y^-1")), Ordering::Less);
        assert_eq!(o.compare(&w("y^-2"), &w("x*y^-1")), Ordering::Less);
        assert_eq!(o.compare(&w("x"), &w("x*y")), Ordering::Less);
        // e ≺ y⁻¹ ≺ x⁻¹ ≺ x ≺ y ≺ y⁻² ≺ y⁻¹x⁻¹ ≺ y⁻¹x ≺ x⁻¹y⁻¹ ≺ x⁻²
        let chain = ["e", "y^-1", "x^-1", "x", "y", "y^-2", "y^-1*x^-1", "y^-1*x", "x^-1*y^-1", "x^-2"];
        for p in chain.windows(2) {
            assert!(o.less(&w(p[0]), &w(p[1])), "{} < {}", p[0], p[1]);
        }
        assert_eq!(validate_order(&o, 2, 2), Ok(()));
    }

    #[test]
    fn shortlex_rejects_incomplete_ranking() {
        assert!(Shortlex::new(&letters(&["x", "y"]), 2).is_err());
        assert!(Shortlex::new(&letters(&["x", "x", "y", "y^-1"]), 2).is_err());
    }

    fn sample_weights() -> WeightedShortlex {
        // f(x)=1, f(x⁻¹)=f(y)=f(y⁻¹)=4, codes: x, x⁻¹, y, y⁻¹
        WeightedShortlex::new(vec![vec![1], vec![4], vec![4], vec![4]], inverses_first()).unwrap()
    }

    #[test]
    fn weighted_examples() {
        let o = sample_weights();
        assert!(o.less(&w("x^3"), &w("y^-1")));
        let chain = ["e", "x", "x^2", "x^3", "y^-1", "x^-1", "y", "x^4", "y^-1*x"];
        for p in chain.windows(2) {
            assert!(o.less(&w(p[0]), &w(p[1])), "{} < {}", p[0], p[1]);
        }
        let lex2 = WeightedShortlex::new(
            vec![vec![1, 0], vec![1, 0], vec![0, 1], vec![0, 1]],
            inverses_first(),
        )
        .unwrap();
        assert!(lex2.less(&w("y^5"), &w("x")));
        assert!(lex2.less(&w("y^-7"), &w("x^-1")));
        assert_eq!(validate_order(&o, 2, 3), Ok(()));
    }

    #[test]
    fn weighted_rejects_bad_weights() {
        let s = inverses_first();
        assert!(matches!(
            WeightedShortlex::new(vec![vec![0], vec![1], vec![1], vec![1]], s.clone()),
            Err(OrderError::NonPositiveWeight(0))
        ));
        assert!(matches!(
            WeightedShortlex::new(vec![vec![1, 0], vec![0, -1], vec![1, 0], vec![1, 0]], s.clone()),
            Err(OrderError::NonPositiveWeight(1))
        ));
        assert!(WeightedShortlex::new(vec![vec![1]; 3], s).is_err());
    }

    #[test]
    fn constant_weights_match_shortlex() {
        let s = inverses_first();
        let o = WeightedShortlex::new(vec![vec![3]; 4], s.clone()).unwrap();
        let b = ball(2, 3);
        for u in &b {
            for v in &b {
                assert_eq!(o.compare(u, v), s.compare(u, v));
            }
        }
    }

    #[test]
    fn tree_sum_examples() {
        let base = Order::Shortlex(inverses_first());
        let o = Order::tree_sum(base.clone(), tree(&["y", "y^-1"]));
        assert!(o.less(&w("x^5"), &w("y")));
        let o = Order::tree_sum(base.clone(), tree(&["x", "x^-1"]));
        assert!(o.less(&w("y"), &w("x*y")));
        let o = Order::tree_sum(base.clone(), PrefixTree::default());
        for u in ball(2, 2) {
            for v in ball(2, 2) {
                assert_eq!(o.compare(&u, &v), base.compare(&u, &v));
            }
        }
        assert_eq!(validate_order(&Order::tree_sum(base, tree(&["x", "y^-1*x"])), 2, 3), Ok(()));
    }

    #[test]
    fn lewin_examples() {
        let base = Order::Shortlex(inverses_first());
        let t = tree(&["x", "x^-1"]);
        let o = Order::lewin(base.clone(), t.clone());
        assert!(o.less(&w("x"), &w("x^-1")));
        assert!(o.less(&w("y"), &w("x")));
        assert!(o.less(&w("y^-1*x^3"), &w("x")));
        let plain = Order::lewin(base.clone(), PrefixTree::default());
        for u in ball(2, 2) {
            for v in ball(2, 2) {
                assert_eq!(plain.compare(&u, &v), base.compare(&u, &v));
            }
        }
        assert_eq!(validate_order(&o, 2, 3), Ok(()));
    }

    #[test]
    fn lewin_is_double_tree_sum() {
        let a = xy();
        let base = Order::Shortlex(inverses_first());
        let t = tree(&["x", "x^-1", "y*x^-1", "y^2"]);
        // T' = T ∪ ∂₊T: forbidden = negative neighbors plus children of positive ones
        let mut outer: Vec<Word> = Vec::new();
        for f in t.forbidden() {
            if f.last().unwrap().is_inverse() {
                outer.push(f.clone());
            } else {
                for l in a.letters() {
                    if l != f.last().unwrap().inverse() {
                        outer.push(f.concat(&[l]));
                    }
                }
            }
        }
        let outer = PrefixTree::new(outer, &a).unwrap();
        let double = Order::tree_sum(Order::tree_sum(base.clone(), outer), t.clone());
        let lewin = Order::lewin(base, t);
        for u in ball(2, 3) {
            for v in ball(2, 3) {
                assert_eq!(lewin.compare(&u, &v), double.compare(&u, &v));
            }
        }
    }

    #[test]
    fn prefix_tree_examples() {
        let t = tree(&["x", "x^-1"]);
        assert!(prefix_tree_membership(&w("y*x"), &t));
        assert!(!prefix_tree_membership(&w("x*y"), &t));
        assert!(prefix_tree_membership(&w("e"), &t));
        assert!(matches!(
            PrefixTree::new(vec![w("x"), w("x*y")], &xy()),
            Err(OrderError::NestedForbidden(..))
        ));
        assert_eq!(PrefixTree::new(vec![w("e")], &xy()), Err(OrderError::EmptyForbidden));
    }

    #[test]
    fn around_finite_subtree() {
        let t = PrefixTree::around_finite(&[w("x*y")], &xy()).unwrap();
        let mut got: Vec<String> = t.forbidden().iter().map(|f| xy().format_word(f)).collect();
        got.sort();
        let mut expected = vec!["x^-1", "y", "y^-1", "x^2", "x*y^-1", "x*y*x", "x*y^2", "x*y*x^-1"];
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn max_compare_examples() {
        let o = inverses_first();
        let (a, b) = (vec![w("x")], vec![w("x"), w("y^-1")]);
        assert_eq!(max_compare(&a, &b, &o), Ordering::Less);
        assert_eq!(max_compare(&[], &[w("x*y")], &o), Ordering::Less);
        assert_eq!(
            max_compare(&[w("y^-2"), w("y"), w("x")], &[w("y^-2"), w("y^2"), w("y^-1")], &o),
            Ordering::Less
        );
        assert_eq!(max_compare(&b, &b, &o), Ordering::Equal);
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        prop::collection::vec(0usize..4, 0..7)
            .prop_map(|codes| Word::from_letters(codes.into_iter().map(Letter::from_code)))
    }

    fn sample_orders() -> Vec<Order> {
        let base = Order::Shortlex(inverses_first());
        vec![
            base.clone(),
            Order::Weighted(sample_weights()),
            Order::tree_sum(base.clone(), tree(&["x", "y^-1*x"])),
            Order::lewin(base, tree(&["x", "x^-1", "y^2"])),
        ]
    }

    proptest! {
        #[test]
        fn orders_are_total_and_transitive(a in arb_word(), b in arb_word(), c in arb_word()) {
            for o in sample_orders() {
                prop_assert_eq!(o.compare(&a, &b), o.compare(&b, &a).reverse());
                prop_assert_eq!(o.compare(&a, &b) == Ordering::Equal, a == b);
                if o.less(&a, &b) && o.less(&b, &c) {
                    prop_assert!(o.less(&a, &c));
                }
            }
        }

        #[test]
        fn prefix_condition(a in arb_word()) {
            for o in sample_orders() {
                for k in 0..a.len() {
                    prop_assert!(o.less(&a[..k], &a));
                }
            }
        }

        #[test]
        fn weighted_is_suffix_invariant(u in arb_word(), u2 in arb_word(), v in arb_word()) {
            let o = sample_weights();
            if o.less(&u, &u2) && u2.joins_without_cancellation(&v) {
                prop_assert!(o.less(&u.concat(&v), &u2.concat(&v)));
            }
        }

        #[test]
        fn max_compare_is_a_total_order(
            a in prop::collection::vec(arb_word(), 0..5),
            b in prop::collection::vec(arb_word(), 0..5),
            c in prop::collection::vec(arb_word(), 0..5),
        ) {
            let o = inverses_first();
            prop_assert_eq!(max_compare(&a, &b, &o), max_compare(&b, &a, &o).reverse());
            if max_compare(&a, &b, &o).is_lt() && max_compare(&b, &c, &o).is_lt() {
                prop_assert!(max_compare(&a, &c, &o).is_lt());
            }
            let mut ab = a.clone();
            ab.extend(b.iter().cloned());
            prop_assert!(max_compare(&a, &ab, &o).is_le());
        }
    }

    #[test]
    fn shortlex_initial_segments_are_finite() {
        // every word smaller than v has length ≤ |v|, so the ball contains them all
        let o = inverses_first();
        let v = w("x*y^-1*x");
        let smaller: Vec<Word> = ball(2, 4).into_iter().filter(|u| o.less(u, &v)).collect();
        assert!(smaller.iter().all(|u| u.len() <= v.len()));
        assert_eq!(
            smaller.len(),
            ball(2, 3).into_iter().filter(|u| o.less(u, &v)).count()
        );
    }

    struct Cyclic;

    // length first; single letters x < y < x⁻¹ < x, everything below y⁻¹
    impl WordOrder for Cyclic {
        fn compare(&self, a: &[Letter], b: &[Letter]) -> Ordering {
            match (a, b) {
                ([p], [q]) if p != q => {
                    let (p, q) = (p.code(), q.code());
                    if p == 3 || q == 3 {
                        p.cmp(&q)
                    } else if (q + 3 - p) % 3 == 2 {
                        Ordering::Less
                    } else {
                        Ordering::Greater
                    }
                }
                _ => Shortlex::natural(2).compare(a, b),
            }
        }
    }

    #[test]
    fn validate_finds_three_cycles() {
        match validate_order(&Cyclic, 2, 2) {
            Err(OrderViolation::NotTransitive(a, b, c)) => {
                assert!(Cyclic.less(&a, &b) && Cyclic.less(&b, &c) && Cyclic.less(&c, &a));
            }
            other => panic!("expected a transitivity failure, got {other:?}"),
        }
    }
}
