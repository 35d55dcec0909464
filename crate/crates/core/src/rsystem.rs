//! Combinatorially reducing systems: validation, normal forms modulo the
//! transversal, and division with remainder.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashMap};
use std::fmt;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use thiserror::Error;

use crate::algebra::{AlgebraElement, AlgebraError};
use crate::orders::WordOrder;
use crate::scalars::{solve_linear, Field};
use crate::words::{Alphabet, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RsystemError {
    #[error("element {0} is zero")]
    ZeroElement(usize),
    #[error("element {0} is a scalar")]
    ScalarElement(usize),
    #[error("element {0} is not monic")]
    NotMonic(usize),
    #[error("element {index}: {source}")]
    Algebra { index: usize, source: AlgebraError },
    #[error("not a combinatorially reducing system: {0}")]
    Invalid(CrsViolation),
}

/// The first failed condition found by [`check_crs`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrsViolation {
    DuplicateHead { first: usize, second: usize, head: Word },
    NestedHeads { shorter: usize, longer: usize },
    NotClosed { index: usize, tail: Letter },
    OutsideTree { index: usize, word: Word },
}

impl fmt::Display for CrsViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrsViolation::DuplicateHead { first, second, .. } => {
                write!(f, "elements {first} and {second} share a head term")
            }
            CrsViolation::NestedHeads { shorter, longer } => {
                write!(f, "head term of element {shorter} is a prefix of the head term of element {longer}")
            }
            CrsViolation::NotClosed { index, .. } => write!(
                f,
                "element {index} times the inverse of its head term tail is not spanned by the elements ending in that inverse"
            ),
            CrsViolation::OutsideTree { index, .. } => {
                write!(f, "element {index} has a support word strictly below a head term")
            }
        }
    }
}

impl CrsViolation {
    /// Human-readable form with words spelled out.
    pub fn describe(&self, alphabet: &Alphabet) -> String {
        match self {
            CrsViolation::DuplicateHead { head, .. } => {
                format!("{self} ({})", alphabet.format_word(head))
            }
            CrsViolation::NotClosed { tail, .. } => {
                format!("{self} (tail {})", alphabet.format_letter(*tail))
            }
            CrsViolation::OutsideTree { word, .. } => {
                format!("{self} ({})", alphabet.format_word(word))
            }
            CrsViolation::NestedHeads { .. } => self.to_string(),
        }
    }

    /// The number of the violated condition, 1 to 3.
    pub fn condition(&self) -> u8 {
        match self {
            CrsViolation::DuplicateHead { .. } | CrsViolation::NestedHeads { .. } => 1,
            CrsViolation::NotClosed { .. } => 2,
            CrsViolation::OutsideTree { .. } => 3,
        }
    }
}

/// Indexed rewriting rules `HT(q) → HT(q) − q`, looked up by head term.
pub trait Rules {
    fn rule_count(&self) -> usize;
    fn rule(&self, i: usize) -> &AlgebraElement;
    fn head(&self, i: usize) -> &Word;
    fn lookup(&self, head: &[Letter]) -> Option<usize>;

    /// The rule whose head term is a prefix of `w`, if any.
    fn find_rule(&self, w: &[Letter]) -> Option<usize> {
        if self.rule_count() == 0 {
            return None;
        }
        (1..=w.len()).find_map(|k| self.lookup(&w[..k]))
    }
}

/// Monic, non-scalar elements together with their head terms.
#[derive(Debug, Clone)]
pub struct ReductionSystem {
    elements: Vec<AlgebraElement>,
    heads: Vec<Word>,
    head_index: HashMap<Word, usize>,
}

impl ReductionSystem {
    /// Accepts any list of monic non-scalar elements. Repeated head terms are
    /// kept so that [`check_crs`] can report them.
    pub fn new<O: WordOrder>(elements: Vec<AlgebraElement>, ord: &O) -> Result<Self, RsystemError> {
        let mut heads = Vec::with_capacity(elements.len());
        let mut head_index = HashMap::new();
        for (i, q) in elements.iter().enumerate() {
            if q.is_zero() {
                return Err(RsystemError::ZeroElement(i));
            }
            if q.is_scalar() {
                return Err(RsystemError::ScalarElement(i));
            }
            if !q.is_monic(ord) {
                return Err(RsystemError::NotMonic(i));
            }
            if let Some(first) = elements.first() {
                if first.field() != q.field() {
                    return Err(RsystemError::Algebra {
                        index: i,
                        source: AlgebraError::FieldMismatch(first.field(), q.field()),
                    });
                }
                if first.alphabet() != q.alphabet() {
                    return Err(RsystemError::Algebra { index: i, source: AlgebraError::AlphabetMismatch });
                }
            }
            let h = q.head_term(ord).expect("nonzero").clone();
            head_index.entry(h.clone()).or_insert(i);
            heads.push(h);
        }
        Ok(ReductionSystem { elements, heads, head_index })
    }

    /// Appends one element, with the same checks as [`ReductionSystem::new`].
    pub fn push<O: WordOrder>(&mut self, e: AlgebraElement, ord: &O) -> Result<(), RsystemError> {
        let i = self.elements.len();
        let mut single = ReductionSystem::new(vec![e], ord).map_err(|err| match err {
            RsystemError::ZeroElement(_) => RsystemError::ZeroElement(i),
            RsystemError::ScalarElement(_) => RsystemError::ScalarElement(i),
            RsystemError::NotMonic(_) => RsystemError::NotMonic(i),
            other => other,
        })?;
        let e = single.elements.pop().expect("one element");
        if let Some(first) = self.elements.first() {
            if first.field() != e.field() {
                let source = AlgebraError::FieldMismatch(first.field(), e.field());
                return Err(RsystemError::Algebra { index: i, source });
            }
            if first.alphabet() != e.alphabet() {
                return Err(RsystemError::Algebra { index: i, source: AlgebraError::AlphabetMismatch });
            }
        }
        let h = single.heads.pop().expect("one head");
        self.head_index.entry(h.clone()).or_insert(i);
        self.heads.push(h);
        self.elements.push(e);
        Ok(())
    }

    /// [`ReductionSystem::new`] followed by [`check_crs`].
    pub fn validated<O: WordOrder>(elements: Vec<AlgebraElement>, ord: &O) -> Result<Self, RsystemError> {
        let q = Self::new(elements, ord)?;
        match check_crs(&q, ord) {
            Ok(()) => Ok(q),
            Err(v) => Err(RsystemError::Invalid(v)),
        }
    }

    pub fn elements(&self) -> &[AlgebraElement] {
        &self.elements
    }

    pub fn heads(&self) -> &[Word] {
        &self.heads
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

impl Rules for ReductionSystem {
    fn rule_count(&self) -> usize {
        self.elements.len()
    }
    fn rule(&self, i: usize) -> &AlgebraElement {
        &self.elements[i]
    }
    fn head(&self, i: usize) -> &Word {
        &self.heads[i]
    }
    fn lookup(&self, head: &[Letter]) -> Option<usize> {
        self.head_index.get(head).copied()
    }
}

/// Checks the three defining conditions in order and reports the first failure.
pub fn check_crs<O: WordOrder>(q: &ReductionSystem, ord: &O) -> Result<(), CrsViolation> {
    // 1. distinct, prefix-incomparable head terms
    for (i, h) in q.heads.iter().enumerate() {
        let owner = q.head_index[h];
        if owner != i {
            return Err(CrsViolation::DuplicateHead { first: owner, second: i, head: h.clone() });
        }
    }
    for (i, h) in q.heads.iter().enumerate() {
        if let Some(j) = (1..h.len()).find_map(|k| q.lookup(&h[..k])) {
            return Err(CrsViolation::NestedHeads { shorter: j, longer: i });
        }
    }

    // 2. q·b⁻¹ is spanned by the elements whose head term ends in b⁻¹
    for (i, elem) in q.elements.iter().enumerate() {
        let b = *q.heads[i].last().expect("non-scalar");
        let target = elem.mul_word(&[b.inverse()]);
        let partners: Vec<&AlgebraElement> = q
            .elements
            .iter()
            .zip(&q.heads)
            .filter(|(_, h)| h.last() == Some(&b.inverse()))
            .map(|(e, _)| e)
            .collect();
        if !in_span(&target, &partners) {
            return Err(CrsViolation::NotClosed { index: i, tail: b });
        }
    }

    // 3. support inside T ∪ ∂T
    for (i, elem) in q.elements.iter().enumerate() {
        let mut words: Vec<&Word> = elem.support().collect();
        words.sort_by(|a, b| ord.compare(b, a));
        for w in words {
            if (1..w.len()).any(|k| q.lookup(&w[..k]).is_some()) {
                return Err(CrsViolation::OutsideTree { index: i, word: w.clone() });
            }
        }
    }
    Ok(())
}

fn in_span(target: &AlgebraElement, partners: &[&AlgebraElement]) -> bool {
    if target.is_zero() {
        return true;
    }
    if partners.is_empty() {
        return false;
    }
    let field = target.field();
    let mut coords: HashMap<&Word, usize> = HashMap::new();
    for e in partners.iter().copied().chain(std::iter::once(target)) {
        for w in e.support() {
            let n = coords.len();
            coords.entry(w).or_insert(n);
        }
    }
    let dense = |e: &AlgebraElement| {
        let mut v = vec![field.zero(); coords.len()];
        for (w, c) in e.terms() {
            v[coords[w]] = c.clone();
        }
        v
    };
    let columns: Vec<_> = partners.iter().map(|e| dense(e)).collect();
    matches!(solve_linear(field, &columns, &dense(target)), Ok(Some(_)))
}

/// How the next reducible word is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Selection {
    /// The `≺`-greatest reducible word.
    #[default]
    Greatest,
    /// A uniformly random reducible word, from a seeded generator.
    Shuffled(u64),
}

/// Result of a division: `f = Σ rules[i]·quotients[i] + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<AlgebraElement>,
    pub remainder: AlgebraElement,
    pub steps: usize,
}

struct Keyed<'a, O: WordOrder> {
    word: Word,
    ord: &'a O,
}

impl<O: WordOrder> PartialEq for Keyed<'_, O> {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word
    }
}
impl<O: WordOrder> Eq for Keyed<'_, O> {}
impl<O: WordOrder> PartialOrd for Keyed<'_, O> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<O: WordOrder> Ord for Keyed<'_, O> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ord.compare(&self.word, &other.word)
    }
}

fn reduce_core<R: Rules + ?Sized, O: WordOrder>(
    f: &AlgebraElement,
    rules: &R,
    ord: &O,
    selection: Selection,
    mut quotients: Option<&mut Vec<AlgebraElement>>,
) -> (AlgebraElement, usize) {
    let mut r = f.clone();
    let mut steps = 0;
    let mut apply = |r: &mut AlgebraElement, u: &Word, rule: usize| -> Vec<Word> {
        let q = rules.rule(rule);
        let gamma = r.coefficient(u).expect("present").clone();
        let suffix = u.strip_prefix(rules.head(rule)).expect("head is a prefix");
        let before: Vec<Word> = q.support().map(|w| w.concat(&suffix)).collect();
        r.add_scaled_shifted(&-&gamma, q, &suffix);
        if let Some(qs) = quotients.as_deref_mut() {
            qs[rule].add_term(suffix, &gamma);
        }
        before
    };
    match selection {
        Selection::Greatest => {
            let mut heap: BinaryHeap<Keyed<O>> = r
                .support()
                .filter(|w| rules.find_rule(w).is_some())
                .map(|w| Keyed { word: w.clone(), ord })
                .collect();
            while let Some(Keyed { word: u, .. }) = heap.pop() {
                if r.coefficient(&u).is_none() {
                    continue;
                }
                // stale duplicates are skipped by the presence check above
                let rule = rules.find_rule(&u).expect("pushed only when reducible");
                let touched = apply(&mut r, &u, rule);
                steps += 1;
                for w in touched {
                    if r.coefficient(&w).is_some() && rules.find_rule(&w).is_some() {
                        heap.push(Keyed { word: w, ord });
                    }
                }
            }
        }
        Selection::Shuffled(seed) => {
            let mut rng = StdRng::seed_from_u64(seed);
            loop {
                let mut reducible: Vec<(Word, usize)> = r
                    .support()
                    .filter_map(|w| rules.find_rule(w).map(|i| (w.clone(), i)))
                    .collect();
                if reducible.is_empty() {
                    break;
                }
                reducible.sort_by(|a, b| ord.compare(&a.0, &b.0));
                let (u, rule) = reducible.choose(&mut rng).expect("nonempty").clone();
                apply(&mut r, &u, rule);
                steps += 1;
            }
        }
    }
    (r, steps)
}

/// `φ_I(f)`: the unique element of `f + I` supported on the transversal.
pub fn reduce_mod_transversal<R: Rules + ?Sized, O: WordOrder>(f: &AlgebraElement, q: &R, ord: &O) -> AlgebraElement {
    reduce_core(f, q, ord, Selection::Greatest, None).0
}

/// As [`reduce_mod_transversal`], also returning the number of rewriting steps.
pub fn reduce_counted<R: Rules + ?Sized, O: WordOrder>(f: &AlgebraElement, q: &R, ord: &O) -> (AlgebraElement, usize) {
    reduce_core(f, q, ord, Selection::Greatest, None)
}

pub fn divide_with_remainder<R: Rules + ?Sized, O: WordOrder>(f: &AlgebraElement, q: &R, ord: &O) -> Division {
    divide_with_selection(f, q, ord, Selection::Greatest)
}

pub fn divide_with_selection<R: Rules + ?Sized, O: WordOrder>(
    f: &AlgebraElement,
    q: &R,
    ord: &O,
    selection: Selection,
) -> Division {
    let zero = AlgebraElement::zero(f.field(), f.alphabet().clone());
    let mut quotients = vec![zero; q.rule_count()];
    let (remainder, steps) = reduce_core(f, q, ord, selection, Some(&mut quotients));
    Division { quotients, remainder, steps }
}

pub fn is_member<R: Rules + ?Sized, O: WordOrder>(f: &AlgebraElement, q: &R, ord: &O) -> bool {
    reduce_mod_transversal(f, q, ord).is_zero()
}

/// The forbidden prefixes, i.e. the head terms, in ascending order.
///
/// For `y⁻² + y + x`, `y² + xy + y⁻¹`, `xy⁻¹ + y`, `xy + x + y⁻¹` over 𝔽₂
/// under `y⁻¹ < x⁻¹ < x < y` this is `y⁻², xy⁻¹, xy, y²`; there is no `yx`.
pub fn transversal_neighbors<O: WordOrder>(q: &ReductionSystem, ord: &O) -> Vec<Word> {
    let mut out = q.heads.clone();
    out.sort_by(|a, b| ord.compare(a, b));
    out.dedup();
    out
}

/// True when no support word of `f` has a forbidden prefix.
pub fn is_normal<R: Rules + ?Sized>(f: &AlgebraElement, q: &R) -> bool {
    f.support().all(|w| q.find_rule(w).is_none())
}

/// The field shared by the system, if it is nonempty.
pub fn system_field(q: &ReductionSystem) -> Option<Field> {
    q.elements.first().map(|e| e.field())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orders::{max_compare, Order, PrefixTree, Shortlex, WeightedShortlex};
    use crate::scalars::Field;
    use proptest::prelude::*;
    use std::sync::Arc;

    fn xy() -> Arc<Alphabet> {
        Arc::new(Alphabet::new(["x", "y"]).unwrap())
    }

    fn ranking(names: &[&str]) -> Shortlex {
        let a = xy();
        let r: Vec<Letter> = names.iter().map(|l| a.parse_letter(l).unwrap()).collect();
        Shortlex::new(&r, 2).unwrap()
    }

    fn standard() -> Shortlex {
        ranking(&["x", "y", "x^-1", "y^-1"])
    }

    fn inverses_first() -> Shortlex {
        ranking(&["y^-1", "x^-1", "x", "y"])
    }

    fn el(s: &str, field: Field) -> AlgebraElement {
        AlgebraElement::parse(s, field, xy()).unwrap()
    }

    fn q(s: &str) -> AlgebraElement {
        el(s, Field::Rational)
    }

    fn w(s: &str) -> Word {
        xy().parse_word(s).unwrap()
    }

    fn x_minus_one() -> ReductionSystem {
        ReductionSystem::new(vec![q("x - 1"), q("x^-1 - 1")], &standard()).unwrap()
    }

    fn f2_system() -> ReductionSystem {
        let f = |s| el(s, Field::Prime(2));
        ReductionSystem::new(
            vec![f("y^-2 + y + x"), f("y^2 + x*y + y^-1"), f("x*y^-1 + y"), f("x*y + x + y^-1")],
            &inverses_first(),
        )
        .unwrap()
    }

    #[test]
    fn check_crs_examples() {
        assert_eq!(check_crs(&x_minus_one(), &standard()), Ok(()));
        let lone = ReductionSystem::new(vec![q("x - 1")], &standard()).unwrap();
        assert!(matches!(check_crs(&lone, &standard()), Err(CrsViolation::NotClosed { index: 0, .. })));
        let empty = ReductionSystem::new(vec![], &standard()).unwrap();
        assert_eq!(check_crs(&empty, &standard()), Ok(()));
        assert_eq!(check_crs(&f2_system(), &inverses_first()), Ok(()));
    }

    #[test]
    fn check_crs_condition_one() {
        let o = standard();
        let dup = ReductionSystem::new(vec![q("x - 1"), q("x - 2")], &o).unwrap();
        assert_eq!(check_crs(&dup, &o).unwrap_err().condition(), 1);
        let nested = ReductionSystem::new(vec![q("x - 1"), q("x^-1 - 1"), q("x*y - 1")], &o).unwrap();
        assert_eq!(check_crs(&nested, &o), Err(CrsViolation::NestedHeads { shorter: 0, longer: 2 }));
    }

    #[test]
    fn construction_rejects() {
        let o = standard();
        assert_eq!(ReductionSystem::new(vec![q("0")], &o).unwrap_err(), RsystemError::ZeroElement(0));
        assert_eq!(ReductionSystem::new(vec![q("1")], &o).unwrap_err(), RsystemError::ScalarElement(0));
        assert_eq!(ReductionSystem::new(vec![q("2*x - 1")], &o).unwrap_err(), RsystemError::NotMonic(0));
        assert!(matches!(
            ReductionSystem::validated(vec![q("x - 1")], &o),
            Err(RsystemError::Invalid(CrsViolation::NotClosed { .. }))
        ));
    }

    #[test]
    fn reduce_examples() {
        let s = x_minus_one();
        let o = standard();
        assert_eq!(reduce_mod_transversal(&q("x*y"), &s, &o), q("y"));
        assert_eq!(reduce_mod_transversal(&q("x^2*y"), &s, &o), q("y"));
        assert_eq!(reduce_mod_transversal(&q("y^2 - 3*y^-1"), &s, &o), q("y^2 - 3*y^-1"));
        assert_eq!(reduce_mod_transversal(&q("x^-3*y*x"), &s, &o), q("y*x"));
    }

    #[test]
    fn divide_examples() {
        let s = x_minus_one();
        let o = standard();
        let d = divide_with_remainder(&q("x^2*y"), &s, &o);
        assert_eq!(d.quotients, vec![q("x*y + y"), q("0")]);
        assert_eq!(d.remainder, q("y"));
        let d = divide_with_remainder(&q("y - 4"), &s, &o);
        assert!(d.quotients.iter().all(|g| g.is_zero()));
        assert_eq!(d.remainder, q("y - 4"));
        let d = divide_with_remainder(&q("x - 1"), &s, &o);
        assert_eq!(d.quotients, vec![q("1"), q("0")]);
        assert!(d.remainder.is_zero());
    }

    #[test]
    fn member_examples() {
        let s = x_minus_one();
        let o = standard();
        assert!(is_member(&q("x*y - y"), &s, &o));
        assert!(!is_member(&q("y"), &s, &o));
        assert!(is_member(&q("0"), &s, &o));
    }

    #[test]
    fn neighbor_examples() {
        assert_eq!(transversal_neighbors(&x_minus_one(), &standard()), vec![w("x"), w("x^-1")]);
        assert_eq!(
            transversal_neighbors(&f2_system(), &inverses_first()),
            vec![w("y^-2"), w("x*y^-1"), w("x*y"), w("y^2")]
        );
        let empty = ReductionSystem::new(vec![], &standard()).unwrap();
        assert!(transversal_neighbors(&empty, &standard()).is_empty());
    }

    #[test]
    fn neighbors_reduce_below_themselves() {
        for (sys, o) in [(x_minus_one(), standard()), (f2_system(), inverses_first())] {
            let field = system_field(&sys).unwrap();
            for v in transversal_neighbors(&sys, &o) {
                let r = reduce_mod_transversal(&AlgebraElement::monomial(v.clone(), field.one(), field, xy()), &sys, &o);
                for u in r.support() {
                    assert_eq!(o.compare(u, &v), Ordering::Less);
                }
            }
        }
    }

    #[test]
    fn word_can_reduce_to_larger_support_under_tree_order() {
        // e ≺ x ≺ xy ≺ y ≺ …: the normal form of xy is y, which is larger
        let a = xy();
        let base = Order::Shortlex(standard());
        let tree = PrefixTree::around_finite(&[w("x*y")], &a).unwrap();
        let o = Order::tree_sum(base, tree);
        let sys = ReductionSystem::validated(vec![q("x - 1"), q("x^-1 - 1")], &o).unwrap();
        let r = reduce_mod_transversal(&q("x*y"), &sys, &o);
        assert_eq!(r, q("y"));
        assert_eq!(max_compare(&r.support_vec(), &[w("x*y")], &o), Ordering::Greater);
    }

    fn arb_element(field: Field) -> impl Strategy<Value = AlgebraElement> {
        let term = (prop::collection::vec(0usize..4, 0..5), -3i64..4);
        prop::collection::vec(term, 0..5).prop_map(move |ts| {
            AlgebraElement::from_terms(
                ts.into_iter()
                    .map(|(codes, c)| (Word::from_letters(codes.into_iter().map(Letter::from_code)), field.from_i64(c))),
                field,
                xy(),
            )
        })
    }

    fn reconstruct(sys: &ReductionSystem, d: &Division) -> AlgebraElement {
        let mut acc = d.remainder.clone();
        for (qe, g) in sys.elements().iter().zip(&d.quotients) {
            acc = &acc + &(qe * g);
        }
        acc
    }

    proptest! {
        #[test]
        fn reconstruction_and_no_cancellation(f in arb_element(Field::Prime(2))) {
            for (sys, o) in [(f2_system(), inverses_first())] {
                let d = divide_with_remainder(&f, &sys, &o);
                prop_assert_eq!(reconstruct(&sys, &d), f.clone());
                prop_assert!(is_normal(&d.remainder, &sys));
                for (i, g) in d.quotients.iter().enumerate() {
                    let bad = sys.heads()[i].last().unwrap().inverse();
                    prop_assert!(g.support().all(|u| u.first() != Some(&bad)));
                }
            }
        }

        #[test]
        fn reconstruction_over_q(f in arb_element(Field::Rational)) {
            let sys = x_minus_one();
            let d = divide_with_remainder(&f, &sys, &standard());
            prop_assert_eq!(reconstruct(&sys, &d), f);
        }

        #[test]
        fn idempotent_and_linear(f in arb_element(Field::Prime(2)), g in arb_element(Field::Prime(2))) {
            let sys = f2_system();
            let o = inverses_first();
            let rf = reduce_mod_transversal(&f, &sys, &o);
            prop_assert_eq!(reduce_mod_transversal(&rf, &sys, &o), rf.clone());
            let rg = reduce_mod_transversal(&g, &sys, &o);
            prop_assert_eq!(reduce_mod_transversal(&(&f + &g), &sys, &o), &rf + &rg);
        }

        #[test]
        fn linear_over_q(f in arb_element(Field::Rational), g in arb_element(Field::Rational), a in -4i64..5, b in -4i64..5) {
            let sys = x_minus_one();
            let o = standard();
            let (a, b) = (Field::Rational.from_i64(a), Field::Rational.from_i64(b));
            let lhs = reduce_mod_transversal(&(&f.scale(&a) + &g.scale(&b)), &sys, &o);
            let rhs = &reduce_mod_transversal(&f, &sys, &o).scale(&a) + &reduce_mod_transversal(&g, &sys, &o).scale(&b);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn selection_policy_is_irrelevant(f in arb_element(Field::Prime(2)), seed in any::<u64>()) {
            let sys = f2_system();
            let o = inverses_first();
            let a = divide_with_selection(&f, &sys, &o, Selection::Greatest);
            let b = divide_with_selection(&f, &sys, &o, Selection::Shuffled(seed));
            prop_assert_eq!(a.quotients, b.quotients);
            prop_assert_eq!(a.remainder, b.remainder);
        }

        #[test]
        fn suffix_invariant_orders_minimise_support(f in arb_element(Field::Rational)) {
            let o = WeightedShortlex::new(vec![vec![1], vec![2], vec![1], vec![2]], standard()).unwrap();
            let sys = ReductionSystem::validated(vec![q("x - 1"), q("x^-1 - 1")], &o).unwrap();
            let r = reduce_mod_transversal(&f, &sys, &o);
            prop_assert_ne!(max_compare(&r.support_vec(), &f.support_vec(), &o), Ordering::Greater);
        }
    }
}
