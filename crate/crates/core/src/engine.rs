//! The exposure process: seconds, the extension test, and the two basis
//! algorithms (general generators and principal ideals).

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::algebra::{AlgebraElement, AlgebraError};
use crate::orders::WordOrder;
use crate::rsystem::{is_normal, reduce_counted, ReductionSystem, Rules, RsystemError};
use crate::scalars::Scalar;
use crate::words::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("the element is a scalar")]
    Scalar,
    #[error("the element is not in normal form for the current system")]
    NotNormal,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Counters for one run of the basis algorithm.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EngineStats {
    /// Rewriting steps spent normalising generators.
    pub reduce_steps: usize,
    /// Rewriting steps spent computing seconds.
    pub second_steps: usize,
    pub candidates: usize,
    pub discarded: usize,
    pub replacements: usize,
    pub demoted: usize,
    pub extensions: usize,
}

impl EngineStats {
    pub fn total_steps(&self) -> usize {
        self.reduce_steps + self.second_steps
    }
}

/// Outcome of examining one candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Extends { first: AlgebraElement, second: AlgebraElement },
    ReplaceWith(AlgebraElement),
    Discard,
    Improper,
}

/// `(monic(φ(f·b⁻¹)), μ)` with `b = HTT(f)`, against the rules `q`.
pub fn compute_second<R: Rules + ?Sized, O: WordOrder>(
    f: &AlgebraElement,
    q: &R,
    ord: &O,
) -> Result<(AlgebraElement, Scalar), EngineError> {
    second_counted(f, q, ord).map(|(s, mu, _)| (s, mu))
}

fn second_counted<R: Rules + ?Sized, O: WordOrder>(
    f: &AlgebraElement,
    q: &R,
    ord: &O,
) -> Result<(AlgebraElement, Scalar, usize), EngineError> {
    if f.is_scalar() {
        return Err(EngineError::Scalar);
    }
    if !is_normal(f, q) {
        return Err(EngineError::NotNormal);
    }
    let b = f.head_term_tail(ord)?;
    let (r, steps) = reduce_counted(&f.mul_word(&[b.inverse()]), q, ord);
    let (s, mu) = r.monic(ord)?;
    Ok((s, mu, steps))
}

/// Firsts `B_J`, their seconds `S_J`, and the queue of pending generators.
pub struct ExposureState<'o, O: WordOrder> {
    ord: &'o O,
    firsts: Vec<AlgebraElement>,
    seconds: Vec<AlgebraElement>,
    heads: Vec<Word>,
    index: HashMap<Word, usize>,
    pending: VecDeque<AlgebraElement>,
    stats: EngineStats,
}

// rule 2k is firsts[k], rule 2k+1 is seconds[k]
impl<O: WordOrder> Rules for ExposureState<'_, O> {
    fn rule_count(&self) -> usize {
        self.heads.len()
    }
    fn rule(&self, i: usize) -> &AlgebraElement {
        if i % 2 == 0 {
            &self.firsts[i / 2]
        } else {
            &self.seconds[i / 2]
        }
    }
    fn head(&self, i: usize) -> &Word {
        &self.heads[i]
    }
    fn lookup(&self, head: &[Letter]) -> Option<usize> {
        self.index.get(head).copied()
    }
}

impl<'o, O: WordOrder> ExposureState<'o, O> {
    pub fn new(ord: &'o O) -> Self {
        ExposureState {
            ord,
            firsts: Vec::new(),
            seconds: Vec::new(),
            heads: Vec::new(),
            index: HashMap::new(),
            pending: VecDeque::new(),
            stats: EngineStats::default(),
        }
    }

    /// Starts from an existing list of firsts and seconds, assumed to be the
    /// output of an earlier run.
    pub fn with_basis(ord: &'o O, firsts: Vec<AlgebraElement>, seconds: Vec<AlgebraElement>) -> Self {
        let mut st = Self::new(ord);
        for (f, s) in firsts.into_iter().zip(seconds) {
            st.accept(f, s);
        }
        st
    }

    pub fn firsts(&self) -> &[AlgebraElement] {
        &self.firsts
    }

    pub fn seconds(&self) -> &[AlgebraElement] {
        &self.seconds
    }

    pub fn pending(&self) -> impl Iterator<Item = &AlgebraElement> {
        self.pending.iter()
    }

    pub fn stats(&self) -> &EngineStats {
        &self.stats
    }

    /// Queues a generator; zeros are dropped.
    pub fn push_generator(&mut self, g: AlgebraElement) {
        if !g.is_zero() {
            self.pending.push_back(g);
        }
    }

    fn accept(&mut self, first: AlgebraElement, second: AlgebraElement) {
        for e in [&first, &second] {
            let h = e.head_term(self.ord).expect("nonzero").clone();
            self.index.insert(h.clone(), self.heads.len());
            self.heads.push(h);
        }
        self.firsts.push(first);
        self.seconds.push(second);
        self.stats.extensions += 1;
    }

    /// Moves every first whose head term exceeds `head` to the front of the
    /// queue, in order, dropping its second.
    fn demote_above(&mut self, head: &Word) -> bool {
        // firsts are increasing, so the ones to move form a suffix
        let keep = (0..self.firsts.len())
            .find(|&k| self.ord.compare(&self.heads[2 * k], head) == Ordering::Greater)
            .unwrap_or(self.firsts.len());
        if keep == self.firsts.len() {
            return false;
        }
        for h in self.heads.drain(2 * keep..) {
            self.index.remove(&h);
        }
        self.seconds.truncate(keep);
        let tail: Vec<_> = self.firsts.drain(keep..).collect();
        self.stats.demoted += tail.len();
        self.stats.extensions -= tail.len();
        for g in tail.into_iter().rev() {
            self.pending.push_front(g);
        }
        true
    }

    /// The second of a normal non-scalar `f` against the current system.
    pub fn second_of(&self, f: &AlgebraElement) -> Result<(AlgebraElement, Scalar), EngineError> {
        compute_second(f, self, self.ord)
    }

    /// One candidate through the inner loop: reduce, normalise, demote the
    /// larger firsts, and compare the second with the candidate.
    pub fn is_exposure_extending(&mut self, f: &AlgebraElement) -> Decision {
        let before = self.progress(Some(f));
        let was_normal = is_normal(f, self);
        let (r, steps) = reduce_counted(f, self, self.ord);
        self.stats.reduce_steps += steps;
        if r.is_zero() {
            self.stats.discarded += 1;
            return Decision::Discard;
        }
        let (r, _) = r.monic(self.ord).expect("nonzero");
        self.check_progress(before, Some(&r), !was_normal);
        self.examine_normal(&r)
    }

    // `f` is monic and normal
    fn examine_normal(&mut self, f: &AlgebraElement) -> Decision {
        if f.len() == 1 {
            return Decision::Improper;
        }
        let head = f.head_term(self.ord).expect("nonzero").clone();
        let before = self.progress(Some(f));
        let moved = self.demote_above(&head);
        self.check_progress(before, Some(f), moved);

        let (s, _, steps) = second_counted(f, self, self.ord).expect("normal non-scalar candidate");
        self.stats.second_steps += steps;
        let s_head = s.head_term(self.ord).expect("nonzero");
        match self.ord.compare(s_head, &head) {
            Ordering::Greater => Decision::Extends { first: f.clone(), second: s },
            Ordering::Less => {
                let before = self.progress(Some(f));
                self.check_progress(before, Some(&s), true);
                Decision::ReplaceWith(s)
            }
            Ordering::Equal => unreachable!("a second never shares the head term of its first"),
        }
    }

    /// Runs the process until the queue is empty.
    pub fn run(mut self) -> BasisResult {
        while let Some(g) = self.pending.pop_front() {
            self.stats.candidates += 1;
            let mut decision = self.is_exposure_extending(&g);
            loop {
                match decision {
                    Decision::Discard => break,
                    Decision::Improper => {
                        let unit = AlgebraElement::one(g.field(), g.alphabet().clone());
                        return BasisResult::improper(unit, self.stats);
                    }
                    Decision::Extends { first, second } => {
                        self.accept(first, second);
                        break;
                    }
                    Decision::ReplaceWith(s) => {
                        self.stats.replacements += 1;
                        decision = self.examine_normal(&s);
                    }
                }
            }
        }
        BasisResult { exposure_basis: self.firsts, seconds: self.seconds, improper: false, stats: self.stats }
    }

    #[cfg(debug_assertions)]
    fn progress(&self, f: Option<&AlgebraElement>) -> Vec<Option<Vec<Word>>> {
        let key = |e: &AlgebraElement| is_normal(e, self).then(|| e.support_vec());
        self.firsts
            .iter()
            .map(|g| Some(g.support_vec()))
            .chain(f.map(key))
            .chain(self.pending.iter().map(key))
            .collect()
    }

    #[cfg(not(debug_assertions))]
    fn progress(&self, _f: Option<&AlgebraElement>) {}

    #[cfg(debug_assertions)]
    fn check_progress(&self, before: Vec<Option<Vec<Word>>>, f: Option<&AlgebraElement>, strict: bool) {
        let after = self.progress(f);
        let cmp = compare_progress(&after, &before, self.ord);
        assert!(
            cmp == Ordering::Less || (!strict && cmp == Ordering::Equal),
            "exposure progress measure failed to decrease"
        );
    }

    #[cfg(not(debug_assertions))]
    fn check_progress(&self, _before: (), _f: Option<&AlgebraElement>, _strict: bool) {}
}

// lexicographic; a missing support (not normal) counts as infinity
#[cfg(debug_assertions)]
fn compare_progress<O: WordOrder>(a: &[Option<Vec<Word>>], b: &[Option<Vec<Word>>], ord: &O) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        let c = match (x, y) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Greater,
            (Some(_), None) => Ordering::Less,
            (Some(x), Some(y)) => crate::orders::max_compare(x, y, ord),
        };
        if c != Ordering::Equal {
            return c;
        }
    }
    a.len().cmp(&b.len())
}

/// The exposure basis and the seconds of a right ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisResult {
    pub exposure_basis: Vec<AlgebraElement>,
    pub seconds: Vec<AlgebraElement>,
    pub improper: bool,
    pub stats: EngineStats,
}

impl BasisResult {
    fn improper(unit: AlgebraElement, stats: EngineStats) -> Self {
        BasisResult { exposure_basis: vec![unit], seconds: Vec::new(), improper: true, stats }
    }

    /// Firsts and seconds interleaved, `f₀, s₀, f₁, s₁, …`; `[e]` when improper.
    pub fn groebner_basis(&self) -> Vec<AlgebraElement> {
        if self.improper {
            return self.exposure_basis.clone();
        }
        self.exposure_basis
            .iter()
            .zip(&self.seconds)
            .flat_map(|(f, s)| [f.clone(), s.clone()])
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.exposure_basis.len()
    }

    /// The Gröbner basis as a reduction system. `None` for the improper ideal.
    pub fn reduction_system<O: WordOrder>(&self, ord: &O) -> Option<Result<ReductionSystem, RsystemError>> {
        (!self.improper).then(|| ReductionSystem::new(self.groebner_basis(), ord))
    }

    /// Head terms of the Gröbner basis, ascending.
    pub fn forbidden_prefixes<O: WordOrder>(&self, ord: &O) -> Vec<Word> {
        if self.improper {
            return vec![Word::identity()];
        }
        let mut heads: Vec<Word> =
            self.groebner_basis().iter().map(|e| e.head_term(ord).expect("nonzero").clone()).collect();
        heads.sort_by(|a, b| ord.compare(a, b));
        heads
    }

    pub fn contains<O: WordOrder>(&self, f: &AlgebraElement, ord: &O) -> bool {
        if self.improper {
            return true;
        }
        let state = ExposureState::with_basis(ord, self.exposure_basis.clone(), self.seconds.clone());
        reduce_counted(f, &state, ord).0.is_zero()
    }
}

/// The exposure basis and seconds of the right ideal generated by `gens`.
pub fn exposure_and_groebner<O: WordOrder>(gens: &[AlgebraElement], ord: &O) -> BasisResult {
    let mut st = ExposureState::new(ord);
    for g in gens {
        st.push_generator(g.clone());
    }
    st.run()
}

/// The basis of a principal ideal `h·𝒜`, by right multiplication with units.
pub fn orbit_reduction<O: WordOrder>(h: &AlgebraElement, ord: &O) -> BasisResult {
    let chain = orbit_chain(h, ord);
    let stats = EngineStats { candidates: usize::from(!h.is_zero()), ..Default::default() };
    match chain.len() {
        0 => BasisResult { exposure_basis: vec![], seconds: vec![], improper: false, stats },
        _ if h.len() == 1 => {
            BasisResult::improper(AlgebraElement::one(h.field(), h.alphabet().clone()), stats)
        }
        n => {
            let stats = EngineStats { replacements: n - 2, extensions: 1, ..stats };
            BasisResult {
                exposure_basis: vec![chain[n - 2].clone()],
                seconds: vec![chain[n - 1].clone()],
                improper: false,
                stats,
            }
        }
    }
}

/// The monic elements visited by orbit reduction, ending with the final
/// first and its second. Empty for zero, a single monic scalar multiple for a
/// monomial.
pub fn orbit_chain<O: WordOrder>(h: &AlgebraElement, ord: &O) -> Vec<AlgebraElement> {
    if h.is_zero() {
        return vec![];
    }
    let (mut f, _) = h.monic(ord).expect("nonzero");
    if h.len() == 1 {
        return vec![f];
    }
    let mut chain = vec![f.clone()];
    loop {
        let b = f.head_term_tail(ord).expect("two support words, so not scalar");
        let (s, _) = f.mul_word(&[b.inverse()]).monic(ord).expect("nonzero");
        chain.push(s.clone());
        if ord.less(f.head_term(ord).expect("nonzero"), s.head_term(ord).expect("nonzero")) {
            return chain;
        }
        f = s;
    }
}
