//! Elements of the free group algebra `K[F]`: finitely supported maps from
//! reduced words to nonzero scalars.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

use crate::orders::{max_compare, Shortlex, WordOrder};
use crate::scalars::{Field, Scalar, ScalarError};
use crate::words::{Alphabet, Letter, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("elements over different fields ({0} and {1})")]
    FieldMismatch(Field, Field),
    #[error("elements over different alphabets")]
    AlphabetMismatch,
    #[error("the zero element has no head term")]
    Zero,
    #[error("a scalar element has no head term tail")]
    Scalar,
    #[error("cannot parse element `{0}`")]
    Parse(String),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Scalars(#[from] ScalarError),
}

/// `Σ α_w · w` with every stored `α_w ≠ 0`.
#[derive(Clone)]
pub struct AlgebraElement {
    terms: HashMap<Word, Scalar>,
    field: Field,
    alphabet: Arc<Alphabet>,
}

impl AlgebraElement {
    pub fn zero(field: Field, alphabet: Arc<Alphabet>) -> Self {
        AlgebraElement { terms: HashMap::new(), field, alphabet }
    }

    pub fn one(field: Field, alphabet: Arc<Alphabet>) -> Self {
        Self::monomial(Word::identity(), field.one(), field, alphabet)
    }

    pub fn monomial(word: Word, coef: Scalar, field: Field, alphabet: Arc<Alphabet>) -> Self {
        let mut e = Self::zero(field, alphabet);
        e.add_term(word, &coef);
        e
    }

    pub fn from_terms<I>(terms: I, field: Field, alphabet: Arc<Alphabet>) -> Self
    where
        I: IntoIterator<Item = (Word, Scalar)>,
    {
        let mut e = Self::zero(field, alphabet);
        for (w, c) in terms {
            e.add_term(w, &c);
        }
        e
    }

    /// Parses the grammar `±[coef*]word ± …`, e.g. `2*x*y^-1 - 3`.
    pub fn parse(text: &str, field: Field, alphabet: Arc<Alphabet>) -> Result<Self, AlgebraError> {
        let err = || AlgebraError::Parse(text.to_string());
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        // split at top-level signs; a sign right after `^` is an exponent
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut negative = false;
        let mut current = String::new();
        let mut prev: Option<char> = None;
        for c in compact.chars() {
            if (c == '+' || c == '-') && prev != Some('^') {
                if !current.is_empty() {
                    pieces.push((negative, std::mem::take(&mut current)));
                } else if prev.is_some() {
                    return Err(err());
                }
                negative = c == '-';
            } else {
                current.push(c);
            }
            prev = Some(c);
        }
        if current.is_empty() {
            return Err(err());
        }
        pieces.push((negative, current));

        let mut out = Self::zero(field, alphabet.clone());
        for (negative, body) in pieces {
            let (coef, word_text) = match body.split_once('*') {
                Some((head, rest)) if head.starts_with(|c: char| c.is_ascii_digit()) => {
                    (field.parse_scalar(head)?, rest)
                }
                _ if body.starts_with(|c: char| c.is_ascii_digit()) => (field.parse_scalar(&body)?, "e"),
                _ => (field.one(), body.as_str()),
            };
            let word = alphabet.parse_word(word_text)?;
            let coef = if negative { -coef } else { coef };
            out.add_term(word, &coef);
        }
        Ok(out)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for `0` and the nonzero scalars `c·e`.
    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|w| w.is_identity())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn support_vec(&self) -> Vec<Word> {
        self.terms.keys().cloned().collect()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &[Letter]) -> Option<&Scalar> {
        self.terms.get(w)
    }

    /// Adds `coef · word` in place.
    pub fn add_term(&mut self, word: Word, coef: &Scalar) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let v = e.get() + coef;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(coef.clone());
            }
        }
    }

    /// `self += coef · other · suffix`. The workhorse of every reduction.
    pub fn add_scaled_shifted(&mut self, coef: &Scalar, other: &AlgebraElement, suffix: &[Letter]) {
        for (w, c) in &other.terms {
            self.add_term(w.concat(suffix), &(coef * c));
        }
    }

    fn check_compatible(&self, other: &AlgebraElement) -> Result<(), AlgebraError> {
        if self.field != other.field {
            return Err(AlgebraError::FieldMismatch(self.field, other.field));
        }
        if !Arc::ptr_eq(&self.alphabet, &other.alphabet) && *self.alphabet != *other.alphabet {
            return Err(AlgebraError::AlphabetMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.try_add(&-other)
    }

    /// Bilinear extension of the group product.
    pub fn try_mul(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.field, self.alphabet.clone());
        for (v, b) in &other.terms {
            for (u, a) in &self.terms {
                out.add_term(u.concat(v), &(a * b));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraElement {
        if c.is_zero() {
            return Self::zero(self.field, self.alphabet.clone());
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
            field: self.field,
            alphabet: self.alphabet.clone(),
        }
    }

    /// Right multiplication by a group element: `self · w`.
    pub fn mul_word(&self, w: &[Letter]) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.iter().map(|(u, c)| (u.concat(w), c.clone())).collect(),
            field: self.field,
            alphabet: self.alphabet.clone(),
        }
    }

    /// Left multiplication by a group element: `w · self`.
    pub fn word_mul(&self, w: &Word) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.iter().map(|(u, c)| (w.concat(u), c.clone())).collect(),
            field: self.field,
            alphabet: self.alphabet.clone(),
        }
    }

    /// The `≺`-largest word of the support.
    pub fn head_term<O: WordOrder>(&self, ord: &O) -> Result<&Word, AlgebraError> {
        ord.max_of(self.terms.keys()).ok_or(AlgebraError::Zero)
    }

    pub fn head_coefficient<O: WordOrder>(&self, ord: &O) -> Result<&Scalar, AlgebraError> {
        let ht = self.head_term(ord)?;
        Ok(&self.terms[ht])
    }

    /// Last letter of the head term.
    pub fn head_term_tail<O: WordOrder>(&self, ord: &O) -> Result<Letter, AlgebraError> {
        let ht = self.head_term(ord)?;
        ht.last().copied().ok_or(AlgebraError::Scalar)
    }

    /// `(μ⁻¹·self, μ)` where `μ` is the head coefficient.
    pub fn monic<O: WordOrder>(&self, ord: &O) -> Result<(AlgebraElement, Scalar), AlgebraError> {
        let mu = self.head_coefficient(ord)?.clone();
        if mu.is_one() {
            return Ok((self.clone(), mu));
        }
        Ok((self.scale(&mu.inv()?), mu))
    }

    pub fn is_monic<O: WordOrder>(&self, ord: &O) -> bool {
        matches!(self.head_coefficient(ord), Ok(c) if c.is_one())
    }

    /// Terms sorted by descending word under `ord`.
    pub fn sorted_terms<O: WordOrder>(&self, ord: &O) -> Vec<(&Word, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| ord.compare(b.0, a.0));
        v
    }

    /// Prints in the element grammar, terms descending under `ord`.
    pub fn format_with<O: WordOrder>(&self, ord: &O) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.sorted_terms(ord).into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mag = c.abs();
            if w.is_identity() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&self.alphabet.format_word(w));
            } else {
                out.push_str(&format!("{}*{}", mag, self.alphabet.format_word(w)));
            }
        }
        out
    }
}

pub fn support_compare<O: WordOrder>(f: &AlgebraElement, g: &AlgebraElement, ord: &O) -> Ordering {
    max_compare(&f.support_vec(), &g.support_vec(), ord)
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && *self.alphabet == *other.alphabet && self.terms == other.terms
    }
}

impl Eq for AlgebraElement {}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement({})", self)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&Shortlex::natural(self.alphabet.rank())))
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_add(rhs).expect("incompatible algebra elements")
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_sub(rhs).expect("incompatible algebra elements")
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_mul(rhs).expect("incompatible algebra elements")
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
            field: self.field,
            alphabet: self.alphabet.clone(),
        }
    }
}
