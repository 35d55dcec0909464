//! Freely reduced words over `S ∪ S⁻¹` and the prefix combinatorics of the
//! Cayley tree of a free group.
//!
//! A [`Word`] never stores its alphabet: it is a plain sequence of
//! [`Letter`]s, kept freely reduced at all times. The [`Alphabet`] is only
//! needed to parse and print words and to check that letters are in range.

use std::borrow::Borrow;
use std::fmt;
use std::ops::Deref;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("alphabet must have at least one generator")]
    EmptyAlphabet,
    #[error("invalid generator name `{0}`")]
    InvalidName(String),
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("malformed word `{0}`")]
    Malformed(String),
    #[error("exponent out of range in `{0}`")]
    Exponent(String),
    #[error("the identity has no last letter")]
    EmptyWord,
    #[error("`{prefix}` is not a prefix of `{word}`")]
    NotAPrefix { prefix: String, word: String },
    #[error("letter {0:?} is outside an alphabet of rank {1}")]
    LetterOutOfRange(Letter, usize),
}

/// The free generators `x₁, …, x_r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    name != "e" && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Alphabet {
    /// Names must be identifiers; `e` is reserved for the identity.
    pub fn new<I, S>(names: I) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(WordError::EmptyAlphabet);
        }
        for (i, n) in names.iter().enumerate() {
            if !valid_name(n) {
                return Err(WordError::InvalidName(n.clone()));
            }
            if names[..i].contains(n) {
                return Err(WordError::DuplicateName(n.clone()));
            }
        }
        Ok(Alphabet { names })
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn generator(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// All `2·rank` letters, in code order `x, x⁻¹, y, y⁻¹, …`.
    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..2 * self.rank() as u32).map(Letter)
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter.generator() < self.rank()
    }

    pub fn check_word(&self, w: &[Letter]) -> Result<(), WordError> {
        match w.iter().find(|l| !self.contains(**l)) {
            Some(l) => Err(WordError::LetterOutOfRange(*l, self.rank())),
            None => Ok(()),
        }
    }

    /// Parses `e`, `x`, `x^-2`, `x*y^-1*x^3`; the result is freely reduced.
    pub fn parse_word(&self, text: &str) -> Result<Word, WordError> {
        let text = text.trim();
        if text == "e" || text == "1" {
            return Ok(Word::identity());
        }
        let mut word = Word::identity();
        for factor in text.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => {
                    let e: i64 = e
                        .trim()
                        .parse()
                        .map_err(|_| WordError::Exponent(factor.to_string()))?;
                    if e == 0 {
                        return Err(WordError::Exponent(factor.to_string()));
                    }
                    (n.trim(), e)
                }
                None => (factor, 1),
            };
            if name == "e" {
                continue;
            }
            if !valid_name(name) {
                return Err(WordError::Malformed(text.to_string()));
            }
            let g = self
                .generator(name)
                .ok_or_else(|| WordError::UnknownGenerator(name.to_string()))?;
            let letter = Letter::new(g, exp < 0);
            for _ in 0..exp.unsigned_abs() {
                word.push_reduced(letter);
            }
        }
        Ok(word)
    }

    pub fn parse_letter(&self, text: &str) -> Result<Letter, WordError> {
        let w = self.parse_word(text)?;
        match w.letters() {
            [l] => Ok(*l),
            _ => Err(WordError::Malformed(text.to_string())),
        }
    }

    pub fn format_letter(&self, letter: Letter) -> String {
        let name = &self.names[letter.generator()];
        if letter.is_inverse() {
            format!("{name}^-1")
        } else {
            name.clone()
        }
    }

    pub fn format_word(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return "e".to_string();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < w.len() {
            let mut j = i;
            while j < w.len() && w[j] == w[i] {
                j += 1;
            }
            let name = &self.names[w[i].generator()];
            let run = (j - i) as i64;
            let exp = if w[i].is_inverse() { -run } else { run };
            if exp == 1 {
                parts.push(name.clone());
            } else {
                parts.push(format!("{name}^{exp}"));
            }
            i = j;
        }
        parts.join("*")
    }
}

/// A generator or its inverse. Encoded as `2·generator + inverse`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter(u32);

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter(2 * generator as u32 + inverse as u32)
    }

    pub fn from_code(code: usize) -> Self {
        Letter(code as u32)
    }

    pub fn code(self) -> usize {
        self.0 as usize
    }

    pub fn generator(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub fn is_inverse(self) -> bool {
        self.0 & 1 == 1
    }

    /// `+1` or `-1`.
    pub fn sign(self) -> i32 {
        if self.is_inverse() {
            -1
        } else {
            1
        }
    }

    pub fn inverse(self) -> Self {
        Letter(self.0 ^ 1)
    }
}

/// A freely reduced element of the free group. The empty word is the
/// identity `e`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn from_letter(l: Letter) -> Self {
        Word(vec![l])
    }

    /// Builds a word from arbitrary letters, freely reducing them.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut w = Word::identity();
        for l in letters {
            w.push_reduced(l);
        }
        w
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Right-multiplies by a single letter, cancelling if needed.
    pub fn push_reduced(&mut self, l: Letter) {
        if self.0.last() == Some(&l.inverse()) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    /// The reduced form of the group product `self · other`.
    pub fn concat(&self, other: &[Letter]) -> Word {
        let cancel = self
            .0
            .iter()
            .rev()
            .zip(other)
            .take_while(|(a, b)| a.inverse() == **b)
            .count();
        let mut out = Vec::with_capacity(self.0.len() + other.len() - 2 * cancel);
        out.extend_from_slice(&self.0[..self.0.len() - cancel]);
        out.extend_from_slice(&other[cancel..]);
        Word(out)
    }

    /// True iff `self · other` involves no cancellation.
    pub fn joins_without_cancellation(&self, other: &[Letter]) -> bool {
        match (self.0.last(), other.first()) {
            (Some(a), Some(b)) => a.inverse() != *b,
            _ => true,
        }
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn is_prefix_of(&self, w: &[Letter]) -> bool {
        w.starts_with(&self.0)
    }

    pub fn last_letter(&self) -> Result<Letter, WordError> {
        self.0.last().copied().ok_or(WordError::EmptyWord)
    }

    pub fn first_letter(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    /// Returns `s` with `self = prefix · s` letterwise.
    pub fn strip_prefix(&self, prefix: &[Letter]) -> Option<Word> {
        self.0.strip_prefix(prefix).map(|s| Word(s.to_vec()))
    }

    /// Displays with generator names from `alphabet`.
    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        WordDisplay(self, alphabet)
    }
}

struct WordDisplay<'a>(&'a Word, &'a Alphabet);

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.1.format_word(&self.0 .0))
    }
}

impl Deref for Word {
    type Target = [Letter];
    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl Borrow<[Letter]> for Word {
    fn borrow(&self) -> &[Letter] {
        &self.0
    }
}

/// Group product of two words.
pub fn concat(u: &Word, v: &Word) -> Word {
    u.concat(v)
}

pub fn is_prefix(u: &[Letter], w: &[Letter]) -> bool {
    w.starts_with(u)
}

pub fn last_letter(w: &Word) -> Result<Letter, WordError> {
    w.last_letter()
}

pub fn strip_prefix(p: &Word, w: &Word, alphabet: &Alphabet) -> Result<Word, WordError> {
    w.strip_prefix(p).ok_or_else(|| WordError::NotAPrefix {
        prefix: alphabet.format_word(p),
        word: alphabet.format_word(w),
    })
}

/// All reduced words of length at most `radius`, ordered by length and
/// then by letter code.
pub fn ball(rank: usize, radius: usize) -> Vec<Word> {
    let mut out = vec![Word::identity()];
    let mut frontier = 0;
    for _ in 0..radius {
        let end = out.len();
        for i in frontier..end {
            for code in 0..2 * rank {
                let l = Letter::from_code(code);
                if out[i].last().map(|x| x.inverse()) != Some(l) {
                    let mut w = out[i].clone();
                    w.0.push(l);
                    out.push(w);
                }
            }
        }
        frontier = end;
    }
    out
}
