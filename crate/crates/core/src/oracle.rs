//! Brute-force membership by linear algebra over a ball of the free group.
//! Shares nothing with the reduction machinery.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::algebra::AlgebraElement;
use crate::scalars::Scalar;
use crate::words::{ball, Word};

pub const DEFAULT_COLUMN_CAP: usize = 50_000;
pub const COLUMN_CAP_ENV: &str = "FGA_COLUMN_CAP";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{needed} columns exceed the cap of {cap}")]
    ColumnCap { needed: usize, cap: usize },
    #[error("invalid value `{0}` for {COLUMN_CAP_ENV}")]
    BadCap(String),
    #[error("elements over different fields or alphabets")]
    Mismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    /// Not a negative certificate: a larger radius might succeed.
    NotWithinRadius,
}

/// All reduced words of length at most `radius`.
#[derive(Debug, Clone)]
pub struct Ball {
    pub rank: usize,
    pub radius: usize,
    pub words: Vec<Word>,
}

impl Ball {
    pub fn new(rank: usize, radius: usize) -> Self {
        Ball { rank, radius, words: ball(rank, radius) }
    }

    /// `1 + Σ_{k=1..radius} 2r(2r−1)^{k−1}`, saturating.
    pub fn expected_size(rank: usize, radius: usize) -> usize {
        let mut total: usize = 1;
        let mut layer: usize = 2 * rank;
        for _ in 0..radius {
            if rank == 0 {
                break;
            }
            total = total.saturating_add(layer);
            layer = layer.saturating_mul(2 * rank - 1);
        }
        total
    }
}

/// Reads the cap from the environment, falling back to the default.
pub fn column_cap_from_env() -> Result<usize, OracleError> {
    match std::env::var(COLUMN_CAP_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| OracleError::BadCap(v)),
        Err(_) => Ok(DEFAULT_COLUMN_CAP),
    }
}

pub fn brute_force_member(
    f: &AlgebraElement,
    gens: &[AlgebraElement],
    radius: usize,
) -> Result<Verdict, OracleError> {
    brute_force_member_with_cap(f, gens, radius, DEFAULT_COLUMN_CAP)
}

/// Decides `f ∈ Σ gᵢ·Sp_K(Ball(radius))` with one exact elimination.
pub fn brute_force_member_with_cap(
    f: &AlgebraElement,
    gens: &[AlgebraElement],
    radius: usize,
    cap: usize,
) -> Result<Verdict, OracleError> {
    if gens.iter().any(|g| g.field() != f.field() || g.alphabet() != f.alphabet()) {
        return Err(OracleError::Mismatch);
    }
    OracleSpace::new(gens, f.alphabet().rank(), radius, cap)?.verdict(f)
}

/// The span of `{gᵢ·w : w ∈ Ball(radius)}`, eliminated once and queried
/// many times.
pub struct OracleSpace {
    echelon: Echelon,
    field: Option<crate::scalars::Field>,
}

impl OracleSpace {
    pub fn new(gens: &[AlgebraElement], rank: usize, radius: usize, cap: usize) -> Result<Self, OracleError> {
        let gens: Vec<&AlgebraElement> = gens.iter().filter(|g| !g.is_zero()).collect();
        if gens.windows(2).any(|p| p[0].field() != p[1].field() || p[0].alphabet() != p[1].alphabet()) {
            return Err(OracleError::Mismatch);
        }
        let needed = gens.len().saturating_mul(Ball::expected_size(rank, radius));
        if needed > cap {
            return Err(OracleError::ColumnCap { needed, cap });
        }
        let mut echelon = Echelon::default();
        let words = if gens.is_empty() { vec![] } else { Ball::new(rank, radius).words };
        for g in &gens {
            for w in &words {
                let mut column = Vec::with_capacity(g.len());
                for (u, c) in g.terms() {
                    let mut uw: Vec<_> = u.letters().to_vec();
                    for &l in w.letters() {
                        if uw.last() == Some(&l.inverse()) {
                            uw.pop();
                        } else {
                            uw.push(l);
                        }
                    }
                    column.push((Word::from_letters(uw), c.clone()));
                }
                let v = echelon.vector(column);
                echelon.insert(v);
            }
        }
        Ok(OracleSpace { echelon, field: gens.first().map(|g| g.field()) })
    }

    /// Dimension of the span.
    pub fn dimension(&self) -> usize {
        self.echelon.rows.len()
    }

    pub fn verdict(&self, f: &AlgebraElement) -> Result<Verdict, OracleError> {
        if f.is_zero() {
            return Ok(Verdict::Yes);
        }
        if self.field.is_some_and(|k| k != f.field()) {
            return Err(OracleError::Mismatch);
        }
        // words never seen by any column cannot be cancelled
        let mut entries = Vec::with_capacity(f.len());
        for (w, c) in f.terms() {
            match self.echelon.coords.get(w) {
                Some(&k) => entries.push((k, c.clone())),
                None => return Ok(Verdict::NotWithinRadius),
            }
        }
        let mut v = Sparse::new();
        v.extend(entries);
        Ok(if self.echelon.reduce(v).is_empty() { Verdict::Yes } else { Verdict::NotWithinRadius })
    }
}

/// Membership of `f − g`.
pub fn brute_force_congruent(
    f: &AlgebraElement,
    g: &AlgebraElement,
    gens: &[AlgebraElement],
    radius: usize,
) -> Result<Verdict, OracleError> {
    brute_force_member(&f.try_sub(g).map_err(|_| OracleError::Mismatch)?, gens, radius)
}

type Sparse = BTreeMap<usize, Scalar>;

// rows keyed by their largest coordinate
#[derive(Default)]
struct Echelon {
    coords: HashMap<Word, usize>,
    rows: HashMap<usize, Sparse>,
}

impl Echelon {
    fn vector(&mut self, entries: Vec<(Word, Scalar)>) -> Sparse {
        let mut v = Sparse::new();
        for (w, c) in entries {
            let n = self.coords.len();
            let k = *self.coords.entry(w).or_insert(n);
            let sum = match v.get(&k) {
                Some(old) => old + &c,
                None => c,
            };
            if sum.is_zero() {
                v.remove(&k);
            } else {
                v.insert(k, sum);
            }
        }
        v
    }

    fn insert(&mut self, v: Sparse) {
        let v = self.reduce(v);
        if let Some((&k, _)) = v.iter().next_back() {
            self.rows.insert(k, v);
        }
    }

    // eliminate from the top until the leading coordinate is not a pivot
    fn reduce(&self, mut v: Sparse) -> Sparse {
        while let Some((&k, c)) = v.iter().next_back() {
            let Some(row) = self.rows.get(&k) else { break };
            let factor = c.try_div(&row[&k]).expect("nonzero pivot");
            for (&j, x) in row {
                let val = match v.get(&j) {
                    Some(old) => old - &(&factor * x),
                    None => -(&factor * x),
                };
                if val.is_zero() {
                    v.remove(&j);
                } else {
                    v.insert(j, val);
                }
            }
        }
        v
    }
}
