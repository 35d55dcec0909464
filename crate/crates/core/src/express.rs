//! Expressing ideal elements in the exposure basis.

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{AlgebraElement, AlgebraError};
use crate::engine::BasisResult;
use crate::orders::WordOrder;
use crate::rsystem::{divide_with_remainder, ReductionSystem, RsystemError};
use crate::scalars::Field;
use crate::words::{Alphabet, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpressError {
    #[error("the improper ideal has no matrix of seconds")]
    Improper,
    #[error("basis element {0} lies in the ideal of the earlier ones")]
    DependentBasis(usize),
    #[error("basis element {0} is a scalar")]
    ScalarBasis(usize),
    #[error("matrix is {matrix}x{matrix} but the basis has {basis} elements")]
    DimensionMismatch { matrix: usize, basis: usize },
    #[error("element is not in the ideal")]
    NotMember { remainder: AlgebraElement },
    #[error(transparent)]
    Rsystem(#[from] RsystemError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Square matrix over the algebra, stored by rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraMatrix {
    entries: Vec<Vec<AlgebraElement>>,
}

impl AlgebraMatrix {
    pub fn zero(m: usize, field: Field, alphabet: &Arc<Alphabet>) -> Self {
        let z = AlgebraElement::zero(field, alphabet.clone());
        AlgebraMatrix { entries: vec![vec![z; m]; m] }
    }

    pub fn from_rows(entries: Vec<Vec<AlgebraElement>>) -> Self {
        assert!(entries.iter().all(|r| r.len() == entries.len()), "matrix must be square");
        AlgebraMatrix { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, row: usize, col: usize) -> &AlgebraElement {
        &self.entries[row][col]
    }

    pub fn rows(&self) -> &[Vec<AlgebraElement>] {
        &self.entries
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.entries.iter().enumerate().all(|(j, row)| row[..j].iter().all(|e| e.is_zero()))
    }

    /// The row vector `v·C`.
    pub fn left_apply(&self, v: &[AlgebraElement]) -> Vec<AlgebraElement> {
        (0..self.size())
            .map(|i| {
                let mut acc = AlgebraElement::zero(v[0].field(), v[0].alphabet().clone());
                for (j, vj) in v.iter().enumerate() {
                    if !self.entries[j][i].is_zero() {
                        acc = &acc + &(vj * &self.entries[j][i]);
                    }
                }
                acc
            })
            .collect()
    }

    /// The column vector `C·v`.
    pub fn right_apply(&self, v: &[AlgebraElement]) -> Vec<AlgebraElement> {
        self.entries
            .iter()
            .map(|row| {
                let mut acc = AlgebraElement::zero(v[0].field(), v[0].alphabet().clone());
                for (c, vi) in row.iter().zip(v) {
                    if !c.is_zero() {
                        acc = &acc + &(c * vi);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn format_with<O: WordOrder>(&self, ord: &O) -> Vec<Vec<String>> {
        self.entries.iter().map(|r| r.iter().map(|e| e.format_with(ord)).collect()).collect()
    }
}

/// The matrix `C` with `(s₀,…,s_{m−1}) = (f₀,…,f_{m−1})·C`, and the seconds.
pub fn compute_matrix_c<O: WordOrder>(
    basis: &[AlgebraElement],
    ord: &O,
) -> Result<(AlgebraMatrix, Vec<AlgebraElement>), ExpressError> {
    let Some(first) = basis.first() else {
        return Ok((AlgebraMatrix { entries: vec![] }, vec![]));
    };
    if let Some(i) = basis.iter().position(|f| f.is_scalar()) {
        return Err(if basis.len() == 1 && !first.is_zero() { ExpressError::Improper } else { ExpressError::ScalarBasis(i) });
    }
    let m = basis.len();
    let mut c = AlgebraMatrix::zero(m, first.field(), first.alphabet());
    let mut seconds = Vec::with_capacity(m);
    // interleaved f₀, s₀, f₁, s₁, …
    let mut system = ReductionSystem::new(vec![], ord)?;
    for (i, f) in basis.iter().enumerate() {
        let b = f.head_term_tail(ord)?;
        let b_inv = Word::from_letter(b.inverse());
        let d = divide_with_remainder(&f.mul_word(&b_inv), &system, ord);
        if d.remainder.is_zero() {
            return Err(ExpressError::DependentBasis(i));
        }
        let (s, mu) = d.remainder.monic(ord)?;
        let mu_inv = mu.inv().expect("nonzero head coefficient");

        let diag = AlgebraElement::monomial(b_inv, mu_inv.clone(), f.field(), f.alphabet().clone());
        c.entries[i][i] = &c.entries[i][i] + &diag;
        for j in 0..i {
            let g_f = &d.quotients[2 * j];
            if !g_f.is_zero() {
                c.entries[j][i] = &c.entries[j][i] - &g_f.scale(&mu_inv);
            }
            let g_s = &d.quotients[2 * j + 1];
            if !g_s.is_zero() {
                let g_s = g_s.scale(&mu_inv);
                for k in 0..=j {
                    let delta = &c.entries[k][j] * &g_s;
                    c.entries[k][i] = &c.entries[k][i] - &delta;
                }
            }
        }
        system.push(f.clone(), ord)?;
        system.push(s.clone(), ord)?;
        seconds.push(s);
    }
    Ok((c, seconds))
}

/// Coordinates `p` with `h = Σ fᵢ·pᵢ`.
pub fn express<O: WordOrder>(
    h: &AlgebraElement,
    basis: &[AlgebraElement],
    c: &AlgebraMatrix,
    ord: &O,
) -> Result<Vec<AlgebraElement>, ExpressError> {
    if basis.len() == 1 && basis[0].is_scalar() && !basis[0].is_zero() {
        let unit = basis[0].coefficient(&[]).expect("scalar").inv().expect("nonzero");
        return Ok(vec![h.scale(&unit)]);
    }
    if c.size() != basis.len() {
        return Err(ExpressError::DimensionMismatch { matrix: c.size(), basis: basis.len() });
    }
    if basis.is_empty() {
        if h.is_zero() {
            return Ok(vec![]);
        }
        return Err(ExpressError::NotMember { remainder: h.clone() });
    }
    let seconds = c.left_apply(basis);
    let mut system = ReductionSystem::new(vec![], ord)?;
    for (f, s) in basis.iter().zip(&seconds) {
        system.push(f.clone(), ord)?;
        system.push(s.clone(), ord)?;
    }
    let d = divide_with_remainder(h, &system, ord);
    if !d.remainder.is_zero() {
        return Err(ExpressError::NotMember { remainder: d.remainder });
    }
    let g_f: Vec<AlgebraElement> = d.quotients.iter().step_by(2).cloned().collect();
    let g_s: Vec<AlgebraElement> = d.quotients.iter().skip(1).step_by(2).cloned().collect();
    Ok(g_f.iter().zip(c.right_apply(&g_s)).map(|(a, b)| a + &b).collect())
}

/// Runs [`compute_matrix_c`] and [`express`] against a finished basis.
pub fn express_in_basis<O: WordOrder>(
    h: &AlgebraElement,
    basis: &BasisResult,
    ord: &O,
) -> Result<Vec<AlgebraElement>, ExpressError> {
    if basis.improper {
        return Ok(vec![h.clone()]);
    }
    let (c, _) = compute_matrix_c(&basis.exposure_basis, ord)?;
    express(h, &basis.exposure_basis, &c, ord)
}
