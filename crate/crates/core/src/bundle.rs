//! Assembly of the generator matrices of L(lambda) in the supertableau
//! basis.
//!
//! Admissible moves are found by attempting each candidate replacement and
//! validating the resulting filling outright; a term enters the matrix only
//! when the target is a genuine supertableau. Structural shortcuts alone
//! are not enough: a replacement can satisfy the obvious count conditions
//! and still break column strictness against the row above.

use std::collections::HashMap;

use crate::coeffs::{coeff_gl_m, coeff_gl_n, coeff_odd_lower, coeff_odd_raise, Direction};
use crate::error::Result;
use crate::ratio::rat;
use crate::sparse::SparseMatrix;
use crate::tableau::{enumerate_supertableaux, Supertableau};
use crate::weight::CovariantWeight;

/// A built representation: the ordered basis and the matrices of E_ss and
/// E_{s,s+1}, E_{s+1,s} for every s.
#[derive(Debug, Clone)]
pub struct RepresentationBundle {
    lambda: CovariantWeight,
    basis: Vec<Supertableau>,
    index: HashMap<Vec<u16>, usize>,
    /// Keyed by the 1-based generator label (i, j) with |i - j| <= 1.
    gens: HashMap<(usize, usize), SparseMatrix>,
}

impl RepresentationBundle {
    pub fn lambda(&self) -> &CovariantWeight {
        &self.lambda
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Supertableau] {
        &self.basis
    }

    /// Position of a tableau in the canonical basis order.
    pub fn index_of(&self, t: &Supertableau) -> Option<usize> {
        self.index.get(&t.reading_word()).copied()
    }

    /// Matrix of E_ij for |i - j| <= 1 (1-based labels).
    pub fn generator(&self, i: usize, j: usize) -> &SparseMatrix {
        &self.gens[&(i, j)]
    }

    pub fn generators(&self) -> impl Iterator<Item = (&(usize, usize), &SparseMatrix)> {
        self.gens.iter()
    }

    /// Rebuilds a bundle from parts; used by deserialization. The matrices
    /// are trusted as given.
    pub fn from_parts(
        lambda: CovariantWeight,
        basis: Vec<Supertableau>,
        gens: HashMap<(usize, usize), SparseMatrix>,
    ) -> Self {
        let index = basis
            .iter()
            .enumerate()
            .map(|(k, t)| (t.reading_word(), k))
            .collect();
        RepresentationBundle {
            lambda,
            basis,
            index,
            gens,
        }
    }
}

/// Boxes where an entry `from` may be replaced by `to`, paired with the
/// resulting tableau; only replacements that survive full validation are
/// returned.
fn admissible_moves(t: &Supertableau, from: u16, to: u16) -> Vec<(usize, usize, Supertableau)> {
    let mut out = Vec::new();
    for (i0, row) in t.rows().iter().enumerate() {
        for (j0, &e) in row.iter().enumerate() {
            if e == from {
                let cand = t.with_entry(i0 + 1, j0 + 1, to);
                if cand.is_valid() {
                    out.push((i0 + 1, j0 + 1, cand));
                }
            }
        }
    }
    out
}

/// Builds the matrices of all E_ss, E_{s,s+1} and E_{s+1,s} on L(lambda).
pub fn build_bundle(lambda: &CovariantWeight, cap: usize) -> Result<RepresentationBundle> {
    let dims = lambda.dims();
    let m = dims.m();
    let total = dims.total();
    let basis = enumerate_supertableaux(lambda, cap)?;
    let dim = basis.len();
    let index: HashMap<Vec<u16>, usize> = basis
        .iter()
        .enumerate()
        .map(|(k, t)| (t.reading_word(), k))
        .collect();

    let mut gens: HashMap<(usize, usize), SparseMatrix> = HashMap::new();
    for s in 1..=total {
        let diag = basis.iter().map(|t| rat(t.weight().0[s - 1])).collect();
        gens.insert((s, s), SparseMatrix::diagonal(diag));
    }
    for s in 1..total {
        let parity = dims.generator_parity(s, s + 1);
        let mut raise = SparseMatrix::zero(dim, parity);
        let mut lower = SparseMatrix::zero(dim, parity);
        for (col, t) in basis.iter().enumerate() {
            // E_{s,s+1}: an entry s+1 becomes s.
            for (i, j, target) in admissible_moves(t, (s + 1) as u16, s as u16) {
                let c = if s < m {
                    coeff_gl_m(t, s, i, Direction::Raise)?
                } else if s == m {
                    coeff_odd_raise(t, lambda, i)?
                } else {
                    coeff_gl_n(t, s - m, j, Direction::Raise)?
                };
                let row = index[&target.reading_word()];
                raise.add_to(row, col, c);
            }
            // E_{s+1,s}: an entry s becomes s+1.
            for (i, j, target) in admissible_moves(t, s as u16, (s + 1) as u16) {
                let d = if s < m {
                    coeff_gl_m(t, s, i, Direction::Lower)?
                } else if s == m {
                    coeff_odd_lower(t, lambda, i)?
                } else {
                    coeff_gl_n(t, s - m, j, Direction::Lower)?
                };
                let row = index[&target.reading_word()];
                lower.add_to(row, col, d);
            }
        }
        gens.insert((s, s + 1), raise);
        gens.insert((s + 1, s), lower);
    }
    Ok(RepresentationBundle {
        lambda: lambda.clone(),
        basis,
        index,
        gens,
    })
}

/// Extends the bundle to every E_ij, 1 <= i,j <= m+n, through the super
/// bracket E_ij = [E_{i,i+-1}, E_{i+-1,j}].
pub fn derive_all_generators(
    bundle: &RepresentationBundle,
) -> HashMap<(usize, usize), SparseMatrix> {
    let total = bundle.lambda.dims().total();
    let mut all: HashMap<(usize, usize), SparseMatrix> = HashMap::new();
    for (&key, mat) in &bundle.gens {
        all.insert(key, mat.clone());
    }
    // Fill by increasing distance from the diagonal.
    for dist in 2..total {
        for i in 1..=total {
            // Upper: j = i + dist.
            if i + dist <= total {
                let j = i + dist;
                let e = all[&(i, i + 1)].super_bracket(&all[&(i + 1, j)]);
                all.insert((i, j), e);
            }
            // Lower: j = i - dist.
            if i > dist {
                let j = i - dist;
                let e = all[&(i, i - 1)].super_bracket(&all[&(i - 1, j)]);
                all.insert((i, j), e);
            }
        }
    }
    all
}
