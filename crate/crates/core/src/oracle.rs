//! Brute-force construction of L(lambda) inside tensor powers of the
//! natural representation, used as ground truth for dimensions and
//! characters.
//!
//! The module never touches the supertableau formulas: generators act on
//! pure tensors with Koszul signs, highest vectors are found as the exact
//! kernel of the simple raising operators on the weight-lambda subspace,
//! and the cyclic span is closed off under the simple lowering operators
//! with exact rational rank tests.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::character::CharacterPoly;
use crate::error::{Error, Result};
use crate::ratio::{rat, Ratio};
use crate::sparse::{kernel_dense, Echelon, SparseMatrix, SparseVec};
use crate::weight::{CovariantWeight, SuperDims, WeightVector};

/// Default budget on the number of pure tensors.
pub const DEFAULT_BUDGET: usize = 50_000;

/// The tensor power (C^{m|n})^{(x)N} with its gl(m|n) action.
pub struct TensorModule {
    dims: SuperDims,
    n_factors: usize,
    dim: usize,
}

impl TensorModule {
    pub fn new(dims: SuperDims, n_factors: usize, budget: usize) -> Result<Self> {
        let base = dims.total();
        let mut dim = 1usize;
        for _ in 0..n_factors {
            dim = dim
                .checked_mul(base)
                .filter(|&d| d <= budget)
                .ok_or_else(|| {
                    Error::BudgetExceeded(format!(
                        "({base})^{n_factors} pure tensors exceed budget {budget}"
                    ))
                })?;
        }
        Ok(TensorModule {
            dims,
            n_factors,
            dim,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Decodes the pure tensor with the given index into letters 1..m+n.
    fn word(&self, mut idx: usize) -> Vec<u16> {
        let base = self.dims.total();
        let mut w = vec![0u16; self.n_factors];
        for t in (0..self.n_factors).rev() {
            w[t] = (idx % base + 1) as u16;
            idx /= base;
        }
        w
    }

    fn index(&self, w: &[u16]) -> usize {
        let base = self.dims.total();
        w.iter()
            .fold(0usize, |acc, &e| acc * base + (e as usize - 1))
    }

    /// Letter counts of a pure tensor.
    pub fn weight_of_index(&self, idx: usize) -> WeightVector {
        let mut counts = vec![0i64; self.dims.total()];
        for e in self.word(idx) {
            counts[e as usize - 1] += 1;
        }
        WeightVector(counts)
    }

    /// The matrix of E_ab on pure tensors: each factor equal to b is mapped
    /// to a, with the Koszul sign over the preceding factors.
    pub fn generator(&self, a: usize, b: usize) -> SparseMatrix {
        let parity = self.dims.generator_parity(a, b);
        let mut mat = SparseMatrix::zero(self.dim, parity);
        for idx in 0..self.dim {
            let w = self.word(idx);
            let mut prefix_parity = 0u8;
            for t in 0..self.n_factors {
                if w[t] as usize == b {
                    let mut target = w.clone();
                    target[t] = a as u16;
                    let sign = if parity == 1 && prefix_parity == 1 {
                        rat(-1)
                    } else {
                        rat(1)
                    };
                    mat.add_to(self.index(&target), idx, sign);
                }
                prefix_parity = (prefix_parity + self.dims.parity(w[t] as usize)) % 2;
            }
        }
        mat
    }

    /// Indices of all pure tensors of the given weight.
    pub fn weight_subspace(&self, w: &WeightVector) -> Vec<usize> {
        (0..self.dim)
            .filter(|&i| &self.weight_of_index(i) == w)
            .collect()
    }
}

/// Outcome of the oracle construction.
#[derive(Debug, Clone)]
pub struct OracleOutcome {
    pub dimension: u64,
    pub character: CharacterPoly,
    /// Dimension of the space of highest vectors of weight lambda in the
    /// tensor power (the number of standard tableaux of the shape).
    pub kernel_dim: usize,
    /// True when every kernel basis vector generated a span of the same
    /// dimension and character; a `false` here is a diagnostic, not a
    /// crash.
    pub kernel_spans_agree: bool,
}

/// Constructs L(lambda) inside (C^{m|n})^{(x)|lambda|}: finds the joint
/// kernel of the simple raisings in weight lambda, closes one kernel
/// vector under the simple lowerings, and reads off dimension and
/// character by exact rank computations.
pub fn oracle_module(lambda: &CovariantWeight, budget: usize) -> Result<OracleOutcome> {
    let dims = lambda.dims();
    let n_factors = lambda.size() as usize;
    let module = TensorModule::new(dims, n_factors, budget)?;
    let total = dims.total();

    let hw = WeightVector(
        lambda
            .even()
            .iter()
            .chain(lambda.odd().iter())
            .copied()
            .collect(),
    );
    let hw_indices = module.weight_subspace(&hw);
    if hw_indices.is_empty() {
        return Err(Error::NoHighestVector(format!(
            "weight {} does not occur in the tensor power",
            hw.render(dims.m())
        )));
    }
    let raisings: Vec<SparseMatrix> = (1..total).map(|s| module.generator(s, s + 1)).collect();
    let lowerings: Vec<SparseMatrix> = (1..total).map(|s| module.generator(s + 1, s)).collect();

    // Stack the raising images of the weight-lambda coordinates into one
    // constraint matrix and take its kernel.
    let mut rows: Vec<Vec<Ratio>> = Vec::new();
    for r in &raisings {
        let mut images: BTreeMap<usize, Vec<(usize, Ratio)>> = BTreeMap::new();
        for (colpos, &idx) in hw_indices.iter().enumerate() {
            for (row, v) in r.col(idx) {
                images.entry(*row).or_default().push((colpos, v.clone()));
            }
        }
        for (_, entries) in images {
            let mut row = vec![Ratio::zero(); hw_indices.len()];
            for (colpos, v) in entries {
                row[colpos] = v;
            }
            rows.push(row);
        }
    }
    let kernel = kernel_dense(rows, hw_indices.len());
    if kernel.is_empty() {
        return Err(Error::NoHighestVector(format!(
            "no highest vector of weight {} in the tensor power",
            hw.render(dims.m())
        )));
    }

    let span_of = |start: &[Ratio]| -> (u64, CharacterPoly) {
        let v0 = SparseVec::from_entries(
            start
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(pos, c)| (hw_indices[pos], c.clone())),
        );
        let mut echelon = Echelon::new();
        let mut queue = vec![v0.clone()];
        echelon.insert(v0);
        while let Some(v) = queue.pop() {
            for low in &lowerings {
                let img = low.apply(&v);
                if !img.is_zero() && echelon.insert(img.clone()) {
                    queue.push(img);
                }
            }
        }
        let mut counts: BTreeMap<WeightVector, u64> = BTreeMap::new();
        for pivot in echelon.pivots() {
            *counts.entry(module.weight_of_index(pivot)).or_insert(0) += 1;
        }
        let ch = CharacterPoly::from_counts(counts);
        (ch.total(), ch)
    };

    let (dimension, char0) = span_of(&kernel[0]);
    let mut agree = true;
    for v in kernel.iter().skip(1) {
        let (d, ch) = span_of(v);
        if d != dimension || ch != char0 {
            agree = false;
        }
    }
    Ok(OracleOutcome {
        dimension,
        character: char0,
        kernel_dim: kernel.len(),
        kernel_spans_agree: agree,
    })
}

/// Checks every super-commutation relation
/// `[E_ij, E_kl] = delta_kj E_il - (-1)^{(i+j)(k+l)} delta_il E_kj`
/// exactly on the tensor power.
pub fn oracle_check_relations(dims: SuperDims, n_factors: usize, budget: usize) -> Result<bool> {
    let module = TensorModule::new(dims, n_factors, budget)?;
    let total = dims.total();
    let mut gens: BTreeMap<(usize, usize), SparseMatrix> = BTreeMap::new();
    for i in 1..=total {
        for j in 1..=total {
            gens.insert((i, j), module.generator(i, j));
        }
    }
    for i in 1..=total {
        for j in 1..=total {
            for k in 1..=total {
                for l in 1..=total {
                    let lhs = gens[&(i, j)].super_bracket(&gens[&(k, l)]);
                    let mut rhs = SparseMatrix::zero(module.dim(), lhs.parity());
                    if k == j {
                        rhs = rhs.add(&gens[&(i, l)]);
                    }
                    if i == l {
                        let sign = dims.generator_parity(i, j) * dims.generator_parity(k, l);
                        let term = if sign == 1 {
                            gens[&(k, j)].scale(&rat(-1))
                        } else {
                            gens[&(k, j)].clone()
                        };
                        rhs = rhs.sub(&term);
                    }
                    if !lhs.sub(&rhs).is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}
