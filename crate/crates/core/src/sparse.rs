//! Exact sparse matrices and the little linear algebra the verifiers need.
//!
//! Matrices are stored column-major: column j holds the expansion of the
//! image of basis vector j. Every matrix carries the Z_2 parity of the
//! operator it represents so that super brackets pick up the right sign.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::ratio::Ratio;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    dim: usize,
    parity: u8,
    /// `cols[j]` is sorted by row index and contains no zeros.
    cols: Vec<Vec<(usize, Ratio)>>,
}

impl SparseMatrix {
    pub fn zero(dim: usize, parity: u8) -> Self {
        SparseMatrix {
            dim,
            parity,
            cols: vec![Vec::new(); dim],
        }
    }

    /// Diagonal matrix (parity 0).
    pub fn diagonal(values: Vec<Ratio>) -> Self {
        let dim = values.len();
        let cols = values
            .into_iter()
            .enumerate()
            .map(|(j, v)| {
                if v.is_zero() {
                    Vec::new()
                } else {
                    vec![(j, v)]
                }
            })
            .collect();
        SparseMatrix {
            dim,
            parity: 0,
            cols,
        }
    }

    pub fn from_entries(
        dim: usize,
        parity: u8,
        entries: impl IntoIterator<Item = (usize, usize, Ratio)>,
    ) -> Self {
        let mut m = SparseMatrix::zero(dim, parity);
        for (i, j, v) in entries {
            m.add_to(i, j, v);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn parity(&self) -> u8 {
        self.parity
    }

    pub fn with_parity(mut self, parity: u8) -> Self {
        self.parity = parity;
        self
    }

    pub fn col(&self, j: usize) -> &[(usize, Ratio)] {
        &self.cols[j]
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Ratio)> {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(i, v)| (*i, j, v)))
    }

    pub fn get(&self, i: usize, j: usize) -> Ratio {
        self.cols[j]
            .binary_search_by_key(&i, |e| e.0)
            .map(|k| self.cols[j][k].1.clone())
            .unwrap_or_else(|_| Ratio::zero())
    }

    /// Adds `v` to entry (i, j), keeping the column sorted and zero-free.
    pub fn add_to(&mut self, i: usize, j: usize, v: Ratio) {
        if v.is_zero() {
            return;
        }
        let col = &mut self.cols[j];
        match col.binary_search_by_key(&i, |e| e.0) {
            Ok(k) => {
                col[k].1 += v;
                if col[k].1.is_zero() {
                    col.remove(k);
                }
            }
            Err(k) => col.insert(k, (i, v)),
        }
    }

    /// Replaces column j wholesale; entries must be sorted and nonzero.
    pub fn set_col(&mut self, j: usize, col: Vec<(usize, Ratio)>) {
        debug_assert!(col.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(col.iter().all(|(_, v)| !v.is_zero()));
        self.cols[j] = col;
    }

    /// Matrix product `self * other`. Parities add mod 2.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.dim, other.dim);
        let mut out = SparseMatrix::zero(self.dim, (self.parity + other.parity) % 2);
        for j in 0..self.dim {
            let mut acc: BTreeMap<usize, Ratio> = BTreeMap::new();
            for (k, b) in &other.cols[j] {
                for (i, a) in &self.cols[*k] {
                    let slot = acc.entry(*i).or_insert_with(Ratio::zero);
                    *slot += a * b;
                }
            }
            out.cols[j] = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        }
        out
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        self.combine(other, true)
    }

    fn combine(&self, other: &SparseMatrix, negate: bool) -> SparseMatrix {
        assert_eq!(self.dim, other.dim);
        let mut out = SparseMatrix::zero(self.dim, self.parity);
        for j in 0..self.dim {
            let mut acc: BTreeMap<usize, Ratio> = BTreeMap::new();
            for (i, v) in &self.cols[j] {
                acc.insert(*i, v.clone());
            }
            for (i, v) in &other.cols[j] {
                let slot = acc.entry(*i).or_insert_with(Ratio::zero);
                if negate {
                    *slot -= v;
                } else {
                    *slot += v;
                }
            }
            out.cols[j] = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        }
        out
    }

    pub fn scale(&self, c: &Ratio) -> SparseMatrix {
        if c.is_zero() {
            return SparseMatrix::zero(self.dim, self.parity);
        }
        let cols = self
            .cols
            .iter()
            .map(|col| col.iter().map(|(i, v)| (*i, v * c)).collect())
            .collect();
        SparseMatrix {
            dim: self.dim,
            parity: self.parity,
            cols,
        }
    }

    /// Super bracket `[A, B] = AB - (-1)^{|A||B|} BA`.
    pub fn super_bracket(&self, other: &SparseMatrix) -> SparseMatrix {
        let ab = self.mul(other);
        let ba = other.mul(self);
        if self.parity == 1 && other.parity == 1 {
            ab.add(&ba).with_parity(0)
        } else {
            ab.sub(&ba).with_parity((self.parity + other.parity) % 2)
        }
    }

    /// Applies the matrix to a sparse vector.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Ratio> = BTreeMap::new();
        for (k, x) in &v.0 {
            for (i, a) in &self.cols[*k] {
                let slot = acc.entry(*i).or_insert_with(Ratio::zero);
                *slot += a * x;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        SparseVec(acc)
    }
}

/// A sparse vector over an arbitrary index set.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseVec(pub BTreeMap<usize, Ratio>);

impl SparseVec {
    pub fn unit(i: usize) -> Self {
        let mut m = BTreeMap::new();
        m.insert(i, Ratio::from_integer(1.into()));
        SparseVec(m)
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (usize, Ratio)>) -> Self {
        let mut m = BTreeMap::new();
        for (i, v) in entries {
            if !v.is_zero() {
                m.insert(i, v);
            }
        }
        SparseVec(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pivot(&self) -> Option<usize> {
        self.0.keys().next().copied()
    }

    fn axpy(&mut self, c: &Ratio, other: &SparseVec) {
        for (i, v) in &other.0 {
            let slot = self.0.entry(*i).or_insert_with(Ratio::zero);
            *slot += c * v;
        }
        self.0.retain(|_, v| !v.is_zero());
    }
}

/// Incremental echelon basis of sparse vectors: supports rank queries and
/// membership-extending inserts. Rows are normalized to pivot 1.
#[derive(Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Reduces `v` against the basis; returns the (nonzero) remainder if `v`
    /// enlarges the span.
    pub fn reduce(&self, mut v: SparseVec) -> Option<SparseVec> {
        loop {
            let p = v.pivot()?;
            let Some(row) = self.rows.get(&p) else {
                return Some(v);
            };
            let c = -v.0.get(&p).unwrap().clone();
            v.axpy(&c, row);
        }
    }

    /// Inserts `v` if independent; returns true when the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        match self.reduce(v) {
            None => false,
            Some(mut rem) => {
                let p = rem.pivot().unwrap();
                let inv = Ratio::from_integer(1.into()) / rem.0.get(&p).unwrap().clone();
                for val in rem.0.values_mut() {
                    *val *= &inv;
                }
                self.rows.insert(p, rem);
                true
            }
        }
    }
}

/// Kernel basis of a dense matrix (rows of constraints) by exact
/// Gauss-Jordan elimination. Returns one vector per free column.
pub fn kernel_dense(mut rows: Vec<Vec<Ratio>>, ncols: usize) -> Vec<Vec<Ratio>> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(target) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, target);
        let inv = Ratio::from_integer(1.into()) / rows[rank][col].clone();
        for x in rows[rank].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let c = rows[r][col].clone();
                let pivot_row = rows[rank].clone();
                for (x, p) in rows[r].iter_mut().zip(&pivot_row) {
                    *x -= &c * p;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    let mut kernel = Vec::new();
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    for free in (0..ncols).filter(|c| !pivot_set.contains(c)) {
        let mut v = vec![Ratio::zero(); ncols];
        v[free] = Ratio::from_integer(1.into());
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -rows[r][free].clone();
        }
        kernel.push(v);
    }
    kernel
}
