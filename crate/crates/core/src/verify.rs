//! Structure checks on built bundles: super-commutation relations, the
//! highest vector, and cyclic generation. These are the crate's own
//! acceptance machinery and run with exact arithmetic throughout.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bundle::{derive_all_generators, RepresentationBundle};
use crate::ratio::rat;
use crate::sparse::{Echelon, SparseMatrix, SparseVec};
use crate::tableau::highest_tableau;

/// Above this dimension the relation check keeps every pair with a nonzero
/// right-hand side but only samples the zero ones.
const FULL_RELATION_DIM: usize = 1000;
const ZERO_RHS_SAMPLE: usize = 400;

#[derive(Debug, Clone)]
pub struct RelationReport {
    /// Quadruples (i, j, k, l) whose relation failed.
    pub failures: Vec<(usize, usize, usize, usize)>,
    pub checked: usize,
    /// True when the zero-right-hand-side pairs were sampled rather than
    /// enumerated.
    pub sampled: bool,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `[E_ij, E_kl] = delta_kj E_il - (-1)^{(i+j)(k+l)} delta_il E_kj`
/// for generator matrices derived from the bundle.
pub fn check_super_commutators(bundle: &RepresentationBundle) -> RelationReport {
    let dims = bundle.lambda().dims();
    let total = dims.total();
    let all = derive_all_generators(bundle);
    let dim = bundle.dim();

    let mut nonzero_rhs = Vec::new();
    let mut zero_rhs = Vec::new();
    for i in 1..=total {
        for j in 1..=total {
            for k in 1..=total {
                for l in 1..=total {
                    if k == j || i == l {
                        nonzero_rhs.push((i, j, k, l));
                    } else {
                        zero_rhs.push((i, j, k, l));
                    }
                }
            }
        }
    }
    let mut sampled = false;
    if dim > FULL_RELATION_DIM && zero_rhs.len() > ZERO_RHS_SAMPLE {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        zero_rhs.shuffle(&mut rng);
        zero_rhs.truncate(ZERO_RHS_SAMPLE);
        sampled = true;
    }

    let mut failures = Vec::new();
    let mut checked = 0;
    for (i, j, k, l) in nonzero_rhs.into_iter().chain(zero_rhs) {
        let lhs = all[&(i, j)].super_bracket(&all[&(k, l)]);
        let mut rhs = SparseMatrix::zero(dim, lhs.parity());
        if k == j {
            rhs = rhs.add(&all[&(i, l)]);
        }
        if i == l {
            let sign = dims.generator_parity(i, j) * dims.generator_parity(k, l);
            let term = if sign == 1 {
                all[&(k, j)].scale(&rat(-1))
            } else {
                all[&(k, j)].clone()
            };
            rhs = rhs.sub(&term);
        }
        checked += 1;
        if !lhs.sub(&rhs).is_zero() {
            failures.push((i, j, k, l));
        }
    }
    RelationReport {
        failures,
        checked,
        sampled,
    }
}

#[derive(Debug, Clone)]
pub struct HighestVectorReport {
    /// Raising generators E_{s,s+1} that fail to annihilate the column.
    pub nonvanishing: Vec<usize>,
    /// Diagonal generators whose eigenvalue differs from lambda_s.
    pub wrong_eigenvalue: Vec<usize>,
}

impl HighestVectorReport {
    pub fn passed(&self) -> bool {
        self.nonvanishing.is_empty() && self.wrong_eigenvalue.is_empty()
    }
}

/// The column of the highest tableau must be killed by every raising
/// generator and be an E_ss eigenvector with eigenvalue lambda_s.
pub fn check_highest_vector(bundle: &RepresentationBundle) -> HighestVectorReport {
    let lambda = bundle.lambda();
    let total = lambda.dims().total();
    let hi = bundle
        .index_of(&highest_tableau(lambda))
        .expect("highest tableau always enumerated");
    let mut report = HighestVectorReport {
        nonvanishing: vec![],
        wrong_eigenvalue: vec![],
    };
    for s in 1..total {
        if !bundle.generator(s, s + 1).col(hi).is_empty() {
            report.nonvanishing.push(s);
        }
    }
    for s in 1..=total {
        let col = bundle.generator(s, s).col(hi);
        let expect = rat(lambda.component(s));
        let ok = match col {
            [] => expect == rat(0),
            [(row, v)] => *row == hi && *v == expect,
            _ => false,
        };
        if !ok {
            report.wrong_eigenvalue.push(s);
        }
    }
    report
}

#[derive(Debug, Clone)]
pub struct CyclicReport {
    pub rank: usize,
    pub dim: usize,
}

impl CyclicReport {
    pub fn passed(&self) -> bool {
        self.rank == self.dim
    }
}

/// Repeated application of the lowering generators to the highest column
/// must span the whole space.
pub fn check_cyclic_generation(bundle: &RepresentationBundle) -> CyclicReport {
    let lambda = bundle.lambda();
    let total = lambda.dims().total();
    let hi = bundle
        .index_of(&highest_tableau(lambda))
        .expect("highest tableau always enumerated");
    let lowerings: Vec<&SparseMatrix> = (1..total).map(|s| bundle.generator(s + 1, s)).collect();
    let mut echelon = Echelon::new();
    let start = SparseVec::unit(hi);
    echelon.insert(start.clone());
    let mut queue = vec![start];
    while let Some(v) = queue.pop() {
        for low in &lowerings {
            let img = low.apply(&v);
            if !img.is_zero() && echelon.insert(img.clone()) {
                queue.push(img);
            }
        }
    }
    CyclicReport {
        rank: echelon.rank(),
        dim: bundle.dim(),
    }
}

/// E_{m,m+1}^2 = 0, E_{m+1,m}^2 = 0, and their anticommutator equals
/// diag(omega_m + omega_{m+1}).
pub fn check_odd_structure(bundle: &RepresentationBundle) -> bool {
    let m = bundle.lambda().dims().m();
    let raise = bundle.generator(m, m + 1);
    let lower = bundle.generator(m + 1, m);
    if !raise.mul(raise).is_zero() || !lower.mul(lower).is_zero() {
        return false;
    }
    let anti = raise.mul(lower).add(&lower.mul(raise));
    let diag = SparseMatrix::diagonal(
        bundle
            .basis()
            .iter()
            .map(|t| {
                let w = t.weight();
                rat(w.0[m - 1] + w.0[m])
            })
            .collect(),
    );
    anti.sub(&diag).is_zero()
}
