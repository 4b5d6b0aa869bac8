//! Derived parameters of a pair (lambda, mu): shifted coordinates, the skew
//! diagram Gamma_lambda/mu, and the column counts of its initial filling.
//!
//! The initial filling writes m+1, m+2, ... left to right in every row of
//! the skew shape. Its column counts feed the odd-generator coefficients
//! and the Yangian highest weight.

use crate::diagram::{SkewDiagram, YoungDiagram};
use crate::error::{Error, Result};
use crate::tableau::Supertableau;
use crate::weight::CovariantWeight;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewShapeParams {
    lambda: CovariantWeight,
    mu: Vec<i64>,
    r: usize,
    /// sigma_i = mu_i - i + 1.
    sigma: Vec<i64>,
    /// l_i = lambda_i - i + 1.
    l: Vec<i64>,
    mu_conj: YoungDiagram,
    gamma_conj: YoungDiagram,
    /// Column counts of the initial filling: `la0[p][j-1] = lambda^0_{r+p,j}`
    /// for `0 <= p <= n`, `1 <= j <= r+p`.
    la0: Vec<Vec<i64>>,
}

/// Checks that mu is a partition with `0 <= lambda_i - mu_i <= n`.
fn check_mu(lambda: &CovariantWeight, mu: &[i64]) -> Result<()> {
    let m = lambda.dims().m();
    let n = lambda.dims().n() as i64;
    if mu.len() != m {
        return Err(Error::MultiplicityBoundViolated(format!(
            "mu has {} parts, expected {m}",
            mu.len()
        )));
    }
    if mu.iter().any(|&x| x < 0) || mu.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::MultiplicityBoundViolated(format!(
            "mu {mu:?} is not a partition"
        )));
    }
    for (i, (&le, &me)) in lambda.even().iter().zip(mu.iter()).enumerate() {
        let k = le - me;
        if !(0..=n).contains(&k) {
            return Err(Error::MultiplicityBoundViolated(format!(
                "lambda_{} - mu_{} = {k} outside 0..={n}",
                i + 1,
                i + 1
            )));
        }
    }
    Ok(())
}

impl SkewShapeParams {
    pub fn new(lambda: &CovariantWeight, mu: &[i64]) -> Result<Self> {
        check_mu(lambda, mu)?;
        let n = lambda.dims().n();
        let r = mu[0] as usize;
        let sigma: Vec<i64> = mu.iter().enumerate().map(|(i, &x)| x - i as i64).collect();
        let l: Vec<i64> = lambda
            .even()
            .iter()
            .enumerate()
            .map(|(i, &x)| x - i as i64)
            .collect();
        let mu_conj = YoungDiagram::new(mu.to_vec())
            .expect("checked partition")
            .conjugate();
        let gamma_conj = lambda.gamma_diagram().conjugate();
        // lambda^0_{r+p,j} = min(lambda'_j, mu'_{j-p}), reading mu'_{j-p} as
        // unbounded when j <= p so the lambda'_j branch applies.
        let la0: Vec<Vec<i64>> = (0..=n)
            .map(|p| {
                (1..=r + p)
                    .map(|j| {
                        let gc = gamma_conj.row(j);
                        if j > p {
                            gc.min(mu_conj.row(j - p))
                        } else {
                            gc
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(SkewShapeParams {
            lambda: lambda.clone(),
            mu: mu.to_vec(),
            r,
            sigma,
            l,
            mu_conj,
            gamma_conj,
            la0,
        })
    }

    /// Reads mu off a supertableau (shape of its entries <= m).
    pub fn from_tableau(t: &Supertableau, lambda: &CovariantWeight) -> Result<Self> {
        SkewShapeParams::new(lambda, &t.mu())
    }

    pub fn lambda(&self) -> &CovariantWeight {
        &self.lambda
    }

    pub fn mu(&self) -> &[i64] {
        &self.mu
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn sigma(&self) -> &[i64] {
        &self.sigma
    }

    pub fn l(&self) -> &[i64] {
        &self.l
    }

    pub fn mu_conj(&self) -> &YoungDiagram {
        &self.mu_conj
    }

    pub fn gamma_conj(&self) -> &YoungDiagram {
        &self.gamma_conj
    }

    /// `lambda^0_{r+p,j}` (p from 0..=n, j 1-based up to r+p).
    pub fn la0(&self, p: usize, j: usize) -> i64 {
        self.la0[p][j - 1]
    }

    /// `l^0_{r+p,j} = lambda^0_{r+p,j} - j + 1`.
    pub fn l0(&self, p: usize, j: usize) -> i64 {
        self.la0(p, j) - j as i64 + 1
    }

    pub fn la0_rows(&self) -> &[Vec<i64>] {
        &self.la0
    }

    /// The skew diagram Gamma_lambda / mu.
    pub fn skew(&self) -> SkewDiagram {
        let mut inner = self.mu.clone();
        while inner.last() == Some(&0) {
            inner.pop();
        }
        SkewDiagram::new(
            self.lambda.gamma_diagram(),
            YoungDiagram::new(inner).unwrap(),
        )
        .expect("mu fits in Gamma_lambda")
    }
}

/// The skew filling with m+1, m+2, ... consecutively along each row,
/// returned as rows of (column, entry) pairs.
pub fn initial_tableau(lambda: &CovariantWeight, mu: &[i64]) -> Result<Vec<Vec<(usize, u16)>>> {
    check_mu(lambda, mu)?;
    let m = lambda.dims().m() as i64;
    let gamma = lambda.gamma_diagram();
    let mut rows = Vec::new();
    for i in 1..=gamma.rows().len() {
        let inner = if i <= mu.len() { mu[i - 1] } else { 0 };
        let row: Vec<(usize, u16)> = (inner + 1..=gamma.row(i))
            .enumerate()
            .map(|(t, j)| (j as usize, (m + 1 + t as i64) as u16))
            .collect();
        rows.push(row);
    }
    Ok(rows)
}

/// Contents of the leftmost boxes of the rows of Gamma_lambda/mu having
/// exactly `k` boxes, in row order.
pub fn drinfeld_row_contents(lambda: &CovariantWeight, mu: &[i64], k: i64) -> Result<Vec<i64>> {
    check_mu(lambda, mu)?;
    let gamma = lambda.gamma_diagram();
    let mut out = Vec::new();
    for i in 1..=gamma.rows().len() {
        let inner = if i <= mu.len() { mu[i - 1] } else { 0 };
        if gamma.row(i) - inner == k && k > 0 {
            out.push(inner + 1 - i as i64);
        }
    }
    Ok(out)
}

/// Every partition mu with `0 <= lambda_i - mu_i <= n`, in lexicographic
/// order. These are exactly the gl_m weights with nonzero multiplicity
/// space.
pub fn admissible_mus(lambda: &CovariantWeight) -> Vec<Vec<i64>> {
    let m = lambda.dims().m();
    let n = lambda.dims().n() as i64;
    let mut out = Vec::new();
    let mut mu = vec![0i64; m];
    fn fill(
        lambda: &CovariantWeight,
        n: i64,
        mu: &mut Vec<i64>,
        pos: usize,
        out: &mut Vec<Vec<i64>>,
    ) {
        if pos == mu.len() {
            out.push(mu.clone());
            return;
        }
        let lo = (lambda.even()[pos] - n).max(0);
        let mut hi = lambda.even()[pos];
        if pos > 0 {
            hi = hi.min(mu[pos - 1]);
        }
        for v in lo..=hi {
            mu[pos] = v;
            fill(lambda, n, mu, pos + 1, out);
        }
    }
    fill(lambda, n, &mut mu, 0, &mut out);
    out
}
