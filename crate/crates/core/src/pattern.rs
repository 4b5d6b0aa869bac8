//! The pattern pair (U, V) attached to a supertableau.
//!
//! U is the triangular Gelfand-Tsetlin array of the gl_m part and V the
//! trapezium array of the gl_n part; both satisfy betweenness. The pair is
//! an equivalent encoding of the supertableau.

use crate::diagram::YoungDiagram;
use crate::error::{Error, Result};
use crate::tableau::Supertableau;
use crate::weight::CovariantWeight;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternPair {
    /// `u[s-1][i-1] = lambda_{si}` for `1 <= i <= s <= m`.
    u: Vec<Vec<i64>>,
    /// `v[p][j-1] = lambda'_{r+p,j}` for `0 <= p <= n`, `1 <= j <= r+p`.
    v: Vec<Vec<i64>>,
    r: usize,
}

impl PatternPair {
    /// Checks betweenness on both arrays and the compatibility of V's bottom
    /// row with U's top row (the bottom row is the conjugate of mu).
    pub fn new(u: Vec<Vec<i64>>, v: Vec<Vec<i64>>, r: usize) -> Result<Self> {
        let m = u.len();
        if m == 0 || v.is_empty() {
            return Err(Error::InconsistentPattern("empty pattern".into()));
        }
        for (s, row) in u.iter().enumerate() {
            if row.len() != s + 1 {
                return Err(Error::InconsistentPattern(format!(
                    "U row {} has length {}",
                    s + 1,
                    row.len()
                )));
            }
        }
        for (p, row) in v.iter().enumerate() {
            if row.len() != r + p {
                return Err(Error::InconsistentPattern(format!(
                    "V row {} has length {}",
                    r + p,
                    row.len()
                )));
            }
        }
        let pair = PatternPair { u, v, r };
        pair.check_betweenness()?;
        Ok(pair)
    }

    fn check_betweenness(&self) -> Result<()> {
        let m = self.u.len();
        // U is stored bottom-up: u[s-1] is the length-s row lambda_{s.}.
        for k in 1..m {
            for i in 1..=k {
                let a = self.u[k][i - 1]; // lambda_{k+1,i}
                let b = self.u[k - 1][i - 1]; // lambda_{k,i}
                let c = self.u[k][i]; // lambda_{k+1,i+1}
                if !(a >= b && b >= c) {
                    return Err(Error::InconsistentPattern(format!(
                        "U betweenness fails at row {}, column {i}",
                        k + 1
                    )));
                }
            }
        }
        if self.u[m - 1].windows(2).any(|w| w[0] < w[1]) || self.u[m - 1].iter().any(|&x| x < 0) {
            return Err(Error::InconsistentPattern(
                "U top row is not a partition".into(),
            ));
        }
        for p in 1..self.v.len() {
            for j in 1..self.r + p {
                let a = self.v[p][j - 1]; // lambda'_{r+p,j}
                let b = self.v[p - 1][j - 1]; // lambda'_{r+p-1,j}
                let c = self.v[p][j]; // lambda'_{r+p,j+1}
                if !(a >= b && b >= c) {
                    return Err(Error::InconsistentPattern(format!(
                        "V betweenness fails at row r+{p}, column {j}"
                    )));
                }
            }
        }
        if self.v[0].iter().any(|&x| x < 0) || self.v[0].windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InconsistentPattern(
                "V bottom row is not a partition".into(),
            ));
        }
        // V's bottom row records the column heights of mu, so its conjugate
        // must reproduce U's top row.
        let mu_conj = YoungDiagram::new(self.v[0].clone())
            .ok_or_else(|| Error::InconsistentPattern("V bottom row not decreasing".into()))?;
        let mu = mu_conj.conjugate();
        let top: Vec<i64> = (1..=self.u.len()).map(|i| mu.row(i)).collect();
        let u_top: Vec<i64> = self.u[m - 1].clone();
        if top != u_top || mu.height() > m {
            return Err(Error::InconsistentPattern(
                "V bottom row does not conjugate to U top row".into(),
            ));
        }
        if self.r as i64 != self.u[m - 1][0] {
            return Err(Error::InconsistentPattern(
                "r differs from lambda_{m1}".into(),
            ));
        }
        Ok(())
    }

    pub fn u(&self) -> &[Vec<i64>] {
        &self.u
    }

    pub fn v(&self) -> &[Vec<i64>] {
        &self.v
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// `lambda_{si}`, 1-based.
    pub fn lam(&self, s: usize, i: usize) -> i64 {
        self.u[s - 1][i - 1]
    }

    /// `lambda'_{r+p,j}`, 1-based column.
    pub fn lam_col(&self, p: usize, j: usize) -> i64 {
        self.v[p][j - 1]
    }
}

/// Reads the pattern pair off a supertableau.
pub fn tableau_to_patterns(t: &Supertableau) -> PatternPair {
    let m = t.dims().m();
    let n = t.dims().n();
    let u: Vec<Vec<i64>> = (1..=m)
        .map(|s| (1..=s).map(|i| t.count_row_leq(i, s as u16)).collect())
        .collect();
    let r = u[m - 1][0] as usize;
    let v: Vec<Vec<i64>> = (0..=n)
        .map(|p| {
            (1..=r + p)
                .map(|j| t.count_col_leq(j, (m + p) as u16))
                .collect()
        })
        .collect();
    PatternPair::new(u, v, r).expect("a valid supertableau always yields a pattern pair")
}

/// Rebuilds the supertableau from its pattern pair: the entry in box (i, j)
/// is the least s with lambda_{si} >= j when the box lies in mu, and
/// m + (least p with lambda'_{r+p,j} >= i) otherwise.
pub fn patterns_to_tableau(p: &PatternPair, lambda: &CovariantWeight) -> Result<Supertableau> {
    let dims = lambda.dims();
    let m = dims.m();
    let n = dims.n();
    if p.u().len() != m {
        return Err(Error::InconsistentPattern(format!(
            "U has {} rows, expected {m}",
            p.u().len()
        )));
    }
    let gamma = lambda.gamma_diagram();
    let mut rows: Vec<Vec<u16>> = Vec::new();
    for i in 1..=gamma.rows().len() {
        let len = gamma.row(i) as usize;
        if len == 0 {
            continue;
        }
        let mut row = Vec::with_capacity(len);
        for j in 1..=len {
            let in_mu = i <= m && p.lam(m, i) >= j as i64;
            let e = if in_mu {
                let s = (i..=m)
                    .find(|&s| p.lam(s, i) >= j as i64)
                    .ok_or_else(|| Error::InconsistentPattern("no even entry fits".into()))?;
                s as u16
            } else {
                let q = (1..=n)
                    .find(|&q| j <= p.r() + q && p.lam_col(q, j) >= i as i64)
                    .ok_or_else(|| Error::InconsistentPattern("no odd entry fits".into()))?;
                (m + q) as u16
            };
            row.push(e);
        }
        rows.push(row);
    }
    let t = Supertableau::new(dims, rows)
        .map_err(|e| Error::InconsistentPattern(format!("reconstruction invalid: {e}")))?;
    if &tableau_to_patterns(&t) != p {
        return Err(Error::InconsistentPattern(
            "pattern does not correspond to a tableau of this shape".into(),
        ));
    }
    Ok(t)
}
