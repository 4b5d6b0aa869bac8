//! Supertableaux of shape Gamma_lambda and their enumeration.
//!
//! A supertableau fills the diagram with entries 1..m+n so that rows and
//! columns weakly increase, entries <= m strictly increase down columns,
//! and entries > m strictly increase along rows. These fillings index the
//! basis of the covariant representation.

use std::fmt;

use crate::diagram::YoungDiagram;
use crate::error::{Error, Result};
use crate::weight::{CovariantWeight, SuperDims, WeightVector};

/// Default cap on the number of enumerated basis vectors.
pub const DEFAULT_CAP: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Supertableau {
    dims: SuperDims,
    rows: Vec<Vec<u16>>,
}

impl Supertableau {
    /// Wraps rows as a supertableau, checking all three filling rules and
    /// that the row lengths form a partition.
    pub fn new(dims: SuperDims, rows: Vec<Vec<u16>>) -> Result<Self> {
        let t = Supertableau { dims, rows };
        t.check()?;
        Ok(t)
    }

    fn check(&self) -> Result<()> {
        let m = self.dims.m() as u16;
        let top = (self.dims.m() + self.dims.n()) as u16;
        let lens: Vec<i64> = self.rows.iter().map(|r| r.len() as i64).collect();
        if lens.windows(2).any(|w| w[0] < w[1]) || self.rows.last().is_some_and(|r| r.is_empty()) {
            return Err(Error::InvalidTarget(
                "row lengths are not a partition".into(),
            ));
        }
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                if e < 1 || e > top {
                    return Err(Error::InvalidTarget(format!("entry {e} out of range")));
                }
                if j > 0 {
                    let left = row[j - 1];
                    if left > e {
                        return Err(Error::InvalidTarget("row not weakly increasing".into()));
                    }
                    if left > m && left == e {
                        return Err(Error::InvalidTarget(
                            "odd entries repeat along a row".into(),
                        ));
                    }
                }
                if i > 0 && self.rows[i - 1].len() > j {
                    let above = self.rows[i - 1][j];
                    if above > e {
                        return Err(Error::InvalidTarget("column not weakly increasing".into()));
                    }
                    if e <= m && above == e {
                        return Err(Error::InvalidTarget(
                            "even entries repeat down a column".into(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// True when this filling satisfies the three rules; used after edits.
    pub fn is_valid(&self) -> bool {
        self.check().is_ok()
    }

    pub fn dims(&self) -> SuperDims {
        self.dims
    }

    pub fn rows(&self) -> &[Vec<u16>] {
        &self.rows
    }

    pub fn shape(&self) -> YoungDiagram {
        YoungDiagram::new(self.rows.iter().map(|r| r.len() as i64).collect())
            .expect("rows kept as a partition")
    }

    /// Entry at box `(i, j)` (1-based), if present.
    pub fn entry(&self, i: usize, j: usize) -> Option<u16> {
        self.rows.get(i - 1).and_then(|r| r.get(j - 1)).copied()
    }

    /// Returns a copy with box `(i, j)` replaced by `e`, without validation.
    pub fn with_entry(&self, i: usize, j: usize, e: u16) -> Supertableau {
        let mut rows = self.rows.clone();
        rows[i - 1][j - 1] = e;
        Supertableau {
            dims: self.dims,
            rows,
        }
    }

    /// Number of entries equal to each of 1..m+n.
    pub fn weight(&self) -> WeightVector {
        let mut w = vec![0i64; self.dims.total()];
        for row in &self.rows {
            for &e in row {
                w[e as usize - 1] += 1;
            }
        }
        WeightVector(w)
    }

    /// lambda_{si}: number of entries <= s in row i (both 1-based).
    pub fn count_row_leq(&self, i: usize, s: u16) -> i64 {
        self.rows
            .get(i - 1)
            .map(|r| r.iter().filter(|&&e| e <= s).count() as i64)
            .unwrap_or(0)
    }

    /// lambda'_{.,j}: number of entries <= bound in column j (1-based).
    pub fn count_col_leq(&self, j: usize, bound: u16) -> i64 {
        self.rows
            .iter()
            .filter(|r| r.len() >= j && r[j - 1] <= bound)
            .count() as i64
    }

    /// Shape of the subtableau of entries <= m: the gl_m weight mu, one
    /// component per row 1..m.
    pub fn mu(&self) -> Vec<i64> {
        let m = self.dims.m();
        (1..=m).map(|i| self.count_row_leq(i, m as u16)).collect()
    }

    /// The row-reading word: rows concatenated top to bottom.
    pub fn reading_word(&self) -> Vec<u16> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Text form `1 1 2 / 2 3`.
    pub fn to_text(&self) -> String {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join(" / ")
    }

    /// Parses the text form produced by `to_text`.
    pub fn from_text(dims: SuperDims, text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for part in text.split('/') {
            let row: std::result::Result<Vec<u16>, _> =
                part.split_whitespace().map(|t| t.parse::<u16>()).collect();
            let row =
                row.map_err(|_| Error::InvalidTarget(format!("bad tableau text {text:?}")))?;
            rows.push(row);
        }
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        Supertableau::new(dims, rows)
    }
}

impl fmt::Display for Supertableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// The tableau of weight lambda: row i <= m filled with i, and below row m
/// column j filled with m+j. Its vector is the highest vector.
pub fn highest_tableau(lambda: &CovariantWeight) -> Supertableau {
    let dims = lambda.dims();
    let m = dims.m();
    let gamma = lambda.gamma_diagram();
    let mut rows = Vec::new();
    for i in 1..=gamma.rows().len() {
        let len = gamma.row(i);
        if len == 0 {
            continue;
        }
        let row: Vec<u16> = if i <= m {
            vec![i as u16; len as usize]
        } else {
            (1..=len).map(|j| (m as i64 + j) as u16).collect()
        };
        rows.push(row);
    }
    let t = Supertableau { dims, rows };
    debug_assert!(t.is_valid());
    t
}

/// Streams every supertableau of shape Gamma_lambda in canonical order
/// (ascending lexicographic row-reading word), stopping with an error once
/// more than `cap` fillings have been produced.
pub fn for_each_supertableau<F: FnMut(&Supertableau)>(
    lambda: &CovariantWeight,
    cap: usize,
    mut f: F,
) -> Result<usize> {
    let dims = lambda.dims();
    let gamma = lambda.gamma_diagram();
    let boxes: Vec<(usize, usize)> = {
        let mut v = Vec::new();
        for i in 1..=gamma.rows().len() {
            for j in 1..=gamma.row(i) as usize {
                v.push((i, j));
            }
        }
        v
    };
    let rows: Vec<Vec<u16>> = gamma
        .rows()
        .iter()
        .filter(|&&r| r > 0)
        .map(|&r| vec![0; r as usize])
        .collect();
    let mut filler = Filler {
        dims,
        boxes,
        rows,
        cap,
        count: 0,
    };
    filler.descend(0, &mut f)?;
    Ok(filler.count)
}

/// Depth-first fill in row-reading order; trying candidates in increasing
/// order yields the canonical order directly.
struct Filler {
    dims: SuperDims,
    boxes: Vec<(usize, usize)>,
    rows: Vec<Vec<u16>>,
    cap: usize,
    count: usize,
}

impl Filler {
    fn descend<F: FnMut(&Supertableau)>(&mut self, pos: usize, f: &mut F) -> Result<()> {
        if pos == self.boxes.len() {
            self.count += 1;
            if self.count > self.cap {
                return Err(Error::ResourceLimit(format!(
                    "basis enumeration exceeded cap {}",
                    self.cap
                )));
            }
            let t = Supertableau {
                dims: self.dims,
                rows: self.rows.clone(),
            };
            debug_assert!(t.is_valid());
            f(&t);
            return Ok(());
        }
        let m = self.dims.m() as u16;
        let top = self.dims.total() as u16;
        let (i, j) = self.boxes[pos];
        let left = if j > 1 { self.rows[i - 1][j - 2] } else { 0 };
        let above = if i > 1 && self.rows[i - 2].len() >= j {
            self.rows[i - 2][j - 1]
        } else {
            0
        };
        for e in 1..=top {
            // Weak increase along rows and down columns; odd entries strict
            // along rows; even entries strict down columns. Entries <= m form
            // a prefix of every column and entries > m a suffix of every row,
            // so adjacent checks are sufficient.
            if e < left || e < above {
                continue;
            }
            if left > m && e == left {
                continue;
            }
            if above > 0 && above <= m && e == above {
                continue;
            }
            self.rows[i - 1][j - 1] = e;
            self.descend(pos + 1, f)?;
        }
        self.rows[i - 1][j - 1] = 0;
        Ok(())
    }
}

/// All supertableaux of shape Gamma_lambda in canonical order.
pub fn enumerate_supertableaux(lambda: &CovariantWeight, cap: usize) -> Result<Vec<Supertableau>> {
    let mut out = Vec::new();
    for_each_supertableau(lambda, cap, |t| out.push(t.clone()))?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::SuperDims;

    fn weight(m: usize, n: usize, even: &[i64], odd: &[i64]) -> CovariantWeight {
        CovariantWeight::new(SuperDims::new(m, n).unwrap(), even.to_vec(), odd.to_vec()).unwrap()
    }

    /// The worked supertableau of gl(4|5) used throughout the tests.
    pub(crate) fn example_tableau() -> Supertableau {
        Supertableau::from_text(
            SuperDims::new(4, 5).unwrap(),
            "1 1 1 2 2 3 5 6 7 9 / 2 2 3 3 4 4 5 / 3 4 7 9 / 4 6 8 / 5 6 / 7 / 7",
        )
        .unwrap()
    }

    #[test]
    fn validates_example_tableau() {
        let t = example_tableau();
        assert_eq!(t.shape().rows(), &[10, 7, 4, 3, 2, 1, 1]);
        assert_eq!(t.weight(), WeightVector(vec![3, 4, 4, 4, 3, 3, 4, 1, 2]),);
        assert_eq!(t.weight().total(), 28);
    }

    #[test]
    fn rejects_rule_violations() {
        let d = SuperDims::new(1, 1).unwrap();
        // 1 over 1: even entry repeated down a column.
        assert!(Supertableau::new(d, vec![vec![1], vec![1]]).is_err());
        // 2 2 in a row: odd entry repeated along a row.
        assert!(Supertableau::new(d, vec![vec![2, 2]]).is_err());
        // decreasing row.
        assert!(Supertableau::new(d, vec![vec![2, 1]]).is_err());
        // 2 over 2 is allowed.
        assert!(Supertableau::new(d, vec![vec![2], vec![2]]).is_ok());
    }

    #[test]
    fn enumerates_natural_module() {
        let lam = weight(2, 1, &[1, 0], &[0]);
        let ts = enumerate_supertableaux(&lam, DEFAULT_CAP).unwrap();
        let words: Vec<String> = ts.iter().map(|t| t.to_text()).collect();
        assert_eq!(words, vec!["1", "2", "3"]);
    }

    #[test]
    fn enumerates_gl12_example_module() {
        let lam = weight(1, 2, &[2], &[1, 0]);
        let ts = enumerate_supertableaux(&lam, DEFAULT_CAP).unwrap();
        assert_eq!(ts.len(), 8);
        // Canonical order is lexicographic in the reading word.
        let mut words: Vec<Vec<u16>> = ts.iter().map(|t| t.reading_word()).collect();
        let sorted = {
            let mut w = words.clone();
            w.sort();
            w
        };
        assert_eq!(words, sorted);
        words.dedup();
        assert_eq!(words.len(), 8);
    }

    #[test]
    fn enumerates_gl11_column() {
        let lam = weight(1, 1, &[1], &[1]);
        let ts = enumerate_supertableaux(&lam, DEFAULT_CAP).unwrap();
        let words: Vec<String> = ts.iter().map(|t| t.to_text()).collect();
        assert_eq!(words, vec!["1 / 2", "2 / 2"]);
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let lam = weight(1, 2, &[2], &[1, 0]);
        let err = enumerate_supertableaux(&lam, 7).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit(_)));
    }

    #[test]
    fn default_cap_blocks_the_large_worked_weight() {
        // The gl(4|5) module with 28 boxes far exceeds the default cap; the
        // enumeration must stop with a resource error rather than run on.
        let lam = weight(4, 5, &[10, 7, 4, 3], &[3, 1, 0, 0, 0]);
        let err = for_each_supertableau(&lam, DEFAULT_CAP, |_| {}).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit(_)));
    }

    #[test]
    fn single_odd_box_weight() {
        let t = Supertableau::from_text(SuperDims::new(1, 1).unwrap(), "2").unwrap();
        assert_eq!(t.weight(), WeightVector(vec![0, 1]));
    }

    #[test]
    fn highest_tableau_has_weight_lambda() {
        for lam in [
            weight(2, 1, &[1, 0], &[0]),
            weight(1, 1, &[1], &[1]),
            weight(1, 2, &[2], &[1, 0]),
            weight(4, 5, &[10, 7, 4, 3], &[3, 1, 0, 0, 0]),
        ] {
            let t = highest_tableau(&lam);
            let w = t.weight();
            let expect: Vec<i64> = lam.even().iter().chain(lam.odd().iter()).copied().collect();
            assert_eq!(w.0, expect, "lambda = {lam}");
        }
        assert_eq!(highest_tableau(&weight(2, 1, &[1, 0], &[0])).to_text(), "1");
        assert_eq!(
            highest_tableau(&weight(1, 1, &[1], &[1])).to_text(),
            "1 / 2"
        );
        assert_eq!(
            highest_tableau(&weight(1, 2, &[2], &[1, 0])).to_text(),
            "1 1 / 2"
        );
    }

    #[test]
    fn enumeration_revalidates_and_counts_match() {
        let lam = weight(2, 2, &[2, 1], &[1, 0]);
        let ts = enumerate_supertableaux(&lam, DEFAULT_CAP).unwrap();
        assert!(ts.iter().all(|t| t.is_valid()));
        let mut seen = std::collections::HashSet::new();
        for t in &ts {
            assert!(seen.insert(t.reading_word()));
            assert_eq!(t.weight().total(), lam.size());
        }
    }

    #[test]
    fn text_roundtrip() {
        let t = example_tableau();
        let back = Supertableau::from_text(t.dims(), &t.to_text()).unwrap();
        assert_eq!(back, t);
    }
}
