//! Highest weights of gl(m|n) and integral weight vectors.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::YoungDiagram;
use crate::error::{Error, Result};

/// The split rank (m|n) of gl(m|n), with the parity marker for basis indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SuperDims {
    m: usize,
    n: usize,
}

impl SuperDims {
    pub fn new(m: usize, n: usize) -> Option<Self> {
        if m >= 1 && n >= 1 {
            Some(SuperDims { m, n })
        } else {
            None
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// m + n.
    pub fn total(&self) -> usize {
        self.m + self.n
    }

    /// Parity of the basis index `i` (1-based): 0 for i <= m, 1 above.
    pub fn parity(&self, i: usize) -> u8 {
        debug_assert!(i >= 1 && i <= self.total());
        if i <= self.m {
            0
        } else {
            1
        }
    }

    /// Parity of the generator E_ij.
    pub fn generator_parity(&self, i: usize, j: usize) -> u8 {
        (self.parity(i) + self.parity(j)) % 2
    }
}

/// A covariant highest weight (lambda_1..lambda_m | lambda_{m+1}..lambda_{m+n}):
/// all entries nonnegative integers, both blocks weakly decreasing, and the
/// number of nonzero odd entries at most lambda_m.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CovariantWeight {
    dims: SuperDims,
    even: Vec<i64>,
    odd: Vec<i64>,
}

impl CovariantWeight {
    /// Validates a candidate weight.
    pub fn new(dims: SuperDims, even: Vec<i64>, odd: Vec<i64>) -> Result<Self> {
        if even.len() != dims.m() || odd.len() != dims.n() {
            return Err(Error::NotCovariant(format!(
                "expected {} even and {} odd entries, got {} and {}",
                dims.m(),
                dims.n(),
                even.len(),
                odd.len()
            )));
        }
        if even.iter().chain(odd.iter()).any(|&x| x < 0) {
            return Err(Error::NotCovariant("negative weight entry".into()));
        }
        if even.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(format!(
                "even block {even:?} not weakly decreasing"
            )));
        }
        if odd.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(format!(
                "odd block {odd:?} not weakly decreasing"
            )));
        }
        let ell = odd.iter().filter(|&&x| x > 0).count() as i64;
        let last_even = *even.last().expect("m >= 1");
        if ell > last_even {
            return Err(Error::NotCovariant(format!(
                "{ell} nonzero odd entries exceed lambda_m = {last_even}"
            )));
        }
        Ok(CovariantWeight { dims, even, odd })
    }

    pub fn dims(&self) -> SuperDims {
        self.dims
    }

    pub fn even(&self) -> &[i64] {
        &self.even
    }

    pub fn odd(&self) -> &[i64] {
        &self.odd
    }

    /// Component lambda_i, 1-based over the full range 1..=m+n.
    pub fn component(&self, i: usize) -> i64 {
        if i <= self.dims.m() {
            self.even[i - 1]
        } else {
            self.odd[i - 1 - self.dims.m()]
        }
    }

    /// Number of nonzero odd components.
    pub fn ell(&self) -> usize {
        self.odd.iter().filter(|&&x| x > 0).count()
    }

    /// l_i = lambda_i - i + 1 for i = 1..m.
    pub fn l_shift(&self, i: usize) -> i64 {
        debug_assert!(i >= 1 && i <= self.dims.m());
        self.even[i - 1] - i as i64 + 1
    }

    /// Total number of boxes of the associated diagram.
    pub fn size(&self) -> i64 {
        self.even.iter().sum::<i64>() + self.odd.iter().sum::<i64>()
    }

    /// The Young diagram whose first m rows are the even block and whose
    /// first `ell` columns have heights lambda_{m+i} + m.
    pub fn gamma_diagram(&self) -> YoungDiagram {
        let m = self.dims.m();
        let mut rows: Vec<i64> = self.even.clone();
        // Row m+t of the diagram consists of the columns taller than m+t-1,
        // i.e. the odd entries that are >= t.
        let mut t = 1i64;
        loop {
            let len = self.odd.iter().filter(|&&x| x >= t).count() as i64;
            if len == 0 {
                break;
            }
            rows.push(len);
            t += 1;
        }
        let d = YoungDiagram::new(rows).expect("covariance guarantees a partition");
        debug_assert_eq!(d.size(), self.size());
        debug_assert!(d.rows().len() >= m || self.odd.iter().all(|&x| x == 0));
        d
    }

    /// Parses `"a,b,...|c,d,..."`.
    pub fn parse(dims: SuperDims, text: &str) -> Result<Self> {
        let (e, o) = text
            .split_once('|')
            .ok_or_else(|| Error::NotCovariant(format!("missing '|' in weight {text:?}")))?;
        let parse_block = |s: &str| -> Result<Vec<i64>> {
            let s = s.trim();
            if s.is_empty() {
                return Ok(vec![]);
            }
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::NotCovariant(format!("bad weight entry {t:?}")))
                })
                .collect()
        };
        CovariantWeight::new(dims, parse_block(e)?, parse_block(o)?)
    }
}

impl fmt::Display for CovariantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.even.iter().map(|x| x.to_string()).collect();
        let o: Vec<String> = self.odd.iter().map(|x| x.to_string()).collect();
        write!(f, "({}|{})", e.join(","), o.join(","))
    }
}

/// An (m+n)-tuple of nonnegative entry counts: the E_ss eigenvalues of a
/// weight vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Renders as `(a,b,...|c,...)` given the split point m.
    pub fn render(&self, m: usize) -> String {
        let e: Vec<String> = self.0[..m].iter().map(|x| x.to_string()).collect();
        let o: Vec<String> = self.0[m..].iter().map(|x| x.to_string()).collect();
        format!("({}|{})", e.join(","), o.join(","))
    }
}

/// All covariant weights of gl(m|n) whose diagram has at most `max_boxes`
/// boxes, in lexicographic order. Used by test sweeps and the verifier.
pub fn enumerate_covariant_weights(dims: SuperDims, max_boxes: i64) -> Vec<CovariantWeight> {
    let mut out = Vec::new();
    let mut even = vec![0i64; dims.m()];
    let mut odd = vec![0i64; dims.n()];
    fn fill(
        dims: SuperDims,
        max_boxes: i64,
        even: &mut Vec<i64>,
        odd: &mut Vec<i64>,
        pos: usize,
        used: i64,
        out: &mut Vec<CovariantWeight>,
    ) {
        let total = dims.total();
        if pos == total {
            if let Ok(w) = CovariantWeight::new(dims, even.clone(), odd.clone()) {
                out.push(w);
            }
            return;
        }
        let upper = if pos == 0 || pos == dims.m() {
            max_boxes - used
        } else {
            let prev = if pos <= dims.m() {
                even[pos - 1]
            } else {
                odd[pos - dims.m() - 1]
            };
            prev.min(max_boxes - used)
        };
        for v in 0..=upper {
            if pos < dims.m() {
                even[pos] = v;
            } else {
                odd[pos - dims.m()] = v;
            }
            fill(dims, max_boxes, even, odd, pos + 1, used + v, out);
        }
        if pos < dims.m() {
            even[pos] = 0;
        } else {
            odd[pos - dims.m()] = 0;
        }
    }
    fill(dims, max_boxes, &mut even, &mut odd, 0, 0, &mut out);
    out
}
