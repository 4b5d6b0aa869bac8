//! Young diagrams and skew diagrams.

use serde::{Deserialize, Serialize};

/// A partition drawn as a Young diagram. Trailing zero rows are permitted
/// and ignored by equality-sensitive accessors; `normalize` drops them.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct YoungDiagram {
    rows: Vec<i64>,
}

impl YoungDiagram {
    /// Builds a diagram from row lengths; rows must be weakly decreasing
    /// and nonnegative.
    pub fn new(rows: Vec<i64>) -> Option<Self> {
        if rows.iter().any(|&r| r < 0) {
            return None;
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(YoungDiagram { rows })
    }

    pub fn empty() -> Self {
        YoungDiagram { rows: vec![] }
    }

    /// Row lengths including any trailing zeros.
    pub fn rows(&self) -> &[i64] {
        &self.rows
    }

    /// Length of row `i` (1-based); zero outside the diagram.
    pub fn row(&self, i: usize) -> i64 {
        if i >= 1 && i <= self.rows.len() {
            self.rows[i - 1]
        } else {
            0
        }
    }

    /// Height of column `j` (1-based); zero outside the diagram.
    pub fn col(&self, j: usize) -> i64 {
        self.rows.iter().filter(|&&r| r >= j as i64).count() as i64
    }

    /// Number of rows with at least one box.
    pub fn height(&self) -> usize {
        self.rows.iter().filter(|&&r| r > 0).count()
    }

    /// Length of the first row.
    pub fn width(&self) -> i64 {
        self.rows.first().copied().unwrap_or(0)
    }

    /// Total number of boxes.
    pub fn size(&self) -> i64 {
        self.rows.iter().sum()
    }

    /// True if box `(i, j)` (1-based) lies in the diagram.
    pub fn contains(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && self.row(i) >= j as i64
    }

    /// Conjugate diagram (columns become rows).
    pub fn conjugate(&self) -> YoungDiagram {
        let w = self.width();
        let rows = (1..=w as usize).map(|j| self.col(j)).collect();
        YoungDiagram { rows }
    }

    /// Drops trailing zero rows.
    pub fn normalize(&self) -> YoungDiagram {
        let mut rows = self.rows.clone();
        while rows.last() == Some(&0) {
            rows.pop();
        }
        YoungDiagram { rows }
    }

    /// True if `inner` fits inside `self` row by row.
    pub fn contains_diagram(&self, inner: &YoungDiagram) -> bool {
        (1..=inner.rows.len()).all(|i| inner.row(i) <= self.row(i))
    }
}

/// A skew diagram `outer/inner`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewDiagram {
    pub outer: YoungDiagram,
    pub inner: YoungDiagram,
}

impl SkewDiagram {
    pub fn new(outer: YoungDiagram, inner: YoungDiagram) -> Option<Self> {
        if outer.contains_diagram(&inner) {
            Some(SkewDiagram { outer, inner })
        } else {
            None
        }
    }

    /// Length of row `i` of the skew shape.
    pub fn row_len(&self, i: usize) -> i64 {
        self.outer.row(i) - self.inner.row(i)
    }

    /// Content `c(box) = j - i` of the leftmost box of row `i`, if the row
    /// is nonempty.
    pub fn leftmost_content(&self, i: usize) -> Option<i64> {
        if self.row_len(i) > 0 {
            Some(self.inner.row(i) + 1 - i as i64)
        } else {
            None
        }
    }

    pub fn size(&self) -> i64 {
        self.outer.size() - self.inner.size()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_increasing_rows() {
        assert!(YoungDiagram::new(vec![1, 2]).is_none());
        assert!(YoungDiagram::new(vec![2, -1]).is_none());
        assert!(YoungDiagram::new(vec![3, 1, 0, 0]).is_some());
    }

    #[test]
    fn conjugate_involution() {
        let d = YoungDiagram::new(vec![10, 7, 4, 3, 2, 1, 1]).unwrap();
        assert_eq!(d.conjugate().conjugate(), d.normalize());
        let e = YoungDiagram::new(vec![3, 1]).unwrap();
        assert_eq!(e.conjugate().rows(), &[2, 1, 1]);
    }

    #[test]
    fn skew_rows_and_contents() {
        let outer = YoungDiagram::new(vec![2, 1]).unwrap();
        let inner = YoungDiagram::new(vec![1]).unwrap();
        let sk = SkewDiagram::new(outer, inner).unwrap();
        assert_eq!(sk.row_len(1), 1);
        assert_eq!(sk.row_len(2), 1);
        assert_eq!(sk.leftmost_content(1), Some(1));
        assert_eq!(sk.leftmost_content(2), Some(-1));
        assert_eq!(sk.size(), 2);
    }
}
