use std::fmt;

use crate::context::FusionContext;
use crate::error::{Error, Result};

use super::Partition;

/// The skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.parts().to_vec(),
                inner: inner.parts().to_vec(),
            });
        }
        Ok(Self { outer, inner })
    }

    /// A straight shape (empty inner partition).
    pub fn straight(outer: Partition) -> Self {
        Self {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of rows of the outer shape.
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Column range `[start, end)` (0-based) of skew row `i`.
    pub fn row_span(&self, i: usize) -> (usize, usize) {
        (self.inner.part(i), self.outer.part(i))
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        let (start, end) = self.row_span(row);
        start <= col && col < end
    }

    /// At most one box in each column.
    pub fn is_row_strip(&self, m: usize) -> bool {
        self.size() == m && (0..self.rows()).all(|i| self.outer.part(i + 1) <= self.inner.part(i))
    }

    /// At most one box in each row.
    pub fn is_column_strip(&self, m: usize) -> bool {
        self.size() == m && (0..self.rows()).all(|i| self.outer.part(i) - self.inner.part(i) <= 1)
    }

    /// A row strip with the wrap-around bound `outer_1 - inner_N <= k`.
    ///
    /// The outer shape must have at most `N` rows; longer shapes are never
    /// cylindric.
    pub fn is_cylindric_row_strip(&self, m: usize, ctx: &FusionContext) -> bool {
        let n = ctx.n();
        if self.outer.len() > n {
            return false;
        }
        let first = self.outer.first();
        let inner_last = self.inner.part(n - 1);
        self.is_row_strip(m) && first - inner_last <= ctx.k()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn skew(outer: Partition, inner: Partition) -> SkewShape {
        SkewShape::new(outer, inner).unwrap()
    }

    #[test]
    fn rejects_non_contained_inner() {
        assert!(SkewShape::new(part![2, 1], part![3]).is_err());
        assert!(SkewShape::new(part![2], part![1, 1]).is_err());
    }

    #[test]
    fn strip_examples() {
        let s = skew(part![4, 3, 1, 1], part![3, 2, 1, 0]);
        assert!(s.is_row_strip(3));
        assert!(s.is_column_strip(3));
        assert!(!s.is_row_strip(2));

        let e = skew(part![3, 1], part![3, 1]);
        assert!(e.is_row_strip(0));
        assert!(e.is_column_strip(0));

        let s = skew(part![5, 1], part![3, 1]);
        assert!(s.is_row_strip(2));
        assert!(!s.is_column_strip(2));
    }

    #[test]
    fn cylindric_strip_examples() {
        let s = skew(part![4, 3, 2], part![3, 2, 1]);
        assert!(s.is_cylindric_row_strip(3, &FusionContext::new(3, 3).unwrap()));
        assert!(s.is_cylindric_row_strip(3, &FusionContext::new(3, 7).unwrap()));
        assert!(!s.is_cylindric_row_strip(3, &FusionContext::new(3, 2).unwrap()));

        let e = skew(part![2, 1], part![2, 1]);
        assert!(e.is_cylindric_row_strip(0, &FusionContext::new(3, 2).unwrap()));
    }
}
