//! Semistandard fillings of skew shapes.
//!
//! Rows are stored bottom-up as drawn in the French convention: row 0 is the
//! longest row, entries weakly increase to the right and strictly increase
//! going up a column (from row `i` to row `i + 1`).

use std::fmt;

use crate::context::FusionContext;
use crate::error::{Error, Result};

use super::SkewShape;

/// Content of a tableau: `counts[i]` is the number of entries equal to `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Content {
    counts: Vec<usize>,
}

impl Content {
    pub fn new(mut counts: Vec<usize>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Self { counts }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Largest entry value that occurs (0 for the empty content).
    pub fn max_entry(&self) -> usize {
        self.counts.len()
    }
}

impl fmt::Display for Content {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// A semistandard filling of a skew shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Builds a tableau from per-row entries (only the skew cells of each row).
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        let ok_lengths = rows.len() == shape.rows()
            && rows.iter().enumerate().all(|(i, r)| {
                let (s, e) = shape.row_span(i);
                r.len() == e - s
            });
        if !ok_lengths {
            return Err(Error::Format(format!("row lengths do not match shape {shape}")));
        }
        let t = Self { shape, rows };
        if !t.is_semistandard() {
            return Err(Error::Format("filling is not semistandard".into()));
        }
        Ok(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Entry at 0-based `(row, col)`, `None` outside the skew cells.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        if !self.shape.contains_cell(row, col) {
            return None;
        }
        let start = self.shape.inner().part(row);
        Some(self.rows[row][col - start])
    }

    pub fn content(&self) -> Content {
        let mut counts = Vec::new();
        for &v in self.rows.iter().flatten() {
            if counts.len() < v {
                counts.resize(v, 0);
            }
            counts[v - 1] += 1;
        }
        Content::new(counts)
    }

    fn is_semistandard(&self) -> bool {
        for (row, entries) in self.rows.iter().enumerate() {
            let start = self.shape.inner().part(row);
            for (j, &v) in entries.iter().enumerate() {
                let col = start + j;
                if v == 0 {
                    return false;
                }
                if j > 0 && entries[j - 1] > v {
                    return false;
                }
                if row > 0 {
                    if let Some(below) = self.entry(row - 1, col) {
                        if below >= v {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// The wrap-around condition: for each `1 <= p <= outer_N`, the entry in
    /// row `N`, column `p` is strictly less than the entry in row 1, column
    /// `k + p`. Pairs where either cell is not a skew cell impose nothing.
    pub fn is_cylindric(&self, ctx: &FusionContext) -> bool {
        let n = ctx.n();
        let top = n - 1;
        let last = self.shape.outer().part(top);
        (1..=last).all(|p| {
            match (self.entry(top, p - 1), self.entry(0, ctx.k() + p - 1)) {
                (Some(upper), Some(lower)) => upper < lower,
                _ => true,
            }
        })
    }
}

/// Visit every semistandard tableau of `shape` with entries in `1..=alphabet`,
/// optionally restricted to an exact content. Cells are filled row by row,
/// left to right, trying smaller entries first.
pub fn for_each_tableau(
    shape: &SkewShape,
    alphabet: usize,
    content: Option<&Content>,
    mut visit: impl FnMut(&Tableau),
) {
    let rows = (0..shape.rows())
        .map(|i| {
            let (s, e) = shape.row_span(i);
            vec![0; e - s]
        })
        .collect();
    let mut t = Tableau {
        shape: shape.clone(),
        rows,
    };
    let cells: Vec<(usize, usize)> = (0..shape.rows())
        .flat_map(|i| {
            let (s, e) = shape.row_span(i);
            (s..e).map(move |c| (i, c))
        })
        .collect();
    let mut remaining = content.map(|c| c.counts().to_vec());
    let alphabet = content.map_or(alphabet, |c| c.max_entry());
    fill(&mut t, &cells, 0, alphabet, &mut remaining, &mut visit);
}

fn fill(
    t: &mut Tableau,
    cells: &[(usize, usize)],
    idx: usize,
    alphabet: usize,
    remaining: &mut Option<Vec<usize>>,
    visit: &mut impl FnMut(&Tableau),
) {
    let Some(&(row, col)) = cells.get(idx) else {
        visit(t);
        return;
    };
    let start = t.shape.inner().part(row);
    let mut lo = 1;
    if col > start {
        lo = lo.max(t.rows[row][col - start - 1]);
    }
    if row > 0 {
        if let Some(below) = t.entry(row - 1, col) {
            lo = lo.max(below + 1);
        }
    }
    for v in lo..=alphabet {
        if let Some(rem) = remaining.as_mut() {
            if rem[v - 1] == 0 {
                continue;
            }
            rem[v - 1] -= 1;
        }
        t.rows[row][col - start] = v;
        fill(t, cells, idx + 1, alphabet, remaining, visit);
        if let Some(rem) = remaining.as_mut() {
            rem[v - 1] += 1;
        }
    }
    t.rows[row][col - start] = 0;
}

fn check_sizes(shape: &SkewShape, content: &Content) -> Result<()> {
    if shape.size() != content.total() {
        return Err(Error::SizeMismatch {
            shape: shape.size(),
            content: content.total(),
        });
    }
    Ok(())
}

/// Skew Kostka number: semistandard tableaux of `shape` with the given content.
pub fn skew_kostka(shape: &SkewShape, content: &Content) -> Result<u64> {
    check_sizes(shape, content)?;
    let mut count = 0u64;
    for_each_tableau(shape, content.max_entry(), Some(content), |_| count += 1);
    Ok(count)
}

/// The `(N,k)`-fusion skew Kostka number: cylindric tableaux of `shape`
/// with the given content.
pub fn count_cylindric_tableaux(
    shape: &SkewShape,
    content: &Content,
    ctx: &FusionContext,
) -> Result<u64> {
    check_sizes(shape, content)?;
    if shape.rows() > ctx.n() {
        return Err(Error::TooLarge {
            what: "outer partition length",
            got: shape.rows(),
            limit: ctx.n(),
        });
    }
    let mut count = 0u64;
    for_each_tableau(shape, content.max_entry(), Some(content), |t| {
        if t.is_cylindric(ctx) {
            count += 1;
        }
    });
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Partition;
    use crate::part;

    fn shape(outer: Partition, inner: Partition) -> SkewShape {
        SkewShape::new(outer, inner).unwrap()
    }

    fn ctx(n: usize, k: usize) -> FusionContext {
        FusionContext::new(n, k).unwrap()
    }

    #[test]
    fn cylindric_kostka_examples() {
        let s = shape(part![4, 2, 2, 1], part![3, 2, 1]);
        let eps = Content::new(vec![2, 1]);
        assert_eq!(count_cylindric_tableaux(&s, &eps, &ctx(4, 3)).unwrap(), 1);
        assert_eq!(count_cylindric_tableaux(&s, &eps, &ctx(4, 4)).unwrap(), 3);
        assert_eq!(skew_kostka(&s, &eps).unwrap(), 3);

        let s = shape(part![3, 3, 2, 1], part![3, 2, 1]);
        assert_eq!(count_cylindric_tableaux(&s, &eps, &ctx(4, 3)).unwrap(), 3);
    }

    #[test]
    fn size_mismatch_is_an_error() {
        let s = shape(part![2, 1], part![1]);
        let eps = Content::new(vec![1]);
        assert_eq!(
            skew_kostka(&s, &eps),
            Err(Error::SizeMismatch { shape: 2, content: 1 })
        );
    }

    #[test]
    fn outer_longer_than_n_is_rejected() {
        let s = shape(part![1, 1, 1], part![]);
        let eps = Content::new(vec![1, 1, 1]);
        assert!(count_cylindric_tableaux(&s, &eps, &ctx(2, 3)).is_err());
    }

    #[test]
    fn enumerated_tableaux_are_semistandard_with_requested_content() {
        let s = shape(part![3, 2, 1], part![1]);
        let eps = Content::new(vec![2, 2, 1]);
        let mut seen = Vec::new();
        for_each_tableau(&s, 3, Some(&eps), |t| {
            assert_eq!(t.content(), eps);
            let rebuilt = Tableau::new(t.shape().clone(), t.rows.clone()).unwrap();
            seen.push(rebuilt);
        });
        assert!(!seen.is_empty());
        seen.dedup();
        assert_eq!(seen.len() as u64, skew_kostka(&s, &eps).unwrap());
    }

    #[test]
    fn tableau_validation() {
        let s = SkewShape::straight(part![2, 1]);
        assert!(Tableau::new(s.clone(), vec![vec![1, 1], vec![2]]).is_ok());
        assert!(Tableau::new(s.clone(), vec![vec![1, 1], vec![1]]).is_err());
        assert!(Tableau::new(s.clone(), vec![vec![2, 1], vec![3]]).is_err());
        assert!(Tableau::new(s, vec![vec![1], vec![2]]).is_err());
    }

    #[test]
    fn straight_shape_count_for_adjoint_of_sl3() {
        let s = SkewShape::straight(part![2, 1]);
        let mut n = 0;
        for_each_tableau(&s, 3, None, |_| n += 1);
        assert_eq!(n, 8);
    }
}
