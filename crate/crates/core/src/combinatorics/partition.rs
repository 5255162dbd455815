use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition in canonical form: weakly decreasing positive parts.
///
/// Trailing zeros are trimmed on construction, so `[3,2,1,0]` and `[3,2,1]`
/// are the same value. Rows are numbered from 1; row 1 is the longest.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The rectangle `(cols^rows)`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Self {
            parts: vec![cols; rows],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// Parts padded with zeros to length `n`; `n` must be at least `len()`.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        let mut v = self.parts.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.parts[i] >= other.parts[i])
    }

    pub fn fits_in_box(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.first() <= cols
    }

    /// The transposed diagram: `conj_j = #{ i : p_i >= j }`.
    pub fn conjugate(&self) -> Partition {
        let width = self.first();
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Whether `self` and `other` differ by whole columns of height `n`.
    ///
    /// Both must have length at most `n`; otherwise this returns false.
    pub fn equivalent(&self, other: &Partition, n: usize) -> bool {
        if self.len() > n || other.len() > n {
            return false;
        }
        let a = self.padded(n);
        let b = other.padded(n);
        (0..n - 1).all(|i| a[i] - a[i + 1] == b[i] - b[i + 1])
    }

    /// Strip all columns of height `n`: subtract `p_n` from every part.
    pub fn reduce_full_columns(&self, n: usize) -> Result<Partition> {
        if self.len() > n {
            return Err(Error::TooLarge {
                what: "partition length",
                got: self.len(),
                limit: n,
            });
        }
        let base = self.part(n - 1);
        Partition::new(self.parts.iter().map(|&p| p - base).collect())
    }

    /// All partitions inside the `rows x cols` box, in graded-lex order.
    pub fn all_in_box(rows: usize, cols: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(rows);
        fill_box(rows, cols, &mut current, &mut out);
        out.sort();
        out
    }

    /// All partitions `nu` with `nu ⊇ self`, `len(nu) <= rows` and
    /// `|nu| - |self| = added`; `nu_1` is bounded by `max_first`.
    pub(crate) fn extensions(&self, rows: usize, max_first: usize, added: usize) -> Vec<Partition> {
        let base = self.padded(rows);
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(rows);
        extend_rows(&base, max_first, added, &mut current, &mut out);
        out
    }
}

fn fill_box(rows: usize, cols: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    out.push(Partition {
        parts: current.clone(),
    });
    if current.len() == rows {
        return;
    }
    let bound = current.last().copied().unwrap_or(cols);
    for p in 1..=bound {
        current.push(p);
        fill_box(rows, cols, current, out);
        current.pop();
    }
}

fn extend_rows(
    base: &[usize],
    upper: usize,
    remaining: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    let row = current.len();
    if row == base.len() {
        if remaining == 0 {
            let parts = current.iter().copied().filter(|&p| p > 0).collect();
            out.push(Partition { parts });
        }
        return;
    }
    let lo = base[row];
    if lo > upper {
        return;
    }
    let hi = upper.min(lo + remaining);
    for v in lo..=hi {
        current.push(v);
        extend_rows(base, v, remaining - (v - lo), current, out);
        current.pop();
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Graded lexicographic order: by number of boxes, then lexicographically.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// Shorthand for partition literals: `part![3, 2, 1]`.
#[macro_export]
macro_rules! part {
    ($($x:expr),* $(,)?) => {
        $crate::combinatorics::Partition::new(vec![$($x),*]).expect("partition literal")
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_trims_zeros() {
        assert_eq!(part![3, 2, 1, 0], part![3, 2, 1]);
        assert_eq!(part![0], Partition::empty());
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(part![5, 4, 1, 1].conjugate(), part![4, 2, 2, 2, 1]);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(part![3, 3, 2].conjugate(), part![3, 3, 2]);
    }

    #[test]
    fn conjugate_is_an_involution_in_a_six_by_six_box() {
        for p in Partition::all_in_box(6, 6) {
            assert_eq!(p.conjugate().conjugate(), p);
        }
    }

    #[test]
    fn equivalence_examples() {
        assert!(part![5, 4, 4, 3].equivalent(&part![2, 1, 1, 0], 4));
        assert!(part![2, 1].equivalent(&part![2, 1], 3));
        assert!(!part![3, 1].equivalent(&part![3, 2], 2));
    }

    #[test]
    fn reduce_full_columns_examples() {
        assert_eq!(part![5, 4, 4, 3].reduce_full_columns(4).unwrap(), part![2, 1, 1]);
        assert_eq!(
            Partition::rectangle(4, 3).reduce_full_columns(4).unwrap(),
            Partition::empty()
        );
        assert_eq!(part![3, 3, 2].reduce_full_columns(3).unwrap(), part![1, 1]);
        assert!(part![1, 1, 1].reduce_full_columns(2).is_err());
    }

    #[test]
    fn equivalence_is_an_equivalence_relation_and_reduction_is_canonical() {
        let n = 3;
        let all: Vec<_> = Partition::all_in_box(n, 4);
        for p in &all {
            assert!(p.equivalent(p, n));
            let r = p.reduce_full_columns(n).unwrap();
            assert!(r.len() < n);
            assert!(p.equivalent(&r, n));
            for q in &all {
                assert_eq!(p.equivalent(q, n), q.equivalent(p, n));
                let same_rep = r == q.reduce_full_columns(n).unwrap();
                assert_eq!(p.equivalent(q, n), same_rep);
            }
        }
    }

    #[test]
    fn box_enumeration_is_graded_lex() {
        let b = Partition::all_in_box(1, 3);
        assert_eq!(b, vec![part![], part![1], part![2], part![3]]);
        let b = Partition::all_in_box(2, 2);
        assert_eq!(
            b,
            vec![part![], part![1], part![1, 1], part![2], part![2, 1], part![2, 2]]
        );
    }

    #[test]
    fn extensions_respect_bounds() {
        let ext = part![2, 1].extensions(3, 3, 2);
        assert!(ext.iter().all(|p| p.size() == 5 && p.first() <= 3 && p.len() <= 3));
        assert!(ext.contains(&part![3, 2]));
        assert!(ext.contains(&part![2, 2, 1]));
        assert!(!ext.contains(&part![4, 1]));
    }
}
