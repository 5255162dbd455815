//! Expansion of `x · det(h_{μ_i - i + j})` by row-wise Laplace recursion.

use crate::combinatorics::Partition;
use crate::error::Result;
use crate::expansion::Expansion;

/// Computes `start · det(h_{μ_i - i + j})_{1 <= i,j <= l(μ)}` where `mul_h`
/// multiplies an expansion by `h_m`. Entries with `m < 0` or `m > max_h`
/// vanish and `h_0 = 1`.
///
/// `table[C]` holds the signed sum over bijections from rows `1..=|C|` onto
/// the column set `C`, with the factors applied in row order. Each column set
/// is computed once.
pub(crate) fn expand_h_determinant<K: Ord + Clone>(
    start: Expansion<K>,
    mu: &Partition,
    max_h: usize,
    mut mul_h: impl FnMut(&Expansion<K>, usize) -> Result<Expansion<K>>,
) -> Result<Expansion<K>> {
    let n = mu.len();
    if n == 0 {
        return Ok(start);
    }
    let full = (1usize << n) - 1;
    let mut table: Vec<Expansion<K>> = vec![Expansion::new(); full + 1];
    table[0] = start;

    let mut masks: Vec<usize> = (1..=full).collect();
    masks.sort_by_key(|m| m.count_ones());
    for mask in masks {
        let r = mask.count_ones() as i64;
        let row_part = mu.part(r as usize - 1) as i64;
        let mut acc = Expansion::new();
        for j in 0..n {
            if mask & (1 << j) == 0 {
                continue;
            }
            let prev = mask ^ (1 << j);
            if table[prev].is_empty() {
                continue;
            }
            let m = row_part - r + (j as i64 + 1);
            if m < 0 || m as u64 > max_h as u64 {
                continue;
            }
            let inversions = (prev >> (j + 1)).count_ones();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            let term = if m == 0 {
                table[prev].clone()
            } else {
                mul_h(&table[prev], m as usize)?
            };
            acc.add_scaled(&term, sign)?;
        }
        table[mask] = acc;
    }
    Ok(std::mem::take(&mut table[full]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    /// Multiplying monomials in `h_1, h_2, ...` records exponent vectors.
    fn monomial_h(e: &Expansion<Vec<usize>>, m: usize) -> Result<Expansion<Vec<usize>>> {
        e.try_map_keys(|key| {
            let mut key = key.clone();
            if key.len() < m {
                key.resize(m, 0);
            }
            key[m - 1] += 1;
            Ok(key)
        })
    }

    #[test]
    fn two_by_two_determinant() {
        // S_(2,1) = h_2 h_1 - h_3
        let got = expand_h_determinant(
            Expansion::singleton(Vec::new()),
            &part![2, 1],
            usize::MAX,
            monomial_h,
        )
        .unwrap();
        let want: Expansion<Vec<usize>> =
            [(vec![1, 1], 1), (vec![0, 0, 1], -1)].into_iter().collect();
        assert_eq!(got, want);
    }

    #[test]
    fn column_determinant() {
        // S_(1,1,1) = h_1^3 - 2 h_2 h_1 + h_3
        let got = expand_h_determinant(
            Expansion::singleton(Vec::new()),
            &part![1, 1, 1],
            usize::MAX,
            monomial_h,
        )
        .unwrap();
        let want: Expansion<Vec<usize>> =
            [(vec![3], 1), (vec![1, 1], -2), (vec![0, 0, 1], 1)].into_iter().collect();
        assert_eq!(got, want);
    }

    #[test]
    fn truncation_drops_large_indices() {
        let got = expand_h_determinant(
            Expansion::singleton(Vec::new()),
            &part![2, 1],
            2,
            monomial_h,
        )
        .unwrap();
        assert_eq!(got, Expansion::singleton(vec![1, 1]));
    }
}
