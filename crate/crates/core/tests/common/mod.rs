//! Independent oracles for integration tests. Nothing here calls the
//! enumerators it is used to check.

#![allow(dead_code)]

use std::collections::BTreeMap;

use fusionkit::combinatorics::Partition;

/// `n choose r` by Pascal's triangle.
pub fn binomial(n: usize, r: usize) -> usize {
    let mut row = vec![1usize];
    for _ in 0..n {
        let mut next = vec![1usize; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row.get(r).copied().unwrap_or(0)
}

/// Cells `(row, col)` of `outer / inner`, rows bottom-up.
pub fn cells(outer: &[usize], inner: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (r, &len) in outer.iter().enumerate() {
        let start = inner.get(r).copied().unwrap_or(0);
        for c in start..len {
            out.push((r, c));
        }
    }
    out
}

/// Counts fillings of `outer / inner` with the given content that are
/// semistandard and, when `ctx = Some((n, k))`, satisfy the wrap-around
/// condition. Tries every function from cells to entries.
pub fn brute_kostka(outer: &[usize], inner: &[usize], content: &[usize], ctx: Option<(usize, usize)>) -> u64 {
    let cs = cells(outer, inner);
    let r = content.len();
    if cs.len() != content.iter().sum::<usize>() {
        return 0;
    }
    if cs.is_empty() {
        return 1;
    }
    let total = (r as u64).pow(cs.len() as u32);
    let mut count = 0;
    for code in 0..total {
        let mut fill = BTreeMap::new();
        let mut x = code;
        for &cell in &cs {
            fill.insert(cell, (x % r as u64) as usize + 1);
            x /= r as u64;
        }
        let mut used = vec![0; r];
        for &v in fill.values() {
            used[v - 1] += 1;
        }
        if used != content {
            continue;
        }
        let ok_rows = fill.iter().all(|(&(row, col), &v)| {
            col == 0 || fill.get(&(row, col - 1)).is_none_or(|&left| left <= v)
        });
        let ok_cols = fill.iter().all(|(&(row, col), &v)| {
            row == 0 || fill.get(&(row - 1, col)).is_none_or(|&below| below < v)
        });
        let ok_cyl = match ctx {
            None => true,
            Some((n, k)) => {
                let top_len = outer.get(n - 1).copied().unwrap_or(0);
                (1..=top_len).all(|p| {
                    match (fill.get(&(n - 1, p - 1)), fill.get(&(0, k + p - 1))) {
                        (Some(a), Some(b)) => a < b,
                        _ => true,
                    }
                })
            }
        };
        if ok_rows && ok_cols && ok_cyl {
            count += 1;
        }
    }
    count
}

/// Weyl dimension formula for the `sl_N` module with highest weight given
/// by the partition `p` (length at most `N`).
pub fn weyl_dimension(p: &Partition, n: usize) -> u64 {
    let l = p.padded(n);
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..n {
        for j in i + 1..n {
            num *= (l[i] - l[j] + j - i) as u128;
            den *= (j - i) as u128;
        }
    }
    (num / den) as u64
}

/// The `A_1` fusion rule written as the truncated Clebsch-Gordan series:
/// `c` runs over `|a-b|, |a-b|+2, ..., min(a+b, 2k-a-b)`.
pub fn a1_fusion_series(a: usize, b: usize, k: usize) -> Vec<usize> {
    let top = (a + b).min(2 * k - a - b);
    (a.abs_diff(b)..=top).step_by(2).collect()
}

/// All tuples of `Z_n^k`.
pub fn all_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

/// Raw orbit coefficients from the definition: equations `â + y = z` over
/// all `y` in the orbit of `b`, two equations identified when a permutation
/// fixing `â` carries one `y` to the other.
pub fn definitional_raw_product(n: usize, a: &[usize], b: &[usize]) -> BTreeMap<Vec<usize>, i64> {
    let k = a.len();
    let mut a_hat = a.to_vec();
    a_hat.sort_unstable_by(|x, y| y.cmp(x));
    let mut b_sorted = b.to_vec();
    b_sorted.sort_unstable();
    let ys: Vec<Vec<usize>> = all_tuples(n, k)
        .into_iter()
        .filter(|y| {
            let mut s = y.clone();
            s.sort_unstable();
            s == b_sorted
        })
        .collect();
    let stabilizer: Vec<Vec<usize>> = permutations(k)
        .into_iter()
        .filter(|s| (0..k).all(|i| a_hat[s[i]] == a_hat[i]))
        .collect();
    let mut representatives: Vec<Vec<usize>> = Vec::new();
    for y in ys {
        let redundant = representatives.iter().any(|r| {
            stabilizer
                .iter()
                .any(|s| (0..k).all(|i| y[s[i]] == r[i]))
        });
        if !redundant {
            representatives.push(y);
        }
    }
    let mut out = BTreeMap::new();
    for y in representatives {
        let mut z: Vec<usize> = (0..k).map(|i| (a_hat[i] + y[i]) % n).collect();
        z.sort_unstable_by(|x, y| y.cmp(x));
        *out.entry(z).or_insert(0) += 1;
    }
    out
}

pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}
