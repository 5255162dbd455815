use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::expansion::Expansion;

use super::{OrbitRep, Tuple};

/// Formal sum of orbits.
pub type OrbitExpansion = Expansion<OrbitRep>;

/// Largest `k` accepted by [`m_coefficient_bruteforce`].
pub const MAX_BRUTEFORCE_K: usize = 8;

pub(crate) fn check_same_space(a: &OrbitRep, b: &OrbitRep) -> Result<()> {
    if a.modulus() != b.modulus() || a.k() != b.k() {
        return Err(Error::ContextMismatch(format!(
            "{a} in Z_{}^{} vs {b} in Z_{}^{}",
            a.modulus(),
            a.k(),
            b.modulus(),
            b.k()
        )));
    }
    Ok(())
}

pub fn standard_form(t: &Tuple) -> OrbitRep {
    t.standard_form()
}

/// All distinct tuples of the orbit; refuses `k > 12`.
pub fn orbit_elements(o: &OrbitRep) -> Result<Vec<Tuple>> {
    o.elements()
}

/// The raw product `[a] x [b]`.
///
/// With `x = â` fixed, the equations `â + y = z` for `y ∈ [b]` fall into
/// classes determined by how many of each residue `y` places in each
/// constant block of `â`. Every such distribution is one non-redundant
/// equation and contributes `[z]` once.
pub fn raw_orbit_product(a: &OrbitRep, b: &OrbitRep) -> Result<OrbitExpansion> {
    check_same_space(a, b)?;
    let n = a.modulus();
    let mut search = Distribution {
        blocks: a.counts(),
        remaining: b.counts(),
        z_counts: vec![0; n],
        out: OrbitExpansion::new(),
    };
    let first = search.blocks[0];
    search.fill(0, 0, first)?;
    Ok(search.out)
}

struct Distribution {
    blocks: Vec<usize>,
    remaining: Vec<usize>,
    z_counts: Vec<usize>,
    out: OrbitExpansion,
}

impl Distribution {
    /// Place residues `v..N` of `y` into the `left` free slots of block `j`.
    fn fill(&mut self, j: usize, v: usize, left: usize) -> Result<()> {
        let n = self.blocks.len();
        if v == n - 1 {
            if self.remaining[v] < left {
                return Ok(());
            }
            self.place(j, v, left);
            let result = if j + 1 == n {
                self.out.add_term(OrbitRep::from_counts(&self.z_counts)?, 1)
            } else {
                let next = self.blocks[j + 1];
                self.fill(j + 1, 0, next)
            };
            self.unplace(j, v, left);
            return result;
        }
        for d in 0..=left.min(self.remaining[v]) {
            self.place(j, v, d);
            let result = self.fill(j, v + 1, left - d);
            self.unplace(j, v, d);
            result?;
        }
        Ok(())
    }

    fn place(&mut self, j: usize, v: usize, d: usize) {
        let n = self.blocks.len();
        self.remaining[v] -= d;
        self.z_counts[(j + v) % n] += d;
    }

    fn unplace(&mut self, j: usize, v: usize, d: usize) {
        let n = self.blocks.len();
        self.remaining[v] += d;
        self.z_counts[(j + v) % n] -= d;
    }
}

/// `M^{[c]}_{[a],[b]}` by enumerating all `x ∈ [a]`, `y ∈ [b]` and counting
/// diagonal `S_k`-orbits of the triples `(x, y, x + y)` with `x + y ∈ [c]`.
pub fn m_coefficient_bruteforce(a: &OrbitRep, b: &OrbitRep, c: &OrbitRep) -> Result<u64> {
    check_same_space(a, b)?;
    check_same_space(a, c)?;
    if a.k() > MAX_BRUTEFORCE_K {
        return Err(Error::TooLarge {
            what: "brute-force k",
            got: a.k(),
            limit: MAX_BRUTEFORCE_K,
        });
    }
    let xs = a.elements()?;
    let ys = b.elements()?;
    let mut classes = BTreeSet::new();
    for x in &xs {
        for y in &ys {
            let z = x.add(y)?;
            if z.standard_form() != *c {
                continue;
            }
            let mut columns: Vec<(usize, usize, usize)> = (0..a.k())
                .map(|i| (x.entries()[i], y.entries()[i], z.entries()[i]))
                .collect();
            columns.sort_unstable();
            classes.insert(columns);
        }
    }
    Ok(classes.len() as u64)
}

/// `[a] x [(1^m, 0^{k-m})]` from the closed characterization: one term for
/// each `(m_0, ..., m_{N-1})` with `0 <= m_i <= a_i` and `Σ m_i = m`, giving
/// `c_j = a_j - m_j + m_{j-1}` (indices mod `N`).
pub fn special_orbit_product(a: &OrbitRep, m: usize) -> Result<OrbitExpansion> {
    if m > a.k() {
        return Err(Error::StripTooLarge { m, bound: a.k() });
    }
    let counts = a.counts();
    let n = counts.len();
    let mut out = OrbitExpansion::new();
    let mut moved = vec![0usize; n];
    choose_moves(&counts, 0, m, &mut moved, &mut |moved| {
        let c: Vec<usize> = (0..n)
            .map(|j| counts[j] - moved[j] + moved[(j + n - 1) % n])
            .collect();
        out.add_term(OrbitRep::from_counts(&c)?, 1)
    })?;
    debug_assert!(out.iter().all(|(_, m)| m == 1));
    Ok(out)
}

fn choose_moves(
    bounds: &[usize],
    i: usize,
    left: usize,
    moved: &mut [usize],
    emit: &mut impl FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    if i == bounds.len() {
        return if left == 0 { emit(moved) } else { Ok(()) };
    }
    let tail: usize = bounds[i + 1..].iter().sum();
    let lo = left.saturating_sub(tail);
    for d in lo..=left.min(bounds[i]) {
        moved[i] = d;
        choose_moves(bounds, i + 1, left - d, moved, emit)?;
    }
    moved[i] = 0;
    Ok(())
}

/// `[a] x [(t^k)] = [a + t]`.
pub fn simple_current_shift(a: &OrbitRep, t: usize) -> Result<OrbitRep> {
    if t >= a.modulus() {
        return Err(Error::ResidueOutOfRange {
            value: t,
            modulus: a.modulus(),
        });
    }
    Ok(a.shift(t))
}

/// Whether `b` is `[((t+1)^m, t^{k-m})]` for some `t`, `m` (cyclically).
pub fn is_special_form(b: &OrbitRep) -> bool {
    b.is_shifted_row()
}

/// Writes `b = [(1^m, 0^{k-m})] + t` as `(t, m)` when possible.
pub fn shifted_row_parameters(b: &OrbitRep) -> Option<(usize, usize)> {
    if !b.is_shifted_row() {
        return None;
    }
    let n = b.modulus();
    let hi = *b.entries().first()?;
    let lo = *b.entries().last()?;
    let count = |v: usize| b.entries().iter().filter(|&&x| x == v).count();
    if hi == lo {
        Some((lo, 0))
    } else if hi == lo + 1 {
        Some((lo, count(hi)))
    } else {
        // hi = N - 1 and lo = 0: the 0 entries are (N-1) + 1.
        Some((n - 1, count(0)))
    }
}

/// `[a] x [b]` for `b` of shifted-row form, through
/// `[a] x ([(t^k)] x [(1^m,0^{k-m})]) = [a + t] x [(1^m,0^{k-m})]`.
pub fn shifted_row_product(a: &OrbitRep, b: &OrbitRep) -> Result<Option<OrbitExpansion>> {
    check_same_space(a, b)?;
    match shifted_row_parameters(b) {
        Some((t, m)) => special_orbit_product(&a.shift(t), m).map(Some),
        None => Ok(None),
    }
}
