use std::fmt;

use crate::error::{Error, Result};

/// Largest `k` accepted by enumeration over `k!` permutations.
pub const MAX_ENUMERATION_K: usize = 12;

fn check_residues(modulus: usize, entries: &[usize]) -> Result<()> {
    if modulus < 2 {
        return Err(Error::InvalidContext { n: modulus, k: entries.len() });
    }
    match entries.iter().find(|&&v| v >= modulus) {
        Some(&value) => Err(Error::ResidueOutOfRange { value, modulus }),
        None => Ok(()),
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, entries: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (i, v) in entries.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{v}")?;
    }
    write!(f, ")")
}

/// An element of `Z_N^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tuple {
    modulus: usize,
    entries: Vec<usize>,
}

impl Tuple {
    pub fn new(modulus: usize, entries: Vec<usize>) -> Result<Self> {
        check_residues(modulus, &entries)?;
        Ok(Self { modulus, entries })
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Entrywise sum modulo `N`. Both tuples must share modulus and length.
    pub fn add(&self, other: &Tuple) -> Result<Tuple> {
        if self.modulus != other.modulus || self.entries.len() != other.entries.len() {
            return Err(Error::ContextMismatch(format!("{self} + {other}")));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a + b) % self.modulus)
            .collect();
        Ok(Tuple {
            modulus: self.modulus,
            entries,
        })
    }

    /// The weakly decreasing representative of this tuple's `S_k`-orbit.
    pub fn standard_form(&self) -> OrbitRep {
        let mut entries = self.entries.clone();
        entries.sort_unstable_by(|a, b| b.cmp(a));
        OrbitRep {
            modulus: self.modulus,
            entries,
        }
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.entries)
    }
}

/// An `S_k`-orbit of `Z_N^k`, stored by its standard form
/// `((N-1)^{a_{N-1}}, ..., 1^{a_1}, 0^{a_0})`.
///
/// Ordering is lexicographic on the standard form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitRep {
    modulus: usize,
    entries: Vec<usize>,
}

impl OrbitRep {
    /// Standardizes `entries`; they need not be sorted.
    pub fn new(modulus: usize, entries: Vec<usize>) -> Result<Self> {
        Ok(Tuple::new(modulus, entries)?.standard_form())
    }

    /// Builds `[(a_0, ..., a_{N-1})]` from residue multiplicities.
    pub fn from_counts(counts: &[usize]) -> Result<Self> {
        let modulus = counts.len();
        if modulus < 2 {
            return Err(Error::InvalidContext { n: modulus, k: counts.iter().sum() });
        }
        let entries = (0..modulus)
            .rev()
            .flat_map(|j| std::iter::repeat_n(j, counts[j]))
            .collect();
        Ok(Self { modulus, entries })
    }

    /// The constant orbit `[(t^k)]`.
    pub fn constant(modulus: usize, k: usize, t: usize) -> Result<Self> {
        Self::new(modulus, vec![t; k])
    }

    /// `[(1^m, 0^{k-m})]`, the orbit of `m λ_1`.
    pub fn ones(modulus: usize, k: usize, m: usize) -> Result<Self> {
        if m > k {
            return Err(Error::StripTooLarge { m, bound: k });
        }
        let mut entries = vec![1; m];
        entries.resize(k, 0);
        Self::new(modulus, entries)
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    /// Tuple length `k`.
    pub fn k(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn as_tuple(&self) -> Tuple {
        Tuple {
            modulus: self.modulus,
            entries: self.entries.clone(),
        }
    }

    /// Multiplicities `a_j` of each residue `j`, indexed `0..N`.
    pub fn counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.modulus];
        for &v in &self.entries {
            counts[v] += 1;
        }
        counts
    }

    pub fn has_zero(&self) -> bool {
        self.entries.last() == Some(&0)
    }

    /// `[a] x [(t^k)] = [a + t]`: add `t` to every entry and restandardize.
    pub fn shift(&self, t: usize) -> OrbitRep {
        let n = self.modulus;
        let mut entries: Vec<usize> = self.entries.iter().map(|&v| (v + t) % n).collect();
        entries.sort_unstable_by(|a, b| b.cmp(a));
        OrbitRep {
            modulus: n,
            entries,
        }
    }

    /// Whether the orbit is `[((t+1)^m, t^{k-m})]` or `[((N-1)^{k-m}, 0^m)]`,
    /// i.e. it takes at most two values and those are cyclically adjacent.
    pub fn is_shifted_row(&self) -> bool {
        let (Some(&hi), Some(&lo)) = (self.entries.first(), self.entries.last()) else {
            return true;
        };
        if self.entries.iter().any(|&v| v != hi && v != lo) {
            return false;
        }
        hi == lo || hi == lo + 1 || (hi == self.modulus - 1 && lo == 0)
    }

    /// All distinct tuples in the orbit, in lexicographic order.
    pub fn elements(&self) -> Result<Vec<Tuple>> {
        if self.k() > MAX_ENUMERATION_K {
            return Err(Error::TooLarge {
                what: "orbit enumeration k",
                got: self.k(),
                limit: MAX_ENUMERATION_K,
            });
        }
        let mut current: Vec<usize> = self.entries.iter().rev().copied().collect();
        let mut out = vec![Tuple {
            modulus: self.modulus,
            entries: current.clone(),
        }];
        while next_permutation(&mut current) {
            out.push(Tuple {
                modulus: self.modulus,
                entries: current.clone(),
            });
        }
        Ok(out)
    }
}

/// Rearranges into the next lexicographic permutation; false after the last.
fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

impl fmt::Display for OrbitRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.entries)
    }
}

/// An `S_∞`-orbit of finitely supported sequences over `Z_N`, stored by
/// the non-zero part of its standard form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InfiniteOrbitRep {
    modulus: usize,
    support: Vec<usize>,
}

impl InfiniteOrbitRep {
    /// Trailing zeros may be given or omitted; entries are standardized.
    pub fn new(modulus: usize, entries: Vec<usize>) -> Result<Self> {
        check_residues(modulus, &entries)?;
        let mut support: Vec<usize> = entries.into_iter().filter(|&v| v != 0).collect();
        support.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { modulus, support })
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    /// Non-zero entries of the standard form.
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    /// The representative in `Z_N^len`, padded with zeros.
    pub fn truncate(&self, len: usize) -> Result<OrbitRep> {
        if len < self.support.len() {
            return Err(Error::TooLarge {
                what: "orbit support",
                got: self.support.len(),
                limit: len,
            });
        }
        let mut entries = self.support.clone();
        entries.resize(len, 0);
        Ok(OrbitRep {
            modulus: self.modulus,
            entries,
        })
    }

    pub fn from_finite(o: &OrbitRep) -> Self {
        Self {
            modulus: o.modulus,
            support: o.entries.iter().copied().filter(|&v| v != 0).collect(),
        }
    }
}

impl fmt::Display for InfiniteOrbitRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for v in &self.support {
            write!(f, "{v},")?;
        }
        write!(f, "0,...)")
    }
}
