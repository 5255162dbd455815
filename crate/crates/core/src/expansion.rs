//! Finite formal sums with signed integer multiplicities.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A finite map from basis labels to non-zero signed multiplicities.
///
/// Keys are kept in their `Ord` order, so iteration and rendering are
/// deterministic. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Expansion<K: Ord> {
    terms: BTreeMap<K, i64>,
}

impl<K: Ord> Default for Expansion<K> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Expansion<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(key: K) -> Self {
        let mut e = Self::new();
        e.terms.insert(key, 1);
        e
    }

    pub fn add_term(&mut self, key: K, mult: i64) -> Result<()> {
        if mult == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(key);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(mult);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o
                    .get()
                    .checked_add(mult)
                    .ok_or(Error::Overflow("expansion coefficient"))?;
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, other: &Expansion<K>, factor: i64) -> Result<()> {
        for (key, &mult) in &other.terms {
            let scaled = mult
                .checked_mul(factor)
                .ok_or(Error::Overflow("expansion coefficient"))?;
            self.add_term(key.clone(), scaled)?;
        }
        Ok(())
    }

    pub fn coefficient(&self, key: &K) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, i64)> {
        self.terms.iter().map(|(k, &m)| (k, m))
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&m| m > 0)
    }

    /// Relabel every key, merging keys that collide.
    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> Result<Expansion<L>> {
        let mut out = Expansion::new();
        for (key, &mult) in &self.terms {
            out.add_term(f(key), mult)?;
        }
        Ok(out)
    }

    /// Fallible relabelling.
    pub fn try_map_keys<L: Ord + Clone>(
        &self,
        mut f: impl FnMut(&K) -> Result<L>,
    ) -> Result<Expansion<L>> {
        let mut out = Expansion::new();
        for (key, &mult) in &self.terms {
            out.add_term(f(key)?, mult)?;
        }
        Ok(out)
    }

    /// Apply a linear operator given on basis elements.
    pub fn apply_linear(
        &self,
        mut op: impl FnMut(&K) -> Result<Expansion<K>>,
    ) -> Result<Expansion<K>> {
        let mut out = Expansion::new();
        for (key, &mult) in &self.terms {
            out.add_scaled(&op(key)?, mult)?;
        }
        Ok(out)
    }
}

impl<K: Ord + Clone> FromIterator<(K, i64)> for Expansion<K> {
    /// Panics on overflow; intended for literals in tests and examples.
    fn from_iter<T: IntoIterator<Item = (K, i64)>>(iter: T) -> Self {
        let mut e = Self::new();
        for (k, m) in iter {
            e.add_term(k, m).expect("coefficient overflow");
        }
        e
    }
}

impl<K: Ord> IntoIterator for Expansion<K> {
    type Item = (K, i64);
    type IntoIter = std::collections::btree_map::IntoIter<K, i64>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<K: Ord + fmt::Display> fmt::Display for Expansion<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (key, mult)) in self.terms.iter().enumerate() {
            if i == 0 {
                write!(f, "{mult}*{key}")?;
            } else if *mult < 0 {
                write!(f, " - {}*{key}", -mult)?;
            } else {
                write!(f, " + {mult}*{key}")?;
            }
        }
        Ok(())
    }
}
