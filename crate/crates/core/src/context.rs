use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Rank and level `(N, k)` of the fusion algebra of `A_{N-1}` at level `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FusionContext {
    n: usize,
    k: usize,
}

impl FusionContext {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n < 2 || k < 1 {
            return Err(Error::InvalidContext { n, k });
        }
        Ok(Self { n, k })
    }

    /// `N`: the algebra is `sl_N`, i.e. type `A_{N-1}`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The level `k`.
    pub fn k(&self) -> usize {
        self.k
    }

    /// The rank-level dual context `(k, N)`. Fails when `k = 1`.
    pub fn dual(&self) -> Result<Self> {
        Self::new(self.k, self.n)
    }

    /// Number of level-`k` weights, `binomial(N - 1 + k, N - 1)`.
    pub fn basis_size(&self) -> usize {
        binomial(self.n - 1 + self.k, self.n - 1)
    }
}

impl std::fmt::Display for FusionContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(N={}, k={})", self.n, self.k)
    }
}

pub(crate) fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_contexts() {
        assert!(FusionContext::new(1, 3).is_err());
        assert!(FusionContext::new(3, 0).is_err());
        assert!(FusionContext::new(2, 1).is_ok());
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(FusionContext::new(2, 3).unwrap().basis_size(), 4);
        assert_eq!(FusionContext::new(3, 2).unwrap().basis_size(), 6);
        assert_eq!(FusionContext::new(3, 3).unwrap().basis_size(), 10);
        assert_eq!(FusionContext::new(4, 3).unwrap().basis_size(), 20);
    }
}
