use std::fmt;

use serde::{Deserialize, Serialize};

use crate::context::FusionContext;
use crate::error::{Error, Result};
use crate::orbit::OrbitRep;

use super::Partition;

/// A dominant weight `a_1 λ_1 + ... + a_{N-1} λ_{N-1}` of `A_{N-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight {
    coeffs: Vec<usize>,
}

impl Weight {
    pub fn new(coeffs: Vec<usize>) -> Self {
        Self { coeffs }
    }

    /// The zero weight of `A_{N-1}`.
    pub fn zero(n: usize) -> Self {
        Self {
            coeffs: vec![0; n.saturating_sub(1)],
        }
    }

    /// The fundamental weight `λ_i` (1-based) of `A_{N-1}`.
    pub fn fundamental(n: usize, i: usize) -> Self {
        let mut w = Self::zero(n);
        w.coeffs[i - 1] = 1;
        w
    }

    pub fn coeffs(&self) -> &[usize] {
        &self.coeffs
    }

    /// `N` for a weight of `A_{N-1}`.
    pub fn rank_n(&self) -> usize {
        self.coeffs.len() + 1
    }

    pub fn level(&self) -> usize {
        self.coeffs.iter().sum()
    }

    /// Checks the arity against `ctx` and `level <= k`.
    pub fn check(&self, ctx: &FusionContext) -> Result<()> {
        self.check_rank(ctx.n())?;
        if self.level() > ctx.k() {
            return Err(Error::LevelOverflow {
                weight: self.coeffs.clone(),
                level: self.level(),
                k: ctx.k(),
            });
        }
        Ok(())
    }

    pub fn check_rank(&self, n: usize) -> Result<()> {
        if self.coeffs.len() + 1 != n {
            return Err(Error::WeightArity {
                weight: self.coeffs.clone(),
                got: self.coeffs.len(),
                expected: n - 1,
            });
        }
        Ok(())
    }

    /// All weights of `A_{N-1}` with level at most `k`, ordered as their
    /// partitions are (graded-lex).
    pub fn all_at_level(ctx: &FusionContext) -> Vec<Weight> {
        Partition::all_in_box(ctx.n() - 1, ctx.k())
            .iter()
            .map(|p| partition_to_weight(p, ctx.n()).expect("box partitions fit"))
            .collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

/// An integral weight with possibly negative coefficients, as occurs among
/// the weights of a representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeWeight(pub Vec<i64>);

impl LatticeWeight {
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }

    pub fn to_dominant(&self) -> Option<Weight> {
        self.is_dominant()
            .then(|| Weight::new(self.0.iter().map(|&a| a as usize).collect()))
    }
}

impl From<&Weight> for LatticeWeight {
    fn from(w: &Weight) -> Self {
        LatticeWeight(w.coeffs.iter().map(|&a| a as i64).collect())
    }
}

impl fmt::Display for LatticeWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// `(Σ_{j>=1} a_j, Σ_{j>=2} a_j, ..., a_{N-1})`.
pub fn weight_to_partition(w: &Weight) -> Partition {
    let mut parts = Vec::with_capacity(w.coeffs.len());
    let mut acc = 0;
    for &a in w.coeffs.iter().rev() {
        acc += a;
        parts.push(acc);
    }
    parts.reverse();
    Partition::new(parts).expect("suffix sums decrease")
}

/// Consecutive differences `p_j - p_{j+1}` for `j = 1..N-1`.
pub fn partition_to_weight(p: &Partition, n: usize) -> Result<Weight> {
    if p.len() > n {
        return Err(Error::OutsideBox {
            partition: p.parts().to_vec(),
            rows: n,
            cols: p.first(),
        });
    }
    let padded = p.padded(n);
    Ok(Weight::new(padded.windows(2).map(|w| w[0] - w[1]).collect()))
}

/// `((N-1)^{a_{N-1}}, ..., 1^{a_1}, 0^{a_0})` with `a_0 = k - level`.
pub fn weight_to_orbit(w: &Weight, ctx: &FusionContext) -> Result<OrbitRep> {
    w.check(ctx)?;
    let mut counts = Vec::with_capacity(ctx.n());
    counts.push(ctx.k() - w.level());
    counts.extend_from_slice(&w.coeffs);
    OrbitRep::from_counts(&counts)
}

/// The conjugate of the orbit's standard form read as a partition.
pub fn orbit_to_partition(o: &OrbitRep) -> Partition {
    Partition::new(o.entries().to_vec())
        .expect("standard forms decrease")
        .conjugate()
}

/// Residue multiplicities `(a_1, ..., a_{N-1})`; `a_0` is dropped.
pub fn orbit_to_weight(o: &OrbitRep) -> Weight {
    Weight::new(o.counts()[1..].to_vec())
}

/// Inverse of [`orbit_to_partition`] on partitions inside the
/// `(N-1) x k` box, after reducing full columns.
pub fn partition_to_orbit(p: &Partition, ctx: &FusionContext) -> Result<OrbitRep> {
    let reduced = p.reduce_full_columns(ctx.n())?;
    weight_to_orbit(&partition_to_weight(&reduced, ctx.n())?, ctx)
}
