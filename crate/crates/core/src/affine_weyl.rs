//! Tableau versions of the Racah-Speiser and Kac-Walton algorithms.
//!
//! The weights of `V^λ` are read off the contents of semistandard tableaux
//! of shape `(λ)` with entries `1..=N`. Shifting a content by `(μ) + ρ` and
//! reflecting it into the dominant chamber (or, at level `k`, into the
//! fundamental alcove `H_{N+k}`) with the sign of each reflection gives the
//! tensor (or fusion) multiplicities.

use std::collections::BTreeMap;

use crate::combinatorics::{for_each_tableau, weight_to_partition, LatticeWeight, SkewShape, Weight};
use crate::context::FusionContext;
use crate::error::{Error, Result};
use crate::expansion::Expansion;

/// Largest number of boxes accepted for the tableau enumeration.
pub const MAX_SHAPE_BOXES: usize = 30;

/// A tableau content `(c_1, ..., c_N)`, not necessarily decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ContentSequence(pub Vec<usize>);

impl ContentSequence {
    /// `c_i - c_{i+1}` for `i = 1..N-1`.
    pub fn weight(&self) -> LatticeWeight {
        LatticeWeight(self.0.windows(2).map(|w| w[0] as i64 - w[1] as i64).collect())
    }
}

/// Alternating sums of shifted sequences.
pub type SignedSequenceBag = BTreeMap<Vec<i64>, i64>;

fn tableau_contents(lambda: &Weight, n: usize) -> Result<BTreeMap<ContentSequence, u64>> {
    lambda.check_rank(n)?;
    let shape = weight_to_partition(lambda);
    if shape.size() > MAX_SHAPE_BOXES {
        return Err(Error::TooLarge {
            what: "tableau shape boxes",
            got: shape.size(),
            limit: MAX_SHAPE_BOXES,
        });
    }
    let mut out = BTreeMap::new();
    for_each_tableau(&SkewShape::straight(shape), n, None, |t| {
        let mut counts = t.content().counts().to_vec();
        counts.resize(n, 0);
        *out.entry(ContentSequence(counts)).or_insert(0u64) += 1;
    });
    Ok(out)
}

/// Multiplicity of every weight of `V^λ` for `sl_N`.
pub fn weight_multiplicities(lambda: &Weight, n: usize) -> Result<BTreeMap<LatticeWeight, u64>> {
    let mut out = BTreeMap::new();
    for (content, count) in tableau_contents(lambda, n)? {
        *out.entry(content.weight()).or_insert(0) += count;
    }
    Ok(out)
}

/// `dim V^λ` as the number of tableaux.
pub fn dimension(lambda: &Weight, n: usize) -> Result<u64> {
    Ok(tableau_contents(lambda, n)?.values().sum())
}

/// Sorts into strictly decreasing order. Returns the sign of the sorting
/// permutation, or `None` if two entries coincide.
fn sort_with_sign(s: &mut [i64]) -> Option<i64> {
    let mut inversions = 0usize;
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            match s[i].cmp(&s[j]) {
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Less => inversions += 1,
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    s.sort_unstable_by(|a, b| b.cmp(a));
    Some(if inversions.is_multiple_of(2) { 1 } else { -1 })
}

/// Reflects a shifted sequence into the fundamental alcove of level `k`
/// (`s_1 - s_N < k + N`). `None` when it lies on a wall.
fn reflect_into_alcove(s: &mut [i64], level: Option<usize>) -> Option<i64> {
    let mut sign = sort_with_sign(s)?;
    let Some(k) = level else {
        return Some(sign);
    };
    let n = s.len();
    let width = (k + n) as i64;
    loop {
        let spread = s[0] - s[n - 1];
        if spread == width {
            return None;
        }
        if spread < width {
            return Some(sign);
        }
        let (first, last) = (s[0], s[n - 1]);
        s[0] = last + width;
        s[n - 1] = first - width;
        sign = -sign * sort_with_sign(s)?;
    }
}

fn shifted_sum(
    lambda: &Weight,
    mu: &Weight,
    n: usize,
    level: Option<usize>,
) -> Result<Expansion<Weight>> {
    mu.check_rank(n)?;
    let mu_part = weight_to_partition(mu).padded(n);
    let mut bag = SignedSequenceBag::new();
    for (content, count) in tableau_contents(lambda, n)? {
        let mut s: Vec<i64> = (0..n)
            .map(|i| (content.0[i] + mu_part[i] + (n - 1 - i)) as i64)
            .collect();
        if let Some(sign) = reflect_into_alcove(&mut s, level) {
            let count = i64::try_from(count).map_err(|_| Error::Overflow("tableau count"))?;
            let entry = bag.entry(s).or_insert(0);
            *entry = entry
                .checked_add(sign * count)
                .ok_or(Error::Overflow("alternating sum"))?;
        }
    }
    let mut out = Expansion::new();
    for (s, mult) in bag {
        let nu = Weight::new(s.windows(2).map(|w| (w[0] - w[1] - 1) as usize).collect());
        out.add_term(nu, mult)?;
    }
    debug_assert!(out.is_nonnegative(), "{lambda} x {mu} = {out}");
    Ok(out)
}

/// `V^λ ⊗ V^μ` for `sl_N`.
pub fn racah_speiser_tensor(lambda: &Weight, mu: &Weight, n: usize) -> Result<Expansion<Weight>> {
    shifted_sum(lambda, mu, n, None)
}

/// `V^λ ⊗_k V^μ`, the level-`k` fusion product of `A_{N-1}`.
pub fn kac_walton_fusion(lambda: &Weight, mu: &Weight, ctx: &FusionContext) -> Result<Expansion<Weight>> {
    lambda.check(ctx)?;
    mu.check(ctx)?;
    shifted_sum(lambda, mu, ctx.n(), Some(ctx.k()))
}
