//! Simple-current orbits, the quotient algebras `F'(A_{N-1}, k)` and
//! rank-level duality.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::combinatorics::{orbit_to_partition, partition_to_orbit};
use crate::context::FusionContext;
use crate::error::{Error, Result};
use crate::fusion::{full_table, FusionTable, StructureConstants};
use crate::orbit::OrbitRep;

/// Schema tag of the serialized duality report.
pub const DUALITY_SCHEMA: &str = "fusionkit/duality/v1";

/// The orbit of an element of `O(N,k)` under the shifts `[a] ↦ [a + t]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ScOrbit {
    members: BTreeSet<OrbitRep>,
}

impl ScOrbit {
    pub fn members(&self) -> &BTreeSet<OrbitRep> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, o: &OrbitRep) -> bool {
        self.members.contains(o)
    }
}

pub fn sc_orbit(a: &OrbitRep) -> ScOrbit {
    ScOrbit {
        members: (0..a.modulus()).map(|t| a.shift(t)).collect(),
    }
}

/// The lexicographically smallest member with a zero entry.
pub fn canonical_sc_representative(o: &ScOrbit) -> OrbitRep {
    o.members
        .iter()
        .find(|m| m.has_zero())
        .expect("every shift class meets an orbit containing 0")
        .clone()
}

/// `[((N-1)^{a_{N-1}}, ..., 0^{a_0})] ↦ [(Σ_{i>=1} a_i, Σ_{i>=2} a_i, ..., a_{N-1}, 0)]`,
/// from `O'(N,k)` to `O'(k,N)`. Requires `a_0 > 0`.
pub fn rank_level_dual(a: &OrbitRep) -> Result<OrbitRep> {
    if !a.has_zero() {
        return Err(Error::NoZeroEntry(a.entries().to_vec()));
    }
    let k = a.k();
    let counts = a.counts();
    let n = counts.len();
    let mut entries = Vec::with_capacity(n);
    let mut acc = 0;
    for i in (1..n).rev() {
        acc += counts[i];
        entries.push(acc);
    }
    entries.reverse();
    entries.push(0);
    if k < 2 {
        return Err(Error::InvalidContext { n: k, k: n });
    }
    OrbitRep::new(k, entries)
}

/// Structure constants of `F'(A_{N-1}, k)` on SC-orbit classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientTable {
    ctx: FusionContext,
    classes: Vec<OrbitRep>,
    constants: StructureConstants,
}

impl QuotientTable {
    pub fn ctx(&self) -> &FusionContext {
        &self.ctx
    }

    /// Canonical representative of each class, ordered by the graded-lex
    /// order of their partitions.
    pub fn classes(&self) -> &[OrbitRep] {
        &self.classes
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.constants
    }

    pub fn class_of(&self, o: &OrbitRep) -> Option<usize> {
        let rep = canonical_sc_representative(&sc_orbit(o));
        self.classes.iter().position(|c| *c == rep)
    }
}

pub fn quotient_table(ctx: &FusionContext) -> Result<QuotientTable> {
    quotient_of(&full_table(ctx)?)
}

/// `N'^C_{A,B} = Σ_{c ∈ C} N^c_{a,b}` for representatives `a ∈ A`, `b ∈ B`;
/// fails if the sum depends on the representatives.
pub fn quotient_of(table: &FusionTable) -> Result<QuotientTable> {
    let ctx = *table.ctx();
    let orbits: Vec<OrbitRep> = table
        .basis()
        .iter()
        .map(|p| partition_to_orbit(p, &ctx))
        .collect::<Result<_>>()?;
    let mut classes: Vec<OrbitRep> = orbits
        .iter()
        .map(|o| canonical_sc_representative(&sc_orbit(o)))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    classes.sort_by_key(orbit_to_partition);
    let class_index = |o: &OrbitRep| {
        let rep = canonical_sc_representative(&sc_orbit(o));
        classes.iter().position(|c| *c == rep).expect("class exists")
    };
    let class_of_basis: Vec<usize> = orbits.iter().map(class_index).collect();

    let m = classes.len();
    let mut constants = StructureConstants::zeros(m);
    let mut seen = vec![false; m * m];
    for a in 0..table.size() {
        for b in 0..table.size() {
            let (ca, cb) = (class_of_basis[a], class_of_basis[b]);
            let mut row = vec![0i64; m];
            for &(c, mult) in table.product(a, b) {
                row[class_of_basis[c]] += mult;
            }
            if seen[ca * m + cb] {
                if let Some(cc) = (0..m).find(|&cc| constants.get(ca, cb, cc) != row[cc]) {
                    return Err(Error::IllDefinedQuotient(format!(
                        "coefficient of class {} in {} * {} changes with representatives {}, {}",
                        classes[cc], classes[ca], classes[cb], table.basis()[a], table.basis()[b]
                    )));
                }
            } else {
                seen[ca * m + cb] = true;
                for (cc, v) in row.into_iter().enumerate() {
                    constants.set(ca, cb, cc, v);
                }
            }
        }
    }
    Ok(QuotientTable {
        ctx,
        classes,
        constants,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub schema: &'static str,
    #[serde(rename = "N")]
    pub n: usize,
    pub k: usize,
    pub classes: usize,
    pub isomorphic: bool,
    pub witness: Option<String>,
}

impl DualityReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Transports `F'(A_{N-1}, k)` to `F'(A_{k-1}, N)` through
/// [`rank_level_dual`] on canonical representatives and compares every
/// structure constant.
pub fn verify_rank_level_duality(n: usize, k: usize) -> Result<DualityReport> {
    let ctx = FusionContext::new(n, k)?;
    let dual_ctx = ctx.dual()?;
    let left = quotient_table(&ctx)?;
    let right = quotient_table(&dual_ctx)?;
    let mut report = DualityReport {
        schema: DUALITY_SCHEMA,
        n,
        k,
        classes: left.classes().len(),
        isomorphic: false,
        witness: None,
    };
    if left.classes().len() != right.classes().len() {
        report.witness = Some(format!(
            "{} classes at {ctx}, {} at {dual_ctx}",
            left.classes().len(),
            right.classes().len()
        ));
        return Ok(report);
    }
    let mut phi = Vec::with_capacity(left.classes().len());
    for rep in left.classes() {
        let image = rank_level_dual(rep)?;
        match right.class_of(&image) {
            Some(i) if !phi.contains(&i) => phi.push(i),
            _ => {
                report.witness = Some(format!("class of {rep} has no distinct image"));
                return Ok(report);
            }
        }
    }
    let m = phi.len();
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                let l = left.constants().get(a, b, c);
                let r = right.constants().get(phi[a], phi[b], phi[c]);
                if l != r {
                    report.witness = Some(format!(
                        "N'^{}_{{{},{}}} = {l} but its image has {r}",
                        left.classes()[c],
                        left.classes()[a],
                        left.classes()[b]
                    ));
                    return Ok(report);
                }
            }
        }
    }
    report.isomorphic = true;
    Ok(report)
}
