//! Closed formulas for small rank, used as cross-checks.

use serde::Serialize;

use crate::combinatorics::{weight_to_orbit, weight_to_partition, Weight};
use crate::context::FusionContext;
use crate::error::{Error, Result};
use crate::orbit::raw_orbit_product;

use super::multiply::multiply;

/// The `A_1` level-`k` fusion coefficient `N^c_{a,b}` for labels `0..=k`:
/// 1 iff `a + b + c` is even and `|a - b| <= c <= min(a + b, 2k - a - b)`.
pub fn gepner_witten_a1(a: usize, b: usize, c: usize, k: usize) -> Result<i64> {
    if let Some(&label) = [a, b, c].iter().find(|&&x| x > k) {
        return Err(Error::LabelOutOfRange { label, k });
    }
    let parity = (a + b + c).is_multiple_of(2);
    let lower = a.abs_diff(b) <= c;
    let upper = c <= (a + b).min(2 * k - a - b);
    Ok(i64::from(parity && lower && upper))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FwViolation {
    pub mu: Weight,
    pub lambda: Weight,
    pub nu: Weight,
    pub fusion: i64,
    pub raw: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FwReport {
    pub triples_checked: usize,
    pub violations: Vec<FwViolation>,
}

impl FwReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For `N = 3`, checks `M^{[ν]}_{[μ],[λ]} = binom(N^ν_{μ,λ} + 1, 2)` over
/// every triple of level-`k` weights.
pub fn fw_a2_relation_check(ctx: &FusionContext) -> Result<FwReport> {
    if ctx.n() != 3 {
        return Err(Error::ContextMismatch(format!(
            "the A_2 relation needs N = 3, got {ctx}"
        )));
    }
    let weights = Weight::all_at_level(ctx);
    let mut report = FwReport {
        triples_checked: 0,
        violations: Vec::new(),
    };
    for mu in &weights {
        for lambda in &weights {
            let fusion = multiply(&weight_to_partition(mu), &weight_to_partition(lambda), ctx)?;
            let raw = raw_orbit_product(&weight_to_orbit(mu, ctx)?, &weight_to_orbit(lambda, ctx)?)?;
            for nu in &weights {
                report.triples_checked += 1;
                let f = fusion.coefficient(&weight_to_partition(nu));
                let r = raw.coefficient(&weight_to_orbit(nu, ctx)?);
                if r != f * (f + 1) / 2 {
                    report.violations.push(FwViolation {
                        mu: mu.clone(),
                        lambda: lambda.clone(),
                        nu: nu.clone(),
                        fusion: f,
                        raw: r,
                    });
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gepner_witten_examples() {
        assert_eq!(gepner_witten_a1(1, 1, 0, 2).unwrap(), 1);
        assert_eq!(gepner_witten_a1(1, 1, 2, 2).unwrap(), 1);
        assert_eq!(gepner_witten_a1(1, 1, 0, 1).unwrap(), 1);
        assert_eq!(gepner_witten_a1(1, 1, 2, 1), Err(Error::LabelOutOfRange { label: 2, k: 1 }));
        for b in 0..=4 {
            for c in 0..=4 {
                assert_eq!(gepner_witten_a1(0, b, c, 4).unwrap(), i64::from(b == c));
            }
        }
        // 2k - a - b = 0 cuts off c = 2
        assert_eq!(gepner_witten_a1(1, 1, 2, 2).unwrap(), 1);
        assert_eq!(gepner_witten_a1(2, 2, 2, 2).unwrap(), 0);
        assert_eq!(gepner_witten_a1(2, 2, 0, 2).unwrap(), 1);
    }

    #[test]
    fn a2_relation_at_level_three_example() {
        let ctx = FusionContext::new(3, 3).unwrap();
        let adj = Weight::new(vec![1, 1]);
        let fusion = multiply(&weight_to_partition(&adj), &weight_to_partition(&adj), &ctx).unwrap();
        assert_eq!(fusion.coefficient(&weight_to_partition(&adj)), 2);
        let o = weight_to_orbit(&adj, &ctx).unwrap();
        assert_eq!(raw_orbit_product(&o, &o).unwrap().coefficient(&o), 3);
    }

    #[test]
    fn a2_relation_sweep_level_two() {
        let report = fw_a2_relation_check(&FusionContext::new(3, 2).unwrap()).unwrap();
        assert!(report.passed(), "{:?}", report.violations);
        assert_eq!(report.triples_checked, 216);
        assert!(fw_a2_relation_check(&FusionContext::new(4, 2).unwrap()).is_err());
    }
}
