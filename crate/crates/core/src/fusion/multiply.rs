use crate::combinatorics::{
    count_cylindric_tableaux, orbit_to_partition, partition_to_orbit, Content, Partition, SkewShape,
};
use crate::context::FusionContext;
use crate::error::{Error, Result};
use crate::jacobi_trudi::expand_h_determinant;
use crate::orbit::fixed_product;

use super::pieri::{check_in_box, classical_pieri_h, is_restricted, pieri_h, SchurExpansion};

/// The Schur basis of the fusion ring: partitions inside the `(N-1) x k`
/// box in graded-lex order.
pub fn basis(ctx: &FusionContext) -> Vec<Partition> {
    Partition::all_in_box(ctx.n() - 1, ctx.k())
}

/// Returns `(carried, expanded)`: the factor with fewer rows is written as a
/// Jacobi-Trudi determinant; ties expand `q`.
fn split_factors<'a>(p: &'a Partition, q: &'a Partition) -> (&'a Partition, &'a Partition) {
    if p.len() < q.len() {
        (q, p)
    } else {
        (p, q)
    }
}

/// `S_(p) S_(q)` in the fusion ring, by applying the fusion Pieri rule to
/// the Jacobi-Trudi expansion of one factor.
pub fn multiply(p: &Partition, q: &Partition, ctx: &FusionContext) -> Result<SchurExpansion> {
    check_in_box(p, ctx)?;
    check_in_box(q, ctx)?;
    let (carried, expanded) = split_factors(p, q);
    let out = expand_h_determinant(
        SchurExpansion::singleton(carried.clone()),
        expanded,
        ctx.k(),
        |e, m| e.apply_linear(|x| pieri_h(x, m, ctx)),
    )?;
    debug_assert!(out.is_nonnegative(), "{p} * {q} at {ctx} = {out}");
    Ok(out)
}

/// `S_(p) S_(q)` in the representation ring of `sl_N` (no level
/// truncation), with full columns of height `N` removed.
pub fn tensor_product(p: &Partition, q: &Partition, n: usize) -> Result<SchurExpansion> {
    if n < 2 {
        return Err(Error::InvalidContext { n, k: 0 });
    }
    let p = p.reduce_full_columns(n)?;
    let q = q.reduce_full_columns(n)?;
    let (carried, expanded) = split_factors(&p, &q);
    let out = expand_h_determinant(
        SchurExpansion::singleton(carried.clone()),
        expanded,
        usize::MAX,
        |e, m| e.apply_linear(|x| classical_pieri_h(x, m, n)),
    )?;
    debug_assert!(out.is_nonnegative());
    Ok(out)
}

/// `S_(p) h_{ε_1} ... h_{ε_r}` as `Σ_ν K^{(N,k)}_{ν/p, ε} S_(ν)` over
/// `ν ∈ Π^(N,k)`, each `ν` reduced by full columns.
pub fn multiply_by_h_sequence(
    p: &Partition,
    eps: &Content,
    ctx: &FusionContext,
) -> Result<SchurExpansion> {
    if !is_restricted(p, ctx) {
        return Err(Error::OutsideBox {
            partition: p.parts().to_vec(),
            rows: ctx.n(),
            cols: ctx.k(),
        });
    }
    if let Some(&big) = eps.counts().iter().find(|&&e| e > ctx.k()) {
        return Err(Error::StripTooLarge { m: big, bound: ctx.k() });
    }
    let added = eps.total();
    let mut out = SchurExpansion::new();
    for nu in p.extensions(ctx.n(), p.first() + added, added) {
        if !is_restricted(&nu, ctx) {
            continue;
        }
        let shape = SkewShape::new(nu.clone(), p.clone())?;
        let count = count_cylindric_tableaux(&shape, eps, ctx)?;
        if count > 0 {
            let count = i64::try_from(count).map_err(|_| Error::Overflow("Kostka number"))?;
            out.add_term(nu.reduce_full_columns(ctx.n())?, count)?;
        }
    }
    Ok(out)
}

/// `S_(p) h_{ε_1} ... h_{ε_r}` by applying the fusion Pieri rule once per
/// factor, left to right.
pub fn iterate_pieri_h(p: &Partition, eps: &[usize], ctx: &FusionContext) -> Result<SchurExpansion> {
    let start = p.reduce_full_columns(ctx.n())?;
    let mut acc = SchurExpansion::singleton(start);
    for &m in eps {
        acc = acc.apply_linear(|x| pieri_h(x, m, ctx))?;
    }
    Ok(acc)
}

/// `S_(p) h_k^t`; each factor `h_k` is a simple current.
pub fn simple_current_power(p: &Partition, t: usize, ctx: &FusionContext) -> Result<Partition> {
    let mut current = p.reduce_full_columns(ctx.n())?;
    check_in_box(&current, ctx)?;
    for _ in 0..t {
        let step = pieri_h(&current, ctx.k(), ctx)?;
        let mut keys = step.keys();
        current = match (keys.next(), keys.next()) {
            (Some(only), None) => only.clone(),
            _ => {
                return Err(Error::Format(format!(
                    "{current} * h_{} has {} terms",
                    ctx.k(),
                    step.len()
                )))
            }
        };
    }
    Ok(current)
}

/// `S_(p) S_(q)` computed by the fixed orbit product through the
/// partition/orbit dictionary.
pub fn multiply_via_orbits(p: &Partition, q: &Partition, ctx: &FusionContext) -> Result<SchurExpansion> {
    check_in_box(p, ctx)?;
    check_in_box(q, ctx)?;
    let a = partition_to_orbit(p, ctx)?;
    let b = partition_to_orbit(q, ctx)?;
    fixed_product(&a, &b)?.map_keys(orbit_to_partition)
}
