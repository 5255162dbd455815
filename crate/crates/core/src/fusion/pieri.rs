use crate::combinatorics::Partition;
use crate::context::FusionContext;
use crate::error::{Error, Result};
use crate::expansion::Expansion;

/// Formal sum of Schur classes labelled by reduced partitions.
pub type SchurExpansion = Expansion<Partition>;

/// Fails unless `p` fits inside the `(N-1) x k` box.
pub fn check_in_box(p: &Partition, ctx: &FusionContext) -> Result<()> {
    if !p.fits_in_box(ctx.n() - 1, ctx.k()) {
        return Err(Error::OutsideBox {
            partition: p.parts().to_vec(),
            rows: ctx.n() - 1,
            cols: ctx.k(),
        });
    }
    Ok(())
}

/// Whether `p` lies in `Π^(N,k)`: length at most `N` and `p_1 - p_N <= k`.
pub fn is_restricted(p: &Partition, ctx: &FusionContext) -> bool {
    p.len() <= ctx.n() && p.first() - p.part(ctx.n() - 1) <= ctx.k()
}

/// All `ν ⊇ μ` with `ν/μ` an `m`-row strip, `l(ν) <= rows` and
/// `ν_1 <= max_first`.
pub(crate) fn row_strips(mu: &Partition, m: usize, rows: usize, max_first: usize) -> Vec<Partition> {
    let base = mu.padded(rows);
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(rows);
    add_row_strip(&base, m, max_first, &mut current, &mut out);
    out
}

fn add_row_strip(
    base: &[usize],
    left: usize,
    max_first: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    let i = current.len();
    if i == base.len() {
        if left == 0 {
            out.push(Partition::new(current.clone()).expect("interlacing rows decrease"));
        }
        return;
    }
    let lo = base[i];
    let hi = if i == 0 { max_first } else { base[i - 1] };
    if lo > hi {
        return;
    }
    for v in lo..=hi.min(lo + left) {
        current.push(v);
        add_row_strip(base, left - (v - lo), max_first, current, out);
        current.pop();
    }
}

/// All `ν ⊇ μ` with `ν/μ` an `m`-column strip and `l(ν) <= rows`.
pub(crate) fn column_strips(mu: &Partition, m: usize, rows: usize) -> Vec<Partition> {
    let base = mu.padded(rows);
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(rows);
    add_column_strip(&base, m, &mut current, &mut out);
    out
}

fn add_column_strip(base: &[usize], left: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    let i = current.len();
    if i == base.len() {
        if left == 0 {
            out.push(Partition::new(current.clone()).expect("checked while building"));
        }
        return;
    }
    if base.len() - i < left {
        return;
    }
    for add in 0..=left.min(1) {
        let v = base[i] + add;
        if i > 0 && current[i - 1] < v {
            continue;
        }
        current.push(v);
        add_column_strip(base, left - add, current, out);
        current.pop();
    }
}

fn reduced_sum(parts: Vec<Partition>, n: usize) -> Result<SchurExpansion> {
    let mut out = SchurExpansion::new();
    for nu in parts {
        out.add_term(nu.reduce_full_columns(n)?, 1)?;
    }
    Ok(out)
}

/// Fusion Pieri rule for `S_(μ) h_m`: one term for each `ν ⊆ N x k` with
/// `ν/μ` an `m`-row strip, reduced by full columns.
pub fn pieri_h(p: &Partition, m: usize, ctx: &FusionContext) -> Result<SchurExpansion> {
    check_in_box(p, ctx)?;
    if m > ctx.k() {
        return Err(Error::StripTooLarge { m, bound: ctx.k() });
    }
    reduced_sum(row_strips(p, m, ctx.n(), ctx.k()), ctx.n())
}

/// Fusion Pieri rule for `S_(μ) e_m`: one term for each `ν ∈ Π^(N,k)` with
/// `ν/μ` an `m`-column strip, reduced by full columns.
pub fn pieri_e(p: &Partition, m: usize, ctx: &FusionContext) -> Result<SchurExpansion> {
    check_in_box(p, ctx)?;
    if m > ctx.n() {
        return Err(Error::StripTooLarge { m, bound: ctx.n() });
    }
    let nus = column_strips(p, m, ctx.n())
        .into_iter()
        .filter(|nu| is_restricted(nu, ctx))
        .collect();
    reduced_sum(nus, ctx.n())
}

/// Classical Pieri rule for `S_(μ) h_m` in the representation ring of
/// `sl_N`: row strips with at most `N` rows, reduced by full columns.
pub fn classical_pieri_h(p: &Partition, m: usize, n: usize) -> Result<SchurExpansion> {
    if p.len() > n {
        return Err(Error::TooLarge {
            what: "partition length",
            got: p.len(),
            limit: n,
        });
    }
    reduced_sum(row_strips(p, m, n, p.first() + m), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn ctx(n: usize, k: usize) -> FusionContext {
        FusionContext::new(n, k).unwrap()
    }

    fn sum(ps: &[Partition]) -> SchurExpansion {
        ps.iter().map(|p| (p.clone(), 1)).collect()
    }

    #[test]
    fn pieri_h_examples() {
        let c = ctx(4, 3);
        assert_eq!(pieri_h(&part![2, 2], 1, &c).unwrap(), sum(&[part![2, 2, 1], part![3, 2]]));
        assert_eq!(
            pieri_h(&part![2, 1, 1], 1, &c).unwrap(),
            sum(&[part![1], part![2, 2, 1], part![3, 1, 1]])
        );
        assert_eq!(pieri_h(&part![3, 1], 0, &c).unwrap(), sum(&[part![3, 1]]));
        // S_(μ) h_k = S_(k, μ_1, ..., μ_{N-1})
        assert_eq!(pieri_h(&part![3, 1], 3, &c).unwrap(), sum(&[part![3, 3, 1]]));
        assert!(pieri_h(&part![1], 4, &c).is_err());
        assert!(pieri_h(&part![4], 1, &c).is_err());
    }

    #[test]
    fn pieri_e_examples() {
        let c = ctx(3, 3);
        // ν = (3,2), (3,1,1), (2,2,1); the latter two reduce at N = 3.
        assert_eq!(
            pieri_e(&part![2, 1], 2, &c).unwrap(),
            sum(&[part![3, 2], part![2], part![1, 1]])
        );
        assert_eq!(pieri_e(&part![], 2, &c).unwrap(), sum(&[part![1, 1]]));
        for p in Partition::all_in_box(2, 3) {
            assert_eq!(pieri_e(&p, 3, &c).unwrap(), sum(std::slice::from_ref(&p)));
        }
        assert!(pieri_e(&part![], 4, &c).is_err());
    }

    #[test]
    fn strip_enumerators_match_predicates() {
        use crate::combinatorics::SkewShape;
        let mu = part![3, 1];
        let rows = 3;
        for m in 0..=4 {
            let all = mu.extensions(rows, mu.first() + m, m);
            let rs: Vec<_> = all
                .iter()
                .filter(|nu| SkewShape::new((*nu).clone(), mu.clone()).unwrap().is_row_strip(m))
                .cloned()
                .collect();
            let mut got = row_strips(&mu, m, rows, mu.first() + m);
            got.sort();
            let mut want = rs;
            want.sort();
            assert_eq!(got, want);

            let cs: Vec<_> = all
                .iter()
                .filter(|nu| SkewShape::new((*nu).clone(), mu.clone()).unwrap().is_column_strip(m))
                .cloned()
                .collect();
            let mut got = column_strips(&mu, m, rows);
            got.sort();
            let mut want = cs;
            want.sort();
            assert_eq!(got, want);
        }
    }
}
