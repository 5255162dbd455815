use crate::combinatorics::orbit_to_partition;
use crate::error::Result;
use crate::jacobi_trudi::expand_h_determinant;

use super::product::{check_same_space, raw_orbit_product, special_orbit_product, OrbitExpansion};
use super::OrbitRep;

/// The associative product `[a] · [b]`.
///
/// If `b` is `[((t+1)^m, t^{k-m})]` this is the raw product. Otherwise `b` is
/// written as `det([h_{b̃_i - i + j}])` with `b̃` its partition and
/// `[h_m] = [(1^m, 0^{k-m})]` for `0 <= m <= k` (zero otherwise), and each
/// factor acts by the special product.
pub fn fixed_product(a: &OrbitRep, b: &OrbitRep) -> Result<OrbitExpansion> {
    check_same_space(a, b)?;
    if b.is_shifted_row() {
        return raw_orbit_product(a, b);
    }
    let shape = orbit_to_partition(b);
    let out = expand_h_determinant(OrbitExpansion::singleton(a.clone()), &shape, a.k(), |e, m| {
        e.apply_linear(|x| special_orbit_product(x, m))
    })?;
    debug_assert!(out.is_nonnegative());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{weight_to_orbit, Weight};
    use crate::context::FusionContext;

    fn o(n: usize, e: &[usize]) -> OrbitRep {
        OrbitRep::new(n, e.to_vec()).unwrap()
    }

    #[test]
    fn fixes_the_multiplicity_three() {
        let a = o(3, &[2, 1, 0]);
        let want: OrbitExpansion = [
            (o(3, &[2, 2, 2]), 1),
            (o(3, &[1, 1, 1]), 1),
            (o(3, &[2, 1, 0]), 2),
            (o(3, &[0, 0, 0]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(fixed_product(&a, &a).unwrap(), want);
    }

    #[test]
    fn zero_orbit_is_the_identity() {
        let a = o(4, &[3, 1, 1]);
        let id = OrbitRep::constant(4, 3, 0).unwrap();
        assert_eq!(fixed_product(&a, &id).unwrap(), OrbitExpansion::singleton(a.clone()));
        assert_eq!(fixed_product(&id, &a).unwrap(), OrbitExpansion::singleton(a));
    }

    #[test]
    fn a3_example() {
        let ctx = FusionContext::new(4, 3).unwrap();
        let w = |c: &[usize]| weight_to_orbit(&Weight::new(c.to_vec()), &ctx).unwrap();
        let got = fixed_product(&o(4, &[2, 1, 0]), &o(4, &[2, 2, 0])).unwrap();
        let want: OrbitExpansion = [
            (w(&[1, 0, 2]), 1),
            (w(&[0, 2, 1]), 1),
            (w(&[1, 1, 0]), 1),
            (w(&[0, 0, 1]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
    }
}
