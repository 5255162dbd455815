use crate::error::{Error, Result};
use crate::expansion::Expansion;

use super::product::raw_orbit_product;
use super::InfiniteOrbitRep;

/// Smallest embedding length for which the product of `a` and `b` is stable.
pub fn embedding_bound(a: &InfiniteOrbitRep, b: &InfiniteOrbitRep) -> usize {
    (a.support().len() + b.support().len()).max(1)
}

/// The product of `S_∞`-orbits, computed as the raw product in `Z_N^K` with
/// `K` = [`embedding_bound`].
pub fn tensor_orbit_product(
    a: &InfiniteOrbitRep,
    b: &InfiniteOrbitRep,
) -> Result<Expansion<InfiniteOrbitRep>> {
    tensor_orbit_product_at(a, b, embedding_bound(a, b))
}

/// The same product computed in `Z_N^len`; `len` must be at least the
/// combined support.
pub fn tensor_orbit_product_at(
    a: &InfiniteOrbitRep,
    b: &InfiniteOrbitRep,
    len: usize,
) -> Result<Expansion<InfiniteOrbitRep>> {
    if a.modulus() != b.modulus() {
        return Err(Error::ContextMismatch(format!(
            "{a} over Z_{} vs {b} over Z_{}",
            a.modulus(),
            b.modulus()
        )));
    }
    let bound = embedding_bound(a, b);
    if len < bound {
        return Err(Error::TooLarge {
            what: "combined orbit support",
            got: bound,
            limit: len,
        });
    }
    raw_orbit_product(&a.truncate(len)?, &b.truncate(len)?)?
        .map_keys(InfiniteOrbitRep::from_finite)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inf(n: usize, e: &[usize]) -> InfiniteOrbitRep {
        InfiniteOrbitRep::new(n, e.to_vec()).unwrap()
    }

    #[test]
    fn tensor_examples() {
        let got = tensor_orbit_product(&inf(3, &[2, 1]), &inf(3, &[1, 1])).unwrap();
        let want: Expansion<InfiniteOrbitRep> = [
            (inf(3, &[2, 2, 1]), 1),
            (inf(3, &[1, 1]), 1),
            (inf(3, &[2]), 1),
            (inf(3, &[2, 1, 1, 1]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);

        let got = tensor_orbit_product(&inf(3, &[2, 2, 1]), &inf(3, &[1])).unwrap();
        let want: Expansion<InfiniteOrbitRep> = [
            (inf(3, &[2, 2, 2]), 1),
            (inf(3, &[2, 1]), 1),
            (inf(3, &[2, 2, 1, 1]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn zero_is_the_identity() {
        let a = inf(4, &[3, 1, 1]);
        let zero = inf(4, &[]);
        assert_eq!(tensor_orbit_product(&a, &zero).unwrap(), Expansion::singleton(a));
        assert_eq!(
            tensor_orbit_product(&zero, &zero).unwrap(),
            Expansion::singleton(zero)
        );
    }

    #[test]
    fn stable_under_longer_embeddings() {
        let a = inf(3, &[2, 1]);
        let b = inf(3, &[2, 2]);
        let base = tensor_orbit_product(&a, &b).unwrap();
        for len in 5..9 {
            assert_eq!(tensor_orbit_product_at(&a, &b, len).unwrap(), base);
        }
        assert!(tensor_orbit_product_at(&a, &b, 3).is_err());
    }
}
