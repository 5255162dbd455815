use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;
use crate::context::FusionContext;
use crate::error::{Error, Result};

use super::multiply::{basis, multiply};
use super::pieri::SchurExpansion;

/// Default bound on the basis size accepted by [`full_table`].
pub const DEFAULT_TABLE_CAP: usize = 200;

/// Schema tag of the serialized table format.
pub const TABLE_SCHEMA: &str = "fusionkit/table/v1";

/// All products of basis elements of the fusion ring at `ctx`.
///
/// `products[a * n + b]` lists `(c, N^c_{a,b})` with `c` increasing and
/// every multiplicity non-zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionTable {
    ctx: FusionContext,
    basis: Vec<Partition>,
    products: Vec<Vec<(usize, i64)>>,
}

impl FusionTable {
    pub fn ctx(&self) -> &FusionContext {
        &self.ctx
    }

    pub fn basis(&self) -> &[Partition] {
        &self.basis
    }

    pub fn size(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.basis.binary_search(p).ok()
    }

    /// Non-zero terms of `x_a x_b`.
    pub fn product(&self, a: usize, b: usize) -> &[(usize, i64)] {
        &self.products[a * self.size() + b]
    }

    /// `N^c_{a,b}`.
    pub fn constant(&self, a: usize, b: usize, c: usize) -> i64 {
        let row = self.product(a, b);
        row.binary_search_by_key(&c, |&(i, _)| i)
            .map_or(0, |pos| row[pos].1)
    }

    /// `x_a x_b` as an expansion over partitions.
    pub fn product_expansion(&self, a: usize, b: usize) -> SchurExpansion {
        self.product(a, b)
            .iter()
            .map(|&(c, m)| (self.basis[c].clone(), m))
            .collect()
    }

    pub fn structure_constants(&self) -> StructureConstants {
        let n = self.size();
        let mut sc = StructureConstants::zeros(n);
        for a in 0..n {
            for b in 0..n {
                for &(c, m) in self.product(a, b) {
                    sc.set(a, b, c, m);
                }
            }
        }
        sc
    }

    pub fn to_json(&self) -> Result<String> {
        let file = TableFile {
            schema: TABLE_SCHEMA.to_string(),
            n: self.ctx.n(),
            k: self.ctx.k(),
            basis: self.basis.iter().map(|p| p.parts().to_vec()).collect(),
            constants: self
                .products
                .iter()
                .map(|row| row.iter().map(|&(c, m)| [c as i64, m]).collect())
                .collect(),
        };
        serde_json::to_string(&file).map_err(|e| Error::Format(e.to_string()))
    }

    /// Parses and validates a serialized table, including that its basis is
    /// the basis of the declared context.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: TableFile =
            serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        if file.schema != TABLE_SCHEMA {
            return Err(Error::Format(format!(
                "schema {:?}, expected {TABLE_SCHEMA:?}",
                file.schema
            )));
        }
        let ctx = FusionContext::new(file.n, file.k)?;
        let expected = basis(&ctx);
        let got: Vec<Partition> = file
            .basis
            .into_iter()
            .map(Partition::new)
            .collect::<Result<_>>()?;
        if got != expected {
            return Err(Error::Format(format!("basis does not match {ctx}")));
        }
        let n = expected.len();
        if file.constants.len() != n * n {
            return Err(Error::Format(format!(
                "{} product rows, expected {}",
                file.constants.len(),
                n * n
            )));
        }
        let mut products = Vec::with_capacity(n * n);
        for row in file.constants {
            let mut parsed = Vec::with_capacity(row.len());
            for [c, m] in row {
                let c = usize::try_from(c)
                    .ok()
                    .filter(|&c| c < n)
                    .ok_or_else(|| Error::Format(format!("basis index {c} out of range")))?;
                if m == 0 || parsed.last().is_some_and(|&(prev, _)| prev >= c) {
                    return Err(Error::Format("product row is not canonical".into()));
                }
                parsed.push((c, m));
            }
            products.push(parsed);
        }
        Ok(Self {
            ctx,
            basis: expected,
            products,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct TableFile {
    schema: String,
    #[serde(rename = "N")]
    n: usize,
    k: usize,
    basis: Vec<Vec<usize>>,
    constants: Vec<Vec<[i64; 2]>>,
}

/// [`full_table_with_cap`] with [`DEFAULT_TABLE_CAP`].
pub fn full_table(ctx: &FusionContext) -> Result<FusionTable> {
    full_table_with_cap(ctx, DEFAULT_TABLE_CAP)
}

/// Multiplies every ordered pair of basis elements. Pairs are evaluated in
/// parallel and collected in index order.
pub fn full_table_with_cap(ctx: &FusionContext, cap: usize) -> Result<FusionTable> {
    let size = ctx.basis_size();
    if size > cap {
        return Err(Error::TooLarge {
            what: "fusion table basis",
            got: size,
            limit: cap,
        });
    }
    let basis = basis(ctx);
    let products = (0..size * size)
        .into_par_iter()
        .map(|idx| {
            let (a, b) = (idx / size, idx % size);
            let e = multiply(&basis[a], &basis[b], ctx)?;
            e.iter()
                .map(|(p, m)| {
                    let c = basis.binary_search(p).map_err(|_| Error::OutsideBox {
                        partition: p.parts().to_vec(),
                        rows: ctx.n() - 1,
                        cols: ctx.k(),
                    })?;
                    Ok((c, m))
                })
                .collect::<Result<Vec<_>>>()
                .map(|mut row| {
                    row.sort_unstable();
                    row
                })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FusionTable {
        ctx: *ctx,
        basis,
        products,
    })
}

/// Dense structure constants `N^c_{a,b}` of an algebra with basis `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    n: usize,
    data: Vec<i64>,
}

impl StructureConstants {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0; n * n * n],
        }
    }

    /// Builds constants from `x_a x_b = Σ_c f(a, b, c) x_c`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize, usize) -> i64) -> Self {
        let mut sc = Self::zeros(n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    sc.set(a, b, c, f(a, b, c));
                }
            }
        }
        sc
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> i64 {
        self.data[(a * self.n + b) * self.n + c]
    }

    pub fn set(&mut self, a: usize, b: usize, c: usize, v: i64) {
        self.data[(a * self.n + b) * self.n + c] = v;
    }

    fn row(&self, a: usize, b: usize) -> &[i64] {
        let start = (a * self.n + b) * self.n;
        &self.data[start..start + self.n]
    }
}

/// The six checks made by [`verify_fusion_axioms`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    NonNegative,
    Commutative,
    Associative,
    Identity,
    Conjugation,
    TotalSymmetry,
}

impl Axiom {
    pub const ALL: [Axiom; 6] = [
        Axiom::NonNegative,
        Axiom::Commutative,
        Axiom::Associative,
        Axiom::Identity,
        Axiom::Conjugation,
        Axiom::TotalSymmetry,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Axiom::NonNegative => "non-negative integer constants",
            Axiom::Commutative => "commutativity",
            Axiom::Associative => "associativity",
            Axiom::Identity => "identity element",
            Axiom::Conjugation => "conjugation is an involutive permutation",
            Axiom::TotalSymmetry => "total symmetry of N_{a,b,c}",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
    /// Index of the identity element, if one exists.
    pub identity: Option<usize>,
    /// The conjugation `σ`, if it is a well-defined involution.
    pub conjugation: Option<Vec<usize>>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, axiom: Axiom) -> &AxiomCheck {
        self.checks
            .iter()
            .find(|c| c.axiom == axiom)
            .expect("every axiom is checked")
    }
}

fn outcome(axiom: Axiom, witness: Option<String>) -> AxiomCheck {
    AxiomCheck {
        axiom,
        passed: witness.is_none(),
        witness,
    }
}

/// Checks the fusion-algebra axioms, returning the first witness of each
/// failure.
pub fn verify_fusion_axioms(sc: &StructureConstants) -> AxiomReport {
    let n = sc.size();
    let triples = || (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))));

    let negative = triples()
        .find(|&(a, b, c)| sc.get(a, b, c) < 0)
        .map(|(a, b, c)| format!("N^{c}_{{{a},{b}}} = {}", sc.get(a, b, c)));

    let noncommuting = triples()
        .find(|&(a, b, c)| sc.get(a, b, c) != sc.get(b, a, c))
        .map(|(a, b, c)| format!("N^{c}_{{{a},{b}}} != N^{c}_{{{b},{a}}}"));

    let nonassociative = associativity_witness(sc);

    let identity = (0..n).find(|&w| {
        (0..n).all(|b| (0..n).all(|c| {
            let want = i64::from(b == c);
            sc.get(w, b, c) == want && sc.get(b, w, c) == want
        }))
    });
    let identity_witness = identity.is_none().then(|| "no basis element acts as the identity".to_string());

    let (conjugation, conjugation_witness) = match identity {
        None => (None, Some("requires an identity element".to_string())),
        Some(w) => conjugation_of(sc, w),
    };

    let symmetry_witness = match &conjugation {
        None => Some("requires a conjugation".to_string()),
        Some(sigma) => {
            let lowered = |a: usize, b: usize, c: usize| sc.get(a, b, sigma[c]);
            triples()
                .find(|&(a, b, c)| {
                    let v = lowered(a, b, c);
                    v != lowered(b, a, c) || v != lowered(b, c, a)
                })
                .map(|(a, b, c)| format!("N_{{{a},{b},{c}}} is not symmetric"))
        }
    };

    AxiomReport {
        checks: vec![
            outcome(Axiom::NonNegative, negative),
            outcome(Axiom::Commutative, noncommuting),
            outcome(Axiom::Associative, nonassociative),
            outcome(Axiom::Identity, identity_witness),
            outcome(Axiom::Conjugation, conjugation_witness),
            outcome(Axiom::TotalSymmetry, symmetry_witness),
        ],
        identity,
        conjugation,
    }
}

/// Compares `(x_a x_b) x_c` with `x_a (x_b x_c)` for all triples.
fn associativity_witness(sc: &StructureConstants) -> Option<String> {
    let n = sc.size();
    let sparse: Vec<Vec<(usize, i64)>> = (0..n * n)
        .map(|idx| {
            sc.row(idx / n, idx % n)
                .iter()
                .enumerate()
                .filter(|(_, &m)| m != 0)
                .map(|(c, &m)| (c, m))
                .collect()
        })
        .collect();
    let row = |a: usize, b: usize| &sparse[a * n + b];
    (0..n)
        .into_par_iter()
        .find_map_first(|a| {
            let mut left = vec![0i64; n];
            let mut right = vec![0i64; n];
            for b in 0..n {
                for c in 0..n {
                    left.iter_mut().for_each(|v| *v = 0);
                    right.iter_mut().for_each(|v| *v = 0);
                    for &(d, m) in row(a, b) {
                        for &(e, m2) in row(d, c) {
                            left[e] += m * m2;
                        }
                    }
                    for &(d, m) in row(b, c) {
                        for &(e, m2) in row(a, d) {
                            right[e] += m * m2;
                        }
                    }
                    if let Some(e) = (0..n).find(|&e| left[e] != right[e]) {
                        return Some(format!(
                            "coefficient of x_{e} in (x_{a} x_{b}) x_{c} is {}, in x_{a} (x_{b} x_{c}) is {}",
                            left[e], right[e]
                        ));
                    }
                }
            }
            None
        })
}

/// `C_{ab} = N^ω_{a,b}` must be a permutation matrix squaring to the identity.
fn conjugation_of(sc: &StructureConstants, w: usize) -> (Option<Vec<usize>>, Option<String>) {
    let n = sc.size();
    let mut sigma = Vec::with_capacity(n);
    for a in 0..n {
        let ones: Vec<usize> = (0..n).filter(|&b| sc.get(a, b, w) != 0).collect();
        match ones.as_slice() {
            [b] if sc.get(a, *b, w) == 1 => sigma.push(*b),
            _ => {
                return (
                    None,
                    Some(format!("row {a} of C has entries at {ones:?}")),
                )
            }
        }
    }
    if let Some(a) = (0..n).find(|&a| sigma[sigma[a]] != a) {
        return (None, Some(format!("C^2 moves {a} to {}", sigma[sigma[a]])));
    }
    (Some(sigma), None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn ctx(n: usize, k: usize) -> FusionContext {
        FusionContext::new(n, k).unwrap()
    }

    fn three_dimensional_example() -> StructureConstants {
        // x_1 x_1 = x_0, x_1 x_2 = x_2, x_2 x_2 = x_0 + x_1
        let mut sc = StructureConstants::zeros(3);
        for b in 0..3 {
            sc.set(0, b, b, 1);
            sc.set(b, 0, b, 1);
        }
        sc.set(1, 1, 0, 1);
        sc.set(1, 2, 2, 1);
        sc.set(2, 1, 2, 1);
        sc.set(2, 2, 0, 1);
        sc.set(2, 2, 1, 1);
        sc
    }

    #[test]
    fn textbook_three_dimensional_table_passes() {
        let report = verify_fusion_axioms(&three_dimensional_example());
        assert!(report.all_passed(), "{report:?}");
        assert_eq!(report.identity, Some(0));
        assert_eq!(report.conjugation, Some(vec![0, 1, 2]));
    }

    #[test]
    fn broken_tables_produce_witnesses() {
        let mut sc = three_dimensional_example();
        sc.set(2, 2, 1, 2);
        let report = verify_fusion_axioms(&sc);
        assert!(!report.check(Axiom::Associative).passed);
        assert!(report.check(Axiom::Commutative).passed);

        let mut sc = three_dimensional_example();
        sc.set(1, 2, 1, -1);
        let report = verify_fusion_axioms(&sc);
        assert!(!report.check(Axiom::NonNegative).passed);
        assert!(!report.check(Axiom::Commutative).passed);

        let mut sc = three_dimensional_example();
        sc.set(0, 1, 1, 0);
        let report = verify_fusion_axioms(&sc);
        assert!(!report.check(Axiom::Identity).passed);
        assert!(!report.check(Axiom::TotalSymmetry).passed);
    }

    #[test]
    fn level_one_sl3_conjugation_swaps_fundamentals() {
        let table = full_table(&ctx(3, 1)).unwrap();
        assert_eq!(table.basis(), &[part![], part![1], part![1, 1]]);
        let report = verify_fusion_axioms(&table.structure_constants());
        assert!(report.all_passed());
        assert_eq!(report.conjugation, Some(vec![0, 2, 1]));
    }

    #[test]
    fn a1_level_one_table() {
        let table = full_table(&ctx(2, 1)).unwrap();
        assert_eq!(table.product(1, 1), &[(0, 1)]);
        for b in 0..2 {
            assert_eq!(table.product(0, b), &[(b, 1)]);
        }
    }

    #[test]
    fn json_round_trip_and_validation() {
        let table = full_table(&ctx(3, 2)).unwrap();
        let text = table.to_json().unwrap();
        assert!(text.starts_with("{\"schema\":\"fusionkit/table/v1\",\"N\":3,\"k\":2,"));
        assert_eq!(FusionTable::from_json(&text).unwrap(), table);

        let stale = text.replace("fusionkit/table/v1", "fusionkit/table/v0");
        assert!(FusionTable::from_json(&stale).is_err());
        assert!(FusionTable::from_json("{").is_err());
        let wrong_ctx = text.replace("\"k\":2", "\"k\":3");
        assert!(FusionTable::from_json(&wrong_ctx).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(full_table_with_cap(&ctx(4, 3), 10).is_err());
    }
}
