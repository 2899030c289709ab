//! Character tables of the `(k, n)`-injection scheme.
//!
//! Rows are indexed by irreducible constituents `μ ⊗ λ` (`μ ⊢ k`, `λ ⊢ n`,
//! `λ/μ` a horizontal strip) and columns by cycle-path types. The entry
//! `P[μ⊗λ][(γ|ρ)]` is the sum of the cover kernel of the canonical tableau pair
//! of `(μ, λ)` over the sphere of type `(γ|ρ)`.

mod cover;
mod dual;
mod intersection;
mod oracle;
mod validate;

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::characters::SnCharacters;
use crate::error::{Error, Result};
use crate::injection::{enumerate_classes, for_each_injection_word, CyclePathType, PairClassifier};
use crate::partition::{falling_factorial, is_horizontal_strip, strip_pairs, syt_count, Partition};

pub use cover::{canonical_pair, signed_cover_count, CoverKernel, KernelScratch};
pub use dual::{dual_table, DualTable};
pub use intersection::{intersection_numbers, IntersectionNumbers};
pub use oracle::{adjacency_eigenspace_check, class_representative, spherical_oracle, SphericalOracle};
pub use validate::{validate, validate_with_caps, Check, ValidationLevel, ValidationReport, ADJACENCY_CAP, ORACLE_CAP};

/// Default cap on kernel evaluations (`|X| × #irreps`) for one table.
pub const DEFAULT_BUDGET: u128 = 1_000_000_000;

/// An irreducible constituent `μ ⊗ λ` of the permutation representation on injections.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrrepLabel {
    mu: Partition,
    lambda: Partition,
}

impl IrrepLabel {
    pub fn new(mu: Partition, lambda: Partition) -> Result<Self> {
        if !is_horizontal_strip(&lambda, &mu) {
            return Err(Error::ShapeMismatch(format!("{lambda}/{mu} is not a horizontal strip")));
        }
        Ok(IrrepLabel { mu, lambda })
    }

    /// The trivial constituent `(k) ⊗ (n)`.
    pub fn trivial(k: usize, n: usize) -> Self {
        IrrepLabel {
            mu: Partition::row(k),
            lambda: Partition::row(n),
        }
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn k(&self) -> usize {
        self.mu.weight()
    }

    pub fn n(&self) -> usize {
        self.lambda.weight()
    }

    /// Dimension `f^μ f^λ`, which is the eigenspace multiplicity.
    pub fn multiplicity(&self) -> BigUint {
        syt_count(&self.mu) * syt_count(&self.lambda)
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.mu, self.lambda)
    }
}

/// All irreducible labels of the `(k, n)` scheme, trivial first.
pub fn enumerate_irreps(k: usize, n: usize) -> Vec<IrrepLabel> {
    strip_pairs(k, n)
        .into_iter()
        .map(|(mu, lambda)| IrrepLabel { mu, lambda })
        .collect()
}

/// The cycle-path type matched with an irreducible label.
///
/// Mark the cells of `λ/μ`. A column of `μ` with a marked cell below it gives
/// a path part equal to its length; an unmarked column of `μ` gives a cycle
/// part; every marked cell outside `μ`'s columns is a zero-length path.
pub fn irrep_to_class(label: &IrrepLabel) -> CyclePathType {
    let (k, n) = (label.k(), label.n());
    let mu_cols = label.mu.transpose();
    let lambda_cols = label.lambda.transpose();
    let mut cycles = Vec::new();
    let mut paths = Vec::new();
    for (j, &height) in mu_cols.parts().iter().enumerate() {
        if lambda_cols.part(j) > height {
            paths.push(height);
        } else {
            cycles.push(height);
        }
    }
    CyclePathType::new(
        Partition::from_unsorted(cycles).expect("column lengths are positive"),
        Partition::from_unsorted(paths).expect("column lengths are positive"),
        k,
        n,
    )
    .expect("columns of μ account for k domain points and at most n − k paths")
}

/// Exact eigenmatrix of the `(k, n)`-injection scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    k: usize,
    n: usize,
    classes: Vec<CyclePathType>,
    valencies: Vec<BigUint>,
    irreps: Vec<IrrepLabel>,
    multiplicities: Vec<BigUint>,
    p: Vec<Vec<BigInt>>,
}

impl CharacterTable {
    /// Assembles a table from its parts, checking only labels and dimensions.
    /// Use [`validate`] for the algebraic invariants.
    pub fn from_parts(
        k: usize,
        n: usize,
        classes: Vec<CyclePathType>,
        irreps: Vec<IrrepLabel>,
        p: Vec<Vec<BigInt>>,
    ) -> Result<Self> {
        let d = classes.len();
        if irreps.len() != d || p.len() != d || p.iter().any(|row| row.len() != d) {
            return Err(Error::Integrity(format!(
                "table has {} classes, {} irreps and a {}-row matrix",
                d,
                irreps.len(),
                p.len()
            )));
        }
        for c in &classes {
            if c.k() != k || c.n() != n {
                return Err(Error::InvalidClass { class: c.to_string(), k, n });
            }
        }
        for label in &irreps {
            if label.k() != k || label.n() != n {
                return Err(Error::Integrity(format!("irrep {label} does not belong to ({k}, {n})")));
            }
        }
        let valencies = classes.iter().map(CyclePathType::sphere_size).collect();
        let multiplicities = irreps.iter().map(IrrepLabel::multiplicity).collect();
        Ok(CharacterTable { k, n, classes, valencies, irreps, multiplicities, p })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of classes (equivalently irreps), `d + 1`.
    pub fn size(&self) -> usize {
        self.classes.len()
    }

    /// `|X| = n!/(n−k)!`.
    pub fn order(&self) -> BigUint {
        falling_factorial(self.n, self.k)
    }

    pub fn classes(&self) -> &[CyclePathType] {
        &self.classes
    }

    pub fn valencies(&self) -> &[BigUint] {
        &self.valencies
    }

    pub fn irreps(&self) -> &[IrrepLabel] {
        &self.irreps
    }

    pub fn multiplicities(&self) -> &[BigUint] {
        &self.multiplicities
    }

    /// Rows indexed by irrep, columns by class.
    pub fn p(&self) -> &[Vec<BigInt>] {
        &self.p
    }

    pub fn entry(&self, irrep: usize, class: usize) -> &BigInt {
        &self.p[irrep][class]
    }

    pub fn class_index(&self, class: &CyclePathType) -> Option<usize> {
        self.classes.iter().position(|c| c == class)
    }

    pub fn irrep_index(&self, label: &IrrepLabel) -> Option<usize> {
        self.irreps.iter().position(|l| l == label)
    }

    /// Mutable access for fault-injection tests.
    #[doc(hidden)]
    pub fn entry_mut(&mut self, irrep: usize, class: usize) -> &mut BigInt {
        &mut self.p[irrep][class]
    }
}

fn check_parameters(k: usize, n: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameters { k, n, reason: "need 1 <= k <= n" });
    }
    if n > 24 {
        return Err(Error::InvalidParameters { k, n, reason: "n above 24 is not supported" });
    }
    Ok(())
}

/// Kernel evaluations needed by the combinatorial route: `|X| × #irreps`.
pub fn estimated_cost(k: usize, n: usize) -> u128 {
    let order = falling_factorial(n, k).to_u128().unwrap_or(u128::MAX);
    order.saturating_mul(strip_pairs(k, n).len() as u128)
}

/// Cost of the route [`character_table`] takes: character evaluations
/// (`#classes²`) when `k = n`, otherwise [`estimated_cost`].
pub fn table_cost(k: usize, n: usize) -> u128 {
    if k == n {
        let d = strip_pairs(n, n).len() as u128;
        d * d
    } else {
        estimated_cost(k, n)
    }
}

/// The character table, using the symmetric-group route when `k = n` and the
/// combinatorial route otherwise. Refuses when the combinatorial cost exceeds `budget`.
pub fn character_table(k: usize, n: usize, budget: u128) -> Result<CharacterTable> {
    check_parameters(k, n)?;
    if k == n {
        let estimate = table_cost(k, n);
        if estimate > budget {
            return Err(Error::BudgetExceeded { estimate, budget });
        }
        permutation_table(n)
    } else {
        combinatorial_table(k, n, budget)
    }
}

/// Packs a sorted cycle list and path list into one key (5 bits per part,
/// parts separated by a zero digit). Valid for `n ≤ 24`.
fn pack_type(cycles: &[usize], paths: &[usize]) -> u128 {
    let mut key = 0u128;
    for &c in cycles {
        key = (key << 5) | c as u128;
    }
    key <<= 5;
    for &p in paths {
        key = (key << 5) | p as u128;
    }
    key
}

/// Assigns class indices to injections by classifying against the identity.
struct ClassLookup {
    index: HashMap<u128, usize>,
}

impl ClassLookup {
    fn new(classes: &[CyclePathType]) -> Self {
        let index = classes
            .iter()
            .enumerate()
            .map(|(i, c)| (pack_type(c.cycles().parts(), c.paths().parts()), i))
            .collect();
        ClassLookup { index }
    }

    fn lookup(&self, classifier: &mut PairClassifier, word: &[usize], identity: &[usize]) -> usize {
        classifier.classify_words(word, identity);
        self.index[&pack_type(&classifier.cycles, &classifier.paths)]
    }
}

/// Every injection word's prefix of length `min(k, 2)`, the unit of parallel work.
fn work_prefixes(k: usize, n: usize) -> Vec<Vec<usize>> {
    let depth = k.min(2);
    let mut out = Vec::new();
    for_each_injection_word(depth, n, &[], |w| out.push(w.to_vec()));
    out
}

/// Character table by summing the cover kernel over all of `X`.
pub fn combinatorial_table(k: usize, n: usize, budget: u128) -> Result<CharacterTable> {
    check_parameters(k, n)?;
    let estimate = estimated_cost(k, n);
    if estimate > budget {
        return Err(Error::BudgetExceeded { estimate, budget });
    }
    let classes = enumerate_classes(k, n);
    let irreps = enumerate_irreps(k, n);
    let d = classes.len();
    let kernels: Vec<CoverKernel> = irreps
        .iter()
        .map(|l| CoverKernel::canonical(&l.mu, &l.lambda))
        .collect::<Result<_>>()?;
    let lookup = ClassLookup::new(&classes);
    let identity: Vec<usize> = (1..=k).collect();

    let sums = work_prefixes(k, n)
        .into_par_iter()
        .map(|prefix| {
            let mut acc = vec![0i64; d * d];
            let mut classifier = PairClassifier::new(k, n);
            let mut scratch = KernelScratch::new(n);
            for_each_injection_word(k, n, &prefix, |word| {
                let j = lookup.lookup(&mut classifier, word, &identity);
                for (i, kernel) in kernels.iter().enumerate() {
                    acc[i * d + j] += kernel.eval_word(word, &mut scratch);
                }
            });
            acc
        })
        .reduce(
            || vec![0i64; d * d],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    let p = sums.chunks(d).map(|row| row.iter().map(|&v| BigInt::from(v)).collect()).collect();
    CharacterTable::from_parts(k, n, classes, irreps, p)
}

/// Character table of the conjugacy scheme of `S_n` (the case `k = n`):
/// `P[λ⊗λ][C] = |C| χ_λ(C) / χ_λ(1)`.
pub fn permutation_table(n: usize) -> Result<CharacterTable> {
    check_parameters(n, n)?;
    let classes = enumerate_classes(n, n);
    let irreps = enumerate_irreps(n, n);
    let mut chars = SnCharacters::new();
    let column = Partition::column(n);
    let p = irreps
        .iter()
        .map(|label| {
            let degree = chars.value(&label.lambda, &column);
            classes
                .iter()
                .map(|c| {
                    let numerator = BigInt::from(c.sphere_size()) * chars.value(&label.lambda, c.cycles());
                    let (q, r) = (&numerator / degree, &numerator % degree);
                    if !r.is_zero() {
                        return Err(Error::Integrity(format!("central character of {label} at {c} is not integral")));
                    }
                    Ok(q)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    CharacterTable::from_parts(n, n, classes, irreps, p)
}

/// A single entry of `P` by summing the kernel over one sphere.
pub fn eigenvalue(label: &IrrepLabel, class: &CyclePathType, k: usize, n: usize) -> Result<BigInt> {
    check_parameters(k, n)?;
    if label.k() != k || label.n() != n {
        return Err(Error::Integrity(format!("irrep {label} does not belong to ({k}, {n})")));
    }
    if class.k() != k || class.n() != n {
        return Err(Error::InvalidClass { class: class.to_string(), k, n });
    }
    let kernel = CoverKernel::canonical(&label.mu, &label.lambda)?;
    let key = pack_type(class.cycles().parts(), class.paths().parts());
    let identity: Vec<usize> = (1..=k).collect();
    let mut classifier = PairClassifier::new(k, n);
    let mut scratch = KernelScratch::new(n);
    let mut total = 0i64;
    for_each_injection_word(k, n, &[], |word| {
        classifier.classify_words(word, &identity);
        if pack_type(&classifier.cycles, &classifier.paths) == key {
            total += kernel.eval_word(word, &mut scratch);
        }
    });
    Ok(BigInt::from(total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::injection::CyclePathType;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn label(mu: &[usize], lambda: &[usize]) -> IrrepLabel {
        IrrepLabel::new(p(mu), p(lambda)).unwrap()
    }

    #[test]
    fn irrep_to_class_examples() {
        let c = irrep_to_class(&label(&[2, 1], &[4, 2, 1]));
        assert_eq!(c, CyclePathType::new(Partition::empty(), p(&[2, 1]), 3, 7).unwrap());
        assert_eq!(c.zero_paths(), 2);
        let c = irrep_to_class(&label(&[2, 1], &[5, 1, 1]));
        assert_eq!(c, CyclePathType::new(p(&[1]), p(&[2]), 3, 7).unwrap());
        let c = irrep_to_class(&label(&[2, 1], &[5, 2]));
        assert_eq!(c, CyclePathType::new(p(&[2]), p(&[1]), 3, 7).unwrap());
        let c = irrep_to_class(&label(&[2, 1], &[6, 1]));
        assert_eq!(c, CyclePathType::new(p(&[2, 1]), Partition::empty(), 3, 7).unwrap());
        assert_eq!(c.zero_paths(), 4);
    }

    #[test]
    fn irrep_to_class_is_a_bijection() {
        for n in 1..=9 {
            for k in 0..=n {
                let mut images: Vec<CyclePathType> = enumerate_irreps(k, n).iter().map(irrep_to_class).collect();
                images.sort();
                assert_eq!(images, enumerate_classes(k, n), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn irreps_start_with_trivial() {
        let irreps = enumerate_irreps(3, 6);
        assert_eq!(irreps[0], IrrepLabel::trivial(3, 6));
        assert!(IrrepLabel::new(p(&[1]), p(&[2, 2])).is_err());
        assert_eq!(label(&[2, 1], &[3, 1]).multiplicity(), BigUint::from(6u32));
    }

    #[test]
    fn one_two_table() {
        let t = character_table(1, 2, DEFAULT_BUDGET).unwrap();
        let expected = vec![vec![BigInt::from(1), BigInt::from(1)], vec![BigInt::from(1), BigInt::from(-1)]];
        assert_eq!(t.p(), &expected[..]);
    }

    #[test]
    fn trivial_row_and_identity_column() {
        for (k, n) in [(2, 4), (3, 5), (3, 6), (4, 6)] {
            let t = combinatorial_table(k, n, DEFAULT_BUDGET).unwrap();
            for j in 0..t.size() {
                assert_eq!(t.entry(0, j), &BigInt::from(t.valencies()[j].clone()));
            }
            for i in 0..t.size() {
                assert_eq!(t.entry(i, 0), &BigInt::from(1));
            }
        }
    }

    #[test]
    fn single_entries_match_table() {
        let t = combinatorial_table(3, 5, DEFAULT_BUDGET).unwrap();
        for (i, l) in t.irreps().iter().enumerate() {
            for (j, c) in t.classes().iter().enumerate() {
                assert_eq!(&eigenvalue(l, c, 3, 5).unwrap(), t.entry(i, j));
            }
        }
    }

    #[test]
    fn vanishing_on_many_paths() {
        // λ = μ̄ puts the whole strip in the first row; classes with more than
        // μ_1 nontrivial paths see a zero spherical function.
        for (k, n) in [(3, 6), (3, 7), (4, 7), (2, 5)] {
            let t = combinatorial_table(k, n, DEFAULT_BUDGET).unwrap();
            let mut checked = 0;
            for mu in crate::partition::enumerate_partitions(k, None) {
                let mut bar = mu.parts().to_vec();
                bar[0] += n - k;
                let i = t.irrep_index(&label(mu.parts(), &bar)).unwrap();
                for (j, c) in t.classes().iter().enumerate() {
                    if c.paths().len() > mu.part(0) {
                        assert!(t.entry(i, j).is_zero(), "{mu} at {c}");
                        checked += 1;
                    }
                }
            }
            assert!(checked > 0);
        }
    }

    #[test]
    fn permutation_route_agrees_with_combinatorial() {
        for n in 1..=5 {
            assert_eq!(permutation_table(n).unwrap(), combinatorial_table(n, n, DEFAULT_BUDGET).unwrap());
        }
    }

    #[test]
    fn refuses_over_budget() {
        let err = combinatorial_table(5, 8, 1000).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { budget: 1000, .. }));
        assert!(character_table(0, 3, DEFAULT_BUDGET).is_err());
        assert!(character_table(4, 3, DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn deterministic_across_thread_counts() {
        let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let four = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
        let a = one.install(|| combinatorial_table(4, 7, DEFAULT_BUDGET).unwrap());
        let b = four.install(|| combinatorial_table(4, 7, DEFAULT_BUDGET).unwrap());
        assert_eq!(a, b);
    }
}
