//! Independent checks of the character table: the projection formula for
//! spherical functions, and explicit adjacency matrices.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::{CharacterTable, IrrepLabel};
use crate::characters::SnCharacters;
use crate::error::{Error, Result};
use crate::injection::{all_injections, CyclePathType, Injection, PairClassifier};
use crate::partition::{factorial, Partition};

/// An injection of type `class` against the identity.
///
/// Cycles occupy consecutive domain points and are rotated; a path of length
/// `p` shifts `p` consecutive points and sends the last one outside `[k]`.
pub fn class_representative(class: &CyclePathType) -> Injection {
    let (k, n) = (class.k(), class.n());
    let mut word = Vec::with_capacity(k);
    let mut start = 1;
    for &c in class.cycles().parts() {
        for i in 0..c {
            word.push(start + (i + 1) % c);
        }
        start += c;
    }
    let mut outside = k + 1;
    for &p in class.paths().parts() {
        for i in 1..p {
            word.push(start + i);
        }
        word.push(outside);
        outside += 1;
        start += p;
    }
    Injection::new(word, n).expect("representative is an injection")
}

/// All permutations of `0..m` in lexicographic order.
fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..m).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..m).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..m).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Cycle type of a permutation of `0..m` as a sorted part list.
fn cycle_parts(perm: &[usize], seen: &mut [bool]) -> Vec<usize> {
    seen.iter_mut().for_each(|s| *s = false);
    let mut parts = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            len += 1;
            i = perm[i];
        }
        parts.push(len);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// Joint cycle-type counts of `(k_1, σ⁻¹ k_1 k_2)` over `K = S_k × S_{n−k}`.
type Histogram = Vec<(Partition, Partition, u64)>;

/// Spherical functions by direct summation of the projection formula
/// `ω(σ) = 1/(k!(n−k)!) Σ_{k_1} χ_μ(k_1) Σ_{k_2} χ_λ(σ⁻¹ k_1 k_2)`.
///
/// The sum over `K` depends on the label only through the characters, so the
/// joint cycle-type histogram is computed once per representative.
#[derive(Debug)]
pub struct SphericalOracle {
    k: usize,
    n: usize,
    chars: SnCharacters,
    histograms: HashMap<Vec<usize>, Histogram>,
}

impl SphericalOracle {
    /// Refuses when `|K| = k!(n−k)!` exceeds `cap`.
    pub fn new(k: usize, n: usize, cap: u128) -> Result<Self> {
        if k > n {
            return Err(Error::InvalidParameters { k, n, reason: "need k <= n" });
        }
        let size = (factorial(k) * factorial(n - k)).to_u128().unwrap_or(u128::MAX);
        if size > cap {
            return Err(Error::BudgetExceeded { estimate: size, budget: cap });
        }
        Ok(SphericalOracle { k, n, chars: SnCharacters::new(), histograms: HashMap::new() })
    }

    fn histogram(&mut self, word: &[usize]) -> &Histogram {
        let (k, n) = (self.k, self.n);
        self.histograms.entry(word.to_vec()).or_insert_with(|| {
            // σ ∈ S_n extends the word by the unused values in increasing order.
            let mut sigma: Vec<usize> = word.iter().map(|v| v - 1).collect();
            let mut used = vec![false; n];
            sigma.iter().for_each(|&v| used[v] = true);
            sigma.extend((0..n).filter(|&v| !used[v]));
            let mut sigma_inv = vec![0; n];
            for (i, &v) in sigma.iter().enumerate() {
                sigma_inv[v] = i;
            }
            let mut seen = vec![false; n];
            let mut counts: HashMap<(Vec<usize>, Vec<usize>), u64> = HashMap::new();
            let inner = permutations(n - k);
            let mut product = vec![0; n];
            for k1 in permutations(k) {
                let type1 = cycle_parts(&k1, &mut seen[..k]);
                for k2 in &inner {
                    for x in 0..k {
                        product[x] = sigma_inv[k1[x]];
                    }
                    for x in 0..n - k {
                        product[k + x] = sigma_inv[k + k2[x]];
                    }
                    let type2 = cycle_parts(&product, &mut seen);
                    *counts.entry((type1.clone(), type2)).or_insert(0) += 1;
                }
            }
            let mut hist: Histogram = counts
                .into_iter()
                .map(|((a, b), c)| (Partition::new(a).unwrap(), Partition::new(b).unwrap(), c))
                .collect();
            hist.sort();
            hist
        })
    }

    /// `ω^{μ⊗λ}` at the coset of the injection `word`.
    pub fn value_at(&mut self, label: &IrrepLabel, word: &Injection) -> Result<BigRational> {
        if label.k() != self.k || label.n() != self.n || word.k() != self.k || word.n() != self.n {
            return Err(Error::DimensionMismatch { k1: word.k(), n1: word.n(), k2: self.k, n2: self.n });
        }
        let hist = self.histogram(word.word()).clone();
        let mut total = BigInt::zero();
        for (c1, c2, count) in hist {
            let a = self.chars.value(label.mu(), &c1);
            let b = self.chars.value(label.lambda(), &c2);
            total += BigInt::from(count) * a * b;
        }
        let order = BigInt::from(factorial(self.k) * factorial(self.n - self.k));
        Ok(BigRational::new(total, order))
    }

    /// `ω^{μ⊗λ}` on the class `class`, evaluated at [`class_representative`].
    pub fn value(&mut self, label: &IrrepLabel, class: &CyclePathType) -> Result<BigRational> {
        if class.k() != self.k || class.n() != self.n {
            return Err(Error::InvalidClass { class: class.to_string(), k: self.k, n: self.n });
        }
        self.value_at(label, &class_representative(class))
    }
}

/// One spherical-function value by the projection formula.
pub fn spherical_oracle(label: &IrrepLabel, class: &CyclePathType, k: usize, n: usize, cap: u128) -> Result<BigRational> {
    SphericalOracle::new(k, n, cap)?.value(label, class)
}

/// Builds every adjacency matrix of the scheme on `X` and checks that the
/// rows of `P` are their simultaneous eigenvalues.
///
/// With `Q_{j,i} = m_i P_{i,j} / v_j`, the matrices
/// `E_i = |X|⁻¹ Σ_j Q_{j,i} A_j` must be orthogonal idempotents summing to the
/// identity, of trace `m_i`, with `A_j E_i = P_{i,j} E_i`. Everything is scaled
/// by `L = lcm(v_j)` to stay in integers. Refuses when `|X|` exceeds `cap`.
pub fn adjacency_eigenspace_check(table: &CharacterTable, cap: usize) -> Result<()> {
    let (k, n) = (table.k(), table.n());
    let points = all_injections_capped(k, n, cap)?;
    let size = points.len();
    let d = table.size();
    let mut classifier = PairClassifier::new(k, n);
    let mut class_of = vec![0usize; size * size];
    let mut index = HashMap::new();
    for (j, c) in table.classes().iter().enumerate() {
        index.insert(c.clone(), j);
    }
    for x in 0..size {
        for y in 0..size {
            let c = classifier.classify(&points[x], &points[y])?;
            class_of[x * size + y] = index[&c];
        }
    }
    let valencies: Vec<i128> = table.valencies().iter().map(|v| v.to_i128().expect("small valency")).collect();
    let lcm = valencies.iter().fold(1i128, |acc, &v| acc.lcm(&v));
    let scale = lcm * size as i128;
    let p: Vec<Vec<i128>> = table
        .p()
        .iter()
        .map(|row| row.iter().map(|x| x.to_i128().expect("small entry")).collect())
        .collect();
    let m: Vec<i128> = table.multiplicities().iter().map(|v| v.to_i128().expect("small multiplicity")).collect();

    for j in 0..d {
        let count = class_of.iter().filter(|&&c| c == j).count() as i128;
        if count != valencies[j] * size as i128 {
            return Err(Error::Integrity(format!("class {} has {} ordered pairs", table.classes()[j], count)));
        }
    }

    let g: Vec<Vec<i128>> = (0..d)
        .map(|i| class_of.iter().map(|&j| lcm / valencies[j] * m[i] * p[i][j]).collect())
        .collect();
    let product = |a: &[i128], b: &[i128]| -> Vec<i128> {
        let mut out = vec![0i128; size * size];
        for x in 0..size {
            for z in 0..size {
                let axz = a[x * size + z];
                if axz == 0 {
                    continue;
                }
                for y in 0..size {
                    out[x * size + y] += axz * b[z * size + y];
                }
            }
        }
        out
    };

    for x in 0..size {
        for y in 0..size {
            let sum: i128 = g.iter().map(|gi| gi[x * size + y]).sum();
            let expected = if x == y { scale } else { 0 };
            if sum != expected {
                return Err(Error::Integrity(format!("idempotents do not sum to the identity at ({x}, {y})")));
            }
        }
    }
    for i in 0..d {
        let trace: i128 = (0..size).map(|x| g[i][x * size + x]).sum();
        if trace != scale * m[i] {
            return Err(Error::Integrity(format!("eigenspace of {} has trace {}/{}", table.irreps()[i], trace, scale)));
        }
        for l in i..d {
            let gg = product(&g[i], &g[l]);
            let ok = if i == l {
                gg.iter().zip(&g[i]).all(|(a, b)| *a == scale * b)
            } else {
                gg.iter().all(|a| *a == 0)
            };
            if !ok {
                return Err(Error::Integrity(format!(
                    "idempotents of {} and {} are not orthogonal",
                    table.irreps()[i],
                    table.irreps()[l]
                )));
            }
        }
        for j in 0..d {
            let a: Vec<i128> = class_of.iter().map(|&c| i128::from(c == j)).collect();
            let ag = product(&a, &g[i]);
            if !ag.iter().zip(&g[i]).all(|(x, y)| *x == p[i][j] * y) {
                return Err(Error::Integrity(format!(
                    "adjacency matrix of {} does not act as {} on the eigenspace of {}",
                    table.classes()[j],
                    p[i][j],
                    table.irreps()[i]
                )));
            }
        }
    }
    Ok(())
}

fn all_injections_capped(k: usize, n: usize, cap: usize) -> Result<Vec<Injection>> {
    let size = crate::partition::falling_factorial(n, k).to_u128().unwrap_or(u128::MAX);
    if size > cap as u128 {
        return Err(Error::BudgetExceeded { estimate: size, budget: cap as u128 });
    }
    Ok(all_injections(k, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::injection::{classify_pair, enumerate_classes};
    use crate::scheme::{combinatorial_table, enumerate_irreps, DEFAULT_BUDGET};
    use num_traits::One;

    #[test]
    fn representatives_have_their_class() {
        for n in 1..=8 {
            for k in 0..=n {
                for class in enumerate_classes(k, n) {
                    let rep = class_representative(&class);
                    assert_eq!(classify_pair(&rep, &Injection::identity(k, n)).unwrap(), class);
                }
            }
        }
    }

    #[test]
    fn trivial_label_and_identity_class() {
        let mut oracle = SphericalOracle::new(3, 5, 1000).unwrap();
        for class in enumerate_classes(3, 5) {
            assert!(oracle.value(&IrrepLabel::trivial(3, 5), &class).unwrap().is_one());
        }
        for label in enumerate_irreps(3, 5) {
            assert!(oracle.value(&label, &CyclePathType::identity(3, 5)).unwrap().is_one());
        }
    }

    #[test]
    fn independent_of_representative() {
        for (k, n) in [(2, 4), (3, 5), (2, 5)] {
            let mut oracle = SphericalOracle::new(k, n, 1000).unwrap();
            let id = Injection::identity(k, n);
            for label in enumerate_irreps(k, n) {
                for sigma in all_injections(k, n) {
                    let class = classify_pair(&sigma, &id).unwrap();
                    assert_eq!(oracle.value_at(&label, &sigma).unwrap(), oracle.value(&label, &class).unwrap());
                }
            }
        }
    }

    #[test]
    fn refuses_over_cap() {
        assert!(matches!(SphericalOracle::new(4, 8, 100), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn adjacency_check_passes_and_catches_faults() {
        let table = combinatorial_table(2, 4, DEFAULT_BUDGET).unwrap();
        adjacency_eigenspace_check(&table, 100).unwrap();
        let mut bad = table.clone();
        *bad.entry_mut(2, 3) += 1;
        assert!(adjacency_eigenspace_check(&bad, 100).is_err());
        assert!(adjacency_eigenspace_check(&table, 5).is_err());
    }
}
