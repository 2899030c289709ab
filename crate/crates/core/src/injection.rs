//! Injections `[k] → [n]` and their pairwise cycle-path classification.
//!
//! Two injections `a`, `b` are drawn as perfect matchings of `[k]` into `[n]`
//! in the bipartite graph on `[k] ⊔ [n]`. Their multiunion is a disjoint union
//! of even cycles and even paths. A cycle through `c` domain vertices is a
//! cycle part `c`; a path through `p` domain vertices (so `p + 1` codomain
//! vertices) is a path part `p`, and an isolated codomain vertex is a path of
//! length zero. The resulting type `(λ|ρ)` indexes the orbitals of
//! `S_k × S_n` acting by `(τ, π)·σ = π∘σ∘τ⁻¹`.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, factorial, Partition};

/// A word of `k` pairwise distinct values from `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Injection {
    word: Vec<usize>,
    n: usize,
}

impl Injection {
    pub fn new(word: Vec<usize>, n: usize) -> Result<Self> {
        let k = word.len();
        if k > n {
            return Err(Error::InvalidInjection { word, k, n, reason: "k exceeds n" });
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n {
                return Err(Error::InvalidInjection { word, k, n, reason: "value out of range" });
            }
            if seen[v] {
                return Err(Error::InvalidInjection { word, k, n, reason: "repeated value" });
            }
            seen[v] = true;
        }
        Ok(Injection { word, n })
    }

    pub fn identity(k: usize, n: usize) -> Self {
        assert!(k <= n);
        Injection { word: (1..=k).collect(), n }
    }

    pub(crate) fn from_word_unchecked(word: Vec<usize>, n: usize) -> Self {
        Injection { word, n }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn k(&self) -> usize {
        self.word.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// Values of `1..=n` outside the image, ascending.
    pub fn unused(&self) -> Vec<usize> {
        let mut used = vec![false; self.n + 1];
        for &v in &self.word {
            used[v] = true;
        }
        (1..=self.n).filter(|&v| !used[v]).collect()
    }

    /// `(τ, π)·σ = π∘σ∘τ⁻¹`, with `tau` a permutation of `1..=k` and `pi` of
    /// `1..=n`, both given as one-line words.
    pub fn act(&self, tau: &[usize], pi: &[usize]) -> Injection {
        assert_eq!(tau.len(), self.k());
        assert_eq!(pi.len(), self.n);
        let mut word = vec![0; self.k()];
        for i in 1..=self.k() {
            // σ∘τ⁻¹ sends τ(i) to σ(i).
            word[tau[i - 1] - 1] = pi[self.apply(i) - 1];
        }
        Injection { word, n: self.n }
    }

    fn check_same_space(&self, other: &Injection) -> Result<()> {
        if self.k() != other.k() || self.n != other.n {
            return Err(Error::DimensionMismatch {
                k1: self.k(),
                n1: self.n,
                k2: other.k(),
                n2: other.n,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Injection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.word.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All injections `[k] → [n]` in lexicographic order of their words.
pub fn all_injections(k: usize, n: usize) -> Vec<Injection> {
    let mut out = Vec::new();
    for_each_injection_word(k, n, &[], |w| out.push(Injection::from_word_unchecked(w.to_vec(), n)));
    out
}

/// Calls `f` on every injection word of length `k` that starts with `prefix`,
/// in lexicographic order.
pub fn for_each_injection_word<F: FnMut(&[usize])>(k: usize, n: usize, prefix: &[usize], mut f: F) {
    let mut used = vec![false; n + 1];
    for &v in prefix {
        used[v] = true;
    }
    let mut word = prefix.to_vec();
    extend_word(k, n, &mut word, &mut used, &mut f);
}

fn extend_word<F: FnMut(&[usize])>(k: usize, n: usize, word: &mut Vec<usize>, used: &mut [bool], f: &mut F) {
    if word.len() == k {
        f(word);
        return;
    }
    for v in 1..=n {
        if !used[v] {
            used[v] = true;
            word.push(v);
            extend_word(k, n, word, used, f);
            word.pop();
            used[v] = false;
        }
    }
}

/// Number of positions where two injections disagree.
pub fn hamming_distance(a: &Injection, b: &Injection) -> Result<usize> {
    a.check_same_space(b)?;
    Ok(a.word.iter().zip(&b.word).filter(|(x, y)| x != y).count())
}

/// An orbital label `(λ|ρ)`: cycle parts, positive path parts, and the number
/// of zero-length paths. The padded path count is always `n − k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclePathType {
    cycles: Partition,
    paths: Partition,
    zero_paths: usize,
}

impl CyclePathType {
    pub fn new(cycles: Partition, paths: Partition, k: usize, n: usize) -> Result<Self> {
        let invalid = || Error::InvalidClass {
            class: format!("({cycles}|{paths})"),
            k,
            n,
        };
        if k > n || cycles.weight() + paths.weight() != k || paths.len() > n - k {
            return Err(invalid());
        }
        let zero_paths = n - k - paths.len();
        Ok(CyclePathType { cycles, paths, zero_paths })
    }

    /// The class of the identity pair, `(1^k | 0^{n−k})`.
    pub fn identity(k: usize, n: usize) -> Self {
        CyclePathType {
            cycles: Partition::column(k),
            paths: Partition::empty(),
            zero_paths: n - k,
        }
    }

    pub fn cycles(&self) -> &Partition {
        &self.cycles
    }

    /// Positive path lengths.
    pub fn paths(&self) -> &Partition {
        &self.paths
    }

    pub fn zero_paths(&self) -> usize {
        self.zero_paths
    }

    pub fn k(&self) -> usize {
        self.cycles.weight() + self.paths.weight()
    }

    pub fn n(&self) -> usize {
        self.k() + self.paths.len() + self.zero_paths
    }

    /// Hamming distance realized by every pair of this type: `k` minus the
    /// number of fixed points (cycle parts equal to one).
    pub fn distance(&self) -> usize {
        self.k() - self.cycles.multiplicity(1)
    }

    /// Size of the sphere of this type around any injection:
    /// `k!(n−k)! / ∏_i i^{ℓ_i} ℓ_i! r_i!` where `ℓ_i`, `r_i` count the cycle
    /// and path parts of size `i` (`r_0` counting zero-length paths).
    pub fn sphere_size(&self) -> BigUint {
        let k = self.k();
        let n = self.n();
        let mut denom = factorial(self.zero_paths);
        for size in 1..=k {
            let l = self.cycles.multiplicity(size);
            let r = self.paths.multiplicity(size);
            denom *= BigUint::from(size).pow(l as u32) * factorial(l) * factorial(r);
        }
        factorial(k) * factorial(n - k) / denom
    }

    /// Canonical sort key: distance, then cycles, then paths.
    fn sort_key(&self) -> (usize, &Partition, &Partition) {
        (self.distance(), &self.cycles, &self.paths)
    }
}

impl Ord for CyclePathType {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key()
            .cmp(&other.sort_key())
            .then(self.zero_paths.cmp(&other.zero_paths))
    }
}

impl PartialOrd for CyclePathType {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CyclePathType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<String> = self.cycles.parts().iter().map(usize::to_string).collect();
        let mut paths = Vec::new();
        match self.zero_paths {
            0 => {}
            1 => paths.push("0".to_string()),
            z => paths.push(format!("0^{z}")),
        }
        paths.extend(self.paths.parts().iter().map(usize::to_string));
        let cycles = if cycles.is_empty() { "∅".to_string() } else { cycles.join(",") };
        write!(f, "({}|{})", cycles, paths.join(","))
    }
}

/// Every cycle-path type of the `(k, n)` scheme, identity first, in canonical order.
pub fn enumerate_classes(k: usize, n: usize) -> Vec<CyclePathType> {
    assert!(k <= n, "enumerate_classes requires k <= n");
    let mut out = Vec::new();
    for cycle_weight in 0..=k {
        for cycles in enumerate_partitions(cycle_weight, None) {
            for paths in enumerate_partitions(k - cycle_weight, Some(n - k)) {
                out.push(CyclePathType::new(cycles.clone(), paths, k, n).expect("enumerated type is valid"));
            }
        }
    }
    out.sort();
    out
}

/// Reusable buffers for classifying many pairs of one `(k, n)`.
#[derive(Debug, Clone)]
pub struct PairClassifier {
    k: usize,
    n: usize,
    inv_a: Vec<usize>,
    inv_b: Vec<usize>,
    seen: Vec<bool>,
    pub(crate) cycles: Vec<usize>,
    pub(crate) paths: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl PairClassifier {
    pub fn new(k: usize, n: usize) -> Self {
        PairClassifier {
            k,
            n,
            inv_a: vec![NONE; n + 1],
            inv_b: vec![NONE; n + 1],
            seen: vec![false; k + 1],
            cycles: Vec::with_capacity(k),
            paths: Vec::with_capacity(n),
        }
    }

    /// Fills `self.cycles` and `self.paths` (positive paths only), both sorted
    /// decreasing, for the words `a` and `b`. Returns the zero-path count.
    pub(crate) fn classify_words(&mut self, a: &[usize], b: &[usize]) -> usize {
        debug_assert_eq!(a.len(), self.k);
        debug_assert_eq!(b.len(), self.k);
        self.inv_a.iter_mut().for_each(|x| *x = NONE);
        self.inv_b.iter_mut().for_each(|x| *x = NONE);
        self.seen.iter_mut().for_each(|x| *x = false);
        self.cycles.clear();
        self.paths.clear();
        for i in 0..self.k {
            self.inv_a[a[i]] = i + 1;
            self.inv_b[b[i]] = i + 1;
        }
        let mut zero_paths = 0;
        // Paths start at codomain vertices of degree at most one.
        for v in 1..=self.n {
            let (ia, ib) = (self.inv_a[v], self.inv_b[v]);
            match (ia != NONE, ib != NONE) {
                (false, false) => zero_paths += 1,
                (true, false) | (false, true) => {
                    let mut domain = if ia != NONE { ia } else { ib };
                    if self.seen[domain] {
                        continue;
                    }
                    // Every domain vertex on the path is entered along the
                    // matching that touches `v` and left along the other one.
                    let via_a = ia != NONE;
                    let mut len = 0;
                    loop {
                        self.seen[domain] = true;
                        len += 1;
                        let w = if via_a { b[domain - 1] } else { a[domain - 1] };
                        let next = if via_a { self.inv_a[w] } else { self.inv_b[w] };
                        if next == NONE {
                            break;
                        }
                        domain = next;
                    }
                    self.paths.push(len);
                }
                (true, true) => {}
            }
        }
        for start in 1..=self.k {
            if self.seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            loop {
                self.seen[i] = true;
                len += 1;
                i = self.inv_b[a[i - 1]];
                if i == start {
                    break;
                }
            }
            self.cycles.push(len);
        }
        self.cycles.sort_unstable_by(|x, y| y.cmp(x));
        self.paths.sort_unstable_by(|x, y| y.cmp(x));
        zero_paths
    }

    pub fn classify(&mut self, a: &Injection, b: &Injection) -> Result<CyclePathType> {
        a.check_same_space(b)?;
        if a.k() != self.k || a.n() != self.n {
            return Err(Error::DimensionMismatch { k1: a.k(), n1: a.n(), k2: self.k, n2: self.n });
        }
        let zero_paths = self.classify_words(&a.word, &b.word);
        Ok(CyclePathType {
            cycles: Partition::new(self.cycles.clone()).expect("sorted positive parts"),
            paths: Partition::new(self.paths.clone()).expect("sorted positive parts"),
            zero_paths,
        })
    }
}

/// Cycle-path type of the multiunion of two injections.
pub fn classify_pair(a: &Injection, b: &Injection) -> Result<CyclePathType> {
    a.check_same_space(b)?;
    PairClassifier::new(a.k(), a.n()).classify(a, b)
}
