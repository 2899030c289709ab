//! Integer partitions, horizontal strips and the hook-length formula.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// An integer partition, stored as its positive parts in weakly decreasing order.
///
/// Partitions are totally ordered graded reverse-lexicographically: by weight
/// first, then with lexicographically larger part sequences first. Under this
/// order `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts must be positive",
            });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts must be weakly decreasing",
            });
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from arbitrary positive parts, sorting them.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty when `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts, ℓ(λ).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`th part (0-based), or zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// How many parts equal `size`.
    pub fn multiplicity(&self, size: usize) -> usize {
        self.parts.iter().filter(|&&p| p == size).count()
    }

    /// Whether the diagram of `inner` fits inside this one.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// `μ! = μ_1! μ_2! ⋯`.
    pub fn factorial_product(&self) -> BigUint {
        self.parts.iter().map(|&p| factorial(p)).product()
    }

    /// Hook lengths of every cell in row-major order.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.transpose();
        let mut hooks = Vec::with_capacity(self.weight());
        for (i, &row_len) in self.parts.iter().enumerate() {
            for j in 0..row_len {
                let arm = row_len - j - 1;
                let leg = conj.part(j) - i - 1;
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `n! / (n-k)!`, the number of injections `[k] → [n]`.
pub fn falling_factorial(n: usize, k: usize) -> BigUint {
    assert!(k <= n);
    ((n - k + 1)..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// All partitions of `n`, optionally with at most `max_parts` parts, in
/// canonical (reverse-lexicographic) order.
pub fn enumerate_partitions(n: usize, max_parts: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    let limit = max_parts.unwrap_or(usize::MAX);
    fill(n, n, limit, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, limit: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    if current.len() == limit {
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, limit, current, out);
        current.pop();
    }
}

/// Number of standard Young tableaux of the given shape, by the hook-length formula.
pub fn syt_count(shape: &Partition) -> BigUint {
    let hooks: BigUint = shape.hook_lengths().into_iter().map(BigUint::from).product();
    factorial(shape.weight()) / hooks
}

/// True iff `inner ⊆ outer` and `outer / inner` has no two cells in one column.
pub fn is_horizontal_strip(outer: &Partition, inner: &Partition) -> bool {
    if !outer.contains(inner) {
        return false;
    }
    // λ_{i+1} ≤ μ_i for every row i.
    (0..outer.len()).all(|i| outer.part(i + 1) <= inner.part(i))
}

/// A skew shape `outer / inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::ShapeMismatch(format!("{inner} does not fit inside {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    /// Skew cells as `(row, column)`, 0-based, row-major.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.outer.len())
            .flat_map(|i| (self.inner.part(i)..self.outer.part(i)).map(move |j| (i, j)))
            .collect()
    }

    pub fn is_horizontal_strip(&self) -> bool {
        let mut columns: Vec<usize> = self.cells().into_iter().map(|(_, j)| j).collect();
        columns.sort_unstable();
        columns.windows(2).all(|w| w[0] != w[1])
    }
}

/// All pairs `(μ ⊢ k, λ ⊢ n)` with `λ/μ` a horizontal strip, ordered by `μ`
/// then `λ` canonically. These index the irreducible constituents of the
/// permutation representation on injections.
pub fn strip_pairs(k: usize, n: usize) -> Vec<(Partition, Partition)> {
    assert!(k <= n, "strip_pairs requires k <= n");
    let outers = enumerate_partitions(n, None);
    let mut pairs = Vec::new();
    for mu in enumerate_partitions(k, None) {
        for lambda in &outers {
            if is_horizontal_strip(lambda, &mu) {
                pairs.push((mu.clone(), lambda.clone()));
            }
        }
    }
    pairs
}
