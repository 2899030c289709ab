//! Irreducible characters of the symmetric group via the Murnaghan–Nakayama rule.

use std::collections::HashMap;

use crate::partition::Partition;

/// Memoizing evaluator of `χ_λ(ν)`.
///
/// Border strips are removed in the order of the class's parts, largest
/// first, using the beta-set (abacus) form of the partition: removing a strip
/// of length `r` moves one bead from `x` to a free position `x − r`, with sign
/// `(−1)` to the number of beads jumped.
#[derive(Debug, Default)]
pub struct SnCharacters {
    memo: HashMap<(Vec<usize>, Vec<usize>), i64>,
}

impl SnCharacters {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn value(&mut self, lambda: &Partition, class: &Partition) -> i64 {
        assert_eq!(lambda.weight(), class.weight(), "character arguments must partition the same n");
        self.eval(lambda.parts().to_vec(), class.parts().to_vec())
    }

    fn eval(&mut self, lambda: Vec<usize>, class: Vec<usize>) -> i64 {
        if class.is_empty() {
            return 1;
        }
        let key = (lambda, class);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let (lambda, class) = key;
        let r = class[0];
        let rest = class[1..].to_vec();
        let len = lambda.len();
        let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
        let mut total = 0i64;
        for (idx, &x) in beta.iter().enumerate() {
            if x < r || beta.contains(&(x - r)) {
                continue;
            }
            let target = x - r;
            let jumped = beta.iter().filter(|&&b| b > target && b < x).count();
            let mut next = beta.clone();
            next[idx] = target;
            next.sort_unstable_by(|a, b| b.cmp(a));
            let m = next.len();
            let shape: Vec<usize> = next
                .iter()
                .enumerate()
                .map(|(i, &b)| b - (m - 1 - i))
                .filter(|&p| p > 0)
                .collect();
            let sign = if jumped % 2 == 0 { 1 } else { -1 };
            total += sign * self.eval(shape, rest.clone());
        }
        self.memo.insert((lambda, class), total);
        total
    }
}

/// `χ_λ(ν)` for `λ, ν ⊢ n`.
pub fn sn_character(lambda: &Partition, class: &Partition) -> i64 {
    SnCharacters::new().value(lambda, class)
}

/// Cycle type of a permutation given in one-line notation on `1..=n`.
pub fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
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
            i = perm[i] - 1;
        }
        parts.push(len);
    }
    Partition::from_unsorted(parts).expect("cycle lengths are positive")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{enumerate_partitions, factorial, syt_count};
    use num_bigint::{BigInt, BigUint};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Permutations of 0..n in lexicographic order.
    fn permutations(n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(cur.clone());
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    #[test]
    fn trivial_and_sign() {
        for class in enumerate_partitions(6, None) {
            assert_eq!(sn_character(&p(&[6]), &class), 1);
            let sign = if (6 - class.len()) % 2 == 0 { 1 } else { -1 };
            assert_eq!(sn_character(&Partition::column(6), &class), sign, "{class}");
        }
    }

    #[test]
    fn standard_rep_trace() {
        // χ_(2,1) = (fixed points) − 1 on S_3: permutation matrix trace minus the trivial part.
        assert_eq!(sn_character(&p(&[2, 1]), &p(&[3])), -1);
        assert_eq!(sn_character(&p(&[2, 1]), &p(&[2, 1])), 0);
        assert_eq!(sn_character(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        for perm in permutations(5) {
            let fixed = perm.iter().enumerate().filter(|(i, &v)| *i == v).count() as i64;
            let one_line: Vec<usize> = perm.iter().map(|v| v + 1).collect();
            assert_eq!(sn_character(&p(&[4, 1]), &cycle_type(&one_line)), fixed - 1);
        }
    }

    #[test]
    fn degrees_match_hook_lengths() {
        for n in 1..=9 {
            for lambda in enumerate_partitions(n, None) {
                let deg = sn_character(&lambda, &Partition::column(n));
                assert_eq!(BigUint::from(deg as u64), syt_count(&lambda));
            }
        }
    }

    #[test]
    fn row_and_column_orthogonality() {
        for n in 1..=8 {
            let parts = enumerate_partitions(n, None);
            let mut chars = SnCharacters::new();
            let sizes: Vec<BigInt> = parts
                .iter()
                .map(|c| {
                    let mut z = BigUint::from(1u32);
                    for size in 1..=n {
                        let m = c.multiplicity(size);
                        z *= BigUint::from(size).pow(m as u32) * factorial(m);
                    }
                    BigInt::from(factorial(n) / z)
                })
                .collect();
            for a in &parts {
                for b in &parts {
                    let inner: BigInt = parts
                        .iter()
                        .zip(&sizes)
                        .map(|(c, size)| size * chars.value(a, c) * chars.value(b, c))
                        .sum();
                    let expected = if a == b { BigInt::from(factorial(n)) } else { BigInt::from(0) };
                    assert_eq!(inner, expected, "<{a},{b}>");
                }
            }
        }
    }

    #[test]
    fn cycle_types() {
        assert_eq!(cycle_type(&[2, 1, 3]), p(&[2, 1]));
        assert_eq!(cycle_type(&[2, 3, 1, 5, 4]), p(&[3, 2]));
        assert_eq!(cycle_type(&[]), Partition::empty());
    }
}
