//! The cover kernel `Σ_{π ∈ C_t} sgn(π) 1_{{s},{πt}}(σ)`.
//!
//! `{s}, {πt}` covers `σ` iff `row_s(i) = row_t(π⁻¹(σ(i)))` for every `i ≤ k`.
//! Since `C_t` is the product of the symmetric groups on the columns of `t`,
//! the signed sum factorizes over columns. In one column, each value in the
//! image of `σ` must be carried to the single cell of that column lying in
//! row `row_s(σ⁻¹(v))`, while values outside the image may go anywhere; the
//! signed count is the determinant of that 0/1 placement matrix. Two free
//! values give two equal all-ones rows and a zero determinant, so every
//! nonzero column contributes the sign of one forced permutation.

use crate::error::{Error, Result};
use crate::injection::Injection;
use crate::partition::{is_horizontal_strip, Partition};
use crate::tableau::StandardYoungTableau;

const NONE: usize = usize::MAX;

/// The tableau pair used by the spherical-function formula: `s` is the
/// row-reading tableau of `μ`, and `t` extends `s` by numbering the cells of
/// `λ/μ` with `k+1, …, n` from left to right.
pub fn canonical_pair(mu: &Partition, lambda: &Partition) -> Result<(StandardYoungTableau, StandardYoungTableau)> {
    if !is_horizontal_strip(lambda, mu) {
        return Err(Error::ShapeMismatch(format!("{lambda}/{mu} is not a horizontal strip")));
    }
    let s = StandardYoungTableau::row_reading(mu);
    let mut rows: Vec<Vec<usize>> = s.rows().to_vec();
    rows.resize(lambda.len(), Vec::new());
    // Strip cells sorted by column; a horizontal strip has at most one per column.
    let mut strip: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|i| (mu.part(i)..lambda.part(i)).map(move |j| (j, i)))
        .collect();
    strip.sort_unstable();
    let mut next = mu.weight() + 1;
    let mut cells: Vec<(usize, usize, usize)> = Vec::with_capacity(strip.len());
    for (col, row) in strip {
        cells.push((row, col, next));
        next += 1;
    }
    cells.sort_unstable();
    for (row, _, value) in cells {
        rows[row].push(value);
    }
    let t = StandardYoungTableau::from_rows_unchecked(rows);
    Ok((s, t))
}

/// Precomputed lookups for evaluating the kernel of one tableau pair on many
/// injections of the same `(k, n)`.
#[derive(Debug, Clone)]
pub struct CoverKernel {
    k: usize,
    n: usize,
    /// `row_s(i)` for `i = 1..=k`, index 0 unused.
    row_s: Vec<usize>,
    /// Values of each column of `t`, top to bottom.
    columns: Vec<Vec<usize>>,
}

/// Scratch space for [`CoverKernel::eval_word`].
#[derive(Debug, Clone)]
pub struct KernelScratch {
    preimage: Vec<usize>,
    target: Vec<usize>,
    taken: Vec<bool>,
    seen: Vec<bool>,
}

impl KernelScratch {
    pub fn new(n: usize) -> Self {
        KernelScratch {
            preimage: vec![NONE; n + 1],
            target: vec![NONE; n],
            taken: vec![false; n],
            seen: vec![false; n],
        }
    }
}

impl CoverKernel {
    pub fn new(s: &StandardYoungTableau, t: &StandardYoungTableau) -> Result<Self> {
        let (mu, lambda) = (s.shape(), t.shape());
        if !is_horizontal_strip(&lambda, &mu) {
            return Err(Error::ShapeMismatch(format!("{lambda}/{mu} is not a horizontal strip")));
        }
        let k = s.size();
        let n = t.size();
        let mut row_s = vec![NONE; k + 1];
        for (i, row) in s.rows().iter().enumerate() {
            for &v in row {
                row_s[v] = i;
            }
        }
        let columns = (0..lambda.part(0))
            .map(|j| t.rows().iter().take_while(|r| r.len() > j).map(|r| r[j]).collect())
            .collect();
        Ok(CoverKernel { k, n, row_s, columns })
    }

    pub fn canonical(mu: &Partition, lambda: &Partition) -> Result<Self> {
        let (s, t) = canonical_pair(mu, lambda)?;
        CoverKernel::new(&s, &t)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Kernel value on the injection with one-line word `word`.
    pub fn eval_word(&self, word: &[usize], scratch: &mut KernelScratch) -> i64 {
        debug_assert_eq!(word.len(), self.k);
        for (i, &v) in word.iter().enumerate() {
            scratch.preimage[v] = i + 1;
        }
        let sign = self.eval_columns(scratch);
        for &v in word {
            scratch.preimage[v] = NONE;
        }
        sign
    }

    fn eval_columns(&self, scratch: &mut KernelScratch) -> i64 {
        let mut sign = 1i64;
        for column in &self.columns {
            let h = column.len();
            let target = &mut scratch.target[..h];
            let taken = &mut scratch.taken[..h];
            taken.iter_mut().for_each(|x| *x = false);
            let mut free = NONE;
            for (r, &v) in column.iter().enumerate() {
                let pre = scratch.preimage[v];
                if pre == NONE {
                    if free != NONE {
                        return 0;
                    }
                    free = r;
                } else {
                    let row = self.row_s[pre];
                    if row >= h || taken[row] {
                        return 0;
                    }
                    taken[row] = true;
                    target[r] = row;
                }
            }
            if free != NONE {
                target[free] = taken.iter().position(|&x| !x).expect("one row left for the free value");
            }
            if permutation_is_odd(target, &mut scratch.seen[..h]) {
                sign = -sign;
            }
        }
        sign
    }
}

fn permutation_is_odd(perm: &[usize], seen: &mut [bool]) -> bool {
    seen.iter_mut().for_each(|x| *x = false);
    let mut transpositions = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut i = start;
        let mut len = 0;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 1
}

/// `Σ_{π ∈ C_t} sgn(π) 1_{{s},{πt}}(σ)` for tableaux `s ⊢ k`, `t ⊢ n` on a
/// horizontal-strip pair of shapes.
pub fn signed_cover_count(sigma: &Injection, s: &StandardYoungTableau, t: &StandardYoungTableau) -> Result<i64> {
    let kernel = CoverKernel::new(s, t)?;
    if sigma.k() != kernel.k || sigma.n() != kernel.n {
        return Err(Error::DimensionMismatch {
            k1: sigma.k(),
            n1: sigma.n(),
            k2: kernel.k,
            n2: kernel.n,
        });
    }
    Ok(kernel.eval_word(sigma.word(), &mut KernelScratch::new(kernel.n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::injection::all_injections;
    use crate::partition::strip_pairs;
    use crate::tableau::enumerate_syt;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// All permutations of `items`, each paired with its sign.
    fn signed_permutations(items: &[usize]) -> Vec<(Vec<usize>, i64)> {
        if items.is_empty() {
            return vec![(Vec::new(), 1)];
        }
        let mut out = Vec::new();
        for (i, &first) in items.iter().enumerate() {
            let mut rest = items.to_vec();
            rest.remove(i);
            let sign = if i % 2 == 0 { 1 } else { -1 };
            for (mut tail, s) in signed_permutations(&rest) {
                tail.insert(0, first);
                out.push((tail, sign * s));
            }
        }
        out
    }

    /// Column stabilizer of `t` as maps `value → π(value)` with signs.
    fn column_stabilizer(t: &StandardYoungTableau) -> Vec<(Vec<usize>, i64)> {
        let n = t.size();
        let width = t.shape().part(0);
        let columns: Vec<Vec<usize>> = (0..width)
            .map(|j| t.rows().iter().take_while(|r| r.len() > j).map(|r| r[j]).collect())
            .collect();
        let mut group = vec![((0..=n).collect::<Vec<usize>>(), 1i64)];
        for column in columns {
            let mut next = Vec::new();
            for (map, sign) in &group {
                for (image, s) in signed_permutations(&column) {
                    let mut m = map.clone();
                    for (from, to) in column.iter().zip(&image) {
                        m[*from] = *to;
                    }
                    next.push((m, sign * s));
                }
            }
            group = next;
        }
        group
    }

    fn row_of(t: &StandardYoungTableau) -> Vec<usize> {
        t.positions().into_iter().map(|(r, _)| r).collect()
    }

    /// Direct enumeration of `Σ_{π ∈ C_t} sgn(π) 1_{{s},{πt}}(σ)`.
    fn brute_force(sigma: &Injection, s: &StandardYoungTableau, t: &StandardYoungTableau) -> i64 {
        let rs = row_of(s);
        let rt = row_of(t);
        column_stabilizer(t)
            .into_iter()
            .filter(|(pi, _)| {
                let mut inverse = vec![0; pi.len()];
                for (v, &w) in pi.iter().enumerate() {
                    inverse[w] = v;
                }
                (1..=sigma.k()).all(|i| rs[i] == rt[inverse[sigma.apply(i)]])
            })
            .map(|(_, sign)| sign)
            .sum()
    }

    /// Direct enumeration of the double sum over `C_s × C_t`.
    fn brute_force_double(sigma: &Injection, s: &StandardYoungTableau, t: &StandardYoungTableau) -> i64 {
        let rs = row_of(s);
        let rt = row_of(t);
        let mut total = 0;
        for (pi_s, sign_s) in column_stabilizer(s) {
            let mut inv_s = vec![0; pi_s.len()];
            for (v, &w) in pi_s.iter().enumerate() {
                inv_s[w] = v;
            }
            for (pi_t, sign_t) in column_stabilizer(t) {
                let mut inv_t = vec![0; pi_t.len()];
                for (v, &w) in pi_t.iter().enumerate() {
                    inv_t[w] = v;
                }
                if (1..=sigma.k()).all(|i| rs[inv_s[i]] == rt[inv_t[sigma.apply(i)]]) {
                    total += sign_s * sign_t;
                }
            }
        }
        total
    }

    #[test]
    fn canonical_pair_examples() {
        let (s, t) = canonical_pair(&p(&[3, 2, 1]), &p(&[4, 3, 2])).unwrap();
        assert_eq!(s.rows(), &[vec![1, 2, 3], vec![4, 5], vec![6]]);
        assert_eq!(t.rows(), &[vec![1, 2, 3, 9], vec![4, 5, 8], vec![6, 7]]);
        let (s, t) = canonical_pair(&p(&[3]), &p(&[5])).unwrap();
        assert_eq!(s.rows(), &[vec![1, 2, 3]]);
        assert_eq!(t.rows(), &[vec![1, 2, 3, 4, 5]]);
        let (s, t) = canonical_pair(&p(&[1, 1]), &p(&[2, 1])).unwrap();
        assert_eq!(s.rows(), &[vec![1], vec![2]]);
        assert_eq!(t.rows(), &[vec![1, 3], vec![2]]);
        assert!(canonical_pair(&p(&[1]), &p(&[2, 2])).is_err());
    }

    #[test]
    fn canonical_pairs_are_standard_and_aligned() {
        for n in 1..=7 {
            for k in 0..=n {
                for (mu, lambda) in strip_pairs(k, n) {
                    let (s, t) = canonical_pair(&mu, &lambda).unwrap();
                    assert!(StandardYoungTableau::new(t.rows().to_vec()).is_ok());
                    let (ps, pt) = (s.positions(), t.positions());
                    for i in 1..=k {
                        assert_eq!(ps[i], pt[i], "identity not aligned for {mu}/{lambda}");
                    }
                }
            }
        }
    }

    #[test]
    fn identity_values() {
        for (mu, lambda) in strip_pairs(3, 5).into_iter().chain(strip_pairs(4, 6)) {
            let (s, t) = canonical_pair(&mu, &lambda).unwrap();
            let id = Injection::identity(mu.weight(), lambda.weight());
            assert_eq!(signed_cover_count(&id, &s, &t).unwrap(), 1);
            let col_stab: i64 = mu
                .transpose()
                .parts()
                .iter()
                .map(|&c| (1..=c as i64).product::<i64>())
                .product();
            assert_eq!(brute_force_double(&id, &s, &t), col_stab, "{mu} ⊗ {lambda}");
        }
    }

    #[test]
    fn single_column_values_are_signs() {
        let (s, t) = canonical_pair(&p(&[1, 1, 1]), &p(&[1, 1, 1, 1])).unwrap();
        for sigma in all_injections(3, 4) {
            let v = signed_cover_count(&sigma, &s, &t).unwrap();
            assert!((-1..=1).contains(&v));
            assert_eq!(v, brute_force(&sigma, &s, &t));
        }
    }

    #[test]
    fn matches_brute_force_on_s35() {
        let mut rng = ChaCha8Rng::seed_from_u64(35);
        let all = all_injections(3, 5);
        for (mu, lambda) in strip_pairs(3, 5) {
            let (s, t) = canonical_pair(&mu, &lambda).unwrap();
            for _ in 0..10 {
                let sigma = all.choose(&mut rng).unwrap();
                assert_eq!(signed_cover_count(sigma, &s, &t).unwrap(), brute_force(sigma, &s, &t));
            }
        }
    }

    #[test]
    fn matches_brute_force_on_random_tableau_pairs() {
        // Arbitrary (not canonical) standard tableaux on strip shapes, |C_t| ≤ 10^4.
        let mut rng = ChaCha8Rng::seed_from_u64(200);
        let mut cases = 0;
        while cases < 200 {
            let n = rng.gen_range(2..=7);
            let k = rng.gen_range(1..=n);
            let pairs = strip_pairs(k, n);
            let (mu, lambda) = pairs.choose(&mut rng).unwrap();
            let col_stab: u64 = lambda.transpose().parts().iter().map(|&c| (1..=c as u64).product::<u64>()).product();
            if col_stab > 10_000 {
                continue;
            }
            let s = enumerate_syt(mu).choose(&mut rng).unwrap().clone();
            let t = enumerate_syt(lambda).choose(&mut rng).unwrap().clone();
            let all = all_injections(k, n);
            let sigma = all.choose(&mut rng).unwrap();
            assert_eq!(
                signed_cover_count(sigma, &s, &t).unwrap(),
                brute_force(sigma, &s, &t),
                "σ={sigma} s={s} t={t}"
            );
            cases += 1;
        }
    }

    #[test]
    fn rejects_mismatched_inputs() {
        let (s, t) = canonical_pair(&p(&[2]), &p(&[3])).unwrap();
        let sigma = Injection::identity(2, 4);
        assert!(signed_cover_count(&sigma, &s, &t).is_err());
        let s_bad = StandardYoungTableau::row_reading(&p(&[1, 1]));
        let t_bad = StandardYoungTableau::row_reading(&p(&[3]));
        assert!(CoverKernel::new(&s_bad, &t_bad).is_err());
    }
}
