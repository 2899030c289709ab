//! Robinson–Schensted–Knuth correspondence for injections.
//!
//! An injection `(j_1, …, j_k)` is read as the two-line array whose top row is
//! `1, …, k` followed by `n − k` copies of `k + 1`, and whose bottom row is the
//! word followed by the unused values in increasing order. Row insertion of the
//! bottom row gives a standard tableau `P` of shape `λ ⊢ n`; the recording
//! tableau has its `k + 1` entries on a horizontal strip, and deleting them
//! leaves a standard tableau `Q` of shape `μ ⊢ k`.

use crate::error::{Error, Result};
use crate::injection::Injection;
use crate::partition::is_horizontal_strip;
use crate::tableau::StandardYoungTableau;

/// Insertion and recording tableaux of an injection.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RskPair {
    pub p: StandardYoungTableau,
    pub q: StandardYoungTableau,
}

pub fn rsk(sigma: &Injection) -> RskPair {
    let k = sigma.k();
    let bottom: Vec<usize> = sigma.word().iter().copied().chain(sigma.unused()).collect();
    let mut p_rows: Vec<Vec<usize>> = Vec::new();
    let mut q_rows: Vec<Vec<usize>> = Vec::new();
    for (step, &value) in bottom.iter().enumerate() {
        let label = (step + 1).min(k + 1);
        let row = row_insert(&mut p_rows, value);
        if row == q_rows.len() {
            q_rows.push(Vec::new());
        }
        q_rows[row].push(label);
    }
    let q_rows: Vec<Vec<usize>> = q_rows
        .into_iter()
        .map(|row| row.into_iter().filter(|&l| l <= k).collect::<Vec<_>>())
        .filter(|row| !row.is_empty())
        .collect();
    RskPair {
        p: StandardYoungTableau::from_rows_unchecked(p_rows),
        q: StandardYoungTableau::from_rows_unchecked(q_rows),
    }
}

/// Inserts `value`, bumping along rows; returns the row where a cell was added.
fn row_insert(rows: &mut Vec<Vec<usize>>, mut value: usize) -> usize {
    for (i, row) in rows.iter_mut().enumerate() {
        match row.iter().position(|&x| x > value) {
            Some(j) => value = std::mem::replace(&mut row[j], value),
            None => {
                row.push(value);
                return i;
            }
        }
    }
    rows.push(vec![value]);
    rows.len() - 1
}

/// Removes the corner at the end of row `row` and reverse-bumps it out of the
/// top row, returning the ejected value.
fn reverse_bump(rows: &mut Vec<Vec<usize>>, row: usize) -> usize {
    let mut value = rows[row].pop().expect("corner cell exists");
    if rows[row].is_empty() {
        rows.pop();
    }
    for i in (0..row).rev() {
        let r = &mut rows[i];
        // The largest entry smaller than `value` is bumped up.
        let j = r.iter().rposition(|&x| x < value).expect("reverse bump target exists");
        value = std::mem::replace(&mut r[j], value);
    }
    value
}

pub fn rsk_inverse(p: &StandardYoungTableau, q: &StandardYoungTableau) -> Result<Injection> {
    let lambda = p.shape();
    let mu = q.shape();
    let n = p.size();
    let k = q.size();
    if !is_horizontal_strip(&lambda, &mu) {
        return Err(Error::ShapeMismatch(format!("{lambda}/{mu} is not a horizontal strip")));
    }
    StandardYoungTableau::new(p.rows().to_vec())?;
    StandardYoungTableau::new(q.rows().to_vec())?;

    // Rebuild the recording labels row by row: Q's labels, then k+1 on the strip.
    let mut labels: Vec<Vec<usize>> = (0..lambda.len())
        .map(|i| {
            let mut row = q.rows().get(i).cloned().unwrap_or_default();
            row.resize(lambda.part(i), k + 1);
            row
        })
        .collect();
    let mut rows = p.rows().to_vec();
    let mut bottom = Vec::with_capacity(n);
    for _ in 0..n {
        // Largest label; among equal strip labels the rightmost cell came last.
        let (row, _) = labels
            .iter()
            .enumerate()
            .map(|(i, r)| (i, (*r.last().expect("nonempty row"), r.len())))
            .max_by_key(|&(_, key)| key)
            .expect("tableau not empty");
        labels[row].pop();
        if labels[row].is_empty() {
            labels.pop();
        }
        bottom.push(reverse_bump(&mut rows, row));
    }
    bottom.reverse();
    bottom.truncate(k);
    Injection::new(bottom, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::injection::all_injections;
    use crate::partition::Partition;

    fn syt(rows: &[&[usize]]) -> StandardYoungTableau {
        StandardYoungTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn small_examples() {
        let pair = rsk(&Injection::new(vec![1, 2], 4).unwrap());
        assert_eq!(pair.p, syt(&[&[1, 2, 3, 4]]));
        assert_eq!(pair.q, syt(&[&[1, 2]]));
        let pair = rsk(&Injection::new(vec![2, 3], 4).unwrap());
        assert_eq!(pair.p, syt(&[&[1, 3, 4], &[2]]));
        assert_eq!(pair.q, syt(&[&[1, 2]]));
    }

    #[test]
    fn identity_round_trip() {
        for (k, n) in [(0, 3), (2, 5), (4, 4), (3, 7)] {
            let id = Injection::identity(k, n);
            let pair = rsk(&id);
            assert_eq!(pair.q.shape(), Partition::row(k));
            assert_eq!(rsk_inverse(&pair.p, &pair.q).unwrap(), id);
        }
    }

    #[test]
    fn inverse_round_trips() {
        for (k, n) in [(2, 4), (3, 5), (3, 3), (1, 4)] {
            for sigma in all_injections(k, n) {
                let pair = rsk(&sigma);
                assert!(is_horizontal_strip(&pair.p.shape(), &pair.q.shape()));
                assert_eq!(rsk_inverse(&pair.p, &pair.q).unwrap(), sigma);
            }
        }
    }

    #[test]
    fn permutations_give_equal_shapes() {
        for sigma in all_injections(3, 3) {
            let pair = rsk(&sigma);
            assert_eq!(pair.p.shape(), pair.q.shape());
        }
    }

    #[test]
    fn inverse_rejects_bad_shapes() {
        let p = syt(&[&[1, 2], &[3, 4]]);
        let q = syt(&[&[1]]);
        assert!(matches!(rsk_inverse(&p, &q), Err(Error::ShapeMismatch(_))));
    }
}
