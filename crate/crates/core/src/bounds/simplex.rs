//! Exact simplex for `max c·x` subject to `A x ≤ b`, `x ≥ 0`, `b ≥ 0`.
//!
//! Integer data, integer pivoting: the tableau holds integers over a common
//! denominator equal to the last pivot, and every update divides exactly.
//! Bland's rule picks the entering and leaving variables, so the pivot
//! sequence is deterministic and cannot cycle.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexSolution {
    pub optimum: BigRational,
    pub x: Vec<BigRational>,
    pub pivots: usize,
}

/// `a` is row-major with one row per constraint. Requires every `b_i ≥ 0`.
pub fn maximize(a: &[Vec<BigInt>], b: &[BigInt], c: &[BigInt]) -> Result<SimplexSolution> {
    let rows = a.len();
    let vars = c.len();
    if b.len() != rows || a.iter().any(|r| r.len() != vars) {
        return Err(Error::Integrity("simplex dimensions disagree".into()));
    }
    if b.iter().any(Signed::is_negative) {
        return Err(Error::Integrity("simplex needs a nonnegative right-hand side".into()));
    }
    let width = vars + rows + 1;
    let rhs = width - 1;
    // Constraint rows, then the objective row holding −c.
    let mut t: Vec<Vec<BigInt>> = Vec::with_capacity(rows + 1);
    for (i, row) in a.iter().enumerate() {
        let mut r = vec![BigInt::zero(); width];
        r[..vars].clone_from_slice(row);
        r[vars + i] = BigInt::from(1);
        r[rhs] = b[i].clone();
        t.push(r);
    }
    let mut obj = vec![BigInt::zero(); width];
    for (j, cj) in c.iter().enumerate() {
        obj[j] = -cj;
    }
    t.push(obj);
    let mut basis: Vec<usize> = (vars..vars + rows).collect();
    let mut denom = BigInt::from(1);
    let mut pivots = 0;

    loop {
        let Some(q) = (0..rhs).find(|&j| t[rows][j].is_negative()) else { break };
        let mut leave: Option<usize> = None;
        for r in 0..rows {
            if !t[r][q].is_positive() {
                continue;
            }
            leave = Some(match leave {
                None => r,
                Some(best) => {
                    // Compare t[r][rhs]/t[r][q] with t[best][rhs]/t[best][q].
                    let lhs = &t[r][rhs] * &t[best][q];
                    let cur = &t[best][rhs] * &t[r][q];
                    if lhs < cur || (lhs == cur && basis[r] < basis[best]) {
                        r
                    } else {
                        best
                    }
                }
            });
        }
        let p = leave.ok_or(Error::Unbounded)?;
        let pivot = t[p][q].clone();
        let pivot_row = t[p].clone();
        for (r, row) in t.iter_mut().enumerate() {
            if r == p {
                continue;
            }
            let factor = row[q].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                let updated = &pivot * &*x - &factor * y;
                *x = updated / &denom;
            }
        }
        denom = pivot;
        basis[p] = q;
        pivots += 1;
    }

    let mut x = vec![BigRational::zero(); vars];
    for (r, &var) in basis.iter().enumerate() {
        if var < vars {
            x[var] = BigRational::new(t[r][rhs].clone(), denom.clone());
        }
    }
    let optimum = BigRational::new(t[rows][rhs].clone(), denom);
    Ok(SimplexSolution { optimum, x, pivots })
}
