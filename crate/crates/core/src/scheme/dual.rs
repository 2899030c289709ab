//! The dual eigenmatrix `Q = |X| P⁻¹`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::CharacterTable;
use crate::error::{Error, Result};

/// `Q` as reduced fractions, rows indexed by class and columns by irrep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualTable {
    q: Vec<Vec<BigRational>>,
}

impl DualTable {
    pub fn q(&self) -> &[Vec<BigRational>] {
        &self.q
    }

    pub fn entry(&self, class: usize, irrep: usize) -> &BigRational {
        &self.q[class][irrep]
    }

    pub fn size(&self) -> usize {
        self.q.len()
    }

    /// `Q_{j,i} = m_i P_{i,j} / v_j`, valid for symmetric schemes.
    pub fn closed_form(table: &CharacterTable) -> Self {
        let d = table.size();
        let q = (0..d)
            .map(|j| {
                let v = BigInt::from(table.valencies()[j].clone());
                (0..d)
                    .map(|i| {
                        let m = BigInt::from(table.multiplicities()[i].clone());
                        BigRational::new(m * table.entry(i, j), v.clone())
                    })
                    .collect()
            })
            .collect();
        DualTable { q }
    }
}

/// Inverts `P` exactly and scales by `|X|`. Fails if `P` is singular.
pub fn dual_table(table: &CharacterTable) -> Result<DualTable> {
    let d = table.size();
    let order = BigRational::from_integer(BigInt::from(table.order()));
    let mut a: Vec<Vec<BigRational>> = table
        .p()
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row.iter().map(|x| BigRational::from_integer(x.clone())).collect();
            r.extend((0..d).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..d {
        let pivot = (col..d)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::Integrity(format!("P is singular at column {col}")))?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        a[col].iter_mut().for_each(|x| *x *= &inv);
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
    }
    let q = a
        .into_iter()
        .map(|row| row.into_iter().skip(d).map(|x| x * &order).collect())
        .collect();
    Ok(DualTable { q })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::{combinatorial_table, permutation_table, DEFAULT_BUDGET};

    fn check(table: &CharacterTable) {
        let q = dual_table(table).unwrap();
        assert_eq!(q, DualTable::closed_form(table));
        let d = table.size();
        let order = BigRational::from_integer(BigInt::from(table.order()));
        for i in 0..d {
            for l in 0..d {
                let sum: BigRational = (0..d)
                    .map(|j| BigRational::from_integer(table.entry(i, j).clone()) * q.entry(j, l))
                    .sum();
                let expected = if i == l { order.clone() } else { BigRational::zero() };
                assert_eq!(sum, expected);
            }
            assert_eq!(q.entry(0, i), &BigRational::from_integer(BigInt::from(table.multiplicities()[i].clone())));
        }
    }

    #[test]
    fn inverse_matches_closed_form() {
        check(&combinatorial_table(2, 4, DEFAULT_BUDGET).unwrap());
        check(&combinatorial_table(3, 6, DEFAULT_BUDGET).unwrap());
        check(&permutation_table(6).unwrap());
    }

    #[test]
    fn singular_matrix_is_reported() {
        let mut table = combinatorial_table(1, 2, DEFAULT_BUDGET).unwrap();
        *table.entry_mut(1, 1) = BigInt::from(1);
        assert!(matches!(dual_table(&table), Err(Error::Integrity(_))));
    }
}
