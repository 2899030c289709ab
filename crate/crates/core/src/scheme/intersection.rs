//! Intersection numbers `p_{ij}(k) = (v v_k)⁻¹ Σ_h m_h P_{h,i} P_{h,j} P_{h,k}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::CharacterTable;
use crate::error::{Error, Result};

/// `p_{ij}(l)` for all class triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionNumbers {
    d: usize,
    values: Vec<BigInt>,
}

impl IntersectionNumbers {
    pub fn get(&self, i: usize, j: usize, l: usize) -> &BigInt {
        &self.values[(i * self.d + j) * self.d + l]
    }

    pub fn size(&self) -> usize {
        self.d
    }
}

/// Fails when some `p_{ij}(l)` is not a nonnegative integer.
pub fn intersection_numbers(table: &CharacterTable) -> Result<IntersectionNumbers> {
    let d = table.size();
    let order = BigInt::from(table.order());
    let m: Vec<BigInt> = table.multiplicities().iter().map(|x| BigInt::from(x.clone())).collect();
    let mut values = Vec::with_capacity(d * d * d);
    for i in 0..d {
        let mp: Vec<BigInt> = (0..d).map(|h| &m[h] * table.entry(h, i)).collect();
        for j in 0..d {
            let mpp: Vec<BigInt> = (0..d).map(|h| &mp[h] * table.entry(h, j)).collect();
            for l in 0..d {
                let sum: BigInt = (0..d)
                    .filter(|&h| !mpp[h].is_zero())
                    .map(|h| &mpp[h] * table.entry(h, l))
                    .sum();
                let denom = &order * BigInt::from(table.valencies()[l].clone());
                let (q, r) = sum.div_rem(&denom);
                if !r.is_zero() || q.is_negative() {
                    return Err(Error::Integrity(format!(
                        "p({}, {}; {}) = {}/{} is not a nonnegative integer",
                        table.classes()[i],
                        table.classes()[j],
                        table.classes()[l],
                        sum,
                        denom
                    )));
                }
                values.push(q);
            }
        }
    }
    Ok(IntersectionNumbers { d, values })
}
