//! Delsarte linear programming bounds and classical bounds on injection codes.

mod simplex;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::{factorial, falling_factorial};
use crate::scheme::{CharacterTable, DualTable};

pub use simplex::{maximize, SimplexSolution};

/// How a distance set was specified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DistanceKind {
    MinDistance(usize),
    Equidistant(usize),
    Explicit,
}

/// A nonempty set of allowed Hamming distances within `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DistanceSet {
    k: usize,
    allowed: BTreeSet<usize>,
    kind: DistanceKind,
}

impl DistanceSet {
    /// `{d, d+1, …, k}`.
    pub fn min_distance(k: usize, d: usize) -> Result<Self> {
        if d == 0 || d > k {
            return Err(Error::InvalidDistanceSet(format!("minimum distance {d} outside 1..={k}")));
        }
        Ok(DistanceSet { k, allowed: (d..=k).collect(), kind: DistanceKind::MinDistance(d) })
    }

    pub fn equidistant(k: usize, d: usize) -> Result<Self> {
        let mut set = Self::explicit(k, &[d])?;
        set.kind = DistanceKind::Equidistant(d);
        Ok(set)
    }

    pub fn explicit(k: usize, distances: &[usize]) -> Result<Self> {
        if distances.is_empty() {
            return Err(Error::InvalidDistanceSet("empty distance set".into()));
        }
        if let Some(&bad) = distances.iter().find(|&&d| d == 0 || d > k) {
            return Err(Error::InvalidDistanceSet(format!("distance {bad} outside 1..={k}")));
        }
        Ok(DistanceSet { k, allowed: distances.iter().copied().collect(), kind: DistanceKind::Explicit })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn kind(&self) -> DistanceKind {
        self.kind
    }

    pub fn contains(&self, distance: usize) -> bool {
        self.allowed.contains(&distance)
    }

    pub fn distances(&self) -> impl Iterator<Item = usize> + '_ {
        self.allowed.iter().copied()
    }

    pub fn min(&self) -> usize {
        *self.allowed.first().expect("distance sets are nonempty")
    }

    /// True unless the set is all of `1..=k`.
    pub fn is_proper(&self) -> bool {
        self.allowed.len() < self.k
    }

    /// `{1..=k} \ D`, if nonempty.
    pub fn complement(&self) -> Option<DistanceSet> {
        let rest: Vec<usize> = (1..=self.k).filter(|d| !self.allowed.contains(d)).collect();
        if rest.is_empty() {
            None
        } else {
            Some(DistanceSet { k: self.k, allowed: rest.into_iter().collect(), kind: DistanceKind::Explicit })
        }
    }
}

impl fmt::Display for DistanceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            DistanceKind::MinDistance(d) => write!(f, "d>={d}"),
            _ => {
                let parts: Vec<String> = self.allowed.iter().map(usize::to_string).collect();
                write!(f, "{{{}}}", parts.join(","))
            }
        }
    }
}

/// Indices of the nonidentity classes whose distance lies in `D`.
pub fn allowed_classes(table: &CharacterTable, distances: &DistanceSet) -> Vec<usize> {
    table
        .classes()
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, c)| distances.contains(c.distance()))
        .map(|(j, _)| j)
        .collect()
}

/// Optimum of the Delsarte program and an optimal inner distribution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub optimum: BigRational,
    /// `a_j` per class, `a_0 = 1`.
    pub a: Vec<BigRational>,
}

/// `max Σ a_j` over `a Q ≥ 0`, `a_0 = 1`, `a_j ≥ 0`, and `a_j = 0` outside `allowed`.
///
/// Substituting `a_j = s_j x_j`, with `s_j` the least common denominator of
/// row `j` of `Q`, and clearing each constraint's content gives integer data.
pub fn solve_lp(q: &DualTable, allowed: &[usize]) -> Result<LpSolution> {
    let d = q.size();
    if allowed.iter().any(|&j| j == 0 || j >= d) {
        return Err(Error::InvalidDistanceSet(format!("class indices {allowed:?} outside 1..{d}")));
    }
    let mut vars: Vec<usize> = allowed.to_vec();
    vars.sort_unstable();
    vars.dedup();
    let scale: Vec<BigInt> = vars
        .iter()
        .map(|&j| q.q()[j].iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom())))
        .collect();
    let mut rows = Vec::with_capacity(d);
    let mut rhs = Vec::with_capacity(d);
    for i in 0..d {
        // Σ_j a_j Q_{j,i} ≥ 0 becomes −Σ_{j allowed} s_j Q_{j,i} x_j ≤ Q_{0,i}.
        let bound = q.entry(0, i);
        let common = vars
            .iter()
            .map(|&j| q.entry(j, i).denom().clone())
            .fold(bound.denom().clone(), |acc, x| acc.lcm(&x));
        let mut row: Vec<BigInt> = vars
            .iter()
            .zip(&scale)
            .map(|(&j, s)| {
                let v = q.entry(j, i) * BigRational::from_integer(s * &common);
                -v.to_integer()
            })
            .collect();
        if row.iter().all(Zero::is_zero) {
            continue;
        }
        let mut b = (bound * BigRational::from_integer(common)).to_integer();
        if b.is_negative() {
            return Err(Error::Integrity(format!("Q[0][{i}] = {bound} is negative")));
        }
        let g = row.iter().fold(b.clone(), |acc, x| acc.gcd(x));
        if !g.is_zero() && !g.is_one() {
            row.iter_mut().for_each(|x| *x /= &g);
            b /= &g;
        }
        rows.push(row);
        rhs.push(b);
    }
    let solution = maximize(&rows, &rhs, &scale)?;
    let mut a = vec![BigRational::zero(); d];
    a[0] = BigRational::one();
    for ((&j, s), x) in vars.iter().zip(&scale).zip(solution.x) {
        a[j] = x * BigRational::from_integer(s.clone());
    }
    Ok(LpSolution { optimum: solution.optimum + BigRational::one(), a })
}

/// `n!/(n−k+d−1)!`, the Singleton bound on codes of minimum distance `d`.
pub fn singleton_bound(n: usize, k: usize, d: usize) -> Result<BigUint> {
    if d == 0 || d > k || k > n {
        return Err(Error::InvalidParameters { k, n, reason: "Singleton bound needs 1 <= d <= k <= n" });
    }
    Ok(falling_factorial(n, k + 1 - d))
}

/// Number of injections within Hamming distance `r` of a fixed one:
/// `Σ_{j ≤ r} C(k,j) Σ_{i ≤ j} (−1)^i C(j,i) (n−k+j−i)!/(n−k)!`.
pub fn ball_size(n: usize, k: usize, r: usize) -> BigUint {
    assert!(k <= n, "ball_size needs k <= n");
    let base = factorial(n - k);
    let mut total = BigInt::zero();
    for j in 0..=r.min(k) {
        let mut inner = BigInt::zero();
        for i in 0..=j {
            let term = BigInt::from(binomial(j, i) * factorial(n - k + j - i) / &base);
            if i % 2 == 0 {
                inner += term;
            } else {
                inner -= term;
            }
        }
        total += BigInt::from(binomial(k, j)) * inner;
    }
    total.to_biguint().expect("ball sizes are positive")
}

fn binomial(n: usize, k: usize) -> BigUint {
    falling_factorial(n, k) / factorial(k)
}

/// `⌊|S_{k,n}| / b_{⌊(d−1)/2⌋}⌋`.
pub fn sphere_packing_bound(n: usize, k: usize, d: usize) -> Result<BigUint> {
    if d == 0 || k > n {
        return Err(Error::InvalidParameters { k, n, reason: "sphere packing bound needs d >= 1 and k <= n" });
    }
    Ok(falling_factorial(n, k) / ball_size(n, k, (d - 1) / 2))
}

/// LP optimum for the distance set `D` on a given table.
pub fn lp_optimum(table: &CharacterTable, distances: &DistanceSet) -> Result<LpSolution> {
    check_table(table, distances)?;
    solve_lp(&DualTable::closed_form(table), &allowed_classes(table, distances))
}

fn check_table(table: &CharacterTable, distances: &DistanceSet) -> Result<()> {
    if distances.k() != table.k() {
        return Err(Error::InvalidDistanceSet(format!("set {distances} is for k = {}, table has k = {}", distances.k(), table.k())));
    }
    Ok(())
}

fn floor(x: &BigRational) -> BigInt {
    x.floor().to_integer()
}

fn to_biguint(x: BigInt) -> BigUint {
    x.to_biguint().expect("bounds are nonnegative")
}

/// `⌊|X| / ⌊M_LP(D^c)⌋⌋`, from `M_LP(D) M_LP(D^c) ≤ |X|`. `None` when `D` is everything.
///
/// Dividing by the floored bound rather than the exact optimum gives a
/// slightly weaker but still valid bound; it is the convention of the
/// published tables.
pub fn trivial_cc_bound(table: &CharacterTable, distances: &DistanceSet) -> Result<Option<BigUint>> {
    check_table(table, distances)?;
    let Some(rest) = distances.complement() else { return Ok(None) };
    let other = to_biguint(floor(&lp_optimum(table, &rest)?.optimum));
    Ok(Some(table.order() / other))
}

/// True iff `⌊M_LP(D)⌋ ⌊M_LP(D^c)⌋ = |X|`, that is, the integer clique-coclique
/// bound is met with equality. The published tables list exactly the sets
/// where this fails.
pub fn separating_check(table: &CharacterTable, distances: &DistanceSet) -> Result<bool> {
    check_table(table, distances)?;
    let Some(rest) = distances.complement() else {
        return Err(Error::InvalidDistanceSet(format!("{distances} has an empty complement")));
    };
    let a = floor(&lp_optimum(table, distances)?.optimum);
    let b = floor(&lp_optimum(table, &rest)?.optimum);
    Ok(a * b == BigInt::from(table.order()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub k: usize,
    pub n: usize,
    pub distances: DistanceSet,
    pub lp_optimum: BigRational,
    pub lp_bound: BigUint,
    /// Optimal inner distribution, per class.
    pub certificate: Vec<BigRational>,
    pub singleton: BigUint,
    pub sphere_packing: BigUint,
    pub trivial_cc: Option<BigUint>,
    pub best: BigUint,
}

/// The Delsarte bound with the classical comparison bounds. Singleton and
/// sphere packing use `d = min D`, since every `D`-code has minimum distance
/// at least `min D`. The clique-coclique bound is reported for sets that are
/// not given as a minimum distance.
pub fn delsarte_bound(table: &CharacterTable, distances: &DistanceSet) -> Result<BoundReport> {
    let (k, n) = (table.k(), table.n());
    let solution = lp_optimum(table, distances)?;
    let lp_bound = to_biguint(floor(&solution.optimum));
    let d = distances.min();
    let singleton = singleton_bound(n, k, d)?;
    let sphere_packing = sphere_packing_bound(n, k, d)?;
    let trivial_cc = match distances.kind() {
        DistanceKind::MinDistance(_) => None,
        _ => trivial_cc_bound(table, distances)?,
    };
    let best = [Some(&lp_bound), Some(&singleton), Some(&sphere_packing), trivial_cc.as_ref()]
        .into_iter()
        .flatten()
        .min()
        .expect("at least one bound")
        .clone();
    Ok(BoundReport {
        k,
        n,
        distances: distances.clone(),
        lp_optimum: solution.optimum,
        lp_bound,
        certificate: solution.a,
        singleton,
        sphere_packing,
        trivial_cc,
        best,
    })
}
