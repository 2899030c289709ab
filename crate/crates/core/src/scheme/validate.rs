//! Invariant checks bundled into one report.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::oracle::{adjacency_eigenspace_check, SphericalOracle};
use crate::error::Error;
use super::{dual_table, intersection_numbers, CharacterTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValidationLevel {
    /// Identities of `P` alone.
    Algebraic,
    /// Adds the projection-formula oracle and explicit adjacency matrices.
    BruteForce,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// The brute-force input was over its cap; not counted as a failure.
    pub skipped: bool,
    /// Counterexample or reason for skipping.
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed || c.skipped)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed && !c.skipped)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = match (c.passed, c.skipped) {
                (true, _) => "pass",
                (false, true) => "skip",
                (false, false) => "FAIL",
            };
            match &c.detail {
                Some(d) => writeln!(f, "{status} {}: {d}", c.name)?,
                None => writeln!(f, "{status} {}", c.name)?,
            }
        }
        Ok(())
    }
}

/// Brute-force caps used by [`validate`]: `k!(n−k)!` for the oracle, `|X|` for adjacency matrices.
pub const ORACLE_CAP: u128 = 100_000;
pub const ADJACENCY_CAP: usize = 400;

pub fn validate(table: &CharacterTable, level: ValidationLevel) -> ValidationReport {
    validate_with_caps(table, level, ORACLE_CAP, ADJACENCY_CAP)
}

pub fn validate_with_caps(
    table: &CharacterTable,
    level: ValidationLevel,
    oracle_cap: u128,
    adjacency_cap: usize,
) -> ValidationReport {
    let mut checks = vec![
        first_column(table),
        trivial_row(table),
        sums(table),
        column_orthogonality(table),
        dual_product(table),
        intersections(table),
    ];
    if level == ValidationLevel::BruteForce {
        checks.push(oracle(table, oracle_cap));
        checks.push(match adjacency_eigenspace_check(table, adjacency_cap) {
            Ok(()) => pass("adjacency eigenspaces"),
            Err(e) => fail_or_skip("adjacency eigenspaces", e),
        });
    }
    ValidationReport { checks }
}

fn pass(name: &'static str) -> Check {
    Check { name, passed: true, skipped: false, detail: None }
}

fn fail(name: &'static str, detail: String) -> Check {
    Check { name, passed: false, skipped: false, detail: Some(detail) }
}

fn fail_or_skip(name: &'static str, e: Error) -> Check {
    let skipped = matches!(e, Error::BudgetExceeded { .. });
    Check { name, passed: false, skipped, detail: Some(e.to_string()) }
}

fn first_column(table: &CharacterTable) -> Check {
    let name = "identity column";
    for i in 0..table.size() {
        if !table.entry(i, 0).is_one() {
            return fail(name, format!("P[{}][{}] = {}", table.irreps()[i], table.classes()[0], table.entry(i, 0)));
        }
    }
    pass(name)
}

fn trivial_row(table: &CharacterTable) -> Check {
    let name = "trivial row";
    for j in 0..table.size() {
        if table.entry(0, j) != &BigInt::from(table.valencies()[j].clone()) {
            return fail(name, format!("P[{}][{}] = {}", table.irreps()[0], table.classes()[j], table.entry(0, j)));
        }
    }
    pass(name)
}

fn sums(table: &CharacterTable) -> Check {
    let name = "valency and multiplicity sums";
    let v: BigUint = table.valencies().iter().sum();
    let m: BigUint = table.multiplicities().iter().sum();
    if v != table.order() || m != table.order() {
        return fail(name, format!("valencies sum to {v}, multiplicities to {m}, |X| = {}", table.order()));
    }
    pass(name)
}

fn column_orthogonality(table: &CharacterTable) -> Check {
    let name = "column orthogonality";
    let d = table.size();
    let order = BigInt::from(table.order());
    let m: Vec<BigInt> = table.multiplicities().iter().map(|x| BigInt::from(x.clone())).collect();
    for i in 0..d {
        let weighted: Vec<BigInt> = (0..d).map(|h| &m[h] * table.entry(h, i)).collect();
        for j in i..d {
            let sum: BigInt = (0..d).map(|h| &weighted[h] * table.entry(h, j)).sum();
            let expected = if i == j { &order * BigInt::from(table.valencies()[i].clone()) } else { BigInt::zero() };
            if sum != expected {
                return fail(
                    name,
                    format!("columns {} and {}: {} instead of {}", table.classes()[i], table.classes()[j], sum, expected),
                );
            }
        }
    }
    pass(name)
}

fn dual_product(table: &CharacterTable) -> Check {
    let name = "P Q = |X| I";
    let q = match dual_table(table) {
        Ok(q) => q,
        Err(e) => return fail(name, e.to_string()),
    };
    let d = table.size();
    let order = BigRational::from_integer(BigInt::from(table.order()));
    for i in 0..d {
        for l in 0..d {
            let sum: BigRational = (0..d)
                .filter(|&j| !table.entry(i, j).is_zero())
                .map(|j| BigRational::from_integer(table.entry(i, j).clone()) * q.entry(j, l))
                .sum();
            let expected = if i == l { order.clone() } else { BigRational::zero() };
            if sum != expected {
                return fail(name, format!("entry ({}, {}) is {}", table.irreps()[i], table.irreps()[l], sum));
            }
        }
    }
    pass(name)
}

fn intersections(table: &CharacterTable) -> Check {
    match intersection_numbers(table) {
        Ok(_) => pass("intersection numbers"),
        Err(e) => fail("intersection numbers", e.to_string()),
    }
}

fn oracle(table: &CharacterTable, cap: u128) -> Check {
    let name = "projection formula";
    let mut oracle = match SphericalOracle::new(table.k(), table.n(), cap) {
        Ok(o) => o,
        Err(e) => return fail_or_skip(name, e),
    };
    for (j, class) in table.classes().iter().enumerate() {
        let v = BigInt::from(table.valencies()[j].clone());
        for (i, label) in table.irreps().iter().enumerate() {
            let expected = BigRational::new(table.entry(i, j).clone(), v.clone());
            match oracle.value(label, class) {
                Ok(w) if w == expected => {}
                Ok(w) => return fail(name, format!("at ({label}, {class}): oracle {w}, table {expected}")),
                Err(e) => return fail(name, e.to_string()),
            }
        }
    }
    pass(name)
}
