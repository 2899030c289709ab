//! Published bound tables, embedded for offline comparison.

use injection_scheme::bounds::DistanceSet;
use num_bigint::BigUint;

const TABLE1: &str = include_str!("../data/table1.txt");
const TABLE2: &str = include_str!("../data/table2.txt");
const TABLE3: &str = include_str!("../data/table3.txt");
const TABLE4: &str = include_str!("../data/table4.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GoldenSet {
    MinDistance(usize),
    Equidistant(usize),
    Explicit(Vec<usize>),
}

impl GoldenSet {
    pub fn to_distance_set(&self, k: usize) -> injection_scheme::Result<DistanceSet> {
        match self {
            GoldenSet::MinDistance(d) => DistanceSet::min_distance(k, *d),
            GoldenSet::Equidistant(d) => DistanceSet::equidistant(k, *d),
            GoldenSet::Explicit(ds) => DistanceSet::explicit(k, ds),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenRow {
    pub table: u8,
    pub row: usize,
    pub n: usize,
    pub k: usize,
    pub set: GoldenSet,
    pub bound: BigUint,
    pub triv: Option<BigUint>,
    /// The published bound did not come from the LP; only `computed ≤ published` is required.
    pub known: bool,
}

fn number<T: std::str::FromStr>(field: Option<&str>, table: u8, line: &str) -> T {
    field
        .and_then(|f| f.parse().ok())
        .unwrap_or_else(|| panic!("malformed line in embedded table {table}: {line:?}"))
}

pub fn rows(table: u8) -> Vec<GoldenRow> {
    let text = match table {
        1 => TABLE1,
        2 => TABLE2,
        3 => TABLE3,
        4 => TABLE4,
        _ => return Vec::new(),
    };
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .enumerate()
        .map(|(i, line)| {
            let mut f = line.split_whitespace();
            let n: usize = number(f.next(), table, line);
            let (k, set) = match table {
                1 => {
                    let k = number(f.next(), table, line);
                    (k, GoldenSet::MinDistance(number(f.next(), table, line)))
                }
                2 => (n, GoldenSet::MinDistance(number(f.next(), table, line))),
                3 => {
                    let k = number(f.next(), table, line);
                    (k, GoldenSet::Equidistant(number(f.next(), table, line)))
                }
                _ => {
                    let k = number(f.next(), table, line);
                    let list = f.next().unwrap_or("");
                    (k, GoldenSet::Explicit(list.split(',').map(|d| number(Some(d), table, line)).collect()))
                }
            };
            let bound = number(f.next(), table, line);
            let (triv, known) = match table {
                3 | 4 => (Some(number(f.next(), table, line)), false),
                _ => (None, f.next() == Some("known")),
            };
            GoldenRow { table, row: i + 1, n, k, set, bound, triv, known }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_tables_parse() {
        assert_eq!(rows(1).len(), 40);
        assert_eq!(rows(2).len(), 24);
        assert_eq!(rows(3).len(), 69);
        assert_eq!(rows(4).len(), 83);
        assert!(rows(5).is_empty());
        let first = &rows(1)[0];
        assert_eq!((first.n, first.k, first.bound.clone()), (7, 6, BigUint::from(199u32)));
        assert_eq!(first.set, GoldenSet::MinDistance(4));
        let known: Vec<_> = rows(2).into_iter().filter(|r| r.known).map(|r| (r.n, r.set)).collect();
        assert_eq!(known, vec![(11, GoldenSet::MinDistance(4)), (12, GoldenSet::MinDistance(4))]);
        let r = &rows(4)[4];
        assert_eq!(r.set, GoldenSet::Explicit(vec![1, 3, 4]));
        assert_eq!(r.triv, Some(BigUint::from(30u32)));
    }
}
