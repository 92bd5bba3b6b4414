//! Integer partitions and Ferrers shapes in English notation (row 1 on top).
//!
//! Every list of partitions produced here is in reverse lexicographic order,
//! so `(3)` comes before `(2,1)` which comes before `(1,1,1)`. Coefficient
//! vectors and matrices elsewhere in the crate are indexed in this order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Partition(Vec<usize>);

/// A box of a Ferrers diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts a composition into a partition, dropping zero parts.
    pub fn from_composition(parts: &[usize]) -> Self {
        let mut v: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of row `i` (1-based); zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.row(1);
        Partition(
            (1..=first)
                .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
                .collect(),
        )
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row(cell.row)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
    }

    /// True iff the shape has no cell (2,2).
    pub fn is_hook(&self) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::EmptyShape);
        }
        Ok(self.row(2) <= 1)
    }

    /// `k(μ)`: the number of cells in the first column.
    pub fn first_column_length(&self) -> usize {
        self.len()
    }

    /// The hook `(d-k+1, 1^{k-1})` with `k` cells in the first column.
    pub fn hook(d: usize, k: usize) -> Result<Partition> {
        if k == 0 || k > d {
            return Err(Error::InvalidPartition(format!("no hook of size {d} with {k} rows")));
        }
        let mut parts = vec![d - k + 1];
        parts.extend(std::iter::repeat_n(1, k - 1));
        Ok(Partition(parts))
    }

    /// Multiplicity `r_i` of each part size `i`, as `(i, r_i)` pairs with `i` decreasing.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, r)) if *q == p => *r += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Dominance order: `self ⊵ other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 1..=self.len().max(other.len()) {
            a += self.row(i);
            b += other.row(i);
            if a < b {
                return false;
            }
        }
        true
    }
}

impl TryFrom<String> for Partition {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> Self {
        p.to_string()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("{s:?}: bad part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `d` in reverse lexicographic order.
pub fn partitions_of(d: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, &mut Vec::new(), &mut out);
    out
}

/// All compositions (ordered, positive parts) of `d`, in lexicographic order.
pub fn compositions_of(d: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in 1..=rest {
            cur.push(p);
            rec(rest - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    // Independent counter: p(n, k) = p(n, k-1) + p(n-k, k).
    fn count_partitions(d: usize) -> u64 {
        let mut table = vec![0u64; d + 1];
        table[0] = 1;
        for k in 1..=d {
            for n in k..=d {
                table[n] += table[n - k];
            }
        }
        table[d]
    }

    #[test]
    fn small_lists() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(8).len(), 22);
    }

    #[test]
    fn counts_match_recurrence() {
        for d in 0..=30 {
            assert_eq!(partitions_of(d).len() as u64, count_partitions(d), "d = {d}");
        }
    }

    #[test]
    fn reverse_lex_is_strictly_decreasing() {
        for d in 1..=12 {
            let ps = partitions_of(d);
            assert!(ps.windows(2).all(|w| w[0] > w[1]));
            assert!(ps.iter().all(|q| q.size() == d));
        }
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        for d in 0..=10 {
            for q in partitions_of(d) {
                assert_eq!(q.conjugate().conjugate(), q);
            }
        }
    }

    #[test]
    fn hooks() {
        assert!(p(&[3, 1, 1]).is_hook().unwrap());
        assert_eq!(p(&[3, 1, 1]).first_column_length(), 3);
        assert!(!p(&[2, 2]).is_hook().unwrap());
        assert!(p(&[5]).is_hook().unwrap());
        assert_eq!(p(&[5]).first_column_length(), 1);
        assert_eq!(Partition::empty().is_hook(), Err(Error::EmptyShape));
        assert_eq!(Partition::hook(4, 2).unwrap(), p(&[3, 1]));
        for d in 1..=10 {
            for q in partitions_of(d) {
                let hook = q.is_hook().unwrap();
                assert_eq!(hook, (q.row(1) - 1) + q.len() == d, "{q}");
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3,1,1".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[4, 2, 1]).to_string(), "4,2,1");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn cells_and_containment() {
        let q = p(&[2, 1]);
        let cells: Vec<Cell> = q.cells().collect();
        assert_eq!(cells, vec![Cell::new(1, 1), Cell::new(1, 2), Cell::new(2, 1)]);
        assert!(!q.contains(Cell::new(2, 2)));
        assert!(!q.contains(Cell::new(0, 1)));
    }

    #[test]
    fn dominance_and_compositions() {
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])));
        assert!(!p(&[3, 1, 1, 1]).dominates(&p(&[2, 2, 2])));
        assert!(!p(&[2, 2, 2]).dominates(&p(&[3, 1, 1, 1])));
        assert_eq!(compositions_of(4).len(), 8);
        assert_eq!(p(&[2, 2, 1]).multiplicities(), vec![(2, 2), (1, 1)]);
    }

    proptest! {
        #[test]
        fn composition_sorting_gives_partition(parts in proptest::collection::vec(0usize..6, 0..8)) {
            let q = Partition::from_composition(&parts);
            prop_assert_eq!(q.size(), parts.iter().sum::<usize>());
            prop_assert!(Partition::new(q.parts().to_vec()).is_ok());
            prop_assert_eq!(q.to_string().parse::<Partition>().unwrap(), q);
        }
    }
}
