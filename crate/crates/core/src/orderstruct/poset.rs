use crate::error::{Error, Result};

use super::{bits, Graph};

/// A strict partial order on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    /// bit `u` of `below[v]` is set iff `u ≺ v`
    below: Vec<u32>,
}

impl Poset {
    /// Builds the order generated by `pairs` (each `(u, v)` meaning `u ≺ v`).
    pub fn from_relations(n: usize, pairs: &[(usize, usize)]) -> Result<Poset> {
        check_size(n)?;
        let mut below = vec![0u32; n];
        for &(u, v) in pairs {
            if u >= n || v >= n {
                return Err(Error::InvalidPoset(format!("relation {u} < {v} out of range for n = {n}")));
            }
            below[v] |= 1 << u;
        }
        for k in 0..n {
            for v in 0..n {
                if below[v] >> k & 1 == 1 {
                    below[v] |= below[k];
                }
            }
        }
        if let Some(v) = (0..n).find(|&v| below[v] >> v & 1 == 1) {
            return Err(Error::InvalidPoset(format!("relations contain a cycle through {v}")));
        }
        Ok(Poset { n, below })
    }

    /// Wraps a relation given as strict down-sets, checking all order axioms.
    pub fn from_down_sets(below: Vec<u32>) -> Result<Poset> {
        let n = below.len();
        check_size(n)?;
        let p = Poset { n, below };
        p.check_axioms()?;
        Ok(p)
    }

    pub(crate) fn from_down_sets_unchecked(below: Vec<u32>) -> Poset {
        Poset { n: below.len(), below }
    }

    pub fn chain(n: usize) -> Poset {
        Poset {
            n,
            below: (0..n).map(|v| (1u32 << v) - 1).collect(),
        }
    }

    pub fn antichain(n: usize) -> Poset {
        Poset { n, below: vec![0; n] }
    }

    /// Blocks of the given sizes, each an antichain, every element of an
    /// earlier block below every element of a later one.
    pub fn ordinal_sum_of_antichains(sizes: &[usize]) -> Poset {
        let mut below = Vec::new();
        let mut done = 0u32;
        for &s in sizes {
            let start = below.len();
            for _ in 0..s {
                below.push(done);
            }
            for i in start..below.len() {
                done |= 1 << i;
            }
        }
        Poset { n: below.len(), below }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `u ≺ v`
    pub fn less(&self, u: usize, v: usize) -> bool {
        self.below[v] >> u & 1 == 1
    }

    pub fn comparable(&self, u: usize, v: usize) -> bool {
        self.less(u, v) || self.less(v, u)
    }

    pub fn down_set(&self, v: usize) -> u32 {
        self.below[v]
    }

    pub fn up_set(&self, v: usize) -> u32 {
        (0..self.n).filter(|&w| self.less(v, w)).fold(0, |m, w| m | 1 << w)
    }

    /// Irreflexive, transitive (hence antisymmetric), in range.
    pub fn check_axioms(&self) -> Result<()> {
        let all = full_mask(self.n);
        for v in 0..self.n {
            if self.below[v] & !all != 0 {
                return Err(Error::InvalidPoset(format!("element {v} relates to elements out of range")));
            }
            if self.less(v, v) {
                return Err(Error::InvalidPoset(format!("{v} < {v}")));
            }
            for u in bits(self.below[v]) {
                if self.below[u] & !self.below[v] != 0 {
                    return Err(Error::InvalidPoset(format!("not transitive below {u} < {v}")));
                }
                if self.less(v, u) {
                    return Err(Error::InvalidPoset(format!("{u} < {v} and {v} < {u}")));
                }
            }
        }
        Ok(())
    }

    /// Pairs `(u, v)` with `v` covering `u`, sorted.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in 0..self.n {
                if self.less(u, v) && !bits(self.below[v]).any(|w| self.less(u, w)) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Edge `{u, v}` iff `u` and `v` are incomparable.
    pub fn incomparability_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.comparable(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// A chain `a ≺ b ≺ c` and an element `d` incomparable to all three, if any.
    pub fn find_three_plus_one(&self) -> Option<[usize; 4]> {
        for b in 0..self.n {
            for a in bits(self.below[b]) {
                for c in (0..self.n).filter(|&c| self.less(b, c)) {
                    let chain = 1 << a | 1 << b | 1 << c;
                    let d = (0..self.n).find(|&d| {
                        chain >> d & 1 == 0
                            && !self.comparable(a, d)
                            && !self.comparable(b, d)
                            && !self.comparable(c, d)
                    });
                    if let Some(d) = d {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
        None
    }

    pub fn is_three_plus_one_free(&self) -> bool {
        self.find_three_plus_one().is_none()
    }

    /// Elements of `mask` in ascending order, if they form a chain.
    pub fn sort_chain(&self, mask: u32) -> Option<Vec<usize>> {
        let mut elems: Vec<usize> = bits(mask).collect();
        // in a chain, the number of members below x is x's position
        elems.sort_by_key(|&x| (self.below[x] & mask).count_ones());
        elems
            .windows(2)
            .all(|w| self.less(w[0], w[1]))
            .then_some(elems)
    }

    /// True iff the comparability graph is connected.
    pub fn is_connected(&self) -> bool {
        let comparability = self.incomparability_graph().complement();
        comparability.is_connected()
    }
}

pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > 32 {
        return Err(Error::Guard {
            what: "poset",
            size: n,
            limit: 32,
        });
    }
    Ok(())
}
