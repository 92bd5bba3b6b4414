//! Exhaustive generators for labeled posets and labeled graphs.

use crate::error::{Error, Result};

use super::{bits, Graph, Poset};

pub const MAX_POSET_N: usize = 7;
pub const MAX_GRAPH_N: usize = 6;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PosetFilter {
    pub three_plus_one_free: bool,
    /// comparability graph connected
    pub connected: bool,
}

impl PosetFilter {
    pub const ALL: PosetFilter = PosetFilter {
        three_plus_one_free: false,
        connected: false,
    };
    pub const THREE_PLUS_ONE_FREE: PosetFilter = PosetFilter {
        three_plus_one_free: true,
        connected: false,
    };

    fn accepts(&self, p: &Poset) -> bool {
        (!self.three_plus_one_free || p.is_three_plus_one_free()) && (!self.connected || p.is_connected())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GraphFilter {
    pub connected: bool,
    pub clawfree: bool,
}

impl GraphFilter {
    fn accepts(&self, g: &Graph) -> bool {
        (!self.connected || g.is_connected()) && (!self.clawfree || g.is_clawfree())
    }
}

/// Every labeled strict partial order on `0..n`, each exactly once.
///
/// Element `n-1` is added to each poset on `0..n-1` with a strict down-set
/// `D` and up-set `U`, where `D` is down-closed, `U` is up-closed, and every
/// member of `D` already lies below every member of `U`. The restriction to
/// `0..n-1` recovers the smaller poset, so nothing is produced twice.
pub fn enumerate_posets(n: usize, filter: PosetFilter) -> Result<impl Iterator<Item = Poset>> {
    if n > MAX_POSET_N {
        return Err(Error::Guard {
            what: "poset enumeration size",
            size: n,
            limit: MAX_POSET_N,
        });
    }
    let last: Box<dyn Iterator<Item = Poset>> = if n == 0 {
        Box::new(std::iter::once(Poset::antichain(0)))
    } else {
        // all but the last level are materialized; the last is produced lazily
        let base = (0..n - 1).fold(vec![Poset::antichain(0)], |level, _| {
            level.iter().flat_map(extensions).collect::<Vec<_>>()
        });
        Box::new(base.into_iter().flat_map(|p| extensions(&p)))
    };
    Ok(last.filter(move |p| filter.accepts(p)))
}

fn extensions(p: &Poset) -> Vec<Poset> {
    let k = p.len();
    let downs: Vec<u32> = p_subsets(k)
        .filter(|&d| bits(d).all(|x| p.down_set(x) & !d == 0))
        .collect();
    let ups_of: Vec<u32> = (0..k).map(|x| p.up_set(x)).collect();
    let ups: Vec<u32> = p_subsets(k)
        .filter(|&u| bits(u).all(|x| ups_of[x] & !u == 0))
        .collect();
    let mut out = Vec::new();
    for &d in &downs {
        for &u in &ups {
            if d & u != 0 || !bits(u).all(|y| p.down_set(y) & d == d) {
                continue;
            }
            let mut below: Vec<u32> = (0..k).map(|x| p.down_set(x)).collect();
            for y in bits(u) {
                below[y] |= d | 1 << k;
            }
            below.push(d);
            out.push(Poset::from_down_sets_unchecked(below));
        }
    }
    out
}

fn p_subsets(k: usize) -> impl Iterator<Item = u32> {
    0u32..(1u32 << k)
}

/// Every labeled simple graph on `0..n`, by edge-subset bitmask over the
/// pairs `(0,1), (0,2), …` in lexicographic order.
pub fn enumerate_graphs(n: usize, filter: GraphFilter) -> Result<impl Iterator<Item = Graph>> {
    if n > MAX_GRAPH_N {
        return Err(Error::Guard {
            what: "graph enumeration size",
            size: n,
            limit: MAX_GRAPH_N,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let count = 1u64 << pairs.len();
    Ok((0..count)
        .map(move |mask| {
            let mut g = Graph::empty(n);
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            g
        })
        .filter(move |g| filter.accepts(g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    // Oracle: every relation on n points, kept when it is a strict order.
    fn brute_force_posets(n: usize) -> HashSet<Poset> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect();
        let mut out = HashSet::new();
        for mask in 0u64..(1 << pairs.len()) {
            let mut below = vec![0u32; n];
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    below[v] |= 1 << u;
                }
            }
            if let Ok(p) = Poset::from_down_sets(below) {
                out.insert(p);
            }
        }
        out
    }

    #[test]
    fn labeled_poset_counts() {
        let counts: Vec<usize> = (0..=5)
            .map(|n| enumerate_posets(n, PosetFilter::ALL).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 1, 3, 19, 219, 4231]);
    }

    #[test]
    fn matches_brute_force_and_is_duplicate_free() {
        for n in 0..=4 {
            let generated: Vec<Poset> = enumerate_posets(n, PosetFilter::ALL).unwrap().collect();
            let set: HashSet<Poset> = generated.iter().cloned().collect();
            assert_eq!(set.len(), generated.len());
            assert_eq!(set, brute_force_posets(n));
        }
    }

    #[test]
    fn generated_posets_satisfy_axioms() {
        for n in 0..=5 {
            for p in enumerate_posets(n, PosetFilter::ALL).unwrap() {
                p.check_axioms().unwrap();
            }
        }
    }

    #[test]
    fn deterministic_order() {
        let a: Vec<Poset> = enumerate_posets(4, PosetFilter::ALL).unwrap().collect();
        let b: Vec<Poset> = enumerate_posets(4, PosetFilter::ALL).unwrap().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn filters() {
        // nothing on 3 points contains a 3+1
        assert_eq!(enumerate_posets(3, PosetFilter::THREE_PLUS_ONE_FREE).unwrap().count(), 19);
        let free4 = enumerate_posets(4, PosetFilter::THREE_PLUS_ONE_FREE).unwrap().count();
        // 3-chain plus a point: 4 choices of the point, 3! orders of the chain
        assert_eq!(free4, 219 - 24);
        assert_eq!(enumerate_graphs(3, GraphFilter::default()).unwrap().count(), 8);
        let connected = GraphFilter {
            connected: true,
            ..Default::default()
        };
        assert_eq!(enumerate_graphs(4, connected).unwrap().count(), 38);
    }

    #[test]
    fn clawfree_iff_three_plus_one_free() {
        for n in 0..=5 {
            for p in enumerate_posets(n, PosetFilter::ALL).unwrap() {
                assert_eq!(p.incomparability_graph().is_clawfree(), p.is_three_plus_one_free());
            }
        }
    }

    #[test]
    fn size_guards() {
        assert!(enumerate_posets(8, PosetFilter::ALL).is_err());
        assert!(enumerate_graphs(7, GraphFilter::default()).is_err());
    }
}
