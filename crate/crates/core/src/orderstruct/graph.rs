use crate::error::{Error, Result};

use super::bits;
use super::poset::full_mask;

/// A finite simple undirected graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u32>,
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        assert!(n <= 32, "graphs are limited to 32 vertices");
        Graph { n, adj: vec![0; n] }
    }

    pub fn complete(n: usize) -> Graph {
        let all = full_mask(n);
        Graph {
            n,
            adj: (0..n).map(|v| all & !(1 << v)).collect(),
        }
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > 32 {
            return Err(Error::Guard {
                what: "graph",
                size: n,
                limit: 32,
            });
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge {u} {v} out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::InvalidGraph(format!("repeated edge {u} {v}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> u32 {
        self.adj[v]
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| bits(self.adj[u] >> (u + 1)).map(move |d| (u, u + 1 + d)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_independent(&self, set: u32) -> bool {
        bits(set).all(|v| self.adj[v] & set == 0)
    }

    pub fn complement(&self) -> Graph {
        let all = full_mask(self.n);
        Graph {
            n: self.n,
            adj: (0..self.n).map(|v| !self.adj[v] & all & !(1 << v)).collect(),
        }
    }

    /// A centre and three pairwise non-adjacent neighbours, if any.
    pub fn find_claw(&self) -> Option<[usize; 4]> {
        for c in 0..self.n {
            let nb: Vec<usize> = bits(self.adj[c]).collect();
            for (i, &x) in nb.iter().enumerate() {
                for (j, &y) in nb.iter().enumerate().skip(i + 1) {
                    if self.has_edge(x, y) {
                        continue;
                    }
                    for &z in &nb[j + 1..] {
                        if !self.has_edge(x, z) && !self.has_edge(y, z) {
                            return Some([c, x, y, z]);
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_clawfree(&self) -> bool {
        self.find_claw().is_none()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u32;
        let mut frontier = 1u32;
        while frontier != 0 {
            let next = bits(frontier).fold(0, |m, v| m | self.adj[v]) & !seen;
            seen |= next;
            frontier = next;
        }
        seen == full_mask(self.n)
    }

    /// Short identifier such as `n=3 edges=0-1,1-2`.
    pub fn describe(&self) -> String {
        let edges: Vec<String> = self.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
        format!("n={} edges={}", self.n, edges.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claws() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!star.is_clawfree());
        assert_eq!(star.find_claw(), Some([0, 1, 2, 3]));
        for n in 0..=6 {
            assert!(Graph::complete(n).is_clawfree());
        }
    }

    #[test]
    fn basics() {
        let g = Graph::path(4);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_connected());
        assert!(g.is_independent(0b0101));
        assert!(!g.is_independent(0b0011));
        assert!(!Graph::empty(2).is_connected());
        assert_eq!(Graph::complete(3).complement(), Graph::empty(3));
        assert_eq!(g.describe(), "n=4 edges=0-1,1-2,2-3");
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::from_edges(2, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 1), (1, 0)]).is_err());
    }
}
