use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{bits, Graph, Poset};

/// Largest edge count for which orientations are enumerated.
pub const MAX_EDGES: usize = 24;

/// A direction for every edge of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orientation {
    graph: Graph,
    /// bit `v` of `out[u]` is set iff the edge `{u, v}` points `u → v`
    out: Vec<u32>,
}

impl Orientation {
    /// Orients each edge of `graph` as listed in `arcs` (`(from, to)` pairs).
    pub fn new(graph: &Graph, arcs: &[(usize, usize)]) -> Result<Orientation> {
        let mut out = vec![0u32; graph.len()];
        for &(u, v) in arcs {
            if u >= graph.len() || v >= graph.len() || !graph.has_edge(u, v) {
                return Err(Error::InvalidGraph(format!("arc {u} -> {v} is not a graph edge")));
            }
            if out[v] >> u & 1 == 1 || out[u] >> v & 1 == 1 {
                return Err(Error::InvalidGraph(format!("edge {u} {v} oriented twice")));
            }
            out[u] |= 1 << v;
        }
        if arcs.len() != graph.edge_count() {
            return Err(Error::InvalidGraph(format!(
                "{} arcs given for {} edges",
                arcs.len(),
                graph.edge_count()
            )));
        }
        Ok(Orientation {
            graph: graph.clone(),
            out,
        })
    }

    pub(crate) fn from_out_sets(graph: &Graph, out: Vec<u32>) -> Orientation {
        debug_assert!((0..graph.len()).all(|v| out[v] & !graph.neighbors(v) == 0));
        Orientation {
            graph: graph.clone(),
            out,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn points_to(&self, u: usize, v: usize) -> bool {
        self.out[u] >> v & 1 == 1
    }

    /// `(from, to)` for each edge, in the graph's edge order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.graph
            .edges()
            .into_iter()
            .map(|(u, v)| if self.points_to(u, v) { (u, v) } else { (v, u) })
            .collect()
    }

    /// Vertices with no outgoing edge.
    pub fn sinks(&self) -> u32 {
        (0..self.graph.len())
            .filter(|&v| self.out[v] == 0)
            .fold(0, |m, v| m | 1 << v)
    }

    pub fn sink_count(&self) -> usize {
        self.sinks().count_ones() as usize
    }

    fn reach(&self) -> Vec<u32> {
        reachability(&self.out)
    }

    pub fn is_acyclic(&self) -> bool {
        self.reach().iter().enumerate().all(|(v, r)| r >> v & 1 == 0)
    }

    /// The order with `u < v` iff there is a directed path from `v` to `u`.
    /// Its minimal elements are exactly the sinks.
    pub fn induced_order(&self) -> Result<Poset> {
        let reach = self.reach();
        if reach.iter().enumerate().any(|(v, r)| r >> v & 1 == 1) {
            return Err(Error::CyclicOrientation);
        }
        Ok(Poset::from_down_sets_unchecked(reach))
    }
}

/// Transitive closure of the out-neighbour relation.
fn reachability(out: &[u32]) -> Vec<u32> {
    let n = out.len();
    let mut reach = out.to_vec();
    for k in 0..n {
        for v in 0..n {
            if reach[v] >> k & 1 == 1 {
                reach[v] |= reach[k];
            }
        }
    }
    reach
}

fn reaches(out: &[u32], from: usize, to: usize) -> bool {
    let mut seen = 1u32 << from;
    let mut frontier = seen;
    while frontier != 0 {
        if frontier >> to & 1 == 1 {
            return true;
        }
        let next = bits(frontier).fold(0, |m, v| m | out[v]) & !seen;
        seen |= next;
        frontier = next;
    }
    false
}

/// Orients edges one at a time, abandoning a branch as soon as a cycle closes.
fn for_each_acyclic(graph: &Graph, mut visit: impl FnMut(&[u32])) -> Result<()> {
    let edges = graph.edges();
    if edges.len() > MAX_EDGES {
        return Err(Error::Guard {
            what: "orientation enumeration edge count",
            size: edges.len(),
            limit: MAX_EDGES,
        });
    }
    fn rec(edges: &[(usize, usize)], i: usize, out: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
        let Some(&(u, v)) = edges.get(i) else {
            visit(out);
            return;
        };
        for (a, b) in [(u, v), (v, u)] {
            if reaches(out, b, a) {
                continue;
            }
            out[a] |= 1 << b;
            rec(edges, i + 1, out, visit);
            out[a] &= !(1 << b);
        }
    }
    let mut out = vec![0u32; graph.len()];
    rec(&edges, 0, &mut out, &mut visit);
    Ok(())
}

/// Every acyclic orientation, in a fixed order (first edge `u → v` before `v → u`).
pub fn acyclic_orientations(graph: &Graph) -> Result<Vec<Orientation>> {
    let mut all = Vec::new();
    for_each_acyclic(graph, |out| all.push(Orientation::from_out_sets(graph, out.to_vec())))?;
    Ok(all)
}

/// `κ_ℓ`: number of acyclic orientations with exactly `ℓ` sinks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SinkCounts(pub BTreeMap<usize, u64>);

impl SinkCounts {
    pub fn get(&self, sinks: usize) -> u64 {
        self.0.get(&sinks).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    /// `[κ_1, …, κ_n]`.
    pub fn to_vec(&self, n: usize) -> Vec<u64> {
        (1..=n).map(|l| self.get(l)).collect()
    }
}

pub fn acyclic_orientation_sink_counts(graph: &Graph) -> Result<SinkCounts> {
    let mut counts = BTreeMap::new();
    for_each_acyclic(graph, |out| {
        let sinks = minimal_elements(out);
        debug_assert_eq!(sinks, minimal_elements(&reachability(out)));
        *counts.entry(sinks.count_ones() as usize).or_insert(0) += 1;
    })?;
    Ok(SinkCounts(counts))
}

/// Minimal elements of the order whose strict down-sets are `below`.
fn minimal_elements(below: &[u32]) -> u32 {
    (0..below.len())
        .filter(|&v| below[v] == 0)
        .fold(0, |m, v| m | 1 << v)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Oracle: all 2^|E| orientations, cycle test by repeated sink removal.
    fn brute_force(graph: &Graph) -> BTreeMap<usize, u64> {
        let edges = graph.edges();
        let mut counts = BTreeMap::new();
        for mask in 0u32..(1 << edges.len()) {
            let mut out = vec![0u32; graph.len()];
            for (i, &(u, v)) in edges.iter().enumerate() {
                if mask >> i & 1 == 0 {
                    out[u] |= 1 << v;
                } else {
                    out[v] |= 1 << u;
                }
            }
            let sinks = (0..graph.len()).filter(|&v| out[v] == 0).count();
            let mut alive: u32 = (1 << graph.len()) - 1;
            loop {
                let s = (0..graph.len()).find(|&v| alive >> v & 1 == 1 && out[v] & alive == 0);
                match s {
                    Some(v) => alive &= !(1 << v),
                    None => break,
                }
            }
            if alive == 0 {
                *counts.entry(sinks).or_insert(0) += 1;
            }
        }
        counts
    }

    #[test]
    fn small_graphs() {
        let empty = acyclic_orientation_sink_counts(&Graph::empty(4)).unwrap();
        assert_eq!(empty.0, BTreeMap::from([(4, 1)]));
        let k3 = acyclic_orientation_sink_counts(&Graph::complete(3)).unwrap();
        assert_eq!(k3.0, BTreeMap::from([(1, 6)]));
        let p3 = acyclic_orientation_sink_counts(&Graph::path(3)).unwrap();
        assert_eq!(p3.0, BTreeMap::from([(1, 3), (2, 1)]));
        assert_eq!(p3.to_vec(3), vec![3, 1, 0]);
    }

    #[test]
    fn matches_brute_force() {
        let graphs = [
            Graph::complete(5),
            Graph::path(5),
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (3, 4)]).unwrap(),
            Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5), (1, 2), (3, 4), (5, 0)]).unwrap(),
        ];
        for g in &graphs {
            assert_eq!(acyclic_orientation_sink_counts(g).unwrap().0, brute_force(g), "{}", g.describe());
            assert_eq!(acyclic_orientations(g).unwrap().len() as u64, brute_force(g).values().sum::<u64>());
        }
    }

    #[test]
    fn edge_budget() {
        let k8 = Graph::complete(8);
        assert!(matches!(acyclic_orientation_sink_counts(&k8), Err(Error::Guard { size: 28, .. })));
    }

    #[test]
    fn induced_orders() {
        let edge = Graph::path(2);
        let o = Orientation::new(&edge, &[(0, 1)]).unwrap();
        let order = o.induced_order().unwrap();
        assert!(order.less(1, 0));
        assert_eq!(o.sinks(), 0b10);

        let o = Orientation::new(&Graph::empty(3), &[]).unwrap();
        assert_eq!(o.induced_order().unwrap(), Poset::antichain(3));

        let k3 = Graph::complete(3);
        let o = Orientation::new(&k3, &[(2, 1), (1, 0), (2, 0)]).unwrap();
        assert_eq!(o.induced_order().unwrap(), Poset::chain(3));

        let cyclic = Orientation::new(&k3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!cyclic.is_acyclic());
        assert_eq!(cyclic.induced_order(), Err(Error::CyclicOrientation));
    }

    #[test]
    fn sinks_are_minimal_elements() {
        for o in acyclic_orientations(&Graph::complete(4)).unwrap() {
            let order = o.induced_order().unwrap();
            let minimal = (0..4).filter(|&v| order.down_set(v) == 0).fold(0u32, |m, v| m | 1 << v);
            assert_eq!(o.sinks(), minimal);
        }
    }

    #[test]
    fn rejects_bad_arcs() {
        let g = Graph::path(3);
        assert!(Orientation::new(&g, &[(0, 2), (1, 2)]).is_err());
        assert!(Orientation::new(&g, &[(0, 1)]).is_err());
        assert!(Orientation::new(&g, &[(0, 1), (1, 0)]).is_err());
    }
}
