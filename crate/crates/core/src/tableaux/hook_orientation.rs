//! The correspondence between hook-shaped P-tableaux and acyclic orientations
//! of the incomparability graph.
//!
//! A hook tableau orients every edge from the element in the later column
//! towards the element in the earlier column. Conversely an acyclic
//! orientation with `ℓ` sinks is induced by exactly `C(ℓ-1, k-1)` hook
//! tableaux with `k` cells in the first column, built below.

use crate::error::{Error, Result};
use crate::orderstruct::{bits, Orientation, Poset};
use crate::partitions::Partition;

use super::PTableau;

/// Orients `{u, v}` as `u → v` when `u` sits in a column strictly right of `v`.
pub fn orientation_from_hook_tableau(poset: &Poset, t: &PTableau) -> Result<Orientation> {
    if !t.shape().is_hook()? {
        return Err(Error::NotAHook(t.shape().to_string()));
    }
    t.check(poset)?;
    let graph = poset.incomparability_graph();
    let col = |x: usize| t.position(x).expect("every element is placed").col;
    let mut arcs = Vec::with_capacity(graph.edge_count());
    for (u, v) in graph.edges() {
        let (cu, cv) = (col(u), col(v));
        // incomparable elements never share a column
        assert_ne!(cu, cv, "adjacent {u} and {v} share column {cu}");
        arcs.push(if cu > cv { (u, v) } else { (v, u) });
    }
    Orientation::new(&graph, &arcs)
}

/// The hook P-tableaux with `k` first-column cells inducing `o`.
///
/// The `≺`-least sink goes in (1,1); each `(k-1)`-subset of the other sinks
/// fills the rest of column 1 in `≺`-ascending order; row 1 is completed by
/// repeatedly taking the `≺`-least of the minimal elements (in the order
/// induced by `o`) among the elements not yet placed. Subsets are visited in
/// lexicographic order of their positions in the sorted sink chain.
pub fn hook_tableaux_inducing(poset: &Poset, o: &Orientation, k: usize) -> Result<Vec<PTableau>> {
    if o.graph() != &poset.incomparability_graph() {
        return Err(Error::InvalidGraph(
            "orientation is not of the poset's incomparability graph".into(),
        ));
    }
    let order = o.induced_order()?;
    let sinks = poset
        .sort_chain(o.sinks())
        .expect("sinks are pairwise non-adjacent, hence a chain of the poset");
    let l = sinks.len();
    if k == 0 || k > l {
        return Ok(Vec::new());
    }
    let n = poset.len();
    let mut out = Vec::new();
    for chosen in combinations(l - 1, k - 1) {
        let column: Vec<usize> = std::iter::once(sinks[0])
            .chain(chosen.iter().map(|&i| sinks[i + 1]))
            .collect();
        let mut remaining: u32 = (0..n).fold(0, |m, v| m | 1 << v);
        for &x in &column {
            remaining &= !(1 << x);
        }
        let mut first_row = vec![column[0]];
        while remaining != 0 {
            let minimal = bits(remaining)
                .filter(|&v| order.down_set(v) & remaining == 0)
                .fold(0u32, |m, v| m | 1 << v);
            let chain = poset
                .sort_chain(minimal)
                .expect("minimal elements of the remaining order form a chain");
            first_row.push(chain[0]);
            remaining &= !(1 << chain[0]);
        }
        let mut rows = vec![first_row];
        rows.extend(column[1..].iter().map(|&x| vec![x]));
        let t = PTableau::from_rows_unchecked(rows);
        debug_assert_eq!(t.shape(), &Partition::hook(n, k).expect("1 <= k <= n"));
        debug_assert!(t.check(poset).is_ok());
        out.push(t);
    }
    Ok(out)
}

/// `k`-subsets of `0..n` as ascending index lists, lexicographic.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orderstruct::{acyclic_orientations, enumerate_posets, Graph, PosetFilter};
    use crate::tableaux::enumerate_p_tableaux;
    use std::collections::HashSet;

    fn p3() -> Poset {
        Poset::from_relations(3, &[(0, 2)]).unwrap()
    }

    fn binomial(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn combination_lists() {
        assert_eq!(combinations(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(combinations(2, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(1, 2).is_empty());
    }

    #[test]
    fn path_poset_tableau_orients_towards_first_column() {
        let t = PTableau::new(&p3(), vec![vec![0, 1], vec![2]]).unwrap();
        let o = orientation_from_hook_tableau(&p3(), &t).unwrap();
        assert!(o.points_to(1, 0) && o.points_to(1, 2));
        assert_eq!(o.sink_count(), 2);
        assert_eq!(o.sinks(), 0b101);
    }

    #[test]
    fn single_row_over_antichain() {
        let a = Poset::antichain(4);
        let t = PTableau::new(&a, vec![vec![2, 0, 3, 1]]).unwrap();
        let o = orientation_from_hook_tableau(&a, &t).unwrap();
        assert_eq!(o.sinks(), 1 << 2);
        assert_eq!(o.induced_order().unwrap().sort_chain(0b1111), Some(vec![2, 0, 3, 1]));
    }

    #[test]
    fn single_column_over_chain() {
        let c = Poset::chain(3);
        let t = PTableau::new(&c, vec![vec![0], vec![1], vec![2]]).unwrap();
        let o = orientation_from_hook_tableau(&c, &t).unwrap();
        assert_eq!(o.graph(), &Graph::empty(3));
        assert!(o.arcs().is_empty());
    }

    #[test]
    fn rejects_non_hooks() {
        let a = Poset::from_relations(4, &[(0, 2), (1, 3)]).unwrap();
        let t = PTableau::new(&a, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert!(matches!(orientation_from_hook_tableau(&a, &t), Err(Error::NotAHook(_))));
    }

    #[test]
    fn path_poset_constructions() {
        let g = p3().incomparability_graph();
        let o = Orientation::new(&g, &[(1, 0), (1, 2)]).unwrap();
        let two = hook_tableaux_inducing(&p3(), &o, 2).unwrap();
        assert_eq!(two, vec![PTableau::new(&p3(), vec![vec![0, 1], vec![2]]).unwrap()]);
        let one = hook_tableaux_inducing(&p3(), &o, 1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].shape(), &"3".parse::<Partition>().unwrap());
        assert_eq!(orientation_from_hook_tableau(&p3(), &one[0]).unwrap(), o);
        assert!(hook_tableaux_inducing(&p3(), &o, 3).unwrap().is_empty());
        assert!(hook_tableaux_inducing(&p3(), &o, 0).unwrap().is_empty());
    }

    #[test]
    fn correspondence_partitions_hook_tableaux() {
        for n in 1..=4 {
            for poset in enumerate_posets(n, PosetFilter::ALL).unwrap() {
                let g = poset.incomparability_graph();
                let orientations = acyclic_orientations(&g).unwrap();
                for k in 1..=n {
                    let shape = Partition::hook(n, k).unwrap();
                    let all: HashSet<PTableau> = enumerate_p_tableaux(&poset, &shape).unwrap().into_iter().collect();
                    let mut produced = Vec::new();
                    for o in &orientations {
                        let ts = hook_tableaux_inducing(&poset, o, k).unwrap();
                        assert_eq!(ts.len(), binomial(o.sink_count() - 1, k - 1));
                        for t in &ts {
                            t.check(&poset).unwrap();
                            assert_eq!(&orientation_from_hook_tableau(&poset, t).unwrap(), o);
                        }
                        produced.extend(ts);
                    }
                    let set: HashSet<PTableau> = produced.iter().cloned().collect();
                    assert_eq!(set.len(), produced.len(), "duplicates for {poset:?}, k = {k}");
                    assert_eq!(set, all, "{poset:?}, k = {k}");
                }
            }
        }
    }
}
