//! Finite posets, simple graphs, and acyclic orientations.
//!
//! Ground sets are always `0..n`. Relations and adjacency are stored as one
//! bitmask per element, so `n` is limited to 32.

mod format;
mod generate;
mod graph;
mod orientation;
mod poset;

pub use generate::{enumerate_graphs, enumerate_posets, GraphFilter, PosetFilter, MAX_GRAPH_N, MAX_POSET_N};
pub use graph::Graph;
pub use orientation::{acyclic_orientation_sink_counts, acyclic_orientations, Orientation, SinkCounts, MAX_EDGES};
pub use poset::Poset;

pub(crate) fn bits(mask: u32) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}
