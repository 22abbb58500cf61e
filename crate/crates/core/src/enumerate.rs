//! Isomorph-free generation of small graphs.
//!
//! Each level is grown from the previous one by a single extension step
//! (a new vertex with every possible neighborhood, a new leaf, or a new
//! edge) and deduplicated by canonical form. Output is sorted by canonical
//! form, so it is deterministic.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::canon::canonical_form;
use crate::graph::Graph;

/// All graphs on exactly `n` vertices, one per isomorphism class.
pub fn graphs_on(n: usize) -> Vec<Graph> {
    let mut level: BTreeSet<Graph> = BTreeSet::new();
    level.insert(Graph::empty(0));
    for k in 0..n {
        let mut next = BTreeSet::new();
        for g in &level {
            for mask in 0u64..1 << k {
                let mut h = g.clone();
                let v = h.add_vertices(1);
                for u in 0..k {
                    if mask >> u & 1 == 1 {
                        h.add_edge(u, v);
                    }
                }
                next.insert(canonical_form(&h));
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

/// All graphs on 1 to `max_n` vertices, by increasing order.
pub fn graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(graphs_on).collect()
}

/// All trees on exactly `n ≥ 1` vertices.
pub fn trees_on(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: BTreeSet<Graph> = BTreeSet::new();
    level.insert(Graph::empty(1));
    for _ in 1..n {
        let mut next = BTreeSet::new();
        for t in &level {
            for u in 0..t.n() {
                let mut h = t.clone();
                let v = h.add_vertices(1);
                h.add_edge(u, v);
                next.insert(canonical_form(&h));
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

pub fn trees_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(trees_on).collect()
}

/// All graphs with exactly `m` edges and no isolated vertices.
pub fn graphs_with_edges(m: usize) -> Vec<Graph> {
    let mut level: BTreeSet<Graph> = BTreeSet::new();
    level.insert(Graph::empty(0));
    for _ in 0..m {
        let mut next = BTreeSet::new();
        for g in &level {
            let n = g.n();
            // Edge between existing vertices.
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        let mut h = g.clone();
                        h.add_edge(u, v);
                        next.insert(canonical_form(&h));
                    }
                }
            }
            // Pendant edge to a new vertex.
            for u in 0..n {
                let mut h = g.clone();
                let v = h.add_vertices(1);
                h.add_edge(u, v);
                next.insert(canonical_form(&h));
            }
            // Disjoint new edge.
            let mut h = g.clone();
            let a = h.add_vertices(2);
            h.add_edge(a, a + 1);
            next.insert(canonical_form(&h));
        }
        level = next;
    }
    level.into_iter().collect()
}

/// All graphs with 1 to `max_m` edges and no isolated vertices.
pub fn graphs_up_to_edges(max_m: usize) -> Vec<Graph> {
    (1..=max_m).flat_map(graphs_with_edges).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts_match_published_sequence() {
        // Number of graphs on n nodes: 1, 2, 4, 11, 34, 156, 1044.
        let counts: Vec<usize> = (1..=7).map(|n| graphs_on(n).len()).collect();
        assert_eq!(counts, [1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn tree_counts_match_published_sequence() {
        // Number of trees on n nodes: 1, 1, 1, 2, 3, 6, 11, 23, 47.
        let counts: Vec<usize> = (1..=9).map(|n| trees_on(n).len()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 3, 6, 11, 23, 47]);
        assert!(trees_up_to(9).iter().all(Graph::is_tree));
    }

    #[test]
    fn edge_level_counts() {
        // Graphs with m edges and no isolated vertices: 1, 2, 5, 11, 26, 68.
        let counts: Vec<usize> = (1..=6).map(|m| graphs_with_edges(m).len()).collect();
        assert_eq!(counts, [1, 2, 5, 11, 26, 68]);
        for g in graphs_up_to_edges(5) {
            assert_eq!(g.non_isolated(), g.n());
        }
    }
}
