//! Clique number and chromatic number.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count [`chromatic_number`] accepts.
pub const CHROMATIC_LIMIT: usize = 30;

/// A maximum clique, as a sorted vertex list.
///
/// Branch and bound over bitsets with a greedy-coloring upper bound.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    let mut best = Vec::new();
    let mut current = Vec::new();
    expand(g, &mut current, BitSet::full(g.n()), &mut best);
    best.sort_unstable();
    best
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

/// Every clique on exactly `size` vertices, each sorted, in lexicographic
/// order.
pub fn cliques_of_size(g: &Graph, size: usize) -> Vec<Vec<usize>> {
    fn grow(g: &Graph, size: usize, current: &mut Vec<usize>, cand: BitSet, out: &mut Vec<Vec<usize>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        if current.len() + cand.len() < size {
            return;
        }
        for v in cand.iter() {
            let mut next = cand.clone();
            next.intersect_with(g.row(v));
            // Only larger vertices, so each clique is produced once.
            for w in next.clone().iter().filter(|&w| w < v) {
                next.remove(w);
            }
            current.push(v);
            grow(g, size, current, next, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    grow(g, size, &mut Vec::new(), BitSet::full(g.n()), &mut out);
    out
}

/// Greedy sequential coloring of `cand`; returns vertices with their color
/// bound (color index + 1), ordered by increasing bound.
fn color_bound(g: &Graph, cand: &BitSet) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(cand.len());
    let mut uncolored = cand.clone();
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut avail = uncolored.clone();
        while let Some(v) = avail.first() {
            avail.remove(v);
            avail.difference_with(g.row(v));
            uncolored.remove(v);
            out.push((v, color));
        }
    }
    out
}

fn expand(g: &Graph, current: &mut Vec<usize>, mut cand: BitSet, best: &mut Vec<usize>) {
    let order = color_bound(g, &cand);
    for &(v, bound) in order.iter().rev() {
        if current.len() + bound <= best.len() {
            return;
        }
        current.push(v);
        let mut next = cand.clone();
        next.intersect_with(g.row(v));
        if next.is_empty() {
            if current.len() > best.len() {
                best.clone_from(current);
            }
        } else {
            expand(g, current, next, best);
        }
        current.pop();
        cand.remove(v);
    }
}

/// Exact chromatic number by backtracking over DSATUR orderings, trying
/// `k = ω, ω+1, ..` colors. Graphs above [`CHROMATIC_LIMIT`] vertices are
/// refused.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > CHROMATIC_LIMIT {
        return Err(Error::TooLarge { n, limit: CHROMATIC_LIMIT });
    }
    if n == 0 {
        return Ok(0);
    }
    let mut k = clique_number(g).max(1);
    loop {
        if colorable(g, k) {
            return Ok(k);
        }
        k += 1;
    }
}

/// A proper `k`-coloring of the vertices, if one exists.
pub fn vertex_coloring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let mut colors = vec![usize::MAX; g.n()];
    if dsatur(g, k, &mut colors, 0, 0) {
        Some(colors)
    } else {
        None
    }
}

fn colorable(g: &Graph, k: usize) -> bool {
    vertex_coloring(g, k).is_some()
}

fn dsatur(g: &Graph, k: usize, colors: &mut [usize], done: usize, used: usize) -> bool {
    let n = g.n();
    if done == n {
        return true;
    }
    // Uncolored vertex with the most distinct neighbor colors, then highest degree.
    let mut pick = usize::MAX;
    let mut pick_key = (0, 0);
    let mut pick_forbidden = 0u64;
    for v in 0..n {
        if colors[v] != usize::MAX {
            continue;
        }
        let mut forbidden = 0u64;
        for w in g.neighbors(v) {
            if colors[w] != usize::MAX {
                forbidden |= 1 << colors[w];
            }
        }
        let key = (forbidden.count_ones() as usize, g.degree(v));
        if pick == usize::MAX || key > pick_key {
            pick = v;
            pick_key = key;
            pick_forbidden = forbidden;
        }
    }
    // Colors above `used` are interchangeable, so only the first new one is tried.
    for c in 0..k.min(used + 1) {
        if pick_forbidden >> c & 1 == 1 {
            continue;
        }
        colors[pick] = c;
        if dsatur(g, k, colors, done + 1, used.max(c + 1)) {
            return true;
        }
    }
    colors[pick] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::edge;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| edge(i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push(edge(i, (i + 1) % 5));
            edges.push(edge(i, i + 5));
            edges.push(edge(5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    /// Largest vertex subset that is a clique, by enumerating all subsets.
    fn brute_clique(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|&s| {
                (0..n).all(|u| (u + 1..n).all(|v| s >> u & 1 == 0 || s >> v & 1 == 0 || g.has_edge(u, v)))
            })
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Smallest k admitting a proper coloring, by trying all k^n assignments.
    fn brute_chromatic(g: &Graph) -> usize {
        let n = g.n();
        for k in 1..=n {
            let total = k.pow(n as u32);
            for code in 0..total {
                let mut c = code;
                let colors: Vec<usize> = (0..n)
                    .map(|_| {
                        let x = c % k;
                        c /= k;
                        x
                    })
                    .collect();
                if g.edges().iter().all(|&(u, v)| colors[u] != colors[v]) {
                    return k;
                }
            }
        }
        0
    }

    #[test]
    fn clique_examples() {
        assert_eq!(clique_number(&Graph::complete(5)), 5);
        assert_eq!(clique_number(&cycle(5)), 2);
        assert_eq!(clique_number(&Graph::empty(0)), 0);
        assert_eq!(clique_number(&Graph::empty(3)), 1);
    }

    #[test]
    fn chromatic_examples() {
        for t in 1..7 {
            assert_eq!(chromatic_number(&Graph::complete(t)).unwrap(), t);
        }
        assert_eq!(chromatic_number(&cycle(5)).unwrap(), 3);
        assert_eq!(chromatic_number(&cycle(6)).unwrap(), 2);
        assert_eq!(chromatic_number(&petersen()).unwrap(), 3);
        assert_eq!(brute_chromatic(&petersen()), 3);
    }

    #[test]
    fn chromatic_refuses_large_graphs() {
        assert_eq!(chromatic_number(&Graph::empty(31)), Err(Error::TooLarge { n: 31, limit: 30 }));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
            (1..=max_n).prop_flat_map(|n| {
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                    let mut g = Graph::empty(n);
                    let mut k = 0;
                    for u in 0..n {
                        for v in u + 1..n {
                            if bits[k] {
                                g.add_edge(u, v);
                            }
                            k += 1;
                        }
                    }
                    g
                })
            })
        }

        proptest! {
            #[test]
            fn clique_matches_subset_enumeration(g in graph_strategy(12)) {
                let best = max_clique(&g);
                prop_assert_eq!(best.len(), brute_clique(&g));
                for (i, &u) in best.iter().enumerate() {
                    for &v in &best[i + 1..] {
                        prop_assert!(g.has_edge(u, v));
                    }
                }
            }

            #[test]
            fn chromatic_matches_brute_force(g in graph_strategy(7)) {
                prop_assert_eq!(chromatic_number(&g).unwrap(), brute_chromatic(&g));
            }
        }
    }
}
