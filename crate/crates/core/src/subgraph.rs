//! Non-induced subgraph containment by backtracking.
//!
//! Pattern vertices are placed in a connected order (most already-placed
//! neighbors first, then highest degree). Candidates for the next vertex are
//! the common host neighbors of the images of its placed neighbors,
//! intersected with the host vertices of large enough degree, computed
//! word-parallel on adjacency rows.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::bits::BitSet;
use crate::graph::{edge, Color, Edge, EdgeColoring, Graph};

/// An injective map from pattern vertices to host vertices under which every
/// pattern edge lands on a host edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    /// `map[p]` is the host vertex assigned to pattern vertex `p`.
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn is_valid(&self, pattern: &Graph, host: &Graph) -> bool {
        if self.map.len() != pattern.n() || self.map.iter().any(|&h| h >= host.n()) {
            return false;
        }
        let distinct: BTreeSet<usize> = self.map.iter().copied().collect();
        distinct.len() == self.map.len()
            && pattern.edges().iter().all(|&(a, b)| host.has_edge(self.map[a], self.map[b]))
    }

    /// Host edges covered by the image of the pattern.
    pub fn edge_image(&self, pattern: &Graph) -> Vec<Edge> {
        pattern.edges().iter().map(|&(a, b)| edge(self.map[a], self.map[b])).collect()
    }
}

/// Dense `(u, v) -> edge index` table for a host graph, matching the order
/// of [`Graph::edges`].
#[derive(Clone, Debug)]
pub struct EdgeIndex {
    n: usize,
    table: Vec<u32>,
    edges: Vec<Edge>,
}

impl EdgeIndex {
    pub const NONE: u32 = u32::MAX;

    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let edges = g.edges();
        let mut table = vec![Self::NONE; n * n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            table[u * n + v] = i as u32;
            table[v * n + u] = i as u32;
        }
        EdgeIndex { n, table, edges }
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        match self.table[u * self.n + v] {
            Self::NONE => None,
            i => Some(i as usize),
        }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

struct Plan {
    order: Vec<usize>,
    /// For each position, the pattern vertices placed earlier and adjacent.
    back: Vec<Vec<usize>>,
    pins: Vec<Option<usize>>,
    eligible: Vec<BitSet>,
}

impl Plan {
    fn new(host: &Graph, pattern: &Graph, pins: &[(usize, usize)]) -> Option<Plan> {
        let pn = pattern.n();
        let mut placed = vec![false; pn];
        let mut order = Vec::with_capacity(pn);
        let mut pin_of = vec![None; pn];
        for &(p, h) in pins {
            if p >= pn || h >= host.n() || placed[p] {
                return None;
            }
            placed[p] = true;
            pin_of[p] = Some(h);
            order.push(p);
        }
        while order.len() < pn {
            let next = (0..pn)
                .filter(|&p| !placed[p])
                .max_by_key(|&p| {
                    let back = pattern.neighbors(p).filter(|&q| placed[q]).count();
                    (back, pattern.degree(p), core::cmp::Reverse(p))
                })
                .expect("unplaced vertex");
            placed[next] = true;
            order.push(next);
        }
        let mut position = vec![0; pn];
        for (i, &p) in order.iter().enumerate() {
            position[p] = i;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &p)| pattern.neighbors(p).filter(|&q| position[q] < i).collect())
            .collect();
        let host_deg = host.degrees();
        let eligible = order
            .iter()
            .map(|&p| {
                let need = pattern.degree(p);
                let mut s = BitSet::new(host.n());
                for (v, &d) in host_deg.iter().enumerate() {
                    if d >= need {
                        s.insert(v);
                    }
                }
                s
            })
            .collect();
        let pins = order.iter().map(|&p| pin_of[p]).collect();
        Some(Plan { order, back, pins, eligible })
    }
}

struct Search<'a, F> {
    host: &'a Graph,
    plan: Plan,
    map: Vec<usize>,
    used: BitSet,
    scratch: Vec<BitSet>,
    visit: F,
}

impl<F: FnMut(&[usize]) -> ControlFlow<()>> Search<'_, F> {
    fn run(&mut self, pos: usize) -> ControlFlow<()> {
        if pos == self.plan.order.len() {
            return (self.visit)(&self.map);
        }
        let p = self.plan.order[pos];
        let mut cand = core::mem::replace(&mut self.scratch[pos], BitSet::new(0));
        cand.clone_from(&self.plan.eligible[pos]);
        cand.difference_with(self.used.words());
        for &q in &self.plan.back[pos] {
            cand.intersect_with(self.host.row(self.map[q]));
        }
        if let Some(h) = self.plan.pins[pos] {
            let ok = cand.contains(h);
            cand.clear();
            if ok {
                cand.insert(h);
            }
        }
        let mut flow = ControlFlow::Continue(());
        for c in cand.iter() {
            self.map[p] = c;
            self.used.insert(c);
            flow = self.run(pos + 1);
            self.used.remove(c);
            if flow.is_break() {
                break;
            }
        }
        self.scratch[pos] = cand;
        flow
    }
}

/// Calls `visit` with every embedding of `pattern` into `host` that maps
/// each pinned pattern vertex `p` to its host vertex `h` for `(p, h)` in
/// `pins`. Returns `Break` if the visitor stopped the search.
pub fn for_each_embedding(
    host: &Graph,
    pattern: &Graph,
    pins: &[(usize, usize)],
    visit: impl FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if pattern.n() > host.n() || pattern.m() > host.m() {
        return ControlFlow::Continue(());
    }
    let Some(plan) = Plan::new(host, pattern, pins) else {
        return ControlFlow::Continue(());
    };
    let depth = plan.order.len();
    let mut search = Search {
        host,
        plan,
        map: vec![usize::MAX; pattern.n()],
        used: BitSet::new(host.n()),
        scratch: (0..depth).map(|_| BitSet::new(host.n())).collect(),
        visit,
    };
    search.run(0)
}

/// Finds an embedding respecting `pins`, if one exists.
pub fn find_embedding(host: &Graph, pattern: &Graph, pins: &[(usize, usize)]) -> Option<Embedding> {
    let mut found = None;
    let _ = for_each_embedding(host, pattern, pins, |m| {
        found = Some(Embedding { map: m.to_vec() });
        ControlFlow::Break(())
    });
    found
}

/// A copy of `pattern` in `host` (not necessarily induced), if any.
pub fn contains_copy(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    find_embedding(host, pattern, &[])
}

/// A copy of `pattern` using only host edges accepted by `allowed`.
pub fn contains_copy_where(
    host: &Graph,
    pattern: &Graph,
    allowed: impl Fn(usize, usize) -> bool,
) -> Option<Embedding> {
    let mut restricted = Graph::empty(host.n());
    for (u, v) in host.edges() {
        if allowed(u, v) {
            restricted.add_edge(u, v);
        }
    }
    contains_copy(&restricted, pattern)
}

/// A copy of `pattern` all of whose edges have color `c` under `coloring`.
pub fn monochromatic_copy(coloring: &EdgeColoring, pattern: &Graph, c: Color) -> Option<Embedding> {
    contains_copy(&coloring.subgraph(c), pattern)
}

/// Every distinct edge set of a copy of `pattern` in `host` that contains
/// the host edge `through` (all copies when `through` is `None`).
///
/// Each set is sorted by host edge index (see [`EdgeIndex`]).
pub fn copy_edge_sets(host: &Graph, pattern: &Graph, through: Option<Edge>, index: &EdgeIndex) -> Vec<Vec<u32>> {
    let pattern_edges = pattern.edges();
    let mut out: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut record = |m: &[usize]| {
        let mut set: Vec<u32> = pattern_edges
            .iter()
            .map(|&(a, b)| index.get(m[a], m[b]).expect("embedding maps edges to edges") as u32)
            .collect();
        set.sort_unstable();
        out.insert(set);
        ControlFlow::Continue(())
    };
    match through {
        None => {
            let _ = for_each_embedding(host, pattern, &[], &mut record);
        }
        Some((x, y)) => {
            if host.has_edge(x, y) {
                for &(a, b) in &pattern_edges {
                    let _ = for_each_embedding(host, pattern, &[(a, x), (b, y)], &mut record);
                    let _ = for_each_embedding(host, pattern, &[(a, y), (b, x)], &mut record);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// True iff `a` and `b` are isomorphic.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    // Equal vertex and edge counts turn a subgraph embedding into an isomorphism.
    da == db && contains_copy(b, a).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<Edge> = (0..n).map(|i| edge(i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn star(s: usize) -> Graph {
        let edges: Vec<Edge> = (1..=s).map(|i| (0, i)).collect();
        Graph::from_edges(s + 1, &edges).unwrap()
    }

    /// Tries every injection of pattern vertices into host vertices.
    fn naive_contains(host: &Graph, pattern: &Graph) -> bool {
        fn rec(host: &Graph, pattern: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            let p = map.len();
            if p == pattern.n() {
                return pattern.edges().iter().all(|&(a, b)| host.has_edge(map[a], map[b]));
            }
            for h in 0..host.n() {
                if used[h] {
                    continue;
                }
                used[h] = true;
                map.push(h);
                let ok = rec(host, pattern, map, used);
                map.pop();
                used[h] = false;
                if ok {
                    return true;
                }
            }
            false
        }
        rec(host, pattern, &mut Vec::new(), &mut vec![false; host.n()])
    }

    #[test]
    fn spec_examples() {
        let k3 = Graph::complete(3);
        let e = contains_copy(&Graph::complete(4), &k3).unwrap();
        assert!(e.is_valid(&k3, &Graph::complete(4)));
        assert!(contains_copy(&cycle(5), &star(3)).is_none());
    }

    #[test]
    fn empty_and_edgeless_patterns() {
        assert!(contains_copy(&Graph::empty(0), &Graph::empty(0)).is_some());
        assert!(contains_copy(&Graph::empty(2), &Graph::empty(2)).is_some());
        assert!(contains_copy(&Graph::empty(2), &Graph::empty(3)).is_none());
    }

    #[test]
    fn pinned_search_respects_pins() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let host = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(find_embedding(&host, &p3, &[(1, 1)]).is_some());
        assert!(find_embedding(&host, &p3, &[(1, 0)]).is_none());
        assert!(find_embedding(&host, &p3, &[(0, 0), (2, 2)]).is_some());
        assert!(find_embedding(&host, &p3, &[(0, 0), (2, 3)]).is_none());
    }

    #[test]
    fn copies_are_deduplicated_edge_sets() {
        let k4 = Graph::complete(4);
        let idx = EdgeIndex::new(&k4);
        assert_eq!(copy_edge_sets(&k4, &Graph::complete(3), None, &idx).len(), 4);
        // P_3 copies in K_4: 4 * 3 = 12.
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(copy_edge_sets(&k4, &p3, None, &idx).len(), 12);
        // Paths through 01 have their middle vertex at 0 or at 1.
        let through = copy_edge_sets(&k4, &p3, Some((0, 1)), &idx);
        let e01 = idx.get(0, 1).unwrap() as u32;
        assert!(through.iter().all(|s| s.contains(&e01)));
        assert_eq!(through.len(), 4);
    }

    #[test]
    fn isomorphism_check() {
        assert!(isomorphic(&cycle(5), &cycle(5).permuted(&[2, 4, 1, 0, 3])));
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(!isomorphic(&cycle(5), &p5));
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
            #![proptest_config(ProptestConfig::with_cases(400))]

            #[test]
            fn agrees_with_all_injections(host in graph_strategy(9), pattern in graph_strategy(6)) {
                let fast = contains_copy(&host, &pattern);
                prop_assert_eq!(fast.is_some(), naive_contains(&host, &pattern));
                if let Some(e) = fast {
                    prop_assert!(e.is_valid(&pattern, &host));
                }
            }

            #[test]
            fn monotone_under_edge_addition(host in graph_strategy(8), pattern in graph_strategy(5), extra in any::<(u8, u8)>()) {
                let mut bigger = host.clone();
                let (u, v) = (extra.0 as usize % host.n(), extra.1 as usize % host.n());
                if u != v {
                    bigger.add_edge(u, v);
                }
                if contains_copy(&host, &pattern).is_some() {
                    prop_assert!(contains_copy(&bigger, &pattern).is_some());
                }
            }
        }
    }
}
