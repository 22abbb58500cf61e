//! Named graphs, gadgets and their witness colorings.
//!
//! All constructors label vertices deterministically: hubs and clique
//! vertices first, then attached blocks in index order.

mod determiner;
mod distinguisher;
mod factor;
mod hyper;

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{edge, Color, Edge, EdgeColoring, Graph};

pub use determiner::{determiner_chain, DeterminerGadget};
pub use distinguisher::{
    c_gadget, diameter_distinguisher, lambda_gadget, uniform_tree, vertex_colorings_force_clique, DistinguisherInputs,
    RootedGadget,
};
pub use factor::{factor_extremal_graph, ConstructionTrace};
pub use hyper::{hypergraph_blowup, hypergraph_girth, Hypergraph};

/// The basic families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basic {
    /// `K_{1,s}`, center 0.
    Star(usize),
    /// The path on `n` vertices, in path order.
    Path(usize),
    Clique(usize),
    /// The cycle on `n` vertices, in cyclic order.
    Cycle(usize),
}

pub fn basic_family(kind: Basic) -> Result<Graph> {
    match kind {
        Basic::Star(s) if s >= 1 => Graph::from_edges(s + 1, &(1..=s).map(|i| (0, i)).collect::<Vec<_>>()),
        Basic::Path(n) if n >= 1 => Graph::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()),
        Basic::Clique(t) if t >= 1 => Ok(Graph::complete(t)),
        Basic::Cycle(n) if n >= 3 => Graph::from_edges(n, &(0..n).map(|i| edge(i, (i + 1) % n)).collect::<Vec<_>>()),
        other => Err(Error::param(format!("{other:?} is out of range"))),
    }
}

pub fn star(s: usize) -> Graph {
    basic_family(Basic::Star(s)).expect("star size at least 1")
}

pub fn path(n: usize) -> Graph {
    basic_family(Basic::Path(n)).expect("path length at least 1")
}

pub fn cycle(n: usize) -> Graph {
    basic_family(Basic::Cycle(n)).expect("cycle length at least 3")
}

/// The Petersen graph: outer cycle 0..5, spokes `i — i+5`, inner pentagram.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push(edge(i, (i + 1) % 5));
        edges.push(edge(i, i + 5));
        edges.push(edge(5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).expect("valid edges")
}

/// `K_t · aK_b`: the clique on `0..t` with a disjoint `K_b` glued at each of
/// the vertices `0..a`.
pub fn clique_with_pendants(t: usize, a: usize, b: usize) -> Result<Graph> {
    if t < 3 || a < 1 || a > t || b < 2 {
        return Err(Error::param(format!("need t >= 3, 1 <= a <= t, b >= 2; got t={t}, a={a}, b={b}")));
    }
    let mut b_ = Builder::new(t);
    b_.clique(&(0..t).collect::<Vec<_>>(), Color::Blue);
    for i in 0..a {
        let first = b_.vertices(b - 1);
        let mut block: Vec<usize> = (first..first + b - 1).collect();
        block.push(i);
        b_.clique(&block, Color::Blue);
    }
    Ok(b_.finish()?.0)
}

/// The caterpillar with spine `0 — 1 — 2` and the given leaf counts at each
/// spine vertex; leaves are numbered from 3, first those of 0, then 1, then 2.
///
/// An `s`-suitable caterpillar has `s` leaves at both ends and fewer than
/// `s` in the middle.
pub fn suitable_caterpillar(s: usize, leaves_a: usize, leaves_mid: usize, leaves_c: usize) -> Result<Graph> {
    if s < 1 || leaves_a != s || leaves_c != s || leaves_mid + 1 > s {
        return Err(Error::param(format!(
            "an {s}-suitable caterpillar needs {s} leaves at each end and at most {} in the middle",
            s.saturating_sub(1)
        )));
    }
    let mut b = Builder::new(3);
    b.edge(0, 1, Color::Red);
    b.edge(1, 2, Color::Red);
    for (spine, count) in [(0, leaves_a), (1, leaves_mid), (2, leaves_c)] {
        for _ in 0..count {
            let leaf = b.vertices(1);
            b.edge(spine, leaf, Color::Red);
        }
    }
    Ok(b.finish()?.0)
}

/// Accumulates a colored graph from pieces.
pub(crate) struct Builder {
    n: usize,
    edges: Vec<(Edge, Color)>,
}

impl Builder {
    pub(crate) fn new(n: usize) -> Self {
        Builder { n, edges: Vec::new() }
    }

    /// Adds `k` vertices and returns the first.
    pub(crate) fn vertices(&mut self, k: usize) -> usize {
        self.n += k;
        self.n - k
    }

    pub(crate) fn edge(&mut self, u: usize, v: usize, c: Color) {
        self.edges.push((edge(u, v), c));
    }

    pub(crate) fn clique(&mut self, vs: &[usize], c: Color) {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                self.edge(u, v, c);
            }
        }
    }

    /// Copies `g` with vertex `x` sent to `map[x]`, every edge colored by
    /// `color`.
    pub(crate) fn copy(&mut self, g: &Graph, map: &[usize], mut color: impl FnMut(Edge) -> Color) {
        for (u, v) in g.edges() {
            self.edge(map[u], map[v], color((u, v)));
        }
    }

    /// Copies a colored gadget, identifying its vertex `glue.0` with the
    /// existing vertex `glue.1` for each pair in `glue`; every other vertex is
    /// new. Returns the vertex map.
    pub(crate) fn attach(&mut self, g: &Graph, colors: &EdgeColoring, glue: &[(usize, usize)]) -> Vec<usize> {
        let mut map = alloc::vec![usize::MAX; g.n()];
        for &(x, at) in glue {
            map[x] = at;
        }
        for slot in map.iter_mut() {
            if *slot == usize::MAX {
                *slot = self.vertices(1);
            }
        }
        for ((u, v), c) in colors.iter() {
            self.edge(map[u], map[v], c);
        }
        map
    }

    pub(crate) fn finish(self) -> Result<(Graph, EdgeColoring)> {
        let edges: Vec<Edge> = self.edges.iter().map(|&(e, _)| e).collect();
        let g = Graph::from_edges(self.n, &edges)?;
        let c = EdgeColoring::from_pairs(&g, &self.edges)?;
        Ok((g, c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::clique_number;
    use crate::subgraph::contains_copy;

    #[test]
    fn basic_examples() {
        let s = star(3);
        assert_eq!((s.n(), s.m(), s.max_degree()), (4, 3, 3));
        assert_eq!(basic_family(Basic::Clique(6)).unwrap().m(), 15);
        assert!(cycle(5).is_regular(2));
        assert!(basic_family(Basic::Cycle(2)).is_err());
        assert!(basic_family(Basic::Star(0)).is_err());
    }

    #[test]
    fn pendant_cliques() {
        let g = clique_with_pendants(6, 2, 3).unwrap();
        assert_eq!((g.n(), g.m()), (10, 15 + 2 * 3));
        assert!(contains_copy(&g, &Graph::complete(6)).is_some());
        assert_eq!(clique_number(&g), 6);
        let g = clique_with_pendants(5, 1, 2).unwrap();
        assert_eq!((g.n(), g.m()), (6, 11));
        let g = clique_with_pendants(3, 3, 2).unwrap();
        assert_eq!((g.n(), g.m()), (6, 6));
        assert!(clique_with_pendants(3, 4, 2).is_err());
        assert!(clique_with_pendants(3, 1, 1).is_err());
    }

    #[test]
    fn caterpillars() {
        let g = suitable_caterpillar(3, 3, 2, 3).unwrap();
        assert_eq!(g.n(), 11);
        assert!(g.is_tree());
        assert_eq!(suitable_caterpillar(1, 1, 0, 1).unwrap(), path(5).permuted(&[3, 0, 1, 2, 4]));
        let g = suitable_caterpillar(2, 2, 1, 2).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!((g.degree(0), g.degree(1), g.degree(2)), (3, 3, 3));
        assert!(suitable_caterpillar(2, 2, 2, 2).is_err());
        assert!(suitable_caterpillar(2, 1, 0, 2).is_err());
    }
}
