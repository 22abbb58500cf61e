//! Simple undirected graphs on `0..n` and red/blue edge colorings.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::{self, words_for, BitSet};
use crate::error::{Error, Result};

/// An unordered vertex pair, always stored with `0 < 1`.
pub type Edge = (usize, usize);

/// Orders an endpoint pair so that the smaller vertex comes first.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A simple undirected graph stored as a dense adjacency matrix of bit rows.
///
/// Two graphs compare equal iff they are equal as labeled graphs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let stride = words_for(n).max(1);
        Graph { n, stride, rows: vec![0; stride * n], m: 0 }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// endpoints outside `0..n`.
    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if !self.add_edge(u, v) {
            return Err(Error::DuplicateEdge(edge(u, v)));
        }
        Ok(())
    }

    /// Adds `uv`; returns false if it was already present.
    ///
    /// Panics on loops or out-of-range endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u}, {v}) for n = {}", self.n);
        if self.has_edge(u, v) {
            return false;
        }
        self.rows[u * self.stride + v / 64] |= 1 << (v % 64);
        self.rows[v * self.stride + u / 64] |= 1 << (u % 64);
        self.m += 1;
        true
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if !self.has_edge(u, v) {
            return false;
        }
        self.rows[u * self.stride + v / 64] &= !(1 << (v % 64));
        self.rows[v * self.stride + u / 64] &= !(1 << (u % 64));
        self.m -= 1;
        true
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    /// Neighbor bitset of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    /// Number of words in each adjacency row.
    #[inline]
    pub fn stride(&self) -> usize {
        self.stride
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::iter_ones(self.row(v))
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        bits::count_ones(self.row(v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// True iff every vertex has degree exactly `k`.
    pub fn is_regular(&self, k: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == k)
    }

    /// All edges in lexicographic order. Colorings index edges in this order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The subgraph induced by `vertices`, relabeled to `0..len` in the
    /// given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// `G - v`, with vertices above `v` shifted down by one.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&x| x != v).collect();
        self.induced(&keep)
    }

    /// `G - Y` for an edge set `Y`.
    pub fn without_edges(&self, edges: &[Edge]) -> Graph {
        let mut g = self.clone();
        for &(u, v) in edges {
            g.remove_edge(u, v);
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        g
    }

    /// Copies `other` into `self` on fresh vertices and returns the offset of
    /// its vertex 0.
    pub fn append(&mut self, other: &Graph) -> usize {
        let offset = self.n;
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + offset, v + offset);
        }
        *self = g;
        offset
    }

    /// Adds `k` isolated vertices and returns the index of the first one.
    pub fn add_vertices(&mut self, k: usize) -> usize {
        let first = self.n;
        let mut g = Graph::empty(self.n + k);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        *self = g;
        first
    }

    /// Connected components, each sorted, in order of smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(&BitSet::new(self.n))
    }

    /// Components of `G - removed`.
    pub fn components_avoiding(&self, removed: &BitSet) -> Vec<Vec<usize>> {
        let mut seen = removed.clone();
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for y in self.neighbors(x) {
                    if !seen.contains(y) {
                        seen.insert(y);
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Breadth-first distances from `s`; `usize::MAX` marks unreachable.
    pub fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[s] = 0;
        let mut queue = vec![s];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            i += 1;
            for y in self.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push(y);
                }
            }
        }
        dist
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m + 1 == self.n && self.is_connected()
    }

    /// Number of vertices with at least one incident edge.
    pub fn non_isolated(&self) -> usize {
        (0..self.n).filter(|&v| self.degree(v) > 0).count()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// One of the two edge colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn flipped(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }
}

/// A total red/blue assignment on the edge set of a host graph.
///
/// Edges are kept in the host's lexicographic order, so a coloring can be
/// checked against a host with [`EdgeColoring::matches_host`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    n: usize,
    edges: Vec<Edge>,
    colors: Vec<Color>,
}

impl EdgeColoring {
    pub fn from_fn(host: &Graph, mut color: impl FnMut(Edge) -> Color) -> Self {
        let edges = host.edges();
        let colors = edges.iter().map(|&e| color(e)).collect();
        EdgeColoring { n: host.n(), edges, colors }
    }

    pub fn uniform(host: &Graph, c: Color) -> Self {
        EdgeColoring::from_fn(host, |_| c)
    }

    /// Colors given as a list of `(edge, color)` pairs. The list must cover
    /// every host edge exactly once and nothing else.
    pub fn from_pairs(host: &Graph, pairs: &[(Edge, Color)]) -> Result<Self> {
        let edges = host.edges();
        let mut colors: Vec<Option<Color>> = vec![None; edges.len()];
        for &((u, v), c) in pairs {
            let e = edge(u, v);
            let i = edges
                .binary_search(&e)
                .map_err(|_| Error::ColoringMismatch(format!("{e:?} is not a host edge")))?;
            if colors[i].replace(c).is_some() {
                return Err(Error::ColoringMismatch(format!("{e:?} colored twice")));
            }
        }
        let colors = colors
            .into_iter()
            .zip(&edges)
            .map(|(c, e)| c.ok_or_else(|| Error::ColoringMismatch(format!("{e:?} uncolored"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(EdgeColoring { n: host.n(), edges, colors })
    }

    /// Builds a coloring from per-edge colors in host edge order.
    pub fn from_colors(host: &Graph, colors: Vec<Color>) -> Result<Self> {
        let edges = host.edges();
        if edges.len() != colors.len() {
            return Err(Error::ColoringMismatch(format!(
                "{} colors for {} edges",
                colors.len(),
                edges.len()
            )));
        }
        Ok(EdgeColoring { n: host.n(), edges, colors })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, Color)> + '_ {
        self.edges.iter().copied().zip(self.colors.iter().copied())
    }

    /// True iff the coloring's domain is exactly `host`'s edge set.
    pub fn matches_host(&self, host: &Graph) -> bool {
        self.n == host.n() && self.edges.len() == host.m() && self.edges.iter().all(|&(u, v)| host.has_edge(u, v))
    }

    pub fn check_host(&self, host: &Graph) -> Result<()> {
        if self.matches_host(host) {
            Ok(())
        } else {
            Err(Error::ColoringMismatch(format!(
                "coloring of {} edges on {} vertices vs host with {} edges on {} vertices",
                self.edges.len(),
                self.n,
                host.m(),
                host.n()
            )))
        }
    }

    fn index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&edge(u, v)).ok()
    }

    pub fn color(&self, u: usize, v: usize) -> Option<Color> {
        self.index(u, v).map(|i| self.colors[i])
    }

    /// Recolors an existing edge; returns its previous color.
    pub fn set(&mut self, u: usize, v: usize, c: Color) -> Result<Color> {
        let i = self.index(u, v).ok_or(Error::NotAnEdge(edge(u, v)))?;
        Ok(core::mem::replace(&mut self.colors[i], c))
    }

    pub fn flip(&mut self, u: usize, v: usize) -> Result<Color> {
        let old = self.color(u, v).ok_or(Error::NotAnEdge(edge(u, v)))?;
        self.set(u, v, old.flipped())?;
        Ok(old.flipped())
    }

    /// The spanning subgraph formed by the edges of color `c`.
    pub fn subgraph(&self, c: Color) -> Graph {
        let mut g = Graph::empty(self.n);
        for (e, col) in self.iter() {
            if col == c {
                g.add_edge(e.0, e.1);
            }
        }
        g
    }

    pub fn red_graph(&self) -> Graph {
        self.subgraph(Color::Red)
    }

    pub fn blue_graph(&self) -> Graph {
        self.subgraph(Color::Blue)
    }

    pub fn count(&self, c: Color) -> usize {
        self.colors.iter().filter(|&&x| x == c).count()
    }

    /// Number of edges of color `c` at vertex `v`.
    pub fn degree_in(&self, v: usize, c: Color) -> usize {
        self.iter().filter(|&((a, b), col)| col == c && (a == v || b == v)).count()
    }
}

impl fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("EdgeColoring[")?;
        for (i, ((u, v), c)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}:{}", c.letter())?;
        }
        f.write_str("]")
    }
}
