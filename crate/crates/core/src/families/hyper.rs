//! Uniform hypergraphs of large girth and their clique blow-ups.
//!
//! A cycle of length `s ≥ 2` is a sequence `e_1, v_1, …, e_s, v_s` of
//! distinct hyperedges and distinct vertices with `v_i ∈ e_i ∩ e_{i+1}`
//! (indices mod `s`). Two hyperedges sharing two vertices form a 2-cycle.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    pub n: usize,
    /// Each hyperedge sorted ascending.
    pub edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut edges = edges;
        for e in &mut edges {
            e.sort_unstable();
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::param("hyperedge repeats a vertex"));
            }
        }
        let h = Hypergraph { n, edges };
        if !h.is_uniform() {
            return Err(Error::param("hyperedges differ in size"));
        }
        Ok(h)
    }

    pub fn is_uniform(&self) -> bool {
        self.edges.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                d[v] += 1;
            }
        }
        d
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    /// The graph with a clique on every hyperedge.
    pub fn blowup(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for e in &self.edges {
            for (i, &u) in e.iter().enumerate() {
                for &v in &e[i + 1..] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}

/// Length of a shortest cycle if it is at most `limit`, by exhaustive search
/// over alternating edge/vertex sequences.
pub fn hypergraph_girth(h: &Hypergraph, limit: usize) -> Option<usize> {
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); h.n];
    for (i, e) in h.edges.iter().enumerate() {
        for &v in e {
            incident[v].push(i);
        }
    }
    (2..=limit).find(|&len| (0..h.edges.len()).any(|start| cycle_from(h, &incident, start, len)))
}

/// Whether a cycle of exactly `len` edges starts at hyperedge `start`, all
/// its other hyperedges having larger index.
fn cycle_from(h: &Hypergraph, incident: &[Vec<usize>], start: usize, len: usize) -> bool {
    struct Walk<'a> {
        h: &'a Hypergraph,
        incident: &'a [Vec<usize>],
        start: usize,
        len: usize,
        used_edges: Vec<usize>,
        used_vertices: Vec<usize>,
    }
    impl Walk<'_> {
        fn go(&mut self, cur: usize) -> bool {
            if self.used_edges.len() == self.len {
                // Close the cycle through a fresh vertex of cur ∩ start.
                return self.h.edges[cur]
                    .iter()
                    .any(|v| !self.used_vertices.contains(v) && self.h.edges[self.start].binary_search(v).is_ok());
            }
            for &v in &self.h.edges[cur] {
                if self.used_vertices.contains(&v) {
                    continue;
                }
                for &next in &self.incident[v] {
                    if next <= self.start || self.used_edges.contains(&next) {
                        continue;
                    }
                    self.used_vertices.push(v);
                    self.used_edges.push(next);
                    let found = self.go(next);
                    self.used_edges.pop();
                    self.used_vertices.pop();
                    if found {
                        return true;
                    }
                }
            }
            false
        }
    }
    let mut w = Walk { h, incident, start, len, used_edges: vec![start], used_vertices: Vec::new(), };
    w.go(start)
}

/// Random greedy search for a `t`-uniform hypergraph on `n` vertices with
/// girth at least `g + 1` and minimum degree at least `min_degree`, returned
/// with its blow-up. Hyperedges are proposed around the currently least
/// covered vertices and rejected if they close a cycle of length `≤ g`.
pub fn hypergraph_blowup(
    t: usize,
    g: usize,
    min_degree: usize,
    n: usize,
    trials: u32,
    seed: u64,
) -> Result<(Hypergraph, Graph)> {
    if t < 3 || g < 3 {
        return Err(Error::param("need t >= 3 and g >= 3"));
    }
    if n < t {
        return Err(Error::param("need at least t vertices"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = (0usize, 0usize);
    for _ in 0..trials {
        let mut h = Hypergraph { n, edges: Vec::new() };
        let mut deg = vec![0usize; n];
        let mut failures = 0;
        while deg.iter().any(|&d| d < min_degree) && failures < 50 * n {
            let low = *deg.iter().min().unwrap();
            let mut needy: Vec<usize> = (0..n).filter(|&v| deg[v] == low).collect();
            needy.shuffle(&mut rng);
            let mut cand = vec![needy[0]];
            while cand.len() < t {
                let v = rng.gen_range(0..n);
                if !cand.contains(&v) {
                    cand.push(v);
                }
            }
            cand.sort_unstable();
            h.edges.push(cand);
            if hypergraph_girth(&h, g).is_some() {
                h.edges.pop();
                failures += 1;
                continue;
            }
            for &v in h.edges.last().unwrap() {
                deg[v] += 1;
            }
        }
        let reached = *deg.iter().min().unwrap();
        if reached >= min_degree {
            let f = h.blowup();
            return Ok((h, f));
        }
        best = best.max((reached, h.edges.len()));
    }
    Err(Error::SearchExhausted {
        trials,
        detail: format!("best minimum degree {} with {} hyperedges at girth > {g}", best.0, best.1),
    })
}
