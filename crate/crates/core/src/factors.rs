//! k-factors and odd-component certificates.
//!
//! [`has_k_factor`] reduces to perfect matching with the usual vertex
//! gadget. Every edge `e = uv` becomes two adjacent "port" vertices `e_u`
//! and `e_v`. Every vertex `v` of degree `d` gets `d - k` "absorber"
//! vertices, each adjacent to all ports of `v`. In a perfect matching the
//! absorbers at `v` consume `d - k` of its ports; the remaining `k` ports
//! are matched across their edge, and the edges matched that way form a
//! k-factor. Conversely a k-factor gives such a matching directly.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::matching::maximum_matching;

/// A spanning k-regular subgraph, as its edge list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorWitness {
    pub k: usize,
    pub edges: Vec<Edge>,
}

impl FactorWitness {
    pub fn is_valid(&self, host: &Graph) -> bool {
        let mut deg = vec![0usize; host.n()];
        for &(u, v) in &self.edges {
            if !host.has_edge(u, v) {
                return false;
            }
            deg[u] += 1;
            deg[v] += 1;
        }
        let mut sorted = self.edges.clone();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == self.edges.len() && deg.iter().all(|&d| d == self.k)
    }
}

/// A set `d` with `p·|d| < odd_component_count`, which rules out a p-factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BelckCertificate {
    pub p: usize,
    pub d: Vec<usize>,
    pub odd_component_count: usize,
}

impl BelckCertificate {
    pub fn is_valid(&self, host: &Graph) -> bool {
        self.p % 2 == 1
            && self.d.iter().all(|&v| v < host.n())
            && odd_components(host, &self.d) == self.odd_component_count
            && self.p * self.d.len() < self.odd_component_count
    }
}

pub fn has_k_factor(g: &Graph, k: usize) -> Option<FactorWitness> {
    if k == 0 {
        return Some(FactorWitness { k, edges: Vec::new() });
    }
    if g.min_degree() < k || (k % 2 == 1 && g.n() % 2 == 1) {
        return None;
    }
    let edges = g.edges();
    let m = edges.len();
    // Ports 2i (at the smaller endpoint) and 2i+1 (at the larger), then
    // absorbers.
    let absorbers: usize = g.degrees().iter().map(|d| d - k).sum();
    let mut gadget = Graph::empty(2 * m + absorbers);
    let mut ports: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        gadget.add_edge(2 * i, 2 * i + 1);
        ports[u].push(2 * i);
        ports[v].push(2 * i + 1);
    }
    let mut next = 2 * m;
    for (v, pv) in ports.iter().enumerate() {
        for _ in 0..g.degree(v) - k {
            for &p in pv {
                gadget.add_edge(next, p);
            }
            next += 1;
        }
    }
    let mate = maximum_matching(&gadget);
    if mate.iter().any(Option::is_none) {
        return None;
    }
    let chosen = edges
        .iter()
        .enumerate()
        .filter(|&(i, _)| mate[2 * i] == Some(2 * i + 1))
        .map(|(_, &e)| e)
        .collect();
    Some(FactorWitness { k, edges: chosen })
}

/// Number of odd-order components of `g - d`.
pub fn odd_components(g: &Graph, d: &[usize]) -> usize {
    let mut removed = BitSet::new(g.n());
    for &v in d {
        removed.insert(v);
    }
    g.components_avoiding(&removed).iter().filter(|c| c.len() % 2 == 1).count()
}

/// Checks the odd-component inequality for the given set.
pub fn belck_check(g: &Graph, d: &[usize], p: usize) -> Result<Option<BelckCertificate>> {
    if p.is_multiple_of(2) {
        return Err(Error::param("p must be odd and at least 1"));
    }
    if let Some(&v) = d.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let mut set = d.to_vec();
    set.sort_unstable();
    set.dedup();
    let q = odd_components(g, &set);
    Ok((p * set.len() < q).then_some(BelckCertificate { p, d: set, odd_component_count: q }))
}

/// Looks for a certificate: all sets of size at most three, then the set of
/// cut vertices. Finding nothing proves nothing.
pub fn find_belck(g: &Graph, p: usize) -> Result<Option<BelckCertificate>> {
    let n = g.n();
    if let Some(c) = belck_check(g, &[], p)? {
        return Ok(Some(c));
    }
    for a in 0..n {
        if let Some(c) = belck_check(g, &[a], p)? {
            return Ok(Some(c));
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            if let Some(c) = belck_check(g, &[a, b], p)? {
                return Ok(Some(c));
            }
        }
    }
    if n <= 60 {
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if let Some(cert) = belck_check(g, &[a, b, c], p)? {
                        return Ok(Some(cert));
                    }
                }
            }
        }
    }
    let base = g.components().len();
    let cut: Vec<usize> = (0..n).filter(|&v| g.remove_vertex(v).components().len() > base).collect();
    belck_check(g, &cut, p)
}

/// Whether an `(a+b-2)`-regular graph arrows the star pair
/// `(K_{1,a}, K_{1,b})`: exactly when it has no `(a-1)`-factor, since the
/// complement of one inside `f` is the `(b-1)`-regular blue part.
pub fn star_pair_regular_arrows(f: &Graph, a: usize, b: usize) -> Result<bool> {
    if a == 0 || b == 0 {
        return Err(Error::param("star sizes must be at least 1"));
    }
    if !f.is_regular(a + b - 2) {
        return Err(Error::NotRegular { expected: a + b - 2 });
    }
    Ok(has_k_factor(f, a - 1).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::edge;
    use proptest::prelude::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| edge(i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
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

    /// Existence of a k-factor by trying every edge subset.
    fn brute_factor(g: &Graph, k: usize) -> bool {
        let edges = g.edges();
        (0u32..1 << edges.len()).any(|mask| {
            let mut deg = vec![0usize; g.n()];
            for (i, &(u, v)) in edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    deg[u] += 1;
                    deg[v] += 1;
                }
            }
            deg.iter().all(|&d| d == k)
        })
    }

    #[test]
    fn factor_examples() {
        let w = has_k_factor(&cycle(6), 1).unwrap();
        assert!(w.is_valid(&cycle(6)));
        assert_eq!(w.edges.len(), 3);
        assert!(has_k_factor(&cycle(5), 1).is_none());
        let p = petersen();
        let w = has_k_factor(&p, 2).unwrap();
        assert!(w.is_valid(&p));
        assert!(has_k_factor(&p, 1).is_some());
        assert_eq!(has_k_factor(&Graph::empty(3), 0).unwrap().edges, Vec::new());
    }

    #[test]
    fn belck_examples() {
        assert_eq!(belck_check(&Graph::complete(4), &[], 1).unwrap(), None);
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let c = belck_check(&star, &[0], 1).unwrap().unwrap();
        assert_eq!(c.odd_component_count, 3);
        assert!(c.is_valid(&star));
        assert!(belck_check(&star, &[4], 1).is_err());
        assert!(belck_check(&star, &[0], 2).is_err());
        assert!(find_belck(&star, 1).unwrap().is_some());
    }

    #[test]
    fn star_pair_examples() {
        assert!(star_pair_regular_arrows(&cycle(5), 2, 2).unwrap());
        assert!(!star_pair_regular_arrows(&cycle(6), 2, 2).unwrap());
        assert!(!star_pair_regular_arrows(&cycle(6), 1, 3).unwrap());
        assert_eq!(star_pair_regular_arrows(&cycle(6), 2, 3), Err(Error::NotRegular { expected: 3 }));
    }

    proptest! {
        #[test]
        fn factor_matches_subset_search(
            (n, bits, k) in (1usize..8).prop_flat_map(|n| (
                Just(n),
                proptest::collection::vec(proptest::bool::weighted(0.45), n * (n - 1) / 2),
                0usize..4,
            ))
        ) {
            let mut g = Graph::empty(n);
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] && g.m() < 10 {
                        g.add_edge(u, v);
                    }
                    i += 1;
                }
            }
            let found = has_k_factor(&g, k);
            if let Some(w) = &found {
                prop_assert!(w.is_valid(&g));
            }
            prop_assert_eq!(found.is_some(), brute_factor(&g, k));
            // A certificate always rules out the factor.
            if k % 2 == 1 {
                if let Some(c) = find_belck(&g, k).unwrap() {
                    prop_assert!(c.is_valid(&g));
                    prop_assert!(found.is_none());
                }
            }
        }
    }
}
