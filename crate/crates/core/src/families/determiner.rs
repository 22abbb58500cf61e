//! Chains of determiners glued along a tree.

use alloc::vec::Vec;

use super::Builder;
use crate::error::{Error, Result};
use crate::graph::{edge, Color, Edge, Graph};

/// A gadget with a distinguished edge `beta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeterminerGadget {
    pub graph: Graph,
    pub beta: Edge,
}

impl DeterminerGadget {
    pub fn new(graph: Graph, beta: Edge) -> Result<Self> {
        let beta = edge(beta.0, beta.1);
        if !graph.has_edge(beta.0, beta.1) {
            return Err(Error::NotAnEdge(beta));
        }
        Ok(DeterminerGadget { graph, beta })
    }
}

/// A copy `T_0` of `tree` on `0..|T|`, then for each edge `xy` of `T_0`
/// (lexicographic, `x < y`) a fresh copy of `d` with `β = (a, b)` identified
/// as `a ↦ x`, `b ↦ y`.
pub fn determiner_chain(tree: &Graph, d: &DeterminerGadget) -> Result<Graph> {
    if !tree.is_tree() || tree.m() == 0 {
        return Err(Error::NotATree);
    }
    let (a, b) = d.beta;
    let mut f = Builder::new(tree.n());
    for (x, y) in tree.edges() {
        let mut map = Vec::with_capacity(d.graph.n());
        let first = f.vertices(d.graph.n() - 2);
        let mut next = first;
        for v in 0..d.graph.n() {
            map.push(if v == a {
                x
            } else if v == b {
                y
            } else {
                next += 1;
                next - 1
            });
        }
        f.copy(&d.graph, &map, |_| Color::Red);
    }
    Ok(f.finish()?.0)
}
