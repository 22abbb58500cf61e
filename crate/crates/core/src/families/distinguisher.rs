//! Rooted gadgets and the graphs that separate `(T, K_t)` from
//! `(T, K_t·K_2)` for trees in the class 𝒯′.
//!
//! `Λ_i(T, Γ)` is the complete `k`-ary tree of depth `i` (`k = d·|V(Γ)|`,
//! `d = Δ(T)`) where the children of every inner vertex additionally span
//! `d` disjoint copies of `Γ`. Its witness coloring `Φ_i` is red on the tree
//! and blue on the `Γ` copies. The `C` gadget is `Γ′` plus two non-adjacent
//! vertices joined to all of it.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::Builder;
use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoring, Graph};
use crate::params::clique_number;
use crate::tree::{center_neighbors_on_longest_paths, tree_classify};

/// Guard against accidentally exponential gadgets.
const MAX_GADGET_VERTICES: usize = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedGadget {
    pub graph: Graph,
    pub root: usize,
    pub co_root: Option<usize>,
    pub witness: Option<EdgeColoring>,
}

/// `U_{k,i}` rooted at 0, vertices in breadth-first order.
pub fn uniform_tree(k: usize, i: usize) -> Result<RootedGadget> {
    if k == 0 {
        return Err(Error::param("k must be at least 1"));
    }
    let (graph, witness) = skeleton_with_blocks(k, i, None)?;
    Ok(RootedGadget { graph, root: 0, co_root: None, witness: Some(witness) })
}

/// Builds `U_{k,i}` (red) and, when `blocks = Some((Γ, d))`, `d` blue copies
/// of `Γ` on the children of each inner vertex.
fn skeleton_with_blocks(k: usize, depth: usize, blocks: Option<(&Graph, usize)>) -> Result<(Graph, EdgeColoring)> {
    let mut total = 1usize;
    let mut level = 1usize;
    for _ in 0..depth {
        level = level.checked_mul(k).ok_or(Error::TooLarge { n: usize::MAX, limit: MAX_GADGET_VERTICES })?;
        total = total.saturating_add(level);
        if total > MAX_GADGET_VERTICES {
            return Err(Error::TooLarge { n: total, limit: MAX_GADGET_VERTICES });
        }
    }
    let mut b = Builder::new(1);
    let mut frontier = vec![0usize];
    for _ in 0..depth {
        let mut next = Vec::with_capacity(frontier.len() * k);
        for &v in &frontier {
            let first = b.vertices(k);
            let children: Vec<usize> = (first..first + k).collect();
            for &c in &children {
                b.edge(v, c, Color::Red);
            }
            if let Some((gamma, d)) = blocks {
                for group in children.chunks(gamma.n()).take(d) {
                    b.copy(gamma, group, |_| Color::Blue);
                }
            }
            next.extend(children);
        }
        frontier = next;
    }
    b.finish()
}

/// `Λ_i(T, Γ)` with its coloring `Φ_i`.
pub fn lambda_gadget(tree: &Graph, gamma: &Graph, i: usize) -> Result<RootedGadget> {
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    let d = tree.max_degree();
    if d == 0 || gamma.n() == 0 {
        return Err(Error::param("the tree needs an edge and Γ a vertex"));
    }
    let k = d * gamma.n();
    let (graph, witness) = skeleton_with_blocks(k, i, Some((gamma, d)))?;
    Ok(RootedGadget { graph, root: 0, co_root: None, witness: Some(witness) })
}

/// The `C` gadget: `Γ′` on `0..|Γ′|`, root `r = |Γ′|`, co-root `r′ = |Γ′|+1`.
/// Witness: `Γ′` blue, everything at `r` and `r′` red.
pub fn c_gadget(gamma_prime: &Graph) -> Result<RootedGadget> {
    let k = gamma_prime.n();
    if k == 0 {
        return Err(Error::param("Γ′ must be nonempty"));
    }
    let mut b = Builder::new(k + 2);
    b.copy(gamma_prime, &(0..k).collect::<Vec<_>>(), |_| Color::Blue);
    for v in 0..k {
        b.edge(k, v, Color::Red);
        b.edge(k + 1, v, Color::Red);
    }
    let (graph, witness) = b.finish()?;
    Ok(RootedGadget { graph, root: k, co_root: Some(k + 1), witness: Some(witness) })
}

/// True iff every 2-coloring of the vertices of `j` has a monochromatic
/// `K_size` (checked over all `2^|V(j)|` colorings, `|V(j)| ≤ 20`).
pub fn vertex_colorings_force_clique(j: &Graph, size: usize) -> Result<bool> {
    let n = j.n();
    if n > 20 {
        return Err(Error::TooLarge { n, limit: 20 });
    }
    let mut cliques: Vec<u32> = Vec::new();
    // All vertex sets of the given size that are cliques.
    fn extend(j: &Graph, size: usize, start: usize, set: u32, count: usize, out: &mut Vec<u32>) {
        if count == size {
            out.push(set);
            return;
        }
        for v in start..j.n() {
            if (0..j.n()).all(|u| set >> u & 1 == 0 || j.has_edge(u, v)) {
                extend(j, size, v + 1, set | 1 << v, count + 1, out);
            }
        }
    }
    extend(j, size, 0, 0, 0, &mut cliques);
    let all = if n == 0 { 0 } else { (1u32 << n) - 1 };
    Ok((0..=all).all(|red| {
        let blue = all & !red;
        cliques.iter().any(|&c| c & !red == 0 || c & !blue == 0)
    }))
}

/// Inputs for [`diameter_distinguisher`]. The library checks the clique
/// conditions on `Γ`, `Γ′` and `J` and the vertex-coloring property of `J`;
/// the arrowing properties of `Γ` and `Γ′` are the caller's responsibility.
#[derive(Clone, Debug, Default)]
pub struct DistinguisherInputs {
    /// A `K_t`-free graph arrowing `(T, K_{t-1})`. Defaults to `T` when `t = 3`.
    pub gamma: Option<Graph>,
    /// A `K_t`-free graph arrowing `(T, J)`; required for even diameter.
    pub gamma_prime: Option<Graph>,
    /// A `K_t`-free graph whose vertex 2-colorings all contain a
    /// monochromatic `K_{t-1}`. Defaults to `C_5` when `t = 3`.
    pub j: Option<Graph>,
}

/// A graph arrowing `(T, K_t)` but not `(T, K_t·K_2)`, together with a
/// `(T, K_t·K_2)`-free coloring of it.
///
/// Odd diameter `2r+1`: `K_t` with a `Λ_r` rooted at every clique vertex.
/// Even diameter `2r`: `K_t` where every clique vertex roots `a` copies of
/// `C` and one `Λ_{r-1}`, and every co-root of a `C` roots a `Λ_{r-2}`
/// (`Λ_0` is a single vertex). Here `a` counts the neighbors of the center
/// on longest paths, minus one.
pub fn diameter_distinguisher(tree: &Graph, t: usize, inputs: &DistinguisherInputs) -> Result<(Graph, EdgeColoring)> {
    if t < 3 {
        return Err(Error::param("t must be at least 3"));
    }
    let profile = tree_classify(tree)?;
    if !profile.in_t_prime {
        return Err(Error::pre("the tree is not in the class 𝒯′"));
    }
    let gamma = match (&inputs.gamma, t) {
        (Some(g), _) => g.clone(),
        (None, 3) => tree.clone(),
        (None, _) => return Err(Error::param("Γ must be supplied for t > 3")),
    };
    if clique_number(&gamma) >= t {
        return Err(Error::pre(format!("Γ contains K_{t}")));
    }
    let mut b = Builder::new(t);
    let clique: Vec<usize> = (0..t).collect();
    b.clique(&clique, Color::Blue);
    let diameter = profile.diameter;
    if diameter % 2 == 1 {
        let lambda = lambda_gadget(tree, &gamma, diameter / 2)?;
        let phi = lambda.witness.as_ref().expect("Λ carries Φ");
        for &u in &clique {
            b.attach(&lambda.graph, phi, &[(lambda.root, u)]);
        }
        return b.finish();
    }
    let j = match (&inputs.j, t) {
        (Some(j), _) => j.clone(),
        (None, 3) => super::cycle(5),
        (None, _) => return Err(Error::param("J must be supplied for t > 3")),
    };
    if clique_number(&j) >= t || !vertex_colorings_force_clique(&j, t - 1)? {
        return Err(Error::pre(format!(
            "J must be K_{t}-free with a monochromatic K_{} in every vertex 2-coloring",
            t - 1
        )));
    }
    let gamma_prime = inputs
        .gamma_prime
        .clone()
        .ok_or_else(|| Error::param("Γ′ must be supplied for even diameter"))?;
    if clique_number(&gamma_prime) >= t {
        return Err(Error::pre(format!("Γ′ contains K_{t}")));
    }
    let r = diameter / 2;
    let center = profile.central_vertex.expect("even diameter has a center");
    let a = center_neighbors_on_longest_paths(tree, center, r).len() - 1;
    let outer = lambda_gadget(tree, &gamma, r - 1)?;
    let inner = lambda_gadget(tree, &gamma, r - 2)?;
    let c = c_gadget(&gamma_prime)?;
    let co_root = c.co_root.expect("C has a co-root");
    for &u in &clique {
        for _ in 0..a {
            let map = b.attach(&c.graph, c.witness.as_ref().expect("C carries a witness"), &[(c.root, u)]);
            b.attach(&inner.graph, inner.witness.as_ref().expect("Λ carries Φ"), &[(inner.root, map[co_root])]);
        }
        b.attach(&outer.graph, outer.witness.as_ref().expect("Λ carries Φ"), &[(outer.root, u)]);
    }
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrowing::coloring_is_free;
    use crate::families::{clique_with_pendants, cycle, path};
    use crate::graph::Color;

    fn spider(legs: usize, len: usize) -> Graph {
        let mut b = Builder::new(1);
        for _ in 0..legs {
            let mut prev = 0;
            for _ in 0..len {
                let v = b.vertices(1);
                b.edge(prev, v, Color::Red);
                prev = v;
            }
        }
        b.finish().unwrap().0
    }

    #[test]
    fn uniform_trees() {
        let u = uniform_tree(2, 2).unwrap();
        assert_eq!(u.graph.n(), 7);
        assert!(u.graph.is_tree());
        assert_eq!(uniform_tree(5, 0).unwrap().graph.n(), 1);
        let s = uniform_tree(3, 1).unwrap();
        assert_eq!((s.graph.n(), s.graph.degree(s.root)), (4, 3));
    }

    #[test]
    fn lambda_one_for_p4() {
        let l = lambda_gadget(&path(4), &path(4), 1).unwrap();
        assert_eq!((l.graph.n(), l.graph.m()), (9, 14));
        let phi = l.witness.unwrap();
        let red = phi.red_graph();
        assert_eq!(red.m(), 8);
        assert_eq!(red.degree(l.root), 8);
        // Red part is K_{1,8}: too short for a red P_4.
        assert!(crate::subgraph::contains_copy(&red, &path(4)).is_none());
        let blue = phi.blue_graph();
        assert_eq!(blue.m(), 6);
        assert_eq!(blue.components().iter().filter(|c| c.len() == 4).count(), 2);
        let l0 = lambda_gadget(&path(4), &path(4), 0).unwrap();
        assert_eq!((l0.graph.n(), l0.graph.m()), (1, 0));
    }

    #[test]
    fn c_gadget_counts() {
        let c = c_gadget(&Graph::complete(2)).unwrap();
        assert_eq!((c.graph.n(), c.graph.m()), (4, 5));
        let c = c_gadget(&cycle(5)).unwrap();
        assert_eq!((c.graph.n(), c.graph.m()), (7, 15));
        let w = c.witness.unwrap();
        assert!(crate::subgraph::contains_copy(&w.blue_graph(), &Graph::complete(3)).is_none());
        assert_eq!(w.red_graph().m(), 10);
        assert!(!c.graph.has_edge(c.root, c.co_root.unwrap()));
    }

    #[test]
    fn j_check() {
        assert!(vertex_colorings_force_clique(&cycle(5), 2).unwrap());
        assert!(!vertex_colorings_force_clique(&cycle(6), 2).unwrap());
    }

    #[test]
    fn odd_distinguisher_for_p4() {
        let p4 = path(4);
        let (f, c) = diameter_distinguisher(&p4, 3, &DistinguisherInputs::default()).unwrap();
        assert_eq!((f.n(), f.m()), (27, 45));
        let k3k2 = clique_with_pendants(3, 1, 2).unwrap();
        assert!(coloring_is_free(&f, &c, &p4, &k3k2).unwrap());
    }

    #[test]
    fn even_distinguisher_coloring_is_free() {
        // Spider with three legs of length two: diameter 4, center degree 3.
        let t = spider(3, 2);
        let inputs = DistinguisherInputs { gamma_prime: Some(cycle(5)), ..Default::default() };
        let (f, c) = diameter_distinguisher(&t, 3, &inputs).unwrap();
        let k3k2 = clique_with_pendants(3, 1, 2).unwrap();
        assert!(coloring_is_free(&f, &c, &t, &k3k2).unwrap());
        // a = 2 copies of C (7 vertices, root shared) per clique vertex, each
        // with a one-vertex Λ_0, plus a Λ_1 with k = 3·7 = 21 children.
        assert_eq!(f.n(), 3 + 3 * (2 * 6 + 21));
    }

    #[test]
    fn distinguisher_rejects_p5() {
        assert_eq!(
            diameter_distinguisher(&path(5), 3, &DistinguisherInputs::default()),
            Err(Error::pre("the tree is not in the class 𝒯′"))
        );
        let inputs = DistinguisherInputs { gamma_prime: Some(cycle(5)), j: Some(cycle(6)), ..Default::default() };
        assert!(diameter_distinguisher(&spider(3, 2), 3, &inputs).is_err());
    }
}
