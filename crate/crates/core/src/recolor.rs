//! Coloring transformations behind two equivalence results.
//!
//! * [`star_clique_recolor`] turns a `(K_{1,s}, K_t·K_2)`-free coloring into a
//!   `(K_{1,s}, K_t)`-free one by switching colors along alternating walks.
//! * [`woven_recolor`] turns a `(G, K_t·aK_b)`-free coloring into a
//!   `(G, K_t)`-free one for woven `G` and large `t`.
//!
//! Both check their intermediate claims as they go and fail with
//! [`Error::Invariant`] instead of returning a bad coloring.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::arrowing::{coloring_is_free, ramsey_number, Limits};
use crate::error::{Error, Result};
use crate::families::clique_with_pendants;
use crate::graph::{edge, Color, Edge, EdgeColoring, Graph};
use crate::params::{clique_number, cliques_of_size};
use crate::subgraph::{contains_copy, copy_edge_sets, find_embedding, monochromatic_copy, EdgeIndex};
use crate::tree::tree_classify;

/// One alternating walk and the colors its edges had before the switch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkTrace {
    /// The walk in order from one end to the other.
    pub edges: Vec<Edge>,
    pub colors_before: Vec<Color>,
    /// The blue clique edge the walk grew from.
    pub start_edge: Edge,
}

/// Blue cliques of size `t`, which are whole blue components when the
/// coloring has no blue `K_t·K_2`.
fn blue_cliques(c: &EdgeColoring, t: usize) -> Vec<Vec<usize>> {
    cliques_of_size(&c.blue_graph(), t)
}

fn red_degree_ok(c: &EdgeColoring, s: usize) -> bool {
    (0..c.n()).all(|v| c.degree_in(v, Color::Red) < s)
}

/// One switch along an alternating walk. The result has no red `K_{1,s}`,
/// no blue `K_t·K_2`, and fewer blue `K_t` than `c`.
pub fn alternating_walk_step(f: &Graph, c: &EdgeColoring, s: usize, t: usize) -> Result<(EdgeColoring, WalkTrace)> {
    if s == 0 || t < 2 {
        return Err(Error::param("need s >= 1 and t >= 2"));
    }
    c.check_host(f)?;
    let pendant = clique_pendant(t)?;
    if !red_degree_ok(c, s) || monochromatic_copy(c, &pendant, Color::Blue).is_some() {
        return Err(Error::pre("the coloring is not (K_{1,s}, K_t·K_2)-free"));
    }
    let cliques = blue_cliques(c, t);
    let Some(first) = cliques.first() else {
        return Err(Error::pre("the coloring has no blue K_t"));
    };
    let mut clique_of = vec![usize::MAX; f.n()];
    for (i, k) in cliques.iter().enumerate() {
        for &v in k {
            if clique_of[v] != usize::MAX {
                return Err(Error::invariant("blue K_t copies overlap"));
            }
            clique_of[v] = i;
        }
    }
    let start = edge(first[0], first[1]);
    let mut used: BTreeSet<Edge> = BTreeSet::new();
    used.insert(start);
    let mut visited = vec![false; cliques.len()];
    visited[clique_of[start.0]] = true;

    // Each direction alternates: red edge out, then a blue edge inside the
    // next untouched blue clique.
    let mut halves: [Vec<Edge>; 2] = [Vec::new(), Vec::new()];
    for (half, from) in halves.iter_mut().zip([start.1, start.0]) {
        let mut x = from;
        loop {
            let Some(y) = f
                .neighbors(x)
                .find(|&y| c.color(x, y) == Some(Color::Red) && !used.contains(&edge(x, y)))
            else {
                break;
            };
            used.insert(edge(x, y));
            half.push(edge(x, y));
            let k = clique_of[y];
            if k == usize::MAX || visited[k] {
                break;
            }
            visited[k] = true;
            let z = *cliques[k].iter().find(|&&z| z != y).expect("t >= 2");
            used.insert(edge(y, z));
            half.push(edge(y, z));
            x = z;
        }
    }
    let [forward, backward] = halves;
    let mut walk: Vec<Edge> = backward.into_iter().rev().collect();
    walk.push(start);
    walk.extend(forward);
    let colors_before: Vec<Color> = walk.iter().map(|&(u, v)| c.color(u, v).expect("walk edge")).collect();

    let mut out = c.clone();
    for &(u, v) in &walk {
        out.flip(u, v)?;
    }
    if !red_degree_ok(&out, s) {
        return Err(Error::invariant("switching created a red K_{1,s}"));
    }
    let after = blue_cliques(&out, t).len();
    if after >= cliques.len() {
        return Err(Error::invariant(format!("blue K_t count went from {} to {after}", cliques.len())));
    }
    if monochromatic_copy(&out, &pendant, Color::Blue).is_some() {
        return Err(Error::invariant("switching created a blue K_t·K_2"));
    }
    Ok((out, WalkTrace { edges: walk, colors_before, start_edge: start }))
}

fn clique_pendant(t: usize) -> Result<Graph> {
    if t >= 3 {
        clique_with_pendants(t, 1, 2)
    } else {
        Ok(Graph::from_edges(3, &[(0, 1), (1, 2)])?)
    }
}

/// Repeats [`alternating_walk_step`] until no blue `K_t` is left, returning
/// the final coloring and every walk taken.
pub fn star_clique_recolor_traced(
    f: &Graph,
    c: &EdgeColoring,
    s: usize,
    t: usize,
) -> Result<(EdgeColoring, Vec<WalkTrace>)> {
    let mut cur = c.clone();
    let mut walks = Vec::new();
    let initial = blue_cliques(c, t).len();
    while !blue_cliques(&cur, t).is_empty() {
        if walks.len() >= initial {
            return Err(Error::invariant("more steps than initial blue K_t copies"));
        }
        let (next, trace) = alternating_walk_step(f, &cur, s, t)?;
        cur = next;
        walks.push(trace);
    }
    if walks.is_empty() {
        // Still validate the input.
        c.check_host(f)?;
        if !red_degree_ok(c, s) || monochromatic_copy(c, &clique_pendant(t)?, Color::Blue).is_some() {
            return Err(Error::pre("the coloring is not (K_{1,s}, K_t·K_2)-free"));
        }
    }
    Ok((cur, walks))
}

/// A `(K_{1,s}, K_t)`-free coloring obtained from a `(K_{1,s}, K_t·K_2)`-free
/// one.
pub fn star_clique_recolor(f: &Graph, c: &EdgeColoring, s: usize, t: usize) -> Result<EdgeColoring> {
    star_clique_recolor_traced(f, c, s, t).map(|(c, _)| c)
}

/// A set `y` of edges other than `uv`, at most `k` at `u` and at most `k` at
/// `v`, meeting every copy of the pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WovenCertificate {
    pub uv: Edge,
    pub y: Vec<Edge>,
    pub k: usize,
}

impl WovenCertificate {
    pub fn is_valid(&self, f: &Graph, pattern: &Graph) -> bool {
        let (u, v) = self.uv;
        let at = |x: usize| self.y.iter().filter(|&&(a, b)| a == x || b == x).count();
        self.y.iter().all(|&(a, b)| f.has_edge(a, b) && edge(a, b) != self.uv && (a == u || a == v || b == u || b == v))
            && at(u) <= self.k
            && at(v) <= self.k
            && contains_copy(&f.without_edges(&self.y), pattern).is_none()
    }
}

/// The shapes with a known wovenness certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WovenShape {
    /// `K_{1,s}`, `s ≥ 2`, which is 1-woven.
    Star { s: usize },
    /// An `s`-suitable caterpillar, which is `2(s+1)²`-woven.
    Caterpillar { s: usize },
}

impl WovenShape {
    pub fn of(t: &Graph) -> Option<WovenShape> {
        if !t.is_tree() || t.n() < 3 {
            return None;
        }
        if t.max_degree() == t.n() - 1 {
            return Some(WovenShape::Star { s: t.n() - 1 });
        }
        let profile = tree_classify(t).ok()?;
        let b = profile.central_vertex?;
        if profile.diameter != 4 {
            return None;
        }
        let inner: Vec<usize> = t.neighbors(b).filter(|&w| t.degree(w) > 1).collect();
        let [a, c] = inner[..] else { return None };
        let s = t.degree(a) - 1;
        let leaves_only = |x: usize| t.neighbors(x).all(|w| w == b || t.degree(w) == 1);
        (t.degree(c) == s + 1 && leaves_only(a) && leaves_only(c) && t.degree(b) - 2 < s)
            .then_some(WovenShape::Caterpillar { s })
    }

    pub fn k(self) -> usize {
        match self {
            WovenShape::Star { .. } => 1,
            WovenShape::Caterpillar { s } => 2 * (s + 1) * (s + 1),
        }
    }
}

/// Builds the wovenness certificate for `uv` in `f`, where every copy of
/// `pattern` in `f` must use `uv`.
pub fn yuv_certificate(f: &Graph, uv: Edge, pattern: &Graph) -> Result<WovenCertificate> {
    let Some(shape) = WovenShape::of(pattern) else {
        return Err(Error::pre("pattern is neither a star with two or more edges nor a suitable caterpillar"));
    };
    let (u, v) = edge(uv.0, uv.1);
    if !f.has_edge(u, v) {
        return Err(Error::NotAnEdge((u, v)));
    }
    let rest = f.without_edges(&[(u, v)]);
    if contains_copy(&rest, pattern).is_some() {
        return Err(Error::pre("some copy of the pattern avoids uv"));
    }
    let at = |x: usize| -> Vec<Edge> { rest.neighbors(x).map(|w| edge(x, w)).collect() };
    let k = shape.k();
    let y: Vec<Edge> = match shape {
        WovenShape::Star { .. } => at(u).into_iter().take(1).chain(at(v).into_iter().take(1)).collect(),
        WovenShape::Caterpillar { s } => {
            let leaf = |x: usize, y: usize| {
                (0..pattern.n()).any(|l| {
                    pattern.degree(l) == 1 && {
                        let p = pattern.neighbors(l).next().expect("leaf");
                        find_embedding(f, pattern, &[(l, x), (p, y)]).is_some()
                    }
                })
            };
            let (x, z) = if leaf(u, v) {
                (u, v)
            } else if leaf(v, u) {
                (v, u)
            } else {
                (u, u)
            };
            if x != z {
                // `x` is a leaf of some copy, so its neighbor `z` has few edges.
                let yz = at(z);
                if contains_copy(&f.without_edges(&yz), pattern).is_none() {
                    yz
                } else {
                    let mut all = at(z);
                    all.extend(at(x));
                    all
                }
            } else {
                let big = |w: usize| rest.degree(w) > s;
                rest.neighbors(u)
                    .filter(|&w| big(w))
                    .map(|w| edge(u, w))
                    .chain(rest.neighbors(v).filter(|&w| big(w)).map(|w| edge(v, w)))
                    .collect()
            }
        }
    };
    let mut y = y;
    y.sort_unstable();
    y.dedup();
    let cert = WovenCertificate { uv: (u, v), y, k };
    if !cert.is_valid(f, pattern) {
        return Err(Error::invariant(format!("certificate for {:?} fails its bounds or misses a copy", (u, v))));
    }
    Ok(cert)
}

/// Audit record of [`woven_recolor`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecolorTrace {
    /// The family of blue `K_t` copies, pairwise sharing fewer than `a`
    /// vertices.
    pub family: Vec<Vec<usize>>,
    /// `U_K` for each member of `family`.
    pub u_sets: Vec<Vec<usize>>,
    /// The blue edges switched to red.
    pub matching: Vec<Edge>,
    /// The red edges switched back to blue, one set per matching edge.
    pub y_sets: Vec<Vec<Edge>>,
    pub phi1: EdgeColoring,
    pub phi2: EdgeColoring,
    pub phi3: EdgeColoring,
}

/// Turns a `(G, K_t·aK_b)`-free coloring into a `(G, K_t)`-free one, for
/// `G` a star or a suitable caterpillar and
/// `t ≥ 4k + 2(r + (a-1)(b-1)) + (a-1)` where `r = r(G, K_{b-1})`.
pub fn woven_recolor(
    f: &Graph,
    phi1: &EdgeColoring,
    g: &Graph,
    a: usize,
    b: usize,
    t: usize,
) -> Result<(EdgeColoring, RecolorTrace)> {
    let Some(shape) = WovenShape::of(g) else {
        return Err(Error::pre("G is neither a star with two or more edges nor a suitable caterpillar"));
    };
    let k = shape.k();
    let pendant = clique_with_pendants(t, a, b)?;
    phi1.check_host(f)?;
    let r = ramsey_number(g, &Graph::complete(b - 1), g.n() * b + 2, Limits::default())?;
    let threshold = r + (a - 1) * (b - 1);
    let bound = 4 * k + 2 * threshold + (a - 1);
    if t < bound {
        return Err(Error::pre(format!("t = {t} is below the required {bound}")));
    }
    if !coloring_is_free(f, phi1, g, &pendant)? {
        return Err(Error::pre("phi1 is not (G, K_t·aK_b)-free"));
    }

    let blue = phi1.blue_graph();
    let u_set = |clique: &[usize]| -> Vec<usize> {
        clique
            .iter()
            .copied()
            .filter(|&x| {
                let outside: Vec<usize> = blue.neighbors(x).filter(|w| !clique.contains(w)).collect();
                clique_number(&f.induced(&outside)) >= threshold
            })
            .collect()
    };
    let mut family: Vec<Vec<usize>> = Vec::new();
    for clique in cliques_of_size(&blue, t) {
        if family.iter().all(|other| clique.iter().filter(|v| other.contains(v)).count() < a) {
            family.push(clique);
        }
    }
    let u_sets: Vec<Vec<usize>> = family.iter().map(|c| u_set(c)).collect();
    for (i, (ki, ui)) in family.iter().zip(&u_sets).enumerate() {
        if ui.len() > a - 1 {
            return Err(Error::invariant(format!("|U_K| = {} exceeds a - 1", ui.len())));
        }
        for (kj, uj) in family.iter().zip(&u_sets).skip(i + 1) {
            if ki.iter().any(|x| kj.contains(x) && !(ui.contains(x) && uj.contains(x))) {
                return Err(Error::invariant("two family cliques meet outside their U_K sets"));
            }
        }
    }

    let mut matching = Vec::new();
    let mut phi2 = phi1.clone();
    for (clique, us) in family.iter().zip(&u_sets) {
        let rest: Vec<usize> = clique.iter().copied().filter(|x| !us.contains(x)).collect();
        for pair in rest.chunks_exact(2) {
            let e = edge(pair[0], pair[1]);
            phi2.set(e.0, e.1, Color::Red)?;
            matching.push(e);
        }
    }

    let red = phi2.red_graph();
    let index = EdgeIndex::new(&red);
    let matching_ids: Vec<u32> = matching.iter().map(|&(x, y)| index.get(x, y).expect("red") as u32).collect();
    let mut chosen: BTreeSet<u32> = BTreeSet::new();
    let mut y_sets = Vec::new();
    for (i, &e) in matching.iter().enumerate() {
        let later = &matching_ids[i + 1..];
        let copies: Vec<Vec<u32>> = copy_edge_sets(&red, g, Some(e), &index)
            .into_iter()
            .filter(|set| set.iter().all(|x| !chosen.contains(x) && !later.contains(x)))
            .collect();
        if copies.is_empty() {
            y_sets.push(Vec::new());
            continue;
        }
        let mut residual = Graph::empty(f.n());
        for &id in copies.iter().flatten() {
            let (x, y) = index.edges()[id as usize];
            residual.add_edge(x, y);
        }
        let cert = yuv_certificate(&residual, e, g)?;
        if cert.y.iter().any(|y| matching.contains(y)) {
            return Err(Error::invariant("a hitting set contains a matching edge"));
        }
        chosen.extend(cert.y.iter().map(|&(x, y)| index.get(x, y).expect("red") as u32));
        y_sets.push(cert.y);
    }

    let mut phi3 = phi2.clone();
    for &(x, y) in y_sets.iter().flatten() {
        phi3.set(x, y, Color::Blue)?;
    }
    if !coloring_is_free(f, &phi3, g, &Graph::complete(t))? {
        return Err(Error::invariant("the final coloring has a red G or a blue K_t"));
    }
    let trace = RecolorTrace { family, u_sets, matching, y_sets, phi1: phi1.clone(), phi2, phi3: phi3.clone() };
    Ok((phi3, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{path, star, suitable_caterpillar};

    fn colored(n: usize, red: &[Edge], blue: &[Edge]) -> (Graph, EdgeColoring) {
        let pairs: Vec<(Edge, Color)> = red
            .iter()
            .map(|&e| (edge(e.0, e.1), Color::Red))
            .chain(blue.iter().map(|&e| (edge(e.0, e.1), Color::Blue)))
            .collect();
        let all: Vec<Edge> = pairs.iter().map(|p| p.0).collect();
        let f = Graph::from_edges(n, &all).unwrap();
        let c = EdgeColoring::from_pairs(&f, &pairs).unwrap();
        (f, c)
    }

    #[test]
    fn triangle_with_pendant() {
        let (f, c) = colored(4, &[(2, 3)], &[(0, 1), (1, 2), (0, 2)]);
        let (out, trace) = alternating_walk_step(&f, &c, 2, 3).unwrap();
        assert_eq!(trace.edges, [(0, 1)]);
        assert_eq!(trace.colors_before, [Color::Blue]);
        assert_eq!(out.color(0, 1), Some(Color::Red));
        assert_eq!(out.color(2, 3), Some(Color::Red));
        assert_eq!(out.count(Color::Blue), 2);
        assert_eq!(star_clique_recolor(&f, &c, 2, 3).unwrap(), out);
        assert!(coloring_is_free(&f, &out, &star(2), &Graph::complete(3)).unwrap());
    }

    #[test]
    fn walk_crosses_between_cliques() {
        // Blue triangles 012 and 456 joined by the red edge 1-4.
        let tri = [(0, 1), (1, 2), (0, 2), (4, 5), (5, 6), (4, 6)];
        let (f, c) = colored(7, &[(1, 4)], &tri);
        let (once, trace) = alternating_walk_step(&f, &c, 2, 3).unwrap();
        assert_eq!(trace.edges, [(0, 1), (1, 4), (4, 5)]);
        assert_eq!(trace.colors_before, [Color::Blue, Color::Red, Color::Blue]);
        assert!(blue_cliques(&once, 3).is_empty());
    }

    #[test]
    fn red_path_between_cliques_takes_two_steps() {
        // Red path 1-3-4; its middle vertex has two red edges, so s = 3.
        let tri = [(0, 1), (1, 2), (0, 2), (4, 5), (5, 6), (4, 6)];
        let (f, c) = colored(7, &[(1, 3), (3, 4)], &tri);
        let (once, trace) = alternating_walk_step(&f, &c, 3, 3).unwrap();
        assert_eq!(trace.edges, [(0, 1), (1, 3)]);
        assert_eq!(blue_cliques(&once, 3).len(), 1);
        let (out, walks) = star_clique_recolor_traced(&f, &c, 3, 3).unwrap();
        assert_eq!(walks.len(), 2);
        assert_eq!(walks[1].edges, [(3, 4), (4, 5)]);
        assert!(coloring_is_free(&f, &out, &star(3), &Graph::complete(3)).unwrap());
    }

    #[test]
    fn walk_preconditions() {
        let (f, c) = colored(3, &[(0, 1)], &[(1, 2), (0, 2)]);
        assert!(matches!(alternating_walk_step(&f, &c, 2, 3), Err(Error::Precondition(_))));
        assert_eq!(star_clique_recolor(&f, &c, 2, 3).unwrap(), c);
        let (f, c) = colored(4, &[], &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        assert!(matches!(star_clique_recolor(&f, &c, 2, 3), Err(Error::Precondition(_))));
    }

    #[test]
    fn star_certificates() {
        let p = path(4);
        let cert = yuv_certificate(&p, (1, 2), &star(2)).unwrap();
        assert_eq!(cert.y, [(0, 1), (2, 3)]);
        assert_eq!(cert.k, 1);
        let st = star(3);
        let cert = yuv_certificate(&st, (0, 1), &st).unwrap();
        assert_eq!(cert.y.len(), 1);
        assert!(cert.is_valid(&st, &st));
        let two = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(matches!(yuv_certificate(&two, (0, 1), &star(2)), Err(Error::Precondition(_))));
    }

    #[test]
    fn caterpillar_shapes() {
        assert_eq!(WovenShape::of(&path(5)), Some(WovenShape::Caterpillar { s: 1 }));
        let c = suitable_caterpillar(2, 2, 1, 2).unwrap();
        assert_eq!(WovenShape::of(&c), Some(WovenShape::Caterpillar { s: 2 }));
        assert_eq!(WovenShape::of(&path(4)), None);
        assert_eq!(WovenShape::of(&star(4)), Some(WovenShape::Star { s: 4 }));
        assert_eq!(WovenShape::Caterpillar { s: 2 }.k(), 18);
        // P_5 itself with uv its middle-left edge.
        let p5 = path(5);
        let cert = yuv_certificate(&p5, (1, 2), &p5).unwrap();
        assert!(cert.is_valid(&p5, &p5));
    }

    #[test]
    fn woven_pipeline_on_blue_clique() {
        // Blue K_6, two red edges hanging off clique vertices, one isolated red edge.
        let mut blue = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                blue.push((u, v));
            }
        }
        let (f, c) = colored(10, &[(0, 6), (3, 7), (8, 9)], &blue);
        let (out, trace) = woven_recolor(&f, &c, &star(2), 1, 2, 6).unwrap();
        assert_eq!(trace.family, [vec![0, 1, 2, 3, 4, 5]]);
        assert_eq!(trace.u_sets, [Vec::<usize>::new()]);
        assert_eq!(trace.matching, [(0, 1), (2, 3), (4, 5)]);
        assert!(trace.y_sets.iter().all(|y| y.len() <= 2));
        assert!(coloring_is_free(&f, &out, &star(2), &Graph::complete(6)).unwrap());
        assert!(woven_recolor(&f, &c, &star(2), 1, 2, 5).is_err());

        // No blue K_t: unchanged.
        let (f, c) = colored(3, &[(0, 1)], &[(1, 2)]);
        let (out, trace) = woven_recolor(&f, &c, &star(2), 1, 2, 6).unwrap();
        assert_eq!(out, c);
        assert!(trace.family.is_empty());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn walks_reach_a_free_coloring(
                (n, bits, red_bits) in (3usize..9).prop_flat_map(|n| (
                    Just(n),
                    proptest::collection::vec(proptest::bool::weighted(0.5), n * (n - 1) / 2),
                    proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
                )),
                s in 2usize..4,
            ) {
                let mut f = Graph::empty(n);
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            f.add_edge(u, v);
                        }
                        k += 1;
                    }
                }
                // Red edges picked greedily so red degrees stay below s.
                let mut deg = vec![0usize; n];
                let mut pairs = Vec::new();
                for (i, (u, v)) in f.edges().into_iter().enumerate() {
                    let red = red_bits[i] && deg[u] + 1 < s && deg[v] + 1 < s;
                    if red {
                        deg[u] += 1;
                        deg[v] += 1;
                    }
                    pairs.push(((u, v), if red { Color::Red } else { Color::Blue }));
                }
                let c = EdgeColoring::from_pairs(&f, &pairs).unwrap();
                let pendant = clique_with_pendants(3, 1, 2).unwrap();
                prop_assume!(monochromatic_copy(&c, &pendant, Color::Blue).is_none());
                let before = blue_cliques(&c, 3).len();
                let (out, walks) = star_clique_recolor_traced(&f, &c, s, 3).unwrap();
                prop_assert!(walks.len() <= before);
                prop_assert!(coloring_is_free(&f, &out, &star(s), &Graph::complete(3)).unwrap());
                for w in &walks {
                    let mut sorted = w.edges.clone();
                    sorted.sort_unstable();
                    sorted.dedup();
                    prop_assert_eq!(sorted.len(), w.edges.len());
                }
            }
        }
    }
}
