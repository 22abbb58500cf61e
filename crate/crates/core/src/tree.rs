//! Tree profiles (diameter, center, the two tree classes) and greedy tree
//! embedding into graphs of large minimum degree.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::subgraph::Embedding;

/// Shape data for a tree.
///
/// `in_t` is the class of trees with diameter at least three that, when the
/// diameter is even, have all neighbors of the center of degree at most two
/// and, at diameter four, a center of degree at least three.
///
/// `in_t_prime` relaxes the neighbor condition: the center may have one
/// neighbor of degree three or more on a longest path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeProfile {
    pub diameter: usize,
    /// The central vertex; present iff the diameter is even.
    pub central_vertex: Option<usize>,
    pub in_t: bool,
    pub in_t_prime: bool,
    pub max_degree: usize,
}

/// Endpoints and length of a longest path, by double breadth-first search.
fn longest_path(t: &Graph) -> (usize, usize, usize) {
    let far = |s: usize| {
        let d = t.distances_from(s);
        let (v, &len) = d.iter().enumerate().max_by_key(|&(v, &len)| (len, core::cmp::Reverse(v))).unwrap();
        (v, len)
    };
    let (a, _) = far(0);
    let (b, len) = far(a);
    (a, b, len)
}

/// Vertex sequence of the shortest path from `a` to `b`.
fn path_between(t: &Graph, a: usize, b: usize) -> Vec<usize> {
    let d = t.distances_from(b);
    let mut path = vec![a];
    let mut x = a;
    while x != b {
        x = t.neighbors(x).find(|&y| d[y] + 1 == d[x]).expect("connected");
        path.push(x);
    }
    path
}

/// For an even-diameter tree with center `c` and radius `r`, the neighbors
/// of `c` that lie on some longest path (their branch reaches depth `r`).
pub fn center_neighbors_on_longest_paths(t: &Graph, c: usize, r: usize) -> Vec<usize> {
    let dist = t.distances_from(c);
    t.neighbors(c)
        .filter(|&w| {
            // Vertices in w's branch are those whose path to c passes through w.
            let from_w = t.distances_from(w);
            (0..t.n()).any(|x| dist[x] == r && from_w[x] + 1 == dist[x])
        })
        .collect()
}

pub fn tree_classify(t: &Graph) -> Result<TreeProfile> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let max_degree = t.max_degree();
    if t.n() == 1 {
        return Ok(TreeProfile { diameter: 0, central_vertex: Some(0), in_t: false, in_t_prime: false, max_degree });
    }
    let (a, b, diameter) = longest_path(t);
    if diameter % 2 == 1 {
        let member = diameter >= 3;
        return Ok(TreeProfile { diameter, central_vertex: None, in_t: member, in_t_prime: member, max_degree });
    }
    let c = path_between(t, a, b)[diameter / 2];
    if diameter < 3 {
        return Ok(TreeProfile { diameter, central_vertex: Some(c), in_t: false, in_t_prime: false, max_degree });
    }
    let diam4_ok = diameter != 4 || t.degree(c) >= 3;
    let in_t = diam4_ok && t.neighbors(c).all(|w| t.degree(w) <= 2);
    let heavy_on_longest = center_neighbors_on_longest_paths(t, c, diameter / 2)
        .into_iter()
        .filter(|&w| t.degree(w) >= 3)
        .count();
    let in_t_prime = diam4_ok && heavy_on_longest <= 1;
    Ok(TreeProfile { diameter, central_vertex: Some(c), in_t, in_t_prime, max_degree })
}

/// Vertices of the `k`-core: repeatedly delete vertices of degree below `k`.
pub fn k_core(g: &Graph, k: usize) -> BitSet {
    let mut alive = BitSet::full(g.n());
    let mut deg = g.degrees();
    let mut stack: Vec<usize> = (0..g.n()).filter(|&v| deg[v] < k).collect();
    for &v in &stack {
        alive.remove(v);
    }
    while let Some(v) = stack.pop() {
        for w in g.neighbors(v) {
            if alive.contains(w) {
                deg[w] -= 1;
                if deg[w] < k {
                    alive.remove(w);
                    stack.push(w);
                }
            }
        }
    }
    alive
}

/// Embeds a tree with `k` edges into the `k`-core of `host`, greedily in
/// breadth-first order. Returns `None` iff the core is empty.
pub fn greedy_min_degree_embed(host: &Graph, t: &Graph) -> Result<Option<Embedding>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let k = t.m();
    let core = k_core(host, k);
    let Some(root_image) = core.first() else {
        return Ok(None);
    };
    let mut map = vec![usize::MAX; t.n()];
    let mut used = BitSet::new(host.n());
    map[0] = root_image;
    used.insert(root_image);
    let mut queue = vec![0];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for y in t.neighbors(x) {
            if map[y] != usize::MAX {
                continue;
            }
            // At most k - 1 other tree vertices are placed, and the image has
            // at least k core neighbors, so a free one exists.
            let image = host
                .neighbors(map[x])
                .find(|&w| core.contains(w) && !used.contains(w))
                .ok_or_else(|| Error::invariant("greedy embedding ran out of core neighbors"))?;
            map[y] = image;
            used.insert(image);
            queue.push(y);
        }
    }
    Ok(Some(Embedding { map }))
}
