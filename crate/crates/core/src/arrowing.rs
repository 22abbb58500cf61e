//! Deciding `F → (G, H)`.
//!
//! An edge coloring of `F` is free when it has no red `G` and no blue `H`.
//! Every copy of `G` in `F` becomes a clause "not all of these edges red",
//! every copy of `H` a clause "not all of these edges blue", and the search
//! looks for an assignment satisfying every clause: DPLL with unit
//! propagation, branching on the edge that sits in the most live clauses
//! (shorter clauses weigh more). `F` arrows the pair iff the search fails.
//!
//! When `G` and `H` are isomorphic, swapping colors maps free colorings to
//! free colorings, so the first branching edge is only tried red.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canon::canonical_form;
use crate::enumerate::graphs_up_to;
use crate::error::{Error, Result};
use crate::graph::{Color, Edge, EdgeColoring, Graph};
use crate::params::{chromatic_number, clique_number};
use crate::subgraph::{copy_edge_sets, isomorphic, monochromatic_copy, EdgeIndex};

/// How a verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Every coloring was enumerated.
    Exhaustive,
    /// Complete search with pruning; as trustworthy as `Exhaustive`.
    Pruned,
    /// Random colorings; can refute arrowing but never establish it.
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowingVerdict {
    pub arrows: bool,
    /// A free coloring, present iff `arrows` is false.
    pub witness: Option<EdgeColoring>,
    pub nodes_explored: u64,
    pub method: Method,
}

/// Search limits. `stop` is polled periodically; returning true aborts the
/// search with [`Error::Cancelled`].
#[derive(Clone, Copy, Default)]
pub struct Limits<'a> {
    pub budget: Option<u64>,
    pub stop: Option<&'a dyn Fn() -> bool>,
}

impl Limits<'_> {
    pub fn budget(budget: u64) -> Self {
        Limits { budget: Some(budget), stop: None }
    }
}

/// True iff `c` has no red copy of `g` and no blue copy of `h`.
pub fn coloring_is_free(f: &Graph, c: &EdgeColoring, g: &Graph, h: &Graph) -> Result<bool> {
    c.check_host(f)?;
    Ok(monochromatic_copy(c, g, Color::Red).is_none() && monochromatic_copy(c, h, Color::Blue).is_none())
}

struct Clause {
    edges: Vec<u32>,
    /// The clause is violated when every edge has this color.
    color: Color,
}

/// A compiled arrowing question `F → (G, H)`.
pub struct Instance {
    f: Graph,
    clauses: Vec<Clause>,
    occ: Vec<Vec<u32>>,
    static_order: Vec<usize>,
    symmetric: bool,
    /// Some pattern has no edges and fits in `F`, so every coloring contains it.
    forced: bool,
}

impl Instance {
    pub fn new(f: &Graph, g: &Graph, h: &Graph) -> Self {
        let index = EdgeIndex::new(f);
        let mut clauses = Vec::new();
        for (pattern, color) in [(g, Color::Red), (h, Color::Blue)] {
            for edges in copy_edge_sets(f, pattern, None, &index) {
                clauses.push(Clause { edges, color });
            }
        }
        let forced = clauses.iter().any(|c| c.edges.is_empty());
        let mut occ = vec![Vec::new(); f.m()];
        for (k, c) in clauses.iter().enumerate() {
            for &e in &c.edges {
                occ[e as usize].push(k as u32);
            }
        }
        let mut static_order: Vec<usize> = (0..f.m()).collect();
        static_order.sort_by_key(|&e| (core::cmp::Reverse(occ[e].len()), e));
        Instance { f: f.clone(), clauses, occ, static_order, symmetric: isomorphic(g, h), forced }
    }

    pub fn host(&self) -> &Graph {
        &self.f
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    /// Edge indices (in [`Graph::edges`] order) by decreasing number of
    /// pattern copies through them.
    pub fn branch_order(&self) -> &[usize] {
        &self.static_order
    }

    /// Disjoint prefixes covering the search space, for splitting work: all
    /// colorings of the first `depth` edges of [`Instance::branch_order`]
    /// (with the first edge only red when the two patterns are isomorphic).
    pub fn split(&self, depth: usize) -> Vec<Vec<(usize, Color)>> {
        let edges = &self.static_order[..depth.min(self.static_order.len())];
        let mut out = vec![Vec::new()];
        for (i, &e) in edges.iter().enumerate() {
            let colors: &[Color] =
                if i == 0 && self.symmetric { &[Color::Red] } else { &[Color::Red, Color::Blue] };
            out = out
                .into_iter()
                .flat_map(|p: Vec<(usize, Color)>| {
                    colors.iter().map(move |&c| {
                        let mut q = p.clone();
                        q.push((e, c));
                        q
                    })
                })
                .collect();
        }
        out
    }

    /// Searches for a free coloring extending `prefix` (edge index, color).
    /// Returns the coloring, if any, and the number of branching nodes.
    ///
    /// Color-swap symmetry is only exploited for an empty prefix.
    pub fn solve(&self, prefix: &[(usize, Color)], limits: Limits<'_>) -> Result<(Option<EdgeColoring>, u64)> {
        if self.forced {
            return Ok((None, 0));
        }
        let mut s = Solver::new(self, limits, prefix.is_empty() && self.symmetric);
        for &(e, c) in prefix {
            if e >= self.f.m() {
                return Err(Error::param("prefix edge index out of range"));
            }
            if !s.assign(e, c) {
                return Ok((None, s.nodes));
            }
        }
        if s.search()? {
            let colors = s.assign.iter().map(|a| a.unwrap_or(Color::Red)).collect();
            Ok((Some(EdgeColoring::from_colors(&self.f, colors)?), s.nodes))
        } else {
            Ok((None, s.nodes))
        }
    }
}

struct Solver<'a> {
    inst: &'a Instance,
    assign: Vec<Option<Color>>,
    /// Per clause: edges carrying the clause's color.
    hit: Vec<u32>,
    /// Per clause: edges carrying the other color (satisfied when > 0).
    sat: Vec<u32>,
    trail: Vec<usize>,
    queue: Vec<(usize, Color)>,
    nodes: u64,
    limits: Limits<'a>,
    break_symmetry: bool,
}

impl<'a> Solver<'a> {
    fn new(inst: &'a Instance, limits: Limits<'a>, break_symmetry: bool) -> Self {
        Solver {
            inst,
            assign: vec![None; inst.f.m()],
            hit: vec![0; inst.clauses.len()],
            sat: vec![0; inst.clauses.len()],
            trail: Vec::new(),
            queue: Vec::new(),
            nodes: 0,
            limits,
            break_symmetry,
        }
    }

    /// Assigns and propagates; false on conflict (state must then be undone).
    fn assign(&mut self, e: usize, c: Color) -> bool {
        self.queue.clear();
        self.queue.push((e, c));
        while let Some((x, cx)) = self.queue.pop() {
            match self.assign[x] {
                Some(prev) if prev == cx => continue,
                Some(_) => return false,
                None => {}
            }
            self.assign[x] = Some(cx);
            self.trail.push(x);
            let mut conflict = false;
            for &k in &self.inst.occ[x] {
                let k = k as usize;
                let clause = &self.inst.clauses[k];
                if clause.color == cx {
                    self.hit[k] += 1;
                    if self.sat[k] == 0 {
                        let len = clause.edges.len() as u32;
                        if self.hit[k] == len {
                            conflict = true;
                        } else if self.hit[k] + 1 == len {
                            let y = clause.edges.iter().map(|&y| y as usize).find(|&y| self.assign[y].is_none());
                            if let Some(y) = y {
                                self.queue.push((y, clause.color.flipped()));
                            }
                        }
                    }
                } else {
                    self.sat[k] += 1;
                }
            }
            if conflict {
                return false;
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().expect("trail above mark");
            let cx = self.assign[x].take().expect("trailed edge is assigned");
            for &k in &self.inst.occ[x] {
                let k = k as usize;
                if self.inst.clauses[k].color == cx {
                    self.hit[k] -= 1;
                } else {
                    self.sat[k] -= 1;
                }
            }
        }
    }

    /// The unassigned edge in the most (short) live clauses, with the color
    /// to try first; `None` when no live clause remains.
    fn pick(&self) -> Option<(usize, Color)> {
        let mut best: Option<(u64, usize, Color)> = None;
        for e in self.inst.static_order.iter().copied() {
            if self.assign[e].is_some() {
                continue;
            }
            let (mut red, mut blue) = (0u64, 0u64);
            for &k in &self.inst.occ[e] {
                let k = k as usize;
                if self.sat[k] > 0 {
                    continue;
                }
                let clause = &self.inst.clauses[k];
                let open = clause.edges.len() as u32 - self.hit[k];
                let w = 1u64 << (20 - open.min(20));
                match clause.color {
                    Color::Red => red += w,
                    Color::Blue => blue += w,
                }
            }
            let score = red + blue;
            if score > 0 && best.is_none_or(|(b, _, _)| score > b) {
                // Try first the color that pushes fewer live clauses toward violation.
                let first = if red <= blue { Color::Red } else { Color::Blue };
                best = Some((score, e, first));
            }
        }
        best.map(|(_, e, c)| (e, c))
    }

    fn search(&mut self) -> Result<bool> {
        let Some((e, first)) = self.pick() else {
            return Ok(true);
        };
        self.nodes += 1;
        if let Some(b) = self.limits.budget {
            if self.nodes > b {
                return Err(Error::BudgetExhausted { budget: b });
            }
        }
        if self.nodes.is_multiple_of(1024) && self.limits.stop.is_some_and(|stop| stop()) {
            return Err(Error::Cancelled);
        }
        let only_red = core::mem::take(&mut self.break_symmetry);
        let order = if only_red { [Color::Red, Color::Red] } else { [first, first.flipped()] };
        for (i, &c) in order.iter().enumerate() {
            if only_red && i == 1 {
                break;
            }
            let mark = self.trail.len();
            if self.assign(e, c) && self.search()? {
                return Ok(true);
            }
            self.undo(mark);
        }
        Ok(false)
    }
}

/// Decides `f → (g, h)` by pruned search.
pub fn arrows(f: &Graph, g: &Graph, h: &Graph, limits: Limits<'_>) -> Result<ArrowingVerdict> {
    let inst = Instance::new(f, g, h);
    let (witness, nodes) = inst.solve(&[], limits)?;
    Ok(ArrowingVerdict { arrows: witness.is_none(), witness, nodes_explored: nodes, method: Method::Pruned })
}

/// Largest edge count [`arrows_exhaustive`] accepts.
pub const EXHAUSTIVE_EDGE_LIMIT: usize = 30;

/// Decides `f → (g, h)` by enumerating all `2^|E(f)|` colorings. The
/// witness, if any, is the free coloring with the smallest red mask.
pub fn arrows_exhaustive(f: &Graph, g: &Graph, h: &Graph) -> Result<ArrowingVerdict> {
    let m = f.m();
    if m > EXHAUSTIVE_EDGE_LIMIT {
        return Err(Error::param("too many edges for exhaustive enumeration"));
    }
    let index = EdgeIndex::new(f);
    let to_mask = |sets: Vec<Vec<u32>>| -> Vec<u64> {
        sets.iter().map(|s| s.iter().fold(0u64, |acc, &e| acc | 1 << e)).collect()
    };
    let red_copies = to_mask(copy_edge_sets(f, g, None, &index));
    let blue_copies = to_mask(copy_edge_sets(f, h, None, &index));
    let all = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let mut nodes = 0;
    for red in 0..=all {
        nodes += 1;
        let blue = all & !red;
        if red_copies.iter().all(|&s| s & !red != 0) && blue_copies.iter().all(|&s| s & !blue != 0) {
            let colors = (0..m).map(|e| if red >> e & 1 == 1 { Color::Red } else { Color::Blue }).collect();
            let witness = EdgeColoring::from_colors(f, colors)?;
            return Ok(ArrowingVerdict { arrows: false, witness: Some(witness), nodes_explored: nodes, method: Method::Exhaustive });
        }
    }
    Ok(ArrowingVerdict { arrows: true, witness: None, nodes_explored: nodes, method: Method::Exhaustive })
}

/// Outcome of random sampling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleReport {
    pub samples: u64,
    /// The first free coloring drawn, if any.
    pub witness: Option<EdgeColoring>,
}

impl SampleReport {
    /// Sampling can only ever refute arrowing.
    pub fn verdict(&self) -> Option<ArrowingVerdict> {
        self.witness.as_ref().map(|w| ArrowingVerdict {
            arrows: false,
            witness: Some(w.clone()),
            nodes_explored: self.samples,
            method: Method::Sampled,
        })
    }
}

/// Draws up to `samples` uniformly random colorings of `f` (deterministic in
/// `seed`) and stops at the first free one.
pub fn sample_colorings(f: &Graph, g: &Graph, h: &Graph, samples: u64, seed: u64) -> Result<SampleReport> {
    let m = f.m();
    let words = m.div_ceil(64).max(1);
    let index = EdgeIndex::new(f);
    let to_masks = |sets: Vec<Vec<u32>>| -> Vec<Vec<u64>> {
        sets.iter()
            .map(|s| {
                let mut w = vec![0u64; words];
                for &e in s {
                    w[e as usize / 64] |= 1 << (e % 64);
                }
                w
            })
            .collect()
    };
    let red_copies = to_masks(copy_edge_sets(f, g, None, &index));
    let blue_copies = to_masks(copy_edge_sets(f, h, None, &index));
    let mut top = vec![u64::MAX; words];
    if !m.is_multiple_of(64) {
        top[words - 1] = (1u64 << (m % 64)) - 1;
    } else if m == 0 {
        top[0] = 0;
    }
    let within = |set: &[u64], color: &[u64]| set.iter().zip(color).all(|(&s, &c)| s & !c == 0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut red = vec![0u64; words];
    let mut blue = vec![0u64; words];
    for i in 0..samples {
        for w in 0..words {
            red[w] = rng.gen::<u64>() & top[w];
            blue[w] = !red[w] & top[w];
        }
        if red_copies.iter().any(|s| within(s, &red)) || blue_copies.iter().any(|s| within(s, &blue)) {
            continue;
        }
        let colors = (0..m).map(|e| if red[e / 64] >> (e % 64) & 1 == 1 { Color::Red } else { Color::Blue }).collect();
        return Ok(SampleReport { samples: i + 1, witness: Some(EdgeColoring::from_colors(f, colors)?) });
    }
    Ok(SampleReport { samples, witness: None })
}

/// The least `n ≤ cap` with `K_n → (g, h)`.
pub fn ramsey_number(g: &Graph, h: &Graph, cap: usize, limits: Limits<'_>) -> Result<usize> {
    if cap == 0 {
        return Err(Error::param("cap must be at least 1"));
    }
    for n in 1..=cap {
        if arrows(&Graph::complete(n), g, h, limits)?.arrows {
            return Ok(n);
        }
    }
    Err(Error::CapExceeded { cap })
}

/// True iff `f` arrows `(g, h)` and neither deleting an edge nor deleting a
/// vertex preserves that.
pub fn minimal_ramsey_check(f: &Graph, g: &Graph, h: &Graph, limits: Limits<'_>) -> Result<bool> {
    if !arrows(f, g, h, limits)?.arrows {
        return Ok(false);
    }
    for (u, v) in f.edges() {
        if arrows(&f.without_edges(&[(u, v)]), g, h, limits)?.arrows {
            return Ok(false);
        }
    }
    for v in 0..f.n() {
        if arrows(&f.remove_vertex(v), g, h, limits)?.arrows {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Result of [`equivalence_scan`]. Finding no distinguisher proves nothing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScanOutcome {
    /// A known theorem separates the pairs without search.
    Filtered { reason: String },
    /// A graph arrowing exactly one of the pairs.
    Distinguisher { graph: Graph, first_arrows: bool, second_arrows: bool },
    NoDistinguisherFound { graphs_checked: usize, indeterminate: Vec<Graph> },
}

/// Looks for a graph on at most `max_vertices` vertices that arrows one
/// pair but not the other.
///
/// Two filters run first: pairs with different `max(ω(G), ω(H))` are never
/// equivalent, and neither are pairs with different `χ(G) + χ(H)`. Graphs
/// whose search runs out of budget are listed and skipped.
pub fn equivalence_scan(
    first: (&Graph, &Graph),
    second: (&Graph, &Graph),
    max_vertices: usize,
    limits: Limits<'_>,
) -> Result<ScanOutcome> {
    if max_vertices > 8 {
        return Err(Error::param("max_vertices must be at most 8"));
    }
    let w1 = clique_number(first.0).max(clique_number(first.1));
    let w2 = clique_number(second.0).max(clique_number(second.1));
    if w1 != w2 {
        return Ok(ScanOutcome::Filtered {
            reason: alloc::format!("max clique numbers differ ({w1} vs {w2}); a Ramsey graph with clique number {} separates them", w1.min(w2)),
        });
    }
    let x1 = chromatic_number(first.0)? + chromatic_number(first.1)?;
    let x2 = chromatic_number(second.0)? + chromatic_number(second.1)?;
    if x1 != x2 {
        return Ok(ScanOutcome::Filtered { reason: alloc::format!("chromatic sums differ ({x1} vs {x2})") });
    }
    let mut checked = 0;
    let mut indeterminate = Vec::new();
    for f in graphs_up_to(max_vertices) {
        let a = arrows(&f, first.0, first.1, limits);
        let b = arrows(&f, second.0, second.1, limits);
        match (a, b) {
            (Ok(a), Ok(b)) => {
                checked += 1;
                if a.arrows != b.arrows {
                    return Ok(ScanOutcome::Distinguisher {
                        graph: canonical_form(&f),
                        first_arrows: a.arrows,
                        second_arrows: b.arrows,
                    });
                }
            }
            (Err(e), _) | (_, Err(e)) if e.is_indeterminate() => indeterminate.push(f),
            (Err(e), _) | (_, Err(e)) => return Err(e),
        }
    }
    Ok(ScanOutcome::NoDistinguisherFound { graphs_checked: checked, indeterminate })
}

/// Which determiner properties a candidate `(d, β)` has for the pair
/// `(T, K_t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeterminerReport {
    /// `d` has a free coloring.
    pub not_arrowing: bool,
    /// Every free coloring colors `β` red.
    pub beta_forced_red: bool,
    /// Some free coloring makes every edge touching `β` blue.
    pub well_behaved: bool,
    /// The endpoints of `β` and their neighbors induce `K_t`.
    pub closure_is_clique: bool,
    pub nodes_explored: u64,
}

impl DeterminerReport {
    pub fn is_well_behaved_determiner(&self) -> bool {
        self.not_arrowing && self.beta_forced_red && self.well_behaved && self.closure_is_clique
    }
}

/// Checks all four determiner properties by complete search.
pub fn verify_determiner(d: &Graph, beta: Edge, tree: &Graph, t: usize, limits: Limits<'_>) -> Result<DeterminerReport> {
    let (x, y) = beta;
    if x >= d.n() || y >= d.n() || !d.has_edge(x, y) {
        return Err(Error::NotAnEdge(beta));
    }
    let inst = Instance::new(d, tree, &Graph::complete(t));
    let index = EdgeIndex::new(d);
    let b = index.get(x, y).expect("beta is an edge");
    let (free, n1) = inst.solve(&[], limits)?;
    let (blue_beta, n2) = inst.solve(&[(b, Color::Blue)], limits)?;
    let touching: Vec<(usize, Color)> = d
        .edges()
        .iter()
        .enumerate()
        .filter(|&(i, &(u, v))| i != b && (u == x || u == y || v == x || v == y))
        .map(|(i, _)| (i, Color::Blue))
        .collect();
    let (behaved, n3) = inst.solve(&touching, limits)?;
    let mut closure: Vec<usize> = d.neighbors(x).chain(d.neighbors(y)).chain([x, y]).collect();
    closure.sort_unstable();
    closure.dedup();
    let induced = d.induced(&closure);
    Ok(DeterminerReport {
        not_arrowing: free.is_some(),
        beta_forced_red: blue_beta.is_none(),
        well_behaved: behaved.is_some(),
        closure_is_clique: closure.len() == t && induced.m() == t * (t - 1) / 2,
        nodes_explored: n1 + n2 + n3,
    })
}

/// A uniformly random coloring of `f`, deterministic in `seed`.
pub fn random_coloring(f: &Graph, seed: u64) -> EdgeColoring {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    EdgeColoring::from_fn(f, |_| if rng.gen::<bool>() { Color::Red } else { Color::Blue })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::edge;

    fn star(s: usize) -> Graph {
        Graph::from_edges(s + 1, &(1..=s).map(|i| (0, i)).collect::<Vec<_>>()).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| edge(i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    fn none() -> Limits<'static> {
        Limits::default()
    }

    #[test]
    fn free_coloring_examples() {
        let k3 = Graph::complete(3);
        let blue = EdgeColoring::uniform(&k3, Color::Blue);
        assert!(!coloring_is_free(&k3, &blue, &star(2), &k3).unwrap());
        let mut one_red = blue.clone();
        one_red.set(0, 1, Color::Red).unwrap();
        assert!(coloring_is_free(&k3, &one_red, &star(2), &k3).unwrap());
        let other = Graph::complete(4);
        assert!(coloring_is_free(&other, &blue, &star(2), &k3).is_err());
    }

    #[test]
    fn arrowing_examples() {
        let k3 = Graph::complete(3);
        assert!(arrows(&Graph::complete(5), &path(3), &k3, none()).unwrap().arrows);
        let v = arrows(&Graph::complete(4), &path(3), &k3, none()).unwrap();
        assert!(!v.arrows);
        assert!(coloring_is_free(&Graph::complete(4), v.witness.as_ref().unwrap(), &path(3), &k3).unwrap());
        assert!(arrows(&Graph::empty(1), &Graph::empty(1), &Graph::complete(4), none()).unwrap().arrows);
        assert!(arrows(&cycle(5), &star(2), &star(2), none()).unwrap().arrows);
        assert!(!arrows(&cycle(5), &star(1), &star(3), none()).unwrap().arrows);
    }

    #[test]
    fn budget_is_reported_as_indeterminate() {
        let e = arrows(&Graph::complete(6), &Graph::complete(3), &Graph::complete(3), Limits::budget(1)).unwrap_err();
        assert!(e.is_indeterminate());
    }

    #[test]
    fn ramsey_number_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(ramsey_number(&path(3), &k3, 10, none()).unwrap(), 5);
        assert_eq!(ramsey_number(&path(4), &k3, 10, none()).unwrap(), 7);
        assert_eq!(ramsey_number(&star(1), &star(3), 10, none()).unwrap(), 4);
        assert_eq!(ramsey_number(&k3, &k3, 6, none()).unwrap(), 6);
        assert_eq!(ramsey_number(&k3, &k3, 5, none()), Err(Error::CapExceeded { cap: 5 }));
    }

    #[test]
    fn minimality_examples() {
        assert!(minimal_ramsey_check(&star(3), &star(1), &star(3), none()).unwrap());
        assert!(!minimal_ramsey_check(&star(4), &star(1), &star(3), none()).unwrap());
        assert!(!minimal_ramsey_check(&cycle(5), &star(1), &star(3), none()).unwrap());
    }

    #[test]
    fn minimality_of_k5_agrees_with_exhaustive_deletions() {
        let k3 = Graph::complete(3);
        let k5 = Graph::complete(5);
        let expected = arrows_exhaustive(&k5, &path(3), &k3).unwrap().arrows
            && k5.edges().iter().all(|&e| !arrows_exhaustive(&k5.without_edges(&[e]), &path(3), &k3).unwrap().arrows)
            && (0..5).all(|v| !arrows_exhaustive(&k5.remove_vertex(v), &path(3), &k3).unwrap().arrows);
        assert_eq!(minimal_ramsey_check(&k5, &path(3), &k3, none()).unwrap(), expected);
    }

    #[test]
    fn scan_examples() {
        let out = equivalence_scan((&star(1), &star(3)), (&star(3), &star(1)), 6, none()).unwrap();
        assert!(matches!(out, ScanOutcome::NoDistinguisherFound { indeterminate, .. } if indeterminate.is_empty()));
        match equivalence_scan((&star(2), &star(2)), (&star(1), &star(3)), 5, none()).unwrap() {
            ScanOutcome::Distinguisher { graph, first_arrows, second_arrows } => {
                assert!(first_arrows && !second_arrows);
                assert!(arrows(&graph, &star(2), &star(2), none()).unwrap().arrows);
            }
            other => panic!("unexpected {other:?}"),
        }
        let k3 = Graph::complete(3);
        let out = equivalence_scan((&k3, &k3), (&star(2), &k3), 4, none()).unwrap();
        assert!(matches!(out, ScanOutcome::Filtered { .. }));
    }

    #[test]
    fn sampling_finds_witnesses_only() {
        let k3 = Graph::complete(3);
        let r = sample_colorings(&Graph::complete(4), &path(3), &k3, 10_000, 7).unwrap();
        let v = r.verdict().unwrap();
        assert!(!v.arrows);
        assert_eq!(v.method, Method::Sampled);
        assert!(coloring_is_free(&Graph::complete(4), v.witness.as_ref().unwrap(), &path(3), &k3).unwrap());
        let r = sample_colorings(&Graph::complete(5), &path(3), &k3, 2_000, 7).unwrap();
        assert!(r.verdict().is_none());
        assert_eq!(r.samples, 2_000);
    }

    #[test]
    fn split_prefixes_agree_with_whole_search() {
        let k3 = Graph::complete(3);
        for n in 4..7 {
            let f = Graph::complete(n);
            let inst = Instance::new(&f, &k3, &k3);
            let whole = inst.solve(&[], none()).unwrap().0.is_none();
            let parts = inst.split(3).iter().all(|p| inst.solve(p, none()).unwrap().0.is_none());
            assert_eq!(whole, parts);
        }
    }

    #[test]
    fn determiner_on_a_clique() {
        let p3 = path(3);
        let r = verify_determiner(&Graph::complete(3), (0, 1), &p3, 3, none()).unwrap();
        assert!(r.closure_is_clique);
        assert!(r.not_arrowing);
        assert!(!r.beta_forced_red);
        assert_eq!(
            verify_determiner(&path(3), (0, 2), &p3, 3, none()),
            Err(Error::NotAnEdge((0, 2)))
        );
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn graph_from(n: usize, bits: &[bool], max_m: usize) -> Graph {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] && g.m() < max_m {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        }

        fn host() -> impl Strategy<Value = Graph> {
            (2usize..8).prop_flat_map(|n| {
                proptest::collection::vec(proptest::bool::weighted(0.5), n * (n - 1) / 2)
                    .prop_map(move |bits| graph_from(n, &bits, 14))
            })
        }

        fn pair() -> impl Strategy<Value = (Graph, Graph)> {
            prop_oneof![
                Just((star(2), Graph::complete(3))),
                Just((path(4), Graph::complete(3))),
                Just((Graph::complete(3), Graph::complete(3))),
                Just((star(2), star(2))),
                Just((path(3), cycle(4))),
            ]
        }

        proptest! {
            #[test]
            fn pruned_matches_enumeration(f in host(), (g, h) in pair()) {
                let fast = arrows(&f, &g, &h, none()).unwrap();
                let slow = arrows_exhaustive(&f, &g, &h).unwrap();
                prop_assert_eq!(fast.arrows, slow.arrows);
                if let Some(w) = &fast.witness {
                    prop_assert!(coloring_is_free(&f, w, &g, &h).unwrap());
                }
            }

            #[test]
            fn color_swap_symmetry(f in host(), (g, h) in pair()) {
                prop_assert_eq!(
                    arrows(&f, &g, &h, none()).unwrap().arrows,
                    arrows(&f, &h, &g, none()).unwrap().arrows
                );
            }

            #[test]
            fn monotone_under_edge_addition(f in host(), (g, h) in pair(), extra in any::<(usize, usize)>()) {
                let mut bigger = f.clone();
                let (u, v) = (extra.0 % f.n(), extra.1 % f.n());
                if u != v {
                    bigger.add_edge(u, v);
                }
                if arrows(&f, &g, &h, none()).unwrap().arrows {
                    prop_assert!(arrows(&bigger, &g, &h, none()).unwrap().arrows);
                }
            }

            #[test]
            fn star_pairs_match_factor_test(n in 3usize..9, k in 1usize..4) {
                // Circulant graphs are regular; compare both deciders.
                let mut f = Graph::empty(n);
                for i in 0..n {
                    for j in 1..=k.min((n - 1) / 2) {
                        f.add_edge(i, (i + j) % n);
                    }
                }
                let d = f.max_degree();
                prop_assume!(f.is_regular(d) && f.m() <= 12 && d >= 1);
                for a in 1..=d {
                    let b = d + 2 - a;
                    let by_factor = crate::factors::star_pair_regular_arrows(&f, a, b).unwrap();
                    prop_assert_eq!(by_factor, arrows(&f, &star(a), &star(b), none()).unwrap().arrows);
                }
            }
        }
    }
}
