//! Canonical labeling of small graphs.
//!
//! Each connected component is labeled by individualization-refinement:
//! refine an ordered partition to an equitable one, branch on the first
//! non-singleton cell, and keep the lexicographically least adjacency code
//! over all discrete leaves. Branches on twins (vertices with equal
//! neighborhoods apart from each other) are skipped, since swapping twins is
//! an automorphism fixing everything individualized so far. Components are
//! then concatenated in order of (size, code).

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

type Code = Vec<u64>;

fn code_of(g: &Graph, order: &[usize]) -> Code {
    let k = order.len();
    let total = k * k.saturating_sub(1) / 2;
    let mut code = vec![0u64; total.div_ceil(64)];
    let mut bit = 0;
    for i in 0..k {
        for j in i + 1..k {
            if g.has_edge(order[i], order[j]) {
                code[bit / 64] |= 1 << (63 - bit % 64);
            }
            bit += 1;
        }
    }
    code
}

fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut cell_of = vec![0usize; n];
    loop {
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let before = cells.len();
        let mut next = Vec::with_capacity(before);
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut counts = vec![0u32; before];
                    for w in g.neighbors(v) {
                        counts[cell_of[w]] += 1;
                    }
                    (counts, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        cells = next;
        if cells.len() == before {
            return cells;
        }
    }
}

fn twins(g: &Graph, a: usize, b: usize) -> bool {
    g.row(a).iter().zip(g.row(b)).enumerate().all(|(i, (&x, &y))| {
        let mut mask = !0u64;
        for v in [a, b] {
            if v / 64 == i {
                mask &= !(1 << (v % 64));
            }
        }
        x & mask == y & mask
    })
}

struct Best {
    code: Code,
    order: Vec<usize>,
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<Best>) {
    let cells = refine(g, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
        let code = code_of(g, &order);
        if best.as_ref().is_none_or(|b| code < b.code) {
            *best = Some(Best { code, order });
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cells[target] {
        if tried.iter().any(|&w| twins(g, v, w)) {
            continue;
        }
        tried.push(v);
        let mut branch = Vec::with_capacity(cells.len() + 1);
        branch.extend_from_slice(&cells[..target]);
        branch.push(vec![v]);
        branch.push(cells[target].iter().copied().filter(|&w| w != v).collect());
        branch.extend_from_slice(&cells[target + 1..]);
        search(g, branch, best);
    }
}

/// Canonical vertex order of a connected graph: `order[i]` is the vertex
/// that receives label `i`.
fn component_order(g: &Graph) -> (Code, Vec<usize>) {
    if g.n() == 0 {
        return (Vec::new(), Vec::new());
    }
    let mut best = None;
    search(g, vec![(0..g.n()).collect()], &mut best);
    let b = best.expect("at least one leaf");
    (b.code, b.order)
}

/// A permutation `perm` such that `g.permuted(&perm)` is the canonical form
/// of `g`. Isomorphic graphs have identical canonical forms.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let mut parts: Vec<(usize, Code, Vec<usize>)> = g
        .components()
        .into_iter()
        .map(|comp| {
            let local = g.induced(&comp);
            let (code, order) = component_order(&local);
            let global = order.into_iter().map(|i| comp[i]).collect();
            (comp.len(), code, global)
        })
        .collect();
    parts.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    let mut perm = vec![0; g.n()];
    let mut next = 0;
    for (_, _, order) in parts {
        for v in order {
            perm[v] = next;
            next += 1;
        }
    }
    perm
}

pub fn canonical_form(g: &Graph) -> Graph {
    g.permuted(&canonical_labeling(g))
}
