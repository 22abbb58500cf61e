//! Regular graphs with a q-factor and no p-factor (p < q odd).
//!
//! Stage G: blocks `Q_{i,j} = K_{q+1}` for `i < r-q+1`, `j < 2r`, with the
//! identity perfect matching between `Q_{i1,j}` and `Q_{i2,j}` for every
//! `i1 ≠ i2`; `G` is r-regular and the blocks form a q-factor `G_q`.
//! A matching `M_G` of `⌊(r-1)/2⌋` edges takes `(q-1)/2` disjoint edges of
//! `Q_{1,1}` and the vertex-0 edge between `Q_{1,j}` and `Q_{2,j}` for
//! `2 ≤ j ≤ ⌊(r-q+2)/2⌋` (one-based).
//!
//! Stage H: a new vertex `u` replaces every `vw ∈ M_G` by `uv, uw`.
//!
//! Stage F: hub vertices `D` plus copies of `H`, each copy's `u` wired to
//! the hubs so that everything has degree `r`. The odd components of
//! `F - D` are exactly the copies of `H`, more than `p·|D|`.
//!
//! * `r` odd: `D = K_t` with `t = r-q+1`; `qt` copies split into groups
//!   `U_1..U_t` of size `q`, hub `d_j` joined to `U_j`.
//! * `r` even, `t = r-2q+1 ≥ 3`: `D = K_t`, `qt` copies, hub `d_j` joined to
//!   `U_j ∪ U_{j+1}` (cyclically).
//! * `r` even, `t = 1` (`q = r/2`): the cyclic wiring would need `U_2 = U_1`
//!   and leave the copies of `u` one short. Instead `D` is two
//!   non-adjacent hubs, both joined to all `2q` copies of `u`.

use alloc::format;
use alloc::vec::Vec;

use super::Builder;
use crate::error::{Error, Result};
use crate::factors::{belck_check, BelckCertificate};
use crate::graph::{edge, Color, Edge, Graph};

/// Intermediate objects of [`factor_extremal_graph`], for auditing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionTrace {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    /// Size of the hub clique (2 for the two-hub variant).
    pub t: usize,
    pub stage_g: Graph,
    /// Vertex sets of the blocks `Q_{i,j}` in `G`, index `i·2r + j`.
    pub blocks: Vec<Vec<usize>>,
    /// The q-factor `G_q` of `G`.
    pub g_q: Vec<Edge>,
    pub m_g: Vec<Edge>,
    pub m_q: Vec<Edge>,
    /// `G` plus `u = |V(G)|`.
    pub stage_h: Graph,
    /// The spanning subgraph `H_q` (degree `q-1` at `u`, `q` elsewhere).
    pub h_q: Vec<Edge>,
    /// Hub vertices `D` in `F`.
    pub hubs: Vec<usize>,
    /// The groups `U_j` of copies of `u` in `F`.
    pub parts: Vec<Vec<usize>>,
    /// First vertex of each copy of `H` in `F`.
    pub copy_offsets: Vec<usize>,
    /// A q-factor of `F`.
    pub q_factor: Vec<Edge>,
}

pub fn factor_extremal_graph(p: usize, q: usize, r: usize) -> Result<(Graph, ConstructionTrace, BelckCertificate)> {
    let bound = if r % 2 == 1 { r } else { r / 2 };
    if p.is_multiple_of(2) || q.is_multiple_of(2) || p >= q || q > bound {
        return Err(Error::param(format!(
            "need odd p < q with q <= r (r odd) or q <= r/2 (r even); got p={p}, q={q}, r={r}"
        )));
    }
    // Stage G.
    let rows = r - q + 1;
    let cols = 2 * r;
    let block_size = q + 1;
    let mut g = Builder::new(rows * cols * block_size);
    let block = |i: usize, j: usize| -> Vec<usize> {
        let first = (i * cols + j) * block_size;
        (first..first + block_size).collect()
    };
    let mut blocks = Vec::new();
    let mut g_q = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            let b = block(i, j);
            g.clique(&b, Color::Red);
            for (x, &u) in b.iter().enumerate() {
                for &v in &b[x + 1..] {
                    g_q.push(edge(u, v));
                }
            }
            blocks.push(b);
        }
    }
    for j in 0..cols {
        for i1 in 0..rows {
            for i2 in i1 + 1..rows {
                for (&u, &v) in block(i1, j).iter().zip(&block(i2, j)) {
                    g.edge(u, v, Color::Blue);
                }
            }
        }
    }
    let stage_g = g.finish()?.0;
    let q11 = block(0, 0);
    let mut m_q: Vec<Edge> = (0..(q - 1) / 2).map(|x| edge(q11[2 * x], q11[2 * x + 1])).collect();
    let mut m_g = m_q.clone();
    for j in 1..(r - q + 2) / 2 {
        m_g.push(edge(block(0, j)[0], block(1, j)[0]));
    }
    if m_g.len() != (r - 1) / 2 {
        return Err(Error::invariant("M_G has the wrong size"));
    }
    m_g.sort_unstable();
    m_q.sort_unstable();

    // Stage H.
    let u = stage_g.n();
    let mut stage_h = stage_g.without_edges(&m_g);
    stage_h.add_vertices(1);
    for &(v, w) in &m_g {
        stage_h.add_edge(u, v);
        stage_h.add_edge(u, w);
    }
    let mut h_q: Vec<Edge> = g_q.iter().copied().filter(|e| m_q.binary_search(e).is_err()).collect();
    for &(v, w) in &m_q {
        h_q.push(edge(u, v));
        h_q.push(edge(u, w));
    }
    h_q.sort_unstable();

    // Stage F.
    let (t, copies, two_hubs) = if r % 2 == 1 {
        (r - q + 1, q * (r - q + 1), false)
    } else if r - 2 * q + 1 >= 3 {
        (r - 2 * q + 1, q * (r - 2 * q + 1), false)
    } else {
        (2, 2 * q, true)
    };
    let mut f = Builder::new(t);
    let hubs: Vec<usize> = (0..t).collect();
    if !two_hubs {
        f.clique(&hubs, Color::Red);
    }
    let mut copy_offsets = Vec::new();
    let mut us = Vec::new();
    let mut q_factor = Vec::new();
    let h_map: Vec<usize> = (0..stage_h.n()).collect();
    for _ in 0..copies {
        let offset = f.vertices(stage_h.n());
        let map: Vec<usize> = h_map.iter().map(|&x| x + offset).collect();
        f.copy(&stage_h, &map, |_| Color::Red);
        copy_offsets.push(offset);
        us.push(offset + u);
        q_factor.extend(h_q.iter().map(|&(a, b)| (a + offset, b + offset)));
    }
    let parts: Vec<Vec<usize>> = us.chunks(q).map(<[usize]>::to_vec).collect();
    for (jdx, &d) in hubs.iter().enumerate() {
        let joined: Vec<usize> = if two_hubs {
            us.clone()
        } else if r % 2 == 1 {
            parts[jdx].clone()
        } else {
            parts[jdx].iter().chain(&parts[(jdx + 1) % t]).copied().collect()
        };
        for &x in &joined {
            f.edge(d, x, Color::Red);
        }
        q_factor.extend(parts[jdx].iter().map(|&x| edge(d, x)));
    }
    q_factor.sort_unstable();
    let graph = f.finish()?.0;
    let cert = belck_check(&graph, &hubs, p)?.ok_or_else(|| Error::invariant("hub set is not a certificate"))?;
    let trace = ConstructionTrace {
        p,
        q,
        r,
        t,
        stage_g,
        blocks,
        g_q,
        m_g,
        m_q,
        stage_h,
        h_q,
        hubs,
        parts,
        copy_offsets,
        q_factor,
    };
    Ok((graph, trace, cert))
}
