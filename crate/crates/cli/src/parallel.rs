//! `arrows` over several threads.
//!
//! The search space is cut into disjoint prefixes (colorings of the first
//! few branching edges). Workers take prefixes in index order; once prefix
//! `i` yields a free coloring, prefixes after `i` are cancelled. The answer
//! is decided by the first prefix, in index order, that yields a coloring or
//! an error, so it does not depend on scheduling. Budgets apply per prefix.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use ramseylab_core::arrowing::{arrows, ArrowingVerdict, Instance, Limits, Method};
use ramseylab_core::{EdgeColoring, Graph, Result};

type Slot = Option<Result<(Option<EdgeColoring>, u64)>>;

pub fn arrows_parallel(f: &Graph, g: &Graph, h: &Graph, budget: Option<u64>, jobs: usize) -> Result<ArrowingVerdict> {
    if jobs <= 1 {
        return arrows(f, g, h, Limits { budget, stop: None });
    }
    let inst = Instance::new(f, g, h);
    let mut depth = 0;
    while (1usize << depth) < 4 * jobs && depth < inst.branch_order().len() {
        depth += 1;
    }
    let prefixes = inst.split(depth);
    let next = AtomicUsize::new(0);
    let first_hit = AtomicUsize::new(usize::MAX);
    let slots: Mutex<Vec<Slot>> = Mutex::new((0..prefixes.len()).map(|_| None).collect());
    thread::scope(|s| {
        for _ in 0..jobs.min(prefixes.len()) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= prefixes.len() || i > first_hit.load(Ordering::SeqCst) {
                    break;
                }
                let stop = || first_hit.load(Ordering::Relaxed) < i;
                let result = inst.solve(&prefixes[i], Limits { budget, stop: Some(&stop) });
                if matches!(result, Ok((Some(_), _)) | Err(_)) {
                    first_hit.fetch_min(i, Ordering::SeqCst);
                }
                slots.lock().expect("no worker panicked")[i] = Some(result);
            });
        }
    });
    let mut nodes = 0;
    for slot in slots.into_inner().expect("no worker panicked") {
        let Some(result) = slot else { break };
        let (witness, n) = result?;
        nodes += n;
        if witness.is_some() {
            return Ok(ArrowingVerdict { arrows: false, witness, nodes_explored: nodes, method: Method::Pruned });
        }
    }
    Ok(ArrowingVerdict { arrows: true, witness: None, nodes_explored: nodes, method: Method::Pruned })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ramseylab_core::arrowing::coloring_is_free;
    use ramseylab_core::families::path;

    #[test]
    fn agrees_with_serial_search() {
        let k3 = Graph::complete(3);
        for n in 3..8 {
            let f = Graph::complete(n);
            for (g, h) in [(path(4), k3.clone()), (k3.clone(), k3.clone())] {
                let serial = arrows(&f, &g, &h, Limits::default()).unwrap();
                let a = arrows_parallel(&f, &g, &h, None, 4).unwrap();
                let b = arrows_parallel(&f, &g, &h, None, 4).unwrap();
                assert_eq!(a.arrows, serial.arrows);
                assert_eq!(a, b);
                if let Some(w) = &a.witness {
                    assert!(coloring_is_free(&f, w, &g, &h).unwrap());
                }
            }
        }
    }
}
