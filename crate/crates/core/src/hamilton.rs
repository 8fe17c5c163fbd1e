//! Hamiltonian cycles of induced subgraphs.
//!
//! Up to [`DP_LIMIT`] vertices a bitmask path table drives the
//! enumeration (every partial cycle it extends is completable); larger
//! vertex sets fall back to plain backtracking.

use std::ops::ControlFlow;

use crate::graph::{bit, Bits, Graph, VertexSet};

pub const DP_LIMIT: usize = 24;

/// Calls `visit` with each Hamiltonian cycle of `G[set]` (each undirected
/// cycle once, starting at the smallest vertex) until it breaks. Sets with
/// fewer than three vertices have no Hamiltonian cycle.
pub fn for_each_hamiltonian_cycle<F>(g: &Graph, set: VertexSet, mut visit: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let verts = set.to_vec();
    let m = verts.len();
    if m < 3 {
        return;
    }
    // local adjacency over positions 0..m
    let local: Vec<u64> = verts
        .iter()
        .map(|&v| {
            verts
                .iter()
                .enumerate()
                .filter(|&(_, &w)| g.has_edge(v, w))
                .fold(0u64, |acc, (i, _)| acc | bit(i))
        })
        .collect();
    let mut emit = |cycle_local: &[usize]| -> ControlFlow<()> {
        // each undirected cycle appears in both directions; keep one
        if cycle_local[1] > cycle_local[m - 1] {
            return ControlFlow::Continue(());
        }
        let cycle: Vec<usize> = cycle_local.iter().map(|&i| verts[i]).collect();
        visit(&cycle)
    };
    if m <= DP_LIMIT {
        dp_cycles(&local, m, &mut emit);
    } else {
        backtrack_cycles(&local, m, &mut emit);
    }
}

/// `reach[s]` holds the endpoints `v` of paths that start at position 0,
/// visit exactly `{0} ∪ s` (as a mask over positions 1..m, shifted down by
/// one) and end at `v`.
fn dp_cycles(local: &[u64], m: usize, emit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>) {
    let size = 1usize << (m - 1);
    let mut reach = vec![0u32; size];
    for v in 1..m {
        if local[0] & (1 << v) != 0 {
            reach[1 << (v - 1)] = 1 << v;
        }
    }
    for s in 1..size {
        let ends = reach[s];
        if ends == 0 {
            continue;
        }
        for v in Bits(ends as u64) {
            let mut next = (local[v] as u32 >> 1) & !(s as u32) & (size as u32 - 1);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                reach[s | (1 << w)] |= 1 << (w + 1);
            }
        }
    }
    let full = size - 1;
    let mut cycle = vec![0usize; m];
    // walk backwards from the closing vertex
    fn back(
        reach: &[u32],
        local: &[u64],
        s: usize,
        v: usize,
        pos: usize,
        cycle: &mut [usize],
        emit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        cycle[pos] = v;
        let rest = s & !(1 << (v - 1));
        if rest == 0 {
            return emit(cycle);
        }
        let preds = reach[rest] & local[v] as u32;
        for u in Bits(preds as u64) {
            back(reach, local, rest, u, pos - 1, cycle, emit)?;
        }
        ControlFlow::Continue(())
    }
    let closers = reach[full] & local[0] as u32;
    for v in Bits(closers as u64) {
        if back(&reach, local, full, v, m - 1, &mut cycle, emit).is_break() {
            return;
        }
    }
}

fn backtrack_cycles(local: &[u64], m: usize, emit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>) {
    fn go(
        local: &[u64],
        m: usize,
        path: &mut Vec<usize>,
        used: u64,
        emit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let last = *path.last().unwrap();
        if path.len() == m {
            if local[last] & 1 != 0 {
                return emit(path);
            }
            return ControlFlow::Continue(());
        }
        let unused = crate::graph::low_mask(m) & !used;
        // an unused vertex with fewer than two usable neighbors kills the branch
        for u in Bits(unused) {
            let avail = local[u] & (unused | bit(last) | 1);
            if avail.count_ones() < 2 {
                return ControlFlow::Continue(());
            }
        }
        for w in Bits(local[last] & unused) {
            path.push(w);
            go(local, m, path, used | bit(w), emit)?;
            path.pop();
        }
        ControlFlow::Continue(())
    }
    let mut path = vec![0];
    let _ = go(local, m, &mut path, 1, emit);
}

pub fn hamiltonian_cycle(g: &Graph, set: VertexSet) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_hamiltonian_cycle(g, set, |c| {
        found = Some(c.to_vec());
        ControlFlow::Break(())
    });
    found
}

pub fn is_hamiltonian(g: &Graph) -> bool {
    hamiltonian_cycle(g, g.vertices()).is_some()
}

pub fn is_hamiltonian_cycle(g: &Graph, set: VertexSet, cycle: &[usize]) -> bool {
    let k = cycle.len();
    k >= 3
        && cycle.iter().copied().collect::<VertexSet>() == set
        && k == set.len()
        && (0..k).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % k]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    fn count(g: &Graph) -> usize {
        let mut c = 0;
        for_each_hamiltonian_cycle(g, g.vertices(), |cyc| {
            assert!(is_hamiltonian_cycle(g, g.vertices(), cyc));
            c += 1;
            ControlFlow::Continue(())
        });
        c
    }

    #[test]
    fn cycle_counts() {
        assert_eq!(count(&make_cycle(7).unwrap()), 1);
        // K_n has (n-1)!/2 Hamiltonian cycles
        assert_eq!(count(&make_complete(5).unwrap()), 12);
        assert_eq!(count(&make_complete(6).unwrap()), 60);
        assert_eq!(count(&make_path(5).unwrap()), 0);
        assert_eq!(count(&make_complete(2).unwrap()), 0);
    }

    #[test]
    fn backtracking_agrees_with_table() {
        // 26-vertex cycle with a few chords goes through the fallback path
        let mut e: Vec<_> = (0..26).map(|i| (i, (i + 1) % 26)).collect();
        e.extend([(0, 2), (5, 7)]);
        let g = Graph::new(26, &e).unwrap();
        assert_eq!(count(&g), 1);
        let sun = make_sun(13, &InnerChords::None).unwrap();
        assert_eq!(sun.n(), 26);
        assert!(is_hamiltonian(&sun));
        let star = make_star(25).unwrap();
        assert!(!is_hamiltonian(&star));
    }

    #[test]
    fn subsets() {
        let sun = make_sun(3, &InnerChords::None).unwrap();
        let inner: VertexSet = [0, 1, 2].into_iter().collect();
        assert_eq!(hamiltonian_cycle(&sun, inner), Some(vec![0, 1, 2]));
        assert!(is_hamiltonian(&sun));
        assert!(!is_hamiltonian(&make_star(3).unwrap()));
    }
}
