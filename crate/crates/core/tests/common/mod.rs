#![allow(dead_code)]

use proptest::prelude::*;
use sperfect::Graph;

/// Graphs with `lo..=hi` vertices; each pair is an edge with probability
/// drawn per graph, so both sparse and dense cases show up.
pub fn graphs(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi, 0u32..=100).prop_flat_map(|(n, density)| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(0u32..100, pairs).prop_map(move |draws| {
            let mut edges = Vec::new();
            let mut d = draws.into_iter();
            for j in 1..n {
                for i in 0..j {
                    if d.next().unwrap() < density {
                        edges.push((i, j));
                    }
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

pub fn chordal_graphs(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi, 0.0f64..=1.0, any::<u64>())
        .prop_map(|(n, fill, seed)| sperfect::chordal::random_chordal(n, fill, seed).unwrap())
}

/// Every induced cycle of length >= 4, by subset scan.
pub fn has_hole_brute(g: &Graph) -> bool {
    let n = g.n();
    (0u64..1 << n).any(|m| {
        let k = m.count_ones() as usize;
        if k < 4 {
            return false;
        }
        let set = sperfect::VertexSet(m);
        let (h, _) = g.induced_subgraph(set).unwrap();
        h.is_connected() && (0..k).all(|v| h.degree(v) == 2)
    })
}

/// Induced k-sun by subset scan: among 2k chosen vertices the outer ones are
/// exactly those of degree 2, they are independent, each sees an adjacent
/// inner pair, and those pairs form one k-cycle through all inner vertices.
pub fn sun_sizes_brute(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut found = Vec::new();
    for m in 0u64..1 << n {
        let size = m.count_ones() as usize;
        if size < 6 || size % 2 == 1 {
            continue;
        }
        let k = size / 2;
        let set = sperfect::VertexSet(m);
        let (h, _) = g.induced_subgraph(set).unwrap();
        let outer: Vec<usize> = (0..size).filter(|&v| h.degree(v) == 2).collect();
        if outer.len() != k {
            continue;
        }
        let outer_set: sperfect::VertexSet = outer.iter().copied().collect();
        if !h.is_independent(outer_set) {
            continue;
        }
        let mut pair_edges = Vec::new();
        let mut ok = true;
        for &u in &outer {
            let nb = h.neighbors(u).to_vec();
            if !h.has_edge(nb[0], nb[1]) {
                ok = false;
                break;
            }
            pair_edges.push((nb[0], nb[1]));
        }
        if !ok {
            continue;
        }
        let inner: Vec<usize> = (0..size).filter(|v| !outer_set.contains(*v)).collect();
        // the pairs must form a single cycle on the inner vertices
        let mut idx = vec![usize::MAX; size];
        for (i, &v) in inner.iter().enumerate() {
            idx[v] = i;
        }
        let cyc = Graph::new(k, &pair_edges.iter().map(|&(a, b)| (idx[a], idx[b])).collect::<Vec<_>>()).unwrap();
        if cyc.edge_count() == k && cyc.is_connected() && (0..k).all(|v| cyc.degree(v) == 2) {
            found.push(k);
        }
    }
    found
}
