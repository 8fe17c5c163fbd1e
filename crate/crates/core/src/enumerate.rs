//! Canonical forms and exhaustive generation of small connected graphs, plus
//! seeded random graphs.
//!
//! Canonical labeling refines the degree partition to an equitable one and
//! individualizes vertices of the first non-singleton cell, keeping the
//! largest adjacency code over all leaves. Swapping twins is an
//! automorphism that fixes the current partition, so only one vertex per
//! twin class is individualized.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::chordal::maximal_cliques;
use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Graph};

/// Largest order with a packed canonical code (`n(n-1)/2 <= 128` bits).
pub const CANON_LIMIT: usize = 16;

/// Largest order for exhaustive generation.
pub const EXHAUSTIVE_LIMIT: usize = 10;

type Partition = Vec<Vec<usize>>;

/// Packs the upper triangle column by column (`(0,1), (0,2), (1,2), ...`)
/// under `order`, first pair in the most significant position.
fn code_under(g: &Graph, order: &[usize]) -> u128 {
    let mut code = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            code = (code << 1) | g.has_edge(order[i], order[j]) as u128;
        }
    }
    code
}

/// Splits cells by neighbor counts into every cell until nothing changes.
/// Sub-cells are ordered by their count signature, so the result depends
/// only on the isomorphism class of the input.
fn refine(g: &Graph, mut p: Partition) -> Partition {
    loop {
        let masks: Vec<u64> = p.iter().map(|c| c.iter().fold(0, |m, &v| m | bit(v))).collect();
        let mut next = Vec::with_capacity(g.n());
        for cell in &p {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| (g.rows()[v] & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if next.len() == p.len() {
            return next;
        }
        p = next;
    }
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let r = g.rows();
    r[u] & !bit(v) == r[v] & !bit(u)
}

fn search(g: &Graph, p: Partition, best: &mut Option<(u128, Vec<usize>)>) {
    let Some(target) = p.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = p.iter().map(|c| c[0]).collect();
        let code = code_under(g, &order);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, order));
        }
        return;
    };
    let cell = &p[target];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        if tried.iter().any(|&u| are_twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let mut q = Vec::with_capacity(p.len() + 1);
        q.extend_from_slice(&p[..target]);
        q.push(vec![v]);
        q.push(cell.iter().copied().filter(|&x| x != v).collect());
        q.extend_from_slice(&p[target + 1..]);
        search(g, refine(g, q), best);
    }
}

/// Canonical relabeling: `order[i]` is the vertex placed at position `i`.
pub fn canonical_order(g: &Graph) -> Result<Vec<usize>> {
    if g.n() > CANON_LIMIT {
        return Err(Error::SizeGuard { n: g.n(), limit: CANON_LIMIT });
    }
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    let start = refine(g, vec![(0..g.n()).collect()]);
    let mut best = None;
    search(g, start, &mut best);
    Ok(best.expect("nonempty search").1)
}

/// Isomorphism-invariant code; together with `n` it identifies the class.
pub fn canonical_code(g: &Graph) -> Result<u128> {
    Ok(code_under(g, &canonical_order(g)?))
}

pub fn canonical_form(g: &Graph) -> Result<Graph> {
    Ok(from_code(g.n(), canonical_code(g)?))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_code(a)? == canonical_code(b)?)
}

/// Inverse of the packing used by [`canonical_code`].
pub fn from_code(n: usize, code: u128) -> Graph {
    let bits = n * n.saturating_sub(1) / 2;
    let mut adj = vec![0u64; n];
    let mut pos = bits;
    for j in 1..n {
        for i in 0..j {
            pos -= 1;
            if code >> pos & 1 == 1 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
        }
    }
    Graph::from_rows(adj)
}

fn exhaustive_guard(n: usize) -> Result<()> {
    if n > EXHAUSTIVE_LIMIT {
        Err(Error::SizeGuard { n, limit: EXHAUSTIVE_LIMIT })
    } else {
        Ok(())
    }
}

/// One level of vertex addition: every way of attaching a new vertex to one
/// of `extensions(g)`, deduplicated up to isomorphism and sorted by code.
fn grow<F>(level: &[u128], m: usize, extensions: F) -> Vec<u128>
where
    F: Fn(&Graph) -> Vec<u64> + Sync,
{
    let set: HashSet<u128> = level
        .par_iter()
        .flat_map_iter(|&code| {
            let g = from_code(m, code);
            extensions(&g)
                .into_iter()
                .map(move |nbrs| {
                    let h = g.with_vertex(crate::graph::VertexSet(nbrs)).expect("within ceiling");
                    canonical_code(&h).expect("within canonical limit")
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let mut out: Vec<u128> = set.into_iter().collect();
    out.sort_unstable();
    out
}

fn generate<F>(n: usize, extensions: F) -> Result<Vec<Graph>>
where
    F: Fn(&Graph) -> Vec<u64> + Sync,
{
    exhaustive_guard(n)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![0u128];
    for m in 1..n {
        level = grow(&level, m, &extensions);
    }
    Ok(level.into_iter().map(|c| from_code(n, c)).collect())
}

/// All connected graphs on `n` vertices up to isomorphism, in canonical
/// form. Every connected graph has a vertex whose removal leaves it
/// connected, so attaching a vertex to a nonempty set reaches them all.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    generate(n, |g| (1..1u64 << g.n()).collect())
}

/// All connected chordal graphs on `n` vertices up to isomorphism. Removing
/// a simplicial vertex keeps a connected chordal graph connected and
/// chordal, so each one arises by attaching a vertex to a nonempty clique.
pub fn connected_chordal_graphs(n: usize) -> Result<Vec<Graph>> {
    generate(n, |g| {
        let mut cliques: HashSet<u64> = HashSet::new();
        for k in maximal_cliques(g) {
            let k = k.bits();
            // every nonempty subset of a maximal clique
            let mut s = k;
            while s != 0 {
                cliques.insert(s);
                s = (s - 1) & k;
            }
        }
        let mut v: Vec<u64> = cliques.into_iter().collect();
        v.sort_unstable();
        v
    })
}

/// Erdős–Rényi `G(n, p)` from a seeded ChaCha8 stream.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges)
}

/// Relabels `g` by `perm` (vertex `v` becomes `perm[v]`).
pub fn relabel(g: &Graph, perm: &[usize]) -> Result<Graph> {
    if perm.len() != g.n() || Bits(perm.iter().fold(0u64, |m, &v| m | bit(v))).count() != g.n() {
        return Err(Error::InvalidParameter("relabeling is not a permutation".into()));
    }
    let edges: Vec<_> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::new(g.n(), &edges)
}
