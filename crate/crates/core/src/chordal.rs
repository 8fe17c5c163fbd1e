//! Chordality recognition with certificates, simplicial vertices, free
//! cliques, and a seeded generator of random connected chordal graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Graph, VertexSet, MAX_VERTICES};

/// An induced cycle of length at least 4, listed in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hole {
    pub cycle: Vec<usize>,
}

impl Hole {
    /// Independent check: distinct vertices, length ≥ 4, cycle edges present
    /// and no chords.
    pub fn verify(&self, g: &Graph) -> bool {
        let c = &self.cycle;
        let k = c.len();
        if k < 4 || c.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let set: VertexSet = c.iter().copied().collect();
        if set.len() != k {
            return false;
        }
        (0..k).all(|i| {
            (0..k).all(|j| {
                let d = i.abs_diff(j);
                let consecutive = d == 1 || d == k - 1;
                i == j || g.has_edge(c[i], c[j]) == consecutive
            })
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChordalityVerdict {
    pub is_chordal: bool,
    /// Perfect elimination ordering, first-eliminated vertex first.
    pub peo: Option<Vec<usize>>,
    pub hole: Option<Hole>,
}

/// Maximum cardinality search visit order (ties go to the smallest label).
pub fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut left = g.vertices().bits();
    let mut order = Vec::with_capacity(n);
    while left != 0 {
        let v = Bits(left).max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).unwrap();
        order.push(v);
        left &= !bit(v);
        for w in Bits(g.rows()[v] & left) {
            weight[w] += 1;
        }
    }
    order
}

/// First vertex whose later neighbors are not a clique, with one
/// non-adjacent pair among them.
fn peo_violation(g: &Graph, peo: &[usize]) -> Option<(usize, usize, usize)> {
    let mut later = g.vertices().bits();
    for &v in peo {
        later &= !bit(v);
        let nb = g.rows()[v] & later;
        for x in Bits(nb) {
            let missing = nb & !g.rows()[x] & !bit(x);
            if missing != 0 {
                return Some((v, x, missing.trailing_zeros() as usize));
            }
        }
    }
    None
}

pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    order.len() == g.n()
        && order.iter().copied().collect::<VertexSet>() == g.vertices()
        && peo_violation(g, order).is_none()
}

/// Shortest `x`–`y` path using only vertices of `allowed`.
fn shortest_path(g: &Graph, allowed: u64, x: usize, y: usize) -> Option<Vec<usize>> {
    let mut parent = [usize::MAX; MAX_VERTICES];
    let mut seen = bit(x);
    let mut frontier = bit(x);
    while frontier != 0 && seen & bit(y) == 0 {
        let mut next = 0;
        for u in Bits(frontier) {
            let new = g.rows()[u] & allowed & !seen & !next;
            for w in Bits(new) {
                parent[w] = u;
            }
            next |= new;
        }
        seen |= next;
        frontier = next;
    }
    if seen & bit(y) == 0 {
        return None;
    }
    let mut path = vec![y];
    while *path.last().unwrap() != x {
        path.push(parent[*path.last().unwrap()]);
    }
    path.reverse();
    Some(path)
}

/// Hole through `v`, `x`, `y` where `x`, `y` are non-adjacent neighbors of
/// `v`: a shortest `x`–`y` path avoiding the rest of `N[v]` closes an
/// induced cycle with `v`.
fn hole_through(g: &Graph, v: usize, x: usize, y: usize) -> Option<Hole> {
    let blocked = g.closed_neighborhood(v).bits() & !bit(x) & !bit(y);
    let path = shortest_path(g, g.vertices().bits() & !blocked, x, y)?;
    let mut cycle = vec![v];
    cycle.extend(path);
    Some(Hole { cycle })
}

fn find_hole(g: &Graph, hint: (usize, usize, usize)) -> Hole {
    if let Some(h) = hole_through(g, hint.0, hint.1, hint.2) {
        return h;
    }
    // Every hole passes through some vertex with its two cycle neighbors, so
    // the scan below cannot come up empty on a non-chordal graph.
    for v in 0..g.n() {
        let nb = g.neighbors(v);
        for x in nb {
            for y in Bits(nb.bits() & !g.rows()[x] & !crate::graph::low_mask(x + 1)) {
                if let Some(h) = hole_through(g, v, x, y) {
                    return h;
                }
            }
        }
    }
    unreachable!("PEO violation without an induced cycle")
}

pub fn check_chordal(g: &Graph) -> ChordalityVerdict {
    let mut peo = mcs_order(g);
    peo.reverse();
    match peo_violation(g, &peo) {
        None => ChordalityVerdict { is_chordal: true, peo: Some(peo), hole: None },
        Some(hint) => ChordalityVerdict { is_chordal: false, peo: None, hole: Some(find_hole(g, hint)) },
    }
}

pub fn is_chordal(g: &Graph) -> bool {
    check_chordal(g).is_chordal
}

/// Vertices whose neighborhood is a clique.
pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    (0..g.n()).filter(|&v| g.is_clique(g.neighbors(v))).collect()
}

/// All maximal cliques, sorted by bitmask. Chordal graphs use the
/// elimination ordering; everything else goes through Bron–Kerbosch with
/// pivoting.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let verdict = check_chordal(g);
    let mut cliques = match verdict.peo {
        Some(peo) => {
            let mut later = g.vertices().bits();
            let mut cands = Vec::with_capacity(g.n());
            for v in peo {
                later &= !bit(v);
                cands.push((g.rows()[v] & later) | bit(v));
            }
            cands
                .iter()
                .enumerate()
                .filter(|&(i, &c)| !cands.iter().enumerate().any(|(j, &d)| j != i && c & !d == 0 && (c != d || j < i)))
                .map(|(_, &c)| VertexSet(c))
                .collect::<Vec<_>>()
        }
        None => {
            let mut out = Vec::new();
            bron_kerbosch(g, 0, g.vertices().bits(), 0, &mut out);
            out
        }
    };
    cliques.sort();
    cliques
}

fn bron_kerbosch(g: &Graph, r: u64, mut p: u64, mut x: u64, out: &mut Vec<VertexSet>) {
    if p == 0 {
        if x == 0 {
            out.push(VertexSet(r));
        }
        return;
    }
    let pivot = Bits(p | x).max_by_key(|&u| (g.rows()[u] & p).count_ones()).unwrap();
    for v in Bits(p & !g.rows()[pivot]) {
        bron_kerbosch(g, r | bit(v), p & g.rows()[v], x & g.rows()[v], out);
        p &= !bit(v);
        x |= bit(v);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialReport {
    pub simplicial: VertexSet,
    /// Maximal cliques containing at least one simplicial vertex.
    pub free_cliques: Vec<VertexSet>,
}

pub fn simplicial_report(g: &Graph) -> SimplicialReport {
    let simplicial = simplicial_vertices(g);
    let free_cliques = maximal_cliques(g)
        .into_iter()
        .filter(|c| !c.intersection(simplicial).is_empty())
        .collect();
    SimplicialReport { simplicial, free_cliques }
}

/// A triangle with exactly one simplicial vertex.
pub fn is_free_triangle(g: &Graph, tri: [usize; 3]) -> bool {
    let [a, b, c] = tri;
    if !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) {
        return false;
    }
    let simp = simplicial_vertices(g);
    tri.iter().filter(|&&v| simp.contains(v)).count() == 1
}

/// A clique containing at least one simplicial vertex.
pub fn is_free_clique(g: &Graph, clique: VertexSet) -> bool {
    g.is_clique(clique) && !clique.intersection(simplicial_vertices(g)).is_empty()
}

/// Random connected chordal graph on `n` vertices, grown by reverse
/// elimination.
///
/// Vertex `i` picks an earlier vertex `x` uniformly, grows a random maximal
/// clique `K` around `x`, and attaches to `x` plus
/// `round(fill * (|K| - 1))` further members of `K`. The new vertex is
/// simplicial when added, so the result stays chordal; `fill = 0` yields a
/// tree and `fill = 1` the complete graph. Randomness comes from ChaCha8
/// seeded with `seed`, so a given `(n, fill, seed)` always reproduces the
/// same graph.
pub fn random_chordal(n: usize, fill: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("random_chordal needs n >= 1".into()));
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    if !(0.0..=1.0).contains(&fill) {
        return Err(Error::InvalidParameter(format!("fill {fill} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj = vec![0u64; n];
    for i in 1..n {
        let x = rng.gen_range(0..i);
        let mut nbrs: Vec<usize> = Bits(adj[x]).collect();
        nbrs.shuffle(&mut rng);
        let mut clique = vec![x];
        let mut cmask = bit(x);
        for w in nbrs {
            if adj[w] & cmask == cmask {
                clique.push(w);
                cmask |= bit(w);
            }
        }
        let extra = (fill * (clique.len() - 1) as f64).round() as usize;
        let mut rest = clique[1..].to_vec();
        rest.shuffle(&mut rng);
        let attach = std::iter::once(x).chain(rest.into_iter().take(extra));
        for w in attach {
            adj[w] |= bit(i);
            adj[i] |= bit(w);
        }
    }
    Ok(Graph::from_rows(adj))
}
