//! Exact S-independence (`α_S`, the distance-3 packing number) and S-cover
//! (`θ_S`, realized through a minimum dominating set) numbers, with
//! certificates and brute-force oracles.
//!
//! Both parameters are additive over components, so every solver works one
//! component at a time. Certificates are the lexicographically smallest
//! optimal vertex sets.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, components_within, Bits, Graph, VertexSet, MAX_VERTICES};

type Rows = [u64; MAX_VERTICES];

/// Pairwise-distance-≥3 vertex set certifying `α_S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PackingSet {
    pub vertices: VertexSet,
    pub size: usize,
}

impl PackingSet {
    pub fn new(vertices: VertexSet) -> Self {
        PackingSet { vertices, size: vertices.len() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Star {
    pub center: usize,
    pub leaves: VertexSet,
}

/// A family of stars covering every vertex, certifying `θ_S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarCover {
    pub stars: Vec<Star>,
    pub size: usize,
}

impl StarCover {
    pub fn new(stars: Vec<Star>) -> Self {
        let size = stars.len();
        StarCover { stars, size }
    }

    pub fn centers(&self) -> VertexSet {
        self.stars.iter().map(|s| s.center).collect()
    }
}

fn closed_rows(adj: &[u64], mask: u64) -> Rows {
    let mut out = [0u64; MAX_VERTICES];
    for v in Bits(mask) {
        out[v] = (adj[v] & mask) | bit(v);
    }
    out
}

/// Rows of the square of `G[mask]` (open neighborhoods).
fn square_rows(adj: &[u64], mask: u64) -> Rows {
    let mut out = [0u64; MAX_VERTICES];
    for v in Bits(mask) {
        let n1 = adj[v] & mask;
        out[v] = (Bits(n1).fold(n1, |acc, w| acc | adj[w]) & mask) & !bit(v);
    }
    out
}

/// Maximum independent set size of the graph `rows` restricted to `p`.
fn mis(rows: &Rows, p: u64) -> usize {
    if p == 0 {
        return 0;
    }
    let mut best_v = 0;
    let mut best_d = u32::MAX;
    for v in Bits(p) {
        let d = (rows[v] & p).count_ones();
        if d < best_d {
            best_d = d;
            best_v = v;
            if d <= 1 {
                break;
            }
        }
    }
    let v = best_v;
    if best_d <= 1 {
        // some maximum independent set contains a vertex of degree ≤ 1
        return 1 + mis(rows, p & !rows[v] & !bit(v));
    }
    // every maximal independent set meets N[v]
    let mut best = 0;
    for u in Bits((rows[v] & p) | bit(v)) {
        best = best.max(1 + mis(rows, p & !rows[u] & !bit(u)));
    }
    best
}

/// Whether `budget` vertices from `allowed` dominate `undominated`.
/// `closed` holds closed neighborhoods.
fn can_dominate(closed: &Rows, undominated: u64, mut allowed: u64, budget: usize) -> bool {
    if undominated == 0 {
        return true;
    }
    if budget == 0 {
        return false;
    }
    let mut max_cover = 0;
    for a in Bits(allowed) {
        max_cover = max_cover.max((closed[a] & undominated).count_ones() as usize);
    }
    if budget * max_cover < undominated.count_ones() as usize {
        return false;
    }
    // branch on the undominated vertex with the fewest usable dominators
    let mut pick = usize::MAX;
    let mut fewest = u32::MAX;
    for u in Bits(undominated) {
        let c = (closed[u] & allowed).count_ones();
        if c < fewest {
            fewest = c;
            pick = u;
            if c <= 1 {
                break;
            }
        }
    }
    if fewest == 0 {
        return false;
    }
    let mut options: Vec<usize> = Bits(closed[pick] & allowed).collect();
    options.sort_by_key(|&c| std::cmp::Reverse((closed[c] & undominated).count_ones()));
    for c in options {
        if can_dominate(closed, undominated & !closed[c], allowed & !bit(c), budget - 1) {
            return true;
        }
        allowed &= !bit(c);
    }
    false
}

/// Greedy dominating set size, an upper bound for `γ`.
fn greedy_domination(closed: &Rows, mask: u64) -> usize {
    let mut left = mask;
    let mut count = 0;
    while left != 0 {
        let c = Bits(mask).max_by_key(|&c| (closed[c] & left).count_ones()).unwrap();
        left &= !closed[c];
        count += 1;
    }
    count
}

/// `(α_S, θ_S)` of one connected piece `comp`.
fn component_values(adj: &[u64], comp: u64) -> (usize, usize) {
    let sq = square_rows(adj, comp);
    let alpha = mis(&sq, comp);
    let closed = closed_rows(adj, comp);
    let upper = greedy_domination(&closed, comp);
    let theta = (alpha..upper)
        .find(|&k| can_dominate(&closed, comp, comp, k))
        .unwrap_or(upper);
    (alpha, theta)
}

/// `α_S(G[mask])`.
pub(crate) fn alpha_in(adj: &[u64], mask: u64) -> usize {
    components_within(adj, mask)
        .into_iter()
        .map(|c| mis(&square_rows(adj, c), c))
        .sum()
}

/// `θ_S(G[mask])`.
pub(crate) fn theta_in(adj: &[u64], mask: u64) -> usize {
    components_within(adj, mask)
        .into_iter()
        .map(|c| component_values(adj, c).1)
        .sum()
}

/// `(α_S, θ_S)` of `G[mask]`.
pub(crate) fn values_in(adj: &[u64], mask: u64) -> (usize, usize) {
    components_within(adj, mask)
        .into_iter()
        .map(|c| component_values(adj, c))
        .fold((0, 0), |(a, t), (x, y)| (a + x, t + y))
}

/// Whether `α_S(G[mask]) = θ_S(G[mask])` for a connected `mask`. Weak
/// duality means a dominating set of size `α_S` settles it.
pub(crate) fn balanced_connected(adj: &[u64], mask: u64) -> bool {
    let sq = square_rows(adj, mask);
    let alpha = mis(&sq, mask);
    let closed = closed_rows(adj, mask);
    can_dominate(&closed, mask, mask, alpha)
}

/// Lexicographically smallest maximum independent set of `rows[p]`.
fn lex_min_mis(rows: &Rows, p: u64, target: usize) -> u64 {
    let mut chosen = 0u64;
    let mut open = p;
    let mut need = target;
    while need > 0 {
        let v = open.trailing_zeros() as usize;
        let rest = open & !rows[v] & !bit(v);
        if 1 + mis(rows, rest) >= need {
            chosen |= bit(v);
            open = rest;
            need -= 1;
        } else {
            open &= !bit(v);
        }
    }
    chosen
}

/// Lexicographically smallest dominating set of size `target` in `comp`.
fn lex_min_dominating(closed: &Rows, comp: u64, target: usize) -> u64 {
    let mut chosen = 0u64;
    let mut undominated = comp;
    let mut need = target;
    for v in Bits(comp) {
        if need == 0 {
            break;
        }
        let later = comp & !crate::graph::low_mask(v + 1);
        if can_dominate(closed, undominated & !closed[v], later, need - 1) {
            chosen |= bit(v);
            undominated &= !closed[v];
            need -= 1;
        }
    }
    debug_assert_eq!(undominated, 0);
    chosen
}

/// `α_S(G)` with a lexicographically smallest optimal packing.
pub fn alpha_s(g: &Graph) -> (usize, PackingSet) {
    let adj = g.rows();
    let mut all = 0u64;
    for comp in g.connected_components() {
        let c = comp.bits();
        let sq = square_rows(adj, c);
        let k = mis(&sq, c);
        all |= lex_min_mis(&sq, c, k);
    }
    let p = PackingSet::new(VertexSet(all));
    (p.size, p)
}

/// `θ_S(G)` with an explicit star cover: centers are a lexicographically
/// smallest minimum dominating set, and every other vertex joins the star of
/// its smallest adjacent center.
pub fn theta_s(g: &Graph) -> (usize, StarCover) {
    let adj = g.rows();
    let mut centers = 0u64;
    for comp in g.connected_components() {
        let c = comp.bits();
        let (_, theta) = component_values(adj, c);
        centers |= lex_min_dominating(&closed_rows(adj, c), c, theta);
    }
    let mut leaves = [0u64; MAX_VERTICES];
    for w in Bits(g.vertices().bits() & !centers) {
        let c = (adj[w] & centers).trailing_zeros() as usize;
        leaves[c] |= bit(w);
    }
    let stars = Bits(centers)
        .map(|c| Star { center: c, leaves: VertexSet(leaves[c]) })
        .collect();
    let cover = StarCover::new(stars);
    (cover.size, cover)
}

pub fn alpha_s_value(g: &Graph) -> usize {
    alpha_in(g.rows(), g.vertices().bits())
}

pub fn theta_s_value(g: &Graph) -> usize {
    theta_in(g.rows(), g.vertices().bits())
}

/// Largest graph the brute-force oracles accept.
pub const BRUTE_LIMIT: usize = 20;

fn brute_guard(g: &Graph) -> Result<()> {
    if g.n() > BRUTE_LIMIT {
        Err(Error::SizeGuard { n: g.n(), limit: BRUTE_LIMIT })
    } else {
        Ok(())
    }
}

/// Oracle for `α_S`: grows vertex sets in increasing order, keeping only
/// vertices at BFS distance ≥ 3 from everything chosen so far.
pub fn brute_alpha(g: &Graph) -> Result<usize> {
    brute_guard(g)?;
    let d = g.distance_matrix();
    fn grow(d: &crate::graph::DistanceMatrix, n: usize, from: usize, chosen: &mut Vec<usize>) -> usize {
        let mut best = chosen.len();
        for v in from..n {
            if best >= chosen.len() + (n - v) {
                break;
            }
            if chosen.iter().all(|&u| d.at_least(u, v, 3)) {
                chosen.push(v);
                best = best.max(grow(d, n, v + 1, chosen));
                chosen.pop();
            }
        }
        best
    }
    Ok(grow(&d, g.n(), 0, &mut Vec::new()))
}

/// Oracle for `θ_S`: the smallest `k` for which some `k`-subset dominates
/// every vertex, by plain combination enumeration.
pub fn brute_theta(g: &Graph) -> Result<usize> {
    brute_guard(g)?;
    let n = g.n();
    let adj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| u == v || g.has_edge(u, v)).collect()).collect();
    let dominates = |set: &[usize]| (0..n).all(|w| set.iter().any(|&c| adj[c][w]));
    for k in 0..=n {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            if dominates(&idx) {
                return Ok(k);
            }
            // next k-combination in lexicographic order
            let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else { break };
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    unreachable!("the full vertex set dominates")
}

fn check_range(g: &Graph, s: VertexSet) -> Result<()> {
    match s.iter().find(|&v| v >= g.n()) {
        Some(vertex) => Err(Error::VertexOutOfRange { vertex, n: g.n() }),
        None => Ok(()),
    }
}

/// True iff every pair of the set is at distance ≥ 3.
pub fn verify_packing(g: &Graph, p: &PackingSet) -> Result<bool> {
    check_range(g, p.vertices)?;
    let d = g.distance_matrix();
    let vs = p.vertices.to_vec();
    let pairwise = vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| d.at_least(u, v, 3)));
    Ok(pairwise && p.size == vs.len())
}

/// True iff each star is a star subgraph and together they cover `V(G)`.
pub fn verify_cover(g: &Graph, c: &StarCover) -> Result<bool> {
    for s in &c.stars {
        check_range(g, s.leaves.union(VertexSet::singleton(s.center)))?;
    }
    let stars_ok = c
        .stars
        .iter()
        .all(|s| !s.leaves.contains(s.center) && s.leaves.is_subset(g.neighbors(s.center)));
    let covered = c
        .stars
        .iter()
        .fold(VertexSet::EMPTY, |acc, s| acc.union(s.leaves).union(VertexSet::singleton(s.center)));
    Ok(stars_ok && covered == g.vertices() && c.size == c.stars.len())
}
