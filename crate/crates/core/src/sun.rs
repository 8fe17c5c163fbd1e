//! Induced sun and super-sun detection, the constructive 3-sun finder for
//! chordal graphs, and the extended-sun embedding.
//!
//! A (super) sun is an inner cycle `v_1 .. v_k` (chords between inner
//! vertices are unrestricted) plus, for every cycle edge `v_i v_{i+1}`, a
//! spoke: an induced path whose first vertex sees `v_i`, whose last vertex
//! sees `v_{i+1}`, and which has no other edges to the inner cycle or to
//! other spokes. A sun is the case where every spoke is a single vertex.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::Serialize;

use crate::chordal::{check_chordal, simplicial_vertices};
use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Graph, VertexSet};
use crate::hamilton::for_each_hamiltonian_cycle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(k: usize) -> Parity {
        if k % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

/// Parity filter for searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ParityFilter {
    #[default]
    Any,
    Odd,
    Even,
}

impl ParityFilter {
    pub fn accepts(self, k: usize) -> bool {
        match self {
            ParityFilter::Any => true,
            ParityFilter::Odd => k % 2 == 1,
            ParityFilter::Even => k.is_multiple_of(2),
        }
    }
}

impl FromStr for ParityFilter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "any" => Ok(ParityFilter::Any),
            "odd" => Ok(ParityFilter::Odd),
            "even" => Ok(ParityFilter::Even),
            _ => Err(Error::InvalidParameter(format!("parity must be any, odd or even, not {s:?}"))),
        }
    }
}

/// Witness of an induced k-sun: `outer[i]` sees exactly `inner[i]` and
/// `inner[(i + 1) % k]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SunCertificate {
    pub k: usize,
    pub inner: Vec<usize>,
    pub outer: Vec<usize>,
    pub parity: Parity,
}

impl SunCertificate {
    pub fn vertices(&self) -> VertexSet {
        self.inner.iter().chain(&self.outer).copied().collect()
    }

    /// Re-checks every adjacency and non-adjacency from the definition.
    pub fn verify(&self, g: &Graph) -> bool {
        let k = self.k;
        if k < 3 || self.inner.len() != k || self.outer.len() != k || self.parity != Parity::of(k) {
            return false;
        }
        if self.inner.iter().chain(&self.outer).any(|&v| v >= g.n()) || self.vertices().len() != 2 * k {
            return false;
        }
        let cycle_ok = (0..k).all(|i| g.has_edge(self.inner[i], self.inner[(i + 1) % k]));
        let outer_ok = (0..k).all(|i| {
            let u = self.outer[i];
            let allowed: VertexSet = [self.inner[i], self.inner[(i + 1) % k]].into_iter().collect();
            let seen = g.neighbors(u).intersection(self.vertices());
            seen == allowed
        });
        cycle_ok && outer_ok
    }
}

impl fmt::Display for SunCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-sun inner {:?} outer {:?}", self.k, self.inner, self.outer)
    }
}

/// Witness of an induced super sun; `spokes[i]` runs from the `inner[i]`
/// end to the `inner[(i + 1) % k]` end.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuperSunCertificate {
    pub k: usize,
    pub inner: Vec<usize>,
    pub spokes: Vec<Vec<usize>>,
    pub parity: Parity,
}

impl SuperSunCertificate {
    pub fn vertices(&self) -> VertexSet {
        self.inner.iter().chain(self.spokes.iter().flatten()).copied().collect()
    }

    pub fn spoke_sizes(&self) -> Vec<usize> {
        self.spokes.iter().map(Vec::len).collect()
    }

    pub fn verify(&self, g: &Graph) -> bool {
        let k = self.k;
        if k < 3 || self.inner.len() != k || self.spokes.len() != k || self.parity != Parity::of(k) {
            return false;
        }
        let total = k + self.spokes.iter().map(Vec::len).sum::<usize>();
        if self.spokes.iter().any(Vec::is_empty)
            || self.vertices().iter().any(|v| v >= g.n())
            || self.vertices().len() != total
        {
            return false;
        }
        let inner: VertexSet = self.inner.iter().copied().collect();
        if !(0..k).all(|i| g.has_edge(self.inner[i], self.inner[(i + 1) % k])) {
            return false;
        }
        for (i, spoke) in self.spokes.iter().enumerate() {
            let own: VertexSet = spoke.iter().copied().collect();
            let others = self.vertices().difference(inner).difference(own);
            for (p, &s) in spoke.iter().enumerate() {
                let mut path_nbrs = VertexSet::EMPTY;
                if p > 0 {
                    path_nbrs.insert(spoke[p - 1]);
                }
                if p + 1 < spoke.len() {
                    path_nbrs.insert(spoke[p + 1]);
                }
                let mut inner_nbrs = VertexSet::EMPTY;
                if p == 0 {
                    inner_nbrs.insert(self.inner[i]);
                }
                if p + 1 == spoke.len() {
                    inner_nbrs.insert(self.inner[(i + 1) % k]);
                }
                let nb = g.neighbors(s);
                if nb.intersection(own) != path_nbrs
                    || nb.intersection(inner) != inner_nbrs
                    || !nb.intersection(others).is_empty()
                {
                    return false;
                }
            }
        }
        true
    }

    pub fn as_sun(&self) -> Option<SunCertificate> {
        self.spokes.iter().all(|s| s.len() == 1).then(|| SunCertificate {
            k: self.k,
            inner: self.inner.clone(),
            outer: self.spokes.iter().map(|s| s[0]).collect(),
            parity: self.parity,
        })
    }
}

/// Which spoke sizes a super-sun search accepts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpokeRule {
    /// Single-vertex spokes: ordinary suns.
    Sun,
    /// Each spoke independently has `3t + 1` vertices, `t >= 1`.
    Decoupled,
    /// Every spoke has `3k + 1` vertices where `k` is the inner cycle length.
    Tied,
    /// Each spoke has `3t + 1` vertices, `t >= 0` (suns included).
    SunInclusive,
}

impl SpokeRule {
    pub fn allows(self, size: usize, k: usize) -> bool {
        match self {
            SpokeRule::Sun => size == 1,
            SpokeRule::Decoupled => size >= 4 && size % 3 == 1,
            SpokeRule::Tied => size == 3 * k + 1,
            SpokeRule::SunInclusive => size % 3 == 1,
        }
    }

    /// Whether some cycle length admits this spoke size.
    fn may_allow(self, size: usize) -> bool {
        match self {
            SpokeRule::Tied => size >= 10 && size % 3 == 1,
            _ => self.allows(size, 3),
        }
    }

    fn smallest_spoke(self, k: usize) -> usize {
        match self {
            SpokeRule::Sun | SpokeRule::SunInclusive => 1,
            SpokeRule::Decoupled => 4,
            SpokeRule::Tied => 3 * k + 1,
        }
    }

    /// Vertex count of the smallest super sun with `k` inner vertices.
    pub fn smallest_size(self, k: usize) -> usize {
        k + k * self.smallest_spoke(k)
    }

    /// Vertex count of the smallest odd super sun.
    pub fn smallest_odd_size(self) -> usize {
        self.smallest_size(3)
    }
}

struct SunSearch<'a> {
    g: &'a Graph,
    rule: SpokeRule,
    parity: ParityFilter,
    max_k: usize,
    max_spoke: usize,
    inner: Vec<usize>,
    spokes: Vec<Vec<usize>>,
    inner_mask: u64,
    spoke_mask: u64,
}

impl SunSearch<'_> {
    #[inline]
    fn adj(&self, v: usize) -> u64 {
        self.g.rows()[v]
    }

    fn used(&self) -> u64 {
        self.inner_mask | self.spoke_mask
    }

    fn v1(&self) -> usize {
        self.inner[0]
    }

    /// Starts spoke `j`, hanging off the newest inner vertex.
    fn start_spoke(&mut self) -> ControlFlow<SuperSunCertificate> {
        let j = self.inner.len() - 1;
        let vj = self.inner[j];
        let allowed_inner = bit(vj) | bit(self.v1());
        let cands = self.adj(vj) & !self.used();
        for s in Bits(cands) {
            if self.adj(s) & self.spoke_mask != 0 || self.adj(s) & self.inner_mask & !allowed_inner != 0 {
                continue;
            }
            self.spokes.push(vec![s]);
            self.spoke_mask |= bit(s);
            let r = self.continue_spoke();
            self.spoke_mask &= !bit(s);
            self.spokes.pop();
            r?;
        }
        ControlFlow::Continue(())
    }

    fn continue_spoke(&mut self) -> ControlFlow<SuperSunCertificate> {
        let j = self.inner.len() - 1;
        let vj = self.inner[j];
        let v1 = self.v1();
        let spoke = self.spokes.last().unwrap();
        let m = spoke.len();
        let s = spoke[m - 1];
        let spoke_bits = spoke.iter().fold(0u64, |acc, &x| acc | bit(x));
        let touches_v1 = j > 0 && self.adj(s) & bit(v1) != 0;

        if touches_v1 {
            let k = j + 1;
            if k >= 3
                && self.adj(vj) & bit(v1) != 0
                && self.parity.accepts(k)
                && self.spokes.iter().all(|sp| self.rule.allows(sp.len(), k))
            {
                return ControlFlow::Break(SuperSunCertificate {
                    k,
                    inner: self.inner.clone(),
                    spokes: self.spokes.clone(),
                    parity: Parity::of(k),
                });
            }
            // a spoke vertex touching v_1 can only close the cycle
            return ControlFlow::Continue(());
        }

        if self.rule.may_allow(m) && self.inner.len() < self.max_k {
            let others = self.spoke_mask & !bit(s);
            let cands = self.adj(s) & self.adj(vj) & !self.used() & !crate::graph::low_mask(v1 + 1);
            for w in Bits(cands) {
                if self.adj(w) & others != 0 {
                    continue;
                }
                self.inner.push(w);
                self.inner_mask |= bit(w);
                let r = self.start_spoke();
                self.inner_mask &= !bit(w);
                self.inner.pop();
                r?;
            }
        }

        if m < self.max_spoke {
            let other_spokes = self.spoke_mask & !spoke_bits;
            let inner_ok = if j > 0 { bit(v1) } else { 0 };
            let cands = self.adj(s) & !self.used();
            for t in Bits(cands) {
                let a = self.adj(t);
                if a & spoke_bits != bit(s) || a & other_spokes != 0 || a & self.inner_mask & !inner_ok != 0 {
                    continue;
                }
                self.spokes.last_mut().unwrap().push(t);
                self.spoke_mask |= bit(t);
                let r = self.continue_spoke();
                self.spoke_mask &= !bit(t);
                self.spokes.last_mut().unwrap().pop();
                r?;
            }
        }
        ControlFlow::Continue(())
    }
}

/// Searches for an induced super sun whose spokes obey `rule`, with
/// `3 <= k <= max_k` and `k` matching `parity`. The smallest inner vertex of
/// a returned certificate is `inner[0]`.
pub fn find_induced_super_sun(
    g: &Graph,
    rule: SpokeRule,
    parity: ParityFilter,
    max_k: usize,
) -> Option<SuperSunCertificate> {
    let n = g.n();
    let max_k = max_k.min(n / (1 + rule.smallest_spoke(3)).max(1));
    if max_k < 3 {
        return None;
    }
    let max_spoke = match rule {
        SpokeRule::Sun => 1,
        _ => n.saturating_sub(3 + 2 * rule.smallest_spoke(3)),
    };
    let mut search = SunSearch {
        g,
        rule,
        parity,
        max_k,
        max_spoke,
        inner: Vec::with_capacity(max_k),
        spokes: Vec::with_capacity(max_k),
        inner_mask: 0,
        spoke_mask: 0,
    };
    for v1 in 0..n {
        // v_1 needs two neighbors beyond itself to sit on a cycle with a spoke
        if g.degree(v1) < 3 {
            continue;
        }
        search.inner.push(v1);
        search.inner_mask = bit(v1);
        let r = search.start_spoke();
        search.inner.clear();
        search.inner_mask = 0;
        if let ControlFlow::Break(cert) = r {
            debug_assert!(cert.verify(g));
            return Some(cert);
        }
    }
    None
}

/// Searches for an induced k-sun with `3 <= k <= max_k` (clipped to `n/2`)
/// of the requested parity.
pub fn find_induced_sun(g: &Graph, parity: ParityFilter, max_k: usize) -> Option<SunCertificate> {
    find_induced_super_sun(g, SpokeRule::Sun, parity, max_k).and_then(|c| c.as_sun())
}

fn three_sun(inner: [usize; 3], outer: [usize; 3]) -> SunCertificate {
    SunCertificate { k: 3, inner: inner.to_vec(), outer: outer.to_vec(), parity: Parity::Odd }
}

/// Neighborhood incomparability used by the 3-sun construction: the closed
/// neighborhoods of `u` and `w`, with `u`, `w`, `v` removed, are not nested.
pub fn incomparable_neighborhoods(g: &Graph, v: usize, u: usize, w: usize) -> bool {
    let drop: VertexSet = [u, w, v].into_iter().collect();
    let nu = g.closed_neighborhood(u).difference(drop);
    let nw = g.closed_neighborhood(w).difference(drop);
    !nu.is_subset(nw) && !nw.is_subset(nu)
}

/// Path walk from a simplicial vertex `v` and two neighbors `u`, `w` with
/// incomparable neighborhoods: take `u1 ∈ N(u) \ N(w)` and
/// `w1 ∈ N(w) \ N(u)`, join them by a shortest path outside `N[v]`, and
/// look on it for `t` adjacent to both `u` and `w` whose path neighbors `x`,
/// `y` see only `u` resp. `w`. Then `{v, u, w, x, t, y}` is a 3-sun.
fn three_sun_by_path_walk(g: &Graph) -> Option<SunCertificate> {
    let simplicial = simplicial_vertices(g);
    for v in simplicial {
        let nv = g.neighbors(v);
        for u in nv {
            for w in Bits(nv.bits() & !crate::graph::low_mask(u + 1)) {
                if !incomparable_neighborhoods(g, v, u, w) {
                    continue;
                }
                let outside = g.vertices().bits() & !g.closed_neighborhood(v).bits();
                let u_only = g.rows()[u] & !g.rows()[w] & outside;
                let w_only = g.rows()[w] & !g.rows()[u] & outside;
                for u1 in Bits(u_only) {
                    for w1 in Bits(w_only) {
                        let Some(path) = shortest_path(g, outside, u1, w1) else { continue };
                        for i in 1..path.len().saturating_sub(1) {
                            let (x, t, y) = (path[i - 1], path[i], path[i + 1]);
                            let cert = three_sun([u, t, w], [x, y, v]);
                            if cert.verify(g) {
                                return Some(cert);
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

fn shortest_path(g: &Graph, allowed: u64, x: usize, y: usize) -> Option<Vec<usize>> {
    let mut parent = [usize::MAX; crate::graph::MAX_VERTICES];
    let mut seen = bit(x);
    let mut frontier = bit(x);
    while frontier != 0 && seen & bit(y) == 0 {
        let mut next = 0;
        for a in Bits(frontier) {
            let new = g.rows()[a] & allowed & !seen & !next;
            for b in Bits(new) {
                parent[b] = a;
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

/// Direct scan: a triangle `a b c` plus private outer vertices for its three
/// edges, pairwise non-adjacent.
fn three_sun_by_triangles(g: &Graph) -> Option<SunCertificate> {
    let r = g.rows();
    for a in 0..g.n() {
        for b in Bits(r[a] & !crate::graph::low_mask(a + 1)) {
            for c in Bits(r[a] & r[b] & !crate::graph::low_mask(b + 1)) {
                let on_ab = r[a] & r[b] & !r[c] & !bit(c);
                let on_bc = r[b] & r[c] & !r[a] & !bit(a);
                let on_ca = r[c] & r[a] & !r[b] & !bit(b);
                for x in Bits(on_ab) {
                    for y in Bits(on_bc & !r[x]) {
                        if let Some(z) = Bits(on_ca & !r[x] & !r[y]).next() {
                            return Some(three_sun([a, b, c], [x, y, z]));
                        }
                    }
                }
            }
        }
    }
    None
}

/// Induced 3-sun in a chordal graph. The neighborhood path walk from
/// simplicial vertices runs first; when it produces nothing, a direct
/// triangle scan settles the question, so the answer is exact.
pub fn find_three_sun_chordal(g: &Graph) -> Result<Option<SunCertificate>> {
    let verdict = check_chordal(g);
    if let Some(hole) = verdict.hole {
        return Err(Error::NotChordal(hole));
    }
    Ok(three_sun_by_path_walk(g).or_else(|| three_sun_by_triangles(g)))
}

/// An extended sun found on an inner Hamiltonian cycle: `groups[i]` is the
/// simplicial clique attached to `cycle[i]`, `cycle[i + 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtendedSunStructure {
    pub cycle: Vec<usize>,
    pub groups: Vec<VertexSet>,
}

impl ExtendedSunStructure {
    pub fn k(&self) -> usize {
        self.cycle.len()
    }

    /// Checks that `g` is the extended sun this structure describes.
    pub fn verify(&self, g: &Graph) -> bool {
        let k = self.cycle.len();
        if k < 3 || self.groups.len() != k {
            return false;
        }
        let inner: VertexSet = self.cycle.iter().copied().collect();
        let outer = self.groups.iter().fold(VertexSet::EMPTY, |a, &b| a.union(b));
        let total: usize = self.groups.iter().map(|s| s.len()).sum();
        if inner.len() != k || total != outer.len() || !inner.intersection(outer).is_empty() || inner.union(outer) != g.vertices() {
            return false;
        }
        let simp = simplicial_vertices(g);
        (0..k).all(|i| g.has_edge(self.cycle[i], self.cycle[(i + 1) % k]))
            && self.groups.iter().enumerate().all(|(i, &grp)| {
                let ends: VertexSet = [self.cycle[i], self.cycle[(i + 1) % k]].into_iter().collect();
                !grp.is_empty()
                    && g.is_clique(grp)
                    && grp.is_subset(simp)
                    && grp.iter().all(|u| ends.is_subset(g.neighbors(u)))
            })
    }
}

/// Why the embedding construction does not apply.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum Inapplicable {
    /// Fewer than three vertices remain after removing simplicial ones.
    StrippedTooSmall { remaining: usize },
    /// The non-simplicial vertices induce a non-Hamiltonian graph.
    NotHamiltonian { stripped: VertexSet },
    /// Hamiltonian cycles exist, but none lets every simplicial vertex sit
    /// on a cycle edge inside a clique group.
    NoCompatibleCycle { cycles_tried: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Embedding {
    /// The extended sun; vertices `0..n` are the input's, later ones fresh.
    #[serde(skip)]
    pub graph: Graph,
    pub structure: ExtendedSunStructure,
    pub added: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum EmbedOutcome {
    Embedded(Embedding),
    Inapplicable(Inapplicable),
}

/// Cap on Hamiltonian cycles examined before giving up on compatibility.
const CYCLE_BUDGET: usize = 200_000;

/// Groups simplicial vertices onto the first cycle edge whose two ends they
/// both see, provided the grouping forms valid extended-sun parts.
fn assign_groups(g: &Graph, cycle: &[usize], simplicial: VertexSet) -> Option<Vec<VertexSet>> {
    let k = cycle.len();
    let mut groups = vec![VertexSet::EMPTY; k];
    for s in simplicial {
        let i = (0..k).find(|&i| g.has_edge(s, cycle[i]) && g.has_edge(s, cycle[(i + 1) % k]))?;
        groups[i].insert(s);
    }
    groups.iter().all(|&grp| g.is_clique(grp)).then_some(groups)
}

fn structure_on_cycles(g: &Graph) -> std::result::Result<(Vec<usize>, Vec<VertexSet>), Inapplicable> {
    let simplicial = simplicial_vertices(g);
    let stripped = g.vertices().difference(simplicial);
    if stripped.len() < 3 {
        return Err(Inapplicable::StrippedTooSmall { remaining: stripped.len() });
    }
    let mut tried = 0;
    let mut found = None;
    for_each_hamiltonian_cycle(g, stripped, |cycle| {
        tried += 1;
        if let Some(groups) = assign_groups(g, cycle, simplicial) {
            found = Some((cycle.to_vec(), groups));
            return ControlFlow::Break(());
        }
        if tried >= CYCLE_BUDGET {
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    match found {
        Some(f) => Ok(f),
        None if tried == 0 => Err(Inapplicable::NotHamiltonian { stripped }),
        None => Err(Inapplicable::NoCompatibleCycle { cycles_tried: tried }),
    }
}

/// Recognizes `g` itself as an extended sun (every cycle edge already
/// carries a simplicial clique).
pub fn recognize_extended_sun(g: &Graph) -> Option<ExtendedSunStructure> {
    let simplicial = simplicial_vertices(g);
    let stripped = g.vertices().difference(simplicial);
    if stripped.len() < 3 {
        return None;
    }
    let mut found = None;
    let mut tried = 0;
    for_each_hamiltonian_cycle(g, stripped, |cycle| {
        tried += 1;
        if let Some(groups) = assign_groups(g, cycle, simplicial) {
            if groups.iter().all(|grp| !grp.is_empty()) {
                found = Some(ExtendedSunStructure { cycle: cycle.to_vec(), groups });
                return ControlFlow::Break(());
            }
        }
        if tried >= CYCLE_BUDGET {
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    found
}

/// Embeds a chordal block with a simplicial vertex into an extended sun:
/// strip the simplicial vertices, take a Hamiltonian cycle of the rest on
/// which every simplicial vertex sits over a cycle edge, and give each bare
/// cycle edge (in cycle order) a fresh vertex adjacent to its two ends.
pub fn embed_in_extended_sun(g: &Graph) -> Result<EmbedOutcome> {
    if let Some(hole) = check_chordal(g).hole {
        return Err(Error::NotChordal(hole));
    }
    if !g.is_block() {
        return Err(Error::Precondition("embedding needs a 2-connected graph (a block)".into()));
    }
    if simplicial_vertices(g).is_empty() {
        return Err(Error::Precondition("embedding needs a simplicial vertex".into()));
    }
    let (cycle, mut groups) = match structure_on_cycles(g) {
        Ok(x) => x,
        Err(why) => return Ok(EmbedOutcome::Inapplicable(why)),
    };
    let k = cycle.len();
    let mut graph = g.clone();
    let mut added = Vec::new();
    for i in 0..k {
        if groups[i].is_empty() {
            let ends: VertexSet = [cycle[i], cycle[(i + 1) % k]].into_iter().collect();
            graph = graph.with_vertex(ends)?;
            let fresh = graph.n() - 1;
            groups[i].insert(fresh);
            added.push(fresh);
        }
    }
    let structure = ExtendedSunStructure { cycle, groups };
    debug_assert!(structure.verify(&graph));
    Ok(EmbedOutcome::Embedded(Embedding { graph, structure, added }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    fn fig1() -> Graph {
        make_extended_sun(5, &[2, 1, 1, 1, 2], &"1-3,1-4".parse().unwrap()).unwrap()
    }

    #[test]
    fn sun_round_trip() {
        for k in 3..8 {
            for inner in [InnerChords::None, InnerChords::Complete] {
                let g = make_sun(k, &inner).unwrap();
                let c = find_induced_sun(&g, ParityFilter::Any, k).unwrap();
                assert!(c.verify(&g));
            }
        }
        let c = find_induced_sun(&make_sun(3, &InnerChords::None).unwrap(), ParityFilter::Any, 3).unwrap();
        assert_eq!(c.k, 3);
        assert_eq!(c.vertices().len(), 6);
    }

    #[test]
    fn chorded_five_sun_with_spread_outer_vertices() {
        let g = fig1();
        let c = find_induced_sun(&g, ParityFilter::Odd, 5).unwrap();
        assert!(c.verify(&g));
        // {A_1 rep, v_1, v_2, v_5, v_4, A_5 rep}: A_1 = {5, 6}, A_5 = {10, 11}
        let hand = SunCertificate { k: 3, inner: vec![0, 1, 4], outer: vec![5, 3, 10], parity: Parity::Odd };
        assert!(hand.verify(&g));
    }

    #[test]
    fn trees_have_no_suns() {
        let t = crate::chordal::random_chordal(14, 0.0, 5).unwrap();
        assert!(find_induced_sun(&t, ParityFilter::Any, 7).is_none());
        assert!(find_three_sun_chordal(&t).unwrap().is_none());
    }

    #[test]
    fn certificate_rejects_broken_witnesses() {
        let g = make_sun(3, &InnerChords::None).unwrap();
        let good = SunCertificate { k: 3, inner: vec![0, 1, 2], outer: vec![3, 4, 5], parity: Parity::Odd };
        assert!(good.verify(&g));
        let swapped = SunCertificate { outer: vec![4, 3, 5], ..good.clone() };
        assert!(!swapped.verify(&g));
        let wrong_parity = SunCertificate { parity: Parity::Even, ..good.clone() };
        assert!(!wrong_parity.verify(&g));
    }

    #[test]
    fn three_sun_finder() {
        let s3 = make_sun(3, &InnerChords::None).unwrap();
        let c = find_three_sun_chordal(&s3).unwrap().unwrap();
        assert_eq!(c.vertices(), s3.vertices());
        assert!(find_three_sun_chordal(&make_complete(6).unwrap()).unwrap().is_none());
        let even = make_sun(4, &InnerChords::Complete).unwrap();
        assert!(find_three_sun_chordal(&even).unwrap().is_none());
        assert!(find_induced_sun(&even, ParityFilter::Odd, 4).is_none());
        assert!(matches!(find_three_sun_chordal(&make_cycle(5).unwrap()), Err(Error::NotChordal(_))));
    }

    #[test]
    fn path_walk_finds_sun_in_chorded_five_sun() {
        let c = three_sun_by_path_walk(&make_sun(3, &InnerChords::None).unwrap()).unwrap();
        assert_eq!(c.k, 3);
    }

    #[test]
    fn super_sun_detection() {
        let g = make_super_sun(3, &[4, 4, 4], &InnerChords::None).unwrap();
        let c = find_induced_super_sun(&g, SpokeRule::Decoupled, ParityFilter::Odd, 5).unwrap();
        assert!(c.verify(&g));
        assert_eq!(c.spoke_sizes(), vec![4, 4, 4]);
        assert!(find_induced_super_sun(&g, SpokeRule::Tied, ParityFilter::Odd, 5).is_none());
        assert!(find_induced_super_sun(&g, SpokeRule::Decoupled, ParityFilter::Even, 5).is_none());
        assert_eq!(SpokeRule::Decoupled.smallest_odd_size(), 15);
        assert_eq!(SpokeRule::Tied.smallest_odd_size(), 33);
        assert_eq!(SpokeRule::SunInclusive.smallest_odd_size(), 6);
    }

    #[test]
    fn embedding_fixed_point_and_inverse() {
        let s3 = make_sun(3, &InnerChords::None).unwrap();
        match embed_in_extended_sun(&s3).unwrap() {
            EmbedOutcome::Embedded(e) => {
                assert!(e.added.is_empty());
                assert_eq!(e.graph, s3);
            }
            other => panic!("{other:?}"),
        }

        let full = make_extended_sun(5, &[1, 2, 1, 1, 1], &InnerChords::Fan).unwrap();
        assert!(recognize_extended_sun(&full).is_some());
        // drop A_3 (vertex 8, attached to v_3 v_4)
        let (g, _) = full.remove_vertex(8).unwrap();
        assert!(recognize_extended_sun(&g).is_none());
        match embed_in_extended_sun(&g).unwrap() {
            EmbedOutcome::Embedded(e) => {
                assert_eq!(e.added.len(), 1);
                assert!(e.structure.verify(&e.graph));
                let (back, _) = e.graph.induced_subgraph(g.vertices()).unwrap();
                assert_eq!(back, g);
                let fresh = e.added[0];
                assert_eq!(e.graph.neighbors(fresh), [2, 3].into_iter().collect());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn embedding_preconditions() {
        assert!(matches!(embed_in_extended_sun(&make_cycle(4).unwrap()), Err(Error::NotChordal(_))));
        assert!(matches!(embed_in_extended_sun(&make_path(4).unwrap()), Err(Error::Precondition(_))));
        assert_eq!(
            embed_in_extended_sun(&make_complete(4).unwrap()).unwrap(),
            EmbedOutcome::Inapplicable(Inapplicable::StrippedTooSmall { remaining: 0 })
        );
    }
}
