//! S-perfection: a brute-force decision over connected induced subgraphs
//! with minimal witnesses, the odd-sun criterion for chordal graphs, and the
//! structural checks expected of minimal S-imperfect graphs.

use serde::Serialize;

use crate::chordal::{check_chordal, is_chordal};
use crate::error::{Error, Result};
use crate::formats::to_graph6;
use crate::graph::{bit, Bits, Graph, VertexSet};
use crate::hamilton::hamiltonian_cycle;
use crate::solvers::{balanced_connected, values_in};
use crate::sun::{find_induced_sun, ParityFilter, SunCertificate};

/// Largest graph the brute-force decision accepts.
pub const BRUTE_PERFECTION_LIMIT: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PerfectionMethod {
    Brute,
    ChordalTheorem,
}

/// A minimal S-imperfect induced subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Vertices of the host graph inducing the witness.
    pub vertices: VertexSet,
    pub graph6: String,
    pub alpha_s: usize,
    pub theta_s: usize,
}

impl Witness {
    pub fn graph(&self, host: &Graph) -> Result<Graph> {
        Ok(host.induced_subgraph(self.vertices)?.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerfectionVerdict {
    pub is_s_perfect: bool,
    pub method: PerfectionMethod,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sun: Option<SunCertificate>,
}

fn guard(g: &Graph) -> Result<()> {
    if g.n() > BRUTE_PERFECTION_LIMIT {
        Err(Error::SizeGuard { n: g.n(), limit: BRUTE_PERFECTION_LIMIT })
    } else {
        Ok(())
    }
}

/// Memoized balance test over vertex masks of one graph.
struct Checker<'a> {
    adj: &'a [u64],
    memo: Vec<u8>,
}

impl<'a> Checker<'a> {
    fn new(g: &'a Graph) -> Self {
        Checker { adj: g.rows(), memo: vec![0; 1usize << g.n()] }
    }

    fn balanced(&mut self, mask: u64) -> bool {
        let slot = &mut self.memo[mask as usize];
        if *slot == 0 {
            *slot = if balanced_connected(self.adj, mask) { 1 } else { 2 };
        }
        *slot == 1
    }

    /// First connected subset of `within` (in expansion order) whose two
    /// parameters differ.
    fn first_unbalanced(&mut self, within: u64) -> Option<u64> {
        for v in Bits(within) {
            let lower = within & crate::graph::low_mask(v);
            let ext = self.adj[v] & within & !lower;
            if let Some(m) = self.expand(bit(v), ext, !within | lower | bit(v)) {
                return Some(m);
            }
        }
        None
    }

    /// Connected-subset expansion: each connected set is reached once, from
    /// its smallest vertex, by adding frontier vertices in increasing order
    /// and banning the ones already branched on.
    fn expand(&mut self, set: u64, mut ext: u64, mut banned: u64) -> Option<u64> {
        if !self.balanced(set) {
            return Some(set);
        }
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            banned |= bit(w);
            let grown = set | bit(w);
            let next = ext | (self.adj[w] & !grown & !banned);
            if let Some(m) = self.expand(grown, next, banned) {
                return Some(m);
            }
        }
        None
    }

    /// Deletes vertices in ascending order while the rest stays imperfect,
    /// restarting after every deletion.
    fn minimize(&mut self, mut w: u64) -> u64 {
        'outer: loop {
            for v in Bits(w) {
                let rest = w & !bit(v);
                if self.first_unbalanced(rest).is_some() {
                    w = rest;
                    continue 'outer;
                }
            }
            return w;
        }
    }
}

fn witness_of(g: &Graph, mask: u64) -> Witness {
    let vertices = VertexSet(mask);
    let (alpha_s, theta_s) = values_in(g.rows(), mask);
    let sub = g.induced_subgraph(vertices).expect("mask within graph").0;
    Witness { vertices, graph6: to_graph6(&sub), alpha_s, theta_s }
}

/// Decides S-perfection by checking `α_S = θ_S` on every connected induced
/// subgraph (disconnected ones follow by additivity). Imperfect graphs come
/// with a minimal S-imperfect witness.
pub fn is_s_perfect_brute(g: &Graph) -> Result<PerfectionVerdict> {
    guard(g)?;
    let mut checker = Checker::new(g);
    let found = checker.first_unbalanced(g.vertices().bits());
    let witness = found.map(|m| witness_of(g, checker.minimize(m)));
    Ok(PerfectionVerdict {
        is_s_perfect: witness.is_none(),
        method: PerfectionMethod::Brute,
        witness,
        sun: None,
    })
}

/// Chordal graphs are S-perfect exactly when they contain no induced odd
/// sun; a negative verdict carries the sun.
pub fn is_s_perfect_chordal(g: &Graph) -> Result<PerfectionVerdict> {
    if let Some(hole) = check_chordal(g).hole {
        return Err(Error::NotChordal(hole));
    }
    let sun = find_induced_sun(g, ParityFilter::Odd, g.n() / 2);
    Ok(PerfectionVerdict {
        is_s_perfect: sun.is_none(),
        method: PerfectionMethod::ChordalTheorem,
        witness: None,
        sun,
    })
}

/// `α_S ≠ θ_S` while every single-vertex deletion is S-perfect.
pub fn verify_minimal_imperfect(g: &Graph) -> Result<bool> {
    guard(g)?;
    let all = g.vertices().bits();
    let (a, t) = values_in(g.rows(), all);
    if a == t {
        return Ok(false);
    }
    let mut checker = Checker::new(g);
    Ok(Bits(all).all(|v| checker.first_unbalanced(all & !bit(v)).is_none()))
}

/// Structural profile of a minimal S-imperfect graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalImperfectProperties {
    pub n: usize,
    pub alpha_s: usize,
    pub theta_s: usize,
    pub connected: bool,
    pub chordal: bool,
    pub block: bool,
    /// A pair `(u, v)` of distinct vertices with `N(u) ⊆ N(v)`, if any.
    pub nested_open: Option<(usize, usize)>,
    /// A pair `(u, v)` of distinct vertices with `N[u] ⊆ N[v]`, if any.
    /// Informational only.
    pub nested_closed: Option<(usize, usize)>,
    pub hamiltonian_cycle: Option<Vec<usize>>,
}

impl MinimalImperfectProperties {
    pub fn gap(&self) -> usize {
        self.theta_s - self.alpha_s
    }

    pub fn gap_is_one(&self) -> bool {
        self.gap() == 1
    }

    pub fn no_nested_neighborhoods(&self) -> bool {
        self.nested_open.is_none()
    }

    pub fn hamiltonian(&self) -> bool {
        self.hamiltonian_cycle.is_some()
    }

    /// Names of expected properties that fail. Chordal witnesses must also
    /// have gap one and be Hamiltonian.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.connected {
            out.push("connected");
        }
        if !self.block {
            out.push("block");
        }
        if !self.no_nested_neighborhoods() {
            out.push("no nested neighborhoods");
        }
        if self.chordal && !self.gap_is_one() {
            out.push("gap one");
        }
        if self.chordal && !self.hamiltonian() {
            out.push("hamiltonian");
        }
        out
    }

    pub fn passes(&self) -> bool {
        self.failures().is_empty()
    }
}

fn nested_pair(g: &Graph, closed: bool) -> Option<(usize, usize)> {
    let nb = |v| if closed { g.closed_neighborhood(v) } else { g.neighbors(v) };
    (0..g.n())
        .flat_map(|u| (0..g.n()).map(move |v| (u, v)))
        .find(|&(u, v)| u != v && nb(u).is_subset(nb(v)))
}

/// Evaluates the structural properties of a minimal S-imperfect graph.
pub fn minimal_imperfect_properties(w: &Graph) -> Result<MinimalImperfectProperties> {
    if !verify_minimal_imperfect(w)? {
        return Err(Error::Precondition("graph is not minimal S-imperfect".into()));
    }
    let (alpha_s, theta_s) = values_in(w.rows(), w.vertices().bits());
    Ok(MinimalImperfectProperties {
        n: w.n(),
        alpha_s,
        theta_s,
        connected: w.is_connected(),
        chordal: is_chordal(w),
        block: w.is_block(),
        nested_open: nested_pair(w, false),
        nested_closed: nested_pair(w, true),
        hamiltonian_cycle: hamiltonian_cycle(w, w.vertices()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn cycles() {
        let c7 = make_cycle(7).unwrap();
        let v = is_s_perfect_brute(&c7).unwrap();
        assert!(!v.is_s_perfect);
        let w = v.witness.unwrap();
        assert_eq!(w.vertices, c7.vertices());
        assert_eq!((w.alpha_s, w.theta_s), (2, 3));
        assert!(is_s_perfect_brute(&make_cycle(9).unwrap()).unwrap().is_s_perfect);
        assert!(is_s_perfect_brute(&make_path(9).unwrap()).unwrap().is_s_perfect);
    }

    #[test]
    fn three_sun() {
        let s = make_sun(3, &InnerChords::None).unwrap();
        let v = is_s_perfect_brute(&s).unwrap();
        let w = v.witness.unwrap();
        assert_eq!(w.vertices, s.vertices());
        assert_eq!((w.alpha_s, w.theta_s), (1, 2));
        let t = is_s_perfect_chordal(&s).unwrap();
        assert!(!t.is_s_perfect);
        assert!(t.sun.unwrap().verify(&s));
    }

    #[test]
    fn witness_is_minimal_inside_larger_graph() {
        // C_5 with a pendant path stays imperfect; the witness is the C_5
        let g = Graph::new(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5), (5, 6), (6, 7)]).unwrap();
        let v = is_s_perfect_brute(&g).unwrap();
        let w = v.witness.unwrap();
        let wg = w.graph(&g).unwrap();
        assert!(verify_minimal_imperfect(&wg).unwrap());
        assert_eq!(w.vertices, [0, 1, 2, 3, 4].into_iter().collect());
    }

    #[test]
    fn chordal_rejects_holes() {
        assert!(matches!(is_s_perfect_chordal(&make_cycle(4).unwrap()), Err(Error::NotChordal(_))));
        let t = crate::chordal::random_chordal(20, 0.0, 1).unwrap();
        assert!(is_s_perfect_chordal(&t).unwrap().is_s_perfect);
    }

    #[test]
    fn size_guard() {
        assert!(matches!(is_s_perfect_brute(&make_path(15).unwrap()), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn properties() {
        let p = minimal_imperfect_properties(&make_cycle(7).unwrap()).unwrap();
        assert!(p.block && p.no_nested_neighborhoods() && p.gap_is_one() && p.passes());
        let c4 = minimal_imperfect_properties(&make_cycle(4).unwrap()).unwrap();
        assert_eq!((c4.alpha_s, c4.theta_s), (1, 2));
        assert_eq!(c4.nested_open, Some((0, 2)));
        assert_eq!(c4.nested_closed, None);
        // the 3-sun is minimal S-imperfect yet an outer vertex's neighborhood
        // sits inside the opposite inner vertex's
        let s = minimal_imperfect_properties(&make_sun(3, &InnerChords::None).unwrap()).unwrap();
        assert!(s.chordal && s.block && s.gap_is_one() && s.hamiltonian());
        assert_eq!(s.nested_open, Some((3, 2)));
        assert_eq!(s.failures(), vec!["no nested neighborhoods"]);
        assert!(matches!(minimal_imperfect_properties(&make_path(4).unwrap()), Err(Error::Precondition(_))));
    }
}
