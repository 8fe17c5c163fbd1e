//! Simple undirected graphs on at most 64 vertices.
//!
//! Every adjacency row is a single `u64` word, so vertex sets are plain
//! bitmasks and most neighborhood manipulations are a handful of word
//! operations. Graphs are immutable; operations that remove or select
//! vertices return a new graph together with the map from new to original
//! labels.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Hard vertex ceiling: one adjacency word per row.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of vertices stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(bit(v))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !bit(v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Bits;
    fn into_iter(self) -> Bits {
        self.iter()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = vs.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} beyond ceiling")));
        }
        Ok(vs.into_iter().collect())
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

/// Immutable simple undirected graph.
///
/// Equality compares vertex count and edges; display labels are ignored.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().collect();
        f.debug_struct("Graph").field("n", &self.n).field("edges", &edges).finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs collapse; self-loops
    /// and out-of-range endpoints are rejected with the offending pair.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n], labels: None })
    }

    /// Builds from raw rows. Rows must already be symmetric and loop-free.
    pub(crate) fn from_rows(adj: Vec<u64>) -> Self {
        let n = adj.len();
        debug_assert!(n <= MAX_VERTICES);
        debug_assert!((0..n).all(|v| adj[v] & bit(v) == 0 && adj[v] & !low_mask(n) == 0));
        debug_assert!((0..n).all(|u| Bits(adj[u]).all(|v| adj[v] & bit(u) != 0)));
        Graph { n, adj, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | bit(v))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.bits() & !bit(v) & !self.adj[v] == 0)
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.bits() == 0)
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        if s.bits() & !low_mask(self.n) != 0 {
            let vertex = (s.bits() & !low_mask(self.n)).trailing_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex, n: self.n });
        }
        Ok(())
    }

    /// `G[s]`, relabeled `0..|s|` in ascending original order. The returned
    /// map sends each new label to its original vertex.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(s)?;
        let map = s.to_vec();
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (i, &v) in map.iter().enumerate() {
            pos[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| Bits(self.adj[v] & s.bits()).fold(0u64, |row, w| row | bit(pos[w])))
            .collect();
        let mut h = Graph::from_rows(adj);
        if let Some(labels) = &self.labels {
            h.labels = Some(map.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok((h, map))
    }

    pub fn remove_vertex(&self, v: usize) -> Result<(Graph, Vec<usize>)> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut s = self.vertices();
        s.remove(v);
        self.induced_subgraph(s)
    }

    /// Returns a copy with one extra vertex (label `n`) adjacent to `nbrs`.
    pub fn with_vertex(&self, nbrs: VertexSet) -> Result<Graph> {
        self.check_set(nbrs)?;
        if self.n + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices { n: self.n + 1, max: MAX_VERTICES });
        }
        let v = self.n;
        let mut adj = self.adj.clone();
        for w in nbrs {
            adj[w] |= bit(v);
        }
        adj.push(nbrs.bits());
        let mut g = Graph::from_rows(adj);
        if let Some(labels) = &self.labels {
            let mut l = labels.clone();
            l.push(v.to_string());
            g.labels = Some(l);
        }
        Ok(g)
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << self.n));
        Ok(Graph::from_rows(adj))
    }

    pub fn complement(&self) -> Graph {
        let full = low_mask(self.n);
        Graph::from_rows((0..self.n).map(|v| full & !self.adj[v] & !bit(v)).collect())
    }

    /// Breadth-first hop counts between every ordered pair.
    pub fn distance_matrix(&self) -> DistanceMatrix {
        let n = self.n;
        let mut d = vec![DistanceMatrix::UNREACHABLE; n * n];
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            row[s] = 0;
            let mut frontier = bit(s);
            let mut seen = bit(s);
            let mut depth = 0;
            while frontier != 0 {
                depth += 1;
                let next = Bits(frontier).fold(0, |acc, v| acc | self.adj[v]) & !seen;
                for v in Bits(next) {
                    row[v] = depth;
                }
                seen |= next;
                frontier = next;
            }
        }
        DistanceMatrix { n, d }
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        components_within(&self.adj, low_mask(self.n))
            .into_iter()
            .map(VertexSet)
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && component_of(&self.adj, low_mask(self.n), 0) == low_mask(self.n)
    }

    /// Cut vertices and blocks (maximal 2-connected pieces, bridges and
    /// isolated vertices).
    pub fn block_decomposition(&self) -> BlockDecomposition {
        BlockDecomposition::compute(self)
    }

    /// Connected with no cut vertex.
    pub fn is_block(&self) -> bool {
        self.is_connected() && self.block_decomposition().cut_vertices.is_empty()
    }

    /// Same vertices; `u ~ v` iff their distance in `self` is 1 or 2.
    pub fn square(&self) -> Graph {
        Graph::from_rows(square_rows(&self.adj, low_mask(self.n)))
    }
}

/// Vertices reachable from `start` inside `mask`.
pub(crate) fn component_of(adj: &[u64], mask: u64, start: usize) -> u64 {
    let mut seen = bit(start) & mask;
    let mut frontier = seen;
    while frontier != 0 {
        let next = Bits(frontier).fold(0, |acc, v| acc | adj[v]) & mask & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

pub(crate) fn components_within(adj: &[u64], mask: u64) -> Vec<u64> {
    let mut rest = mask;
    let mut out = Vec::new();
    while rest != 0 {
        let c = component_of(adj, mask, rest.trailing_zeros() as usize);
        out.push(c);
        rest &= !c;
    }
    out
}

/// Rows of the square of `G[mask]`, indexed by original vertex (rows outside
/// `mask` are zero).
pub(crate) fn square_rows(adj: &[u64], mask: u64) -> Vec<u64> {
    let mut out = vec![0u64; adj.len()];
    for v in Bits(mask) {
        let n1 = adj[v] & mask;
        let n2 = Bits(n1).fold(n1, |acc, w| acc | adj[w]) & mask;
        out[v] = n2 & !bit(v);
    }
    out
}

/// All-pairs hop distances; unreachable pairs read back as `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    const UNREACHABLE: u32 = u32::MAX;

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        match self.d[u * self.n + v] {
            Self::UNREACHABLE => None,
            d => Some(d),
        }
    }

    pub fn is_reachable(&self, u: usize, v: usize) -> bool {
        self.get(u, v).is_some()
    }

    /// True when `u` and `v` are at distance at least `k` (unreachable counts).
    pub fn at_least(&self, u: usize, v: usize, k: u32) -> bool {
        self.get(u, v).is_none_or(|d| d >= k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub cut_vertices: VertexSet,
    pub blocks: Vec<VertexSet>,
}

impl BlockDecomposition {
    fn compute(g: &Graph) -> Self {
        struct Dfs<'a> {
            g: &'a Graph,
            disc: Vec<usize>,
            low: Vec<usize>,
            time: usize,
            stack: Vec<(usize, usize)>,
            blocks: Vec<VertexSet>,
            cuts: VertexSet,
        }

        impl Dfs<'_> {
            fn visit(&mut self, u: usize, parent: Option<usize>) {
                self.time += 1;
                self.disc[u] = self.time;
                self.low[u] = self.time;
                let mut children = 0;
                for w in self.g.neighbors(u) {
                    if self.disc[w] == 0 {
                        children += 1;
                        self.stack.push((u, w));
                        self.visit(w, Some(u));
                        self.low[u] = self.low[u].min(self.low[w]);
                        if self.low[w] >= self.disc[u] {
                            if parent.is_some() {
                                self.cuts.insert(u);
                            }
                            let mut block = VertexSet::EMPTY;
                            while let Some((a, b)) = self.stack.pop() {
                                block.insert(a);
                                block.insert(b);
                                if (a, b) == (u, w) {
                                    break;
                                }
                            }
                            self.blocks.push(block);
                        }
                    } else if Some(w) != parent && self.disc[w] < self.disc[u] {
                        self.stack.push((u, w));
                        self.low[u] = self.low[u].min(self.disc[w]);
                    }
                }
                if parent.is_none() && children > 1 {
                    self.cuts.insert(u);
                }
            }
        }

        let mut dfs = Dfs {
            g,
            disc: vec![0; g.n],
            low: vec![0; g.n],
            time: 0,
            stack: Vec::new(),
            blocks: Vec::new(),
            cuts: VertexSet::EMPTY,
        };
        for v in 0..g.n {
            if dfs.disc[v] == 0 {
                if g.degree(v) == 0 {
                    dfs.disc[v] = usize::MAX;
                    dfs.blocks.push(VertexSet::singleton(v));
                } else {
                    dfs.visit(v, None);
                }
            }
        }
        let mut blocks = dfs.blocks;
        blocks.sort_by_key(|b| (b.first(), b.bits()));
        BlockDecomposition { cut_vertices: dfs.cuts, blocks }
    }
}
