//! Constructors for the named graph families.
//!
//! Vertex numbering is fixed per family so certificates in tests stay
//! stable:
//!
//! * path / cycle: `0..k` in order; star: center `0`, leaves `1..=n`.
//! * sun, extended sun, super sun: inner cycle `v_1..v_k` is `0..k`; the
//!   outer parts follow in order `A_1, A_2, ..., A_k`, each block
//!   consecutive. `A_i` attaches to `v_i = i - 1` and `v_{i+1} = i mod k`.
//!   Super-sun spokes list their path from the `v_i` end to the `v_{i+1}`
//!   end.
//! * special path: path `0..len`, then one apex per selected edge in the
//!   order the edges were given.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn checked_size(n: usize) -> Result<usize> {
    if n > MAX_VERTICES {
        Err(Error::TooManyVertices { n, max: MAX_VERTICES })
    } else {
        Ok(n)
    }
}

pub fn make_path(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(invalid("path needs k >= 1"));
    }
    let e: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    Graph::new(checked_size(k)?, &e)
}

pub fn make_cycle(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(invalid("cycle needs k >= 3"));
    }
    let e: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    Graph::new(checked_size(k)?, &e)
}

pub fn make_complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(invalid("complete graph needs n >= 1"));
    }
    let e: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Graph::new(checked_size(n)?, &e)
}

/// `K_{1,n}` with center `0`.
pub fn make_star(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(invalid("star needs n >= 1 leaves"));
    }
    let e: Vec<_> = (1..=n).map(|i| (0, i)).collect();
    Graph::new(checked_size(n + 1)?, &e)
}

/// Which chords the inner Hamiltonian cycle `v_1..v_k` carries.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum InnerChords {
    /// Chordless inner cycle.
    #[default]
    None,
    /// Every chord from `v_1`.
    Fan,
    /// Inner vertices form a clique.
    Complete,
    /// Explicit chords between inner positions (0-based).
    Explicit(Vec<(usize, usize)>),
}

impl InnerChords {
    fn edges(&self, k: usize) -> Result<Vec<(usize, usize)>> {
        let mut e: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        match self {
            InnerChords::None => {}
            InnerChords::Fan => e.extend((2..k - 1).map(|j| (0, j))),
            InnerChords::Complete => e.extend((0..k).flat_map(|i| (i + 2..k).map(move |j| (i, j)))),
            InnerChords::Explicit(chords) => {
                for &(a, b) in chords {
                    if a >= k || b >= k || a == b {
                        return Err(invalid(format!("chord ({a}, {b}) invalid for an inner cycle of {k}")));
                    }
                    e.push((a, b));
                }
            }
        }
        Ok(e)
    }
}

impl fmt::Display for InnerChords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InnerChords::None => f.write_str("none"),
            InnerChords::Fan => f.write_str("fan"),
            InnerChords::Complete => f.write_str("complete"),
            InnerChords::Explicit(c) => {
                let parts: Vec<_> = c.iter().map(|(a, b)| format!("{a}-{b}")).collect();
                f.write_str(&parts.join(","))
            }
        }
    }
}

impl FromStr for InnerChords {
    type Err = Error;

    /// `none`, `fan`, `complete`, or a chord list such as `1-3,1-4`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(InnerChords::None),
            "fan" => Ok(InnerChords::Fan),
            "complete" => Ok(InnerChords::Complete),
            _ => s
                .split(',')
                .map(|pair| {
                    let (a, b) = pair.split_once('-').ok_or_else(|| invalid(format!("unknown chord policy {s:?}")))?;
                    let a = a.trim().parse().map_err(|_| invalid(format!("bad chord {pair:?}")))?;
                    let b = b.trim().parse().map_err(|_| invalid(format!("bad chord {pair:?}")))?;
                    Ok((a, b))
                })
                .collect::<Result<Vec<_>>>()
                .map(InnerChords::Explicit),
        }
    }
}

/// k-sun: every outer part is a single vertex.
pub fn make_sun(k: usize, inner: &InnerChords) -> Result<Graph> {
    make_extended_sun(k, &vec![1; k], inner)
}

/// k-extended sun with `|A_i| = sizes[i-1]`.
pub fn make_extended_sun(k: usize, sizes: &[usize], inner: &InnerChords) -> Result<Graph> {
    if k < 3 {
        return Err(invalid("extended sun needs k >= 3"));
    }
    if sizes.len() != k {
        return Err(invalid(format!("{} clique sizes for k = {k}", sizes.len())));
    }
    if let Some(i) = sizes.iter().position(|&s| s == 0) {
        return Err(invalid(format!("|A_{}| = 0", i + 1)));
    }
    let n = checked_size(k + sizes.iter().sum::<usize>())?;
    let mut e = inner.edges(k)?;
    let mut next = k;
    for (i, &s) in sizes.iter().enumerate() {
        let block: Vec<usize> = (next..next + s).collect();
        for (a, &x) in block.iter().enumerate() {
            e.push((x, i));
            e.push((x, (i + 1) % k));
            e.extend(block[a + 1..].iter().map(|&y| (x, y)));
        }
        next += s;
    }
    Graph::new(n, &e)
}

/// Spoke sizes `3t + 1` with `t >= 1`.
pub fn is_super_sun_spoke(size: usize) -> bool {
    size >= 4 && size % 3 == 1
}

/// k-super sun: spoke `i` is an induced path on `spokes[i-1]` vertices
/// whose ends attach to `v_i` and `v_{i+1}`.
pub fn make_super_sun(k: usize, spokes: &[usize], inner: &InnerChords) -> Result<Graph> {
    if let Some(&s) = spokes.iter().find(|&&s| !is_super_sun_spoke(s)) {
        return Err(invalid(format!("spoke size {s} is not of the form 3t+1 with t >= 1")));
    }
    super_sun_unchecked(k, spokes, inner)
}

/// Same construction without the spoke-size rule (size 1 gives a sun).
pub(crate) fn super_sun_unchecked(k: usize, spokes: &[usize], inner: &InnerChords) -> Result<Graph> {
    if k < 3 {
        return Err(invalid("super sun needs k >= 3"));
    }
    if spokes.len() != k {
        return Err(invalid(format!("{} spoke sizes for k = {k}", spokes.len())));
    }
    if spokes.contains(&0) {
        return Err(invalid("empty spoke"));
    }
    let n = checked_size(k + spokes.iter().sum::<usize>())?;
    let mut e = inner.edges(k)?;
    let mut next = k;
    for (i, &s) in spokes.iter().enumerate() {
        e.push((i, next));
        e.push((next + s - 1, (i + 1) % k));
        e.extend((next..next + s - 1).map(|x| (x, x + 1)));
        next += s;
    }
    Graph::new(n, &e)
}

/// Path on `path_len` vertices; each index `i` in `triangle_edges` adds a
/// fresh apex adjacent to `i` and `i + 1`.
pub fn make_special_path(path_len: usize, triangle_edges: &[usize]) -> Result<Graph> {
    if path_len < 2 {
        return Err(invalid("special path needs at least 2 path vertices"));
    }
    let n = checked_size(path_len + triangle_edges.len())?;
    let mut e: Vec<_> = (1..path_len).map(|i| (i - 1, i)).collect();
    for (a, &i) in triangle_edges.iter().enumerate() {
        if i + 1 >= path_len {
            return Err(invalid(format!("edge index {i} outside a path with {} edges", path_len - 1)));
        }
        if triangle_edges[..a].contains(&i) {
            return Err(invalid(format!("edge index {i} repeated")));
        }
        e.push((path_len + a, i));
        e.push((path_len + a, i + 1));
    }
    Graph::new(n, &e)
}

/// A named family plus its parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    Path { k: usize },
    Cycle { k: usize },
    Complete { n: usize },
    Star { n: usize },
    Sun { k: usize, inner: InnerChords },
    ExtendedSun { k: usize, sizes: Vec<usize>, inner: InnerChords },
    SuperSun { k: usize, spokes: Vec<usize>, inner: InnerChords },
    SpecialPath { len: usize, triangles: Vec<usize> },
    RandomChordal { n: usize, fill: f64, seed: u64 },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::Path { k } => make_path(*k),
            FamilySpec::Cycle { k } => make_cycle(*k),
            FamilySpec::Complete { n } => make_complete(*n),
            FamilySpec::Star { n } => make_star(*n),
            FamilySpec::Sun { k, inner } => make_sun(*k, inner),
            FamilySpec::ExtendedSun { k, sizes, inner } => make_extended_sun(*k, sizes, inner),
            FamilySpec::SuperSun { k, spokes, inner } => make_super_sun(*k, spokes, inner),
            FamilySpec::SpecialPath { len, triangles } => make_special_path(*len, triangles),
            FamilySpec::RandomChordal { n, fill, seed } => crate::chordal::random_chordal(*n, *fill, *seed),
        }
    }

    /// Parses the `key=value` config form, e.g. `family=sun k=5 inner=fan`
    /// or `family=extended_sun k=5 sizes=2,1,1,1,2 inner=1-3,1-4`.
    pub fn parse(text: &str) -> Result<FamilySpec> {
        let mut family = None;
        let mut kv = std::collections::BTreeMap::new();
        for tok in text.split_whitespace() {
            let (key, value) = tok.split_once('=').ok_or_else(|| invalid(format!("expected key=value, found {tok:?}")))?;
            if key == "family" {
                family = Some(value);
            } else if kv.insert(key, value).is_some() {
                return Err(invalid(format!("duplicate key {key:?}")));
            }
        }
        let family = family.ok_or_else(|| invalid("missing family=..."))?;
        let num = |key: &str| -> Result<usize> {
            kv.get(key)
                .ok_or_else(|| invalid(format!("family {family} needs {key}=...")))?
                .parse()
                .map_err(|_| invalid(format!("{key} must be a non-negative integer")))
        };
        let list = |key: &str| -> Result<Vec<usize>> {
            match kv.get(key) {
                None | Some(&"") => Ok(Vec::new()),
                Some(v) => v
                    .split(',')
                    .map(|x| x.parse().map_err(|_| invalid(format!("bad entry {x:?} in {key}"))))
                    .collect(),
            }
        };
        let inner = || -> Result<InnerChords> { kv.get("inner").map_or(Ok(InnerChords::None), |s| s.parse()) };
        let spec = match family {
            "path" => FamilySpec::Path { k: num("k")? },
            "cycle" => FamilySpec::Cycle { k: num("k")? },
            "complete" => FamilySpec::Complete { n: num("n")? },
            "star" => FamilySpec::Star { n: num("n")? },
            "sun" => FamilySpec::Sun { k: num("k")?, inner: inner()? },
            "extended_sun" => FamilySpec::ExtendedSun { k: num("k")?, sizes: list("sizes")?, inner: inner()? },
            "super_sun" => FamilySpec::SuperSun { k: num("k")?, spokes: list("spokes")?, inner: inner()? },
            "special_path" => FamilySpec::SpecialPath { len: num("len")?, triangles: list("triangles")? },
            "random_chordal" => FamilySpec::RandomChordal {
                n: num("n")?,
                fill: kv
                    .get("fill")
                    .ok_or_else(|| invalid("random_chordal needs fill=..."))?
                    .parse()
                    .map_err(|_| invalid("fill must be a number"))?,
                seed: num("seed")? as u64,
            },
            other => return Err(invalid(format!("unknown family {other:?}"))),
        };
        Ok(spec)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FamilySpec::parse(s)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            FamilySpec::Path { k } => write!(f, "family=path k={k}"),
            FamilySpec::Cycle { k } => write!(f, "family=cycle k={k}"),
            FamilySpec::Complete { n } => write!(f, "family=complete n={n}"),
            FamilySpec::Star { n } => write!(f, "family=star n={n}"),
            FamilySpec::Sun { k, inner } => write!(f, "family=sun k={k} inner={inner}"),
            FamilySpec::ExtendedSun { k, sizes, inner } => {
                write!(f, "family=extended_sun k={k} sizes={} inner={inner}", join(sizes))
            }
            FamilySpec::SuperSun { k, spokes, inner } => {
                write!(f, "family=super_sun k={k} spokes={} inner={inner}", join(spokes))
            }
            FamilySpec::SpecialPath { len, triangles } => {
                write!(f, "family=special_path len={len} triangles={}", join(triangles))
            }
            FamilySpec::RandomChordal { n, fill, seed } => {
                write!(f, "family=random_chordal n={n} fill={fill} seed={seed}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::{is_chordal, simplicial_vertices};
    use crate::graph::VertexSet;

    #[test]
    fn basic_families() {
        assert_eq!(make_path(1).unwrap(), Graph::empty(1).unwrap());
        assert_eq!(make_cycle(3).unwrap(), make_complete(3).unwrap());
        let s = make_star(3).unwrap();
        assert_eq!((s.n(), s.degree(0)), (4, 3));
        assert!(make_path(0).is_err());
        assert!(make_cycle(2).is_err());
        assert!(make_star(0).is_err());
    }

    #[test]
    fn suns() {
        let s3 = make_sun(3, &InnerChords::None).unwrap();
        assert_eq!(s3.n(), 6);
        assert!(s3.is_clique([0, 1, 2].into_iter().collect()));
        assert!((3..6).all(|u| s3.degree(u) == 2));
        assert_eq!(simplicial_vertices(&s3), [3, 4, 5].into_iter().collect());
        assert!(is_chordal(&make_sun(4, &InnerChords::Complete).unwrap()));
        assert!(!is_chordal(&make_sun(4, &InnerChords::None).unwrap()));
        assert!(make_sun(2, &InnerChords::None).is_err());
    }

    #[test]
    fn extended_sun_all_ones_is_sun() {
        for k in 3..8 {
            for inner in [InnerChords::None, InnerChords::Fan, InnerChords::Complete] {
                assert_eq!(make_extended_sun(k, &vec![1; k], &inner).unwrap(), make_sun(k, &inner).unwrap());
            }
        }
    }

    #[test]
    fn extended_sun_cliques_are_simplicial() {
        let g = make_extended_sun(5, &[2, 1, 1, 1, 2], &"1-3,1-4".parse().unwrap()).unwrap();
        assert_eq!(g.n(), 12);
        let outer: VertexSet = (5..12).collect();
        assert!(outer.is_subset(simplicial_vertices(&g)));
        assert!(g.has_edge(5, 6));
        assert!(!g.has_edge(6, 7));
        assert!(make_extended_sun(3, &[1, 0, 1], &InnerChords::None).is_err());
        assert!("bogus".parse::<InnerChords>().is_err());
    }

    #[test]
    fn super_sun_shape() {
        let g = make_super_sun(5, &[4; 5], &InnerChords::None).unwrap();
        assert_eq!(g.n(), 25);
        for i in 0..5 {
            let spoke: VertexSet = (5 + 4 * i..9 + 4 * i).collect();
            let (p, _) = g.induced_subgraph(spoke).unwrap();
            assert_eq!(p, make_path(4).unwrap());
        }
        assert!(make_super_sun(3, &[4, 5, 4], &InnerChords::None).is_err());
        assert!(make_super_sun(3, &[1, 4, 4], &InnerChords::None).is_err());
    }

    #[test]
    fn special_paths() {
        assert_eq!(make_special_path(2, &[0]).unwrap(), make_complete(3).unwrap());
        let g = make_special_path(5, &[2]).unwrap();
        assert_eq!(g.n(), 6);
        let bd = g.block_decomposition();
        assert_eq!(bd.blocks.iter().filter(|b| b.len() == 3).count(), 1);
        assert!(!bd.cut_vertices.is_empty());
        assert!(make_special_path(3, &[2]).is_err());
        assert!(make_special_path(4, &[1, 1]).is_err());
    }

    #[test]
    fn config_round_trip() {
        let spec = FamilySpec::parse("family=sun k=5 inner=fan").unwrap();
        assert_eq!(spec, FamilySpec::Sun { k: 5, inner: InnerChords::Fan });
        for text in [
            "family=extended_sun k=5 sizes=2,1,1,1,2 inner=1-3,1-4",
            "family=super_sun k=3 spokes=4,4,7 inner=none",
            "family=special_path len=5 triangles=1,3",
            "family=random_chordal n=10 fill=0.5 seed=3",
        ] {
            let spec = FamilySpec::parse(text).unwrap();
            assert_eq!(spec.to_string(), text);
            assert!(spec.build().is_ok());
        }
        assert!(FamilySpec::parse("family=sun").is_err());
        assert!(FamilySpec::parse("family=moon k=3").is_err());
        assert!(FamilySpec::parse("family=sun k=3 inner=sideways").is_err());
    }
}
