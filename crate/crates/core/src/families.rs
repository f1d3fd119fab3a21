//! Explicit digraph families and the subdivision operator.
//!
//! Every builder documents its vertex labelling so witnesses found in these
//! digraphs are reproducible.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Digraph, DirectedPath, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family}: {constraint}")]
    InvalidParameter {
        family: &'static str,
        constraint: &'static str,
    },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("family `{family}` takes {expected} parameter(s), got {got}")]
    Arity {
        family: String,
        expected: usize,
        got: usize,
    },
    #[error("bad parameter `{0}`")]
    BadNumber(String),
    #[error("no subdivision count given for arc ({0}, {1})")]
    MissingCount(Vertex, Vertex),
}

fn invalid(family: &'static str, constraint: &'static str) -> FamilyError {
    FamilyError::InvalidParameter { family, constraint }
}

/// Parameters selecting one of the explicit families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// `C⃗_n`: arcs `i -> i+1 mod n`. `n >= 2`.
    DirectedCycle { n: usize },
    /// `P⃗_n`: arcs `i -> i+1`. `n >= 1`.
    DirectedPath { n: usize },
    /// `TT_n`: arcs `i -> j` for `i < j`.
    TransitiveTournament { n: usize },
    /// Bidirected `K_n`.
    BidirectedComplete { n: usize },
    /// `C(k, l)`, see [`spindle`].
    Spindle { k: usize, l: usize },
    /// `S_k^{+(l)}`, see [`out_star`].
    OutStar { k: usize, l: usize },
    /// `D` plus a vertex joined to every vertex by a digon.
    UniversalJoin(Box<Digraph>),
    /// `D_n`: `C⃗_{n-1}` on `0..n-1` plus vertex `n-1` in a digon with all
    /// of them. `n >= 3`.
    WheelOfDigons { n: usize },
    /// `D_{k,n}`, see [`dicritical_short_paths`].
    ShortPathDicritical { k: usize, n: usize },
    /// Vertex set `Z/(2k-1)`, arcs `i -> i+1` and `i -> i+2`. `k >= 2`.
    CirculantTwoJumps { k: usize },
    /// Quadratic-residue tournament on 7 vertices: `i -> j` iff
    /// `j - i ∈ {1, 2, 4} mod 7`.
    Paley7,
}

impl FamilySpec {
    pub fn build(&self) -> Result<Digraph, FamilyError> {
        match *self {
            FamilySpec::DirectedCycle { n } => directed_cycle(n),
            FamilySpec::DirectedPath { n } => directed_path(n),
            FamilySpec::TransitiveTournament { n } => Ok(transitive_tournament(n)),
            FamilySpec::BidirectedComplete { n } => Ok(bidirected_complete(n)),
            FamilySpec::Spindle { k, l } => spindle(k, l),
            FamilySpec::OutStar { k, l } => out_star(k, l),
            FamilySpec::UniversalJoin(ref base) => Ok(universal_join(base)),
            FamilySpec::WheelOfDigons { n } => wheel_of_digons(n),
            FamilySpec::ShortPathDicritical { k, n } => dicritical_short_paths(k, n),
            FamilySpec::CirculantTwoJumps { k } => circulant_two_jumps(k),
            FamilySpec::Paley7 => Ok(paley7()),
        }
    }

    /// Parses a family tag and its integer parameters, as used on the
    /// command line (`cycle 5`, `Dkn 3 7`, `spindle 2 3`, `paley7`).
    /// `join` needs a base digraph and is not handled here.
    pub fn parse(tag: &str, params: &[&str]) -> Result<Self, FamilyError> {
        let nums = params
            .iter()
            .map(|p| p.parse::<usize>().map_err(|_| FamilyError::BadNumber(p.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        let arity = |expected: usize| {
            if nums.len() == expected {
                Ok(())
            } else {
                Err(FamilyError::Arity {
                    family: tag.to_string(),
                    expected,
                    got: nums.len(),
                })
            }
        };
        let spec = match tag {
            "cycle" | "directed_cycle" => {
                arity(1)?;
                FamilySpec::DirectedCycle { n: nums[0] }
            }
            "path" | "directed_path" => {
                arity(1)?;
                FamilySpec::DirectedPath { n: nums[0] }
            }
            "tt" | "transitive_tournament" => {
                arity(1)?;
                FamilySpec::TransitiveTournament { n: nums[0] }
            }
            "bid" | "bidirected_complete" => {
                arity(1)?;
                FamilySpec::BidirectedComplete { n: nums[0] }
            }
            "spindle" => {
                arity(2)?;
                FamilySpec::Spindle { k: nums[0], l: nums[1] }
            }
            "outstar" | "out_star" => {
                arity(2)?;
                FamilySpec::OutStar { k: nums[0], l: nums[1] }
            }
            "Dn" | "D_n" => {
                arity(1)?;
                FamilySpec::WheelOfDigons { n: nums[0] }
            }
            "Dkn" | "D_kn" => {
                arity(2)?;
                FamilySpec::ShortPathDicritical { k: nums[0], n: nums[1] }
            }
            "circulant" | "circulant_two_jumps" => {
                arity(1)?;
                FamilySpec::CirculantTwoJumps { k: nums[0] }
            }
            "paley7" | "paley_7_fixture" => {
                arity(0)?;
                FamilySpec::Paley7
            }
            other => return Err(FamilyError::UnknownFamily(other.to_string())),
        };
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::DirectedCycle { n } => write!(f, "cycle {n}"),
            FamilySpec::DirectedPath { n } => write!(f, "path {n}"),
            FamilySpec::TransitiveTournament { n } => write!(f, "tt {n}"),
            FamilySpec::BidirectedComplete { n } => write!(f, "bid {n}"),
            FamilySpec::Spindle { k, l } => write!(f, "spindle {k} {l}"),
            FamilySpec::OutStar { k, l } => write!(f, "outstar {k} {l}"),
            FamilySpec::UniversalJoin(base) => write!(f, "join <{} vertices>", base.order()),
            FamilySpec::WheelOfDigons { n } => write!(f, "Dn {n}"),
            FamilySpec::ShortPathDicritical { k, n } => write!(f, "Dkn {k} {n}"),
            FamilySpec::CirculantTwoJumps { k } => write!(f, "circulant {k}"),
            FamilySpec::Paley7 => f.write_str("paley7"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    /// `tag` or `tag:p1,p2,...`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (tag, rest) = s.split_once(':').unwrap_or((s, ""));
        let params: Vec<&str> = rest.split(',').filter(|p| !p.is_empty()).collect();
        Self::parse(tag, &params)
    }
}

fn build(n: usize, arcs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Digraph {
    Digraph::from_arc_list(n, arcs).expect("family builders produce valid arcs")
}

pub fn directed_cycle(n: usize) -> Result<Digraph, FamilyError> {
    if n < 2 {
        return Err(invalid("directed_cycle", "n >= 2"));
    }
    Ok(build(n, (0..n).map(|i| (i, (i + 1) % n))))
}

pub fn directed_path(n: usize) -> Result<Digraph, FamilyError> {
    if n < 1 {
        return Err(invalid("directed_path", "n >= 1"));
    }
    Ok(build(n, (1..n).map(|i| (i - 1, i))))
}

pub fn transitive_tournament(n: usize) -> Digraph {
    build(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

pub fn bidirected_complete(n: usize) -> Digraph {
    build(
        n,
        (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))),
    )
}

/// `C(k, l)`: two internally disjoint directed paths from source `0` to sink
/// `1`, of lengths `k` and `l`. The first path's internal vertices are
/// `2..=k`, the second's `k+1..k+l`. With `k = l = 1` both paths are the arc
/// `0 -> 1`, which collapses to a single arc.
pub fn spindle(k: usize, l: usize) -> Result<Digraph, FamilyError> {
    if k < 1 || l < 1 {
        return Err(invalid("spindle", "k >= 1 and l >= 1"));
    }
    let mut arcs = Vec::new();
    let first: Vec<Vertex> = std::iter::once(0).chain(2..=k).chain([1]).collect();
    let second: Vec<Vertex> = std::iter::once(0).chain(k + 1..k + l).chain([1]).collect();
    for p in [first, second] {
        arcs.extend(p.windows(2).map(|w| (w[0], w[1])));
    }
    Ok(build(k + l, arcs))
}

/// `S_k^{+(l)}`: centre `0`; path `i` (0-based) runs through
/// `1 + i·l, ..., (i + 1)·l`.
pub fn out_star(k: usize, l: usize) -> Result<Digraph, FamilyError> {
    if k < 1 || l < 1 {
        return Err(invalid("out_star", "k >= 1 and l >= 1"));
    }
    let arcs = (0..k).flat_map(|i| {
        let start = 1 + i * l;
        std::iter::once((0, start)).chain((start..start + l - 1).map(|v| (v, v + 1)))
    });
    Ok(build(k * l + 1, arcs.collect::<Vec<_>>()))
}

/// `D` plus vertex `n(D)` with a digon to every other vertex.
pub fn universal_join(base: &Digraph) -> Digraph {
    let u = base.order();
    build(
        u + 1,
        base.arcs()
            .chain(base.vertices().flat_map(|v| [(u, v), (v, u)])),
    )
}

/// `D_n`: `C⃗_{n-1}` on `0..n-1` and vertex `n - 1` in a digon with each of them.
pub fn wheel_of_digons(n: usize) -> Result<Digraph, FamilyError> {
    if n < 3 {
        return Err(invalid("D_n", "n >= 3"));
    }
    Ok(universal_join(&directed_cycle(n - 1)?))
}

/// `D_{k,n}` for `k >= 3` and odd `n >= 3`.
///
/// Layout: `p_1..p_n` are `0..n-1` forming the antidirected path with
/// `p_1 -> p_2` (so `2i -> 2i+1` and `2i+2 -> 2i+1`); digon `[p_1, p_n]`;
/// `x_1, x_2 = n, n+1` in a digon; for every arc `uv` of the path, arcs
/// `v -> x_i` and `x_i -> u` for `i ∈ {1, 2}`; finally `x_3..x_{k-1}` are
/// `n+2..n+k-2`, each in a digon with every earlier vertex.
pub fn dicritical_short_paths(k: usize, n: usize) -> Result<Digraph, FamilyError> {
    if k < 3 {
        return Err(invalid("D_kn", "k >= 3"));
    }
    if n < 3 || n.is_multiple_of(2) {
        return Err(invalid("D_kn", "n odd and n >= 3"));
    }
    let path_arcs: Vec<(Vertex, Vertex)> = (0..n - 1)
        .map(|j| if j % 2 == 0 { (j, j + 1) } else { (j + 1, j) })
        .collect();
    let (x1, x2) = (n, n + 1);
    let mut arcs = path_arcs.clone();
    arcs.extend([(0, n - 1), (n - 1, 0), (x1, x2), (x2, x1)]);
    for &(u, v) in &path_arcs {
        for x in [x1, x2] {
            arcs.push((v, x));
            arcs.push((x, u));
        }
    }
    let mut d = build(n + 2, arcs);
    for _ in 3..k {
        d = universal_join(&d);
    }
    Ok(d)
}

/// Circulant on `Z/(2k-1)` with jumps `+1` and `+2`.
pub fn circulant_two_jumps(k: usize) -> Result<Digraph, FamilyError> {
    if k < 2 {
        return Err(invalid("circulant_two_jumps", "k >= 2"));
    }
    let n = 2 * k - 1;
    Ok(build(n, (0..n).flat_map(|i| [(i, (i + 1) % n), (i, (i + 2) % n)])))
}

pub fn paley7() -> Digraph {
    build(7, (0..7).flat_map(|i| [1, 2, 4].map(|r| (i, (i + r) % 7))))
}

/// Result of [`subdivide`]: the subdivided digraph and, for each original
/// arc, the path replacing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subdivided {
    pub digraph: Digraph,
    pub arc_paths: BTreeMap<(Vertex, Vertex), DirectedPath>,
}

/// Replaces every arc `uv` by a directed path with `counts[uv]` new internal
/// vertices. New vertices are numbered from `n(D)` upward, arcs taken in
/// lexicographic order.
pub fn subdivide(
    d: &Digraph,
    counts: &BTreeMap<(Vertex, Vertex), usize>,
) -> Result<Subdivided, FamilyError> {
    let mut next = d.order();
    let mut arcs = Vec::new();
    let mut arc_paths = BTreeMap::new();
    for (u, v) in d.arcs() {
        let c = *counts.get(&(u, v)).ok_or(FamilyError::MissingCount(u, v))?;
        let mut path = vec![u];
        path.extend(next..next + c);
        path.push(v);
        next += c;
        arcs.extend(path.windows(2).map(|w| (w[0], w[1])));
        arc_paths.insert((u, v), DirectedPath::new(path));
    }
    Ok(Subdivided {
        digraph: build(next, arcs),
        arc_paths,
    })
}

/// The same count for every arc of `d`.
pub fn uniform_counts(d: &Digraph, count: usize) -> BTreeMap<(Vertex, Vertex), usize> {
    d.arcs().map(|a| (a, count)).collect()
}
