//! Subdivision witnesses, exhaustive containment search and the constructive
//! finders.

mod finders;
mod flow;
mod search;
mod tree;

pub use finders::{find_out_star, find_spindle, FinderError};
pub use flow::{disjoint_paths, DisjointPaths, PathSystem};
pub use search::{contains_subdivision, ArcCounts};
pub use tree::{find_tree_subdivision, TreeFinderError, TreeMode};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{parse_dg, write_dg, DgError, Digraph, DirectedPath, PathError, Vertex};

/// A certificate that `host` contains a subdivision of `pattern`: an
/// injective map of pattern vertices to host vertices, and for every pattern
/// arc `uv` a directed path from the image of `u` to the image of `v`.
/// Paths have length at least 1 and their internal vertices are pairwise
/// disjoint and avoid all branch vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdivisionWitness {
    pub pattern: Digraph,
    pub host: Digraph,
    /// `branch_map[f]` is the host vertex of pattern vertex `f`.
    pub branch_map: Vec<Vertex>,
    pub arc_paths: BTreeMap<(Vertex, Vertex), DirectedPath>,
}

/// The first broken witness invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessViolation {
    #[error("branch map has {got} entries, pattern has {expected} vertices")]
    BranchMapSize { expected: usize, got: usize },
    #[error("pattern vertex {f} maps to {d}, outside the host")]
    BranchOutOfRange { f: Vertex, d: Vertex },
    #[error("pattern vertices {0} and {1} share host vertex {2}")]
    NotInjective(Vertex, Vertex, Vertex),
    #[error("no path for pattern arc {0:?}")]
    MissingArcPath((Vertex, Vertex)),
    #[error("path given for {0:?}, which is not a pattern arc")]
    UnexpectedArcPath((Vertex, Vertex)),
    #[error("path for {arc:?} runs {got:?}, expected {expected:?}")]
    EndpointMismatch {
        arc: (Vertex, Vertex),
        expected: (Vertex, Vertex),
        got: (Option<Vertex>, Option<Vertex>),
    },
    #[error("path for {0:?} has no arc")]
    EmptyPath((Vertex, Vertex)),
    #[error("path for {arc:?} is not a directed path of the host: {error}")]
    InvalidPath {
        arc: (Vertex, Vertex),
        error: PathError,
    },
    #[error("path for {arc:?} passes through branch vertex {vertex}")]
    ThroughBranchVertex { arc: (Vertex, Vertex), vertex: Vertex },
    #[error("paths for {0:?} and {1:?} share internal vertex {2}")]
    SharedInternal((Vertex, Vertex), (Vertex, Vertex), Vertex),
}

impl SubdivisionWitness {
    /// Checks every witness invariant against `self.host`.
    pub fn validate(&self) -> Result<(), WitnessViolation> {
        let (pattern, host) = (&self.pattern, &self.host);
        if self.branch_map.len() != pattern.order() {
            return Err(WitnessViolation::BranchMapSize {
                expected: pattern.order(),
                got: self.branch_map.len(),
            });
        }
        let mut owner: Vec<Option<Vertex>> = vec![None; host.order()];
        for (f, &d) in self.branch_map.iter().enumerate() {
            if d >= host.order() {
                return Err(WitnessViolation::BranchOutOfRange { f, d });
            }
            if let Some(g) = owner[d] {
                return Err(WitnessViolation::NotInjective(g, f, d));
            }
            owner[d] = Some(f);
        }
        if let Some(arc) = self.arc_paths.keys().find(|&&(u, v)| !pattern.has_arc(u, v)) {
            return Err(WitnessViolation::UnexpectedArcPath(*arc));
        }
        let mut internal_owner: Vec<Option<(Vertex, Vertex)>> = vec![None; host.order()];
        for arc in pattern.arcs() {
            let path = self
                .arc_paths
                .get(&arc)
                .ok_or(WitnessViolation::MissingArcPath(arc))?;
            let expected = (self.branch_map[arc.0], self.branch_map[arc.1]);
            if (path.init(), path.term()) != (Some(expected.0), Some(expected.1)) {
                return Err(WitnessViolation::EndpointMismatch {
                    arc,
                    expected,
                    got: (path.init(), path.term()),
                });
            }
            if path.is_empty() {
                return Err(WitnessViolation::EmptyPath(arc));
            }
            path.validate(host)
                .map_err(|error| WitnessViolation::InvalidPath { arc, error })?;
            for &x in path.internal() {
                if owner[x].is_some() {
                    return Err(WitnessViolation::ThroughBranchVertex { arc, vertex: x });
                }
                if let Some(other) = internal_owner[x] {
                    return Err(WitnessViolation::SharedInternal(other, arc, x));
                }
                internal_owner[x] = Some(arc);
            }
        }
        Ok(())
    }

    /// Whether the path of every pattern arc has at least `1 + counts[arc]`
    /// arcs (missing entries count as 0).
    pub fn meets_min_counts(&self, counts: &ArcCounts) -> bool {
        self.arc_paths
            .iter()
            .all(|(arc, p)| p.len() > counts.get(arc).copied().unwrap_or(0))
    }

    /// The identity witness of a digraph in itself.
    pub fn identity(d: &Digraph) -> Self {
        Self {
            pattern: d.clone(),
            host: d.clone(),
            branch_map: d.vertices().collect(),
            arc_paths: d
                .arcs()
                .map(|(u, v)| ((u, v), DirectedPath::new(vec![u, v])))
                .collect(),
        }
    }

    /// Serialises without the host:
    /// `{"arc_paths": {"u->v": [...]}, "branch_map": {"f": d}, "pattern": "<dg text>"}`,
    /// keys in sorted order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&WitnessJson::from(self)).expect("witness serialises")
    }

    /// Parses [`SubdivisionWitness::to_json`] output against `host`. The
    /// result is not validated.
    pub fn from_json(text: &str, host: &Digraph) -> Result<Self, WitnessJsonError> {
        let raw: WitnessJson = serde_json::from_str(text)?;
        let pattern = parse_dg(&raw.pattern)?;
        let mut branch_map = vec![usize::MAX; pattern.order()];
        for (key, &d) in &raw.branch_map {
            let f: Vertex = key
                .parse()
                .map_err(|_| WitnessJsonError::Key(key.clone()))?;
            if f >= pattern.order() {
                return Err(WitnessJsonError::Key(key.clone()));
            }
            branch_map[f] = d;
        }
        if let Some(f) = branch_map.iter().position(|&d| d == usize::MAX) {
            return Err(WitnessJsonError::Unmapped(f));
        }
        let mut arc_paths = BTreeMap::new();
        for (key, path) in raw.arc_paths {
            let arc = key
                .split_once("->")
                .and_then(|(u, v)| Some((u.parse().ok()?, v.parse().ok()?)))
                .ok_or_else(|| WitnessJsonError::Key(key.clone()))?;
            arc_paths.insert(arc, DirectedPath::new(path));
        }
        Ok(Self {
            pattern,
            host: host.clone(),
            branch_map,
            arc_paths,
        })
    }
}

#[derive(Debug, Error)]
pub enum WitnessJsonError {
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("pattern: {0}")]
    Pattern(#[from] DgError),
    #[error("bad key `{0}`")]
    Key(String),
    #[error("pattern vertex {0} has no image")]
    Unmapped(Vertex),
}

#[derive(Serialize, Deserialize)]
struct WitnessJson {
    arc_paths: BTreeMap<String, Vec<Vertex>>,
    branch_map: BTreeMap<String, Vertex>,
    pattern: String,
}

impl From<&SubdivisionWitness> for WitnessJson {
    fn from(w: &SubdivisionWitness) -> Self {
        Self {
            arc_paths: w
                .arc_paths
                .iter()
                .map(|(&(u, v), p)| (format!("{u}->{v}"), p.vertices().to_vec()))
                .collect(),
            branch_map: w
                .branch_map
                .iter()
                .enumerate()
                .map(|(f, &d)| (f.to_string(), d))
                .collect(),
            pattern: write_dg(&w.pattern),
        }
    }
}
