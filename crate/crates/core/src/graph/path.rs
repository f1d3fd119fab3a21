use thiserror::Error;

use super::{Digraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("vertex {0} appears twice")]
    Repeated(Vertex),
    #[error("missing arc ({0}, {1})")]
    MissingArc(Vertex, Vertex),
    #[error("vertex {0} is not in the host")]
    OutOfRange(Vertex),
}

/// A directed path given by its vertex sequence. Its length counts arcs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DirectedPath {
    vertices: Vec<Vertex>,
}

impl DirectedPath {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        Self { vertices }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.vertices
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Number of arcs; 0 for the empty and the single-vertex path.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn init(&self) -> Option<Vertex> {
        self.vertices.first().copied()
    }

    pub fn term(&self) -> Option<Vertex> {
        self.vertices.last().copied()
    }

    pub fn internal(&self) -> &[Vertex] {
        match self.vertices.len() {
            0..=2 => &[],
            l => &self.vertices[1..l - 1],
        }
    }

    /// The prefix with `arcs` arcs.
    pub fn truncated(&self, arcs: usize) -> Self {
        Self::new(self.vertices[..(arcs + 1).min(self.vertices.len())].to_vec())
    }

    /// `self · other`; `other` must start where `self` ends.
    pub fn concat(&self, other: &DirectedPath) -> Option<Self> {
        if self.term() != other.init() {
            return None;
        }
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices[1..]);
        Some(Self::new(vertices))
    }

    /// Checks distinctness and that consecutive vertices are joined by arcs of `host`.
    pub fn validate(&self, host: &Digraph) -> Result<(), PathError> {
        let mut seen = vec![false; host.order()];
        for &v in &self.vertices {
            if v >= host.order() {
                return Err(PathError::OutOfRange(v));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(PathError::Repeated(v));
            }
        }
        for w in self.vertices.windows(2) {
            if !host.has_arc(w[0], w[1]) {
                return Err(PathError::MissingArc(w[0], w[1]));
            }
        }
        Ok(())
    }
}

impl From<Vec<Vertex>> for DirectedPath {
    fn from(vertices: Vec<Vertex>) -> Self {
        Self::new(vertices)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_against_host() {
        let d = Digraph::from_arc_list(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(DirectedPath::new(vec![0, 1, 2]).validate(&d), Ok(()));
        assert_eq!(
            DirectedPath::new(vec![0, 2]).validate(&d),
            Err(PathError::MissingArc(0, 2))
        );
        assert_eq!(
            DirectedPath::new(vec![0, 1, 0]).validate(&d),
            Err(PathError::Repeated(0))
        );
    }

    #[test]
    fn length_counts_arcs() {
        let p = DirectedPath::new(vec![4, 2, 7]);
        assert_eq!(p.len(), 2);
        assert_eq!(p.internal(), &[2]);
        assert_eq!(p.truncated(1).vertices(), &[4, 2]);
        let q = DirectedPath::new(vec![7, 1]);
        assert_eq!(p.concat(&q).unwrap().vertices(), &[4, 2, 7, 1]);
        assert!(q.concat(&p).is_none());
    }
}
