//! Dicolourings: every colour class induces an acyclic subdigraph.

mod critical;
mod solver;

pub use critical::{
    cc_bound_holds, component_bound, fk_bound, is_k_dicritical, maximal_acyclic_set, CcBoundReport,
    CcViolation, DicriticalVerdict,
};
pub use solver::{dichromatic_number, find_dicolouring};

use thiserror::Error;

use crate::graph::{Digraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColouringError {
    #[error("colour 0 at vertex {0}; colours start at 1")]
    ZeroColour(Vertex),
    #[error("colours do not form a prefix 1..k: colour {0} is unused")]
    NotPrefix(usize),
    #[error("colouring has {got} entries, digraph has {expected} vertices")]
    SizeMismatch { expected: usize, got: usize },
}

/// A colouring `V(D) -> {1..k}` whose used colours form a prefix of `1..k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dicolouring {
    colours: Vec<usize>,
    k: usize,
}

/// Result of checking a colouring against a digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DicolouringCheck {
    Valid,
    /// A monochromatic directed cycle, first vertex not repeated.
    Monochromatic(Vec<Vertex>),
}

impl DicolouringCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, DicolouringCheck::Valid)
    }
}

impl Dicolouring {
    /// `colours[v]` is the colour of `v`, counted from 1.
    pub fn new(colours: Vec<usize>) -> Result<Self, ColouringError> {
        if let Some(v) = colours.iter().position(|&c| c == 0) {
            return Err(ColouringError::ZeroColour(v));
        }
        let k = colours.iter().copied().max().unwrap_or(0);
        let mut used = vec![false; k + 1];
        for &c in &colours {
            used[c] = true;
        }
        if let Some(c) = (1..=k).find(|&c| !used[c]) {
            return Err(ColouringError::NotPrefix(c));
        }
        Ok(Self { colours, k })
    }

    /// Builds from 0-based class indices, which must already form a prefix.
    pub(crate) fn from_classes(classes: &[usize]) -> Self {
        Self::new(classes.iter().map(|c| c + 1).collect()).expect("class indices form a prefix")
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    pub fn colour(&self, v: Vertex) -> usize {
        self.colours[v]
    }

    /// Number of colours used.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    /// Vertices of colour `c`, ascending.
    pub fn class(&self, c: usize) -> Vec<Vertex> {
        (0..self.colours.len())
            .filter(|&v| self.colours[v] == c)
            .collect()
    }
}

/// Checks that no colour class of `c` spans a directed cycle of `d`.
pub fn is_dicolouring(d: &Digraph, c: &Dicolouring) -> Result<DicolouringCheck, ColouringError> {
    if c.len() != d.order() {
        return Err(ColouringError::SizeMismatch {
            expected: d.order(),
            got: c.len(),
        });
    }
    for colour in 1..=c.k() {
        let members: Vec<bool> = c.colours.iter().map(|&x| x == colour).collect();
        if let Some(cycle) = d.find_cycle_in(&members) {
            return Ok(DicolouringCheck::Monochromatic(cycle));
        }
    }
    Ok(DicolouringCheck::Valid)
}
