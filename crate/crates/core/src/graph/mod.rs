//! Immutable digraphs and their elementary invariants.
//!
//! Vertices are dense indices `0..n`. Adjacency lists are kept sorted, so
//! every traversal in this crate visits neighbours in ascending order and all
//! searches are deterministic.

mod dg;
mod invariants;
mod longest;
mod path;

pub use dg::{parse_dg, write_dg, DgError};
pub use invariants::{
    cc_count, digirth, distance, distances_from, girth, is_strongly_connected, is_two_arc_strong,
    is_two_connected_underlying, strong_components, underlying_graph, StrongComponents,
    UndirectedGraph,
};
pub use longest::{longest_directed_path, longest_oriented_path_and_cycle, OrientedExtremes};
pub use path::{DirectedPath, PathError};

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Vertex id. Always in `0..n` for the digraph it belongs to.
pub type Vertex = usize;

/// Bitset over vertex ids, used by the bounded exhaustive searches.
pub type Mask = u64;

/// Largest order for which bit masks are maintained.
pub const MASK_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop ({0}, {0}) is not allowed")]
    SelfLoop(Vertex),
    #[error("arc ({u}, {v}) has an endpoint outside 0..{n}")]
    OutOfRange { u: Vertex, v: Vertex, n: usize },
}

/// A length that may be infinite: distances to unreachable vertices, the
/// digirth of an acyclic digraph, the girth of a forest.
///
/// `Finite(_) < Infinite`, and finite values compare numerically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Length {
    Finite(usize),
    Infinite,
}

impl Length {
    pub fn finite(self) -> Option<usize> {
        match self {
            Length::Finite(l) => Some(l),
            Length::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Length::Infinite)
    }

    /// `self >= bound`, with infinity above every bound.
    pub fn at_least(self, bound: usize) -> bool {
        self >= Length::Finite(bound)
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(l) => write!(f, "{l}"),
            Length::Infinite => f.write_str("inf"),
        }
    }
}

/// A plain set of vertex ids of some host digraph.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    members: BTreeSet<Vertex>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        self.members.insert(v)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.members.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.members.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    /// Bit mask of the members. All members must be below [`MASK_LIMIT`].
    pub fn mask(&self) -> Mask {
        self.iter().fold(0, |m, v| m | 1 << v)
    }

    pub fn from_mask(mask: Mask) -> Self {
        mask_iter(mask).collect()
    }

    /// Whether every member is a vertex of `d`.
    pub fn fits(&self, d: &Digraph) -> bool {
        self.members.iter().all(|&v| v < d.order())
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        Self {
            members: iter.into_iter().collect(),
        }
    }
}

/// Iterates the set bits of a mask in ascending order.
pub fn mask_iter(mut mask: Mask) -> impl Iterator<Item = Vertex> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// A simple digraph: no loops, no parallel arcs. A digon `[u, v]` is the pair
/// of arcs `uv` and `vu`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    out_adj: Vec<Vec<Vertex>>,
    in_adj: Vec<Vec<Vertex>>,
    out_bits: Vec<Mask>,
    in_bits: Vec<Mask>,
    arcs: usize,
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.order(), self.arcs().collect::<Vec<_>>())
    }
}

impl Digraph {
    /// The digraph on `n` vertices without arcs.
    pub fn empty(n: usize) -> Self {
        let bits = if n <= MASK_LIMIT { vec![0; n] } else { Vec::new() };
        Self {
            out_adj: vec![Vec::new(); n],
            in_adj: vec![Vec::new(); n],
            out_bits: bits.clone(),
            in_bits: bits,
            arcs: 0,
        }
    }

    /// Builds a digraph from ordered pairs. Repeated pairs collapse to one arc.
    pub fn from_arc_list<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut out_adj: Vec<BTreeSet<Vertex>> = vec![BTreeSet::new(); n];
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            out_adj[u].insert(v);
        }
        Ok(Self::from_sets(out_adj))
    }

    fn from_sets(out_sets: Vec<BTreeSet<Vertex>>) -> Self {
        let n = out_sets.len();
        let mut d = Self::empty(n);
        for (u, outs) in out_sets.into_iter().enumerate() {
            for v in outs {
                d.in_adj[v].push(u);
                if n <= MASK_LIMIT {
                    d.out_bits[u] |= 1 << v;
                    d.in_bits[v] |= 1 << u;
                }
                d.out_adj[u].push(v);
                d.arcs += 1;
            }
        }
        // in-lists are filled in ascending u order, so they are already sorted
        d
    }

    fn to_sets(&self) -> Vec<BTreeSet<Vertex>> {
        self.out_adj.iter().map(|o| o.iter().copied().collect()).collect()
    }

    pub fn order(&self) -> usize {
        self.out_adj.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, outs)| outs.iter().map(move |&v| (u, v)))
    }

    pub fn out_neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.out_adj[v]
    }

    pub fn in_neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.in_adj[v].len()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.out_degree(v) + self.in_degree(v)
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && self.out_adj[u].binary_search(&v).is_ok()
    }

    pub fn has_digon(&self, u: Vertex, v: Vertex) -> bool {
        self.has_arc(u, v) && self.has_arc(v, u)
    }

    /// Minimum out-degree; 0 for the empty digraph.
    pub fn min_out_degree(&self) -> usize {
        self.vertices().map(|v| self.out_degree(v)).min().unwrap_or(0)
    }

    pub fn min_in_degree(&self) -> usize {
        self.vertices().map(|v| self.in_degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Number of neighbours in the underlying graph.
    pub fn ug_degree(&self, v: Vertex) -> usize {
        let mut count = 0;
        let (mut i, mut j) = (0, 0);
        let (outs, ins) = (&self.out_adj[v], &self.in_adj[v]);
        while i < outs.len() || j < ins.len() {
            match (outs.get(i), ins.get(j)) {
                (Some(a), Some(b)) if a == b => {
                    i += 1;
                    j += 1;
                }
                (Some(a), Some(b)) if a < b => i += 1,
                (Some(_), None) => i += 1,
                _ => j += 1,
            }
            count += 1;
        }
        count
    }

    pub fn has_digons(&self) -> bool {
        self.arcs().any(|(u, v)| u < v && self.has_arc(v, u))
    }

    /// Every arc has its reverse.
    pub fn is_bidirected(&self) -> bool {
        self.arcs().all(|(u, v)| self.has_arc(v, u))
    }

    /// Whether the bit masks are available (order at most [`MASK_LIMIT`]).
    pub fn has_masks(&self) -> bool {
        self.order() <= MASK_LIMIT
    }

    /// Out-neighbourhood as a bit mask. Requires [`Digraph::has_masks`].
    pub fn out_mask(&self, v: Vertex) -> Mask {
        self.out_bits[v]
    }

    /// In-neighbourhood as a bit mask. Requires [`Digraph::has_masks`].
    pub fn in_mask(&self, v: Vertex) -> Mask {
        self.in_bits[v]
    }

    /// Mask with every vertex set.
    pub fn full_mask(&self) -> Mask {
        match self.order() {
            64 => Mask::MAX,
            n => (1 << n) - 1,
        }
    }

    pub fn without_arc(&self, u: Vertex, v: Vertex) -> Self {
        let mut sets = self.to_sets();
        if u < sets.len() {
            sets[u].remove(&v);
        }
        Self::from_sets(sets)
    }

    pub fn with_arcs<I>(&self, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::from_arc_list(self.order(), self.arcs().chain(arcs))
    }

    /// Subdigraph induced by `keep` (ascending), relabelled `0..keep.len()`.
    /// Also returns the map from new ids back to old ids.
    pub fn induced(&self, keep: &[Vertex]) -> (Self, Vec<Vertex>) {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut new_id = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let mut sets = vec![BTreeSet::new(); keep.len()];
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.out_adj[v] {
                if new_id[w] != usize::MAX {
                    sets[i].insert(new_id[w]);
                }
            }
        }
        (Self::from_sets(sets), keep)
    }

    /// `D - S`, relabelled; returns the surviving old ids in order.
    pub fn without_vertices(&self, removed: &[Vertex]) -> (Self, Vec<Vertex>) {
        let gone: BTreeSet<Vertex> = removed.iter().copied().collect();
        let keep: Vec<Vertex> = self.vertices().filter(|v| !gone.contains(v)).collect();
        self.induced(&keep)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Self {
        let mut sets = vec![BTreeSet::new(); self.order()];
        for (u, v) in self.arcs() {
            sets[perm[u]].insert(perm[v]);
        }
        Self::from_sets(sets)
    }

    /// Whether the subdigraph induced by `mask` has no directed cycle.
    pub fn is_acyclic_mask(&self, mask: Mask) -> bool {
        self.find_cycle_in_mask(mask).is_none()
    }

    pub fn is_acyclic(&self) -> bool {
        digirth(self).is_infinite()
    }

    /// A directed cycle inside the subdigraph induced by `mask`, as its
    /// vertex sequence (first vertex not repeated). Requires masks.
    pub fn find_cycle_in_mask(&self, mask: Mask) -> Option<Vec<Vertex>> {
        let members: Vec<bool> = self.vertices().map(|v| mask >> v & 1 == 1).collect();
        self.find_cycle_in(&members)
    }

    /// A directed cycle of the subdigraph induced by `members[v] == true`.
    /// The DFS runs from the smallest vertex, so the result is deterministic.
    pub fn find_cycle_in(&self, members: &[bool]) -> Option<Vec<Vertex>> {
        #[derive(Clone, Copy, PartialEq)]
        enum State {
            New,
            Open,
            Done,
        }
        let n = self.order();
        let mut state = vec![State::New; n];
        let mut parent = vec![usize::MAX; n];
        for root in self.vertices().filter(|&v| members[v]) {
            if state[root] != State::New {
                continue;
            }
            // (vertex, index of the next out-neighbour to try)
            let mut stack: Vec<(Vertex, usize)> = vec![(root, 0)];
            state[root] = State::Open;
            while let Some(&mut (v, ref mut i)) = stack.last_mut() {
                let Some(&w) = self.out_adj[v].get(*i) else {
                    state[v] = State::Done;
                    stack.pop();
                    continue;
                };
                *i += 1;
                if !members[w] {
                    continue;
                }
                match state[w] {
                    State::New => {
                        parent[w] = v;
                        state[w] = State::Open;
                        stack.push((w, 0));
                    }
                    State::Open => {
                        let mut cycle = vec![v];
                        let mut x = v;
                        while x != w {
                            x = parent[x];
                            cycle.push(x);
                        }
                        cycle.reverse();
                        return Some(cycle);
                    }
                    State::Done => {}
                }
            }
        }
        None
    }
}
