//! Constructive finders for out-stars and spindles.

use std::collections::BTreeMap;

use thiserror::Error;

use super::flow::max_flow_paths;
use super::SubdivisionWitness;
use crate::budget::{Budget, BudgetExceeded};
use crate::families::{out_star, spindle};
use crate::graph::{distances_from, mask_iter, Digraph, DirectedPath, Mask, Vertex, VertexSet};
use crate::par;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FinderError {
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Lays a host path of at least `pattern_path.len() - 1` arcs onto a path of
/// the pattern: pattern vertex `j` goes to host vertex `j`, except the last,
/// which goes to the host path's end; the final pattern arc takes the rest.
fn lay_path(
    pattern_path: &[Vertex],
    host_path: &[Vertex],
    branch_map: &mut [Vertex],
    arc_paths: &mut BTreeMap<(Vertex, Vertex), DirectedPath>,
) {
    let m = pattern_path.len() - 1;
    debug_assert!(host_path.len() > m);
    for (j, &f) in pattern_path[..m].iter().enumerate() {
        branch_map[f] = host_path[j];
    }
    branch_map[pattern_path[m]] = *host_path.last().expect("host path is non-empty");
    for j in 0..m {
        let segment = if j + 1 == m {
            host_path[j..].to_vec()
        } else {
            host_path[j..=j + 1].to_vec()
        };
        arc_paths.insert((pattern_path[j], pattern_path[j + 1]), DirectedPath::new(segment));
    }
}

/// Every vertex reachable from `from` through `allowed`.
fn reach(d: &Digraph, from: Vertex, allowed: Mask) -> Mask {
    let mut seen: Mask = 1 << from;
    let mut stack = vec![from];
    while let Some(x) = stack.pop() {
        for w in mask_iter(d.out_mask(x) & allowed & !seen) {
            seen |= 1 << w;
            stack.push(w);
        }
    }
    seen
}

/// A copy of `S_k^{+(ℓ)}` centred at `u`.
///
/// Every vertex at distance at least `ℓ` from `u` is a target. `k` disjoint
/// paths from `u` to distinct targets each have at least `ℓ` arcs, so their
/// first `ℓ` arcs form the star. When the flow finds a cut instead, an
/// exhaustive search decides.
pub fn find_out_star(
    d: &Digraph,
    u: Vertex,
    k: usize,
    l: usize,
    budget: &Budget,
) -> Result<Option<SubdivisionWitness>, FinderError> {
    if u >= d.order() {
        return Err(FinderError::InvalidParameter(format!("centre {u} is not a vertex")));
    }
    if k == 0 || l == 0 {
        return Err(FinderError::InvalidParameter("k >= 1 and l >= 1".into()));
    }
    let targets: VertexSet = distances_from(d, u)
        .into_iter()
        .enumerate()
        .filter(|&(v, len)| v != u && !len.is_infinite() && len.at_least(l))
        .map(|(v, _)| v)
        .collect();
    let paths = match max_flow_paths(d, u, &targets, k, true) {
        Ok(paths) => paths.into_iter().map(|p| p.truncated(l).into_vertices()).collect(),
        Err(_) => {
            budget.check("out-star search", d.order())?;
            let mut paths = Vec::new();
            if !star_search(d, u, k, l, 1 << u, &mut paths) {
                return Ok(None);
            }
            paths
        }
    };
    Ok(Some(star_witness(d, k, l, paths)))
}

fn star_witness(d: &Digraph, k: usize, l: usize, mut paths: Vec<Vec<Vertex>>) -> SubdivisionWitness {
    paths.sort();
    let pattern = out_star(k, l).expect("k, l >= 1");
    let mut branch_map = vec![0; pattern.order()];
    let mut arc_paths = BTreeMap::new();
    for (i, path) in paths.iter().enumerate() {
        let start = 1 + i * l;
        let pattern_path: Vec<Vertex> = std::iter::once(0).chain(start..start + l).collect();
        lay_path(&pattern_path, path, &mut branch_map, &mut arc_paths);
    }
    SubdivisionWitness {
        pattern,
        host: d.clone(),
        branch_map,
        arc_paths,
    }
}

/// Adds `k - paths.len()` more paths of exactly `l` arcs from `u` avoiding
/// `used`, each starting at a larger out-neighbour than the previous one.
fn star_search(
    d: &Digraph,
    u: Vertex,
    k: usize,
    l: usize,
    used: Mask,
    paths: &mut Vec<Vec<Vertex>>,
) -> bool {
    if paths.len() == k {
        return true;
    }
    let after = paths.last().map_or(0, |p| p[1] + 1);
    for first in mask_iter(d.out_mask(u) & !used).filter(|&w| w >= after) {
        let mut path = vec![u, first];
        if extend_star_path(d, u, k, l, used | 1 << first, &mut path, paths) {
            return true;
        }
    }
    false
}

fn extend_star_path(
    d: &Digraph,
    u: Vertex,
    k: usize,
    l: usize,
    used: Mask,
    path: &mut Vec<Vertex>,
    paths: &mut Vec<Vec<Vertex>>,
) -> bool {
    if path.len() == l + 1 {
        paths.push(path.clone());
        if star_search(d, u, k, l, used, paths) {
            return true;
        }
        paths.pop();
        return false;
    }
    let last = *path.last().expect("path is non-empty");
    for w in mask_iter(d.out_mask(last) & !used) {
        path.push(w);
        let found = extend_star_path(d, u, k, l, used | 1 << w, path, paths);
        path.pop();
        if found {
            return true;
        }
    }
    false
}

/// A subdivision of `C(k,k)`: two internally disjoint paths with at least
/// `k` arcs each, between the lowest ordered pair `(x, y)` that has them.
///
/// Pairs with `d⁺(x) < 2`, `d⁻(y) < 2`, or without two internally disjoint
/// `x → y` paths at all are skipped; the rest are searched exhaustively.
pub fn find_spindle(
    d: &Digraph,
    k: usize,
    budget: &Budget,
) -> Result<Option<SubdivisionWitness>, FinderError> {
    if k < 2 {
        return Err(FinderError::InvalidParameter(
            "k >= 2 (C(1,1) would need parallel arcs)".into(),
        ));
    }
    budget.check("spindle search", d.order())?;
    if d.order() < 2 * k {
        return Ok(None);
    }
    let pairs: Vec<(Vertex, Vertex)> = d
        .vertices()
        .filter(|&x| d.out_degree(x) >= 2)
        .flat_map(|x| {
            d.vertices()
                .filter(move |&y| y != x && d.in_degree(y) >= 2)
                .map(move |y| (x, y))
        })
        .collect();
    let found = par::find_map_first(pairs, |(x, y)| {
        let target: VertexSet = [y].into_iter().collect();
        max_flow_paths(d, x, &target, 2, false).ok()?;
        spindle_between(d, x, y, k)
    });
    Ok(found.map(|(p1, p2)| {
        let pattern = spindle(k, k).expect("k >= 2");
        let mut branch_map = vec![0; pattern.order()];
        let mut arc_paths = BTreeMap::new();
        let first: Vec<Vertex> = std::iter::once(0).chain(2..=k).chain([1]).collect();
        let second: Vec<Vertex> = std::iter::once(0).chain(k + 1..2 * k).chain([1]).collect();
        lay_path(&first, &p1, &mut branch_map, &mut arc_paths);
        lay_path(&second, &p2, &mut branch_map, &mut arc_paths);
        SubdivisionWitness {
            pattern,
            host: d.clone(),
            branch_map,
            arc_paths,
        }
    }))
}

/// Two internally disjoint `x → y` paths of at least `k` arcs, the second
/// starting at a larger out-neighbour of `x` than the first.
fn spindle_between(d: &Digraph, x: Vertex, y: Vertex, k: usize) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
    let mut first = vec![x];
    let mut result = None;
    long_paths(d, y, k, 1 << x | 1 << y, &mut first, &mut |p1, used| {
        let mut second = vec![x];
        let mut inner = None;
        let after = p1[1];
        let allowed = d.out_mask(x) & !used;
        for start in mask_iter(allowed).filter(|&w| w > after) {
            second.push(start);
            long_paths(d, y, k, used | 1 << start, &mut second, &mut |p2, _| {
                inner = Some(p2.to_vec());
                true
            });
            second.pop();
            if inner.is_some() {
                break;
            }
        }
        match inner {
            Some(p2) => {
                result = Some((p1.to_vec(), p2));
                true
            }
            None => false,
        }
    });
    result
}

/// Calls `visit(path, used)` for each extension of `path` to a path ending at
/// `y` with at least `k` arcs, avoiding `used`, until `visit` returns true.
/// `y` must be in `used`.
fn long_paths(
    d: &Digraph,
    y: Vertex,
    k: usize,
    used: Mask,
    path: &mut Vec<Vertex>,
    visit: &mut dyn FnMut(&[Vertex], Mask) -> bool,
) -> bool {
    let last = *path.last().expect("path is non-empty");
    if path.len() >= k && d.has_arc(last, y) {
        path.push(y);
        let stop = visit(path, used);
        path.pop();
        if stop {
            return true;
        }
    }
    let free = d.full_mask() & !used;
    for w in mask_iter(d.out_mask(last) & free) {
        // w must still reach a vertex adjacent to y through free vertices
        if reach(d, w, free) & d.in_mask(y) == 0 {
            continue;
        }
        path.push(w);
        let stop = long_paths(d, y, k, used | 1 << w, path, visit);
        path.pop();
        if stop {
            return true;
        }
    }
    false
}
