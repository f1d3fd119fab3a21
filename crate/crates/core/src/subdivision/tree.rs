//! Tree subdivisions by peeling maximal acyclic sets.
//!
//! Strip leaves of `T` one at a time. For each stripped leaf the current host
//! loses a maximal acyclic set `A`; once a single tree vertex is left it goes
//! to the lowest remaining host vertex. Unwinding, the neighbour `p` of each
//! leaf already sits at some `y` outside `A`, and by maximality `A + y`
//! holds a directed cycle through `y`. The leaf's arc path is cut from the
//! longest such cycle. If that cycle is too short the finder falls back to
//! the exhaustive search, whose answer is definitive.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::search::{contains_subdivision, ArcCounts};
use super::SubdivisionWitness;
use crate::budget::{Budget, BudgetExceeded};
use crate::colouring::{dichromatic_number, maximal_acyclic_set};
use crate::graph::{digirth, underlying_graph, Digraph, DirectedPath, Length, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeMode {
    /// `T` bidirected, every arc subdivided `k - 1` times.
    Bidirected,
    /// `T` oriented, every arc subdivided at most `k - 1` times.
    Oriented,
}

impl FromStr for TreeMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "bidirected" => Ok(TreeMode::Bidirected),
            "oriented" => Ok(TreeMode::Oriented),
            other => Err(format!("unknown mode `{other}` (bidirected|oriented)")),
        }
    }
}

impl fmt::Display for TreeMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TreeMode::Bidirected => "bidirected",
            TreeMode::Oriented => "oriented",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreePrecondition {
    #[error("tree precondition: the underlying graph of T is not a tree")]
    NotATree,
    #[error("mode precondition: T is not bidirected")]
    NotBidirected,
    #[error("mode precondition: T has a digon")]
    NotOriented,
    #[error("count precondition: bidirected mode needs one count on every arc")]
    NonUniformCounts,
    #[error("count precondition: {0:?} is not an arc of T")]
    CountOnNonArc((Vertex, Vertex)),
    #[error("digirth precondition: {actual} < {required}")]
    Digirth { required: usize, actual: Length },
    #[error("χ⃗ precondition: {actual} < {required}")]
    Chromatic { required: usize, actual: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeFinderError {
    #[error(transparent)]
    Precondition(#[from] TreePrecondition),
    #[error("no subdivision with the requested counts exists")]
    NoWitness,
    #[error("internal guarantee violated: {state}")]
    InvariantBreach { state: String },
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

/// The `k` implied by `counts`, after checking the shape of `T` and counts.
fn check_tree(t: &Digraph, counts: &ArcCounts, mode: TreeMode) -> Result<usize, TreePrecondition> {
    let ug = underlying_graph(t);
    if t.order() == 0 || ug.edge_count() + 1 != t.order() || ug.components().len() != 1 {
        return Err(TreePrecondition::NotATree);
    }
    if let Some(&arc) = counts.keys().find(|&&(u, v)| !t.has_arc(u, v)) {
        return Err(TreePrecondition::CountOnNonArc(arc));
    }
    let count = |arc: &(Vertex, Vertex)| counts.get(arc).copied().unwrap_or(0);
    match mode {
        TreeMode::Bidirected => {
            if !t.is_bidirected() {
                return Err(TreePrecondition::NotBidirected);
            }
            let mut values = t.arcs().map(|arc| count(&arc));
            let first = values.next().unwrap_or(0);
            if values.any(|c| c != first) {
                return Err(TreePrecondition::NonUniformCounts);
            }
            Ok(first + 1)
        }
        TreeMode::Oriented => {
            if t.has_digons() {
                return Err(TreePrecondition::NotOriented);
            }
            Ok(t.arcs().map(|arc| count(&arc)).max().unwrap_or(0) + 1)
        }
    }
}

/// Finds a subdivision of `T` in `D` in which every arc `uv` of `T` becomes
/// a path of at least `1 + counts[uv]` arcs.
///
/// Preconditions: bidirected mode needs digirth at least `2k`, oriented mode
/// digirth at least `k`, where `k - 1` is the (largest) count; both need
/// `χ⃗(D) >= n(T)`, checked with the exact solver.
pub fn find_tree_subdivision(
    d: &Digraph,
    t: &Digraph,
    counts: &ArcCounts,
    mode: TreeMode,
    budget: &Budget,
) -> Result<SubdivisionWitness, TreeFinderError> {
    let k = check_tree(t, counts, mode)?;
    budget.check("tree subdivision", d.order())?;
    let required = match mode {
        TreeMode::Bidirected => 2 * k,
        TreeMode::Oriented => k,
    };
    let actual = digirth(d);
    if !actual.at_least(required) {
        return Err(TreePrecondition::Digirth { required, actual }.into());
    }
    let (chi, _) = dichromatic_number(d, budget)?;
    if chi < t.order() {
        return Err(TreePrecondition::Chromatic {
            required: t.order(),
            actual: chi,
        }
        .into());
    }
    let witness = match peel(d, t, counts)? {
        Some(w) => w,
        None => contains_subdivision(d, t, Some(counts), budget)?.ok_or(TreeFinderError::NoWitness)?,
    };
    if let Err(violation) = witness.validate() {
        return Err(TreeFinderError::InvariantBreach {
            state: format!("witness {} fails validation: {violation}", witness.to_json()),
        });
    }
    if !witness.meets_min_counts(counts) {
        return Err(TreeFinderError::InvariantBreach {
            state: format!("witness {} is too short", witness.to_json()),
        });
    }
    Ok(witness)
}

struct Level {
    leaf: Vertex,
    parent: Vertex,
    /// The maximal acyclic set removed at this level, in host ids.
    acyclic: Vec<Vertex>,
    /// Host vertices present at this level.
    present: Vec<bool>,
}

/// Runs the peeling construction. `Ok(None)` means some cycle was too short
/// for the requested counts.
fn peel(
    d: &Digraph,
    t: &Digraph,
    counts: &ArcCounts,
) -> Result<Option<SubdivisionWitness>, TreeFinderError> {
    let ug = underlying_graph(t);
    let mut tree_alive = vec![true; t.order()];
    let mut present = vec![true; d.order()];
    let mut levels = Vec::new();
    for _ in 1..t.order() {
        let leaf = (0..t.order())
            .find(|&f| {
                tree_alive[f] && ug.neighbours(f).iter().filter(|&&g| tree_alive[g]).count() == 1
            })
            .expect("a tree with two vertices has a leaf");
        let parent = *ug
            .neighbours(leaf)
            .iter()
            .find(|&&g| tree_alive[g])
            .expect("a leaf has a neighbour");
        let keep: Vec<Vertex> = d.vertices().filter(|&v| present[v]).collect();
        let (sub, ids) = d.induced(&keep);
        let acyclic: Vec<Vertex> = maximal_acyclic_set(&sub).iter().map(|v| ids[v]).collect();
        levels.push(Level {
            leaf,
            parent,
            acyclic: acyclic.clone(),
            present: present.clone(),
        });
        for v in acyclic {
            present[v] = false;
        }
        tree_alive[leaf] = false;
    }
    let root = (0..t.order()).find(|&f| tree_alive[f]).expect("one tree vertex remains");
    let Some(base) = d.vertices().find(|&v| present[v]) else {
        return Err(TreeFinderError::InvariantBreach {
            state: format!("host exhausted after {} levels with tree vertex {root} left", levels.len()),
        });
    };
    let mut branch_map = vec![usize::MAX; t.order()];
    branch_map[root] = base;
    let mut arc_paths = std::collections::BTreeMap::new();
    let count = |arc: (Vertex, Vertex)| counts.get(&arc).copied().unwrap_or(0);
    for level in levels.iter().rev() {
        let y = branch_map[level.parent];
        let Some(cycle) = longest_cycle_through(d, y, &level.acyclic, &level.present) else {
            return Err(TreeFinderError::InvariantBreach {
                state: format!(
                    "no cycle through {y} in A + y at leaf {}, A = {:?}",
                    level.leaf, level.acyclic
                ),
            });
        };
        // cycle = [y, a1, ..., ar]; its arcs close back to y
        let r = cycle.len() - 1;
        let out_arc = (level.parent, level.leaf);
        let in_arc = (level.leaf, level.parent);
        match (t.has_arc(out_arc.0, out_arc.1), t.has_arc(in_arc.0, in_arc.1)) {
            (true, true) => {
                let c = count(out_arc).max(count(in_arc));
                if r + 1 < 2 * (c + 1) {
                    return Ok(None);
                }
                let x = cycle[c + 1];
                branch_map[level.leaf] = x;
                arc_paths.insert(out_arc, DirectedPath::new(cycle[..=c + 1].to_vec()));
                let mut back = cycle[c + 1..].to_vec();
                back.push(y);
                arc_paths.insert(in_arc, DirectedPath::new(back));
            }
            (true, false) => {
                let c = count(out_arc);
                if r < c + 1 {
                    return Ok(None);
                }
                branch_map[level.leaf] = cycle[c + 1];
                arc_paths.insert(out_arc, DirectedPath::new(cycle[..=c + 1].to_vec()));
            }
            (false, true) => {
                let c = count(in_arc);
                if r < c + 1 {
                    return Ok(None);
                }
                let mut path = cycle[r - c..].to_vec();
                path.push(y);
                branch_map[level.leaf] = path[0];
                arc_paths.insert(in_arc, DirectedPath::new(path));
            }
            (false, false) => unreachable!("leaf and parent are adjacent in T"),
        }
    }
    Ok(Some(SubdivisionWitness {
        pattern: t.clone(),
        host: d.clone(),
        branch_map,
        arc_paths,
    }))
}

/// The longest directed cycle through `y` whose other vertices lie in the
/// acyclic set `a`, as `[y, a1, ..., ar]`. Longest path in the DAG `D⟨A⟩`
/// from `N⁺(y)` to `N⁻(y)`; ties go to lower ids.
fn longest_cycle_through(d: &Digraph, y: Vertex, a: &[Vertex], present: &[bool]) -> Option<Vec<Vertex>> {
    debug_assert!(present[y]);
    let mut in_a = vec![false; d.order()];
    for &v in a {
        in_a[v] = true;
    }
    // Kahn topological order of D⟨A⟩.
    let mut indeg: Vec<usize> = vec![0; d.order()];
    for &v in a {
        indeg[v] = d.in_neighbours(v).iter().filter(|&&w| in_a[w]).count();
    }
    let mut order = Vec::with_capacity(a.len());
    let mut ready: std::collections::BTreeSet<Vertex> =
        a.iter().copied().filter(|&v| indeg[v] == 0).collect();
    while let Some(v) = ready.pop_first() {
        order.push(v);
        for &w in d.out_neighbours(v) {
            if in_a[w] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.insert(w);
                }
            }
        }
    }
    // best[v]: vertices on the longest path from v to an in-neighbour of y
    let mut best = vec![0usize; d.order()];
    let mut next = vec![usize::MAX; d.order()];
    for &v in order.iter().rev() {
        if d.has_arc(v, y) {
            best[v] = 1;
        }
        for &w in d.out_neighbours(v) {
            if in_a[w] && best[w] > 0 && best[w] + 1 > best[v] {
                best[v] = best[w] + 1;
                next[v] = w;
            }
        }
    }
    let start = d
        .out_neighbours(y)
        .iter()
        .copied()
        .filter(|&v| in_a[v] && best[v] > 0)
        .max_by_key(|&v| (best[v], std::cmp::Reverse(v)))?;
    let mut cycle = vec![y, start];
    let mut v = start;
    while next[v] != usize::MAX {
        v = next[v];
        cycle.push(v);
    }
    Some(cycle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{
        bidirected_complete, directed_cycle, directed_path, out_star, paley7, transitive_tournament,
        uniform_counts,
    };

    fn oriented(d: &Digraph, t: &Digraph, count: usize) -> Result<SubdivisionWitness, TreeFinderError> {
        find_tree_subdivision(d, t, &uniform_counts(t, count), TreeMode::Oriented, &Budget::default())
    }

    #[test]
    fn arc_in_cycle() {
        let c5 = directed_cycle(5).unwrap();
        let p2 = directed_path(2).unwrap();
        let w = oriented(&c5, &p2, 3).unwrap();
        assert_eq!(w.arc_paths[&(0, 1)].len(), 4);
    }

    #[test]
    fn boundary_count_has_no_witness() {
        let c5 = directed_cycle(5).unwrap();
        let p2 = directed_path(2).unwrap();
        assert_eq!(oriented(&c5, &p2, 4), Err(TreeFinderError::NoWitness));
    }

    #[test]
    fn out_star_in_paley() {
        let w = oriented(&paley7(), &out_star(2, 1).unwrap(), 1).unwrap();
        w.validate().unwrap();
    }

    #[test]
    fn acyclic_host_is_rejected() {
        let err = oriented(&transitive_tournament(4), &directed_path(2).unwrap(), 0).unwrap_err();
        assert_eq!(
            err,
            TreeFinderError::Precondition(TreePrecondition::Chromatic { required: 2, actual: 1 })
        );
        assert_eq!(err.to_string(), "χ⃗ precondition: 1 < 2");
    }

    #[test]
    fn shape_checks() {
        let c3 = directed_cycle(3).unwrap();
        assert_eq!(
            oriented(&paley7(), &c3, 0),
            Err(TreeFinderError::Precondition(TreePrecondition::NotATree))
        );
        let digon = bidirected_complete(2);
        assert_eq!(
            oriented(&paley7(), &digon, 0),
            Err(TreeFinderError::Precondition(TreePrecondition::NotOriented))
        );
        assert_eq!(
            find_tree_subdivision(
                &paley7(),
                &directed_path(2).unwrap(),
                &uniform_counts(&digon, 0),
                TreeMode::Oriented,
                &Budget::default()
            ),
            Err(TreeFinderError::Precondition(TreePrecondition::CountOnNonArc((1, 0))))
        );
    }

    #[test]
    fn bidirected_edge() {
        let c6 = directed_cycle(6).unwrap();
        let digon = bidirected_complete(2);
        let w = find_tree_subdivision(&c6, &digon, &uniform_counts(&digon, 2), TreeMode::Bidirected, &Budget::default())
            .unwrap();
        assert!(w.arc_paths.values().all(|p| p.len() == 3));
        assert!(matches!(
            find_tree_subdivision(&c6, &digon, &uniform_counts(&digon, 3), TreeMode::Bidirected, &Budget::default()),
            Err(TreeFinderError::Precondition(TreePrecondition::Digirth { .. }))
        ));
    }
}
