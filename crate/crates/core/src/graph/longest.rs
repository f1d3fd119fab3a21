//! Exact longest paths and cycles by pruned backtracking.
//!
//! Both searches bound a partial path by the number of unused vertices still
//! reachable from its end and cut branches that cannot beat the incumbent.

use super::{mask_iter, Digraph, DirectedPath, Mask, Vertex};
use crate::budget::{Budget, BudgetExceeded};

/// Vertices reachable from `from` through `allowed` using `adj` (excluding `from`).
fn reach(adj: &[Mask], from: Vertex, allowed: Mask) -> Mask {
    let mut seen: Mask = 0;
    let mut frontier = adj[from] & allowed;
    while frontier != 0 {
        seen |= frontier;
        let mut next = 0;
        for w in mask_iter(frontier) {
            next |= adj[w];
        }
        frontier = next & allowed & !seen;
    }
    seen
}

struct PathSearch<'a> {
    adj: &'a [Mask],
    best: Vec<Vertex>,
    target: usize,
}

impl PathSearch<'_> {
    fn extend(&mut self, path: &mut Vec<Vertex>, used: Mask) {
        if path.len() > self.best.len() {
            self.best = path.clone();
        }
        if self.best.len() == self.target {
            return;
        }
        let v = *path.last().expect("non-empty path");
        let free = !used;
        if path.len() + (reach(self.adj, v, free).count_ones() as usize) <= self.best.len() {
            return;
        }
        for w in mask_iter(self.adj[v] & free) {
            path.push(w);
            self.extend(path, used | 1 << w);
            path.pop();
            if self.best.len() == self.target {
                return;
            }
        }
    }
}

/// A maximum-order directed path. Exact; refuses digraphs above the budget.
pub fn longest_directed_path(d: &Digraph, budget: &Budget) -> Result<DirectedPath, BudgetExceeded> {
    budget.check("longest directed path", d.order())?;
    let adj: Vec<Mask> = d.vertices().map(|v| d.out_mask(v)).collect();
    let mut search = PathSearch {
        adj: &adj,
        best: Vec::new(),
        target: d.order(),
    };
    for s in d.vertices() {
        let mut path = vec![s];
        search.extend(&mut path, 1 << s);
        if search.best.len() == search.target {
            break;
        }
    }
    Ok(DirectedPath::new(search.best))
}

/// Largest orders of a path and of a cycle in the underlying graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrientedExtremes {
    pub path_order: usize,
    /// 0 when the underlying graph is a forest.
    pub cycle_order: usize,
}

struct CycleSearch<'a> {
    adj: &'a [Mask],
    start: Vertex,
    best: usize,
    target: usize,
}

impl CycleSearch<'_> {
    fn extend(&mut self, v: Vertex, order: usize, used: Mask, allowed: Mask) {
        if order >= 3 && self.adj[v] & (1 << self.start) != 0 {
            self.best = self.best.max(order);
        }
        if self.best == self.target {
            return;
        }
        let free = allowed & !used;
        if order + (reach(self.adj, v, free).count_ones() as usize) <= self.best {
            return;
        }
        for w in mask_iter(self.adj[v] & free) {
            self.extend(w, order + 1, used | 1 << w, allowed);
            if self.best == self.target {
                return;
            }
        }
    }
}

/// Exact longest path and cycle orders of `UG(D)`.
pub fn longest_oriented_path_and_cycle(
    d: &Digraph,
    budget: &Budget,
) -> Result<OrientedExtremes, BudgetExceeded> {
    budget.check("longest oriented path", d.order())?;
    let n = d.order();
    let adj: Vec<Mask> = d.vertices().map(|v| d.out_mask(v) | d.in_mask(v)).collect();

    let mut paths = PathSearch {
        adj: &adj,
        best: Vec::new(),
        target: n,
    };
    for s in 0..n {
        let mut path = vec![s];
        paths.extend(&mut path, 1 << s);
        if paths.best.len() == n {
            break;
        }
    }

    let mut best_cycle = 0;
    for s in 0..n {
        // cycles whose smallest vertex is s
        let allowed: Mask = d.full_mask() & !((1u64 << s) - 1) & !(1 << s);
        let mut search = CycleSearch {
            adj: &adj,
            start: s,
            best: best_cycle,
            target: n - s,
        };
        search.extend(s, 1, 1 << s, allowed);
        best_cycle = best_cycle.max(search.best);
        if best_cycle >= n - s {
            break;
        }
    }

    Ok(OrientedExtremes {
        path_order: paths.best.len(),
        cycle_order: best_cycle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Digraph {
        Digraph::from_arc_list(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn directed_examples() {
        let b = Budget::default();
        for n in 2..9 {
            let p = longest_directed_path(&cycle(n), &b).unwrap();
            assert_eq!(p.order(), n);
            p.validate(&cycle(n)).unwrap();
        }
        let tt = Digraph::from_arc_list(5, (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))))
            .unwrap();
        assert_eq!(longest_directed_path(&tt, &b).unwrap().vertices(), &[0, 1, 2, 3, 4]);
        assert_eq!(longest_directed_path(&Digraph::empty(0), &b).unwrap().order(), 0);
    }

    #[test]
    fn oriented_examples() {
        let b = Budget::default();
        let e = longest_oriented_path_and_cycle(&cycle(5), &b).unwrap();
        assert_eq!((e.path_order, e.cycle_order), (5, 5));
        let digon = Digraph::from_arc_list(2, [(0, 1), (1, 0)]).unwrap();
        let e = longest_oriented_path_and_cycle(&digon, &b).unwrap();
        assert_eq!((e.path_order, e.cycle_order), (2, 0));
        let k4 = Digraph::from_arc_list(
            4,
            (0..4).flat_map(|i| (0..4).filter(move |&j| j != i).map(move |j| (i, j))),
        )
        .unwrap();
        let e = longest_oriented_path_and_cycle(&k4, &b).unwrap();
        assert_eq!((e.path_order, e.cycle_order), (4, 4));
    }

    #[test]
    fn refuses_over_budget() {
        assert!(longest_directed_path(&cycle(20), &Budget::new(16)).is_err());
    }
}
