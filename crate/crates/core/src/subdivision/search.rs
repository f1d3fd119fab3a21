//! Complete backtracking search for a subdivision of a pattern.
//!
//! Pattern vertices are placed one at a time, highest underlying degree
//! first and then always a vertex with the most placed neighbours. Host
//! candidates must have at least the pattern vertex's in- and out-degree.
//! As soon as both ends of a pattern arc are placed the arc is routed:
//! among the pending arcs the one with the fewest candidate paths goes first,
//! and its paths are tried shortest first. Every combination is eventually
//! tried, so `None` means no subdivision exists.

use std::collections::{BTreeMap, VecDeque};

use super::SubdivisionWitness;
use crate::budget::{Budget, BudgetExceeded};
use crate::graph::{mask_iter, underlying_graph, Digraph, DirectedPath, Mask, Vertex};

/// Per-arc subdivision counts, keyed by pattern arc.
pub type ArcCounts = BTreeMap<(Vertex, Vertex), usize>;

struct Search<'a> {
    host: &'a Digraph,
    pattern: &'a Digraph,
    order: Vec<Vertex>,
    arcs: Vec<(Vertex, Vertex)>,
    min_len: Vec<usize>,
    /// Arc indices routed right after `order[i]` is placed.
    arcs_at: Vec<Vec<usize>>,
    branch: Vec<Vertex>,
    used: Mask,
    paths: Vec<Vec<Vertex>>,
}

impl Search<'_> {
    fn place(&mut self, i: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        let f = self.order[i];
        let need_out = self.pattern.out_degree(f);
        let need_in = self.pattern.in_degree(f);
        for cand in self.host.vertices() {
            if self.used >> cand & 1 == 1
                || self.host.out_degree(cand) < need_out
                || self.host.in_degree(cand) < need_in
            {
                continue;
            }
            self.branch[f] = cand;
            self.used |= 1 << cand;
            let pending = self.arcs_at[i].clone();
            if self.route(i, pending) {
                return true;
            }
            self.used &= !(1 << cand);
            self.branch[f] = usize::MAX;
        }
        false
    }

    fn ends(&self, a: usize) -> (Vertex, Vertex) {
        let (u, v) = self.arcs[a];
        (self.branch[u], self.branch[v])
    }

    /// Hop distances to `t` through vertices outside `used`.
    fn distances_to(&self, t: Vertex) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.host.order()];
        dist[t] = 0;
        let mut queue = VecDeque::from([t]);
        while let Some(x) = queue.pop_front() {
            for w in mask_iter(self.host.in_mask(x) & !self.used) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[x] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Number of routable paths for arc `a`, capped at `cap`.
    fn count_paths(&self, a: usize, cap: usize) -> usize {
        let (s, t) = self.ends(a);
        if self.min_len[a] == 1 && self.host.has_arc(s, t) && cap <= 1 {
            return 1;
        }
        let dist = self.distances_to(t);
        let mut count = 0;
        let mut path_len = 0;
        self.count_from(s, t, self.used, &mut path_len, self.min_len[a], &dist, cap, &mut count);
        count
    }

    #[allow(clippy::too_many_arguments)]
    fn count_from(
        &self,
        v: Vertex,
        t: Vertex,
        used: Mask,
        len: &mut usize,
        min_len: usize,
        dist: &[usize],
        cap: usize,
        count: &mut usize,
    ) {
        if *len + 1 >= min_len && self.host.has_arc(v, t) {
            *count += 1;
            if *count >= cap {
                return;
            }
        }
        for w in mask_iter(self.host.out_mask(v) & !used & !(1 << t)) {
            if dist[w] == usize::MAX {
                continue;
            }
            *len += 1;
            self.count_from(w, t, used | 1 << w, len, min_len, dist, cap, count);
            *len -= 1;
            if *count >= cap {
                return;
            }
        }
    }

    fn route(&mut self, i: usize, mut pending: Vec<usize>) -> bool {
        if pending.is_empty() {
            return self.place(i + 1);
        }
        let mut best: Option<(usize, usize)> = None;
        for (pos, &a) in pending.iter().enumerate() {
            let c = self.count_paths(a, 2);
            if c == 0 {
                return false;
            }
            if best.is_none_or(|(_, bc)| c < bc) {
                best = Some((pos, c));
            }
        }
        let a = pending.remove(best.expect("pending is non-empty").0);
        let (s, t) = self.ends(a);
        let dist = self.distances_to(t);
        let free = (self.host.full_mask() & !self.used).count_ones() as usize;
        let mut path = vec![s];
        for len in self.min_len[a]..=free + 1 {
            if self.walk(a, i, &pending, &mut path, len, &dist) {
                return true;
            }
        }
        false
    }

    /// Extends `path` towards the target of arc `a` so that it has exactly
    /// `len` arcs, then continues routing.
    fn walk(
        &mut self,
        a: usize,
        i: usize,
        pending: &[usize],
        path: &mut Vec<Vertex>,
        len: usize,
        dist: &[usize],
    ) -> bool {
        let (_, t) = self.ends(a);
        let v = *path.last().expect("path starts at the source");
        let remaining = len + 1 - path.len();
        if remaining == 1 {
            if !self.host.has_arc(v, t) {
                return false;
            }
            path.push(t);
            self.paths[a] = path.clone();
            let found = self.route(i, pending.to_vec());
            path.pop();
            return found;
        }
        for w in mask_iter(self.host.out_mask(v) & !self.used & !(1 << t)) {
            if dist[w] > remaining - 1 {
                continue;
            }
            self.used |= 1 << w;
            path.push(w);
            let found = self.walk(a, i, pending, path, len, dist);
            path.pop();
            self.used &= !(1 << w);
            if found {
                return true;
            }
        }
        false
    }
}

/// Placement order: highest underlying degree first (lowest id on ties),
/// then repeatedly the vertex with most placed neighbours, then highest
/// degree, then lowest id.
fn placement_order(pattern: &Digraph) -> Vec<Vertex> {
    let ug = underlying_graph(pattern);
    let n = pattern.order();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&f| !placed[f])
            .max_by_key(|&f| {
                let attached = ug.neighbours(f).iter().filter(|&&g| placed[g]).count();
                (attached, ug.neighbours(f).len(), std::cmp::Reverse(f))
            })
            .expect("an unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    order
}

/// Searches `host` for a subdivision of `pattern` in which every pattern arc
/// `uv` becomes a path with at least `1 + min_counts[uv]` arcs.
pub fn contains_subdivision(
    host: &Digraph,
    pattern: &Digraph,
    min_counts: Option<&ArcCounts>,
    budget: &Budget,
) -> Result<Option<SubdivisionWitness>, BudgetExceeded> {
    budget.check("subdivision search", host.order())?;
    if pattern.order() > host.order() {
        return Ok(None);
    }
    let order = placement_order(pattern);
    let mut position = vec![0; pattern.order()];
    for (i, &f) in order.iter().enumerate() {
        position[f] = i;
    }
    let arcs: Vec<(Vertex, Vertex)> = pattern.arcs().collect();
    let min_len = arcs
        .iter()
        .map(|arc| 1 + min_counts.and_then(|c| c.get(arc)).copied().unwrap_or(0))
        .collect();
    let mut arcs_at = vec![Vec::new(); order.len()];
    for (a, &(u, v)) in arcs.iter().enumerate() {
        arcs_at[position[u].max(position[v])].push(a);
    }
    let mut search = Search {
        host,
        pattern,
        order,
        min_len,
        arcs_at,
        branch: vec![usize::MAX; pattern.order()],
        used: 0,
        paths: vec![Vec::new(); arcs.len()],
        arcs,
    };
    if !search.place(0) {
        return Ok(None);
    }
    let arc_paths = search
        .arcs
        .iter()
        .zip(search.paths)
        .map(|(&arc, p)| (arc, DirectedPath::new(p)))
        .collect();
    Ok(Some(SubdivisionWitness {
        pattern: pattern.clone(),
        host: host.clone(),
        branch_map: search.branch,
        arc_paths,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{
        bidirected_complete, directed_cycle, spindle, transitive_tournament, uniform_counts,
        wheel_of_digons,
    };

    fn find(host: &Digraph, pattern: &Digraph) -> Option<SubdivisionWitness> {
        contains_subdivision(host, pattern, None, &Budget::default()).unwrap()
    }

    #[test]
    fn cycle_in_longer_cycle() {
        let w = find(&directed_cycle(5).unwrap(), &directed_cycle(3).unwrap()).unwrap();
        w.validate().unwrap();
        assert_eq!(w.branch_map.len(), 3);
    }

    #[test]
    fn digon_has_no_transitive_triangle() {
        assert!(find(&bidirected_complete(2), &spindle(1, 2).unwrap()).is_none());
        assert!(find(&bidirected_complete(3), &transitive_tournament(3)).is_some());
    }

    #[test]
    fn wheel_of_digons_has_no_c33() {
        assert!(find(&wheel_of_digons(10).unwrap(), &spindle(3, 3).unwrap()).is_none());
        let w = find(&wheel_of_digons(10).unwrap(), &spindle(2, 2).unwrap()).unwrap();
        w.validate().unwrap();
    }

    #[test]
    fn min_counts_lengthen_paths() {
        let c6 = directed_cycle(6).unwrap();
        let c3 = directed_cycle(3).unwrap();
        let w = contains_subdivision(&c6, &c3, Some(&uniform_counts(&c3, 1)), &Budget::default())
            .unwrap()
            .unwrap();
        assert!(w.meets_min_counts(&uniform_counts(&c3, 1)));
        assert!(contains_subdivision(&c6, &c3, Some(&uniform_counts(&c3, 2)), &Budget::default())
            .unwrap()
            .is_none());
    }

    #[test]
    fn isolated_pattern_vertices() {
        let pattern = Digraph::empty(3);
        let w = find(&directed_cycle(3).unwrap(), &pattern).unwrap();
        assert_eq!(w.branch_map, vec![0, 1, 2]);
        assert!(find(&directed_cycle(2).unwrap(), &pattern).is_none());
    }

    #[test]
    fn refuses_over_budget() {
        let host = directed_cycle(20).unwrap();
        assert!(contains_subdivision(&host, &directed_cycle(3).unwrap(), None, &Budget::new(16))
            .is_err());
    }
}
