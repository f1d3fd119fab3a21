use std::collections::VecDeque;

use super::{Digraph, Length, Vertex};

/// Simple undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    adj: Vec<Vec<Vertex>>,
}

impl UndirectedGraph {
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `{u, v}` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

/// `UG(D)`: `{u, v}` is an edge iff `uv` or `vu` is an arc.
pub fn underlying_graph(d: &Digraph) -> UndirectedGraph {
    let adj = d
        .vertices()
        .map(|v| {
            let mut ns: Vec<Vertex> = d
                .out_neighbours(v)
                .iter()
                .chain(d.in_neighbours(v))
                .copied()
                .collect();
            ns.sort_unstable();
            ns.dedup();
            ns
        })
        .collect();
    UndirectedGraph { adj }
}

/// BFS distances from `source`; `Length::Infinite` for unreachable vertices.
pub fn distances_from(d: &Digraph, source: Vertex) -> Vec<Length> {
    let mut dist = vec![Length::Infinite; d.order()];
    dist[source] = Length::Finite(0);
    let mut queue = VecDeque::from([(source, 0)]);
    while let Some((v, dv)) = queue.pop_front() {
        for &w in d.out_neighbours(v) {
            if dist[w].is_infinite() {
                dist[w] = Length::Finite(dv + 1);
                queue.push_back((w, dv + 1));
            }
        }
    }
    dist
}

pub fn distance(d: &Digraph, u: Vertex, v: Vertex) -> Length {
    distances_from(d, u)[v]
}

/// Length of a shortest directed cycle.
///
/// For each vertex `v`, the shortest cycle through `v` closes an arc `wv`
/// after a shortest `(v, w)`-path.
pub fn digirth(d: &Digraph) -> Length {
    let mut best = Length::Infinite;
    for v in d.vertices() {
        let dist = distances_from(d, v);
        for &w in d.in_neighbours(v) {
            if let Length::Finite(l) = dist[w] {
                best = best.min(Length::Finite(l + 1));
            }
        }
        if best == Length::Finite(2) {
            break;
        }
    }
    best
}

/// Girth of the underlying graph. A digon is a single edge, so it does not
/// make a cycle.
pub fn girth(d: &Digraph) -> Length {
    let g = underlying_graph(d);
    let n = g.order();
    let mut best = Length::Infinite;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbours(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    best = best.min(Length::Finite(dist[v] + dist[w] + 1));
                }
            }
        }
    }
    best
}

/// Number of connected components of `UG(D)`.
pub fn cc_count(d: &Digraph) -> usize {
    underlying_graph(d).components().len()
}

/// Strongly connected components of a digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongComponents {
    /// Each component sorted; components ordered by smallest member.
    pub components: Vec<Vec<Vertex>>,
    /// `terminal[i]`: no arc leaves `components[i]`.
    pub terminal: Vec<bool>,
    /// Component index of every vertex.
    pub component_of: Vec<usize>,
}

impl StrongComponents {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn terminal_components(&self) -> impl Iterator<Item = &[Vertex]> {
        self.components
            .iter()
            .zip(&self.terminal)
            .filter(|(_, &t)| t)
            .map(|(c, _)| c.as_slice())
    }
}

/// Tarjan's algorithm, iterative.
pub fn strong_components(d: &Digraph) -> StrongComponents {
    let n = d.order();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut raw: Vec<Vec<Vertex>> = Vec::new();
    let mut next = 0;

    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut call: Vec<(Vertex, usize)> = vec![(root, 0)];
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut i)) = call.last_mut() {
            if let Some(&w) = d.out_neighbours(v).get(*i) {
                *i += 1;
                if index[w] == usize::MAX {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                raw.push(comp);
            }
        }
    }

    raw.sort_by_key(|c| c[0]);
    let mut component_of = vec![0; n];
    for (i, comp) in raw.iter().enumerate() {
        for &v in comp {
            component_of[v] = i;
        }
    }
    let terminal = raw
        .iter()
        .enumerate()
        .map(|(i, comp)| {
            comp.iter()
                .all(|&v| d.out_neighbours(v).iter().all(|&w| component_of[w] == i))
        })
        .collect();
    StrongComponents {
        components: raw,
        terminal,
        component_of,
    }
}

pub fn is_strongly_connected(d: &Digraph) -> bool {
    d.order() > 0 && strong_components(d).len() == 1
}

/// Strongly connected after deleting any single arc.
pub fn is_two_arc_strong(d: &Digraph) -> bool {
    is_strongly_connected(d)
        && d.arcs()
            .all(|(u, v)| is_strongly_connected(&d.without_arc(u, v)))
}

/// `UG(D)` is 2-connected: at least 3 vertices, connected, no cut vertex.
pub fn is_two_connected_underlying(d: &Digraph) -> bool {
    let n = d.order();
    if n < 3 || cc_count(d) != 1 {
        return false;
    }
    (0..n).all(|v| cc_count(&d.without_vertices(&[v]).0) == 1)
}
