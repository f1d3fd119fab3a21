//! Internally disjoint paths by unit-vertex-capacity max-flow.

use std::collections::VecDeque;

use crate::graph::{Digraph, DirectedPath, Vertex, VertexSet};

/// Directed paths sharing only their designated endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSystem {
    pub paths: Vec<DirectedPath>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DisjointPaths {
    Paths(PathSystem),
    /// Fewer than the requested number of vertices meeting every path.
    Cut(VertexSet),
}

const INF: u32 = u32::MAX / 2;

struct Network {
    head: Vec<usize>,
    cap: Vec<u32>,
    /// Edge ids leaving each node; edge `e ^ 1` is the reverse of `e`.
    out: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Self {
            head: Vec::new(),
            cap: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    fn add(&mut self, from: usize, to: usize, cap: u32) {
        self.out[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.out[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    /// Nodes reachable from `source` in the residual network, and the edge
    /// used to reach each one.
    fn residual_bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut via = vec![None; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for &e in &self.out[x] {
                let y = self.head[e];
                if self.cap[e] > 0 && !seen[y] {
                    seen[y] = true;
                    via[y] = Some(e);
                    queue.push_back(y);
                }
            }
        }
        via[source] = Some(usize::MAX);
        via
    }
}

/// Node layout: `2v` is the entry of `v`, `2v + 1` its exit, `2n` the sink.
/// Every vertex other than `u` passes at most one unit, except targets when
/// `bounded_targets` is false. Paths stop at the first target they meet. The
/// cut holds `v` for each saturated vertex edge and `t` for each saturated
/// arc `ut`.
pub(crate) fn max_flow_paths(
    d: &Digraph,
    u: Vertex,
    targets: &VertexSet,
    k: usize,
    bounded_targets: bool,
) -> Result<Vec<DirectedPath>, VertexSet> {
    let n = d.order();
    let sink = 2 * n;
    let mut net = Network::new(2 * n + 1);
    for v in d.vertices() {
        if v == u {
            continue;
        }
        if targets.contains(v) {
            net.add(2 * v, sink, if bounded_targets { 1 } else { INF });
        } else {
            net.add(2 * v, 2 * v + 1, 1);
        }
    }
    for (x, y) in d.arcs() {
        if y != u && (x == u || !targets.contains(x)) {
            let cap = if x == u && targets.contains(y) { 1 } else { INF };
            net.add(2 * x + 1, 2 * y, cap);
        }
    }
    let source = 2 * u + 1;
    let mut flow = 0;
    while flow < k {
        let via = net.residual_bfs(source);
        if via[sink].is_none() {
            let mut cut = VertexSet::new();
            for v in d.vertices().filter(|&v| v != u) {
                let entered = via[2 * v].is_some();
                let crossing = if targets.contains(v) {
                    entered || d.has_arc(u, v)
                } else {
                    entered && via[2 * v + 1].is_none()
                };
                if crossing {
                    cut.insert(v);
                }
            }
            return Err(cut);
        }
        let mut x = sink;
        while x != source {
            let e = via[x].expect("augmenting path is connected");
            net.cap[e] -= 1;
            net.cap[e ^ 1] += 1;
            x = net.head[e ^ 1];
        }
        flow += 1;
    }
    // Decompose: forward edges carrying flow have a reverse with positive
    // residual capacity. Only arc edges leave an exit node.
    let mut paths = Vec::with_capacity(k);
    for _ in 0..k {
        let mut vertices = vec![u];
        let mut x = source;
        loop {
            let e = net.out[x]
                .iter()
                .copied()
                .find(|&e| e % 2 == 0 && net.cap[e ^ 1] > 0)
                .expect("flow conservation");
            net.cap[e ^ 1] -= 1;
            let entry = net.head[e];
            let v = entry / 2;
            vertices.push(v);
            if targets.contains(v) {
                break;
            }
            let inner = net.out[entry]
                .iter()
                .copied()
                .find(|&e| e % 2 == 0 && net.head[e] == entry + 1)
                .expect("vertex edge exists");
            net.cap[inner ^ 1] -= 1;
            x = entry + 1;
        }
        paths.push(DirectedPath::new(vertices));
    }
    Ok(paths)
}

/// `k` distinct internally disjoint directed paths from `u` to `targets`, or
/// a vertex cut `S ⊆ V(D) - u` with `|S| < k` meeting every such path
/// system. A returned path meets exactly one target, its last vertex; two
/// paths may end at the same target.
///
/// # Panics
/// If `u` is out of range or a target.
pub fn disjoint_paths(d: &Digraph, u: Vertex, targets: &VertexSet, k: usize) -> DisjointPaths {
    assert!(u < d.order(), "source out of range");
    assert!(!targets.contains(u), "source must not be a target");
    match max_flow_paths(d, u, targets, k, false) {
        Ok(paths) => DisjointPaths::Paths(PathSystem { paths }),
        Err(cut) => DisjointPaths::Cut(cut),
    }
}
