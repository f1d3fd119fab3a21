//! Exhaustive generation of small digraphs.
//!
//! Vertex pairs `(j, i)`, `j < i`, are decided in the order
//! `(0,1), (0,2), (1,2), (0,3), ...`, each as absent, `j -> i`, `i -> j` or a
//! digon. The canonical labelling of a digraph is the one minimising the bit
//! string that lists, for `i = 1, 2, ...` and `j < i`, the bits `[j -> i]`
//! and `[i -> j]`. Since that string starts with the string of the subgraph
//! induced by `0..i`, every prefix of a canonical labelling is canonical, so
//! a branch dies as soon as its completed prefix is not (orderly generation).

use crate::budget::{Budget, BudgetExceeded, DEFAULT_ENUMERATION_BUDGET};
use crate::graph::{cc_count, is_strongly_connected, Digraph};
use crate::par;

/// Which digraphs on `n` vertices to visit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub n: usize,
    /// No digons.
    pub oriented_only: bool,
    pub min_out_degree: usize,
    pub min_in_degree: usize,
    /// Smallest allowed directed cycle length; `None` means no constraint.
    pub min_digirth: Option<usize>,
    /// Underlying graph connected.
    pub connected: bool,
    pub strongly_connected: bool,
    /// One representative per isomorphism class instead of every labelling.
    pub up_to_iso: bool,
}

impl EnumerationSpec {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            oriented_only: false,
            min_out_degree: 0,
            min_in_degree: 0,
            min_digirth: None,
            connected: false,
            strongly_connected: false,
            up_to_iso: true,
        }
    }

    fn accepts(&self, d: &Digraph) -> bool {
        d.min_out_degree() >= self.min_out_degree
            && d.min_in_degree() >= self.min_in_degree
            && (!self.connected || cc_count(d) == 1)
            && (!self.strongly_connected || is_strongly_connected(d))
    }
}

/// The default enumeration budget of 7 vertices.
pub fn enumeration_budget() -> Budget {
    Budget::new(DEFAULT_ENUMERATION_BUDGET)
}

const MAX_N: usize = 8;

#[derive(Clone)]
struct State {
    out: [u8; MAX_N],
    outdeg: [u8; MAX_N],
    indeg: [u8; MAX_N],
    /// Undecided pairs touching each vertex.
    open: [u8; MAX_N],
}

struct Generator<'a> {
    spec: &'a EnumerationSpec,
    pairs: Vec<(usize, usize)>,
    states: Vec<u8>,
}

impl Generator<'_> {
    fn new(spec: &EnumerationSpec) -> Generator<'_> {
        let pairs = (1..spec.n).flat_map(|i| (0..i).map(move |j| (j, i))).collect();
        let digon_allowed = !spec.oriented_only && spec.min_digirth.is_none_or(|g| g <= 2);
        let states = if digon_allowed { vec![0, 1, 2, 3] } else { vec![0, 1, 2] };
        Generator { spec, pairs, states }
    }

    fn initial(&self) -> State {
        let n = self.spec.n;
        let mut open = [0u8; MAX_N];
        for v in open.iter_mut().take(n) {
            *v = (n - 1) as u8;
        }
        State {
            out: [0; MAX_N],
            outdeg: [0; MAX_N],
            indeg: [0; MAX_N],
            open,
        }
    }

    /// Applies `choice` to pair `p`; `None` when the branch is dead.
    fn step(&self, s: &State, p: usize, choice: u8) -> Option<State> {
        let (j, i) = self.pairs[p];
        let mut t = s.clone();
        t.open[j] -= 1;
        t.open[i] -= 1;
        let mut arcs = [(0, 0); 2];
        let mut count = 0;
        if choice & 1 == 1 {
            arcs[count] = (j, i);
            count += 1;
        }
        if choice & 2 == 2 {
            arcs[count] = (i, j);
            count += 1;
        }
        for &(a, b) in &arcs[..count] {
            if let Some(g) = self.spec.min_digirth {
                if g > 2 && reaches_within(&t.out, b, a, g - 2) {
                    return None;
                }
            }
            t.out[a] |= 1 << b;
            t.outdeg[a] += 1;
            t.indeg[b] += 1;
        }
        for v in [j, i] {
            let reachable_out = (t.outdeg[v] + t.open[v]) as usize;
            let reachable_in = (t.indeg[v] + t.open[v]) as usize;
            if reachable_out < self.spec.min_out_degree || reachable_in < self.spec.min_in_degree {
                return None;
            }
        }
        if self.spec.up_to_iso && j + 1 == i && !is_canonical(&t.out, i + 1) {
            return None;
        }
        Some(t)
    }

    fn finish(&self, s: &State) -> Option<Digraph> {
        let n = self.spec.n;
        let arcs = (0..n).flat_map(|a| (0..n).filter(move |&b| s.out[a] >> b & 1 == 1).map(move |b| (a, b)));
        let d = Digraph::from_arc_list(n, arcs).expect("generated arcs are valid");
        self.spec.accepts(&d).then_some(d)
    }

    fn run(&self, s: State, p: usize, out: &mut Vec<Digraph>) {
        if p == self.pairs.len() {
            out.extend(self.finish(&s));
            return;
        }
        for &choice in &self.states {
            if let Some(t) = self.step(&s, p, choice) {
                self.run(t, p + 1, out);
            }
        }
    }

    /// Surviving states after the first `depth` pair choices, in order.
    fn prefixes(&self, depth: usize) -> Vec<State> {
        let mut level = vec![self.initial()];
        for p in 0..depth {
            level = level
                .iter()
                .flat_map(|s| self.states.iter().filter_map(move |&c| self.step(s, p, c)))
                .collect();
        }
        level
    }
}

/// Whether `b` reaches `a` by a directed path of at most `max_len` arcs.
fn reaches_within(out: &[u8; MAX_N], b: usize, a: usize, max_len: usize) -> bool {
    let mut frontier: u8 = 1 << b;
    let mut seen = frontier;
    for _ in 0..max_len {
        if frontier >> a & 1 == 1 {
            return true;
        }
        let mut next = 0u8;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= out[v];
        }
        frontier = next & !seen;
        seen |= next;
        if frontier == 0 {
            return false;
        }
    }
    frontier >> a & 1 == 1
}

fn block(out: &[u8; MAX_N], sigma: &[usize], i: usize) -> u16 {
    let adj = |a: usize, b: usize| (out[a] >> b & 1) as u16;
    (0..i).fold(0, |acc, j| {
        let (x, y) = (sigma[j], sigma[i]);
        (acc << 2) | adj(x, y) << 1 | adj(y, x)
    })
}

/// Whether the labelling of `out` restricted to `0..m` is canonical.
fn is_canonical(out: &[u8; MAX_N], m: usize) -> bool {
    let identity: Vec<usize> = (0..m).collect();
    let reference: Vec<u16> = (0..m).map(|i| block(out, &identity, i)).collect();
    let mut sigma = vec![0; m];
    !smaller_exists(out, m, 0, 0, &mut sigma, &reference)
}

fn smaller_exists(
    out: &[u8; MAX_N],
    m: usize,
    i: usize,
    used: u8,
    sigma: &mut [usize],
    reference: &[u16],
) -> bool {
    if i == m {
        return false;
    }
    for c in (0..m).filter(|&c| used >> c & 1 == 0) {
        sigma[i] = c;
        let b = block(out, sigma, i);
        if b < reference[i] {
            return true;
        }
        if b == reference[i] && smaller_exists(out, m, i + 1, used | 1 << c, sigma, reference) {
            return true;
        }
    }
    false
}

/// Canonical relabelling of a digraph on at most 8 vertices.
pub fn canonical_form(d: &Digraph) -> Digraph {
    let n = d.order();
    assert!(n <= MAX_N, "canonical_form handles at most {MAX_N} vertices");
    let mut best: Option<(Vec<u16>, Vec<usize>)> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = [0u8; MAX_N];
    for v in d.vertices() {
        for &w in d.out_neighbours(v) {
            out[v] |= 1 << w;
        }
    }
    permutations(&mut perm, 0, &mut |sigma| {
        let key: Vec<u16> = (0..n).map(|i| block(&out, sigma, i)).collect();
        if best.as_ref().is_none_or(|(k, _)| key < *k) {
            best = Some((key, sigma.to_vec()));
        }
    });
    let sigma = best.map(|(_, s)| s).unwrap_or_default();
    // new vertex i is old vertex sigma[i]
    let mut position = vec![0; n];
    for (i, &old) in sigma.iter().enumerate() {
        position[old] = i;
    }
    d.permuted(&position)
}

fn permutations(perm: &mut [usize], k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permutations(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

/// Every digraph matching `spec`, in generation order. The work is split on
/// the first `⌈n/2⌉` pair choices; the order does not depend on the number
/// of workers.
pub fn enumerate_all(spec: &EnumerationSpec, budget: &Budget) -> Result<Vec<Digraph>, BudgetExceeded> {
    budget.check("enumeration", spec.n)?;
    assert!(spec.n <= MAX_N, "enumeration handles at most {MAX_N} vertices");
    let generator = Generator::new(spec);
    let depth = spec.n.div_ceil(2).min(generator.pairs.len());
    let prefixes = generator.prefixes(depth);
    let chunks = par::map(prefixes, |s| {
        let mut found = Vec::new();
        generator.run(s, depth, &mut found);
        found
    });
    Ok(chunks.into_iter().flatten().collect())
}

/// Calls `visit` once per digraph matching `spec` and returns how many were
/// visited. With the `parallel` feature `visit` runs on several threads.
pub fn enumerate<F>(spec: &EnumerationSpec, budget: &Budget, visit: F) -> Result<u64, BudgetExceeded>
where
    F: Fn(&Digraph) + Sync,
{
    budget.check("enumeration", spec.n)?;
    assert!(spec.n <= MAX_N, "enumeration handles at most {MAX_N} vertices");
    let generator = Generator::new(spec);
    let depth = spec.n.div_ceil(2).min(generator.pairs.len());
    let counts = par::map(generator.prefixes(depth), |s| {
        let mut found = Vec::new();
        generator.run(s, depth, &mut found);
        for d in &found {
            visit(d);
        }
        found.len() as u64
    });
    Ok(counts.into_iter().sum())
}
