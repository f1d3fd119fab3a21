//! Brute-force oracles. They share nothing with the library beyond the
//! `Digraph` accessors, and are only fast enough for tiny inputs.

#![allow(dead_code)]

use std::collections::BTreeMap;

use dicrit::Digraph;

pub fn adjacency(d: &Digraph) -> Vec<Vec<bool>> {
    let n = d.order();
    let mut a = vec![vec![false; n]; n];
    for (u, v) in d.arcs() {
        a[u][v] = true;
    }
    a
}

/// Peels sources off `members` until nothing is left (acyclic) or stuck.
pub fn acyclic(a: &[Vec<bool>], members: &[usize]) -> bool {
    let mut left: Vec<usize> = members.to_vec();
    while !left.is_empty() {
        let source = left
            .iter()
            .position(|&v| left.iter().all(|&u| !a[u][v]));
        match source {
            Some(i) => {
                left.swap_remove(i);
            }
            None => return false,
        }
    }
    true
}

/// Tries every map `V -> {0..k}`.
pub fn k_colourable(d: &Digraph, k: usize) -> bool {
    let n = d.order();
    if n == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let a = adjacency(d);
    let total = k.pow(n as u32);
    (0..total).any(|mut code| {
        let mut classes = vec![Vec::new(); k];
        for v in 0..n {
            classes[code % k].push(v);
            code /= k;
        }
        classes.iter().all(|c| acyclic(&a, c))
    })
}

pub fn chi(d: &Digraph) -> usize {
    (0..=d.order()).find(|&k| k_colourable(d, k)).unwrap()
}

/// Smallest `L` with a closed walk of length `L`, by boolean matrix powers.
pub fn digirth(d: &Digraph) -> Option<usize> {
    let n = d.order();
    let a = adjacency(d);
    let mut power = a.clone();
    for len in 1..=n {
        if (0..n).any(|i| power[i][i]) {
            return Some(len);
        }
        let mut next = vec![vec![false; n]; n];
        for i in 0..n {
            for m in 0..n {
                if power[i][m] {
                    for j in 0..n {
                        next[i][j] |= a[m][j];
                    }
                }
            }
        }
        power = next;
    }
    None
}

/// Order of a longest directed path, by depth-first search over simple paths.
pub fn longest_path_order(d: &Digraph) -> usize {
    let a = adjacency(d);
    let n = d.order();
    fn grow(a: &[Vec<bool>], v: usize, seen: &mut Vec<bool>) -> usize {
        let mut best = 1;
        for w in 0..a.len() {
            if a[v][w] && !seen[w] {
                seen[w] = true;
                best = best.max(1 + grow(a, w, seen));
                seen[w] = false;
            }
        }
        best
    }
    (0..n)
        .map(|s| {
            let mut seen = vec![false; n];
            seen[s] = true;
            grow(&a, s, &mut seen)
        })
        .max()
        .unwrap_or(0)
}

/// `χ⃗ = k`, every arc deletion drops it, and no isolated vertex.
pub fn is_k_dicritical(d: &Digraph, k: usize) -> bool {
    if chi(d) != k {
        return false;
    }
    if d.order() > 1 && d.vertices().any(|v| d.out_degree(v) + d.in_degree(v) == 0) {
        return false;
    }
    d.arcs().all(|(u, v)| k_colourable(&d.without_arc(u, v), k - 1))
}

fn simple_paths(
    a: &[Vec<bool>],
    to: usize,
    blocked: &[bool],
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let v = *path.last().unwrap();
    for w in 0..a.len() {
        if !a[v][w] {
            continue;
        }
        if w == to {
            path.push(w);
            out.push(path.clone());
            path.pop();
        } else if !blocked[w] && !path.contains(&w) {
            path.push(w);
            simple_paths(a, to, blocked, path, out);
            path.pop();
        }
    }
}

/// Whether `host` contains a subdivision of `pattern` with every arc `uv`
/// subdivided at least `counts[uv]` times. Tries every injective branch map
/// and every combination of simple paths.
pub fn contains_subdivision(
    host: &Digraph,
    pattern: &Digraph,
    counts: &BTreeMap<(usize, usize), usize>,
) -> bool {
    let a = adjacency(host);
    let arcs: Vec<(usize, usize)> = pattern.arcs().collect();
    let mut map = Vec::new();
    injective_maps(host.order(), pattern.order(), &mut map, &mut |map| {
        let mut blocked = vec![false; host.order()];
        for &x in map {
            blocked[x] = true;
        }
        route(&a, map, &arcs, counts, 0, &mut blocked)
    })
}

fn injective_maps(
    n: usize,
    p: usize,
    map: &mut Vec<usize>,
    test: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if map.len() == p {
        return test(map);
    }
    for x in 0..n {
        if !map.contains(&x) {
            map.push(x);
            if injective_maps(n, p, map, test) {
                return true;
            }
            map.pop();
        }
    }
    false
}

fn route(
    a: &[Vec<bool>],
    map: &[usize],
    arcs: &[(usize, usize)],
    counts: &BTreeMap<(usize, usize), usize>,
    i: usize,
    blocked: &mut Vec<bool>,
) -> bool {
    let Some(&(u, v)) = arcs.get(i) else {
        return true;
    };
    let min_arcs = 1 + counts.get(&(u, v)).copied().unwrap_or(0);
    let mut paths = Vec::new();
    simple_paths(a, map[v], blocked, &mut vec![map[u]], &mut paths);
    for p in paths.into_iter().filter(|p| p.len() > min_arcs) {
        let inner = &p[1..p.len() - 1];
        for &x in inner {
            blocked[x] = true;
        }
        let ok = route(a, map, arcs, counts, i + 1, blocked);
        for &x in inner {
            blocked[x] = false;
        }
        if ok {
            return true;
        }
    }
    false
}

/// All `n^2 - n` possible arcs chosen by the bits of `code`.
pub fn from_code(n: usize, code: u64) -> Digraph {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    let arcs = pairs
        .iter()
        .enumerate()
        .filter(|&(i, _)| code >> i & 1 == 1)
        .map(|(_, &p)| p);
    Digraph::from_arc_list(n, arcs).unwrap()
}

/// Sorted arc list minimised over every relabelling.
pub fn canonical_key(d: &Digraph) -> Vec<(usize, usize)> {
    let n = d.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    loop {
        let mut arcs: Vec<(usize, usize)> = d.arcs().map(|(u, v)| (perm[u], perm[v])).collect();
        arcs.sort_unstable();
        if best.as_ref().is_none_or(|b| arcs < *b) {
            best = Some(arcs);
        }
        if !next_permutation(&mut perm) {
            return best.unwrap();
        }
    }
}

pub fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
