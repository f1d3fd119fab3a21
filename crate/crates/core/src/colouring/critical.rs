use num_bigint::BigUint;
use num_traits::{One, Pow};

use super::{dichromatic_number, find_dicolouring, Dicolouring};
use crate::budget::{Budget, BudgetExceeded};
use crate::graph::{cc_count, Digraph, Vertex, VertexSet};
use crate::par;

/// Outcome of a `k`-dicriticality test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DicriticalVerdict {
    Dicritical,
    /// `χ⃗(D) < k`; carries an optimal dicolouring.
    Colourable(Dicolouring),
    /// `χ⃗(D) > k`.
    TooChromatic { chi: usize },
    /// Deleting this arc leaves a digraph that still needs `k` colours.
    RedundantArc { arc: (Vertex, Vertex) },
    /// An isolated vertex whose deletion keeps `χ⃗ = k`.
    RedundantVertex { vertex: Vertex },
}

impl DicriticalVerdict {
    pub fn is_dicritical(&self) -> bool {
        matches!(self, DicriticalVerdict::Dicritical)
    }
}

/// Whether `D` is `k`-dicritical.
///
/// A proper subdigraph either misses an arc, and then lies in some `D \ e`,
/// or has every arc but misses a vertex, which must then be isolated. So the
/// test is `χ⃗(D) = k`, `χ⃗(D \ e) < k` for every arc, and no isolated vertex
/// unless `D` is a single vertex.
pub fn is_k_dicritical(
    d: &Digraph,
    k: usize,
    budget: &Budget,
) -> Result<DicriticalVerdict, BudgetExceeded> {
    let (chi, witness) = dichromatic_number(d, budget)?;
    if chi < k {
        return Ok(DicriticalVerdict::Colourable(witness));
    }
    if chi > k {
        return Ok(DicriticalVerdict::TooChromatic { chi });
    }
    if d.order() > 1 {
        if let Some(vertex) = d.vertices().find(|&v| d.degree(v) == 0) {
            return Ok(DicriticalVerdict::RedundantVertex { vertex });
        }
    }
    let arcs: Vec<(Vertex, Vertex)> = d.arcs().collect();
    let redundant = par::find_map_first(arcs, |(u, v)| {
        match find_dicolouring(&d.without_arc(u, v), k - 1, budget) {
            Ok(Some(_)) => None,
            Ok(None) => Some(Ok((u, v))),
            Err(e) => Some(Err(e)),
        }
    });
    match redundant {
        None => Ok(DicriticalVerdict::Dicritical),
        Some(Ok(arc)) => Ok(DicriticalVerdict::RedundantArc { arc }),
        Some(Err(e)) => Err(e),
    }
}

/// Greedy inclusion-maximal acyclic set: scan vertices in ascending order and
/// keep each one that closes no directed cycle with those already kept.
pub fn maximal_acyclic_set(d: &Digraph) -> VertexSet {
    let n = d.order();
    let mut inside = vec![false; n];
    let mut seen = vec![0usize; n];
    for v in 0..n {
        // is v reachable from one of its out-neighbours inside the set?
        let stamp = v + 1;
        let mut stack: Vec<Vertex> = d
            .out_neighbours(v)
            .iter()
            .copied()
            .filter(|&w| inside[w])
            .collect();
        for &w in &stack {
            seen[w] = stamp;
        }
        let mut closes = false;
        while let Some(x) = stack.pop() {
            if d.has_arc(x, v) {
                closes = true;
                break;
            }
            for &y in d.out_neighbours(x) {
                if inside[y] && seen[y] != stamp {
                    seen[y] = stamp;
                    stack.push(y);
                }
            }
        }
        if !closes {
            inside[v] = true;
        }
    }
    (0..n).filter(|&v| inside[v]).collect()
}

/// `(k-1)^s · 3^C(s,2)`, the bound on `cc(D - S)` for `|S| = s`.
pub fn component_bound(k: usize, s: usize) -> BigUint {
    let pairs = s * s.saturating_sub(1) / 2;
    Pow::pow(BigUint::from(k.saturating_sub(1)), s) * Pow::pow(BigUint::from(3u32), pairs)
}

/// `f_k(ℓ) = ((k-1)^ℓ · 3^C(ℓ,2))^(ℓ-1) + 1`.
///
/// # Panics
/// If `k < 2` or `l < 1`.
pub fn fk_bound(k: usize, l: usize) -> BigUint {
    assert!(k >= 2 && l >= 1, "fk_bound needs k >= 2 and l >= 1");
    Pow::pow(component_bound(k, l), l - 1) + BigUint::one()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CcViolation {
    pub set: Vec<Vertex>,
    pub components: usize,
    pub bound: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CcBoundReport {
    /// Number of sets `S` examined.
    pub checked: u64,
    pub violation: Option<CcViolation>,
}

impl CcBoundReport {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks `cc(D - S) <= (k-1)^|S| · 3^C(|S|,2)` for every `S` with
/// `|S| <= max_s`, in order of size and then lexicographically.
pub fn cc_bound_holds(d: &Digraph, k: usize, max_s: usize) -> CcBoundReport {
    let n = d.order();
    let mut checked = 0;
    for s in 0..=max_s.min(n) {
        let bound = component_bound(k, s);
        let mut set: Vec<Vertex> = (0..s).collect();
        loop {
            checked += 1;
            let components = cc_count(&d.without_vertices(&set).0);
            if BigUint::from(components) > bound {
                return CcBoundReport {
                    checked,
                    violation: Some(CcViolation {
                        set,
                        components,
                        bound,
                    }),
                };
            }
            if !next_combination(&mut set, n) {
                break;
            }
        }
    }
    CcBoundReport {
        checked,
        violation: None,
    }
}

/// Advances a sorted `s`-subset of `0..n` to its lexicographic successor.
fn next_combination(set: &mut [usize], n: usize) -> bool {
    let s = set.len();
    let Some(i) = (0..s).rev().find(|&i| set[i] < n - s + i) else {
        return false;
    };
    set[i] += 1;
    for j in i + 1..s {
        set[j] = set[j - 1] + 1;
    }
    true
}
