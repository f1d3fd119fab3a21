//! Exact dichromatic number by branch and bound.
//!
//! Vertices are coloured in smallest-last (degeneracy) order of the
//! underlying graph. A vertex may open colour class `c + 1` only when classes
//! `0..=c` are already in use, which removes colour permutations from the
//! search. Each class keeps the transitive closure of its induced subdigraph,
//! so testing whether a vertex can join a class is a handful of mask
//! operations.

use super::Dicolouring;
use crate::budget::{Budget, BudgetExceeded};
use crate::graph::{mask_iter, Digraph, Mask, Vertex};

/// Smallest-last order of `UG(D)`: repeatedly remove a vertex of minimum
/// degree (lowest id on ties), then reverse.
fn degeneracy_order(d: &Digraph) -> Vec<Vertex> {
    let n = d.order();
    let ug: Vec<Mask> = d.vertices().map(|v| d.out_mask(v) | d.in_mask(v)).collect();
    let mut alive = d.full_mask();
    let mut removal = Vec::with_capacity(n);
    while alive != 0 {
        let v = mask_iter(alive)
            .min_by_key(|&v| ((ug[v] & alive).count_ones(), v))
            .expect("alive is non-empty");
        alive &= !(1 << v);
        removal.push(v);
    }
    removal.reverse();
    removal
}

struct Search<'a> {
    d: &'a Digraph,
    order: Vec<Vertex>,
    k: usize,
    class_of: Vec<usize>,
    classes: Vec<Mask>,
    /// `reach[v]`: vertices reachable from `v` inside its class, `v` included.
    reach: Vec<Mask>,
}

impl Search<'_> {
    fn run(&mut self, idx: usize, used: usize) -> bool {
        if idx == self.order.len() {
            return true;
        }
        let v = self.order[idx];
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            let class = self.classes[c];
            let outs = self.d.out_mask(v) & class;
            let ins = self.d.in_mask(v) & class;
            let forward = mask_iter(outs).fold(0, |acc, w| acc | self.reach[w]);
            if forward & ins != 0 {
                continue;
            }
            // members that reach an in-neighbour of v now also reach v's closure
            let ancestors: Vec<Vertex> =
                mask_iter(class).filter(|&x| self.reach[x] & ins != 0).collect();
            let saved: Vec<Mask> = ancestors.iter().map(|&x| self.reach[x]).collect();
            let mine = forward | 1 << v;
            for &x in &ancestors {
                self.reach[x] |= mine;
            }
            self.reach[v] = mine;
            self.classes[c] |= 1 << v;
            self.class_of[v] = c;

            if self.run(idx + 1, used.max(c + 1)) {
                return true;
            }

            self.classes[c] &= !(1 << v);
            self.reach[v] = 0;
            for (&x, &r) in ancestors.iter().zip(&saved) {
                self.reach[x] = r;
            }
        }
        false
    }
}

/// A dicolouring with at most `k` colours, if one exists.
pub fn find_dicolouring(
    d: &Digraph,
    k: usize,
    budget: &Budget,
) -> Result<Option<Dicolouring>, BudgetExceeded> {
    budget.check("dicolouring solver", d.order())?;
    let n = d.order();
    if n == 0 {
        return Ok(Some(Dicolouring::from_classes(&[])));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut search = Search {
        d,
        order: degeneracy_order(d),
        k,
        class_of: vec![usize::MAX; n],
        classes: vec![0; k],
        reach: vec![0; n],
    };
    if !search.run(0, 0) {
        return Ok(None);
    }
    Ok(Some(Dicolouring::from_classes(&search.class_of)))
}

/// Exact `χ⃗(D)` with a witness colouring using exactly that many colours.
pub fn dichromatic_number(
    d: &Digraph,
    budget: &Budget,
) -> Result<(usize, Dicolouring), BudgetExceeded> {
    budget.check("dicolouring solver", d.order())?;
    for k in 0..=d.order() {
        if let Some(c) = find_dicolouring(d, k, budget)? {
            return Ok((c.k(), c));
        }
    }
    unreachable!("every digraph on n vertices is n-dicolourable")
}
