//! Verification suites.
//!
//! A suite builds a corpus of [`Instance`]s and checks one predicate on each.
//! Instances are checked in parallel but reported in corpus order, so the
//! first failing instance, the counts and the verdict never depend on the
//! number of workers. Each suite has a `-weakened` twin whose hypothesis or
//! conclusion is deliberately wrong; those must fail.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::BigRational;
use thiserror::Error;

use super::enumerate::{enumerate_all, enumeration_budget, EnumerationSpec};
use crate::bounds::{g_bound, kn_recurrence, ScaledPower};
use crate::budget::{Budget, BudgetExceeded};
use crate::colouring::{cc_bound_holds, dichromatic_number, is_k_dicritical};
use crate::families::{
    bidirected_complete, circulant_two_jumps, dicritical_short_paths, directed_cycle, directed_path,
    out_star, paley7, universal_join, wheel_of_digons,
};
use crate::graph::{
    cc_count, digirth, is_two_arc_strong, is_two_connected_underlying, longest_directed_path,
    longest_oriented_path_and_cycle, Digraph, Vertex,
};
use crate::par;
use crate::subdivision::{
    find_out_star, find_spindle, find_tree_subdivision, ArcCounts, FinderError, SubdivisionWitness,
    TreeFinderError, TreeMode,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SuiteKind {
    /// `δ⁺ >= 2` oriented graphs contain a subdivision of `C(2,2)`.
    SpindleOutDegree,
    /// `δ⁺ >= 2`, digirth `>= 2ℓ`: a copy of `S_2^{+(ℓ)}` from every vertex.
    SmallOutStar,
    /// `δ⁺ >= k`, digirth `>= (k^ℓ - 1)/(k - 1) + 1`: `S_k^{+(ℓ)}` from every vertex.
    OutStar,
    /// `D_{k,n}` is `k`-dicritical without a directed path on `3k + 1` vertices.
    ShortPaths,
    /// The universal join of a `k`-dicritical digraph is `(k+1)`-dicritical.
    Join,
    /// `cc(D - S) <= (k-1)^|S| 3^C(|S|,2)` for `k`-dicritical `D`.
    ComponentBound,
    /// The recurrence for bidirected complete digraphs stays below `g(n)`.
    CompleteBound,
    /// The circulant on `Z/(2k-1)` has no subdivision of `C(k,k)`.
    Circulant,
    /// The tree peeling finder succeeds whenever its preconditions hold.
    Trees,
    /// 3-dicritical digraphs are 2-arc-strong.
    ArcStrong,
    /// Connected digraphs have a directed path on `min(n, δ⁺ + δ⁻ + 1)` vertices.
    LongPath,
    /// 2-connected underlying graphs with a path of length `t` have a cycle of
    /// length at least `2√t`.
    Dirac,
}

const IDS: [(&str, SuiteKind); 12] = [
    ("T6.2", SuiteKind::SpindleOutDegree),
    ("T6.4", SuiteKind::SmallOutStar),
    ("T6.3", SuiteKind::OutStar),
    ("T3.2", SuiteKind::ShortPaths),
    ("L3.1", SuiteKind::Join),
    ("C3.3.1", SuiteKind::ComponentBound),
    ("P2.3", SuiteKind::CompleteBound),
    ("S7", SuiteKind::Circulant),
    ("T5", SuiteKind::Trees),
    ("ARCSTRONG", SuiteKind::ArcStrong),
    ("B81", SuiteKind::LongPath),
    ("DIRAC", SuiteKind::Dirac),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Suite {
    pub kind: SuiteKind,
    /// The negative control with a broken hypothesis or conclusion.
    pub weakened: bool,
}

impl Suite {
    pub fn new(kind: SuiteKind) -> Self {
        Self { kind, weakened: false }
    }

    pub fn weakened(kind: SuiteKind) -> Self {
        Self { kind, weakened: true }
    }

    /// Every suite followed by its negative control.
    pub fn all() -> Vec<Suite> {
        IDS.iter()
            .flat_map(|&(_, kind)| [Suite::new(kind), Suite::weakened(kind)])
            .collect()
    }

    fn base_id(&self) -> &'static str {
        IDS.iter()
            .find(|(_, k)| *k == self.kind)
            .map(|(id, _)| *id)
            .expect("every kind has an id")
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.base_id())?;
        if self.weakened {
            f.write_str("-weakened")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown suite `{0}`")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (base, weakened) = match s.strip_suffix("-weakened") {
            Some(base) => (base, true),
            None => (s, false),
        };
        IDS.iter()
            .find(|(id, _)| id.eq_ignore_ascii_case(base))
            .map(|&(_, kind)| Suite { kind, weakened })
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

/// Suite parameters; `None` picks the suite's default.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteParams {
    /// Largest enumerated order (or `n_max` for P2.3, largest odd `n` for T3.2).
    pub max_n: Option<usize>,
    pub k: Option<usize>,
    pub l: Option<usize>,
    pub search_budget: Budget,
    pub enumeration_budget: Budget,
}

impl Default for SuiteParams {
    fn default() -> Self {
        Self {
            max_n: None,
            k: None,
            l: None,
            search_budget: Budget::default(),
            enumeration_budget: enumeration_budget(),
        }
    }
}

impl SuiteParams {
    fn max_n(&self, default: usize) -> usize {
        self.max_n.unwrap_or(default)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeTask {
    pub tree: Digraph,
    pub counts: ArcCounts,
    pub mode: TreeMode,
}

/// One member of a suite's corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub digraph: Digraph,
    /// Where the instance came from and its parameters, for reports.
    pub label: String,
    pub k: usize,
    pub l: usize,
    pub tree: Option<TreeTask>,
}

impl Instance {
    fn new(digraph: Digraph, label: impl Into<String>, k: usize, l: usize) -> Self {
        Self {
            digraph,
            label: label.into(),
            k,
            l,
            tree: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub instance: Instance,
    /// The violated predicate.
    pub predicate: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(Box<Counterexample>),
    Refused(String),
}

#[derive(Debug, Clone)]
pub struct Verdict {
    pub suite: Suite,
    pub params: SuiteParams,
    pub outcome: Outcome,
    /// Instances whose hypotheses held and whose predicate was evaluated.
    pub instances_checked: u64,
    /// Corpus members dropped because a hypothesis failed.
    pub instances_skipped: u64,
    /// Finder outputs that passed witness validation.
    pub witnesses_validated: u64,
    /// Logged measurements.
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    /// `SUITE <id> <pass|fail|refused> checked=<n> elapsed=<ms>`
    pub fn summary_line(&self) -> String {
        let status = match self.outcome {
            Outcome::Pass => "pass",
            Outcome::Fail(_) => "fail",
            Outcome::Refused(_) => "refused",
        };
        format!(
            "SUITE {} {status} checked={} elapsed={}",
            self.suite,
            self.instances_checked,
            self.elapsed.as_millis()
        )
    }

    /// Re-checks the counterexample of a failed verdict; `Some(true)` when it
    /// fails again.
    pub fn replay(&self) -> Option<bool> {
        match &self.outcome {
            Outcome::Fail(c) => Some(matches!(
                check(self.suite, &self.params, &c.instance),
                Checked::Violated(_)
            )),
            _ => None,
        }
    }
}

enum Checked {
    Holds { witnesses: u64, note: Option<String> },
    Skipped,
    Violated(String),
    Refused(String),
}

impl Checked {
    fn holds() -> Self {
        Checked::Holds {
            witnesses: 0,
            note: None,
        }
    }

    fn witnesses(witnesses: u64) -> Self {
        Checked::Holds { witnesses, note: None }
    }
}

impl From<BudgetExceeded> for Checked {
    fn from(e: BudgetExceeded) -> Self {
        Checked::Refused(e.to_string())
    }
}

fn finder_error(e: FinderError) -> Checked {
    match e {
        FinderError::Budget(b) => b.into(),
        FinderError::InvalidParameter(p) => Checked::Refused(p),
    }
}

/// Validates a finder output, turning a broken witness into a violation.
fn validated(w: &SubdivisionWitness) -> Result<(), Checked> {
    w.validate()
        .map_err(|v| Checked::Violated(format!("finder output fails validation: {v}")))
}

macro_rules! tryc {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return Checked::from(e),
        }
    };
}

/// Runs `suite` and reports the first failing instance in corpus order.
pub fn verify(suite: Suite, params: &SuiteParams) -> Verdict {
    let start = Instant::now();
    let mut verdict = Verdict {
        suite,
        params: params.clone(),
        outcome: Outcome::Pass,
        instances_checked: 0,
        instances_skipped: 0,
        witnesses_validated: 0,
        notes: Vec::new(),
        elapsed: Duration::ZERO,
    };
    let corpus = match corpus(suite, params) {
        Ok(c) => c,
        Err(refusal) => {
            verdict.outcome = Outcome::Refused(refusal);
            verdict.elapsed = start.elapsed();
            return verdict;
        }
    };
    let results = par::map(corpus, |inst| {
        let result = check(suite, params, &inst);
        (inst, result)
    });
    for (inst, result) in results {
        match result {
            Checked::Holds { witnesses, note } => {
                verdict.instances_checked += 1;
                verdict.witnesses_validated += witnesses;
                verdict.notes.extend(note);
            }
            Checked::Skipped => verdict.instances_skipped += 1,
            Checked::Violated(predicate) => {
                verdict.instances_checked += 1;
                verdict.outcome = Outcome::Fail(Box::new(Counterexample {
                    instance: inst,
                    predicate,
                }));
                break;
            }
            Checked::Refused(reason) => {
                verdict.outcome = Outcome::Refused(format!("{}: {reason}", inst.label));
                break;
            }
        }
    }
    verdict.elapsed = start.elapsed();
    verdict
}

/// Digraphs on `1..=max_n` vertices matching `spec`, in order of size.
fn enumerated(
    params: &SuiteParams,
    max_n: usize,
    spec: impl Fn(usize) -> EnumerationSpec,
) -> Result<Vec<Digraph>, String> {
    let mut all = Vec::new();
    for n in 1..=max_n {
        all.extend(enumerate_all(&spec(n), &params.enumeration_budget).map_err(|e| e.to_string())?);
    }
    Ok(all)
}

/// The circulant digraph on `Z/n` with the given jumps.
pub fn circulant(n: usize, jumps: &[usize]) -> Digraph {
    let arcs = (0..n).flat_map(|i| jumps.iter().map(move |&j| (i, (i + j) % n)));
    Digraph::from_arc_list(n, arcs.filter(|&(u, v)| u != v)).expect("circulant arcs are valid")
}

/// Circulants on `Z/n`, `n <= max_n`, with `k` distinct jumps.
fn circulant_fixtures(k: usize, max_n: usize) -> Vec<(Digraph, String)> {
    let mut out = Vec::new();
    for n in k + 1..=max_n {
        let mut jumps: Vec<usize> = (1..=k).collect();
        loop {
            out.push((circulant(n, &jumps), format!("circulant Z/{n} jumps {jumps:?}")));
            // next k-subset of 1..n
            let Some(i) = (0..k).rev().find(|&i| jumps[i] < n - k + i) else {
                break;
            };
            jumps[i] += 1;
            for j in i + 1..k {
                jumps[j] = jumps[j - 1] + 1;
            }
        }
    }
    out
}

fn out_star_girth(k: usize, l: usize) -> usize {
    // (k^ℓ - 1)/(k - 1) + 1 = 1 + k + ... + k^(ℓ-1) + 1
    (0..l).map(|i| k.pow(i as u32)).sum::<usize>() + 1
}

fn trees_up_to_three() -> Vec<(Digraph, &'static str)> {
    vec![
        (Digraph::empty(1), "K1"),
        (directed_path(2).expect("n >= 1"), "P2"),
        (directed_path(3).expect("n >= 1"), "P3"),
        (out_star(2, 1).expect("k, l >= 1"), "out-star"),
        (
            Digraph::from_arc_list(3, [(1, 0), (2, 0)]).expect("valid arcs"),
            "in-star",
        ),
    ]
}

/// Every map from the arcs of `t` to `0..=max`.
fn count_assignments(t: &Digraph, max: usize) -> Vec<ArcCounts> {
    let arcs: Vec<(Vertex, Vertex)> = t.arcs().collect();
    let mut all = vec![ArcCounts::new()];
    for arc in arcs {
        all = all
            .into_iter()
            .flat_map(|c| {
                (0..=max).map(move |v| {
                    let mut c = c.clone();
                    c.insert(arc, v);
                    c
                })
            })
            .collect();
    }
    all
}

fn tree_instance(host: Digraph, host_name: &str, t: &Digraph, tree_name: &str, counts: ArcCounts, mode: TreeMode) -> Instance {
    let label = format!(
        "{host_name}, {mode} tree {tree_name}, counts {:?}",
        counts.values().collect::<Vec<_>>()
    );
    Instance {
        digraph: host,
        label,
        k: 0,
        l: 0,
        tree: Some(TreeTask {
            tree: t.clone(),
            counts,
            mode,
        }),
    }
}

fn dicritical_fixtures() -> Vec<(Digraph, &'static str, usize)> {
    vec![
        (directed_cycle(3).expect("n >= 2"), "C3", 2),
        (directed_cycle(4).expect("n >= 2"), "C4", 2),
        (directed_cycle(5).expect("n >= 2"), "C5", 2),
        (bidirected_complete(2), "bid K2", 2),
        (bidirected_complete(3), "bid K3", 3),
        (wheel_of_digons(10).expect("n >= 3"), "D10", 3),
        (dicritical_short_paths(3, 5).expect("valid parameters"), "D(3,5)", 3),
        (dicritical_short_paths(3, 7).expect("valid parameters"), "D(3,7)", 3),
    ]
}

fn corpus(suite: Suite, params: &SuiteParams) -> Result<Vec<Instance>, String> {
    use SuiteKind::*;
    let weak = suite.weakened;
    let from_digraphs = |ds: Vec<Digraph>, k: usize, l: usize| -> Vec<Instance> {
        ds.into_iter()
            .map(|d| {
                let label = format!("enumerated n={}", d.order());
                Instance::new(d, label, k, l)
            })
            .collect()
    };
    Ok(match suite.kind {
        SpindleOutDegree => {
            let min_out = if weak { 1 } else { 2 };
            let ds = enumerated(params, params.max_n(5), |n| EnumerationSpec {
                oriented_only: true,
                min_out_degree: min_out,
                ..EnumerationSpec::new(n)
            })?;
            from_digraphs(ds, 2, 0)
        }
        SmallOutStar | OutStar => {
            let l = params.l.unwrap_or(2);
            let k = if suite.kind == SmallOutStar { 2 } else { params.k.unwrap_or(2) };
            if k < 2 || l < 1 {
                return Err("needs k >= 2 and l >= 1".into());
            }
            let girth = if suite.kind == SmallOutStar { 2 * l } else { out_star_girth(k, l) };
            let min_out = if weak { k - 1 } else { k };
            let ds = enumerated(params, params.max_n(6), |n| EnumerationSpec {
                min_out_degree: min_out,
                min_digirth: Some(girth),
                ..EnumerationSpec::new(n)
            })?;
            let mut all = from_digraphs(ds, k, l);
            // circulants give instances beyond the enumerated orders
            for (d, label) in circulant_fixtures(k, 13) {
                if d.min_out_degree() >= min_out && digirth(&d).at_least(girth) {
                    all.push(Instance::new(d, label, k, l));
                }
            }
            all
        }
        ShortPaths => {
            let k_max = params.k.unwrap_or(4);
            let mut all = Vec::new();
            for k in 3..=k_max {
                for n in (3..=params.max_n(11)).step_by(2) {
                    let d = dicritical_short_paths(k, n).map_err(|e| e.to_string())?;
                    all.push(Instance::new(d, format!("D({k},{n})"), k, 0));
                }
            }
            all
        }
        Join => dicritical_fixtures()
            .into_iter()
            .map(|(d, name, k)| Instance::new(d, name, k, 0))
            .collect(),
        ComponentBound => {
            let ds = enumerated(params, params.max_n(5), |n| EnumerationSpec {
                strongly_connected: true,
                ..EnumerationSpec::new(n)
            })?;
            // k = 0: use the dichromatic number
            let mut all = from_digraphs(ds, 0, 0);
            for (d, name, k) in dicritical_fixtures() {
                all.push(Instance::new(d, name, k, 0));
            }
            all
        }
        CompleteBound => (1..=params.max_n(64))
            .map(|n| Instance::new(bidirected_complete(n), format!("bid K{n}"), n, 0))
            .collect(),
        Circulant => (3..=params.k.unwrap_or(5))
            .map(|k| {
                let d = circulant_two_jumps(k).expect("k >= 2");
                Instance::new(d, format!("circulant k={k}"), k, 0)
            })
            .collect(),
        Trees => {
            let mut all = Vec::new();
            let p2 = directed_path(2).expect("n >= 1");
            let digon = bidirected_complete(2);
            for m in 5..=9 {
                let cycle = directed_cycle(m).expect("n >= 2");
                let name = format!("C{m}");
                if weak {
                    // count m - 1 sits exactly on the digirth hypothesis
                    let counts = [((0, 1), m - 1)].into();
                    all.push(tree_instance(cycle, &name, &p2, "P2", counts, TreeMode::Oriented));
                    continue;
                }
                for c in 0..=2 {
                    let counts = [((0, 1), c)].into();
                    all.push(tree_instance(cycle.clone(), &name, &p2, "P2", counts, TreeMode::Oriented));
                    if 2 * (c + 1) <= m {
                        let counts = [((0, 1), c), ((1, 0), c)].into();
                        all.push(tree_instance(cycle.clone(), &name, &digon, "K2", counts, TreeMode::Bidirected));
                    }
                }
            }
            if !weak {
                let host = paley7();
                for (t, name) in trees_up_to_three() {
                    for counts in count_assignments(&t, 2) {
                        all.push(tree_instance(host.clone(), "Paley7", &t, name, counts, TreeMode::Oriented));
                    }
                }
                let bid_p3 = Digraph::from_arc_list(3, [(0, 1), (1, 0), (1, 2), (2, 1)])
                    .expect("valid arcs");
                for (t, name) in [(digon, "K2"), (bid_p3, "P3")] {
                    let counts = t.arcs().map(|a| (a, 0)).collect();
                    all.push(tree_instance(host.clone(), "Paley7", &t, name, counts, TreeMode::Bidirected));
                }
            }
            all
        }
        ArcStrong => {
            let k = if weak { 2 } else { 3 };
            let ds = enumerated(params, params.max_n(5), |n| EnumerationSpec {
                strongly_connected: true,
                min_out_degree: k - 1,
                min_in_degree: k - 1,
                ..EnumerationSpec::new(n)
            })?;
            let mut all = from_digraphs(ds, k, 0);
            all.extend(
                dicritical_fixtures()
                    .into_iter()
                    .filter(|&(_, _, fk)| fk == k)
                    .map(|(d, name, _)| Instance::new(d, name, k, 0)),
            );
            all
        }
        LongPath | Dirac => {
            let ds = enumerated(params, params.max_n(5), |n| EnumerationSpec {
                connected: true,
                ..EnumerationSpec::new(n)
            })?;
            from_digraphs(ds, 0, 0)
        }
    })
}

fn check(suite: Suite, params: &SuiteParams, inst: &Instance) -> Checked {
    use SuiteKind::*;
    let d = &inst.digraph;
    let budget = &params.search_budget;
    let weak = suite.weakened;
    match suite.kind {
        SpindleOutDegree => match find_spindle(d, 2, budget) {
            Ok(Some(w)) => match validated(&w) {
                Ok(()) => Checked::witnesses(1),
                Err(c) => c,
            },
            Ok(None) => Checked::Violated("no subdivision of C(2,2)".into()),
            Err(e) => finder_error(e),
        },
        SmallOutStar | OutStar => {
            for u in d.vertices() {
                match find_out_star(d, u, inst.k, inst.l, budget) {
                    Ok(Some(w)) => {
                        if let Err(c) = validated(&w) {
                            return c;
                        }
                    }
                    Ok(None) => {
                        return Checked::Violated(format!(
                            "no copy of S_{}^+({}) centred at {u}",
                            inst.k, inst.l
                        ))
                    }
                    Err(e) => return finder_error(e),
                }
            }
            Checked::witnesses(d.order() as u64)
        }
        ShortPaths => {
            let verdict = tryc!(is_k_dicritical(d, inst.k, budget));
            if !verdict.is_dicritical() {
                return Checked::Violated(format!("not {}-dicritical: {verdict:?}", inst.k));
            }
            let path = tryc!(longest_directed_path(d, budget));
            let bound = if weak { 2 * inst.k - 2 } else { 3 * inst.k };
            if path.order() > bound {
                return Checked::Violated(format!(
                    "directed path on {} > {bound} vertices: {:?}",
                    path.order(),
                    path.vertices()
                ));
            }
            Checked::holds()
        }
        Join => {
            let base = tryc!(is_k_dicritical(d, inst.k, budget));
            if !base.is_dicritical() {
                return Checked::Violated(format!("fixture is not {}-dicritical: {base:?}", inst.k));
            }
            let target = if weak { inst.k + 2 } else { inst.k + 1 };
            let joined = tryc!(is_k_dicritical(&universal_join(d), target, budget));
            if joined.is_dicritical() {
                Checked::holds()
            } else {
                Checked::Violated(format!("join is not {target}-dicritical: {joined:?}"))
            }
        }
        ComponentBound => {
            let k = if inst.k == 0 {
                let (chi, _) = tryc!(dichromatic_number(d, budget));
                chi
            } else {
                inst.k
            };
            if k < 2 {
                return Checked::Skipped;
            }
            if !tryc!(is_k_dicritical(d, k, budget)).is_dicritical() {
                return Checked::Skipped;
            }
            if weak {
                return match cc_violation(d, 3, |_| BigUint::from(1u32)) {
                    None => Checked::holds(),
                    Some((set, cc)) => Checked::Violated(format!("k={k}: cc(D - {set:?}) = {cc} > 1")),
                };
            }
            let report = cc_bound_holds(d, k, 3);
            match report.violation {
                None => Checked::holds(),
                Some(v) => Checked::Violated(format!(
                    "k={k}: cc(D - {:?}) = {} > {}",
                    v.set, v.components, v.bound
                )),
            }
        }
        CompleteBound => {
            let n = inst.k as u64;
            let f = kn_recurrence(n).pop().expect("n >= 1");
            let x = BigRational::from_integer(n.into());
            let mut g = g_bound(&x);
            if weak {
                g = g.scale(&BigRational::new(1.into(), 4.into()));
            }
            let half = g_bound(&BigRational::new(n.into(), 2.into()));
            let lifted = ScaledPower::power_of_four(
                BigRational::new((n * n).into(), 2.into()) + &x,
            )
            .mul(&half);
            if !weak && lifted != g_bound(&x) {
                return Checked::Violated(format!("4^(n²/2 + n) g(n/2) != g(n) at n={n}"));
            }
            if f <= g {
                Checked::holds()
            } else {
                Checked::Violated(format!("F({n}) = {f} > {g}"))
            }
        }
        Circulant => {
            let k = inst.k;
            let girth = digirth(d);
            let note = Some(format!(
                "circulant k={k}: n={}, measured digirth={girth} (stated k-1={})",
                d.order(),
                k - 1
            ));
            if d.min_out_degree() != 2 || d.vertices().any(|v| d.out_degree(v) != 2) {
                return Checked::Violated("out-degrees are not all 2".into());
            }
            if d.order() != 2 * k - 1 {
                return Checked::Violated(format!("n = {} != 2k - 1", d.order()));
            }
            let target = if weak { k - 1 } else { k };
            match find_spindle(d, target, budget) {
                Ok(None) => Checked::Holds { witnesses: 0, note },
                Ok(Some(w)) => match validated(&w) {
                    Ok(()) => Checked::Violated(format!(
                        "subdivision of C({target},{target}) found: {}",
                        w.to_json()
                    )),
                    Err(c) => c,
                },
                Err(e) => finder_error(e),
            }
        }
        Trees => {
            let task = inst.tree.as_ref().expect("tree instances carry a task");
            match find_tree_subdivision(d, &task.tree, &task.counts, task.mode, budget) {
                Ok(w) => match validated(&w) {
                    Ok(()) => Checked::witnesses(1),
                    Err(c) => c,
                },
                Err(TreeFinderError::Precondition(_)) => Checked::Skipped,
                Err(TreeFinderError::Budget(b)) => b.into(),
                Err(e) => Checked::Violated(format!("preconditions hold but the finder failed: {e}")),
            }
        }
        ArcStrong => {
            if !tryc!(is_k_dicritical(d, inst.k, budget)).is_dicritical() {
                return Checked::Skipped;
            }
            if is_two_arc_strong(d) {
                Checked::holds()
            } else {
                Checked::Violated(format!("{}-dicritical but not 2-arc-strong", inst.k))
            }
        }
        LongPath => {
            let path = tryc!(longest_directed_path(d, budget));
            let degrees = d.min_out_degree() + d.min_in_degree() + 1;
            let bound = if weak { degrees } else { degrees.min(d.order()) };
            if path.order() >= bound {
                Checked::holds()
            } else {
                Checked::Violated(format!("longest directed path has {} < {bound} vertices", path.order()))
            }
        }
        Dirac => {
            if !is_two_connected_underlying(d) {
                return Checked::Skipped;
            }
            let ext = tryc!(longest_oriented_path_and_cycle(d, budget));
            let t = ext.path_order - 1;
            let c = if weak { ext.cycle_order.saturating_sub(1) } else { ext.cycle_order };
            // c >= 2√t  <=>  c² >= 4t
            if c * c >= 4 * t {
                Checked::holds()
            } else {
                Checked::Violated(format!(
                    "longest cycle {} vs path length {t}: {c}² < 4·{t}",
                    ext.cycle_order
                ))
            }
        }
    }
}

/// The first `S`, `|S| <= max_s`, with `cc(D - S) > bound(|S|)`.
fn cc_violation(d: &Digraph, max_s: usize, bound: impl Fn(usize) -> BigUint) -> Option<(Vec<Vertex>, usize)> {
    fn rec(
        d: &Digraph,
        set: &mut Vec<Vertex>,
        from: Vertex,
        size: usize,
        bound: &dyn Fn(usize) -> BigUint,
    ) -> Option<(Vec<Vertex>, usize)> {
        if set.len() == size {
            let cc = cc_count(&d.without_vertices(set).0);
            return (BigUint::from(cc) > bound(size)).then(|| (set.clone(), cc));
        }
        for v in from..d.order() {
            set.push(v);
            let found = rec(d, set, v + 1, size, bound);
            set.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
    (0..=max_s.min(d.order())).find_map(|s| rec(d, &mut Vec::new(), 0, s, &bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Length;

    fn run(id: &str, max_n: Option<usize>) -> Verdict {
        let params = SuiteParams {
            max_n,
            ..SuiteParams::default()
        };
        verify(id.parse().unwrap(), &params)
    }

    #[test]
    fn ids_round_trip() {
        for s in Suite::all() {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        }
        assert!("T9.9".parse::<Suite>().is_err());
    }

    #[test]
    fn spindle_suite_and_control() {
        let v = run("T6.2", Some(4));
        assert!(v.passed(), "{v:?}");
        let v = run("T6.2-weakened", Some(3));
        let Outcome::Fail(c) = &v.outcome else { panic!("{v:?}") };
        assert_eq!(c.instance.digraph.arc_count(), 3);
        assert_eq!(crate::graph::digirth(&c.instance.digraph), Length::Finite(3));
        assert_eq!(v.replay(), Some(true));
        assert!(v.summary_line().starts_with("SUITE T6.2-weakened fail checked=1 "));
    }

    #[test]
    fn arithmetic_suite() {
        assert!(run("P2.3", Some(16)).passed());
        let v = run("P2.3-weakened", Some(16));
        let Outcome::Fail(c) = &v.outcome else { panic!("{v:?}") };
        assert_eq!(c.instance.digraph.order(), 1);
    }

    #[test]
    fn circulant_suite_logs_digirth() {
        let v = run("S7", None);
        assert!(v.passed(), "{v:?}");
        assert_eq!(v.notes.len(), 3);
        assert!(!run("S7-weakened", None).passed());
    }

    #[test]
    fn circulants() {
        let d = circulant(7, &[1, 2]);
        assert_eq!(d.arc_count(), 14);
        assert_eq!(digirth(&d), Length::Finite(4));
        assert_eq!(circulant_fixtures(2, 5).len(), 1 + 3 + 6);
        assert_eq!(out_star_girth(2, 2), 4);
        assert_eq!(out_star_girth(3, 2), 5);
    }
}
