//! Rewrites of unicyclic graphs that strictly increase RDR.
//!
//! * Edge lifting contracts a cut edge `u0 v0` whose sides both have at least
//!   two vertices, then re-attaches the spare vertex as a pendant on the
//!   merged vertex.
//! * Cycle lifting moves every pendant of a cycle-with-stars graph onto one
//!   cycle vertex.
//! * Cycle shrinking turns `S_n^p` (`p >= 4`) into `S_n^3`.
//!
//! Chaining them in that order carries any unicyclic graph to `S_n^3`, which
//! is what [`reduce_to_extremal`] does. Rewrites never touch their input and
//! reject identity rewrites instead of returning a zero delta.

use std::fmt;

use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::enumerate::{enumerate_unicyclic, make_s, worker_pool, EnumerateError};
use crate::graph::{
    canonical_code, classify_unicyclic, to_graph6, Graph, GraphError, UnicyclicDecomposition,
};
use crate::indices::{rdr_exact, IndexError};
use crate::rational::{format_rational, Rational};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TransformError {
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("{0}-{1} is not a cut edge")]
    NotCutEdge(usize, usize),
    #[error("identity rewrite: {0}")]
    Identity(&'static str),
    #[error("hanging tree at vertex {0} is not a pendant star; edge-lift it first")]
    NotStarForest(usize),
    #[error("vertex {0} is not on the cycle")]
    NotOnCycle(usize),
    #[error("graph is not of the form S_n^p")]
    NotSnpShape,
    #[error("reduction ended outside the S_n^3 class")]
    NotExtremal,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TransformKind {
    EdgeLift,
    CycleLift,
    CycleShrink,
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TransformKind::EdgeLift => "edge-lift",
            TransformKind::CycleLift => "cycle-lift",
            TransformKind::CycleShrink => "cycle-shrink",
        })
    }
}

/// Where a rewrite was applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Site {
    /// `u0` keeps the merged neighborhood; `v0` becomes the new pendant.
    CutEdge { u0: usize, v0: usize },
    /// Cycle vertex receiving every pendant.
    Target { vertex: usize },
    /// Length of the cycle that was shrunk to a triangle.
    CycleLength { p: usize },
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Site::CutEdge { u0, v0 } => write!(f, "cut-edge {u0}-{v0}"),
            Site::Target { vertex } => write!(f, "target {vertex}"),
            Site::CycleLength { p } => write!(f, "cycle-length {p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TransformOutcome {
    pub before: Graph,
    pub after: Graph,
    pub kind: TransformKind,
    pub site: Site,
    pub rdr_before: Rational,
    pub rdr_after: Rational,
}

impl TransformOutcome {
    fn new(before: &Graph, after: Graph, kind: TransformKind, site: Site) -> Result<Self, TransformError> {
        Ok(TransformOutcome {
            rdr_before: rdr_exact(before)?,
            rdr_after: rdr_exact(&after)?,
            before: before.clone(),
            after,
            kind,
            site,
        })
    }

    pub fn delta(&self) -> Rational {
        &self.rdr_after - &self.rdr_before
    }

    pub fn is_increase(&self) -> bool {
        self.rdr_after > self.rdr_before
    }

    pub fn to_json(&self) -> Result<Value, TransformError> {
        Ok(json!({
            "kind": self.kind.to_string(),
            "site": self.site.to_string(),
            "rdr_before": format_rational(&self.rdr_before),
            "rdr_after": format_rational(&self.rdr_after),
            "before_code": canonical_code(&self.before)?.to_hex(),
            "after_code": canonical_code(&self.after)?.to_hex(),
            "delta_positive": self.is_increase(),
        }))
    }

    pub fn csv_record(&self) -> Result<Vec<String>, TransformError> {
        Ok(vec![
            self.kind.to_string(),
            self.site.to_string(),
            format_rational(&self.rdr_before),
            format_rational(&self.rdr_after),
            canonical_code(&self.before)?.to_hex(),
            canonical_code(&self.after)?.to_hex(),
            self.is_increase().to_string(),
        ])
    }
}

pub const OUTCOME_COLUMNS: [&str; 7] = [
    "kind",
    "site",
    "rdr_before",
    "rdr_after",
    "before_code",
    "after_code",
    "delta_positive",
];

fn rebuild(g: &Graph, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph, GraphError> {
    let mut out = Graph::empty(g.n());
    for (u, v) in edges {
        out.try_add_edge(u, v)?;
    }
    Ok(out)
}

/// Edge lifting at `{u0, v0}`.
pub fn edge_lift(g: &Graph, u0: usize, v0: usize) -> Result<TransformOutcome, TransformError> {
    if !g.has_edge(u0, v0) {
        return Err(TransformError::NotAnEdge(u0, v0));
    }
    let n = g.n();
    let side_u = g.component_size_without_edge(u0, u0, v0);
    if side_u == n {
        return Err(TransformError::NotCutEdge(u0, v0));
    }
    if side_u < 2 || n - side_u < 2 {
        return Err(TransformError::Identity("one side of the cut edge is a single vertex"));
    }
    let after = rebuild(
        g,
        g.edges().into_iter().map(|(a, b)| match (a, b) {
            (a, b) if a == v0 && b != u0 => (u0, b),
            (a, b) if b == v0 && a != u0 => (a, u0),
            e => e,
        }),
    )?;
    TransformOutcome::new(g, after, TransformKind::EdgeLift, Site::CutEdge { u0, v0 })
}

/// Every cut edge whose removal leaves two sides of at least two vertices.
pub fn edge_lift_sites(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    g.edges()
        .into_iter()
        .filter(|&(u, v)| {
            let side = g.component_size_without_edge(u, u, v);
            side < n && side >= 2 && n - side >= 2
        })
        .collect()
}

fn pendant_counts(g: &Graph, d: &UnicyclicDecomposition) -> Result<Vec<usize>, TransformError> {
    for v in 0..g.n() {
        if d.tree_dist(v) > 1 {
            return Err(TransformError::NotStarForest(d.anchor(v)));
        }
    }
    Ok(d.cycle().iter().map(|&c| d.tree_of(c).len() - 1).collect())
}

/// Cycle lifting onto the cycle vertex with the most pendants (ties go to
/// the earliest position of the canonical cycle order).
pub fn cycle_lift(g: &Graph) -> Result<TransformOutcome, TransformError> {
    let d = classify_unicyclic(g)?;
    let counts = pendant_counts(g, &d)?;
    let best = (0..counts.len())
        .max_by(|&a, &b| counts[a].cmp(&counts[b]).then(b.cmp(&a)))
        .unwrap();
    lift_onto(g, &d, &counts, d.cycle()[best])
}

/// Cycle lifting onto an explicit cycle vertex.
pub fn cycle_lift_to(g: &Graph, target: usize) -> Result<TransformOutcome, TransformError> {
    let d = classify_unicyclic(g)?;
    let counts = pendant_counts(g, &d)?;
    lift_onto(g, &d, &counts, target)
}

fn lift_onto(
    g: &Graph,
    d: &UnicyclicDecomposition,
    counts: &[usize],
    target: usize,
) -> Result<TransformOutcome, TransformError> {
    if target >= g.n() || !d.is_on_cycle(target) {
        return Err(TransformError::NotOnCycle(target));
    }
    if counts.iter().filter(|&&c| c > 0).count() < 2 {
        return Err(TransformError::Identity("fewer than two cycle vertices carry pendants"));
    }
    let after = rebuild(
        g,
        g.edges().into_iter().map(|(a, b)| {
            if d.is_on_cycle(a) && d.is_on_cycle(b) {
                (a, b)
            } else {
                let pendant = if d.is_on_cycle(a) { b } else { a };
                (target, pendant)
            }
        }),
    )?;
    TransformOutcome::new(g, after, TransformKind::CycleLift, Site::Target { vertex: target })
}

/// Cycle order `v1..vp` of an `S_n^p`, starting at the pendant-bearing
/// vertex, or `None` if `g` has another shape.
fn snp_cycle(g: &Graph) -> Result<Option<Vec<usize>>, TransformError> {
    let d = classify_unicyclic(g)?;
    let mut hub = None;
    for v in (0..g.n()).filter(|&v| !d.is_on_cycle(v)) {
        if d.tree_dist(v) != 1 || hub.is_some_and(|h| h != d.anchor(v)) {
            return Ok(None);
        }
        hub = Some(d.anchor(v));
    }
    let cycle = d.cycle();
    let start = hub.map_or(0, |h| d.position(h).unwrap());
    Ok(Some((0..cycle.len()).map(|k| cycle[(start + k) % cycle.len()]).collect()))
}

/// Cycle shrinking of `S_n^p`, `p >= 4`, realized by rebuilding the result
/// as a triangle `v1 v2 vp` with every other vertex pendant on `v1`.
pub fn cycle_shrink(g: &Graph) -> Result<TransformOutcome, TransformError> {
    let cycle = snp_cycle(g)?.ok_or(TransformError::NotSnpShape)?;
    let p = cycle.len();
    if p == 3 {
        return Err(TransformError::Identity("the cycle is already a triangle"));
    }
    let (v1, v2, vp) = (cycle[0], cycle[1], cycle[p - 1]);
    let after = rebuild(
        g,
        [(v1, v2), (v2, vp), (vp, v1)]
            .into_iter()
            .chain((0..g.n()).filter(|&w| w != v1 && w != v2 && w != vp).map(|w| (v1, w))),
    )?;
    debug_assert_eq!(cycle_shrink_literal(g).ok().as_ref(), Some(&after));
    TransformOutcome::new(g, after, TransformKind::CycleShrink, Site::CycleLength { p })
}

/// The edge surgery on `S_n^p`: delete `v2v3, …, v_{p-1}v_p`, add `v2v_p`
/// and `v3v1, …, v_{p-1}v1`.
pub fn cycle_shrink_literal(g: &Graph) -> Result<Graph, TransformError> {
    let v = snp_cycle(g)?.ok_or(TransformError::NotSnpShape)?;
    let p = v.len();
    if p == 3 {
        return Err(TransformError::Identity("the cycle is already a triangle"));
    }
    let deleted: Vec<(usize, usize)> = (1..p - 1).map(|i| (v[i], v[i + 1])).collect();
    let is_deleted = |a: usize, b: usize| deleted.iter().any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a));
    let kept = g.edges().into_iter().filter(|&(a, b)| !is_deleted(a, b));
    let added = std::iter::once((v[1], v[p - 1])).chain((2..p - 1).map(|i| (v[i], v[0])));
    Ok(rebuild(g, kept.chain(added))?)
}

/// Deepest tree edge whose child is not a leaf, as `(parent, child)`.
fn deepest_lift_site(g: &Graph, d: &UnicyclicDecomposition) -> Option<(usize, usize)> {
    (0..g.n())
        .filter(|&v| !d.is_on_cycle(v) && g.degree(v) >= 2)
        .map(|v| (d.parent(v).unwrap(), v))
        .max_by(|a, b| d.tree_dist(a.1).cmp(&d.tree_dist(b.1)).then(b.cmp(a)))
}

/// Applies edge lifts (deepest first), then one cycle lift, then one cycle
/// shrink, ending at a graph isomorphic to `S_n^3`.
pub fn reduce_to_extremal(g: &Graph) -> Result<Vec<TransformOutcome>, TransformError> {
    let mut steps: Vec<TransformOutcome> = Vec::new();
    let mut current = g.clone();
    loop {
        let d = classify_unicyclic(&current)?;
        let Some((u0, v0)) = deepest_lift_site(&current, &d) else { break };
        let step = edge_lift(&current, u0, v0)?;
        current = step.after.clone();
        steps.push(step);
    }
    match cycle_lift(&current) {
        Ok(step) => {
            current = step.after.clone();
            steps.push(step);
        }
        Err(TransformError::Identity(_)) => {}
        Err(e) => return Err(e),
    }
    match cycle_shrink(&current) {
        Ok(step) => {
            current = step.after.clone();
            steps.push(step);
        }
        Err(TransformError::Identity(_)) => {}
        Err(e) => return Err(e),
    }
    if canonical_code(&current)? != canonical_code(&make_s(g.n(), 3)?)? {
        return Err(TransformError::NotExtremal);
    }
    Ok(steps)
}

/// A rewrite that failed to increase RDR or broke the vertex/edge counts.
#[derive(Clone, Debug, PartialEq)]
pub struct Counterexample {
    pub graph6: String,
    pub kind: TransformKind,
    pub site: Site,
    pub rdr_before: Rational,
    pub rdr_after: Rational,
}

/// Totals of the exhaustive monotonicity check.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct VerifyReport {
    pub max_order: usize,
    pub graphs: usize,
    pub edge_lift_checks: usize,
    pub cycle_lift_checks: usize,
    pub cycle_shrink_checks: usize,
    pub counterexamples: Vec<Counterexample>,
}

pub const VERIFY_COLUMNS: [&str; 6] = [
    "max_order",
    "graphs",
    "edge_lift_checks",
    "cycle_lift_checks",
    "cycle_shrink_checks",
    "counterexamples",
];

impl VerifyReport {
    pub fn checks(&self) -> usize {
        self.edge_lift_checks + self.cycle_lift_checks + self.cycle_shrink_checks
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    fn absorb(&mut self, other: VerifyReport) {
        self.graphs += other.graphs;
        self.edge_lift_checks += other.edge_lift_checks;
        self.cycle_lift_checks += other.cycle_lift_checks;
        self.cycle_shrink_checks += other.cycle_shrink_checks;
        self.counterexamples.extend(other.counterexamples);
    }

    pub fn to_json(&self) -> Value {
        json!({
            "max_order": self.max_order,
            "graphs": self.graphs,
            "edge_lift_checks": self.edge_lift_checks,
            "cycle_lift_checks": self.cycle_lift_checks,
            "cycle_shrink_checks": self.cycle_shrink_checks,
            "counterexamples": self.counterexamples.iter().map(|c| json!({
                "graph6": c.graph6,
                "kind": c.kind.to_string(),
                "site": c.site.to_string(),
                "rdr_before": format_rational(&c.rdr_before),
                "rdr_after": format_rational(&c.rdr_after),
            })).collect::<Vec<_>>(),
            "passed": self.passed(),
        })
    }

    pub fn csv_record(&self) -> Vec<String> {
        vec![
            self.max_order.to_string(),
            self.graphs.to_string(),
            self.edge_lift_checks.to_string(),
            self.cycle_lift_checks.to_string(),
            self.cycle_shrink_checks.to_string(),
            self.counterexamples.len().to_string(),
        ]
    }
}

fn record(report: &mut VerifyReport, outcome: Result<TransformOutcome, TransformError>) -> Result<(), TransformError> {
    let outcome = match outcome {
        Ok(o) => o,
        Err(TransformError::Identity(_)) => return Ok(()),
        Err(e) => return Err(e),
    };
    match outcome.kind {
        TransformKind::EdgeLift => report.edge_lift_checks += 1,
        TransformKind::CycleLift => report.cycle_lift_checks += 1,
        TransformKind::CycleShrink => report.cycle_shrink_checks += 1,
    }
    let shape_ok = outcome.after.n() == outcome.before.n()
        && outcome.after.m() == outcome.before.m()
        && outcome.after.is_unicyclic();
    if !shape_ok || !outcome.is_increase() {
        report.counterexamples.push(Counterexample {
            graph6: to_graph6(&outcome.before),
            kind: outcome.kind,
            site: outcome.site,
            rdr_before: outcome.rdr_before,
            rdr_after: outcome.rdr_after,
        });
    }
    Ok(())
}

/// Every applicable rewrite on one unicyclic graph.
pub fn verify_graph(g: &Graph) -> Result<VerifyReport, TransformError> {
    let mut report = VerifyReport { max_order: g.n(), graphs: 1, ..Default::default() };
    for (u, v) in edge_lift_sites(g) {
        record(&mut report, edge_lift(g, u, v))?;
    }
    let d = classify_unicyclic(g)?;
    if (0..g.n()).all(|v| d.tree_dist(v) <= 1) {
        for &c in d.cycle() {
            record(&mut report, cycle_lift_to(g, c))?;
        }
    }
    match cycle_shrink(g) {
        Err(TransformError::NotSnpShape) => {}
        other => record(&mut report, other)?,
    }
    Ok(report)
}

/// Checks strict RDR increase for every rewrite site of every unicyclic
/// graph of order `3..=max_order`.
pub fn verify_monotonicity(max_order: usize, jobs: usize) -> Result<VerifyReport, TransformError> {
    let pool = worker_pool(jobs)?;
    let mut total = VerifyReport { max_order, ..Default::default() };
    for n in 3..=max_order {
        let graphs: Vec<Graph> = enumerate_unicyclic(n)?.collect();
        let reports: Vec<VerifyReport> =
            pool.install(|| graphs.par_iter().map(verify_graph).collect::<Result<_, _>>())?;
        for r in reports {
            total.absorb(r);
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{integer, ratio};

    fn code(g: &Graph) -> crate::graph::CanonicalCode {
        canonical_code(g).unwrap()
    }

    fn tri_with_path() -> Graph {
        // triangle 0-1-2, path 0-3-4
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn edge_lift_path_to_star() {
        let p4 = Graph::path(4);
        let out = edge_lift(&p4, 1, 2).unwrap();
        assert_eq!(code(&out.after), code(&Graph::star(3)));
        assert_eq!(out.rdr_before, ratio(41, 3));
        assert_eq!(out.rdr_after, integer(15));
        assert!(out.is_increase());
        assert_eq!(out.site, Site::CutEdge { u0: 1, v0: 2 });
    }

    #[test]
    fn edge_lift_on_unicyclic() {
        let g = tri_with_path();
        let out = edge_lift(&g, 0, 3).unwrap();
        assert_eq!(code(&out.after), code(&make_s(5, 3).unwrap()));
        assert!(out.rdr_after > out.rdr_before);
        assert_eq!((out.after.n(), out.after.m()), (5, 5));
        // the input graph is untouched
        assert_eq!(g, tri_with_path());
    }

    #[test]
    fn edge_lift_errors() {
        let g = tri_with_path();
        assert_eq!(edge_lift(&g, 1, 3).unwrap_err(), TransformError::NotAnEdge(1, 3));
        assert_eq!(edge_lift(&g, 0, 1).unwrap_err(), TransformError::NotCutEdge(0, 1));
        assert!(matches!(edge_lift(&g, 3, 4).unwrap_err(), TransformError::Identity(_)));
        assert_eq!(edge_lift_sites(&g), vec![(0, 3)]);
    }

    #[test]
    fn cycle_lift_examples() {
        // C_3 with pendants on two cycle vertices
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)]).unwrap();
        let out = cycle_lift(&g).unwrap();
        assert_eq!(code(&out.after), code(&make_s(5, 3).unwrap()));
        assert!(out.is_increase());

        // C_4 with pendant counts (2, 1, 0, 0)
        let g = Graph::from_edges(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (0, 5), (1, 6)],
        )
        .unwrap();
        let out = cycle_lift(&g).unwrap();
        assert_eq!(code(&out.after), code(&make_s(7, 4).unwrap()));
        assert_eq!(out.site, Site::Target { vertex: 0 });
        assert!(out.is_increase());

        assert!(matches!(
            cycle_lift(&make_s(6, 3).unwrap()).unwrap_err(),
            TransformError::Identity(_)
        ));
        assert!(matches!(
            cycle_lift(&tri_with_path()).unwrap_err(),
            TransformError::NotStarForest(0)
        ));
        assert!(matches!(
            cycle_lift(&Graph::path(4)).unwrap_err(),
            TransformError::Graph(GraphError::NotUnicyclic { .. })
        ));
        assert_eq!(
            cycle_lift_to(&g, 5).unwrap_err(),
            TransformError::NotOnCycle(5)
        );
    }

    #[test]
    fn cycle_shrink_examples() {
        let out = cycle_shrink(&make_s(5, 4).unwrap()).unwrap();
        assert_eq!(code(&out.after), code(&make_s(5, 3).unwrap()));
        assert!(out.is_increase());
        assert_eq!(out.site, Site::CycleLength { p: 4 });

        let c12 = make_s(12, 12).unwrap();
        let out = cycle_shrink(&c12).unwrap();
        assert_eq!(code(&out.after), code(&make_s(12, 3).unwrap()));
        assert!(out.is_increase());

        assert!(matches!(
            cycle_shrink(&make_s(6, 3).unwrap()).unwrap_err(),
            TransformError::Identity(_)
        ));
        let two_hubs = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)]).unwrap();
        assert_eq!(cycle_shrink(&two_hubs).unwrap_err(), TransformError::NotSnpShape);
    }

    #[test]
    fn literal_surgery_agrees_with_reconstruction() {
        for n in 4..=11 {
            for p in 4..=n {
                let g = make_s(n, p).unwrap().relabel(&(0..n).rev().collect::<Vec<_>>());
                let rebuilt = cycle_shrink(&g).unwrap().after;
                let literal = cycle_shrink_literal(&g).unwrap();
                assert_eq!(literal, rebuilt);
                assert_eq!(code(&literal), code(&make_s(n, 3).unwrap()));
            }
        }
    }

    #[test]
    fn reduce_examples() {
        assert!(reduce_to_extremal(&make_s(7, 3).unwrap()).unwrap().is_empty());

        let steps = reduce_to_extremal(&tri_with_path()).unwrap();
        assert_eq!(steps.len(), 1);
        assert_eq!(steps[0].kind, TransformKind::EdgeLift);
        assert_eq!(code(&steps[0].after), code(&make_s(5, 3).unwrap()));

        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5)]).unwrap();
        let steps = reduce_to_extremal(&g).unwrap();
        let kinds: Vec<_> = steps.iter().map(|s| s.kind).collect();
        assert_eq!(kinds, vec![TransformKind::CycleLift, TransformKind::CycleShrink]);
        assert!(steps.iter().all(TransformOutcome::is_increase));
        assert_eq!(steps[0].rdr_after, steps[1].rdr_before);

        let steps = reduce_to_extremal(&make_s(7, 5).unwrap()).unwrap();
        assert_eq!(steps.len(), 1);
        assert_eq!(steps[0].kind, TransformKind::CycleShrink);

        assert!(matches!(
            reduce_to_extremal(&Graph::path(5)).unwrap_err(),
            TransformError::Graph(GraphError::NotUnicyclic { .. })
        ));
    }

    #[test]
    fn deep_tree_flattens_level_by_level() {
        // triangle with a path of length 4 hanging from vertex 0
        let g = Graph::from_edges(
            7,
            &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5), (5, 6)],
        )
        .unwrap();
        let steps = reduce_to_extremal(&g).unwrap();
        assert_eq!(steps.len(), 3);
        assert!(steps.iter().all(|s| s.kind == TransformKind::EdgeLift));
        assert_eq!(steps[0].site, Site::CutEdge { u0: 4, v0: 5 });
        for w in steps.windows(2) {
            assert_eq!(w[0].rdr_after, w[1].rdr_before);
            assert!(w[1].is_increase());
        }
    }

    #[test]
    fn outcome_serialization() {
        let out = cycle_shrink(&make_s(5, 4).unwrap()).unwrap();
        let v = out.to_json().unwrap();
        assert_eq!(v["kind"], "cycle-shrink");
        assert_eq!(v["site"], "cycle-length 4");
        assert_eq!(v["rdr_after"], "211/5");
        assert_eq!(v["delta_positive"], true);
        assert_eq!(v["after_code"], code(&make_s(5, 3).unwrap()).to_hex());
        assert_eq!(out.csv_record().unwrap().len(), OUTCOME_COLUMNS.len());
    }

    #[test]
    fn verify_small_orders() {
        let r3 = verify_monotonicity(3, 1).unwrap();
        assert_eq!((r3.graphs, r3.checks()), (1, 0));
        assert!(r3.passed());
        let r6 = verify_monotonicity(6, 2).unwrap();
        assert_eq!(r6.graphs, 1 + 2 + 5 + 13);
        // The one decreasing rewrite up to order 6 is shrinking C_4.
        assert_eq!(r6.counterexamples.len(), 1, "{:?}", r6.counterexamples);
        let c = &r6.counterexamples[0];
        assert_eq!((c.kind, c.graph6.as_str()), (TransformKind::CycleShrink, "Cl"));
        assert_eq!((c.rdr_before.clone(), c.rdr_after.clone()), (ratio(88, 3), ratio(143, 5)));
        assert!(r6.edge_lift_checks > 0 && r6.cycle_lift_checks > 0 && r6.cycle_shrink_checks > 0);
        assert_eq!(verify_monotonicity(6, 1).unwrap(), r6);
    }
}
