//! Independent oracles shared by the integration and acceptance suites.
//! Nothing here calls into the crate's resistance, canonical-code or
//! enumeration code.

#![allow(dead_code)]

use nalgebra::DMatrix;
use petgraph::algo::is_isomorphic;
use petgraph::graph::UnGraph;
use rdr::graph::Graph;
use rdr::rational::{integer, Rational};

pub fn to_petgraph(g: &Graph) -> UnGraph<(), ()> {
    let mut p = UnGraph::<(), ()>::with_capacity(g.n(), g.m());
    for _ in 0..g.n() {
        p.add_node(());
    }
    for (u, v) in g.edges() {
        p.add_edge((u as u32).into(), (v as u32).into(), ());
    }
    p
}

/// Resistance matrix via the Moore–Penrose route `X = (L + J/n)^{-1}`,
/// `r(u, v) = X_uu + X_vv - 2 X_uv`.
pub fn pinv_resistance(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.n();
    let shift = 1.0 / n as f64;
    let mut a = DMatrix::<f64>::from_element(n, n, shift);
    for u in 0..n {
        a[(u, u)] += g.degree(u) as f64;
        for &v in g.neighbors(u) {
            a[(u, v)] -= 1.0;
        }
    }
    let x = a.try_inverse().expect("L + J/n is invertible for connected graphs");
    (0..n)
        .map(|u| (0..n).map(|v| x[(u, u)] + x[(v, v)] - 2.0 * x[(u, v)]).collect())
        .collect()
}

/// Sorted invariant used to bucket graphs before VF2.
fn bucket_key(g: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut degrees = g.degrees();
    degrees.sort_unstable();
    let mut dsums: Vec<usize> = (0..g.n())
        .map(|s| g.bfs_distances(s).into_iter().map(|d| d.unwrap_or(usize::MAX / 64)).sum())
        .collect();
    dsums.sort_unstable();
    (degrees, dsums)
}

/// Pairwise non-isomorphic representatives, deduplicated with VF2.
pub fn dedupe_vf2(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut reps: Vec<(_, UnGraph<(), ()>, Graph)> = Vec::new();
    for g in graphs {
        let key = bucket_key(&g);
        let p = to_petgraph(&g);
        if !reps.iter().any(|(k, q, _)| *k == key && is_isomorphic(q, &p)) {
            reps.push((key, p, g));
        }
    }
    reps.into_iter().map(|(_, _, g)| g).collect()
}

/// Unicyclic classes of order `n` by vertex augmentation: every unicyclic
/// graph other than `C_n` has a leaf whose deletion leaves a unicyclic graph
/// of order `n - 1`, so attaching a pendant everywhere to every class of
/// order `n - 1` (plus `C_n`) reaches every class.
pub fn unicyclic_classes(n: usize) -> Vec<Graph> {
    assert!(n >= 3);
    let mut level = vec![Graph::cycle(3)];
    for order in 4..=n {
        let mut grown = vec![Graph::cycle(order)];
        for g in &level {
            for v in 0..g.n() {
                let mut edges = g.edges();
                edges.push((v, g.n()));
                grown.push(Graph::from_edges(order, &edges).unwrap());
            }
        }
        level = dedupe_vf2(grown);
    }
    level
}

/// Free-tree classes of order `n` by the same pendant augmentation.
pub fn tree_classes(n: usize) -> Vec<Graph> {
    assert!(n >= 1);
    let mut level = vec![Graph::empty(1)];
    for order in 2..=n {
        let mut grown = Vec::new();
        for g in &level {
            for v in 0..g.n() {
                let mut edges = g.edges();
                edges.push((v, g.n()));
                grown.push(Graph::from_edges(order, &edges).unwrap());
            }
        }
        level = dedupe_vf2(grown);
    }
    level
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && is_isomorphic(&to_petgraph(a), &to_petgraph(b))
}

/// RDR by direct pair sum over a float resistance matrix.
pub fn rdr_float(g: &Graph, r: &[Vec<f64>]) -> f64 {
    pairs(g.n()).map(|(u, v)| (g.degree(u) + g.degree(v)) as f64 / r[u][v]).sum()
}

/// `(15k² + 91k + 180) / 10` with `k = n - 3`.
pub fn closed_form_s3(n: usize) -> Rational {
    let k = n as i64 - 3;
    (integer(15 * k * k + 91 * k + 180)) / integer(10)
}

/// Every unordered pair `(u, v)` with `u < v`.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

/// Whether deleting `x` separates `a` from `b`.
pub fn separates(g: &Graph, x: usize, a: usize, b: usize) -> bool {
    if x == a || x == b {
        return false;
    }
    let mut seen = vec![false; g.n()];
    seen[x] = true;
    seen[a] = true;
    let mut stack = vec![a];
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    !seen[b]
}
