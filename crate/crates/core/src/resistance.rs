//! Effective resistance between vertices when every edge is a unit resistor.
//!
//! Trees and unicyclic graphs get exact rational values: on a tree the
//! resistance is the path length, and on a unicyclic graph a pair splits at
//! its two anchors into tree path + cycle arc + tree path, where an arc of
//! `t` edges on a cycle of length `g` has resistance `t(g-t)/g`. Any other
//! connected graph only gets the floating-point grounded-Laplacian solve,
//! which also serves as the independent oracle for the exact route.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{classify_unicyclic, Graph, GraphError, UnicyclicDecomposition};
use crate::rational::{integer, Rational};

/// Largest order accepted by the dense numeric solver.
pub const MAX_NUMERIC_ORDER: usize = 2000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ResistanceError {
    #[error("cycle length {0} is below 3")]
    CycleTooShort(usize),
    #[error("cycle positions ({i}, {j}) out of range 1..={g}")]
    PositionOutOfRange { g: usize, i: usize, j: usize },
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("exact resistance needs a tree or unicyclic graph ({n} vertices, {m} edges)")]
    UnsupportedClass { n: usize, m: usize },
    #[error("numeric solver needs at least 2 vertices")]
    TooSmall,
    #[error("numeric solver is capped at {max} vertices (got {n})")]
    TooLarge { n: usize, max: usize },
    #[error("reduced Laplacian grounded at {0} is singular")]
    Singular(usize),
    #[error("numeric resistance not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Resistance between positions `i` and `j` (1-based) of the cycle `C_g`.
pub fn cycle_resistance(g: usize, i: usize, j: usize) -> Result<Rational, ResistanceError> {
    if g < 3 {
        return Err(ResistanceError::CycleTooShort(g));
    }
    if !(1..=g).contains(&i) || !(1..=g).contains(&j) {
        return Err(ResistanceError::PositionOutOfRange { g, i, j });
    }
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    Ok(arc_resistance(g, j - i))
}

/// Resistance across an arc of `t` edges on a cycle of length `g`.
fn arc_resistance(g: usize, t: usize) -> Rational {
    Rational::new(BigInt::from(t * (g - t)), BigInt::from(g))
}

/// Exact resistance between `u` and `v` in a decomposed unicyclic graph.
pub fn resistance_unicyclic(
    d: &UnicyclicDecomposition,
    u: usize,
    v: usize,
) -> Result<Rational, ResistanceError> {
    let n = d.n();
    for x in [u, v] {
        if x >= n {
            return Err(ResistanceError::VertexOutOfRange { vertex: x, n });
        }
    }
    let (au, av) = (d.anchor(u), d.anchor(v));
    if au == av {
        return Ok(integer(d.tree_path_length(u, v) as i64));
    }
    let pu = d.position(au).unwrap();
    let pv = d.position(av).unwrap();
    let arc = cycle_resistance(d.girth(), pu + 1, pv + 1)?;
    Ok(arc + integer((d.tree_dist(u) + d.tree_dist(v)) as i64))
}

#[derive(Clone, Debug, PartialEq)]
enum Entries {
    Exact(Vec<Rational>),
    Numeric(Vec<f64>),
}

/// Symmetric `n × n` table of pairwise resistances.
#[derive(Clone, Debug, PartialEq)]
pub struct ResistanceMatrix {
    n: usize,
    entries: Entries,
}

impl ResistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.entries, Entries::Exact(_))
    }

    /// Exact entry, when the matrix is in exact mode.
    pub fn exact(&self, u: usize, v: usize) -> Option<&Rational> {
        match &self.entries {
            Entries::Exact(e) => Some(&e[u * self.n + v]),
            Entries::Numeric(_) => None,
        }
    }

    pub fn value(&self, u: usize, v: usize) -> f64 {
        match &self.entries {
            Entries::Exact(e) => crate::rational::to_f64(&e[u * self.n + v]),
            Entries::Numeric(e) => e[u * self.n + v],
        }
    }
}

/// Exact all-pairs resistances for a connected tree or unicyclic graph.
pub fn resistance_all_pairs_exact(g: &Graph) -> Result<ResistanceMatrix, ResistanceError> {
    let n = g.n();
    if !g.is_connected() {
        return Err(GraphError::NotConnected.into());
    }
    let mut entries = vec![Rational::default(); n * n];
    if n <= 1 {
        return Ok(ResistanceMatrix { n, entries: Entries::Exact(entries) });
    }
    if g.m() + 1 == n {
        let dist = g.distance_matrix()?;
        for u in 0..n {
            for v in 0..n {
                entries[u * n + v] = integer(dist[u][v] as i64);
            }
        }
    } else if g.m() == n {
        let d = classify_unicyclic(g)?;
        for u in 0..n {
            for v in u + 1..n {
                let r = resistance_unicyclic(&d, u, v)?;
                entries[v * n + u] = r.clone();
                entries[u * n + v] = r;
            }
        }
    } else {
        return Err(ResistanceError::UnsupportedClass { n, m: g.m() });
    }
    Ok(ResistanceMatrix { n, entries: Entries::Exact(entries) })
}

/// Floating-point all-pairs resistances of a connected graph.
///
/// For each vertex `v` the Laplacian with row and column `v` removed is
/// factored once; with `v` grounded and unit current injected at `u`, the
/// potential at `u` is the `u`-th diagonal entry of the reduced inverse.
pub fn resistance_all_pairs_numeric(g: &Graph) -> Result<ResistanceMatrix, ResistanceError> {
    let n = g.n();
    if n < 2 {
        return Err(ResistanceError::TooSmall);
    }
    if n > MAX_NUMERIC_ORDER {
        return Err(ResistanceError::TooLarge { n, max: MAX_NUMERIC_ORDER });
    }
    if !g.is_connected() {
        return Err(GraphError::NotConnected.into());
    }

    let columns: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|ground| grounded_potentials(g, ground))
        .collect::<Result<_, _>>()?;

    let mut entries = vec![0.0; n * n];
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = (columns[v][u], columns[u][v]);
            if (a - b).abs() > 1e-9 * a.abs().max(1.0) {
                return Err(ResistanceError::Asymmetric(u, v));
            }
            let r = 0.5 * (a + b);
            entries[u * n + v] = r;
            entries[v * n + u] = r;
        }
    }
    Ok(ResistanceMatrix { n, entries: Entries::Numeric(entries) })
}

/// Resistance from every vertex to `ground` (0 at the ground itself).
fn grounded_potentials(g: &Graph, ground: usize) -> Result<Vec<f64>, ResistanceError> {
    let n = g.n();
    let reduced = |v: usize| if v < ground { v } else { v - 1 };
    let mut lap = DMatrix::<f64>::zeros(n - 1, n - 1);
    for u in (0..n).filter(|&u| u != ground) {
        let ru = reduced(u);
        lap[(ru, ru)] = g.degree(u) as f64;
        for &w in g.neighbors(u) {
            if w != ground {
                lap[(ru, reduced(w))] = -1.0;
            }
        }
    }
    let inverse = lap.lu().try_inverse().ok_or(ResistanceError::Singular(ground))?;
    Ok((0..n)
        .map(|u| if u == ground { 0.0 } else { inverse[(reduced(u), reduced(u))] })
        .collect())
}

/// Exact matrix when the graph is a tree or unicyclic, numeric otherwise.
pub fn resistance_all_pairs(g: &Graph) -> Result<ResistanceMatrix, ResistanceError> {
    if g.m() <= g.n() && g.is_connected() {
        resistance_all_pairs_exact(g)
    } else {
        resistance_all_pairs_numeric(g)
    }
}
