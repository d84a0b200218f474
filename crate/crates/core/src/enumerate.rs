//! Isomorphism-free generation of rooted trees, free trees and unicyclic
//! graphs, and the exhaustive extremal sweep over unicyclic graphs.
//!
//! A unicyclic graph of order `n` is a cycle of length `g` whose vertices
//! carry rooted trees with sizes summing to `n`. Two such graphs are
//! isomorphic exactly when their sequences of rooted-tree codes agree up to
//! rotation and reflection of the cycle, so each class is emitted once as the
//! dihedrally smallest sequence.

use std::collections::{BTreeSet, VecDeque};

use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::graph::{canonical_code, CanonicalCode, Graph, GraphError, RootedTreeCode};
use crate::indices::{IndexError, IndexSelector};
use crate::rational::{format_rational, Rational};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EnumerateError {
    #[error("order {n} is below the minimum of {min}")]
    OrderTooSmall { n: usize, min: usize },
    #[error("S_n^p needs 3 <= p <= n (got n = {n}, p = {p})")]
    CycleLength { n: usize, p: usize },
    #[error("worker pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Index(#[from] IndexError),
}

/// All rooted trees on `k` vertices, one per isomorphism class, as canonical
/// level sequences in decreasing lexicographic order.
pub fn enumerate_rooted_trees(k: usize) -> Result<RootedTrees, EnumerateError> {
    if k == 0 {
        return Err(EnumerateError::OrderTooSmall { n: 0, min: 1 });
    }
    Ok(RootedTrees { levels: Some((0..k as u16).collect()) })
}

/// Constant-amortized-time successor walk over canonical level sequences.
pub struct RootedTrees {
    levels: Option<Vec<u16>>,
}

impl Iterator for RootedTrees {
    type Item = RootedTreeCode;

    fn next(&mut self) -> Option<RootedTreeCode> {
        let current = self.levels.take()?;
        // p: last vertex deeper than level 1; q: its parent position.
        if let Some(p) = current.iter().rposition(|&l| l > 1) {
            let q = current[..p].iter().rposition(|&l| l == current[p] - 1).unwrap();
            let mut next = current.clone();
            for i in p..next.len() {
                next[i] = next[i - (p - q)];
            }
            self.levels = Some(next);
        }
        Some(RootedTreeCode::from_canonical_levels(current))
    }
}

/// Builds the graph of a rooted tree; the root becomes vertex 0 and the
/// others follow in preorder.
pub fn rooted_tree_graph(code: &RootedTreeCode) -> Graph {
    let mut g = Graph::empty(code.size());
    for (v, p) in code.parents().into_iter().enumerate() {
        if let Some(p) = p {
            g.try_add_edge(p, v).expect("tree edges are simple");
        }
    }
    g
}

/// All free trees on `n` vertices, one per isomorphism class.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for code in enumerate_rooted_trees(n)? {
        let g = rooted_tree_graph(&code);
        if seen.insert(canonical_code(&g)?) {
            out.push(g);
        }
    }
    Ok(out)
}

/// The cycle `C_p` on vertices `0..p` with `n - p` pendants attached to
/// vertex 0.
pub fn make_s(n: usize, p: usize) -> Result<Graph, EnumerateError> {
    if p < 3 || p > n {
        return Err(EnumerateError::CycleLength { n, p });
    }
    let mut g = Graph::empty(n);
    for k in 0..p {
        g.try_add_edge(k, (k + 1) % p)?;
    }
    for w in p..n {
        g.try_add_edge(0, w)?;
    }
    Ok(g)
}

/// Unicyclic graphs of order `n`, one per isomorphism class, grouped by
/// increasing cycle length.
pub fn enumerate_unicyclic(n: usize) -> Result<UnicyclicGraphs, EnumerateError> {
    if n < 3 {
        return Err(EnumerateError::OrderTooSmall { n, min: 3 });
    }
    let mut trees = Vec::new();
    for size in 1..=n - 2 {
        let mut batch: Vec<RootedTreeCode> = enumerate_rooted_trees(size)?.collect();
        batch.sort();
        trees.extend(batch);
    }
    Ok(UnicyclicGraphs { n, girth: 2, trees, pending: VecDeque::new() })
}

/// Streaming enumerator; holds the sequences of one cycle length at a time.
pub struct UnicyclicGraphs {
    n: usize,
    girth: usize,
    /// Every rooted tree that can hang off a cycle vertex, in code order.
    trees: Vec<RootedTreeCode>,
    pending: VecDeque<Vec<usize>>,
}

impl UnicyclicGraphs {
    fn fill(&mut self) {
        while self.pending.is_empty() && self.girth < self.n {
            self.girth += 1;
            let mut seq = Vec::with_capacity(self.girth);
            let mut found = Vec::new();
            self.extend(&mut seq, self.n, &mut found);
            self.pending.extend(found);
        }
    }

    fn extend(&self, seq: &mut Vec<usize>, remaining: usize, out: &mut Vec<Vec<usize>>) {
        let slots = self.girth - seq.len();
        if slots == 0 {
            if remaining == 0 && is_dihedral_min(seq) {
                out.push(seq.clone());
            }
            return;
        }
        // Rotation-minimal sequences never put a smaller code after the first.
        let lowest = seq.first().copied().unwrap_or(0);
        for t in lowest..self.trees.len() {
            let size = self.trees[t].size();
            if size + (slots - 1) > remaining {
                break;
            }
            if slots == 1 && size != remaining {
                continue;
            }
            seq.push(t);
            self.extend(seq, remaining - size, out);
            seq.pop();
        }
    }

    fn build(&self, seq: &[usize]) -> Graph {
        let g = seq.len();
        let mut graph = Graph::empty(self.n);
        for k in 0..g {
            graph.try_add_edge(k, (k + 1) % g).expect("cycle edges are simple");
        }
        let mut next = g;
        for (k, &t) in seq.iter().enumerate() {
            let code = &self.trees[t];
            let ids: Vec<usize> = (0..code.size())
                .map(|i| if i == 0 { k } else { next + i - 1 })
                .collect();
            for (i, p) in code.parents().into_iter().enumerate() {
                if let Some(p) = p {
                    graph.try_add_edge(ids[p], ids[i]).expect("tree edges are simple");
                }
            }
            next += code.size() - 1;
        }
        graph
    }
}

impl Iterator for UnicyclicGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.fill();
        let seq = self.pending.pop_front()?;
        Some(self.build(&seq))
    }
}

fn is_dihedral_min(seq: &[usize]) -> bool {
    let len = seq.len();
    for rev in [false, true] {
        for start in 0..len {
            let image = (0..len).map(|k| {
                if rev {
                    seq[(start + len - k) % len]
                } else {
                    seq[(start + k) % len]
                }
            });
            if image.lt(seq.iter().copied()) {
                return false;
            }
        }
    }
    true
}

/// Outcome of evaluating one index over every unicyclic graph of order `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepResult {
    pub n: usize,
    pub index: IndexSelector,
    pub graph_count: usize,
    /// Codes of every maximizing graph, sorted.
    pub argmax: Vec<CanonicalCode>,
    pub max_value: Rational,
    pub is_unique: bool,
    /// The maximizer is unique and isomorphic to `S_n^3`.
    pub matches_theorem: bool,
}

pub const SWEEP_COLUMNS: [&str; 6] =
    ["n", "count", "max_value", "unique", "matches_theorem", "argmax_code"];

impl SweepResult {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "index": self.index.to_string(),
            "count": self.graph_count,
            "max_value": format_rational(&self.max_value),
            "unique": self.is_unique,
            "matches_theorem": self.matches_theorem,
            "argmax_code": self.argmax.iter().map(CanonicalCode::to_hex).collect::<Vec<_>>(),
        })
    }

    /// Fields in [`SWEEP_COLUMNS`] order; tied maximizers are `;`-joined.
    pub fn csv_record(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.graph_count.to_string(),
            format_rational(&self.max_value),
            (self.is_unique as u8).to_string(),
            (self.matches_theorem as u8).to_string(),
            self.argmax.iter().map(CanonicalCode::to_hex).collect::<Vec<_>>().join(";"),
        ]
    }
}

#[derive(Default)]
struct Best {
    value: Option<Rational>,
    codes: Vec<CanonicalCode>,
    count: usize,
}

impl Best {
    fn merge(mut self, other: Best) -> Best {
        self.count += other.count;
        match (&self.value, &other.value) {
            (_, None) => {}
            (None, Some(_)) => {
                self.value = other.value;
                self.codes = other.codes;
            }
            (Some(a), Some(b)) => match a.cmp(b) {
                std::cmp::Ordering::Less => {
                    self.value = other.value;
                    self.codes = other.codes;
                }
                std::cmp::Ordering::Equal => self.codes.extend(other.codes),
                std::cmp::Ordering::Greater => {}
            },
        }
        self
    }
}

/// Builds a worker pool with `jobs` threads (at least one).
pub fn worker_pool(jobs: usize) -> Result<rayon::ThreadPool, EnumerateError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| EnumerateError::Pool(e.to_string()))
}

/// Evaluates `index` exactly on every unicyclic graph of order `n` and
/// reports the maximizers.
pub fn sweep(n: usize, index: IndexSelector, jobs: usize) -> Result<SweepResult, EnumerateError> {
    let graphs = enumerate_unicyclic(n)?;
    let best = worker_pool(jobs)?.install(|| {
        graphs
            .par_bridge()
            .map(|g| -> Result<Best, EnumerateError> {
                let value = index.exact_value(&g)?;
                Ok(Best { value: Some(value), codes: vec![canonical_code(&g)?], count: 1 })
            })
            .try_reduce(Best::default, |a, b| Ok(a.merge(b)))
    })?;
    let mut argmax = best.codes;
    argmax.sort();
    let extremal = canonical_code(&make_s(n, 3)?)?;
    let is_unique = argmax.len() == 1;
    Ok(SweepResult {
        n,
        index,
        graph_count: best.count,
        matches_theorem: is_unique && argmax[0] == extremal,
        argmax,
        max_value: best.value.unwrap_or_else(Rational::zero),
        is_unique,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{integer, ratio};
    use std::collections::HashSet;

    #[test]
    fn rooted_tree_counts() {
        let counts: Vec<usize> = (1..=9).map(|k| enumerate_rooted_trees(k).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20, 48, 115, 286]);
        assert!(enumerate_rooted_trees(0).is_err());
        let k3: Vec<_> = enumerate_rooted_trees(3).unwrap().map(|c| c.levels().to_vec()).collect();
        assert_eq!(k3, vec![vec![0, 1, 2], vec![0, 1, 1]]);
    }

    #[test]
    fn generated_sequences_are_canonical() {
        for k in 1..=8 {
            for code in enumerate_rooted_trees(k).unwrap() {
                assert_eq!(RootedTreeCode::canonicalize(code.levels()), code);
            }
        }
    }

    /// Brute force: every labeled rooted tree on `k` vertices (parent
    /// pointers with parent < child cover every rooted tree up to
    /// relabeling), canonicalized through the graph-side rooted code.
    fn brute_rooted_classes(k: usize) -> HashSet<RootedTreeCode> {
        let mut classes = HashSet::new();
        let mut parents = vec![0usize; k];
        fn rec(i: usize, k: usize, parents: &mut Vec<usize>, out: &mut HashSet<RootedTreeCode>) {
            if i == k {
                let mut g = Graph::empty(k);
                for (v, &p) in parents.iter().enumerate().skip(1) {
                    g.try_add_edge(p, v).unwrap();
                }
                out.insert(crate::graph::rooted_tree_code(&g, 0));
                return;
            }
            for p in 0..i {
                parents[i] = p;
                rec(i + 1, k, parents, out);
            }
        }
        if k == 1 {
            classes.insert(RootedTreeCode::from_canonical_levels(vec![0]));
        } else {
            rec(1, k, &mut parents, &mut classes);
        }
        classes
    }

    #[test]
    fn rooted_trees_match_brute_force() {
        for k in 1..=7 {
            let generated: HashSet<_> = enumerate_rooted_trees(k).unwrap().collect();
            assert_eq!(generated, brute_rooted_classes(k), "k = {k}");
        }
        assert_eq!(brute_rooted_classes(6).len(), 20);
    }

    #[test]
    fn free_tree_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| enumerate_trees(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn unicyclic_small_counts() {
        assert_eq!(enumerate_unicyclic(3).unwrap().count(), 1);
        let four: Vec<Graph> = enumerate_unicyclic(4).unwrap().collect();
        assert_eq!(four.len(), 2);
        let codes: HashSet<_> = four.iter().map(|g| canonical_code(g).unwrap()).collect();
        assert!(codes.contains(&canonical_code(&Graph::cycle(4)).unwrap()));
        assert!(codes.contains(&canonical_code(&make_s(4, 3).unwrap()).unwrap()));
        assert!(matches!(
            enumerate_unicyclic(2),
            Err(EnumerateError::OrderTooSmall { n: 2, min: 3 })
        ));
    }

    #[test]
    fn unicyclic_sound() {
        for n in 3..=10 {
            let mut codes = HashSet::new();
            for g in enumerate_unicyclic(n).unwrap() {
                assert!(g.is_unicyclic());
                assert_eq!(g.n(), n);
                assert!(codes.insert(canonical_code(&g).unwrap()), "duplicate at n = {n}");
            }
        }
    }

    #[test]
    fn make_s_shapes() {
        let s43 = make_s(4, 3).unwrap();
        let mut deg = s43.degrees();
        deg.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(deg, vec![3, 2, 2, 1]);
        assert_eq!(make_s(6, 6).unwrap(), Graph::cycle(6));
        assert_eq!(make_s(3, 4), Err(EnumerateError::CycleLength { n: 3, p: 4 }));
        assert_eq!(make_s(5, 2), Err(EnumerateError::CycleLength { n: 5, p: 2 }));
    }

    #[test]
    fn small_sweeps() {
        // C_4: four adjacent pairs at 3/4 and two opposite pairs at 1 give
        // 4·4/(3/4) + 2·4 = 88/3, above RDR(S_4^3) = 143/5.
        let s4 = sweep(4, IndexSelector::Rdr, 1).unwrap();
        assert_eq!(s4.graph_count, 2);
        assert_eq!(s4.max_value, ratio(88, 3));
        assert!(s4.is_unique);
        assert_eq!(s4.argmax, vec![canonical_code(&Graph::cycle(4)).unwrap()]);
        assert!(!s4.matches_theorem);
        assert!(ratio(143, 5) < ratio(88, 3));

        let s5 = sweep(5, IndexSelector::Rdr, 1).unwrap();
        assert_eq!(s5.max_value, ratio(211, 5));
        assert!(s5.matches_theorem);

        let s3 = sweep(3, IndexSelector::Rdr, 2).unwrap();
        assert_eq!(s3.graph_count, 1);
        assert_eq!(s3.max_value, integer(18));
        assert!(s3.matches_theorem);
        assert_eq!(s3.csv_record()[..5], ["3", "1", "18", "1", "1"]);
    }

    #[test]
    fn sweep_is_schedule_independent() {
        let a = sweep(7, IndexSelector::Rdr, 1).unwrap();
        let b = sweep(7, IndexSelector::Rdr, 4).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.graph_count, 33);
    }

    #[test]
    fn ties_are_reported() {
        let s = sweep(5, IndexSelector::M1, 2).unwrap();
        assert_eq!(s.graph_count, 5);
        assert_eq!(s.is_unique, s.argmax.len() == 1);
    }
}
