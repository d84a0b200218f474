//! Simple undirected graphs and the structural queries the rest of the crate
//! is built on.
//!
//! Vertices are dense `0..n` indices; every vertex keeps a sorted neighbor
//! list, so equality of two [`Graph`] values is equality of labeled graphs.

mod canon;
mod decompose;
mod parse;

pub use canon::{canonical_code, rooted_tree_code, CanonicalCode, RootedTreeCode, MAX_BRUTE_FORCE_ORDER};
pub use decompose::{classify_unicyclic, UnicyclicDecomposition};
pub use parse::{
    parse_edge_list, parse_graph6, parse_graph6_lines, parse_inline, to_graph6, EdgeList,
};

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: malformed token `{token}`")]
    MalformedToken { line: usize, token: String },
    #[error("line {line}: expected two vertex ids, found {found}")]
    WrongArity { line: usize, found: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("empty input")]
    EmptyInput,
    #[error("empty graph6 record")]
    EmptyRecord,
    #[error("graph6: byte {byte:#04x} at offset {offset} is outside 63..=126")]
    BadByte { byte: u8, offset: usize },
    #[error("graph6: header declares {n} vertices but the bit field is truncated")]
    Truncated { n: usize },
    #[error("graph6: record has trailing bytes")]
    TrailingBytes,
    #[error("sparse6/digraph6 records are not supported")]
    UnsupportedFormat,
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not unicyclic: {n} vertices, {m} edges")]
    NotUnicyclic { n: usize, m: usize },
    #[error("vertex {to} is unreachable from {from}")]
    Unreachable { from: usize, to: usize },
    #[error("no canonical form for this graph class above order {max} (got {n})")]
    TooLargeForBruteForce { n: usize, max: usize },
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a graph from an edge list. Self-loops, out-of-range ids and
    /// repeated edges are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(GraphError::DuplicateEdge(u.min(v), u.max(v))),
            Err(i) => {
                self.adj[u].insert(i, v);
                let j = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(j, u);
                self.m += 1;
                Ok(())
            }
        }
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle edges are simple")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path edges are simple")
    }

    /// The star `K_{1,leaves}` with center `0`.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).expect("star edges are simple")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Returns the graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n(), "permutation length must equal n");
        let mut adj = vec![Vec::new(); self.n()];
        for (u, nbrs) in self.adj.iter().enumerate() {
            let mut mapped: Vec<usize> = nbrs.iter().map(|&v| perm[v]).collect();
            mapped.sort_unstable();
            adj[perm[u]] = mapped;
        }
        Graph { adj, m: self.m }
    }

    /// Breadth-first distances from `src`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m + 1 == self.n() && self.is_connected()
    }

    pub fn is_unicyclic(&self) -> bool {
        self.m == self.n() && self.n() >= 3 && self.is_connected()
    }

    pub fn shortest_path_distance(&self, u: usize, v: usize) -> Result<usize, GraphError> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        self.bfs_distances(u)[v].ok_or(GraphError::Unreachable { from: u, to: v })
    }

    /// All-pairs shortest-path distances, row-major `n × n`.
    pub fn distance_matrix(&self) -> Result<Vec<Vec<usize>>, GraphError> {
        (0..self.n())
            .map(|s| {
                self.bfs_distances(s)
                    .into_iter()
                    .collect::<Option<Vec<_>>>()
                    .ok_or(GraphError::NotConnected)
            })
            .collect()
    }

    /// Number of vertices reachable from `start` when edge `{a, b}` is ignored.
    pub(crate) fn component_size_without_edge(&self, start: usize, a: usize, b: usize) -> usize {
        let mut seen = vec![false; self.n()];
        let mut stack = vec![start];
        seen[start] = true;
        let mut count = 0;
        while let Some(u) = stack.pop() {
            count += 1;
            for &v in &self.adj[u] {
                if (u == a && v == b) || (u == b && v == a) {
                    continue;
                }
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        count
    }
}
