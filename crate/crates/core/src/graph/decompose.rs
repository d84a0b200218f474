use super::canon::{rooted_code, RootedTreeCode};
use super::{Graph, GraphError};

/// A unicyclic graph split into its cycle and the rooted trees hanging off
/// each cycle vertex.
///
/// The cycle is oriented so that the sequence of hanging-tree codes is the
/// smallest among all rotations and reflections.
#[derive(Clone, Debug)]
pub struct UnicyclicDecomposition {
    cycle: Vec<usize>,
    position: Vec<Option<usize>>,
    anchor: Vec<usize>,
    tree_dist: Vec<usize>,
    parent: Vec<Option<usize>>,
    /// Members of each hanging tree in BFS order, anchor first; indexed by
    /// cycle position.
    trees: Vec<Vec<usize>>,
    codes: Vec<RootedTreeCode>,
}

impl UnicyclicDecomposition {
    /// Cycle vertices in canonical order.
    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn girth(&self) -> usize {
        self.cycle.len()
    }

    pub fn n(&self) -> usize {
        self.anchor.len()
    }

    /// 0-based position of `v` on the cycle, if it is a cycle vertex.
    pub fn position(&self, v: usize) -> Option<usize> {
        self.position[v]
    }

    pub fn is_on_cycle(&self, v: usize) -> bool {
        self.position[v].is_some()
    }

    /// Nearest cycle vertex.
    pub fn anchor(&self, v: usize) -> usize {
        self.anchor[v]
    }

    /// Length of the tree path from `v` to its anchor.
    pub fn tree_dist(&self, v: usize) -> usize {
        self.tree_dist[v]
    }

    /// Neighbor of `v` one step closer to the cycle.
    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Vertices hanging from the cycle vertex `anchor`, itself included.
    pub fn tree_of(&self, anchor: usize) -> &[usize] {
        let pos = self.position[anchor].expect("tree_of expects a cycle vertex");
        &self.trees[pos]
    }

    /// Hanging-tree codes in cycle order.
    pub fn hanging_codes(&self) -> &[RootedTreeCode] {
        &self.codes
    }

    /// Length of the path between two vertices of the same hanging tree.
    pub fn tree_path_length(&self, mut u: usize, mut v: usize) -> usize {
        debug_assert_eq!(self.anchor[u], self.anchor[v]);
        let mut len = 0;
        while self.tree_dist[u] > self.tree_dist[v] {
            u = self.parent[u].unwrap();
            len += 1;
        }
        while self.tree_dist[v] > self.tree_dist[u] {
            v = self.parent[v].unwrap();
            len += 1;
        }
        while u != v {
            u = self.parent[u].unwrap();
            v = self.parent[v].unwrap();
            len += 2;
        }
        len
    }
}

/// Splits a connected graph with `m = n` into cycle and hanging trees.
///
/// The cycle is what survives repeatedly deleting degree-1 vertices.
pub fn classify_unicyclic(g: &Graph) -> Result<UnicyclicDecomposition, GraphError> {
    let n = g.n();
    if !g.is_connected() {
        return Err(GraphError::NotConnected);
    }
    if g.m() != n {
        return Err(GraphError::NotUnicyclic { n, m: g.m() });
    }

    let mut deg = g.degrees();
    let mut removed = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = stack.pop() {
        removed[v] = true;
        for &u in g.neighbors(v) {
            if !removed[u] {
                deg[u] -= 1;
                if deg[u] == 1 {
                    stack.push(u);
                }
            }
        }
    }

    let start = (0..n).find(|&v| !removed[v]).expect("m = n forces a cycle");
    let mut raw_cycle = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&u| !removed[u] && u != prev)
            .expect("2-core of a unicyclic graph is a cycle");
        if next == start {
            break;
        }
        raw_cycle.push(next);
        prev = cur;
        cur = next;
    }
    let g_len = raw_cycle.len();
    debug_assert!(g_len >= 3);

    let mut anchor = vec![usize::MAX; n];
    let mut tree_dist = vec![0; n];
    let mut parent = vec![None; n];
    let mut raw_trees = Vec::with_capacity(g_len);
    let mut raw_codes = Vec::with_capacity(g_len);
    for &c in &raw_cycle {
        let (code, members) = rooted_code(g, c, |v| !removed[v] && v != c);
        anchor[c] = c;
        for &v in &members[1..] {
            let p = g
                .neighbors(v)
                .iter()
                .copied()
                .find(|&u| anchor[u] == c)
                .expect("BFS order visits parents first");
            anchor[v] = c;
            parent[v] = Some(p);
            tree_dist[v] = tree_dist[p] + 1;
        }
        raw_trees.push(members);
        raw_codes.push(code);
    }

    let (shift, reversed) = dihedral_min(&raw_codes);
    let idx = |k: usize| {
        if reversed {
            (shift + g_len - k) % g_len
        } else {
            (shift + k) % g_len
        }
    };
    let cycle: Vec<usize> = (0..g_len).map(|k| raw_cycle[idx(k)]).collect();
    let trees: Vec<Vec<usize>> = (0..g_len).map(|k| raw_trees[idx(k)].clone()).collect();
    let codes: Vec<RootedTreeCode> = (0..g_len).map(|k| raw_codes[idx(k)].clone()).collect();
    let mut position = vec![None; n];
    for (k, &c) in cycle.iter().enumerate() {
        position[c] = Some(k);
    }

    Ok(UnicyclicDecomposition { cycle, position, anchor, tree_dist, parent, trees, codes })
}

/// Returns `(start, reversed)` of the smallest rotation/reflection of `seq`.
pub(crate) fn dihedral_min<T: Ord>(seq: &[T]) -> (usize, bool) {
    let len = seq.len();
    let image = |start: usize, rev: bool, k: usize| {
        if rev {
            &seq[(start + len - k) % len]
        } else {
            &seq[(start + k) % len]
        }
    };
    let mut best = (0, false);
    for rev in [false, true] {
        for start in 0..len {
            let ord = (0..len)
                .map(|k| image(start, rev, k).cmp(image(best.0, best.1, k)))
                .find(|o| o.is_ne());
            if ord == Some(std::cmp::Ordering::Less) {
                best = (start, rev);
            }
        }
    }
    best
}
