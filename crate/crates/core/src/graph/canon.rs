//! Canonical codes: complete isomorphism invariants used as dedupe keys.
//!
//! Trees are coded by the level sequence of their center rooting, unicyclic
//! graphs by the dihedrally minimal sequence of hanging-tree codes around the
//! cycle, and anything else by a brute-force minimal adjacency string.

use std::cmp::Ordering;
use std::fmt;

use super::{classify_unicyclic, Graph, GraphError};

/// Largest order accepted by the brute-force fallback for graphs that are
/// neither trees nor unicyclic.
pub const MAX_BRUTE_FORCE_ORDER: usize = 10;

const TAG_TREE: u8 = 0;
const TAG_UNICYCLIC: u8 = 1;
const TAG_GENERAL: u8 = 2;

/// Canonical level sequence of a rooted tree (root at depth 0).
///
/// Children are listed in preorder with sibling subtrees sorted so the whole
/// sequence is lexicographically largest. Ordering compares size first, then
/// the sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootedTreeCode {
    levels: Vec<u16>,
}

impl RootedTreeCode {
    /// Wraps a level sequence that is already canonical.
    pub fn from_canonical_levels(levels: Vec<u16>) -> Self {
        debug_assert!(levels.first() == Some(&0));
        RootedTreeCode { levels }
    }

    /// Canonicalizes an arbitrary preorder level sequence.
    pub fn canonicalize(levels: &[u16]) -> Self {
        let parents = parents_from_levels(levels);
        let mut children = vec![Vec::new(); levels.len()];
        for (v, p) in parents.iter().enumerate() {
            if let Some(p) = *p {
                children[p].push(v);
            }
        }
        RootedTreeCode { levels: canonical_levels(0, &children) }
    }

    pub fn levels(&self) -> &[u16] {
        &self.levels
    }

    pub fn size(&self) -> usize {
        self.levels.len()
    }

    pub fn height(&self) -> u16 {
        self.levels.iter().copied().max().unwrap_or(0)
    }

    /// Parent index of each preorder position (`None` for the root).
    pub fn parents(&self) -> Vec<Option<usize>> {
        parents_from_levels(&self.levels)
    }
}

impl Ord for RootedTreeCode {
    fn cmp(&self, other: &Self) -> Ordering {
        self.levels
            .len()
            .cmp(&other.levels.len())
            .then_with(|| self.levels.cmp(&other.levels))
    }
}

impl PartialOrd for RootedTreeCode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn parents_from_levels(levels: &[u16]) -> Vec<Option<usize>> {
    let mut stack: Vec<usize> = Vec::new();
    let mut parents = Vec::with_capacity(levels.len());
    for (i, &lvl) in levels.iter().enumerate() {
        stack.truncate(lvl as usize);
        parents.push(stack.last().copied());
        stack.push(i);
    }
    parents
}

fn canonical_levels(root: usize, children: &[Vec<usize>]) -> Vec<u16> {
    // Iterative post-order so deep paths do not overflow the stack.
    let mut order = vec![root];
    let mut i = 0;
    while i < order.len() {
        order.extend(children[order[i]].iter().copied());
        i += 1;
    }
    let mut seqs: Vec<Vec<u16>> = vec![Vec::new(); children.len()];
    for &v in order.iter().rev() {
        let mut subs: Vec<Vec<u16>> =
            children[v].iter().map(|&c| std::mem::take(&mut seqs[c])).collect();
        subs.sort_unstable_by(|a, b| b.cmp(a));
        let mut seq = Vec::with_capacity(1 + subs.iter().map(Vec::len).sum::<usize>());
        seq.push(0);
        for s in subs {
            seq.extend(s.into_iter().map(|l| l + 1));
        }
        seqs[v] = seq;
    }
    std::mem::take(&mut seqs[root])
}

/// Rooted code of the tree reached from `root` without entering `blocked`
/// vertices. Returns the code and the vertices visited in BFS order.
pub(crate) fn rooted_code(
    g: &Graph,
    root: usize,
    blocked: impl Fn(usize) -> bool,
) -> (RootedTreeCode, Vec<usize>) {
    let mut local = vec![usize::MAX; g.n()];
    let mut order = vec![root];
    local[root] = 0;
    let mut children: Vec<Vec<usize>> = vec![Vec::new()];
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        for &v in g.neighbors(u) {
            if local[v] == usize::MAX && !blocked(v) {
                local[v] = order.len();
                order.push(v);
                children.push(Vec::new());
                children[i].push(local[v]);
            }
        }
        i += 1;
    }
    (RootedTreeCode { levels: canonical_levels(0, &children) }, order)
}

/// Canonical code of the component of `root`, rooted at `root`.
pub fn rooted_tree_code(g: &Graph, root: usize) -> RootedTreeCode {
    rooted_code(g, root, |_| false).0
}

/// A byte string equal for two graphs iff they are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

struct CodeWriter(Vec<u8>);

impl CodeWriter {
    fn new(tag: u8) -> Self {
        CodeWriter(vec![tag])
    }

    fn push(&mut self, value: usize) {
        let v = u16::try_from(value).expect("canonical codes support orders below 65536");
        self.0.extend_from_slice(&v.to_be_bytes());
    }

    fn push_tree(&mut self, code: &RootedTreeCode) {
        self.push(code.size());
        for &l in code.levels() {
            self.push(l as usize);
        }
    }
}

/// Computes the canonical code of `g`.
///
/// Trees and unicyclic graphs of any order are handled structurally; other
/// graphs fall back to brute force and are rejected above
/// [`MAX_BRUTE_FORCE_ORDER`] vertices.
pub fn canonical_code(g: &Graph) -> Result<CanonicalCode, GraphError> {
    if g.is_tree() {
        return Ok(tree_code(g));
    }
    if g.is_unicyclic() {
        let dec = classify_unicyclic(g)?;
        let mut w = CodeWriter::new(TAG_UNICYCLIC);
        w.push(g.n());
        w.push(dec.girth());
        for code in dec.hanging_codes() {
            w.push_tree(code);
        }
        return Ok(CanonicalCode(w.0));
    }
    brute_force_code(g)
}

fn tree_code(g: &Graph) -> CanonicalCode {
    let mut w = CodeWriter::new(TAG_TREE);
    w.push(g.n());
    let best = tree_centers(g)
        .into_iter()
        .map(|c| rooted_code(g, c, |_| false).0)
        .min()
        .expect("a tree has at least one center");
    w.push_tree(&best);
    CanonicalCode(w.0)
}

fn tree_centers(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg = g.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &u in g.neighbors(v) {
                if deg[u] > 1 {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
            deg[v] = 0;
        }
        layer = next;
    }
    layer
}

/// Minimal upper-triangle adjacency string over all labelings that list
/// vertices in non-decreasing degree order.
fn brute_force_code(g: &Graph) -> Result<CanonicalCode, GraphError> {
    let n = g.n();
    if n > MAX_BRUTE_FORCE_ORDER {
        return Err(GraphError::TooLargeForBruteForce { n, max: MAX_BRUTE_FORCE_ORDER });
    }
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (g.degree(v), v));
    let degrees: Vec<usize> = by_degree.iter().map(|&v| g.degree(v)).collect();
    let mut classes: Vec<std::ops::Range<usize>> = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || degrees[i] != degrees[start] {
            classes.push(start..i);
            start = i;
        }
    }

    // order[k] = original vertex placed at canonical position k
    let mut order = by_degree.clone();
    let mut best: Option<u64> = None;
    permute_classes(&mut order, &classes, 0, &mut |order| {
        let mut bits = 0u64;
        for j in 1..n {
            for i in 0..j {
                bits = (bits << 1) | g.has_edge(order[i], order[j]) as u64;
            }
        }
        // Larger adjacency strings sort first so edges appear early.
        let key = !bits;
        if best.is_none_or(|b| key < b) {
            best = Some(key);
        }
    });

    let mut w = CodeWriter::new(TAG_GENERAL);
    w.push(n);
    w.push(g.m());
    for d in &degrees {
        w.push(*d);
    }
    w.0.extend_from_slice(&best.unwrap_or(0).to_be_bytes());
    Ok(CanonicalCode(w.0))
}

fn permute_classes(
    order: &mut [usize],
    classes: &[std::ops::Range<usize>],
    class: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    if class == classes.len() {
        visit(order);
        return;
    }
    let range = classes[class].clone();
    heap_permute(order, range.clone(), range.len(), &mut |order| {
        permute_classes(order, classes, class + 1, visit)
    });
}

fn heap_permute(
    order: &mut [usize],
    range: std::ops::Range<usize>,
    k: usize,
    visit: &mut dyn FnMut(&mut [usize]),
) {
    if k <= 1 {
        visit(order);
        return;
    }
    for i in 0..k - 1 {
        heap_permute(order, range.clone(), k - 1, visit);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        order.swap(range.start + j, range.start + k - 1);
    }
    heap_permute(order, range, k - 1, visit);
}
