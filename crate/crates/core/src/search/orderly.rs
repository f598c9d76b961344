//! Canonical augmentation by edge insertion.
//!
//! Starting from the edgeless graph, a child `h = g + uv` is kept only when
//! `uv` lies in the automorphism orbit of the canonical deletion edge of `h`,
//! and siblings are reduced to one representative per orbit of non-edges
//! under `Aut(g)`. Each isomorphism class satisfying a property that is
//! closed under edge deletion is then produced exactly once.

use crate::canon::{canonize, Canon, UnionFind};
use crate::graph::Graph;

/// A generated graph together with its canonical labelling.
#[derive(Clone, Debug)]
pub struct Node {
    pub graph: Graph,
    pub canon: Canon,
}

impl Node {
    pub fn root(n: usize) -> crate::error::Result<Node> {
        let graph = Graph::empty(n)?;
        let canon = canonize(&graph);
        Ok(Node { graph, canon })
    }
}

/// One representative non-edge per `Aut(g)` orbit whose insertion satisfies
/// `accept`.
pub struct Candidates {
    pub reps: Vec<(usize, usize)>,
    /// Number of individual non-edges (counting whole orbits) whose
    /// insertion satisfies `accept`.
    pub addable: usize,
}

pub fn candidates(node: &Node, accept: &impl Fn(&Graph) -> bool) -> Candidates {
    let g = &node.graph;
    let n = g.vertex_count();
    let mut index = vec![usize::MAX; n * n];
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                index[u * n + v] = pairs.len();
                index[v * n + u] = pairs.len();
                pairs.push((u, v));
            }
        }
    }

    let mut uf = UnionFind::new(pairs.len());
    for gen in &node.canon.generators {
        for (i, &(u, v)) in pairs.iter().enumerate() {
            uf.union(i, index[gen[u] * n + gen[v]]);
        }
    }
    let mut orbit_size = vec![0usize; pairs.len()];
    for i in 0..pairs.len() {
        orbit_size[uf.find(i)] += 1;
    }

    let mut reps = Vec::new();
    let mut addable = 0;
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if uf.find(i) != i {
            continue;
        }
        let mut h = g.clone();
        h.insert(u, v);
        if accept(&h) {
            addable += orbit_size[i];
            reps.push((u, v));
        }
    }
    Candidates { reps, addable }
}

/// Canonical children of `node` among the candidate insertions.
pub fn children(node: &Node, reps: &[(usize, usize)]) -> Vec<Node> {
    let mut out = Vec::new();
    for &(u, v) in reps {
        let mut h = node.graph.clone();
        h.insert(u, v);
        let top = top_edges(&h);
        if !top.contains(&(u, v)) {
            continue;
        }
        let canon = canonize(&h);
        if top.len() == 1 || is_canonical_parent(&top, &canon, (u, v)) {
            out.push(Node { graph: h, canon });
        }
    }
    out
}

/// Isomorphism-invariant edge score: endpoint degrees (larger first), then
/// the number of triangles on the edge.
fn edge_score(h: &Graph, (a, b): (usize, usize)) -> (usize, usize, usize) {
    let (da, db) = (h.deg(a), h.deg(b));
    (da.max(db), da.min(db), h.common_neighbors(a, b))
}

/// Edges of maximum score. The canonical deletion edge is always one of them.
fn top_edges(h: &Graph) -> Vec<(usize, usize)> {
    let mut best = (0, 0, 0);
    let mut top = Vec::new();
    for e in h.edges() {
        let s = edge_score(h, e);
        if s > best {
            best = s;
            top.clear();
        }
        if s == best {
            top.push(e);
        }
    }
    top
}

/// The canonical deletion edge is the top-scoring edge whose endpoints carry
/// the largest canonical positions (compared as `(max, min)`). The insertion
/// is accepted iff the inserted edge shares its automorphism orbit.
fn is_canonical_parent(top: &[(usize, usize)], canon: &Canon, added: (usize, usize)) -> bool {
    let pos = canon.positions();
    let key = |&(a, b): &(usize, usize)| {
        let (pa, pb) = (pos[a], pos[b]);
        (pa.max(pb), pa.min(pb))
    };
    let deletion = *top.iter().max_by_key(|e| key(e)).expect("child has an edge");
    let normal = |(a, b): (usize, usize)| if a < b { (a, b) } else { (b, a) };
    if deletion == added {
        return true;
    }
    if canon.generators.is_empty() {
        return false;
    }
    let mut orbit = vec![deletion];
    let mut i = 0;
    while i < orbit.len() {
        let (a, b) = orbit[i];
        for gen in &canon.generators {
            let image = normal((gen[a], gen[b]));
            if image == added {
                return true;
            }
            if !orbit.contains(&image) {
                orbit.push(image);
            }
        }
        i += 1;
    }
    false
}

/// All isomorphism classes on `n` vertices satisfying `accept`, which must be
/// closed under edge deletion and hold for the edgeless graph. Graphs are
/// returned in generation order.
pub fn enumerate_hereditary(n: usize, accept: impl Fn(&Graph) -> bool) -> crate::error::Result<Vec<Graph>> {
    let root = Node::root(n)?;
    let mut out = Vec::new();
    let mut stack = vec![root];
    while let Some(node) = stack.pop() {
        let cands = candidates(&node, &accept);
        stack.extend(children(&node, &cands.reps));
        out.push(node.graph);
    }
    Ok(out)
}
