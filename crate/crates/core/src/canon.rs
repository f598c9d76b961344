//! Canonical labelling by individualization-refinement.
//!
//! The search tree individualizes one vertex of a target cell per level and
//! refines to an equitable partition. Every discrete leaf yields a relabelled
//! adjacency matrix; the lexicographically largest one is the canonical form.
//! Automorphisms are collected whenever two leaves produce the same matrix and
//! are used to prune sibling subtrees that lie in the same orbit of the
//! pointwise stabilizer of the current path.

use std::cmp::Ordering;

use crate::bits;
use crate::graph::Graph;

/// Byte string identifying an isomorphism class exactly.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// Result of canonical labelling.
#[derive(Clone, Debug)]
pub struct Canon {
    pub form: CanonicalForm,
    /// `labeling[i]` is the original vertex placed at canonical position `i`.
    pub labeling: Vec<usize>,
    /// Automorphisms discovered during the search; they generate the full
    /// automorphism group. Each maps vertex `v` to `perm[v]`.
    pub generators: Vec<Vec<usize>>,
}

impl Canon {
    /// Canonical position of every original vertex.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.labeling.len()];
        for (i, &v) in self.labeling.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// Orbit representative (smallest member) of every vertex.
    pub fn vertex_orbits(&self) -> Vec<usize> {
        let n = self.labeling.len();
        let mut uf = UnionFind::new(n);
        for gen in &self.generators {
            for (v, &w) in gen.iter().enumerate() {
                uf.union(v, w);
            }
        }
        (0..n).map(|v| uf.min_member(v)).collect()
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonize(g).form
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && canonical_form(a) == canonical_form(b)
}

/// The canonical relabelling of `g` itself.
pub fn canonical_graph(g: &Graph) -> Graph {
    let canon = canonize(g);
    g.relabel(&canon.positions())
        .expect("canonical positions form a permutation")
}

pub fn canonize(g: &Graph) -> Canon {
    let n = g.vertex_count();
    let mut search = Search {
        g,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let mut cells = vec![(0..n).collect::<Vec<_>>()];
    refine(g, &mut cells);
    let mut path = Vec::new();
    search.descend(cells, &mut path);

    let best = search.best.expect("search always reaches a leaf");
    Canon {
        form: encode_form(n, g.words(), &best.matrix),
        labeling: best.labeling,
        generators: search.generators,
    }
}

struct Leaf {
    labeling: Vec<usize>,
    path: Vec<usize>,
    matrix: Vec<u64>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Explores the subtree below `cells`. Returns `Some(level)` to unwind to
    /// the ancestor at depth `level` after an automorphism proved the rest of
    /// the intermediate subtrees redundant.
    fn descend(&mut self, cells: Vec<Vec<usize>>, path: &mut Vec<usize>) -> Option<usize> {
        if cells.len() == self.g.vertex_count() {
            return self.visit_leaf(&cells, path);
        }
        let depth = path.len();
        let target = target_cell(&cells);
        let mut candidates = cells[target].clone();
        candidates.sort_unstable();

        let mut explored: Vec<usize> = Vec::new();
        for v in candidates {
            if !explored.is_empty() && self.pruned(v, &explored, path) {
                continue;
            }
            let mut child = cells.clone();
            let rest: Vec<usize> = child[target].iter().copied().filter(|&u| u != v).collect();
            child[target] = vec![v];
            child.insert(target + 1, rest);
            refine(self.g, &mut child);

            path.push(v);
            let jump = self.descend(child, path);
            path.pop();
            explored.push(v);
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    /// Whether `v` lies in the orbit of an explored sibling under the known
    /// automorphisms that fix the current path pointwise.
    fn pruned(&self, v: usize, explored: &[usize], path: &[usize]) -> bool {
        let n = self.g.vertex_count();
        let mut uf = UnionFind::new(n);
        let mut any = false;
        for gen in &self.generators {
            if path.iter().all(|&p| gen[p] == p) {
                any = true;
                for (a, &b) in gen.iter().enumerate() {
                    uf.union(a, b);
                }
            }
        }
        if !any {
            return false;
        }
        let root = uf.find(v);
        explored.iter().any(|&u| uf.find(u) == root)
    }

    fn visit_leaf(&mut self, cells: &[Vec<usize>], path: &[usize]) -> Option<usize> {
        let labeling: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let matrix = relabelled_matrix(self.g, &labeling);
        let leaf = Leaf {
            labeling,
            path: path.to_vec(),
            matrix,
        };

        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                labeling: leaf.labeling.clone(),
                path: leaf.path.clone(),
                matrix: leaf.matrix.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if first.matrix == leaf.matrix {
            let gen = automorphism(&first.labeling, &leaf.labeling);
            let level = common_prefix(&first.path, &leaf.path);
            self.generators.push(gen);
            return Some(level);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match leaf.matrix.cmp(&best.matrix) {
            Ordering::Equal => {
                let gen = automorphism(&best.labeling, &leaf.labeling);
                let level = common_prefix(&best.path, &leaf.path);
                self.generators.push(gen);
                Some(level)
            }
            Ordering::Greater => {
                self.best = Some(leaf);
                None
            }
            Ordering::Less => None,
        }
    }
}

/// First non-singleton cell of minimum size.
fn target_cell(cells: &[Vec<usize>]) -> usize {
    let mut target = usize::MAX;
    let mut size = usize::MAX;
    for (i, c) in cells.iter().enumerate() {
        if c.len() > 1 && c.len() < size {
            target = i;
            size = c.len();
        }
    }
    target
}

/// Refines an ordered partition to the coarsest equitable refinement.
/// Cells are split by their neighbour count into a splitter cell and the
/// fragments replace the cell in ascending count order.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    let words = g.words();
    let mut mask = vec![0u64; words];
    'restart: loop {
        for s in 0..cells.len() {
            mask.iter_mut().for_each(|w| *w = 0);
            for &v in &cells[s] {
                bits::set(&mut mask, v);
            }
            for c in 0..cells.len() {
                if cells[c].len() < 2 {
                    continue;
                }
                let counts: Vec<usize> = cells[c]
                    .iter()
                    .map(|&x| bits::count_and(g.row(x), &mask))
                    .collect();
                if counts.iter().all(|&k| k == counts[0]) {
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> =
                    counts.into_iter().zip(cells[c].iter().copied()).collect();
                keyed.sort_unstable();
                let mut fragments: Vec<Vec<usize>> = Vec::new();
                let mut last = usize::MAX;
                for (k, v) in keyed {
                    if k != last {
                        fragments.push(Vec::new());
                        last = k;
                    }
                    fragments.last_mut().unwrap().push(v);
                }
                cells.splice(c..=c, fragments);
                continue 'restart;
            }
        }
        break;
    }
}

fn relabelled_matrix(g: &Graph, labeling: &[usize]) -> Vec<u64> {
    let n = g.vertex_count();
    let words = g.words();
    let mut pos = vec![0; n];
    for (i, &v) in labeling.iter().enumerate() {
        pos[v] = i;
    }
    let mut matrix = vec![0u64; n * words];
    for (i, &v) in labeling.iter().enumerate() {
        let row = &mut matrix[i * words..(i + 1) * words];
        for w in g.neighbors(v) {
            bits::set(row, pos[w]);
        }
    }
    matrix
}

fn encode_form(n: usize, words: usize, matrix: &[u64]) -> CanonicalForm {
    let row_bytes = n.div_ceil(8);
    let mut out = Vec::with_capacity(2 + n * row_bytes);
    out.extend_from_slice(&(n as u16).to_be_bytes());
    for i in 0..n {
        let row = &matrix[i * words..(i + 1) * words];
        let bytes: Vec<u8> = row.iter().flat_map(|w| w.to_le_bytes()).collect();
        out.extend_from_slice(&bytes[..row_bytes]);
    }
    CanonicalForm(out)
}

fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut perm = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        perm[a] = b;
    }
    perm
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Disjoint-set forest with path halving.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Unions by attaching the larger root below the smaller one, so every
    /// root is the minimum of its set.
    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    pub(crate) fn min_member(&mut self, x: usize) -> usize {
        self.find(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (0..n).collect();
        permute(&mut perm, 0, &mut out);
        out
    }

    fn permute(perm: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == perm.len() {
            out.push(perm.clone());
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            permute(perm, k + 1, out);
            perm.swap(k, i);
        }
    }

    fn brute_isomorphic(a: &Graph, b: &Graph, perms: &[Vec<usize>]) -> bool {
        a.edge_count() == b.edge_count()
            && perms.iter().any(|p| a.edges().iter().all(|&(u, v)| b.has_edge(p[u], p[v])))
    }

    fn labelled_graph(n: usize, mask: u64) -> Graph {
        let mut edges = Vec::new();
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                if mask >> k & 1 == 1 {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn relabelled_paths_share_a_form() {
        let p = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let q = Graph::from_edge_list(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&p), canonical_form(&q));
        assert_ne!(canonical_form(&p), canonical_form(&Graph::complete(3).unwrap()));
    }

    // Brute-force oracle: classes among the 64 labelled graphs on 4 vertices
    // found by pairwise permutation search.
    #[test]
    fn four_vertex_classes_match_brute_force() {
        let perms = all_permutations(4);
        let graphs: Vec<Graph> = (0..64).map(|m| labelled_graph(4, m)).collect();
        let mut reps: Vec<&Graph> = Vec::new();
        for g in &graphs {
            if !reps.iter().any(|r| brute_isomorphic(r, g, &perms)) {
                reps.push(g);
            }
        }
        assert_eq!(reps.len(), 11);

        let mut forms: Vec<CanonicalForm> = graphs.iter().map(canonical_form).collect();
        forms.sort();
        forms.dedup();
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn exactness_on_all_five_vertex_pairs() {
        let perms = all_permutations(5);
        let graphs: Vec<Graph> = (0..1024).map(|m| labelled_graph(5, m)).collect();
        let forms: Vec<CanonicalForm> = graphs.iter().map(canonical_form).collect();
        // compare every graph against a handful of fixed probes
        for probe in [3usize, 77, 300, 511, 1000] {
            for (g, f) in graphs.iter().zip(&forms) {
                assert_eq!(
                    *f == forms[probe],
                    brute_isomorphic(&graphs[probe], g, &perms),
                    "{g:?} vs {:?}",
                    graphs[probe]
                );
            }
        }
    }

    #[test]
    fn generators_are_automorphisms_and_orbits_are_exact() {
        let perms = all_permutations(6);
        for mask in (0..1u64 << 15).step_by(97) {
            let g = labelled_graph(6, mask);
            let canon = canonize(&g);
            for gen in &canon.generators {
                for (u, v) in g.edges() {
                    assert!(g.has_edge(gen[u], gen[v]));
                }
            }
            let autos: Vec<&Vec<usize>> = perms
                .iter()
                .filter(|p| g.edges().iter().all(|&(u, v)| g.has_edge(p[u], p[v])))
                .collect();
            let mut brute = vec![usize::MAX; 6];
            for v in 0..6 {
                brute[v] = autos.iter().map(|p| p[v]).min().unwrap();
            }
            assert_eq!(canon.vertex_orbits(), brute, "{g:?}");
        }
    }

    #[test]
    fn highly_symmetric_graphs_finish() {
        for n in [1, 2, 12, 20, 40] {
            let e = Graph::empty(n).unwrap();
            let k = Graph::complete(n).unwrap();
            assert_eq!(canonize(&e).vertex_orbits(), vec![0; n]);
            assert_eq!(canonize(&k).vertex_orbits(), vec![0; n]);
        }
        let c = Graph::cycle(30).unwrap();
        let shifted = c.relabel(&(0..30).map(|v| (v * 7) % 30).collect::<Vec<_>>()).unwrap();
        assert_eq!(canonical_form(&c), canonical_form(&shifted));
    }

    #[test]
    fn canonical_graph_is_a_fixed_point() {
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]).unwrap();
        let c = canonical_graph(&g);
        assert!(is_isomorphic(&g, &c));
        assert_eq!(canonical_graph(&c), c);
    }
}
