//! Left-right planarity test (de Fraysseix–Rosenstiehl criterion, in the
//! formulation with conflict pairs of return-edge intervals).
//!
//! Only the decision is computed. The `refs` table is still maintained because
//! interval trimming follows it when back edges to the current parent are
//! removed.

use crate::graph::Graph;

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Default, Debug)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Default, Debug)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct State {
    target: Vec<usize>,
    source: Vec<usize>,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<usize>,
    out: Vec<Vec<usize>>,
    lowpt_edge: Vec<usize>,
    refs: Vec<Option<usize>>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
}

/// Planarity decision for any graph, connected or not.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n >= 3 && m > 3 * n - 6 {
        return false;
    }
    if m < 9 {
        // K5 and K3,3 subdivisions need at least 9 edges
        return true;
    }

    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut st = State {
        target: Vec::with_capacity(m),
        source: Vec::with_capacity(m),
        height: vec![NONE; n],
        parent_edge: vec![NONE; n],
        lowpt: Vec::with_capacity(m),
        lowpt2: Vec::with_capacity(m),
        nesting: Vec::with_capacity(m),
        out: vec![Vec::new(); n],
        lowpt_edge: vec![NONE; m],
        refs: vec![None; m],
        stack_bottom: vec![0; m],
        stack: Vec::new(),
    };

    let mut oriented = vec![false; n * n];
    let mut roots = Vec::new();
    for v in 0..n {
        if st.height[v] == NONE {
            st.height[v] = 0;
            roots.push(v);
            orient(&mut st, &adj, &mut oriented, n, v);
        }
    }

    for v in 0..n {
        let nesting = &st.nesting;
        st.out[v].sort_by_key(|&e| nesting[e]);
    }

    roots.into_iter().all(|r| test(&mut st, r))
}

fn orient(st: &mut State, adj: &[Vec<usize>], oriented: &mut [bool], n: usize, v: usize) {
    let parent = st.parent_edge[v];
    for &w in &adj[v] {
        if oriented[v * n + w] {
            continue;
        }
        oriented[v * n + w] = true;
        oriented[w * n + v] = true;

        let ei = st.target.len();
        st.source.push(v);
        st.target.push(w);
        st.lowpt.push(st.height[v]);
        st.lowpt2.push(st.height[v]);
        st.nesting.push(0);
        st.out[v].push(ei);

        if st.height[w] == NONE {
            st.parent_edge[w] = ei;
            st.height[w] = st.height[v] + 1;
            orient(st, adj, oriented, n, w);
        } else {
            st.lowpt[ei] = st.height[w];
        }

        st.nesting[ei] = 2 * st.lowpt[ei] + usize::from(st.lowpt2[ei] < st.height[v]);

        if parent != NONE {
            let e = parent;
            if st.lowpt[ei] < st.lowpt[e] {
                st.lowpt2[e] = st.lowpt[e].min(st.lowpt2[ei]);
                st.lowpt[e] = st.lowpt[ei];
            } else if st.lowpt[ei] > st.lowpt[e] {
                st.lowpt2[e] = st.lowpt2[e].min(st.lowpt[ei]);
            } else {
                st.lowpt2[e] = st.lowpt2[e].min(st.lowpt2[ei]);
            }
        }
    }
}

fn test(st: &mut State, v: usize) -> bool {
    let parent = st.parent_edge[v];
    let out = std::mem::take(&mut st.out[v]);
    for (i, &ei) in out.iter().enumerate() {
        let w = st.target[ei];
        st.stack_bottom[ei] = st.stack.len();
        if st.parent_edge[w] == ei {
            if !test(st, w) {
                return false;
            }
        } else {
            st.lowpt_edge[ei] = ei;
            st.stack.push(ConflictPair {
                left: Interval::default(),
                right: Interval {
                    low: Some(ei),
                    high: Some(ei),
                },
            });
        }

        if st.lowpt[ei] < st.height[v] {
            if i == 0 {
                st.lowpt_edge[parent] = st.lowpt_edge[ei];
            } else if !add_constraints(st, ei, parent) {
                return false;
            }
        }
    }
    st.out[v] = out;

    if parent != NONE {
        remove_back_edges(st, parent);
    }
    true
}

fn conflicting(st: &State, interval: &Interval, b: usize) -> bool {
    match interval.high {
        Some(h) => st.lowpt[h] > st.lowpt[b],
        None => false,
    }
}

fn lowest(st: &State, p: &ConflictPair) -> usize {
    match (p.left.low, p.right.low) {
        (None, Some(r)) => st.lowpt[r],
        (Some(l), None) => st.lowpt[l],
        (Some(l), Some(r)) => st.lowpt[l].min(st.lowpt[r]),
        (None, None) => NONE,
    }
}

fn add_constraints(st: &mut State, ei: usize, e: usize) -> bool {
    let mut p = ConflictPair::default();

    // merge return edges of ei into p.right
    loop {
        let Some(mut q) = st.stack.pop() else { break };
        if !q.left.is_empty() {
            q.swap();
        }
        if !q.left.is_empty() {
            return false;
        }
        let q_low = q.right.low.expect("non-empty right interval");
        if st.lowpt[q_low] > st.lowpt[e] {
            if p.right.is_empty() {
                p.right = q.right;
            } else if let Some(pl) = p.right.low {
                st.refs[pl] = q.right.high;
            }
            p.right.low = q.right.low;
        } else {
            st.refs[q_low] = Some(st.lowpt_edge[e]);
        }
        if st.stack.len() <= st.stack_bottom[ei] {
            break;
        }
    }

    // merge conflicting return edges of earlier siblings into p.left
    while let Some(top) = st.stack.last() {
        if !(conflicting(st, &top.left, ei) || conflicting(st, &top.right, ei)) {
            break;
        }
        let mut q = st.stack.pop().expect("checked non-empty");
        if conflicting(st, &q.right, ei) {
            q.swap();
        }
        if conflicting(st, &q.right, ei) {
            return false;
        }
        if let Some(pl) = p.right.low {
            st.refs[pl] = q.right.high;
        }
        if q.right.low.is_some() {
            p.right.low = q.right.low;
        }
        if p.left.is_empty() {
            p.left = q.left;
        } else if let Some(pl) = p.left.low {
            st.refs[pl] = q.left.high;
        }
        p.left.low = q.left.low;
    }

    if !(p.left.is_empty() && p.right.is_empty()) {
        st.stack.push(p);
    }
    true
}

fn remove_back_edges(st: &mut State, e: usize) {
    let u = st.source[e];

    while let Some(top) = st.stack.last() {
        if lowest(st, top) == st.height[u] {
            st.stack.pop();
        } else {
            break;
        }
    }

    if let Some(mut p) = st.stack.pop() {
        while let Some(h) = p.left.high {
            if st.target[h] != u {
                break;
            }
            p.left.high = st.refs[h];
        }
        if p.left.high.is_none() {
            if let Some(l) = p.left.low {
                st.refs[l] = p.right.low;
                p.left.low = None;
            }
        }
        while let Some(h) = p.right.high {
            if st.target[h] != u {
                break;
            }
            p.right.high = st.refs[h];
        }
        if p.right.high.is_none() {
            if let Some(r) = p.right.low {
                st.refs[r] = p.left.low;
                p.right.low = None;
            }
        }
        st.stack.push(p);
    }

    if st.lowpt[e] < st.height[u] {
        if let Some(top) = st.stack.last() {
            let hl = top.left.high;
            let hr = top.right.high;
            st.refs[e] = match (hl, hr) {
                (Some(l), None) => Some(l),
                (Some(l), Some(r)) if st.lowpt[l] > st.lowpt[r] => Some(l),
                _ => hr,
            };
        }
    }
}
