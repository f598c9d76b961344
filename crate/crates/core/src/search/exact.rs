//! Exact planar Turán numbers by branch-and-bound over canonical augmentation.
//!
//! Planarity and S_{m,k}-freeness are both preserved by edge deletion, so every
//! extremal graph is reached from the edgeless graph through feasible edge
//! insertions. A node with `e` edges and `c` individually addable non-edges
//! cannot lead beyond `min(e + c, 3n - 6)` edges; subtrees that cannot reach
//! the incumbent are cut.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::orderly::{candidates, children, Node};
use crate::canon::CanonicalForm;
use crate::doublestar::{is_free, DoubleStarPattern};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::GRAPH6_MAX_VERTICES;
use crate::planarity::is_planar;

pub const DEFAULT_EXTREMAL_CAP: usize = 100;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub worker_count: usize,
    /// Stop after this many search nodes; the result is then a lower bound.
    pub node_budget: Option<u64>,
    pub collect_extremal: bool,
    /// Largest number of extremal graphs kept in memory. Classes beyond the
    /// cap are still counted.
    pub extremal_cap: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            worker_count: std::thread::available_parallelism().map_or(1, |n| n.get()),
            node_budget: None,
            collect_extremal: true,
            extremal_cap: DEFAULT_EXTREMAL_CAP,
        }
    }
}

impl SearchConfig {
    pub fn with_workers(worker_count: usize) -> Self {
        SearchConfig {
            worker_count,
            ..SearchConfig::default()
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExactResult {
    pub n: usize,
    pub pattern: DoubleStarPattern,
    /// Maximum edge count found. Equal to ex_P(n, S_{m,k}) only when `exact`.
    pub value: usize,
    /// False when the node budget ran out before the search completed.
    pub exact: bool,
    /// Canonically labelled extremal graphs, ordered by canonical form, at most
    /// `extremal_cap` of them.
    pub extremal: Vec<Graph>,
    /// Number of extremal isomorphism classes, when collected.
    pub extremal_classes: Option<usize>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

struct Incumbent {
    edges: usize,
    classes: usize,
    graphs: BTreeMap<CanonicalForm, Graph>,
}

struct Shared {
    pattern: DoubleStarPattern,
    ceiling: usize,
    best: AtomicUsize,
    nodes: AtomicU64,
    aborted: AtomicBool,
    budget: Option<u64>,
    collect: bool,
    cap: usize,
    incumbent: Mutex<Incumbent>,
}

impl Shared {
    fn feasible(&self, g: &Graph) -> bool {
        is_free(g, self.pattern) && is_planar(g)
    }

    fn record(&self, node: &Node) {
        let e = node.graph.edge_count();
        self.best.fetch_max(e, Ordering::Relaxed);
        let mut inc = self.incumbent.lock().expect("incumbent lock");
        if e < inc.edges {
            return;
        }
        if e > inc.edges {
            inc.edges = e;
            inc.classes = 0;
            inc.graphs.clear();
        }
        inc.classes += 1;
        if self.collect {
            let canonical = node
                .graph
                .relabel(&node.canon.positions())
                .expect("canonical positions are a permutation");
            inc.graphs.insert(node.canon.form.clone(), canonical);
            if inc.graphs.len() > self.cap {
                inc.graphs.pop_last();
            }
        }
    }

    fn explore(&self, node: Node, parallel: bool) {
        if self.aborted.load(Ordering::Relaxed) {
            return;
        }
        let visited = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if self.budget.is_some_and(|b| visited > b) {
            self.aborted.store(true, Ordering::Relaxed);
            return;
        }
        self.record(&node);

        let e = node.graph.edge_count();
        let cands = candidates(&node, &|g: &Graph| self.feasible(g));
        let bound = (e + cands.addable).min(self.ceiling);
        let best = self.best.load(Ordering::Relaxed);
        // ties must stay reachable when extremal graphs are collected
        if bound < best || (!self.collect && bound == best) || cands.reps.is_empty() {
            return;
        }

        let kids = children(&node, &cands.reps);
        if parallel {
            kids.into_par_iter().for_each(|k| self.explore(k, true));
        } else {
            for k in kids {
                self.explore(k, false);
            }
        }
    }
}

/// Computes ex_P(n, S_{m,k}). With one worker the exploration order is fully
/// deterministic; with more, only node counts may vary between runs.
pub fn exact_planar_turan(n: usize, pattern: DoubleStarPattern, cfg: &SearchConfig) -> Result<ExactResult> {
    if n == 0 || n > GRAPH6_MAX_VERTICES {
        return Err(Error::OutOfRange(format!(
            "exact search supports 1 <= n <= {GRAPH6_MAX_VERTICES}, got {n}"
        )));
    }
    if cfg.worker_count == 0 {
        return Err(Error::OutOfRange("worker_count must be at least 1".into()));
    }
    let start = Instant::now();
    let ceiling = if n >= 3 { 3 * n - 6 } else { n * (n - 1) / 2 };
    let shared = Shared {
        pattern,
        ceiling,
        best: AtomicUsize::new(0),
        nodes: AtomicU64::new(0),
        aborted: AtomicBool::new(false),
        budget: cfg.node_budget,
        collect: cfg.collect_extremal,
        cap: cfg.extremal_cap.max(1),
        incumbent: Mutex::new(Incumbent {
            edges: 0,
            classes: 0,
            graphs: BTreeMap::new(),
        }),
    };

    let root = Node::root(n)?;
    if cfg.worker_count == 1 {
        shared.explore(root, false);
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.worker_count)
            .build()
            .map_err(|e| Error::OutOfRange(format!("cannot start worker pool: {e}")))?;
        pool.install(|| shared.explore(root, true));
    }

    let exact = !shared.aborted.load(Ordering::Relaxed);
    let nodes_explored = shared.nodes.load(Ordering::Relaxed).min(cfg.node_budget.unwrap_or(u64::MAX));
    let inc = shared.incumbent.into_inner().expect("incumbent lock");
    Ok(ExactResult {
        n,
        pattern,
        value: inc.edges,
        exact,
        extremal: inc.graphs.into_values().collect(),
        extremal_classes: (cfg.collect_extremal && exact).then_some(inc.classes),
        nodes_explored,
        elapsed: start.elapsed(),
    })
}
