//! Double star patterns S_{m,k} and subgraph containment.
//!
//! S_{m,k} is an edge `xy` (the backbone) with `m` pendant leaves on `x` and
//! `k` pendant leaves on `y`, all `m + k + 2` vertices distinct. Containment
//! reduces to a per-edge counting test: with `A = N(x) - y` and
//! `B = N(y) - x`, the orientation where `x` takes `a` leaves and `y` takes `b`
//! is realisable iff `|A| >= a`, `|B| >= b` and `|A ∪ B| >= a + b` (Hall's
//! condition for the two-sided selection).

use std::fmt;
use std::str::FromStr;

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Pattern `(m, k)` with `1 <= m <= k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DoubleStarPattern {
    m: usize,
    k: usize,
}

impl DoubleStarPattern {
    /// Builds a pattern, swapping the arguments if needed so that `m <= k`.
    pub fn new(m: usize, k: usize) -> Result<Self> {
        if m == 0 || k == 0 {
            return Err(Error::InvalidPattern(format!(
                "leaf counts must be at least 1, got {m},{k}"
            )));
        }
        Ok(DoubleStarPattern {
            m: m.min(k),
            k: m.max(k),
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.m + self.k + 2
    }

    /// The pattern itself as a graph: backbone `0-1`, leaves `2..2+m` on 0,
    /// the rest on 1.
    pub fn graph(&self) -> Graph {
        let mut edges = vec![(0, 1)];
        edges.extend((0..self.m).map(|i| (0, 2 + i)));
        edges.extend((0..self.k).map(|i| (1, 2 + self.m + i)));
        Graph::from_edge_list(self.vertex_count(), &edges).expect("pattern graph is valid")
    }
}

impl fmt::Display for DoubleStarPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.m, self.k)
    }
}

impl FromStr for DoubleStarPattern {
    type Err = Error;

    /// Parses `"m,k"`.
    fn from_str(s: &str) -> Result<Self> {
        let (m, k) = s
            .split_once(',')
            .ok_or_else(|| Error::InvalidPattern(format!("expected M,K, got {s:?}")))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidPattern(format!("expected M,K, got {s:?}")))
        };
        DoubleStarPattern::new(parse(m)?, parse(k)?)
    }
}

/// Embedding certificate: backbone `(x, y)`, `m` leaves on `x`, `k` on `y`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pub backbone: (usize, usize),
    pub leaves_x: Vec<usize>,
    pub leaves_y: Vec<usize>,
}

impl Witness {
    /// Checks every certificate condition against `g` from scratch.
    pub fn check(&self, g: &Graph, p: DoubleStarPattern) -> std::result::Result<(), String> {
        let (x, y) = self.backbone;
        if !g.has_edge(x, y) {
            return Err(format!("backbone {x}-{y} is not an edge"));
        }
        if self.leaves_x.len() != p.m() || self.leaves_y.len() != p.k() {
            return Err(format!(
                "leaf counts {},{} do not match pattern {p}",
                self.leaves_x.len(),
                self.leaves_y.len()
            ));
        }
        if let Some(l) = self.leaves_x.iter().find(|&&l| !g.has_edge(x, l)) {
            return Err(format!("leaf {l} is not adjacent to {x}"));
        }
        if let Some(l) = self.leaves_y.iter().find(|&&l| !g.has_edge(y, l)) {
            return Err(format!("leaf {l} is not adjacent to {y}"));
        }
        let mut all: Vec<usize> = vec![x, y];
        all.extend(&self.leaves_x);
        all.extend(&self.leaves_y);
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err("backbone and leaf sets are not pairwise disjoint".into());
        }
        Ok(())
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(
            f,
            "backbone={}-{} leaves_x={{{}}} leaves_y={{{}}}",
            self.backbone.0,
            self.backbone.1,
            join(&self.leaves_x),
            join(&self.leaves_y)
        )
    }
}

#[inline]
fn orientation_feasible(g: &Graph, x: usize, y: usize, a: usize, b: usize) -> bool {
    let da = g.deg(x) - 1;
    let db = g.deg(y) - 1;
    da >= a && db >= b && bits::count_or(g.row(x), g.row(y)) - 2 >= a + b
}

/// Whether the edge `xy` can serve as a backbone in either orientation.
pub fn backbone_feasible(g: &Graph, x: usize, y: usize, p: DoubleStarPattern) -> Result<bool> {
    g.check_edge(x, y)?;
    Ok(orientation_feasible(g, x, y, p.m, p.k) || orientation_feasible(g, y, x, p.m, p.k))
}

/// Finds an embedded S_{m,k}, scanning edges lexicographically.
pub fn contains_double_star(g: &Graph, p: DoubleStarPattern) -> Option<Witness> {
    if g.vertex_count() < p.vertex_count() {
        return None;
    }
    for x in 0..g.vertex_count() {
        if g.deg(x) <= p.m {
            continue;
        }
        for y in g.neighbors(x) {
            if orientation_feasible(g, x, y, p.m, p.k) {
                return Some(build_witness(g, x, y, p));
            }
        }
    }
    None
}

pub fn is_free(g: &Graph, p: DoubleStarPattern) -> bool {
    contains_double_star(g, p).is_none()
}

/// Leaves are drawn from private neighbourhoods first, then from the common
/// neighbourhood, lowest vertex index first at each step.
fn build_witness(g: &Graph, x: usize, y: usize, p: DoubleStarPattern) -> Witness {
    let in_y = |v: usize| g.has_edge(y, v);
    let in_x = |v: usize| g.has_edge(x, v);
    let private_x: Vec<usize> = g.neighbors(x).filter(|&v| v != y && !in_y(v)).collect();
    let private_y: Vec<usize> = g.neighbors(y).filter(|&v| v != x && !in_x(v)).collect();
    let mut common = g.neighbors(x).filter(|&v| in_y(v)).collect::<Vec<_>>().into_iter();

    let mut leaves_x: Vec<usize> = private_x.into_iter().take(p.m).collect();
    while leaves_x.len() < p.m {
        leaves_x.push(common.next().expect("feasibility guarantees enough leaves"));
    }
    let mut leaves_y: Vec<usize> = private_y.into_iter().take(p.k).collect();
    while leaves_y.len() < p.k {
        leaves_y.push(common.next().expect("feasibility guarantees enough leaves"));
    }
    leaves_x.sort_unstable();
    leaves_y.sort_unstable();
    Witness {
        backbone: (x, y),
        leaves_x,
        leaves_y,
    }
}

/// Containment by exhaustive search over ordered backbones and injective
/// leaf selections. Independent of the counting criterion.
pub fn contains_oracle(g: &Graph, p: DoubleStarPattern) -> bool {
    let n = g.vertex_count();
    for x in 0..n {
        for y in g.neighbors(x) {
            let cand_x: Vec<usize> = g.neighbors(x).filter(|&v| v != y).collect();
            let mut chosen = Vec::with_capacity(p.m);
            if choose_x(g, &cand_x, 0, p, y, x, &mut chosen) {
                return true;
            }
        }
    }
    false
}

fn choose_x(
    g: &Graph,
    cand: &[usize],
    start: usize,
    p: DoubleStarPattern,
    y: usize,
    x: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == p.m {
        let cand_y: Vec<usize> = g
            .neighbors(y)
            .filter(|&v| v != x && !chosen.contains(&v))
            .collect();
        let mut picked = Vec::with_capacity(p.k);
        return choose_y(&cand_y, 0, p.k, &mut picked);
    }
    for i in start..cand.len() {
        chosen.push(cand[i]);
        if choose_x(g, cand, i + 1, p, y, x, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

fn choose_y(cand: &[usize], start: usize, k: usize, picked: &mut Vec<usize>) -> bool {
    if picked.len() == k {
        return true;
    }
    for i in start..cand.len() {
        picked.push(cand[i]);
        if choose_y(cand, i + 1, k, picked) {
            return true;
        }
        picked.pop();
    }
    false
}
