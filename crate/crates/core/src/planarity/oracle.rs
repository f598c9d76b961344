//! Exhaustive Kuratowski subdivision search, used to cross-check the main
//! tester on small graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const ORACLE_MAX_VERTICES: usize = 9;

/// Planarity by exhaustive search for a subdivided K5 or K3,3.
pub fn is_planar_oracle(g: &Graph) -> Result<bool> {
    let n = g.vertex_count();
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::OutOfRange(format!(
            "planarity oracle handles at most {ORACLE_MAX_VERTICES} vertices, got {n}"
        )));
    }
    Ok(!has_k5_subdivision(g) && !has_k33_subdivision(g))
}

fn has_k5_subdivision(g: &Graph) -> bool {
    let branch: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.deg(v) >= 4).collect();
    subsets(&branch, 5).into_iter().any(|b| {
        let mut pairs = Vec::with_capacity(10);
        for i in 0..5 {
            for j in i + 1..5 {
                pairs.push((b[i], b[j]));
            }
        }
        let used = b.iter().fold(0u64, |acc, &v| acc | 1 << v);
        route(g, &pairs, used)
    })
}

fn has_k33_subdivision(g: &Graph) -> bool {
    let branch: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.deg(v) >= 3).collect();
    subsets(&branch, 6).into_iter().any(|b| {
        let used = b.iter().fold(0u64, |acc, &v| acc | 1 << v);
        // b[0] always sits on the first side
        subsets(&b[1..], 2).into_iter().any(|rest| {
            let side: Vec<usize> = std::iter::once(b[0]).chain(rest).collect();
            let other: Vec<usize> = b.iter().copied().filter(|v| !side.contains(v)).collect();
            let pairs: Vec<(usize, usize)> = side
                .iter()
                .flat_map(|&x| other.iter().map(move |&y| (x, y)))
                .collect();
            route(g, &pairs, used)
        })
    })
}

/// Whether every pair can be joined by a path whose interior avoids `used`
/// and the interiors of all other paths.
fn route(g: &Graph, pairs: &[(usize, usize)], used: u64) -> bool {
    let Some(&(a, b)) = pairs.first() else {
        return true;
    };
    extend(g, pairs, used, a, b, 0)
}

fn extend(g: &Graph, pairs: &[(usize, usize)], used: u64, at: usize, goal: usize, interior: u64) -> bool {
    if g.has_edge(at, goal) && route(g, &pairs[1..], used | interior) {
        return true;
    }
    for next in g.neighbors(at) {
        let bit = 1u64 << next;
        if next == goal || used & bit != 0 || interior & bit != 0 {
            continue;
        }
        if extend(g, pairs, used, next, goal, interior | bit) {
            return true;
        }
    }
    false
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    collect(items, k, 0, &mut current, &mut out);
    out
}

fn collect(items: &[usize], k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if current.len() == k {
        out.push(current.clone());
        return;
    }
    for i in start..items.len() {
        if items.len() - i < k - current.len() {
            break;
        }
        current.push(items[i]);
        collect(items, k, i + 1, current, out);
        current.pop();
    }
}
