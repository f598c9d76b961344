//! Ground-truth maximum by scanning every labelled graph, using only the
//! exhaustive oracles for planarity and containment.

use crate::doublestar::{contains_oracle, DoubleStarPattern};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::planarity::is_planar_oracle;

pub const NAIVE_MAX_VERTICES: usize = 6;

/// Scans labelled graphs from the densest edge count downwards and returns
/// the first count at which some graph is planar and pattern-free.
pub fn naive_exact(n: usize, p: DoubleStarPattern) -> Result<usize> {
    if n == 0 || n > NAIVE_MAX_VERTICES {
        return Err(Error::OutOfRange(format!(
            "naive search handles 1 <= n <= {NAIVE_MAX_VERTICES}, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let slots = pairs.len();
    for edges in (0..=slots).rev() {
        for mask in masks_with_popcount(slots, edges) {
            let chosen: Vec<_> = (0..slots).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            let g = Graph::from_edge_list(n, &chosen)?;
            if !contains_oracle(&g, p) && is_planar_oracle(&g)? {
                return Ok(edges);
            }
        }
    }
    unreachable!("the edgeless graph is always feasible")
}

/// All `width`-bit masks with exactly `ones` bits set, in increasing order.
fn masks_with_popcount(width: usize, ones: usize) -> Vec<u32> {
    if ones == 0 {
        return vec![0];
    }
    let limit = 1u32 << width;
    let mut out = Vec::new();
    let mut mask = (1u32 << ones) - 1;
    while mask < limit {
        out.push(mask);
        // next permutation of bits
        let low = mask & mask.wrapping_neg();
        let ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
    out
}
