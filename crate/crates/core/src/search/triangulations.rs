//! Triangulations (maximal planar graphs) by inverse edge contraction.
//!
//! Every triangulation on at least five vertices has an edge lying in exactly
//! two triangles whose contraction leaves a triangulation, so all classes on
//! `n` vertices arise from those on `n - 1` by splitting a vertex `v` into
//! `v` and a new vertex `w` that share exactly two neighbours.

use std::collections::BTreeMap;

use crate::canon::{canonical_form, canonical_graph};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::planarity::is_planar;

pub const TRIANGULATION_MAX_VERTICES: usize = 10;

/// All triangulations on `n` vertices up to isomorphism, canonically
/// labelled and sorted by canonical form.
pub fn enumerate_maximal_planar(n: usize) -> Result<Vec<Graph>> {
    if !(3..=TRIANGULATION_MAX_VERTICES).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "triangulation enumeration supports 3 <= n <= {TRIANGULATION_MAX_VERTICES}, got {n}"
        )));
    }
    if n == 3 {
        return Ok(vec![Graph::complete(3)?]);
    }
    let mut level = vec![Graph::complete(4)?];
    for _ in 5..=n {
        let mut next: BTreeMap<_, Graph> = BTreeMap::new();
        for t in &level {
            for g in splits(t)? {
                if is_planar(&g) {
                    next.entry(canonical_form(&g)).or_insert_with(|| canonical_graph(&g));
                }
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

/// Every graph obtained from `t` by splitting one vertex, with the new
/// vertex `w = n` adjacent to `v`, to both shared neighbours, and to the
/// neighbours moved away from `v`.
fn splits(t: &Graph) -> Result<Vec<Graph>> {
    let n = t.vertex_count();
    let w = n;
    let base = t.with_isolated(1)?;
    let mut out = Vec::new();
    for v in 0..n {
        let nbrs: Vec<usize> = t.neighbors(v).collect();
        let d = nbrs.len();
        for i in 0..d {
            for j in i + 1..d {
                let rest: Vec<usize> = (0..d).filter(|&x| x != i && x != j).collect();
                for moved in 0u32..1 << rest.len() {
                    let mut g = base.clone();
                    g.insert(v, w);
                    g.insert(w, nbrs[i]);
                    g.insert(w, nbrs[j]);
                    for (bit, &r) in rest.iter().enumerate() {
                        if moved >> bit & 1 == 1 {
                            g.remove(v, nbrs[r]);
                            g.insert(w, nbrs[r]);
                        }
                    }
                    out.push(g);
                }
            }
        }
    }
    Ok(out)
}
