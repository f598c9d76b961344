//! Heuristic sampler of pattern-free planar graphs. Not uniform: it builds a
//! random triangulation by stacking vertices into faces and flipping edges,
//! then deletes random edges of detected double stars until none is left, and
//! finally re-inserts random non-edges while the graph stays planar and free.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::doublestar::{contains_double_star, is_free, DoubleStarPattern};
use crate::graph::Graph;
use crate::planarity::is_planar;

/// Independent generator for sample `index` under `seed`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// A random triangulation on `n >= 3` vertices.
pub fn random_triangulation(n: usize, rng: &mut impl Rng) -> Graph {
    assert!(n >= 3, "triangulations need at least 3 vertices");
    let mut g = Graph::empty(n).expect("valid order");
    g.insert(0, 1);
    g.insert(1, 2);
    g.insert(0, 2);
    // both sides of the initial triangle are faces
    let mut faces = vec![[0, 1, 2], [0, 2, 1]];
    for v in 3..n {
        let i = rng.random_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        for u in [a, b, c] {
            g.insert(u, v);
        }
        faces.extend([[a, b, v], [b, c, v], [c, a, v]]);
    }
    for _ in 0..4 * n {
        flip_random_edge(&mut g, &mut faces, rng);
    }
    g
}

/// Replaces the diagonal `xy` of the quadrilateral formed by the two faces on
/// it with the other diagonal, when that keeps the graph simple.
fn flip_random_edge(g: &mut Graph, faces: &mut [[usize; 3]], rng: &mut impl Rng) {
    let f = rng.random_range(0..faces.len());
    let side = rng.random_range(0..3);
    let face = faces[f];
    let (x, y, a) = (face[side], face[(side + 1) % 3], face[(side + 2) % 3]);
    // the face across xy traverses it as y -> x
    let Some(h) = faces.iter().position(|t| (0..3).any(|i| t[i] == y && t[(i + 1) % 3] == x)) else {
        return;
    };
    let other = faces[h];
    let b = other.iter().copied().find(|&v| v != x && v != y).expect("face has a third vertex");
    if a == b || g.has_edge(a, b) || g.deg(x) <= 3 || g.deg(y) <= 3 {
        return;
    }
    g.remove(x, y);
    g.insert(a, b);
    faces[f] = [x, b, a];
    faces[h] = [y, a, b];
}

/// A random planar graph on `n` vertices free of `p`.
pub fn random_free_planar(n: usize, p: DoubleStarPattern, rng: &mut impl Rng) -> Graph {
    let mut g = if n >= 3 {
        random_triangulation(n, rng)
    } else {
        Graph::complete(n.max(1)).expect("valid order")
    };
    while let Some(w) = contains_double_star(&g, p) {
        let (x, y) = w.backbone;
        let mut star_edges = vec![(x, y)];
        star_edges.extend(w.leaves_x.iter().map(|&l| (x, l)));
        star_edges.extend(w.leaves_y.iter().map(|&l| (y, l)));
        let &(u, v) = star_edges.choose(rng).expect("witness has edges");
        g.remove(u, v);
    }
    let mut missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    missing.shuffle(rng);
    for (u, v) in missing {
        g.insert(u, v);
        if !is_free(&g, p) || !is_planar(&g) {
            g.remove(u, v);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangulations_are_maximal_planar() {
        for i in 0..200 {
            let mut rng = sample_rng(7, i);
            let n = 3 + (i as usize % 18);
            let g = random_triangulation(n, &mut rng);
            assert!(g.is_well_formed());
            assert_eq!(g.edge_count(), 3 * n - 6);
            assert!(is_planar(&g), "{g:?}");
        }
    }

    #[test]
    fn samples_are_free_and_reproducible() {
        let p = DoubleStarPattern::new(3, 3).unwrap();
        for i in 0..100 {
            let g = random_free_planar(15, p, &mut sample_rng(1, i));
            assert!(is_free(&g, p) && is_planar(&g));
            // maximal: no further edge can be inserted
            for u in 0..15 {
                for v in u + 1..15 {
                    if !g.has_edge(u, v) {
                        let h = g.with_edge(u, v).unwrap();
                        assert!(!is_free(&h, p) || !is_planar(&h));
                    }
                }
            }
            assert_eq!(g, random_free_planar(15, p, &mut sample_rng(1, i)));
        }
    }

    #[test]
    fn flips_change_the_stacked_structure() {
        // stacking alone always leaves the last vertex with degree 3
        let found = (0..200).any(|i| random_triangulation(12, &mut sample_rng(3, i)).min_degree() >= 4);
        assert!(found);
    }
}
