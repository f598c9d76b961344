//! Explicit lower-bound constructions. Every builder runs the planarity tester
//! and the double star detector on its output and fails loudly if either
//! check, or the predicted edge count, does not hold.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::doublestar::{is_free, DoubleStarPattern};
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::planarity::is_planar;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    /// K_{2,n-2}, free of S_{2,2}.
    K2Star,
    /// Two non-adjacent hubs joined to a maximum matching, free of S_{3,3}.
    MatchedDoubleWheel,
    /// Octahedron with one stacked face, free of S_{2,4}.
    SevenVertexTriangulation,
    /// The 5-regular triangulation on 12 vertices, free of S_{3,4}.
    Icosahedron,
    /// Layered triangles with periodic diagonals, free of S_{3,5}.
    S35,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::K2Star,
        Family::MatchedDoubleWheel,
        Family::SevenVertexTriangulation,
        Family::Icosahedron,
        Family::S35,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::K2Star => "k2star",
            Family::MatchedDoubleWheel => "double-wheel",
            Family::SevenVertexTriangulation => "tri7",
            Family::Icosahedron => "icosa",
            Family::S35 => "s35",
        }
    }

    /// Pattern the family avoids.
    pub fn pattern(&self) -> DoubleStarPattern {
        let (m, k) = match self {
            Family::K2Star => (2, 2),
            Family::MatchedDoubleWheel => (3, 3),
            Family::SevenVertexTriangulation => (2, 4),
            Family::Icosahedron => (3, 4),
            Family::S35 => (3, 5),
        };
        DoubleStarPattern::new(m, k).expect("static patterns are valid")
    }

    /// Whether the family has a fixed vertex count.
    pub fn fixed_order(&self) -> Option<usize> {
        match self {
            Family::SevenVertexTriangulation => Some(7),
            Family::Icosahedron => Some(12),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
                Error::OutOfRange(format!("unknown family {s:?}; expected one of {}", names.join(", ")))
            })
    }
}

/// A certified construction.
#[derive(Clone, Debug)]
pub struct ConstructionReport {
    pub family: Family,
    /// Number of disjoint copies of the base construction.
    pub copies: usize,
    pub graph: Graph,
    pub predicted_edges: usize,
    pub verified_planar: bool,
    pub verified_free_of: DoubleStarPattern,
    /// Degree -> number of vertices with that degree.
    pub degree_profile: BTreeMap<usize, usize>,
}

fn certify(family: Family, copies: usize, graph: Graph, predicted_edges: usize) -> Result<ConstructionReport> {
    let fail = |reason: String| Error::Verification {
        family: family.name().to_string(),
        reason,
    };
    let actual = graph.edge_count();
    if actual != predicted_edges {
        return Err(fail(format!("expected {predicted_edges} edges, built {actual}")));
    }
    if !is_planar(&graph) {
        return Err(fail("graph is not planar".into()));
    }
    let pattern = family.pattern();
    if !is_free(&graph, pattern) {
        return Err(fail(format!("graph contains S_{{{pattern}}}")));
    }
    let mut degree_profile = BTreeMap::new();
    for d in graph.degrees() {
        *degree_profile.entry(d).or_insert(0) += 1;
    }
    Ok(ConstructionReport {
        family,
        copies,
        graph,
        predicted_edges,
        verified_planar: true,
        verified_free_of: pattern,
        degree_profile,
    })
}

fn require_at_least(n: usize, min: usize, what: &str) -> Result<()> {
    if n < min {
        return Err(Error::OutOfRange(format!("{what} needs n >= {min}, got {n}")));
    }
    Ok(())
}

/// K_{2,n-2} with hubs 0 and 1.
pub fn k2_star(n: usize) -> Result<ConstructionReport> {
    require_at_least(n, 4, "k2star")?;
    let g = Graph::complete_bipartite(2, n - 2)?;
    certify(Family::K2Star, 1, g, 2 * n - 4)
}

/// Hubs 0 and 1 adjacent to every other vertex; the others carry the
/// matching `2-3, 4-5, ...`, leaving `n-1` unmatched when `n` is odd.
pub fn matched_double_wheel(n: usize) -> Result<ConstructionReport> {
    require_at_least(n, 4, "double-wheel")?;
    let mut g = Graph::complete_bipartite(2, n - 2)?;
    for v in (2..n - 1).step_by(2) {
        g.insert(v, v + 1);
    }
    let predicted = if n % 2 == 0 { 5 * n / 2 - 5 } else { (5 * n - 11) / 2 };
    certify(Family::MatchedDoubleWheel, 1, g, predicted)
}

/// Octahedron on `0..6` (opposite pairs 0-1, 2-3, 4-5) plus vertex 6 stacked
/// into the face 0-2-4.
pub fn seven_vertex_triangulation() -> Result<ConstructionReport> {
    let mut edges = Vec::new();
    for u in 0..6 {
        for v in u + 1..6 {
            if !(u % 2 == 0 && v == u + 1) {
                edges.push((u, v));
            }
        }
    }
    edges.extend([(6, 0), (6, 2), (6, 4)]);
    let g = Graph::from_edge_list(7, &edges)?;
    certify(Family::SevenVertexTriangulation, 1, g, 15)
}

/// Icosahedron: apex 0, upper ring 1..=5, lower ring 6..=10, apex 11.
pub fn icosahedron() -> Result<ConstructionReport> {
    let mut edges = Vec::new();
    for i in 0..5 {
        let up = 1 + i;
        let up_next = 1 + (i + 1) % 5;
        let low = 6 + i;
        let low_next = 6 + (i + 1) % 5;
        edges.extend([(0, up), (up, up_next), (up, low), (up, low_next), (low, low_next), (low, 11)]);
    }
    let g = Graph::from_edge_list(12, &edges)?;
    certify(Family::Icosahedron, 1, g, 30)
}

/// `copies` disjoint copies of `base`, copy `c` on vertices `c*n..(c+1)*n`.
pub fn disjoint_copies(base: &Graph, copies: usize) -> Result<Graph> {
    if copies == 0 {
        return Err(Error::OutOfRange("need at least one copy".into()));
    }
    let n = base.vertex_count();
    if copies.checked_mul(n).is_none_or(|total| total > MAX_VERTICES) {
        return Err(Error::UnsupportedSize(format!(
            "{copies} copies of a {n}-vertex graph exceed {MAX_VERTICES} vertices"
        )));
    }
    let mut g = Graph::empty(n * copies)?;
    for c in 0..copies {
        for (u, v) in base.edges() {
            g.insert(c * n + u, c * n + v);
        }
    }
    Ok(g)
}

/// Disjoint copies of a certified construction, re-certified.
pub fn copies_of(report: &ConstructionReport, copies: usize) -> Result<ConstructionReport> {
    let g = disjoint_copies(&report.graph, copies)?;
    certify(report.family, report.copies * copies, g, report.predicted_edges * copies)
}

/// Vertex index of layer `i` (1-based) and role `r` (a=0, b=1, c=2).
#[inline]
fn layered(i: usize, r: usize) -> usize {
    3 * (i - 1) + r
}

/// Concentric triangles `{a_i, b_i, c_i}`, each role joined along the layers
/// into a path, plus for every `j` divisible by 3 the six diagonals
/// `a_j b_{j-1}, a_{j-1} b_{j-2}, b_j c_{j-1}, b_{j-1} c_{j-2}, c_j a_{j-1},
/// c_{j-1} a_{j-2}`. Layer `i` role `r` is vertex `3(i-1) + r`.
pub fn s35_construction(n: usize) -> Result<ConstructionReport> {
    if n < 9 || n % 3 != 0 {
        return Err(Error::OutOfRange(format!(
            "s35 needs n >= 9 divisible by 3, got {n}"
        )));
    }
    let layers = n / 3;
    let mut g = Graph::empty(n)?;
    for i in 1..=layers {
        g.insert(layered(i, 0), layered(i, 1));
        g.insert(layered(i, 1), layered(i, 2));
        g.insert(layered(i, 2), layered(i, 0));
        if i < layers {
            for r in 0..3 {
                g.insert(layered(i, r), layered(i + 1, r));
            }
        }
    }
    let (a, b, c) = (0, 1, 2);
    for j in (3..=layers).step_by(3) {
        for (hi, lo) in [(a, b), (b, c), (c, a)] {
            g.insert(layered(j, hi), layered(j - 1, lo));
            g.insert(layered(j - 1, hi), layered(j - 2, lo));
        }
    }
    let predicted = (2 * n - 3) + 6 * (n / 9);
    certify(Family::S35, 1, g, predicted)
}

/// Builds a family member by name-level parameters, as the CLI does.
/// `n` is ignored for fixed-order families, whose size is set by `copies`.
pub fn build(family: Family, n: Option<usize>, copies: usize) -> Result<ConstructionReport> {
    let need_n = || n.ok_or_else(|| Error::OutOfRange(format!("family {family} needs --n")));
    let base = match family {
        Family::K2Star => k2_star(need_n()?)?,
        Family::MatchedDoubleWheel => matched_double_wheel(need_n()?)?,
        Family::S35 => s35_construction(need_n()?)?,
        Family::SevenVertexTriangulation => seven_vertex_triangulation()?,
        Family::Icosahedron => icosahedron()?,
    };
    if copies == 1 {
        Ok(base)
    } else {
        copies_of(&base, copies)
    }
}
