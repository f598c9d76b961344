//! Structural predicates checked against exhaustive small graphs, explicit
//! constructions and random pattern-free samples.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::sampler::{random_free_planar, sample_rng};
use super::s22_ceiling;
use crate::constructions::{self, Family};
use crate::doublestar::{contains_double_star, is_free, DoubleStarPattern};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::planarity::is_planar;
use crate::search::{enumerate_hereditary, enumerate_maximal_planar, exact_planar_turan, SearchConfig};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Suite {
    /// ex_P(n, S_{2,2}) <= 2n - 2 for n in {3, 4, 6, 7, 8}.
    S22Lemma21,
    /// Two triangulations on 6 vertices; every single-edge deletion still
    /// contains S_{2,2}.
    S22Fig2,
    /// S_{3,3}-free: no edge joins degrees >= 7 and >= 4.
    S33Deg7,
    /// S_{3,3}-free: every 6-6 edge has exactly 5 common neighbours.
    S33Edge66,
    /// S_{3,3}-free: every 5-5 edge lies in at least 3 triangles.
    S33Edge55,
    /// S_{3,4}-free: no edge joins degrees >= 8 and >= 4.
    S34Deg8,
    /// S_{3,4}-free: every 7-7 edge has exactly 6 common neighbours.
    S34Edge77,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::S22Lemma21,
        Suite::S22Fig2,
        Suite::S33Deg7,
        Suite::S33Edge66,
        Suite::S33Edge55,
        Suite::S34Deg8,
        Suite::S34Edge77,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::S22Lemma21 => "s22-lemma21",
            Suite::S22Fig2 => "s22-fig2",
            Suite::S33Deg7 => "s33-deg7",
            Suite::S33Edge66 => "s33-66edge",
            Suite::S33Edge55 => "s33-55edge",
            Suite::S34Deg8 => "s34-deg8",
            Suite::S34Edge77 => "s34-77edge",
        }
    }

    /// Parses a suite name, or `all`.
    pub fn parse_many(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        Ok(vec![s.parse()?])
    }

    fn edge_predicate(&self) -> Option<(DoubleStarPattern, EdgeCheck)> {
        let p = |m, k| DoubleStarPattern::new(m, k).expect("static patterns are valid");
        let check: EdgeCheck = match self {
            Suite::S33Deg7 => |_, _, dx, dy| (dx.max(dy) >= 7 && dx.min(dy) >= 4).then_some(false),
            Suite::S33Edge66 => |g, (x, y), dx, dy| (dx == 6 && dy == 6).then(|| g.common_neighbors(x, y) == 5),
            Suite::S33Edge55 => |g, (x, y), dx, dy| (dx == 5 && dy == 5).then(|| g.common_neighbors(x, y) >= 3),
            Suite::S34Deg8 => |_, _, dx, dy| (dx.max(dy) >= 8 && dx.min(dy) >= 4).then_some(false),
            Suite::S34Edge77 => |g, (x, y), dx, dy| (dx == 7 && dy == 7).then(|| g.common_neighbors(x, y) == 6),
            Suite::S22Lemma21 | Suite::S22Fig2 => return None,
        };
        let pattern = match self {
            Suite::S34Deg8 | Suite::S34Edge77 => p(3, 4),
            _ => p(3, 3),
        };
        Some((pattern, check))
    }
}

/// Returns `None` when the edge does not meet the premise, otherwise whether
/// the conclusion holds.
type EdgeCheck = fn(&Graph, (usize, usize), usize, usize) -> Option<bool>;

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
            Error::OutOfRange(format!("unknown suite {s:?}; expected all or one of {}", names.join(", ")))
        })
    }
}

#[derive(Clone, Debug)]
pub struct LemmaConfig {
    /// Number of random pattern-free samples.
    pub samples: usize,
    pub seed: u64,
    /// Exhaustive enumeration covers every order up to this one.
    pub exhaustive_upto: usize,
    /// Random samples use orders `exhaustive_upto + 1 ..= sample_max_n`.
    pub sample_max_n: usize,
}

impl Default for LemmaConfig {
    fn default() -> Self {
        LemmaConfig {
            samples: 1000,
            seed: 0,
            exhaustive_upto: 7,
            sample_max_n: 20,
        }
    }
}

#[derive(Clone, Debug)]
pub struct LemmaOutcome {
    pub suite: Suite,
    pub passed: bool,
    pub graphs_checked: usize,
    /// Number of times the predicate's premise occurred (edges, values or
    /// deletions actually tested).
    pub premise_hits: usize,
    /// First failing graph, as graph6.
    pub counterexample: Option<String>,
    pub detail: String,
}

impl fmt::Display for LemmaOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} graphs={} hits={}",
            self.suite,
            if self.passed { "PASS" } else { "FAIL" },
            self.graphs_checked,
            self.premise_hits
        )?;
        if !self.detail.is_empty() {
            write!(f, " {}", self.detail)?;
        }
        if let Some(c) = &self.counterexample {
            write!(f, " counterexample={c}")?;
        }
        Ok(())
    }
}

fn encode(g: &Graph) -> String {
    graph6::encode(g).unwrap_or_else(|e| format!("<{e}>"))
}

pub fn run_suite(suite: Suite, cfg: &LemmaConfig) -> Result<LemmaOutcome> {
    match suite {
        Suite::S22Lemma21 => s22_ceiling_suite(),
        Suite::S22Fig2 => s22_triangulation_suite(),
        _ => {
            let (pattern, check) = suite.edge_predicate().expect("edge suites have predicates");
            edge_suite(suite, pattern, check, cfg)
        }
    }
}

fn s22_ceiling_suite() -> Result<LemmaOutcome> {
    let p = DoubleStarPattern::new(2, 2)?;
    let cfg = SearchConfig {
        extremal_cap: 1,
        ..SearchConfig::default()
    };
    let mut values = Vec::new();
    let mut counterexample = None;
    for n in [3, 4, 6, 7, 8] {
        let r = exact_planar_turan(n, p, &cfg)?;
        let ceiling = s22_ceiling(n).expect("n != 5");
        values.push(format!("{n}:{}", r.value));
        if (!r.exact || r.value > ceiling) && counterexample.is_none() {
            counterexample = Some(r.extremal.first().map_or_else(|| format!("n={n}"), encode));
        }
    }
    Ok(LemmaOutcome {
        suite: Suite::S22Lemma21,
        passed: counterexample.is_none(),
        graphs_checked: values.len(),
        premise_hits: values.len(),
        counterexample,
        detail: format!("values={}", values.join(",")),
    })
}

fn s22_triangulation_suite() -> Result<LemmaOutcome> {
    let p = DoubleStarPattern::new(2, 2)?;
    let tris = enumerate_maximal_planar(6)?;
    let mut deletions = 0;
    let mut counterexample = None;
    for t in &tris {
        for (u, v) in t.edges() {
            let h = t.without_edge(u, v)?;
            deletions += 1;
            let ok = contains_double_star(&h, p).is_some_and(|w| w.check(&h, p).is_ok());
            if !ok && counterexample.is_none() {
                counterexample = Some(encode(&h));
            }
        }
    }
    let passed = tris.len() == 2 && deletions == 24 && counterexample.is_none();
    Ok(LemmaOutcome {
        suite: Suite::S22Fig2,
        passed,
        graphs_checked: tris.len(),
        premise_hits: deletions,
        counterexample,
        detail: format!("classes={} deletions={deletions}", tris.len()),
    })
}

/// `(premise hits, first violation)` for one graph.
fn check_edges(g: &Graph, check: EdgeCheck) -> (usize, bool) {
    let mut hits = 0;
    for (x, y) in g.edges() {
        if let Some(ok) = check(g, (x, y), g.deg(x), g.deg(y)) {
            hits += 1;
            if !ok {
                return (hits, false);
            }
        }
    }
    (hits, true)
}

fn edge_suite(suite: Suite, p: DoubleStarPattern, check: EdgeCheck, cfg: &LemmaConfig) -> Result<LemmaOutcome> {
    let mut pool: Vec<Graph> = Vec::new();
    for n in 1..=cfg.exhaustive_upto {
        pool.extend(enumerate_hereditary(n, |g| is_free(g, p) && is_planar(g))?);
    }
    for family in Family::ALL {
        let fp = family.pattern();
        if fp.m() > p.m() || fp.k() > p.k() {
            continue;
        }
        match family.fixed_order() {
            Some(_) => pool.push(constructions::build(family, None, 1)?.graph),
            None => {
                for n in 4..=cfg.sample_max_n.max(4) {
                    if let Ok(r) = constructions::build(family, Some(n), 1) {
                        pool.push(r.graph);
                    }
                }
            }
        }
    }

    let lo = cfg.exhaustive_upto + 1;
    let span = cfg.sample_max_n.saturating_sub(lo) + 1;
    let sampled: Vec<Graph> = (0..cfg.samples as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = sample_rng(cfg.seed, i);
            random_free_planar(lo + (i as usize % span), p, &mut rng)
        })
        .collect();

    let mut hits = 0;
    let mut counterexample = None;
    let total = pool.len() + sampled.len();
    for g in pool.iter().chain(&sampled) {
        let (h, ok) = check_edges(g, check);
        hits += h;
        if !ok {
            counterexample = Some(encode(g));
            break;
        }
    }
    Ok(LemmaOutcome {
        suite,
        passed: counterexample.is_none(),
        graphs_checked: total,
        premise_hits: hits,
        counterexample,
        detail: format!("exhaustive<={} samples={} seed={}", cfg.exhaustive_upto, cfg.samples, cfg.seed),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!(Suite::parse_many("all").unwrap().len(), 7);
        assert!("s99".parse::<Suite>().is_err());
    }

    #[test]
    fn triangulation_suite_counts() {
        let out = run_suite(Suite::S22Fig2, &LemmaConfig::default()).unwrap();
        assert!(out.passed, "{out}");
        assert_eq!((out.graphs_checked, out.premise_hits), (2, 24));
    }

    #[test]
    fn double_wheel_passes_degree_predicate() {
        let g = constructions::matched_double_wheel(20).unwrap().graph;
        assert_eq!((g.deg(0), g.deg(2)), (18, 3));
        let (_, check) = Suite::S33Deg7.edge_predicate().unwrap();
        assert_eq!(check_edges(&g, check), (0, true));
    }

    fn backbone_with(x_side: &[usize], y_side: &[usize]) -> Graph {
        let mut edges = vec![(0, 1)];
        edges.extend(x_side.iter().map(|&v| (0, v)));
        edges.extend(y_side.iter().map(|&v| (1, v)));
        Graph::from_edge_list(12, &edges).unwrap()
    }

    #[test]
    fn predicates_detect_violations() {
        let (_, c66) = Suite::S33Edge66.edge_predicate().unwrap();
        assert_eq!(check_edges(&backbone_with(&[2, 3, 4, 5, 6], &[2, 3, 4, 5, 6]), c66), (1, true));
        assert_eq!(check_edges(&backbone_with(&[2, 3, 4, 5, 7], &[2, 3, 4, 5, 8]), c66), (1, false));

        let (_, c55) = Suite::S33Edge55.edge_predicate().unwrap();
        assert_eq!(check_edges(&backbone_with(&[2, 3, 4, 5], &[2, 3, 4, 6]), c55), (1, true));
        assert_eq!(check_edges(&backbone_with(&[2, 3, 4, 5], &[2, 3, 6, 7]), c55), (1, false));

        let (_, c77) = Suite::S34Edge77.edge_predicate().unwrap();
        assert_eq!(check_edges(&backbone_with(&[2, 3, 4, 5, 6, 7], &[2, 3, 4, 5, 6, 8]), c77), (1, false));

        let (_, deg8) = Suite::S34Deg8.edge_predicate().unwrap();
        let g = backbone_with(&[2, 3, 4, 5, 6, 7, 8], &[9, 10, 11]);
        assert_eq!(check_edges(&g, deg8), (1, false));
        let (_, deg7) = Suite::S33Deg7.edge_predicate().unwrap();
        assert_eq!(check_edges(&g, deg7), (1, false));
    }

    #[test]
    fn small_edge_suite_runs() {
        let cfg = LemmaConfig {
            samples: 50,
            exhaustive_upto: 5,
            ..LemmaConfig::default()
        };
        for s in [Suite::S33Edge55, Suite::S34Edge77] {
            let out = run_suite(s, &cfg).unwrap();
            assert!(out.passed, "{out}");
            assert!(out.graphs_checked > 50);
        }
    }
}
