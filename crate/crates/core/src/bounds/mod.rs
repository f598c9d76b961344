//! Known bounds, conjectured values and lower-bound constructions for
//! ex_P(n, S_{m,k}), evaluated in exact integer arithmetic, plus consistency
//! reports against computed values.

mod lemmas;
pub mod sampler;

use std::fmt::{self, Write as _};

use num_rational::Ratio;

use crate::doublestar::DoubleStarPattern;
use crate::error::{Error, Result};

pub use lemmas::{run_suite, LemmaConfig, LemmaOutcome, Suite};

pub type Q = Ratio<i64>;

fn q(n: usize) -> Q {
    Q::from_integer(n as i64)
}

fn frac(num: i64, den: i64) -> Q {
    Q::new(num, den)
}

fn floor_count(x: Q) -> usize {
    x.floor().to_integer().max(0) as usize
}

fn ceil_count(x: Q) -> usize {
    x.ceil().to_integer().max(0) as usize
}

/// Proven bounds for one pattern at one order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub pattern: DoubleStarPattern,
    pub n: usize,
    pub lower: Option<usize>,
    pub upper: Option<usize>,
    /// The formulas as exact rationals, before rounding and clamping.
    pub lower_exact: Option<Q>,
    pub upper_exact: Option<Q>,
    /// Human readable statement of the bound and its range.
    pub source: &'static str,
    /// Whether `n` lies inside the range where the bound is proven.
    pub valid: bool,
    /// Set when a negative lower formula was clamped to 0.
    pub clamped: bool,
}

impl Bounds {
    pub fn brackets(&self, value: usize) -> bool {
        self.lower.is_none_or(|l| l <= value) && self.upper.is_none_or(|u| value <= u)
    }
}

fn pat(m: usize, k: usize) -> DoubleStarPattern {
    DoubleStarPattern::new(m, k).expect("static patterns are valid")
}

/// Patterns with proven bounds.
pub fn supported_patterns() -> [DoubleStarPattern; 6] {
    [pat(2, 2), pat(2, 3), pat(2, 4), pat(2, 5), pat(3, 3), pat(3, 4)]
}

/// The proven bounds for `p` at order `n`. Formulas are evaluated for every
/// `n`; `valid` tells whether they are claimed there.
pub fn theorem_bounds(p: DoubleStarPattern, n: usize) -> Result<Bounds> {
    if n == 0 {
        return Err(Error::OutOfRange("bounds need n >= 1".into()));
    }
    let nq = q(n);
    let (lower_exact, upper_exact, source, min_n) = match (p.m(), p.k()) {
        (2, 2) => {
            let v = nq * 2 - 4;
            (Some(v), Some(v), "ex = 2n-4 for n >= 16", 16)
        }
        (2, 3) => (Some(nq * 2 - 4), Some(nq * 2), "2n-4 <= ex <= 2n for n >= 1", 1),
        (2, 4) => (None, Some(nq * frac(17, 7) - 2), "ex <= 17n/7 - 2 for n >= 12", 12),
        (2, 5) => (None, Some(nq * frac(20, 7)), "ex <= 20n/7 for n >= 1", 1),
        (3, 3) => (
            Some(nq * frac(5, 2) - 5),
            Some(nq * frac(5, 2) - 2),
            "5n/2-5 <= ex <= 5n/2-2 for n >= 3",
            3,
        ),
        (3, 4) => (None, Some(nq * frac(20, 7)), "ex <= 20n/7 for n >= 1", 1),
        (m, k) => return Err(Error::UnsupportedPattern { m, k }),
    };
    let clamped = lower_exact.is_some_and(|l| l < q(0));
    // the (3,3) lower bound comes from a construction with floor(5n/2) - 5
    // edges, so it is rounded down rather than up
    let lower = lower_exact.map(|l| if (p.m(), p.k()) == (3, 3) { floor_count(l) } else { ceil_count(l) });
    Ok(Bounds {
        pattern: p,
        n,
        lower,
        upper: upper_exact.map(floor_count),
        lower_exact,
        upper_exact,
        source,
        valid: n >= min_n,
        clamped,
    })
}

/// Upper bound `2n - 2` on S_{2,2}-free graphs, for every `n != 5`.
pub fn s22_ceiling(n: usize) -> Option<usize> {
    (n != 5).then(|| (2 * n).saturating_sub(2))
}

/// A conjectured value of ex_P(n, p).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conjecture {
    pub value: Q,
    /// `floor(value)`.
    pub count: usize,
    /// The conjecture fixes only the main term; `value` is that term.
    pub asymptotic: bool,
    /// Edge count of the construction backing an asymptotic conjecture.
    pub construction: Option<usize>,
}

impl Conjecture {
    /// Whether `exact` matches the conjecture. Undefined for asymptotic
    /// statements and for non-integral values.
    pub fn matches(&self, exact: usize) -> Option<bool> {
        (!self.asymptotic && self.value.is_integer()).then(|| self.count == exact)
    }
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.asymptotic {
            f.write_char('~')?;
        }
        write!(f, "{}", self.value)
    }
}

/// Edge count of the layered S_{3,5}-free construction on the largest
/// multiple of 3 not above `n`, padded with isolated vertices.
pub fn s35_construction_edges(n: usize) -> Option<usize> {
    let n3 = n / 3 * 3;
    (n3 >= 9).then(|| (2 * n3 - 3) + 6 * (n3 / 9))
}

pub fn conjectured_value(p: DoubleStarPattern, n: usize) -> Option<Conjecture> {
    let nq = q(n);
    let exact = |value: Q| Conjecture {
        value,
        count: floor_count(value),
        asymptotic: false,
        construction: None,
    };
    match (p.m(), p.k()) {
        (2, 4) => Some(exact(nq * frac(15, 7))),
        (3, 3) => {
            let v = match n {
                0..=2 => return None,
                3..=7 => 3 * n - 6,
                8 => 16,
                9 => 18,
                _ => 5 * n / 2 - 5,
            };
            Some(exact(q(v)))
        }
        (3, 4) => Some(exact(nq * frac(5, 2))),
        (3, 5) => {
            let value = nq * frac(8, 3);
            Some(Conjecture {
                value,
                count: floor_count(value),
                asymptotic: true,
                construction: s35_construction_edges(n),
            })
        }
        _ => None,
    }
}

/// Best known feasible edge count for `p` at order `n` among the explicit
/// constructions, padded with isolated vertices where needed.
pub fn best_construction(p: DoubleStarPattern, n: usize) -> Option<(&'static str, usize)> {
    let fits = |m: usize, k: usize| m <= p.m() && k <= p.k();
    let mut best: Option<(&'static str, usize)> = None;
    let mut offer = |name, edges| {
        if best.is_none_or(|(_, e)| edges > e) {
            best = Some((name, edges));
        }
    };
    if n < p.vertex_count() {
        offer("triangulation", if n >= 3 { 3 * n - 6 } else { n * n.saturating_sub(1) / 2 });
    }
    if n >= 4 {
        if fits(2, 2) {
            offer("k2star", 2 * n - 4);
        }
        if fits(3, 3) {
            offer("double-wheel", 5 * n / 2 - 5);
        }
    }
    if fits(2, 4) && n >= 7 {
        offer("tri7", 15 * (n / 7));
    }
    if fits(3, 4) && n >= 12 {
        offer("icosa", 30 * (n / 12));
    }
    if fits(3, 5) {
        if let Some(e) = s35_construction_edges(n) {
            offer("s35", e);
        }
    }
    best
}

/// Comparison of a computed value with everything known about it.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub n: usize,
    pub pattern: DoubleStarPattern,
    pub exact: Option<usize>,
    pub theorem: Option<Bounds>,
    pub s22_ceiling: Option<usize>,
    pub construction: Option<(&'static str, usize)>,
    pub conjecture: Option<Conjecture>,
    pub conjecture_matches: Option<bool>,
    pub consistent: bool,
    pub issues: Vec<String>,
}

pub fn check_consistency(p: DoubleStarPattern, n: usize, exact: Option<usize>) -> Result<BoundReport> {
    if n == 0 {
        return Err(Error::OutOfRange("bounds need n >= 1".into()));
    }
    let theorem = match theorem_bounds(p, n) {
        Ok(b) => Some(b),
        Err(Error::UnsupportedPattern { .. }) => None,
        Err(e) => return Err(e),
    };
    let s22 = if (p.m(), p.k()) == (2, 2) { s22_ceiling(n) } else { None };
    let construction = best_construction(p, n);
    let conjecture = conjectured_value(p, n);
    let mut issues = Vec::new();
    if let Some(e) = exact {
        if let Some(b) = theorem.as_ref().filter(|b| b.valid) {
            if !b.brackets(e) {
                issues.push(format!("exact {e} outside proven range [{}]", range_text(b)));
            }
        }
        if let Some(c) = s22.filter(|&c| e > c) {
            issues.push(format!("exact {e} above 2n-2 = {c}"));
        }
        if let Some((name, c)) = construction.filter(|&(_, c)| c > e) {
            issues.push(format!("construction {name} has {c} edges, above exact {e}"));
        }
        let planar_max = if n >= 3 { 3 * n - 6 } else { n * (n - 1) / 2 };
        if e > planar_max {
            issues.push(format!("exact {e} above the planar maximum {planar_max}"));
        }
    }
    let conjecture_matches = exact.and_then(|e| conjecture.as_ref().and_then(|c| c.matches(e)));
    Ok(BoundReport {
        n,
        pattern: p,
        exact,
        theorem,
        s22_ceiling: s22,
        construction,
        conjecture,
        conjecture_matches,
        consistent: issues.is_empty(),
        issues,
    })
}

fn range_text(b: &Bounds) -> String {
    let side = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
    format!("{}, {}", side(b.lower), side(b.upper))
}

fn opt<T: fmt::Display>(v: Option<T>) -> String {
    v.map_or("-".to_string(), |v| v.to_string())
}

/// Aligned table for people.
pub fn render_table(reports: &[BoundReport]) -> String {
    let header = ["n", "pattern", "exact", "lower", "upper", "valid", "2n-2", "constr", "conj", "match", "ok"];
    let mut rows: Vec<Vec<String>> = vec![header.iter().map(|s| s.to_string()).collect()];
    for r in reports {
        let t = r.theorem.as_ref();
        rows.push(vec![
            r.n.to_string(),
            r.pattern.to_string(),
            opt(r.exact),
            opt(t.and_then(|b| b.lower)),
            opt(t.and_then(|b| b.upper)),
            opt(t.map(|b| if b.valid { "yes" } else { "no" })),
            opt(r.s22_ceiling),
            r.construction.map_or("-".into(), |(name, e)| format!("{e} ({name})")),
            opt(r.conjecture.as_ref()),
            opt(r.conjecture_matches.map(|m| if m { "yes" } else { "no" })),
            if r.consistent { "yes" } else { "NO" }.to_string(),
        ]);
    }
    let widths: Vec<usize> = (0..header.len())
        .map(|c| rows.iter().map(|row| row[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &rows {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(s, &w)| format!("{s:>w$}")).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    for r in reports {
        for issue in &r.issues {
            let _ = writeln!(out, "n={} pattern={}: {issue}", r.n, r.pattern);
        }
    }
    out
}

/// One tab-separated record per report.
pub fn render_records(reports: &[BoundReport]) -> String {
    let mut out = String::from("# n\tpattern\texact\tlower\tupper\tconjecture\tconsistent\n");
    for r in reports {
        let valid = r.theorem.as_ref().filter(|b| b.valid);
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.n,
            r.pattern,
            opt(r.exact),
            opt(valid.and_then(|b| b.lower)),
            opt(valid.and_then(|b| b.upper)),
            opt(r.conjecture.as_ref()),
            r.consistent,
        );
    }
    out
}
