//! Acceptance criteria. Runs as a plain binary under `cargo test` and prints
//! one PASS/FAIL line per criterion; any failure makes the target fail.

use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use num_rational::Ratio;
use planar_turan::bounds::{self, check_consistency, conjectured_value, theorem_bounds, LemmaConfig, Suite};
use planar_turan::constructions::{self, disjoint_copies};
use planar_turan::doublestar::{contains_double_star, contains_oracle, is_free, DoubleStarPattern};
use planar_turan::search::{
    enumerate_hereditary, enumerate_maximal_planar, exact_planar_turan, naive_exact, SearchConfig,
};
use planar_turan::{graph6, is_planar, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn pat(m: usize, k: usize) -> DoubleStarPattern {
    DoubleStarPattern::new(m, k).unwrap()
}

fn exact(n: usize, p: DoubleStarPattern, workers: usize) -> planar_turan::search::ExactResult {
    exact_planar_turan(n, p, &SearchConfig::with_workers(workers)).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_graph(n: usize, rng: &mut impl Rng) -> Graph {
    let density: f64 = rng.random_range(0.15..0.75);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

fn oracle_equivalence() -> Outcome {
    let patterns = [pat(1, 1), pat(1, 2), pat(1, 3), pat(1, 4), pat(2, 2), pat(2, 3)];
    let mut cases = 0;
    for n in 1..=6 {
        for p in patterns {
            let fast = exact(n, p, 1);
            let slow = naive_exact(n, p).unwrap();
            ensure(fast.exact && fast.value == slow, || {
                format!("n={n} pattern={p}: search {} vs naive {slow}", fast.value)
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (n, pattern) cases agree"))
}

fn detection_equivalence() -> Outcome {
    let fitting = |n: usize| {
        let mut out = Vec::new();
        for m in 1..n {
            for k in m..n {
                if m + k + 2 <= n {
                    out.push(pat(m, k));
                }
            }
        }
        out
    };
    let check = |g: &Graph, p: DoubleStarPattern| -> Result<(), String> {
        let fast = contains_double_star(g, p);
        ensure(fast.is_some() == contains_oracle(g, p), || {
            format!("disagreement on {} pattern {p}", graph6::encode(g).unwrap())
        })?;
        if let Some(w) = fast {
            w.check(g, p)?;
        }
        Ok(())
    };
    let mut canonical = 0;
    for n in 1..=6 {
        for g in enumerate_hereditary(n, |_| true).unwrap() {
            for p in fitting(n) {
                check(&g, p)?;
            }
            canonical += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce_0002);
    for _ in 0..10_000 {
        let g = random_graph(8, &mut rng);
        for p in fitting(8) {
            check(&g, p)?;
        }
    }
    Ok(format!("{canonical} canonical graphs n<=6 and 10000 random n=8, zero disagreements"))
}

fn figure_two() -> Outcome {
    let tris = enumerate_maximal_planar(6).unwrap();
    ensure(tris.len() == 2, || format!("{} triangulations on 6 vertices", tris.len()))?;
    let mut deletions = 0;
    for t in &tris {
        for (u, v) in t.edges() {
            let h = t.without_edge(u, v).unwrap();
            let w = contains_double_star(&h, pat(2, 2))
                .ok_or_else(|| format!("{} is S_2,2-free", graph6::encode(&h).unwrap()))?;
            w.check(&h, pat(2, 2))?;
            deletions += 1;
        }
    }
    ensure(deletions == 24, || format!("{deletions} deletions"))?;
    Ok("2 classes, 24 deletions all contain S_2,2".into())
}

fn s22_ceiling() -> Outcome {
    let mut values = Vec::new();
    for n in [3, 4, 6, 7, 8] {
        let r = exact(n, pat(2, 2), 1);
        ensure(r.exact && r.value <= 2 * n - 2, || format!("n={n}: {} > {}", r.value, 2 * n - 2))?;
        values.push(format!("{n}:{}", r.value));
    }
    let five = exact(5, pat(2, 2), 1);
    ensure(five.exact && five.value == 9, || format!("n=5 gives {}", five.value))?;
    let k5e = Graph::complete(5).unwrap().without_edge(0, 1).unwrap();
    ensure(five.extremal.iter().any(|g| planar_turan::canon::is_isomorphic(g, &k5e)), || {
        "K5 minus an edge missing from the n=5 extremal set".into()
    })?;
    Ok(format!("values {} and n=5 -> 9", values.join(" ")))
}

fn construction_certificates() -> Outcome {
    let mut certified = 0;
    for n in 4..=200 {
        let r = constructions::k2_star(n).map_err(|e| e.to_string())?;
        ensure(r.graph.edge_count() == 2 * n - 4, || format!("k2star n={n}"))?;
        let r = constructions::matched_double_wheel(n).map_err(|e| e.to_string())?;
        let want = if n % 2 == 0 { 5 * n / 2 - 5 } else { (5 * n - 11) / 2 };
        ensure(r.graph.edge_count() == want, || format!("double-wheel n={n}"))?;
        certified += 2;
    }
    let tri7 = constructions::seven_vertex_triangulation().map_err(|e| e.to_string())?;
    ensure(tri7.graph.edge_count() == 15, || "tri7 edges".into())?;
    let icosa = constructions::icosahedron().map_err(|e| e.to_string())?;
    ensure(icosa.graph.edge_count() == 30 && icosa.graph.degrees().iter().all(|&d| d == 5), || {
        "icosahedron is not 5-regular with 30 edges".into()
    })?;
    certified += 2;
    let bases = [
        (tri7.graph.clone(), tri7.verified_free_of),
        (icosa.graph.clone(), icosa.verified_free_of),
        (constructions::k2_star(6).unwrap().graph, pat(2, 2)),
        (constructions::matched_double_wheel(9).unwrap().graph, pat(3, 3)),
    ];
    for (base, p) in &bases {
        for copies in 1..=62 / base.vertex_count() {
            let g = disjoint_copies(base, copies).map_err(|e| e.to_string())?;
            ensure(
                g.edge_count() == copies * base.edge_count() && is_planar(&g) && is_free(&g, *p),
                || format!("{copies} copies of a {}-vertex base", base.vertex_count()),
            )?;
            graph6::encode(&g).map_err(|e| e.to_string())?;
            certified += 1;
        }
    }
    for n in (9..=60).step_by(3) {
        let r = constructions::s35_construction(n).map_err(|e| e.to_string())?;
        let g = &r.graph;
        ensure(g.edge_count() == (2 * n - 3) + 6 * (n / 9), || format!("s35 n={n}"))?;
        for (x, y) in g.edges() {
            if g.degree(x).unwrap() == 6 && g.degree(y).unwrap() == 6 {
                ensure(g.triangles_on_edge(x, y).unwrap() >= 3, || format!("s35 n={n}: 6-6 edge {x}-{y}"))?;
            }
        }
        certified += 1;
    }
    Ok(format!("{certified} certified constructions, zero failures"))
}

/// Exact values used by the consistency and determinism checks.
fn computed_values() -> Vec<(DoubleStarPattern, usize, usize)> {
    let mut out = Vec::new();
    for p in bounds::supported_patterns() {
        let top = if matches!((p.m(), p.k()), (2, 2) | (3, 3)) { 9 } else { 8 };
        for n in 1..=top {
            out.push((p, n, exact(n, p, 1).value));
        }
    }
    out
}

fn bound_consistency(values: &[(DoubleStarPattern, usize, usize)]) -> Outcome {
    let mut bracketed = 0;
    for &(p, n, v) in values {
        let r = check_consistency(p, n, Some(v)).map_err(|e| e.to_string())?;
        ensure(r.consistent, || format!("n={n} pattern={p}: {}", r.issues.join("; ")))?;
        if theorem_bounds(p, n).unwrap().valid {
            bracketed += 1;
        }
    }
    for n in 3..=7 {
        let c = conjectured_value(pat(3, 3), n).unwrap();
        let v = values.iter().find(|&&(p, m, _)| p == pat(3, 3) && m == n).unwrap().2;
        ensure(c.count == 3 * n - 6 && v == 3 * n - 6, || {
            format!("(3,3) n={n}: conjecture {} exact {v}", c.count)
        })?;
    }
    Ok(format!(
        "{} exact values consistent, {bracketed} inside a proven range; (3,3) conjecture = 3n-6 = exact for n=3..7",
        values.len()
    ))
}

fn lemma_suites() -> Outcome {
    let cfg = LemmaConfig::default();
    let mut lines = Vec::new();
    for s in Suite::ALL {
        let out = bounds::run_suite(s, &cfg).map_err(|e| e.to_string())?;
        ensure(out.passed, || out.to_string())?;
        lines.push(format!("{}:{}", s, out.premise_hits));
    }
    Ok(format!(
        "7 suites, exhaustive n<=7 plus {} samples n<=20; premise hits {}",
        cfg.samples,
        lines.join(" ")
    ))
}

fn desk_scale_substitute(values: &[(DoubleStarPattern, usize, usize)]) -> Outcome {
    // Exactness of 2n-4 for S_2,2 at n >= 16 and tightness of the asymptotic
    // upper bounds are out of reach; check the constructions meet the
    // formulas they are meant to realise at every generated order.
    for n in 16..=200 {
        let b = theorem_bounds(pat(2, 2), n).unwrap();
        let e = constructions::k2_star(n).unwrap().graph.edge_count();
        ensure(b.lower == Some(e), || format!("k2star n={n}"))?;
    }
    for n in 4..=200 {
        let e = constructions::matched_double_wheel(n).unwrap().graph.edge_count();
        ensure(theorem_bounds(pat(3, 3), n).unwrap().lower == Some(e), || format!("double-wheel n={n}"))?;
        if n >= 10 {
            ensure(conjectured_value(pat(3, 3), n).unwrap().count == e, || format!("double-wheel n={n} vs conjecture"))?;
        }
    }
    let tri7 = constructions::seven_vertex_triangulation().unwrap().graph;
    for c in 1..=8 {
        let e = disjoint_copies(&tri7, c).unwrap().edge_count();
        let conj = conjectured_value(pat(2, 4), 7 * c).unwrap();
        ensure(conj.value == Ratio::from_integer(e as i64), || format!("tri7 x{c}"))?;
    }
    let icosa = constructions::icosahedron().unwrap().graph;
    for c in 1..=5 {
        let e = disjoint_copies(&icosa, c).unwrap().edge_count();
        let conj = conjectured_value(pat(3, 4), 12 * c).unwrap();
        ensure(conj.value == Ratio::from_integer(e as i64), || format!("icosa x{c}"))?;
    }
    let mut gaps = std::collections::BTreeSet::new();
    for n in (9..=60).step_by(3) {
        let e = constructions::s35_construction(n).unwrap().graph.edge_count();
        let conj = conjectured_value(pat(3, 5), n).unwrap();
        let gap = conj.value - Ratio::from_integer(e as i64);
        ensure(conj.construction == Some(e), || format!("s35 n={n} construction count"))?;
        ensure(gap >= Ratio::from_integer(0) && gap <= Ratio::from_integer(7), || format!("s35 n={n} gap {gap}"))?;
        gaps.insert(gap.to_integer());
    }
    for &(p, n, v) in values {
        if let Some((name, e)) = bounds::best_construction(p, n) {
            ensure(e <= v, || format!("{name} beats exact at n={n} {p}"))?;
        }
    }
    let gaps: Vec<String> = gaps.iter().map(|g| g.to_string()).collect();
    Ok(format!(
        "not reproducible at desk scale: 2n-4 exactness for S_2,2 at n>=16 and tightness of the asymptotic upper bounds; \
         substitute: constructions meet 2n-4, the (3,3) lower bound and conjecture, 15n/7, 5n/2 exactly; s35 gap to 8n/3 in {{{}}}",
        gaps.join(",")
    ))
}

fn determinism() -> Outcome {
    let cases = [(8, pat(2, 2)), (8, pat(3, 3)), (8, pat(2, 4)), (7, pat(1, 2)), (8, pat(2, 5))];
    for (n, p) in cases {
        let runs: Vec<_> = [1, 4, 8].iter().map(|&w| exact(n, p, w)).collect();
        for r in &runs[1..] {
            ensure(r.value == runs[0].value && r.extremal_classes == runs[0].extremal_classes, || {
                format!("n={n} {p}: workers disagree")
            })?;
            ensure(r.extremal == runs[0].extremal, || format!("n={n} {p}: extremal sets differ"))?;
        }
    }

    let bin = env!("CARGO_BIN_EXE_planar-turan");
    let mut input = String::new();
    for n in 3..=8 {
        for t in enumerate_maximal_planar(n).unwrap() {
            input.push_str(&graph6::encode(&t).unwrap());
            input.push('\n');
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce_0009);
    for _ in 0..200 {
        input.push_str(&graph6::encode(&random_graph(9, &mut rng)).unwrap());
        input.push('\n');
    }
    input.push_str("not graph6\n");
    let run = |args: &[&str]| -> Result<Vec<u8>, String> {
        let mut child = Command::new(bin)
            .args(args)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::null())
            .spawn()
            .map_err(|e| e.to_string())?;
        child.stdin.take().unwrap().write_all(input.as_bytes()).map_err(|e| e.to_string())?;
        Ok(child.wait_with_output().map_err(|e| e.to_string())?.stdout)
    };
    let first = run(&["verify", "--pattern", "2,3", "--require-planar"])?;
    for i in 1..10 {
        ensure(run(&["verify", "--pattern", "2,3", "--require-planar"])? == first, || format!("verify run {i} differs"))?;
    }
    let lines = first.iter().filter(|&&b| b == b'\n').count();
    let exact_line = |threads: &str| -> Result<String, String> {
        let out = run(&["exact", "--n", "7", "--pattern", "2,2", "--threads", threads])?;
        Ok(String::from_utf8_lossy(&out).into_owned())
    };
    let base = exact_line("1")?;
    for t in ["4", "8"] {
        ensure(exact_line(t)? == base, || format!("exact output differs with {t} threads"))?;
    }
    Ok(format!(
        "{} cases equal across workers 1/4/8; 10 verify runs byte-identical ({lines} lines); exact output identical across threads",
        cases.len()
    ))
}

fn main() {
    // `cargo test -- --list` and filters are not meaningful here
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return;
    }
    let mut failures = 0;
    let mut record = |id: usize, name: &str, limit: Duration, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let result = result.and_then(|detail| {
            if elapsed > limit {
                Err(format!("took {elapsed:.1?}, limit {limit:?} ({detail})"))
            } else {
                Ok(detail)
            }
        });
        match &result {
            Ok(detail) => println!("criterion {id} PASS {name} [{elapsed:.2?}]: {detail}"),
            Err(why) => {
                failures += 1;
                println!("criterion {id} FAIL {name} [{elapsed:.2?}]: {why}");
            }
        }
    };
    let minute = Duration::from_secs(60);
    record(1, "oracle equivalence", 5 * minute, &mut oracle_equivalence);
    record(2, "detection equivalence", 30 * minute, &mut detection_equivalence);
    record(3, "triangulations on 6 vertices", minute, &mut figure_two);
    record(4, "S_2,2 ceiling 2n-2", 10 * minute, &mut s22_ceiling);
    record(5, "construction certificates", minute, &mut construction_certificates);
    let mut values = Vec::new();
    record(6, "bound consistency", 30 * minute, &mut || {
        values = computed_values();
        bound_consistency(&values)
    });
    record(7, "lemma suites", 30 * minute, &mut lemma_suites);
    record(8, "desk-scale substitute", 30 * minute, &mut || desk_scale_substitute(&values));
    record(9, "determinism", 30 * minute, &mut determinism);
    println!("acceptance: {} of 9 criteria passed", 9 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
