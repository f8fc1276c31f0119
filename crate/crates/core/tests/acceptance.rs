//! Acceptance criteria 1 to 9. Prints one `[PASS]` / `[FAIL]` line per
//! criterion and exits nonzero if any fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::{brute_force_aut_order, named, random_connected, random_cubic_c5_free, reference_graph6};
use linesym_core::graph6::{emit_graph6, parse_graph6};
use linesym_core::metrics::{diameter, girth};
use linesym_core::symmetry::{is_s_arc_transitive, is_s_geodesic_transitive};
use linesym_core::verify::{
    check_diameter_lemma, check_line_equivalence, check_lmap_theorem, check_weiss_flag, equivalence_sides, Corpus,
    Subject, Verdict,
};
use linesym_core::walks::image_equals_geodesics;
use linesym_core::{automorphisms, clique_graph, isomorphic, line_graph, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cubic_fixtures() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    [8, 8, 10, 10, 12, 12, 14, 14]
        .iter()
        .enumerate()
        .map(|(i, &n)| random_cubic_c5_free(&mut rng, n).with_name(format!("random_cubic_{n}_{i}")))
        .collect()
}

/// Default catalog corpus plus the random cubic fixtures.
fn corpus_graphs() -> Vec<Graph> {
    let mut graphs: Vec<Graph> = Corpus::default_catalog().entries.into_iter().map(|e| e.graph).collect();
    graphs.extend(cubic_fixtures());
    graphs
}

fn ac1_line_equivalence() -> Outcome {
    let mut graphs: Vec<Graph> =
        ["petersen", "heawood", "tutte_8_cage", "k33", "cube"].iter().map(|n| named(n)).collect();
    graphs.extend(cubic_fixtures());
    let mut cases = 0;
    for g in &graphs {
        let subject = Subject::new(g);
        let max = subject.max_s().unwrap();
        for s in 2..=max {
            let r = check_line_equivalence(&subject, s);
            ensure(r.verdict == Verdict::Pass, || format!("{} s={s}: {:?} lhs={} rhs={}", r.graph, r.verdict, r.lhs, r.rhs))?;
            cases += 1;
        }
    }
    // K4 is complete, so the check gates it out; compare the raw sides.
    let k4 = Subject::new(&named("complete(4)"));
    for s in 2..=k4.max_s().unwrap() {
        let sides = equivalence_sides(&k4, s).map_err(|e| e.to_string())?;
        ensure(sides.lhs == sides.rhs(), || format!("complete(4) s={s}: {sides:?}"))?;
        cases += 1;
    }
    Ok(format!("{cases} (graph, s) cases, 0 failures"))
}

fn ac2_arc_transitivity() -> Outcome {
    for (name, s) in [("petersen", 3), ("heawood", 4), ("tutte_8_cage", 5)] {
        let g = named(name);
        let aut = automorphisms(&g);
        let yes = is_s_arc_transitive(&g, s, &aut).map_err(|e| e.to_string())?;
        let no = is_s_arc_transitive(&g, s + 1, &aut).map_err(|e| e.to_string())?;
        ensure(yes && !no, || format!("{name}: {s}-arc {yes}, {}-arc {no}", s + 1))?;
    }
    Ok("petersen 3/4, heawood 4/5, tutte_8_cage 5/6 as expected".into())
}

fn ac3_line_geodesic_transitivity() -> Outcome {
    for (name, s, diam) in [("line(petersen)", 3, 3), ("line(heawood)", 3, 3), ("line(tutte_8_cage)", 4, 4)] {
        let g = named(name);
        ensure(diameter(&g) == Some(diam), || format!("{name}: diameter {:?}", diameter(&g)))?;
        let t = is_s_geodesic_transitive(&g, s, &automorphisms(&g)).map_err(|e| e.to_string())?;
        ensure(t, || format!("{name} not {s}-geodesic transitive"))?;
    }
    let lk4 = line_graph(&named("complete(4)")).unwrap().graph;
    let oct = named("complete_multipartite(3,2)");
    ensure(isomorphic(&lk4, &oct).is_some(), || "line(complete(4)) not isomorphic to the octahedron".into())?;
    for g in [oct, named("icosahedron")] {
        let t = is_s_geodesic_transitive(&g, 2, &automorphisms(&g)).map_err(|e| e.to_string())?;
        ensure(t, || format!("{} not 2-geodesic transitive", g.name().unwrap()))?;
    }
    Ok("line graphs of petersen/heawood/tutte_8_cage, octahedron, icosahedron".into())
}

fn ac4_diameter_shift() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut graphs: Vec<Graph> = (0..1000)
        .map(|_| {
            let n = rng.random_range(4..=10);
            let p = rng.random_range(0.0..0.6);
            random_connected(&mut rng, n, p)
        })
        .collect();
    graphs.extend(corpus_graphs());
    let mut checked = 0;
    for g in &graphs {
        let r = check_diameter_lemma(g);
        match r.verdict {
            Verdict::Pass => checked += 1,
            Verdict::NotApplicable { .. } => {}
            Verdict::Fail => return Err(format!("{}: {:?}", r.graph6, r.details)),
        }
        if r.verdict == Verdict::Pass {
            ensure(r.details["delta_in_range"] == true, || format!("{}: subdivision offset {}", r.graph6, r.details["delta"]))?;
        }
    }
    for (n, x) in [(2, -1), (3, 0), (4, 1)] {
        let r = check_diameter_lemma(&named(&format!("complete({n})")));
        ensure(r.details["x"] == x, || format!("complete({n}): x = {}", r.details["x"]))?;
    }
    Ok(format!("{checked} graphs, 0 violations; K2/K3/K4 give x = -1/0/+1"))
}

fn ac5_lmap_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut image_cases = 0;
    let mut image_equal = 0;
    for i in 0..200 {
        let n = rng.random_range(4..=12);
        // alternate sparse and dense graphs so both girth regimes occur
        let p = if i % 2 == 0 { rng.random_range(0.0..0.15) } else { rng.random_range(0.15..0.6) };
        let g = random_connected(&mut rng, n, p);
        let subject = Subject::new(&g);
        for s in [2, 3, 4] {
            let r = check_lmap_theorem(&subject, s);
            match &r.verdict {
                Verdict::Pass => {}
                Verdict::NotApplicable { .. } => continue,
                Verdict::Fail => return Err(format!("{} s={s}: {}", r.graph6, r.witness.clone().unwrap())),
            }
            for key in ["injective", "image_in_line_arcs", "equivariant"] {
                ensure(r.lhs[key] == true, || format!("{} s={s}: {key} missing", r.graph6))?;
            }
            ensure(r.details["equivariance_pairs"].as_u64().unwrap() >= 50, || "too few equivariance pairs".into())?;
            if let Some(v) = r.lhs.get("image_equals_line_geodesics") {
                image_cases += 1;
                let by_girth = girth(&g).is_none_or(|x| x + 2 >= 2 * s);
                let direct = image_equals_geodesics(&g, s).map_err(|e| e.to_string())?.equal;
                ensure(*v == by_girth && direct == by_girth, || format!("{} s={s}: image {v}, direct {direct}, girth {:?}", r.graph6, girth(&g)))?;
                image_equal += direct as usize;
            }
        }
    }
    ensure(image_equal > 0 && image_equal < image_cases, || "only one side of the girth criterion exercised".into())?;
    Ok(format!("200 graphs; image criterion on {image_cases} cases ({image_equal} equal)"))
}

fn ac6_aut_orders() -> Outcome {
    for (name, order) in [
        ("petersen", 120u64),
        ("heawood", 336),
        ("complete(4)", 24),
        ("k33", 72),
        ("icosahedron", 120),
        ("tutte_8_cage", 1440),
    ] {
        let g = named(name);
        let oracle = brute_force_aut_order(&g);
        let found = automorphisms(&g).order_u64();
        ensure(oracle == order && found == Some(order), || format!("{name}: oracle {oracle}, search {found:?}"))?;
    }
    let mut compared = 0;
    for g in corpus_graphs() {
        if g.order() < 5 || !g.is_connected() {
            continue;
        }
        let l = line_graph(&g).unwrap().graph;
        let (a, b) = (automorphisms(&g), automorphisms(&l));
        ensure(a.order() == b.order(), || format!("{}: {} vs {}", g.name().unwrap(), a.order(), b.order()))?;
        compared += 1;
    }
    Ok(format!("six named orders match the oracle; {compared} graph/line-graph pairs agree"))
}

fn ac7_clique_graphs() -> Outcome {
    let mut compared = 0;
    for g in corpus_graphs() {
        if !g.is_connected() || g.size() == 0 || girth(&g).is_some_and(|x| x < 4) {
            continue;
        }
        let c = clique_graph(&g).unwrap().graph;
        let l = line_graph(&g).unwrap().graph;
        ensure(isomorphic(&c, &l).is_some(), || format!("{}: clique graph differs from line graph", g.name().unwrap()))?;
        compared += 1;
    }
    let back = clique_graph(&named("line(petersen)")).unwrap().graph;
    ensure(isomorphic(&back, &named("petersen")).is_some(), || "clique(line(petersen)) is not petersen".into())?;
    Ok(format!("{compared} girth ≥ 4 graphs; petersen recovered from its line graph"))
}

fn ac8_graph6() -> Outcome {
    let mut exhaustive = 0;
    for n in 1..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            let g = Graph::new(n, edges).unwrap();
            let bytes = emit_graph6(&g);
            ensure(bytes == reference_graph6(&g).as_bytes(), || format!("encoding mismatch for n={n} mask={mask}"))?;
            ensure(parse_graph6(&bytes).as_ref() == Ok(&g), || format!("round trip failed for n={n} mask={mask}"))?;
            exhaustive += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..10_000 {
        let n = rng.random_range(1..=12);
        let p = rng.random_range(0.0..1.0);
        let g = common::random_graph(&mut rng, n, p);
        let bytes = emit_graph6(&g);
        ensure(parse_graph6(&bytes).as_ref() == Ok(&g), || format!("round trip failed: {}", String::from_utf8_lossy(&bytes)))?;
    }
    Ok(format!("{exhaustive} labeled graphs with n ≤ 5 and 10000 random graphs"))
}

fn ac9_weiss() -> Outcome {
    let mut flagged = 0;
    let mut eight = 0;
    for g in corpus_graphs() {
        let subject = Subject::new(&g);
        if let Some(max) = subject.max_s() {
            for s in 2..=max {
                let r = check_weiss_flag(&subject, s);
                match r.verdict {
                    Verdict::Pass => {
                        ensure((2..=7).contains(&s), || format!("{} s={s} outside 2..=7", r.graph))?;
                        flagged += 1;
                    }
                    Verdict::Fail => return Err(format!("{} s={s}: {:?}", r.graph, r.witness)),
                    Verdict::NotApplicable { .. } => {}
                }
            }
        }
        if g.is_connected() && g.is_regular().is_some_and(|k| k >= 3) {
            let t = is_s_arc_transitive(&g, 8, &subject.group).map_err(|e| e.to_string())?;
            ensure(!t, || format!("{} is 8-arc transitive", g.name().unwrap()))?;
            eight += 1;
        }
    }
    Ok(format!("{flagged} geodesic-transitive cases all have 2 ≤ s ≤ 7; {eight} graphs not 8-arc transitive"))
}

type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("AC1", "line equivalence on the named and random cubic graphs", ac1_line_equivalence),
        ("AC2", "named arc-transitivity levels", ac2_arc_transitivity),
        ("AC3", "line-graph geodesic transitivity", ac3_line_geodesic_transitivity),
        ("AC4", "diameter shift", ac4_diameter_shift),
        ("AC5", "edge-sequence map properties", ac5_lmap_properties),
        ("AC6", "automorphism group orders", ac6_aut_orders),
        ("AC7", "clique graph identity", ac7_clique_graphs),
        ("AC8", "graph6 round trip", ac8_graph6),
        ("AC9", "arc-length dichotomy", ac9_weiss),
    ];
    let mut failed = 0;
    for (id, title, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("[PASS] {id} {title}: {msg} ({secs:.2}s)"),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] {id} {title}: {msg} ({secs:.2}s)");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
