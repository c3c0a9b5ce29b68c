//! One line per acceptance criterion; exits non-zero if any fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::path::PathBuf;
use std::time::{Duration, Instant};

use cosgraph::cosgraph_core::graph::automorphism_group;
use cosgraph::cosgraph_core::BigCount;
use cosgraph::exit;
use serde_json::Value;

fn workspace(rel: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..");
    root.join(rel).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> (i32, Value) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv: Vec<&str> = ["cosgraph", "--json"].into_iter().chain(args.iter().copied()).collect();
    let code = cosgraph::run(argv, &mut out, &mut err);
    let value = serde_json::from_slice(&out).unwrap_or(Value::Null);
    (code, value)
}

fn passed(code: i32, v: &Value) -> bool {
    code == exit::PASS
        && v["overall"] == "pass"
        && v["checks"]
            .as_array()
            .is_some_and(|c| c.iter().all(|c| c["pass"] == true))
}

type Outcome = Result<String, String>;

fn within(budget: Duration, start: Instant, detail: String) -> Outcome {
    let spent = start.elapsed();
    if spent <= budget {
        Ok(format!("{detail} ({} ms)", spent.as_millis()))
    } else {
        Err(format!(
            "{detail}, but took {} ms against {} ms",
            spent.as_millis(),
            budget.as_millis()
        ))
    }
}

fn example(name: &str, budget: Duration) -> Outcome {
    let start = Instant::now();
    let (code, v) = run(&["verify-example", name]);
    let clauses = v["checks"].as_array().map_or(0, |c| {
        c.iter()
            .filter(|c| {
                c["name"]
                    .as_str()
                    .is_some_and(|n| n.as_bytes()[0].is_ascii_digit() && !n.starts_with('0') && !n.starts_with('8'))
            })
            .count()
    });
    if !passed(code, &v) || clauses != 7 {
        return Err(format!("{name}: exit {code}, {clauses} clauses, report {v}"));
    }
    within(budget, start, format!("{name}: all 7 clauses pass"))
}

fn criterion_1() -> Outcome {
    example("a39", Duration::from_secs(5))
}

fn criterion_2() -> Outcome {
    let a = example("a117", Duration::from_secs(60))?;
    let b = example("a208", Duration::from_secs(60))?;
    Ok(format!("{a}; {b}"))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let (code, v) = run(&["check-stab-table"]);
    if !passed(code, &v) {
        return Err(format!("exit {code}"));
    }
    within(
        Duration::from_secs(1),
        start,
        format!("{} checks pass", v["checks"].as_array().unwrap().len()),
    )
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let (code, v) = run(&["check-table1"]);
    if !passed(code, &v) {
        return Err(format!("exit {code}"));
    }
    let names: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter_map(|c| c["name"].as_str())
        .collect();
    for row in [
        "(A_13, S_11, 78)",
        "(PSL(2,13), D_14, 78)",
        "(PSU(3,4), A_5×Z_5, 208)",
        "(PSL(4,53), PSp(4,3):2, 117)",
        "every |Ω| divides 1872",
    ] {
        if !names.iter().any(|n| n.contains(row)) {
            return Err(format!("row {row} missing"));
        }
    }
    within(
        Duration::from_secs(1),
        start,
        format!(
            "{} rows exact, every |Ω| divides 1872",
            names.iter().filter(|n| n.starts_with("Table 1 (")).count()
        ),
    )
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let (code, v) = run(&["search", &workspace("specs/petersen.spec")]);
    let r = &v["results"];
    let ok = passed(code, &v)
        && r["witnesses"].as_u64().is_some_and(|w| w > 0)
        && r["first_witness_vertices"] == 10
        && r["first_witness_girth"] == 5
        && r["first_witness_aut_order"] == "120"
        && r["first_witness_arc_transitive"] == true;
    let (code, coset) = run(&["coset", &workspace("specs/petersen.spec")]);
    let ok = ok && passed(code, &coset) && coset["results"]["valency"] == 3;
    if !ok {
        return Err(format!("search results {r}"));
    }
    within(
        Duration::from_secs(5),
        start,
        format!(
            "{} witnesses; 10 vertices, valency 3, girth 5, |Aut| = 120, arc-transitive",
            r["witnesses"]
        ),
    )
}

fn criterion_6() -> Outcome {
    let mut r = common::rng(21);
    let (mut connected, mut extracted) = (0, 0);
    let total = 60;
    for i in 0..total {
        let spec = common::random_coset_spec(&mut r);
        let out = common::coset_equivalences(&spec, &mut r).map_err(|e| format!("spec {i}: {e}"))?;
        connected += out.connected as usize;
        extracted += out.extracted as usize;
    }
    if connected == 0 || connected == total || extracted == 0 {
        return Err(format!(
            "degenerate sample: {connected} connected, {extracted} extractions"
        ));
    }
    Ok(format!(
        "{total} specs, 0 counterexamples ({connected} connected, {} disconnected, {extracted} Cayley extractions)",
        total - connected
    ))
}

fn criterion_7() -> Outcome {
    let instances = common::quotient_instances();
    if instances.len() < 20 {
        return Err(format!("only {} instances", instances.len()));
    }
    if !instances
        .iter()
        .any(|i| i.label.starts_with("Q3, full") && i.n.order() == BigCount::from(2u32))
    {
        return Err("cube / antipodal missing".into());
    }
    for inst in &instances {
        if !common::quotient_hypotheses(inst) {
            return Err(format!("{}: hypotheses fail", inst.label));
        }
        common::quotient_conclusions(inst)?;
    }
    Ok(format!(
        "{} instances including cube/antipodal, 0 counterexamples",
        instances.len()
    ))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    for (spec, n, s, normal) in [
        ("specs/z5_cycle.spec", 5, vec![1, 4], true),
        ("specs/z4_complete.spec", 4, vec![1, 2, 3], false),
    ] {
        let (code, v) = run(&["cayley", &workspace(spec)]);
        let (brute_order, brute_normal) = common::brute_circulant_normality(n, &s);
        if !passed(code, &v)
            || v["results"]["normal"] != normal
            || brute_normal != normal
            || v["results"]["aut_order"].as_str() != Some(brute_order.to_string().as_str())
        {
            return Err(format!(
                "{spec}: {}, brute force |Aut| = {brute_order}, normal {brute_normal}",
                v["results"]
            ));
        }
    }
    within(
        Duration::from_secs(1),
        start,
        "Cay(Z_5, {±1}) normal, Cay(Z_4, {1,2,3}) non-normal, both match brute force".into(),
    )
}

fn criterion_9() -> Outcome {
    let mut r = common::rng(9);
    for i in 0..100 {
        let (g, n) = common::random_group(&mut r, 2000);
        if g.order() != BigCount::from(n) {
            return Err(format!("group {i}: chain {} vs closure {n}", g.order()));
        }
    }
    let corpus = common::graph_corpus();
    for (i, graph) in corpus.iter().enumerate() {
        let aut = automorphism_group(graph, 512).map_err(|e| e.to_string())?;
        let brute = common::brute_aut_count(graph);
        if aut.order() != BigCount::from(brute) {
            return Err(format!("graph {i}: backtracking {} vs filter {brute}", aut.order()));
        }
    }
    Ok(format!(
        "100 groups match closure counts, {} graphs match n!-filter counts",
        corpus.len()
    ))
}

fn criterion_10() -> Outcome {
    let cases = [
        ("search", "specs/a104_search.spec"),
        ("search", "specs/a624_search.spec"),
        ("coset", "specs/a39_coset.spec"),
    ];
    for (cmd, spec) in cases {
        let (code, v) = run(&[cmd, &workspace(spec)]);
        if code != exit::CAP_EXCEEDED {
            return Err(format!("{cmd} {spec}: exit {code}, {v}"));
        }
    }
    Ok("(A_104, F_52×Z_2), (A_624, F_156×Z_4) and the A_39 coset graph all exit 3".into())
}

fn main() {
    let criteria: [(u32, fn() -> Outcome); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut failures = 0;
    for (n, check) in criteria {
        match check() {
            Ok(detail) => println!("criterion {n:>2}: PASS  {detail}"),
            Err(detail) => {
                failures += 1;
                println!("criterion {n:>2}: FAIL  {detail}");
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
