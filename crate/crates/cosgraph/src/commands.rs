use std::path::Path;

use cosgraph_core::catalog::{self, Check, ExampleId};
use cosgraph_core::construct::{
    cayley_graph, coset_graph, feasibility_check, induced_action, normal_quotient, normality_test, scan_candidates,
    two_element_candidates, ConnectionSet, CosetGraphSpec,
};
use cosgraph_core::graph::{automorphism_group, transitivity_tests, Valency};
use cosgraph_core::perm::format_cycles;
use cosgraph_core::{BigCount, Error, GeneratedGroup, SimpleGraph};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::bundled;
use crate::error::{CliError, Result};
use crate::format::{parse_edge_list, Directive, GeneratorFile};
use crate::report::VerificationReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub enumeration: u64,
    pub max_index: u64,
    pub vertices: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enumeration: cosgraph_core::group::DEFAULT_ENUMERATION_CAP,
            max_index: 1_000_000,
            vertices: cosgraph_core::graph::DEFAULT_VERTEX_CAP,
        }
    }
}

impl Caps {
    fn enumeration(&self) -> BigCount {
        BigCount::from(self.enumeration)
    }
}

const ARTIFACT: &str = "artifact";

fn valency_value(g: &SimpleGraph) -> Value {
    match g.valency() {
        Valency::Regular(k) => json!(k),
        Valency::Nonregular => json!("nonregular"),
    }
}

fn valency_text(v: Valency) -> String {
    match v {
        Valency::Regular(k) => format!("regular of valency {k}"),
        Valency::Nonregular => "nonregular".into(),
    }
}

fn big(c: &BigCount) -> Value {
    Value::String(c.to_string())
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

pub fn verify_example(id: ExampleId, caps: &Caps) -> Result<VerificationReport> {
    let entry = id.entry();
    let mut report = VerificationReport::new(format!("verify-example {}", id.name()));
    let (pinned, actual) = bundled::digests(id);
    report.push(Check::new(
        format!("0. {} matches its pinned digest", bundled::file_name(id)),
        entry.paper_anchor,
        pinned.clone().unwrap_or_else(|| "a manifest entry".into()),
        actual.clone(),
        pinned.as_deref() == Some(actual.as_str()),
    ));
    let gens = bundled::load_example(id)?;
    report.extend(catalog::verify_example(entry, &gens, &caps.enumeration())?);
    report.result("degree", entry.degree);
    report.result("h_structure", entry.h_structure);
    report.result("g_order", big(&gens.g.order()));
    if let Some(p) = &gens.g_printed {
        report.result("g_printed_order", big(&p.order()));
    }
    Ok(report)
}

/// All examples, run independently; checks sorted by name.
pub fn verify_all(caps: &Caps) -> Result<VerificationReport> {
    let parts: Vec<Result<VerificationReport>> =
        ExampleId::ALL.par_iter().map(|&id| verify_example(id, caps)).collect();
    let mut report = VerificationReport::new("verify-example all");
    for (id, part) in ExampleId::ALL.iter().zip(parts) {
        report.merge(id.name(), part?);
    }
    report.sort_checks();
    Ok(report)
}

pub fn check_stab_table() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("check-stab-table");
    report.extend(catalog::check_stabilizer_table()?);
    report.result("rows", catalog::STAB_TABLE.len());
    report.result(
        "insoluble_stabilizers",
        Value::Array(catalog::INSOLUBLE_STABILIZERS.iter().map(|s| json!(s)).collect()),
    );
    Ok(report)
}

pub fn check_table1() -> Result<VerificationReport> {
    let mut report = VerificationReport::new("check-table1");
    report.extend(catalog::check_table1()?);
    report.result("rows", catalog::TABLE1.len());
    report.result(
        "computable_rows",
        catalog::TABLE1.iter().filter(|r| r.computable()).count(),
    );
    report.result("nonnormal_candidates", json!(catalog::NONNORMAL_CANDIDATES));
    report.result("undecided", json!(catalog::UNDECIDED));
    Ok(report)
}

fn coset_spec(file: &GeneratorFile) -> Result<Option<CosetGraphSpec>> {
    let Some((g, h, e)) = file.find(|d| match d {
        Directive::Coset { g, h, element } => Some((g.clone(), h.clone(), element.clone())),
        _ => None,
    }) else {
        return Ok(None);
    };
    Ok(Some(CosetGraphSpec::new(
        file.generated(&g)?.clone(),
        file.generated(&h)?.clone(),
        file.permutation(&e)?.clone(),
    )?))
}

fn missing(directive: &str) -> CliError {
    CliError::Input(format!("no `{directive}` directive in the file"))
}

pub fn coset(file: &GeneratorFile, caps: &Caps) -> Result<VerificationReport> {
    let spec = coset_spec(file)?.ok_or_else(|| missing("coset"))?;
    let cap = caps.enumeration();
    let mut report = VerificationReport::new("coset");
    let feas = feasibility_check(&spec, &cap)?;
    let cg = coset_graph(&spec, caps.max_index, &cap)?;
    let graph = &cg.graph;
    report.result("vertices", graph.vertex_count());
    report.result("edges", graph.edge_count());
    report.result("valency", valency_value(graph));
    report.result("connected", graph.is_connected());
    report.result("girth", graph.girth().map_or(Value::Null, |g| json!(g)));
    report.result("feasible", feas.feasible);
    report.result("g", format_cycles(spec.element()));

    report.push(Check::new(
        "valency = |H : H ∩ H^g|",
        "Lemma 2.1(1)",
        format!("regular of valency {}", feas.valency),
        valency_text(graph.valency()),
        graph.valency() == Valency::Regular(feas.valency),
    ));
    report.push(Check::new(
        "connected iff ⟨H, g⟩ = G",
        "Lemma 2.1(2)",
        format!("connected = {}", feas.generates),
        format!("connected = {}", graph.is_connected()),
        graph.is_connected() == feas.generates,
    ));
    if graph.edge_count() > 0 {
        let action = cg.cosets.as_group()?;
        let arcs = transitivity_tests(graph, &action, 1)?;
        report.push(Check::new(
            "G arc-transitive on Cos(G, H, g)",
            "Lemma 2.1",
            "one orbit on arcs",
            format!("{} orbit(s) on {} arcs", arcs.orbit_count, arcs.arc_count),
            arcs.transitive,
        ));
    }
    if graph.vertex_count() <= caps.vertices {
        let aut = automorphism_group(graph, caps.vertices)?;
        report.result("aut_order", big(&aut.order()));
    }
    Ok(report)
}

pub fn cayley(file: &GeneratorFile, caps: &Caps) -> Result<VerificationReport> {
    let (r_name, s_names) = file
        .find(|d| match d {
            Directive::Cayley { r, s } => Some((r.clone(), s.clone())),
            _ => None,
        })
        .ok_or_else(|| missing("cayley"))?;
    let r = file.generated(&r_name)?;
    let s = ConnectionSet::new(
        file.degree,
        s_names
            .iter()
            .map(|n| file.permutation(n).cloned())
            .collect::<Result<Vec<_>>>()?,
    )?;
    let cap = caps.enumeration();
    let mut report = VerificationReport::new("cayley");
    let normality = normality_test(r, &s, caps.vertices)?;
    let cay = cayley_graph(r, &s, &cap)?;
    report.result("vertices", cay.graph.vertex_count());
    report.result("valency", valency_value(&cay.graph));
    report.result("connected", normality.connected);
    report.result("normal", normality.normal);
    report.result("aut_order", big(&normality.aut_order));

    let regular = cay.right_regular(r)?;
    let automorphisms = regular.generators().iter().all(|p| cay.graph.is_automorphism(p));
    report.push(Check::new(
        "R acts regularly by automorphisms",
        ARTIFACT,
        "regular, all generators automorphisms",
        format!("regular: {}, automorphisms: {automorphisms}", regular.is_regular()),
        regular.is_regular() && automorphisms,
    ));
    report.push(Check::new(
        "valency = |S|",
        ARTIFACT,
        format!("regular of valency {}", s.len()),
        valency_text(cay.graph.valency()),
        cay.graph.valency() == Valency::Regular(s.len()),
    ));

    if let Some(spec) = coset_spec(file)? {
        let check = match cosgraph_core::construct::connection_set(r, &spec, caps.max_index, &cap) {
            Ok(s_coset) => {
                let extracted = cayley_graph(r, &s_coset, &cap)?;
                let cg = coset_graph(&spec, caps.max_index, &cap)?;
                let relabel = extracted
                    .elements
                    .iter()
                    .map(|x| cg.cosets.coset_of(x).ok_or(Error::NotMember))
                    .collect::<std::result::Result<Vec<_>, _>>()?;
                let same = extracted.graph.relabel(&relabel)? == cg.graph;
                report.result("coset_connection_set_size", s_coset.len());
                report.result("coset_connection_set_matches", s_coset == s);
                Check::new(
                    "Cos(G, H, g) ≅ Cay(R, R ∩ HgH)",
                    "Lemma 2.1(3)",
                    "identical adjacency after relabeling r ↦ Hr",
                    format!("identical: {same}"),
                    same,
                )
            }
            Err(Error::NotRegular) => Check::new(
                "Cos(G, H, g) ≅ Cay(R, R ∩ HgH)",
                "Lemma 2.1(3)",
                "R regular on [G : H]",
                "R is not regular on the cosets",
                false,
            ),
            Err(e) => return Err(e.into()),
        };
        report.push(check);
    }
    Ok(report)
}

pub fn quotient(file: &GeneratorFile, base: &Path, caps: &Caps) -> Result<VerificationReport> {
    let (graph_name, x_name, n_name) = file
        .find(|d| match d {
            Directive::Quotient { graph, x, n } => Some((graph.clone(), x.clone(), n.clone())),
            _ => None,
        })
        .ok_or_else(|| missing("quotient"))?;
    let path = base.join(&file.graphs[&graph_name]);
    let text = std::fs::read_to_string(&path).map_err(|source| CliError::Io { path, source })?;
    let graph = parse_edge_list(&text)?;
    if graph.vertex_count() > caps.vertices {
        return Err(Error::CapExceeded {
            what: "graph vertex count",
            size: graph.vertex_count().into(),
            cap: caps.vertices.into(),
        }
        .into());
    }
    let (x, n) = (file.generated(&x_name)?, file.generated(&n_name)?);
    let q = normal_quotient(&graph, x, n)?;
    let mut report = VerificationReport::new("quotient");
    report.result("orbits", q.orbit_count);
    report.result("quotient_edges", q.quotient.edge_count());
    report.result("quotient_valency", valency_value(&q.quotient));
    report.result("semiregular", q.semiregular);

    let p = match graph.valency() {
        Valency::Regular(k) => k,
        Valency::Nonregular => 0,
    };
    let arc_transitive = graph.edge_count() > 0 && transitivity_tests(&graph, x, 1)?.transitive;
    let hypotheses = is_prime(p) && p > 2 && arc_transitive && graph.is_connected() && q.orbit_count > 2;
    report.result("lemma_hypotheses", hypotheses);
    if hypotheses {
        const ANCHOR: &str = "Lemma 2.2";
        report.push(Check::new(
            format!("Γ_N has valency {p}"),
            ANCHOR,
            format!("regular of valency {p}"),
            valency_text(q.quotient.valency()),
            q.valency_preserved,
        ));
        report.push(Check::new(
            "N semiregular",
            ANCHOR,
            "all point stabilizers trivial",
            format!("semiregular: {}", q.semiregular),
            q.semiregular,
        ));
        let induced = induced_action(x, &q)?;
        let arcs = transitivity_tests(&q.quotient, &induced, 1)?;
        report.push(Check::new(
            "X/N arc-transitive on Γ_N",
            ANCHOR,
            "one orbit on arcs",
            format!("{} orbit(s)", arcs.orbit_count),
            arcs.transitive,
        ));
        let xv = x.order() / BigCount::from(graph.vertex_count());
        let xb = induced.order() / BigCount::from(q.orbit_count);
        report.push(Check::new(
            "|X_v| = |(X/N)_B|",
            ANCHOR,
            xv.to_string(),
            xb.to_string(),
            xv == xb,
        ));
    }
    Ok(report)
}

pub fn search(file: &GeneratorFile, caps: &Caps) -> Result<VerificationReport> {
    let (g_name, h_name, valency) = file
        .find(|d| match d {
            Directive::Search { g, h, valency } => Some((g.clone(), h.clone(), *valency)),
            _ => None,
        })
        .ok_or_else(|| missing("search"))?;
    let (g, h) = (file.generated(&g_name)?, file.generated(&h_name)?);
    let cap = caps.enumeration();
    let candidates = two_element_candidates(g, h, &cap)?;
    let chunk = (candidates.len() / (4 * rayon::current_num_threads()).max(1)).max(1);
    let parts: Vec<_> = candidates
        .par_chunks(chunk)
        .map(|c| scan_candidates(g, h, c, valency, &cap))
        .collect();
    let mut witnesses = Vec::new();
    for p in parts {
        witnesses.extend(p?);
    }
    let mut report = VerificationReport::new("search");
    let order = g.order();
    report.result("group_order", big(&order));
    report.result("candidates", candidates.len());
    report.result("witnesses", witnesses.len());
    report.result("target_valency", valency.map_or(Value::Null, |k| json!(k)));
    report.result("scope", format!("exhaustive up to |G| <= {}", caps.enumeration));
    report.push(Check::new(
        "exhaustive scan of G",
        "Lemma 2.1 Condition",
        format!("{order} elements"),
        format!("{order} elements, {} candidates", candidates.len()),
        true,
    ));
    if let Some(w) = witnesses.first() {
        report.result("first_witness", format_cycles(&w.witness));
        let spec = CosetGraphSpec::new(g.clone(), h.clone(), w.witness.clone())?;
        let cg = coset_graph(&spec, caps.max_index, &cap)?;
        report.result("first_witness_vertices", cg.graph.vertex_count());
        report.result(
            "first_witness_girth",
            cg.graph.girth().map_or(Value::Null, |x| json!(x)),
        );
        let arcs = transitivity_tests(&cg.graph, &cg.cosets.as_group()?, 1)?;
        report.result("first_witness_arc_transitive", arcs.transitive);
        if cg.graph.vertex_count() <= caps.vertices {
            report.result(
                "first_witness_aut_order",
                big(&automorphism_group(&cg.graph, caps.vertices)?.order()),
            );
        }
        report.push(Check::new(
            "first witness gives a connected graph of the predicted valency",
            "Lemma 2.1",
            format!("connected, regular of valency {}", w.valency),
            format!(
                "connected: {}, {}",
                cg.graph.is_connected(),
                valency_text(cg.graph.valency())
            ),
            cg.graph.is_connected() && cg.graph.valency() == Valency::Regular(w.valency),
        ));
    }
    Ok(report)
}

pub fn aut(graph: &SimpleGraph, caps: &Caps) -> Result<VerificationReport> {
    let group = automorphism_group(graph, caps.vertices)?;
    let mut report = VerificationReport::new("aut");
    let order = group.order();
    report.result("vertices", graph.vertex_count());
    report.result("edges", graph.edge_count());
    report.result("valency", valency_value(graph));
    report.result("connected", graph.is_connected());
    report.result("girth", graph.girth().map_or(Value::Null, |g| json!(g)));
    report.result("aut_order", big(&order));
    report.result(
        "aut_generators",
        Value::Array(group.generators().iter().map(|p| json!(format_cycles(p))).collect()),
    );
    let mut s_max = Value::Null;
    for s in 0..=3 {
        match transitivity_tests(graph, &group, s) {
            Ok(r) if r.transitive && r.arc_count > 0 => s_max = json!(s),
            Ok(_) => break,
            Err(e) if e.is_cap_exceeded() => break,
            Err(e) => return Err(e.into()),
        }
    }
    report.result("largest_transitive_s", s_max);
    let automorphisms = group.generators().iter().all(|p| graph.is_automorphism(p));
    report.push(Check::new(
        "generators are automorphisms",
        ARTIFACT,
        "all",
        if automorphisms { "all" } else { "not all" },
        automorphisms,
    ));
    let orbit = group.orbit(0)?.len();
    let stab: GeneratedGroup = group.point_stabilizer(0)?;
    let product = stab.order() * BigCount::from(orbit);
    report.push(Check::new(
        "|Aut| = |1^Aut| · |Aut_1|",
        ARTIFACT,
        order.to_string(),
        format!("{orbit} · {} = {product}", stab.order()),
        product == order,
    ));
    Ok(report)
}
