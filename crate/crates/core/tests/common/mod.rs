//! Independent oracles and instance generators shared by the property suites.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use cosgraph_core::construct::{coset_graph, feasibility_check, CosetGraphSpec};
use cosgraph_core::graph::{automorphism_group, named, SimpleGraph, Valency};
use cosgraph_core::group::{alternating, derived_subgroup, direct_product, normal_closure, symmetric, GeneratedGroup};
use cosgraph_core::perm::Permutation;
use cosgraph_core::BigCount;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const ORACLE_CAP: u64 = 2000;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn cap() -> BigCount {
    BigCount::from(100_000u32)
}

pub fn random_perm(rng: &mut impl Rng, degree: usize) -> Permutation {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

/// Size of `⟨gens⟩` by breadth-first closure on image arrays; never touches a chain.
pub fn closure_count(degree: usize, gens: &[Permutation], limit: usize) -> Option<usize> {
    let id: Vec<u32> = (0..degree as u32).collect();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y: Vec<u32> = x.iter().map(|&i| g.images()[i as usize]).collect();
            if seen.insert(y.clone()) {
                if seen.len() > limit {
                    return None;
                }
                queue.push_back(y);
            }
        }
    }
    Some(seen.len())
}

/// A random group of order at most `max_order`, with its closure count.
pub fn random_group(rng: &mut impl Rng, max_order: usize) -> (GeneratedGroup, usize) {
    loop {
        let degree = rng.gen_range(2..=8);
        let k = rng.gen_range(1..=3);
        let gens: Vec<Permutation> = (0..k)
            .map(|_| {
                // sparse perms keep the generated groups small
                let mut p = Permutation::identity(degree);
                for _ in 0..rng.gen_range(1..=2) {
                    let len = rng.gen_range(2..=degree);
                    let mut pts: Vec<u32> = (0..degree as u32).collect();
                    pts.shuffle(rng);
                    let cyc = &pts[..len];
                    let c = Permutation::from_cycles(degree, &[cyc]).unwrap();
                    p = p.compose(&c).unwrap();
                }
                p
            })
            .collect();
        if let Some(n) = closure_count(degree, &gens, max_order) {
            return (GeneratedGroup::new(degree, gens).unwrap(), n);
        }
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Automorphism count by filtering all `n!` vertex permutations.
pub fn brute_aut_count(graph: &SimpleGraph) -> usize {
    let n = graph.vertex_count();
    let edges = graph.edges();
    let mut p: Vec<u32> = (0..n as u32).collect();
    let mut count = 0;
    loop {
        if edges
            .iter()
            .all(|&(u, v)| graph.is_adjacent(p[u] as usize, p[v] as usize))
        {
            count += 1;
        }
        if !next_permutation(&mut p) {
            return count;
        }
    }
}

/// Fifty graphs on at most 8 vertices: named ones, then seeded random ones.
pub fn graph_corpus() -> Vec<SimpleGraph> {
    let mut out = vec![
        named::complete(1),
        named::complete(4),
        named::complete(6),
        named::cycle(5),
        named::cycle(8),
        named::path(3),
        named::path(7),
        named::cube(),
        SimpleGraph::from_edges(7, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3)]).unwrap(),
        SimpleGraph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap(),
        SimpleGraph::from_edges(8, &[]).unwrap(),
    ];
    let mut r = rng(0x5eed_0050);
    while out.len() < 50 {
        let n = r.gen_range(2..=8);
        let density = r.gen_range(0.15..0.85);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if r.gen_bool(density) {
                    edges.push((u, v));
                }
            }
        }
        out.push(SimpleGraph::from_edges(n, &edges).unwrap());
    }
    out
}

fn random_element(rng: &mut impl Rng, elements: &[Permutation]) -> Permutation {
    elements[rng.gen_range(0..elements.len())].clone()
}

/// A random `(G, H, g)` with `|G| ≤ 2000`, `H < G`, `g` a 2-element, `g² ∈ H`, `g ∉ H`.
pub fn random_coset_spec(rng: &mut impl Rng) -> CosetGraphSpec {
    loop {
        let (g, order) = random_group(rng, ORACLE_CAP as usize);
        if order < 4 {
            continue;
        }
        let elements = g.enumerate(&cap()).unwrap();
        let h_gens: Vec<Permutation> = (0..rng.gen_range(1..=2))
            .map(|_| random_element(rng, &elements))
            .collect();
        let h = GeneratedGroup::new(g.degree(), h_gens).unwrap();
        if h.order() == g.order() {
            continue;
        }
        let candidates: Vec<&Permutation> = elements
            .iter()
            .filter(|x| x.is_two_element() && h.contains(&(*x * *x)).unwrap() && !h.contains(x).unwrap())
            .collect();
        if let Some(x) = candidates.choose(rng) {
            return CosetGraphSpec::new(g, h, (*x).clone()).unwrap();
        }
    }
}

pub fn valency(graph: &SimpleGraph) -> Option<usize> {
    match graph.valency() {
        Valency::Regular(d) => Some(d),
        Valency::Nonregular => None,
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// One normal-quotient instance: `Γ`, an arc-transitive `X ≤ Aut Γ` and `N ⊴ X`.
pub struct QuotientInstance {
    pub label: String,
    pub graph: SimpleGraph,
    pub x: GeneratedGroup,
    pub n: GeneratedGroup,
}

/// A graph, an arc-transitive group on it, and seeds for normal closures.
type Family = (SimpleGraph, GeneratedGroup, Vec<Permutation>);

fn perm_from(n: usize, f: impl Fn(u32) -> u32) -> Permutation {
    Permutation::from_images((0..n as u32).map(f).collect()).unwrap()
}

/// `Q_p` on bit vectors, with `X = 2^p : C` for `C` generated by the given
/// coordinate permutations.
fn hypercube(p: usize, coords: &[Vec<u32>]) -> Family {
    let n = 1usize << p;
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|v| (0..p).map(move |i| (v, v ^ (1 << i))))
        .filter(|(u, v)| u < v)
        .collect();
    let graph = SimpleGraph::from_edges(n, &edges).unwrap();
    let translations: Vec<Permutation> = (0..n as u32).skip(1).map(|t| perm_from(n, |v| v ^ t)).collect();
    let mut gens = vec![translations[0].clone()];
    for c in coords {
        gens.push(perm_from(n, |v| {
            (0..p).filter(|&i| v >> i & 1 == 1).map(|i| 1u32 << c[i]).sum()
        }));
    }
    (graph, GeneratedGroup::new(n, gens).unwrap(), translations)
}

/// `Γ × K_2` with `X = A × Z_2`, `A` given on the vertices of `Γ`.
fn double_cover(base: &SimpleGraph, a: &[Permutation]) -> Family {
    let n = base.vertex_count();
    let edges: Vec<(usize, usize)> = base
        .edges()
        .into_iter()
        .flat_map(|(u, v)| [(u, v + n), (v, u + n)])
        .collect();
    let graph = SimpleGraph::from_edges(2 * n, &edges).unwrap();
    let lift = |p: &Permutation| {
        perm_from(2 * n, |v| {
            let (layer, w) = (v / n as u32, v % n as u32);
            layer * n as u32 + p.apply(w)
        })
    };
    let swap = perm_from(2 * n, |v| (v + n as u32) % (2 * n as u32));
    let mut gens: Vec<Permutation> = a.iter().map(lift).collect();
    gens.push(swap.clone());
    (graph, GeneratedGroup::new(2 * n, gens).unwrap(), vec![swap])
}

fn modinv(x: u32, q: u32) -> u32 {
    (1..q).find(|y| x * y % q == 1).unwrap()
}

/// `x ↦ (ax + b) / (cx + d)` on the projective line over `F_q`, `∞ = q`.
fn mobius(q: u32, a: u32, b: u32, c: u32, d: u32) -> Permutation {
    perm_from(q as usize + 1, |x| {
        let (num, den) = if x == q {
            (a, c)
        } else {
            ((a * x + b) % q, (c * x + d) % q)
        };
        if den == 0 {
            q
        } else {
            num * modinv(den, q) % q
        }
    })
}

/// `AGL(1, 8)` on `F_8 = F_2[t]/(t³ + t + 1)`.
fn agl_1_8() -> Vec<Permutation> {
    let times_t = |x: u32| {
        let y = x << 1;
        if y & 8 != 0 {
            (y ^ 0b1011) & 7
        } else {
            y
        }
    };
    vec![perm_from(8, |x| x ^ 1), perm_from(8, times_t)]
}

fn generalized_petersen(n: usize, k: usize) -> SimpleGraph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| [(i, (i + 1) % n), (i, n + i), (n + i, n + (i + k) % n)])
        .collect();
    SimpleGraph::from_edges(2 * n, &edges).unwrap()
}

fn icosahedron() -> SimpleGraph {
    // apexes 0 and 11, upper ring 1..=5, lower ring 6..=10
    let mut edges = Vec::new();
    for i in 0..5 {
        let (u, l) = (1 + i, 6 + i);
        edges.extend([
            (0, u),
            (11, l),
            (u, 1 + (i + 1) % 5),
            (l, 6 + (i + 1) % 5),
            (u, l),
            (u, 6 + (i + 4) % 5),
        ]);
    }
    SimpleGraph::from_edges(12, &edges).unwrap()
}

fn with_full_aut(graph: SimpleGraph) -> Family {
    let x = automorphism_group(&graph, 512).unwrap();
    let seeds = x.enumerate(&cap()).unwrap();
    (graph, x, seeds)
}

/// Connected prime-valency arc-transitive graphs with a normal subgroup of at
/// least three orbits, starting with the cube and its antipodal map. `N`
/// runs over the normal closures of the seeds.
pub fn quotient_instances() -> Vec<QuotientInstance> {
    let c = |v: &[u32]| v.to_vec();
    let sym = |n: usize| symmetric(n).unwrap().generators().to_vec();
    let alt = |n: usize| alternating(n).unwrap().generators().to_vec();
    let petersen = named::petersen();
    let petersen_aut = automorphism_group(&petersen, 512).unwrap();
    let petersen_rot = derived_subgroup(&petersen_aut).unwrap();
    let families: Vec<(&str, Family)> = vec![
        ("Q3, full automorphism group", with_full_aut(named::cube())),
        ("Q3, 2^3:Z3", hypercube(3, &[c(&[1, 2, 0])])),
        ("Q5, 2^5:Z5", hypercube(5, &[c(&[1, 2, 3, 4, 0])])),
        ("Q5, 2^5:F20", hypercube(5, &[c(&[1, 2, 3, 4, 0]), c(&[0, 2, 4, 1, 3])])),
        ("Q5, 2^5:S5", hypercube(5, &[c(&[1, 2, 3, 4, 0]), c(&[1, 0, 2, 3, 4])])),
        ("Q7, 2^7:Z7", hypercube(7, &[c(&[1, 2, 3, 4, 5, 6, 0])])),
        (
            "Q7, 2^7:F21",
            hypercube(7, &[c(&[1, 2, 3, 4, 5, 6, 0]), c(&[0, 2, 4, 6, 1, 3, 5])]),
        ),
        ("K4 x K2, S4 x Z2", double_cover(&named::complete(4), &sym(4))),
        ("K4 x K2, A4 x Z2", double_cover(&named::complete(4), &alt(4))),
        ("K6 x K2, S6 x Z2", double_cover(&named::complete(6), &sym(6))),
        ("K6 x K2, A6 x Z2", double_cover(&named::complete(6), &alt(6))),
        (
            "K6 x K2, PGL(2,5) x Z2",
            double_cover(
                &named::complete(6),
                &[mobius(5, 1, 1, 0, 1), mobius(5, 2, 0, 0, 1), mobius(5, 0, 4, 1, 0)],
            ),
        ),
        (
            "K6 x K2, PSL(2,5) x Z2",
            double_cover(
                &named::complete(6),
                &[mobius(5, 1, 1, 0, 1), mobius(5, 4, 0, 0, 1), mobius(5, 0, 4, 1, 0)],
            ),
        ),
        ("K8 x K2, S8 x Z2", double_cover(&named::complete(8), &sym(8))),
        ("K8 x K2, A8 x Z2", double_cover(&named::complete(8), &alt(8))),
        (
            "K8 x K2, PSL(2,7) x Z2",
            double_cover(
                &named::complete(8),
                &[mobius(7, 1, 1, 0, 1), mobius(7, 2, 0, 0, 1), mobius(7, 0, 6, 1, 0)],
            ),
        ),
        ("K8 x K2, AGL(1,8) x Z2", double_cover(&named::complete(8), &agl_1_8())),
        (
            "Petersen x K2, S5 x Z2",
            double_cover(&petersen, petersen_aut.generators()),
        ),
        (
            "Petersen x K2, A5 x Z2",
            double_cover(&petersen, petersen_rot.generators()),
        ),
        ("dodecahedron", with_full_aut(generalized_petersen(10, 2))),
        ("icosahedron", with_full_aut(icosahedron())),
        ("Moebius-Kantor", with_full_aut(generalized_petersen(8, 3))),
        ("Nauru", with_full_aut(generalized_petersen(12, 5))),
    ];
    let mut out = Vec::new();
    for (label, (graph, x, seeds)) in families {
        let mut seen = HashSet::new();
        for seed in seeds {
            let n = normal_closure(&x, vec![seed]).unwrap();
            let orbits = n.orbits();
            if n.is_trivial() || orbits.len() < 3 {
                continue;
            }
            if !seen.insert(orbits.clone()) {
                continue;
            }
            out.push(QuotientInstance {
                label: format!("{label}, |N| = {}, {} orbits", n.order(), orbits.len()),
                graph: graph.clone(),
                x: x.clone(),
                n,
            });
        }
    }
    out
}

/// `Cay(Z_n, S)` on the points `0..n` with `i ~ i + s`.
pub fn circulant(n: usize, s: &[usize]) -> SimpleGraph {
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|i| s.iter().map(move |&d| (i, (i + d) % n))).collect();
    SimpleGraph::from_edges(n, &edges).unwrap()
}

/// Normality of the rotations in `Aut Cay(Z_n, S)` by filtering all `n!`
/// permutations: returns `(|Aut|, normal)`.
pub fn brute_circulant_normality(n: usize, s: &[usize]) -> (usize, bool) {
    let graph = circulant(n, s);
    let edges = graph.edges();
    let rotate = |i: u32| (i + 1) % n as u32;
    let mut autos = Vec::new();
    let mut p: Vec<u32> = (0..n as u32).collect();
    loop {
        if edges
            .iter()
            .all(|&(u, v)| graph.is_adjacent(p[u] as usize, p[v] as usize))
        {
            autos.push(p.clone());
        }
        if !next_permutation(&mut p) {
            break;
        }
    }
    // a ρ a⁻¹ must again be a rotation, i.e. a(i+1) - a(i) constant
    let normal = autos.iter().all(|a| {
        let step = (a[rotate(0) as usize] + n as u32 - a[0]) % n as u32;
        (0..n as u32).all(|i| (a[rotate(i) as usize] + n as u32 - a[i as usize]) % n as u32 == step)
    });
    (autos.len(), normal)
}

pub fn product_group(a: &GeneratedGroup, b: &GeneratedGroup) -> GeneratedGroup {
    direct_product(a, b).unwrap()
}

/// What a coset-graph check exercised.
#[derive(Debug, Default, Clone, Copy)]
pub struct CosetOutcome {
    pub connected: bool,
    pub extracted: bool,
}

/// Valency formula, connectivity ⟺ generation, and, when some sampled
/// `R ≤ G` is regular on the cosets, `Cay(R, R ∩ HgH) = Cos(G, H, g)` after
/// relabeling `r ↦ Hr`.
pub fn coset_equivalences(spec: &CosetGraphSpec, rng: &mut impl Rng) -> Result<CosetOutcome, String> {
    let fr = feasibility_check(spec, &cap()).map_err(|e| e.to_string())?;
    let cg = coset_graph(spec, 10_000, &cap()).map_err(|e| e.to_string())?;
    if valency(&cg.graph) != Some(fr.valency) {
        return Err(format!("valency {} but graph {:?}", fr.valency, cg.graph.valency()));
    }
    let connected = cg.graph.is_connected();
    if connected != fr.generates {
        return Err(format!("connected {connected}, generates {}", fr.generates));
    }
    let index = cg.cosets.index();
    let elements = spec.group().enumerate(&cap()).map_err(|e| e.to_string())?;
    let mut extracted = false;
    for _ in 0..40 {
        let gens: Vec<Permutation> = (0..rng.gen_range(1..=2))
            .map(|_| random_element(rng, &elements))
            .collect();
        let r = GeneratedGroup::new(spec.group().degree(), gens).unwrap();
        if r.order() != BigCount::from(index) {
            continue;
        }
        let s = match cosgraph_core::construct::connection_set(&r, spec, 10_000, &cap()) {
            Ok(s) => s,
            Err(cosgraph_core::error::Error::NotRegular) => continue,
            Err(e) => return Err(e.to_string()),
        };
        let cay = cosgraph_core::construct::cayley_graph(&r, &s, &cap()).map_err(|e| e.to_string())?;
        let relabel: Vec<usize> = cay.elements.iter().map(|x| cg.cosets.coset_of(x).unwrap()).collect();
        if cay.graph.relabel(&relabel).map_err(|e| e.to_string())? != cg.graph {
            return Err("Cayley extraction differs from the coset graph".into());
        }
        extracted = true;
        break;
    }
    Ok(CosetOutcome { connected, extracted })
}

/// Valency kept, `N` semiregular, `X/N` arc-transitive on the quotient.
pub fn quotient_conclusions(inst: &QuotientInstance) -> Result<(), String> {
    let report = cosgraph_core::construct::normal_quotient(&inst.graph, &inst.x, &inst.n).map_err(|e| e.to_string())?;
    if !report.valency_preserved {
        return Err(format!("{}: valency not preserved", inst.label));
    }
    if !report.semiregular {
        return Err(format!("{}: N not semiregular", inst.label));
    }
    let induced = cosgraph_core::construct::induced_action(&inst.x, &report).map_err(|e| e.to_string())?;
    let arcs = cosgraph_core::graph::transitivity_tests(&report.quotient, &induced, 1).map_err(|e| e.to_string())?;
    if !arcs.transitive {
        return Err(format!("{}: X/N not arc-transitive", inst.label));
    }
    Ok(())
}

/// Hypotheses: connected, prime valency above 2, `X` arc-transitive,
/// more than two `N`-orbits.
pub fn quotient_hypotheses(inst: &QuotientInstance) -> bool {
    let arc_transitive = cosgraph_core::graph::transitivity_tests(&inst.graph, &inst.x, 1)
        .map(|r| r.transitive)
        .unwrap_or(false);
    inst.graph.is_connected()
        && valency(&inst.graph).is_some_and(|p| p > 2 && is_prime(p))
        && arc_transitive
        && inst.n.orbits().len() > 2
}
