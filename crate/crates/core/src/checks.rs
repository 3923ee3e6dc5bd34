//! Property suites over small graphs, shared by `mdlab check` and the test
//! suite. Each suite returns a [`CheckReport`] listing the failing cases.

use crate::analysis::{find_matching_cuts, has_matching_cut, is_closure, is_two_connected};
use crate::coloring::{is_md_coloring, matching_cut_coloring, md_check};
use crate::error::{Error, Result};
use crate::extremal::{enumerate_connected, verify_f, verify_g, MdCatalog};
use crate::families::{
    attach_path, clique_matching_clique, clique_with_tail, complete, complete_bipartite, complete_minus_edge, crown,
    cycle, cycle_md_coloring, dense_block, h, h_nr, h_nr_coloring, h_nr_parts, path,
};
use crate::graph::{canonical_form, to_graph6, Graph};
use crate::products::{cartesian_md_coloring, product, tensor_md_upper, ProductKind};
use crate::solver::{md_exact, md_oracle, SearchConfig, ORACLE_MAX_EDGES};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::{BTreeSet, HashSet};

/// Failures kept in a report; the count is always exact.
const MAX_LISTED: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOptions {
    /// Overrides the suite's default size limit (vertex count or product
    /// order, depending on the suite).
    pub max_order: Option<usize>,
    /// Graphs drawn at the largest order when a suite samples.
    pub sample: usize,
    pub seed: u64,
    pub jobs: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            max_order: None,
            sample: 200,
            seed: 1,
            jobs: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub passed: bool,
    pub cases: usize,
    pub failure_count: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

struct Tally {
    id: &'static str,
    cases: usize,
    failures: Vec<String>,
    failure_count: usize,
    notes: Vec<String>,
}

impl Tally {
    fn new(id: &'static str) -> Tally {
        Tally {
            id,
            cases: 0,
            failures: Vec::new(),
            failure_count: 0,
            notes: Vec::new(),
        }
    }

    fn case(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_LISTED {
                self.failures.push(detail());
            }
        }
    }

    fn finish(self) -> CheckReport {
        CheckReport {
            id: self.id.to_string(),
            passed: self.failure_count == 0,
            cases: self.cases,
            failure_count: self.failure_count,
            failures: self.failures,
            notes: self.notes,
        }
    }
}

/// Suite ids with one-line descriptions.
pub const CHECKS: &[(&str, &str)] = &[
    (
        "oracle",
        "solver agrees with brute-force partition enumeration (n <= 6, m <= 10)",
    ),
    (
        "constants",
        "md of complete, near-complete, complete bipartite, cycles, trees, H_n, H_nr, tensor specials",
    ),
    ("families", "family sizes, explicit colorings and threshold witnesses"),
    (
        "thresholds",
        "exhaustive f(n, r) and g(n, r) sweeps (n <= 7 by default)",
    ),
    (
        "cartesian-additivity",
        "md(G □ H) = md(G) + md(H) by the solver (order <= 12)",
    ),
    (
        "cartesian-coloring",
        "the fiber coloring of G □ H is MD with md(G) + md(H) colors (order <= 30)",
    ),
    ("three-factor", "additivity over three Cartesian factors"),
    ("strong-closure", "G ⊠ H is a closure (order <= 60)"),
    (
        "lexicographic",
        "md(G ∘ H) = 1 by the solver (order <= 12), closure witness beyond",
    ),
    ("tensor-odd-girth", "md(G * H) <= min odd girth (order <= 20)"),
    (
        "tensor-special",
        "crown graphs are closures equal to K2 * Kn; md(P4 * K3) = md(K2 * K5) = 1",
    ),
    (
        "tensor-triangle",
        "md(G * H) = 1 when H has a triangle and no pendent edge",
    ),
    (
        "tensor-monotonicity",
        "md(G * H) <= md(G' * H) for connected subgraphs G' of G",
    ),
    (
        "tensor-subgraph",
        "md(G * H) <= md(G' * H') for pendent-free subgraphs (reported, not assumed)",
    ),
    (
        "spanning-monotonicity",
        "md(H) >= md(G) for connected spanning subgraphs H",
    ),
    ("vertex-deletion", "md(G) <= md(G - v) for non-pendent, non-cut v"),
    (
        "split-off",
        "splitting off a degree-2 vertex does not raise md; colorings lift",
    ),
    ("matching-cut-coloring", "every matching-cut 2-coloring is MD"),
    ("merge", "merging the top colors of an MD-coloring keeps it MD"),
    (
        "restriction",
        "MD-colorings restrict to MD-colorings of connected subgraphs",
    ),
    (
        "contraction",
        "contracting a minimal matching cut lowers md by at least 1",
    ),
    ("two-connected-cap", "2-connected graphs have md <= floor(n/2)"),
    (
        "min-degree",
        "min degree > n/2 forces md = 1; two cliques joined by a matching have md >= 2",
    ),
    (
        "matching-immune",
        "sparse connected graphs have a matching cut (n <= 8)",
    ),
    (
        "attachments",
        "md of H_m with a path attached at every vertex pair (n <= 10, reported)",
    ),
];

pub fn run_check(id: &str, opts: &CheckOptions) -> Result<CheckReport> {
    let cfg = SearchConfig::default();
    let o = opts;
    match id {
        "oracle" => oracle(o.max_order.unwrap_or(6), &cfg),
        "constants" => constants(&cfg),
        "families" => families(o.max_order.unwrap_or(11), &cfg),
        "thresholds" => thresholds(o.max_order.unwrap_or(7), o.jobs, &cfg),
        "cartesian-additivity" => cartesian_additivity(o.max_order.unwrap_or(12), &cfg),
        "cartesian-coloring" => cartesian_coloring(o.max_order.unwrap_or(30), &cfg),
        "three-factor" => three_factor(o.max_order.unwrap_or(12), &cfg),
        "strong-closure" => strong_closure(o.max_order.unwrap_or(60)),
        "lexicographic" => lexicographic(o.max_order.unwrap_or(12), &cfg),
        "tensor-odd-girth" => tensor_odd_girth(o.max_order.unwrap_or(20), &cfg),
        "tensor-special" => tensor_special(&cfg),
        "tensor-triangle" => tensor_triangle(o.max_order.unwrap_or(20), &cfg),
        "tensor-monotonicity" => tensor_monotonicity(o.max_order.unwrap_or(16), &cfg),
        "tensor-subgraph" => tensor_subgraph(o.max_order.unwrap_or(16), &cfg),
        "spanning-monotonicity" => corpus_suite(id, o, &cfg, spanning_case),
        "vertex-deletion" => corpus_suite(id, o, &cfg, deletion_case),
        "split-off" => corpus_suite(id, o, &cfg, split_case),
        "matching-cut-coloring" => corpus_suite(id, o, &cfg, matching_cut_case),
        "merge" => corpus_suite(id, o, &cfg, merge_case),
        "restriction" => corpus_suite(id, o, &cfg, restriction_case),
        "contraction" => corpus_suite(id, o, &cfg, contraction_case),
        "two-connected-cap" => corpus_suite(id, o, &cfg, two_connected_case),
        "min-degree" => min_degree(o, &cfg),
        "matching-immune" => matching_immune(o.max_order.unwrap_or(8)),
        "attachments" => attachments(o.max_order.unwrap_or(10), &cfg),
        _ => Err(Error::Domain(format!(
            "unknown check '{id}' (known: {})",
            CHECKS.iter().map(|c| c.0).collect::<Vec<_>>().join(", ")
        ))),
    }
}

fn g6(g: &Graph) -> String {
    to_graph6(g).unwrap_or_else(|_| format!("{g:?}"))
}

fn md(g: &Graph, cfg: &SearchConfig) -> Result<usize> {
    Ok(md_exact(g, cfg)?.value)
}

fn static_id(id: &str) -> &'static str {
    CHECKS.iter().find(|c| c.0 == id).map(|c| c.0).unwrap_or("unknown")
}

// ---------------------------------------------------------------------------
// Solver and constants

fn oracle(max_n: usize, cfg: &SearchConfig) -> Result<CheckReport> {
    let mut t = Tally::new("oracle");
    for n in 1..=max_n {
        for g in enumerate_connected(n)?.iter().filter(|g| g.m() <= ORACLE_MAX_EDGES) {
            let (a, b) = (md(g, cfg)?, md_oracle(g)?);
            t.case(a == b, || format!("{}: solver {a}, oracle {b}", g6(g)));
        }
    }
    Ok(t.finish())
}

fn trees(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_connected(n)?.into_iter().filter(Graph::is_tree).collect())
}

fn constants(cfg: &SearchConfig) -> Result<CheckReport> {
    let mut t = Tally::new("constants");
    let expect = |t: &mut Tally, name: String, g: &Graph, want: usize| -> Result<()> {
        let r = md_exact(g, cfg)?;
        let ok = r.value == want && md_check(g, r.certificate.colors()) && r.certificate.k() == want;
        t.case(ok, || format!("{name}: md {} (expected {want})", r.value));
        Ok(())
    };
    for n in 2..=7 {
        expect(&mut t, format!("K{n}"), &complete(n)?, 1)?;
    }
    for n in 4..=7 {
        expect(&mut t, format!("K{n}-"), &complete_minus_edge(n)?, 1)?;
    }
    for a in 2..=7 {
        for b in 3..=5 {
            expect(&mut t, format!("K{a},{b}"), &complete_bipartite(a, b)?, 1)?;
        }
    }
    for n in 3..=10 {
        expect(&mut t, format!("C{n}"), &cycle(n)?, n / 2)?;
    }
    for n in 2..=8 {
        for tree in trees(n)? {
            expect(&mut t, format!("tree {}", g6(&tree)), &tree, n - 1)?;
        }
    }
    for n in 2..=11 {
        expect(&mut t, format!("H{n}"), &h(n)?.graph, 1)?;
    }
    for n in 6..=11 {
        for r in 3..=n / 2 {
            expect(&mut t, format!("H{n},{r}"), &h_nr(n, r)?.graph, r)?;
        }
    }
    let p4k3 = product(&path(4)?, &complete(3)?, ProductKind::Tensor)?;
    expect(&mut t, "P4 * K3".into(), &p4k3, 1)?;
    let k2k5 = product(&complete(2)?, &complete(5)?, ProductKind::Tensor)?;
    expect(&mut t, "K2 * K5".into(), &k2k5, 1)?;
    Ok(t.finish())
}

fn families(max_n: usize, cfg: &SearchConfig) -> Result<CheckReport> {
    let mut t = Tally::new("families");
    let three_halves = |x: usize| (3 * x).div_ceil(2);
    for n in 3..=20 {
        let g = h(n)?.graph;
        t.case(g.n() == n && g.m() == three_halves(n - 1), || {
            format!("H{n} has {} edges", g.m())
        });
    }
    for n in 6..=max_n.max(6) {
        for r in 3..=n / 2 {
            let g = h_nr(n, r)?.graph;
            let c = h_nr_coloring(n, r)?;
            let mu = crate::extremal::h_nr_edge_count(n, r)?;
            t.case(g.n() == n && g.m() == mu, || {
                format!("H{n},{r} has {} edges, expected {mu}", g.m())
            });
            t.case(c.k() == r && md_check(&g, c.colors()), || {
                format!("H{n},{r} coloring is not an MD {r}-coloring")
            });
        }
    }
    for n in 3..=12 {
        let c = cycle_md_coloring(n)?;
        t.case(c.k() == n / 2 && md_check(&cycle(n)?, c.colors()), || {
            format!("C{n} coloring")
        });
    }
    for n in 2..=12 {
        let cr = crown(n)?.graph;
        let k = product(&complete(2)?, &complete(n)?, ProductKind::Tensor)?;
        t.case(cr == k, || format!("crown({n}) differs from K2 * K{n}"));
    }
    for n in 3..=max_n.min(9) {
        for r in 1..=n - 2 {
            let d = dense_block(n, r)?;
            let w = clique_with_tail(n, r)?;
            let fv = crate::extremal::f(n, r)?;
            let (dm, wm) = (md(&d, cfg)?, md(&w, cfg)?);
            t.case(d.m() == fv && dm == r, || {
                format!("dense_block({n}, {r}): {} edges, md {dm}", d.m())
            });
            t.case(w.m() + 1 == fv && wm == r + 1, || {
                format!("clique_with_tail({n}, {r}): {} edges, md {wm}", w.m())
            });
        }
    }
    Ok(t.finish())
}

fn thresholds(max_n: usize, jobs: usize, cfg: &SearchConfig) -> Result<CheckReport> {
    let mut t = Tally::new("thresholds");
    for n in 2..=max_n {
        let catalog = MdCatalog::build(n, cfg, jobs)?;
        for r in 1..n {
            for rep in [verify_f(&catalog, r, cfg)?, verify_g(&catalog, r, cfg)?] {
                t.case(rep.verified, || {
                    format!(
                        "{:?}({n}, {r}) = {}: counterexamples {:?}, inconclusive {:?}, witness {:?}",
                        rep.threshold, rep.value, rep.counterexamples, rep.inconclusive, rep.witness
                    )
                });
            }
        }
    }
    Ok(t.finish())
}

// ---------------------------------------------------------------------------
// Products

/// Factors used by the product suites.
pub fn product_catalog() -> Vec<(&'static str, Graph)> {
    let star = complete_bipartite(1, 3).expect("valid");
    vec![
        ("K2", complete(2).expect("valid")),
        ("P3", path(3).expect("valid")),
        ("P4", path(4).expect("valid")),
        ("C3", cycle(3).expect("valid")),
        ("C4", cycle(4).expect("valid")),
        ("C5", cycle(5).expect("valid")),
        ("K4", complete(4).expect("valid")),
        ("K1,3", star),
    ]
}

type Factor = (&'static str, Graph);

fn pairs_up_to(order: usize) -> Vec<(Factor, Factor)> {
    let cat = product_catalog();
    let mut out = Vec::new();
    for a in &cat {
        for b in &cat {
            if a.1.n() * b.1.n() <= order {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

fn cartesian_additivity(order: usize, cfg: &SearchConfig) -> Result<CheckReport> {
    let mut t = Tally::new("cartesian-additivity");
    for ((an, a), (bn, b)) in pairs_up_to(order) {
        let p = product(&a, &b, ProductKind::Cartesian)?;
        let (mp, ma, mb) = (md(&p, cfg)?, md(&a, cfg)?, md(&b, cfg)?);
        t.case(mp == ma + mb, || format!("{an} □ {bn}: md {mp}, factors {ma} + {mb}"));
    }
    Ok(t.finish())
}

fn cartesian_coloring(order: usize, cfg: &SearchConfig) -> Result<CheckReport> {
    let mut t = Tally::new("cartesian-coloring");
    for ((an, a), (bn, b)) in pairs_up_to(order) {
        let (ra, rb) = (md_exact(&a, cfg)?, md_exact(&b, cfg)?);
        let c = cartesian_md_coloring(&a, &ra.certificate, &b, &rb.certificate)?;
        let p = product(&a, &b, ProductKind::Cartesian)?;
        let ok = c.k() == ra.value + rb.value && md_check(&p, c.colors());
        t.case(ok, || format!("{an} □ {bn}: {} colors", c.k()));
    }
    Ok(t.finish())
}

fn three_factor(order: usize, cfg: &SearchConfig) -> Result<CheckReport> {
    let mut t = Tally::new("three-factor");
    let cat = product_catalog();
    for a in &cat {
        for b in &cat {
            for c in &cat {
                if a.1.n() * b.1.n() * c.1.n() > order || a.0 > b.0 || b.0 > c.0 {
                    continue;
                }
                let ab = product(&a.1, &b.1, ProductKind::Cartesian)?;
                let abc = product(&ab, &c.1, ProductKind::Cartesian)?;
                let want = md(&a.1, cfg)? + md(&b.1, cfg)? + md(&c.1, cfg)?;
                let got = md(&abc, cfg)?;
                t.case(got == want, || {
                    format!("{} □ {} □ {}: md {got}, expected {want}", a.0, b.0, c.0)
                });
            }
        }
    }
    Ok(t.finish())
}

fn strong_closure(order: usize) -> Result<CheckReport> {
    let mut t = Tally::new("strong-closure");
    for ((an, a), (bn, b)) in pairs_up_to(order) {
        let p = product(&a, &b, ProductKind::Strong)?;
        t.case(is_closure(&p), || format!("{an} ⊠ {bn} is not a closure"));
    }
    for m in 2..=7 {
        for n in 2..=7 {
            let p = product(&path(m)?, &path(n)?, ProductKind::Strong)?;
            t.case(is_closure(&p), || format!("P{m} ⊠ P{n} is not a closure"));
        }
    }
    Ok(t.finish())
}

fn lexicographic(order: usize, cfg: &SearchConfig) -> Result<CheckReport> {
    let mut t = Tally::new("lexicographic");
    for ((an, a), (bn, b)) in pairs_up_to(60) {
        let lex = product(&a, &b, ProductKind::Lexicographic)?;
        if lex.n() <= order {
            let v = md(&lex, cfg)?;
            t.case(v == 1, || format!("{an} ∘ {bn}: md {v}"));
        } else {
            let strong = product(&a, &b, ProductKind::Strong)?;
            let spanning = strong.edges().iter().all(|&(u, v)| lex.has_edge(u, v));
            t.case(spanning && is_closure(&strong), || {
                format!("{an} ∘ {bn}: no closure witness")
            });
        }
    }
    Ok(t.finish())
}

fn tensor_odd_girth(order: usize, cfg: &SearchConfig) -> Result<CheckReport> {
    let mut t = Tally::new("tensor-odd-girth");
    for ((an, a), (bn, b)) in pairs_up_to(order) {
        let Ok(bound) = tensor_md_upper(&a, &b) else { continue };
        let p = product(&a, &b, ProductKind::Tensor)?;
        let v = md(&p, cfg)?;
        t.case(v <= bound, || format!("{an} * {bn}: md {v} > {bound}"));
    }
    if t.cases == 0 {
        t.notes
            .push("no catalog pair satisfies the preconditions at this order".into());
    }
    Ok(t.finish())
}

fn tensor_special(cfg: &SearchConfig) -> Result<CheckReport> {
    let mut t = Tally::new("tensor-special");
    for n in 5..=12 {
        t.case(is_closure(&crown(n)?.graph), || format!("crown({n}) is not a closure"));
    }
    let p4k3 = product(&path(4)?, &complete(3)?, ProductKind::Tensor)?;
    t.case(p4k3.n() == 12 && p4k3.m() == 18, || {
        "P4 * K3 should have 12 vertices and 18 edges".into()
    });
    let v = md(&p4k3, cfg)?;
    t.case(v == 1, || format!("md(P4 * K3) = {v}"));
    for n in 5..=7 {
        let k = product(&complete(2)?, &complete(n)?, ProductKind::Tensor)?;
        let v = md(&k, cfg)?;
        t.case(v == 1, || format!("md(K2 * K{n}) = {v}"));
    }
    Ok(t.finish())
}

fn tensor_triangle(order: usize, cfg: &SearchConfig) -> Result<CheckReport> {
    let mut t = Tally::new("tensor-triangle");
    // G: neither a tree nor unicyclic with a triangle as its cycle.
    let paw_free =
        |g: &Graph| !g.is_tree() && !(g.is_unicyclic() && g.odd_girth() == crate::graph::OddGirth::Finite(3));
    let mut gs: Vec<(String, Graph)> = vec![
        ("C4".into(), cycle(4)?),
        ("C5".into(), cycle(5)?),
        ("K4".into(), complete(4)?),
        ("K4-".into(), complete_minus_edge(4)?),
        (
            "C4+pendant".into(),
            Graph::new(5, [(0, 1), (1, 2), (2, 3), (0, 3), (3, 4)])?,
        ),
    ];
    gs.retain(|(_, g)| paw_free(g));
    let hs = [
        ("C3", cycle(3)?),
        ("K4", complete(4)?),
        ("K4-", complete_minus_edge(4)?),
    ];
    for (gn, g) in &gs {
        for (hn, hh) in &hs {
            if g.n() * hh.n() > order {
                continue;
            }
            let v = md(&product(g, hh, ProductKind::Tensor)?, cfg)?;
            t.case(v == 1, || format!("{gn} * {hn}: md {v}"));
        }
    }
    Ok(t.finish())
}

/// Connected subgraphs of `g` with at least one edge, one per isomorphism
/// class, as standalone graphs.
fn connected_subgraphs(g: &Graph) -> Result<Vec<Graph>> {
    let m = g.m();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 1u32..(1 << m) {
        let edges: Vec<usize> = (0..m).filter(|&e| mask >> e & 1 == 1).collect();
        let mut verts: Vec<usize> = edges.iter().flat_map(|&e| [g.edge(e).0, g.edge(e).1]).collect();
        verts.sort_unstable();
        verts.dedup();
        let sub = g.spanning_subgraph(&edges)?;
        let (s, _) = sub.induced_subgraph(&verts)?;
        if s.is_connected() && seen.insert(canonical_form(&s)) {
            out.push(s);
        }
    }
    Ok(out)
}

fn tensor_monotonicity(order: usize, cfg: &SearchConfig) -> Result<CheckReport> {
    let mut t = Tally::new("tensor-monotonicity");
    let bigs = [
        ("C4", cycle(4)?),
        ("K4-", complete_minus_edge(4)?),
        ("K4", complete(4)?),
        ("P4", path(4)?),
    ];
    let hs = [("C3", cycle(3)?), ("C4", cycle(4)?), ("C5", cycle(5)?)];
    for (gn, g) in &bigs {
        for (hn, hh) in &hs {
            if g.n() * hh.n() > order || hh.min_degree() < 2 || (g.is_bipartite() && hh.is_bipartite()) {
                continue;
            }
            let whole = md(&product(g, hh, ProductKind::Tensor)?, cfg)?;
            for sub in connected_subgraphs(g)? {
                if sub.is_bipartite() && hh.is_bipartite() {
                    continue;
                }
                let part = md(&product(&sub, hh, ProductKind::Tensor)?, cfg)?;
                t.case(whole <= part, || {
                    format!("{gn} * {hn}: md {whole} > md({} * {hn}) = {part}", g6(&sub))
                });
            }
        }
    }
    Ok(t.finish())
}

fn tensor_subgraph(order: usize, cfg: &SearchConfig) -> Result<CheckReport> {
    let mut t = Tally::new("tensor-subgraph");
    let graphs = [
        ("C3", cycle(3)?),
        ("C4", cycle(4)?),
        ("C5", cycle(5)?),
        ("K4-", complete_minus_edge(4)?),
        ("K4", complete(4)?),
    ];
    let pendent_free = |g: &Graph| -> Result<Vec<Graph>> {
        Ok(connected_subgraphs(g)?
            .into_iter()
            .filter(|s| s.n() >= 3 && !s.has_pendent_edge())
            .collect())
    };
    for (gn, g) in &graphs {
        for (hn, hh) in &graphs {
            if g.n() * hh.n() > order || (g.is_bipartite() && hh.is_bipartite()) {
                continue;
            }
            let whole = md(&product(g, hh, ProductKind::Tensor)?, cfg)?;
            for gs in pendent_free(g)? {
                for hs in pendent_free(hh)? {
                    if gs.is_bipartite() && hs.is_bipartite() {
                        continue;
                    }
                    let part = md(&product(&gs, &hs, ProductKind::Tensor)?, cfg)?;
                    t.case(whole <= part, || {
                        format!("{gn} * {hn}: md {whole} > md({} * {}) = {part}", g6(&gs), g6(&hs))
                    });
                }
            }
        }
    }
    Ok(t.finish())
}

// ---------------------------------------------------------------------------
// Suites over small connected graphs

/// All connected graphs with 2 <= n <= min(max, 6), plus a seeded sample of
/// `sample` connected graphs of order 7 when `max >= 7`.
pub fn small_graph_corpus(max: usize, sample: usize, seed: u64) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 2..=max.min(6) {
        out.extend(enumerate_connected(n)?);
    }
    if max >= 7 {
        let mut seven = enumerate_connected(7)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        seven.shuffle(&mut rng);
        seven.truncate(sample);
        out.extend(seven);
    }
    Ok(out)
}

type CaseFn = fn(&Graph, &SearchConfig, &mut ChaCha8Rng, &mut Tally) -> Result<()>;

fn corpus_suite(id: &str, o: &CheckOptions, cfg: &SearchConfig, case: CaseFn) -> Result<CheckReport> {
    let mut t = Tally::new(static_id(id));
    let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
    for g in small_graph_corpus(o.max_order.unwrap_or(7), o.sample, o.seed)? {
        case(&g, cfg, &mut rng, &mut t)?;
    }
    Ok(t.finish())
}

/// A random connected spanning subgraph: a random spanning tree plus each
/// other edge with probability 1/2.
fn random_spanning(g: &Graph, rng: &mut ChaCha8Rng) -> Result<Graph> {
    let mut order: Vec<usize> = (0..g.m()).collect();
    order.shuffle(rng);
    let mut dsu = crate::util::DisjointSet::new(g.n());
    let mut keep = Vec::new();
    for e in order {
        let (u, v) = g.edge(e);
        if dsu.union(u, v) || rng.gen_bool(0.5) {
            keep.push(e);
        }
    }
    g.spanning_subgraph(&keep)
}

fn spanning_case(g: &Graph, cfg: &SearchConfig, rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    let base = md(g, cfg)?;
    for _ in 0..3 {
        let sub = random_spanning(g, rng)?;
        let v = md(&sub, cfg)?;
        t.case(v >= base, || {
            format!("{}: spanning {} has md {v} < {base}", g6(g), g6(&sub))
        });
    }
    Ok(())
}

fn is_cut_vertex(g: &Graph, v: usize) -> Result<bool> {
    Ok(!g.delete_vertex(v)?.0.is_connected())
}

fn deletion_case(g: &Graph, cfg: &SearchConfig, _: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    let base = md(g, cfg)?;
    for v in 0..g.n() {
        if g.degree(v)? >= 2 && !is_cut_vertex(g, v)? {
            let after = md(&g.delete_vertex(v)?.0, cfg)?;
            t.case(base <= after, || format!("{} - {v}: md {after} < {base}", g6(g)));
        }
    }
    Ok(())
}

fn split_case(g: &Graph, cfg: &SearchConfig, _: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    let base = md(g, cfg)?;
    for v in 0..g.n() {
        let Ok((split, map)) = g.split_off(v) else { continue };
        let r = md_exact(&split, cfg)?;
        t.case(r.value <= base, || {
            format!("{} split at {v}: md {} > {base}", g6(g), r.value)
        });
        // Lift the split graph's extremal coloring back: both edges at v
        // take the color of the new edge.
        let mut nb = g.neighbors(v);
        let (a, b) = (nb.next().unwrap(), nb.next().unwrap());
        let img = |x: usize| map.image(x).unwrap();
        let joined = split.edge_index(img(a), img(b)).unwrap();
        let colors: Vec<usize> = g
            .edges()
            .iter()
            .map(|&(x, y)| {
                if x == v || y == v {
                    r.certificate.color(joined)
                } else {
                    r.certificate.color(split.edge_index(img(x), img(y)).unwrap())
                }
            })
            .collect();
        t.case(md_check(g, &colors), || {
            format!("{} split at {v}: lifted coloring is not MD", g6(g))
        });
    }
    Ok(())
}

fn matching_cut_case(g: &Graph, _: &SearchConfig, _: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    for cut in find_matching_cuts(g, false)? {
        let c = matching_cut_coloring(g, &cut)?;
        let ok = is_md_coloring(g, &c)?.0 && (c.k() == 2 || cut.len() == g.m());
        t.case(ok, || format!("{}: cut {cut:?}", g6(g)));
    }
    Ok(())
}

fn merge_case(g: &Graph, cfg: &SearchConfig, _: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    let r = md_exact(g, cfg)?;
    for k in 1..=r.value {
        let merged = r.certificate.merge_to_k(k)?;
        t.case(merged.k() == k && md_check(g, merged.colors()), || {
            format!("{}: merge to {k}", g6(g))
        });
    }
    Ok(())
}

fn restriction_case(g: &Graph, cfg: &SearchConfig, rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    let r = md_exact(g, cfg)?;
    for _ in 0..3 {
        // Random edge subset; keep the component of its first edge.
        let chosen: Vec<usize> = (0..g.m()).filter(|_| rng.gen_bool(0.6)).collect();
        let Some(&first) = chosen.first() else { continue };
        let sub = g.spanning_subgraph(&chosen)?;
        let comp = sub
            .components()
            .into_iter()
            .find(|c| c.contains(&g.edge(first).0))
            .unwrap();
        let (d, map) = sub.induced_subgraph(&comp)?;
        let colors: Vec<usize> = d
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (map.preimage(a)[0], map.preimage(b)[0]);
                r.certificate.color(g.edge_index(x, y).unwrap())
            })
            .collect();
        t.case(md_check(&d, &colors), || {
            format!("{}: restriction to {} is not MD", g6(g), g6(&d))
        });
    }
    Ok(())
}

fn contraction_case(g: &Graph, cfg: &SearchConfig, _: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    let base = md(g, cfg)?;
    for cut in find_matching_cuts(g, true)? {
        let edges: Vec<_> = cut.iter().map(|&e| g.edge(e)).collect();
        let (quotient, _) = g.contract_edge_set(&edges)?;
        let v = md(&quotient, cfg)?;
        t.case(v < base, || {
            format!("{}: contracting {cut:?} gives md {v}, base {base}", g6(g))
        });
    }
    Ok(())
}

fn two_connected_case(g: &Graph, cfg: &SearchConfig, _: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    if is_two_connected(g) {
        let v = md(g, cfg)?;
        t.case(v <= g.n() / 2, || format!("{}: md {v} > {}", g6(g), g.n() / 2));
    }
    Ok(())
}

fn min_degree(o: &CheckOptions, cfg: &SearchConfig) -> Result<CheckReport> {
    let mut t = Tally::new("min-degree");
    for g in small_graph_corpus(o.max_order.unwrap_or(7), o.sample, o.seed)? {
        if g.min_degree() > g.n() / 2 {
            let v = md(&g, cfg)?;
            t.case(v == 1, || {
                format!("{}: min degree {} but md {v}", g6(&g), g.min_degree())
            });
        }
    }
    for n in (4..=12).step_by(2) {
        let g = clique_matching_clique(n)?.graph;
        let v = md(&g, cfg)?;
        t.case(g.min_degree() == n / 2 && v >= 2, || {
            format!("two K{} joined by a matching: md {v}", n / 2)
        });
    }
    Ok(t.finish())
}

fn matching_immune(max_n: usize) -> Result<CheckReport> {
    let mut t = Tally::new("matching-immune");
    for n in 2..=max_n {
        let limit = (3 * (n - 1)).div_ceil(2) - 1;
        for g in enumerate_connected(n)?.iter().filter(|g| g.m() <= limit) {
            t.case(has_matching_cut(g)?, || {
                format!("{}: {} edges, no matching cut", g6(g), g.m())
            });
        }
    }
    Ok(t.finish())
}

fn attachments(max_n: usize, cfg: &SearchConfig) -> Result<CheckReport> {
    let mut t = Tally::new("attachments");
    let mut bad_bases = BTreeSet::new();
    for n in 6..=max_n {
        for r in 3..=n / 2 {
            let Some((m, len)) = h_nr_parts(n, r)? else { continue };
            let base = h(m)?.graph;
            for a in 0..m {
                for b in a + 1..m {
                    let g = attach_path(&base, a, b, len)?;
                    let v = md(&g, cfg)?;
                    t.case(v == r, || {
                        format!("n = {n}, r = {r}: H{m} attached at ({a}, {b}) has md {v}")
                    });
                    if v != r {
                        bad_bases.insert(m);
                    }
                }
            }
        }
    }
    if !bad_bases.is_empty() {
        t.notes
            .push(format!("attachment choice matters for H_m with m in {bad_bases:?}"));
    }
    Ok(t.finish())
}
