use super::{enumerate_connected, f, g};
use crate::error::{Error, Result};
use crate::families::{clique_with_tail, complete, cycle, h, h_nr, path};
use crate::graph::{to_graph6, Graph};
use crate::solver::{md_exact, SearchConfig};
use rayon::prelude::*;
use serde::Serialize;
use std::time::{Duration, Instant};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub graph: Graph,
    pub graph6: String,
    /// `None` when the solver ran out of budget.
    pub md: Option<usize>,
}

/// md of every connected graph of one order.
#[derive(Debug, Clone)]
pub struct MdCatalog {
    pub n: usize,
    pub entries: Vec<CatalogEntry>,
    pub nodes: u64,
    pub elapsed: Duration,
    pub jobs: usize,
}

impl MdCatalog {
    /// Enumerates the connected graphs of order `n` and solves each.
    pub fn build(n: usize, cfg: &SearchConfig, jobs: usize) -> Result<MdCatalog> {
        MdCatalog::from_graphs(n, enumerate_connected(n)?, cfg, jobs)
    }

    /// Solves an externally supplied list (for instance a graph6 file).
    /// Every graph must be connected and of order `n`.
    pub fn from_graphs(n: usize, graphs: Vec<Graph>, cfg: &SearchConfig, jobs: usize) -> Result<MdCatalog> {
        if let Some(bad) = graphs.iter().find(|g| g.n() != n || !g.is_connected()) {
            return Err(Error::Precondition(format!(
                "catalog graph {} is not a connected graph on {n} vertices",
                to_graph6(bad)?
            )));
        }
        let start = Instant::now();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::Precondition(format!("cannot start worker pool: {e}")))?;
        let solved: Vec<Result<(CatalogEntry, u64)>> = pool.install(|| {
            graphs
                .into_par_iter()
                .map(|graph| {
                    let graph6 = to_graph6(&graph)?;
                    let (md, nodes) = match md_exact(&graph, cfg) {
                        Ok(r) => (Some(r.value), r.stats.nodes),
                        Err(Error::BudgetExhausted { .. }) => (None, 0),
                        Err(e) => return Err(e),
                    };
                    Ok((CatalogEntry { graph, graph6, md }, nodes))
                })
                .collect()
        });
        let mut entries = Vec::with_capacity(solved.len());
        let mut nodes = 0;
        for s in solved {
            let (e, k) = s?;
            entries.push(e);
            nodes += k;
        }
        entries.sort_by(|a, b| (a.graph.m(), &a.graph6).cmp(&(b.graph.m(), &b.graph6)));
        Ok(MdCatalog {
            n,
            entries,
            nodes,
            elapsed: start.elapsed(),
            jobs: jobs.max(1),
        })
    }

    pub fn with_edges(&self, m: usize) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(move |e| e.graph.m() == m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ThresholdKind {
    F,
    G,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessSource {
    /// The family graph built for this threshold.
    Construction,
    /// Found by scanning the catalog after the construction failed.
    Catalog,
    /// No graph with the required edge count exists; the recorded graph
    /// attains the threshold instead.
    Vacuous,
    None,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportStats {
    pub elapsed_ms: f64,
    pub nodes: u64,
    pub jobs: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThresholdReport {
    pub threshold: ThresholdKind,
    pub n: usize,
    pub r: usize,
    pub value: usize,
    pub verified: bool,
    /// Graphs in the checked range, i.e. with `e >= f` or `e <= g`.
    pub graphs_checked: usize,
    pub counterexamples: Vec<String>,
    /// Graphs whose md could not be settled within the budget.
    pub inconclusive: Vec<String>,
    pub witness: Option<String>,
    pub witness_edges: Option<usize>,
    pub witness_md: Option<usize>,
    pub witness_source: WitnessSource,
    #[serde(skip)]
    pub stats: ReportStats,
}

impl ThresholdReport {
    pub fn is_conclusive(&self) -> bool {
        self.inconclusive.is_empty()
    }
}

fn stats_of(catalog: &MdCatalog) -> ReportStats {
    ReportStats {
        elapsed_ms: catalog.elapsed.as_secs_f64() * 1000.0,
        nodes: catalog.nodes,
        jobs: catalog.jobs,
    }
}

struct Witness {
    graph6: String,
    edges: usize,
    md: usize,
    source: WitnessSource,
}

fn solve(gr: &Graph, cfg: &SearchConfig) -> Result<usize> {
    Ok(md_exact(gr, cfg)?.value)
}

/// Checks the construction, then falls back to the catalog.
fn find_witness(
    catalog: &MdCatalog,
    construction: Option<Graph>,
    edges: usize,
    wanted: impl Fn(usize) -> bool,
    cfg: &SearchConfig,
) -> Result<Option<Witness>> {
    if let Some(gr) = construction {
        if gr.m() == edges && gr.is_connected() {
            let md = solve(&gr, cfg)?;
            if wanted(md) {
                let graph6 = to_graph6(&gr)?;
                return Ok(Some(Witness {
                    graph6,
                    edges,
                    md,
                    source: WitnessSource::Construction,
                }));
            }
        }
    }
    Ok(catalog
        .with_edges(edges)
        .find(|e| e.md.is_some_and(&wanted))
        .map(|e| Witness {
            graph6: e.graph6.clone(),
            edges,
            md: e.md.unwrap(),
            source: WitnessSource::Catalog,
        }))
}

fn report(
    threshold: ThresholdKind,
    catalog: &MdCatalog,
    r: usize,
    value: usize,
    in_range: impl Fn(usize) -> bool,
    holds: impl Fn(usize) -> bool,
    witness: Option<Witness>,
) -> ThresholdReport {
    let mut counterexamples = Vec::new();
    let mut inconclusive = Vec::new();
    let mut graphs_checked = 0;
    for e in catalog.entries.iter().filter(|e| in_range(e.graph.m())) {
        graphs_checked += 1;
        match e.md {
            Some(md) if !holds(md) => counterexamples.push(e.graph6.clone()),
            Some(_) => {}
            None => inconclusive.push(e.graph6.clone()),
        }
    }
    counterexamples.sort();
    inconclusive.sort();
    let verified = counterexamples.is_empty() && inconclusive.is_empty() && witness.is_some();
    ThresholdReport {
        threshold,
        n: catalog.n,
        r,
        value,
        verified,
        graphs_checked,
        counterexamples,
        inconclusive,
        witness_edges: witness.as_ref().map(|w| w.edges),
        witness_md: witness.as_ref().map(|w| w.md),
        witness_source: witness.as_ref().map_or(WitnessSource::None, |w| w.source),
        witness: witness.map(|w| w.graph6),
        stats: stats_of(catalog),
    }
}

/// Every connected graph with at least `f(n, r)` edges has md <= r, and
/// some graph with `f(n, r) - 1` edges has md >= r + 1.
pub fn verify_f(catalog: &MdCatalog, r: usize, cfg: &SearchConfig) -> Result<ThresholdReport> {
    let n = catalog.n;
    let value = f(n, r)?;
    let witness = if r == n - 1 {
        // f = n - 1: a spanning tree is the sparsest connected graph, so
        // there is nothing below the threshold. Record a path (md = n - 1).
        let p = path(n)?;
        Some(Witness {
            graph6: to_graph6(&p)?,
            edges: p.m(),
            md: solve(&p, cfg)?,
            source: WitnessSource::Vacuous,
        })
    } else {
        find_witness(catalog, Some(clique_with_tail(n, r)?), value - 1, |md| md > r, cfg)?
    };
    Ok(report(
        ThresholdKind::F,
        catalog,
        r,
        value,
        |m| m >= value,
        |md| md <= r,
        witness,
    ))
}

/// The family graph expected to show `g(n, r)` cannot be raised.
fn g_construction(n: usize, r: usize) -> Result<Option<Graph>> {
    Ok(match r {
        2 => Some(h(n)?.graph),
        _ if r > n / 2 => Some(cycle(n)?),
        3 if n % 2 == 1 => Some(h(n)?.graph),
        3 => {
            // H_{n-1} with a pendant edge: 3n/2 - 2 edges, md 2.
            let base = h(n - 1)?.graph;
            Some(Graph::new(n, base.edges().iter().copied().chain([(0, n - 1)]))?)
        }
        _ => Some(h_nr(n, r - 1)?.graph),
    })
}

/// Every connected graph with at most `g(n, r)` edges has md >= r, and
/// some graph with `g(n, r) + 1` edges has md < r.
pub fn verify_g(catalog: &MdCatalog, r: usize, cfg: &SearchConfig) -> Result<ThresholdReport> {
    let n = catalog.n;
    let value = g(n, r)?;
    let witness = if r == 1 {
        // g = C(n, 2): no simple graph has more edges. Record K_n (md 1).
        let k = complete(n)?;
        Some(Witness {
            graph6: to_graph6(&k)?,
            edges: k.m(),
            md: solve(&k, cfg)?,
            source: WitnessSource::Vacuous,
        })
    } else {
        find_witness(catalog, g_construction(n, r)?, value + 1, |md| md < r, cfg)?
    };
    Ok(report(
        ThresholdKind::G,
        catalog,
        r,
        value,
        |m| m <= value,
        |md| md >= r,
        witness,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_verify() {
        let cfg = SearchConfig::default();
        for n in 2..=6 {
            let cat = MdCatalog::build(n, &cfg, 2).unwrap();
            for r in 1..n {
                let rf = verify_f(&cat, r, &cfg).unwrap();
                assert!(rf.verified, "{rf:?}");
                let rg = verify_g(&cat, r, &cfg).unwrap();
                assert!(rg.verified, "{rg:?}");
            }
        }
    }

    #[test]
    fn witnesses_come_from_constructions() {
        let cfg = SearchConfig::default();
        let cat = MdCatalog::build(6, &cfg, 1).unwrap();
        let rf = verify_f(&cat, 2, &cfg).unwrap();
        assert_eq!(rf.witness_source, WitnessSource::Construction);
        assert_eq!(rf.witness_md, Some(3));
        let rg = verify_g(&cat, 3, &cfg).unwrap();
        assert_eq!(rg.value, 6);
        assert_eq!(rg.witness_source, WitnessSource::Construction);
        let rf = verify_f(&cat, 5, &cfg).unwrap();
        assert_eq!(rf.witness_source, WitnessSource::Vacuous);
    }

    #[test]
    fn rejects_foreign_graphs() {
        let cfg = SearchConfig::default();
        let k3 = complete(3).unwrap();
        assert!(MdCatalog::from_graphs(4, vec![k3], &cfg, 1).is_err());
    }
}
