//! Exact md(G) with certificates.
//!
//! The graph is split into blocks (md is additive over blocks and a bridge
//! contributes 1). For each non-trivial block, `k` runs from the best upper
//! bound downwards and the first `k` admitting an MD-coloring with exactly
//! `k` colors is the block's md: merging the top colors of an MD-coloring
//! keeps it MD, so feasibility is monotone in `k`.

mod bounds;
mod oracle;
mod search;

pub use bounds::{md_lower_bound, md_upper_bound, Bound, BoundKind};
pub use oracle::{md_oracle, ORACLE_MAX_EDGES};

use crate::analysis::{block_decomposition, forced_classes, theta_classes};
use crate::coloring::{md_check, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use search::{Outcome, Search};
use serde::Serialize;
use std::time::{Duration, Instant};

/// Order in which candidate color counts are tried for a block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// From the upper bound down; the first feasible count is md.
    Descending,
    /// From 1 up; the last feasible count is md.
    Ascending,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// Search nodes allowed per `md_exact` / `md_feasible` call.
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
    pub two_connected_bound: bool,
    pub closure_bound: bool,
    pub min_degree_bound: bool,
    pub class_bound: bool,
    pub soft_layer_bound: bool,
    /// Merge opposite edges of 4-cycles into one unit (otherwise units are
    /// plain θ-classes).
    pub four_cycle_rule: bool,
    pub use_blocks: bool,
    pub direction: Direction,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: None,
            time_budget: None,
            two_connected_bound: true,
            closure_bound: true,
            min_degree_bound: true,
            class_bound: true,
            soft_layer_bound: true,
            four_cycle_rule: true,
            use_blocks: true,
            direction: Direction::Descending,
        }
    }
}

impl SearchConfig {
    /// Bounds and unit merging switched off; blocks not split.
    pub fn plain() -> Self {
        SearchConfig {
            two_connected_bound: false,
            closure_bound: false,
            min_degree_bound: false,
            class_bound: false,
            soft_layer_bound: false,
            four_cycle_rule: false,
            use_blocks: false,
            ..SearchConfig::default()
        }
    }

    pub fn with_time_budget(mut self, budget: Duration) -> Self {
        self.time_budget = Some(budget);
        self
    }

    pub fn with_node_budget(mut self, nodes: u64) -> Self {
        self.node_budget = Some(nodes);
        self
    }

    fn validate(&self) -> Result<()> {
        if self.node_budget == Some(0) || self.time_budget == Some(Duration::ZERO) {
            return Err(Error::Domain("budgets must be positive".into()));
        }
        Ok(())
    }
}

pub(crate) struct Budget {
    nodes: u64,
    node_limit: Option<u64>,
    deadline: Option<Instant>,
    exhausted: bool,
}

impl Budget {
    pub(crate) fn new(cfg: &SearchConfig) -> Budget {
        Budget {
            nodes: 0,
            node_limit: cfg.node_budget,
            deadline: cfg.time_budget.map(|d| Instant::now() + d),
            exhausted: false,
        }
    }

    /// Counts one node; false once a limit is hit.
    pub(crate) fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        let over_nodes = self.node_limit.is_some_and(|l| self.nodes > l);
        let over_time = self.nodes.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() >= d);
        self.exhausted = over_nodes || over_time;
        !self.exhausted
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub feasibility_calls: usize,
    #[serde(serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1000.0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockSummary {
    pub vertices: Vec<usize>,
    pub md: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MdResult {
    pub value: usize,
    /// An MD-coloring with exactly `value` colors.
    pub certificate: EdgeColoring,
    /// Bounds computed on the whole graph, plus the summed block bounds.
    pub bounds: Vec<Bound>,
    pub blocks: Vec<BlockSummary>,
    pub stats: SearchStats,
}

fn search_units(g: &Graph, cfg: &SearchConfig) -> Vec<Vec<usize>> {
    let partition = if cfg.four_cycle_rule {
        forced_classes(g)
    } else {
        theta_classes(g)
    };
    let mut units = partition.classes;
    // Largest first; the sort is stable so ties keep smallest-edge order.
    units.sort_by_key(|u| std::cmp::Reverse(u.len()));
    units
}

fn feasible(
    g: &Graph,
    k: usize,
    cfg: &SearchConfig,
    budget: &mut Budget,
    stats: &mut SearchStats,
) -> Result<Option<EdgeColoring>> {
    stats.feasibility_calls += 1;
    let units = search_units(g, cfg);
    let before = budget.nodes;
    let outcome = Search::new(g, &units, k, budget).run();
    stats.nodes += budget.nodes - before;
    match outcome {
        Outcome::Found(colors) => {
            debug_assert!(md_check(g, &colors));
            Ok(Some(EdgeColoring::new(g, colors)?))
        }
        Outcome::Infeasible => Ok(None),
        Outcome::Exhausted => Err(Error::BudgetExhausted { lower: 1, upper: k }),
    }
}

/// An MD-coloring of `g` with exactly `k` colors, if one exists.
pub fn md_feasible(g: &Graph, k: usize, cfg: &SearchConfig) -> Result<Option<EdgeColoring>> {
    cfg.validate()?;
    if k == 0 {
        return Err(Error::Domain("k must be at least 1".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut budget = Budget::new(cfg);
    feasible(g, k, cfg, &mut budget, &mut SearchStats::default())
}

/// md of a connected graph with at least 2 vertices, solved as one piece.
fn solve_piece(
    g: &Graph,
    cfg: &SearchConfig,
    known: Option<&[Bound]>,
    budget: &mut Budget,
    stats: &mut SearchStats,
) -> Result<(EdgeColoring, usize, usize)> {
    let computed;
    let all = match known {
        Some(b) => b,
        None => {
            let mut b = bounds::upper_bounds(g, cfg, budget)?;
            b.extend(bounds::lower_bounds(g)?);
            computed = b;
            &computed
        }
    };
    let upper = all
        .iter()
        .filter(|b| b.kind == BoundKind::Upper)
        .map(|b| b.value)
        .min()
        .unwrap();
    let lower = all
        .iter()
        .filter(|b| b.kind == BoundKind::Lower)
        .map(|b| b.value)
        .max()
        .unwrap();
    if upper == 1 {
        return Ok((EdgeColoring::trivial(g), lower, upper));
    }
    if lower > upper {
        return Err(Error::Precondition(format!("bounds cross: {lower} > {upper}")));
    }
    let exhausted = |lo: usize, hi: usize| Error::BudgetExhausted { lower: lo, upper: hi };
    match cfg.direction {
        Direction::Descending => {
            for k in (1..=upper).rev() {
                match feasible(g, k, cfg, budget, stats) {
                    Ok(Some(c)) => return Ok((c, lower, upper)),
                    Ok(None) => {}
                    Err(Error::BudgetExhausted { .. }) => return Err(exhausted(lower, k)),
                    Err(e) => return Err(e),
                }
            }
            Err(Error::Precondition(
                "no MD-coloring found, not even the trivial one".into(),
            ))
        }
        Direction::Ascending => {
            let mut best = None;
            for k in 1..=upper {
                match feasible(g, k, cfg, budget, stats) {
                    Ok(Some(c)) => best = Some(c),
                    Ok(None) => break,
                    Err(Error::BudgetExhausted { .. }) => return Err(exhausted(k - 1, upper)),
                    Err(e) => return Err(e),
                }
            }
            best.map(|c| (c, lower, upper))
                .ok_or_else(|| Error::Precondition("trivial coloring rejected".into()))
        }
    }
}

pub(crate) fn md_exact_with(g: &Graph, cfg: &SearchConfig, budget: &mut Budget) -> Result<MdResult> {
    let start = Instant::now();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() == 0 {
        return Err(Error::Domain("md is undefined for the empty graph".into()));
    }
    let mut stats = SearchStats::default();
    if g.n() == 1 {
        return Ok(MdResult {
            value: 0,
            certificate: EdgeColoring::trivial(g),
            bounds: Vec::new(),
            blocks: Vec::new(),
            stats,
        });
    }
    let mut trail = bounds::upper_bounds(g, cfg, budget)?;
    trail.extend(bounds::lower_bounds(g)?);
    let mut colors = vec![0; g.m()];
    let mut value = 0;
    let mut blocks = Vec::new();
    let pieces = if cfg.use_blocks {
        block_decomposition(g)?
            .blocks
            .into_iter()
            .map(|b| (b.vertices, b.edges, b.graph))
            .collect()
    } else {
        vec![((0..g.n()).collect(), (0..g.m()).collect(), g.clone())]
    };
    let (mut lower_sum, mut upper_sum) = (0, 0);
    let several = pieces.len() > 1;
    for (vertices, edges, piece) in pieces {
        let (c, lower, upper) = if piece.m() == 1 {
            (EdgeColoring::trivial(&piece), 1, 1)
        } else {
            let known = (!several).then_some(trail.as_slice());
            match solve_piece(&piece, cfg, known, budget, &mut stats) {
                Ok(r) => r,
                Err(Error::BudgetExhausted { lower, upper }) => {
                    return Err(Error::BudgetExhausted {
                        lower: value + lower,
                        upper: value + upper,
                    })
                }
                Err(e) => return Err(e),
            }
        };
        lower_sum += lower;
        upper_sum += upper;
        // Block edges are listed in the parent's order, and so are the
        // block graph's own edges.
        for (i, &e) in edges.iter().enumerate() {
            colors[e] = c.color(i) + value;
        }
        value += c.k();
        blocks.push(BlockSummary { vertices, md: c.k() });
    }
    if several {
        trail.push(Bound {
            name: "block sum",
            kind: BoundKind::Upper,
            value: upper_sum,
        });
        trail.push(Bound {
            name: "block sum",
            kind: BoundKind::Lower,
            value: lower_sum,
        });
    }
    let certificate = EdgeColoring::new(g, colors)?;
    debug_assert!(md_check(g, certificate.colors()));
    stats.elapsed = start.elapsed();
    Ok(MdResult {
        value,
        certificate,
        bounds: trail,
        blocks,
        stats,
    })
}

/// md(G) for a connected graph, with an extremal coloring.
///
/// A single vertex has md 0. Budget exhaustion is reported as
/// [`Error::BudgetExhausted`] carrying the bounds known at that point.
pub fn md_exact(g: &Graph, cfg: &SearchConfig) -> Result<MdResult> {
    cfg.validate()?;
    let mut budget = Budget::new(cfg);
    md_exact_with(g, cfg, &mut budget)
}

/// Whether md(G) ≤ `target`, answered from upper bounds when possible and
/// otherwise by showing `target + 1` colors are infeasible.
pub fn md_at_most(g: &Graph, target: usize, cfg: &SearchConfig) -> Result<bool> {
    if md_upper_bound(g, cfg)?.0 <= target {
        return Ok(true);
    }
    Ok(md_exact(g, cfg)?.value <= target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_md_coloring;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn k33() -> Graph {
        Graph::new(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap()
    }

    fn md(g: &Graph) -> usize {
        let r = md_exact(g, &SearchConfig::default()).unwrap();
        let (ok, _) = is_md_coloring(g, &r.certificate).unwrap();
        assert!(ok);
        assert_eq!(r.certificate.k(), r.value);
        r.value
    }

    #[test]
    fn small_values() {
        assert_eq!(md(&cycle(5)), 2);
        assert_eq!(md(&k33()), 1);
        let bowtie = Graph::new(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(md(&bowtie), 2);
        assert_eq!(md(&Graph::new(1, []).unwrap()), 0);
        assert_eq!(md(&complete(2)), 1);
        for n in 3..=10 {
            assert_eq!(md(&cycle(n)), n / 2);
        }
    }

    #[test]
    fn feasibility_examples() {
        let cfg = SearchConfig::default();
        let c6 = cycle(6);
        let c = md_feasible(&c6, 3, &cfg).unwrap().unwrap();
        assert_eq!(c.k(), 3);
        assert!(crate::coloring::md_check(&c6, c.colors()));
        // Each color of an MD 3-coloring of C6 sits on exactly two edges.
        assert!(c.classes().values().all(|e| e.len() == 2));
        assert_eq!(md_feasible(&complete(4), 2, &cfg).unwrap(), None);
        let tree = Graph::new(6, [(0, 1), (1, 2), (2, 3), (1, 4), (4, 5)]).unwrap();
        let c = md_feasible(&tree, 5, &cfg).unwrap().unwrap();
        assert_eq!(c.k(), 5);
    }

    #[test]
    fn configurations_agree() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let ascending = SearchConfig {
            direction: Direction::Ascending,
            ..SearchConfig::default()
        };
        let mut done = 0;
        while done < 150 {
            let n = rng.gen_range(2..=7);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(0.45))
                .collect();
            let g = Graph::new(n, edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            let a = md_exact(&g, &SearchConfig::default()).unwrap().value;
            assert_eq!(md_exact(&g, &SearchConfig::plain()).unwrap().value, a, "{g:?}");
            assert_eq!(md_exact(&g, &ascending).unwrap().value, a, "{g:?}");
            done += 1;
        }
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let cfg = SearchConfig::plain().with_node_budget(3);
        let g = cycle(10);
        match md_exact(&g, &cfg) {
            Err(Error::BudgetExhausted { lower, upper }) => assert!(lower <= 5 && 5 <= upper),
            other => panic!("expected exhaustion, got {other:?}"),
        }
        assert!(md_exact(&g, &SearchConfig::default().with_node_budget(0)).is_err());
    }

    #[test]
    fn rejects_disconnected() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(md_exact(&g, &SearchConfig::default()), Err(Error::Disconnected));
    }
}
