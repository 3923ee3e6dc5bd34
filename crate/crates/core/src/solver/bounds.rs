use super::{md_exact_with, Budget, SearchConfig};
use crate::analysis::{
    forced_classes, has_matching_cut, is_closure, is_two_connected, soft_layer_reduce, MATCHING_CUT_CAP,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Lower,
    Upper,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub name: &'static str,
    pub kind: BoundKind,
    pub value: usize,
}

impl Bound {
    fn upper(name: &'static str, value: usize) -> Bound {
        Bound {
            name,
            kind: BoundKind::Upper,
            value,
        }
    }

    fn lower(name: &'static str, value: usize) -> Bound {
        Bound {
            name,
            kind: BoundKind::Lower,
            value,
        }
    }
}

fn precheck(g: &Graph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::Domain("bounds need at least 2 vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Every applicable upper bound, in a fixed order.
pub(crate) fn upper_bounds(g: &Graph, cfg: &SearchConfig, budget: &mut Budget) -> Result<Vec<Bound>> {
    precheck(g)?;
    let n = g.n();
    let mut out = vec![Bound::upper("n-1", n - 1)];
    if cfg.two_connected_bound && is_two_connected(g) {
        out.push(Bound::upper("2-connected", n / 2));
    }
    if cfg.closure_bound && is_closure(g) {
        out.push(Bound::upper("closure", 1));
    }
    if cfg.min_degree_bound && g.min_degree() > n / 2 {
        out.push(Bound::upper("min-degree", 1));
    }
    if cfg.class_bound {
        out.push(Bound::upper("forced classes", forced_classes(g).len()));
    }
    if cfg.soft_layer_bound {
        let (reduced, removed) = soft_layer_reduce(g)?;
        if !removed.is_empty() {
            // Inner searches never recurse: a reduced graph has nothing left
            // to remove.
            if let Ok(r) = md_exact_with(&reduced, cfg, budget) {
                out.push(Bound::upper("soft-layer", r.value));
            }
        }
    }
    Ok(out)
}

pub(crate) fn lower_bounds(g: &Graph) -> Result<Vec<Bound>> {
    precheck(g)?;
    let n = g.n();
    let mut out = vec![Bound::lower("trivial", 1)];
    if (3..=MATCHING_CUT_CAP).contains(&n) && has_matching_cut(g)? {
        out.push(Bound::lower("matching cut", 2));
    }
    if g.is_unicyclic() {
        out.push(Bound::lower("unicyclic", n / 2));
    }
    if g.is_tree() {
        out.push(Bound::lower("tree", n - 1));
    }
    Ok(out)
}

fn tightest(bounds: &[Bound], better: impl Fn(usize, usize) -> bool) -> (usize, &'static str) {
    let mut best = &bounds[0];
    for b in &bounds[1..] {
        if better(b.value, best.value) {
            best = b;
        }
    }
    (best.value, best.name)
}

/// Smallest applicable upper bound and its name (first listed wins ties).
pub fn md_upper_bound(g: &Graph, cfg: &SearchConfig) -> Result<(usize, &'static str)> {
    let mut budget = Budget::new(cfg);
    Ok(tightest(&upper_bounds(g, cfg, &mut budget)?, |a, b| a < b))
}

/// Largest applicable lower bound and its name (first listed wins ties).
pub fn md_lower_bound(g: &Graph) -> Result<(usize, &'static str)> {
    Ok(tightest(&lower_bounds(g)?, |a, b| a > b))
}
