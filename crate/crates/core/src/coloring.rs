//! Edge-colorings and the MD-coloring predicate.

use crate::analysis::matching_cut_side;
use crate::error::{Error, Result};
use crate::graph::{component_masks, from_graph6, to_graph6, Graph};
use serde::{Deserialize, Serialize};
use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};

/// A color for every edge of one particular graph, aligned with the graph's
/// sorted edge list. Colors are positive integers; `k` counts distinct ones.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    n: usize,
    fingerprint: u64,
    colors: Vec<usize>,
    k: usize,
}

fn fingerprint(g: &Graph) -> u64 {
    let mut h = DefaultHasher::new();
    g.n().hash(&mut h);
    g.edges().hash(&mut h);
    h.finish()
}

impl EdgeColoring {
    pub fn new(g: &Graph, colors: Vec<usize>) -> Result<EdgeColoring> {
        if colors.len() != g.m() {
            return Err(Error::ColoringMismatch(format!(
                "{} colors for {} edges",
                colors.len(),
                g.m()
            )));
        }
        if let Some(i) = colors.iter().position(|&c| c == 0) {
            return Err(Error::ColoringMismatch(format!(
                "edge {i} has color 0; colors start at 1"
            )));
        }
        let mut distinct = colors.clone();
        distinct.sort_unstable();
        distinct.dedup();
        Ok(EdgeColoring {
            n: g.n(),
            fingerprint: fingerprint(g),
            k: distinct.len(),
            colors,
        })
    }

    /// Every edge gets color 1.
    pub fn trivial(g: &Graph) -> EdgeColoring {
        EdgeColoring::new(g, vec![1; g.m()]).expect("valid by construction")
    }

    /// Every edge gets its own color, in edge order.
    pub fn rainbow(g: &Graph) -> EdgeColoring {
        EdgeColoring::new(g, (1..=g.m()).collect()).expect("valid by construction")
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, edge: usize) -> usize {
        self.colors[edge]
    }

    /// Number of distinct colors.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_for(&self, g: &Graph) -> bool {
        self.n == g.n() && self.colors.len() == g.m() && self.fingerprint == fingerprint(g)
    }

    pub fn check_graph(&self, g: &Graph) -> Result<()> {
        if self.is_for(g) {
            Ok(())
        } else {
            Err(Error::ColoringMismatch(
                "coloring was built for a different graph".into(),
            ))
        }
    }

    /// Edge indices of each color, keyed by color.
    pub fn classes(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut out: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (e, &c) in self.colors.iter().enumerate() {
            out.entry(c).or_default().push(e);
        }
        out
    }

    /// Renumbers colors 1..k by first occurrence in edge order.
    pub fn normalize(&self) -> EdgeColoring {
        let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                let next = seen.len() + 1;
                *seen.entry(c).or_insert(next)
            })
            .collect();
        EdgeColoring { colors, ..self.clone() }
    }

    /// Ranks the colors by value and repaints every color of rank `r` or
    /// higher with rank `r`. The result uses colors 1..r.
    pub fn merge_to_k(&self, r: usize) -> Result<EdgeColoring> {
        if r < 1 || r > self.k {
            return Err(Error::Domain(format!("merge target {r} outside 1..={}", self.k)));
        }
        let mut distinct = self.colors.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let colors = self
            .colors
            .iter()
            .map(|c| (distinct.binary_search(c).unwrap() + 1).min(r))
            .collect();
        Ok(EdgeColoring {
            colors,
            k: r,
            ..self.clone()
        })
    }

    /// Shifts every color up by `offset`.
    pub fn offset(&self, offset: usize) -> EdgeColoring {
        EdgeColoring {
            colors: self.colors.iter().map(|c| c + offset).collect(),
            ..self.clone()
        }
    }

    pub fn to_json(&self, g: &Graph) -> Result<ColoringJson> {
        self.check_graph(g)?;
        Ok(ColoringJson {
            graph6: to_graph6(g)?,
            colors: self.colors.clone(),
        })
    }
}

/// Wire format: `{"graph6": "...", "colors": [c_1, ..., c_m]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringJson {
    pub graph6: String,
    pub colors: Vec<usize>,
}

impl ColoringJson {
    pub fn parse(text: &str) -> Result<(Graph, EdgeColoring)> {
        let raw: ColoringJson =
            serde_json::from_str(text).map_err(|e| Error::ColoringMismatch(format!("invalid coloring JSON: {e}")))?;
        let g = from_graph6(&raw.graph6)?;
        let c = EdgeColoring::new(&g, raw.colors)?;
        Ok((g, c))
    }
}

/// For each vertex pair, the smallest color whose removal separates it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationCertificate {
    n: usize,
    witness: Vec<Option<usize>>,
}

impl SeparationCertificate {
    fn slot(n: usize, u: usize, v: usize) -> usize {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        // Row-major index into the strict upper triangle.
        u * n - u * (u + 1) / 2 + (v - u - 1)
    }

    pub fn witness(&self, u: usize, v: usize) -> Option<usize> {
        assert!(u != v && u < self.n && v < self.n);
        self.witness[Self::slot(self.n, u, v)]
    }

    /// `(u, v, witness)` for every pair with u < v.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, Option<usize>)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v, self.witness[Self::slot(n, u, v)])))
    }

    pub fn unseparated(&self) -> Vec<(usize, usize)> {
        self.pairs().filter(|p| p.2.is_none()).map(|(u, v, _)| (u, v)).collect()
    }
}

/// Component masks of `g - E_c` for each color `c` in `palette`.
fn components_without(g: &Graph, colors: &[usize], palette: &[usize]) -> Vec<Vec<u64>> {
    palette
        .iter()
        .map(|&c| {
            let mut adj = g.adjacency_masks().to_vec();
            for (e, &(u, v)) in g.edges().iter().enumerate() {
                if colors[e] == c {
                    adj[u] &= !(1 << v);
                    adj[v] &= !(1 << u);
                }
            }
            component_masks(&adj, g.all_vertices_mask())
        })
        .collect()
}

fn palette(colors: &[usize]) -> Vec<usize> {
    let mut p = colors.to_vec();
    p.sort_unstable();
    p.dedup();
    p
}

/// Full check with a per-pair certificate.
pub fn is_md_coloring(g: &Graph, c: &EdgeColoring) -> Result<(bool, SeparationCertificate)> {
    c.check_graph(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let pal = palette(c.colors());
    let comps = components_without(g, c.colors(), &pal);
    let mut witness = vec![None; n * n.saturating_sub(1) / 2];
    for (color, masks) in pal.iter().zip(&comps) {
        for &mask in masks {
            for u in crate::graph::bits(mask) {
                // Pairs (u, v) with v outside u's component are separated.
                for v in crate::graph::bits(g.all_vertices_mask() & !mask) {
                    if u < v {
                        let w = &mut witness[SeparationCertificate::slot(n, u, v)];
                        if w.is_none() {
                            *w = Some(*color);
                        }
                    }
                }
            }
        }
    }
    let cert = SeparationCertificate { n, witness };
    let ok = cert.witness.iter().all(Option::is_some);
    Ok((ok, cert))
}

/// Boolean-only check on a raw color vector aligned with `g.edges()`.
/// Assumes `g` is connected; no validation.
pub fn md_check(g: &Graph, colors: &[usize]) -> bool {
    let n = g.n();
    let all = g.all_vertices_mask();
    let mut together = vec![all; n];
    for masks in components_without(g, colors, &palette(colors)) {
        for mask in masks {
            for v in crate::graph::bits(mask) {
                together[v] &= mask;
            }
        }
    }
    (0..n).all(|v| together[v] == 1 << v)
}

/// Color the matching cut `cut` (edge indices) 1 and everything else 2.
pub fn matching_cut_coloring(g: &Graph, cut: &[usize]) -> Result<EdgeColoring> {
    matching_cut_side(g, cut)?;
    let mut colors = vec![2; g.m()];
    for &e in cut {
        colors[e] = 1;
    }
    EdgeColoring::new(g, colors)
}
