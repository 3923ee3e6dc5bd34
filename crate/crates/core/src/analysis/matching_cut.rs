use crate::error::{Error, Result};
use crate::graph::{bits, reach, Graph};
use std::collections::BTreeSet;

/// Largest order the bipartition sweep accepts by default.
pub const MATCHING_CUT_CAP: usize = 16;

/// Matching cuts of a connected graph as sorted edge-index lists, ordered by
/// size then lexicographically.
///
/// Sweeps every bipartition `(S, V - S)` with `0 ∈ S`; `δ(S)` is a matching
/// cut when no vertex has two crossing edges. With `minimal_only`, only
/// bonds are kept (both sides induce connected subgraphs).
pub fn find_matching_cuts(g: &Graph, minimal_only: bool) -> Result<Vec<Vec<usize>>> {
    find_matching_cuts_capped(g, minimal_only, MATCHING_CUT_CAP)
}

pub fn find_matching_cuts_capped(g: &Graph, minimal_only: bool, cap: usize) -> Result<Vec<Vec<usize>>> {
    let mut found = BTreeSet::new();
    sweep(g, minimal_only, cap, |cut| {
        found.insert((cut.len(), cut));
        false
    })?;
    Ok(found.into_iter().map(|(_, c)| c).collect())
}

/// Early-exit existence test.
pub fn has_matching_cut(g: &Graph) -> Result<bool> {
    let mut any = false;
    sweep(g, false, MATCHING_CUT_CAP, |_| {
        any = true;
        true
    })?;
    Ok(any)
}

fn sweep(g: &Graph, minimal_only: bool, cap: usize, mut visit: impl FnMut(Vec<usize>) -> bool) -> Result<()> {
    let n = g.n();
    if n > cap {
        return Err(Error::SizeCap {
            what: "graph order for matching-cut search",
            value: n,
            cap,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if n < 2 {
        return Ok(());
    }
    let all = g.all_vertices_mask();
    let adj = g.adjacency_masks();
    // S always contains vertex 0; the other n - 1 vertices are free.
    for free in 0..(1u64 << (n - 1)) - 1 {
        let s = free << 1 | 1;
        let t = all & !s;
        let matching =
            bits(s).all(|v| (adj[v] & t).count_ones() <= 1) && bits(t).all(|v| (adj[v] & s).count_ones() <= 1);
        if !matching {
            continue;
        }
        if minimal_only {
            let s0 = s.trailing_zeros() as usize;
            let t0 = t.trailing_zeros() as usize;
            if reach(adj, s0, s) != s || reach(adj, t0, t) != t {
                continue;
            }
        }
        let mut cut: Vec<usize> = bits(s)
            .flat_map(|v| bits(adj[v] & t).map(move |w| (v, w)))
            .map(|(v, w)| g.edge_index(v, w).unwrap())
            .collect();
        cut.sort_unstable();
        if visit(cut) {
            break;
        }
    }
    Ok(())
}

/// Checks that `cut` (edge indices) is a matching and equals δ(S) for some
/// vertex set S. Returns one such S as a mask.
pub fn matching_cut_side(g: &Graph, cut: &[usize]) -> Result<u64> {
    let mut in_cut = vec![false; g.m()];
    let mut touched = 0u64;
    for &e in cut {
        if e >= g.m() {
            return Err(Error::EdgeIndexOutOfRange { index: e, m: g.m() });
        }
        let (u, v) = g.edge(e);
        if touched >> u & 1 == 1 || touched >> v & 1 == 1 {
            return Err(Error::NotMatchingCut(format!("edges share vertex in ({u}, {v})")));
        }
        touched |= 1 << u | 1 << v;
        in_cut[e] = true;
    }
    if cut.is_empty() {
        return Err(Error::NotMatchingCut("empty edge set".into()));
    }
    // Sides come from 2-coloring the components of G - M along M.
    let mut rest = vec![0u64; g.n()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if !in_cut[e] {
            rest[u] |= 1 << v;
            rest[v] |= 1 << u;
        }
    }
    let comps = crate::graph::component_masks(&rest, g.all_vertices_mask());
    let comp_of = |v: usize| comps.iter().position(|&c| c >> v & 1 == 1).unwrap();
    let mut side = vec![u8::MAX; comps.len()];
    for start in 0..comps.len() {
        if side[start] != u8::MAX {
            continue;
        }
        side[start] = 0;
        let mut stack = vec![start];
        while let Some(c) = stack.pop() {
            for &e in cut {
                let (u, v) = g.edge(e);
                let (cu, cv) = (comp_of(u), comp_of(v));
                if cu == cv {
                    return Err(Error::NotMatchingCut(format!("({u}, {v}) does not cross the cut")));
                }
                for (a, b) in [(cu, cv), (cv, cu)] {
                    if a == c {
                        if side[b] == u8::MAX {
                            side[b] = 1 - side[a];
                            stack.push(b);
                        } else if side[b] == side[a] {
                            return Err(Error::NotMatchingCut("edge set is not an edge cut".into()));
                        }
                    }
                }
            }
        }
    }
    Ok(comps
        .iter()
        .zip(&side)
        .filter(|(_, &s)| s == 0)
        .fold(0, |acc, (&c, _)| acc | c))
}
