use crate::error::{Error, Result};
use crate::graph::{canonical_form, to_graph6, Graph};
use std::collections::HashSet;

/// Largest order the built-in enumeration accepts.
pub const ENUMERATION_CAP: usize = 8;

/// One graph per isomorphism class on `n` vertices, built level by level:
/// every class with `m + 1` edges arises by adding an edge to a class with
/// `m` edges, and canonical forms remove duplicates. Sorted by edge count,
/// then graph6.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > ENUMERATION_CAP {
        return Err(Error::SizeCap {
            what: "enumeration order",
            value: n,
            cap: ENUMERATION_CAP,
        });
    }
    let mut level = vec![Graph::empty(n)?];
    let mut out = Vec::new();
    while !level.is_empty() {
        let mut next = HashSet::new();
        for g in &level {
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        let h = Graph::new(n, g.edges().iter().copied().chain([(u, v)]))?;
                        next.insert(canonical_form(&h));
                    }
                }
            }
        }
        let mut sorted: Vec<(String, Graph)> = level.into_iter().map(|g| (to_graph6(&g).unwrap(), g)).collect();
        sorted.sort();
        out.extend(sorted.into_iter().map(|(_, g)| g));
        level = next.into_iter().collect();
    }
    Ok(out)
}

/// Connected graphs on `n` vertices, one per isomorphism class.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::Domain("enumeration needs n >= 1".into()));
    }
    Ok(enumerate_graphs(n)?.into_iter().filter(Graph::is_connected).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        // Graphs and connected graphs on n unlabeled vertices.
        let all = [1, 2, 4, 11, 34, 156];
        let connected = [1, 1, 2, 6, 21, 112];
        for n in 1..=6 {
            assert_eq!(enumerate_graphs(n).unwrap().len(), all[n - 1], "n = {n}");
            assert_eq!(enumerate_connected(n).unwrap().len(), connected[n - 1], "n = {n}");
        }
        assert!(enumerate_graphs(9).is_err());
    }

    #[test]
    fn ordered_and_distinct() {
        let gs = enumerate_connected(5).unwrap();
        assert!(gs.windows(2).all(|w| w[0].m() <= w[1].m()));
        for (i, a) in gs.iter().enumerate() {
            for b in &gs[i + 1..] {
                assert!(!crate::graph::is_isomorphic(a, b));
            }
        }
    }
}
