//! Cartesian, strong, lexicographic and tensor products.
//!
//! The product vertex `(u, v)` gets id `u * h.n() + v`.

use crate::coloring::{md_check, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{Graph, OddGirth};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductKind {
    Cartesian,
    Strong,
    Lexicographic,
    Tensor,
}

impl ProductKind {
    pub const ALL: [ProductKind; 4] = [
        ProductKind::Cartesian,
        ProductKind::Strong,
        ProductKind::Lexicographic,
        ProductKind::Tensor,
    ];
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Strong => "strong",
            ProductKind::Lexicographic => "lexicographic",
            ProductKind::Tensor => "tensor",
        })
    }
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ProductKind::ALL
            .into_iter()
            .find(|k| k.to_string() == s)
            .ok_or_else(|| Error::Domain(format!("unknown product kind '{s}'")))
    }
}

fn pair_id(h: &Graph, u: usize, v: usize) -> usize {
    u * h.n() + v
}

pub fn product(g: &Graph, h: &Graph, kind: ProductKind) -> Result<Graph> {
    let (gn, hn) = (g.n(), h.n());
    if gn * hn > crate::graph::MAX_VERTICES {
        return Err(Error::TooLarge {
            n: gn * hn,
            max: crate::graph::MAX_VERTICES,
        });
    }
    let mut edges = Vec::new();
    for u in 0..gn {
        for u2 in 0..gn {
            for v in 0..hn {
                for v2 in 0..hn {
                    let (a, b) = (pair_id(h, u, v), pair_id(h, u2, v2));
                    if a >= b {
                        continue;
                    }
                    let ge = g.has_edge(u, u2);
                    let he = h.has_edge(v, v2);
                    let adjacent = match kind {
                        ProductKind::Cartesian => (ge && v == v2) || (u == u2 && he),
                        ProductKind::Strong => (ge && v == v2) || (u == u2 && he) || (ge && he),
                        ProductKind::Lexicographic => ge || (u == u2 && he),
                        ProductKind::Tensor => ge && he,
                    };
                    if adjacent {
                        edges.push((a, b));
                    }
                }
            }
        }
    }
    Graph::new(gn * hn, edges)
}

/// The additive coloring of `G □ H`: an edge inside a `G`-fiber takes the
/// color of its projection in `cg`; an edge inside an `H`-fiber takes the
/// color of its projection in `ch`, shifted past the colors of `cg`.
pub fn cartesian_md_coloring(g: &Graph, cg: &EdgeColoring, h: &Graph, ch: &EdgeColoring) -> Result<EdgeColoring> {
    for (graph, c, name) in [(g, cg, "first"), (h, ch, "second")] {
        c.check_graph(graph)?;
        if !md_check(graph, c.colors()) {
            return Err(Error::NotMdColoring(format!("coloring of the {name} factor")));
        }
    }
    let cg = cg.normalize();
    let ch = ch.normalize().offset(cg.k());
    let p = product(g, h, ProductKind::Cartesian)?;
    let hn = h.n();
    let colors = p
        .edges()
        .iter()
        .map(|&(a, b)| {
            let ((u, v), (u2, v2)) = ((a / hn, a % hn), (b / hn, b % hn));
            if v == v2 {
                cg.color(g.edge_index(u, u2).expect("fiber edge"))
            } else {
                ch.color(h.edge_index(v, v2).expect("fiber edge"))
            }
        })
        .collect();
    EdgeColoring::new(&p, colors)
}

/// For connected factors with at least one edge each: the tensor product is
/// connected iff some factor is not bipartite.
pub fn tensor_connected(g: &Graph, h: &Graph) -> Result<bool> {
    for f in [g, h] {
        if !f.is_connected() || f.m() == 0 {
            return Err(Error::Precondition(
                "tensor connectivity needs connected factors with an edge".into(),
            ));
        }
    }
    Ok(!g.is_bipartite() || !h.is_bipartite())
}

/// `min(odd girth of g, odd girth of h)`, the md upper bound for tensor
/// products of pendent-free connected graphs, one of them non-bipartite.
pub fn tensor_md_upper(g: &Graph, h: &Graph) -> Result<usize> {
    for (f, name) in [(g, "first"), (h, "second")] {
        if !f.is_connected() || f.m() == 0 {
            return Err(Error::Precondition(format!(
                "{name} factor must be connected with an edge"
            )));
        }
        if f.has_pendent_edge() {
            return Err(Error::Precondition(format!("{name} factor has a pendent edge")));
        }
    }
    match g.odd_girth().min(h.odd_girth()) {
        OddGirth::Finite(k) => Ok(k),
        OddGirth::Infinite => Err(Error::Precondition("both factors are bipartite".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path};
    use crate::graph::is_isomorphic;

    #[test]
    fn small_products() {
        let k2 = complete(2).unwrap();
        assert!(is_isomorphic(
            &product(&k2, &k2, ProductKind::Cartesian).unwrap(),
            &cycle(4).unwrap()
        ));
        assert_eq!(product(&k2, &k2, ProductKind::Strong).unwrap(), complete(4).unwrap());
        let t = product(&cycle(5).unwrap(), &k2, ProductKind::Tensor).unwrap();
        assert!(is_isomorphic(&t, &cycle(10).unwrap()));
        let two_edges = product(&k2, &k2, ProductKind::Tensor).unwrap();
        assert_eq!(two_edges.components().len(), 2);
    }

    #[test]
    fn strong_is_cartesian_plus_tensor() {
        let gs = [
            path(3).unwrap(),
            cycle(4).unwrap(),
            complete(3).unwrap(),
            cycle(5).unwrap(),
        ];
        for g in &gs {
            for h in &gs {
                let s = product(g, h, ProductKind::Strong).unwrap();
                let c = product(g, h, ProductKind::Cartesian).unwrap();
                let t = product(g, h, ProductKind::Tensor).unwrap();
                let l = product(g, h, ProductKind::Lexicographic).unwrap();
                assert_eq!(s.m(), c.m() + t.m());
                assert!(s.edges().iter().all(|&(a, b)| l.has_edge(a, b)));
            }
        }
    }

    #[test]
    fn cartesian_coloring_examples() {
        let k2 = complete(2).unwrap();
        let t = EdgeColoring::trivial(&k2);
        let c = cartesian_md_coloring(&k2, &t, &k2, &t).unwrap();
        assert_eq!(c.k(), 2);
        let c4 = cycle(4).unwrap();
        let alt = crate::families::cycle_md_coloring(4).unwrap();
        let c = cartesian_md_coloring(&c4, &alt, &k2, &t).unwrap();
        let p = product(&c4, &k2, ProductKind::Cartesian).unwrap();
        assert_eq!(c.k(), 3);
        assert!(md_check(&p, c.colors()));
        let bad = EdgeColoring::new(&c4, vec![1, 1, 1, 2]).unwrap();
        assert!(cartesian_md_coloring(&c4, &bad, &k2, &t).is_err());
    }

    #[test]
    fn tensor_predicates() {
        let (c3, c4, c6, k2) = (
            cycle(3).unwrap(),
            cycle(4).unwrap(),
            cycle(6).unwrap(),
            complete(2).unwrap(),
        );
        assert!(!tensor_connected(&c4, &c6).unwrap());
        assert!(tensor_connected(&c3, &k2).unwrap());
        assert!(!tensor_connected(&k2, &k2).unwrap());
        assert_eq!(tensor_md_upper(&c3, &c4).unwrap(), 3);
        assert_eq!(tensor_md_upper(&cycle(5).unwrap(), &cycle(5).unwrap()).unwrap(), 5);
        assert_eq!(tensor_md_upper(&c3, &c6).unwrap(), 3);
        assert!(tensor_md_upper(&c4, &c6).is_err());
        assert!(tensor_md_upper(&c3, &path(3).unwrap()).is_err());
    }

    #[test]
    fn kind_names_round_trip() {
        for k in ProductKind::ALL {
            assert_eq!(k.to_string().parse::<ProductKind>().unwrap(), k);
        }
        assert!("box".parse::<ProductKind>().is_err());
    }
}
