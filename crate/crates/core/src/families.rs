//! Named graph families and their explicit colorings.
//!
//! Vertex numbering conventions:
//!
//! * `path(n)`: `0 - 1 - ... - (n-1)`; `cycle(n)` adds `(n-1, 0)`. Cycle
//!   edge `e_i` joins `i-1` and `i` (with `e_n = (n-1, 0)`).
//! * `complete_bipartite(a, b)`: parts `0..a` and `a..a+b`.
//! * `complete_minus_edge(n)`: `K_n` without the edge `(n-2, n-1)`.
//! * `semi_wheel(n)`: hub `u = 0`, path vertices `v_i = i` for `1..=n`.
//! * `D(n)` / `F(n)`: the semi-wheel numbering plus one vertex
//!   `w_i = n + i - 1` subdividing each spoke `u v_i` (`2 <= i <= n-1` for
//!   `D`, `2 <= i <= n-2` for `F`).
//! * `H(n)`: `K_n` for `n <= 3`, `K_4^-` for 4, otherwise `D((n+1)/2)` (odd)
//!   or `F((n+2)/2)` (even).
//! * `H_nr(n, r)`: a copy of `H_m` keeps ids `0..m`; a path `q_1 ... q_L`
//!   has its ends identified with two vertices of `H_m` (`v_1` and the last
//!   path vertex for semi-wheel based `H_m`, vertices 0 and 1 otherwise) and
//!   its interior vertices numbered `m, m+1, ...` in path order.
//! * `crown(n)`: `v_j^1 = j - 1`, `v_j^2 = n + j - 1`.
//! * `clique_matching_clique(n)`: `v_i = i - 1`, `u_i = n/2 + i - 1`.
//! * `dense_block(n, r)`: `K_{b-1}` on `0..b-1` plus vertex `b-1` adjacent
//!   to 0 and 1, where `b = n - r + 1`; a pendant path `0, b, b+1, ..., n-1`.
//! * `clique_with_tail(n, r)`: `K_{n-r}` on `0..n-r` and a pendant path
//!   `0, n-r, ..., n-1` of `r` edges.

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    CompleteMinusEdge(usize),
    SemiWheel(usize),
    D(usize),
    F(usize),
    H(usize),
    Hnr(usize, usize),
    CliqueMatchingClique(usize),
    Crown(usize),
    DenseBlock(usize, usize),
    CliqueWithTail(usize, usize),
}

pub const FAMILY_NAMES: [&str; 14] = [
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "complete_minus_edge",
    "semi_wheel",
    "D",
    "F",
    "H",
    "H_nr",
    "clique_matching_clique",
    "crown",
    "dense_block",
    "clique_with_tail",
];

/// A built graph with names for distinguished vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Built {
    pub graph: Graph,
    pub labels: BTreeMap<String, usize>,
}

fn domain(msg: String) -> Error {
    Error::Domain(msg)
}

fn need(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(domain(what()))
    }
}

impl Family {
    pub fn parse(name: &str, params: &[usize]) -> Result<Family> {
        let arity = match name {
            "complete_bipartite" | "H_nr" | "dense_block" | "clique_with_tail" => 2,
            _ if FAMILY_NAMES.contains(&name) => 1,
            _ => {
                return Err(domain(format!(
                    "unknown family '{name}' (known: {})",
                    FAMILY_NAMES.join(", ")
                )))
            }
        };
        need(params.len() == arity, || {
            format!("family '{name}' takes {arity} parameter(s), got {}", params.len())
        })?;
        let (a, b) = (params[0], params.get(1).copied().unwrap_or(0));
        Ok(match name {
            "path" => Family::Path(a),
            "cycle" => Family::Cycle(a),
            "complete" => Family::Complete(a),
            "complete_bipartite" => Family::CompleteBipartite(a, b),
            "complete_minus_edge" => Family::CompleteMinusEdge(a),
            "semi_wheel" => Family::SemiWheel(a),
            "D" => Family::D(a),
            "F" => Family::F(a),
            "H" => Family::H(a),
            "H_nr" => Family::Hnr(a, b),
            "clique_matching_clique" => Family::CliqueMatchingClique(a),
            "crown" => Family::Crown(a),
            "dense_block" => Family::DenseBlock(a, b),
            _ => Family::CliqueWithTail(a, b),
        })
    }

    pub fn build(&self) -> Result<Built> {
        let plain = |graph: Graph| Built {
            graph,
            labels: BTreeMap::new(),
        };
        match *self {
            Family::Path(n) => path(n).map(plain),
            Family::Cycle(n) => cycle(n).map(plain),
            Family::Complete(n) => complete(n).map(plain),
            Family::CompleteBipartite(a, b) => complete_bipartite(a, b).map(plain),
            Family::CompleteMinusEdge(n) => complete_minus_edge(n).map(plain),
            Family::SemiWheel(n) => {
                need(n >= 2, || format!("semi_wheel needs n >= 2, got {n}"))?;
                Ok(subdivided_semi_wheel(n, 0))
            }
            Family::D(n) => {
                need(n >= 3, || format!("D needs n >= 3, got {n}"))?;
                Ok(subdivided_semi_wheel(n, n - 2))
            }
            Family::F(n) => {
                need(n >= 4, || format!("F needs n >= 4, got {n}"))?;
                Ok(subdivided_semi_wheel(n, n - 3))
            }
            Family::H(n) => h(n),
            Family::Hnr(n, r) => h_nr(n, r),
            Family::CliqueMatchingClique(n) => clique_matching_clique(n),
            Family::Crown(n) => crown(n),
            Family::DenseBlock(n, r) => dense_block(n, r).map(plain),
            Family::CliqueWithTail(n, r) => clique_with_tail(n, r).map(plain),
        }
    }
}

pub fn path(n: usize) -> Result<Graph> {
    need(n >= 1, || "path needs at least 1 vertex".into())?;
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    need(n >= 3, || format!("cycle needs n >= 3, got {n}"))?;
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

fn clique_edges(vertices: std::ops::Range<usize>) -> impl Iterator<Item = Edge> {
    let end = vertices.end;
    vertices.flat_map(move |u| (u + 1..end).map(move |v| (u, v)))
}

pub fn complete(n: usize) -> Result<Graph> {
    need(n >= 1, || "complete graph needs at least 1 vertex".into())?;
    Graph::new(n, clique_edges(0..n))
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    need(a >= 1 && b >= 1, || {
        format!("complete_bipartite needs both parts nonempty, got {a}, {b}")
    })?;
    Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

pub fn complete_minus_edge(n: usize) -> Result<Graph> {
    need(n >= 2, || format!("complete_minus_edge needs n >= 2, got {n}"))?;
    Graph::new(n, clique_edges(0..n).filter(|&e| e != (n - 2, n - 1)))
}

/// Semi-wheel on path `v_1..v_n` with the spokes `u v_2, ..., u v_{s+1}`
/// subdivided.
fn subdivided_semi_wheel(n: usize, s: usize) -> Built {
    let mut edges: Vec<Edge> = (1..n).map(|i| (i, i + 1)).collect();
    let mut labels = BTreeMap::new();
    labels.insert("u".to_string(), 0);
    for i in 1..=n {
        labels.insert(format!("v{i}"), i);
        if (2..=s + 1).contains(&i) {
            let w = n + i - 1;
            labels.insert(format!("w{i}"), w);
            edges.push((0, w));
            edges.push((w, i));
        } else {
            edges.push((0, i));
        }
    }
    let graph = Graph::new(n + 1 + s, edges).expect("valid by construction");
    Built { graph, labels }
}

/// The md-1 graph of maximum density family: `H_n`.
pub fn h(n: usize) -> Result<Built> {
    need(n >= 1, || "H needs n >= 1".into())?;
    Ok(match n {
        1..=3 => Built {
            graph: complete(n)?,
            labels: BTreeMap::new(),
        },
        4 => Built {
            graph: complete_minus_edge(4)?,
            labels: BTreeMap::new(),
        },
        _ if n % 2 == 1 => subdivided_semi_wheel(n.div_ceil(2), n.div_ceil(2) - 2),
        _ => subdivided_semi_wheel((n + 2) / 2, (n + 2) / 2 - 3),
    })
}

/// The two vertices of `H_m` a path is attached to in `H_{n,r}`.
pub fn h_attachment(m: usize) -> Result<(usize, usize)> {
    need(m >= 2, || format!("H_{m} has fewer than two vertices"))?;
    Ok(match m {
        2..=4 => (0, 1),
        _ if m % 2 == 1 => (1, m.div_ceil(2)),
        _ => (1, (m + 2) / 2),
    })
}

/// `I(P, G)`: a path with `len` edges whose ends are identified with the
/// distinct vertices `a` and `b` of `g`. Interior vertices get ids
/// `g.n(), g.n() + 1, ...` in path order from `a`.
pub fn attach_path(g: &Graph, a: usize, b: usize, len: usize) -> Result<Graph> {
    need(a != b && a < g.n() && b < g.n(), || {
        format!("attachment vertices {a}, {b} must be distinct vertices")
    })?;
    need(len >= 1, || "attached path needs at least one edge".into())?;
    need(len >= 2 || !g.has_edge(a, b), || {
        "a one-edge path between adjacent vertices is a parallel edge".into()
    })?;
    let n = g.n();
    let mut q = vec![a];
    q.extend(n..n + len - 1);
    q.push(b);
    let edges = g.edges().iter().copied().chain(q.windows(2).map(|w| (w[0], w[1])));
    Graph::new(n + len - 1, edges)
}

/// `(m, L)`: `H_{n,r}` is `H_m` with an attached path of `L` edges, or
/// `None` when `H_{n,r} = C_n`.
pub fn h_nr_parts(n: usize, r: usize) -> Result<Option<(usize, usize)>> {
    need(n >= 6 && r >= 3 && r <= n / 2, || {
        format!("H_nr needs n >= 6 and 3 <= r <= n/2, got n = {n}, r = {r}")
    })?;
    Ok(if n.is_multiple_of(2) {
        (2 * r < n).then_some((n - 2 * r + 1, 2 * r))
    } else {
        Some((n - 2 * r + 2, 2 * r - 1))
    })
}

pub fn h_nr(n: usize, r: usize) -> Result<Built> {
    match h_nr_parts(n, r)? {
        None => {
            let labels = (0..n).map(|i| (format!("q{}", i + 1), i)).collect();
            Ok(Built {
                graph: cycle(n)?,
                labels,
            })
        }
        Some((m, len)) => {
            let base = h(m)?;
            let (a, b) = h_attachment(m)?;
            let graph = attach_path(&base.graph, a, b, len)?;
            let mut labels: BTreeMap<String, usize> =
                base.labels.into_iter().map(|(k, v)| (format!("R.{k}"), v)).collect();
            labels.insert("q1".into(), a);
            for i in 2..=len {
                labels.insert(format!("q{i}"), m + i - 2);
            }
            labels.insert(format!("q{}", len + 1), b);
            Ok(Built { graph, labels })
        }
    }
}

/// The md = r coloring of `H_{n,r}`: path edge `e_i` gets `((i-1) mod r)+1`,
/// the `H_m` part gets 1 (even n) or r (odd n).
pub fn h_nr_coloring(n: usize, r: usize) -> Result<EdgeColoring> {
    let built = h_nr(n, r)?;
    let g = &built.graph;
    let Some((m, len)) = h_nr_parts(n, r)? else {
        return cycle_md_coloring(n);
    };
    let rest = if n.is_multiple_of(2) { 1 } else { r };
    let mut colors = vec![rest; g.m()];
    let q = |i: usize| built.labels[&format!("q{i}")];
    for i in 1..=len {
        colors[g.edge_index(q(i), q(i + 1)).expect("path edge")] = (i - 1) % r + 1;
    }
    debug_assert!(m >= 3);
    EdgeColoring::new(g, colors)
}

/// `C_n` colored `e_i -> ((i-1) mod floor(n/2)) + 1`.
pub fn cycle_md_coloring(n: usize) -> Result<EdgeColoring> {
    let g = cycle(n)?;
    let k = n / 2;
    let mut colors = vec![0; n];
    for i in 1..=n {
        let e = g.edge_index(i - 1, i % n).expect("cycle edge");
        colors[e] = (i - 1) % k + 1;
    }
    EdgeColoring::new(&g, colors)
}

/// Two disjoint `K_{n/2}` joined by a perfect matching `u_i v_i`.
pub fn clique_matching_clique(n: usize) -> Result<Built> {
    need(n >= 4 && n.is_multiple_of(2), || {
        format!("clique_matching_clique needs even n >= 4, got {n}")
    })?;
    let h = n / 2;
    let edges = clique_edges(0..h)
        .chain(clique_edges(h..n))
        .chain((0..h).map(|i| (i, h + i)));
    let mut labels = BTreeMap::new();
    for i in 1..=h {
        labels.insert(format!("v{i}"), i - 1);
        labels.insert(format!("u{i}"), h + i - 1);
    }
    Ok(Built {
        graph: Graph::new(n, edges)?,
        labels,
    })
}

/// Bipartite `G_{2,n}`: `v_i^s v_j^t` is an edge iff `i != j` and `s != t`.
pub fn crown(n: usize) -> Result<Built> {
    need(n >= 1, || "crown needs n >= 1".into())?;
    let edges = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, n + j)));
    let mut labels = BTreeMap::new();
    for j in 1..=n {
        labels.insert(format!("v{j}^1"), j - 1);
        labels.insert(format!("v{j}^2"), n + j - 1);
    }
    Ok(Built {
        graph: Graph::new(2 * n, edges)?,
        labels,
    })
}

fn tail(from: usize, first: usize, last: usize) -> impl Iterator<Item = Edge> {
    std::iter::once(from).chain(first..=last).zip(first..=last)
}

/// `r - 1` bridges and one block on `n - r + 1` vertices with
/// `C(n - r, 2) + 2` edges; `f(n, r)` edges and md `r`.
pub fn dense_block(n: usize, r: usize) -> Result<Graph> {
    need(n >= 3 && r >= 1 && r <= n - 2, || {
        format!("dense_block needs 1 <= r <= n - 2, got n = {n}, r = {r}")
    })?;
    let b = n - r + 1;
    let edges = clique_edges(0..b - 1)
        .chain([(0, b - 1), (1, b - 1)])
        .chain(tail(0, b, n - 1));
    Graph::new(n, edges)
}

/// `K_{n-r}` with a pendant path of `r` edges; `f(n, r) - 1` edges and
/// md `r + 1` when `r <= n - 2`.
pub fn clique_with_tail(n: usize, r: usize) -> Result<Graph> {
    need(r >= 1 && r < n, || {
        format!("clique_with_tail needs 1 <= r <= n - 1, got n = {n}, r = {r}")
    })?;
    Graph::new(n, clique_edges(0..n - r).chain(tail(0, n - r, n - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_md_coloring;
    use crate::graph::is_isomorphic;

    fn ceil_three_halves(x: usize) -> usize {
        (3 * x).div_ceil(2)
    }

    #[test]
    fn h_examples() {
        let h4 = h(4).unwrap().graph;
        assert_eq!((h4.n(), h4.m()), (4, 5));
        let h7 = h(7).unwrap().graph;
        assert_eq!((h7.n(), h7.m()), (7, 9));
        assert!(is_isomorphic(&h(5).unwrap().graph, &complete_bipartite(2, 3).unwrap()));
        for n in 3..=20 {
            let g = h(n).unwrap().graph;
            assert_eq!(g.n(), n);
            assert_eq!(g.m(), ceil_three_halves(n - 1), "H_{n}");
            assert!(g.is_connected());
        }
    }

    #[test]
    fn h_nr_sizes() {
        assert_eq!(h_nr(10, 3).unwrap().graph.m(), 12);
        for n in 6..=20 {
            for r in 3..=n / 2 {
                let g = h_nr(n, r).unwrap().graph;
                assert_eq!(g.n(), n);
                let mu = if n % 2 == 0 {
                    ceil_three_halves(n - 2 * r) + 2 * r
                } else {
                    ceil_three_halves(n - 2 * r + 1) + 2 * r - 1
                };
                assert_eq!(g.m(), mu, "H_{n},{r}");
            }
        }
        assert!(h_nr(6, 2).is_err());
        assert!(h_nr(9, 5).is_err());
    }

    #[test]
    fn h_nr_colorings_are_md() {
        for (n, r) in [(12, 3), (11, 4), (8, 4), (9, 3), (10, 4)] {
            let g = h_nr(n, r).unwrap().graph;
            let c = h_nr_coloring(n, r).unwrap();
            assert_eq!(c.k(), r);
            assert!(is_md_coloring(&g, &c).unwrap().0, "H_{n},{r}");
        }
        assert_eq!(h_nr_coloring(8, 4).unwrap(), cycle_md_coloring(8).unwrap());
        // Odd case: the H_m part carries the last color.
        let built = h_nr(11, 4).unwrap();
        let c = h_nr_coloring(11, 4).unwrap();
        let e = built.graph.edge_index(0, 1).unwrap();
        assert_eq!(c.color(e), 4);
    }

    #[test]
    fn cycle_colorings() {
        let c4 = cycle(4).unwrap();
        let col = cycle_md_coloring(4).unwrap();
        // Edge order (0,1), (0,3), (1,2), (2,3); around the cycle 1, 2, 1, 2.
        assert_eq!(col.colors(), &[1, 2, 2, 1]);
        assert!(is_md_coloring(&c4, &col).unwrap().0);
        for n in 3..=12 {
            let c = cycle_md_coloring(n).unwrap();
            assert_eq!(c.k(), n / 2);
            assert!(is_md_coloring(&cycle(n).unwrap(), &c).unwrap().0);
        }
        assert!(cycle_md_coloring(2).is_err());
    }

    #[test]
    fn semi_wheel_shapes() {
        let d4 = Family::D(4).build().unwrap();
        assert_eq!((d4.graph.n(), d4.graph.m()), (7, 9));
        assert_eq!(d4.labels["w2"], 5);
        let f4 = Family::F(4).build().unwrap();
        assert_eq!((f4.graph.n(), f4.graph.m()), (6, 8));
        let sw = Family::SemiWheel(4).build().unwrap().graph;
        assert_eq!((sw.n(), sw.m()), (5, 7));
    }

    #[test]
    fn min_degree_sharpness_graph() {
        for n in (4..=12).step_by(2) {
            let g = clique_matching_clique(n).unwrap().graph;
            assert_eq!(g.min_degree(), n / 2);
        }
        assert!(clique_matching_clique(7).is_err());
    }

    #[test]
    fn threshold_witness_sizes() {
        assert_eq!(dense_block(7, 2).unwrap().m(), 13);
        assert_eq!(clique_with_tail(7, 2).unwrap().m(), 12);
        assert_eq!(dense_block(5, 1).unwrap().m(), 8);
        assert!(dense_block(5, 4).is_err());
    }

    #[test]
    fn parse_errors_name_the_problem() {
        assert!(matches!(Family::parse("H", &[7]), Ok(Family::H(7))));
        assert!(Family::parse("nope", &[1]).is_err());
        assert!(Family::parse("H_nr", &[10]).is_err());
        assert!(Family::parse("cycle", &[2]).unwrap().build().is_err());
    }
}
