//! Simple undirected graphs on at most 62 vertices.
//!
//! A [`Graph`] is immutable once built. Its edge list is kept in canonical
//! form (each edge as `(u, v)` with `u < v`, sorted, no duplicates), so two
//! graphs compare equal exactly when they have the same order and edge list.
//! Adjacency is stored as one `u64` bitmask per vertex.

mod canon;
mod graph6;

pub use canon::{canonical_form, is_isomorphic};
pub use graph6::{from_graph6, to_graph6};

use crate::error::{Error, Result};
use crate::util::DisjointSet;
use std::collections::VecDeque;
use std::fmt;

/// Largest supported order (the short graph6 form).
pub const MAX_VERTICES: usize = 62;

pub type Edge = (usize, usize);

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<u64>,
}

/// Length of a shortest odd cycle; `Infinite` for bipartite graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OddGirth {
    Finite(usize),
    Infinite,
}

/// Where each old vertex went after a deletion or contraction.
///
/// Deleted vertices have no image. Images always cover `0..new_len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    images: Vec<Option<usize>>,
    new_len: usize,
}

impl VertexMap {
    pub fn identity(n: usize) -> Self {
        VertexMap {
            images: (0..n).map(Some).collect(),
            new_len: n,
        }
    }

    pub fn image(&self, v: usize) -> Option<usize> {
        self.images.get(v).copied().flatten()
    }

    pub fn images(&self) -> &[Option<usize>] {
        &self.images
    }

    pub fn old_len(&self) -> usize {
        self.images.len()
    }

    pub fn new_len(&self) -> usize {
        self.new_len
    }

    /// Old vertices mapped onto `w`.
    pub fn preimage(&self, w: usize) -> Vec<usize> {
        (0..self.images.len()).filter(|&v| self.images[v] == Some(w)).collect()
    }
}

impl Graph {
    /// Builds a graph from any edge list. Edge orientation and order do not
    /// matter and repeated edges are merged; loops are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = Edge>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, max: MAX_VERTICES });
        }
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { v, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        list.dedup();
        let mut adj = vec![0u64; n];
        for &(u, v) in &list {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, edges: list, adj })
    }

    pub fn empty(n: usize) -> Result<Graph> {
        Graph::new(n, std::iter::empty())
    }

    pub fn from_adjacency(adj: &[u64]) -> Result<Graph> {
        let n = adj.len();
        let mut edges = Vec::new();
        for (u, &row) in adj.iter().enumerate() {
            for v in bits(row) {
                if v > u {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Edge {
        self.edges[index]
    }

    /// Neighbor bitmask of `v`.
    pub fn adjacency(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacency_masks(&self) -> &[u64] {
        &self.adj
    }

    pub fn all_vertices_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Position of edge `uv` in the canonical edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { v, n: self.n })
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].count_ones() as usize)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|a| a.count_ones() as usize).collect()
    }

    /// Minimum degree; 0 for the empty graph on no vertices.
    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(bits(self.adj[u] & self.adj[v]).collect())
    }

    /// True if some vertex has degree 1.
    pub fn has_pendent_edge(&self) -> bool {
        self.adj.iter().any(|a| a.count_ones() == 1)
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        component_masks(&self.adj, self.all_vertices_mask())
            .into_iter()
            .map(|mask| bits(mask).collect())
            .collect()
    }

    /// The graph on no vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || reach(&self.adj, 0, self.all_vertices_mask()) == self.all_vertices_mask()
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() == self.n - 1 && self.is_connected()
    }

    /// Connected with exactly one cycle.
    pub fn is_unicyclic(&self) -> bool {
        self.n >= 3 && self.m() == self.n && self.is_connected()
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// A proper 2-coloring of the vertices, if one exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) {
                    if side[y] == u8::MAX {
                        side[y] = 1 - side[x];
                        queue.push_back(y);
                    } else if side[y] == side[x] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn odd_girth(&self) -> OddGirth {
        // A BFS rooted on a shortest odd cycle sees it close through an
        // edge joining two vertices at equal depth.
        let mut best = usize::MAX;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                if 2 * dist[x] + 1 >= best {
                    break;
                }
                for y in self.neighbors(x) {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    } else if dist[y] == dist[x] {
                        best = best.min(2 * dist[x] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            OddGirth::Infinite
        } else {
            OddGirth::Finite(best)
        }
    }

    /// Removes `v` and relabels the survivors in order.
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, VertexMap)> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.n).filter(|&x| x != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Removes the given edges, keeping every vertex.
    pub fn delete_edges(&self, remove: &[Edge]) -> Result<Graph> {
        let mut drop = vec![false; self.m()];
        for &(u, v) in remove {
            let i = self.edge_index(u, v).ok_or(Error::NotAnEdge(u, v))?;
            drop[i] = true;
        }
        let edges = self.edges.iter().zip(&drop).filter(|(_, &d)| !d).map(|(&e, _)| e);
        Graph::new(self.n, edges)
    }

    /// Subgraph induced by `vertices`, relabeled in increasing order of the
    /// old ids.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, VertexMap)> {
        let mut images = vec![None; self.n];
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for (i, &v) in sorted.iter().enumerate() {
            self.check_vertex(v)?;
            images[v] = Some(i);
        }
        let edges = self.edges.iter().filter_map(|&(u, v)| Some((images[u]?, images[v]?)));
        let g = Graph::new(sorted.len(), edges)?;
        Ok((
            g,
            VertexMap {
                images,
                new_len: sorted.len(),
            },
        ))
    }

    /// Spanning subgraph keeping only the edges with the given indices.
    pub fn spanning_subgraph(&self, edge_indices: &[usize]) -> Result<Graph> {
        let mut edges = Vec::with_capacity(edge_indices.len());
        for &i in edge_indices {
            if i >= self.m() {
                return Err(Error::EdgeIndexOutOfRange { index: i, m: self.m() });
            }
            edges.push(self.edges[i]);
        }
        Graph::new(self.n, edges)
    }

    /// Contracts every edge of `contract` and returns the underlying simple
    /// graph: loops vanish and parallel edges merge.
    pub fn contract_edge_set(&self, contract: &[Edge]) -> Result<(Graph, VertexMap)> {
        let mut dsu = DisjointSet::new(self.n);
        for &(u, v) in contract {
            if !self.has_edge(u, v) {
                return Err(Error::NotAnEdge(u, v));
            }
            dsu.union(u, v);
        }
        // Number the classes by their smallest member, in increasing order.
        let mut class_id = vec![usize::MAX; self.n];
        let mut images = vec![None; self.n];
        let mut next = 0;
        for (v, image) in images.iter_mut().enumerate() {
            let root = dsu.find(v);
            if class_id[root] == usize::MAX {
                class_id[root] = next;
                next += 1;
            }
            *image = Some(class_id[root]);
        }
        let edges = self.edges.iter().filter_map(|&(u, v)| {
            let (a, b) = (images[u].unwrap(), images[v].unwrap());
            (a != b).then_some((a, b))
        });
        let g = Graph::new(next, edges)?;
        Ok((g, VertexMap { images, new_len: next }))
    }

    /// Inserts a new vertex `n` into edge `(u, v)`.
    pub fn subdivide_edge(&self, (u, v): Edge) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let w = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|&e| e != (u.min(v), u.max(v)))
            .chain([(u, w), (w, v)]);
        Graph::new(self.n + 1, edges)
    }

    /// Replaces the two edges at the degree-2 vertex `v` by one edge joining
    /// its neighbors, then deletes `v`.
    pub fn split_off(&self, v: usize) -> Result<(Graph, VertexMap)> {
        let degree = self.degree(v)?;
        if degree != 2 {
            return Err(Error::SplitOffDegree { v, degree });
        }
        let mut nb = self.neighbors(v);
        let (a, b) = (nb.next().unwrap(), nb.next().unwrap());
        if self.has_edge(a, b) {
            return Err(Error::SplitOffParallel { v, a, b });
        }
        let with_bridge = Graph::new(self.n, self.edges.iter().copied().chain([(a, b)]))?;
        with_bridge.delete_vertex(v)
    }

    /// Plain DOT rendering without attributes.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            out.push_str(&format!("  {v};\n"));
        }
        for &(u, v) in &self.edges {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Iterates the set bits of a mask, lowest first.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

/// Vertices reachable from `start` inside `within`, using adjacency masks.
pub(crate) fn reach(adj: &[u64], start: usize, within: u64) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= adj[v];
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// Component masks of the subgraph induced by `within`.
pub(crate) fn component_masks(adj: &[u64], within: u64) -> Vec<u64> {
    let mut rest = within;
    let mut out = Vec::new();
    while rest != 0 {
        let s = rest.trailing_zeros() as usize;
        let comp = reach(adj, s, within);
        out.push(comp);
        rest &= !comp;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::new(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    #[test]
    fn canonical_edges() {
        let g = Graph::new(3, [(2, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(g, Graph::new(3, [(0, 1), (1, 2)]).unwrap());
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::Loop(1)));
        assert_eq!(Graph::new(3, [(0, 3)]), Err(Error::VertexOutOfRange { v: 3, n: 3 }));
        assert!(matches!(Graph::empty(63), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn connectivity() {
        assert!(complete(3).is_connected());
        let two = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two.is_connected());
        assert_eq!(two.components(), vec![vec![0, 1], vec![2, 3]]);
        let p = cycle(5).delete_edges(&[(0, 4)]).unwrap();
        assert!(p.is_connected());
        assert!(Graph::empty(0).unwrap().is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
    }

    #[test]
    fn deletions() {
        let (k3, map) = complete(4).delete_vertex(3).unwrap();
        assert_eq!(k3, complete(3));
        assert_eq!(map.image(3), None);
        assert_eq!(map.image(2), Some(2));

        let c4 = cycle(4);
        let p = c4.delete_edges(&[(0, 1)]).unwrap();
        assert_eq!(p.edges(), &[(0, 3), (1, 2), (2, 3)]);
        assert_eq!(p.n(), 4);
        assert_eq!(c4.delete_edges(&[(0, 2)]), Err(Error::NotAnEdge(0, 2)));

        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let (rest, map) = star.delete_vertex(0).unwrap();
        assert_eq!(rest, Graph::empty(3).unwrap());
        assert_eq!(map.image(1), Some(0));
        assert!(star.delete_vertex(4).is_err());
    }

    #[test]
    fn contractions() {
        let (k2, _) = complete(3).contract_edge_set(&[(0, 1)]).unwrap();
        assert_eq!(k2, complete(2));

        let c6 = cycle(6);
        let (g, map) = c6.contract_edge_set(&[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(g, complete(3));
        assert_eq!(map.preimage(0), vec![0, 1]);

        let tree = Graph::new(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let (one, map) = tree.contract_edge_set(tree.edges()).unwrap();
        assert_eq!(one.n(), 1);
        assert_eq!(map.new_len(), 1);
        assert!(tree.contract_edge_set(&[(0, 4)]).is_err());
    }

    #[test]
    fn subdivide_and_split() {
        assert!(is_isomorphic(&complete(3).subdivide_edge((0, 1)).unwrap(), &cycle(4)));
        assert!(is_isomorphic(&cycle(4).subdivide_edge((1, 2)).unwrap(), &cycle(5)));
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let p4 = p3.subdivide_edge((1, 2)).unwrap();
        assert!(p4.is_tree() && p4.max_degree() == 2);

        let (k2, _) = p3.split_off(1).unwrap();
        assert_eq!(k2, complete(2));
        for v in 0..5 {
            let (c4, _) = cycle(5).split_off(v).unwrap();
            assert!(is_isomorphic(&c4, &cycle(4)));
        }
        // C4 splits into a triangle; a triangle would need a parallel edge.
        assert!(is_isomorphic(&cycle(4).split_off(0).unwrap().0, &cycle(3)));
        assert!(matches!(cycle(3).split_off(0), Err(Error::SplitOffParallel { .. })));
        assert!(matches!(
            complete(4).split_off(0),
            Err(Error::SplitOffDegree { degree: 3, .. })
        ));
    }

    #[test]
    fn bipartite_and_odd_girth() {
        assert!(cycle(6).is_bipartite());
        assert_eq!(cycle(6).odd_girth(), OddGirth::Infinite);
        assert!(!cycle(5).is_bipartite());
        assert_eq!(cycle(5).odd_girth(), OddGirth::Finite(5));
        assert_eq!(petersen().odd_girth(), OddGirth::Finite(5));
        assert_eq!(complete(4).odd_girth(), OddGirth::Finite(3));
        assert!(OddGirth::Finite(1000) < OddGirth::Infinite);
    }

    #[test]
    fn neighborhoods() {
        let k23 = Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(k23.common_neighbors(0, 1).unwrap(), vec![2, 3, 4]);
        assert_eq!(complete(4).common_neighbors(0, 3).unwrap().len(), 2);
        assert!(cycle(5).common_neighbors(0, 1).unwrap().is_empty());
        assert!(cycle(5).common_neighbors(0, 9).is_err());
        assert_eq!(k23.degree(0).unwrap(), 3);
        assert_eq!(k23.min_degree(), 2);
    }

    #[test]
    fn dot_export() {
        let dot = complete(2).to_dot();
        assert_eq!(dot, "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
    }
}
