use crate::error::{Error, Result};
use crate::graph::{Graph, VertexMap};

/// One block: a maximal 2-connected subgraph or a bridge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Sorted vertex ids in the parent graph.
    pub vertices: Vec<usize>,
    /// Indices of the parent's edges lying in this block.
    pub edges: Vec<usize>,
    /// The block as a standalone graph (induced subgraph, relabeled).
    pub graph: Graph,
    pub map: VertexMap,
}

impl Block {
    pub fn is_trivial(&self) -> bool {
        self.vertices.len() == 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<usize>,
}

struct Tarjan<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<usize>,
    found: Vec<Vec<usize>>,
    is_cut: Vec<bool>,
}

impl Tarjan<'_> {
    fn visit(&mut self, v: usize, parent: Option<usize>) {
        self.time += 1;
        self.disc[v] = self.time;
        self.low[v] = self.time;
        let mut children = 0;
        for w in self.g.neighbors(v) {
            let e = self.g.edge_index(v, w).unwrap();
            if self.disc[w] == 0 {
                children += 1;
                self.stack.push(e);
                self.visit(w, Some(v));
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.disc[v] {
                    if parent.is_some() || children > 1 {
                        self.is_cut[v] = true;
                    }
                    let mut comp = Vec::new();
                    while let Some(f) = self.stack.pop() {
                        comp.push(f);
                        if f == e {
                            break;
                        }
                    }
                    self.found.push(comp);
                }
            } else if Some(w) != parent && self.disc[w] < self.disc[v] {
                self.stack.push(e);
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
        if parent.is_none() && children > 1 {
            self.is_cut[v] = true;
        }
    }
}

/// Blocks of a connected graph, ordered by smallest vertex (ties by the full
/// sorted vertex list).
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut t = Tarjan {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        found: Vec::new(),
        is_cut: vec![false; n],
    };
    if n > 0 {
        t.visit(0, None);
    }
    let mut blocks = Vec::with_capacity(t.found.len());
    for mut edges in t.found {
        edges.sort_unstable();
        let mut vertices: Vec<usize> = edges
            .iter()
            .flat_map(|&e| {
                let (u, v) = g.edge(e);
                [u, v]
            })
            .collect();
        vertices.sort_unstable();
        vertices.dedup();
        let (graph, map) = g.induced_subgraph(&vertices)?;
        blocks.push(Block {
            vertices,
            edges,
            graph,
            map,
        });
    }
    blocks.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    let cut_vertices = (0..n).filter(|&v| t.is_cut[v]).collect();
    Ok(BlockDecomposition { blocks, cut_vertices })
}

/// Connected, at least 3 vertices, and no cut vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    g.n() >= 3
        && match block_decomposition(g) {
            Ok(d) => d.blocks.len() == 1,
            Err(_) => false,
        }
}

/// Vertices whose removal disconnects `g`, by direct deletion.
pub fn cut_vertices_naive(g: &Graph) -> Vec<usize> {
    (0..g.n())
        .filter(|&v| g.delete_vertex(v).map(|(h, _)| !h.is_connected()).unwrap_or(false))
        .collect()
}

/// Closed form for the most edges a connected graph with `n` vertices and
/// `r` blocks can have: one big clique plus `r - 1` bridges.
pub fn max_edges_with_r_blocks(n: usize, r: usize) -> Result<usize> {
    if r < 1 || n < 2 || r > n - 1 {
        return Err(Error::Domain(format!("need 1 <= r <= n - 1, got n = {n}, r = {r}")));
    }
    Ok(crate::util::binomial(n - r + 1, 2) + r - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn bowtie() {
        let g = Graph::new(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let d = block_decomposition(&g).unwrap();
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.cut_vertices, vec![2]);
        assert_eq!(d.blocks[0].vertices, vec![0, 1, 2]);
        assert_eq!(d.blocks[1].vertices, vec![2, 3, 4]);
    }

    #[test]
    fn tree_blocks_are_bridges() {
        let g = Graph::new(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        let d = block_decomposition(&g).unwrap();
        assert_eq!(d.blocks.len(), 5);
        assert!(d.blocks.iter().all(Block::is_trivial));
        assert_eq!(d.cut_vertices, vec![1, 3]);
    }

    #[test]
    fn cycle_is_one_block() {
        let d = block_decomposition(&cycle(5)).unwrap();
        assert_eq!(d.blocks.len(), 1);
        assert!(d.cut_vertices.is_empty());
        assert!(is_two_connected(&cycle(5)));
    }

    #[test]
    fn rejects_disconnected() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(block_decomposition(&g), Err(Error::Disconnected));
    }

    #[test]
    fn block_edge_bound() {
        assert_eq!(max_edges_with_r_blocks(6, 3).unwrap(), 8);
        for n in 2..10 {
            assert_eq!(max_edges_with_r_blocks(n, 1).unwrap(), n * (n - 1) / 2);
            assert_eq!(max_edges_with_r_blocks(n, n - 1).unwrap(), n - 1);
        }
        assert!(max_edges_with_r_blocks(5, 5).is_err());
        assert!(max_edges_with_r_blocks(5, 0).is_err());
    }
}
