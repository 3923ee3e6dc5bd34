//! Edge classes linked by chains of triangles and K_{2,3} subgraphs.
//!
//! Two edges are related when a sequence of triangles / K_{2,3}'s joins
//! them, consecutive gadgets sharing an edge. Every gadget has md = 1, so
//! any MD-coloring paints a whole class with one color.

use crate::graph::{bits, Graph};
use crate::util::DisjointSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaPartition {
    /// Edge-index classes, each sorted, ordered by smallest edge.
    pub classes: Vec<Vec<usize>>,
    /// `class_of[e]` indexes into `classes`.
    pub class_of: Vec<usize>,
    /// Whether each edge lies in at least one gadget.
    pub covered: Vec<bool>,
    pub triangles: usize,
    /// Vertex pairs with at least three common neighbors (K_{2,3} hubs).
    pub k23_pairs: usize,
}

impl ThetaPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn gadget_count(&self) -> usize {
        self.triangles + self.k23_pairs
    }
}

fn from_dsu(g: &Graph, mut dsu: DisjointSet, covered: Vec<bool>, triangles: usize, k23_pairs: usize) -> ThetaPartition {
    let classes = dsu.groups();
    let mut class_of = vec![0; g.m()];
    for (i, class) in classes.iter().enumerate() {
        for &e in class {
            class_of[e] = i;
        }
    }
    ThetaPartition {
        classes,
        class_of,
        covered,
        triangles,
        k23_pairs,
    }
}

fn eid(g: &Graph, u: usize, v: usize) -> usize {
    g.edge_index(u, v).expect("adjacent pair")
}

/// Unions triangle and K_{2,3} gadgets into `dsu`, marking covered edges.
/// Returns (triangles, k23 hub pairs).
fn union_gadgets(g: &Graph, dsu: &mut DisjointSet, covered: &mut [bool]) -> (usize, usize) {
    let n = g.n();
    let mut triangles = 0;
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let above = !((2u64 << v) - 1);
        for w in bits(g.adjacency(u) & g.adjacency(v) & above) {
            triangles += 1;
            let (a, b) = (eid(g, u, w), eid(g, v, w));
            dsu.union(e, a);
            dsu.union(e, b);
            covered[e] = true;
            covered[a] = true;
            covered[b] = true;
        }
    }
    // Any three common neighbours of u, v span a K_{2,3}; overlapping
    // triples chain, so the whole double star is one class.
    let mut k23_pairs = 0;
    for u in 0..n {
        for v in u + 1..n {
            let common = g.adjacency(u) & g.adjacency(v);
            if common.count_ones() < 3 {
                continue;
            }
            k23_pairs += 1;
            let anchor = eid(g, u, common.trailing_zeros() as usize);
            for w in bits(common) {
                for x in [u, v] {
                    let e = eid(g, x, w);
                    dsu.union(anchor, e);
                    covered[e] = true;
                }
            }
        }
    }
    (triangles, k23_pairs)
}

pub fn theta_classes(g: &Graph) -> ThetaPartition {
    let mut dsu = DisjointSet::new(g.m());
    let mut covered = vec![false; g.m()];
    let (triangles, k23_pairs) = union_gadgets(g, &mut dsu, &mut covered);
    from_dsu(g, dsu, covered, triangles, k23_pairs)
}

/// Whether every two edges are θ-related (and every edge is in a gadget).
pub fn is_closure(g: &Graph) -> bool {
    let t = theta_classes(g);
    g.m() >= 1 && t.classes.len() == 1 && t.covered.iter().all(|&c| c)
}

/// θ-classes further merged by the 4-cycle rule: in every MD-coloring the
/// two pairs of opposite edges of any 4-cycle are monochromatic (a 4-cycle
/// only admits the trivial and the alternating MD-coloring, and colorings
/// restrict to subgraphs). Used by the solver as its assignment units.
pub fn forced_classes(g: &Graph) -> ThetaPartition {
    let n = g.n();
    let mut dsu = DisjointSet::new(g.m());
    let mut covered = vec![false; g.m()];
    let (triangles, k23_pairs) = union_gadgets(g, &mut dsu, &mut covered);
    for u in 0..n {
        for v in u + 1..n {
            let common: Vec<usize> = bits(g.adjacency(u) & g.adjacency(v)).collect();
            for (i, &a) in common.iter().enumerate() {
                for &b in &common[i + 1..] {
                    // Cycle u-a-v-b-u.
                    dsu.union(eid(g, u, a), eid(g, v, b));
                    dsu.union(eid(g, a, v), eid(g, b, u));
                }
            }
        }
    }
    from_dsu(g, dsu, covered, triangles, k23_pairs)
}
