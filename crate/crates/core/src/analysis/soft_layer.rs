use crate::error::{Error, Result};
use crate::graph::Graph;

/// Greedy soft-layer: repeatedly delete the smallest-id vertex that has
/// degree at least 2 and is not a cut vertex. Returns the final graph
/// (relabeled in order) and the deleted vertices as ids of the input graph.
pub fn soft_layer_reduce(g: &Graph) -> Result<(Graph, Vec<usize>)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut current = g.clone();
    // original[i] is the input id of current vertex i.
    let mut original: Vec<usize> = (0..g.n()).collect();
    let mut removed = Vec::new();
    'outer: loop {
        for v in 0..current.n() {
            if current.degree(v)? < 2 {
                continue;
            }
            let (rest, _) = current.delete_vertex(v)?;
            if rest.is_connected() {
                removed.push(original.remove(v));
                current = rest;
                continue 'outer;
            }
        }
        return Ok((current, removed));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_shrinks_to_an_edge() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let (h, seq) = soft_layer_reduce(&k4).unwrap();
        assert_eq!(h, Graph::new(2, [(0, 1)]).unwrap());
        assert_eq!(seq, vec![0, 1]);
    }

    #[test]
    fn trees_are_fixed_points() {
        let t = Graph::new(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let (h, seq) = soft_layer_reduce(&t).unwrap();
        assert_eq!(h, t);
        assert!(seq.is_empty());
    }

    #[test]
    fn cycle_loses_one_vertex() {
        let c6 = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let (h, seq) = soft_layer_reduce(&c6).unwrap();
        assert_eq!(seq, vec![0]);
        assert!(h.is_tree() && h.n() == 5 && h.max_degree() == 2);
    }
}
