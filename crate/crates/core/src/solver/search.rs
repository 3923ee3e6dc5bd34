//! Backtracking search for an MD-coloring with exactly `k` colors.
//!
//! Assignment units are the forced classes (edge sets that every
//! MD-coloring paints with one color). Units are colored in order with
//! first-use symmetry breaking. After each assignment the partial coloring
//! is checked: an edge of color `c' != c` survives the removal of `E_c` in
//! every completion, so if some pair is joined by assigned edges avoiding
//! each open color in turn, no completion can separate it.

use super::Budget;
use crate::graph::{component_masks, Graph};

pub(crate) struct Search<'a> {
    g: &'a Graph,
    units: &'a [Vec<usize>],
    k: usize,
    /// Adjacency of all assigned edges.
    assigned: Vec<u64>,
    /// `by_color[c]` is the adjacency of assigned edges of color `c`.
    by_color: Vec<Vec<u64>>,
    unit_color: Vec<usize>,
    opened: usize,
    budget: &'a mut Budget,
}

pub(crate) enum Outcome {
    Found(Vec<usize>),
    Infeasible,
    Exhausted,
}

impl<'a> Search<'a> {
    pub(crate) fn new(g: &'a Graph, units: &'a [Vec<usize>], k: usize, budget: &'a mut Budget) -> Self {
        Search {
            g,
            units,
            k,
            assigned: vec![0; g.n()],
            by_color: vec![vec![0; g.n()]; k + 1],
            unit_color: vec![0; units.len()],
            opened: 0,
            budget,
        }
    }

    pub(crate) fn run(mut self) -> Outcome {
        if self.k == 0 || self.k > self.units.len() {
            return Outcome::Infeasible;
        }
        match self.dfs(0) {
            Some(true) => {
                let mut colors = vec![0; self.g.m()];
                for (unit, &c) in self.units.iter().zip(&self.unit_color) {
                    for &e in unit {
                        colors[e] = c;
                    }
                }
                Outcome::Found(colors)
            }
            Some(false) => Outcome::Infeasible,
            None => Outcome::Exhausted,
        }
    }

    fn paint(&mut self, i: usize, c: usize, on: bool) {
        for &e in &self.units[i] {
            let (u, v) = self.g.edge(e);
            for (a, b) in [(u, v), (v, u)] {
                if on {
                    self.assigned[a] |= 1 << b;
                    self.by_color[c][a] |= 1 << b;
                } else {
                    self.assigned[a] &= !(1 << b);
                    self.by_color[c][a] &= !(1 << b);
                }
            }
        }
    }

    /// Whether some pair can no longer be separated.
    fn doomed(&self) -> bool {
        let n = self.g.n();
        let all = self.g.all_vertices_mask();
        let mut together = vec![all; n];
        let mut adj = vec![0u64; n];
        for c in 1..=self.opened {
            for (v, row) in adj.iter_mut().enumerate() {
                *row = self.assigned[v] & !self.by_color[c][v];
            }
            for comp in component_masks(&adj, all) {
                for v in crate::graph::bits(comp) {
                    together[v] &= comp;
                }
            }
        }
        (0..n).any(|v| together[v] != 1 << v)
    }

    /// `Some(true)` on success, `Some(false)` if the subtree is empty,
    /// `None` when the budget ran out.
    fn dfs(&mut self, i: usize) -> Option<bool> {
        if !self.budget.tick() {
            return None;
        }
        if i == self.units.len() {
            return Some(self.opened == self.k);
        }
        let remaining = self.units.len() - i - 1;
        let fresh = (self.opened < self.k).then_some(self.opened + 1);
        let candidates = fresh.into_iter().chain(1..=self.opened);
        for c in candidates.collect::<Vec<_>>() {
            let opened_after = self.opened.max(c);
            if opened_after + remaining < self.k {
                continue;
            }
            let before = self.opened;
            self.unit_color[i] = c;
            self.opened = opened_after;
            self.paint(i, c, true);
            let result = if self.doomed() { Some(false) } else { self.dfs(i + 1) };
            self.paint(i, c, false);
            self.opened = before;
            match result {
                Some(false) => {}
                other => return other,
            }
        }
        Some(false)
    }
}
