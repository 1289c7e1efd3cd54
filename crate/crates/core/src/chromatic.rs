//! Exact chromatic number by branch and bound.
//!
//! Vertices are coloured in descending-degree order (ties by index). A greedy
//! colouring in that order gives the initial upper bound and a greedy clique
//! the lower bound; the search stops as soon as the two meet.

use serde::Serialize;

use crate::bounds::{BoundEntry, BoundId};
use crate::error::{Error, Result};
use crate::graph::{Graph, Row};
use crate::tolerance::Tolerances;

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringResult {
    pub chi: usize,
    /// Colour of each vertex, in `0..chi`.
    pub witness: Vec<usize>,
}

pub fn is_proper_coloring(g: &Graph, colors: &[usize]) -> bool {
    colors.len() == g.n() && g.edges().all(|(u, v)| colors[u] != colors[v])
}

fn degree_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    order
}

fn greedy_clique(g: &Graph, order: &[usize]) -> usize {
    let mut best = 0;
    for (i, &start) in order.iter().enumerate() {
        let mut members = g.neighbor_mask(start);
        let mut size = 1;
        for &v in &order[i + 1..] {
            if members & (1 << v) != 0 {
                size += 1;
                members &= g.neighbor_mask(v);
            }
        }
        best = best.max(size);
    }
    best
}

fn greedy_coloring(g: &Graph, order: &[usize]) -> Vec<usize> {
    let mut colors = vec![usize::MAX; g.n()];
    for &v in order {
        let mut c = 0;
        while g.neighbors(v).any(|u| colors[u] == c) {
            c += 1;
        }
        colors[v] = c;
    }
    colors
}

struct Solver<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    colors: Vec<usize>,
    best: usize,
    best_colors: Vec<usize>,
    lower: usize,
    nodes: u64,
    budget: u64,
}

impl Solver<'_> {
    fn run(&mut self, i: usize, used: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Resource(format!(
                "chromatic search exceeded {} nodes (best so far {})",
                self.budget, self.best
            )));
        }
        if used >= self.best {
            return Ok(());
        }
        if i == self.order.len() {
            self.best = used;
            self.best_colors = self.colors.clone();
            return Ok(());
        }
        let v = self.order[i];
        let mut forbidden: Row = 0;
        for u in self.g.neighbors(v) {
            if self.colors[u] != usize::MAX {
                forbidden |= 1 << self.colors[u];
            }
        }
        let limit = (used + 1).min(self.best - 1);
        for c in 0..limit {
            if forbidden & (1 << c) != 0 {
                continue;
            }
            self.colors[v] = c;
            self.run(i + 1, used.max(c + 1))?;
            self.colors[v] = usize::MAX;
            if self.best <= self.lower || used >= self.best {
                break;
            }
        }
        Ok(())
    }
}

pub fn chromatic_number(g: &Graph, budget: u64) -> Result<ColoringResult> {
    if budget == 0 {
        return Err(Error::domain("node budget must be positive"));
    }
    if g.n() == 0 {
        return Ok(ColoringResult { chi: 0, witness: Vec::new() });
    }
    let order = degree_order(g);
    let greedy = greedy_coloring(g, &order);
    let upper = greedy.iter().max().unwrap() + 1;
    let lower = greedy_clique(g, &order);
    if lower == upper {
        return Ok(ColoringResult { chi: upper, witness: greedy });
    }
    let mut solver =
        Solver { g, colors: vec![usize::MAX; g.n()], order, best: upper, best_colors: greedy, lower, nodes: 0, budget };
    solver.run(0, 0)?;
    Ok(ColoringResult { chi: solver.best, witness: solver.best_colors })
}

/// Brooks: a connected graph that is neither complete nor an odd cycle has
/// `chi <= Delta`.
pub fn brooks_check(g: &Graph, chi: usize, tol: &Tolerances) -> BoundEntry {
    if !g.is_connected() {
        return BoundEntry::inapplicable(BoundId::Brooks, "requires connected");
    }
    if g.is_complete() {
        return BoundEntry::inapplicable(BoundId::Brooks, "complete graph (exception)");
    }
    if g.is_odd_cycle() {
        return BoundEntry::inapplicable(BoundId::Brooks, "odd cycle (exception)");
    }
    BoundEntry::compare(BoundId::Brooks, chi as f64, g.max_degree().unwrap() as f64, tol)
}
