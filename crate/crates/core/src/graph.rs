//! Simple undirected graphs on at most [`MAX_VERTICES`] vertices.
//!
//! Adjacency is a packed bit matrix: row `v` is a [`Row`] whose bit `u` is set
//! iff `uv` is an edge. Vertices are `0..n`.

use std::fmt;

use crate::error::{Error, Result};

/// One adjacency row; bit `u` marks neighbour `u`.
pub type Row = u128;

/// Largest supported vertex count (one [`Row`] word per adjacency row).
pub const MAX_VERTICES: usize = Row::BITS as usize;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    rows: Vec<Row>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    /// `None` for the null graph.
    pub min: Option<usize>,
    pub max: Option<usize>,
    pub sequence: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    /// Component index of each vertex, numbered in order of smallest member.
    pub labels: Vec<usize>,
    pub kappa: usize,
}

impl ComponentPartition {
    pub fn members(&self, component: usize) -> Vec<usize> {
        (0..self.labels.len()).filter(|&v| self.labels[v] == component).collect()
    }
}

#[inline]
fn bit(v: usize) -> Row {
    1 << v
}

#[inline]
fn low_mask(n: usize) -> Row {
    if n >= MAX_VERTICES {
        Row::MAX
    } else {
        bit(n) - 1
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::domain(format!("{n} vertices exceeds the supported maximum of {MAX_VERTICES}")));
        }
        Ok(Graph { n, rows: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::domain(format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::domain(format!("loop at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from packed adjacency rows, validating symmetry and the
    /// zero diagonal.
    pub fn from_rows(rows: Vec<Row>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::domain(format!("{n} rows exceeds {MAX_VERTICES}")));
        }
        let mask = low_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::domain(format!("row {v} has bits beyond n = {n}")));
            }
            if row & bit(v) != 0 {
                return Err(Error::domain(format!("loop at vertex {v}")));
            }
            let mut r = row;
            while r != 0 {
                let u = r.trailing_zeros() as usize;
                r &= r - 1;
                if rows[u] & bit(v) == 0 {
                    return Err(Error::domain(format!("asymmetric entry ({v}, {u})")));
                }
            }
        }
        Ok(Graph { n, rows })
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u] |= bit(v);
        self.rows[v] |= bit(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] & bit(v) != 0
    }

    /// Neighbourhood of `v` as a bit mask.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> Row {
        self.rows[v]
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        BitIter(self.rows[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| BitIter(self.rows[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let sequence: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        DegreeStats { min: sequence.iter().copied().min(), max: sequence.iter().copied().max(), sequence }
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    pub fn components(&self) -> ComponentPartition {
        let mut labels = vec![usize::MAX; self.n];
        let mut kappa = 0;
        for start in 0..self.n {
            if labels[start] != usize::MAX {
                continue;
            }
            let mut frontier = bit(start);
            let mut seen = frontier;
            while frontier != 0 {
                let mut next = 0;
                for v in BitIter(frontier) {
                    next |= self.rows[v];
                }
                frontier = next & !seen;
                seen |= next;
            }
            for v in BitIter(seen) {
                labels[v] = kappa;
            }
            kappa += 1;
        }
        ComponentPartition { labels, kappa }
    }

    pub fn component_count(&self) -> usize {
        self.components().kappa
    }

    /// True iff `n >= 1` and the graph has a single component.
    pub fn is_connected(&self) -> bool {
        self.n >= 1 && self.component_count() == 1
    }

    /// `m - n + kappa`.
    pub fn cyclomatic_number(&self) -> usize {
        self.edge_count() + self.component_count() - self.n
    }

    pub fn is_forest(&self) -> bool {
        self.cyclomatic_number() == 0
    }

    pub fn is_regular(&self) -> bool {
        let s = self.degree_stats();
        s.min == s.max
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.rows.contains(&0)
    }

    /// Connected, 2-regular, odd order.
    pub fn is_odd_cycle(&self) -> bool {
        self.n >= 3 && self.n % 2 == 1 && (0..self.n).all(|v| self.degree(v) == 2) && self.is_connected()
    }

    /// Two-colours each component by BFS; `None` if an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side = vec![None; self.n];
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let s = side[v].unwrap();
                for u in self.neighbors(v) {
                    match side[u] {
                        None => {
                            side[u] = Some(!s);
                            stack.push(u);
                        }
                        Some(t) if t == s => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Replaces each vertex `v` by an independent set of `multiplicities[v]`
    /// vertices; two sets are completely joined iff the originals are adjacent.
    /// Copies of `v` occupy a contiguous block, blocks in vertex order.
    pub fn blow_up(&self, multiplicities: &[usize]) -> Result<Graph> {
        if multiplicities.len() != self.n {
            return Err(Error::domain(format!("expected {} multiplicities, got {}", self.n, multiplicities.len())));
        }
        if let Some(v) = multiplicities.iter().position(|&a| a == 0) {
            return Err(Error::domain(format!("multiplicity of vertex {v} must be positive")));
        }
        let total: usize = multiplicities.iter().sum();
        let mut out = Graph::empty(total)?;
        let mut start = Vec::with_capacity(self.n);
        let mut acc = 0;
        for &a in multiplicities {
            start.push(acc);
            acc += a;
        }
        for (u, v) in self.edges() {
            for x in start[u]..start[u] + multiplicities[u] {
                for y in start[v]..start[v] + multiplicities[v] {
                    out.set_edge(x, y);
                }
            }
        }
        Ok(out)
    }

    /// Graph whose vertex `i` is this graph's vertex `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Graph {
        assert_eq!(order.len(), self.n, "permutation length mismatch");
        let mut pos = vec![0usize; self.n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let rows = order.iter().map(|&v| BitIter(self.rows[v]).fold(0 as Row, |acc, u| acc | bit(pos[u]))).collect();
        Graph { n: self.n, rows }
    }

    /// Subgraph induced by `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph { n: vertices.len(), rows: vec![0; vertices.len()] };
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        g
    }

    /// Adds a new vertex `n` adjacent to every vertex in `mask`.
    pub fn with_vertex(&self, mask: Row) -> Result<Graph> {
        if self.n + 1 > MAX_VERTICES {
            return Err(Error::domain("vertex cap reached"));
        }
        if mask & !low_mask(self.n) != 0 {
            return Err(Error::domain("neighbour mask references missing vertices"));
        }
        let v = self.n;
        let mut rows = self.rows.clone();
        for u in BitIter(mask) {
            rows[u] |= bit(v);
        }
        rows.push(mask);
        Ok(Graph { n: v + 1, rows })
    }

    /// Dense row-major adjacency matrix.
    pub fn adjacency_f64(&self) -> Vec<f64> {
        let n = self.n;
        let mut a = vec![0.0; n * n];
        for u in 0..n {
            for v in BitIter(self.rows[u]) {
                a[u * n + v] = 1.0;
            }
        }
        a
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Serialises as graph6.
impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&crate::graph6::encode(self))
    }
}

/// Iterates the set bits of a word, lowest first.
#[derive(Clone, Copy)]
pub struct BitIter(pub Row);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}
