//! Isomorphism-free generation by canonical vertex augmentation.
//!
//! Level `n` is produced from level `n - 1`: each parent `P` is extended by a
//! new vertex joined to every admissible neighbour subset. A child `C` is
//! kept only if the new vertex lies in the automorphism orbit of the vertex
//! that occupies the last canonical position of `C`, which makes `P` the
//! unique canonical parent of `C`. Duplicates from the same parent are merged
//! by certificate, so no global table is ever built and parents can be
//! processed independently.

use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;

use rayon::prelude::*;
use rayon::ThreadPool;

use super::canon::{canonical_labeling, canonical_labeling_colored};
use crate::error::{Error, Result};
use crate::graph::{Graph, Row, MAX_VERTICES};

/// Unfiltered enumeration cap.
pub const MAX_N_UNFILTERED: usize = 10;
/// Cap when a maximum degree of at most [`DEGREE_FILTER_LIMIT`] is imposed.
pub const MAX_N_DEGREE_FILTERED: usize = 12;
pub const DEGREE_FILTER_LIMIT: usize = 4;

/// Parents handed to the worker pool per batch.
const PARENT_CHUNK: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub n_min: usize,
    pub n_max: usize,
    pub connected_only: bool,
    pub max_degree: Option<usize>,
}

impl EnumerationSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n_min > self.n_max {
            return Err(Error::domain(format!("empty n range {}..{}", self.n_min, self.n_max)));
        }
        let cap = match self.max_degree {
            Some(d) if d <= DEGREE_FILTER_LIMIT => MAX_N_DEGREE_FILTERED,
            _ => MAX_N_UNFILTERED,
        };
        if self.n_max > cap {
            return Err(Error::Resource(format!(
                "n = {} exceeds the enumeration cap of {cap}{}",
                self.n_max,
                if cap == MAX_N_UNFILTERED { " (use --max-degree 4 to reach 12)" } else { "" }
            )));
        }
        Ok(())
    }

    fn keep(&self, g: &Graph) -> bool {
        g.n() >= self.n_min && (!self.connected_only || g.is_connected())
    }
}

/// Canonically labelled children of `parent` whose canonical parent is
/// `parent`, in certificate order.
pub fn augment(parent: &Graph, max_degree: Option<usize>) -> Vec<Graph> {
    let n = parent.n();
    let (allowed, max_new) = match max_degree {
        Some(d) => ((0..n).filter(|&v| parent.degree(v) < d).fold(0 as Row, |m, v| m | 1 << v), d),
        None => (if n == 0 { 0 } else { Row::MAX >> (MAX_VERTICES - n) }, n),
    };
    let mut kept: BTreeSet<Vec<Row>> = BTreeSet::new();
    let mut mask: Row = 0;
    // Walk all subsets of `allowed`.
    loop {
        if mask.count_ones() as usize <= max_new {
            let child = parent.with_vertex(mask).expect("enumeration stays below the vertex cap");
            let lab = canonical_labeling(&child);
            let last = lab.order[n];
            if accepts(&child, &lab, n, last) {
                kept.insert(lab.certificate);
            }
        }
        if mask == allowed {
            break;
        }
        mask = (mask.wrapping_sub(allowed)) & allowed;
    }
    kept.into_iter().map(|rows| Graph::from_rows(rows).expect("certificate rows are valid")).collect()
}

fn accepts(child: &Graph, lab: &super::canon::Labeling, new: usize, last: usize) -> bool {
    if new == last || lab.known_equivalent(new, last) {
        return true;
    }
    if lab.root_cell[new] != lab.root_cell[last] {
        return false;
    }
    let rooted = |x: usize| {
        let mut colors = vec![1; child.n()];
        colors[x] = 0;
        canonical_labeling_colored(child, &colors).certificate
    };
    rooted(new) == rooted(last)
}

/// Streams graphs level by level in a fixed order that does not depend on
/// the parallelism width.
pub struct GraphStream {
    spec: EnumerationSpec,
    pool: Arc<ThreadPool>,
    level: usize,
    parents: Vec<Graph>,
    next_parent: usize,
    next_level: Vec<Graph>,
    buffer: VecDeque<Graph>,
    done: bool,
}

impl GraphStream {
    pub fn new(spec: EnumerationSpec, pool: Arc<ThreadPool>) -> Result<Self> {
        spec.validate()?;
        let mut stream = GraphStream {
            pool,
            level: 0,
            parents: Vec::new(),
            next_parent: 0,
            next_level: Vec::new(),
            buffer: VecDeque::new(),
            done: false,
            spec,
        };
        let null = Graph::empty(0)?;
        if stream.spec.keep(&null) {
            stream.buffer.push_back(null.clone());
        }
        if stream.spec.n_max == 0 {
            stream.done = true;
        } else {
            stream.parents.push(null);
            stream.level = 1;
        }
        Ok(stream)
    }

    /// Next batch of graphs, or `None` when exhausted.
    pub fn next_batch(&mut self) -> Option<Vec<Graph>> {
        loop {
            if !self.buffer.is_empty() {
                return Some(self.buffer.drain(..).collect());
            }
            if self.done {
                return None;
            }
            self.advance();
        }
    }

    fn advance(&mut self) {
        if self.next_parent == self.parents.len() {
            if self.level == self.spec.n_max {
                self.done = true;
                return;
            }
            self.parents = std::mem::take(&mut self.next_level);
            self.next_parent = 0;
            self.level += 1;
            return;
        }
        let end = (self.next_parent + PARENT_CHUNK).min(self.parents.len());
        let chunk = &self.parents[self.next_parent..end];
        let max_degree = self.spec.max_degree;
        let children: Vec<Vec<Graph>> =
            self.pool.install(|| chunk.par_iter().map(|p| augment(p, max_degree)).collect());
        self.next_parent = end;
        let store = self.level < self.spec.n_max;
        for g in children.into_iter().flatten() {
            if self.spec.keep(&g) {
                self.buffer.push_back(g.clone());
            }
            if store {
                self.next_level.push(g);
            }
        }
    }
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            if let Some(g) = self.buffer.pop_front() {
                return Some(g);
            }
            if self.done {
                return None;
            }
            self.advance();
        }
    }
}

pub fn thread_pool(jobs: usize) -> Result<Arc<ThreadPool>> {
    if jobs == 0 {
        return Err(Error::domain("parallelism width must be at least 1"));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map(Arc::new)
        .map_err(|e| Error::Resource(format!("thread pool: {e}")))
}
