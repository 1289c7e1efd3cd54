//! Canonical labelling by partition refinement and individualisation.
//!
//! The root partition (optionally seeded by vertex colours) is refined to the
//! coarsest equitable partition. The search tree individualises each vertex of
//! the first non-singleton cell in turn; every discrete leaf yields an ordering
//! of the vertices and a certificate (the relabelled adjacency rows). The
//! canonical labelling is the leaf with the largest certificate.
//!
//! Two leaves with equal certificates differ by an automorphism. Those are
//! recorded and used to skip children that lie in the same orbit as an
//! already explored sibling (under automorphisms fixing the current path),
//! and a leaf equivalent to the first leaf abandons the whole subtree back to
//! the point where it left the first path.

use std::fmt;

use crate::graph::{BitIter, Graph, Row};
use crate::graph6;

type Cells = Vec<Vec<usize>>;

#[derive(Debug, Clone)]
pub struct Labeling {
    /// `order[i]` is the vertex placed at canonical position `i`.
    pub order: Vec<usize>,
    /// Adjacency rows of the relabelled graph.
    pub certificate: Vec<Row>,
    /// Cell index of each vertex in the refined root partition.
    pub root_cell: Vec<usize>,
    /// Automorphisms discovered during the search (vertex -> image).
    pub automorphisms: Vec<Vec<usize>>,
}

impl Labeling {
    pub fn canonical_graph(&self) -> Graph {
        Graph::from_rows(self.certificate.clone()).expect("certificate is a valid adjacency")
    }

    /// True if some discovered automorphism chain maps `u` to `v`. A `false`
    /// answer is inconclusive.
    pub fn known_equivalent(&self, u: usize, v: usize) -> bool {
        if u == v {
            return true;
        }
        let mut uf = UnionFind::new(self.order.len());
        for a in &self.automorphisms {
            uf.absorb(a);
        }
        uf.find(u) == uf.find(v)
    }
}

/// Isomorphism-invariant key: two graphs have equal forms iff isomorphic.
/// The bytes are the graph6 string of the canonically relabelled graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    pub fn to_graph(&self) -> Graph {
        graph6::decode(self.as_str()).expect("canonical form is valid graph6")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.as_str())
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let lab = canonical_labeling(g);
    CanonicalForm(graph6::encode(&lab.canonical_graph()).into_bytes())
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    canonical_labeling_colored(g, &vec![0; g.n()])
}

/// Labelling that respects a vertex colouring: colour classes are kept apart
/// and ordered by colour value. Certificates are comparable between
/// colourings with the same class sizes.
pub fn canonical_labeling_colored(g: &Graph, colors: &[u32]) -> Labeling {
    assert_eq!(colors.len(), g.n(), "one colour per vertex");
    let mut by_color: Vec<(u32, usize)> = colors.iter().copied().zip(0..).collect();
    by_color.sort_unstable();
    let mut cells: Cells = Vec::new();
    for (i, &(c, v)) in by_color.iter().enumerate() {
        if i > 0 && by_color[i - 1].0 == c {
            cells.last_mut().unwrap().push(v);
        } else {
            cells.push(vec![v]);
        }
    }
    let root = refine(g, cells);
    let mut root_cell = vec![0; g.n()];
    for (i, cell) in root.iter().enumerate() {
        for &v in cell {
            root_cell[v] = i;
        }
    }

    let mut search = Search { g, first: None, best: None, first_path: Vec::new(), automorphisms: Vec::new() };
    search.descend(root, &mut Vec::new());
    let best = search.best.expect("search visits at least one leaf");
    Labeling { order: best.order, certificate: best.certificate, root_cell, automorphisms: search.automorphisms }
}

/// Same orbit under the full automorphism group.
pub fn same_orbit(g: &Graph, u: usize, v: usize) -> bool {
    if u == v {
        return true;
    }
    if g.degree(u) != g.degree(v) {
        return false;
    }
    let rooted = |x: usize| {
        let mut colors = vec![1; g.n()];
        colors[x] = 0;
        canonical_labeling_colored(g, &colors).certificate
    };
    rooted(u) == rooted(v)
}

/// Splits every cell by neighbour counts into every cell until stable.
fn refine(g: &Graph, mut cells: Cells) -> Cells {
    loop {
        let masks: Vec<Row> = cells.iter().map(|c| c.iter().fold(0 as Row, |m, &v| m | 1 << v)).collect();
        let before = cells.len();
        let mut next: Cells = Vec::with_capacity(before);
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, usize)> = cell
                .iter()
                .map(|&v| {
                    let row = g.neighbor_mask(v);
                    (masks.iter().map(|m| (row & m).count_ones() as u8).collect(), v)
                })
                .collect();
            keyed.sort_unstable();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == before {
            return next;
        }
        cells = next;
    }
}

struct Leaf {
    order: Vec<usize>,
    certificate: Vec<Row>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    first_path: Vec<usize>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(level)` when the caller should unwind to the node at
    /// depth `level`.
    fn descend(&mut self, cells: Cells, path: &mut Vec<usize>) -> Option<usize> {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&cells, path);
        };
        let depth = path.len();
        let mut candidates = cells[target].clone();
        candidates.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for v in candidates {
            if !explored.is_empty() && self.pruned(v, &explored, path) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&u| u != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            let child = refine(self.g, child);

            path.push(v);
            let jump = self.descend(child, path);
            path.pop();
            explored.push(v);
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn pruned(&self, v: usize, explored: &[usize], path: &[usize]) -> bool {
        let mut uf = UnionFind::new(self.g.n());
        let mut any = false;
        for a in &self.automorphisms {
            if path.iter().all(|&p| a[p] == p) {
                uf.absorb(a);
                any = true;
            }
        }
        any && explored.iter().any(|&e| uf.find(e) == uf.find(v))
    }

    fn leaf(&mut self, cells: &Cells, path: &[usize]) -> Option<usize> {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let mut pos = vec![0usize; order.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let certificate: Vec<Row> = order
            .iter()
            .map(|&v| BitIter(self.g.neighbor_mask(v)).fold(0 as Row, |acc, u| acc | 1 << pos[u]))
            .collect();

        let Some(first) = &self.first else {
            self.first = Some(Leaf { order: order.clone(), certificate: certificate.clone() });
            self.best = Some(Leaf { order, certificate });
            self.first_path = path.to_vec();
            return None;
        };
        if certificate == first.certificate {
            let aut = map_between(&first.order, &order);
            self.automorphisms.push(aut);
            let common = path.iter().zip(&self.first_path).take_while(|(a, b)| a == b).count();
            return Some(common);
        }
        let best = self.best.as_ref().unwrap();
        if certificate == best.certificate {
            let aut = map_between(&best.order, &order);
            self.automorphisms.push(aut);
        } else if certificate > best.certificate {
            self.best = Some(Leaf { order, certificate });
        }
        None
    }
}

/// Permutation sending `from[i]` to `to[i]`.
fn map_between(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut map = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        map[a] = b;
    }
    map
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn absorb(&mut self, perm: &[usize]) {
        for (a, &b) in perm.iter().enumerate() {
            let (ra, rb) = (self.find(a), self.find(b));
            if ra != rb {
                self.parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let mut e = vec![];
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &e).unwrap()
    }

    /// Brute-force oracle: maximum certificate over all n! orderings.
    fn brute_max_certificate(g: &Graph) -> Vec<Row> {
        fn rec(g: &Graph, order: &mut Vec<usize>, used: &mut Vec<bool>, best: &mut Vec<Row>) {
            if order.len() == g.n() {
                let cert = g.permuted(order).rows().to_vec();
                if cert > *best {
                    *best = cert;
                }
                return;
            }
            for v in 0..g.n() {
                if !used[v] {
                    used[v] = true;
                    order.push(v);
                    rec(g, order, used, best);
                    order.pop();
                    used[v] = false;
                }
            }
        }
        let mut best = Vec::new();
        rec(g, &mut Vec::new(), &mut vec![false; g.n()], &mut best);
        best
    }

    #[test]
    fn relabelled_petersen_has_same_form() {
        let p = petersen();
        let a = p.permuted(&[3, 7, 1, 9, 0, 2, 8, 5, 6, 4]);
        let b = p.permuted(&[9, 8, 7, 6, 5, 4, 3, 2, 1, 0]);
        assert_eq!(canonical_form(&p), canonical_form(&a));
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert!(canonical_labeling(&p).automorphisms.len() >= 2);
    }

    #[test]
    fn p4_and_claw_differ() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_form(&p4), canonical_form(&claw));
        assert!(!is_isomorphic(&p4, &claw));
    }

    #[test]
    fn form_is_stable_under_graph6_round_trip() {
        let g = petersen();
        let f = canonical_form(&g);
        let back = crate::graph6::decode(&crate::graph6::encode(&g)).unwrap();
        assert_eq!(canonical_form(&back), f);
        assert_eq!(canonical_form(&f.to_graph()), f);
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        // Every labelled graph on 5 vertices: forms agree exactly when the
        // n! maxima agree, giving the 34 isomorphism classes.
        let mut classes = std::collections::HashMap::new();
        for bits in 0u32..1 << 10 {
            let mut e = vec![];
            let mut k = 0;
            for j in 1..5 {
                for i in 0..j {
                    if bits >> k & 1 == 1 {
                        e.push((i, j));
                    }
                    k += 1;
                }
            }
            let g = Graph::from_edges(5, &e).unwrap();
            let form = canonical_form(&g);
            let brute = brute_max_certificate(&g);
            assert_eq!(*classes.entry(brute).or_insert_with(|| form.clone()), form, "{g:?}");
        }
        assert_eq!(classes.len(), 34);
        let forms: std::collections::HashSet<_> = classes.values().collect();
        assert_eq!(forms.len(), 34);
    }

    #[test]
    fn highly_symmetric_graphs_finish() {
        let mut e = vec![];
        for u in 0..14 {
            for v in u + 1..14 {
                e.push((u, v));
            }
        }
        let k14 = Graph::from_edges(14, &e).unwrap();
        assert_eq!(canonical_labeling(&k14).certificate, k14.rows());
        let empty = Graph::empty(20).unwrap();
        assert_eq!(canonical_labeling(&empty).certificate, vec![0; 20]);
    }

    #[test]
    fn orbits() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(same_orbit(&p4, 0, 3));
        assert!(same_orbit(&p4, 1, 2));
        assert!(!same_orbit(&p4, 0, 1));
        // Same degree, different orbits: the two degree-2 vertices of a
        // triangle with a pendant path are distinguished by the pendant side.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]).unwrap();
        assert!(same_orbit(&g, 0, 1));
        assert!(!same_orbit(&g, 0, 3));
    }
}
