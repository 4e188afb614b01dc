//! Undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` neighbour mask per vertex. Self-loops are
//! kept out of band in a separate vertex mask: input graphs are simple, and
//! only conduction graphs carry loops.

mod fixtures;
mod graph6;

pub use fixtures::{fixture, FIXTURE_NAMES};
pub use graph6::{from_graph6, from_graph6_with_loops, to_graph6, to_graph6_with_loops};

use std::collections::VecDeque;
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Largest supported order.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterate over the set bits of a mask, lowest first.
#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// An undirected graph without parallel edges, optionally with loops.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    loops: u64,
}

impl Graph {
    /// Edgeless graph on `n` vertices. `n = 0` is allowed and denotes the empty
    /// graph, which arises when deleting vertices.
    ///
    /// Panics if `n > 64`; use [`Graph::try_new`] for untrusted sizes.
    pub fn new(n: usize) -> Self {
        Self::try_new(n).expect("vertex count out of range")
    }

    pub fn try_new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            loops: 0,
        })
    }

    /// Simple graph from an edge list. Panics on out-of-range vertices or
    /// self-loops.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Build a graph from raw neighbour masks. Masks must be symmetric,
    /// loop-free and confined to the low `n` bits.
    pub fn from_masks(adj: Vec<u64>, loops: u64) -> Self {
        let n = adj.len();
        assert!(n <= MAX_VERTICES);
        debug_assert!(loops & !low_bits(n) == 0);
        debug_assert!((0..n).all(|u| adj[u] & bit(u) == 0 && adj[u] & !low_bits(n) == 0));
        debug_assert!((0..n).all(|u| bits(adj[u]).all(|v| adj[v] & bit(u) != 0)));
        Graph { n, adj, loops }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_bits(self.n)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "vertex out of range");
        assert_ne!(u, v, "use add_loop for self-loops");
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    pub fn add_loop(&mut self, u: usize) {
        assert!(u < self.n, "vertex out of range");
        self.loops |= bit(u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn has_loop(&self, u: usize) -> bool {
        self.loops & bit(u) != 0
    }

    /// Neighbour mask of `u`, not including `u` itself even when it has a loop.
    #[inline]
    pub fn neighbors(&self, u: usize) -> u64 {
        self.adj[u]
    }

    #[inline]
    pub fn loop_mask(&self) -> u64 {
        self.loops
    }

    pub fn loop_count(&self) -> usize {
        self.loops.count_ones() as usize
    }

    /// Number of neighbours of `u`, ignoring any loop.
    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !low_bits(u + 1)).map(move |v| (u, v)))
    }

    pub fn is_simple(&self) -> bool {
        self.loops == 0
    }

    /// Copy of the graph without its loops.
    pub fn simple_part(&self) -> Graph {
        Graph {
            n: self.n,
            adj: self.adj.clone(),
            loops: 0,
        }
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).min().unwrap_or(0)
    }

    /// Degrees in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|u| self.degree(u)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Induced subgraph on the vertices in `keep`, relabelled in increasing
    /// order of the original labels.
    pub fn induced(&self, keep: u64) -> Graph {
        let keep = keep & self.vertex_mask();
        let old: Vec<usize> = bits(keep).collect();
        let mut adj = vec![0u64; old.len()];
        let mut loops = 0u64;
        for (i, &u) in old.iter().enumerate() {
            let row = self.adj[u] & keep;
            adj[i] = compress(row, keep);
            if self.has_loop(u) {
                loops |= bit(i);
            }
        }
        Graph {
            n: old.len(),
            adj,
            loops,
        }
    }

    /// `G - v`, with vertices above `v` shifted down by one.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.induced(self.vertex_mask() & !bit(v))
    }

    /// `G - S` for a vertex mask `S`.
    pub fn delete_vertices(&self, remove: u64) -> Graph {
        self.induced(self.vertex_mask() & !remove)
    }

    /// Relabel so that vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            let mut row = 0u64;
            for v in bits(self.adj[u]) {
                row |= bit(perm[v]);
            }
            g.adj[perm[u]] = row;
            if self.has_loop(u) {
                g.loops |= bit(perm[u]);
            }
        }
        g
    }

    /// Disjoint union; vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::try_new(n)?;
        g.adj[..self.n].copy_from_slice(&self.adj);
        for u in 0..other.n {
            g.adj[self.n + u] = other.adj[u] << self.n;
        }
        g.loops = self.loops | (other.loops << self.n);
        Ok(g)
    }

    /// Vertex masks of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen & bit(s) != 0 {
                continue;
            }
            let comp = self.reach(s);
            seen |= comp;
            out.push(comp);
        }
        out
    }

    fn reach(&self, s: usize) -> u64 {
        let mut comp = bit(s);
        let mut frontier = bit(s);
        while frontier != 0 {
            let mut next = 0u64;
            for u in bits(frontier) {
                next |= self.adj[u];
            }
            frontier = next & !comp;
            comp |= next;
        }
        comp
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0) == self.vertex_mask()
    }

    /// A proper 2-colouring as a mask of the colour-1 class, if one exists.
    /// Loops make a graph non-bipartite.
    pub fn bipartition(&self) -> Option<u64> {
        if self.loops != 0 {
            return None;
        }
        let mut side = 0u64;
        let mut seen = 0u64;
        for s in 0..self.n {
            if seen & bit(s) != 0 {
                continue;
            }
            seen |= bit(s);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let u_side = side & bit(u) != 0;
                for v in bits(self.adj[u]) {
                    if seen & bit(v) == 0 {
                        seen |= bit(v);
                        if !u_side {
                            side |= bit(v);
                        }
                        queue.push_back(v);
                    } else if (side & bit(v) != 0) == u_side {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Connected, simple and of maximum degree at most three.
    pub fn is_chemical(&self) -> bool {
        self.is_simple() && self.is_connected() && self.max_degree() <= 3
    }

    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.n).all(|u| self.degree(u) == d)
    }

    /// Breadth-first distances from `s`; `None` for unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut seen = bit(s);
        let mut frontier = bit(s);
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let mut next = 0u64;
            for u in bits(frontier) {
                next |= self.adj[u];
            }
            next &= !seen;
            for v in bits(next) {
                dist[v] = Some(d);
            }
            seen |= next;
            frontier = next;
        }
        dist
    }

    /// Articulation points as a vertex mask.
    pub fn cut_vertices(&self) -> u64 {
        let n = self.n;
        let mut disc = [u8::MAX; MAX_VERTICES];
        let mut low = [0u8; MAX_VERTICES];
        let mut cut = 0u64;
        let mut time = 0u8;
        // Iterative DFS: (vertex, parent, remaining neighbours).
        let mut stack: Vec<(usize, usize, u64)> = Vec::with_capacity(n);
        for root in 0..n {
            if disc[root] != u8::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            stack.push((root, usize::MAX, self.adj[root]));
            while let Some(top) = stack.last_mut() {
                let (u, parent) = (top.0, top.1);
                if top.2 != 0 {
                    let v = top.2.trailing_zeros() as usize;
                    top.2 &= top.2 - 1;
                    if disc[v] == u8::MAX {
                        disc[v] = time;
                        low[v] = time;
                        time += 1;
                        if u == root {
                            root_children += 1;
                        }
                        stack.push((v, u, self.adj[v]));
                    } else if v != parent {
                        low[u] = low[u].min(disc[v]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[u]);
                        if parent != root && low[u] >= disc[parent] {
                            cut |= bit(parent);
                        }
                    }
                }
            }
            if root_children > 1 {
                cut |= bit(root);
            }
        }
        cut
    }

    /// Integer adjacency matrix: 1 per edge, 2 on the diagonal per loop.
    pub fn adjacency_matrix(&self) -> AdjacencyMatrix {
        let n = self.n;
        let mut m = IntMatrix::zeros(n, n);
        for u in 0..n {
            for v in bits(self.adj[u]) {
                m.set(u, v, 1);
            }
            if self.has_loop(u) {
                m.set(u, u, 2);
            }
        }
        AdjacencyMatrix(m)
    }

    /// Inverse of [`Graph::adjacency_matrix`]. Accepts only symmetric matrices
    /// with off-diagonal entries in {0, 1} and diagonal entries in {0, 2}.
    pub fn from_adjacency(m: &IntMatrix) -> Result<Graph> {
        if m.rows() != m.cols() {
            return Err(Error::Domain("adjacency matrix must be square".into()));
        }
        let mut g = Graph::try_new(m.rows())?;
        for u in 0..m.rows() {
            match m.get(u, u) {
                0 => {}
                2 => g.add_loop(u),
                x => return Err(Error::Domain(format!("diagonal entry {x} at {u}"))),
            }
            for v in u + 1..m.cols() {
                if m.get(u, v) != m.get(v, u) {
                    return Err(Error::NotSymmetric);
                }
                match m.get(u, v) {
                    0 => {}
                    1 => g.add_edge(u, v),
                    x => return Err(Error::Domain(format!("entry {x} at ({u}, {v})"))),
                }
            }
        }
        Ok(g)
    }
}

/// Pack the bits of `row` selected by `keep` into the low bits.
#[inline]
fn compress(row: u64, keep: u64) -> u64 {
    let mut out = 0u64;
    let mut i = 0;
    for v in bits(keep) {
        if row & bit(v) != 0 {
            out |= bit(i);
        }
        i += 1;
    }
    out
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
        write!(f, "]")?;
        if self.loops != 0 {
            write!(f, ", loops={:?}", bits(self.loops).collect::<Vec<_>>())?;
        }
        write!(f, ")")
    }
}

/// Adjacency matrix of a [`Graph`]: symmetric, off-diagonal entries in {0, 1},
/// diagonal entries in {0, 2}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyMatrix(IntMatrix);

impl AdjacencyMatrix {
    pub fn order(&self) -> usize {
        self.0.rows()
    }

    pub fn into_inner(self) -> IntMatrix {
        self.0
    }

    pub(crate) fn from_int_unchecked(m: IntMatrix) -> Self {
        AdjacencyMatrix(m)
    }
}

impl Deref for AdjacencyMatrix {
    type Target = IntMatrix;

    fn deref(&self) -> &IntMatrix {
        &self.0
    }
}

/// Common small graphs used throughout the tests and fixtures.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Graph {
        complete_bipartite(1, leaves)
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn adjacency_of_small_graphs() {
        let k2 = path(2);
        let a = k2.adjacency_matrix();
        assert_eq!(a.to_rows(), vec![vec![0, 1], vec![1, 0]]);

        let mut k1 = Graph::new(1);
        k1.add_loop(0);
        assert_eq!(k1.adjacency_matrix().to_rows(), vec![vec![2]]);

        let c4 = cycle(4).adjacency_matrix();
        assert_eq!(
            c4.to_rows(),
            vec![
                vec![0, 1, 0, 1],
                vec![1, 0, 1, 0],
                vec![0, 1, 0, 1],
                vec![1, 0, 1, 0]
            ]
        );
    }

    #[test]
    fn structural_predicates() {
        let c5 = cycle(5);
        assert!(c5.is_connected());
        assert!(!c5.is_bipartite());
        assert!(c5.is_chemical());

        let two_k2 = path(2).disjoint_union(&path(2)).unwrap();
        assert!(!two_k2.is_connected());
        assert_eq!(two_k2.components().len(), 2);

        assert!(cycle(6).is_bipartite());
        assert!(!star(4).is_chemical());
        assert_eq!(star(3).degree_sequence(), vec![3, 1, 1, 1]);
    }

    #[test]
    fn deletion_relabels_downwards() {
        let p4 = path(4);
        let g = p4.delete_vertex(1);
        assert_eq!(g.order(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2)]);
        assert_eq!(p4.delete_vertices(0b1111).order(), 0);
        assert!(Graph::new(0).is_connected());
    }

    #[test]
    fn cut_vertices_of_paths_and_cycles() {
        assert_eq!(path(5).cut_vertices(), 0b01110);
        assert_eq!(cycle(5).cut_vertices(), 0);
        assert_eq!(star(3).cut_vertices(), 0b1);
        assert_eq!(path(2).cut_vertices(), 0);
    }

    #[test]
    fn adjacency_roundtrip_with_loops() {
        let mut g = cycle(4);
        g.add_loop(2);
        let back = Graph::from_adjacency(&g.adjacency_matrix()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn permute_preserves_structure() {
        let g = path(4);
        let h = g.permute(&[3, 2, 1, 0]);
        assert_eq!(h, g);
        let h = g.permute(&[1, 0, 2, 3]);
        assert!(h.has_edge(0, 1) && h.has_edge(0, 2) && h.has_edge(2, 3));
        assert!(!h.has_edge(1, 2));
    }

    #[test]
    fn distances() {
        let d = cycle(6).distances_from(0);
        assert_eq!(
            d,
            vec![Some(0), Some(1), Some(2), Some(3), Some(2), Some(1)]
        );
        let two = path(2).disjoint_union(&Graph::new(1)).unwrap();
        assert_eq!(two.distances_from(0)[2], None);
    }
}
