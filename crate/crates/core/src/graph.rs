//! Labeled simple graphs on at most [`MAX_VERTICES`] vertices.

use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A simple undirected graph with adjacency stored as one [`VertexSet`] row per vertex.
///
/// Rows beyond `n` are always empty, so derived equality and hashing are
/// equality and hashing of labeled graphs.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [VertexSet; MAX_VERTICES],
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: [VertexSet::EMPTY; MAX_VERTICES],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, checking symmetry and the absence of loops.
    pub fn from_rows(rows: &[VertexSet]) -> Result<Self> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let range = VertexSet::full(n);
        for (a, &row) in rows.iter().enumerate() {
            if !row.is_subset(range) {
                return Err(Error::VertexOutOfRange {
                    vertex: (row - range).iter().next().unwrap_or(n),
                    n,
                });
            }
            if row.contains(a) {
                return Err(Error::SelfLoop(a));
            }
            g.adj[a] = row;
        }
        for a in 0..n {
            for b in g.adj[a] {
                if !g.adj[b].contains(a) {
                    return Err(Error::VertexOutOfRange { vertex: b, n });
                }
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for a in 0..n {
            g.adj[a] = VertexSet::full(n) - VertexSet::singleton(a);
        }
        Ok(g)
    }

    /// Star on `n` vertices with center 0.
    pub fn star(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|b| (0, b)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle `0 - 1 - .. - (n-1) - 0`; requires `n >= 3`.
    pub fn ring(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::VertexCount { n, max: MAX_VERTICES });
        }
        let edges: Vec<_> = (0..n).map(|a| (a, (a + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|a| (a - 1, a)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Disjoint union with `other`'s vertices relabeled to `self.n() ..`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        g.adj[..self.n].copy_from_slice(&self.adj[..self.n]);
        for a in 0..other.n {
            g.adj[self.n + a] = VertexSet::from_bits(other.adj[a].bits() << self.n);
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// `N_a`.
    #[inline]
    pub fn neighbors(&self, a: usize) -> VertexSet {
        self.adj[a]
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.adj[..self.n]
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.adj[a].contains(b)
    }

    pub fn degree(&self, a: usize) -> usize {
        self.adj[a].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(a, b)` with `a < b`, ordered by `b` then `a`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |b| (0..b).filter(move |&a| self.adj[a].contains(b)).map(move |a| (a, b)))
    }

    /// Number of edges with both endpoints in `s`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        s.iter().map(|a| (self.adj[a] & s).len()).sum::<usize>() / 2
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        self.adj[a].insert(b);
        self.adj[b].insert(a);
        Ok(())
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) -> Result<()> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        self.adj[a].remove(b);
        self.adj[b].remove(a);
        Ok(())
    }

    pub(crate) fn toggle_edge(&mut self, a: usize, b: usize) {
        self.adj[a].toggle(b);
        self.adj[b].toggle(a);
    }

    /// `N_ω`: the symmetric difference of `N_v` over `v ∈ ω`.
    ///
    /// A vertex lies in the result iff it has an odd number of neighbours in `ω`.
    #[inline]
    pub fn neighborhood_of_set(&self, omega: VertexSet) -> VertexSet {
        omega
            .iter()
            .fold(VertexSet::EMPTY, |acc, v| acc ^ self.adj[v])
    }

    /// Local complementation at `a`: complements the subgraph induced on `N_a`.
    pub fn local_complement(&self, a: usize) -> Graph {
        assert!(a < self.n, "vertex {a} out of range");
        let nb = self.adj[a];
        let mut g = *self;
        for u in nb {
            // toggle every edge from u to the rest of the neighbourhood
            g.adj[u] ^= nb - VertexSet::singleton(u);
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph {
            n: self.n,
            adj: [VertexSet::EMPTY; MAX_VERTICES],
        };
        for a in 0..self.n {
            g.adj[perm[a]] = self.adj[a].iter().map(|b| perm[b]).collect();
        }
        g
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = self.neighborhood_union(frontier) - comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    fn neighborhood_union(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v])
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (a, b)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}-{b}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn neighborhood_of_star_sets() {
        let g = Graph::star(3).unwrap();
        assert_eq!(g.neighborhood_of_set(set(&[0])), set(&[1, 2]));
        assert_eq!(g.neighborhood_of_set(set(&[1, 2])), VertexSet::EMPTY);
        assert_eq!(g.neighborhood_of_set(VertexSet::EMPTY), VertexSet::EMPTY);
    }

    #[test]
    fn local_complement_star_and_triangle() {
        let star = Graph::star(3).unwrap();
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(star.local_complement(0), k3);
        for a in 0..3 {
            let s = k3.local_complement(a);
            assert_eq!(s.degree(a), 2);
            assert_eq!(s.edge_count(), 2);
        }
        assert_eq!(k3.local_complement(0), star);
        let e = Graph::empty(4).unwrap();
        assert_eq!(e.local_complement(2), e);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Graph::empty(0).is_err());
        assert!(Graph::empty(17).is_err());
        assert!(matches!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(Error::SelfLoop(1))
        ));
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::from_rows(&[set(&[1]), VertexSet::EMPTY]).is_err());
    }

    #[test]
    fn disjoint_union_layout() {
        let s = Graph::star(3).unwrap();
        let g = s.disjoint_union(&s).unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 2), (3, 4), (3, 5)]);
        assert_eq!(g.components(), vec![set(&[0, 1, 2]), set(&[3, 4, 5])]);
    }

    #[test]
    fn edges_within_counts_induced_edges() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.edges_within(set(&[0, 1, 2])), 3);
        assert_eq!(k4.edges_within(set(&[3])), 0);
    }
}
