//! Canonical labeling by colour refinement plus individualization, and
//! local-complementation orbits over isomorphism classes.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Default bound on the number of isomorphism classes explored by [`lc_orbit`].
pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;

/// Edge bits of a canonically relabeled graph.
///
/// Bit `b(b-1)/2 + a` of `code` is the edge `{a, b}`, `a < b`, which is the
/// graph6 upper-triangle order. Codes of graphs with equal vertex count are
/// equal iff the graphs are isomorphic.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm {
    n: u8,
    code: u128,
}

#[inline]
fn pair_index(a: usize, b: usize) -> usize {
    debug_assert!(a < b);
    b * (b - 1) / 2 + a
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn code(&self) -> u128 {
        self.code
    }

    /// The edge bits in upper-triangle order.
    pub fn edge_bits(&self) -> impl Iterator<Item = bool> + '_ {
        let m = self.n() * self.n().saturating_sub(1) / 2;
        (0..m).map(move |i| (self.code >> i) & 1 == 1)
    }

    /// The canonically labeled representative graph.
    pub fn to_graph(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::empty(n).expect("canonical form has valid n");
        for b in 1..n {
            for a in 0..b {
                if (self.code >> pair_index(a, b)) & 1 == 1 {
                    g.toggle_edge(a, b);
                }
            }
        }
        g
    }
}

/// Code of `g` relabeled by `perm` (vertex `v` goes to `perm[v]`).
fn relabeled_code(g: &Graph, perm: &[u8; MAX_VERTICES]) -> u128 {
    let mut code = 0u128;
    for (a, b) in g.edges() {
        let (pa, pb) = (perm[a] as usize, perm[b] as usize);
        let (lo, hi) = if pa < pb { (pa, pb) } else { (pb, pa) };
        code |= 1u128 << pair_index(lo, hi);
    }
    code
}

/// Ordered partition of the vertices as a colour per vertex; colours are
/// `0..k` and cell order is colour order.
#[derive(Clone, Copy)]
struct Coloring {
    color: [u8; MAX_VERTICES],
    cells: usize,
}

/// Iterated colour refinement: a vertex's new colour is determined by its
/// old colour and the number of neighbours it has in each cell. New cells
/// are ordered by that signature, so the result depends only on the
/// ordered partition and the graph, never on vertex labels.
fn refine(g: &Graph, mut c: Coloring) -> Coloring {
    let n = g.n();
    loop {
        if c.cells == n {
            return c;
        }
        let mut cell_sets = [VertexSet::EMPTY; MAX_VERTICES];
        for v in 0..n {
            cell_sets[c.color[v] as usize].insert(v);
        }
        // signature[0] = old colour, then neighbour counts per cell
        let mut sigs = [[0u8; MAX_VERTICES + 1]; MAX_VERTICES];
        for (v, sig) in sigs.iter_mut().enumerate().take(n) {
            sig[0] = c.color[v];
            let nb = g.neighbors(v);
            for (k, cell) in cell_sets[..c.cells].iter().enumerate() {
                sig[k + 1] = (nb & *cell).len() as u8;
            }
        }
        let mut order: [u8; MAX_VERTICES] = [0; MAX_VERTICES];
        for (i, o) in order.iter_mut().enumerate().take(n) {
            *o = i as u8;
        }
        let order = &mut order[..n];
        order.sort_unstable_by(|&a, &b| sigs[a as usize][..=c.cells].cmp(&sigs[b as usize][..=c.cells]));
        let mut next = Coloring {
            color: [0; MAX_VERTICES],
            cells: 0,
        };
        let mut prev: Option<&[u8]> = None;
        for &v in order.iter() {
            let s = &sigs[v as usize][..=c.cells];
            if prev != Some(s) {
                next.cells += 1;
                prev = Some(s);
            }
            next.color[v as usize] = (next.cells - 1) as u8;
        }
        if next.cells == c.cells {
            return next;
        }
        c = next;
    }
}

/// Swapping `u` and `v` is an automorphism of `g`.
#[inline]
fn twins(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u) - VertexSet::singleton(v) == g.neighbors(v) - VertexSet::singleton(u)
}

fn search(g: &Graph, c: Coloring, best: &mut Option<u128>) {
    let c = refine(g, c);
    let n = g.n();
    if c.cells == n {
        let code = relabeled_code(g, &c.color);
        if best.is_none_or(|b| code < b) {
            *best = Some(code);
        }
        return;
    }
    // first non-singleton cell
    let mut sizes = [0u8; MAX_VERTICES];
    for v in 0..n {
        sizes[c.color[v] as usize] += 1;
    }
    let target = (0..c.cells).find(|&k| sizes[k] > 1).expect("non-discrete") as u8;
    let mut tried: [usize; MAX_VERTICES] = [0; MAX_VERTICES];
    let mut ntried = 0;
    for v in (0..n).filter(|&v| c.color[v] == target) {
        // a twin of an already tried vertex yields an isomorphic subtree
        if tried[..ntried].iter().any(|&u| twins(g, u, v)) {
            continue;
        }
        tried[ntried] = v;
        ntried += 1;
        let mut ind = c;
        for w in 0..n {
            if ind.color[w] > target || (ind.color[w] == target && w != v) {
                ind.color[w] += 1;
            }
        }
        ind.cells += 1;
        search(g, ind, best);
    }
}

/// Canonical form of `g`: the minimum code over all labelings reachable by
/// refinement and individualization.
pub fn canonicalize(g: &Graph) -> CanonicalForm {
    let start = Coloring {
        color: [0; MAX_VERTICES],
        cells: 1,
    };
    let mut best = None;
    search(g, start, &mut best);
    CanonicalForm {
        n: g.n() as u8,
        code: best.expect("at least one leaf"),
    }
}

/// Isomorphism classes reachable from a graph by local complementations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcOrbit {
    members: BTreeSet<CanonicalForm>,
}

impl LcOrbit {
    pub fn members(&self) -> &BTreeSet<CanonicalForm> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, c: &CanonicalForm) -> bool {
        self.members.contains(c)
    }

    /// Minimum member code; identifies the orbit.
    pub fn representative(&self) -> CanonicalForm {
        *self.members.first().expect("orbit is never empty")
    }
}

pub fn lc_orbit(g: &Graph) -> Result<LcOrbit> {
    lc_orbit_with_cap(g, DEFAULT_ORBIT_CAP)
}

/// Breadth-first closure of `g` under local complementation at every
/// vertex. Local complementation commutes with relabeling, so the search
/// runs over canonical representatives only.
pub fn lc_orbit_with_cap(g: &Graph, cap: usize) -> Result<LcOrbit> {
    let start = canonicalize(g);
    let mut members = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        let h = cur.to_graph();
        for a in 0..h.n() {
            if h.degree(a) < 2 {
                // complementing fewer than two neighbours changes nothing
                continue;
            }
            let next = canonicalize(&h.local_complement(a));
            if members.insert(next) {
                if members.len() > cap {
                    return Err(Error::OrbitTooLarge { cap });
                }
                queue.push_back(next);
            }
        }
    }
    Ok(LcOrbit { members })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_stars_agree() {
        let a = Graph::star(3).unwrap();
        let b = Graph::from_edges(3, &[(2, 0), (2, 1)]).unwrap();
        assert_eq!(canonicalize(&a), canonicalize(&b));
        assert_ne!(canonicalize(&a), canonicalize(&Graph::complete(3).unwrap()));
    }

    #[test]
    fn path_and_star_differ() {
        let p = Graph::path(4).unwrap();
        let s = Graph::star(4).unwrap();
        assert_ne!(canonicalize(&p), canonicalize(&s));
    }

    #[test]
    fn canonical_graph_round_trips() {
        let g = Graph::from_edges(5, &[(0, 3), (3, 4), (1, 2), (2, 4)]).unwrap();
        let c = canonicalize(&g);
        assert_eq!(canonicalize(&c.to_graph()), c);
        assert_eq!(c.to_graph().edge_count(), 4);
        assert_eq!(c.edge_bits().filter(|&b| b).count(), 4);
    }

    #[test]
    fn complete_and_empty_on_sixteen_vertices() {
        let k = canonicalize(&Graph::complete(16).unwrap());
        assert_eq!(k.code().count_ones(), 120);
        let e = canonicalize(&Graph::empty(16).unwrap());
        assert_eq!(e.code(), 0);
    }

    #[test]
    fn star_orbit_has_two_classes() {
        let orbit = lc_orbit(&Graph::star(3).unwrap()).unwrap();
        assert_eq!(orbit.len(), 2);
        assert!(orbit.contains(&canonicalize(&Graph::complete(3).unwrap())));
        assert!(orbit.contains(&canonicalize(&Graph::star(3).unwrap())));
    }

    #[test]
    fn edgeless_orbit_is_trivial() {
        assert_eq!(lc_orbit(&Graph::empty(5).unwrap()).unwrap().len(), 1);
    }

    #[test]
    fn two_star_copies_orbit_is_componentwise() {
        let s = Graph::star(3).unwrap();
        let k = Graph::complete(3).unwrap();
        let orbit = lc_orbit(&s.disjoint_union(&s).unwrap()).unwrap();
        let expected: BTreeSet<_> = [
            s.disjoint_union(&s).unwrap(),
            s.disjoint_union(&k).unwrap(),
            k.disjoint_union(&k).unwrap(),
        ]
        .iter()
        .map(canonicalize)
        .collect();
        assert_eq!(orbit.members(), &expected);
    }

    #[test]
    fn orbit_cap_is_enforced() {
        let g = Graph::star(3).unwrap();
        assert!(matches!(
            lc_orbit_with_cap(&g, 1),
            Err(Error::OrbitTooLarge { cap: 1 })
        ));
    }
}
