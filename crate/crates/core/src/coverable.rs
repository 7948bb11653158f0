//! t-coverable sets: every `δ Δ N_ω` with `|ω ∪ δ| <= t`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverableSet {
    n: usize,
    t: usize,
    members: Vec<VertexSet>,
    indicator: Vec<u8>,
}

impl CoverableSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Members in increasing bit order.
    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Length-`2^n` 0/1 table, indexed by subset bits.
    pub fn indicator(&self) -> &[u8] {
        &self.indicator
    }

    pub fn contains(&self, c: VertexSet) -> bool {
        self.indicator
            .get(c.bits() as usize)
            .is_some_and(|&b| b == 1)
    }

    /// Every subset is coverable, so the Bell operator is the identity.
    pub fn is_full(&self) -> bool {
        self.members.len() == self.indicator.len()
    }
}

/// Computes `C_t(G)` by enumerating supports `U` with `|U| <= t` and every
/// pair `ω, δ ⊆ U`.
pub fn coverable_set(g: &Graph, t: usize) -> Result<CoverableSet> {
    let n = g.n();
    if t > n {
        return Err(Error::WeightTooLarge { t, n });
    }
    let mut indicator = vec![0u8; 1 << n];
    for u in 0u32..(1 << n) {
        let support = VertexSet::from_bits(u);
        if support.len() > t {
            continue;
        }
        for omega in support.subsets() {
            let shifted = g.neighborhood_of_set(omega);
            for delta in support.subsets() {
                indicator[(delta ^ shifted).bits() as usize] = 1;
            }
        }
    }
    let members = indicator
        .iter()
        .enumerate()
        .filter(|(_, &b)| b == 1)
        .map(|(i, _)| VertexSet::from_bits(i as u32))
        .collect();
    Ok(CoverableSet {
        n,
        t,
        members,
        indicator,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Direct enumeration of all `(ω, δ)` pairs.
    fn brute_force(g: &Graph, t: usize) -> Vec<VertexSet> {
        let n = g.n();
        let mut out = Vec::new();
        for w in 0u32..(1 << n) {
            for d in 0u32..(1 << n) {
                if (w | d).count_ones() as usize <= t {
                    let omega = VertexSet::from_bits(w);
                    out.push(VertexSet::from_bits(d) ^ g.neighborhood_of_set(omega));
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn star_is_full_at_t1() {
        let cs = coverable_set(&Graph::star(3).unwrap(), 1).unwrap();
        assert_eq!(cs.len(), 8);
        assert!(cs.is_full());
    }

    #[test]
    fn t0_is_empty_set_only() {
        for g in [Graph::star(3).unwrap(), Graph::ring(7).unwrap(), Graph::empty(1).unwrap()] {
            let cs = coverable_set(&g, 0).unwrap();
            assert_eq!(cs.members(), &[VertexSet::EMPTY]);
            assert!(!cs.is_full());
        }
    }

    #[test]
    fn two_star_copies_at_t1() {
        let s = Graph::star(3).unwrap();
        let g = s.disjoint_union(&s).unwrap();
        let cs = coverable_set(&g, 1).unwrap();
        assert_eq!(cs.len(), 15);
        assert!(!cs.is_full());
        let v1 = VertexSet::full(3);
        let v2 = VertexSet::full(6) - v1;
        for c in VertexSet::full(6).subsets() {
            assert_eq!(cs.contains(c), c.is_subset(v1) || c.is_subset(v2), "{c:?}");
        }
    }

    #[test]
    fn complete_graph_closed_form() {
        for n in 3..=10 {
            let g = Graph::complete(n).unwrap();
            for t in 1..=3.min(n) {
                let cs = coverable_set(&g, t).unwrap();
                for c in VertexSet::full(n).subsets() {
                    let expected = c.len() <= t || c.len() >= n - t;
                    assert_eq!(cs.contains(c), expected, "n={n} t={t} c={c:?}");
                }
            }
        }
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        let graphs = [
            Graph::ring(5).unwrap(),
            Graph::path(6).unwrap(),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap(),
            Graph::star(3).unwrap().disjoint_union(&Graph::complete(3).unwrap()).unwrap(),
        ];
        for g in &graphs {
            for t in 0..=3 {
                let cs = coverable_set(g, t).unwrap();
                assert_eq!(cs.members(), brute_force(g, t).as_slice(), "{g:?} t={t}");
            }
        }
    }

    #[test]
    fn weight_above_n_is_rejected() {
        assert!(matches!(
            coverable_set(&Graph::star(3).unwrap(), 4),
            Err(Error::WeightTooLarge { t: 4, n: 3 })
        ));
    }
}
