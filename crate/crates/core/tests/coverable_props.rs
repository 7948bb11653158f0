mod common;

use bellgraph::{coverable_set, Graph, VertexSet};
use common::{random_graph, rng};
use rand::Rng;

fn brute_force(g: &Graph, t: usize) -> Vec<VertexSet> {
    let n = g.n();
    let mut out = Vec::new();
    for w in 0u32..(1 << n) {
        for d in 0u32..(1 << n) {
            if ((w | d).count_ones() as usize) <= t {
                out.push(VertexSet::from_bits(d) ^ g.neighborhood_of_set(VertexSet::from_bits(w)));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

#[test]
fn monotone_in_t() {
    let mut r = rng(21);
    for _ in 0..40 {
        let n = r.random_range(2..=10);
        let g = random_graph(&mut r, n);
        let mut prev = coverable_set(&g, 0).unwrap();
        assert!(prev.contains(VertexSet::EMPTY));
        for t in 1..=n.min(4) {
            let cur = coverable_set(&g, t).unwrap();
            assert!(prev.members().iter().all(|&c| cur.contains(c)));
            prev = cur;
        }
    }
}

#[test]
fn support_enumeration_matches_pair_enumeration() {
    let mut r = rng(22);
    for _ in 0..30 {
        let n = r.random_range(2..=7);
        let g = random_graph(&mut r, n);
        for t in 0..=3.min(n) {
            assert_eq!(coverable_set(&g, t).unwrap().members(), brute_force(&g, t).as_slice());
        }
    }
}

#[test]
fn disjoint_union_at_t1_is_componentwise() {
    let mut r = rng(23);
    for _ in 0..20 {
        let (n1, n2) = (r.random_range(1..=4), r.random_range(1..=4));
        let g1 = random_graph(&mut r, n1);
        let g2 = random_graph(&mut r, n2);
        let g = g1.disjoint_union(&g2).unwrap();
        let c1 = coverable_set(&g1, 1).unwrap();
        let c2 = coverable_set(&g2, 1).unwrap();
        let cs = coverable_set(&g, 1).unwrap();
        for c in g.vertices().subsets() {
            let lo = VertexSet::from_bits(c.bits() & ((1 << n1) - 1));
            let hi = VertexSet::from_bits(c.bits() >> n1);
            let expected = (hi.is_empty() && c1.contains(lo)) || (lo.is_empty() && c2.contains(hi));
            assert_eq!(cs.contains(c), expected);
        }
        assert_eq!(cs.members(), brute_force(&g, 1).as_slice());
    }
}
