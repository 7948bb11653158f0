//! Inputs shared by the benchmarks.

use bellgraph::{named_graph, Graph, NamedFamily};

/// Graphs with a few hundred to a few thousand Bell terms, by order.
pub fn workload(n: usize) -> Graph {
    match n {
        6 => named_graph(&NamedFamily::StarCopies(2)).unwrap(),
        9 => named_graph(&NamedFamily::CompleteJoin(vec![3, 3, 3])).unwrap(),
        _ => Graph::ring(n).unwrap(),
    }
}

/// Deterministic pseudo-random graph (xorshift), for canonicalization timing.
pub fn scrambled(n: usize, seed: u64) -> Graph {
    let mut s = seed.max(1);
    let mut g = Graph::empty(n).unwrap();
    for b in 1..n {
        for a in 0..b {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            if s & 1 == 1 {
                g.add_edge(a, b).unwrap();
            }
        }
    }
    g
}
