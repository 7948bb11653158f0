#![allow(dead_code)]

use std::path::PathBuf;

use bellgraph::search::read_census;
use bellgraph::{Graph, VertexSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut impl Rng, n: usize) -> Graph {
    let p: f64 = rng.random_range(0.2..0.8);
    let mut g = Graph::empty(n).unwrap();
    for b in 1..n {
        for a in 0..b {
            if rng.random_bool(p) {
                g.add_edge(a, b).unwrap();
            }
        }
    }
    g
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn census_path(n: usize) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("tests/data/census_n{n}.g6"))
}

/// Isomorphism-class representatives for `3 <= n <= 7` from the stored census.
pub fn census(n: usize) -> Vec<Graph> {
    read_census(&census_path(n)).unwrap()
}

/// Coefficient table of `A ⊗ B` on a block layout (A's vertices low).
/// `2^-(na+nb) Σ ka[S1] kb[S2] G_{S1} ⊗ G_{S2}` with `G_{S1 ∪ S2} = G_{S1} ⊗ G_{S2}`.
pub fn tensor(ka: &[i64], kb: &[i64]) -> Vec<i64> {
    let mut out = vec![0; ka.len() * kb.len()];
    for (s2, &b) in kb.iter().enumerate() {
        for (s1, &a) in ka.iter().enumerate() {
            out[s2 * ka.len() + s1] = a * b;
        }
    }
    out
}

/// Coefficients of the identity on `n` qubits.
pub fn identity(n: usize) -> Vec<i64> {
    let mut k = vec![0; 1 << n];
    k[0] = 1 << n;
    k
}

pub fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn widen(k: &[i32]) -> Vec<i64> {
    k.iter().map(|&v| v as i64).collect()
}

pub fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}
