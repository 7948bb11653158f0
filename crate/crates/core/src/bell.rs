//! Error-tolerating Bell operators in the stabilizer basis and their exact
//! local-hidden-variable (LHV) bounds.
//!
//! `B_t(G) = 2^-n Σ_S k[S] G_S` with `k[S] = Σ_{C ∈ C_t} (-1)^{|C ∩ S|}`, the
//! Walsh–Hadamard transform of the coverable-set indicator. An LHV model
//! assigns `±1` to every `X_a, Y_a, Z_a`; the value of `G_S` is its sign
//! times the product of the assigned letters.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coverable::{coverable_set, CoverableSet};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pauli::{stabilizer_element, stabilizer_signs, PauliString};
use crate::transform::{walsh_hadamard, walsh_hadamard_par};
use crate::vertex_set::VertexSet;

/// Largest `n` for the `4^n`-entry transform engine by default.
pub const TRANSFORM_CAP: usize = 12;
/// Largest `n` for the unreduced `8^n` enumeration.
pub const FULL_CAP: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BellCoefficients {
    n: usize,
    t: usize,
    k: Vec<i32>,
}

impl BellCoefficients {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// `k[S]`, indexed by `S.bits()`.
    pub fn k(&self) -> &[i32] {
        &self.k
    }

    pub fn get(&self, s: VertexSet) -> i32 {
        self.k[s.bits() as usize]
    }

    /// `Σ_S k[S]`; equals `2^n` for every graph.
    pub fn sum(&self) -> i64 {
        self.k.iter().map(|&v| v as i64).sum()
    }
}

pub fn bell_coefficients(g: &Graph, t: usize) -> Result<BellCoefficients> {
    Ok(coefficients_from(&coverable_set(g, t)?))
}

pub fn coefficients_from(cs: &CoverableSet) -> BellCoefficients {
    let mut k: Vec<i32> = cs.indicator().iter().map(|&b| b as i32).collect();
    walsh_hadamard(&mut k);
    BellCoefficients {
        n: cs.n(),
        t: cs.t(),
        k,
    }
}

/// One stabilizer term `k[S] · G_S` with its letter supports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BellTerm {
    pub set: VertexSet,
    pub x_letters: VertexSet,
    pub y_letters: VertexSet,
    pub z_letters: VertexSet,
    /// `k[S]` times the sign of `G_S`.
    pub weight: i32,
}

/// Bell operator with the per-`S` stabilizer signs resolved once.
#[derive(Clone, Debug)]
pub struct BellOperator {
    graph: Graph,
    coefficients: BellCoefficients,
    coverable_len: usize,
    full: bool,
    terms: Vec<BellTerm>,
}

impl BellOperator {
    pub fn new(g: &Graph, t: usize) -> Result<Self> {
        let cs = coverable_set(g, t)?;
        let coefficients = coefficients_from(&cs);
        let signs = stabilizer_signs(g);
        let terms = g
            .vertices()
            .subsets()
            .filter_map(|s| {
                let k = coefficients.get(s);
                if k == 0 {
                    return None;
                }
                let nb = g.neighborhood_of_set(s);
                let y = s & nb;
                Some(BellTerm {
                    set: s,
                    x_letters: s - y,
                    y_letters: y,
                    z_letters: nb - s,
                    weight: k * signs[s.bits() as usize] as i32,
                })
            })
            .collect();
        Ok(BellOperator {
            graph: *g,
            coefficients,
            coverable_len: cs.len(),
            full: cs.is_full(),
            terms,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn t(&self) -> usize {
        self.coefficients.t()
    }

    pub fn coefficients(&self) -> &BellCoefficients {
        &self.coefficients
    }

    pub fn coverable_len(&self) -> usize {
        self.coverable_len
    }

    /// The operator is the identity.
    pub fn is_full(&self) -> bool {
        self.full
    }

    /// Terms with nonzero `k[S]`, in increasing `S`.
    pub fn terms(&self) -> &[BellTerm] {
        &self.terms
    }

    /// `2^n · B_t(G)` as signed Pauli strings: `(k[S], G_S)` for nonzero `k[S]`.
    pub fn expansion(&self) -> Vec<(i32, PauliString)> {
        self.terms
            .iter()
            .map(|term| {
                (
                    self.coefficients.get(term.set),
                    stabilizer_element(&self.graph, term.set),
                )
            })
            .collect()
    }
}

/// Deterministic LHV assignment: the sets of sites whose `X`, `Y` or `Z`
/// observable takes the value `-1`. Reduced engines keep `z_neg` empty.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LhvAssignment {
    pub x_neg: VertexSet,
    pub y_neg: VertexSet,
    pub z_neg: VertexSet,
}

impl LhvAssignment {
    pub fn reduced(x_neg: VertexSet, y_neg: VertexSet) -> Self {
        LhvAssignment {
            x_neg,
            y_neg,
            z_neg: VertexSet::EMPTY,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LhvResult {
    pub bound: Dyadic,
    pub argmax: LhvAssignment,
    /// `bound < 1`: the inequality can be violated.
    pub valid: bool,
}

impl LhvResult {
    fn new(numerator: i64, n: usize, argmax: LhvAssignment) -> Self {
        let bound = Dyadic::new(numerator, n as u32);
        LhvResult {
            bound,
            argmax,
            valid: bound < Dyadic::ONE,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Engine {
    /// Transform up to [`TRANSFORM_CAP`], direct beyond.
    #[default]
    Auto,
    /// Per-assignment evaluation over the `4^n` reduced assignments.
    Direct,
    /// One `2n`-variable Walsh–Hadamard transform yielding all reduced values.
    Transform,
    /// Unreduced `8^n` enumeration, `n <= FULL_CAP`.
    Full,
}

#[inline]
fn parity(bits: u32) -> bool {
    bits.count_ones() & 1 == 1
}

/// Numerator over `2^n` of the Bell value under assignment `a`.
fn value_numerator(terms: &[BellTerm], a: &LhvAssignment) -> i64 {
    terms
        .iter()
        .map(|term| {
            let odd = parity(
                (term.x_letters & a.x_neg).bits()
                    ^ (term.y_letters & a.y_neg).bits()
                    ^ (term.z_letters & a.z_neg).bits(),
            );
            if odd {
                -(term.weight as i64)
            } else {
                term.weight as i64
            }
        })
        .sum()
}

pub fn lhv_value(op: &BellOperator, a: &LhvAssignment) -> Dyadic {
    Dyadic::new(value_numerator(&op.terms, a), op.n() as u32)
}

/// Best value with the lowest key among ties.
#[derive(Clone, Copy)]
struct Best {
    value: i64,
    key: u64,
}

impl Best {
    const NONE: Best = Best {
        value: i64::MIN,
        key: u64::MAX,
    };

    #[inline]
    fn offer(&mut self, value: i64, key: u64) {
        if value > self.value || (value == self.value && key < self.key) {
            *self = Best { value, key };
        }
    }

    fn merge(mut self, other: Best) -> Best {
        self.offer(other.value, other.key);
        self
    }
}

/// Per-`x_neg` sweep over all `y_neg`, keyed by `x_neg << n | y_neg`.
fn direct_row(terms: &[BellTerm], n: usize, x: u32, mut visit: impl FnMut(u32, i64)) {
    let row: Vec<(u32, i64)> = terms
        .iter()
        .map(|t| {
            let w = t.weight as i64;
            (t.y_letters.bits(), if parity(t.x_letters.bits() & x) { -w } else { w })
        })
        .collect();
    for y in 0u32..(1 << n) {
        let v = row
            .iter()
            .map(|&(sy, w)| if parity(sy & y) { -w } else { w })
            .sum();
        visit(y, v);
    }
}

fn direct_bound(op: &BellOperator) -> LhvResult {
    let n = op.n();
    let best = (0u32..(1 << n))
        .into_par_iter()
        .map(|x| {
            let mut best = Best::NONE;
            direct_row(&op.terms, n, x, |y, v| best.offer(v, ((x as u64) << n) | y as u64));
            best
        })
        .reduce(|| Best::NONE, Best::merge);
    LhvResult::new(best.value, n, split_key(best.key, n))
}

fn split_key(key: u64, n: usize) -> LhvAssignment {
    let mask = (1u64 << n) - 1;
    LhvAssignment::reduced(
        VertexSet::from_bits((key >> n) as u32),
        VertexSet::from_bits((key & mask) as u32),
    )
}

/// All `4^n` reduced values (numerators over `2^n`) via a single transform
/// of `H[x_part << n | y_part] = k[S] · sign(S)`.
fn transform_table(op: &BellOperator) -> Result<Vec<i32>> {
    let n = op.n();
    if n > TRANSFORM_CAP {
        return Err(Error::TransformTooLarge {
            n,
            cap: TRANSFORM_CAP,
        });
    }
    let mut table = vec![0i32; 1 << (2 * n)];
    for term in &op.terms {
        let idx = ((term.x_letters.bits() as usize) << n) | term.y_letters.bits() as usize;
        table[idx] += term.weight;
    }
    walsh_hadamard_par(&mut table);
    Ok(table)
}

fn transform_bound(op: &BellOperator) -> Result<LhvResult> {
    let n = op.n();
    let table = transform_table(op)?;
    let best = table
        .par_chunks(1 << n.min(10))
        .enumerate()
        .map(|(c, chunk)| {
            let base = (c << n.min(10)) as u64;
            let mut best = Best::NONE;
            for (i, &v) in chunk.iter().enumerate() {
                best.offer(v as i64, base + i as u64);
            }
            best
        })
        .reduce(|| Best::NONE, Best::merge);
    Ok(LhvResult::new(best.value, n, split_key(best.key, n)))
}

fn full_bound(op: &BellOperator) -> Result<LhvResult> {
    let n = op.n();
    if n > FULL_CAP {
        return Err(Error::TooManyVertices {
            what: "full LHV enumeration",
            n,
            max: FULL_CAP,
        });
    }
    let best = (0u32..(1 << n))
        .into_par_iter()
        .map(|x| {
            let mut best = Best::NONE;
            for y in 0u32..(1 << n) {
                for z in 0u32..(1 << n) {
                    let a = LhvAssignment {
                        x_neg: VertexSet::from_bits(x),
                        y_neg: VertexSet::from_bits(y),
                        z_neg: VertexSet::from_bits(z),
                    };
                    let key = ((x as u64) << (2 * n)) | ((y as u64) << n) | z as u64;
                    best.offer(value_numerator(&op.terms, &a), key);
                }
            }
            best
        })
        .reduce(|| Best::NONE, Best::merge);
    let mask = (1u64 << n) - 1;
    let argmax = LhvAssignment {
        x_neg: VertexSet::from_bits((best.key >> (2 * n)) as u32),
        y_neg: VertexSet::from_bits(((best.key >> n) & mask) as u32),
        z_neg: VertexSet::from_bits((best.key & mask) as u32),
    };
    Ok(LhvResult::new(best.value, n, argmax))
}

/// `D_t(G)`: the maximum Bell value over deterministic LHV assignments.
/// Ties resolve to the lowest `(x_neg, y_neg[, z_neg])` in lexicographic bit order.
pub fn lhv_bound(g: &Graph, t: usize) -> Result<LhvResult> {
    lhv_bound_with(g, t, Engine::Auto)
}

pub fn lhv_bound_with(g: &Graph, t: usize, engine: Engine) -> Result<LhvResult> {
    operator_bound(&BellOperator::new(g, t)?, engine)
}

/// Unreduced bound over independent `±1` values for every `X_a, Y_a, Z_a`.
pub fn lhv_bound_full(g: &Graph, t: usize) -> Result<LhvResult> {
    lhv_bound_with(g, t, Engine::Full)
}

pub fn operator_bound(op: &BellOperator, engine: Engine) -> Result<LhvResult> {
    match engine {
        Engine::Auto if op.n() <= TRANSFORM_CAP => transform_bound(op),
        Engine::Auto | Engine::Direct => Ok(direct_bound(op)),
        Engine::Transform => transform_bound(op),
        Engine::Full => full_bound(op),
    }
}

/// Every reduced assignment value as a numerator over `2^n`, indexed by
/// `x_neg << n | y_neg`. Only the direct and transform engines apply.
pub fn lhv_values(op: &BellOperator, engine: Engine) -> Result<Vec<i64>> {
    let n = op.n();
    match engine {
        Engine::Transform => Ok(transform_table(op)?.into_iter().map(i64::from).collect()),
        Engine::Direct => {
            let rows: Vec<Vec<i64>> = (0u32..(1 << n))
                .into_par_iter()
                .map(|x| {
                    let mut row = Vec::with_capacity(1 << n);
                    direct_row(&op.terms, n, x, |_, v| row.push(v));
                    row
                })
                .collect();
            Ok(rows.concat())
        }
        Engine::Auto => lhv_values(
            op,
            if n <= TRANSFORM_CAP {
                Engine::Transform
            } else {
                Engine::Direct
            },
        ),
        Engine::Full => Err(Error::EngineUnsupported("a reduced value table")),
    }
}

/// Closed-form `D_t` of `m` disjoint 3-vertex stars:
/// `(3+m)·3^(m-1)/4^m` at `t = 1` and `1 - 4^-m` at `t = m - 1`.
pub fn family_oracle_star_copies(m: usize, t: usize) -> Result<Dyadic> {
    if m == 0 || m > 15 {
        return Err(Error::UnsupportedFamily(format!("{m} star copies")));
    }
    let log2_den = 2 * m as u32;
    if t == 1 {
        let num = (3 + m as i64) * 3i64.pow(m as u32 - 1);
        Ok(Dyadic::new(num, log2_den))
    } else if t + 1 == m {
        Ok(Dyadic::ONE - Dyadic::new(1, log2_den))
    } else {
        Err(Error::UnsupportedFamily(format!("{m} star copies at t={t}")))
    }
}

/// `D_t(K_n) = 1` for `t >= 1`.
pub fn family_oracle_complete(n: usize, t: usize) -> Result<Dyadic> {
    if t == 0 || t > n {
        return Err(Error::UnsupportedFamily(format!("K_{n} at t={t}")));
    }
    Ok(Dyadic::ONE)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_stars() -> Graph {
        let s = Graph::star(3).unwrap();
        s.disjoint_union(&s).unwrap()
    }

    #[test]
    fn t0_coefficients_are_all_one() {
        let bc = bell_coefficients(&Graph::ring(5).unwrap(), 0).unwrap();
        assert!(bc.k().iter().all(|&k| k == 1));
    }

    #[test]
    fn star_at_t1_is_identity() {
        let bc = bell_coefficients(&Graph::star(3).unwrap(), 1).unwrap();
        assert_eq!(bc.k(), &[8, 0, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn coefficient_invariants() {
        for g in [two_stars(), Graph::ring(6).unwrap(), Graph::path(5).unwrap()] {
            for t in 0..=2 {
                let cs = coverable_set(&g, t).unwrap();
                let bc = coefficients_from(&cs);
                assert_eq!(bc.sum(), 1 << g.n());
                assert_eq!(bc.get(VertexSet::EMPTY) as usize, cs.len());
                assert!(bc.k().iter().all(|&k| k.unsigned_abs() as usize <= cs.len()));
            }
        }
    }

    #[test]
    fn ghz_expansion() {
        let op = BellOperator::new(&Graph::star(3).unwrap(), 0).unwrap();
        let mut rendered: Vec<String> = op
            .expansion()
            .iter()
            .map(|(k, p)| {
                assert_eq!(*k, 1);
                p.render()
            })
            .collect();
        rendered.sort();
        let mut expected = vec![
            "+I", "+X1 Z2 Z3", "+Z1 X2", "+Z1 X3", "+Y1 Y2 Z3", "+Y1 Z2 Y3", "+X2 X3", "-X1 Y2 Y3",
        ];
        expected.sort();
        assert_eq!(rendered, expected);
    }

    #[test]
    fn all_plus_values() {
        let op = BellOperator::new(&Graph::star(3).unwrap(), 0).unwrap();
        assert_eq!(lhv_value(&op, &LhvAssignment::default()), Dyadic::new(6, 3));
        let op = BellOperator::new(&two_stars(), 1).unwrap();
        assert_eq!(lhv_value(&op, &LhvAssignment::default()), Dyadic::new(15, 4));
    }

    #[test]
    fn full_operator_is_one_everywhere() {
        let op = BellOperator::new(&Graph::star(3).unwrap(), 1).unwrap();
        assert!(op.is_full());
        let values = lhv_values(&op, Engine::Direct).unwrap();
        assert!(values.iter().all(|&v| v == 8));
        assert_eq!(lhv_bound_full(&Graph::star(3).unwrap(), 2).unwrap().bound, Dyadic::ONE);
    }

    #[test]
    fn small_bounds() {
        let k3 = Graph::complete(3).unwrap();
        for engine in [Engine::Direct, Engine::Transform, Engine::Full] {
            let r = lhv_bound_with(&k3, 0, engine).unwrap();
            assert_eq!(r.bound, Dyadic::new(3, 2), "{engine:?}");
            assert!(r.valid);
        }
        assert_eq!(lhv_bound(&two_stars(), 1).unwrap().bound, Dyadic::new(15, 4));
        assert_eq!(lhv_bound_full(&two_stars(), 1).unwrap().bound, Dyadic::new(15, 4));
        assert_eq!(lhv_bound(&Graph::ring(5).unwrap(), 0).unwrap().bound, Dyadic::new(5, 3));
        assert_eq!(lhv_bound(&Graph::star(3).unwrap(), 0).unwrap().bound, Dyadic::new(3, 2));
    }

    #[test]
    fn single_star_values_are_three_quarter_steps() {
        let op = BellOperator::new(&Graph::star(3).unwrap(), 0).unwrap();
        let mut values = lhv_values(&op, Engine::Direct).unwrap();
        values.sort();
        values.dedup();
        // -1/4, 1/4, 3/4 over 8
        assert_eq!(values, vec![-2, 2, 6]);
    }

    #[test]
    fn argmax_tie_break_is_lowest_key() {
        let r = lhv_bound(&Graph::star(3).unwrap(), 1).unwrap();
        assert_eq!(r.argmax, LhvAssignment::default());
        assert!(!r.valid);
    }

    #[test]
    fn engine_caps() {
        let g = Graph::empty(13).unwrap();
        assert!(matches!(
            lhv_bound_with(&g, 0, Engine::Transform),
            Err(Error::TransformTooLarge { n: 13, .. })
        ));
        assert!(matches!(
            lhv_bound_full(&Graph::empty(7).unwrap(), 0),
            Err(Error::TooManyVertices { .. })
        ));
    }

    #[test]
    fn family_closed_forms() {
        assert_eq!(family_oracle_star_copies(2, 1).unwrap(), Dyadic::new(15, 4));
        assert_eq!(family_oracle_star_copies(3, 1).unwrap(), Dyadic::new(54, 6));
        assert_eq!(family_oracle_star_copies(3, 2).unwrap(), Dyadic::new(63, 6));
        assert_eq!(family_oracle_star_copies(1, 0).unwrap(), Dyadic::new(3, 2));
        assert!(family_oracle_star_copies(4, 2).is_err());
        assert_eq!(family_oracle_complete(7, 2).unwrap(), Dyadic::ONE);
        assert!(family_oracle_complete(7, 0).is_err());
    }
}
