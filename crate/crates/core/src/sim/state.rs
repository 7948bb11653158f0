use nalgebra::{DMatrix, DVector};

use super::{DensityMatrix, C64, DENSE_CAP};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pauli::{LocalLetter, PauliString};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: DVector<C64>,
}

impl StateVector {
    pub fn new(n: usize, amps: DVector<C64>) -> Result<Self> {
        if amps.len() != 1 << n {
            return Err(Error::DimensionMismatch {
                expected: 1 << n,
                got: amps.len(),
            });
        }
        Ok(StateVector { n, amps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &DVector<C64> {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.norm()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> C64 {
        self.amps.dotc(&other.amps)
    }

    /// `|ψ⟩⟨ψ|`.
    pub fn projector(&self) -> DensityMatrix {
        &self.amps * self.amps.adjoint()
    }
}

/// `|G⟩ = Π_{(a,b) ∈ E} CZ_{ab} |+⟩^n`: amplitude `(-1)^{e(b)} / 2^{n/2}`
/// where `e(b)` counts edges inside the basis state's support.
pub fn build_graph_state(g: &Graph) -> Result<StateVector> {
    let n = g.n();
    if n > DENSE_CAP {
        return Err(Error::TooManyVertices {
            what: "dense graph state",
            n,
            max: DENSE_CAP,
        });
    }
    let scale = (1u64 << n) as f64;
    let amp = 1.0 / scale.sqrt();
    let amps = DVector::from_fn(1 << n, |b, _| {
        let sign = if g.edges_within(VertexSet::from_bits(b as u32)) % 2 == 1 {
            -amp
        } else {
            amp
        };
        C64::new(sign, 0.0)
    });
    Ok(StateVector { n, amps })
}

fn i_pow(k: u32) -> C64 {
    match k & 3 {
        0 => C64::new(1.0, 0.0),
        1 => C64::new(0.0, 1.0),
        2 => C64::new(-1.0, 0.0),
        _ => C64::new(0.0, -1.0),
    }
}

/// `P|ψ⟩` using `σ(x,z)|b⟩ = i^{|x∩z|} (-1)^{|z∩b|} |b ⊕ x⟩`.
pub fn apply_pauli(p: &PauliString, psi: &StateVector) -> Result<StateVector> {
    if p.n() != psi.n {
        return Err(Error::LengthMismatch {
            left: p.n(),
            right: psi.n,
        });
    }
    let x = p.x().bits() as usize;
    let z = p.z().bits();
    let base = i_pow(p.phase() as u32 + (p.x() & p.z()).len() as u32);
    let mut out = DVector::zeros(psi.amps.len());
    for (b, &a) in psi.amps.iter().enumerate() {
        let s = if (z & b as u32).count_ones() % 2 == 1 {
            -base
        } else {
            base
        };
        out[b ^ x] = s * a;
    }
    Ok(StateVector { n: psi.n, amps: out })
}

fn letter_matrix(l: LocalLetter) -> DMatrix<C64> {
    let o = C64::new(0.0, 0.0);
    let r = C64::new(1.0, 0.0);
    let i = C64::new(0.0, 1.0);
    let entries = match l {
        LocalLetter::I => [r, o, o, r],
        LocalLetter::X => [o, r, r, o],
        LocalLetter::Y => [o, -i, i, o],
        LocalLetter::Z => [r, o, o, -r],
    };
    DMatrix::from_row_slice(2, 2, &entries)
}

/// Dense `2^n × 2^n` matrix built as an explicit Kronecker product of 2×2 letters.
pub fn pauli_matrix(p: &PauliString) -> DMatrix<C64> {
    let mut m = DMatrix::from_element(1, 1, i_pow(p.phase() as u32));
    // highest qubit is the most significant factor
    for v in (0..p.n()).rev() {
        m = m.kronecker(&letter_matrix(p.letter(v)));
    }
    m
}

/// Squared Schmidt coefficients of `psi` across `part | rest`, descending.
pub fn schmidt_spectrum(psi: &StateVector, part: VertexSet) -> Vec<f64> {
    let n = psi.n;
    let inside: Vec<usize> = part.iter().filter(|&v| v < n).collect();
    let outside: Vec<usize> = (0..n).filter(|v| !part.contains(*v)).collect();
    let rows = 1 << inside.len();
    let cols = 1 << outside.len();
    let mut m = DMatrix::zeros(rows, cols);
    for (b, &a) in psi.amps.iter().enumerate() {
        let gather = |qs: &[usize]| {
            qs.iter()
                .enumerate()
                .fold(0usize, |acc, (k, &q)| acc | (((b >> q) & 1) << k))
        };
        m[(gather(&inside), gather(&outside))] = a;
    }
    let mut s: Vec<f64> = m
        .singular_values()
        .iter()
        .map(|&v| v * v)
        .collect();
    s.sort_by(|a, b| b.partial_cmp(a).unwrap());
    s
}
