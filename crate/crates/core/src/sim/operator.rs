use nalgebra::DMatrix;
use serde::Serialize;

use super::channel::KrausChannel;
use super::state::{apply_pauli, build_graph_state, pauli_matrix, StateVector};
use super::{DensityMatrix, C64, CHANNEL_TOL, EXPECTATION_TOL, OPERATOR_CAP};
use crate::bell::bell_coefficients;
use crate::coverable::coverable_set;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::emit_graph6;
use crate::pauli::{stabilizer_element, PauliString};

fn check_size(g: &Graph) -> Result<()> {
    if g.n() > OPERATOR_CAP {
        return Err(Error::TooManyVertices {
            what: "dense Bell operator",
            n: g.n(),
            max: OPERATOR_CAP,
        });
    }
    Ok(())
}

/// `Σ_{C ∈ C_t} Z_C |G⟩⟨G| Z_C`.
pub fn bell_operator_projector_form(g: &Graph, t: usize) -> Result<DensityMatrix> {
    check_size(g)?;
    let n = g.n();
    let psi = build_graph_state(g)?;
    let cs = coverable_set(g, t)?;
    let dim = 1 << n;
    let mut b = DMatrix::zeros(dim, dim);
    for &c in cs.members() {
        let flipped = apply_pauli(&PauliString::new(n, Default::default(), c, 0)?, &psi)?;
        b += flipped.projector();
    }
    Ok(b)
}

/// `2^-n Σ_S k[S] G_S` with `G_S` as explicit Kronecker products.
pub fn bell_operator_coefficient_form(g: &Graph, t: usize) -> Result<DensityMatrix> {
    check_size(g)?;
    let n = g.n();
    let bc = bell_coefficients(g, t)?;
    let dim = 1 << n;
    let mut b = DMatrix::zeros(dim, dim);
    for s in g.vertices().subsets() {
        let k = bc.get(s);
        if k != 0 {
            b += pauli_matrix(&stabilizer_element(g, s)) * C64::new(k as f64, 0.0);
        }
    }
    Ok(b / C64::new(dim as f64, 0.0))
}

/// Dense `B_t(G)`, checked against both assemblies on construction.
#[derive(Clone, Debug)]
pub struct BellMatrix {
    graph: Graph,
    t: usize,
    matrix: DensityMatrix,
    assembly_distance: f64,
}

impl BellMatrix {
    pub fn new(g: &Graph, t: usize) -> Result<Self> {
        let projector = bell_operator_projector_form(g, t)?;
        let coefficient = bell_operator_coefficient_form(g, t)?;
        let distance = (&projector - &coefficient).norm();
        if distance.is_nan() || distance >= CHANNEL_TOL {
            return Err(Error::AssemblyMismatch { distance });
        }
        Ok(BellMatrix {
            graph: *g,
            t,
            matrix: projector,
            assembly_distance: distance,
        })
    }

    pub fn matrix(&self) -> &DensityMatrix {
        &self.matrix
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Frobenius distance between the projector and coefficient assemblies.
    pub fn assembly_distance(&self) -> f64 {
        self.assembly_distance
    }

    /// `Re Tr(B ρ)`.
    pub fn expectation(&self, rho: &DensityMatrix) -> Result<f64> {
        let dim = self.matrix.nrows();
        if rho.nrows() != dim || rho.ncols() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: rho.nrows(),
            });
        }
        // Tr(Bρ) = Σ_ij B_ij ρ_ji
        let tr: C64 = self
            .matrix
            .iter()
            .zip(rho.transpose().iter())
            .map(|(a, b)| a * b)
            .sum();
        Ok(tr.re)
    }

    /// `Σ_i ⟨φ_i|B|φ_i⟩` over the channel branches applied to `|G⟩`.
    pub fn channel_expectation(&self, ch: &KrausChannel) -> Result<f64> {
        if ch.n() != self.graph.n() {
            return Err(Error::LengthMismatch {
                left: self.graph.n(),
                right: ch.n(),
            });
        }
        let psi = build_graph_state(&self.graph)?;
        Ok(ch
            .branches(&psi)
            .iter()
            .map(|b| b.amplitudes().dotc(&(&self.matrix * b.amplitudes())).re)
            .sum())
    }
}

/// `Re Tr(B_t(G) ρ)`.
pub fn bell_expectation(g: &Graph, t: usize, rho: &DensityMatrix) -> Result<f64> {
    BellMatrix::new(g, t)?.expectation(rho)
}

#[derive(Clone, Debug, Serialize)]
pub struct Prop1Report {
    pub graph6: String,
    pub t: usize,
    pub channels: usize,
    pub seed: u64,
    /// The coverable set is full, so the operator is the identity.
    pub trivial: bool,
    pub assembly_distance: f64,
    pub max_deviation: f64,
    /// Seed of the channel with the largest deviation.
    pub worst_seed: u64,
    pub passed: bool,
}

/// Applies `channels` seeded random weight-≤`t` channels (seeds `seed`,
/// `seed + 1`, ..) to `|G⟩` and records the largest `|Tr(B_t ε(|G⟩⟨G|)) - 1|`.
pub fn verify_prop1(g: &Graph, t: usize, channels: usize, seed: u64) -> Result<Prop1Report> {
    let bm = BellMatrix::new(g, t)?;
    let psi: StateVector = build_graph_state(g)?;
    let mut max_deviation = 0.0f64;
    let mut worst_seed = seed;
    for i in 0..channels as u64 {
        let ch = KrausChannel::random_weight_t(g.n(), t, seed + i)?;
        let rho = ch.apply_to_state(&psi);
        let dev = (bm.expectation(&rho)? - 1.0).abs();
        if dev.is_nan() || dev > max_deviation {
            max_deviation = dev;
            worst_seed = seed + i;
        }
    }
    Ok(Prop1Report {
        graph6: emit_graph6(g),
        t,
        channels,
        seed,
        trivial: coverable_set(g, t)?.is_full(),
        assembly_distance: bm.assembly_distance(),
        max_deviation,
        worst_seed,
        passed: max_deviation < EXPECTATION_TOL,
    })
}
