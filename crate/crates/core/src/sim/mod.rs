//! Dense state-vector and density-matrix oracle for small graphs.
//!
//! Qubit `v` is bit `v` of the computational-basis index. Nothing here uses
//! the stabilizer fast paths beyond reading coefficient tables, so it can
//! check them independently.

mod channel;
mod operator;
mod state;

pub use channel::KrausChannel;
pub use operator::{
    bell_expectation, bell_operator_coefficient_form, bell_operator_projector_form, verify_prop1,
    BellMatrix, Prop1Report,
};
pub use state::{apply_pauli, build_graph_state, pauli_matrix, schmidt_spectrum, StateVector};

use nalgebra::{Complex, DMatrix};

pub type C64 = Complex<f64>;
pub type DensityMatrix = DMatrix<C64>;

/// Stabilizer eigen-equation residual allowed for a constructed state.
pub const STATE_TOL: f64 = 1e-12;
/// Trace-preservation and operator-assembly residual.
pub const CHANNEL_TOL: f64 = 1e-10;
/// Deviation allowed for a Bell expectation value.
pub const EXPECTATION_TOL: f64 = 1e-9;

/// Largest `n` for dense state vectors.
pub const DENSE_CAP: usize = 10;
/// Largest `n` for dense Bell operator assembly.
pub const OPERATOR_CAP: usize = 8;
