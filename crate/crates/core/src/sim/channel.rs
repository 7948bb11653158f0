use nalgebra::DMatrix;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::state::StateVector;
use super::{DensityMatrix, C64, CHANNEL_TOL, DENSE_CAP};
use crate::error::{Error, Result};

/// Completely positive map whose Kraus operators act on a fixed set of
/// qubits (and as identity elsewhere). Each local operator is a
/// `2^k × 2^k` matrix, i.e. a combination of Pauli strings on the support.
#[derive(Clone, Debug)]
pub struct KrausChannel {
    n: usize,
    support: Vec<usize>,
    ops: Vec<DMatrix<C64>>,
}

impl KrausChannel {
    /// Validates shapes and trace preservation.
    pub fn new(n: usize, support: Vec<usize>, ops: Vec<DMatrix<C64>>) -> Result<Self> {
        if n > DENSE_CAP {
            return Err(Error::TooManyVertices {
                what: "dense channel",
                n,
                max: DENSE_CAP,
            });
        }
        let mut seen = 0u32;
        for &q in &support {
            if q >= n || seen & (1 << q) != 0 {
                return Err(Error::VertexOutOfRange { vertex: q, n });
            }
            seen |= 1 << q;
        }
        let d = 1 << support.len();
        for op in &ops {
            if op.nrows() != d || op.ncols() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: op.nrows().max(op.ncols()),
                });
            }
        }
        let ch = KrausChannel { n, support, ops };
        let residual = ch.trace_residual();
        if residual.is_nan() || residual >= CHANNEL_TOL {
            return Err(Error::NotTracePreserving { residual });
        }
        Ok(ch)
    }

    pub fn identity(n: usize) -> Result<Self> {
        KrausChannel::new(n, vec![], vec![DMatrix::identity(1, 1)])
    }

    /// `ρ ↦ (1-p)ρ + p/3 (XρX + YρY + ZρZ)` on qubit `q`.
    pub fn depolarizing(n: usize, q: usize, p: f64) -> Result<Self> {
        let o = C64::new(0.0, 0.0);
        let r = C64::new(1.0, 0.0);
        let i = C64::new(0.0, 1.0);
        let a = C64::new((1.0 - p).sqrt(), 0.0);
        let b = C64::new((p / 3.0).sqrt(), 0.0);
        let ops = vec![
            DMatrix::from_row_slice(2, 2, &[a, o, o, a]),
            DMatrix::from_row_slice(2, 2, &[o, b * r, b * r, o]),
            DMatrix::from_row_slice(2, 2, &[o, -b * i, b * i, o]),
            DMatrix::from_row_slice(2, 2, &[b * r, o, o, -b * r]),
        ];
        KrausChannel::new(n, vec![q], ops)
    }

    /// Amplitude damping with decay probability `gamma` on qubit `q`.
    pub fn amplitude_damping(n: usize, q: usize, gamma: f64) -> Result<Self> {
        let o = C64::new(0.0, 0.0);
        let r = C64::new(1.0, 0.0);
        let ops = vec![
            DMatrix::from_row_slice(2, 2, &[r, o, o, C64::new((1.0 - gamma).sqrt(), 0.0)]),
            DMatrix::from_row_slice(2, 2, &[o, C64::new(gamma.sqrt(), 0.0), o, o]),
        ];
        KrausChannel::new(n, vec![q], ops)
    }

    /// Seeded random channel on a random support of `1..=t` qubits (empty
    /// for `t = 0`). Kraus operators come from the orthonormalized columns
    /// of a stacked complex Gaussian matrix, so `Σ E†E = 1` by construction.
    pub fn random_weight_t(n: usize, t: usize, seed: u64) -> Result<Self> {
        if t > n {
            return Err(Error::WeightTooLarge { t, n });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if t == 0 {
            let theta: f64 = rng.random_range(0.0..std::f64::consts::TAU);
            return KrausChannel::new(n, vec![], vec![DMatrix::from_element(1, 1, C64::from_polar(1.0, theta))]);
        }
        let k = rng.random_range(1..=t);
        let mut support = sample(&mut rng, n, k).into_vec();
        support.sort_unstable();
        let d = 1usize << k;
        let count = rng.random_range(1..=(d * d).min(4));
        let stacked = DMatrix::from_fn(count * d, d, |_, _| {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            C64::new(re, im)
        });
        let q = stacked.qr().q();
        let ops = (0..count)
            .map(|i| q.rows(i * d, d).into_owned())
            .collect();
        KrausChannel::new(n, support, ops)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn local_ops(&self) -> &[DMatrix<C64>] {
        &self.ops
    }

    /// Frobenius norm of `Σ E†E - 1`.
    pub fn trace_residual(&self) -> f64 {
        let d = 1 << self.support.len();
        let sum = self
            .ops
            .iter()
            .fold(DMatrix::<C64>::zeros(d, d), |acc, e| acc + e.adjoint() * e);
        (sum - DMatrix::identity(d, d)).norm()
    }

    fn local_index(&self, b: usize) -> usize {
        self.support
            .iter()
            .enumerate()
            .fold(0, |acc, (k, &q)| acc | (((b >> q) & 1) << k))
    }

    fn scatter(&self, b: usize, local: usize) -> usize {
        self.support
            .iter()
            .enumerate()
            .fold(b, |acc, (k, &q)| (acc & !(1 << q)) | (((local >> k) & 1) << q))
    }

    /// Kraus operators embedded as `2^n × 2^n` matrices.
    pub fn dense_ops(&self) -> Vec<DMatrix<C64>> {
        let dim = 1 << self.n;
        let d = 1 << self.support.len();
        self.ops
            .iter()
            .map(|op| {
                let mut m = DMatrix::zeros(dim, dim);
                for col in 0..dim {
                    let lc = self.local_index(col);
                    for lr in 0..d {
                        m[(self.scatter(col, lr), col)] = op[(lr, lc)];
                    }
                }
                m
            })
            .collect()
    }

    /// `E_i|ψ⟩` for every Kraus operator.
    pub fn branches(&self, psi: &StateVector) -> Vec<StateVector> {
        let d = 1 << self.support.len();
        self.ops
            .iter()
            .map(|op| {
                let src = psi.amplitudes();
                let mut out = nalgebra::DVector::zeros(src.len());
                for (col, &a) in src.iter().enumerate() {
                    let lc = self.local_index(col);
                    for lr in 0..d {
                        out[self.scatter(col, lr)] += op[(lr, lc)] * a;
                    }
                }
                StateVector::new(psi.n(), out).expect("same dimension")
            })
            .collect()
    }

    /// `Σ_i E_i |ψ⟩⟨ψ| E_i†`.
    pub fn apply_to_state(&self, psi: &StateVector) -> DensityMatrix {
        let dim = 1 << self.n;
        self.branches(psi)
            .iter()
            .fold(DMatrix::zeros(dim, dim), |acc, b| acc + b.projector())
    }

    /// `Σ_i E_i ρ E_i†`.
    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        let dim = 1 << self.n;
        if rho.nrows() != dim || rho.ncols() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: rho.nrows(),
            });
        }
        Ok(self
            .dense_ops()
            .iter()
            .fold(DMatrix::zeros(dim, dim), |acc, e| acc + e * rho * e.adjoint()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::sim::build_graph_state;

    #[test]
    fn weight_zero_is_global_phase() {
        let ch = KrausChannel::random_weight_t(4, 0, 7).unwrap();
        assert!(ch.support().is_empty());
        let psi = build_graph_state(&Graph::ring(4).unwrap()).unwrap();
        let rho = ch.apply_to_state(&psi);
        assert!((rho - psi.projector()).norm() < CHANNEL_TOL);
    }

    #[test]
    fn random_channels_are_trace_preserving_and_deterministic() {
        for seed in 0..20 {
            let a = KrausChannel::random_weight_t(5, 2, seed).unwrap();
            let b = KrausChannel::random_weight_t(5, 2, seed).unwrap();
            assert!(a.trace_residual() < CHANNEL_TOL);
            assert!(!a.support().is_empty() && a.support().len() <= 2);
            assert_eq!(a.support(), b.support());
            assert_eq!(a.local_ops(), b.local_ops());
        }
    }

    #[test]
    fn standard_channels_accepted() {
        assert!(KrausChannel::depolarizing(3, 1, 0.3).unwrap().trace_residual() < CHANNEL_TOL);
        assert!(KrausChannel::amplitude_damping(3, 2, 0.4).unwrap().trace_residual() < CHANNEL_TOL);
    }

    #[test]
    fn rejects_non_trace_preserving() {
        let half = DMatrix::from_element(2, 2, C64::new(0.5, 0.0));
        assert!(matches!(
            KrausChannel::new(2, vec![0], vec![half]),
            Err(Error::NotTracePreserving { .. })
        ));
        assert!(KrausChannel::new(2, vec![2], vec![DMatrix::identity(2, 2)]).is_err());
    }

    #[test]
    fn dense_and_branch_application_agree() {
        let ch = KrausChannel::random_weight_t(4, 2, 11).unwrap();
        let psi = build_graph_state(&Graph::path(4).unwrap()).unwrap();
        let via_branches = ch.apply_to_state(&psi);
        let via_dense = ch.apply(&psi.projector()).unwrap();
        assert!((via_branches - via_dense).norm() < CHANNEL_TOL);
        let trace: C64 = ch.apply(&psi.projector()).unwrap().trace();
        assert!((trace.re - 1.0).abs() < CHANNEL_TOL);
    }
}
