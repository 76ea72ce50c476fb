//! Dense materialization of Pauli-sum operators and the exact
//! diagonalization oracle.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{CoreError, Result};
use crate::pauli::{PauliHamiltonian, PauliOp, PauliString};
use crate::statevector::Statevector;

/// Dense diagonalization feasibility bound (4096 x 4096 at the cap).
pub const MAX_ORACLE_QUBITS: usize = 12;

/// A dense 2^N x 2^N complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseOperator {
    pub entries: DMatrix<Complex64>,
    pub num_qubits: usize,
}

fn pauli_matrix_2x2(op: PauliOp) -> DMatrix<Complex64> {
    let z = Complex64::new(0.0, 0.0);
    let o = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    match op {
        PauliOp::I => DMatrix::from_row_slice(2, 2, &[o, z, z, o]),
        PauliOp::X => DMatrix::from_row_slice(2, 2, &[z, o, o, z]),
        PauliOp::Y => DMatrix::from_row_slice(2, 2, &[z, -i, i, z]),
        PauliOp::Z => DMatrix::from_row_slice(2, 2, &[o, z, z, -o]),
    }
}

fn kron(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    a.kronecker(b)
}

fn term_matrix(term: &PauliString) -> DMatrix<Complex64> {
    let mut m = DMatrix::from_element(1, 1, Complex64::new(term.coefficient, 0.0));
    // Qubit 0 is the most significant bit, so it is the leftmost Kronecker
    // factor.
    for op in &term.ops {
        m = kron(&m, &pauli_matrix_2x2(*op));
    }
    m
}

impl DenseOperator {
    /// Materialize a Pauli sum as a dense matrix via per-term Kronecker
    /// products.
    pub fn from_hamiltonian(ham: &PauliHamiltonian) -> Self {
        let n = ham.num_qubits();
        let dim = 1usize << n;
        let mut entries = DMatrix::from_element(dim, dim, Complex64::new(0.0, 0.0));
        for term in ham.terms() {
            entries += term_matrix(term);
        }
        Self {
            entries,
            num_qubits: n,
        }
    }

    /// Largest deviation from Hermiticity, max |m[i][j] - conj(m[j][i])|.
    pub fn hermiticity_defect(&self) -> f64 {
        let dim = self.entries.nrows();
        let mut worst = 0.0f64;
        for i in 0..dim {
            for j in 0..=i {
                let d = (self.entries[(i, j)] - self.entries[(j, i)].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    /// ψ† M ψ, the quadratic form against a statevector.
    pub fn quadratic_form(&self, state: &Statevector) -> Result<Complex64> {
        if state.num_qubits() != self.num_qubits {
            return Err(CoreError::QubitCountMismatch {
                state: state.num_qubits(),
                operator: self.num_qubits,
            });
        }
        let dim = self.entries.nrows();
        let amps = state.amplitudes();
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..dim {
            let mut row = Complex64::new(0.0, 0.0);
            for j in 0..dim {
                row += self.entries[(i, j)] * amps[j];
            }
            acc += amps[i].conj() * row;
        }
        Ok(acc)
    }

    fn max_imag(&self) -> f64 {
        self.entries.iter().map(|c| c.im.abs()).fold(0.0, f64::max)
    }

    /// The two lowest eigenvalues, ascending with multiplicity.
    fn lowest_two_eigenvalues(&self) -> (f64, f64) {
        let mut values: Vec<f64> = if self.max_imag() < 1e-14 {
            // Real symmetric path: TFIM and any Y-free Pauli sum land here.
            let real = self.entries.map(|c| c.re);
            real.symmetric_eigen().eigenvalues.iter().copied().collect()
        } else {
            self.entries
                .clone()
                .symmetric_eigen()
                .eigenvalues
                .iter()
                .copied()
                .collect()
        };
        values.sort_by(|a, b| a.partial_cmp(b).unwrap());
        (values[0], values.get(1).copied().unwrap_or(values[0]))
    }
}

/// Exact ground energy and spectral gap of a Pauli-sum Hamiltonian.
///
/// Returns `(E0, E1 - E0)`. Degenerate ground states report a zero gap.
pub fn ground_state_oracle(ham: &PauliHamiltonian) -> Result<(f64, f64)> {
    if ham.num_qubits() > MAX_ORACLE_QUBITS {
        return Err(CoreError::OracleSizeExceeded {
            got: ham.num_qubits(),
            max: MAX_ORACLE_QUBITS,
        });
    }
    let op = DenseOperator::from_hamiltonian(ham);
    let defect = op.hermiticity_defect();
    assert!(
        defect < 1e-12,
        "materialized operator is not Hermitian (defect {defect})"
    );
    let (e0, e1) = op.lowest_two_eigenvalues();
    Ok((e0, e1 - e0))
}
