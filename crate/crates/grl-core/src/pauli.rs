//! Pauli strings and weighted Pauli-sum operators.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};

/// Single-qubit Pauli label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PauliOp {
    I,
    X,
    Y,
    Z,
}

/// A tensor product of single-qubit Paulis with a real coefficient.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PauliString {
    pub ops: Vec<PauliOp>,
    pub coefficient: f64,
}

impl PauliString {
    pub fn new(ops: Vec<PauliOp>, coefficient: f64) -> Self {
        Self { ops, coefficient }
    }

    /// String with `op` on `qubit` and identity elsewhere.
    pub fn single(num_qubits: usize, qubit: usize, op: PauliOp, coefficient: f64) -> Self {
        let mut ops = vec![PauliOp::I; num_qubits];
        ops[qubit] = op;
        Self { ops, coefficient }
    }

    /// String with `op_a`/`op_b` on two qubits and identity elsewhere.
    pub fn two(
        num_qubits: usize,
        a: usize,
        op_a: PauliOp,
        b: usize,
        op_b: PauliOp,
        coefficient: f64,
    ) -> Self {
        let mut ops = vec![PauliOp::I; num_qubits];
        ops[a] = op_a;
        ops[b] = op_b;
        Self { ops, coefficient }
    }

    pub fn num_qubits(&self) -> usize {
        self.ops.len()
    }

    /// Action of the string (without its coefficient) on a computational basis
    /// state: `P |index⟩ = phase |flipped⟩`.
    ///
    /// Qubit 0 is the most significant bit of the basis index.
    pub(crate) fn apply_basis(&self, index: usize) -> (usize, Complex64) {
        let n = self.ops.len();
        let mut flipped = index;
        let mut phase = Complex64::new(1.0, 0.0);
        for (qubit, op) in self.ops.iter().enumerate() {
            let mask = 1usize << (n - 1 - qubit);
            let bit = (index & mask) != 0;
            match op {
                PauliOp::I => {}
                PauliOp::X => flipped ^= mask,
                PauliOp::Y => {
                    flipped ^= mask;
                    // Y|0⟩ = i|1⟩, Y|1⟩ = -i|0⟩
                    phase *= if bit {
                        Complex64::new(0.0, -1.0)
                    } else {
                        Complex64::new(0.0, 1.0)
                    };
                }
                PauliOp::Z => {
                    if bit {
                        phase = -phase;
                    }
                }
            }
        }
        (flipped, phase)
    }
}

/// A weighted sum of Pauli strings over a fixed qubit register.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PauliHamiltonian {
    num_qubits: usize,
    terms: Vec<PauliString>,
}

impl PauliHamiltonian {
    pub fn new(num_qubits: usize, terms: Vec<PauliString>) -> Result<Self> {
        if num_qubits == 0 {
            return Err(CoreError::EmptyModel);
        }
        for term in &terms {
            if term.ops.len() != num_qubits {
                return Err(CoreError::PauliLengthMismatch {
                    len: term.ops.len(),
                    num_qubits,
                });
            }
        }
        Ok(Self { num_qubits, terms })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn terms(&self) -> &[PauliString] {
        &self.terms
    }
}
