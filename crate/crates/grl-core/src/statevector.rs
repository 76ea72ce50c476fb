//! Dense complex statevector simulation.
//!
//! Convention: qubit 0 is the most significant bit of the basis index, so
//! for two qubits `|10⟩` (qubit 0 set) is amplitude index 2. All complex
//! arithmetic is in 64-bit floats; global phase is never normalized away.

use num_complex::Complex64;

use crate::circuit::{Circuit, GateInstruction, GateKind};
use crate::error::{CoreError, Result};
use crate::pauli::PauliHamiltonian;

pub(crate) type Matrix2 = [[Complex64; 2]; 2];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// 2x2 matrix of an elementary single-qubit gate. `angle` is ignored for
/// non-parameterized kinds.
pub(crate) fn one_qubit_matrix(kind: GateKind, angle: f64) -> Option<Matrix2> {
    match kind {
        GateKind::X => Some([[ZERO, ONE], [ONE, ZERO]]),
        GateKind::Sx => {
            let a = Complex64::new(0.5, 0.5);
            let b = Complex64::new(0.5, -0.5);
            Some([[a, b], [b, a]])
        }
        GateKind::Rz => {
            let e = Complex64::from_polar(1.0, -angle / 2.0);
            Some([[e, ZERO], [ZERO, e.conj()]])
        }
        GateKind::Rx => {
            let c = Complex64::new((angle / 2.0).cos(), 0.0);
            let s = Complex64::new(0.0, -(angle / 2.0).sin());
            Some([[c, s], [s, c]])
        }
        GateKind::Ry => {
            let c = Complex64::new((angle / 2.0).cos(), 0.0);
            let s = (angle / 2.0).sin();
            Some([[c, Complex64::new(-s, 0.0)], [Complex64::new(s, 0.0), c]])
        }
        _ => None,
    }
}

/// A normalized pure state of `num_qubits` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct Statevector {
    amplitudes: Vec<Complex64>,
    num_qubits: usize,
}

impl Statevector {
    /// The all-zeros computational basis state |0...0⟩.
    pub fn zero_state(num_qubits: usize) -> Self {
        let mut amplitudes = vec![ZERO; 1 << num_qubits];
        amplitudes[0] = ONE;
        Self {
            amplitudes,
            num_qubits,
        }
    }

    /// A specific computational basis state.
    pub fn basis_state(num_qubits: usize, index: usize) -> Self {
        assert!(index < 1 << num_qubits);
        let mut amplitudes = vec![ZERO; 1 << num_qubits];
        amplitudes[index] = ONE;
        Self {
            amplitudes,
            num_qubits,
        }
    }

    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        let dim = amplitudes.len();
        if dim == 0 || !dim.is_power_of_two() {
            return Err(CoreError::InvalidConfig(format!(
                "statevector length {dim} is not a power of two"
            )));
        }
        Ok(Self {
            amplitudes,
            num_qubits: dim.trailing_zeros() as usize,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Inner product ⟨self|other⟩.
    pub fn overlap(&self, other: &Statevector) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    fn bit_mask(&self, qubit: usize) -> usize {
        1usize << (self.num_qubits - 1 - qubit)
    }

    fn check_qubits(&self, qubits: &[usize]) -> Result<()> {
        for (i, &q) in qubits.iter().enumerate() {
            if q >= self.num_qubits {
                return Err(CoreError::QubitOutOfRange {
                    index: q,
                    num_qubits: self.num_qubits,
                });
            }
            if qubits[..i].contains(&q) {
                return Err(CoreError::DuplicateQubit { index: q });
            }
        }
        Ok(())
    }

    fn apply_one_qubit(&mut self, qubit: usize, m: &Matrix2) {
        let mask = self.bit_mask(qubit);
        let dim = self.amplitudes.len();
        for i in 0..dim {
            if i & mask == 0 {
                let j = i | mask;
                let a = self.amplitudes[i];
                let b = self.amplitudes[j];
                self.amplitudes[i] = m[0][0] * a + m[0][1] * b;
                self.amplitudes[j] = m[1][0] * a + m[1][1] * b;
            }
        }
    }

    fn apply_cz(&mut self, a: usize, b: usize) {
        let ma = self.bit_mask(a);
        let mb = self.bit_mask(b);
        for (i, amp) in self.amplitudes.iter_mut().enumerate() {
            if i & ma != 0 && i & mb != 0 {
                *amp = -*amp;
            }
        }
    }

    fn apply_cx(&mut self, control: usize, target: usize) {
        let mc = self.bit_mask(control);
        let mt = self.bit_mask(target);
        for i in 0..self.amplitudes.len() {
            if i & mc != 0 && i & mt == 0 {
                self.amplitudes.swap(i, i | mt);
            }
        }
    }

    /// Apply one bound elementary gate in place.
    pub fn apply_gate(&mut self, gate: &GateInstruction) -> Result<()> {
        self.check_qubits(&gate.qubits)?;
        match gate.kind {
            GateKind::Cz => self.apply_cz(gate.qubits[0], gate.qubits[1]),
            GateKind::Cx => self.apply_cx(gate.qubits[0], gate.qubits[1]),
            GateKind::Gadget(id) => return Err(CoreError::UnexpandedGadget(id)),
            kind => {
                let angle = if kind.elementary_params() == Some(1) {
                    match gate.params.first() {
                        Some(p) => p.value()?,
                        None => return Err(CoreError::UnboundParameter),
                    }
                } else {
                    0.0
                };
                let m = one_qubit_matrix(kind, angle).expect("one-qubit kind");
                self.apply_one_qubit(gate.qubits[0], &m);
            }
        }
        Ok(())
    }

    /// ⟨ψ|H|ψ⟩. The imaginary residue must vanish (H has real coefficients);
    /// its magnitude is asserted below 1e-10 before being discarded.
    pub fn expectation(&self, ham: &PauliHamiltonian) -> Result<f64> {
        if ham.num_qubits() != self.num_qubits {
            return Err(CoreError::QubitCountMismatch {
                state: self.num_qubits,
                operator: ham.num_qubits(),
            });
        }
        let mut acc = ZERO;
        for term in ham.terms() {
            let mut term_val = ZERO;
            for (i, amp) in self.amplitudes.iter().enumerate() {
                if amp.norm_sqr() == 0.0 {
                    continue;
                }
                let (j, phase) = term.apply_basis(i);
                term_val += self.amplitudes[j].conj() * phase * amp;
            }
            acc += term.coefficient * term_val;
        }
        assert!(
            acc.im.abs() < 1e-10,
            "expectation has imaginary residue {}",
            acc.im
        );
        Ok(acc.re)
    }
}

/// Run a fully bound elementary circuit on |0...0⟩.
pub fn simulate(circuit: &Circuit) -> Result<Statevector> {
    let mut state = Statevector::zero_state(circuit.num_qubits);
    for instr in &circuit.instructions {
        state.apply_gate(instr)?;
    }
    Ok(state)
}
