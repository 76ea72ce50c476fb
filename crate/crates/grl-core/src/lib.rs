//! Ground-state circuit synthesis for transverse-field Ising models.
//!
//! A double-deep-Q-network agent builds parameterized quantum circuits
//! gate by gate over a hardware-native gate set, a derivative-free
//! optimizer tunes the rotation angles at every step, and a fragment
//! grammar pass mines the best circuits for reusable composite gates
//! ("gadgets") that extend the agent's action space for harder problem
//! regimes.

pub mod circuit;
pub mod dense;
pub mod error;
pub mod pauli;
pub mod statevector;
pub mod tfim;
pub mod transpile;

pub use circuit::{Circuit, CircuitMetrics, GateInstruction, GateKind, GateSet, Param};
pub use error::{CoreError, Result};
pub use pauli::{PauliHamiltonian, PauliOp, PauliString};
pub use statevector::{simulate, Statevector};
pub use tfim::{build_tfim, fake_minimum_energy, gap_scan, TfimSpec};
