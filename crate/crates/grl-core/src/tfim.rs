//! Transverse-field Ising chains: Hamiltonian construction, the fake
//! minimum energy target and energy-gap scans.

use serde::{Deserialize, Serialize};

use crate::dense::ground_state_oracle;
use crate::error::{CoreError, Result};
use crate::pauli::{PauliHamiltonian, PauliOp, PauliString};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Boundary {
    Open,
    Periodic,
}

/// Parameters of a transverse-field Ising chain,
/// H = -J Σ_⟨i,j⟩ Z_i Z_j - h Σ_i X_i.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TfimSpec {
    pub num_qubits: usize,
    pub coupling: f64,
    pub field: f64,
    pub boundary: Boundary,
}

impl TfimSpec {
    pub fn open_chain(num_qubits: usize, coupling: f64, field: f64) -> Self {
        Self {
            num_qubits,
            coupling,
            field,
            boundary: Boundary::Open,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.num_qubits == 0 {
            return Err(CoreError::EmptyModel);
        }
        if self.coupling < 0.0 || self.field < 0.0 {
            return Err(CoreError::InvalidConfig(
                "coupling and field must be non-negative".into(),
            ));
        }
        Ok(())
    }

    /// Number of nearest-neighbor bonds.
    pub fn num_bonds(&self) -> usize {
        match self.boundary {
            Boundary::Open => self.num_qubits - 1,
            // A 2-site ring has a single distinct bond.
            Boundary::Periodic if self.num_qubits > 2 => self.num_qubits,
            Boundary::Periodic => self.num_qubits - 1,
        }
    }
}

/// Build H = -J Σ Z_i Z_j - h Σ X_i with ZZ bonds first, then X terms.
pub fn build_tfim(spec: &TfimSpec) -> Result<PauliHamiltonian> {
    spec.validate()?;
    let n = spec.num_qubits;
    let mut terms = Vec::new();
    for i in 0..n.saturating_sub(1) {
        terms.push(PauliString::two(
            n,
            i,
            PauliOp::Z,
            i + 1,
            PauliOp::Z,
            -spec.coupling,
        ));
    }
    if spec.boundary == Boundary::Periodic && n > 2 {
        terms.push(PauliString::two(
            n,
            n - 1,
            PauliOp::Z,
            0,
            PauliOp::Z,
            -spec.coupling,
        ));
    }
    for i in 0..n {
        terms.push(PauliString::single(n, i, PauliOp::X, -spec.field));
    }
    PauliHamiltonian::new(n, terms)
}

/// The heuristic curriculum target (N-1)(-J) + N(-h). It anchors the
/// threshold schedule; it is not asserted to bound the true ground energy.
pub fn fake_minimum_energy(spec: &TfimSpec) -> f64 {
    (spec.num_qubits as f64 - 1.0) * (-spec.coupling) + spec.num_qubits as f64 * (-spec.field)
}

/// One row of a gap scan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GapPoint {
    pub field: f64,
    pub ground_energy: f64,
    pub gap: f64,
}

/// Exact ground energy and gap across a sweep of field strengths.
pub fn gap_scan(spec_base: &TfimSpec, h_values: &[f64]) -> Result<Vec<GapPoint>> {
    let mut out = Vec::with_capacity(h_values.len());
    for &h in h_values {
        if h < 0.0 {
            return Err(CoreError::NegativeField(h));
        }
        let spec = TfimSpec {
            field: h,
            ..*spec_base
        };
        let ham = build_tfim(&spec)?;
        let (e0, gap) = ground_state_oracle(&ham)?;
        out.push(GapPoint {
            field: h,
            ground_energy: e0,
            gap,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn term_counts_open_chain() {
        let ham = build_tfim(&TfimSpec::open_chain(2, 1.0, 1.0)).unwrap();
        let zz: Vec<_> = ham
            .terms()
            .iter()
            .filter(|t| t.ops.contains(&PauliOp::Z))
            .collect();
        let x: Vec<_> = ham
            .terms()
            .iter()
            .filter(|t| t.ops.contains(&PauliOp::X))
            .collect();
        assert_eq!(zz.len(), 1);
        assert_eq!(x.len(), 2);
        assert!(zz.iter().all(|t| t.coefficient == -1.0));
        assert!(x.iter().all(|t| t.coefficient == -1.0));
    }

    #[test]
    fn term_counts_weak_field_three_qubits() {
        let ham = build_tfim(&TfimSpec::open_chain(3, 1.0, 0.05)).unwrap();
        let zz = ham
            .terms()
            .iter()
            .filter(|t| t.ops.contains(&PauliOp::Z))
            .count();
        let x: Vec<_> = ham
            .terms()
            .iter()
            .filter(|t| t.ops.contains(&PauliOp::X))
            .collect();
        assert_eq!(zz, 2);
        assert_eq!(x.len(), 3);
        assert!(x.iter().all(|t| (t.coefficient + 0.05).abs() < 1e-15));
    }

    #[test]
    fn periodic_adds_wrap_bond() {
        let spec = TfimSpec {
            boundary: Boundary::Periodic,
            ..TfimSpec::open_chain(3, 1.0, 0.1)
        };
        let ham = build_tfim(&spec).unwrap();
        let zz = ham
            .terms()
            .iter()
            .filter(|t| t.ops.contains(&PauliOp::Z))
            .count();
        assert_eq!(zz, 3);
    }

    #[test]
    fn rejects_empty_model() {
        assert!(build_tfim(&TfimSpec::open_chain(0, 1.0, 1.0)).is_err());
    }

    #[test]
    fn weak_field_ground_energy() {
        let ham = build_tfim(&TfimSpec::open_chain(2, 1.0, 1e-3)).unwrap();
        let (e0, _) = ground_state_oracle(&ham).unwrap();
        assert!((e0 + (1.0_f64 + 4e-6).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn fake_minimum_values() {
        assert_eq!(
            fake_minimum_energy(&TfimSpec::open_chain(2, 1.0, 1.0)),
            -3.0
        );
        let v = fake_minimum_energy(&TfimSpec::open_chain(3, 1.0, 1e-3));
        assert!((v + 2.003).abs() < 1e-12);
        assert_eq!(
            fake_minimum_energy(&TfimSpec::open_chain(1, 1.0, 0.0)),
            0.0
        );
    }

    #[test]
    fn gap_scan_shape() {
        let base = TfimSpec::open_chain(2, 1.0, 0.0);
        let points = gap_scan(&base, &[1e-3, 1.0]).unwrap();
        // Near-degenerate at weak field, wide gap at the phase change point.
        assert!(points[0].gap < 1e-2);
        assert!(points[1].gap > 0.5);
        assert!((points[1].ground_energy + 5.0_f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn gap_scan_zero_field_degenerate() {
        let base = TfimSpec::open_chain(3, 1.0, 0.0);
        let points = gap_scan(&base, &[0.0]).unwrap();
        assert!(points[0].gap.abs() < 1e-12);
    }

    #[test]
    fn gap_scan_rejects_negative_field() {
        let base = TfimSpec::open_chain(2, 1.0, 0.0);
        assert!(matches!(
            gap_scan(&base, &[-0.1]),
            Err(CoreError::NegativeField(_))
        ));
    }

    #[test]
    fn gap_is_continuous_in_field() {
        let base = TfimSpec::open_chain(4, 1.0, 0.0);
        for h in [1e-3, 0.05, 0.5, 1.0] {
            let pts = gap_scan(&base, &[h, h + 1e-6]).unwrap();
            assert!(pts[0].gap >= 0.0);
            assert!((pts[0].gap - pts[1].gap).abs() < 1e-3);
        }
    }
}
