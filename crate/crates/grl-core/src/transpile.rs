//! Identity-cancellation simplification and universal-to-native
//! decomposition.
//!
//! Simplification is a local peephole pass: it removes gate sequences that
//! simplify to identity and merges adjacent bound RZ rotations, nothing
//! more. Decomposition rewrites RX/RY into the Z-SX-Z-SX-Z template of the
//! native set and CX into a single-qubit conjugation of CZ.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::circuit::{Circuit, GateInstruction, GateKind, Param};
use crate::error::{CoreError, Result};
use crate::statevector::{one_qubit_matrix, Matrix2};

/// Apply local rewrite rules until fixpoint:
/// X·X → ∅, SX·SX → X, CZ·CZ (same pair) → ∅, RZ(a)·RZ(b) → RZ(a+b) for
/// bound angles, RZ(0) → ∅. Pairs cancel only when no intervening gate
/// touches the shared qubits; the instruction order is never changed.
pub fn simplify(circuit: &Circuit) -> Circuit {
    let mut instrs: Vec<GateInstruction> = circuit.instructions.clone();
    loop {
        match simplify_pass(&instrs) {
            Some(next) => instrs = next,
            None => break,
        }
    }
    let mut out = Circuit {
        num_qubits: circuit.num_qubits,
        instructions: instrs,
        parameters: circuit.parameters.clone(),
    };
    prune_parameters(&mut out);
    out
}

/// One rewrite attempt; `None` when nothing fired.
fn simplify_pass(instrs: &[GateInstruction]) -> Option<Vec<GateInstruction>> {
    for (i, instr) in instrs.iter().enumerate() {
        // RZ(0) with a bound zero angle vanishes on its own.
        if instr.kind == GateKind::Rz {
            if let Some(Param::Value(v)) = instr.params.first() {
                if *v == 0.0 {
                    let mut next = instrs.to_vec();
                    next.remove(i);
                    return Some(next);
                }
            }
        }
        let Some(j) = next_touching(instrs, i) else {
            continue;
        };
        let partner = &instrs[j];
        match (instr.kind, partner.kind) {
            (GateKind::X, GateKind::X) if instr.qubits == partner.qubits => {
                let mut next = instrs.to_vec();
                next.remove(j);
                next.remove(i);
                return Some(next);
            }
            (GateKind::Sx, GateKind::Sx) if instr.qubits == partner.qubits => {
                let mut next = instrs.to_vec();
                next[i] = GateInstruction::new(GateKind::X, instr.qubits.clone(), vec![]);
                next.remove(j);
                return Some(next);
            }
            (GateKind::Cz, GateKind::Cz) if same_pair(&instr.qubits, &partner.qubits) => {
                let mut next = instrs.to_vec();
                next.remove(j);
                next.remove(i);
                return Some(next);
            }
            (GateKind::Rz, GateKind::Rz) if instr.qubits == partner.qubits => {
                if let (Some(Param::Value(a)), Some(Param::Value(b))) =
                    (instr.params.first(), partner.params.first())
                {
                    let mut next = instrs.to_vec();
                    next[i] = GateInstruction::new(
                        GateKind::Rz,
                        instr.qubits.clone(),
                        vec![Param::Value(a + b)],
                    );
                    next.remove(j);
                    return Some(next);
                }
            }
            _ => {}
        }
    }
    None
}

/// Index of the next instruction after `i` that shares a qubit with it,
/// provided no earlier instruction touches any of those qubits.
fn next_touching(instrs: &[GateInstruction], i: usize) -> Option<usize> {
    let qubits = &instrs[i].qubits;
    for (j, other) in instrs.iter().enumerate().skip(i + 1) {
        if other.qubits.iter().any(|q| qubits.contains(q)) {
            return Some(j);
        }
    }
    None
}

fn same_pair(a: &[usize], b: &[usize]) -> bool {
    a.len() == 2 && b.len() == 2 && (a == b || (a[0] == b[1] && a[1] == b[0]))
}

/// Drop parameter-list entries no longer referenced and reindex symbols.
fn prune_parameters(circuit: &mut Circuit) {
    let mut used = vec![false; circuit.parameters.len()];
    for instr in &circuit.instructions {
        for p in &instr.params {
            if let Param::Symbol(s) = p {
                used[*s] = true;
            }
        }
    }
    let mut remap = vec![usize::MAX; circuit.parameters.len()];
    let mut kept = Vec::new();
    for (i, name) in circuit.parameters.iter().enumerate() {
        if used[i] {
            remap[i] = kept.len();
            kept.push(name.clone());
        }
    }
    for instr in &mut circuit.instructions {
        for p in &mut instr.params {
            if let Param::Symbol(s) = p {
                *s = remap[*s];
            }
        }
    }
    circuit.parameters = kept;
}

fn matmul(a: &Matrix2, b: &Matrix2) -> Matrix2 {
    let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
    for r in 0..2 {
        for c in 0..2 {
            out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
        }
    }
    out
}

/// ZYZ Euler angles of a 2x2 unitary: U = e^{iα} RZ(φ) RY(θ) RZ(λ).
fn zyz_angles(u: &Matrix2) -> (f64, f64, f64) {
    let det = u[0][0] * u[1][1] - u[0][1] * u[1][0];
    let alpha = det.arg() / 2.0;
    let scale = Complex64::from_polar(1.0, -alpha);
    let v00 = u[0][0] * scale;
    let v10 = u[1][0] * scale;
    let v11 = u[1][1] * scale;
    let theta = 2.0 * v10.norm().atan2(v00.norm());
    let eps = 1e-12;
    let (sum, diff) = if v00.norm() < eps {
        (0.0, 2.0 * v10.arg())
    } else if v10.norm() < eps {
        (2.0 * v11.arg(), 0.0)
    } else {
        (2.0 * v11.arg(), 2.0 * v10.arg())
    };
    let phi = (sum + diff) / 2.0;
    let lam = (sum - diff) / 2.0;
    (theta, phi, lam)
}

/// Native five-gate realization of RZ(φ) RY(θ) RZ(λ), up to global phase.
/// Instruction order is application order (RZ(λ) first).
fn zsx_sequence(qubit: usize, theta: f64, phi: f64, lam: f64) -> Vec<GateInstruction> {
    vec![
        GateInstruction::new(GateKind::Rz, vec![qubit], vec![Param::Value(lam)]),
        GateInstruction::new(GateKind::Sx, vec![qubit], vec![]),
        GateInstruction::new(GateKind::Rz, vec![qubit], vec![Param::Value(theta + PI)]),
        GateInstruction::new(GateKind::Sx, vec![qubit], vec![]),
        GateInstruction::new(GateKind::Rz, vec![qubit], vec![Param::Value(phi + PI)]),
    ]
}

/// Hadamard on `qubit` in native gates, up to global phase.
fn native_hadamard(qubit: usize) -> Vec<GateInstruction> {
    vec![
        GateInstruction::new(GateKind::Rz, vec![qubit], vec![Param::Value(PI / 2.0)]),
        GateInstruction::new(GateKind::Sx, vec![qubit], vec![]),
        GateInstruction::new(GateKind::Rz, vec![qubit], vec![Param::Value(PI / 2.0)]),
    ]
}

/// Rewrite a bound circuit into the native set {CZ, RZ, SX, X}.
///
/// RX/RY instances get the ZSX template with angles solved numerically per
/// gate; CX becomes a Hadamard conjugation of CZ on the target qubit. The
/// action is preserved up to global phase.
pub fn decompose_to_native(circuit: &Circuit) -> Result<Circuit> {
    let mut out = Circuit::new(circuit.num_qubits);
    for instr in &circuit.instructions {
        match instr.kind {
            GateKind::Cz | GateKind::Rz | GateKind::Sx | GateKind::X => {
                out.instructions.push(instr.clone());
            }
            GateKind::Cx => {
                let (control, target) = (instr.qubits[0], instr.qubits[1]);
                out.instructions.extend(native_hadamard(target));
                out.instructions.push(GateInstruction::new(
                    GateKind::Cz,
                    vec![control, target],
                    vec![],
                ));
                out.instructions.extend(native_hadamard(target));
            }
            GateKind::Rx | GateKind::Ry => {
                let angle = match instr.params.first() {
                    Some(p) => p.value()?,
                    None => return Err(CoreError::UnboundParameter),
                };
                let m = one_qubit_matrix(instr.kind, angle).expect("rotation kind");
                let (theta, phi, lam) = zyz_angles(&m);
                out.instructions
                    .extend(zsx_sequence(instr.qubits[0], theta, phi, lam));
            }
            GateKind::Gadget(id) => return Err(CoreError::UnexpandedGadget(id)),
        }
    }
    // Symbols in pass-through RZ gates keep their indices.
    out.parameters = circuit.parameters.clone();
    let mut pruned = out;
    prune_parameters(&mut pruned);
    Ok(pruned)
}

/// Dense 2x2 unitary of a single-qubit instruction sequence on one qubit.
#[cfg(test)]
fn sequence_matrix(instrs: &[GateInstruction]) -> Matrix2 {
    let mut m = [
        [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
        [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
    ];
    for instr in instrs {
        let angle = instr
            .params
            .first()
            .map(|p| p.value().unwrap())
            .unwrap_or(0.0);
        let g = one_qubit_matrix(instr.kind, angle).unwrap();
        m = matmul(&g, &m);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::statevector::{simulate, Statevector};
    use rand::{RngExt, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn equal_up_to_phase(a: &Matrix2, b: &Matrix2) -> bool {
        let mut ratio = None;
        for r in 0..2 {
            for c in 0..2 {
                if b[r][c].norm() > 1e-9 {
                    let q = a[r][c] / b[r][c];
                    match ratio {
                        None => ratio = Some(q),
                        Some(prev) => {
                            if (q - prev).norm() > 1e-9 {
                                return false;
                            }
                        }
                    }
                } else if a[r][c].norm() > 1e-9 {
                    return false;
                }
            }
        }
        ratio.map(|q| (q.norm() - 1.0).abs() < 1e-9).unwrap_or(false)
    }

    #[test]
    fn double_x_cancels() {
        let mut c = Circuit::new(1);
        c.x(0).unwrap();
        c.x(0).unwrap();
        assert!(simplify(&c).is_empty());
    }

    #[test]
    fn double_sx_becomes_x() {
        let mut c = Circuit::new(1);
        c.sx(0).unwrap();
        c.sx(0).unwrap();
        let s = simplify(&c);
        assert_eq!(s.len(), 1);
        assert_eq!(s.instructions[0].kind, GateKind::X);
    }

    #[test]
    fn rz_angles_merge_and_vanish() {
        let mut c = Circuit::new(1);
        c.rz(0, 0.3).unwrap();
        c.rz(0, -0.3).unwrap();
        assert!(simplify(&c).is_empty());
    }

    #[test]
    fn cz_cancels_across_operand_order() {
        let mut c = Circuit::new(2);
        c.cz(0, 1).unwrap();
        c.cz(1, 0).unwrap();
        assert!(simplify(&c).is_empty());
    }

    #[test]
    fn intervening_gate_blocks_cancellation() {
        let mut c = Circuit::new(1);
        c.x(0).unwrap();
        c.sx(0).unwrap();
        c.x(0).unwrap();
        assert_eq!(simplify(&c).len(), 3);
    }

    #[test]
    fn sx_chain_collapses_to_nothing() {
        let mut c = Circuit::new(1);
        for _ in 0..4 {
            c.sx(0).unwrap();
        }
        assert!(simplify(&c).is_empty());
    }

    #[test]
    fn simplify_never_increases_gate_count() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let c = random_native_circuit(&mut rng, 3, 25);
            assert!(simplify(&c).len() <= c.len());
        }
    }

    #[test]
    fn symbolic_rz_survives() {
        let mut c = Circuit::new(1);
        c.push_symbolic(GateKind::Rz, vec![0], 1).unwrap();
        c.push_symbolic(GateKind::Rz, vec![0], 1).unwrap();
        // Symbolic angles cannot merge.
        assert_eq!(simplify(&c).len(), 2);
    }

    #[test]
    fn rx_pi_acts_as_x() {
        let instrs = zsx_from_gate(GateKind::Rx, PI);
        let m = sequence_matrix(&instrs);
        let x = one_qubit_matrix(GateKind::X, 0.0).unwrap();
        assert!(equal_up_to_phase(&m, &x));
    }

    fn zsx_from_gate(kind: GateKind, angle: f64) -> Vec<GateInstruction> {
        let m = one_qubit_matrix(kind, angle).unwrap();
        let (theta, phi, lam) = zyz_angles(&m);
        zsx_sequence(0, theta, phi, lam)
    }

    #[test]
    fn zsx_template_covers_random_rotations() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let angle: f64 = rng.random_range(-6.0..6.0);
            for kind in [GateKind::Rx, GateKind::Ry, GateKind::Rz] {
                let target = one_qubit_matrix(kind, angle).unwrap();
                let (theta, phi, lam) = zyz_angles(&target);
                let m = sequence_matrix(&zsx_sequence(0, theta, phi, lam));
                assert!(
                    equal_up_to_phase(&m, &target),
                    "{kind:?}({angle}) not reproduced"
                );
            }
        }
    }

    #[test]
    fn rz_passes_through_decomposition() {
        let mut c = Circuit::new(1);
        c.rz(0, 0.4).unwrap();
        let d = decompose_to_native(&c).unwrap();
        assert_eq!(d.instructions, c.instructions);
    }

    #[test]
    fn cx_decomposition_matches_on_all_basis_states() {
        let mut cx = Circuit::new(2);
        cx.push(GateInstruction::new(GateKind::Cx, vec![0, 1], vec![]))
            .unwrap();
        let native = decompose_to_native(&cx).unwrap();
        let metrics = native.metrics().unwrap();
        assert_eq!(metrics.count(GateKind::Cz), 1);
        assert_eq!(metrics.count(GateKind::Cx), 0);

        // Compare action on each basis state; the phase ratio must be the
        // same for every one (fixed relative phases).
        let mut ratio: Option<Complex64> = None;
        for idx in 0..4 {
            let mut a = Statevector::basis_state(2, idx);
            for i in &cx.instructions {
                a.apply_gate(i).unwrap();
            }
            let mut b = Statevector::basis_state(2, idx);
            for i in &native.instructions {
                b.apply_gate(i).unwrap();
            }
            let ov = a.overlap(&b);
            assert!((ov.norm() - 1.0).abs() < 1e-10);
            match ratio {
                None => ratio = Some(ov),
                Some(prev) => assert!((ov - prev).norm() < 1e-10),
            }
        }
    }

    fn random_native_circuit(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> Circuit {
        let mut c = Circuit::new(n);
        let len = rng.random_range(0..=max_len);
        for _ in 0..len {
            match rng.random_range(if n > 1 { 0..4 } else { 1..4 }) {
                0 => {
                    let a = rng.random_range(0..n);
                    let b = (a + rng.random_range(1..n)) % n;
                    c.cz(a, b).unwrap();
                }
                1 => c.rz(rng.random_range(0..n), rng.random_range(-3.2..3.2)).unwrap(),
                2 => c.sx(rng.random_range(0..n)).unwrap(),
                _ => c.x(rng.random_range(0..n)).unwrap(),
            }
        }
        c
    }

    fn random_universal_circuit(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> Circuit {
        let mut c = Circuit::new(n);
        let len = rng.random_range(0..=max_len);
        for _ in 0..len {
            match rng.random_range(0..4) {
                0 => {
                    let a = rng.random_range(0..n);
                    let b = (a + rng.random_range(1..n)) % n;
                    c.push(GateInstruction::new(GateKind::Cx, vec![a, b], vec![]))
                        .unwrap();
                }
                k => {
                    let kind = [GateKind::Rx, GateKind::Ry, GateKind::Rz][k - 1];
                    c.push(GateInstruction::new(
                        kind,
                        vec![rng.random_range(0..n)],
                        vec![Param::Value(rng.random_range(-3.2..3.2))],
                    ))
                    .unwrap();
                }
            }
        }
        c
    }

    fn random_state(rng: &mut ChaCha8Rng, n: usize) -> Statevector {
        let dim = 1 << n;
        let mut amps: Vec<Complex64> = (0..dim)
            .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        for a in &mut amps {
            *a /= norm;
        }
        Statevector::from_amplitudes(amps).unwrap()
    }

    fn apply_to(state: &Statevector, c: &Circuit) -> Statevector {
        let mut s = state.clone();
        for i in &c.instructions {
            s.apply_gate(i).unwrap();
        }
        s
    }

    #[test]
    fn simplify_and_decompose_preserve_action() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for case in 0..200 {
            let n = rng.random_range(1..=3);
            let (original, rewritten) = if case % 2 == 0 {
                let c = random_native_circuit(&mut rng, n, 30);
                let s = simplify(&c);
                (c, s)
            } else {
                let c = random_universal_circuit(&mut rng, n, 30);
                let d = decompose_to_native(&c).unwrap();
                (c, d)
            };
            let input = random_state(&mut rng, n);
            let a = apply_to(&input, &original);
            let b = apply_to(&input, &rewritten);
            let ov = a.overlap(&b).norm();
            assert!((ov - 1.0).abs() < 1e-9, "case {case}: overlap {ov}");
        }
    }

    #[test]
    fn decomposed_circuits_have_no_universal_gates() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..50 {
            let c = random_universal_circuit(&mut rng, 3, 20);
            let d = decompose_to_native(&c).unwrap();
            let m = d.metrics().unwrap();
            assert_eq!(m.count(GateKind::Rx), 0);
            assert_eq!(m.count(GateKind::Ry), 0);
            assert_eq!(m.count(GateKind::Cx), 0);
        }
    }

    /// Brute-force minimal moment scheduling that preserves per-qubit order.
    fn brute_force_depth(instrs: &[GateInstruction], n: usize) -> usize {
        fn rec(
            instrs: &[GateInstruction],
            n: usize,
            i: usize,
            assignment: &mut Vec<usize>,
            best: &mut usize,
        ) {
            if i == instrs.len() {
                let depth = assignment.iter().copied().max().unwrap_or(0);
                *best = (*best).min(depth);
                return;
            }
            // Earliest legal moment given per-qubit predecessors.
            let mut earliest = 1;
            for (j, prev) in instrs[..i].iter().enumerate() {
                if prev.qubits.iter().any(|q| instrs[i].qubits.contains(q)) {
                    earliest = earliest.max(assignment[j] + 1);
                }
            }
            let cap = instrs.len().min(*best);
            for moment in earliest..=cap.max(earliest) {
                // No two gates in a moment may share a qubit.
                let clash = instrs[..i].iter().enumerate().any(|(j, prev)| {
                    assignment[j] == moment
                        && prev.qubits.iter().any(|q| instrs[i].qubits.contains(q))
                });
                if clash {
                    continue;
                }
                assignment.push(moment);
                rec(instrs, n, i + 1, assignment, best);
                assignment.pop();
            }
        }
        if instrs.is_empty() {
            return 0;
        }
        let mut best = instrs.len();
        rec(instrs, n, 0, &mut Vec::new(), &mut best);
        best
    }

    #[test]
    fn greedy_depth_matches_brute_force_on_small_circuits() {
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        for _ in 0..60 {
            let c = random_native_circuit(&mut rng, 3, 6);
            let greedy = c.metrics().unwrap().depth;
            let brute = brute_force_depth(&c.instructions, 3);
            assert_eq!(greedy, brute, "circuit: {}", c.canonical_key());
        }
    }
}
