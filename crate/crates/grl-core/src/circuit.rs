//! Circuit intermediate representation: gate instructions, symbolic
//! parameters, gadget expansion and gate/depth metrics.

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};

/// Gate kinds supported by the IR.
///
/// `Cz`, `Rz`, `Sx`, `X` form the native set; `Rx`, `Ry`, `Cx` appear in the
/// universal set and are removed by transpilation. `Gadget(id)` references a
/// composite gate in a [`GadgetSet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GateKind {
    Cz,
    Rz,
    Sx,
    X,
    Rx,
    Ry,
    Cx,
    Gadget(u32),
}

impl GateKind {
    /// Number of qubit operands for elementary kinds. Gadget arity lives in
    /// the gadget definition.
    pub fn elementary_arity(self) -> Option<usize> {
        match self {
            GateKind::Cz | GateKind::Cx => Some(2),
            GateKind::Rz | GateKind::Sx | GateKind::X | GateKind::Rx | GateKind::Ry => Some(1),
            GateKind::Gadget(_) => None,
        }
    }

    /// Number of angle parameters for elementary kinds.
    pub fn elementary_params(self) -> Option<usize> {
        match self {
            GateKind::Rz | GateKind::Rx | GateKind::Ry => Some(1),
            GateKind::Cz | GateKind::Cx | GateKind::Sx | GateKind::X => Some(0),
            GateKind::Gadget(_) => None,
        }
    }

    pub fn is_elementary(self) -> bool {
        !matches!(self, GateKind::Gadget(_))
    }

    pub fn name(self) -> String {
        match self {
            GateKind::Cz => "cz".into(),
            GateKind::Rz => "rz".into(),
            GateKind::Sx => "sx".into(),
            GateKind::X => "x".into(),
            GateKind::Rx => "rx".into(),
            GateKind::Ry => "ry".into(),
            GateKind::Cx => "cx".into(),
            GateKind::Gadget(id) => format!("g{id}"),
        }
    }
}

/// An angle argument: either a reference into the circuit's free-parameter
/// list or a bound value in radians.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Param {
    Symbol(usize),
    Value(f64),
}

impl Param {
    pub fn value(self) -> Result<f64> {
        match self {
            Param::Value(v) => Ok(v),
            Param::Symbol(_) => Err(CoreError::UnboundParameter),
        }
    }
}

/// One gate application.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GateInstruction {
    pub kind: GateKind,
    pub qubits: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub params: Vec<Param>,
}

impl GateInstruction {
    pub fn new(kind: GateKind, qubits: Vec<usize>, params: Vec<Param>) -> Self {
        Self {
            kind,
            qubits,
            params,
        }
    }
}

/// One instruction of a gadget body. Qubit operands are variables
/// (`0..arity`) resolved at placement; parameterized gates reference one of
/// the gadget's angle slots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetInstr {
    pub kind: GateKind,
    pub qubit_vars: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub angle_slot: Option<usize>,
}

/// A composite gate: a fixed sequence of elementary gates over `arity`
/// abstract qubits with `angle_slots` trainable angles.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Gadget {
    pub id: u32,
    pub arity: usize,
    pub angle_slots: usize,
    pub body: Vec<GadgetInstr>,
}

impl Gadget {
    /// Expand a placement of this gadget into elementary instructions.
    /// `qubits` maps variable `i` to `qubits[i]`; `params` maps angle slot
    /// `i` to `params[i]`.
    pub fn expand(&self, qubits: &[usize], params: &[Param]) -> Result<Vec<GateInstruction>> {
        if qubits.len() != self.arity {
            return Err(CoreError::InvalidConfig(format!(
                "gadget {} expects {} qubits, got {}",
                self.id,
                self.arity,
                qubits.len()
            )));
        }
        if params.len() != self.angle_slots {
            return Err(CoreError::ParameterArity {
                expected: self.angle_slots,
                got: params.len(),
            });
        }
        self.body
            .iter()
            .map(|instr| {
                let qs = instr.qubit_vars.iter().map(|&v| qubits[v]).collect();
                let ps = match instr.angle_slot {
                    Some(slot) => vec![params[slot]],
                    None => vec![],
                };
                Ok(GateInstruction::new(instr.kind, qs, ps))
            })
            .collect()
    }
}

/// The set of gadgets available to a run; `Gadget(id)` instructions index
/// into this.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct GadgetSet {
    pub gadgets: Vec<Gadget>,
}

impl GadgetSet {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn get(&self, id: u32) -> Result<&Gadget> {
        self.gadgets
            .iter()
            .find(|g| g.id == id)
            .ok_or(CoreError::UnknownGadget(id))
    }

    pub fn next_id(&self) -> u32 {
        self.gadgets.iter().map(|g| g.id + 1).max().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.gadgets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gadgets.is_empty()
    }
}

/// A gate set: which elementary kinds a run may place, plus its gadgets.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GateSet {
    pub two_qubit: Vec<GateKind>,
    pub one_qubit: Vec<GateKind>,
    pub gadgets: GadgetSet,
}

impl GateSet {
    /// The hardware-native set {CZ, RZ, SX, X}.
    pub fn native() -> Self {
        Self {
            two_qubit: vec![GateKind::Cz],
            one_qubit: vec![GateKind::Rz, GateKind::Sx, GateKind::X],
            gadgets: GadgetSet::empty(),
        }
    }

    /// The universal comparison set {RX, RY, RZ, CX}.
    pub fn universal() -> Self {
        Self {
            two_qubit: vec![GateKind::Cx],
            one_qubit: vec![GateKind::Rx, GateKind::Ry, GateKind::Rz],
            gadgets: GadgetSet::empty(),
        }
    }

    pub fn with_gadgets(mut self, gadgets: GadgetSet) -> Self {
        self.gadgets = gadgets;
        self
    }
}

/// An ordered gate sequence over `num_qubits` qubits with a list of free
/// symbolic parameters. `Param::Symbol(i)` refers to `parameters[i]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Circuit {
    pub num_qubits: usize,
    pub instructions: Vec<GateInstruction>,
    pub parameters: Vec<String>,
}

impl Circuit {
    pub fn new(num_qubits: usize) -> Self {
        Self {
            num_qubits,
            instructions: Vec::new(),
            parameters: Vec::new(),
        }
    }

    pub fn num_parameters(&self) -> usize {
        self.parameters.len()
    }

    pub fn len(&self) -> usize {
        self.instructions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instructions.is_empty()
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

    /// Append an elementary instruction with already-built params.
    pub fn push(&mut self, instr: GateInstruction) -> Result<()> {
        self.check_qubits(&instr.qubits)?;
        if let (Some(arity), Some(nparams)) = (
            instr.kind.elementary_arity(),
            instr.kind.elementary_params(),
        ) {
            if instr.qubits.len() != arity {
                return Err(CoreError::InvalidConfig(format!(
                    "{} takes {} qubits, got {}",
                    instr.kind.name(),
                    arity,
                    instr.qubits.len()
                )));
            }
            if instr.params.len() != nparams {
                return Err(CoreError::ParameterArity {
                    expected: nparams,
                    got: instr.params.len(),
                });
            }
        }
        self.instructions.push(instr);
        Ok(())
    }

    /// Append a gate, minting fresh symbols for each of `num_params` angles.
    pub fn push_symbolic(
        &mut self,
        kind: GateKind,
        qubits: Vec<usize>,
        num_params: usize,
    ) -> Result<()> {
        let mut params = Vec::with_capacity(num_params);
        for _ in 0..num_params {
            let idx = self.parameters.len();
            self.parameters.push(format!("t{idx}"));
            params.push(Param::Symbol(idx));
        }
        self.push(GateInstruction::new(kind, qubits, params))
    }

    pub fn cz(&mut self, a: usize, b: usize) -> Result<()> {
        self.push(GateInstruction::new(GateKind::Cz, vec![a, b], vec![]))
    }

    pub fn x(&mut self, q: usize) -> Result<()> {
        self.push(GateInstruction::new(GateKind::X, vec![q], vec![]))
    }

    pub fn sx(&mut self, q: usize) -> Result<()> {
        self.push(GateInstruction::new(GateKind::Sx, vec![q], vec![]))
    }

    pub fn rz(&mut self, q: usize, angle: f64) -> Result<()> {
        self.push(GateInstruction::new(
            GateKind::Rz,
            vec![q],
            vec![Param::Value(angle)],
        ))
    }

    /// Replace every symbol with the corresponding value from `values`.
    /// The result has no free parameters.
    pub fn bind(&self, values: &[f64]) -> Result<Circuit> {
        if values.len() != self.parameters.len() {
            return Err(CoreError::BindLengthMismatch {
                expected: self.parameters.len(),
                got: values.len(),
            });
        }
        let instructions = self
            .instructions
            .iter()
            .map(|instr| {
                let params = instr
                    .params
                    .iter()
                    .map(|p| match *p {
                        Param::Symbol(i) => Param::Value(values[i]),
                        Param::Value(v) => Param::Value(v),
                    })
                    .collect();
                GateInstruction::new(instr.kind, instr.qubits.clone(), params)
            })
            .collect();
        Ok(Circuit {
            num_qubits: self.num_qubits,
            instructions,
            parameters: Vec::new(),
        })
    }

    /// Replace gadget instructions by their bodies. Symbols and values pass
    /// through unchanged, so the parameter list is preserved.
    pub fn expand_gadgets(&self, set: &GadgetSet) -> Result<Circuit> {
        let mut out = Circuit {
            num_qubits: self.num_qubits,
            instructions: Vec::with_capacity(self.instructions.len()),
            parameters: self.parameters.clone(),
        };
        for instr in &self.instructions {
            match instr.kind {
                GateKind::Gadget(id) => {
                    let gadget = set.get(id)?;
                    for expanded in gadget.expand(&instr.qubits, &instr.params)? {
                        out.instructions.push(expanded);
                    }
                }
                _ => out.instructions.push(instr.clone()),
            }
        }
        Ok(out)
    }

    /// True if every instruction is elementary.
    pub fn is_elementary(&self) -> bool {
        self.instructions.iter().all(|i| i.kind.is_elementary())
    }

    /// Structural identity ignoring parameter values: kinds, qubit
    /// placements and symbol positions.
    pub fn canonical_key(&self) -> String {
        let mut s = format!("n{}:", self.num_qubits);
        for instr in &self.instructions {
            s.push_str(&instr.kind.name());
            s.push('(');
            for (i, q) in instr.qubits.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                s.push_str(&q.to_string());
            }
            s.push(')');
            s.push(';');
        }
        s
    }

    /// Gate counts and moment depth. Requires an elementary circuit: expand
    /// gadgets first so metrics are always reported on elementary gates.
    pub fn metrics(&self) -> Result<CircuitMetrics> {
        let mut per_kind: Vec<(GateKind, usize)> = Vec::new();
        let mut two_qubit = 0usize;
        let mut last_moment = vec![0usize; self.num_qubits];
        let mut depth = 0usize;
        for instr in &self.instructions {
            if let GateKind::Gadget(id) = instr.kind {
                return Err(CoreError::UnexpandedGadget(id));
            }
            match per_kind.iter_mut().find(|(k, _)| *k == instr.kind) {
                Some((_, c)) => *c += 1,
                None => per_kind.push((instr.kind, 1)),
            }
            if instr.qubits.len() == 2 {
                two_qubit += 1;
            }
            // Greedy left-packing: the gate lands in the first moment after
            // every gate it shares a qubit with.
            let moment = 1 + instr
                .qubits
                .iter()
                .map(|&q| last_moment[q])
                .max()
                .unwrap_or(0);
            for &q in &instr.qubits {
                last_moment[q] = moment;
            }
            depth = depth.max(moment);
        }
        per_kind.sort_by_key(|(k, _)| *k);
        Ok(CircuitMetrics {
            per_kind,
            total: self.instructions.len(),
            two_qubit,
            depth,
        })
    }
}

/// Gate counts and moment depth of an elementary circuit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircuitMetrics {
    /// Counts per gate kind, sorted by kind.
    pub per_kind: Vec<(GateKind, usize)>,
    pub total: usize,
    pub two_qubit: usize,
    /// Number of moments under greedy left-packing.
    pub depth: usize,
}

impl CircuitMetrics {
    pub fn count(&self, kind: GateKind) -> usize {
        self.per_kind
            .iter()
            .find(|(k, _)| *k == kind)
            .map(|(_, c)| *c)
            .unwrap_or(0)
    }
}
