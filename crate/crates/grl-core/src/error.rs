use thiserror::Error;

/// Errors surfaced by the simulation, circuit and learning layers.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("qubit index {index} out of range for {num_qubits} qubits")]
    QubitOutOfRange { index: usize, num_qubits: usize },

    #[error("duplicate qubit index {index} in gate operands")]
    DuplicateQubit { index: usize },

    #[error("gate carries an unbound symbolic parameter")]
    UnboundParameter,

    #[error("expected {expected} parameters for gate kind, got {got}")]
    ParameterArity { expected: usize, got: usize },

    #[error("qubit count mismatch: state has {state}, operator has {operator}")]
    QubitCountMismatch { state: usize, operator: usize },

    #[error("Pauli string length {len} does not match {num_qubits} qubits")]
    PauliLengthMismatch { len: usize, num_qubits: usize },

    #[error("dense diagonalization supports at most {max} qubits, got {got}")]
    OracleSizeExceeded { got: usize, max: usize },

    #[error("model must have at least one qubit")]
    EmptyModel,

    #[error("negative field strength {0} in gap scan")]
    NegativeField(f64),

    #[error("binding length mismatch: circuit has {expected} free parameters, got {got} values")]
    BindLengthMismatch { expected: usize, got: usize },

    #[error("circuit contains an unexpanded gadget instruction (id {0})")]
    UnexpandedGadget(u32),

    #[error("unknown gadget id {0}")]
    UnknownGadget(u32),

    #[error("gate kind {0} is not part of the encoding spec")]
    KindNotInEncoding(String),

    #[error("circuit has {got} instructions, encoding allows at most {t_max}")]
    EncodingOverflow { got: usize, t_max: usize },

    #[error("malformed observation: {0}")]
    MalformedObservation(String),

    #[error("gadget arity {0} exceeds the supported maximum of 2")]
    GadgetArityExceeded(usize),

    #[error("action index {index} out of range for table of {len} actions")]
    ActionOutOfRange { index: usize, len: usize },

    #[error("step called on a finished episode")]
    EpisodeDone,

    #[error("replay memory holds {len} transitions, batch size is {batch}")]
    InsufficientMemory { len: usize, batch: usize },

    #[error("grammar does not cover gate kind {0}")]
    UncoveredGateKind(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("malformed artifact file: {0}")]
    MalformedArtifact(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, CoreError>;
