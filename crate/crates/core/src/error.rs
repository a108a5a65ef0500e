use alloc::string::String;

pub type Result<T, E = GmError> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GmError {
    #[error("state norm {norm} deviates from 1 by more than the accepted tolerance")]
    Normalization { norm: f64 },

    #[error("amplitude vector has length {got}, expected {expected}")]
    Length { expected: usize, got: usize },

    #[error("{n_qubits} qubits exceeds the dense capacity of {max}")]
    Capacity { n_qubits: usize, max: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("matrix is not a valid density matrix: {0}")]
    NotDensityMatrix(String),
}

impl GmError {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        GmError::InvalidParameter(msg.into())
    }
}
