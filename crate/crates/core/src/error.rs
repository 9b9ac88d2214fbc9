use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FdError {
    #[error("schema error: {0}")]
    Schema(String),
    #[error("model error: {0}")]
    Model(String),
    #[error("more than {limit} distinct possible worlds")]
    WorldLimit { limit: usize },
    #[error("search budget of {budget} valuations exhausted")]
    Budget { budget: u64 },
    #[error("{semantics} semantics does not apply to a {model} table")]
    Inapplicable { semantics: String, model: String },
    #[error("precondition violated: {fd} does not hold as a PFD")]
    PfdViolated { fd: String },
    #[error("uncoverable element `{0}` appears in no triple")]
    Uncoverable(String),
    #[error("instance too large: n = {n} exceeds the cap of {cap}")]
    InstanceTooLarge { n: usize, cap: usize },
    #[error("invalid 3DM instance: {0}")]
    Instance(String),
    #[error("index contract violated: {0}")]
    IndexContract(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = FdError> = std::result::Result<T, E>;
