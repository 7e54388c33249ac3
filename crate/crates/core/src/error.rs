use thiserror::Error;

/// Errors raised across the algebra, root-data and census layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("the rationals cannot be enumerated")]
    InfiniteField,
    #[error("invalid field modulus {0}: must be a prime below 2^31")]
    InvalidModulus(u64),
    #[error("operands belong to different composition algebras")]
    MixedAlgebras,
    #[error("composition algebras have dimension 1, 2, 4 or 8, not {0}")]
    BadCompositionDim(usize),
    #[error("operation requires characteristic other than 2")]
    CharTwo,
    #[error("operation requires characteristic 0 or at least 5, got {0}")]
    BadCharacteristic(u64),
    #[error("element is not traceless")]
    NotTraceless,
    #[error("operation is only available for algebra dimension 1 or 2, got {0}")]
    UnsupportedAlgebraDim(usize),
    #[error("orbit exceeded the configured cap of {cap} states")]
    FrontierOverflow { cap: usize },
    #[error("orbit partition mismatch: {0}")]
    PartitionMismatch(String),
    #[error("unknown root system label {0:?}")]
    UnknownLabel(String),
    #[error("diagram {0} has no branch vertex and is not of type A with an odd number of nodes")]
    NoBranchVertex(String),
    #[error("nilradical character is not proportional to the supplied weight")]
    NotProportional,
    #[error("torus parameters must multiply to 1")]
    ProductNotOne,
    #[error("parameter is not unitary")]
    NotUnitary,
    #[error("classes belong to different groups")]
    MixedGroups,
    #[error("enumeration too large: {0}")]
    TooLarge(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("io failure: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
