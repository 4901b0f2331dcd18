use alloc::string::String;

/// Errors raised by constructors and operations whose preconditions fail.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("G(1,n) requires n >= 2, got n = {0}")]
    InvalidContext(u32),
    #[error("({a},{b}) is not a two-row partition (need a >= b >= 0)")]
    InvalidPartition { a: i64, b: i64 },
    #[error("partition ({a},{b}) does not fit the 2x{max_row} box")]
    OutOfBox { a: u32, b: u32, max_row: u32 },
    #[error("classes live on different Grassmannians: G(1,{left}) vs G(1,{right})")]
    ContextMismatch { left: u32, right: u32 },
    #[error("codimension {codim} outside 0..={max}")]
    CodimOutOfRange { codim: u32, max: u32 },
    #[error("class is not homogeneous of codimension {expected}")]
    Inhomogeneous { expected: u32 },
    #[error("root multiset is not symmetric under x <-> y: monomial x^{}y^{}h^{} has coefficient {} but its mirror has {}", .witness.0, .witness.1, .witness.2, .coefficient, .mirror)]
    AsymmetricRoots {
        witness: (u32, u32, u32),
        coefficient: String,
        mirror: String,
    },
    #[error("degree mismatch: expected weighted degree {expected}, found {found}")]
    DegreeMismatch { expected: i64, found: i64 },
    #[error("polynomial is not divisible by c2")]
    NotDivisibleByC2,
    #[error("invalid multidegree: {0}")]
    InvalidMultiDegree(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
