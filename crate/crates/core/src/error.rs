use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("field order {0} exceeds the supported maximum")]
    FieldTooLarge(u32),
    #[error("element encoding {enc} is out of range for GF({q})")]
    ElementOutOfRange { enc: u32, q: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("empty range: GF(2) has no powers xi^1..xi^(q-2)")]
    EmptyRange,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operands live over different fields (GF({0}) vs GF({1}))")]
    SpecMismatch(u32, u32),
    #[error("matrix parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("generator rows are linearly dependent (rank {rank} < {rows} rows)")]
    RankDeficient { rank: usize, rows: usize },
    #[error("generator matrix has no rows or no columns")]
    EmptyGenerator,
    #[error("enumeration needs {needed} words, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("the dual of an [n, n] code is trivial")]
    TrivialDual,
    #[error("vector is not a codeword of this code")]
    NotInCode,
    #[error("the zero word has no minimality status")]
    ZeroCodeword,

    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("generator column {0} is the zero vector")]
    ZeroColumn(usize),
    #[error("participant {0} is not part of the scheme")]
    UnknownParticipant(usize),
    #[error("participant subset is not authorized")]
    Unauthorized,
    #[error("shares are inconsistent with every codeword")]
    InconsistentShares,

    #[error("sweep config: {0}")]
    Config(String),
}
