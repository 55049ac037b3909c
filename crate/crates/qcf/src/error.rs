use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("operands live in different rings")]
    MixedRings,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} requires a nonzero input")]
    ZeroInput(&'static str),
    #[error("factoring bound exceeded: cofactor {cofactor} of norm {norm} is above {bound}")]
    FactorBoundExceeded {
        norm: BigInt,
        cofactor: BigInt,
        bound: u64,
    },
    #[error("{0} is not a rational prime")]
    NotPrime(u64),
    #[error("singular model: discriminant is zero")]
    SingularCurve,
    #[error("point is not on the curve")]
    OffCurve,
    #[error("bad reduction at the given prime")]
    BadReduction,
    #[error("residue field of size {size} is above the brute-force bound {bound}")]
    ResidueFieldTooLarge { size: BigInt, bound: u64 },
    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),
    #[error("unknown model id {0}")]
    UnknownModel(String),
    #[error("model {0} is not a single genus-1 curve; use the bounded search")]
    NotGenus1(String),
    #[error("torsion set inconsistent: {0} (upstream bug)")]
    StructureInconsistent(String),
    #[error("parse error at byte {pos}: expected {expected}")]
    Parse { pos: usize, expected: String },
}

pub type Result<T> = std::result::Result<T, Error>;
