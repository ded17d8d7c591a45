use thiserror::Error;

use crate::ffield::FieldError;
use crate::linalg::LinalgError;

/// Coarse error classes reported by the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Category {
    Parse,
    Axiom,
    Precondition,
    InternalAlarm,
}

impl Category {
    pub fn as_str(self) -> &'static str {
        match self {
            Category::Parse => "parse",
            Category::Axiom => "axiom",
            Category::Precondition => "precondition",
            Category::InternalAlarm => "internal-alarm",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Category::InternalAlarm => 70,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("parity violation: {0}")]
    ParityViolation(String),
    #[error("symmetry violation: {0}")]
    SymmetryViolation(String),
    #[error("bad dimensions: {0}")]
    BadDimensions(String),
    #[error("axiom failure: {0}")]
    AxiomFailure(String),
    #[error("element is not purely odd")]
    NotOdd,
    #[error("operation requires characteristic {expected}, field has {found}")]
    WrongCharacteristic { expected: u32, found: u32 },
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("algebra has no Z-grading")]
    NoGrading,
    #[error("grading is incompatible with the bracket: {0}")]
    IncompatibleGrading(String),
    #[error("bad split: {0}")]
    BadSplit(String),
    #[error("algebra has a nonzero center")]
    HasCenter,
    #[error("missing witness: {0}")]
    MissingWitness(String),
    #[error("witness does not match: {0}")]
    InvalidWitness(String),
    #[error("variant mismatch: {0}")]
    VariantMismatch(String),
    #[error("input is not simple")]
    NotSimpleInput,
    #[error("not Lie-admissible: {0}")]
    NotLieAdmissible(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("bad shearing vector: {0}")]
    BadShearing(String),
    #[error("not a vectorial algebra")]
    NotVectorial,
    #[error("not homogeneous")]
    NotHomogeneous,
    #[error("inconsistent embedding: {0}")]
    InconsistentEmbedding(String),
    #[error("module is not restricted: {0}")]
    NotRestricted(String),
    #[error("iteration cap of {0} rounds exceeded")]
    IterationCap(usize),
    #[error("decomposition g_ev = [g_od,g_od] + S fails: {0}")]
    DecompositionFails(String),
    #[error("a theorem check failed: {0}")]
    TheoremCheckFailed(String),
    #[error("certificate check failed: {0}")]
    CertificateMismatch(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn category(&self) -> Category {
        use Error::*;
        match self {
            Parse(_) | Io(_) => Category::Parse,
            ParityViolation(_) | SymmetryViolation(_) | AxiomFailure(_) | NotLieAdmissible(_) => {
                Category::Axiom
            }
            DecompositionFails(_) | IterationCap(_) | TheoremCheckFailed(_) => Category::InternalAlarm,
            _ => Category::Precondition,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
