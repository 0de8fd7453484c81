use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Two operands disagree on dimension.
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    /// A matrix or vector has a dimension the operation cannot handle.
    InvalidDimension(usize),
    /// Hermiticity defect above the 1e-10 tolerance.
    NotHermitian {
        defect: f64,
    },
    /// Pure state whose 2-norm is not 1.
    NotNormalized {
        norm: f64,
    },
    /// Channel strength outside `[0, 1]` (or not finite).
    ProbabilityOutOfRange(f64),
    InvalidScenario(&'static str),
    /// Renormalization requested for an output with (near) zero trace.
    DegenerateTrace(f64),
    /// A measure that needs a unit-trace state got something else.
    NonUnitTrace(f64),
    InvalidGrid(&'static str),
    InvalidBracket {
        lo: f64,
        hi: f64,
    },
    /// Death-point search started from a point that is already dead.
    NotEntangledAtStart {
        p: f64,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::InvalidDimension(d) => write!(f, "unsupported dimension {d}"),
            Error::NotHermitian { defect } => {
                write!(f, "matrix is not Hermitian (defect {defect:e})")
            }
            Error::NotNormalized { norm } => write!(f, "state is not normalized (norm {norm})"),
            Error::ProbabilityOutOfRange(p) => {
                write!(f, "channel strength {p} is outside [0, 1]")
            }
            Error::InvalidScenario(why) => write!(f, "invalid noise scenario: {why}"),
            Error::DegenerateTrace(t) => {
                write!(f, "cannot renormalize: output trace {t:e} is degenerate")
            }
            Error::NonUnitTrace(t) => write!(f, "expected a unit-trace state, trace is {t}"),
            Error::InvalidGrid(why) => write!(f, "invalid p grid: {why}"),
            Error::InvalidBracket { lo, hi } => write!(f, "invalid bracket [{lo}, {hi}]"),
            Error::NotEntangledAtStart { p } => {
                write!(f, "tripartite negativity is already zero at p = {p}")
            }
        }
    }
}

impl core::error::Error for Error {}
