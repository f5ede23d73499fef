use crate::duality::AdWitness;
use crate::exactalg::subspace::AmbientMismatch;
use crate::exactalg::Subspace;
use crate::hopfcore::AxiomReport;

/// Failures of the algebraic pipeline. Theorem violations are kept apart
/// from input errors so callers can treat them with higher severity.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Axioms(#[from] AxiomReport),
    #[error(transparent)]
    Ambient(#[from] AmbientMismatch),
    #[error("not a Hopf ideal: {0}")]
    NotHopfIdeal(String),
    #[error("not a Hopf subalgebra: {0}")]
    NotHopfSubalgebra(String),
    #[error("not a right coideal subalgebra: {0}")]
    NotCoidealSubalgebra(String),
    #[error("not normal: {0}")]
    NotNormal(String),
    #[error("containment fails: {0}")]
    NotContained(String),
    #[error("picture mismatch: {0}")]
    PictureMismatch(String),
    #[error("not cosemisimple: no normalized Haar functional")]
    NotCosemisimple,
    #[error("integral space has dimension {0}, expected 1")]
    IntegralDimension(usize),
    #[error("invalid series at link {link}: {reason}")]
    InvalidSeries {
        link: usize,
        reason: String,
        witness: Option<Box<AdWitness>>,
    },
    #[error("not a composition series: link {link} refines through a subgroup of dimension {}", .refining.dim())]
    NotComposition {
        link: usize,
        refining: Box<Subspace>,
    },
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("descent failure: {0}")]
    DescentFailure(String),
    #[error("THEOREM VIOLATION: {0}")]
    TheoremViolation(String),
    #[error("i/o: {0}")]
    Io(String),
    #[error("malformed input: {0}")]
    Schema(String),
}

impl Error {
    pub fn is_theorem_violation(&self) -> bool {
        matches!(self, Error::TheoremViolation(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
