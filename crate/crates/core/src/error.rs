use thiserror::Error;

use crate::simplex::Simplex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse grouping of errors, used by front ends to pick an exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorCategory {
    /// Malformed input text or arguments.
    Parse,
    /// Well-formed input that is not a valid complex, filtration or order.
    Validation,
    /// Valid input outside the domain of the requested analysis.
    Domain,
    /// The exhaustive oracle hit its enumeration cap.
    Cap,
    /// A postcondition failed; indicates a bug.
    Internal,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid literal: {0}")]
    Literal(String),
    #[error("cannot read {0}")]
    Io(String),

    #[error("a simplex needs at least one vertex")]
    EmptySimplex,
    #[error("simplex vertices must be strictly increasing: {0:?}")]
    NonCanonicalSimplex(Vec<u32>),
    #[error("no generators given")]
    NoGenerators,
    #[error("duplicate generator {0}")]
    DuplicateGenerator(Simplex),
    #[error("simplex {0} is listed twice")]
    DuplicateSimplex(Simplex),
    #[error("complex is not closed: {face} (face of {simplex}) is missing")]
    NotClosed { simplex: Simplex, face: Simplex },
    #[error("simplex {0} is not in the complex")]
    SimplexNotInComplex(Simplex),
    #[error("filtrations live on different complexes")]
    ComplexMismatch,

    #[error("no value for simplex {0}")]
    MissingValue(Simplex),
    #[error("simplices {0} and {1} share a filtration value")]
    DuplicateValue(Simplex, Simplex),
    #[error("face {face} has a larger value than its coface {coface}")]
    MonotonicityViolation { face: Simplex, coface: Simplex },
    #[error("injectivity radius needs at least two simplices")]
    SingleSimplex,

    #[error("epsilon must be positive")]
    NonPositiveEpsilon,
    #[error("epsilon must be non-negative")]
    NegativeEpsilon,
    #[error("value gap {gap} is not below twice epsilon")]
    PreconditionGapTooLarge { gap: String },
    #[error("simplices {0} and {1} have different dimensions")]
    DimensionMismatch(Simplex, Simplex),
    #[error("cannot switch a simplex with itself ({0})")]
    SameSimplex(Simplex),
    #[error("block must be listed in increasing filtration order")]
    BlockNotSorted,
    #[error("block span {span} is not below twice epsilon")]
    BlockSpanTooLarge { span: String },
    #[error("block is empty or contains repeated simplices")]
    InvalidBlock,
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("order is not a linear extension of the face poset: {face} must precede {coface}")]
    OrderNotLinearExtension { face: Simplex, coface: Simplex },
    #[error("order is not realizable within the given epsilon")]
    NotRealizable,
    #[error("enumeration cap of {0} orders exceeded")]
    EnumerationCapExceeded(usize),

    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("chain is not a cycle")]
    NotACycle,
    #[error("chain is zero")]
    ZeroChain,
    #[error("chain mixes dimensions {0} and {1}")]
    MixedDimensions(usize, usize),
    #[error("dimension {0} is out of range")]
    DimensionOutOfRange(usize),
    #[error("barcodes have {0} and {1} infinite bars")]
    InfiniteBarMismatch(usize, usize),
    #[error("reduction was computed for a different order than the filtration's")]
    OrderMismatch,

    #[error("the class never terminates")]
    InfiniteTerminationScale,
    #[error("epsilon {epsilon} is outside the domain (0, {upper}]")]
    EpsilonOutOfDomain { epsilon: String, upper: String },
    #[error("bar is infinite")]
    InfiniteBar,
    #[error("no bar [{0}, {1}) in dimension {2}")]
    NoSuchBar(String, String, usize),
    #[error("perturbation distance {distance} exceeds epsilon {epsilon}")]
    PerturbationTooLarge { distance: String, epsilon: String },
    #[error("rigidity hypotheses not satisfied: {0}")]
    HypothesesNotSatisfied(String),
    #[error("no matching bar found: {0}")]
    NoMatchingBar(String),
}

impl Error {
    pub fn category(&self) -> ErrorCategory {
        use Error::*;
        match self {
            Parse { .. }
            | Literal(_)
            | Io(_)
            | EmptySimplex
            | NonCanonicalSimplex(_)
            | NoGenerators
            | DuplicateGenerator(_)
            | DuplicateSimplex(_)
            | NotAPermutation(_) => ErrorCategory::Parse,
            NotClosed { .. }
            | SimplexNotInComplex(_)
            | ComplexMismatch
            | MissingValue(_)
            | DuplicateValue(..)
            | MonotonicityViolation { .. }
            | SingleSimplex
            | OrderNotLinearExtension { .. }
            | NotPrime(_)
            | NotACycle
            | ZeroChain
            | MixedDimensions(..)
            | OrderMismatch
            | InvalidBlock => ErrorCategory::Validation,
            NonPositiveEpsilon
            | NegativeEpsilon
            | PreconditionGapTooLarge { .. }
            | DimensionMismatch(..)
            | SameSimplex(_)
            | BlockNotSorted
            | BlockSpanTooLarge { .. }
            | NotRealizable
            | DimensionOutOfRange(_)
            | InfiniteBarMismatch(..)
            | InfiniteTerminationScale
            | EpsilonOutOfDomain { .. }
            | InfiniteBar
            | NoSuchBar(..)
            | PerturbationTooLarge { .. }
            | HypothesesNotSatisfied(_) => ErrorCategory::Domain,
            EnumerationCapExceeded(_) => ErrorCategory::Cap,
            NoMatchingBar(_) => ErrorCategory::Internal,
        }
    }
}
