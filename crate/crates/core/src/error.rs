use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: String, found: String },

    #[error("inadmissible type {letter}{rank}")]
    InadmissibleType { letter: char, rank: usize },

    #[error("cannot parse type {0:?}; expected e.g. E8, F4, G2, A3")]
    BadTypeName(String),

    #[error("{0} is not a root of the root system")]
    NotARoot(String),

    #[error("subspace is not closed under the bracket: [{0}, {1}] leaves it")]
    NotASubalgebra(usize, usize),

    #[error("subspace is not contained in the ambient subspace")]
    NotContained,

    #[error("subspace is not stable under ad h")]
    NotStable,

    #[error("element is not in the Cartan subalgebra")]
    NotInCartan,

    #[error("ad h acts with non-integral eigenvalue {0} on a root vector")]
    NonIntegralGrading(String),

    #[error("diagram labels must lie in {{0,1,2}} and have length {expected}, got {found:?}")]
    BadDiagram { expected: usize, found: Vec<i64> },

    #[error("number of trials must be at least 1")]
    NoTrials,

    #[error("no representative found for diagram {diagram:?} after {attempts} attempts")]
    RepresentativeNotFound { diagram: Vec<u8>, attempts: usize },

    #[error("[e, f] = h has no solution with f in g(-2): {0}")]
    TripleNotCompletable(String),

    #[error("sl2-triple relation fails: {0}")]
    TripleRelation(&'static str),

    #[error("reference data: {0}")]
    RefData(String),

    #[error("no reference record for {type_name} diagram {diagram:?}")]
    UnknownDiagram { type_name: String, diagram: Vec<u8> },

    #[error("no reference record for {type_name} orbit labelled {label:?}")]
    UnknownLabel { type_name: String, label: String },
}

pub type Result<T> = std::result::Result<T, Error>;
