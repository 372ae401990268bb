use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the geometry engine can report.
///
/// Variant names are stable: the CLI prints them verbatim (see [`Error::name`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not a prime")]
    NotPrime(u32),
    #[error("field order {0} exceeds the supported maximum of 65536")]
    FieldTooLarge(u64),
    #[error("invalid field modulus: {0}")]
    InvalidModulus(String),
    #[error("no built-in modulus for GF({p}^{k}); supply one (degree <= 4)")]
    NoModulus { p: u32, k: u32 },
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("division by zero")]
    DivisionByZero,
    #[error("field element code {0} is out of range")]
    BadElement(u32),

    #[error("the zero vector does not define a projective object")]
    ZeroVector,
    #[error("ambient spaces differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("subspace of dimension {dim} is not a hyperplane of an ambient space of dimension {ambient}")]
    NotAHyperplane { dim: isize, ambient: usize },
    #[error("expected {expected} points, got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error("need at least {min} points, got {got}")]
    TooFew { min: usize, got: usize },
    #[error("nothing to join")]
    EmptyJoin,
    #[error("matrix is singular")]
    Singular,

    #[error("field of order {0} is too small; order greater than 2 is required")]
    FieldTooSmall(u32),
    #[error("points are not an arc")]
    NotAnArc,
    #[error("points are not a simplex")]
    NotASimplex,

    #[error("arc point {0} lies on the section hyperplane")]
    PointOnHyperplane(usize),
    #[error("section is degenerate: {0}")]
    DegenerateSection(String),
    #[error("invalid symbols ({0}, {1})")]
    BadSymbols(u8, u8),
    #[error("configuration table is malformed: {0}")]
    BadTable(String),
    #[error("the two simplexes share point {0}")]
    SharedPoint(usize),
    #[error("the two simplexes share a face (or the vertex lies on a face)")]
    SharedFace,
    #[error("edges {0}-{1} of the two simplexes do not meet in a single point")]
    EdgesDisjoint(usize, usize),
    #[error("lines joining corresponding points are not concurrent")]
    NoCommonVertex,
    #[error("intersection points of corresponding edges are not distinct or hit a simplex point")]
    CoincidentIntersections,
    #[error("t = {t} is outside 1..={max}")]
    BadT { t: usize, max: usize },
    #[error("corresponding {t}-spaces meet in dimension {got}, expected {expected}")]
    WrongMeetDimension { t: usize, got: isize, expected: isize },
    #[error("edge intersections do not span a hyperplane (dimension {0})")]
    NoAxis(isize),
    #[error("w, A_2 and B_2 are collinear; the lift is undefined")]
    DegenerateLift,
    #[error("the projection point lies in the embedding hyperplane")]
    WInH,
    #[error("lifted simplexes do not span distinct hyperplanes")]
    LiftNotSeparated,
    #[error("lift produced an invalid arc: {0}")]
    LiftFailed(String),
    #[error("sub-table needs at least 3 symbols, got {0}")]
    TooFewSymbols(usize),
    #[error("points do not form a semi-simplex")]
    NotASemiSimplex,

    #[error("search exceeded the node budget of {0}")]
    BudgetExceeded(u64),
    #[error("search space of {0} points exceeds the configured ceiling")]
    SearchSpaceTooLarge(u64),
    #[error("could not construct a random arc after {0} attempts")]
    ConstructionFailed(usize),

    #[error("malformed input: {0}")]
    Format(String),
}

impl Error {
    /// The variant name, e.g. `"FieldTooSmall"`.
    pub fn name(&self) -> &'static str {
        use Error::*;
        match self {
            NotPrime(_) => "NotPrime",
            FieldTooLarge(_) => "FieldTooLarge",
            InvalidModulus(_) => "InvalidModulus",
            NoModulus { .. } => "NoModulus",
            MixedFields => "MixedFields",
            DivisionByZero => "DivisionByZero",
            BadElement(_) => "BadElement",
            ZeroVector => "ZeroVector",
            AmbientMismatch(..) => "AmbientMismatch",
            NotAHyperplane { .. } => "NotAHyperplane",
            WrongCount { .. } => "WrongCount",
            TooFew { .. } => "TooFew",
            EmptyJoin => "EmptyJoin",
            Singular => "Singular",
            FieldTooSmall(_) => "FieldTooSmall",
            NotAnArc => "NotAnArc",
            NotASimplex => "NotASimplex",
            PointOnHyperplane(_) => "PointOnHyperplane",
            DegenerateSection(_) => "DegenerateSection",
            BadSymbols(..) => "BadSymbols",
            BadTable(_) => "BadTable",
            SharedPoint(_) => "SharedPoint",
            SharedFace => "SharedFace",
            EdgesDisjoint(..) => "EdgesDisjoint",
            NoCommonVertex => "NoCommonVertex",
            CoincidentIntersections => "CoincidentIntersections",
            BadT { .. } => "BadT",
            WrongMeetDimension { .. } => "WrongMeetDimension",
            NoAxis(_) => "NoAxis",
            DegenerateLift => "DegenerateLift",
            WInH => "WInH",
            LiftNotSeparated => "LiftNotSeparated",
            LiftFailed(_) => "LiftFailed",
            TooFewSymbols(_) => "TooFewSymbols",
            NotASemiSimplex => "NotASemiSimplex",
            BudgetExceeded(_) => "BudgetExceeded",
            SearchSpaceTooLarge(_) => "SearchSpaceTooLarge",
            ConstructionFailed(_) => "ConstructionFailed",
            Format(_) => "Format",
        }
    }
}
