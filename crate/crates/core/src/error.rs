use thiserror::Error;

pub type Result<T, E = GroupError> = std::result::Result<T, E>;

/// Which configured limit a computation ran into.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum CapKind {
    Lattice,
    Enumeration,
    Index,
    Complement,
}

impl std::fmt::Display for CapKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CapKind::Lattice => "subgroup-lattice",
            CapKind::Enumeration => "enumeration",
            CapKind::Index => "quotient-index",
            CapKind::Complement => "complement-search",
        };
        f.write_str(s)
    }
}

#[derive(Error, Clone, Debug, PartialEq, Eq)]
pub enum GroupError {
    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("degree must be at least 1")]
    ZeroDegree,

    #[error("element {0} does not lie in the group")]
    NotInGroup(String),

    #[error("subgroup is not contained in the ambient group")]
    NotSubgroup,

    #[error("subgroup of order {0} is not normal")]
    NotNormal(u128),

    #[error("{kind} cap exceeded: need {needed}, cap is {cap}")]
    CapExceeded { kind: CapKind, needed: u128, cap: u128 },

    #[error("no Frattini computation path applies to a group of order {0}")]
    NoFrattiniPath(u128),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("order checksum mismatch: expected {expected}, constructed {found}")]
    Checksum { expected: u128, found: u128 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl GroupError {
    /// True for errors that only mean "this group is too big for the configured caps".
    pub fn is_cap(&self) -> bool {
        matches!(self, GroupError::CapExceeded { .. } | GroupError::NoFrattiniPath(_))
    }
}
