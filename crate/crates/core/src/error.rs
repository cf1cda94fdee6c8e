use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed Cayley table: not square or entry out of range")]
    MalformedTable,
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("associativity fails at triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("generator {0} is not a permutation")]
    InvalidPermutation(usize),
    #[error("group order exceeds cap {0}")]
    OrderCapExceeded(usize),
    #[error("normal subgroup lattice exceeds cap {0}")]
    LatticeTooLarge(usize),
    #[error("generated closed-set family exceeds cap {0}")]
    FamilyTooLarge(usize),
    #[error("subset is not a subgroup")]
    NotASubgroup,
    #[error("subset is not open")]
    NotOpen,
    #[error("ambient space is not spectral")]
    AmbientNotSpectral,
    #[error("unknown catalog name: {0}")]
    UnknownCatalogName(String),
    #[error("theorem assertion failed for {group}: {detail}")]
    TheoremAssertionFailed { group: String, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
