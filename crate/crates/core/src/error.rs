use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("level n must be positive")]
    ZeroLevel,
    #[error("argument must be positive")]
    NonPositive,
    #[error("Kronecker symbol modulus must be nonzero")]
    ZeroModulus,
    #[error("discriminant {0} is not a negative integer congruent to 0 or 1 mod 4")]
    InvalidDiscriminant(i64),
    #[error("elliptic order {0} is not 2 or 3")]
    InvalidEllipticOrder(u32),
    #[error("degree {0} is not a positive even integer")]
    InvalidDegree(u64),
    #[error("expected determinant {expected}, found {found}")]
    DeterminantMismatch { expected: i128, found: i128 },
    #[error("entries violate the Γ_0^+({n}) divisibility conditions")]
    Divisibility { n: u64 },
    #[error("operands live at different levels ({0} and {1})")]
    LevelMismatch(u64, u64),
    #[error("operation is undefined on the identity element")]
    Identity,
    #[error("element is not elliptic")]
    NotElliptic,
    #[error("element is not an involution in the Fricke coset")]
    NotFrickeInvolution,
    #[error("vector has square {0}, expected -2")]
    NotMinusTwo(i128),
    #[error("vector has square {0}, expected 0")]
    NotIsotropic(i128),
    #[error("vector is zero")]
    ZeroVector,
    #[error("vector is not primitive")]
    Imprimitive,
    #[error("matrix is not an isometry of the Mukai pairing")]
    NotIsometry,
    #[error("isometry is not induced by the given element")]
    IsometryMismatch,
    #[error("operation requires level n >= 2")]
    LevelTooSmall,
    #[error("integer overflow")]
    Overflow,
    /// A mathematical identity that must hold failed to hold. Never expected
    /// in a correct build.
    #[error("internal consistency failure: {0}")]
    Consistency(&'static str),
}

impl Error {
    pub fn is_consistency(&self) -> bool {
        matches!(self, Error::Consistency(_))
    }
}
