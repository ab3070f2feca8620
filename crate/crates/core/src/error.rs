use thiserror::Error;

/// Errors for precondition violations. Negative verdicts (a tiling that does
/// not verify, a weight that fails an axiom) are ordinary return values, not
/// errors; see the per-module verdict types.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension must be between 1 and 24, got {0}")]
    BadDimension(u32),
    #[error("value {bits:#x} does not fit in {n} bits")]
    BitsOutOfRange { n: u8, bits: u32 },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: u8, right: u8 },
    #[error("coordinate {0} out of range for dimension {1}")]
    CoordinateOutOfRange(usize, u8),
    #[error("empty set not allowed here")]
    EmptySet,
    #[error("vector {0} is not a member of the set")]
    NotAMember(String),
    #[error("canonical form is limited to dimension 8, got {0}")]
    CanonicalDimensionTooLarge(u8),
    #[error("poset relation contains a cycle through {0} and {1}")]
    PosetCycle(usize, usize),
    #[error("blocks do not cover the ground set; coordinate {0} is missing")]
    NotACovering(usize),
    #[error("duplicate block in covering")]
    DuplicateBlock,
    #[error("empty block in covering")]
    EmptyBlock,
    #[error("weight table has {found} entries, expected {expected}")]
    BadTableLength { expected: usize, found: usize },
    #[error("not a weight: {0}")]
    InvalidWeight(String),
    #[error("set is not downward closed: contains {member} but not {missing}")]
    NotDownwardClosed { member: String, missing: String },
    #[error("zero vector must be a member")]
    ZeroNotMember,
    #[error("target dimension {to} is smaller than source dimension {from}")]
    CannotShrink { from: u8, to: u8 },
    #[error("radius must be positive")]
    ZeroRadius,
    #[error("family tile requires hamming weight >= 2, got {0}")]
    DnWeightTooSmall(u32),
    #[error("s-sum requires r <= s, got r={r}, s={s}")]
    BadSSumRadii { r: u32, s: u32 },
    #[error("dimension {0} too large for exact-cover search (limit 16)")]
    SearchDimensionTooLarge(u8),
    #[error("dimension {0} too large for a full metric matrix (limit 12)")]
    MatrixDimensionTooLarge(u8),
    #[error("unsupported classification size {0} (expected 2, 4 or 8)")]
    UnsupportedSize(usize),
    #[error("poset search limited to 6 points by default (opt in for 7), got {0}")]
    RankTooLargeForPosetSearch(u8),
    #[error("fixture {name} failed verification: {reason}")]
    FixtureMismatch { name: String, reason: String },
    #[error("invalid vector literal {0:?}")]
    BadVectorLiteral(String),
    #[error("scale factors must be positive")]
    ZeroScale,
    #[error("input is not a tiling: {0}")]
    InvalidTiling(String),
}
