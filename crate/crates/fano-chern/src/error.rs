use thiserror::Error;

/// Errors produced by the coefficient engine and the symbolic calculus.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Coefficient index outside the admissible range `i >= 1`, `j >= 1`,
    /// `0 <= k <= i + j`.
    #[error("coefficient index (i={i}, j={j}, k={k}) out of range: need i >= 1, j >= 1, 0 <= k <= i + j")]
    InvalidCoeffIndex { i: u32, j: u32, k: i64 },

    /// Coefficient row outside the admissible range `i >= 1`, `j >= 1`.
    #[error("coefficient row (i={i}, j={j}) out of range: need i >= 1 and j >= 1")]
    InvalidCoeffRow { i: u32, j: u32 },

    /// Verification or bulk query over an empty or inverted range.
    #[error("invalid range: {reason}")]
    InvalidRange { reason: String },

    /// Tail sum cutoff `r` outside `0 <= r <= p - 1` or `p = 0`.
    #[error("binomial tail cutoff r={r} out of range for p={p}: need p >= 1 and 0 <= r <= p - 1")]
    TailIndexOutOfRange { p: u64, r: u64 },

    /// Pushforward applied to a class of codimension zero. The operator is
    /// only defined on classes of positive codimension.
    #[error("pushforward undefined on codimension-zero term (depth {depth}, chern index {chern_index})")]
    PushforwardOfScalar { depth: u32, chern_index: u32 },

    /// Chern step invoked with a window that does not supply every degree
    /// needed by the recursion.
    #[error("chern step for degree {degree} needs classes of degree {degree}..={max_degree} at depth {depth}, got {got}")]
    IncompleteChernWindow {
        degree: u32,
        max_degree: u32,
        depth: u32,
        got: String,
    },

    /// Chain description with no families, or with a fiber degree of zero.
    #[error("invalid chain: {reason}")]
    InvalidChain { reason: String },

    /// Model family parameters outside the admissible range.
    #[error("invalid model family: {reason}")]
    InvalidModel { reason: String },

    /// Polarized family requested for a model where none is on record.
    #[error("no polarized family on record for {model}")]
    NoPolarizedFamily { model: String },

    /// Minimal family degree below 2.
    #[error("minimal family dimension needs degree >= 2, got {degree}")]
    DegreeTooSmall { degree: u32 },

    /// Lower-bound formulas need a chain length of at least 2.
    #[error("chain bound needs length >= 2, got {length}")]
    ChainTooShort { length: u32 },

    /// Malformed rational literal.
    #[error("cannot parse {input:?} as a rational: {reason}")]
    ParseRational { input: String, reason: String },

    /// Malformed model family literal.
    #[error("cannot parse {input:?} as a model family: {reason}")]
    ParseModel { input: String, reason: String },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
