use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("duplicate symbol {0:?} in alphabet")]
    DuplicateSymbol(char),
    #[error("alphabet has more than 256 symbols")]
    AlphabetTooLarge,
    #[error("symbol {symbol:?} at position {position} is not in the alphabet")]
    UnknownSymbol { symbol: char, position: usize },
    #[error("words are over different alphabets")]
    AlphabetMismatch,
    #[error("empty pattern: every index would be an occurrence")]
    EmptyPattern,
    #[error("word of length {len} exceeds the brute-force oracle bound {bound}")]
    OracleBound { len: usize, bound: usize },
    #[error("position {index} out of range for word of length {len}")]
    PositionOutOfRange { index: usize, len: usize },

    #[error("morphism image of {0:?} is empty (erasing morphisms are not supported)")]
    ErasingImage(char),
    #[error("{0:?} is not a growing fixed-point letter of the morphism")]
    NotGrowingFixedPoint(char),
    #[error("morphism has no growing fixed-point letter")]
    NoGrowingFixedPoint,
    #[error("morphism is not primitive")]
    NotPrimitive,
    #[error("morphism is cyclic")]
    CyclicMorphism,
    #[error("morphism is not marked")]
    NotMarked,
    #[error("no well-marked power found up to k = {bound}")]
    WellMarkedSearchExceeded { bound: usize },
    #[error("morphism powers need Fst(p_L) = Lst(p_R) = Id for the transport map")]
    PhiPrecondition,
    #[error("{rule}, column {column}: {message}")]
    Parse {
        rule: String,
        column: usize,
        message: String,
    },

    #[error("factor sets did not stabilize within {cap} rounds")]
    StabilizationCap { cap: usize },
    #[error("fixed-point prefix of length {cap} does not witness every factor")]
    SeedWitnessExceeded { cap: usize },
    #[error("{0:?} is not in the language")]
    NotInLanguage(String),
    #[error("word of length {len} is too long for two-sided extensions (n_max = {n_max})")]
    TooLongForExtensions { len: usize, n_max: usize },
    #[error("{0:?} is not a palindrome")]
    NotPalindrome(String),
    #[error("language is not closed under reversal")]
    NotReversalClosed,

    #[error(
        "target {target:?} occurs {occurrences} time(s) in a horizon of {horizon}; need at least 2"
    )]
    InsufficientHorizon {
        target: String,
        occurrences: usize,
        horizon: usize,
    },
    #[error("empty target word")]
    EmptyTarget,
    #[error("statement needs a binary alphabet, got {0} letters")]
    NotBinary(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
