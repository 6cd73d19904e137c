use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("record {index}: missing field `{field}`")]
    MissingField { index: usize, field: String },

    #[error("duplicate article id `{0}`")]
    DuplicateId(String),

    #[error("unknown article id `{0}`")]
    UnknownId(String),

    #[error("label mismatch for `{id}`: corpus has {expected}, replacement has {found}")]
    LabelMismatch {
        id: String,
        expected: String,
        found: String,
    },

    #[error("invalid label `{0}` (expected `credible` or `fake`)")]
    InvalidLabel(String),

    #[error("empty corpus")]
    EmptyCorpus,

    #[error("cannot stratify: label `{0}` has too few articles")]
    CannotStratify(String),

    #[error("invalid boilerplate pattern `{pattern}`: {source}")]
    InvalidPattern {
        pattern: String,
        source: regex::Error,
    },

    #[error("word count {0} is outside the supported table {{30, 60, 90, 120}}; set min_freq explicitly")]
    UnsupportedWordCount(u32),

    #[error("vocabulary is empty after filtering (min_freq too high or all words are stopwords)")]
    EmptyVocabulary,

    #[error("vocabulary mismatch: document prepared with X={doc_x}, vocabulary built with X={vocab_x}")]
    WordCountMismatch { doc_x: u32, vocab_x: u32 },

    #[error("fingerprint mismatch: model expects vocabulary {expected}, got {found}")]
    FingerprintMismatch { expected: String, found: String },

    #[error("dimension mismatch: expected {expected} columns, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix has zero variance in every column")]
    ZeroVariance,

    #[error("training set contains a single class")]
    SingleClass,

    #[error("non-finite feature value at row {row}, column {col}")]
    NonFinite { row: usize, col: usize },

    #[error("degenerate test: {0}")]
    DegenerateTest(String),

    #[error("contingency table has a zero margin")]
    ZeroMargin,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("malformed {what} file at line {line}: {detail}")]
    MalformedFile {
        what: String,
        line: usize,
        detail: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
