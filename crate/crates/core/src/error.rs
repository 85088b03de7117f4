use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("zero polynomial has no root count")]
    ZeroPolynomial,
    #[error("empty interval: lower bound must be below upper bound")]
    EmptyInterval,
    #[error("cannot parse rational `{0}`")]
    ParseScalar(String),
    #[error("malformed polynomial json: {0}")]
    Serial(String),
    #[error("omega must be positive")]
    NonPositiveOmega,
    #[error("family index {0} outside {1}")]
    FamilyIndex(u8, &'static str),
    #[error("invalid family {0}: denominator has {1} root(s) in (0, inf)")]
    InvalidFamily(String, usize),
    #[error("second iteration requires m=1 (got m={0})")]
    SecondIterationM(usize),
    #[error("difference is not constant: {0}")]
    NotConstant(String),
    #[error("no polynomial solution of degree {0}")]
    NoPolynomialSolution(usize),
    #[error("wave function numerator is zero")]
    ZeroWaveFunction,
    #[error("index {n} below first admissible index {first}")]
    IndexBelowFirst { n: usize, first: usize },
    #[error("degenerate construction: {0}")]
    Degenerate(String),
    #[error("identification failure: {0}")]
    Identification(String),
    #[error("tail bound unattainable at r_max = {0}")]
    TailBound(f64),
    #[error("config error: {0}")]
    Config(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
