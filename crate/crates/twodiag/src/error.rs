//! Crate-wide error type.
//!
//! Every fallible operation returns [`Error`]; zero denominators and other
//! degeneracies are reported, never silently turned into NaN or panics.

use thiserror::Error;

/// Identifier for an admissibility rule, used in violation reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// lambda_n pairwise distinct.
    LambdaDistinct,
    /// mu_n pairwise distinct (mu_0 = 0 included).
    MuDistinct,
    /// lambda_{n+1} + lambda_{n-1} - Omega lambda_n + B2 = 0.
    LambdaRecurrence,
    /// mu_{n+1} + mu_{n-1} - Omega mu_n + C2 = 0.
    MuRecurrence,
    /// No affine relation mu_n = alpha lambda_n + beta over n = 1..N.
    NoAffineRelation,
    /// (lambda_n - lambda_m)/(mu_n - mu_m) depends on n+m only.
    CrossRatio,
}

impl std::fmt::Display for Rule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Rule::LambdaDistinct => "lambda-distinct",
            Rule::MuDistinct => "mu-distinct",
            Rule::LambdaRecurrence => "lambda-recurrence",
            Rule::MuRecurrence => "mu-recurrence",
            Rule::NoAffineRelation => "no-affine-relation",
            Rule::CrossRatio => "cross-ratio",
        };
        f.write_str(s)
    }
}

/// A single violated admissibility rule with the indices that witnessed it.
#[derive(Debug, Clone)]
pub struct Violation {
    pub rule: Rule,
    /// Indices involved (e.g. the pair (n, m) or the recurrence midpoint).
    pub indices: Vec<usize>,
    pub detail: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} at {:?}: {}", self.rule, self.indices, self.detail)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomial degree {degree} exceeds the spectrum budget N = {max}")]
    DegreeOverflow { degree: usize, max: usize },

    #[error("degenerate seed: {0}")]
    DegenerateSeed(String),

    #[error("degenerate extension: lambda_{0} equals lambda_{1}")]
    DegenerateExtension(usize, usize),

    #[error("degenerate spectrum: {0}")]
    SpectrumDegenerate(String),

    #[error("rescale factor kappa must be nonzero")]
    ZeroKappa,

    #[error("inconsistent spectrum: moment splits disagree at n = {0}")]
    InconsistentSpectrum(usize),

    #[error("degenerate moment functional: Hankel determinant Delta_{0} vanishes")]
    DegenerateFunctional(usize),

    #[error("polynomials fail the three-term recurrence at degree {0}")]
    NotOrthogonal(usize),

    #[error("spectrum is not admissible: {}", format_violations(.0))]
    NotAdmissible(Vec<Violation>),

    #[error("invalid family parameters: {0}")]
    InvalidParams(String),

    #[error("no closed-form weight is available for {0}")]
    NoKnownWeight(String),

    #[error("not umbral classical: {0}")]
    NotUmbralClassical(String),

    #[error("dual identity fit failed: {0}")]
    FitFailed(String),

    #[error("operator is not two-diagonal: acting on x^{n} leaves a stray coefficient at degree {stray_degree}")]
    NotTwoDiagonal { n: usize, stray_degree: usize },

    #[error("non-polynomial output: {0}")]
    NonPolynomialOutput(String),

    #[error("value not representable in exact arithmetic: {0}")]
    UnrepresentableExact(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

fn format_violations(violations: &[Violation]) -> String {
    if violations.is_empty() {
        return "unspecified".into();
    }
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
