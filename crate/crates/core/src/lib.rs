//! Jackson-type approximation of continuous fuzzy-number-valued functions
//! on `[0,1]` by finite combinations of smooth-step and trapezoidal
//! coefficient functions, with machine-checkable error bounds expressed
//! through the fuzzy modulus of continuity.
//!
//! The building blocks are compact real intervals ([`Interval`]), fuzzy
//! numbers as nested alpha-cut families ([`FuzzyNumber`]), evaluable fuzzy
//! functions ([`FuzzyFunction`]) and the approximation operators in
//! [`approximant`].

pub mod approximant;
pub mod function;
pub mod fuzzy;
pub mod interval;
pub mod report;
pub mod smoothstep;

pub use approximant::{
    build_g, build_gh_dec, build_gh_inc, build_interval_gh_dec, build_interval_gh_inc,
    build_trapezoid, default_delta, fuzzy_diameter, step_tolerance, sup_distance,
    sup_distance_interval, Approximant,
    IntervalApproximant, Method,
};
pub use function::{
    catalog, CatalogParams, FuzzyFunction, IntervalFunction, SampledFuzzyFunction, CATALOG_NAMES,
};
pub use fuzzy::{AlphaGrid, FuzzyNumber};
pub use interval::Interval;
pub use report::{ErrorReport, ModulusSource, Verdict};
pub use smoothstep::{JewettPoly, PhiFamily, PsiFamily};

/// Tolerance for nestedness checks on alpha-cut families.
pub const TOL_NEST: f64 = 1e-12;
/// Tolerance for the monotonicity tests inside the gH existence check.
pub const TOL_MONO: f64 = 1e-9;
/// Tolerance for level-wise inclusion tests.
pub const TOL_INCL: f64 = 1e-9;
/// Slack added to bound comparisons when filling reports.
pub const REPORT_TOL: f64 = 1e-9;

/// Errors shared by all modules of the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("alpha grids of the two operands differ")]
    GridMismatch,
    #[error("gH-difference does not exist for the given pair")]
    GHDifferenceUndefined,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("argument {0} outside the domain [0,1]")]
    DomainError(f64),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),
    #[error("schema error: {0}")]
    SchemaError(String),
    #[error("invariant violated: {0}")]
    InvariantError(String),
    #[error("exponent search exhausted below the configured caps")]
    SearchExhausted,
}

pub type Result<T> = std::result::Result<T, Error>;
