use thiserror::Error;

use crate::cube::{CubeSize, MetricName};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported metric: {size} {name}")]
    UnsupportedMetric { size: CubeSize, name: MetricName },

    #[error("move {mv} is defined for the {expected} cube but the state is a {found} cube")]
    CubeSizeMismatch {
        mv: String,
        expected: CubeSize,
        found: CubeSize,
    },

    #[error("graph too large: {required} slots exceed the budget of {budget}")]
    GraphTooLarge { required: u128, budget: u128 },

    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),

    #[error("not a k-regular symmetric distance array: {0}")]
    NotRegularDistanceArray(String),

    #[error("odd-girth graph unsupported (girth {0})")]
    OddGirth(u32),

    #[error("girth not found within depth budget {0}")]
    GirthNotFound(u32),

    #[error("η = {eta} exceeds shell size {shell} (r_max would be non-positive)")]
    EtaExceedsShell { eta: u64, shell: u128 },

    #[error("order {n} lies within the Moore shell (n0 = {n0})")]
    OrderWithinMooreShell { n: String, n0: String },

    #[error("order {n} exceeds every n_max: with r_max = {r_max} < 1 no finite diameter admits it")]
    OrderBeyondGrowthLimit { n: String, r_max: String },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unsupported graph: {0}")]
    UnsupportedGraph(String),
}
