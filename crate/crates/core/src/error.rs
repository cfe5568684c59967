use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid digraph: {0}")]
    Validation(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    /// An exhaustive search would exceed the configured work limit.
    #[error("{what}: {required} candidates exceed the limit of {limit} (set BRANCHPAIR_LIMIT to raise it)")]
    ResourceLimit {
        what: &'static str,
        required: u128,
        limit: u64,
    },

    /// No branch of the constructive case analysis produced a valid pair.
    #[error("construction gap on {graph} for ({out_root}, {in_root}): {reason}")]
    ConstructionGap {
        graph: String,
        out_root: String,
        in_root: String,
        reason: String,
    },
}
