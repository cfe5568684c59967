//! Work limits for the exhaustive searches.

/// Environment variable that overrides every limit with a single number.
pub const LIMIT_ENV: &str = "BRANCHPAIR_LIMIT";

const DEFAULT_LIMIT: u64 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of arc subsets tried by the brute-force connectivity oracle.
    pub max_subsets: u64,
    /// Maximum number of arc bipartitions tried by the decomposition search.
    pub max_bipartitions: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_subsets: DEFAULT_LIMIT,
            max_bipartitions: DEFAULT_LIMIT,
        }
    }
}

impl Limits {
    pub fn uniform(limit: u64) -> Self {
        Limits {
            max_subsets: limit,
            max_bipartitions: limit,
        }
    }

    /// Defaults, unless `BRANCHPAIR_LIMIT` holds a valid unsigned integer.
    pub fn from_env() -> Self {
        std::env::var(LIMIT_ENV)
            .ok()
            .and_then(|raw| raw.trim().parse::<u64>().ok())
            .map(Limits::uniform)
            .unwrap_or_default()
    }
}
