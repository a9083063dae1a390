use std::env;

/// Environment variable overriding [`Guard::DEFAULT`].
pub const GUARD_ENV: &str = "SCHUBERT_MULT_GUARD";

/// Upper bound on enumeration work.
///
/// For path families the work is the largest product of path counts over
/// any bijection of starts to ends; for tableaux it is the number of search
/// nodes visited.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guard(pub u64);

impl Guard {
    pub const DEFAULT: Guard = Guard(10_000_000);

    /// [`Guard::DEFAULT`] unless `SCHUBERT_MULT_GUARD` holds a valid integer.
    pub fn from_env() -> Guard {
        env::var(GUARD_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Guard)
            .unwrap_or(Guard::DEFAULT)
    }

    pub fn limit(self) -> u64 {
        self.0
    }
}

impl Default for Guard {
    fn default() -> Self {
        Guard::DEFAULT
    }
}
