/// Resource caps applied to tuple enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_tuples: u64,
}

impl Limits {
    pub const DEFAULT_MAX_TUPLES: u64 = 10_000_000;

    pub fn new(max_tuples: u64) -> Self {
        Limits { max_tuples }
    }

    pub fn unbounded() -> Self {
        Limits {
            max_tuples: u64::MAX,
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_tuples: Self::DEFAULT_MAX_TUPLES,
        }
    }
}
