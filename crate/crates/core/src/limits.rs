use serde::{Deserialize, Serialize};

/// Scale ceilings for the brute-force parts of the crate.
///
/// Every exhaustive search checks its candidate count against one of these
/// before starting and returns [`crate::Error::ScaleExceeded`] instead of
/// running away.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Limits {
    /// Longest alcove length the enumerator will walk to.
    pub max_length: u32,
    /// Largest series truncation order.
    pub max_order: u32,
    /// Subsets / root partitions / integer partitions examined by a sweep.
    pub max_candidates: u128,
    /// Largest Lie algebra dimension for the exterior-algebra oracle.
    pub max_lie_dim: usize,
    /// Largest exterior power dimension binomial(dim g, k) the oracle builds.
    pub max_wedge_dim: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_length: 64,
            max_order: 120,
            max_candidates: 2_000_000,
            max_lie_dim: 14,
            max_wedge_dim: 3432,
        }
    }
}

impl Limits {
    /// Ceilings large enough that nothing practical is refused.
    pub fn unbounded() -> Self {
        Limits {
            max_length: u32::MAX,
            max_order: u32::MAX,
            max_candidates: u128::MAX,
            max_lie_dim: usize::MAX,
            max_wedge_dim: u128::MAX,
        }
    }

    pub(crate) fn guard(&self, what: &'static str, count: u128, ceiling: u128) -> crate::Result<()> {
        if count > ceiling {
            Err(crate::Error::ScaleExceeded {
                what,
                count,
                ceiling,
            })
        } else {
            Ok(())
        }
    }
}
