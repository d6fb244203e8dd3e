use thiserror::Error;

/// Errors raised by series arithmetic, enumeration and the oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A coefficient was requested at or beyond the truncation order.
    #[error("coefficient of q^{exponent} unknown: series is truncated at O(q^{order})")]
    Truncated { exponent: i64, order: i64 },

    /// An argument is outside the domain of the operation.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Parameters violate the hypotheses under which an identity is claimed.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    /// A partition failed a precondition (not a member, malformed parts, ...).
    #[error("invalid partition: {0}")]
    Partition(String),

    /// A search ran out of table room or node budget before it could finish.
    #[error("resource limit: {0}")]
    Resource(String),

    /// No member exists within the provable search bound.
    #[error("empty set: {0}")]
    Empty(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Node budget for the exhaustive searches.
///
/// Every DFS step charges one unit; running out is reported as
/// [`Error::Resource`], never as a short count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
}

impl Budget {
    pub const DEFAULT_NODES: u64 = 200_000_000;

    pub fn nodes(max_nodes: u64) -> Self {
        Budget { max_nodes }
    }

    pub fn unlimited() -> Self {
        Budget {
            max_nodes: u64::MAX,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: Self::DEFAULT_NODES,
        }
    }
}

/// Running node counter charged against a [`Budget`].
#[derive(Debug)]
pub(crate) struct Meter {
    used: u64,
    limit: u64,
    what: &'static str,
}

impl Meter {
    pub(crate) fn new(budget: Budget, what: &'static str) -> Self {
        Meter {
            used: 0,
            limit: budget.max_nodes,
            what,
        }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::Resource(format!(
                "{} exceeded node budget of {}",
                self.what, self.limit
            )));
        }
        Ok(())
    }
}
